#ifndef INTLAB_LAMBDA_HPP
#define INTLAB_LAMBDA_HPP

#include "intlab/logic.hpp"
#include "intlab/model.hpp"

#include <memory>
#include <string>
#include <vector>

namespace intlab {

enum class ModalKind { Box, Dia };

/// AST of the typed modal lambda calculus. Nodes are immutable and shared.
/// The parser marks lambda-bound occurrences as Var and leaves other names as
/// Ident; resolve() classifies those against a model signature (declared
/// constants become Const, anything else a free entity variable).
class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

class Expr {
public:
    enum class Kind { Const, Var, Ident, Lam, App, Logic, Modal };

    struct Pos {
        int line;
        int column;
    };

    static ExprPtr constant(std::string name, Pos pos = Pos{1, 1});
    static ExprPtr var(std::string name, Pos pos = Pos{1, 1});
    static ExprPtr ident(std::string name, Pos pos = Pos{1, 1});
    static ExprPtr lam(std::string var, SemType ann, ExprPtr body, Pos pos = Pos{1, 1});
    static ExprPtr app(ExprPtr fn, ExprPtr arg, Pos pos = Pos{1, 1});
    static ExprPtr logic(LogicBuiltin op, std::vector<ExprPtr> args, Pos pos = Pos{1, 1});
    static ExprPtr modal(ModalKind kind, SortId sort, ExprPtr body, Pos pos = Pos{1, 1});

    Kind kind() const { return kind_; }
    const Pos& pos() const { return pos_; }

    const std::string& name() const;       // Const, Var, Ident, Lam (binder)
    const SemType& lam_ann() const;        // Lam
    const ExprPtr& body() const;           // Lam, Modal
    const ExprPtr& fn() const;             // App
    const ExprPtr& arg() const;            // App
    LogicBuiltin logic_op() const;         // Logic
    const std::vector<ExprPtr>& args() const;  // Logic
    ModalKind modal_kind() const;          // Modal
    const SortId& modal_sort() const;      // Modal

    bool equals(const Expr& other) const;

private:
    Expr(Kind kind, Pos pos) : kind_(kind), pos_(pos), sort_("_") {}

    Kind kind_;
    Pos pos_;
    std::string name_;
    std::shared_ptr<const SemType> ann_;
    ExprPtr body_;
    ExprPtr fn_;
    ExprPtr arg_;
    LogicBuiltin op_ = LogicBuiltin::Not;
    std::vector<ExprPtr> args_;
    ModalKind modal_ = ModalKind::Box;
    SortId sort_;
};

/// Parses the concrete syntax:
///   \x:T. body          lambda (unicode aliases accepted)
///   f(a) or f(a,b)      application (comma curries left to right)
///   box[w] e, dia[w] e  modal operators
///   not/and/or/xor/implies/iff with precedence
///     not > and > or > xor > implies > iff (implies right-associative)
/// Throws SyntaxError with line/column.
ExprPtr parse_expr(const std::string& text);

/// Canonical printing; parse(print(e)) reproduces e node for node.
std::string print_expr(const ExprPtr& e);

/// Classifies Ident nodes: lambda-bound names become Var (done by the
/// parser), declared constants Const, anything else a free Var.
ExprPtr resolve(const ExprPtr& e, const IntensionalModel& model);

/// An expression with a synthesized type at every node (children in
/// traversal order: Lam/Modal body, App fn then arg, Logic args).
class TypedExpr {
public:
    TypedExpr(ExprPtr expr, SemType type, std::vector<TypedExpr> children);

    const ExprPtr& expr() const { return node_->expr; }
    const SemType& type() const { return node_->type; }
    const std::vector<TypedExpr>& children() const { return node_->children; }

private:
    struct Node {
        ExprPtr expr;
        SemType type;
        std::vector<TypedExpr> children;
    };
    std::shared_ptr<const Node> node_;
};

/// Resolves names and synthesizes types against the model signature. Free
/// variables type as entities (they are supplied by assignments). Throws
/// TypeError / UnboundVariable / UnknownSort.
TypedExpr typecheck(const ExprPtr& e, const IntensionalModel& model);

/// Free variables of a resolved expression, in first-occurrence order.
std::vector<std::string> free_vars(const ExprPtr& e);

}  // namespace intlab

#endif  // INTLAB_LAMBDA_HPP

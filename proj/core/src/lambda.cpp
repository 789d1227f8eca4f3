#include "intlab/lambda.hpp"

#include "intlab/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace intlab {

ExprPtr Expr::constant(std::string name, Pos pos) {
    auto e = std::shared_ptr<Expr>(new Expr(Kind::Const, pos));
    e->name_ = std::move(name);
    return e;
}

ExprPtr Expr::var(std::string name, Pos pos) {
    auto e = std::shared_ptr<Expr>(new Expr(Kind::Var, pos));
    e->name_ = std::move(name);
    return e;
}

ExprPtr Expr::ident(std::string name, Pos pos) {
    auto e = std::shared_ptr<Expr>(new Expr(Kind::Ident, pos));
    e->name_ = std::move(name);
    return e;
}

ExprPtr Expr::lam(std::string var, SemType ann, ExprPtr body, Pos pos) {
    auto e = std::shared_ptr<Expr>(new Expr(Kind::Lam, pos));
    e->name_ = std::move(var);
    e->ann_ = std::make_shared<const SemType>(std::move(ann));
    e->body_ = std::move(body);
    return e;
}

ExprPtr Expr::app(ExprPtr fn, ExprPtr arg, Pos pos) {
    auto e = std::shared_ptr<Expr>(new Expr(Kind::App, pos));
    e->fn_ = std::move(fn);
    e->arg_ = std::move(arg);
    return e;
}

ExprPtr Expr::logic(LogicBuiltin op, std::vector<ExprPtr> args, Pos pos) {
    if (args.size() != builtin_arity(op)) {
        throw TypeMismatch(std::string("'") + builtin_name(op) + "' expects " +
                           std::to_string(builtin_arity(op)) + " arguments");
    }
    auto e = std::shared_ptr<Expr>(new Expr(Kind::Logic, pos));
    e->op_ = op;
    e->args_ = std::move(args);
    return e;
}

ExprPtr Expr::modal(ModalKind kind, SortId sort, ExprPtr body, Pos pos) {
    auto e = std::shared_ptr<Expr>(new Expr(Kind::Modal, pos));
    e->modal_ = kind;
    e->sort_ = std::move(sort);
    e->body_ = std::move(body);
    return e;
}

const std::string& Expr::name() const { return name_; }

const SemType& Expr::lam_ann() const {
    if (kind_ != Kind::Lam) throw TypeMismatch("lam_ann on non-lambda node");
    return *ann_;
}

const ExprPtr& Expr::body() const {
    if (kind_ != Kind::Lam && kind_ != Kind::Modal) throw TypeMismatch("body on leaf node");
    return body_;
}

const ExprPtr& Expr::fn() const {
    if (kind_ != Kind::App) throw TypeMismatch("fn on non-application node");
    return fn_;
}

const ExprPtr& Expr::arg() const {
    if (kind_ != Kind::App) throw TypeMismatch("arg on non-application node");
    return arg_;
}

LogicBuiltin Expr::logic_op() const {
    if (kind_ != Kind::Logic) throw TypeMismatch("logic_op on non-logic node");
    return op_;
}

const std::vector<ExprPtr>& Expr::args() const {
    if (kind_ != Kind::Logic) throw TypeMismatch("args on non-logic node");
    return args_;
}

ModalKind Expr::modal_kind() const {
    if (kind_ != Kind::Modal) throw TypeMismatch("modal_kind on non-modal node");
    return modal_;
}

const SortId& Expr::modal_sort() const {
    if (kind_ != Kind::Modal) throw TypeMismatch("modal_sort on non-modal node");
    return sort_;
}

bool Expr::equals(const Expr& other) const {
    if (kind_ != other.kind_) return false;
    switch (kind_) {
        case Kind::Const:
        case Kind::Var:
        case Kind::Ident: return name_ == other.name_;
        case Kind::Lam:
            return name_ == other.name_ && *ann_ == *other.ann_ && body_->equals(*other.body_);
        case Kind::App: return fn_->equals(*other.fn_) && arg_->equals(*other.arg_);
        case Kind::Logic: {
            if (op_ != other.op_ || args_.size() != other.args_.size()) return false;
            for (std::size_t i = 0; i < args_.size(); ++i) {
                if (!args_[i]->equals(*other.args_[i])) return false;
            }
            return true;
        }
        case Kind::Modal:
            return modal_ == other.modal_ && sort_ == other.sort_ && body_->equals(*other.body_);
    }
    return false;
}

// ---------------------------------------------------------------------------
// Lexer and parser
// ---------------------------------------------------------------------------

namespace {

struct Token {
    enum class Kind {
        Ident,
        Lambda,     // '\' or unicode lambda
        Colon,
        Dot,
        Comma,
        LParen,
        RParen,
        LBracket,
        RBracket,
        Lt,
        Gt,
        KwNot,
        KwAnd,
        KwOr,
        KwXor,
        KwImplies,
        KwIff,
        KwBox,
        KwDia,
        End,
    };
    Kind kind;
    std::string text;
    int line;
    int column;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }

    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '\n') {
                ++line_;
                col_ = 1;
                ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++col_;
                ++pos_;
            } else {
                break;
            }
        }
        const int line = line_;
        const int col = col_;
        const auto make = [&](Token::Kind k, std::string s) {
            tok_ = Token{k, std::move(s), line, col};
        };
        if (pos_ >= text_.size()) {
            make(Token::Kind::End, "");
            return;
        }

        // Unicode operators (UTF-8 multibyte).
        static const std::vector<std::pair<std::string, Token::Kind>> unicode = {
            {"λ", Token::Kind::Lambda},   // lambda
            {"¬", Token::Kind::KwNot},    // negation sign
            {"∧", Token::Kind::KwAnd},    // wedge
            {"∨", Token::Kind::KwOr},     // vee
            {"⊕", Token::Kind::KwXor},    // circled plus
            {"→", Token::Kind::KwImplies},// right arrow
            {"↔", Token::Kind::KwIff},    // left-right arrow
            {"□", Token::Kind::KwBox},    // white square
            {"◇", Token::Kind::KwDia},    // white diamond
            {"◊", Token::Kind::KwDia},    // lozenge
            {"⟨", Token::Kind::Lt},       // mathematical left angle
            {"⟩", Token::Kind::Gt},       // mathematical right angle
        };
        for (const auto& [s, k] : unicode) {
            if (text_.compare(pos_, s.size(), s) == 0) {
                pos_ += s.size();
                col_ += 1;
                make(k, s);
                return;
            }
        }

        const char c = text_[pos_];
        const auto single = [&](Token::Kind k) {
            ++pos_;
            ++col_;
            make(k, std::string(1, c));
        };
        switch (c) {
            case '\\': single(Token::Kind::Lambda); return;
            case ':': single(Token::Kind::Colon); return;
            case '.': single(Token::Kind::Dot); return;
            case ',': single(Token::Kind::Comma); return;
            case '(': single(Token::Kind::LParen); return;
            case ')': single(Token::Kind::RParen); return;
            case '[': single(Token::Kind::LBracket); return;
            case ']': single(Token::Kind::RBracket); return;
            case '<': single(Token::Kind::Lt); return;
            case '>': single(Token::Kind::Gt); return;
            default: break;
        }
        if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
            pos_ += 2;
            col_ += 2;
            make(Token::Kind::KwImplies, "->");
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
                    text_[pos_] == '\'')) {
                ++pos_;
                ++col_;
            }
            const std::string word = text_.substr(start, pos_ - start);
            static const std::map<std::string, Token::Kind> keywords = {
                {"not", Token::Kind::KwNot},         {"and", Token::Kind::KwAnd},
                {"or", Token::Kind::KwOr},           {"xor", Token::Kind::KwXor},
                {"implies", Token::Kind::KwImplies}, {"iff", Token::Kind::KwIff},
                {"box", Token::Kind::KwBox},         {"dia", Token::Kind::KwDia},
            };
            const auto it = keywords.find(word);
            make(it == keywords.end() ? Token::Kind::Ident : it->second, word);
            return;
        }
        throw SyntaxError("unexpected character '" + std::string(1, c) + "'", line, col);
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    Token tok_{Token::Kind::End, "", 1, 1};
};

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) {}

    ExprPtr parse() {
        ExprPtr e = expr();
        expect(Token::Kind::End, "end of input");
        return e;
    }

private:
    [[noreturn]] void fail(const Token& t, const std::string& msg) {
        throw SyntaxError(msg + (t.text.empty() ? "" : " (found '" + t.text + "')"), t.line,
                          t.column);
    }

    Token expect(Token::Kind k, const std::string& what) {
        if (lex_.peek().kind != k) fail(lex_.peek(), "expected " + what);
        return lex_.next();
    }

    bool accept(Token::Kind k) {
        if (lex_.peek().kind == k) {
            lex_.next();
            return true;
        }
        return false;
    }

    static Expr::Pos at(const Token& t) { return Expr::Pos{t.line, t.column}; }

    ExprPtr expr() {
        if (lex_.peek().kind == Token::Kind::Lambda) return lambda_expr();
        return iff();
    }

    ExprPtr lambda_expr() {
        const Token lam = expect(Token::Kind::Lambda, "'\\'");
        const Token var = expect(Token::Kind::Ident, "a variable name");
        expect(Token::Kind::Colon, "':'");
        const SemType ann = annotation_type();
        expect(Token::Kind::Dot, "'.'");
        bound_.push_back(var.text);
        ExprPtr body = expr();  // the body extends maximally
        bound_.pop_back();
        return Expr::lam(var.text, ann, std::move(body), at(lam));
    }

    /// Type annotations: ident | '<' type ',' type '>'.
    SemType annotation_type() {
        if (accept(Token::Kind::Lt)) {
            SemType a = annotation_type();
            expect(Token::Kind::Comma, "','");
            SemType b = annotation_type();
            expect(Token::Kind::Gt, "'>'");
            return SemType::func(std::move(a), std::move(b));
        }
        const Token id = expect(Token::Kind::Ident, "a type (e, t, a sort id, or <a,b>)");
        if (id.text == "e") return SemType::entity();
        if (id.text == "t") return SemType::truth();
        return SemType::idx(SortId(id.text));
    }

    ExprPtr iff() {
        ExprPtr e = implies();
        while (lex_.peek().kind == Token::Kind::KwIff) {
            const Token op = lex_.next();
            ExprPtr rhs = implies();
            e = Expr::logic(LogicBuiltin::Iff, {e, rhs}, at(op));
        }
        return e;
    }

    ExprPtr implies() {
        ExprPtr e = xorE();
        if (lex_.peek().kind == Token::Kind::KwImplies) {
            const Token op = lex_.next();
            ExprPtr rhs = implies();  // right-associative
            return Expr::logic(LogicBuiltin::Implies, {e, rhs}, at(op));
        }
        return e;
    }

    ExprPtr xorE() {
        ExprPtr e = orE();
        while (lex_.peek().kind == Token::Kind::KwXor) {
            const Token op = lex_.next();
            e = Expr::logic(LogicBuiltin::Xor, {e, orE()}, at(op));
        }
        return e;
    }

    ExprPtr orE() {
        ExprPtr e = andE();
        while (lex_.peek().kind == Token::Kind::KwOr) {
            const Token op = lex_.next();
            e = Expr::logic(LogicBuiltin::Or, {e, andE()}, at(op));
        }
        return e;
    }

    ExprPtr andE() {
        ExprPtr e = unary();
        while (lex_.peek().kind == Token::Kind::KwAnd) {
            const Token op = lex_.next();
            e = Expr::logic(LogicBuiltin::And, {e, unary()}, at(op));
        }
        return e;
    }

    ExprPtr unary() {
        const Token& t = lex_.peek();
        if (t.kind == Token::Kind::KwNot) {
            const Token op = lex_.next();
            return Expr::logic(LogicBuiltin::Not, {unary()}, at(op));
        }
        if (t.kind == Token::Kind::KwBox || t.kind == Token::Kind::KwDia) {
            const Token op = lex_.next();
            expect(Token::Kind::LBracket, "'['");
            const Token sort = expect(Token::Kind::Ident, "a sort id");
            expect(Token::Kind::RBracket, "']'");
            ExprPtr body = unary();
            return Expr::modal(op.kind == Token::Kind::KwBox ? ModalKind::Box : ModalKind::Dia,
                               SortId(sort.text), std::move(body), at(op));
        }
        if (t.kind == Token::Kind::Lambda) {
            return lambda_expr();
        }
        return postfix();
    }

    ExprPtr postfix() {
        ExprPtr e = atom();
        while (lex_.peek().kind == Token::Kind::LParen) {
            const Token open = lex_.next();
            ExprPtr a = expr();
            e = Expr::app(std::move(e), std::move(a), at(open));
            while (accept(Token::Kind::Comma)) {
                ExprPtr more = expr();
                e = Expr::app(std::move(e), std::move(more), at(open));
            }
            expect(Token::Kind::RParen, "')'");
        }
        return e;
    }

    ExprPtr atom() {
        const Token& t = lex_.peek();
        if (t.kind == Token::Kind::LParen) {
            lex_.next();
            ExprPtr e = expr();
            expect(Token::Kind::RParen, "')'");
            return e;
        }
        if (t.kind == Token::Kind::Ident) {
            const Token id = lex_.next();
            if (std::find(bound_.begin(), bound_.end(), id.text) != bound_.end()) {
                return Expr::var(id.text, at(id));
            }
            return Expr::ident(id.text, at(id));
        }
        fail(lex_.peek(), "expected an expression");
    }

    Lexer lex_;
    std::vector<std::string> bound_;
};

int precedence(const Expr& e) {
    switch (e.kind()) {
        case Expr::Kind::Lam: return 0;
        case Expr::Kind::Logic:
            switch (e.logic_op()) {
                case LogicBuiltin::Iff: return 1;
                case LogicBuiltin::Implies: return 2;
                case LogicBuiltin::Xor: return 3;
                case LogicBuiltin::Or: return 4;
                case LogicBuiltin::And: return 5;
                case LogicBuiltin::Not: return 6;
            }
            return 6;
        case Expr::Kind::Modal: return 6;
        default: return 7;  // atoms and applications
    }
}

std::string print_prec(const ExprPtr& e, int min_prec);

std::string paren_if(const ExprPtr& e, int min_prec) {
    const int p = precedence(*e);
    const std::string s = print_prec(e, 0);
    return p < min_prec ? "(" + s + ")" : s;
}

std::string print_prec(const ExprPtr& e, int min_prec) {
    (void)min_prec;
    switch (e->kind()) {
        case Expr::Kind::Const:
        case Expr::Kind::Var:
        case Expr::Kind::Ident: return e->name();
        case Expr::Kind::Lam:
            return "\\" + e->name() + ":" + e->lam_ann().to_string() + ". " +
                   print_prec(e->body(), 0);
        case Expr::Kind::App: {
            // Function position must be atomic-or-application.
            return paren_if(e->fn(), 7) + "(" + print_prec(e->arg(), 0) + ")";
        }
        case Expr::Kind::Logic: {
            const auto op = e->logic_op();
            const int p = precedence(*e);
            if (op == LogicBuiltin::Not) {
                return std::string("not ") + paren_if(e->args()[0], p);
            }
            // Left operand at this level, right operand one tighter (or equal
            // for the right-associative implies).
            const int rhs_min = op == LogicBuiltin::Implies ? p : p + 1;
            return paren_if(e->args()[0], op == LogicBuiltin::Implies ? p + 1 : p) + " " +
                   builtin_name(op) + " " + paren_if(e->args()[1], rhs_min);
        }
        case Expr::Kind::Modal: {
            const char* kw = e->modal_kind() == ModalKind::Box ? "box" : "dia";
            return std::string(kw) + "[" + e->modal_sort().label() + "] " +
                   paren_if(e->body(), precedence(*e));
        }
    }
    return {};
}

}  // namespace

ExprPtr parse_expr(const std::string& text) { return Parser(text).parse(); }

std::string print_expr(const ExprPtr& e) { return print_prec(e, 0); }

ExprPtr resolve(const ExprPtr& e, const IntensionalModel& model) {
    switch (e->kind()) {
        case Expr::Kind::Const:
        case Expr::Kind::Var: return e;
        case Expr::Kind::Ident:
            if (model.constants.count(e->name())) return Expr::constant(e->name(), e->pos());
            return Expr::var(e->name(), e->pos());
        case Expr::Kind::Lam:
            return Expr::lam(e->name(), e->lam_ann(), resolve(e->body(), model), e->pos());
        case Expr::Kind::App:
            return Expr::app(resolve(e->fn(), model), resolve(e->arg(), model), e->pos());
        case Expr::Kind::Logic: {
            std::vector<ExprPtr> args;
            for (const auto& a : e->args()) args.push_back(resolve(a, model));
            return Expr::logic(e->logic_op(), std::move(args), e->pos());
        }
        case Expr::Kind::Modal:
            return Expr::modal(e->modal_kind(), e->modal_sort(), resolve(e->body(), model),
                               e->pos());
    }
    return e;
}

TypedExpr::TypedExpr(ExprPtr expr, SemType type, std::vector<TypedExpr> children)
    : node_(std::make_shared<const Node>(
          Node{std::move(expr), std::move(type), std::move(children)})) {}

namespace {

void check_sorts_declared(const SemType& t, const IntensionalModel& model, const Expr::Pos& pos) {
    switch (t.kind()) {
        case SemType::Kind::Entity:
        case SemType::Kind::Truth: return;
        case SemType::Kind::Idx:
            if (!model.has_sort(t.sort())) {
                throw UnknownSort("undeclared sort '" + t.sort().label() + "' at " +
                                  std::to_string(pos.line) + ":" + std::to_string(pos.column));
            }
            return;
        case SemType::Kind::Func:
            check_sorts_declared(t.arg(), model, pos);
            check_sorts_declared(t.result(), model, pos);
            return;
    }
}

TypedExpr typecheck_rec(const ExprPtr& e, const IntensionalModel& model,
                        std::map<std::string, SemType>& env) {
    const auto where = [&] {
        return " at " + std::to_string(e->pos().line) + ":" + std::to_string(e->pos().column);
    };
    switch (e->kind()) {
        case Expr::Kind::Ident:
            throw UnboundVariable("unresolved identifier '" + e->name() + "'" + where());
        case Expr::Kind::Const: {
            const Constant& c = model.constant(e->name());
            return TypedExpr(e, c.type, {});
        }
        case Expr::Kind::Var: {
            const auto it = env.find(e->name());
            // Free variables are entity-typed: assignments supply entities.
            return TypedExpr(e, it == env.end() ? SemType::entity() : it->second, {});
        }
        case Expr::Kind::Lam: {
            check_sorts_declared(e->lam_ann(), model, e->pos());
            const auto prev = env.find(e->name());
            std::optional<SemType> saved;
            if (prev != env.end()) saved = prev->second;
            env.insert_or_assign(e->name(), e->lam_ann());
            TypedExpr body = typecheck_rec(e->body(), model, env);
            if (saved) {
                env.insert_or_assign(e->name(), *saved);
            } else {
                env.erase(e->name());
            }
            SemType t = SemType::func(e->lam_ann(), body.type());
            return TypedExpr(e, std::move(t), {std::move(body)});
        }
        case Expr::Kind::App: {
            TypedExpr fn = typecheck_rec(e->fn(), model, env);
            TypedExpr arg = typecheck_rec(e->arg(), model, env);
            if (!fn.type().is_func()) {
                throw TypeError("applying a non-function" + where(), "<_,_>",
                                fn.type().to_string());
            }
            if (fn.type().arg() != arg.type()) {
                throw TypeError("argument type mismatch" + where(), fn.type().arg().to_string(),
                                arg.type().to_string());
            }
            SemType t = fn.type().result();
            return TypedExpr(e, std::move(t), {std::move(fn), std::move(arg)});
        }
        case Expr::Kind::Logic: {
            std::vector<TypedExpr> children;
            for (const auto& a : e->args()) {
                TypedExpr ta = typecheck_rec(a, model, env);
                if (!ta.type().is_truth()) {
                    throw TypeError(std::string("'") + builtin_name(e->logic_op()) +
                                        "' needs truth-valued arguments" + where(),
                                    "t", ta.type().to_string());
                }
                children.push_back(std::move(ta));
            }
            return TypedExpr(e, SemType::truth(), std::move(children));
        }
        case Expr::Kind::Modal: {
            if (!model.has_sort(e->modal_sort())) {
                throw UnknownSort("undeclared sort '" + e->modal_sort().label() + "'" + where());
            }
            TypedExpr body = typecheck_rec(e->body(), model, env);
            if (!body.type().is_truth()) {
                throw TypeError("modal operators need a truth-valued body" + where(), "t",
                                body.type().to_string());
            }
            return TypedExpr(e, SemType::truth(), {std::move(body)});
        }
    }
    throw TypeError("unreachable" + where(), "?", "?");
}

void free_vars_rec(const ExprPtr& e, std::set<std::string>& bound,
                   std::vector<std::string>& out) {
    switch (e->kind()) {
        case Expr::Kind::Const: return;
        case Expr::Kind::Ident:
        case Expr::Kind::Var:
            if (!bound.count(e->name()) &&
                std::find(out.begin(), out.end(), e->name()) == out.end()) {
                out.push_back(e->name());
            }
            return;
        case Expr::Kind::Lam: {
            const bool inserted = bound.insert(e->name()).second;
            free_vars_rec(e->body(), bound, out);
            if (inserted) bound.erase(e->name());
            return;
        }
        case Expr::Kind::App:
            free_vars_rec(e->fn(), bound, out);
            free_vars_rec(e->arg(), bound, out);
            return;
        case Expr::Kind::Logic:
            for (const auto& a : e->args()) free_vars_rec(a, bound, out);
            return;
        case Expr::Kind::Modal: free_vars_rec(e->body(), bound, out); return;
    }
}

}  // namespace

TypedExpr typecheck(const ExprPtr& e, const IntensionalModel& model) {
    std::map<std::string, SemType> env;
    return typecheck_rec(resolve(e, model), model, env);
}

std::vector<std::string> free_vars(const ExprPtr& e) {
    std::set<std::string> bound;
    std::vector<std::string> out;
    free_vars_rec(e, bound, out);
    return out;
}

}  // namespace intlab

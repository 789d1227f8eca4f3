#ifndef INTLAB_MODEL_HPP
#define INTLAB_MODEL_HPP

#include "intlab/frame.hpp"
#include "intlab/value.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace intlab {

/// A constant's intension: a total table from compound indices to values.
/// Keys are index-label tuples in sort-declaration order.
struct Intension {
    std::map<std::vector<std::string>, DomainValue> table;
};

struct Constant {
    std::string name;
    SemType type;  // extensional type; the intension maps S into D_type
    Intension intension;
};

/// The set-theoretic model: sorts with frames, an entity domain, and an
/// interpretation assigning each constant a total intension over the compound
/// index space. Immutable after construction by convention; all queries are
/// const and thread-safe.
struct IntensionalModel {
    std::vector<SortId> sorts;  // declaration order
    std::map<SortId, SortFrame> frames;
    std::vector<std::string> entities;  // declaration order
    std::map<std::string, Constant> constants;
    std::size_t enumeration_cap = 1'000'000;

    bool has_sort(const SortId& sort) const;
    const SortFrame& frame(const SortId& sort) const;
    /// Throws UnknownSort / ModelError if absent or not finite.
    const FiniteFrame& finite_frame(const SortId& sort) const;
    bool all_sorts_finite() const;

    const Constant& constant(const std::string& name) const;
    /// I(c)(s): the extension of a constant at a compound index.
    const DomainValue& intension_at(const std::string& name, const DomainValue& compound) const;
    /// The label tuple of a compound in declaration order.
    std::vector<std::string> compound_key(const DomainValue& compound) const;
    DomainValue compound_of(const std::vector<std::string>& labels) const;

    /// Checks structural well-formedness: unique sorts/entities, frames for
    /// every sort, and every constant's intension total and type-correct.
    /// Throws ModelError on the first failure.
    void validate() const;
};

/// Number of elements of D_type, exactly. Throws CombinatorialBlowup if the
/// domain is not finitely enumerable (countable/continuous sorts).
BigInt domain_size(const SemType& type, const IntensionalModel& model);

/// All of D_type in canonical order: entities and index labels in declaration
/// order, truth values as [1, 0], and function tables enumerated
/// lexicographically over the argument ordering (first argument most
/// significant). Deterministic. Throws CombinatorialBlowup past the model cap.
std::vector<DomainValue> enumerate_domain(const SemType& type, const IntensionalModel& model);

/// The compound index space S as an ordered list, Cartesian product in
/// sort-declaration-major order. A model with no sorts yields the single
/// empty compound (the extensional degenerate case).
std::vector<DomainValue> compound_index_space(const IntensionalModel& model);

/// A (partial) assignment of values to variables. The published contract
/// covers entity-typed variables; the evaluator binds other types through
/// bind() when interpreting lambda abstraction.
class Assignment {
public:
    Assignment() = default;

    std::optional<DomainValue> lookup(const std::string& var) const;
    /// Throws UnboundVariable.
    const DomainValue& at(const std::string& var) const;
    /// Value-semantic update: returns a copy with var bound to v.
    Assignment bind(const std::string& var, DomainValue v) const;

    const std::map<std::string, DomainValue>& bindings() const { return bindings_; }

    friend bool operator==(const Assignment& a, const Assignment& b);
    friend bool operator<(const Assignment& a, const Assignment& b);

private:
    std::map<std::string, DomainValue> bindings_;
};

/// The variant assignment g[x -> k]. k must be an entity (TypeMismatch
/// otherwise); g itself is unchanged.
Assignment variant(const Assignment& g, const std::string& var, const DomainValue& k);

}  // namespace intlab

#endif  // INTLAB_MODEL_HPP

#ifndef INTLAB_VALUE_HPP
#define INTLAB_VALUE_HPP

#include "intlab/types.hpp"

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace intlab {

struct FuncEntry;

/// An element of some semantic domain: an entity, a truth value, an index of
/// a sort, a compound index (one index per sort), or a total function table.
///
/// Values carry a model-free canonical order so that tables, vector entries
/// and serializations are deterministic. Truth values order 1 before 0,
/// matching the convention that the truth basis lists b1 first.
class DomainValue {
public:
    enum class Kind { Ent, Tru, Idx, Compound, Func };

    static DomainValue ent(std::string label);
    static DomainValue tru(int bit);
    static DomainValue idx(SortId sort, std::string label);
    /// One index label per sort; stored sorted by sort id.
    static DomainValue compound(std::vector<std::pair<SortId, std::string>> assign);
    /// Total function table; entries re-sorted by argument. All keys must
    /// have type `arg`, all results type `res`.
    static DomainValue func(SemType arg, SemType res, std::vector<FuncEntry> entries);

    Kind kind() const { return static_cast<Kind>(v_.index()); }
    bool is_ent() const { return kind() == Kind::Ent; }
    bool is_tru() const { return kind() == Kind::Tru; }
    bool is_idx() const { return kind() == Kind::Idx; }
    bool is_compound() const { return kind() == Kind::Compound; }
    bool is_func() const { return kind() == Kind::Func; }

    const std::string& ent_label() const;
    int tru_bit() const;
    const SortId& idx_sort() const;
    const std::string& idx_label() const;
    /// Sorted by sort id.
    const std::vector<std::pair<SortId, std::string>>& compound_assign() const;
    /// Label of the given sort inside a compound; throws UnknownSort.
    const std::string& compound_at(const SortId& sort) const;
    /// Copy of this compound with one coordinate replaced.
    DomainValue compound_with(const SortId& sort, const std::string& label) const;

    SemType func_arg_type() const;
    SemType func_res_type() const;
    const std::vector<FuncEntry>& func_entries() const;
    /// Exact table lookup; throws ModelError if the key is absent.
    const DomainValue& func_apply(const DomainValue& arg) const;

    /// The semantic type of this value. Compound indices live in the compound
    /// index space, which is not a SemType; throws TypeMismatch for them.
    SemType type() const;

    /// Canonical order: by kind, then structurally (Tru: 1 < 0).
    int compare(const DomainValue& other) const;

    std::string to_string() const;

    friend bool operator==(const DomainValue& a, const DomainValue& b) { return a.compare(b) == 0; }
    friend bool operator!=(const DomainValue& a, const DomainValue& b) { return a.compare(b) != 0; }
    friend bool operator<(const DomainValue& a, const DomainValue& b) { return a.compare(b) < 0; }

private:
    struct EntData {
        std::string label;
    };
    struct TruData {
        int bit;
    };
    struct IdxData {
        SortId sort;
        std::string label;
    };
    struct CompoundData {
        std::vector<std::pair<SortId, std::string>> assign;  // sorted by sort
    };
    struct FuncData;

    using Repr = std::variant<EntData, TruData, IdxData, CompoundData, std::shared_ptr<const FuncData>>;

    explicit DomainValue(Repr v) : v_(std::move(v)) {}
    const FuncData& func_data() const;

    Repr v_;
};

struct FuncEntry {
    DomainValue arg;
    DomainValue result;
};

struct DomainValue::FuncData {
    SemType arg_type;
    SemType res_type;
    std::vector<FuncEntry> entries;  // sorted by arg
};

/// True iff the value is an element of D_type (structurally; domain
/// membership of labels is the model's concern).
bool value_conforms(const DomainValue& v, const SemType& type);

}  // namespace intlab

#endif  // INTLAB_VALUE_HPP

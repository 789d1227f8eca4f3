#include "intlab/value.hpp"

#include "intlab/errors.hpp"

#include <algorithm>

namespace intlab {

DomainValue DomainValue::ent(std::string label) {
    if (label.empty()) throw ModelError("entity label must be nonempty");
    return DomainValue(Repr{EntData{std::move(label)}});
}

DomainValue DomainValue::tru(int bit) {
    if (bit != 0 && bit != 1) throw TypeMismatch("truth value must be 0 or 1");
    return DomainValue(Repr{TruData{bit}});
}

DomainValue DomainValue::idx(SortId sort, std::string label) {
    if (label.empty()) throw ModelError("index label must be nonempty");
    return DomainValue(Repr{IdxData{std::move(sort), std::move(label)}});
}

DomainValue DomainValue::compound(std::vector<std::pair<SortId, std::string>> assign) {
    std::sort(assign.begin(), assign.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < assign.size(); ++i) {
        if (assign[i - 1].first == assign[i].first) {
            throw ModelError("compound index assigns sort '" + assign[i].first.label() + "' twice");
        }
    }
    return DomainValue(Repr{CompoundData{std::move(assign)}});
}

DomainValue DomainValue::func(SemType arg, SemType res, std::vector<FuncEntry> entries) {
    for (const auto& e : entries) {
        if (!value_conforms(e.arg, arg)) {
            throw TypeMismatch("function table key " + e.arg.to_string() + " is not of type " +
                               arg.to_string());
        }
        if (!value_conforms(e.result, res)) {
            throw TypeMismatch("function table value " + e.result.to_string() +
                               " is not of type " + res.to_string());
        }
    }
    std::sort(entries.begin(), entries.end(),
              [](const FuncEntry& a, const FuncEntry& b) { return a.arg < b.arg; });
    for (std::size_t i = 1; i < entries.size(); ++i) {
        if (entries[i - 1].arg == entries[i].arg) {
            throw ModelError("function table defines argument " + entries[i].arg.to_string() +
                             " twice");
        }
    }
    auto data = std::make_shared<FuncData>(
        FuncData{std::move(arg), std::move(res), std::move(entries)});
    return DomainValue(Repr{std::shared_ptr<const FuncData>(std::move(data))});
}

const std::string& DomainValue::ent_label() const {
    if (!is_ent()) throw TypeMismatch("not an entity: " + to_string());
    return std::get<EntData>(v_).label;
}

int DomainValue::tru_bit() const {
    if (!is_tru()) throw TypeMismatch("not a truth value: " + to_string());
    return std::get<TruData>(v_).bit;
}

const SortId& DomainValue::idx_sort() const {
    if (!is_idx()) throw TypeMismatch("not an index: " + to_string());
    return std::get<IdxData>(v_).sort;
}

const std::string& DomainValue::idx_label() const {
    if (!is_idx()) throw TypeMismatch("not an index: " + to_string());
    return std::get<IdxData>(v_).label;
}

const std::vector<std::pair<SortId, std::string>>& DomainValue::compound_assign() const {
    if (!is_compound()) throw TypeMismatch("not a compound index: " + to_string());
    return std::get<CompoundData>(v_).assign;
}

const std::string& DomainValue::compound_at(const SortId& sort) const {
    for (const auto& [sid, label] : compound_assign()) {
        if (sid == sort) return label;
    }
    throw UnknownSort("compound index has no sort '" + sort.label() + "'");
}

DomainValue DomainValue::compound_with(const SortId& sort, const std::string& label) const {
    auto assign = compound_assign();
    for (auto& [sid, lbl] : assign) {
        if (sid == sort) {
            lbl = label;
            return DomainValue::compound(std::move(assign));
        }
    }
    throw UnknownSort("compound index has no sort '" + sort.label() + "'");
}

const DomainValue::FuncData& DomainValue::func_data() const {
    if (!is_func()) throw TypeMismatch("not a function value: " + to_string());
    return *std::get<std::shared_ptr<const FuncData>>(v_);
}

SemType DomainValue::func_arg_type() const { return func_data().arg_type; }
SemType DomainValue::func_res_type() const { return func_data().res_type; }

const std::vector<FuncEntry>& DomainValue::func_entries() const { return func_data().entries; }

const DomainValue& DomainValue::func_apply(const DomainValue& arg) const {
    const auto& entries = func_data().entries;
    auto it = std::lower_bound(entries.begin(), entries.end(), arg,
                               [](const FuncEntry& e, const DomainValue& a) { return e.arg < a; });
    if (it == entries.end() || it->arg != arg) {
        throw ModelError("function table has no entry for " + arg.to_string());
    }
    return it->result;
}

SemType DomainValue::type() const {
    switch (kind()) {
        case Kind::Ent: return SemType::entity();
        case Kind::Tru: return SemType::truth();
        case Kind::Idx: return SemType::idx(idx_sort());
        case Kind::Func: return SemType::func(func_arg_type(), func_res_type());
        case Kind::Compound:
            throw TypeMismatch("compound indices live in the compound index space, not a SemType");
    }
    throw TypeMismatch("unreachable");
}

namespace {

template <typename T>
int cmp3(const T& a, const T& b) {
    if (a < b) return -1;
    if (b < a) return 1;
    return 0;
}

}  // namespace

int DomainValue::compare(const DomainValue& other) const {
    const int ka = static_cast<int>(kind());
    const int kb = static_cast<int>(other.kind());
    if (ka != kb) return ka < kb ? -1 : 1;
    switch (kind()) {
        case Kind::Ent: return cmp3(ent_label(), other.ent_label());
        case Kind::Tru:
            // 1 sorts before 0.
            return cmp3(1 - tru_bit(), 1 - other.tru_bit());
        case Kind::Idx: {
            const int c = cmp3(idx_sort().label(), other.idx_sort().label());
            if (c != 0) return c;
            return cmp3(idx_label(), other.idx_label());
        }
        case Kind::Compound: {
            const auto& a = compound_assign();
            const auto& b = other.compound_assign();
            if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
            for (std::size_t i = 0; i < a.size(); ++i) {
                const int c1 = cmp3(a[i].first.label(), b[i].first.label());
                if (c1 != 0) return c1;
                const int c2 = cmp3(a[i].second, b[i].second);
                if (c2 != 0) return c2;
            }
            return 0;
        }
        case Kind::Func: {
            const auto& fa = func_data();
            const auto& fb = other.func_data();
            if (fa.arg_type != fb.arg_type) return fa.arg_type < fb.arg_type ? -1 : 1;
            if (fa.res_type != fb.res_type) return fa.res_type < fb.res_type ? -1 : 1;
            if (fa.entries.size() != fb.entries.size()) {
                return fa.entries.size() < fb.entries.size() ? -1 : 1;
            }
            for (std::size_t i = 0; i < fa.entries.size(); ++i) {
                int c = fa.entries[i].arg.compare(fb.entries[i].arg);
                if (c != 0) return c;
                c = fa.entries[i].result.compare(fb.entries[i].result);
                if (c != 0) return c;
            }
            return 0;
        }
    }
    return 0;
}

std::string DomainValue::to_string() const {
    switch (kind()) {
        case Kind::Ent: return ent_label();
        case Kind::Tru: return tru_bit() ? "1" : "0";
        case Kind::Idx: return idx_label();
        case Kind::Compound: {
            std::string out = "(";
            bool first = true;
            for (const auto& [sort, label] : compound_assign()) {
                if (!first) out += ",";
                out += sort.label() + "=" + label;
                first = false;
            }
            return out + ")";
        }
        case Kind::Func: {
            std::string out = "{";
            bool first = true;
            for (const auto& e : func_entries()) {
                if (!first) out += ",";
                out += e.arg.to_string() + "=>" + e.result.to_string();
                first = false;
            }
            return out + "}";
        }
    }
    return {};
}

bool value_conforms(const DomainValue& v, const SemType& type) {
    switch (v.kind()) {
        case DomainValue::Kind::Ent: return type.is_entity();
        case DomainValue::Kind::Tru: return type.is_truth();
        case DomainValue::Kind::Idx: return type.is_idx() && type.sort() == v.idx_sort();
        case DomainValue::Kind::Compound: return false;
        case DomainValue::Kind::Func:
            return type.is_func() && type.arg() == v.func_arg_type() &&
                   type.result() == v.func_res_type();
    }
    return false;
}

}  // namespace intlab

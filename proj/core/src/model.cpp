#include "intlab/model.hpp"

#include "intlab/errors.hpp"

#include <algorithm>
#include <set>

namespace intlab {

bool IntensionalModel::has_sort(const SortId& sort) const {
    return std::find(sorts.begin(), sorts.end(), sort) != sorts.end();
}

const SortFrame& IntensionalModel::frame(const SortId& sort) const {
    const auto it = frames.find(sort);
    if (it == frames.end()) throw UnknownSort("no frame for sort '" + sort.label() + "'");
    return it->second;
}

const FiniteFrame& IntensionalModel::finite_frame(const SortId& sort) const {
    const SortFrame& f = frame(sort);
    const auto* ff = std::get_if<FiniteFrame>(&f);
    if (!ff) throw ModelError("sort '" + sort.label() + "' does not have a finite frame");
    return *ff;
}

bool IntensionalModel::all_sorts_finite() const {
    for (const auto& s : sorts) {
        if (!std::holds_alternative<FiniteFrame>(frame(s))) return false;
    }
    return true;
}

const Constant& IntensionalModel::constant(const std::string& name) const {
    const auto it = constants.find(name);
    if (it == constants.end()) throw ModelError("undeclared constant '" + name + "'");
    return it->second;
}

std::vector<std::string> IntensionalModel::compound_key(const DomainValue& compound) const {
    std::vector<std::string> key;
    key.reserve(sorts.size());
    for (const auto& s : sorts) key.push_back(compound.compound_at(s));
    return key;
}

DomainValue IntensionalModel::compound_of(const std::vector<std::string>& labels) const {
    if (labels.size() != sorts.size()) {
        throw ModelError("compound index tuple has wrong arity");
    }
    std::vector<std::pair<SortId, std::string>> assign;
    for (std::size_t i = 0; i < sorts.size(); ++i) assign.emplace_back(sorts[i], labels[i]);
    return DomainValue::compound(std::move(assign));
}

const DomainValue& IntensionalModel::intension_at(const std::string& name,
                                                  const DomainValue& compound) const {
    const Constant& c = constant(name);
    const auto it = c.intension.table.find(compound_key(compound));
    if (it == c.intension.table.end()) {
        throw ModelError("intension of '" + name + "' is undefined at " + compound.to_string() +
                         " (model corruption: intensions must be total)");
    }
    return it->second;
}

namespace {

/// Checks every label occurring in a value against the model's domains.
void check_value_in_domains(const DomainValue& v, const IntensionalModel& m,
                            const std::string& where) {
    switch (v.kind()) {
        case DomainValue::Kind::Ent:
            if (std::find(m.entities.begin(), m.entities.end(), v.ent_label()) ==
                m.entities.end()) {
                throw ModelError(where + ": unknown entity '" + v.ent_label() + "'");
            }
            return;
        case DomainValue::Kind::Tru: return;
        case DomainValue::Kind::Idx: {
            const FiniteFrame& f = m.finite_frame(v.idx_sort());
            f.world_pos(v.idx_label());  // throws if unknown
            return;
        }
        case DomainValue::Kind::Compound:
            for (const auto& [sort, label] : v.compound_assign()) {
                m.finite_frame(sort).world_pos(label);
            }
            return;
        case DomainValue::Kind::Func: {
            // Table must be total over the argument domain.
            const auto dom = enumerate_domain(v.func_arg_type(), m);
            if (dom.size() != v.func_entries().size()) {
                throw ModelError(where + ": function table is not total over " +
                                 v.func_arg_type().to_string());
            }
            std::set<DomainValue> keys;
            for (const auto& e : v.func_entries()) keys.insert(e.arg);
            for (const auto& a : dom) {
                if (!keys.count(a)) {
                    throw ModelError(where + ": function table missing argument " + a.to_string());
                }
            }
            for (const auto& e : v.func_entries()) {
                check_value_in_domains(e.arg, m, where);
                check_value_in_domains(e.result, m, where);
            }
            return;
        }
    }
}

void check_type_sorts_declared(const SemType& t, const IntensionalModel& m,
                               const std::string& where) {
    switch (t.kind()) {
        case SemType::Kind::Entity:
        case SemType::Kind::Truth: return;
        case SemType::Kind::Idx:
            if (!m.has_sort(t.sort())) {
                throw ModelError(where + ": type mentions undeclared sort '" + t.sort().label() +
                                 "'");
            }
            return;
        case SemType::Kind::Func:
            check_type_sorts_declared(t.arg(), m, where);
            check_type_sorts_declared(t.result(), m, where);
            return;
    }
}

}  // namespace

void IntensionalModel::validate() const {
    std::set<std::string> sort_labels;
    for (const auto& s : sorts) {
        if (s.label() == "e" || s.label() == "t" || s.label() == "s") {
            throw ModelError("sort id '" + s.label() + "' is reserved");
        }
        if (!sort_labels.insert(s.label()).second) {
            throw ModelError("sort '" + s.label() + "' declared twice");
        }
        const SortFrame& f = frame(s);  // throws if missing
        if (frame_sort(f) != s) {
            throw ModelError("frame registered under sort '" + s.label() +
                             "' carries a different sort id");
        }
    }
    for (const auto& [sort, f] : frames) {
        if (!has_sort(sort)) {
            throw ModelError("frame for undeclared sort '" + sort.label() + "'");
        }
        (void)f;
    }
    std::set<std::string> ents;
    for (const auto& e : entities) {
        if (e.empty()) throw ModelError("empty entity label");
        if (!ents.insert(e).second) throw ModelError("entity '" + e + "' declared twice");
    }

    if (constants.empty()) return;
    if (!all_sorts_finite()) {
        throw ModelError("constants require all sorts finite (table intensions are total over S)");
    }
    const auto space = compound_index_space(*this);
    for (const auto& [name, c] : constants) {
        const std::string where = "constant '" + name + "'";
        if (name.empty()) throw ModelError("constant with empty name");
        check_type_sorts_declared(c.type, *this, where);
        if (c.intension.table.size() != space.size()) {
            throw ModelError(where + ": intension table has " +
                             std::to_string(c.intension.table.size()) + " entries, |S| = " +
                             std::to_string(space.size()));
        }
        for (const auto& s : space) {
            const auto it = c.intension.table.find(compound_key(s));
            if (it == c.intension.table.end()) {
                throw ModelError(where + ": intension undefined at " + s.to_string());
            }
            if (!value_conforms(it->second, c.type)) {
                throw ModelError(where + ": value " + it->second.to_string() + " at " +
                                 s.to_string() + " does not have type " + c.type.to_string());
            }
            check_value_in_domains(it->second, *this, where);
        }
    }
}

BigInt domain_size(const SemType& type, const IntensionalModel& model) {
    switch (type.kind()) {
        case SemType::Kind::Entity: return BigInt(model.entities.size());
        case SemType::Kind::Truth: return BigInt(2);
        case SemType::Kind::Idx: {
            const SortFrame& f = model.frame(type.sort());
            const auto* ff = std::get_if<FiniteFrame>(&f);
            if (!ff) {
                throw CombinatorialBlowup("domain of sort '" + type.sort().label() +
                                          "' is not finitely enumerable");
            }
            return BigInt(ff->size());
        }
        case SemType::Kind::Func: {
            const BigInt base = domain_size(type.result(), model);
            const BigInt expo = domain_size(type.arg(), model);
            if (base == 0) return BigInt(expo == 0 ? 1 : 0);
            if (base == 1) return BigInt(1);
            if (expo > 4096) {
                throw CombinatorialBlowup("|" + type.to_string() + "| exceeds any practical cap");
            }
            return boost::multiprecision::pow(base, expo.convert_to<unsigned>());
        }
    }
    throw TypeMismatch("unreachable");
}

namespace {

void check_cap(const BigInt& n, std::size_t cap, const std::string& what) {
    if (n > BigInt(cap)) {
        throw CombinatorialBlowup("enumerating " + what + " would produce " + n.str() +
                                  " values (cap " + std::to_string(cap) + ")");
    }
}

}  // namespace

std::vector<DomainValue> enumerate_domain(const SemType& type, const IntensionalModel& model) {
    check_cap(domain_size(type, model), model.enumeration_cap, "D_" + type.to_string());
    switch (type.kind()) {
        case SemType::Kind::Entity: {
            std::vector<DomainValue> out;
            out.reserve(model.entities.size());
            for (const auto& e : model.entities) out.push_back(DomainValue::ent(e));
            return out;
        }
        case SemType::Kind::Truth: return {DomainValue::tru(1), DomainValue::tru(0)};
        case SemType::Kind::Idx: {
            const FiniteFrame& f = model.finite_frame(type.sort());
            std::vector<DomainValue> out;
            out.reserve(f.size());
            for (const auto& w : f.worlds()) out.push_back(DomainValue::idx(type.sort(), w));
            return out;
        }
        case SemType::Kind::Func: {
            const auto args = enumerate_domain(type.arg(), model);
            const auto results = enumerate_domain(type.result(), model);
            std::vector<DomainValue> out;
            // Odometer over result choices, first argument most significant.
            std::vector<std::size_t> pick(args.size(), 0);
            while (true) {
                std::vector<FuncEntry> entries;
                entries.reserve(args.size());
                for (std::size_t i = 0; i < args.size(); ++i) {
                    entries.push_back(FuncEntry{args[i], results[pick[i]]});
                }
                out.push_back(DomainValue::func(type.arg(), type.result(), std::move(entries)));
                std::size_t i = args.size();
                while (i > 0) {
                    --i;
                    if (++pick[i] < results.size()) break;
                    pick[i] = 0;
                    if (i == 0) return out;
                }
                if (args.empty()) return out;  // single empty function
            }
        }
    }
    throw TypeMismatch("unreachable");
}

std::vector<DomainValue> compound_index_space(const IntensionalModel& model) {
    BigInt total = 1;
    std::vector<const FiniteFrame*> frames;
    for (const auto& s : model.sorts) {
        const FiniteFrame& f = model.finite_frame(s);
        frames.push_back(&f);
        total *= BigInt(f.size());
    }
    check_cap(total, model.enumeration_cap, "the compound index space");

    std::vector<DomainValue> out;
    std::vector<std::size_t> pick(model.sorts.size(), 0);
    while (true) {
        std::vector<std::pair<SortId, std::string>> assign;
        for (std::size_t i = 0; i < model.sorts.size(); ++i) {
            assign.emplace_back(model.sorts[i], frames[i]->worlds()[pick[i]]);
        }
        out.push_back(DomainValue::compound(std::move(assign)));
        std::size_t i = model.sorts.size();
        bool advanced = false;
        while (i > 0) {
            --i;
            if (++pick[i] < frames[i]->size()) {
                advanced = true;
                break;
            }
            pick[i] = 0;
        }
        if (!advanced) return out;
    }
}

std::optional<DomainValue> Assignment::lookup(const std::string& var) const {
    const auto it = bindings_.find(var);
    if (it == bindings_.end()) return std::nullopt;
    return it->second;
}

const DomainValue& Assignment::at(const std::string& var) const {
    const auto it = bindings_.find(var);
    if (it == bindings_.end()) throw UnboundVariable("variable '" + var + "' is unbound");
    return it->second;
}

Assignment Assignment::bind(const std::string& var, DomainValue v) const {
    Assignment out = *this;
    out.bindings_.insert_or_assign(var, std::move(v));
    return out;
}

bool operator==(const Assignment& a, const Assignment& b) {
    return a.bindings_.size() == b.bindings_.size() &&
           std::equal(a.bindings_.begin(), a.bindings_.end(), b.bindings_.begin(),
                      [](const auto& x, const auto& y) {
                          return x.first == y.first && x.second == y.second;
                      });
}

bool operator<(const Assignment& a, const Assignment& b) {
    return std::lexicographical_compare(
        a.bindings_.begin(), a.bindings_.end(), b.bindings_.begin(), b.bindings_.end(),
        [](const auto& x, const auto& y) {
            if (x.first != y.first) return x.first < y.first;
            return x.second < y.second;
        });
}

Assignment variant(const Assignment& g, const std::string& var, const DomainValue& k) {
    if (!k.is_ent()) {
        throw TypeMismatch("variant assignment requires an entity, got " + k.to_string());
    }
    return g.bind(var, k);
}

}  // namespace intlab

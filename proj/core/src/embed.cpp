#include "intlab/embed.hpp"

#include "intlab/errors.hpp"

#include <set>

namespace intlab {

VecValue embed(const DomainValue& value, const SemType& type, const IntensionalModel& model) {
    if (!value_conforms(value, type)) {
        throw TypeMismatch("cannot embed " + value.to_string() + " at type " + type.to_string());
    }
    if (!type.is_func()) {
        return Vec::unit(VSpace::of(type), BasisLabel(value));
    }
    const SemType arg_type = type.arg();
    const SemType res_type = type.result();
    std::vector<LinColumn> columns;
    columns.reserve(value.func_entries().size());
    for (const auto& e : value.func_entries()) {
        columns.push_back(LinColumn{BasisLabel(e.arg), embed(e.result, res_type, model)});
    }
    return LinMap(VSpace::of(arg_type), VSpace::of(res_type), std::move(columns));
}

Vec embed_compound(const DomainValue& compound) {
    if (!compound.is_compound()) {
        throw TypeMismatch("embed_compound expects a compound index, got " + compound.to_string());
    }
    return Vec::unit(VSpace::compound(), BasisLabel(compound));
}

std::optional<DomainValue> try_unembed(const VecValue& v) {
    if (v.is_vec()) {
        const Vec& vec = v.vec();
        if (vec.entries().size() != 1) return std::nullopt;
        const auto& [label, c] = *vec.entries().begin();
        if (c != 1 || label.parts().size() != 1) return std::nullopt;
        return label.single();
    }
    const LinMap& m = v.lin();
    if (!m.dom().single() || m.dom().axis().is_compound()) return std::nullopt;
    if (!m.cod().single() || m.cod().axis().is_compound()) return std::nullopt;
    const SemType& arg_type = m.dom().axis().type();
    const SemType& res_type = m.cod().axis().type();
    std::vector<FuncEntry> entries;
    entries.reserve(m.columns().size());
    for (const auto& col : m.columns()) {
        if (col.label.parts().size() != 1) return std::nullopt;
        auto r = try_unembed(col.value);
        if (!r) return std::nullopt;
        entries.push_back(FuncEntry{col.label.single(), std::move(*r)});
    }
    try {
        return DomainValue::func(arg_type, res_type, std::move(entries));
    } catch (const Error&) {
        return std::nullopt;
    }
}

DomainValue unembed(const VecValue& v, const SemType& type, const IntensionalModel& model) {
    auto fail = [&](const std::string& why) -> NotInImage {
        return NotInImage("not in the image of the embedding at type " + type.to_string() + ": " +
                          why);
    };
    if (!type.is_func()) {
        if (!v.is_vec()) throw fail("expected a vector");
        const Vec& vec = v.vec();
        if (vec.space() != VSpace::of(type)) throw fail("wrong space " + vec.space().to_string());
        if (vec.entries().size() != 1) throw fail("support size " +
                                                  std::to_string(vec.entries().size()));
        const auto& [label, c] = *vec.entries().begin();
        if (c != 1) throw fail("non-unit coefficient " + to_string(c));
        const DomainValue& val = label.single();
        if (!value_conforms(val, type)) throw fail("label of wrong type");
        return val;
    }

    if (!v.is_lin()) throw fail("expected a linear map");
    const LinMap& m = v.lin();
    const SemType arg_type = type.arg();
    const SemType res_type = type.result();
    if (m.dom() != VSpace::of(arg_type) || m.cod() != VSpace::of(res_type)) {
        throw fail("wrong Hom space " + m.dom().to_string() + " -> " + m.cod().to_string());
    }
    const auto domain = enumerate_domain(arg_type, model);
    if (m.columns().size() != domain.size()) {
        throw fail("column count " + std::to_string(m.columns().size()) + " != |domain| " +
                   std::to_string(domain.size()));
    }
    std::vector<FuncEntry> entries;
    std::set<DomainValue> domain_set(domain.begin(), domain.end());
    for (const auto& col : m.columns()) {
        if (col.label.parts().size() != 1 || !domain_set.count(col.label.single())) {
            throw fail("column label " + col.label.to_string() + " outside the domain");
        }
        entries.push_back(FuncEntry{col.label.single(), unembed(col.value, res_type, model)});
    }
    return DomainValue::func(arg_type, res_type, std::move(entries));
}

LinMap lift(const MultiFunc& f, const IntensionalModel& model) {
    if (f.arg_types.empty()) throw TypeMismatch("lift requires at least one argument type");
    std::vector<std::vector<DomainValue>> domains;
    BigInt total = 1;
    for (const auto& t : f.arg_types) {
        domains.push_back(enumerate_domain(t, model));
        total *= BigInt(domains.back().size());
    }
    if (total > BigInt(model.enumeration_cap)) {
        throw CombinatorialBlowup("lifting '" + f.name + "' needs " + total.str() +
                                  " columns (cap " + std::to_string(model.enumeration_cap) + ")");
    }

    VSpace dom = VSpace::of(f.arg_types[0]);
    for (std::size_t i = 1; i < f.arg_types.size(); ++i) {
        dom = VSpace::tensor(dom, VSpace::of(f.arg_types[i]));
    }

    std::vector<LinColumn> columns;
    std::vector<std::size_t> pick(domains.size(), 0);
    while (true) {
        std::vector<DomainValue> args;
        std::vector<DomainValue> parts;
        args.reserve(domains.size());
        for (std::size_t i = 0; i < domains.size(); ++i) {
            args.push_back(domains[i][pick[i]]);
            parts.push_back(domains[i][pick[i]]);
        }
        DomainValue out = f.fn(args);
        if (!value_conforms(out, f.result_type)) {
            throw TypeMismatch("'" + f.name + "' returned " + out.to_string() +
                               ", expected type " + f.result_type.to_string());
        }
        columns.push_back(LinColumn{BasisLabel(std::move(parts)),
                                    embed(out, f.result_type, model)});
        std::size_t i = domains.size();
        bool advanced = false;
        while (i > 0) {
            --i;
            if (++pick[i] < domains[i].size()) {
                advanced = true;
                break;
            }
            pick[i] = 0;
        }
        if (!advanced) break;
    }
    return LinMap(std::move(dom), VSpace::of(f.result_type), std::move(columns));
}

LinMap lift(const DomainValue& func_value, const IntensionalModel& model) {
    if (!func_value.is_func()) {
        throw TypeMismatch("lift of a non-function value " + func_value.to_string());
    }
    const SemType type = func_value.type();
    return embed(func_value, type, model).lin();
}

VecValue apply_lin_value(const LinMap& m, const VecValue& arg, bool* missing_column) {
    if (arg.is_vec()) return apply_lin(m, arg.vec(), missing_column);
    // A Hom-space element: recognize it as the image of a function value and
    // dispatch to its column.
    auto a = try_unembed(arg);
    if (!a) {
        throw NotInImage("argument linear map is not the embedding of any function value");
    }
    if (!m.dom().single() || m.dom().axis().is_compound() ||
        !value_conforms(*a, m.dom().axis().type())) {
        throw SpaceMismatch("argument of type " + a->type().to_string() +
                            " does not inhabit " + m.dom().to_string());
    }
    return apply_lin(m, Vec::unit(m.dom(), BasisLabel(*a)), missing_column);
}

LinMap compose_lin(const LinMap& g, const LinMap& f) {
    if (f.cod() != g.dom()) {
        throw SpaceMismatch("composing " + g.dom().to_string() + " <- " + f.cod().to_string());
    }
    std::vector<LinColumn> columns;
    columns.reserve(f.columns().size());
    for (const auto& col : f.columns()) {
        columns.push_back(LinColumn{col.label, apply_lin_value(g, col.value)});
    }
    return LinMap(f.dom(), g.cod(), std::move(columns));
}

LinMap intension_operator(const Constant& c, const IntensionalModel& model) {
    std::vector<LinColumn> columns;
    for (const auto& s : compound_index_space(model)) {
        columns.push_back(
            LinColumn{BasisLabel(s), embed(model.intension_at(c.name, s), c.type, model)});
    }
    return LinMap(VSpace::compound(), VSpace::of(c.type), std::move(columns));
}

BasisLabel compound_tensor_label(const DomainValue& compound, const IntensionalModel& model) {
    if (model.sorts.empty()) {
        throw SpaceMismatch("a model with no sorts has no tensor form of the index space");
    }
    std::vector<DomainValue> parts;
    parts.reserve(model.sorts.size());
    for (const auto& sort : model.sorts) {
        parts.push_back(DomainValue::idx(sort, compound.compound_at(sort)));
    }
    return BasisLabel(std::move(parts));
}

}  // namespace intlab

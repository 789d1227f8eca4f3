#include "intlab/multisort.hpp"

#include "intlab/errors.hpp"

#include <algorithm>
#include <set>

namespace intlab {

namespace {

enum class Quant { All, Some };

int quantify_sort(const IntensionalModel& model, const SortId& sort, const CompoundPred& p,
                  const DomainValue& s, Quant quant) {
    if (!model.has_sort(sort)) throw UnknownSort("sort '" + sort.label() + "' is not declared");
    const SortFrame& f = model.frame(sort);

    const auto combine = [&](auto&& successors_labels) -> int {
        for (const auto& label : successors_labels) {
            const int v = p(s.compound_with(sort, label));
            if (quant == Quant::All && v == 0) return 0;
            if (quant == Quant::Some && v == 1) return 1;
        }
        return quant == Quant::All ? 1 : 0;
    };

    if (const auto* ff = std::get_if<FiniteFrame>(&f)) {
        const std::size_t i = ff->world_pos(s.compound_at(sort));
        std::vector<std::string> labels;
        for (std::size_t j : ff->successors(i)) labels.push_back(ff->worlds()[j]);
        return combine(labels);
    }
    if (const auto* cf = std::get_if<CountableFrame>(&f)) {
        long long i = 0;
        try {
            i = std::stoll(s.compound_at(sort));
        } catch (const std::exception&) {
            throw ModelError("countable index label '" + s.compound_at(sort) +
                             "' is not an integer");
        }
        std::vector<std::string> labels;
        for (long long j : cf->successors(i)) labels.push_back(std::to_string(j));
        return combine(labels);
    }
    throw ModelError("sort '" + sort.label() +
                     "' has a continuous frame; use the slice form for modal operators");
}

}  // namespace

int box_sort(const IntensionalModel& model, const SortId& sort, const CompoundPred& p,
             const DomainValue& s) {
    return quantify_sort(model, sort, p, s, Quant::All);
}

int dia_sort(const IntensionalModel& model, const SortId& sort, const CompoundPred& p,
             const DomainValue& s) {
    return quantify_sort(model, sort, p, s, Quant::Some);
}

namespace {

std::pair<const ContinuousFrame*, Rational> continuous_coord(const IntensionalModel& model,
                                                             const SortId& sort,
                                                             const DomainValue& s) {
    if (!model.has_sort(sort)) throw UnknownSort("sort '" + sort.label() + "' is not declared");
    const auto* cf = std::get_if<ContinuousFrame>(&model.frame(sort));
    if (!cf) throw ModelError("sort '" + sort.label() + "' does not have a continuous frame");
    try {
        return {cf, parse_rational(s.compound_at(sort))};
    } catch (const std::invalid_argument&) {
        throw ModelError("continuous index label '" + s.compound_at(sort) +
                         "' is not a rational");
    }
}

}  // namespace

int box_sort_continuous(const IntensionalModel& model, const SortId& sort,
                        const SliceFamily& slice, const DomainValue& s) {
    const auto [cf, t] = continuous_coord(model, sort, s);
    const MeasurableProp prop = slice(s);
    const IntervalSet window = IntervalSet::interval(t + cf->lo(), t + cf->hi());
    return difference(window, prop.base()).measure() == 0 ? 1 : 0;
}

int dia_sort_continuous(const IntensionalModel& model, const SortId& sort,
                        const SliceFamily& slice, const DomainValue& s) {
    const auto [cf, t] = continuous_coord(model, sort, s);
    const MeasurableProp prop = slice(s);
    const IntervalSet window = IntervalSet::interval(t + cf->lo(), t + cf->hi());
    return prop.truth_measure_within(window) > 0 ? 1 : 0;
}

ProductFrame ProductFrame::independent(const IntensionalModel& model) {
    ProductFrame pf;
    pf.sorts = model.sorts;
    pf.frames = model.frames;
    pf.enumeration_cap = model.enumeration_cap;
    return pf;
}

const SortFrame& ProductFrame::frame(const SortId& sort) const {
    const auto it = frames.find(sort);
    if (it == frames.end()) throw UnknownSort("no frame for sort '" + sort.label() + "'");
    return it->second;
}

DependentPred independence_product(const ProductFrame& pf) {
    std::vector<std::pair<SortId, const FiniteFrame*>> finite;
    for (const auto& sort : pf.sorts) {
        const auto* ff = std::get_if<FiniteFrame>(&pf.frame(sort));
        if (!ff) throw ModelError("independence_product needs finite frames");
        finite.emplace_back(sort, ff);
    }
    return [finite](const DomainValue& from, const DomainValue& to) {
        for (const auto& [sort, ff] : finite) {
            const std::size_t i = ff->world_pos(from.compound_at(sort));
            const std::size_t j = ff->world_pos(to.compound_at(sort));
            if (!ff->accessible(i, j)) return false;
        }
        return true;
    };
}

namespace {

std::vector<DomainValue> product_space(const ProductFrame& pf) {
    std::vector<const FiniteFrame*> frames;
    BigInt total = 1;
    for (const auto& sort : pf.sorts) {
        const auto* ff = std::get_if<FiniteFrame>(&pf.frame(sort));
        if (!ff) throw ModelError("dependent quantification with a custom predicate needs finite sorts");
        frames.push_back(ff);
        total *= BigInt(ff->size());
    }
    if (total > BigInt(pf.enumeration_cap)) {
        throw CombinatorialBlowup("product index space has " + total.str() + " elements (cap " +
                                  std::to_string(pf.enumeration_cap) + ")");
    }
    std::vector<DomainValue> out;
    std::vector<std::size_t> pick(pf.sorts.size(), 0);
    while (true) {
        std::vector<std::pair<SortId, std::string>> assign;
        for (std::size_t i = 0; i < pf.sorts.size(); ++i) {
            assign.emplace_back(pf.sorts[i], frames[i]->worlds()[pick[i]]);
        }
        out.push_back(DomainValue::compound(std::move(assign)));
        std::size_t i = pf.sorts.size();
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

const DependentPred& require_custom(const ProductFrame& pf) {
    const auto* dep = std::get_if<DependentPred>(&pf.dependent);
    if (!dep) throw ModelError("product frame has no custom dependent relation");
    return *dep;
}

const LightCone& require_cone(const ProductFrame& pf) {
    const auto* cone = std::get_if<LightCone>(&pf.dependent);
    if (!cone) throw ModelError("product frame has no light-cone relation");
    if (!(cone->c > 0)) throw ModelError("light-cone speed must be positive");
    if (!std::holds_alternative<ContinuousFrame>(pf.frame(cone->time)) ||
        !std::holds_alternative<ContinuousFrame>(pf.frame(cone->loc))) {
        throw ModelError("light-cone sorts '" + cone->time.label() + "' and '" +
                         cone->loc.label() + "' must both be continuous");
    }
    return *cone;
}

}  // namespace

int dependent_box(const ProductFrame& pf, const CompoundPred& p, const DomainValue& s) {
    const DependentPred& dep = require_custom(pf);
    for (const auto& t : product_space(pf)) {
        if (dep(s, t) && p(t) == 0) return 0;
    }
    return 1;
}

int dependent_dia(const ProductFrame& pf, const CompoundPred& p, const DomainValue& s) {
    const DependentPred& dep = require_custom(pf);
    for (const auto& t : product_space(pf)) {
        if (dep(s, t) && p(t) == 1) return 1;
    }
    return 0;
}

MeasurableProp PiecewiseSliceProp::at(const Rational& t) const {
    for (const auto& piece : pieces) {
        if (piece.times.contains(t)) return piece.prop;
    }
    return MeasurableProp(IntervalSet());
}

std::pair<Rational, Rational> light_cone_slice(const LightCone& cone, const Rational& t,
                                               const Rational& x, const Rational& t_prime) {
    const Rational delta = t_prime - t;
    if (delta < 0) return {x, x};  // nothing accessible before t
    return {x - cone.c * delta, x + cone.c * delta};
}

ConeVerdict light_cone_modal(const ProductFrame& pf, const PiecewiseSliceProp& p,
                             const DomainValue& s, const std::optional<ConeQuery>& query) {
    const LightCone& cone = require_cone(pf);
    if (!query) {
        throw UnboundedQuery(
            "light-cone quantification over continuous sorts needs a bounded query window");
    }
    Rational t, x;
    try {
        t = parse_rational(s.compound_at(cone.time));
        x = parse_rational(s.compound_at(cone.loc));
    } catch (const std::invalid_argument&) {
        throw ModelError("light-cone coordinates must be rational index labels");
    }

    // Accessible times: t' > t within the query window.
    const Rational lo = std::max(t, query->t_lo);
    const Rational hi = query->t_hi;
    ConeVerdict out{0, 0, 0, 1, 0};
    if (!(lo < hi)) return out;  // empty region: vacuous box, no dia

    // Collect the breakpoints where the truth overlap changes slope: piece
    // boundaries and times where a cone edge crosses a base endpoint.
    std::set<Rational> cuts{lo, hi};
    const auto add_cut = [&](const Rational& u) {
        if (lo < u && u < hi) cuts.insert(u);
    };
    for (const auto& piece : p.pieces) {
        for (const auto& [a, b] : piece.times.intervals()) {
            add_cut(a);
            add_cut(b);
        }
        for (const auto& [a, b] : piece.prop.base().intervals()) {
            for (const Rational& y : {a, b}) {
                add_cut(t + (y - x) / cone.c);
                add_cut(t + (x - y) / cone.c);
            }
        }
    }

    const auto overlap_at = [&](const Rational& tp, const MeasurableProp& prop) {
        const auto [xlo, xhi] = light_cone_slice(cone, t, x, tp);
        return prop.truth_measure_within(IntervalSet::interval(xlo, xhi));
    };

    std::vector<Rational> pts(cuts.begin(), cuts.end());
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
        const Rational& u = pts[k];
        const Rational& v = pts[k + 1];
        const Rational len = v - u;
        const MeasurableProp prop = p.at((u + v) / 2);
        // Both integrands are affine on the segment; the trapezoid is exact.
        const Rational truth = (overlap_at(u, prop) + overlap_at(v, prop)) / 2 * len;
        const Rational region = (2 * cone.c * (u - t) + 2 * cone.c * (v - t)) / 2 * len;
        out.truth_measure += truth;
        out.region_measure += region;
    }
    out.failure_measure = out.region_measure - out.truth_measure;
    out.box = out.failure_measure == 0 ? 1 : 0;
    out.dia = out.truth_measure > 0 ? 1 : 0;
    return out;
}

int dependent_box(const ProductFrame& pf, const PiecewiseSliceProp& p, const DomainValue& s,
                  const std::optional<ConeQuery>& query) {
    return light_cone_modal(pf, p, s, query).box;
}

int dependent_dia(const ProductFrame& pf, const PiecewiseSliceProp& p, const DomainValue& s,
                  const std::optional<ConeQuery>& query) {
    return light_cone_modal(pf, p, s, query).dia;
}

}  // namespace intlab

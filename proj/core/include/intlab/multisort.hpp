#ifndef INTLAB_MULTISORT_HPP
#define INTLAB_MULTISORT_HPP

#include "intlab/measure.hpp"
#include "intlab/model.hpp"

#include <functional>
#include <optional>
#include <variant>

namespace intlab {

/// An evaluable 0/1 proposition over compound indices.
using CompoundPred = std::function<int(const DomainValue&)>;

/// Box/diamond along one sort: quantifies over compound indices s' whose
/// sigma-coordinate is accessible from s_sigma and that agree with s on every
/// other sort. Supports finite frames (exhaustive) and countable frames
/// (successor rule on integer-labeled indices).
int box_sort(const IntensionalModel& model, const SortId& sort, const CompoundPred& p,
             const DomainValue& s);
int dia_sort(const IntensionalModel& model, const SortId& sort, const CompoundPred& p,
             const DomainValue& s);

/// The continuous case: the proposition is given per slice, as the
/// measurable prop in the sigma-variable with the other coordinates of s held
/// fixed. The sigma-coordinate of s must parse as a rational.
using SliceFamily = std::function<MeasurableProp(const DomainValue& s)>;
int box_sort_continuous(const IntensionalModel& model, const SortId& sort,
                        const SliceFamily& slice, const DomainValue& s);
int dia_sort_continuous(const IntensionalModel& model, const SortId& sort,
                        const SliceFamily& slice, const DomainValue& s);

/// Relativistic-style dependence between a continuous time sort and a
/// continuous location sort: from (t,x) the accessible points (t',x')
/// satisfy t' > t and |x' - x| <= c (t' - t).
struct LightCone {
    Rational c;
    SortId time;
    SortId loc;
};

/// A dependent accessibility predicate over pairs of compound indices
/// (finite sorts only).
using DependentPred = std::function<bool(const DomainValue& from, const DomainValue& to)>;

/// A compound index space with per-sort frames and an optional dependent
/// accessibility relation overriding sort-wise independence.
struct ProductFrame {
    std::vector<SortId> sorts;
    std::map<SortId, SortFrame> frames;
    std::variant<std::monostate, DependentPred, LightCone> dependent;
    std::size_t enumeration_cap = 1'000'000;

    static ProductFrame independent(const IntensionalModel& model);
    const SortFrame& frame(const SortId& sort) const;
};

/// The sort-wise product relation of a product frame's finite frames:
/// accessible iff every coordinate steps along its own relation.
DependentPred independence_product(const ProductFrame& pf);

/// Dependent box/diamond with a custom predicate; all sorts must be finite.
int dependent_box(const ProductFrame& pf, const CompoundPred& p, const DomainValue& s);
int dependent_dia(const ProductFrame& pf, const CompoundPred& p, const DomainValue& s);

/// A proposition over (time, location) given piecewise in time: within each
/// time piece, a fixed measurable prop in the location variable. The first
/// matching piece wins; times not covered by any piece are false.
struct TimePiece {
    IntervalSet times;
    MeasurableProp prop;
};
struct PiecewiseSliceProp {
    std::vector<TimePiece> pieces;
    MeasurableProp at(const Rational& t) const;
};

/// Bounded query window for the time coordinate, [t_lo, t_hi).
struct ConeQuery {
    Rational t_lo;
    Rational t_hi;
};

struct ConeVerdict {
    Rational region_measure;
    Rational truth_measure;
    Rational failure_measure;
    int box;
    int dia;
};

/// Exact measure-theoretic verdicts over the light-cone region from s,
/// intersected with the query window (UnboundedQuery when absent). The
/// integrals are computed exactly: the truth overlap is piecewise affine in
/// time, integrated segment by segment.
ConeVerdict light_cone_modal(const ProductFrame& pf, const PiecewiseSliceProp& p,
                             const DomainValue& s, const std::optional<ConeQuery>& query);
int dependent_box(const ProductFrame& pf, const PiecewiseSliceProp& p, const DomainValue& s,
                  const std::optional<ConeQuery>& query);
int dependent_dia(const ProductFrame& pf, const PiecewiseSliceProp& p, const DomainValue& s,
                  const std::optional<ConeQuery>& query);

/// The accessible location range [x - c delta, x + c delta] at time t'.
std::pair<Rational, Rational> light_cone_slice(const LightCone& cone, const Rational& t,
                                               const Rational& x, const Rational& t_prime);

}  // namespace intlab

#endif  // INTLAB_MULTISORT_HPP

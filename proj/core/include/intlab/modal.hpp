#ifndef INTLAB_MODAL_HPP
#define INTLAB_MODAL_HPP

#include "intlab/frame.hpp"
#include "intlab/measure.hpp"
#include "intlab/vec.hpp"

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace intlab {

/// The adjacency relation of a finite frame as a linear operator on the
/// frame's index space: column at b_{w_j} lists the worlds that access w_j.
LinMap adjacency_operator(const FiniteFrame& frame);

/// A 0/1 proposition vector over the frame's index basis from bits in world
/// order.
Vec proposition_vec(const FiniteFrame& frame, const std::vector<int>& bits);
std::vector<int> proposition_bits(const FiniteFrame& frame, const Vec& v);
std::vector<BasisLabel> frame_basis(const FiniteFrame& frame);

/// A * v(phi): component i counts the accessible phi-worlds from w_i.
/// v must be a 0/1 vector over the frame's basis.
Vec accumulate(const FiniteFrame& frame, const Vec& v);

/// Necessity: component i is 1 iff the accumulated count equals out-degree(i)
/// (vacuously 1 at out-degree-0 worlds). Possibility: 1 iff the count is >= 1.
Vec box_finite(const FiniteFrame& frame, const Vec& v);
Vec dia_finite(const FiniteFrame& frame, const Vec& v);

/// A 0/1 proposition over countably many worlds indexed by the naturals.
class CountableProp {
public:
    static CountableProp finite_support(std::set<long long> true_at);
    /// False exactly at the given indices.
    static CountableProp cofinite(std::set<long long> false_at);
    static CountableProp rule(std::function<int(long long)> fn, std::string description = "rule");

    int eval(long long i) const;
    const std::string& description() const { return description_; }

private:
    CountableProp(std::function<int(long long)> fn, std::string description)
        : fn_(std::move(fn)), description_(std::move(description)) {}
    std::function<int(long long)> fn_;
    std::string description_;
};

int box_countable(const CountableFrame& frame, const CountableProp& p, long long i);
int dia_countable(const CountableFrame& frame, const CountableProp& p, long long i);

/// Per-(frame, proposition) evaluator that memoizes proposition values by
/// world index. Not synchronized: use one instance per worker.
class CountableModal {
public:
    CountableModal(CountableFrame frame, CountableProp prop);
    int box(long long i);
    int dia(long long i);

private:
    int prop_at(long long i);
    CountableFrame frame_;
    CountableProp prop_;
    std::map<long long, int> memo_;
};

/// The accessible set R(t) = [t+lo, t+hi) of a continuous frame.
IntervalSet accessible_window(const ContinuousFrame& frame, const Rational& t);

/// Exact integral of the proposition over R(t) (the measure of its truth set
/// there). Exceptions are null sets and never contribute.
Rational truth_measure_at(const ContinuousFrame& frame, const MeasurableProp& p, const Rational& t);

/// Necessity: truth almost everywhere on R(t) (failure set of measure zero).
/// Possibility: truth on a subset of R(t) of positive measure.
int box_continuous(const ContinuousFrame& frame, const MeasurableProp& p, const Rational& t);
int dia_continuous(const ContinuousFrame& frame, const MeasurableProp& p, const Rational& t);

struct DualityViolation {
    std::string where;
    int box;
    int not_dia_not;
};

/// Checks box(phi) == not(dia(not(phi))) at every world of a finite frame.
std::vector<DualityViolation> duality_check(const FiniteFrame& frame, const Vec& prop);

/// Continuous duality at sampled points; the negation is taken within the
/// given universe, which must cover every queried accessible window.
std::vector<DualityViolation> duality_check(const ContinuousFrame& frame, const MeasurableProp& p,
                                            const IntervalSet& universe,
                                            const std::vector<Rational>& ts);

/// Frame DSL used by the CLI: "chain", "offsets:+1,+2", "window:-1,1",
/// "edges:N:1>2,3>4,..." (worlds w1..wN).
SortFrame parse_frame_dsl(const std::string& text, const SortId& sort);

}  // namespace intlab

#endif  // INTLAB_MODAL_HPP

#ifndef INTLAB_MEASURE_HPP
#define INTLAB_MEASURE_HPP

#include "intlab/rational.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace intlab {

/// A finite union of disjoint half-open intervals [a,b) with rational
/// endpoints, kept normalized (sorted, disjoint, adjacent runs merged).
class IntervalSet {
public:
    IntervalSet() = default;  // empty set

    /// [a,b); an empty set when a >= b.
    static IntervalSet interval(const Rational& a, const Rational& b);
    static IntervalSet from_intervals(std::vector<std::pair<Rational, Rational>> intervals);

    const std::vector<std::pair<Rational, Rational>>& intervals() const { return intervals_; }
    bool empty() const { return intervals_.empty(); }
    Rational measure() const;
    bool contains(const Rational& x) const;

    friend bool operator==(const IntervalSet& a, const IntervalSet& b) {
        return a.intervals_ == b.intervals_;
    }
    friend bool operator!=(const IntervalSet& a, const IntervalSet& b) { return !(a == b); }

    std::string to_string() const;

private:
    std::vector<std::pair<Rational, Rational>> intervals_;
};

IntervalSet intersect(const IntervalSet& a, const IntervalSet& b);
IntervalSet unite(const IntervalSet& a, const IntervalSet& b);
IntervalSet difference(const IntervalSet& a, const IntervalSet& b);
IntervalSet complement_within(const IntervalSet& universe, const IntervalSet& s);

/// Parses "[a,b)" or a comma-separated union "[a,b),[c,d)"; endpoints accept
/// "p/q" and decimal forms.
IntervalSet parse_interval_set(const std::string& text);

/// Membership in the middle-thirds Cantor set on [0,1], decided exactly for
/// rationals via the eventually periodic ternary expansion (a point is in the
/// set iff some expansion avoids the digit 1).
bool cantor_contains_unit(const Rational& x);

/// A set of Lebesgue measure zero with decidable pointwise membership.
class NullSet {
public:
    static NullSet points(std::vector<Rational> pts, std::string id = "points");
    /// The Cantor set scaled onto the closed interval [a,b].
    static NullSet cantor(const Rational& a, const Rational& b, std::string id = "cantor");
    /// Membership oracle; returning nullopt declines the point
    /// (UndecidableMembership at query time).
    static NullSet custom(std::function<std::optional<bool>(const Rational&)> member,
                          std::string id);

    const std::string& id() const { return id_; }
    bool contains(const Rational& x) const;

private:
    NullSet(std::function<std::optional<bool>(const Rational&)> member, std::string id)
        : member_(std::move(member)), id_(std::move(id)) {}
    std::function<std::optional<bool>(const Rational&)> member_;
    std::string id_;
};

enum class Polarity { Add, Remove };

struct NullException {
    NullSet set;
    Polarity polarity;
};

/// A measurable 0/1 proposition on the line: an interval-set base adjusted by
/// null-set exceptions. Exceptions change pointwise values but never any
/// measure, so every modal verdict is computed from the base alone.
class MeasurableProp {
public:
    MeasurableProp() = default;
    explicit MeasurableProp(IntervalSet base) : base_(std::move(base)) {}

    MeasurableProp with_exception(NullSet set, Polarity polarity) const;

    const IntervalSet& base() const { return base_; }
    const std::vector<NullException>& exceptions() const { return exceptions_; }

    /// Base membership, overridden by matching exceptions in declaration
    /// order (Add sets 1, Remove sets 0; the last match wins).
    int eval_at(const Rational& x) const;

    /// Exact measure of the truth set within X.
    Rational truth_measure_within(const IntervalSet& X) const;

    /// Pointwise negation relative to a universe: complemented base, same
    /// exception sets with flipped polarities.
    MeasurableProp negated_within(const IntervalSet& universe) const;

private:
    IntervalSet base_;
    std::vector<NullException> exceptions_;
};

/// Volume of the n-ball of radius r as an exact (coefficient, pi-power) pair:
/// volume = coefficient * pi^pi_power.
struct BallVolume {
    Rational coefficient;
    unsigned pi_power;
    std::string to_string() const;
};

BallVolume ball_volume(unsigned n, const Rational& r);

}  // namespace intlab

#endif  // INTLAB_MEASURE_HPP

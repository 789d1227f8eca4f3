#include "intlab/measure.hpp"

#include "intlab/errors.hpp"

#include <algorithm>
#include <set>

namespace intlab {

IntervalSet IntervalSet::interval(const Rational& a, const Rational& b) {
    IntervalSet s;
    if (a < b) s.intervals_.emplace_back(a, b);
    return s;
}

IntervalSet IntervalSet::from_intervals(std::vector<std::pair<Rational, Rational>> intervals) {
    intervals.erase(std::remove_if(intervals.begin(), intervals.end(),
                                   [](const auto& p) { return !(p.first < p.second); }),
                    intervals.end());
    std::sort(intervals.begin(), intervals.end());
    IntervalSet s;
    for (auto& iv : intervals) {
        if (!s.intervals_.empty() && iv.first <= s.intervals_.back().second) {
            if (iv.second > s.intervals_.back().second) {
                s.intervals_.back().second = iv.second;
            }
        } else {
            s.intervals_.push_back(std::move(iv));
        }
    }
    return s;
}

Rational IntervalSet::measure() const {
    Rational m = 0;
    for (const auto& [a, b] : intervals_) m += b - a;
    return m;
}

bool IntervalSet::contains(const Rational& x) const {
    for (const auto& [a, b] : intervals_) {
        if (x < a) return false;
        if (x < b) return true;
    }
    return false;
}

std::string IntervalSet::to_string() const {
    if (intervals_.empty()) return "{}";
    std::string out;
    for (std::size_t i = 0; i < intervals_.size(); ++i) {
        if (i) out += ",";
        out += "[" + intlab::to_string(intervals_[i].first) + "," +
               intlab::to_string(intervals_[i].second) + ")";
    }
    return out;
}

IntervalSet intersect(const IntervalSet& a, const IntervalSet& b) {
    std::vector<std::pair<Rational, Rational>> out;
    auto ia = a.intervals().begin();
    auto ib = b.intervals().begin();
    while (ia != a.intervals().end() && ib != b.intervals().end()) {
        const Rational lo = std::max(ia->first, ib->first);
        const Rational hi = std::min(ia->second, ib->second);
        if (lo < hi) out.emplace_back(lo, hi);
        if (ia->second < ib->second) {
            ++ia;
        } else {
            ++ib;
        }
    }
    return IntervalSet::from_intervals(std::move(out));
}

IntervalSet unite(const IntervalSet& a, const IntervalSet& b) {
    std::vector<std::pair<Rational, Rational>> out = a.intervals();
    out.insert(out.end(), b.intervals().begin(), b.intervals().end());
    return IntervalSet::from_intervals(std::move(out));
}

IntervalSet difference(const IntervalSet& a, const IntervalSet& b) {
    std::vector<std::pair<Rational, Rational>> out;
    for (const auto& [lo0, hi] : a.intervals()) {
        Rational lo = lo0;
        for (const auto& [blo, bhi] : b.intervals()) {
            if (bhi <= lo) continue;
            if (blo >= hi) break;
            if (blo > lo) out.emplace_back(lo, blo);
            lo = std::max(lo, bhi);
            if (!(lo < hi)) break;
        }
        if (lo < hi) out.emplace_back(lo, hi);
    }
    return IntervalSet::from_intervals(std::move(out));
}

IntervalSet complement_within(const IntervalSet& universe, const IntervalSet& s) {
    return difference(universe, s);
}

IntervalSet parse_interval_set(const std::string& text) {
    std::vector<std::pair<Rational, Rational>> out;
    std::size_t pos = 0;
    const auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    while (pos < text.size()) {
        if (text[pos] != '[') {
            throw SyntaxError("interval set '" + text + "': expected '['", 1,
                              static_cast<int>(pos) + 1);
        }
        ++pos;
        const auto comma = text.find(',', pos);
        if (comma == std::string::npos) {
            throw SyntaxError("interval set '" + text + "': expected ','", 1,
                              static_cast<int>(pos) + 1);
        }
        const auto close = text.find(')', comma);
        if (close == std::string::npos) {
            throw SyntaxError("interval set '" + text + "': expected ')'", 1,
                              static_cast<int>(comma) + 1);
        }
        try {
            out.emplace_back(parse_rational(text.substr(pos, comma - pos)),
                             parse_rational(text.substr(comma + 1, close - comma - 1)));
        } catch (const std::invalid_argument& e) {
            throw SyntaxError(std::string("interval set: ") + e.what(), 1,
                              static_cast<int>(pos) + 1);
        }
        pos = close + 1;
        skip_ws();
        if (pos < text.size() && text[pos] == ',') {
            ++pos;
            skip_ws();
        }
    }
    return IntervalSet::from_intervals(std::move(out));
}

bool cantor_contains_unit(const Rational& x) {
    if (x < 0 || x > 1) return false;
    if (x == 1) return true;
    Rational r = x;
    std::set<Rational> seen;
    while (true) {
        if (r == 0) return true;          // all remaining digits 0
        if (!seen.insert(r).second) return true;  // periodic tail over {0,2}
        const Rational r3 = r * 3;
        const BigInt d = numerator(r3) / denominator(r3);  // floor: r3 in [0,3)
        r = r3 - Rational(d);
        if (d == 1) {
            // A terminating ...1 rewrites as ...0222..., which avoids 1s.
            return r == 0;
        }
    }
}

NullSet NullSet::points(std::vector<Rational> pts, std::string id) {
    std::sort(pts.begin(), pts.end());
    return NullSet(
        [pts = std::move(pts)](const Rational& x) -> std::optional<bool> {
            return std::binary_search(pts.begin(), pts.end(), x);
        },
        std::move(id));
}

NullSet NullSet::cantor(const Rational& a, const Rational& b, std::string id) {
    if (!(a < b)) throw ModelError("cantor null set needs a < b");
    return NullSet(
        [a, b](const Rational& x) -> std::optional<bool> {
            if (x < a || x > b) return false;
            return cantor_contains_unit((x - a) / (b - a));
        },
        std::move(id));
}

NullSet NullSet::custom(std::function<std::optional<bool>(const Rational&)> member,
                        std::string id) {
    return NullSet(std::move(member), std::move(id));
}

bool NullSet::contains(const Rational& x) const {
    const auto r = member_(x);
    if (!r) {
        throw UndecidableMembership("null set '" + id_ + "' declined the point " + to_string(x));
    }
    return *r;
}

MeasurableProp MeasurableProp::with_exception(NullSet set, Polarity polarity) const {
    MeasurableProp out = *this;
    out.exceptions_.push_back(NullException{std::move(set), polarity});
    return out;
}

int MeasurableProp::eval_at(const Rational& x) const {
    int v = base_.contains(x) ? 1 : 0;
    for (const auto& exc : exceptions_) {
        if (exc.set.contains(x)) v = exc.polarity == Polarity::Add ? 1 : 0;
    }
    return v;
}

Rational MeasurableProp::truth_measure_within(const IntervalSet& X) const {
    // Exceptions are null sets: they cannot move any measure.
    return intersect(base_, X).measure();
}

MeasurableProp MeasurableProp::negated_within(const IntervalSet& universe) const {
    MeasurableProp out(complement_within(universe, base_));
    for (const auto& exc : exceptions_) {
        out.exceptions_.push_back(NullException{
            exc.set, exc.polarity == Polarity::Add ? Polarity::Remove : Polarity::Add});
    }
    return out;
}

std::string BallVolume::to_string() const {
    std::string out = intlab::to_string(coefficient);
    if (pi_power == 1) {
        out += "*pi";
    } else if (pi_power > 1) {
        out += "*pi^" + std::to_string(pi_power);
    }
    return out;
}

BallVolume ball_volume(unsigned n, const Rational& r) {
    if (n < 1) throw TypeMismatch("ball dimension must be >= 1");
    if (!(r > 0)) throw TypeMismatch("ball radius must be positive");
    Rational rn = 1;
    for (unsigned i = 0; i < n; ++i) rn *= r;
    if (n % 2 == 0) {
        const unsigned m = n / 2;
        // pi^m / m! * r^n
        return BallVolume{rn / Rational(factorial(m)), m};
    }
    const unsigned m = (n - 1) / 2;
    // 2 * m! * 4^m / (2m+1)! * pi^m * r^n
    BigInt four_m = 1;
    for (unsigned i = 0; i < m; ++i) four_m *= 4;
    const Rational coeff = Rational(BigInt(2) * factorial(m) * four_m, factorial(2 * m + 1));
    return BallVolume{coeff * rn, m};
}

}  // namespace intlab

#include "intlab/modal.hpp"

#include "intlab/errors.hpp"

#include <algorithm>
#include <sstream>

namespace intlab {

namespace {

VSpace frame_space(const FiniteFrame& frame) {
    return VSpace::of(SemType::idx(frame.sort()));
}

BasisLabel world_label(const FiniteFrame& frame, std::size_t i) {
    return BasisLabel(DomainValue::idx(frame.sort(), frame.worlds()[i]));
}

void require_frame_vec(const FiniteFrame& frame, const Vec& v) {
    if (v.space() != frame_space(frame)) {
        throw SpaceMismatch("vector of " + v.space().to_string() +
                            " does not live on the frame of sort '" + frame.sort().label() + "'");
    }
}

void require_zero_one(const Vec& v) {
    for (const auto& [label, c] : v.entries()) {
        if (c != 0 && c != 1) {
            throw NotInImage("proposition vectors must be 0/1; found " + to_string(c) + " at " +
                             label.to_string());
        }
    }
}

}  // namespace

LinMap adjacency_operator(const FiniteFrame& frame) {
    const VSpace space = frame_space(frame);
    std::vector<LinColumn> columns;
    for (std::size_t j = 0; j < frame.size(); ++j) {
        std::map<BasisLabel, Rational> entries;
        for (std::size_t i = 0; i < frame.size(); ++i) {
            if (frame.accessible(i, j)) entries.emplace(world_label(frame, i), 1);
        }
        columns.push_back(LinColumn{world_label(frame, j),
                                    Vec::from_entries(space, std::move(entries))});
    }
    return LinMap(space, space, std::move(columns));
}

Vec proposition_vec(const FiniteFrame& frame, const std::vector<int>& bits) {
    if (bits.size() != frame.size()) {
        throw SpaceMismatch("proposition has " + std::to_string(bits.size()) + " bits, frame has " +
                            std::to_string(frame.size()) + " worlds");
    }
    std::map<BasisLabel, Rational> entries;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != 0 && bits[i] != 1) throw NotInImage("proposition bits must be 0 or 1");
        if (bits[i] == 1) entries.emplace(world_label(frame, i), 1);
    }
    return Vec::from_entries(frame_space(frame), std::move(entries));
}

std::vector<int> proposition_bits(const FiniteFrame& frame, const Vec& v) {
    require_frame_vec(frame, v);
    require_zero_one(v);
    std::vector<int> bits(frame.size(), 0);
    for (std::size_t i = 0; i < frame.size(); ++i) {
        if (v.coeff(world_label(frame, i)) == 1) bits[i] = 1;
    }
    return bits;
}

std::vector<BasisLabel> frame_basis(const FiniteFrame& frame) {
    std::vector<BasisLabel> out;
    out.reserve(frame.size());
    for (std::size_t i = 0; i < frame.size(); ++i) out.push_back(world_label(frame, i));
    return out;
}

Vec accumulate(const FiniteFrame& frame, const Vec& v) {
    require_frame_vec(frame, v);
    require_zero_one(v);
    return apply_lin(adjacency_operator(frame), v).vec();
}

Vec box_finite(const FiniteFrame& frame, const Vec& v) {
    const Vec acc = accumulate(frame, v);
    std::map<BasisLabel, Rational> entries;
    for (std::size_t i = 0; i < frame.size(); ++i) {
        // Out-degree 0 gives 0 == 0: vacuous necessity.
        if (acc.coeff(world_label(frame, i)) == frame.out_degree(i)) {
            entries.emplace(world_label(frame, i), 1);
        }
    }
    return Vec::from_entries(frame_space(frame), std::move(entries));
}

Vec dia_finite(const FiniteFrame& frame, const Vec& v) {
    const Vec acc = accumulate(frame, v);
    std::map<BasisLabel, Rational> entries;
    for (std::size_t i = 0; i < frame.size(); ++i) {
        if (acc.coeff(world_label(frame, i)) >= 1) entries.emplace(world_label(frame, i), 1);
    }
    return Vec::from_entries(frame_space(frame), std::move(entries));
}

CountableProp CountableProp::finite_support(std::set<long long> true_at) {
    std::string desc = "support:";
    bool first = true;
    for (long long i : true_at) {
        if (!first) desc += ",";
        desc += std::to_string(i);
        first = false;
    }
    return CountableProp(
        [true_at = std::move(true_at)](long long i) { return true_at.count(i) ? 1 : 0; }, desc);
}

CountableProp CountableProp::cofinite(std::set<long long> false_at) {
    std::string desc = "cofinite:";
    bool first = true;
    for (long long i : false_at) {
        if (!first) desc += ",";
        desc += std::to_string(i);
        first = false;
    }
    return CountableProp(
        [false_at = std::move(false_at)](long long i) { return false_at.count(i) ? 0 : 1; }, desc);
}

CountableProp CountableProp::rule(std::function<int(long long)> fn, std::string description) {
    return CountableProp(std::move(fn), std::move(description));
}

int CountableProp::eval(long long i) const {
    const int v = fn_(i);
    if (v != 0 && v != 1) {
        throw NotInImage("countable proposition returned " + std::to_string(v) + " at " +
                         std::to_string(i));
    }
    return v;
}

int box_countable(const CountableFrame& frame, const CountableProp& p, long long i) {
    for (long long j : frame.successors(i)) {
        if (p.eval(j) == 0) return 0;
    }
    return 1;
}

int dia_countable(const CountableFrame& frame, const CountableProp& p, long long i) {
    for (long long j : frame.successors(i)) {
        if (p.eval(j) == 1) return 1;
    }
    return 0;
}

CountableModal::CountableModal(CountableFrame frame, CountableProp prop)
    : frame_(std::move(frame)), prop_(std::move(prop)) {}

int CountableModal::prop_at(long long i) {
    const auto it = memo_.find(i);
    if (it != memo_.end()) return it->second;
    const int v = prop_.eval(i);
    memo_.emplace(i, v);
    return v;
}

int CountableModal::box(long long i) {
    for (long long j : frame_.successors(i)) {
        if (prop_at(j) == 0) return 0;
    }
    return 1;
}

int CountableModal::dia(long long i) {
    for (long long j : frame_.successors(i)) {
        if (prop_at(j) == 1) return 1;
    }
    return 0;
}

IntervalSet accessible_window(const ContinuousFrame& frame, const Rational& t) {
    return IntervalSet::interval(t + frame.lo(), t + frame.hi());
}

Rational truth_measure_at(const ContinuousFrame& frame, const MeasurableProp& p,
                          const Rational& t) {
    return p.truth_measure_within(accessible_window(frame, t));
}

int box_continuous(const ContinuousFrame& frame, const MeasurableProp& p, const Rational& t) {
    // Failure set = window minus the truth set; exceptions are null.
    const IntervalSet window = accessible_window(frame, t);
    const Rational failure = difference(window, p.base()).measure();
    return failure == 0 ? 1 : 0;
}

int dia_continuous(const ContinuousFrame& frame, const MeasurableProp& p, const Rational& t) {
    return truth_measure_at(frame, p, t) > 0 ? 1 : 0;
}

std::vector<DualityViolation> duality_check(const FiniteFrame& frame, const Vec& prop) {
    const std::vector<int> bits = proposition_bits(frame, prop);
    std::vector<int> negated(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) negated[i] = 1 - bits[i];

    const Vec box = box_finite(frame, prop);
    const Vec dia_not = dia_finite(frame, proposition_vec(frame, negated));

    std::vector<DualityViolation> out;
    for (std::size_t i = 0; i < frame.size(); ++i) {
        const BasisLabel label = BasisLabel(DomainValue::idx(frame.sort(), frame.worlds()[i]));
        const int b = box.coeff(label) == 1 ? 1 : 0;
        const int ndn = dia_not.coeff(label) == 1 ? 0 : 1;
        if (b != ndn) {
            out.push_back(DualityViolation{frame.worlds()[i], b, ndn});
        }
    }
    return out;
}

std::vector<DualityViolation> duality_check(const ContinuousFrame& frame, const MeasurableProp& p,
                                            const IntervalSet& universe,
                                            const std::vector<Rational>& ts) {
    std::vector<DualityViolation> out;
    const MeasurableProp notp = p.negated_within(universe);
    for (const Rational& t : ts) {
        const IntervalSet window = accessible_window(frame, t);
        if (intersect(window, universe) != window) {
            throw ModelError("duality universe " + universe.to_string() +
                             " does not cover the accessible window " + window.to_string());
        }
        const int b = box_continuous(frame, p, t);
        const int ndn = 1 - dia_continuous(frame, notp, t);
        if (b != ndn) out.push_back(DualityViolation{"t=" + to_string(t), b, ndn});
    }
    return out;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

SortFrame parse_frame_dsl(const std::string& text, const SortId& sort) {
    const auto bad = [&](const std::string& why) {
        return SyntaxError("frame '" + text + "': " + why, 1, 1);
    };
    if (text == "chain") return CountableFrame::chain(sort);
    if (text.rfind("offsets:", 0) == 0) {
        std::vector<long long> deltas;
        for (const auto& tok : split(text.substr(8), ',')) {
            if (tok.empty()) throw bad("empty offset");
            try {
                deltas.push_back(std::stoll(tok));
            } catch (const std::exception&) {
                throw bad("bad offset '" + tok + "'");
            }
        }
        if (deltas.empty()) throw bad("no offsets");
        return CountableFrame::offsets(sort, std::move(deltas));
    }
    if (text.rfind("window:", 0) == 0) {
        const auto parts = split(text.substr(7), ',');
        if (parts.size() != 2) throw bad("window needs two offsets");
        try {
            return ContinuousFrame(sort, parse_rational(parts[0]), parse_rational(parts[1]));
        } catch (const std::invalid_argument& e) {
            throw bad(e.what());
        }
    }
    if (text.rfind("edges:", 0) == 0) {
        const auto parts = split(text.substr(6), ':');
        if (parts.size() != 2) throw bad("expected edges:N:i>j,...");
        std::size_t n = 0;
        try {
            n = static_cast<std::size_t>(std::stoull(parts[0]));
        } catch (const std::exception&) {
            throw bad("bad world count '" + parts[0] + "'");
        }
        if (n == 0) throw bad("need at least one world");
        std::vector<std::string> worlds;
        for (std::size_t i = 1; i <= n; ++i) worlds.push_back("w" + std::to_string(i));
        std::vector<std::pair<std::string, std::string>> edges;
        if (!parts[1].empty()) {
            for (const auto& tok : split(parts[1], ',')) {
                const auto arrow = tok.find('>');
                if (arrow == std::string::npos) throw bad("edge '" + tok + "' needs i>j");
                try {
                    const auto from = std::stoull(tok.substr(0, arrow));
                    const auto to = std::stoull(tok.substr(arrow + 1));
                    if (from < 1 || from > n || to < 1 || to > n) {
                        throw bad("edge '" + tok + "' out of range");
                    }
                    edges.emplace_back("w" + std::to_string(from), "w" + std::to_string(to));
                } catch (const SyntaxError&) {
                    throw;
                } catch (const std::exception&) {
                    throw bad("bad edge '" + tok + "'");
                }
            }
        }
        return FiniteFrame::from_edges(sort, std::move(worlds), edges);
    }
    throw bad("unknown frame kind (expected chain | offsets:... | window:... | edges:...)");
}

}  // namespace intlab

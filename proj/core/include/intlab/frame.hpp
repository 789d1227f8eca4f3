#ifndef INTLAB_FRAME_HPP
#define INTLAB_FRAME_HPP

#include "intlab/rational.hpp"
#include "intlab/types.hpp"

#include <functional>
#include <string>
#include <variant>
#include <vector>

namespace intlab {

/// A finite Kripke frame: an ordered world list and a 0/1 adjacency matrix,
/// row i / column j = 1 iff world i accesses world j.
class FiniteFrame {
public:
    FiniteFrame(SortId sort, std::vector<std::string> worlds,
                std::vector<std::vector<int>> adjacency);

    /// Builds the adjacency matrix from an edge list of world labels.
    static FiniteFrame from_edges(SortId sort, std::vector<std::string> worlds,
                                  const std::vector<std::pair<std::string, std::string>>& edges);

    const SortId& sort() const { return sort_; }
    const std::vector<std::string>& worlds() const { return worlds_; }
    std::size_t size() const { return worlds_.size(); }
    const std::vector<std::vector<int>>& adjacency() const { return adj_; }

    std::size_t world_pos(const std::string& label) const;
    int out_degree(std::size_t i) const;
    bool accessible(std::size_t i, std::size_t j) const { return adj_[i][j] == 1; }
    /// World positions j accessible from i, in world order.
    std::vector<std::size_t> successors(std::size_t i) const;

private:
    SortId sort_;
    std::vector<std::string> worlds_;
    std::vector<std::vector<int>> adj_;
};

/// A countably infinite frame over worlds indexed by the naturals, given by a
/// successor rule with finite out-degree everywhere.
class CountableFrame {
public:
    using Rule = std::function<std::vector<long long>(long long)>;

    /// i -> [i+1].
    static CountableFrame chain(SortId sort);
    /// i -> {i+d : d in deltas, i+d >= 0}, sorted.
    static CountableFrame offsets(SortId sort, std::vector<long long> deltas);
    static CountableFrame custom(SortId sort, Rule rule, std::string description = "custom");

    const SortId& sort() const { return sort_; }
    const std::string& description() const { return description_; }
    /// Sorted, deduplicated, non-negative successor indices.
    std::vector<long long> successors(long long i) const;

private:
    CountableFrame(SortId sort, Rule rule, std::string description);
    SortId sort_;
    Rule rule_;
    std::string description_;
};

/// A continuous frame on the rational line: from t the accessible set is the
/// half-open window [t+lo, t+hi). Requires lo < hi so the window always has
/// positive measure.
class ContinuousFrame {
public:
    ContinuousFrame(SortId sort, Rational lo, Rational hi);

    const SortId& sort() const { return sort_; }
    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    Rational window_measure() const { return hi_ - lo_; }

private:
    SortId sort_;
    Rational lo_;
    Rational hi_;
};

using SortFrame = std::variant<FiniteFrame, CountableFrame, ContinuousFrame>;

inline const SortId& frame_sort(const SortFrame& f) {
    return std::visit([](const auto& fr) -> const SortId& { return fr.sort(); }, f);
}

}  // namespace intlab

#endif  // INTLAB_FRAME_HPP

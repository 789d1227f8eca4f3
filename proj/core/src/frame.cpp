#include "intlab/frame.hpp"

#include "intlab/errors.hpp"

#include <algorithm>
#include <set>

namespace intlab {

FiniteFrame::FiniteFrame(SortId sort, std::vector<std::string> worlds,
                         std::vector<std::vector<int>> adjacency)
    : sort_(std::move(sort)), worlds_(std::move(worlds)), adj_(std::move(adjacency)) {
    if (worlds_.empty()) throw ModelError("frame '" + sort_.label() + "' has no worlds");
    std::set<std::string> seen;
    for (const auto& w : worlds_) {
        if (w.empty()) throw ModelError("frame '" + sort_.label() + "' has an empty world label");
        if (!seen.insert(w).second) {
            throw ModelError("frame '" + sort_.label() + "' repeats world '" + w + "'");
        }
    }
    if (adj_.size() != worlds_.size()) {
        throw ModelError("frame '" + sort_.label() + "': adjacency rows != world count");
    }
    for (const auto& row : adj_) {
        if (row.size() != worlds_.size()) {
            throw ModelError("frame '" + sort_.label() + "': adjacency columns != world count");
        }
        for (int x : row) {
            if (x != 0 && x != 1) {
                throw ModelError("frame '" + sort_.label() + "': adjacency entries must be 0 or 1");
            }
        }
    }
}

FiniteFrame FiniteFrame::from_edges(
    SortId sort, std::vector<std::string> worlds,
    const std::vector<std::pair<std::string, std::string>>& edges) {
    std::vector<std::vector<int>> adj(worlds.size(), std::vector<int>(worlds.size(), 0));
    const auto pos = [&](const std::string& label) -> std::size_t {
        const auto it = std::find(worlds.begin(), worlds.end(), label);
        if (it == worlds.end()) {
            throw ModelError("frame '" + sort.label() + "': edge references unknown world '" +
                             label + "'");
        }
        return static_cast<std::size_t>(it - worlds.begin());
    };
    for (const auto& [from, to] : edges) {
        adj[pos(from)][pos(to)] = 1;
    }
    return FiniteFrame(std::move(sort), std::move(worlds), std::move(adj));
}

std::size_t FiniteFrame::world_pos(const std::string& label) const {
    const auto it = std::find(worlds_.begin(), worlds_.end(), label);
    if (it == worlds_.end()) {
        throw ModelError("frame '" + sort_.label() + "' has no world '" + label + "'");
    }
    return static_cast<std::size_t>(it - worlds_.begin());
}

int FiniteFrame::out_degree(std::size_t i) const {
    int d = 0;
    for (int x : adj_.at(i)) d += x;
    return d;
}

std::vector<std::size_t> FiniteFrame::successors(std::size_t i) const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < adj_.at(i).size(); ++j) {
        if (adj_[i][j] == 1) out.push_back(j);
    }
    return out;
}

CountableFrame::CountableFrame(SortId sort, Rule rule, std::string description)
    : sort_(std::move(sort)), rule_(std::move(rule)), description_(std::move(description)) {}

CountableFrame CountableFrame::chain(SortId sort) {
    return CountableFrame(
        std::move(sort), [](long long i) { return std::vector<long long>{i + 1}; }, "chain");
}

CountableFrame CountableFrame::offsets(SortId sort, std::vector<long long> deltas) {
    std::string desc = "offsets:";
    for (std::size_t k = 0; k < deltas.size(); ++k) {
        if (k) desc += ",";
        desc += (deltas[k] >= 0 ? "+" : "") + std::to_string(deltas[k]);
    }
    return CountableFrame(
        std::move(sort),
        [deltas](long long i) {
            std::vector<long long> out;
            for (long long d : deltas) out.push_back(i + d);
            return out;
        },
        desc);
}

CountableFrame CountableFrame::custom(SortId sort, Rule rule, std::string description) {
    return CountableFrame(std::move(sort), std::move(rule), std::move(description));
}

std::vector<long long> CountableFrame::successors(long long i) const {
    std::vector<long long> out = rule_(i);
    out.erase(std::remove_if(out.begin(), out.end(), [](long long j) { return j < 0; }),
              out.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ContinuousFrame::ContinuousFrame(SortId sort, Rational lo, Rational hi)
    : sort_(std::move(sort)), lo_(std::move(lo)), hi_(std::move(hi)) {
    if (!(lo_ < hi_)) {
        throw ModelError("continuous frame '" + sort_.label() +
                         "': window requires lo < hi (accessible sets must have positive measure)");
    }
}

}  // namespace intlab

#ifndef INTLAB_TESTS_HELPERS_HPP
#define INTLAB_TESTS_HELPERS_HPP

#include <intlab/model.hpp>
#include <intlab/modelio.hpp>

#include <string>
#include <vector>

namespace testutil {

using namespace intlab;

/// The four-world frame used throughout: edges
/// {(1,2),(1,4),(2,3),(3,2),(4,4)}.
inline FiniteFrame four_world_frame(const std::string& sort = "w") {
    return FiniteFrame::from_edges(
        SortId(sort), {"w1", "w2", "w3", "w4"},
        {{"w1", "w2"}, {"w1", "w4"}, {"w2", "w3"}, {"w3", "w2"}, {"w4", "w4"}});
}

/// A model with no sorts (the extensional degenerate case) and n entities
/// e1..en (n <= 26 gets a..z-style names: a, b, c, ...).
inline IntensionalModel entities_model(std::size_t n) {
    IntensionalModel m;
    for (std::size_t i = 0; i < n; ++i) {
        m.entities.push_back(std::string(1, static_cast<char>('a' + i)));
    }
    return m;
}

inline IntensionalModel load_fixture(const std::string& name) {
    return load_model(std::string(INTLAB_MODELS_DIR) + "/" + name);
}

inline IntensionalModel four_world_model() { return load_fixture("fourworld.json"); }
inline IntensionalModel two_sort_model() { return load_fixture("twosort.json"); }

/// Builds a truth-typed intension table over the model's compound space from
/// bits in enumeration order.
inline Intension truth_intension(const IntensionalModel& m, const std::vector<int>& bits) {
    Intension out;
    const auto space = compound_index_space(m);
    for (std::size_t i = 0; i < space.size(); ++i) {
        out.table.emplace(m.compound_key(space[i]), DomainValue::tru(bits.at(i)));
    }
    return out;
}

}  // namespace testutil

#endif

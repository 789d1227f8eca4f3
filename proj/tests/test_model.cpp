#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <intlab/errors.hpp>
#include <intlab/model.hpp>

#include "helpers.hpp"

#include <set>

using namespace intlab;
using testutil::entities_model;
using testutil::four_world_frame;

TEST_CASE("truth domain enumerates 1 before 0") {
    const IntensionalModel m;
    const auto dom = enumerate_domain(SemType::truth(), m);
    REQUIRE(dom.size() == 2);
    CHECK(dom[0] == DomainValue::tru(1));
    CHECK(dom[1] == DomainValue::tru(0));
}

TEST_CASE("entity domain keeps declaration order") {
    const auto m = entities_model(3);
    const auto dom = enumerate_domain(SemType::entity(), m);
    REQUIRE(dom.size() == 3);
    CHECK(dom[0].ent_label() == "a");
    CHECK(dom[1].ent_label() == "b");
    CHECK(dom[2].ent_label() == "c");
}

TEST_CASE("characteristic functions over three entities") {
    const auto m = entities_model(3);
    const SemType et = SemType::func(SemType::entity(), SemType::truth());
    const auto dom = enumerate_domain(et, m);

    // Oracle: every characteristic function built directly from a bitmask.
    std::set<DomainValue> expected;
    for (int mask = 0; mask < 8; ++mask) {
        std::vector<FuncEntry> entries;
        for (int i = 0; i < 3; ++i) {
            entries.push_back(FuncEntry{DomainValue::ent(std::string(1, char('a' + i))),
                                        DomainValue::tru((mask >> i) & 1)});
        }
        expected.insert(DomainValue::func(SemType::entity(), SemType::truth(), entries));
    }
    CHECK(dom.size() == 8);
    CHECK(std::set<DomainValue>(dom.begin(), dom.end()) == expected);
}

TEST_CASE("function enumeration is lexicographic over the argument ordering") {
    const auto m = entities_model(2);
    const SemType et = SemType::func(SemType::entity(), SemType::truth());
    const auto dom = enumerate_domain(et, m);
    REQUIRE(dom.size() == 4);
    // First the all-1 function, and the first argument is most significant.
    CHECK(dom[0].func_apply(DomainValue::ent("a")) == DomainValue::tru(1));
    CHECK(dom[0].func_apply(DomainValue::ent("b")) == DomainValue::tru(1));
    CHECK(dom[1].func_apply(DomainValue::ent("a")) == DomainValue::tru(1));
    CHECK(dom[1].func_apply(DomainValue::ent("b")) == DomainValue::tru(0));
    CHECK(dom[2].func_apply(DomainValue::ent("a")) == DomainValue::tru(0));
    CHECK(dom[2].func_apply(DomainValue::ent("b")) == DomainValue::tru(1));
}

TEST_CASE("enumeration cardinality |<a,b>| = |b|^|a|") {
    auto m = entities_model(3);
    m.sorts.push_back(SortId("w"));
    m.frames.emplace(SortId("w"), four_world_frame());
    const std::vector<SemType> prims = {SemType::entity(), SemType::truth(),
                                        SemType::idx(SortId("w"))};
    for (const auto& a : prims) {
        for (const auto& b : prims) {
            const SemType f = SemType::func(a, b);
            const BigInt expect = boost::multiprecision::pow(
                domain_size(b, m), domain_size(a, m).convert_to<unsigned>());
            CHECK(domain_size(f, m) == expect);
            if (expect <= 4096) {
                CHECK(BigInt(enumerate_domain(f, m).size()) == expect);
            }
        }
    }
}

TEST_CASE("enumeration determinism") {
    const auto m = entities_model(3);
    const SemType t = SemType::func(SemType::entity(), SemType::truth());
    CHECK(enumerate_domain(t, m) == enumerate_domain(t, m));
}

TEST_CASE("enumeration blowup raises instead of hanging") {
    auto m = entities_model(5);
    m.enumeration_cap = 1000;
    // |<\<e,t>,t>| = 2^32 over 5 entities
    const SemType big = SemType::func(SemType::func(SemType::entity(), SemType::truth()),
                                      SemType::truth());
    CHECK_THROWS_AS(enumerate_domain(big, m), CombinatorialBlowup);
    // non-finite sorts are not enumerable
    IntensionalModel mc;
    mc.sorts.push_back(SortId("n"));
    mc.frames.emplace(SortId("n"), CountableFrame::chain(SortId("n")));
    CHECK_THROWS_AS(enumerate_domain(SemType::idx(SortId("n")), mc), CombinatorialBlowup);
}

TEST_CASE("compound index space is declaration-major") {
    IntensionalModel m;
    m.sorts.push_back(SortId("w"));
    m.frames.emplace(SortId("w"),
                     FiniteFrame::from_edges(SortId("w"), {"w1", "w2"}, {{"w1", "w2"}}));
    m.sorts.push_back(SortId("i"));
    m.frames.emplace(SortId("i"), FiniteFrame::from_edges(
                                      SortId("i"), {"t1", "t2", "t3"}, {{"t1", "t2"}}));
    const auto space = compound_index_space(m);
    REQUIRE(space.size() == 6);
    CHECK(space[0].compound_at(SortId("w")) == "w1");
    CHECK(space[0].compound_at(SortId("i")) == "t1");
    CHECK(space[1].compound_at(SortId("w")) == "w1");
    CHECK(space[1].compound_at(SortId("i")) == "t2");
    CHECK(space[3].compound_at(SortId("w")) == "w2");
    CHECK(space[3].compound_at(SortId("i")) == "t1");
}

TEST_CASE("single four-world sort gives four compounds") {
    IntensionalModel m;
    m.sorts.push_back(SortId("w"));
    m.frames.emplace(SortId("w"), four_world_frame());
    CHECK(compound_index_space(m).size() == 4);
}

TEST_CASE("zero declared sorts degenerate to one empty compound") {
    const IntensionalModel m;
    const auto space = compound_index_space(m);
    REQUIRE(space.size() == 1);
    CHECK(space[0].compound_assign().empty());
}

TEST_CASE("variant assignment") {
    const Assignment g0;
    const Assignment g1 = variant(g0, "x", DomainValue::ent("a"));
    CHECK(g1.at("x") == DomainValue::ent("a"));

    SUBCASE("overwrite") {
        const Assignment g2 = variant(g1, "x", DomainValue::ent("b"));
        CHECK(g2.at("x") == DomainValue::ent("b"));
        CHECK(g1.at("x") == DomainValue::ent("a"));  // value semantics
    }
    SUBCASE("extend") {
        const Assignment g2 = variant(g1, "y", DomainValue::ent("b"));
        CHECK(g2.at("x") == DomainValue::ent("a"));
        CHECK(g2.at("y") == DomainValue::ent("b"));
    }
    SUBCASE("idempotence") {
        CHECK(variant(variant(g0, "x", DomainValue::ent("a")), "x", DomainValue::ent("a")) ==
              variant(g0, "x", DomainValue::ent("a")));
    }
    SUBCASE("non-entity rejected") {
        CHECK_THROWS_AS(variant(g0, "x", DomainValue::tru(1)), TypeMismatch);
    }
    SUBCASE("unbound lookup") { CHECK_THROWS_AS(g0.at("z"), UnboundVariable); }
}

TEST_CASE("frame well-formedness: out-degrees match the edge list") {
    const auto f = four_world_frame();
    CHECK(f.out_degree(0) == 2);
    CHECK(f.out_degree(1) == 1);
    CHECK(f.out_degree(2) == 1);
    CHECK(f.out_degree(3) == 1);
    // row sums equal out-degrees by construction
    for (std::size_t i = 0; i < f.size(); ++i) {
        int row_sum = 0;
        for (int x : f.adjacency()[i]) row_sum += x;
        CHECK(row_sum == f.out_degree(i));
    }
    CHECK_THROWS_AS(FiniteFrame::from_edges(SortId("w"), {"w1"}, {{"w1", "nope"}}), ModelError);
    CHECK_THROWS_AS(FiniteFrame(SortId("w"), {"w1", "w2"}, {{1, 0}}), ModelError);
    CHECK_THROWS_AS(FiniteFrame(SortId("w"), {"w1"}, {{2}}), ModelError);
}

TEST_CASE("model validation catches missing and ill-typed intensions") {
    IntensionalModel m;
    m.sorts.push_back(SortId("w"));
    m.frames.emplace(SortId("w"),
                     FiniteFrame::from_edges(SortId("w"), {"w1", "w2"}, {{"w1", "w2"}}));
    m.entities = {"a"};

    Constant c{"phi", SemType::truth(), {}};
    c.intension.table.emplace(std::vector<std::string>{"w1"}, DomainValue::tru(1));
    m.constants.emplace("phi", c);
    CHECK_THROWS_AS(m.validate(), ModelError);  // not total: w2 missing

    m.constants.clear();
    c.intension.table.emplace(std::vector<std::string>{"w2"}, DomainValue::ent("a"));
    m.constants.emplace("phi", c);
    CHECK_THROWS_AS(m.validate(), ModelError);  // entity where t expected

    m.constants.clear();
    Constant ok{"phi", SemType::truth(), {}};
    ok.intension.table.emplace(std::vector<std::string>{"w1"}, DomainValue::tru(1));
    ok.intension.table.emplace(std::vector<std::string>{"w2"}, DomainValue::tru(0));
    m.constants.emplace("phi", ok);
    CHECK_NOTHROW(m.validate());

    SUBCASE("reserved sort ids") {
        IntensionalModel bad;
        bad.sorts.push_back(SortId("s"));
        bad.frames.emplace(SortId("s"),
                           FiniteFrame::from_edges(SortId("s"), {"x1"}, {}));
        CHECK_THROWS_AS(bad.validate(), ModelError);
    }
}

TEST_CASE("intension lookup is total over S for loaded fixtures") {
    const auto m = testutil::four_world_model();
    for (const auto& s : compound_index_space(m)) {
        for (const auto& [name, c] : m.constants) {
            CHECK(value_conforms(m.intension_at(name, s), c.type));
        }
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <intlab/errors.hpp>
#include <intlab/modelio.hpp>

#include "helpers.hpp"

using namespace intlab;

TEST_CASE("the four-world fixture loads and validates") {
    const auto m = testutil::four_world_model();
    CHECK(m.sorts.size() == 1);
    CHECK(m.entities == std::vector<std::string>{"ann", "bob"});
    const auto& f = m.finite_frame(SortId("w"));
    CHECK(f.worlds() == std::vector<std::string>{"w1", "w2", "w3", "w4"});
    CHECK(f.out_degree(0) == 2);
    CHECK(m.constants.count("phi") == 1);
    CHECK(m.constant("happy").type ==
          SemType::func(SemType::entity(), SemType::truth()));
    // rigid shorthand expands to a total table
    CHECK(m.constant("ann").intension.table.size() == 4);
}

TEST_CASE("the two-sort fixture loads with nested tables") {
    const auto m = testutil::two_sort_model();
    CHECK(m.sorts.size() == 2);
    CHECK(compound_index_space(m).size() == 4);
    CHECK(m.constant("loves").type ==
          SemType::func(SemType::entity(),
                        SemType::func(SemType::entity(), SemType::truth())));
    CHECK(m.constant("teacher").type == SemType::entity());
    const auto s = DomainValue::compound({{SortId("w"), "w2"}, {SortId("i"), "t1"}});
    CHECK(m.intension_at("teacher", s) == DomainValue::ent("c"));
}

TEST_CASE("type strings") {
    CHECK(parse_type("e") == SemType::entity());
    CHECK(parse_type("t") == SemType::truth());
    CHECK(parse_type("w") == SemType::idx(SortId("w")));
    CHECK(parse_type("<e,t>") == SemType::func(SemType::entity(), SemType::truth()));
    CHECK(parse_type("<e,<e,t>>") ==
          SemType::func(SemType::entity(),
                        SemType::func(SemType::entity(), SemType::truth())));
    CHECK(parse_type(" < e , t > ") == SemType::func(SemType::entity(), SemType::truth()));
    CHECK(parse_type("⟨e,t⟩") == SemType::func(SemType::entity(), SemType::truth()));
    CHECK(parse_type("<e,t>").to_string() == "<e,t>");
    CHECK_THROWS_AS(parse_type("<e,t"), SyntaxError);
    CHECK_THROWS_AS(parse_type("e t"), SyntaxError);
    CHECK_THROWS_AS(parse_type(""), SyntaxError);
}

TEST_CASE("malformed model files are rejected with model errors") {
    SUBCASE("invalid json") {
        CHECK_THROWS_AS(parse_model_text("{nope"), ModelError);
    }
    SUBCASE("non-total intension") {
        CHECK_THROWS_AS(parse_model_text(R"({
            "sorts": [{"id":"w","indices":["w1","w2"],"edges":[]}],
            "constants": [{"name":"p","type":"<s,t>","intension":{"w1":1}}]
        })"),
                        ModelError);
    }
    SUBCASE("value of the wrong type") {
        CHECK_THROWS_AS(parse_model_text(R"({
            "sorts": [{"id":"w","indices":["w1"],"edges":[]}],
            "constants": [{"name":"p","type":"<s,t>","intension":{"w1": 7}}]
        })"),
                        ModelError);
    }
    SUBCASE("edge mentioning an unknown world") {
        CHECK_THROWS_AS(parse_model_text(R"({
            "sorts": [{"id":"w","indices":["w1"],"edges":[["w1","zz"]]}]
        })"),
                        ModelError);
    }
    SUBCASE("reserved sort id") {
        CHECK_THROWS_AS(parse_model_text(R"({
            "sorts": [{"id":"s","indices":["s1"],"edges":[]}]
        })"),
                        ModelError);
    }
    SUBCASE("s outside the intension prefix") {
        CHECK_THROWS_AS(parse_model_text(R"({
            "sorts": [{"id":"w","indices":["w1"],"edges":[]}],
            "constants": [{"name":"p","type":"<s,<s,t>>","intension":{"w1":{"w1":1}}}]
        })"),
                        ModelError);
    }
    SUBCASE("function-typed arguments in files") {
        CHECK_THROWS_AS(parse_model_text(R"({
            "sorts": [{"id":"w","indices":["w1"],"edges":[]}],
            "entities": ["a"],
            "constants": [{"name":"Q","type":"<s,<<e,t>,t>>",
                           "intension":{"w1":{"whatever":1}}}]
        })"),
                        ModelError);
    }
    SUBCASE("duplicate constants") {
        CHECK_THROWS_AS(parse_model_text(R"({
            "sorts": [{"id":"w","indices":["w1"],"edges":[]}],
            "constants": [{"name":"p","type":"<s,t>","intension":{"w1":1}},
                          {"name":"p","type":"<s,t>","intension":{"w1":0}}]
        })"),
                        ModelError);
    }
    SUBCASE("unknown entity in a table") {
        CHECK_THROWS_AS(parse_model_text(R"({
            "sorts": [{"id":"w","indices":["w1"],"edges":[]}],
            "entities": ["a"],
            "constants": [{"name":"P","type":"<s,<e,t>>",
                           "intension":{"w1":{"a":1,"zz":0}}}]
        })"),
                        ModelError);
    }
}

TEST_CASE("zero-sort models are the extensional degenerate case") {
    const auto m = parse_model_text(R"({
        "entities": ["a","b"],
        "constants": [
            {"name":"happy","type":"<e,t>","intension":{"a":1,"b":0}},
            {"name":"ann","type":"e","intension":"a"}
        ]
    })");
    CHECK(m.sorts.empty());
    CHECK(compound_index_space(m).size() == 1);
    const auto s = compound_index_space(m)[0];
    CHECK(m.intension_at("ann", s) == DomainValue::ent("a"));
    CHECK(m.intension_at("happy", s).func_apply(DomainValue::ent("a")) == DomainValue::tru(1));
}

TEST_CASE("booleans are accepted as truth values") {
    const auto m = parse_model_text(R"({
        "sorts": [{"id":"w","indices":["w1"],"edges":[]}],
        "constants": [{"name":"p","type":"<s,t>","intension":{"w1": true}}]
    })");
    CHECK(m.intension_at("p", compound_index_space(m)[0]) == DomainValue::tru(1));
}

TEST_CASE("content hashing is deterministic and content-sensitive") {
    CHECK(content_hash_hex("abc") == content_hash_hex("abc"));
    CHECK(content_hash_hex("abc") != content_hash_hex("abd"));
    CHECK(content_hash_hex("").size() == 16);
}

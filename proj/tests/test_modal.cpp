#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <intlab/errors.hpp>
#include <intlab/modal.hpp>

#include "helpers.hpp"

#include <random>

using namespace intlab;
using testutil::four_world_frame;

namespace {

std::vector<int> bits_of(std::size_t mask, std::size_t n) {
    std::vector<int> bits(n, 0);
    for (std::size_t i = 0; i < n; ++i) bits[i] = (mask >> i) & 1 ? 1 : 0;
    return bits;
}

FiniteFrame random_frame(std::mt19937_64& rng, std::size_t n) {
    std::vector<std::string> worlds;
    for (std::size_t i = 1; i <= n; ++i) worlds.push_back("w" + std::to_string(i));
    std::vector<std::vector<int>> adj(n, std::vector<int>(n, 0));
    for (auto& row : adj) {
        for (auto& x : row) x = static_cast<int>(rng() % 2);
    }
    return FiniteFrame(SortId("w"), worlds, adj);
}

}  // namespace

TEST_CASE("four-world accumulation and necessity") {
    const auto f = four_world_frame();
    const Vec v = proposition_vec(f, {1, 1, 0, 1});
    CHECK(proposition_bits(f, v) == std::vector<int>{1, 1, 0, 1});

    const Vec acc = accumulate(f, v);
    const auto basis = frame_basis(f);
    CHECK(dense(acc, basis) == std::vector<Rational>{2, 0, 1, 1});

    CHECK(proposition_bits(f, box_finite(f, v)) == std::vector<int>{1, 0, 1, 1});
    CHECK(proposition_bits(f, dia_finite(f, v)) == std::vector<int>{1, 0, 1, 1});
}

TEST_CASE("accumulate edge cases") {
    const auto f = four_world_frame();
    SUBCASE("zero vector in, zero vector out") {
        const Vec z = proposition_vec(f, {0, 0, 0, 0});
        CHECK(accumulate(f, z).is_zero());
    }
    SUBCASE("empty relation gives the zero vector for any proposition") {
        const FiniteFrame empty(SortId("w"), {"w1", "w2", "w3"},
                                {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}});
        for (std::size_t mask = 0; mask < 8; ++mask) {
            CHECK(accumulate(empty, proposition_vec(empty, bits_of(mask, 3))).is_zero());
        }
    }
    SUBCASE("non-0/1 vectors are rejected") {
        const Vec bad = scale(Rational(2), proposition_vec(f, {1, 0, 0, 0}));
        CHECK_THROWS_AS(accumulate(f, bad), NotInImage);
    }
    SUBCASE("wrong space is rejected") {
        const FiniteFrame other(SortId("v"), {"w1", "w2", "w3", "w4"}, four_world_frame().adjacency());
        CHECK_THROWS_AS(accumulate(other, proposition_vec(f, {1, 1, 0, 1})), SpaceMismatch);
    }
}

TEST_CASE("out-degree zero: vacuous box, no dia") {
    const FiniteFrame f(SortId("w"), {"w1", "w2"}, {{0, 0}, {1, 0}});
    const Vec v = proposition_vec(f, {0, 0});
    CHECK(proposition_bits(f, box_finite(f, v)) == std::vector<int>{1, 0});
    CHECK(proposition_bits(f, dia_finite(f, v)) == std::vector<int>{0, 0});
}

TEST_CASE("infinite chain with support {5,11,19}") {
    const auto frame = CountableFrame::chain(SortId("n"));
    const auto p = CountableProp::finite_support({5, 11, 19});
    CHECK(box_countable(frame, p, 4) == 1);
    CHECK(box_countable(frame, p, 10) == 1);
    CHECK(box_countable(frame, p, 18) == 1);
    CHECK(box_countable(frame, p, 5) == 0);

    SUBCASE("possibility and necessity coincide on the chain") {
        for (long long i = 0; i <= 30; ++i) {
            CHECK(dia_countable(frame, p, i) == box_countable(frame, p, i));
        }
    }
    SUBCASE("exact verdict set over 0..30") {
        for (long long i = 0; i <= 30; ++i) {
            const int expect = (i == 4 || i == 10 || i == 18) ? 1 : 0;
            CHECK(box_countable(frame, p, i) == expect);
        }
    }
}

TEST_CASE("cofinite proposition false only at 7") {
    const auto frame = CountableFrame::chain(SortId("n"));
    const auto p = CountableProp::cofinite({7});
    CHECK(box_countable(frame, p, 6) == 0);
    for (long long i = 0; i <= 20; ++i) {
        if (i != 6) CHECK(box_countable(frame, p, i) == 1);
    }
}

TEST_CASE("offset frames clamp negative successors") {
    const auto frame = CountableFrame::offsets(SortId("n"), {-2, 1});
    CHECK(frame.successors(0) == std::vector<long long>{1});
    CHECK(frame.successors(5) == std::vector<long long>{3, 6});
    const auto p = CountableProp::finite_support({3, 6});
    CHECK(box_countable(frame, p, 5) == 1);
    CHECK(dia_countable(frame, p, 0) == 0);
}

TEST_CASE("memoizing evaluator agrees with the direct functions") {
    const auto frame = CountableFrame::offsets(SortId("n"), {1, 2});
    int calls = 0;
    const auto p = CountableProp::rule([&calls](long long i) {
        ++calls;
        return (i % 3 == 0) ? 1 : 0;
    });
    CountableModal eval(frame, p);
    for (long long i = 0; i <= 12; ++i) {
        CHECK(eval.box(i) == box_countable(frame, p, i));
        CHECK(eval.dia(i) == dia_countable(frame, p, i));
    }
    const int after_first = calls;
    for (long long i = 0; i <= 12; ++i) {
        eval.box(i);
        eval.dia(i);
    }
    CHECK(calls >= after_first);  // direct functions re-evaluated
}

TEST_CASE("continuous necessity with Cantor exceptions") {
    const ContinuousFrame frame(SortId("time"), Rational(-1), Rational(1));
    const MeasurableProp p = MeasurableProp(IntervalSet::interval(0, 10))
                                 .with_exception(NullSet::cantor(3, 5), Polarity::Remove);
    CHECK(accessible_window(frame, 4) == IntervalSet::interval(3, 5));
    CHECK(truth_measure_at(frame, p, 4) == 2);
    CHECK(box_continuous(frame, p, 4) == 1);

    SUBCASE("a positive-measure exception defeats necessity") {
        const MeasurableProp q(difference(IntervalSet::interval(0, 10),
                                          IntervalSet::interval(Rational(7, 2), 4)));
        CHECK(truth_measure_at(frame, q, 4) == Rational(3, 2));
        CHECK(box_continuous(frame, q, 4) == 0);
    }
}

TEST_CASE("continuous possibility needs positive measure") {
    const ContinuousFrame frame(SortId("time"), Rational(-1), Rational(1));
    const MeasurableProp p(IntervalSet::interval(Rational(17, 4), Rational(87, 20)));
    CHECK(truth_measure_at(frame, p, 4) == Rational(1, 10));
    CHECK(dia_continuous(frame, p, 4) == 1);

    SUBCASE("a measure-zero truth set does not suffice") {
        const MeasurableProp point =
            MeasurableProp(IntervalSet())
                .with_exception(NullSet::points({Rational(43, 10)}), Polarity::Add);
        CHECK(point.eval_at(Rational(43, 10)) == 1);
        CHECK(truth_measure_at(frame, point, 4) == 0);
        CHECK(dia_continuous(frame, point, 4) == 0);
    }
    SUBCASE("a Cantor truth set does not suffice either") {
        const MeasurableProp cantor_only =
            MeasurableProp(IntervalSet())
                .with_exception(NullSet::cantor(3, 5), Polarity::Add);
        CHECK(dia_continuous(frame, cantor_only, 4) == 0);
    }
}

TEST_CASE("duality on the four-world frame, all 16 propositions") {
    const auto f = four_world_frame();
    for (std::size_t mask = 0; mask < 16; ++mask) {
        CHECK(duality_check(f, proposition_vec(f, bits_of(mask, 4))).empty());
    }
}

TEST_CASE("duality on random frames up to 5 worlds") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + rng() % 5;
        const FiniteFrame f = random_frame(rng, n);
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
            CHECK(duality_check(f, proposition_vec(f, bits_of(mask, n))).empty());
        }
    }
}

TEST_CASE("duality on the empty-relation frame holds vacuously") {
    const FiniteFrame f(SortId("w"), {"w1", "w2"}, {{0, 0}, {0, 0}});
    for (std::size_t mask = 0; mask < 4; ++mask) {
        const Vec v = proposition_vec(f, bits_of(mask, 2));
        CHECK(proposition_bits(f, box_finite(f, v)) == std::vector<int>{1, 1});
        CHECK(proposition_bits(f, dia_finite(f, v)) == std::vector<int>{0, 0});
        CHECK(duality_check(f, v).empty());
    }
}

TEST_CASE("continuous duality on the Cantor fixture") {
    const ContinuousFrame frame(SortId("time"), Rational(-1), Rational(1));
    const MeasurableProp p = MeasurableProp(IntervalSet::interval(0, 10))
                                 .with_exception(NullSet::cantor(3, 5), Polarity::Remove);
    const IntervalSet universe = IntervalSet::interval(0, 10);
    CHECK(duality_check(frame, p, universe, {3, 4, 5}).empty());
    SUBCASE("the universe must cover the accessible window") {
        CHECK_THROWS_AS(duality_check(frame, p, universe, {20}), ModelError);
    }
}

TEST_CASE("monotonicity of box and dia") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 80; ++trial) {
        const std::size_t n = 2 + rng() % 4;
        const FiniteFrame f = random_frame(rng, n);
        const auto small = bits_of(rng() & ((1u << n) - 1), n);
        auto big = small;
        for (std::size_t i = 0; i < n; ++i) big[i] |= static_cast<int>(rng() % 2);
        const auto bs = proposition_bits(f, box_finite(f, proposition_vec(f, small)));
        const auto bb = proposition_bits(f, box_finite(f, proposition_vec(f, big)));
        const auto ds = proposition_bits(f, dia_finite(f, proposition_vec(f, small)));
        const auto db = proposition_bits(f, dia_finite(f, proposition_vec(f, big)));
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(bs[i] <= bb[i]);
            CHECK(ds[i] <= db[i]);
        }
    }
}

TEST_CASE("K axiom on random frames") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t n = 2 + rng() % 4;
        const FiniteFrame f = random_frame(rng, n);
        const auto v = bits_of(rng() & ((1u << n) - 1), n);
        const auto w = bits_of(rng() & ((1u << n) - 1), n);
        std::vector<int> impl(n);
        for (std::size_t i = 0; i < n; ++i) impl[i] = (1 - v[i]) | w[i];
        const auto bi = proposition_bits(f, box_finite(f, proposition_vec(f, impl)));
        const auto bv = proposition_bits(f, box_finite(f, proposition_vec(f, v)));
        const auto bw = proposition_bits(f, box_finite(f, proposition_vec(f, w)));
        for (std::size_t i = 0; i < n; ++i) CHECK((bi[i] & bv[i]) <= bw[i]);
    }
}

TEST_CASE("reflexive frames satisfy T") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + rng() % 5;
        FiniteFrame base = random_frame(rng, n);
        auto adj = base.adjacency();
        for (std::size_t i = 0; i < n; ++i) adj[i][i] = 1;
        const FiniteFrame f(SortId("w"), base.worlds(), adj);
        const auto v = bits_of(rng() & ((1u << n) - 1), n);
        const auto bv = proposition_bits(f, box_finite(f, proposition_vec(f, v)));
        for (std::size_t i = 0; i < n; ++i) CHECK(bv[i] <= v[i]);
    }
}

TEST_CASE("box and dia coincide on uniform out-degree-one frames") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + rng() % 4;
        std::vector<std::string> worlds;
        for (std::size_t i = 1; i <= n; ++i) worlds.push_back("w" + std::to_string(i));
        std::vector<std::vector<int>> adj(n, std::vector<int>(n, 0));
        for (std::size_t i = 0; i < n; ++i) adj[i][rng() % n] = 1;
        const FiniteFrame f(SortId("w"), worlds, adj);
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
            const Vec v = proposition_vec(f, bits_of(mask, n));
            CHECK(box_finite(f, v) == dia_finite(f, v));
        }
    }
}

TEST_CASE("null robustness: exceptions never change a continuous verdict") {
    std::mt19937_64 rng(59);
    const ContinuousFrame frame(SortId("time"), Rational(-1), Rational(1));
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<std::pair<Rational, Rational>> ivs;
        for (int k = 0; k < 3; ++k) {
            const Rational a(static_cast<long long>(rng() % 20), 2);
            ivs.emplace_back(a, a + Rational(1 + static_cast<long long>(rng() % 6), 2));
        }
        const MeasurableProp plain{IntervalSet::from_intervals(ivs)};
        const MeasurableProp noisy =
            plain.with_exception(NullSet::cantor(0, 7), Polarity::Remove)
                .with_exception(NullSet::points({Rational(1), Rational(9, 2)}), Polarity::Add);
        for (int tt = 0; tt <= 10; ++tt) {
            const Rational t(tt);
            CHECK(box_continuous(frame, plain, t) == box_continuous(frame, noisy, t));
            CHECK(dia_continuous(frame, plain, t) == dia_continuous(frame, noisy, t));
        }
    }
}

TEST_CASE("frame DSL") {
    SUBCASE("chain") {
        const SortFrame f = parse_frame_dsl("chain", SortId("n"));
        CHECK(std::get<CountableFrame>(f).successors(4) == std::vector<long long>{5});
    }
    SUBCASE("offsets") {
        const SortFrame f = parse_frame_dsl("offsets:+1,+2", SortId("n"));
        CHECK(std::get<CountableFrame>(f).successors(3) == std::vector<long long>{4, 5});
    }
    SUBCASE("window") {
        const SortFrame f = parse_frame_dsl("window:-1,1", SortId("time"));
        const auto& cf = std::get<ContinuousFrame>(f);
        CHECK(cf.lo() == Rational(-1));
        CHECK(cf.hi() == Rational(1));
        const SortFrame h = parse_frame_dsl("window:0,0.5", SortId("d"));
        CHECK(std::get<ContinuousFrame>(h).hi() == Rational(1, 2));
    }
    SUBCASE("edges") {
        const SortFrame f = parse_frame_dsl("edges:4:1>2,1>4,2>3,3>2,4>4", SortId("w"));
        const auto& ff = std::get<FiniteFrame>(f);
        CHECK(ff.adjacency() == four_world_frame().adjacency());
    }
    SUBCASE("rejects malformed input") {
        CHECK_THROWS_AS(parse_frame_dsl("windows:1,2", SortId("x")), SyntaxError);
        CHECK_THROWS_AS(parse_frame_dsl("edges:2:3>1", SortId("x")), SyntaxError);
        CHECK_THROWS_AS(parse_frame_dsl("window:1", SortId("x")), SyntaxError);
    }
    SUBCASE("degenerate windows are rejected") {
        CHECK_THROWS_AS(parse_frame_dsl("window:1,1", SortId("x")), ModelError);
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <intlab/errors.hpp>
#include <intlab/logic.hpp>

using namespace intlab;

namespace {

std::vector<BasisLabel> truth_rows() { return {truth_label(1), truth_label(0)}; }

std::vector<BasisLabel> tensor_cols(unsigned arity) {
    std::vector<BasisLabel> cols;
    for (std::size_t row = 0; row < (std::size_t{1} << arity); ++row) {
        std::vector<DomainValue> parts;
        for (unsigned i = 0; i < arity; ++i) {
            const std::size_t digit = (row >> (arity - 1 - i)) & 1;
            parts.push_back(DomainValue::tru(digit == 0 ? 1 : 0));
        }
        cols.push_back(BasisLabel(parts));
    }
    return cols;
}

}  // namespace

TEST_CASE("negation matrix") {
    const auto N = op_matrix(builtin_table(LogicBuiltin::Not));
    CHECK(dense(N, truth_rows(), tensor_cols(1)) ==
          std::vector<std::vector<Rational>>{{0, 1}, {1, 0}});
}

TEST_CASE("conjunction matrix") {
    const auto C = op_matrix(builtin_table(LogicBuiltin::And));
    CHECK(dense(C, truth_rows(), tensor_cols(2)) ==
          std::vector<std::vector<Rational>>{{1, 0, 0, 0}, {0, 1, 1, 1}});
}

TEST_CASE("xor matrix agrees with its truth table on every input") {
    const TruthTable tt = builtin_table(LogicBuiltin::Xor);
    const auto M = op_matrix(tt);
    for (int a : {1, 0}) {
        for (int b : {1, 0}) {
            const Vec out = apply_logic(M, {truth_vec(a), truth_vec(b)});
            CHECK(truth_bit(out) == tt.eval({a, b}));
            CHECK(truth_bit(out) == (a ^ b));
        }
    }
}

TEST_CASE("operator application equals table lookup, all 16 binary tables") {
    for (unsigned code = 0; code < 16; ++code) {
        std::vector<int> outputs;
        for (int row = 3; row >= 0; --row) outputs.push_back((code >> row) & 1);
        const TruthTable tt(2, outputs);
        const auto M = op_matrix(tt);
        for (int a : {1, 0}) {
            for (int b : {1, 0}) {
                CHECK(truth_bit(apply_logic(M, {truth_vec(a), truth_vec(b)})) == tt.eval({a, b}));
            }
        }
    }
}

TEST_CASE("soundness for all ternary tables") {
    for (unsigned code = 0; code < 256; ++code) {
        std::vector<int> outputs;
        for (int row = 7; row >= 0; --row) outputs.push_back((code >> row) & 1);
        const TruthTable tt(3, outputs);
        const auto M = op_matrix(tt);
        for (int a : {1, 0}) {
            for (int b : {1, 0}) {
                for (int c : {1, 0}) {
                    CHECK(truth_bit(apply_logic(M, {truth_vec(a), truth_vec(b), truth_vec(c)})) ==
                          tt.eval({a, b, c}));
                }
            }
        }
    }
}

TEST_CASE("basic applications") {
    const auto N = op_matrix(builtin_table(LogicBuiltin::Not));
    CHECK(apply_logic(N, {truth_vec(1)}) == truth_vec(0));
    const auto C = op_matrix(builtin_table(LogicBuiltin::And));
    CHECK(apply_logic(C, {truth_vec(1), truth_vec(1)}) == truth_vec(1));
    CHECK(apply_logic(C, {truth_vec(1), truth_vec(0)}) == truth_vec(0));
}

TEST_CASE("De Morgan at the matrix level") {
    const auto N = op_matrix(builtin_table(LogicBuiltin::Not));
    const auto C = op_matrix(builtin_table(LogicBuiltin::And));
    const auto O = op_matrix(builtin_table(LogicBuiltin::Or));
    for (int a : {1, 0}) {
        for (int b : {1, 0}) {
            const Vec lhs = apply_logic(N, {apply_logic(O, {truth_vec(a), truth_vec(b)})});
            const Vec rhs = apply_logic(C, {apply_logic(N, {truth_vec(a)}),
                                            apply_logic(N, {truth_vec(b)})});
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("superposed arguments are rejected") {
    const auto N = op_matrix(builtin_table(LogicBuiltin::Not));
    const Vec half = add(scale(Rational(1, 2), truth_vec(1)), scale(Rational(1, 2), truth_vec(0)));
    CHECK_THROWS_AS(apply_logic(N, {half}), NotInImage);
    SUBCASE("arity mismatch") {
        CHECK_THROWS_AS(apply_logic(N, {truth_vec(1), truth_vec(0)}), SpaceMismatch);
    }
}

TEST_CASE("table construction guards") {
    CHECK_THROWS_AS(TruthTable(0, {}), CombinatorialBlowup);
    CHECK_THROWS_AS(TruthTable(17, {}), CombinatorialBlowup);
    CHECK_THROWS_AS(TruthTable(1, {1}), TypeMismatch);
    CHECK_THROWS_AS(TruthTable(1, {1, 2}), TypeMismatch);
}

#include "intlab/logic.hpp"

#include "intlab/errors.hpp"

namespace intlab {

namespace {

const IntensionalModel& empty_model() {
    static const IntensionalModel m{};
    return m;
}

}  // namespace

TruthTable::TruthTable(unsigned arity, std::vector<int> outputs)
    : arity_(arity), outputs_(std::move(outputs)) {
    if (arity_ < 1 || arity_ > 16) {
        throw CombinatorialBlowup("truth-table arity must be in [1,16], got " +
                                  std::to_string(arity_));
    }
    if (outputs_.size() != (std::size_t{1} << arity_)) {
        throw TypeMismatch("truth table needs " + std::to_string(std::size_t{1} << arity_) +
                           " rows, got " + std::to_string(outputs_.size()));
    }
    for (int b : outputs_) {
        if (b != 0 && b != 1) throw TypeMismatch("truth-table outputs must be 0 or 1");
    }
}

TruthTable TruthTable::from_fn(unsigned arity,
                               const std::function<int(const std::vector<int>&)>& fn) {
    std::vector<int> outputs;
    const std::size_t n = std::size_t{1} << arity;
    outputs.reserve(n);
    for (std::size_t row = 0; row < n; ++row) {
        std::vector<int> bits(arity, 0);
        // Tensor label order: first argument most significant, 1 before 0.
        for (unsigned i = 0; i < arity; ++i) {
            const std::size_t digit = (row >> (arity - 1 - i)) & 1;
            bits[i] = digit == 0 ? 1 : 0;
        }
        outputs.push_back(fn(bits));
    }
    return TruthTable(arity, std::move(outputs));
}

int TruthTable::eval(const std::vector<int>& bits) const {
    if (bits.size() != arity_) {
        throw SpaceMismatch("truth table of arity " + std::to_string(arity_) + " applied to " +
                            std::to_string(bits.size()) + " arguments");
    }
    std::size_t row = 0;
    for (unsigned i = 0; i < arity_; ++i) {
        if (bits[i] != 0 && bits[i] != 1) throw TypeMismatch("truth inputs must be 0 or 1");
        row = (row << 1) | (bits[i] == 1 ? 0u : 1u);
    }
    return outputs_[row];
}

const char* builtin_name(LogicBuiltin op) {
    switch (op) {
        case LogicBuiltin::Not: return "not";
        case LogicBuiltin::And: return "and";
        case LogicBuiltin::Or: return "or";
        case LogicBuiltin::Implies: return "implies";
        case LogicBuiltin::Iff: return "iff";
        case LogicBuiltin::Xor: return "xor";
    }
    return "?";
}

unsigned builtin_arity(LogicBuiltin op) { return op == LogicBuiltin::Not ? 1u : 2u; }

TruthTable builtin_table(LogicBuiltin op) {
    switch (op) {
        case LogicBuiltin::Not:
            return TruthTable::from_fn(1, [](const std::vector<int>& b) { return 1 - b[0]; });
        case LogicBuiltin::And:
            return TruthTable::from_fn(2, [](const std::vector<int>& b) { return b[0] & b[1]; });
        case LogicBuiltin::Or:
            return TruthTable::from_fn(2, [](const std::vector<int>& b) { return b[0] | b[1]; });
        case LogicBuiltin::Implies:
            return TruthTable::from_fn(2,
                                       [](const std::vector<int>& b) { return (1 - b[0]) | b[1]; });
        case LogicBuiltin::Iff:
            return TruthTable::from_fn(
                2, [](const std::vector<int>& b) { return b[0] == b[1] ? 1 : 0; });
        case LogicBuiltin::Xor:
            return TruthTable::from_fn(2, [](const std::vector<int>& b) { return b[0] ^ b[1]; });
    }
    throw TypeMismatch("unknown builtin");
}

LinMap op_matrix(const TruthTable& tt) {
    MultiFunc f;
    f.arg_types.assign(tt.arity(), SemType::truth());
    f.result_type = SemType::truth();
    f.name = "truth-table";
    f.fn = [&tt](const std::vector<DomainValue>& args) {
        std::vector<int> bits;
        bits.reserve(args.size());
        for (const auto& a : args) bits.push_back(a.tru_bit());
        return DomainValue::tru(tt.eval(bits));
    };
    return lift(f, empty_model());
}

Vec truth_vec(int bit) { return Vec::unit(VSpace::of(SemType::truth()), truth_label(bit)); }

BasisLabel truth_label(int bit) { return BasisLabel(DomainValue::tru(bit)); }

int truth_bit(const Vec& v) {
    if (v.space() != VSpace::of(SemType::truth())) {
        throw SpaceMismatch("not a vector of the truth space: " + v.space().to_string());
    }
    if (v.entries().size() != 1) {
        throw NotInImage("superposition is not a truth value: " + v.to_text());
    }
    const auto& [label, c] = *v.entries().begin();
    if (c != 1) throw NotInImage("non-unit truth coefficient " + to_string(c));
    return label.single().tru_bit();
}

Vec apply_logic(const LinMap& m, const std::vector<Vec>& args) {
    if (m.dom().axes().size() != args.size()) {
        throw SpaceMismatch("operator of arity " + std::to_string(m.dom().axes().size()) +
                            " applied to " + std::to_string(args.size()) + " arguments");
    }
    if (args.empty()) throw SpaceMismatch("apply_logic needs at least one argument");
    for (const auto& a : args) {
        truth_bit(a);  // validates: truth basis vector, no superpositions
    }
    Vec t = args[0];
    for (std::size_t i = 1; i < args.size(); ++i) t = tensor(t, args[i]);
    return apply_lin(m, t).vec();
}

}  // namespace intlab

#ifndef INTLAB_LOGIC_HPP
#define INTLAB_LOGIC_HPP

#include "intlab/embed.hpp"
#include "intlab/vec.hpp"

#include <functional>
#include <string>
#include <vector>

namespace intlab {

/// A total n-ary truth function, rows indexed by input tuples in tensor label
/// order (1 before 0, first argument most significant).
class TruthTable {
public:
    /// outputs.size() must be 2^arity; arity in [1, 16].
    TruthTable(unsigned arity, std::vector<int> outputs);
    static TruthTable from_fn(unsigned arity, const std::function<int(const std::vector<int>&)>& fn);

    unsigned arity() const { return arity_; }
    const std::vector<int>& outputs() const { return outputs_; }
    int eval(const std::vector<int>& bits) const;

private:
    unsigned arity_;
    std::vector<int> outputs_;
};

enum class LogicBuiltin { Not, And, Or, Implies, Iff, Xor };

const char* builtin_name(LogicBuiltin op);
unsigned builtin_arity(LogicBuiltin op);
TruthTable builtin_table(LogicBuiltin op);

/// The 2 x 2^n operator matrix M of a truth table: applying M to the tensor
/// product of truth basis vectors reproduces the table.
LinMap op_matrix(const TruthTable& tt);

/// Tensor-then-multiply application. Every argument must be a truth basis
/// vector (NotInImage for superpositions); arity must match (SpaceMismatch).
Vec apply_logic(const LinMap& m, const std::vector<Vec>& args);

/// Truth basis vectors and their canonical labels.
Vec truth_vec(int bit);
BasisLabel truth_label(int bit);
/// The bit of a truth basis vector; NotInImage if v is not one.
int truth_bit(const Vec& v);

}  // namespace intlab

#endif  // INTLAB_LOGIC_HPP

#ifndef INTLAB_EMBED_HPP
#define INTLAB_EMBED_HPP

#include "intlab/model.hpp"
#include "intlab/vec.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace intlab {

/// The recursive embedding h: primitives go to unit basis vectors, function
/// values to linear maps whose column at b_a is the embedding of f(a).
/// Injective; TypeMismatch if the value is not of the given type.
VecValue embed(const DomainValue& value, const SemType& type, const IntensionalModel& model);

/// h_S: a compound index to its unit basis vector in the compound space.
Vec embed_compound(const DomainValue& compound);

/// Left inverse of embed on its image. Throws NotInImage when v is not
/// exactly the embedding of some value of the given type (superpositions,
/// non-unit coefficients, partial or extra columns).
DomainValue unembed(const VecValue& v, const SemType& type, const IntensionalModel& model);

/// Structural inversion without domain-totality checks; nullopt when the
/// value is visibly outside every image.
std::optional<DomainValue> try_unembed(const VecValue& v);

/// An n-ary semantic function between enumerable domains, for lifting.
struct MultiFunc {
    std::vector<SemType> arg_types;
    SemType result_type = SemType::truth();
    std::function<DomainValue(const std::vector<DomainValue>&)> fn;
    std::string name = "f";
};

/// The multilinear lift f~: a map on the tensor space of the argument spaces
/// with a column at every tuple of argument values, satisfying
/// column(a1,...,an) = embed(f(a1,...,an)). Arity 1 coincides with embed.
LinMap lift(const MultiFunc& f, const IntensionalModel& model);

/// Lift of a unary function value (its embedding as an operator).
LinMap lift(const DomainValue& func_value, const IntensionalModel& model);

/// Applies a map to a vector-model value. Vec arguments use the linear
/// extension; LinMap arguments (Hom-space elements) are recognized as image
/// points and dispatched to their column. NotInImage if recognition fails.
VecValue apply_lin_value(const LinMap& m, const VecValue& arg, bool* missing_column = nullptr);

/// Composition g . f of linear maps; f.cod must equal g.dom.
LinMap compose_lin(const LinMap& g, const LinMap& f);

/// The intension of a constant as a linear operator from the compound index
/// space to the space of its extensional type: column at b_s = embed(I(c)(s)).
LinMap intension_operator(const Constant& c, const IntensionalModel& model);

/// The tensor-product form of a compound index's label: per-sort index values
/// in declaration order. embed_compound(s) corresponds to the unit vector at
/// this label under the canonical isomorphism.
BasisLabel compound_tensor_label(const DomainValue& compound, const IntensionalModel& model);

}  // namespace intlab

#endif  // INTLAB_EMBED_HPP

#ifndef INTLAB_VEC_HPP
#define INTLAB_VEC_HPP

#include "intlab/rational.hpp"
#include "intlab/value.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace intlab {

/// A basis vector's label: a nonempty tuple of domain values. Single-part
/// labels index primitive spaces and Hom-space image coordinates; longer
/// tuples index tensor-product spaces (built left to right).
class BasisLabel {
public:
    explicit BasisLabel(DomainValue single);
    explicit BasisLabel(std::vector<DomainValue> parts);

    const std::vector<DomainValue>& parts() const { return parts_; }
    /// Throws unless the label has exactly one part.
    const DomainValue& single() const;

    static BasisLabel concat(const BasisLabel& a, const BasisLabel& b);

    int compare(const BasisLabel& other) const;
    friend bool operator==(const BasisLabel& a, const BasisLabel& b) { return a.compare(b) == 0; }
    friend bool operator!=(const BasisLabel& a, const BasisLabel& b) { return a.compare(b) != 0; }
    friend bool operator<(const BasisLabel& a, const BasisLabel& b) { return a.compare(b) < 0; }

    std::string to_string() const;

private:
    std::vector<DomainValue> parts_;
};

/// One tensor factor: the basis-labeled space of a semantic type, or the
/// compound index space S.
class Axis {
public:
    static Axis of(SemType type) { return Axis(std::move(type)); }
    static Axis compound() { return Axis(std::nullopt); }

    bool is_compound() const { return !type_.has_value(); }
    const SemType& type() const;

    friend bool operator==(const Axis& a, const Axis& b) { return a.type_ == b.type_; }
    friend bool operator!=(const Axis& a, const Axis& b) { return !(a == b); }

    std::string to_string() const;

private:
    explicit Axis(std::optional<SemType> t) : type_(std::move(t)) {}
    std::optional<SemType> type_;
};

/// A vector-space descriptor: an ordered list of tensor factors. Most spaces
/// are single-axis; tensor products concatenate axes.
class VSpace {
public:
    static VSpace of(SemType type);
    static VSpace compound();
    static VSpace tensor(const VSpace& a, const VSpace& b);

    const std::vector<Axis>& axes() const { return axes_; }
    bool single() const { return axes_.size() == 1; }
    /// Throws unless single-axis.
    const Axis& axis() const;

    friend bool operator==(const VSpace& a, const VSpace& b) { return a.axes_ == b.axes_; }
    friend bool operator!=(const VSpace& a, const VSpace& b) { return !(a == b); }

    std::string to_string() const;

private:
    explicit VSpace(std::vector<Axis> axes) : axes_(std::move(axes)) {}
    std::vector<Axis> axes_;
};

/// A finite-support vector over labeled basis elements with exact rational
/// coefficients. Zero entries are never stored; representation is canonical.
class Vec {
public:
    static Vec zero(VSpace space);
    static Vec unit(VSpace space, BasisLabel at);
    /// Prunes zero coefficients.
    static Vec from_entries(VSpace space, std::map<BasisLabel, Rational> entries);

    const VSpace& space() const { return space_; }
    const std::map<BasisLabel, Rational>& entries() const { return entries_; }
    Rational coeff(const BasisLabel& label) const;
    bool is_zero() const { return entries_.empty(); }

    friend bool operator==(const Vec& a, const Vec& b) {
        return a.space_ == b.space_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }

    /// Canonical serialization: one "label: scalar" line per entry, sorted by
    /// label; the zero vector renders as "0".
    std::string to_text() const;

private:
    explicit Vec(VSpace space) : space_(std::move(space)) {}
    VSpace space_;
    std::map<BasisLabel, Rational> entries_;
};

class VecValue;
struct LinColumn;

/// A linear map given by its action on basis labels of the domain. Columns
/// are stored only for the labels the map was constructed with; applying it
/// to an absent label contributes zero (callers may observe this through the
/// missing-column flag of apply_lin).
class LinMap {
public:
    LinMap(VSpace dom, VSpace cod, std::vector<LinColumn> columns);
    static LinMap empty(VSpace dom, VSpace cod);

    const VSpace& dom() const { return dom_; }
    const VSpace& cod() const { return cod_; }
    const std::vector<LinColumn>& columns() const { return columns_; }
    /// nullptr when no column is stored for the label.
    const VecValue* column(const BasisLabel& label) const;

    friend bool operator==(const LinMap& a, const LinMap& b);
    friend bool operator!=(const LinMap& a, const LinMap& b) { return !(a == b); }

    /// One block per column: "[label] ->" then the column's text indented.
    std::string to_text() const;

private:
    VSpace dom_;
    VSpace cod_;
    std::vector<LinColumn> columns_;  // sorted by label
};

/// A value of the vector-space model: a Vec for primitive and tensor spaces,
/// a LinMap for Hom spaces.
class VecValue {
public:
    VecValue(Vec v) : v_(std::move(v)) {}
    VecValue(LinMap m) : v_(std::move(m)) {}

    bool is_vec() const { return std::holds_alternative<Vec>(v_); }
    bool is_lin() const { return std::holds_alternative<LinMap>(v_); }
    const Vec& vec() const;
    const LinMap& lin() const;

    friend bool operator==(const VecValue& a, const VecValue& b);
    friend bool operator!=(const VecValue& a, const VecValue& b) { return !(a == b); }

    std::string to_text() const;

private:
    std::variant<Vec, LinMap> v_;
};

struct LinColumn {
    BasisLabel label;
    VecValue value;
};

/// The zero element of a space: a LinMap with no columns for Hom spaces
/// (single function-type axis), a zero Vec otherwise.
VecValue zero_value(const VSpace& space);

VecValue add(const VecValue& a, const VecValue& b);
VecValue scale(const Rational& c, const VecValue& v);
Vec add(const Vec& a, const Vec& b);
Vec scale(const Rational& c, const Vec& v);

/// Kronecker product: concatenates axes and pairs labels; coefficients
/// multiply.
Vec tensor(const Vec& u, const Vec& v);

/// Applies m to v: the linear extension of the stored columns. If v has
/// support on a label without a column, that term contributes zero and
/// *missing_column (when given) is set.
VecValue apply_lin(const LinMap& m, const Vec& v, bool* missing_column = nullptr);

/// Dense rendering against an explicit basis order (for display and
/// entry-for-entry matrix checks).
std::vector<Rational> dense(const Vec& v, const std::vector<BasisLabel>& basis);
std::vector<std::vector<Rational>> dense(const LinMap& m, const std::vector<BasisLabel>& rows,
                                         const std::vector<BasisLabel>& cols);

}  // namespace intlab

#endif  // INTLAB_VEC_HPP

#include "intlab/vec.hpp"

#include "intlab/errors.hpp"

#include <algorithm>
#include <sstream>

namespace intlab {

BasisLabel::BasisLabel(DomainValue single) { parts_.push_back(std::move(single)); }

BasisLabel::BasisLabel(std::vector<DomainValue> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw SpaceMismatch("a basis label needs at least one part");
}

const DomainValue& BasisLabel::single() const {
    if (parts_.size() != 1) {
        throw SpaceMismatch("tensor label " + to_string() + " used where a single label is needed");
    }
    return parts_[0];
}

BasisLabel BasisLabel::concat(const BasisLabel& a, const BasisLabel& b) {
    std::vector<DomainValue> parts = a.parts_;
    parts.insert(parts.end(), b.parts_.begin(), b.parts_.end());
    return BasisLabel(std::move(parts));
}

int BasisLabel::compare(const BasisLabel& other) const {
    if (parts_.size() != other.parts_.size()) {
        return parts_.size() < other.parts_.size() ? -1 : 1;
    }
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        const int c = parts_[i].compare(other.parts_[i]);
        if (c != 0) return c;
    }
    return 0;
}

std::string BasisLabel::to_string() const {
    if (parts_.size() == 1) return parts_[0].to_string();
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += parts_[i].to_string();
    }
    return out + ")";
}

const SemType& Axis::type() const {
    if (!type_) throw SpaceMismatch("the compound index space has no SemType");
    return *type_;
}

std::string Axis::to_string() const { return type_ ? "S_" + type_->to_string() : "S_S"; }

VSpace VSpace::of(SemType type) { return VSpace({Axis::of(std::move(type))}); }

VSpace VSpace::compound() { return VSpace({Axis::compound()}); }

VSpace VSpace::tensor(const VSpace& a, const VSpace& b) {
    std::vector<Axis> axes = a.axes_;
    axes.insert(axes.end(), b.axes_.begin(), b.axes_.end());
    return VSpace(std::move(axes));
}

const Axis& VSpace::axis() const {
    if (axes_.size() != 1) throw SpaceMismatch("tensor space " + to_string() + " is not single-axis");
    return axes_[0];
}

std::string VSpace::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < axes_.size(); ++i) {
        if (i) out += "(x)";
        out += axes_[i].to_string();
    }
    return out;
}

Vec Vec::zero(VSpace space) { return Vec(std::move(space)); }

Vec Vec::unit(VSpace space, BasisLabel at) {
    Vec v(std::move(space));
    v.entries_.emplace(std::move(at), Rational(1));
    return v;
}

Vec Vec::from_entries(VSpace space, std::map<BasisLabel, Rational> entries) {
    Vec v(std::move(space));
    for (auto& [label, c] : entries) {
        if (c != 0) v.entries_.emplace(label, c);
    }
    return v;
}

Rational Vec::coeff(const BasisLabel& label) const {
    const auto it = entries_.find(label);
    return it == entries_.end() ? Rational(0) : it->second;
}

std::string Vec::to_text() const {
    if (entries_.empty()) return "0\n";
    std::string out;
    for (const auto& [label, c] : entries_) {
        out += label.to_string() + ": " + to_string(c) + "\n";
    }
    return out;
}

LinMap::LinMap(VSpace dom, VSpace cod, std::vector<LinColumn> columns)
    : dom_(std::move(dom)), cod_(std::move(cod)), columns_(std::move(columns)) {
    std::sort(columns_.begin(), columns_.end(),
              [](const LinColumn& a, const LinColumn& b) { return a.label < b.label; });
    for (std::size_t i = 1; i < columns_.size(); ++i) {
        if (columns_[i - 1].label == columns_[i].label) {
            throw SpaceMismatch("duplicate column label " + columns_[i].label.to_string());
        }
    }
}

LinMap LinMap::empty(VSpace dom, VSpace cod) {
    return LinMap(std::move(dom), std::move(cod), {});
}

const VecValue* LinMap::column(const BasisLabel& label) const {
    const auto it = std::lower_bound(
        columns_.begin(), columns_.end(), label,
        [](const LinColumn& c, const BasisLabel& l) { return c.label < l; });
    if (it == columns_.end() || !(it->label == label)) return nullptr;
    return &it->value;
}

bool operator==(const LinMap& a, const LinMap& b) {
    if (a.dom_ != b.dom_ || a.cod_ != b.cod_ || a.columns_.size() != b.columns_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.columns_.size(); ++i) {
        if (a.columns_[i].label != b.columns_[i].label) return false;
        if (!(a.columns_[i].value == b.columns_[i].value)) return false;
    }
    return true;
}

std::string LinMap::to_text() const {
    if (columns_.empty()) return "(no columns)\n";
    std::string out;
    for (const auto& col : columns_) {
        out += "[" + col.label.to_string() + "] ->\n";
        std::istringstream body(col.value.to_text());
        std::string line;
        while (std::getline(body, line)) out += "  " + line + "\n";
    }
    return out;
}

const Vec& VecValue::vec() const {
    const auto* v = std::get_if<Vec>(&v_);
    if (!v) throw SpaceMismatch("expected a vector, found a linear map");
    return *v;
}

const LinMap& VecValue::lin() const {
    const auto* m = std::get_if<LinMap>(&v_);
    if (!m) throw SpaceMismatch("expected a linear map, found a vector");
    return *m;
}

bool operator==(const VecValue& a, const VecValue& b) {
    if (a.is_vec() != b.is_vec()) return false;
    return a.is_vec() ? a.vec() == b.vec() : a.lin() == b.lin();
}

std::string VecValue::to_text() const { return is_vec() ? vec().to_text() : lin().to_text(); }

VecValue zero_value(const VSpace& space) {
    if (space.single() && !space.axis().is_compound() && space.axis().type().is_func()) {
        const SemType& t = space.axis().type();
        return LinMap::empty(VSpace::of(t.arg()), VSpace::of(t.result()));
    }
    return Vec::zero(space);
}

Vec add(const Vec& a, const Vec& b) {
    if (a.space() != b.space()) {
        throw SpaceMismatch("adding vectors of " + a.space().to_string() + " and " +
                            b.space().to_string());
    }
    std::map<BasisLabel, Rational> entries = a.entries();
    for (const auto& [label, c] : b.entries()) {
        auto [it, inserted] = entries.emplace(label, c);
        if (!inserted) it->second += c;
    }
    return Vec::from_entries(a.space(), std::move(entries));
}

Vec scale(const Rational& c, const Vec& v) {
    std::map<BasisLabel, Rational> entries;
    if (c != 0) {
        for (const auto& [label, x] : v.entries()) entries.emplace(label, c * x);
    }
    return Vec::from_entries(v.space(), std::move(entries));
}

namespace {

LinMap add_lin(const LinMap& a, const LinMap& b) {
    if (a.dom() != b.dom() || a.cod() != b.cod()) {
        throw SpaceMismatch("adding maps of different Hom spaces");
    }
    std::vector<LinColumn> out;
    auto ia = a.columns().begin();
    auto ib = b.columns().begin();
    while (ia != a.columns().end() || ib != b.columns().end()) {
        if (ib == b.columns().end() || (ia != a.columns().end() && ia->label < ib->label)) {
            out.push_back(*ia++);
        } else if (ia == a.columns().end() || ib->label < ia->label) {
            out.push_back(*ib++);
        } else {
            out.push_back(LinColumn{ia->label, add(ia->value, ib->value)});
            ++ia;
            ++ib;
        }
    }
    return LinMap(a.dom(), a.cod(), std::move(out));
}

LinMap scale_lin(const Rational& c, const LinMap& m) {
    std::vector<LinColumn> out;
    for (const auto& col : m.columns()) {
        out.push_back(LinColumn{col.label, scale(c, col.value)});
    }
    return LinMap(m.dom(), m.cod(), std::move(out));
}

}  // namespace

VecValue add(const VecValue& a, const VecValue& b) {
    if (a.is_vec() && b.is_vec()) return add(a.vec(), b.vec());
    if (a.is_lin() && b.is_lin()) return add_lin(a.lin(), b.lin());
    throw SpaceMismatch("adding a vector and a linear map");
}

VecValue scale(const Rational& c, const VecValue& v) {
    return v.is_vec() ? VecValue(scale(c, v.vec())) : VecValue(scale_lin(c, v.lin()));
}

Vec tensor(const Vec& u, const Vec& v) {
    const VSpace space = VSpace::tensor(u.space(), v.space());
    std::map<BasisLabel, Rational> entries;
    for (const auto& [la, ca] : u.entries()) {
        for (const auto& [lb, cb] : v.entries()) {
            entries.emplace(BasisLabel::concat(la, lb), ca * cb);
        }
    }
    return Vec::from_entries(space, std::move(entries));
}

VecValue apply_lin(const LinMap& m, const Vec& v, bool* missing_column) {
    if (v.space() != m.dom()) {
        throw SpaceMismatch("applying a map on " + m.dom().to_string() + " to a vector of " +
                            v.space().to_string());
    }
    VecValue acc = zero_value(m.cod());
    for (const auto& [label, c] : v.entries()) {
        const VecValue* col = m.column(label);
        if (!col) {
            if (missing_column) *missing_column = true;
            continue;
        }
        acc = add(acc, scale(c, *col));
    }
    return acc;
}

std::vector<Rational> dense(const Vec& v, const std::vector<BasisLabel>& basis) {
    std::vector<Rational> out;
    out.reserve(basis.size());
    for (const auto& b : basis) out.push_back(v.coeff(b));
    return out;
}

std::vector<std::vector<Rational>> dense(const LinMap& m, const std::vector<BasisLabel>& rows,
                                         const std::vector<BasisLabel>& cols) {
    std::vector<std::vector<Rational>> out(rows.size(), std::vector<Rational>(cols.size(), 0));
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const VecValue* col = m.column(cols[j]);
        if (!col) continue;
        const Vec& cv = col->vec();
        for (std::size_t i = 0; i < rows.size(); ++i) out[i][j] = cv.coeff(rows[i]);
    }
    return out;
}

}  // namespace intlab

#ifndef INTLAB_TYPES_HPP
#define INTLAB_TYPES_HPP

#include <compare>
#include <memory>
#include <string>

namespace intlab {

/// Identifier of an index sort (a dimension of intensional variation,
/// e.g. "w" for worlds, "time", "loc"). Unique within a model.
class SortId {
public:
    explicit SortId(std::string label);

    const std::string& label() const { return label_; }

    friend bool operator==(const SortId& a, const SortId& b) { return a.label_ == b.label_; }
    friend std::strong_ordering operator<=>(const SortId& a, const SortId& b) {
        return a.label_ <=> b.label_;
    }

private:
    std::string label_;
};

/// The recursive type grammar: entities, truth values, index sorts, and
/// function types <arg,res>. Structural equality; immutable value type.
class SemType {
public:
    enum class Kind { Entity, Truth, Idx, Func };

    static SemType entity();
    static SemType truth();
    static SemType idx(SortId sort);
    static SemType func(SemType arg, SemType res);

    Kind kind() const { return node_->kind; }
    bool is_entity() const { return kind() == Kind::Entity; }
    bool is_truth() const { return kind() == Kind::Truth; }
    bool is_idx() const { return kind() == Kind::Idx; }
    bool is_func() const { return kind() == Kind::Func; }

    /// Idx only.
    const SortId& sort() const;
    /// Func only.
    SemType arg() const;
    SemType result() const;

    /// Renders "e", "t", a sort id, or "<arg,res>".
    std::string to_string() const;

    friend bool operator==(const SemType& a, const SemType& b) { return a.compare(b) == 0; }
    friend std::strong_ordering operator<=>(const SemType& a, const SemType& b) {
        const int c = a.compare(b);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    struct Node;
    explicit SemType(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    int compare(const SemType& other) const;

    struct Node {
        Kind kind;
        std::shared_ptr<const SortId> sort;  // Idx
        std::shared_ptr<const Node> arg;     // Func
        std::shared_ptr<const Node> res;     // Func
    };
    std::shared_ptr<const Node> node_;
};

/// Parses the type grammar: `e`, `t`, a sort identifier, or `<type,type>`.
/// Identifiers other than e/t become index types; sort declarations are
/// checked later against the model. Unicode ⟨⟩ accepted as angle brackets.
SemType parse_type(const std::string& text);

}  // namespace intlab

#endif  // INTLAB_TYPES_HPP

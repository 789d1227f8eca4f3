#include "intlab/types.hpp"

#include "intlab/errors.hpp"

#include <cctype>

namespace intlab {

SortId::SortId(std::string label) : label_(std::move(label)) {
    if (label_.empty()) throw ModelError("sort id must be a nonempty string");
}

SemType SemType::entity() {
    static const auto node = std::make_shared<const Node>(Node{Kind::Entity, nullptr, nullptr, nullptr});
    return SemType(node);
}

SemType SemType::truth() {
    static const auto node = std::make_shared<const Node>(Node{Kind::Truth, nullptr, nullptr, nullptr});
    return SemType(node);
}

SemType SemType::idx(SortId sort) {
    return SemType(std::make_shared<const Node>(
        Node{Kind::Idx, std::make_shared<const SortId>(std::move(sort)), nullptr, nullptr}));
}

SemType SemType::func(SemType arg, SemType res) {
    return SemType(std::make_shared<const Node>(Node{Kind::Func, nullptr, arg.node_, res.node_}));
}

const SortId& SemType::sort() const {
    if (!is_idx()) throw TypeMismatch("sort() on non-index type " + to_string());
    return *node_->sort;
}

SemType SemType::arg() const {
    if (!is_func()) throw TypeMismatch("arg() on non-function type " + to_string());
    return SemType(node_->arg);
}

SemType SemType::result() const {
    if (!is_func()) throw TypeMismatch("result() on non-function type " + to_string());
    return SemType(node_->res);
}

std::string SemType::to_string() const {
    switch (kind()) {
        case Kind::Entity: return "e";
        case Kind::Truth: return "t";
        case Kind::Idx: return node_->sort->label();
        case Kind::Func:
            return "<" + SemType(node_->arg).to_string() + "," + SemType(node_->res).to_string() + ">";
    }
    return {};
}

int SemType::compare(const SemType& other) const {
    if (node_ == other.node_) return 0;
    const auto ka = static_cast<int>(kind());
    const auto kb = static_cast<int>(other.kind());
    if (ka != kb) return ka < kb ? -1 : 1;
    switch (kind()) {
        case Kind::Entity:
        case Kind::Truth: return 0;
        case Kind::Idx: {
            const auto& a = node_->sort->label();
            const auto& b = other.node_->sort->label();
            return a == b ? 0 : (a < b ? -1 : 1);
        }
        case Kind::Func: {
            const int c = SemType(node_->arg).compare(SemType(other.node_->arg));
            if (c != 0) return c;
            return SemType(node_->res).compare(SemType(other.node_->res));
        }
    }
    return 0;
}

namespace {

struct TypeParser {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw SyntaxError("type '" + text + "': " + msg, 1, static_cast<int>(pos) + 1);
    }

    bool eat(const std::string& tok) {
        skip_ws();
        if (text.compare(pos, tok.size(), tok) == 0) {
            pos += tok.size();
            return true;
        }
        return false;
    }

    SemType parse() {
        skip_ws();
        if (eat("<") || eat("⟨")) {  // ⟨
            SemType a = parse();
            skip_ws();
            if (!eat(",")) fail("expected ','");
            SemType b = parse();
            skip_ws();
            if (!eat(">") && !eat("⟩")) fail("expected '>'");
            return SemType::func(a, b);
        }
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
            ++pos;
        }
        if (start == pos) fail("expected a type");
        const std::string ident = text.substr(start, pos - start);
        if (ident == "e") return SemType::entity();
        if (ident == "t") return SemType::truth();
        return SemType::idx(SortId(ident));
    }
};

}  // namespace

SemType parse_type(const std::string& text) {
    TypeParser p{text};
    SemType t = p.parse();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return t;
}

}  // namespace intlab

#include "intlab/rational.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace intlab {

std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) {
        os << '/' << denominator(r);
    }
    return os.str();
}

namespace {

bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const auto bad = [&] { return std::invalid_argument("malformed rational: '" + text + "'"); };
    std::string s = text;
    // trim
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    if (s.empty()) throw bad();

    const auto slash = s.find('/');
    if (slash != std::string::npos) {
        const std::string num = s.substr(0, slash);
        const std::string den = s.substr(slash + 1);
        if (!is_integer_token(num) || !is_integer_token(den)) throw bad();
        BigInt n(num), d(den);
        if (d == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
        return Rational(n, d);
    }

    const auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string ip = s.substr(0, dot);
        const std::string fp = s.substr(dot + 1);
        bool neg = false;
        if (!ip.empty() && (ip[0] == '+' || ip[0] == '-')) {
            neg = ip[0] == '-';
            ip.erase(ip.begin());
        }
        if (ip.empty() && fp.empty()) throw bad();
        for (char c : ip)
            if (!std::isdigit(static_cast<unsigned char>(c))) throw bad();
        for (char c : fp)
            if (!std::isdigit(static_cast<unsigned char>(c))) throw bad();
        BigInt scale = 1;
        for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
        BigInt whole = ip.empty() ? BigInt(0) : BigInt(ip);
        BigInt frac = fp.empty() ? BigInt(0) : BigInt(fp);
        Rational r = Rational(whole) + Rational(frac, scale);
        return neg ? -r : r;
    }

    if (!is_integer_token(s)) throw bad();
    return Rational(BigInt(s));
}

BigInt factorial(unsigned n) {
    BigInt acc = 1;
    for (unsigned k = 2; k <= n; ++k) acc *= k;
    return acc;
}

}  // namespace intlab

#include "pmdecomp/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace pmdecomp {

std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += '/';
        s += denominator(r).str();
    }
    return s;
}

Rational parse_rational(std::string_view text) {
    auto fail = [&] {
        throw std::invalid_argument("bad rational: '" + std::string(text) + "'");
    };
    std::size_t i = 0;
    auto digits = [&](std::size_t from) {
        std::size_t j = from;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        return j;
    };
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    std::size_t num_end = digits(i);
    if (num_end == i) fail();
    BigInt num(std::string(text.substr(0, num_end)));
    BigInt den = 1;
    if (num_end < text.size()) {
        if (text[num_end] != '/') fail();
        std::size_t den_end = digits(num_end + 1);
        if (den_end == num_end + 1 || den_end != text.size()) fail();
        den = BigInt(std::string(text.substr(num_end + 1, den_end - num_end - 1)));
        if (den <= 0) fail();
    }
    return Rational(num, den);
}

BigInt ceil_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if (q * b < a) ++q;
    return q;
}

BigInt rational_ceil(const Rational& r) {
    return ceil_div(numerator(r), denominator(r));
}

} // namespace pmdecomp

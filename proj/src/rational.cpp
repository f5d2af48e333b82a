#include "centangle/rational.hpp"

#include <stdexcept>

namespace centangle {

BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (int i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

BigInt ipow(const BigInt& base, int exp) {
    if (exp < 0) throw std::invalid_argument("ipow: negative exponent");
    BigInt r = 1, b = base;
    for (int e = exp; e > 0; e >>= 1) {
        if (e & 1) r *= b;
        b *= b;
    }
    return r;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

bool decimal_terminates(const Rational& r) {
    BigInt d = denominator(r);
    for (const int p : {2, 5}) {
        while (d % p == 0) d /= p;
    }
    return d == 1;
}

std::string to_decimal_string(const Rational& r, int max_digits, DecimalMode mode) {
    if (max_digits < 0) throw std::invalid_argument("to_decimal_string: negative digit count");
    const bool neg = r < 0;
    const BigInt num = neg ? BigInt(-numerator(r)) : numerator(r);
    const BigInt den = denominator(r);
    const BigInt scaled = num * ipow(10, max_digits);
    BigInt digits = scaled / den;
    if (mode == DecimalMode::RoundHalfUp && 2 * (scaled % den) >= den) ++digits;

    std::string raw = digits.str();
    if (static_cast<int>(raw.size()) <= max_digits) {
        raw.insert(0, static_cast<std::size_t>(max_digits + 1) - raw.size(), '0');
    }
    std::string intpart = raw.substr(0, raw.size() - static_cast<std::size_t>(max_digits));
    std::string frac = raw.substr(raw.size() - static_cast<std::size_t>(max_digits));
    while (!frac.empty() && frac.back() == '0') frac.pop_back();

    std::string out = neg && (digits != 0) ? "-" : "";
    out += intpart;
    if (!frac.empty()) out += "." + frac;
    return out;
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("parse_rational: empty input");
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        const BigInt num(text.substr(0, slash));
        const BigInt den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("parse_rational: zero denominator");
        return Rational(num, den);
    }
    const auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(BigInt(text));
    std::string intpart = text.substr(0, dot);
    const std::string frac = text.substr(dot + 1);
    if (frac.find_first_not_of("0123456789") != std::string::npos) {
        throw std::invalid_argument("parse_rational: bad decimal literal '" + text + "'");
    }
    bool neg = !intpart.empty() && intpart[0] == '-';
    if (neg) intpart = intpart.substr(1);
    Rational r(intpart.empty() ? BigInt(0) : BigInt(intpart), 1);
    if (!frac.empty()) r += Rational(BigInt(frac), ipow(10, static_cast<int>(frac.size())));
    return neg ? -r : r;
}

}  // namespace centangle

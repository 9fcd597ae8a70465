#pragma once

#include <charconv>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace kwong {

/// Exact scalar type: arbitrary-precision rational, always kept canonical
/// (gcd-reduced, positive denominator) by GMP.
using Rational = mpq_class;

/// base^e with integer e, exact. Negative exponents invert; 0^negative is a
/// domain error.
inline Rational pow_int(const Rational& base, long long e) {
    if (e == 0) return Rational(1);
    const bool invert = e < 0;
    const unsigned long ue = static_cast<unsigned long>(invert ? -e : e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), ue);
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), ue);
    if (invert) {
        if (num == 0) throw std::domain_error("pow_int: zero base with negative exponent");
        std::swap(num, den);
    }
    Rational out(num, den);
    out.canonicalize();
    return out;
}

inline bool is_integral(const Rational& x) { return x.get_den() == 1; }

inline int sign_of(const Rational& x) { return sgn(x); }
inline int sign_of(double x) { return (x > 0.0) - (x < 0.0); }

inline Rational abs_of(const Rational& x) { return abs(x); }
inline double abs_of(double x) { return x < 0 ? -x : x; }

/// "a/b" (or plain "a" for integers), arbitrary precision.
inline std::string to_string(const Rational& x) { return x.get_str(); }

/// Shortest decimal that parses back to the same binary64 value.
inline std::string format_double(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

/// Parses "a/b", integers, and plain decimals ("1.25" -> 5/4). Decimal
/// exponents are not accepted; rationals stay exact.
inline Rational parse_rational(std::string_view text) {
    const std::string s(text);
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    const auto dot = s.find('.');
    if (dot != std::string::npos) {
        const std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        const size_t frac_len = s.size() - dot - 1;
        if (digits.empty() || frac_len == 0)
            throw std::invalid_argument("malformed decimal literal: " + s);
        mpz_class num(digits, 10);
        mpz_class den(1);
        for (size_t i = 0; i < frac_len; ++i) den *= 10;
        Rational out(num, den);
        out.canonicalize();
        return out;
    }
    Rational out;
    if (mpq_set_str(out.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("malformed rational literal: " + s);
    if (out.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    out.canonicalize();
    return out;
}

inline double to_double(const Rational& x) { return x.get_d(); }
inline double to_double(double x) { return x; }

} // namespace kwong

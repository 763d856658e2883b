#ifndef RESPOOL_RATIONAL_HPP
#define RESPOOL_RATIONAL_HPP

#include <gmpxx.h>

#include <cctype>
#include <optional>
#include <string>
#include <string_view>

namespace respool {

// All accounting in the library is exact. Verdicts (equilibrium, axiom
// checks, conservation) rest on strict rational comparisons.
using Rational = mpq_class;

namespace detail {

inline bool is_integer_token(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace detail

// Accepts "p", "-p" or "p/q" with q != 0. Anything else yields nullopt.
inline std::optional<Rational> parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!detail::is_integer_token(text)) return std::nullopt;
        return Rational(mpz_class(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!detail::is_integer_token(num) || !detail::is_integer_token(den))
        return std::nullopt;
    mpz_class q(den);
    if (q == 0) return std::nullopt;
    Rational r(mpz_class(num), q);
    r.canonicalize();
    return r;
}

// Canonical form: "p/q", or just "p" when the denominator is one.
inline std::string format_rational(const Rational& r) { return r.get_str(); }

inline Rational pow_rational(const Rational& x, unsigned long exponent) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), x.get_num().get_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), x.get_den().get_mpz_t(), exponent);
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline mpz_class pow2(unsigned long k) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, k);
    return p;
}

}  // namespace respool

#endif  // RESPOOL_RATIONAL_HPP

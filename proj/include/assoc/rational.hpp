#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace assoc {

/// Arbitrary precision integer.
using Integer = mpz_class;

/// Exact fraction in lowest terms with positive denominator.
/// mpq_class keeps the canonical form after every arithmetic operation.
using Rational = mpq_class;

using RationalVector = std::vector<Rational>;
using IntegerVector = std::vector<Integer>;

/// Error raised by every operation of the library on precondition or
/// degeneracy failures.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// num/den in lowest terms (the two-argument mpq_class constructor does not reduce).
inline Rational ratio(const Integer& num, const Integer& den) {
    if (den == 0) throw Error("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "num", "num/den" or "-num/den".
inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    auto slash = s.find('/');
    Rational q;
    try {
        if (slash == std::string::npos) {
            q = Rational(Integer(s, 10));
        } else {
            Integer num(s.substr(0, slash), 10);
            Integer den(s.substr(slash + 1), 10);
            if (den == 0) throw Error("zero denominator in \"" + s + "\"");
            q = ratio(num, den);
        }
    } catch (const std::invalid_argument&) {
        throw Error("malformed rational \"" + s + "\"");
    }
    return q;
}

/// "num/den", or just "num" when the denominator is one.
inline std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

/// Exact square root of a non-negative rational, if it is a perfect square.
inline bool rational_sqrt(const Rational& q, Rational& root) {
    if (sgn(q) < 0) return false;
    if (mpz_perfect_square_p(q.get_num_mpz_t()) == 0 ||
        mpz_perfect_square_p(q.get_den_mpz_t()) == 0)
        return false;
    Integer n = sqrt(q.get_num());
    Integer d = sqrt(q.get_den());
    root = ratio(n, d);
    return true;
}

}  // namespace assoc

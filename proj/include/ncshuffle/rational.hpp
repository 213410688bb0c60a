#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace ncs {

// All scalar arithmetic in this library is exact: the base field is Q,
// represented by GMP rationals in canonical form (reduced, positive
// denominator).
using Rational = mpq_class;
using Integer = mpz_class;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw error("rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw error("rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p/q" or a plain integer string.
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw error("rational: empty string");
    Rational q;
    if (q.set_str(text, 10) != 0) throw error("rational: cannot parse '" + text + "'");
    if (q.get_den() == 0) throw error("rational: zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

// Always "p/q", even for integers, so serialized values round-trip bit-exactly.
inline std::string rational_to_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Integer factorial(int n) {
    Integer f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

inline Integer binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

// Bernoulli numbers in the B1 = -1/2 convention (generating function
// x/(e^x - 1)), from the recurrence sum_{k=0}^{n} C(n+1,k) B_k = 0.
inline const Rational& bernoulli(int n) {
    if (n < 0) throw error("bernoulli: negative index");
    static const std::vector<Rational> table = [] {
        constexpr int kMax = 64;
        std::vector<Rational> b;
        b.reserve(kMax + 1);
        b.emplace_back(1);
        for (int m = 1; m <= kMax; ++m) {
            Rational acc = 0;
            for (int k = 0; k < m; ++k) acc += Rational(binomial(m + 1, k)) * b[k];
            Rational val = -acc / Rational(m + 1);
            val.canonicalize();
            b.push_back(val);
        }
        return b;
    }();
    if (n >= static_cast<int>(table.size())) throw error("bernoulli: index too large");
    return table[n];
}

}  // namespace ncs

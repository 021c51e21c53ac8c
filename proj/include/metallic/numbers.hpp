#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>

namespace metallic {

// All arithmetic in this library is exact. Int is an arbitrary-precision
// integer; Rat is an arbitrary-precision rational kept in canonical form
// (gcd(|num|, den) = 1, den >= 1, zero stored as 0/1).
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Canonical rational from an arbitrary integer pair. cpp_rational refuses
// negative denominators, so the sign is moved to the numerator first.
inline Rat make_rat(Int num, Int den) {
    if (den == 0) {
        throw std::invalid_argument("make_rat: zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rat(num, den);
}

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

// Value of an integer-valued rational; throws if a denominator survived.
inline Int to_integer(const Rat& r) {
    if (!is_integer(r)) {
        throw std::logic_error("to_integer: " + r.str() + " is not an integer");
    }
    return numerator(r);
}

inline Int factorial(long long n) {
    if (n < 0) {
        throw std::invalid_argument("factorial: negative argument");
    }
    Int result = 1;
    for (long long k = 2; k <= n; ++k) {
        result *= k;
    }
    return result;
}

// C(n, k) by the iterative multiplicative formula; every division is exact.
// Out-of-range k gives 0.
inline Int binomial(long long n, long long k) {
    if (n < 0) {
        throw std::invalid_argument("binomial: negative n");
    }
    if (k < 0 || k > n) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    Int result = 1;
    for (long long j = 1; j <= k; ++j) {
        result *= n - k + j;
        result /= j;
    }
    return result;
}

// C(p,i) C(i,j) = C(p-j,i-j) C(p,j), the trinomial revision identity.
inline bool trinomial_identity_holds(long long p, long long i, long long j) {
    if (!(0 <= j && j <= i && i <= p)) {
        throw std::invalid_argument("trinomial_identity_holds: need 0 <= j <= i <= p");
    }
    return binomial(p, i) * binomial(i, j) == binomial(p - j, i - j) * binomial(p, j);
}

}  // namespace metallic

#pragma once

#include "metallic/families.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace metallic {

/// Parameters of one weighted power sum: metallicity m and power p,
/// both at least 1.
struct MetallicParams {
    long long m = 1;
    long long p = 1;
};

inline void validate(const MetallicParams& params) {
    if (params.m < 1) {
        throw std::invalid_argument("metallicity m must be >= 1");
    }
    if (params.p < 1) {
        throw std::invalid_argument("power p must be >= 1");
    }
}

/// Terms of G_0 = 0, G_1 = 1, G_k = m G_{k-1} + G_{k-2}. For m = 1 these
/// are the Fibonacci numbers, for m = 2 the Pell numbers.
class MetallicSequence {
public:
    /// Computes terms 0..n_max+1; evaluating the closed form at n needs
    /// the term at n+1.
    MetallicSequence(long long m, std::size_t n_max) : m_(m) {
        if (m < 1) {
            throw std::invalid_argument("metallicity m must be >= 1");
        }
        terms_.reserve(n_max + 2);
        terms_.push_back(0);
        terms_.push_back(1);
        for (std::size_t k = 2; k <= n_max + 1; ++k) {
            terms_.push_back(m * terms_[k - 1] + terms_[k - 2]);
        }
    }

    long long metallicity() const { return m_; }

    std::size_t max_index() const { return terms_.size() - 1; }

    const Int& operator[](std::size_t k) const { return terms_.at(k); }

private:
    long long m_;
    std::vector<Int> terms_;
};

/// The closed form for S(n) = sum_{k<=n} k^p G_k, namely
///
///   S(n) = F(n) G_n + T(n) G_{n+1} - T0,
///
/// where F and T are degree-p polynomials in n with rational coefficients,
/// T0 is T's constant coefficient, and D = T - m F is the companion
/// polynomial used by the step identities.
struct ClosedForm {
    MetallicParams params;
    Polynomial F;
    Polynomial T;
    Polynomial D;

    Rat t0() const { return T.coefficient(0); }
};

/// Builds F, T, D from the cached families: the coefficient of n^(p-i) is
/// (-1)^i C(p,i) h_i(m) / m^(i+1) with h the matching family (f for F,
/// t for T, d for D). The cache must cover indices 0..p.
inline ClosedForm build_closed_form(const MetallicParams& params,
                                    const FamilyCache& cache) {
    validate(params);
    const std::size_t p = static_cast<std::size_t>(params.p);
    const Rat m(params.m);

    auto assemble = [&](FamilyKind kind) {
        std::vector<Rat> coeffs(p + 1, Rat(0));
        Rat m_power = m;        // m^(i+1)
        Int sign_binom = 1;     // (-1)^i C(p,i)
        for (std::size_t i = 0; i <= p; ++i) {
            if (i > 0) {
                m_power *= m;
                sign_binom = -sign_binom * static_cast<long long>(p - i + 1) /
                             static_cast<long long>(i);
            }
            coeffs[p - i] = cache.poly(kind, i)(m) * Rat(sign_binom) / m_power;
        }
        return Polynomial(std::move(coeffs));
    };

    return ClosedForm{params, assemble(FamilyKind::F), assemble(FamilyKind::T),
                      assemble(FamilyKind::D)};
}

/// Exact evaluation of F(n) G_n + T(n) G_{n+1} - T0. The result is an
/// integer whenever the closed form is correct; a surviving denominator
/// means the library itself is inconsistent and throws.
inline Int closed_sum(const ClosedForm& cf, std::size_t n,
                      const MetallicSequence& seq) {
    if (seq.metallicity() != cf.params.m) {
        throw std::invalid_argument("closed_sum: sequence metallicity " +
                                    std::to_string(seq.metallicity()) +
                                    " does not match closed form m = " +
                                    std::to_string(cf.params.m));
    }
    if (n + 1 > seq.max_index()) {
        throw std::invalid_argument("closed_sum: sequence too short, need term " +
                                    std::to_string(n + 1));
    }
    const Rat point(n);
    Rat value = cf.F(point) * Rat(seq[n]) + cf.T(point) * Rat(seq[n + 1]) - cf.t0();
    if (!is_integer(value)) {
        throw std::logic_error("closed_sum: non-integer value " + value.str() +
                               " at m=" + std::to_string(cf.params.m) +
                               " p=" + std::to_string(cf.params.p) +
                               " n=" + std::to_string(n));
    }
    return numerator(value);
}

/// Direct summation sum_{k=1..n} k^p G_k; the k = 0 term vanishes since
/// p >= 1. This is the brute-force reference the closed form is checked
/// against.
inline Int brute_force_sum(long long m, long long p, std::size_t n) {
    validate(MetallicParams{m, p});
    Int prev = 0;  // G_0
    Int curr = 1;  // G_1
    Int total = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        total += boost::multiprecision::pow(Int(k), static_cast<unsigned>(p)) * curr;
        Int next = m * curr + prev;
        prev = curr;
        curr = next;
    }
    return total;
}

/// The two polynomial identities behind the induction step:
///
///   F(X) = D(X-1) + X^p   and   T(X) = F(X-1),
///
/// checked as exact polynomial equalities.
inline bool induction_identities_hold(const ClosedForm& cf) {
    const std::size_t p = static_cast<std::size_t>(cf.params.p);
    return cf.F == cf.D.shifted(-1) + Polynomial::monomial(p) &&
           cf.T == cf.F.shifted(-1);
}

struct GridCell {
    long long m = 0;
    long long p = 0;
    bool sums_match = false;
    bool induction_ok = false;
    bool f_via_d_ok = false;
    std::optional<std::size_t> first_mismatch_n;

    bool ok() const { return sums_match && induction_ok && f_via_d_ok; }
};

struct VerificationReport {
    long long m_max = 0;
    long long p_max = 0;
    std::size_t n_max = 0;
    std::vector<GridCell> cells;  // ordered by (m, p)

    bool all_ok() const {
        for (const auto& cell : cells) {
            if (!cell.ok()) {
                return false;
            }
        }
        return true;
    }
};

/// Checks every (m, p) with 1 <= m <= m_max, 1 <= p <= p_max: closed form
/// against direct summation for all 0 <= n <= n_max, the induction step
/// identities, and the f-via-d expansion for 1 <= i <= p. Failures are
/// recorded in the report, never thrown.
inline VerificationReport verify_grid(long long m_max, long long p_max,
                                      std::size_t n_max) {
    if (m_max < 1 || p_max < 1) {
        throw std::invalid_argument("verify_grid: bounds must be >= 1");
    }
    VerificationReport report{m_max, p_max, n_max, {}};
    FamilyCache cache(static_cast<std::size_t>(p_max));
    for (long long m = 1; m <= m_max; ++m) {
        MetallicSequence seq(m, n_max);
        for (long long p = 1; p <= p_max; ++p) {
            GridCell cell{m, p, true, false, true, std::nullopt};
            ClosedForm cf = build_closed_form(MetallicParams{m, p}, cache);
            for (std::size_t n = 0; n <= n_max; ++n) {
                if (closed_sum(cf, n, seq) != brute_force_sum(m, p, n)) {
                    cell.sums_match = false;
                    cell.first_mismatch_n = n;
                    break;
                }
            }
            cell.induction_ok = induction_identities_hold(cf);
            for (std::size_t i = 1; i <= static_cast<std::size_t>(p); ++i) {
                if (!f_via_d_identity_holds(cache, i)) {
                    cell.f_via_d_ok = false;
                    break;
                }
            }
            report.cells.push_back(std::move(cell));
        }
    }
    return report;
}

}  // namespace metallic

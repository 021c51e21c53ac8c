#pragma once

#include "metallic/numbers.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

namespace metallic {

/// Dense univariate polynomial over exact rationals.
///
/// Coefficients are stored in ascending powers: index i holds the
/// coefficient of X^i. The representation is canonical: the last stored
/// coefficient is nonzero, and the zero polynomial stores nothing at all,
/// so equality is plain coefficient-vector equality. degree() is empty for
/// the zero polynomial rather than any integer sentinel.
class Polynomial {
public:
    Polynomial() = default;

    Polynomial(std::initializer_list<Rat> coeffs) : coeffs_(coeffs) { trim(); }

    explicit Polynomial(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Polynomial monomial(std::size_t power, Rat coeff = Rat(1)) {
        std::vector<Rat> c(power + 1, Rat(0));
        c[power] = std::move(coeff);
        return Polynomial(std::move(c));
    }

    bool is_zero() const { return coeffs_.empty(); }

    std::optional<std::size_t> degree() const {
        if (coeffs_.empty()) {
            return std::nullopt;
        }
        return coeffs_.size() - 1;
    }

    // degree + 1 for nonzero polynomials, 0 for the zero polynomial
    std::size_t coefficient_count() const { return coeffs_.size(); }

    // coefficient of X^i; 0 beyond the stored range
    Rat coefficient(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : Rat(0);
    }

    const std::vector<Rat>& coefficients() const { return coeffs_; }

    Rat leading_coefficient() const {
        return coeffs_.empty() ? Rat(0) : coeffs_.back();
    }

    /// Exact Horner evaluation. The constant term always contributes, so
    /// evaluating at 0 never needs a 0^0 case.
    Rat operator()(const Rat& x) const {
        Rat acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc = acc * x + *it;
        }
        return acc;
    }

    /// The polynomial X |-> p(X + delta), by binomial re-expansion:
    /// out_j = sum_{i>=j} a_i C(i,j) delta^(i-j).
    Polynomial shifted(long long delta) const {
        if (delta == 0 || coeffs_.size() <= 1) {
            return *this;
        }
        const Int d(delta);
        std::vector<Rat> out(coeffs_.size(), Rat(0));
        for (std::size_t j = 0; j < out.size(); ++j) {
            Int step = 1;  // C(i,j) delta^(i-j), walked up from i = j
            Rat acc(0);
            for (std::size_t i = j; i < coeffs_.size(); ++i) {
                if (i > j) {
                    step = step * d * static_cast<long long>(i) /
                           static_cast<long long>(i - j);
                }
                acc += coeffs_[i] * Rat(step);
            }
            out[j] = std::move(acc);
        }
        return Polynomial(std::move(out));
    }

    Polynomial operator-() const {
        Polynomial r(*this);
        for (auto& c : r.coeffs_) {
            c = -c;
        }
        return r;
    }

    Polynomial& operator+=(const Polynomial& rhs) {
        if (coeffs_.size() < rhs.coeffs_.size()) {
            coeffs_.resize(rhs.coeffs_.size(), Rat(0));
        }
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
            coeffs_[i] += rhs.coeffs_[i];
        }
        trim();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& rhs) { return *this += -rhs; }

    Polynomial& operator*=(const Rat& c) {
        if (c == 0) {
            coeffs_.clear();
            return *this;
        }
        for (auto& a : coeffs_) {
            a *= c;
        }
        return *this;
    }

    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) {
        lhs += rhs;
        return lhs;
    }

    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) {
        lhs -= rhs;
        return lhs;
    }

    // convolution product
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) {
            return Polynomial();
        }
        std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return Polynomial(std::move(out));
    }

    friend Polynomial operator*(Polynomial p, const Rat& c) {
        p *= c;
        return p;
    }

    friend Polynomial operator*(const Rat& c, Polynomial p) {
        p *= c;
        return p;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) {
            coeffs_.pop_back();
        }
    }

    std::vector<Rat> coeffs_;
};

}  // namespace metallic

#pragma once

#include "metallic/polynomial.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace metallic {

/// The four mutually recursive polynomial families, named by their
/// conventional lowercase letters f, t, d, s.
enum class FamilyKind { F, T, D, S };

inline constexpr std::array<FamilyKind, 4> kAllFamilies = {
    FamilyKind::F, FamilyKind::T, FamilyKind::D, FamilyKind::S};

inline char family_letter(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::F: return 'f';
        case FamilyKind::T: return 't';
        case FamilyKind::D: return 'd';
        case FamilyKind::S: return 's';
    }
    throw std::invalid_argument("family_letter: bad kind");
}

inline std::optional<FamilyKind> family_from_letter(std::string_view s) {
    if (s.size() != 1) {
        return std::nullopt;
    }
    switch (s[0]) {
        case 'f': return FamilyKind::F;
        case 't': return FamilyKind::T;
        case 'd': return FamilyKind::D;
        case 's': return FamilyKind::S;
        default: return std::nullopt;
    }
}

/// Memoized table of the four families, filled in index order.
///
/// Index 0 is seeded with f = 1, t = 1, d = 1 - X, s = 2 - X. For each
/// i >= 1 the members are computed in the only order their dependencies
/// allow:
///
///   f_i = sum_{j<i}  C(i,j) X^(i-1-j) s_j
///   t_i = sum_{j<=i} C(i,j) X^(i-j)   f_j
///   d_i = t_i - X f_i
///   s_i = f_i + d_i
///
/// Every cached coefficient is an integer even though Polynomial carries
/// rationals. Extension is single-writer; reads of finished entries are
/// safe from any number of threads.
class FamilyCache {
public:
    FamilyCache() { seed(); }

    explicit FamilyCache(std::size_t i_max) {
        seed();
        extend(i_max);
    }

    std::size_t max_index() const { return f_.size() - 1; }

    /// Fill all families up to index i_max; no-op if already covered.
    void extend(std::size_t i_max) {
        for (std::size_t i = f_.size(); i <= i_max; ++i) {
            Polynomial fi;
            for (std::size_t j = 0; j + 1 <= i; ++j) {
                fi += Rat(binomial(static_cast<long long>(i), static_cast<long long>(j))) *
                      Polynomial::monomial(i - 1 - j) * s_[j];
            }
            Polynomial ti;
            for (std::size_t j = 0; j < i; ++j) {
                ti += Rat(binomial(static_cast<long long>(i), static_cast<long long>(j))) *
                      Polynomial::monomial(i - j) * f_[j];
            }
            ti += fi;  // j = i term
            Polynomial di = ti - Polynomial::monomial(1) * fi;
            Polynomial si = fi + di;
            f_.push_back(std::move(fi));
            t_.push_back(std::move(ti));
            d_.push_back(std::move(di));
            s_.push_back(std::move(si));
        }
    }

    const Polynomial& poly(FamilyKind kind, std::size_t i) const {
        const auto& list = family(kind);
        if (i >= list.size()) {
            throw std::out_of_range("FamilyCache: index " + std::to_string(i) +
                                    " not cached (max " + std::to_string(max_index()) +
                                    "); extend first");
        }
        return list[i];
    }

private:
    void seed() {
        f_ = {Polynomial{1}};
        t_ = {Polynomial{1}};
        d_ = {Polynomial{1, -1}};
        s_ = {Polynomial{2, -1}};
    }

    const std::vector<Polynomial>& family(FamilyKind kind) const {
        switch (kind) {
            case FamilyKind::F: return f_;
            case FamilyKind::T: return t_;
            case FamilyKind::D: return d_;
            case FamilyKind::S: return s_;
        }
        throw std::invalid_argument("FamilyCache: bad kind");
    }

    std::vector<Polynomial> f_, t_, d_, s_;
};

/// One family rendered as a triangular integer array: row i lists the
/// coefficients of member i in ascending powers, trimmed at the last
/// nonzero entry (interior zeros stay explicit).
struct TriangleTable {
    FamilyKind kind;
    std::vector<std::vector<Int>> rows;
};

inline TriangleTable triangle_rows(const FamilyCache& cache, FamilyKind kind,
                                   std::size_t i_max) {
    TriangleTable table{kind, {}};
    table.rows.reserve(i_max + 1);
    for (std::size_t i = 0; i <= i_max; ++i) {
        const Polynomial& member = cache.poly(kind, i);
        std::vector<Int> row;
        row.reserve(member.coefficient_count());
        for (const Rat& c : member.coefficients()) {
            row.push_back(to_integer(c));
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

inline TriangleTable triangle_rows(FamilyKind kind, std::size_t i_max) {
    return triangle_rows(FamilyCache(i_max), kind, i_max);
}

/// f_i = sum_{j<=i} C(i,j) X^(i-j) d_j, valid for i >= 1.
inline bool f_via_d_identity_holds(const FamilyCache& cache, std::size_t i) {
    if (i < 1) {
        throw std::invalid_argument("f_via_d_identity_holds: i must be >= 1");
    }
    Polynomial sum;
    for (std::size_t j = 0; j <= i; ++j) {
        sum += Rat(binomial(static_cast<long long>(i), static_cast<long long>(j))) *
               Polynomial::monomial(i - j) * cache.poly(FamilyKind::D, j);
    }
    return sum == cache.poly(FamilyKind::F, i);
}

}  // namespace metallic

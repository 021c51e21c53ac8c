#pragma once

#include "metallic/families.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace metallic {

/// A triangle cell that violated a pattern, with what was found and what
/// the pattern demanded.
struct PatternCounterexample {
    FamilyKind kind;
    std::size_t row = 0;
    std::size_t col = 0;
    Int found;
    std::string expected;
};

struct PatternResult {
    std::string id;
    std::string description;
    bool passed = true;
    std::optional<PatternCounterexample> counterexample;
};

struct PatternReport {
    std::size_t checked_rows = 0;
    std::vector<PatternResult> results;

    bool all_passed() const {
        for (const auto& r : results) {
            if (!r.passed) {
                return false;
            }
        }
        return true;
    }
};

namespace detail {

// integer triangle entry; 0 above the stored row length
inline Int triangle_entry(const FamilyCache& cache, FamilyKind kind,
                          std::size_t i, std::size_t j) {
    return to_integer(cache.poly(kind, i).coefficient(j));
}

inline Int sign_of(std::size_t parity) { return parity % 2 == 0 ? 1 : -1; }

}  // namespace detail

/// Checks the known column/diagonal identities of the four triangles for
/// all rows up to i_max. Out-of-range claims are skipped, so every check
/// passes vacuously when the bound cuts it off. A failing cell is reported
/// as data; nothing here throws on a counterexample.
inline PatternReport check_patterns(std::size_t i_max) {
    FamilyCache cache(i_max);
    PatternReport report{i_max, {}};

    using Check = std::function<std::optional<PatternCounterexample>()>;
    auto run = [&](std::string id, std::string description, const Check& check) {
        PatternResult result{std::move(id), std::move(description), true, std::nullopt};
        if (auto bad = check()) {
            result.passed = false;
            result.counterexample = std::move(bad);
        }
        report.results.push_back(std::move(result));
    };

    auto entry = [&](FamilyKind kind, std::size_t i, std::size_t j) {
        return detail::triangle_entry(cache, kind, i, j);
    };
    auto cell = [&](FamilyKind kind, std::size_t i, std::size_t j, Int expected)
        -> std::optional<PatternCounterexample> {
        Int found = entry(kind, i, j);
        if (found == expected) {
            return std::nullopt;
        }
        return PatternCounterexample{kind, i, j, found, expected.str()};
    };

    // Row i of the f triangle has entries at columns 0..i; d and s rows at
    // columns 0..i+1. Entries there alternate in sign with the column.
    run("fds-sign-alternating",
        "entries of the f, d, s triangles have sign (-1)^col",
        [&]() -> std::optional<PatternCounterexample> {
            for (FamilyKind kind : {FamilyKind::F, FamilyKind::D, FamilyKind::S}) {
                for (std::size_t i = 0; i <= i_max; ++i) {
                    std::size_t cols = kind == FamilyKind::F ? i + 1 : i + 2;
                    for (std::size_t j = 0; j < cols; ++j) {
                        Int v = entry(kind, i, j);
                        bool ok = j % 2 == 0 ? v > 0 : v < 0;
                        if (!ok) {
                            return PatternCounterexample{
                                kind, i, j, v,
                                j % 2 == 0 ? "positive" : "negative"};
                        }
                    }
                }
            }
            return std::nullopt;
        });

    run("t-nonnegative", "every entry of the t triangle is >= 0",
        [&]() -> std::optional<PatternCounterexample> {
            for (std::size_t i = 0; i <= i_max; ++i) {
                const Polynomial& ti = cache.poly(FamilyKind::T, i);
                for (std::size_t j = 0; j < ti.coefficient_count(); ++j) {
                    Int v = entry(FamilyKind::T, i, j);
                    if (v < 0) {
                        return PatternCounterexample{FamilyKind::T, i, j, v, ">= 0"};
                    }
                }
            }
            return std::nullopt;
        });

    run("t-odd-columns-zero", "odd-power coefficients of the t family vanish",
        [&]() -> std::optional<PatternCounterexample> {
            for (std::size_t i = 0; i <= i_max; ++i) {
                for (std::size_t j = 1; j <= i; j += 2) {
                    if (auto bad = cell(FamilyKind::T, i, j, 0)) {
                        return bad;
                    }
                }
            }
            return std::nullopt;
        });

    run("f-diagonal", "f triangle diagonal is (-1)^i",
        [&]() -> std::optional<PatternCounterexample> {
            for (std::size_t i = 0; i <= i_max; ++i) {
                if (auto bad = cell(FamilyKind::F, i, i, detail::sign_of(i))) {
                    return bad;
                }
            }
            return std::nullopt;
        });

    run("ds-superdiagonal", "d and s triangles end each row with (-1)^(i+1)",
        [&]() -> std::optional<PatternCounterexample> {
            for (FamilyKind kind : {FamilyKind::D, FamilyKind::S}) {
                for (std::size_t i = 0; i <= i_max; ++i) {
                    if (auto bad = cell(kind, i, i + 1, detail::sign_of(i + 1))) {
                        return bad;
                    }
                }
            }
            return std::nullopt;
        });

    run("t-step-two", "t entries two below the diagonal at odd rows equal 2",
        [&]() -> std::optional<PatternCounterexample> {
            for (std::size_t i = 0; 2 * i + 1 <= i_max; ++i) {
                if (auto bad = cell(FamilyKind::T, 2 * i + 1, 2 * i, 2)) {
                    return bad;
                }
            }
            return std::nullopt;
        });

    run("t-step-power", "t entries at (2i+2, 2i) equal 2^(2i+3)",
        [&]() -> std::optional<PatternCounterexample> {
            for (std::size_t i = 0; 2 * i + 2 <= i_max; ++i) {
                if (auto bad = cell(FamilyKind::T, 2 * i + 2, 2 * i,
                                    Int(1) << (2 * i + 3))) {
                    return bad;
                }
            }
            return std::nullopt;
        });

    run("column0-ladder",
        "column 0 of f, t, d equals 2^i i!, s doubles it, d negates it at column 1",
        [&]() -> std::optional<PatternCounterexample> {
            for (std::size_t i = 0; i <= i_max; ++i) {
                Int base = (Int(1) << i) * factorial(static_cast<long long>(i));
                for (FamilyKind kind : {FamilyKind::F, FamilyKind::T, FamilyKind::D}) {
                    if (auto bad = cell(kind, i, 0, base)) {
                        return bad;
                    }
                }
                if (auto bad = cell(FamilyKind::D, i, 1, -base)) {
                    return bad;
                }
                if (auto bad = cell(FamilyKind::S, i, 0, 2 * base)) {
                    return bad;
                }
            }
            return std::nullopt;
        });

    run("f-column1", "f column 1 is -2^(i-1) i! for i >= 1",
        [&]() -> std::optional<PatternCounterexample> {
            for (std::size_t i = 1; i <= i_max; ++i) {
                Int expected = -(Int(1) << (i - 1)) * factorial(static_cast<long long>(i));
                if (auto bad = cell(FamilyKind::F, i, 1, expected)) {
                    return bad;
                }
            }
            return std::nullopt;
        });

    run("s-column1", "s column 1 is -3 * 2^(i-1) i! for i >= 1",
        [&]() -> std::optional<PatternCounterexample> {
            for (std::size_t i = 1; i <= i_max; ++i) {
                Int expected =
                    -3 * (Int(1) << (i - 1)) * factorial(static_cast<long long>(i));
                if (auto bad = cell(FamilyKind::S, i, 1, expected)) {
                    return bad;
                }
            }
            return std::nullopt;
        });

    run("d-diagonal", "d triangle diagonal is (-1)^i 2^i",
        [&]() -> std::optional<PatternCounterexample> {
            for (std::size_t i = 0; i <= i_max; ++i) {
                if (auto bad = cell(FamilyKind::D, i, i,
                                    detail::sign_of(i) * (Int(1) << i))) {
                    return bad;
                }
            }
            return std::nullopt;
        });

    run("f-subdiagonal", "f entries just below the diagonal are (-1)^i 2^(i+1)",
        [&]() -> std::optional<PatternCounterexample> {
            for (std::size_t i = 0; i + 1 <= i_max; ++i) {
                if (auto bad = cell(FamilyKind::F, i + 1, i,
                                    detail::sign_of(i) * (Int(1) << (i + 1)))) {
                    return bad;
                }
            }
            return std::nullopt;
        });

    run("s-diagonal", "s triangle diagonal is (-1)^i (2^i + 1)",
        [&]() -> std::optional<PatternCounterexample> {
            for (std::size_t i = 0; i <= i_max; ++i) {
                if (auto bad = cell(FamilyKind::S, i, i,
                                    detail::sign_of(i) * ((Int(1) << i) + 1))) {
                    return bad;
                }
            }
            return std::nullopt;
        });

    return report;
}

}  // namespace metallic

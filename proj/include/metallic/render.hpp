#pragma once

#include "metallic/closed_form.hpp"
#include "metallic/patterns.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace metallic {

enum class OutputFormat { Table, Csv, BFile, KeyValue };

inline std::optional<OutputFormat> parse_format(std::string_view s) {
    if (s == "table") return OutputFormat::Table;
    if (s == "csv") return OutputFormat::Csv;
    if (s == "bfile") return OutputFormat::BFile;
    if (s == "kv") return OutputFormat::KeyValue;
    return std::nullopt;
}

/// "a/b" with "/b" dropped for integers; the sign sits on the numerator.
inline std::string rat_string(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += "/" + denominator(r).str();
    }
    return s;
}

/// Human form in descending powers, e.g. "n^3/2 - 3n^2/2 + 3n - 7/2".
inline std::string poly_string(const Polynomial& poly, std::string_view var) {
    if (poly.is_zero()) {
        return "0";
    }
    std::string out;
    for (std::size_t k = poly.coefficient_count(); k-- > 0;) {
        const Rat c = poly.coefficient(k);
        if (c == 0) {
            continue;
        }
        const Int num = numerator(c);
        const Int den = denominator(c);
        if (out.empty()) {
            out += num < 0 ? "-" : "";
        } else {
            out += num < 0 ? " - " : " + ";
        }
        const Int mag = abs(num);
        if (k == 0) {
            out += mag.str();
        } else {
            if (mag != 1) {
                out += mag.str();
            }
            out += var;
            if (k > 1) {
                out += "^" + std::to_string(k);
            }
        }
        if (den != 1) {
            out += "/" + den.str();
        }
    }
    return out;
}

inline std::string render_closed_form(const ClosedForm& cf, OutputFormat format) {
    std::ostringstream out;
    out << "m = " << cf.params.m << "\n";
    out << "p = " << cf.params.p << "\n";
    if (format == OutputFormat::KeyValue) {
        auto emit = [&](std::string_view key, const Polynomial& poly) {
            for (std::size_t i = 0; i < poly.coefficient_count(); ++i) {
                const Rat c = poly.coefficient(i);
                out << key << "." << i << ".num = " << numerator(c) << "\n";
                out << key << "." << i << ".den = " << denominator(c) << "\n";
            }
        };
        emit("F", cf.F);
        emit("T", cf.T);
        emit("D", cf.D);
        out << "T0.num = " << numerator(cf.t0()) << "\n";
        out << "T0.den = " << denominator(cf.t0()) << "\n";
    } else {
        out << "F(n) = " << poly_string(cf.F, "n") << "\n";
        out << "T(n) = " << poly_string(cf.T, "n") << "\n";
        out << "D(n) = " << poly_string(cf.D, "n") << "\n";
        out << "T0 = " << rat_string(cf.t0()) << "\n";
    }
    return out.str();
}

inline std::string render_triangle(const TriangleTable& table, OutputFormat format) {
    std::ostringstream out;
    const char letter = family_letter(table.kind);
    switch (format) {
        case OutputFormat::Csv:
            for (const auto& row : table.rows) {
                for (std::size_t j = 0; j < row.size(); ++j) {
                    out << (j ? "," : "") << row[j];
                }
                out << "\n";
            }
            break;
        case OutputFormat::BFile: {
            std::size_t index = 0;
            for (const auto& row : table.rows) {
                for (const Int& value : row) {
                    out << index++ << " " << value << "\n";
                }
            }
            break;
        }
        case OutputFormat::KeyValue:
            for (std::size_t i = 0; i < table.rows.size(); ++i) {
                for (std::size_t j = 0; j < table.rows[i].size(); ++j) {
                    out << letter << "." << i << "." << j << " = "
                        << table.rows[i][j] << "\n";
                }
            }
            break;
        case OutputFormat::Table: {
            // Column layout mirrors the printed tables: a row label, then
            // one column per power of X, zero cells left blank.
            std::size_t cols = 0;
            for (const auto& row : table.rows) {
                cols = std::max(cols, row.size());
            }
            std::vector<std::string> labels;
            std::size_t label_width = 0;
            for (std::size_t i = 0; i < table.rows.size(); ++i) {
                labels.push_back(std::string(1, letter) + std::to_string(i));
                label_width = std::max(label_width, labels.back().size());
            }
            std::vector<std::size_t> widths(cols);
            std::vector<std::vector<std::string>> cells(table.rows.size());
            for (std::size_t j = 0; j < cols; ++j) {
                widths[j] = std::string("X^").size() + std::to_string(j).size();
            }
            for (std::size_t i = 0; i < table.rows.size(); ++i) {
                cells[i].resize(cols);
                for (std::size_t j = 0; j < table.rows[i].size(); ++j) {
                    if (table.rows[i][j] != 0) {
                        cells[i][j] = table.rows[i][j].str();
                        widths[j] = std::max(widths[j], cells[i][j].size());
                    }
                }
            }
            out << std::string(label_width, ' ');
            for (std::size_t j = 0; j < cols; ++j) {
                std::string header = "X^" + std::to_string(j);
                out << "  " << std::string(widths[j] - header.size(), ' ') << header;
            }
            out << "\n";
            for (std::size_t i = 0; i < table.rows.size(); ++i) {
                out << labels[i] << std::string(label_width - labels[i].size(), ' ');
                std::size_t written = cols;
                while (written > 0 && cells[i][written - 1].empty()) {
                    --written;  // drop blank tail so lines stay short
                }
                for (std::size_t j = 0; j < written; ++j) {
                    out << "  " << std::string(widths[j] - cells[i][j].size(), ' ')
                        << cells[i][j];
                }
                out << "\n";
            }
            break;
        }
    }
    return out.str();
}

inline std::string render_report(const VerificationReport& report) {
    std::ostringstream out;
    out << "grid m=1.." << report.m_max << " p=1.." << report.p_max
        << " n=0.." << report.n_max << "\n";
    std::size_t failed = 0;
    for (const auto& cell : report.cells) {
        out << "m=" << cell.m << " p=" << cell.p;
        if (cell.ok()) {
            out << " ok\n";
            continue;
        }
        ++failed;
        out << " FAIL:";
        if (!cell.sums_match) {
            out << " sums";
            if (cell.first_mismatch_n) {
                out << "(first mismatch n=" << *cell.first_mismatch_n << ")";
            }
        }
        if (!cell.induction_ok) {
            out << " step-identities";
        }
        if (!cell.f_via_d_ok) {
            out << " f-via-d";
        }
        out << "\n";
    }
    if (failed == 0) {
        out << "all " << report.cells.size() << " cells passed\n";
    } else {
        out << failed << " of " << report.cells.size() << " cells failed\n";
    }
    return out.str();
}

inline std::string render_patterns(const PatternReport& report) {
    std::ostringstream out;
    out << "checked rows 0.." << report.checked_rows << "\n";
    std::size_t width = 0;
    for (const auto& r : report.results) {
        width = std::max(width, r.id.size());
    }
    std::size_t failed = 0;
    for (const auto& r : report.results) {
        out << (r.passed ? "pass " : "FAIL ") << r.id
            << std::string(width - r.id.size() + 2, ' ') << r.description;
        if (!r.passed && r.counterexample) {
            const auto& c = *r.counterexample;
            out << "  [" << family_letter(c.kind) << "[" << c.row << "][" << c.col
                << "] = " << c.found << ", expected " << c.expected << "]";
            ++failed;
        } else if (!r.passed) {
            ++failed;
        }
        out << "\n";
    }
    if (failed == 0) {
        out << "all " << report.results.size() << " patterns passed\n";
    } else {
        out << failed << " of " << report.results.size() << " patterns failed\n";
    }
    return out.str();
}

}  // namespace metallic

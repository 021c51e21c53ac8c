#include "metallic/metallic.hpp"

#include <CLI11.hpp>

#include <cerrno>
#include <cstdlib>
#include <iostream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

CLI::Validator integer_at_least(long long min_value) {
    return CLI::Validator(
        [min_value](std::string& input) -> std::string {
            errno = 0;
            char* end = nullptr;
            long long value = std::strtoll(input.c_str(), &end, 10);
            if (errno != 0 || end == input.c_str() || *end != '\0' ||
                value < min_value) {
                return "expected an integer >= " + std::to_string(min_value) +
                       ", got " + input;
            }
            return {};
        },
        "INT>=" + std::to_string(min_value));
}

}  // namespace

// Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 usage error.
int main(int argc, char** argv) {
    CLI::App app{
        "Exact closed forms and coefficient triangles for the weighted power sums\n"
        "sum_{k<=n} k^p G_k over metallic sequences (G_0=0, G_1=1, G_k = m G_{k-1} + G_{k-2})"};
    app.require_subcommand(1);

    long long m = 1;
    long long p = 1;
    std::string format_name = "table";
    std::string kind_name;
    long long i_max = 30;
    long long m_max = 8;
    long long p_max = 8;
    long long n_max = 60;

    auto* closed = app.add_subcommand(
        "closed-form", "Print the polynomials F(n), T(n), D(n) and the constant T0");
    closed->add_option("--m", m, "metallicity (>= 1)")
        ->required()
        ->check(integer_at_least(1));
    closed->add_option("--p", p, "power of k in the sum (>= 1)")
        ->required()
        ->check(integer_at_least(1));
    closed->add_option("--format", format_name, "table or kv")
        ->check(CLI::IsMember({"table", "kv"}));

    auto* triangle = app.add_subcommand(
        "triangle", "Print one family's coefficient triangle");
    triangle->add_option("--kind", kind_name, "family: f, t, d or s")
        ->required()
        ->check(CLI::IsMember({"f", "t", "d", "s"}));
    triangle->add_option("--i-max", i_max, "last row to print")
        ->check(integer_at_least(0));
    triangle->add_option("--format", format_name, "table, csv, bfile or kv")
        ->check(CLI::IsMember({"table", "csv", "bfile", "kv"}));

    auto* verify = app.add_subcommand(
        "verify",
        "Check the closed form against direct summation over a (m, p, n) grid,\n"
        "plus the step identities and the f-via-d expansion");
    verify->add_option("--m-max", m_max, "largest metallicity")
        ->check(integer_at_least(1));
    verify->add_option("--p-max", p_max, "largest power")
        ->check(integer_at_least(1));
    verify->add_option("--n-max", n_max, "largest summation bound")
        ->check(integer_at_least(0));

    auto* patterns = app.add_subcommand(
        "patterns", "Check the column/diagonal identities of the four triangles");
    patterns->add_option("--i-max", i_max, "last row to check")
        ->check(integer_at_least(0));

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (closed->parsed()) {
        const metallic::MetallicParams params{m, p};
        const metallic::FamilyCache cache(static_cast<std::size_t>(p));
        const auto cf = metallic::build_closed_form(params, cache);
        const auto format = metallic::parse_format(format_name);
        std::cout << metallic::render_closed_form(cf, *format);
        return kExitOk;
    }

    if (triangle->parsed()) {
        const auto kind = metallic::family_from_letter(kind_name);
        const auto format = metallic::parse_format(format_name);
        const auto table =
            metallic::triangle_rows(*kind, static_cast<std::size_t>(i_max));
        std::cout << metallic::render_triangle(table, *format);
        return kExitOk;
    }

    if (verify->parsed()) {
        const auto report =
            metallic::verify_grid(m_max, p_max, static_cast<std::size_t>(n_max));
        std::cout << metallic::render_report(report);
        return report.all_ok() ? kExitOk : kExitCheckFailed;
    }

    if (patterns->parsed()) {
        const auto report =
            metallic::check_patterns(static_cast<std::size_t>(i_max));
        std::cout << metallic::render_patterns(report);
        return report.all_passed() ? kExitOk : kExitCheckFailed;
    }

    return kExitUsage;
}

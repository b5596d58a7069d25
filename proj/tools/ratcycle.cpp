// Command-line surface for orbit runs, cycle construction, enumeration,
// censuses, depth searches, the A(N) table, and verification suites.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "CLI11.hpp"

#include "ratcycle/census.hpp"
#include "ratcycle/fit.hpp"
#include "ratcycle/io.hpp"
#include "ratcycle/orbit.hpp"
#include "ratcycle/parity_vector.hpp"

using namespace ratcycle;

namespace {

std::string parity_string(const std::vector<Rational2>& cycle) {
    std::string s;
    for (const auto& x : cycle) s.push_back(parity(x) ? '1' : '0');
    return s;
}

std::string join(const std::vector<Rational2>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ", ";
        s += xs[i].str();
    }
    return s;
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw CLI::RuntimeError("cannot open " + path, 1);
    return file;
}

void print_attractor_row(std::ostream& os, const AttractorRecord& a) {
    os << a.k << "  " << a.min_numerator.get_str() << "  " << a.lambda << "  "
       << a.omega << '\n';
}

int cmd_orbit(const std::string& literal, std::uint64_t step_cap) {
    Rational2 x;
    try {
        x = Rational2::parse(literal);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    auto out = orbit(x, step_cap);
    if (!out.decided) {
        std::cout << "undecided after " << out.steps_used << " steps\n";
        return 1;
    }
    std::cout << "tail:   (" << join(out.tail) << ")\n";
    std::cout << "cycle:  (" << join(out.cycle) << ")\n";
    std::uint64_t omega = 0;
    for (const auto& c : out.cycle) omega += parity(c) ? 1 : 0;
    std::cout << "lambda: " << out.cycle.size() << "\nomega:  " << omega
              << "\nparity: " << parity_string(out.cycle) << '\n';
    return 0;
}

int cmd_cycle(const std::string& literal) {
    ParityVector v = ParityVector::parse(literal);
    auto inv = invariants(v);
    auto x = bsl_point(v);
    std::cout << "x = " << x.str() << "  (rho = " << inv.rho.get_str()
              << ", J = " << inv.big_j.get_str() << ")\n";
    std::cout << "k = " << denominator_of(v).get_str() << "  lambda = " << inv.lambda
              << "  omega = " << inv.omega << '\n';
    if (!is_primitive(v)) {
        std::size_t p = 1;
        for (; p < v.size(); ++p) {
            if (v.size() % p) continue;
            bool rep = true;
            for (std::size_t i = p; i < v.size() && rep; ++i)
                if (v.bits[i] != v.bits[i % p]) rep = false;
            if (rep) break;
        }
        std::cout << "warning: imprimitive vector (minimal period " << p << ")\n";
    }
    std::vector<Rational2> cycle;
    Rational2 cur = x;
    for (std::uint64_t i = 0; i < inv.lambda; ++i) {
        cycle.push_back(cur);
        cur = t_map(cur);
    }
    std::cout << "cycle: (" << join(cycle) << ")\n";
    return 0;
}

int cmd_search(const std::vector<std::uint64_t>& ks, std::uint64_t depth,
               std::uint64_t step_cap, const std::string& out_path,
               const std::string& format) {
    std::ofstream file;
    std::ostream& os = open_out(file, out_path);
    bool undecided_seen = false;
    if (format == "human") os << "k  c  lambda  omega\n";
    for (std::uint64_t k : ks) {
        auto rep = search_denominator(k, depth, step_cap);
        if (format == "json-lines") {
            write_registry_jsonl(os, rep);
        } else {
            for (const auto& a : rep.attractors) print_attractor_row(os, a);
        }
        std::cerr << "k=" << k << ": " << rep.attractors.size() << " attractor(s), "
                  << rep.undecided_numerators.size() << " undecided\n";
        if (!rep.undecided_numerators.empty()) undecided_seen = true;
    }
    return undecided_seen ? 1 : 0;
}

int cmd_enumerate(std::uint64_t n, bool primitive_only) {
    enumerate_vectors(n, primitive_only,
                      [](const ParityVector& v) { std::cout << v.str() << '\n'; });
    return 0;
}

int cmd_census(std::uint64_t n, const std::string& out_path) {
    std::ofstream file;
    std::ostream& os = open_out(file, out_path);
    write_nu_census_csv(os, nu_census(n));
    return 0;
}

int cmd_phenomena(std::uint64_t k_max, std::uint64_t depth, std::uint64_t step_cap,
                  unsigned jobs, const std::string& out_path) {
    auto census = phenomena_census(k_max, depth, step_cap, jobs);
    std::ofstream file;
    std::ostream& os = open_out(file, out_path);
    write_phenomena_csv(os, census);
    std::cerr << "denominators with scaling: " << census.scaling_denominators
              << ", repetition: " << census.repetition_denominators
              << ", both: " << census.both_denominators << '\n'
              << "raw tallies: " << census.scaling_pairs_total << " ratio pairs, "
              << census.repetition_groups_total << " repetition groups\n";
    return 0;
}

int cmd_atable(std::uint64_t k_max, const std::vector<std::uint64_t>& depths,
               std::uint64_t step_cap, unsigned jobs, const std::string& out_path) {
    auto table = a_table(k_max, depths, step_cap, jobs);
    std::ofstream file;
    std::ostream& os = open_out(file, out_path);
    write_atable_csv(os, table);
    return 0;
}

int cmd_fit(const std::string& in_path, double total) {
    std::ifstream in(in_path);
    if (!in) {
        std::cerr << "error: cannot read " << in_path << '\n';
        return 2;
    }
    auto pts = read_atable_csv(in);
    auto [c1, c2] = fit_exponential(pts, total);
    std::printf("c1 = %.6f\nc2 = %.6f\n", c1, c2);
    return 0;
}

int cmd_verify(std::uint64_t bsl_exhaustive, std::uint64_t prop32_max,
               std::uint64_t agreement_max) {
    bool all_ok = true;
    auto line = [&](const std::string& what, bool ok) {
        std::cout << (ok ? "ok   " : "FAIL ") << what << '\n';
        if (!ok) all_ok = false;
    };
    for (std::uint64_t n = 1; n <= bsl_exhaustive; ++n) {
        bool ok = true;
        enumerate_vectors(n, false, [&](const ParityVector& v) {
            if (!verify_bsl(v)) ok = false;
        });
        line("periodic-point construction, all vectors of length " + std::to_string(n), ok);
    }
    for (std::uint64_t n = 1; n <= prop32_max; ++n)
        line("census total vs Mobius sum, n = " + std::to_string(n), verify_prop_3_2(n));
    for (std::uint64_t n = 1; n <= agreement_max; ++n) {
        bool ok = true;
        for (const auto& [k, nu] : nu_census(n)) {
            std::uint64_t depth = 1, positive = 0;
            enumerate_vectors(n, true, [&](const ParityVector& v) {
                if (denominator_of(v) != k) return;
                auto x = bsl_point(v);
                if (x.num() > 0 && x.num().fits_ulong_p()) {
                    ++positive;
                    depth = std::max(depth, x.num().get_ui());
                }
            });
            if (positive == 0) continue;
            auto rep = search_denominator(k, depth, 100000);
            std::uint64_t found = 0;
            for (const auto& a : rep.attractors)
                if (a.lambda == n) ++found;
            if (found != positive / n) ok = false;
        }
        line("search agrees with formula counts, n = " + std::to_string(n), ok);
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"3x+1 dynamics on rationals with fixed odd denominator"};
    app.require_subcommand(1);

    std::string literal;
    std::uint64_t step_cap = 100000;
    std::uint64_t depth = 500;
    std::uint64_t k = 0, k_min = 0, k_max = 0, n = 0;
    unsigned jobs = 0;
    std::string out_path, format = "human", in_path;
    bool primitive_only = false;
    std::vector<std::uint64_t> depths;

    auto* orbit_cmd = app.add_subcommand("orbit", "iterate T from a rational j/k");
    orbit_cmd->add_option("x", literal, "rational literal, e.g. 5/7")->required();
    orbit_cmd->add_option("--step-cap", step_cap, "iteration cap");

    auto* cycle_cmd = app.add_subcommand("cycle", "periodic point from a 0-1 vector");
    cycle_cmd->add_option("vector", literal, "0-1 string, e.g. 1100")->required();

    auto* enum_cmd = app.add_subcommand("enumerate", "list 0-1 vectors of length n");
    enum_cmd->add_option("--n", n, "vector length")->required();
    enum_cmd->add_flag("--primitive-only", primitive_only, "aperiodic vectors only");

    auto* search_cmd = app.add_subcommand("search", "depth search of one or more D_k");
    search_cmd->add_option("--k", k, "single denominator");
    search_cmd->add_option("--k-min", k_min, "sweep start");
    search_cmd->add_option("--k-max", k_max, "sweep end");
    search_cmd->add_option("--depth", depth, "survey numerators 1..depth");
    search_cmd->add_option("--step-cap", step_cap, "per-orbit iteration cap");
    search_cmd->add_option("--out", out_path, "output file (default stdout)");
    search_cmd->add_option("--format", format, "human | json-lines")
        ->check(CLI::IsMember({"human", "json-lines"}));

    auto* census_cmd = app.add_subcommand("census", "count vectors by denominator");
    census_cmd->add_option("--n", n, "vector length")->required();
    census_cmd->add_option("--out", out_path, "output CSV (default stdout)");

    auto* phen_cmd = app.add_subcommand("phenomena", "scaling/repetition sweep");
    phen_cmd->add_option("--k-max", k_max, "sweep denominators up to k-max")->required();
    phen_cmd->add_option("--depth", depth, "search depth per denominator");
    phen_cmd->add_option("--step-cap", step_cap, "per-orbit iteration cap");
    phen_cmd->add_option("--jobs", jobs, "worker threads (0 = all cores)");
    phen_cmd->add_option("--out", out_path, "output CSV (default stdout)");

    auto* atable_cmd = app.add_subcommand("atable", "single-attractor counts by depth");
    atable_cmd->add_option("--k-max", k_max, "sweep denominators up to k-max")->required();
    atable_cmd->add_option("--depths", depths, "comma-separated depth list")
        ->required()
        ->delimiter(',');
    atable_cmd->add_option("--step-cap", step_cap, "per-orbit iteration cap");
    atable_cmd->add_option("--jobs", jobs, "worker threads (0 = all cores)");
    atable_cmd->add_option("--out", out_path, "output CSV (default stdout)");

    auto* fit_cmd = app.add_subcommand("fit", "exponential model fit of an A-table CSV");
    fit_cmd->add_option("--in", in_path, "A-table CSV")->required();
    double total = 2000.0;
    fit_cmd->add_option("--total", total, "denominator count in the surveyed range");

    auto* verify_cmd = app.add_subcommand("verify", "run the verification suites");
    std::uint64_t bsl_exhaustive = 12, prop32_max = 16, agreement_max = 8;
    verify_cmd->add_option("--bsl-exhaustive", bsl_exhaustive,
                           "check the construction for all vectors up to this length");
    verify_cmd->add_option("--prop32-max", prop32_max, "census totals up to this length");
    verify_cmd->add_option("--agreement-max", agreement_max,
                           "search-vs-formula agreement up to this length");

    CLI11_PARSE(app, argc, argv);

    try {
        if (orbit_cmd->parsed()) return cmd_orbit(literal, step_cap);
        if (cycle_cmd->parsed()) return cmd_cycle(literal);
        if (enum_cmd->parsed()) return cmd_enumerate(n, primitive_only);
        if (search_cmd->parsed()) {
            std::vector<std::uint64_t> ks;
            if (k) ks.push_back(k);
            else if (k_min && k_max) {
                for (std::uint64_t kk = k_min; kk <= k_max; ++kk)
                    if (preserves_dk(kk)) ks.push_back(kk);
            } else {
                std::cerr << "error: give --k or both --k-min and --k-max\n";
                return 2;
            }
            return cmd_search(ks, depth, step_cap, out_path, format);
        }
        if (census_cmd->parsed()) return cmd_census(n, out_path);
        if (phen_cmd->parsed()) return cmd_phenomena(k_max, depth, step_cap, jobs, out_path);
        if (atable_cmd->parsed()) return cmd_atable(k_max, depths, step_cap, jobs, out_path);
        if (fit_cmd->parsed()) return cmd_fit(in_path, total);
        if (verify_cmd->parsed())
            return cmd_verify(bsl_exhaustive, prop32_max, agreement_max);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

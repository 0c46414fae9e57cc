#include "bjw/cli.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "bjw/dynamics.hpp"
#include "bjw/parser.hpp"
#include "bjw/printer.hpp"
#include "bjw/quantize.hpp"
#include "bjw/verify.hpp"

namespace bjw {

namespace {

const std::map<std::string, Rule> kRuleNames = {
    {"bj", Rule::BornJordan},
    {"weyl", Rule::Weyl},
    {"standard", Rule::Standard},
    {"antistandard", Rule::AntiStandard},
    {"average", Rule::Average},
};

std::string weights_line(const std::vector<Word>& words, const std::map<Word, Rational>& weights) {
    std::string line;
    for (const Word& w : words) {
        if (!line.empty()) line += ", ";
        auto it = weights.find(w);
        Rational value = it == weights.end() ? Rational(0) : it->second;
        line += to_string(w) + "=" + to_string(value);
    }
    return line;
}

int cmd_quantize(Rule rule, const std::string& expr, std::ostream& out) {
    ClassicalPoly h = parse_classical(expr);
    out << to_string(normal_form(quantize(rule, h))) << "\n";
    return 0;
}

int cmd_normal_form(const std::string& expr, std::ostream& out) {
    out << to_string(normal_form(parse_noncommutative(expr))) << "\n";
    return 0;
}

int cmd_equal(const std::string& lhs, const std::string& rhs, std::ostream& out) {
    NCPoly diff = normal_form(parse_noncommutative(lhs) - parse_noncommutative(rhs));
    out << to_string(diff) << "\n";
    return diff.is_zero() ? 0 : 1;
}

int cmd_check_eq7(unsigned max_m, unsigned max_n, std::ostream& out) {
    bool all_ok = true;
    for (unsigned m = 1; m <= max_m; ++m) {
        for (unsigned n = 1; n <= max_n; ++n) {
            bool ok = check_eq7(m, n);
            all_ok = all_ok && ok;
            out << (ok ? "PASS" : "FAIL") << " eq7 m=" << m << " n=" << n << "\n";
        }
    }
    return all_ok ? 0 : 1;
}

int cmd_check_eq11(Rule rule, const std::string& rule_name, const std::string& expr,
                   std::ostream& out) {
    ClassicalPoly h = parse_classical(expr);
    bool all_ok = true;
    for (const auto& [m, c] : h.terms()) {
        auto [q_ok, p_ok] = check_eq11(rule, m);
        all_ok = all_ok && q_ok && p_ok;
        out << (q_ok ? "PASS" : "FAIL") << " eq11-q rule=" << rule_name
            << " monomial=" << to_string(m) << "\n";
        out << (p_ok ? "PASS" : "FAIL") << " eq11-p rule=" << rule_name
            << " monomial=" << to_string(m) << "\n";
    }
    return all_ok ? 0 : 1;
}

int cmd_solve_orderings(unsigned s, unsigned r, std::ostream& out, std::ostream& err) {
    ClassicalMonomial m{s, r};
    SolutionSpace space = ordering_solution_space(m);
    if (!space.feasible) {
        err << "error: infeasible: no ordering weights satisfy the conditions for "
            << to_string(m) << "\n";
        return 1;
    }
    out << "monomial: " << to_string(m) << "\n";
    out << "orderings: " << space.words.size() << "\n";
    out << "dimension: " << space.dimension << "\n";
    out << "particular: " << weights_line(space.words, space.particular.weights) << "\n";
    for (std::size_t k = 0; k < space.nullspace_basis.size(); ++k) {
        out << "basis[" << k << "]: " << weights_line(space.words, space.nullspace_basis[k]) << "\n";
    }
    bool bj_in = solution_space_contains(space, rule_weights(Rule::BornJordan, m));
    bool weyl_in = solution_space_contains(space, rule_weights(Rule::Weyl, m));
    out << "bj: " << (bj_in ? "member" : "not-member") << "\n";
    out << "weyl: " << (weyl_in ? "member" : "not-member") << "\n";
    return 0;
}

int cmd_bj_weyl_diff(const std::string& expr, std::ostream& out) {
    ClassicalPoly h = parse_classical(expr);
    NCPoly diff = normal_form(bj_quantize(h) - weyl_quantize(h));
    out << to_string(diff) << "\n";
    out << "central: " << (diff.is_central() ? "true" : "false") << "\n";
    return 0;
}

int cmd_find_noncentral(unsigned bound, std::ostream& out) {
    auto found = smallest_noncentral_difference(bound);
    if (!found) {
        out << "none\n";
        return 0;
    }
    out << to_string(*found) << "\n";
    out << "difference: " << to_string(bj_weyl_difference(*found).difference) << "\n";
    return 0;
}

struct SimulateOptions {
    std::string expr;
    std::string observable = "q";
    int n = 64;
    double hbar = 1.0;
    double t_max = 1.0;
    int steps = 200;
    std::string csv_path;
    std::string json_path;
};

int cmd_simulate(const SimulateOptions& opt, std::ostream& out, std::ostream& err) {
    ClassicalPoly h = parse_classical(opt.expr);
    auto [q, p] = fock_generators(opt.n, opt.hbar);
    const MatrixOperator& a = opt.observable == "q" ? q : p;
    StateVector psi0 = default_low_mode_state(opt.n);
    std::vector<double> grid = time_grid(opt.t_max, opt.steps);

    SimReport report = divergence_experiment(h, a, psi0, grid, opt.n, opt.hbar);
    report.observable = opt.observable;

    double max_div = 0.0;
    double max_div_t = 0.0;
    for (std::size_t i = 0; i < report.divergence.size(); ++i) {
        if (report.divergence[i] > max_div) {
            max_div = report.divergence[i];
            max_div_t = report.time_grid[i];
        }
    }

    out.precision(12);
    out << "input: " << report.classical_input << "\n";
    out << "N: " << opt.n << " hbar: " << opt.hbar << " observable: " << opt.observable << "\n";
    out << "max_divergence: " << max_div << " at t=" << max_div_t << "\n";
    out << "energy_drift_bj: " << report.energy_drift_bj << "\n";
    out << "energy_drift_weyl: " << report.energy_drift_weyl << "\n";
    out << "picture_delta: " << report.picture_delta << "\n";
    out << "hermitize_deviation_bj: " << report.hermitize_deviation_bj << "\n";
    out << "hermitize_deviation_weyl: " << report.hermitize_deviation_weyl << "\n";
    out << "low_mode_ok: " << (report.low_mode_ok ? "true" : "false") << "\n";

    if (!opt.csv_path.empty()) {
        std::ofstream f(opt.csv_path);
        if (!f) {
            err << "error: io: cannot open '" << opt.csv_path << "' for writing\n";
            return 2;
        }
        write_report_csv(f, report);
        out << "wrote " << opt.csv_path << "\n";
    }
    if (!opt.json_path.empty()) {
        std::ofstream f(opt.json_path);
        if (!f) {
            err << "error: io: cannot open '" << opt.json_path << "' for writing\n";
            return 2;
        }
        write_report_json(f, report);
        out << "wrote " << opt.json_path << "\n";
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Born-Jordan vs Weyl quantization workbench"};
    app.require_subcommand(1);

    std::string rule_name = "bj";
    std::string expr, lhs, rhs;
    unsigned max_m = 6, max_n = 6;
    unsigned mono_s = 0, mono_r = 0;
    unsigned bound = 8;
    SimulateOptions sim;

    auto* c_quantize = app.add_subcommand("quantize", "Quantize a classical polynomial");
    c_quantize->add_option("--rule", rule_name)->check(CLI::IsMember(kRuleNames))->required();
    c_quantize->add_option("--expr", expr)->required();

    auto* c_nf = app.add_subcommand("normal-form", "Normal form of a noncommutative expression");
    c_nf->add_option("--expr", expr)->required();

    auto* c_equal = app.add_subcommand("equal", "Compare two noncommutative expressions");
    c_equal->add_option("--lhs", lhs)->required();
    c_equal->add_option("--rhs", rhs)->required();

    auto* c_eq7 = app.add_subcommand("check-eq7", "Check the power commutator identity");
    c_eq7->add_option("--max-m", max_m)->required();
    c_eq7->add_option("--max-n", max_n)->required();

    auto* c_eq11 = app.add_subcommand("check-eq11", "Check the commutator/derivative conditions");
    c_eq11->add_option("--rule", rule_name)->check(CLI::IsMember(kRuleNames))->required();
    c_eq11->add_option("--expr", expr)->required();

    auto* c_solve = app.add_subcommand("solve-orderings", "Solve for admissible ordering weights");
    c_solve->add_option("--s", mono_s)->required();
    c_solve->add_option("--r", mono_r)->required();

    auto* c_diff = app.add_subcommand("bj-weyl-diff", "Difference of the two quantizations");
    c_diff->add_option("--expr", expr)->required();

    auto* c_find = app.add_subcommand("find-noncentral", "Smallest non-central BJ-Weyl difference");
    c_find->add_option("--bound", bound)->required();

    auto* c_sim = app.add_subcommand("simulate", "Evolve under both quantizations and compare");
    c_sim->add_option("--expr", sim.expr)->required();
    c_sim->add_option("--observable", sim.observable)->check(CLI::IsMember({"q", "p"}));
    c_sim->add_option("--N", sim.n)->check(CLI::PositiveNumber);
    c_sim->add_option("--hbar", sim.hbar)->check(CLI::PositiveNumber);
    c_sim->add_option("--t-max", sim.t_max)->check(CLI::PositiveNumber);
    c_sim->add_option("--steps", sim.steps)->check(CLI::PositiveNumber);
    c_sim->add_option("--out", sim.csv_path);
    c_sim->add_option("--json", sim.json_path);

    std::vector<const char*> argv;
    argv.push_back("bjw");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: usage: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*c_quantize) return cmd_quantize(kRuleNames.at(rule_name), expr, out);
        if (*c_nf) return cmd_normal_form(expr, out);
        if (*c_equal) return cmd_equal(lhs, rhs, out);
        if (*c_eq7) return cmd_check_eq7(max_m, max_n, out);
        if (*c_eq11) return cmd_check_eq11(kRuleNames.at(rule_name), rule_name, expr, out);
        if (*c_solve) return cmd_solve_orderings(mono_s, mono_r, out, err);
        if (*c_diff) return cmd_bj_weyl_diff(expr, out);
        if (*c_find) return cmd_find_noncentral(bound, out);
        if (*c_sim) return cmd_simulate(sim, out, err);
    } catch (const ParseError& e) {
        err << "error: " << (e.is_mode_error() ? "mode" : "parse") << ": " << e.what()
            << " (offset " << e.pos() << ")\n";
        return 2;
    } catch (const SizeError& e) {
        err << "error: size: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: invalid: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: internal: " << e.what() << "\n";
        return 2;
    }
    err << "error: usage: no subcommand\n";
    return 2;
}

}  // namespace bjw

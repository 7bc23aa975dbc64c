// kspec - command line front end.
//
// Verbs:
//   classify  classify a (p, n) pair for the two rigidity questions
//   pairs     enumerate the exceptional (p_k, n_k) family
//   coeffs    heat-invariant coefficients at (p, n)
//   verify    exhaustive exact checks (lastlemma | duality | a2a | pairs)
//   cpn-fit   fit the CP^n heat-trace expansion and compare with the
//             exact predictions
//
// Exit codes: 0 success, 1 usage or input error, 2 a verify-style run found
// a diff against the claimed tables. Runs are deterministic given argv.

#include "kspec/classifier.hpp"
#include "kspec/cpn_spectrum.hpp"
#include "kspec/diophantine.hpp"
#include "kspec/json_io.hpp"
#include "kspec/patodi.hpp"
#include "kspec/rational.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <string>

namespace {

using kspec::Integer;
using kspec::Rational;
using kspec::json::ordered_json;
namespace classifier = kspec::classifier;
namespace cpn = kspec::cpn;
namespace dioph = kspec::dioph;
namespace patodi = kspec::patodi;

void print_json(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

constexpr const char* kFujitaNote =
    "K. Fujita's volume characterization of CP^n among Fano Kaehler-Einstein "
    "manifolds settles this case";

// ---------------------------------------------------------------- classify

int run_classify(long long p, long long n, const std::string& format) {
    const classifier::ClassificationResult r = classifier::classify(p, n);
    if (format == "json") {
        print_json(kspec::json::to_json(r));
    } else {
        std::cout << "pair                    : (p, n) = (" << r.p << ", " << r.n
                  << ")  [canonical]\n"
                  << "degenerate              : " << (r.degenerate ? "yes" : "no");
        if (r.degenerate) std::cout << "  (k = " << r.degenerate_index << ")";
        std::cout << "\n"
                  << "lambda1                 : " << r.lambdas.lambda1 << "\n"
                  << "lambda2                 : " << r.lambdas.lambda2 << "\n"
                  << "lambda3                 : " << r.lambdas.lambda3 << "\n"
                  << "reduced coefficient     : " << r.reduced_coeff << "\n"
                  << "numerical condition     : " << (r.numerical_ok ? "holds" : "fails")
                  << "\n"
                  << "Q1 verdict              : " << classifier::q1_label(r) << "\n"
                  << "Q2 verdict              : " << classifier::to_string(r.q2_verdict);
        if (r.q2_verdict == classifier::Q2Verdict::RigidViaFujita) {
            std::cout << "  (" << kFujitaNote << ")";
        }
        std::cout << "\n"
                  << "claimed case            : ";
        if (r.theorem1_case) {
            std::cout << *r.theorem1_case;
        } else {
            std::cout << "-";
        }
        std::cout << "\n"
                  << "cohomologically Einstein hypothesis required : "
                  << (r.requires_cohomological_einstein ? "yes" : "no") << "\n";
        for (const auto& w : r.warnings) std::cout << "warning: " << w << "\n";
    }
    return 0;
}

// ------------------------------------------------------------------- pairs

void print_pairs_table(const std::vector<dioph::ExceptionalPair>& pairs) {
    size_t wp = 1, wn = 1;
    for (const auto& e : pairs) {
        wp = std::max(wp, e.p.get_str().size());
        wn = std::max(wn, e.n.get_str().size());
    }
    std::cout << "  k  " << std::setw(static_cast<int>(wp)) << "p"
              << "  " << std::setw(static_cast<int>(wn)) << "n" << "\n";
    for (const auto& e : pairs) {
        std::cout << std::setw(3) << e.k << "  " << std::setw(static_cast<int>(wp))
                  << e.p.get_str() << "  " << std::setw(static_cast<int>(wn))
                  << e.n.get_str() << "\n";
    }
}

int run_pairs(long long count, long long max_n, const std::string& method,
              const std::string& format) {
    std::vector<dioph::ExceptionalPair> rec, brute, out;
    bool compared = false, agree = true;

    if (count > 0) {
        rec = dioph::enumerate_recursive(count);
        if (method != "recursion") {
            const Integer& bound = rec.back().n;
            if (bound > 100'000'000) {
                std::cerr << "pairs: brute force up to n = " << bound.get_str()
                          << " is not practical; use --max-n or --method recursion\n";
                return 1;
            }
            brute = dioph::enumerate_bruteforce(bound.get_si());
        }
    } else {
        if (method != "bruteforce") rec = dioph::enumerate_recursive_up_to(max_n);
        if (method != "recursion") brute = dioph::enumerate_bruteforce(max_n);
    }

    if (method == "both") {
        compared = true;
        agree = rec == brute;
    }
    out = (method == "bruteforce") ? brute : rec;

    if (format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& e : out) arr.push_back(kspec::json::to_json(e));
        ordered_json j{{"method", method}, {"pairs", arr}};
        if (compared) j["agree"] = agree;
        print_json(j);
    } else {
        print_pairs_table(out);
        if (compared) {
            std::cout << (agree ? "recursion and brute force agree\n"
                                : "recursion and brute force DISAGREE\n");
        }
    }
    if (compared && !agree) {
        std::cerr << "pairs: the recurrence and the direct scan disagree; "
                     "this indicates an implementation bug\n";
        return 2;
    }
    return 0;
}

// ------------------------------------------------------------------ coeffs

int run_coeffs(long long p, long long n, const std::string& c_str,
               const std::string& vol_str, const std::string& format) {
    const patodi::PatodiCoefficients l = patodi::lambda_coefficients(p, n);
    const patodi::NumericalCondition cond = patodi::numerical_condition(p, n);
    const Rational a1c = patodi::a1_coefficient(p, n);

    ordered_json j = kspec::json::to_json(l);
    j["a1_coefficient"] = a1c.str();
    j["reduced_coeff"] = cond.reduced_coeff.str();
    j["numerical_ok"] = cond.holds;

    bool with_invariants = !c_str.empty();
    patodi::HeatInvariants inv;
    Rational c, vol;
    if (with_invariants) {
        c = Rational::parse(c_str);
        vol = Rational::parse(vol_str);
        inv = patodi::heat_invariants_const_hsc(p, n, c, vol);
        j["c"] = c.str();
        j["vol"] = vol.str();
        j["heat_invariants"] = kspec::json::to_json(inv);
    }

    if (format == "json") {
        print_json(j);
    } else {
        std::cout << "pair                : (p, n) = (" << l.p << ", " << l.n
                  << ")  [canonical]\n"
                  << "lambda1             : " << l.lambda1 << "\n"
                  << "lambda2             : " << l.lambda2 << "\n"
                  << "lambda3             : " << l.lambda3 << "\n"
                  << "a1 coefficient      : " << a1c << "\n"
                  << "reduced coefficient : " << cond.reduced_coeff << "\n"
                  << "numerical condition : " << (cond.holds ? "holds" : "fails")
                  << "\n";
        if (with_invariants) {
            std::cout << "constant HSC c      : " << c << "  (volume " << vol << ")\n"
                      << "a0                  : " << inv.a0 << "\n"
                      << "a1                  : " << inv.a1 << "\n"
                      << "a2                  : " << inv.a2 << "\n";
        }
    }
    return 0;
}

// ------------------------------------------------------------------ verify

int run_verify_lastlemma(long long max_n, const std::string& format) {
    const classifier::LastLemmaReport rep = classifier::verify_lastlemma(max_n);
    const bool clean = rep.computed_minus_claimed.empty() &&
                       rep.claimed_minus_computed.empty();
    if (format == "json") {
        print_json(kspec::json::to_json(rep));
    } else {
        const auto print_list =
            [](const std::vector<std::pair<long long, long long>>& v) {
                if (v.empty()) {
                    std::cout << "(none)";
                }
                for (const auto& [p, n] : v) std::cout << "(" << p << "," << n << ") ";
                std::cout << "\n";
            };
        std::cout << "check                       : lastlemma (positivity region vs "
                     "claimed closed form)\n"
                  << "max n                       : " << max_n << "\n";
        std::cout << "computed minus claimed      : ";
        print_list(rep.computed_minus_claimed);
        std::cout << "claimed minus computed      : ";
        print_list(rep.claimed_minus_computed);
        for (long long p = 0; p <= 2; ++p) {
            std::cout << "row p=" << p << "                     : holds for n in {";
            bool first = true;
            long long run_start = -1, prev = -2;
            const auto flush = [&](long long end) {
                if (run_start < 0) return;
                if (!first) std::cout << ", ";
                first = false;
                if (run_start == end) {
                    std::cout << run_start;
                } else {
                    std::cout << run_start << ".." << end;
                }
            };
            for (const auto& cell : rep.boundary) {
                if (cell.p != p || !cell.holds) continue;
                if (cell.n != prev + 1) {
                    flush(prev);
                    run_start = cell.n;
                }
                prev = cell.n;
            }
            flush(prev);
            std::cout << "}\n";
        }
        std::cout << (clean ? "no diff against the claimed set\n"
                            : "DIFF against the claimed set (see lists above)\n");
    }
    return clean ? 0 : 2;
}

int run_verify_cells(const std::string& name, long long max_n,
                     const std::vector<std::pair<long long, long long>>& bad,
                     const std::string& format) {
    if (format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& [p, n] : bad) arr.push_back(ordered_json{{"p", p}, {"n", n}});
        print_json(ordered_json{{"check", name}, {"max_n", max_n}, {"mismatches", arr}});
    } else {
        std::cout << "check      : " << name << "\n"
                  << "max n      : " << max_n << "\n"
                  << "mismatches : " << bad.size() << (bad.empty() ? "  (exact)" : "")
                  << "\n";
        for (const auto& [p, n] : bad) std::cout << "  (" << p << "," << n << ")\n";
    }
    return bad.empty() ? 0 : 2;
}

int run_verify_pairs(long long max_n, const std::string& format) {
    const std::vector<dioph::ExceptionalPair> brute = dioph::enumerate_bruteforce(max_n);
    const std::vector<dioph::ExceptionalPair> rec =
        dioph::enumerate_recursive_up_to(max_n);
    const bool agree = rec == brute;
    if (format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& e : brute) arr.push_back(kspec::json::to_json(e));
        print_json(ordered_json{{"check", "pairs"},
                                {"max_n", max_n},
                                {"agree", agree},
                                {"pairs", arr}});
    } else {
        std::cout << "check  : pairs (recurrence vs direct scan)\n"
                  << "max n  : " << max_n << "\n"
                  << "found  : " << brute.size() << " pair(s)\n"
                  << "agree  : " << (agree ? "yes" : "NO") << "\n";
        print_pairs_table(brute);
    }
    return agree ? 0 : 2;
}

// ------------------------------------------------------------------ cpn-fit

int run_cpn_fit(long long n, const std::string& c_str, int degree,
                const std::string& tmin, const std::string& tmax, int points,
                unsigned digits, const std::string& format) {
    const Rational c = Rational::parse(c_str);
    const cpn::HeatTraceFit fit =
        cpn::fit_asymptotics(n, c, degree, tmin, tmax, points, digits);

    // Exact predictions. The ratios are volume-free; a0 itself is checked
    // against the Riemannian volume (4 pi / c)^n / n!.
    const Rational s = Rational(n * (n + 1)) * c;  // scalar curvature
    const Rational a1_over_a0 = patodi::a1_coefficient(0, n) * s;
    const Rational a2_over_a0 = patodi::a2_const_hsc(0, n, c, Rational(1));
    const cpn::Real a0_pred = cpn::cpn_volume(n, c);

    const auto rel_err = [](const cpn::Real& got, const cpn::Real& want) {
        return cpn::Real(abs(got - want) / abs(want));
    };
    cpn::Real e0, e1, e2;
    const bool have1 = fit.fitted.size() >= 2, have2 = fit.fitted.size() >= 3;
    e0 = rel_err(fit.fitted[0], a0_pred);
    if (have1) e1 = rel_err(fit.fitted[1] / fit.fitted[0], cpn::to_real(a1_over_a0));
    if (have2) e2 = rel_err(fit.fitted[2] / fit.fitted[0], cpn::to_real(a2_over_a0));

    if (format == "json") {
        ordered_json j = kspec::json::to_json(fit);
        j["predicted"] = ordered_json{
            {"a0_formula", "(4*pi/c)^n / n!"},
            {"a0", a0_pred.str(static_cast<std::streamsize>(digits))},
            {"a1_over_a0", a1_over_a0.str()},
            {"a2_over_a0", a2_over_a0.str()}};
        ordered_json errs{{"a0", e0.str(6)}};
        if (have1) errs["a1_over_a0"] = e1.str(6);
        if (have2) errs["a2_over_a0"] = e2.str(6);
        j["relative_errors"] = errs;
        print_json(j);
    } else {
        std::cout << "CP^" << n << " with c = " << c << ", degree " << degree << ", "
                  << points << " points in [" << tmin << ", " << tmax << "], "
                  << digits << " digits\n"
                  << "max truncation bound : " << fit.truncation_bound.str(6) << "\n"
                  << "rms fit residual     : " << fit.fit_residual.str(6)
                  << (fit.residual_ok ? "" : "  ** ABOVE SANITY GATE **") << "\n";
        for (size_t i = 0; i < fit.fitted.size(); ++i) {
            std::cout << "a" << i << " = " << fit.fitted[i].str(30) << "\n";
        }
        std::cout << "a0 predicted         : " << a0_pred.str(30) << "   (rel err "
                  << e0.str(6) << ")\n";
        if (have1) {
            std::cout << "a1/a0 predicted      : " << a1_over_a0 << "   (rel err "
                      << e1.str(6) << ")\n";
        }
        if (have2) {
            std::cout << "a2/a0 predicted      : " << a2_over_a0 << "   (rel err "
                      << e2.str(6) << ")\n";
        }
    }
    if (!fit.residual_ok) {
        std::cerr << "cpn-fit: relative residual " << fit.relative_residual.str(6)
                  << " exceeds the sanity gate; the fit is ill-conditioned\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact heat-invariant and spectral-rigidity toolkit for "
                 "Kaehler manifolds"};
    app.require_subcommand(1);

    const auto format_opt = CLI::IsMember({"table", "json"});

    // classify
    long long cl_p = 0, cl_n = 1;
    std::string cl_format = "table";
    CLI::App* cmd_classify =
        app.add_subcommand("classify", "classify a (p, n) pair");
    cmd_classify->add_option("-p", cl_p, "form degree p")->required();
    cmd_classify->add_option("-n", cl_n, "complex dimension n")->required();
    cmd_classify->add_option("--format", cl_format)->check(format_opt);

    // pairs
    long long pr_count = 0, pr_max_n = 0;
    std::string pr_method = "recursion", pr_format = "table";
    CLI::App* cmd_pairs =
        app.add_subcommand("pairs", "enumerate the exceptional pair family");
    CLI::Option* opt_count = cmd_pairs->add_option("--count", pr_count, "number of pairs");
    CLI::Option* opt_maxn = cmd_pairs->add_option("--max-n", pr_max_n, "scan bound on n");
    opt_count->excludes(opt_maxn);
    cmd_pairs->add_option("--method", pr_method)
        ->check(CLI::IsMember({"recursion", "bruteforce", "both"}));
    cmd_pairs->add_option("--format", pr_format)->check(format_opt);

    // coeffs
    long long co_p = 0, co_n = 1;
    std::string co_c, co_vol = "1", co_format = "table";
    CLI::App* cmd_coeffs =
        app.add_subcommand("coeffs", "heat-invariant coefficients at (p, n)");
    cmd_coeffs->add_option("-p", co_p, "form degree p")->required();
    cmd_coeffs->add_option("-n", co_n, "complex dimension n")->required();
    cmd_coeffs->add_option("--c", co_c, "constant HSC (rational, e.g. 4 or 1/2)");
    cmd_coeffs->add_option("--vol", co_vol, "volume (rational)");
    cmd_coeffs->add_option("--format", co_format)->check(format_opt);

    // verify
    CLI::App* cmd_verify = app.add_subcommand("verify", "exhaustive exact checks");
    cmd_verify->require_subcommand(1);
    struct VerifySub {
        CLI::App* cmd = nullptr;
        long long max_n = 0;
        std::string format = "table";
    };
    VerifySub v_lastlemma, v_duality, v_a2a, v_pairs;
    const auto add_verify = [&](VerifySub& sub, const char* name, const char* desc) {
        sub.cmd = cmd_verify->add_subcommand(name, desc);
        sub.cmd->add_option("--max-n", sub.max_n, "sweep bound on n")->required();
        sub.cmd->add_option("--format", sub.format)->check(format_opt);
    };
    add_verify(v_lastlemma, "lastlemma",
               "positivity region vs its claimed closed form");
    add_verify(v_duality, "duality", "p -> 2n-p invariance of the raw formulas");
    add_verify(v_a2a, "a2a", "reduction identity for the a2 coefficient");
    add_verify(v_pairs, "pairs", "recurrence vs direct scan");

    // cpn-fit
    long long cf_n = 1;
    std::string cf_c, cf_tmin = "1e-3", cf_tmax = "1e-2", cf_format = "json";
    int cf_degree = 4, cf_points = 24;
    unsigned cf_digits = 60;
    CLI::App* cmd_fit =
        app.add_subcommand("cpn-fit", "fit the CP^n heat-trace expansion");
    cmd_fit->add_option("-n", cf_n, "complex dimension n")->required();
    cmd_fit->add_option("--c", cf_c, "constant HSC (rational)")->required();
    cmd_fit->add_option("--degree", cf_degree, "fit degree D");
    cmd_fit->add_option("--tmin", cf_tmin, "grid lower end");
    cmd_fit->add_option("--tmax", cf_tmax, "grid upper end");
    cmd_fit->add_option("--points", cf_points, "grid size");
    cmd_fit->add_option("--digits", cf_digits, "working precision (decimal digits)");
    cmd_fit->add_option("--format", cf_format)->check(format_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the message and usage hint to stderr
        return 1;
    }

    try {
        if (cmd_classify->parsed()) return run_classify(cl_p, cl_n, cl_format);
        if (cmd_pairs->parsed()) {
            if (pr_count <= 0 && pr_max_n <= 0) {
                std::cerr << "pairs: one of --count or --max-n is required\n";
                return 1;
            }
            return run_pairs(pr_count, pr_max_n, pr_method, pr_format);
        }
        if (cmd_coeffs->parsed()) {
            return run_coeffs(co_p, co_n, co_c, co_vol, co_format);
        }
        if (cmd_verify->parsed()) {
            if (v_lastlemma.cmd->parsed()) {
                return run_verify_lastlemma(v_lastlemma.max_n, v_lastlemma.format);
            }
            if (v_duality.cmd->parsed()) {
                return run_verify_cells("duality", v_duality.max_n,
                                        patodi::duality_mismatches(v_duality.max_n),
                                        v_duality.format);
            }
            if (v_a2a.cmd->parsed()) {
                return run_verify_cells(
                    "a2a", v_a2a.max_n,
                    patodi::reduction_identity_mismatches(v_a2a.max_n), v_a2a.format);
            }
            if (v_pairs.cmd->parsed()) {
                return run_verify_pairs(v_pairs.max_n, v_pairs.format);
            }
        }
        if (cmd_fit->parsed()) {
            return run_cpn_fit(cf_n, cf_c, cf_degree, cf_tmin, cf_tmax, cf_points,
                               cf_digits, cf_format);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

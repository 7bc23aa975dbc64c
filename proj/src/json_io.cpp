#include "kspec/json_io.hpp"

namespace kspec::json {

namespace {

std::string real_str(const cpn::Real& x, unsigned digits) {
    return x.str(static_cast<std::streamsize>(digits));
}

}  // namespace

ordered_json to_json(const Rational& r) { return r.str(); }

ordered_json to_json(const Integer& z) { return z.get_str(); }

ordered_json to_json(const patodi::PatodiCoefficients& l) {
    return ordered_json{{"p", l.p},
                        {"n", l.n},
                        {"lambda1", l.lambda1.str()},
                        {"lambda2", l.lambda2.str()},
                        {"lambda3", l.lambda3.str()}};
}

ordered_json to_json(const patodi::HeatInvariants& h) {
    return ordered_json{{"p", h.p},
                        {"n", h.n},
                        {"a0", h.a0.str()},
                        {"a1", h.a1.str()},
                        {"a2", h.a2.str()}};
}

ordered_json to_json(const patodi::NumericalCondition& c, long long p, long long n) {
    return ordered_json{{"p", p},
                        {"n", n},
                        {"holds", c.holds},
                        {"reduced_coeff", c.reduced_coeff.str()},
                        {"lambda1", c.lambda1.str()}};
}

ordered_json to_json(const dioph::ExceptionalPair& pair) {
    return ordered_json{{"k", pair.k}, {"p", pair.p.get_str()}, {"n", pair.n.get_str()}};
}

ordered_json to_json(const classifier::ClassificationResult& r) {
    ordered_json j{{"p", r.p},
                   {"n", r.n},
                   {"degenerate", r.degenerate},
                   {"lambdas", to_json(r.lambdas)},
                   {"reduced_coeff", r.reduced_coeff.str()},
                   {"numerical_ok", r.numerical_ok},
                   {"q1_verdict", classifier::q1_label(r)},
                   {"q2_verdict", std::string(classifier::to_string(r.q2_verdict))}};
    if (r.theorem1_case) {
        j["theorem1_case"] = *r.theorem1_case;
    } else {
        j["theorem1_case"] = nullptr;
    }
    j["requires_cohomological_einstein"] = r.requires_cohomological_einstein;
    j["warnings"] = r.warnings;
    return j;
}

ordered_json to_json(const classifier::LastLemmaReport& rep) {
    const auto pairs_to_json = [](const std::vector<std::pair<long long, long long>>& v) {
        ordered_json arr = ordered_json::array();
        for (const auto& [p, n] : v) arr.push_back(ordered_json{{"p", p}, {"n", n}});
        return arr;
    };
    ordered_json boundary = ordered_json::array();
    for (const auto& cell : rep.boundary) {
        boundary.push_back(ordered_json{{"p", cell.p},
                                        {"n", cell.n},
                                        {"holds", cell.holds},
                                        {"claimed", cell.claimed},
                                        {"lambda1", cell.lambda1.str()},
                                        {"reduced_coeff", cell.reduced_coeff.str()}});
    }
    return ordered_json{{"check", "lastlemma"},
                        {"max_n", rep.max_n},
                        {"computed_minus_claimed", pairs_to_json(rep.computed_minus_claimed)},
                        {"claimed_minus_computed", pairs_to_json(rep.claimed_minus_computed)},
                        {"boundary", boundary}};
}

ordered_json to_json(const cpn::HeatTraceFit& fit) {
    ordered_json grid = ordered_json::array();
    for (const auto& t : fit.t_grid) grid.push_back(real_str(t, 12));
    ordered_json coeffs = ordered_json::array();
    for (const auto& a : fit.fitted) coeffs.push_back(real_str(a, fit.digits));
    return ordered_json{{"n", fit.n},
                        {"c", fit.c.str()},
                        {"degree", fit.degree},
                        {"digits", fit.digits},
                        {"points", static_cast<long long>(fit.t_grid.size())},
                        {"t_grid", grid},
                        {"fitted_a", coeffs},
                        {"fit_residual", real_str(fit.fit_residual, 12)},
                        {"relative_residual", real_str(fit.relative_residual, 12)},
                        {"residual_ok", fit.residual_ok},
                        {"truncation_bound", real_str(fit.truncation_bound, 12)}};
}

}  // namespace kspec::json

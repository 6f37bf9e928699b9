/*
  baker-gamma, a toolkit of exact and interval arithmetic certificates
  around the log-gamma reflection identity.

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0
*/
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bakergamma/algebraic.hpp"
#include "bakergamma/decimal.hpp"
#include "bakergamma/errors.hpp"
#include "bakergamma/gamma_eval.hpp"
#include "bakergamma/periods.hpp"
#include "bakergamma/scan.hpp"
#include "bakergamma/theorems.hpp"

namespace bg = bakergamma;
using json = nlohmann::ordered_json;

// Exit-code contract: 0 pass/consistent, 1 fail/inconsistent, 2 usage error,
// 3 I/O error. Internal faults surface as 1 with a diagnostic on stderr.
namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

constexpr unsigned kEndpointDigits = 30;

long default_prec() {
    if (const char* env = std::getenv("BG_PREC_BITS")) {
        const std::string s(env);
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(s, &used);
        } catch (const std::exception&) {
            throw bg::DomainError("BG_PREC_BITS: not an integer: '" + s + "'");
        }
        if (used != s.size() || v < 64 || v > (1L << 22)) {
            throw bg::DomainError("BG_PREC_BITS: expected an integer in [64, 4194304]");
        }
        return v;
    }
    return bg::kDefaultPrecBits;
}

bg::Rational parse_unit_rational(const std::string& text, const char* what) {
    const bg::Rational x = bg::Rational::parse(text);
    bg::require_unit_interval(x, what);
    return x;
}

json coeffs_json(const bg::IntPolynomial& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) {
        arr.push_back(c.get_str());
    }
    return arr;
}

json isolator_json(const bg::AlgebraicNumber& a) {
    return json::array({a.iso_lo().num().get_str(), a.iso_lo().den().get_str(),
                        a.iso_hi().num().get_str(), a.iso_hi().den().get_str()});
}

json enclosure_json(const bg::Interval& iv) {
    return json{{"lo", bg::interval_lo_decimal(iv, kEndpointDigits)},
                {"hi", bg::interval_hi_decimal(iv, kEndpointDigits)}};
}

void emit(const json& j) {
    std::cout << j.dump() << "\n";
}

int run_minpoly(const std::string& arg, long prec, unsigned digits) {
    const bg::Rational x = parse_unit_rational(arg, "minpoly");
    const bg::AlgebraicNumber a = bg::minpoly_sin(x);
    const bg::Interval enc = refine(a, prec);
    json j;
    j["x_num"] = x.num().get_str();
    j["x_den"] = x.den().get_str();
    j["minpoly"] = coeffs_json(a.minpoly());
    j["degree"] = a.degree();
    j["isolator"] = isolator_json(a);
    j["decimal"] = bg::interval_mid_decimal(enc, digits);
    j["decimal_digits"] = digits;
    emit(j);
    return kExitPass;
}

int run_eval(const std::string& arg, long prec, unsigned digits, bool verify) {
    const bg::Rational x = parse_unit_rational(arg, "eval");
    const bg::Interval f =
        bg::f_eval(x, prec, verify ? bg::FEvalMode::Verify : bg::FEvalMode::Fast);
    json j;
    j["x_num"] = x.num().get_str();
    j["x_den"] = x.den().get_str();
    j["prec_bits"] = prec;
    j["mode"] = verify ? "verify" : "fast";
    j["f_mid"] = bg::interval_mid_decimal(f, digits);
    j["f_width"] = bg::interval_width_decimal(f, digits);
    j["f_lo"] = bg::interval_lo_decimal(f, kEndpointDigits);
    j["f_hi"] = bg::interval_hi_decimal(f, kEndpointDigits);
    emit(j);
    return kExitPass;
}

int run_scan(const std::string& from, const std::string& to, unsigned long steps, long prec,
             unsigned digits, bool verify, unsigned threads, const std::string& out_path) {
    bg::ScanRequest req;
    req.from = parse_unit_rational(from, "scan");
    req.to = parse_unit_rational(to, "scan");
    req.steps = steps;
    req.digits = digits;
    req.prec = prec;
    req.mode = verify ? bg::FEvalMode::Verify : bg::FEvalMode::Fast;
    req.threads = threads;
    const auto rows = bg::scan_rows(req);

    if (out_path.empty() || out_path == "-") {
        bg::write_csv(std::cout, rows);
        return std::cout.good() ? kExitPass : kExitIo;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "scan: cannot open '" << out_path << "' for writing\n";
        return kExitIo;
    }
    bg::write_csv(out, rows);
    out.flush();
    if (!out) {
        std::cerr << "scan: write to '" << out_path << "' failed\n";
        return kExitIo;
    }
    return kExitPass;
}

json residual_json(const bg::ResidualReport& r) {
    json j;
    j["x_num"] = r.x.num().get_str();
    j["x_den"] = r.x.den().get_str();
    j["prec_bits"] = r.prec_bits;
    j["residual_lo"] = bg::interval_lo_decimal(r.residual, kEndpointDigits);
    j["residual_hi"] = bg::interval_hi_decimal(r.residual, kEndpointDigits);
    j["pass"] = r.pass;
    return j;
}

const std::vector<bg::Rational>& verify_sample_set() {
    static const std::vector<bg::Rational> xs = {
        {1, 7}, {1, 5}, {1, 4}, {1, 3}, {5, 12}, {1, 2}, {2, 3}, {7, 8}};
    return xs;
}

int run_verify(const std::string& kind, long prec) {
    json j;
    j["command"] = "verify";
    j["kind"] = kind;
    j["prec_bits"] = prec;
    json checks = json::array();
    bool pass = true;

    if (kind == "reflection") {
        for (const auto& x : verify_sample_set()) {
            const auto r = bg::verify_reflection(x, prec);
            checks.push_back(residual_json(r));
            pass = pass && r.pass;
        }
    } else if (kind == "counterexample") {
        const bg::Rational x1(1, 4), x2(3, 4);
        const bg::BakerPeriod period = bg::f_difference(x1, x2);
        const auto verdict = bg::nullity(period, prec);
        const bool exact_null = verdict.kind == bg::NullityKind::Null;

        const bg::Interval diff = sub(bg::f_eval(x1, prec), bg::f_eval(x2, prec));
        const bool numeric_null = diff.contains_zero();

        // f(1/4) must agree with log(pi) + log(2)/2 within combined widths
        const bg::Interval expected =
            add(bg::log_pi(prec),
                mul_q(log(bg::Interval::from_rational(bg::Rational(2), prec)), mpq_class(1, 2)));
        const bool value_match = overlap(bg::f_eval(x1, prec), expected);

        json c;
        c["period_terms"] = period.terms().size();
        c["exact_null"] = exact_null;
        c["difference_lo"] = bg::interval_lo_decimal(diff, kEndpointDigits);
        c["difference_hi"] = bg::interval_hi_decimal(diff, kEndpointDigits);
        c["difference_contains_zero"] = numeric_null;
        c["f_quarter_matches_log_pi_plus_half_log2"] = value_match;
        checks.push_back(c);
        pass = exact_null && numeric_null && value_match;
    } else if (kind == "symmetry") {
        for (const auto& x : verify_sample_set()) {
            const bg::Interval a = bg::f_eval(x, prec);
            const bg::Interval b = bg::f_eval(x.one_minus(), prec);
            const bool ok = overlap(a, b);
            json c;
            c["x"] = x.str();
            c["mirror"] = x.one_minus().str();
            c["enclosures_overlap"] = ok;
            checks.push_back(c);
            pass = pass && ok;
        }
    } else if (kind == "monotonic") {
        // strict decrease of f on (0, 1/2], certified by interval separation
        std::vector<bg::Rational> grid;
        for (long k = 1; k <= 50; ++k) grid.emplace_back(k, 100);
        bool ok = true;
        for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
            const bg::Interval fi = bg::f_eval(grid[i], prec);
            const bg::Interval fj = bg::f_eval(grid[i + 1], prec);
            ok = ok && definitely_less(fj, fi);
        }
        json c;
        c["grid_points"] = grid.size();
        c["strictly_decreasing_on_left_half"] = ok;
        checks.push_back(c);
        pass = ok;
    } else {
        throw bg::DomainError("verify: unknown kind '" + kind + "'");
    }

    j["checks"] = checks;
    j["pass"] = pass;
    emit(j);
    return pass ? kExitPass : kExitFail;
}

int run_exceptions(const std::string& set_text) {
    const auto s = bg::HypotheticalExceptionSet::parse(set_text);
    const auto v = bg::exception_set_analyze(s);

    json j;
    json members = json::array();
    for (const auto& x : s.members()) members.push_back(x.str());
    j["members"] = members;
    j["consistent"] = v.consistent;
    if (v.theorem_case) {
        j["case"] = *v.theorem_case == bg::TheoremCase::I    ? "I"
                    : *v.theorem_case == bg::TheoremCase::II ? "II"
                                                             : "III";
    } else {
        j["case"] = nullptr;
    }
    switch (v.log_pi_status) {
        case bg::LogPiStatus::Transcendental: j["log_pi_status"] = "Transcendental"; break;
        case bg::LogPiStatus::Algebraic: j["log_pi_status"] = "Algebraic"; break;
        default: j["log_pi_status"] = "Undetermined"; break;
    }
    switch (v.violation) {
        case bg::Violation::None: j["violation"] = nullptr; break;
        case bg::Violation::MoreThanTwo: j["violation"] = "MoreThanTwo"; break;
        case bg::Violation::HalfIntervalBound: j["violation"] = "HalfIntervalBound"; break;
        case bg::Violation::SymmetryClosure: j["violation"] = "SymmetryClosure"; break;
    }
    j["uses"] = bg::ExceptionVerdict::uses();
    emit(j);
    return v.consistent ? kExitPass : kExitFail;
}

json period_json(const bg::BakerPeriod& p) {
    json terms = json::array();
    for (const auto& t : p.terms()) {
        json term;
        term["beta_num"] = t.beta.num().get_str();
        term["beta_den"] = t.beta.den().get_str();
        term["minpoly"] = coeffs_json(t.alpha.minpoly());
        term["isolator"] = isolator_json(t.alpha);
        terms.push_back(term);
    }
    return json{{"terms", terms}};
}

const char* nullity_kind_name(bg::NullityKind k) {
    switch (k) {
        case bg::NullityKind::Null: return "Null";
        case bg::NullityKind::NonNull: return "NonNull";
        default: return "Unknown";
    }
}

const char* nullity_reason_name(bg::NullityReason r) {
    switch (r) {
        case bg::NullityReason::ExactSymmetry: return "ExactSymmetry";
        case bg::NullityReason::IntervalSeparation: return "IntervalSeparation";
        default: return "Merged";
    }
}

int run_period_diff(const std::string& a1, const std::string& a2, long prec) {
    const bg::Rational x1 = parse_unit_rational(a1, "period diff");
    const bg::Rational x2 = parse_unit_rational(a2, "period diff");
    const bg::BakerPeriod p = bg::f_difference(x1, x2);
    const auto verdict = bg::nullity(p, prec);
    const auto cls = bg::classify(p, prec);

    json j;
    j["x1"] = x1.str();
    j["x2"] = x2.str();
    j["period"] = period_json(p);
    json n;
    n["kind"] = nullity_kind_name(verdict.kind);
    n["reason"] = nullity_reason_name(verdict.reason);
    if (verdict.witness) {
        n["witness"] = enclosure_json(*verdict.witness);
    } else {
        n["witness"] = nullptr;
    }
    j["nullity"] = n;
    j["classification"] = cls == bg::PeriodClass::Zero             ? "Zero"
                          : cls == bg::PeriodClass::Transcendental ? "Transcendental"
                                                                   : "Unknown";
    emit(j);
    return kExitPass;
}

int run_period_pair(const std::string& a1, const std::string& a2, long prec) {
    const bg::Rational x = parse_unit_rational(a1, "period pair");
    const bg::Rational y = parse_unit_rational(a2, "period pair");
    const auto v = bg::pair_classify(x, y, prec);
    json j;
    j["x"] = x.str();
    j["y"] = y.str();
    j["kind"] = v.kind == bg::PairKind::NotApplicable ? "NotApplicable"
                : v.kind == bg::PairKind::AtLeastOneTranscendental
                    ? "AtLeastOneTranscendental"
                    : "Undecided";
    if (v.witness) {
        j["witness"] = enclosure_json(*v.witness);
    } else {
        j["witness"] = nullptr;
    }
    emit(j);
    return kExitPass;
}

int run_pie(const std::string& arg, long prec) {
    const bg::Rational y = parse_unit_rational(arg, "pie");
    const auto rep = bg::pi_e_implication(y, prec);
    json j;
    j["y"] = y.str();
    j["premise"] = rep.premise();
    j["conclusion"] = bg::ImplicationReport::conclusion();
    j["k_minpoly"] = coeffs_json(rep.k.minpoly());
    j["k_is_rational"] = rep.k.is_rational();
    if (rep.k.is_rational()) {
        j["k_value"] = rep.k.rational_value().str();
    }
    j["k_ge_one"] = rep.k_ge_one;
    json support;
    support["k_enclosure"] = enclosure_json(rep.k_enclosure);
    support["k_pi_e_enclosure"] = enclosure_json(rep.k_pi_e);
    support["k_pi_e_excludes_one"] = rep.excludes_one;
    j["numeric_support"] = support;
    j["uses"] = bg::ImplicationReport::uses();
    emit(j);
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact and interval certificates for f(x) = log Gamma(x) + log Gamma(1-x)"};
    app.require_subcommand(1);

    long prec = 0; // resolved after parsing: flag > BG_PREC_BITS > default
    unsigned digits = 40;
    bool verify_mode = false;

    std::string arg_x, arg_from, arg_to, arg_out, arg_set, verify_kind, arg_y;
    unsigned long steps = 0;
    unsigned threads = 0;

    auto add_prec = [&](CLI::App* cmd) {
        cmd->add_option("--prec", prec, "working precision in bits (>= 64)");
    };

    CLI::App* c_minpoly = app.add_subcommand("minpoly", "minimal polynomial of sin(pi x)");
    c_minpoly->add_option("x", arg_x, "rational argument p/q in (0,1)")->required();
    c_minpoly->add_option("--digits", digits, "decimal places of the printed value");
    add_prec(c_minpoly);

    CLI::App* c_eval = app.add_subcommand("eval", "enclosure of f(x)");
    c_eval->add_option("x", arg_x, "rational argument p/q in (0,1)")->required();
    c_eval->add_option("--digits", digits, "decimal places of f_mid");
    c_eval->add_flag("--verify", verify_mode, "evaluate both routes and intersect");
    add_prec(c_eval);

    CLI::App* c_scan = app.add_subcommand("scan", "CSV scan of f over a rational grid");
    c_scan->add_option("--from", arg_from)->required();
    c_scan->add_option("--to", arg_to)->required();
    c_scan->add_option("--steps", steps, "number of steps (N+1 rows)")->required();
    c_scan->add_option("--digits", digits, "decimal places of f_mid");
    c_scan->add_option("--out", arg_out, "output file (default stdout)");
    c_scan->add_option("--threads", threads, "worker threads (0 = auto)");
    c_scan->add_flag("--verify", verify_mode, "evaluate both routes and intersect");
    add_prec(c_scan);

    CLI::App* c_verify = app.add_subcommand("verify", "identity / certificate checks");
    c_verify->add_option("kind", verify_kind, "reflection|counterexample|symmetry|monotonic")
        ->required();
    add_prec(c_verify);

    CLI::App* c_exc = app.add_subcommand("exceptions", "exception-set case analysis");
    c_exc->add_option("--set", arg_set, "comma-separated fractions, may be empty")->required();

    CLI::App* c_period = app.add_subcommand("period", "Baker-period operations");
    c_period->require_subcommand(1);
    CLI::App* c_diff = c_period->add_subcommand("diff", "nullity of f(x1) - f(x2)");
    c_diff->add_option("x1", arg_x)->required();
    c_diff->add_option("x2", arg_y)->required();
    add_prec(c_diff);
    CLI::App* c_pair = c_period->add_subcommand("pair", "pair verdict for (x, y)");
    c_pair->add_option("x", arg_x)->required();
    c_pair->add_option("y", arg_y)->required();
    add_prec(c_pair);

    CLI::App* c_pie = app.add_subcommand("pie", "pi*e implication certificate at y");
    c_pie->add_option("y", arg_y, "rational argument p/q in (0,1)")->required();
    add_prec(c_pie);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (prec == 0) {
            prec = default_prec();
        }
        if (prec < 64 || prec > (1L << 22)) {
            throw bg::DomainError("--prec: expected an integer in [64, 4194304]");
        }

        if (c_minpoly->parsed()) return run_minpoly(arg_x, prec, digits);
        if (c_eval->parsed()) return run_eval(arg_x, prec, digits, verify_mode);
        if (c_scan->parsed())
            return run_scan(arg_from, arg_to, steps, prec, digits, verify_mode, threads, arg_out);
        if (c_verify->parsed()) return run_verify(verify_kind, prec);
        if (c_exc->parsed()) return run_exceptions(arg_set);
        if (c_period->parsed()) {
            if (c_diff->parsed()) return run_period_diff(arg_x, arg_y, prec);
            return run_period_pair(arg_x, arg_y, prec);
        }
        if (c_pie->parsed()) return run_pie(arg_y, prec);
        return kExitUsage;
    } catch (const bg::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
}

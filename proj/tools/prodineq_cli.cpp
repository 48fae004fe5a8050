#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "prodineq/certifier.hpp"
#include "prodineq/corpus.hpp"
#include "prodineq/errors.hpp"
#include "prodineq/evaluate.hpp"
#include "prodineq/numeric_oracle.hpp"
#include "prodineq/proof_tree.hpp"
#include "prodineq/rational.hpp"
#include "prodineq/report.hpp"

namespace {

using namespace prodineq;
using nlohmann::json;

constexpr int kExitHolds = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitInput = 3;
constexpr int kExitInternal = 4;

int exit_code_for(const Error& e) {
    switch (e.code()) {
        case Errc::UnequalSums:
        case Errc::DominanceNotSatisfied:
            return kExitPrecondition;
        case Errc::DominanceLost:
        case Errc::Internal:
        case Errc::NoNegativeValue:
        case Errc::EndpointIsRoot:
            return kExitInternal;
        default:
            return kExitInput;
    }
}

struct InstanceArgs {
    std::string p_text;
    std::string q_text;
    std::string file;
    std::optional<std::string> label;

    void attach(CLI::App* cmd) {
        cmd->add_option("--p", p_text, "left exponents, whitespace-separated rationals");
        cmd->add_option("--q", q_text, "right exponents, whitespace-separated rationals");
        cmd->add_option("--file", file, "JSON instance document {\"p\": [...], \"q\": [...]}");
    }

    std::vector<std::string> split(const std::string& text) const {
        std::vector<std::string> parts;
        std::istringstream in(text);
        std::string tok;
        while (in >> tok) parts.push_back(tok);
        return parts;
    }

    std::pair<ExponentTuple, ExponentTuple> parse() {
        if (!file.empty()) {
            std::ifstream in(file);
            if (!in) fail(Errc::BadInput, "cannot open " + file);
            json j;
            try {
                in >> j;
            } catch (const json::exception& e) {
                fail(Errc::BadInput, std::string("bad JSON: ") + e.what());
            }
            const InstanceDocument doc = InstanceDocument::from_json(j);
            label = doc.label;
            return doc.parse();
        }
        if (p_text.empty() || q_text.empty())
            fail(Errc::BadInput, "need --p and --q (or --file)");
        InstanceDocument doc{split(p_text), split(q_text), std::nullopt};
        return doc.parse();
    }
};

double ms_since(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

int run_check(InstanceArgs& args, bool as_json) {
    const auto [p, q] = args.parse();
    const DominanceReport report = check_dominance(p, q);
    if (as_json) {
        json j{{"instance", instance_json(InequalityInstance::make(p, q), args.label)},
               {"dominance", dominance_json(report)}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << render_dominance(report);
    }
    return report.satisfied ? kExitHolds : kExitPrecondition;
}

int verdict_exit(const Verdict& v) {
    return v.direction == Direction::Refuted ? kExitRefuted : kExitHolds;
}

int run_certify(InstanceArgs& args, const std::string& region, bool as_json) {
    const auto start = std::chrono::steady_clock::now();
    const auto [p, q] = args.parse();
    const DifferenceBuild build = build_difference(p, q);
    const Verdict verdict =
        region == "unit" ? decide_unit_interval(p, q) : decide(p, q);
    const double elapsed = ms_since(start);
    if (as_json) {
        std::cout << verdict_json(verdict, build, args.label, elapsed).dump(2) << "\n";
    } else {
        std::cout << render_instance(build.instance) << "\n"
                  << render_dominance(verdict.dominance) << render_verdict(verdict, build)
                  << "time: " << elapsed << " ms\n";
    }
    return verdict_exit(verdict);
}

int run_prove(InstanceArgs& args, bool as_json) {
    const auto start = std::chrono::steady_clock::now();
    const auto [p, q] = args.parse();
    if (!check_dominance(p, q).satisfied) {
        std::cerr << "dominance not satisfied: no inductive proof available "
                     "(try `certify`, the inequality may still hold)\n";
        return kExitPrecondition;
    }
    const ProofTree tree = build_tree(p, q);
    const bool verified = verify_tree(tree);
    const double elapsed = ms_since(start);
    if (as_json) {
        std::cout << proof_tree_json(tree, verified, args.label, elapsed).dump(2) << "\n";
    } else {
        std::cout << render_instance(tree.target) << "\n"
                  << render_proof_tree(tree)
                  << (verified ? "telescoping verified\n" : "TREE VERIFICATION FAILED\n")
                  << "time: " << elapsed << " ms\n";
    }
    return verified ? kExitHolds : kExitInternal;
}

int run_refute(InstanceArgs& args, bool as_json) {
    const auto start = std::chrono::steady_clock::now();
    const auto [p, q] = args.parse();
    const DifferenceBuild build = build_difference(p, q);
    const Verdict verdict = decide(p, q);
    const double elapsed = ms_since(start);
    if (as_json) {
        std::cout << verdict_json(verdict, build, args.label, elapsed).dump(2) << "\n";
        return verdict_exit(verdict);
    }
    if (verdict.direction == Direction::Refuted) {
        std::cout << render_verdict(verdict, build) << "time: " << elapsed << " ms\n";
        return kExitRefuted;
    }
    std::cout << "no counterexample exists on (1, oo): the inequality "
              << (verdict.direction == Direction::Equality ? "is an identity" : "holds") << "\n";
    return kExitHolds;
}

int run_eval(InstanceArgs& args, const std::string& x_text, unsigned precision, bool as_json) {
    const auto [p, q] = args.parse();
    const mpq_class x = parse_rational(x_text);
    if (x <= 0) fail(Errc::BadInput, "x must be positive");
    const SideValues values = evaluate_sides(p, q, x, precision);
    if (as_json) {
        std::cout << side_values_json(values, x).dump(2) << "\n";
    } else if (values.exact) {
        std::cout << "left  = " << rational_str(values.left) << "\n"
                  << "right = " << rational_str(values.right) << "\n"
                  << "left " << (values.comparison < 0 ? "<" : values.comparison > 0 ? ">" : "=")
                  << " right (exact)\n";
    } else {
        std::cout << "left  ~ " << values.left_approx << "\n"
                  << "right ~ " << values.right_approx << "\n"
                  << "error bound: " << values.error_bound << "\n"
                  << (values.conclusive ? "" : "comparison inconclusive within error bound\n");
    }
    return kExitHolds;
}

int run_furuta(const std::string& p_text, const std::string& q_text, const std::string& r_text,
               const std::string& x_text, bool sweep, unsigned precision, bool as_json) {
    const auto prec = static_cast<mpfr_prec_t>(precision);
    if (sweep) {
        std::vector<BigFloat> vals;
        for (const char* s : {"0", "0.25", "0.5", "1", "2", "5"})
            vals.push_back(BigFloat::from_string(s, prec));
        const SweepReport report = furuta_sweep(vals, vals, vals, XGrid{}, prec);
        if (as_json) {
            json j{{"admissible_triples", report.admissible_triples},
                   {"evaluated", report.evaluated},
                   {"alerts", report.alerts},
                   {"min_gap", report.min_gap.str()},
                   {"min_gap_error_bound", report.min_gap_band.str(10)},
                   {"at", {{"p", report.at_p.str(8)}, {"q", report.at_q.str(8)},
                           {"r", report.at_r.str(8)}, {"x", report.at_x.str(12)}}}};
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "sweep: " << report.evaluated << " evaluations over "
                      << report.admissible_triples << " admissible (p, q, r) triples\n"
                      << "min gap (rhs - lhs): " << report.min_gap.str(12) << " at p="
                      << report.at_p.str(6) << " q=" << report.at_q.str(6) << " r="
                      << report.at_r.str(6) << " x=" << report.at_x.str(8) << "\n"
                      << "alerts (violations beyond error bound): " << report.alerts << "\n";
        }
        return report.alerts == 0 ? kExitHolds : kExitRefuted;
    }

    const FurutaParams params =
        FurutaParams::make(BigFloat::from_string(p_text, prec), BigFloat::from_string(q_text, prec),
                           BigFloat::from_string(r_text, prec));
    const BigFloat x = BigFloat::from_string(x_text, prec);
    const SideEval sides = furuta_sides(params, x);
    const Conclusion conclusion =
        classify_gap(sides.lhs, sides.rhs, BigFloat::from_rational(ScanConfig{}.tau, prec));
    if (as_json) {
        json j{{"lhs", sides.lhs.value.str()},
               {"rhs", sides.rhs.value.str()},
               {"error_bound", (sides.lhs.error + sides.rhs.error).str(10)},
               {"conclusion", conclusion_name(conclusion)}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "lhs = " << sides.lhs.value.str(25) << "\n"
                  << "rhs = " << sides.rhs.value.str(25) << "\n"
                  << "conclusion: " << conclusion_name(conclusion) << "\n";
    }
    return conclusion == Conclusion::Violated ? kExitRefuted : kExitHolds;
}

int run_corpus(bool as_json) {
    bool all_match = true;
    json items = json::array();
    for (const Fixture& fixture : corpus()) {
        const ExponentTuple p = parse_tuple(fixture.p);
        const ExponentTuple q = parse_tuple(fixture.q);
        const DifferenceBuild build = build_difference(p, q);
        const Verdict verdict = decide(p, q);
        bool match = verdict.direction == fixture.expected;
        if (fixture.reduced) {
            match = match && build.instance.reduced_left.get_str() == fixture.reduced->first &&
                    build.instance.reduced_right.get_str() == fixture.reduced->second;
        }
        all_match = all_match && match;
        if (as_json) {
            items.push_back({{"label", fixture.label},
                             {"expected", direction_name(fixture.expected)},
                             {"verdict", direction_name(verdict.direction)},
                             {"reduced_coefficients",
                              {{"left", build.instance.reduced_left.get_str()},
                               {"right", build.instance.reduced_right.get_str()}}},
                             {"match", match}});
        } else {
            std::cout << (match ? "[ok]   " : "[FAIL] ") << fixture.label << ": "
                      << direction_name(verdict.direction) << " (expected "
                      << direction_name(fixture.expected) << "), coefficients "
                      << build.instance.reduced_left.get_str() << ":"
                      << build.instance.reduced_right.get_str() << "\n";
        }
    }
    if (as_json) std::cout << items.dump(2) << "\n";
    return all_match ? kExitHolds : kExitRefuted;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "prodineq: exact verifier, refuter and proof builder for inequalities\n"
        "between scaled products of (x^p - 1)"};
    app.require_subcommand(0, 1);
    app.fallthrough();

    bool as_json = false;
    bool corpus_mode = false;
    app.add_flag("--json", as_json, "emit JSON reports");
    app.add_flag("--corpus", corpus_mode, "run the bundled fixture corpus and check verdicts");

    InstanceArgs check_args, certify_args, prove_args, refute_args, eval_args;
    std::string region = "gt1";
    std::string x_text = "2";
    unsigned precision = 256;

    auto* check = app.add_subcommand("check", "dominance (suffix-sum) conditions only");
    check_args.attach(check);

    auto* certify = app.add_subcommand("certify", "decide the inequality with a certificate");
    certify_args.attach(certify);
    certify->add_option("--region", region, "gt1 (default) or unit for 0 < x < 1")
        ->check(CLI::IsMember({"gt1", "unit"}));

    auto* prove = app.add_subcommand("prove", "build and verify the inductive proof tree");
    prove_args.attach(prove);

    auto* refute = app.add_subcommand("refute", "search for an exact counterexample on (1, oo)");
    refute_args.attach(refute);

    auto* eval = app.add_subcommand("eval", "evaluate both sides at a rational x");
    eval_args.attach(eval);
    eval->add_option("--x", x_text, "evaluation point, rational \"a\" or \"a/b\"");
    eval->add_option("--precision", precision, "significand bits for the numeric fallback");

    std::string fp = "1", fq = "1", fr = "0", fx = "2";
    bool fsweep = false;
    auto* furuta = app.add_subcommand("furuta", "fractional-power inequality, numeric check");
    furuta->add_option("--p", fp, "parameter p >= 0");
    furuta->add_option("--q", fq, "parameter q >= 1");
    furuta->add_option("--r", fr, "parameter r >= 0");
    furuta->add_option("--x", fx, "evaluation point x > 0");
    furuta->add_flag("--sweep", fsweep, "grid sweep over (p, q, r, x)");
    furuta->add_option("--precision", precision, "significand bits (default 256)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitInput;
    }

    try {
        if (corpus_mode) return run_corpus(as_json);
        if (check->parsed()) return run_check(check_args, as_json);
        if (certify->parsed()) return run_certify(certify_args, region, as_json);
        if (prove->parsed()) return run_prove(prove_args, as_json);
        if (refute->parsed()) return run_refute(refute_args, as_json);
        if (eval->parsed()) return run_eval(eval_args, x_text, precision, as_json);
        if (furuta->parsed()) return run_furuta(fp, fq, fr, fx, fsweep, precision, as_json);
        std::cerr << app.help();
        return kExitInput;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

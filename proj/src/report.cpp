#include "prodineq/report.hpp"

#include <sstream>

#include "prodineq/errors.hpp"
#include "prodineq/rational.hpp"

namespace prodineq {

using nlohmann::json;

InstanceDocument InstanceDocument::from_json(const json& j) {
    InstanceDocument doc;
    if (!j.is_object() || !j.contains("p") || !j.contains("q"))
        fail(Errc::BadInput, "instance document needs \"p\" and \"q\" arrays");
    auto read_side = [](const json& side, std::vector<std::string>& out) {
        if (!side.is_array()) fail(Errc::BadInput, "tuple must be an array");
        for (const auto& e : side) {
            if (e.is_string())
                out.push_back(e.get<std::string>());
            else if (e.is_number_integer())
                out.push_back(std::to_string(e.get<long long>()));
            else
                fail(Errc::BadInput, "tuple entries must be strings or integers");
        }
    };
    read_side(j.at("p"), doc.p);
    read_side(j.at("q"), doc.q);
    if (j.contains("label") && j.at("label").is_string())
        doc.label = j.at("label").get<std::string>();
    return doc;
}

json InstanceDocument::to_json() const {
    json j{{"p", p}, {"q", q}};
    if (label) j["label"] = *label;
    return j;
}

std::pair<ExponentTuple, ExponentTuple> InstanceDocument::parse() const {
    auto parse_side = [](const std::vector<std::string>& side) {
        std::vector<mpq_class> values;
        values.reserve(side.size());
        for (const auto& s : side) values.push_back(parse_rational(s));
        return ExponentTuple::normalize(std::move(values));
    };
    return {parse_side(p), parse_side(q)};
}

json dominance_json(const DominanceReport& report) {
    json levels = json::array();
    for (const auto& lc : report.levels)
        levels.push_back({{"k", lc.k},
                          {"suffix_p", rational_str(lc.suffix_p)},
                          {"suffix_q", rational_str(lc.suffix_q)},
                          {"ok", lc.satisfied}});
    json j{{"satisfied", report.satisfied},
           {"sums_equal", report.sums_equal},
           {"sum_p", rational_str(report.sum_p)},
           {"sum_q", rational_str(report.sum_q)},
           {"levels", levels}};
    if (report.first_violation)
        j["first_violation"] = *report.first_violation;
    else
        j["first_violation"] = nullptr;
    return j;
}

json instance_json(const InequalityInstance& inst, const std::optional<std::string>& label) {
    auto side = [](const ExponentTuple& t) {
        json arr = json::array();
        for (const auto& e : t.entries()) arr.push_back(rational_str(e));
        return arr;
    };
    json j{{"p", side(inst.p)}, {"q", side(inst.q)}};
    if (label) j["label"] = *label;
    return j;
}

namespace {

mpq_class witness_in_x(const mpq_class& witness_t, const DifferenceBuild& build) {
    return pow_rational(witness_t, build.scale);
}

}  // namespace

json certificate_json(const Certificate& cert, const DifferenceBuild& build) {
    json j{{"variant", cert.variant_name()},
           {"region", region_name(cert.region)},
           {"sign", cert.sign}};
    if (const auto* shifted = std::get_if<CertShiftedNonnegative>(&cert.body)) {
        j["multiplicity"] = shifted->multiplicity;
        j["shifted_coefficient_count"] = shifted->shifted.size();
    } else if (const auto* sturm = std::get_if<CertSturmPositive>(&cert.body)) {
        j["multiplicity"] = sturm->multiplicity;
        j["zero_multiplicity"] = sturm->zero_multiplicity;
        j["root_count"] = sturm->root_count;
        json samples = json::array();
        for (const auto& s : sturm->samples)
            samples.push_back(
                {{"point", rational_str(s.point)}, {"value", rational_str(s.value)}});
        j["samples"] = samples;
    } else if (const auto* refutation = std::get_if<CertRefutation>(&cert.body)) {
        j["witness"] = rational_str(refutation->witness);
        j["value"] = rational_str(refutation->value);
        j["witness_x"] = rational_str(witness_in_x(refutation->witness, build));
        j["scale"] = build.scale.get_str();
    }
    return j;
}

json verdict_json(const Verdict& verdict, const DifferenceBuild& build,
                  const std::optional<std::string>& label, double elapsed_ms) {
    const InequalityInstance& inst = build.instance;
    json j{{"instance", instance_json(inst, label)},
           {"region", region_name(verdict.region)},
           {"verdict", direction_name(verdict.direction)},
           {"dominance", dominance_json(verdict.dominance)},
           {"certificate", certificate_json(verdict.certificate, build)},
           {"reduced_coefficients",
            {{"left", build.instance.reduced_left.get_str()},
             {"right", build.instance.reduced_right.get_str()},
             {"raw_left", rational_str(inst.coeff_left)},
             {"raw_right", rational_str(inst.coeff_right)}}},
           {"scale", build.scale.get_str()},
           {"timing_ms", elapsed_ms}};

    if (const auto* refutation = std::get_if<CertRefutation>(&verdict.certificate.body))
        j["witness"] = rational_str(witness_in_x(refutation->witness, build));
    else
        j["witness"] = nullptr;

    if (verdict.region == Region::UnitInterval) {
        j["reverse_holds"] = verdict.reverse_holds;
        if (verdict.reverse_certificate)
            j["reverse_certificate"] = certificate_json(*verdict.reverse_certificate, build);
    }
    return j;
}

json proof_tree_json(const ProofTree& tree, bool verified,
                     const std::optional<std::string>& label, double elapsed_ms) {
    json steps = json::array();
    for (const auto& step : tree.steps)
        steps.push_back({{"level", step.level},
                         {"k", step.pivot},
                         {"p1", rational_str(step.p1)},
                         {"qk", rational_str(step.qk)},
                         {"qk1", rational_str(step.qk1)},
                         {"qprime", rational_str(step.qprime)}});
    return json{{"instance", instance_json(tree.target, label)},
                {"proof_tree", steps},
                {"verified", verified},
                {"reduced_coefficients",
                 {{"left", tree.target.reduced_left.get_str()},
                  {"right", tree.target.reduced_right.get_str()}}},
                {"timing_ms", elapsed_ms}};
}

json side_values_json(const SideValues& values, const mpq_class& x) {
    json j{{"x", rational_str(x)}, {"exact", values.exact}};
    if (values.exact) {
        j["left"] = rational_str(values.left);
        j["right"] = rational_str(values.right);
    } else {
        j["left"] = values.left_approx;
        j["right"] = values.right_approx;
        j["error_bound"] = values.error_bound;
    }
    j["comparison"] =
        values.comparison < 0 ? "left<right" : (values.comparison > 0 ? "left>right" : "equal");
    j["conclusive"] = values.conclusive;
    return j;
}

namespace {

std::string factor_string(const ExponentTuple& t) {
    std::ostringstream out;
    std::size_t i = 0;
    while (i < t.size()) {
        std::size_t j = i;
        while (j < t.size() && t[j] == t[i]) ++j;
        const mpq_class& e = t[i];
        out << "(x";
        if (e != 1) {
            out << "^";
            const bool parens = e.get_den() != 1;
            if (parens) out << "(";
            out << rational_str(e);
            if (parens) out << ")";
        }
        out << "-1)";
        if (j - i > 1) out << "^" << (j - i);
        i = j;
    }
    return out.str();
}

}  // namespace

std::string render_instance(const InequalityInstance& inst) {
    std::ostringstream out;
    out << rational_str(inst.coeff_left) << " " << factor_string(inst.p) << "  <=  "
        << rational_str(inst.coeff_right) << " " << factor_string(inst.q);
    return out.str();
}

std::string render_dominance(const DominanceReport& report) {
    std::ostringstream out;
    out << "dominance: " << (report.satisfied ? "satisfied" : "not satisfied") << "\n";
    out << "  sums: " << rational_str(report.sum_p) << (report.sums_equal ? " = " : " != ")
        << rational_str(report.sum_q) << "\n";
    for (const auto& lc : report.levels)
        out << "  k=" << lc.k << ": " << rational_str(lc.suffix_p)
            << (lc.satisfied ? " <= " : " > ") << rational_str(lc.suffix_q)
            << (lc.satisfied ? "" : "   violated") << "\n";
    return out.str();
}

std::string render_verdict(const Verdict& verdict, const DifferenceBuild& build) {
    std::ostringstream out;
    const char* where = verdict.region == Region::RightOfOne ? "(1, oo)" : "(0, 1)";
    out << "verdict: " << direction_name(verdict.direction) << " on " << where << "\n";
    out << "reduced coefficients: " << build.instance.reduced_left.get_str() << " : "
        << build.instance.reduced_right.get_str() << "  (raw "
        << rational_str(build.instance.coeff_left) << " : "
        << rational_str(build.instance.coeff_right) << ")\n";

    const Certificate& cert = verdict.certificate;
    if (const auto* shifted = std::get_if<CertShiftedNonnegative>(&cert.body)) {
        out << "certificate: shifted-nonnegative, multiplicity " << shifted->multiplicity
            << " at x=1, " << shifted->shifted.size() << " shifted coefficients all >= 0\n";
    } else if (const auto* sturm = std::get_if<CertSturmPositive>(&cert.body)) {
        out << "certificate: sturm-positive, multiplicity " << sturm->multiplicity
            << " at x=1, quotient roots in region: " << sturm->root_count << ", "
            << sturm->samples.size() << " positive gap samples\n";
    } else if (const auto* refutation = std::get_if<CertRefutation>(&cert.body)) {
        const mpq_class wx = pow_rational(refutation->witness, build.scale);
        out << "witness: x = " << rational_str(wx);
        if (build.scale != 1)
            out << "  (integerized variable t = " << rational_str(refutation->witness)
                << ", x = t^" << build.scale.get_str() << ")";
        out << "\n";
        out << "difference at witness: " << rational_str(refutation->value) << "  (< 0)\n";
    } else {
        out << "certificate: both sides identical\n";
    }
    if (verdict.region == Region::UnitInterval && verdict.reverse_holds)
        out << "note: the reverse inequality holds throughout (0, 1)\n";
    return out.str();
}

std::string render_proof_tree(const ProofTree& tree) {
    std::ostringstream out;
    out << "proof tree: " << tree.steps.size() << " base-case step(s)\n";
    for (const auto& step : tree.steps) {
        out << "  level " << step.level << ": pivot k=" << step.pivot << ", p1="
            << rational_str(step.p1) << ", consumes (" << rational_str(step.qk) << ", "
            << rational_str(step.qk1) << "), q'=" << rational_str(step.qprime) << "\n";
        out << "    base case: (" << rational_str(step.base.a1) << ", "
            << rational_str(step.base.a2) << ") vs (" << rational_str(step.base.b1) << ", "
            << rational_str(step.base.b2) << ")"
            << (step.base.is_equality() ? "  [equality]" : "") << "\n";
    }
    return out.str();
}

}  // namespace prodineq

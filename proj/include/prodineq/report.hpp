#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "prodineq/certifier.hpp"
#include "prodineq/evaluate.hpp"
#include "prodineq/proof_tree.hpp"

namespace prodineq {

/// Input document: rationals as "a" or "a/b" strings (bare integers accepted).
struct InstanceDocument {
    std::vector<std::string> p;
    std::vector<std::string> q;
    std::optional<std::string> label;

    static InstanceDocument from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
    std::pair<ExponentTuple, ExponentTuple> parse() const;
};

nlohmann::json dominance_json(const DominanceReport& report);
nlohmann::json instance_json(const InequalityInstance& inst,
                             const std::optional<std::string>& label);
nlohmann::json certificate_json(const Certificate& cert, const DifferenceBuild& build);

/// Full report for a decision: stable field names "verdict", "certificate",
/// "witness", "dominance", "reduced_coefficients". The top-level witness is in
/// the original variable (t^L for an integerized witness t).
nlohmann::json verdict_json(const Verdict& verdict, const DifferenceBuild& build,
                            const std::optional<std::string>& label, double elapsed_ms);

nlohmann::json proof_tree_json(const ProofTree& tree, bool verified,
                               const std::optional<std::string>& label, double elapsed_ms);

nlohmann::json side_values_json(const SideValues& values, const mpq_class& x);

/// Human-readable renderings used by the CLI.
std::string render_instance(const InequalityInstance& inst);
std::string render_dominance(const DominanceReport& report);
std::string render_verdict(const Verdict& verdict, const DifferenceBuild& build);
std::string render_proof_tree(const ProofTree& tree);

}  // namespace prodineq

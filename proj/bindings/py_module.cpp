#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "prodineq/certifier.hpp"
#include "prodineq/corpus.hpp"
#include "prodineq/errors.hpp"
#include "prodineq/evaluate.hpp"
#include "prodineq/numeric_oracle.hpp"
#include "prodineq/proof_tree.hpp"
#include "prodineq/rational.hpp"
#include "prodineq/report.hpp"

namespace py = pybind11;
using nlohmann::json;
using namespace prodineq;

namespace {

py::object json_to_py(const json& j) {
    switch (j.type()) {
        case json::value_t::null:
            return py::none();
        case json::value_t::boolean:
            return py::bool_(j.get<bool>());
        case json::value_t::number_integer:
            return py::int_(j.get<long long>());
        case json::value_t::number_unsigned:
            return py::int_(j.get<unsigned long long>());
        case json::value_t::number_float:
            return py::float_(j.get<double>());
        case json::value_t::string:
            return py::str(j.get<std::string>());
        case json::value_t::array: {
            py::list out;
            for (const auto& e : j) out.append(json_to_py(e));
            return out;
        }
        case json::value_t::object: {
            py::dict out;
            for (const auto& [key, value] : j.items()) out[py::str(key)] = json_to_py(value);
            return out;
        }
        default:
            return py::none();
    }
}

ExponentTuple tuple_from(const std::vector<std::string>& entries) {
    return parse_tuple(entries);
}

py::object py_check(const std::vector<std::string>& p, const std::vector<std::string>& q) {
    const DominanceReport report = check_dominance(tuple_from(p), tuple_from(q));
    return json_to_py(dominance_json(report));
}

py::object py_certify(const std::vector<std::string>& p, const std::vector<std::string>& q,
                      const std::string& region) {
    const ExponentTuple tp = tuple_from(p);
    const ExponentTuple tq = tuple_from(q);
    const DifferenceBuild build = build_difference(tp, tq);
    const Verdict verdict = region == "unit" ? decide_unit_interval(tp, tq) : decide(tp, tq);
    return json_to_py(verdict_json(verdict, build, std::nullopt, 0.0));
}

py::object py_prove(const std::vector<std::string>& p, const std::vector<std::string>& q) {
    const ExponentTuple tp = tuple_from(p);
    const ExponentTuple tq = tuple_from(q);
    const ProofTree tree = build_tree(tp, tq);
    return json_to_py(proof_tree_json(tree, verify_tree(tree), std::nullopt, 0.0));
}

py::object py_eval(const std::vector<std::string>& p, const std::vector<std::string>& q,
                   const std::string& x, unsigned precision) {
    const mpq_class xq = parse_rational(x);
    const SideValues values = evaluate_sides(tuple_from(p), tuple_from(q), xq, precision);
    return json_to_py(side_values_json(values, xq));
}

py::object py_furuta(const std::string& p, const std::string& q, const std::string& r,
                     const std::string& x, unsigned precision) {
    const auto prec = static_cast<mpfr_prec_t>(precision);
    const FurutaParams params = FurutaParams::make(BigFloat::from_string(p, prec),
                                                   BigFloat::from_string(q, prec),
                                                   BigFloat::from_string(r, prec));
    const SideEval sides = furuta_sides(params, BigFloat::from_string(x, prec));
    const Conclusion conclusion =
        classify_gap(sides.lhs, sides.rhs, BigFloat::from_rational(ScanConfig{}.tau, prec));
    json j{{"lhs", sides.lhs.value.str()},
           {"rhs", sides.rhs.value.str()},
           {"error_bound", (sides.lhs.error + sides.rhs.error).str(10)},
           {"conclusion", conclusion_name(conclusion)}};
    return json_to_py(j);
}

py::object py_corpus() {
    json items = json::array();
    for (const Fixture& fixture : corpus()) {
        const ExponentTuple p = parse_tuple(fixture.p);
        const ExponentTuple q = parse_tuple(fixture.q);
        const DifferenceBuild build = build_difference(p, q);
        const Verdict verdict = decide(p, q);
        items.push_back({{"label", fixture.label},
                         {"p", fixture.p},
                         {"q", fixture.q},
                         {"expected", direction_name(fixture.expected)},
                         {"verdict", direction_name(verdict.direction)},
                         {"match", verdict.direction == fixture.expected},
                         {"reduced_coefficients",
                          {{"left", build.instance.reduced_left.get_str()},
                           {"right", build.instance.reduced_right.get_str()}}}});
    }
    return json_to_py(items);
}

}  // namespace

PYBIND11_MODULE(prodineq, m) {
    m.doc() = "Exact verifier, refuter and proof builder for inequalities between "
              "scaled products of (x^p - 1)";

    py::register_exception<Error>(m, "ProdineqError");

    m.def("check_dominance", &py_check, py::arg("p"), py::arg("q"),
          "Suffix-sum dominance report for two exponent tuples (rationals as strings).");
    m.def("certify", &py_certify, py::arg("p"), py::arg("q"), py::arg("region") = "gt1",
          "Decide the inequality on (1, oo) (region='gt1') or (0, 1) (region='unit'); "
          "returns the full report with certificate and dominance.");
    m.def("prove", &py_prove, py::arg("p"), py::arg("q"),
          "Build and verify the inductive proof tree (requires dominance).");
    m.def("eval_sides", &py_eval, py::arg("p"), py::arg("q"), py::arg("x"),
          py::arg("precision") = 256,
          "Evaluate both sides at rational x; exact when possible.");
    m.def("furuta", &py_furuta, py::arg("p"), py::arg("q"), py::arg("r"), py::arg("x"),
          py::arg("precision") = 256,
          "Numeric check of the fractional-power inequality at one point.");
    m.def("corpus", &py_corpus, "Run the bundled fixture corpus and report verdicts.");

    m.attr("__version__") = "0.1.0";
}

#include "prodineq/corpus.hpp"

#include "prodineq/rational.hpp"

namespace prodineq {

const std::vector<Fixture>& corpus() {
    static const std::vector<Fixture> fixtures = {
        {"holds-595-1728",
         {"6", "8", "8", "9"},
         {"2", "5", "7", "17"},
         Direction::Holds,
         std::make_pair("595", "1728")},
        {"holds-48-385",
         {"2", "3", "5", "7", "11"},
         {"1", "1", "4", "4", "18"},
         Direction::Holds,
         std::make_pair("48", "385")},
        {"refuted-225-256",
         {"2", "2", "8", "8"},
         {"1", "5", "5", "9"},
         Direction::Refuted,
         std::make_pair("225", "256")},
        {"refuted-top-entry",
         {"2", "2", "3", "3", "10"},
         {"1", "1", "4", "6", "8"},
         Direction::Refuted,
         std::make_pair("8", "15")},
        {"refuted-top-pair",
         {"2", "2", "2", "11", "11"},
         {"1", "1", "6", "8", "12"},
         Direction::Refuted,
         std::make_pair("72", "121")},
        {"refuted-top-triple",
         {"2", "2", "9", "9", "9"},
         {"1", "5", "5", "10", "10"},
         Direction::Refuted,
         std::make_pair("625", "729")},
        {"refuted-top-quadruple",
         {"1", "5", "5", "5", "5"},
         {"3", "3", "3", "3", "9"},
         Direction::Refuted,
         std::make_pair("729", "625")},
        {"holds-without-dominance",
         {"2", "3", "7"},
         {"1", "5", "6"},
         Direction::Holds,
         std::make_pair("5", "7")},
    };
    return fixtures;
}

ExponentTuple parse_tuple(const std::vector<std::string>& entries) {
    std::vector<mpq_class> values;
    values.reserve(entries.size());
    for (const auto& e : entries) values.push_back(parse_rational(e));
    return ExponentTuple::normalize(std::move(values));
}

}  // namespace prodineq

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "prodineq/certifier.hpp"

namespace prodineq {

/// Bundled regression instances with their known verdicts on (1, oo).
struct Fixture {
    std::string label;
    std::vector<std::string> p;
    std::vector<std::string> q;
    Direction expected;
    // Reduced coefficient pair (left:right) when pinned.
    std::optional<std::pair<std::string, std::string>> reduced;
};

const std::vector<Fixture>& corpus();

ExponentTuple parse_tuple(const std::vector<std::string>& entries);

}  // namespace prodineq

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace verlinde {

struct Check {
    std::string name;
    bool pass = false;
    std::optional<double> residual;
    std::string detail;
};

// Ordered collection of verification outcomes with deterministic emission.
struct Report {
    std::string suite;
    int p = 0;
    std::vector<Check> checks;

    bool all_pass() const;
    void add(std::string name, bool pass, std::optional<double> residual = std::nullopt,
             std::string detail = {});

    nlohmann::json to_json() const;
    std::string to_text() const;
};

}  // namespace verlinde

#pragma once

#include <cstdlib>
#include <fstream>
#include <string>

#include "json.hpp"

namespace testsupport {

inline std::string fixtures_dir() {
    if (const char* env = std::getenv("LOGVERLINDE_FIXTURES")) return env;
    return LOGVERLINDE_DEFAULT_FIXTURES;
}

inline nlohmann::json load_fixture(const std::string& name) {
    std::ifstream in(fixtures_dir() + "/" + name);
    if (!in) throw std::runtime_error("fixture not found: " + name);
    nlohmann::json j;
    in >> j;
    return j;
}

}  // namespace testsupport

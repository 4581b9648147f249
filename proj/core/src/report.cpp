#include "logverlinde/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace verlinde {

bool Report::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

void Report::add(std::string name, bool pass, std::optional<double> residual, std::string detail) {
    checks.push_back({std::move(name), pass, residual, std::move(detail)});
}

nlohmann::json Report::to_json() const {
    nlohmann::json j;
    j["suite"] = suite;
    j["p"] = p;
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json e;
        e["name"] = c.name;
        e["status"] = c.pass ? "pass" : "fail";
        if (c.residual)
            e["residual"] = *c.residual;
        else
            e["residual"] = nullptr;
        e["detail"] = c.detail;
        j["checks"].push_back(std::move(e));
    }
    return j;
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << "suite " << suite << " (p=" << p << ")\n";
    for (const auto& c : checks) {
        os << (c.pass ? "  [pass] " : "  [FAIL] ") << c.name;
        if (c.residual) os << "  residual=" << std::scientific << std::setprecision(3) << *c.residual;
        if (!c.detail.empty()) os << "  (" << c.detail << ")";
        os << "\n";
    }
    return os.str();
}

}  // namespace verlinde

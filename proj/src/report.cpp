#include "pdmosc/report.hpp"

#include "pdmosc/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

namespace pdmosc {

void VerificationReport::add(std::string label, double measured, double tolerance, std::string provenance,
                             std::string detail) {
    if (provenance.empty()) throw DomainError("VerificationReport: case '" + label + "' has no provenance");
    const bool pass = std::isfinite(measured) && measured <= tolerance;
    cases_.push_back({std::move(label), measured, tolerance, pass, std::move(provenance), std::move(detail)});
}

void VerificationReport::add_failure(std::string label, double tolerance, std::string provenance,
                                     std::string detail) {
    if (provenance.empty()) throw DomainError("VerificationReport: case '" + label + "' has no provenance");
    cases_.push_back({std::move(label), HUGE_VAL, tolerance, false, std::move(provenance), std::move(detail)});
}

bool VerificationReport::overall_pass() const {
    return std::all_of(cases_.begin(), cases_.end(), [](const VerificationCase& c) { return c.pass; });
}

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json cases = nlohmann::json::array();
    for (const auto& c : cases_) {
        nlohmann::json j;
        j["label"] = c.label;
        j["measured"] = std::isfinite(c.measured) ? nlohmann::json(c.measured) : nlohmann::json(nullptr);
        j["tolerance"] = c.tolerance;
        j["pass"] = c.pass;
        j["provenance"] = c.provenance;
        if (!c.detail.empty()) j["detail"] = c.detail;
        cases.push_back(std::move(j));
    }
    return {{"suite", suite_}, {"overall_pass", overall_pass()}, {"cases", std::move(cases)}};
}

std::string format_number(double v, int significant) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, significant);
    return std::string(buf, res.ptr);
}

std::string reports_to_json(const std::vector<VerificationReport>& reports) {
    nlohmann::json all = nlohmann::json::array();
    bool pass = true;
    for (const auto& r : reports) {
        all.push_back(r.to_json());
        pass = pass && r.overall_pass();
    }
    nlohmann::json doc{{"overall_pass", pass}, {"reports", std::move(all)}};
    return doc.dump(2) + "\n";
}

}  // namespace pdmosc

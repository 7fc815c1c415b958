#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace pdmosc {

struct VerificationCase {
    std::string label;
    double measured = 0.0;  // non-finite when the case could not be measured
    double tolerance = 0.0;
    bool pass = false;
    std::string provenance;
    std::string detail;
};

class VerificationReport {
public:
    explicit VerificationReport(std::string suite) : suite_(std::move(suite)) {}

    /// Records measured <= tolerance. Throws DomainError on an empty provenance.
    void add(std::string label, double measured, double tolerance, std::string provenance, std::string detail = {});
    /// Records a case that failed before a measurement existed.
    void add_failure(std::string label, double tolerance, std::string provenance, std::string detail);

    const std::string& suite() const { return suite_; }
    const std::vector<VerificationCase>& cases() const { return cases_; }
    bool overall_pass() const;

    nlohmann::json to_json() const;

private:
    std::string suite_;
    std::vector<VerificationCase> cases_;
};

/// Locale-independent decimal rendering with the given significant digits.
std::string format_number(double v, int significant = 17);

/// {"overall_pass": ..., "reports": [...]}, two-space indented.
std::string reports_to_json(const std::vector<VerificationReport>& reports);

}  // namespace pdmosc

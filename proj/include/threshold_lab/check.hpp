#pragma once

#include <string>

namespace tlab {

enum class CheckStatus { pass, fail, vacuous };

/// One verified inequality: residual = slack of the inequality (>= 0 means
/// it holds), status pass iff residual >= -tolerance, vacuous when the
/// statement is uninformative (logs of zero, zero variance, ...).
struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::vacuous;
    double residual = 0.0;
    double tolerance = 0.0;

    bool failed() const { return status == CheckStatus::fail; }
};

inline CheckResult make_check(std::string name, double residual, double tolerance) {
    CheckResult c;
    c.name = std::move(name);
    c.residual = residual;
    c.tolerance = tolerance;
    c.status = residual >= -tolerance ? CheckStatus::pass : CheckStatus::fail;
    return c;
}

inline CheckResult make_vacuous(std::string name) {
    CheckResult c;
    c.name = std::move(name);
    c.status = CheckStatus::vacuous;
    return c;
}

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        default: return "vacuous";
    }
}

}  // namespace tlab

#include "spoq/report.hpp"

#include <algorithm>

namespace spoq {

std::string status_name(Status s) {
    switch (s) {
        case Status::Pass: return "PASS";
        case Status::Fail: return "FAIL";
        case Status::Skipped: return "SKIPPED";
    }
    return "?";
}

bool Report::all_pass() const {
    return std::none_of(checks.begin(), checks.end(),
                        [](const Check& c) { return c.status == Status::Fail; });
}

long Report::fail_count() const {
    return std::count_if(checks.begin(), checks.end(),
                         [](const Check& c) { return c.status == Status::Fail; });
}

void Report::sort_checks() {
    std::sort(checks.begin(), checks.end(),
              [](const Check& a, const Check& b) { return a.name < b.name; });
}

void Report::append(const Report& other, const std::string& prefix) {
    for (Check c : other.checks) {
        c.name = prefix + c.name;
        checks.push_back(std::move(c));
    }
}

Check residual_check(std::string name, std::string identity, const GradedOperator& residual,
                     std::string detail) {
    Check c{std::move(name), std::move(identity), Status::Pass,
            static_cast<long>(residual.nnz()), std::move(detail)};
    if (!residual.is_zero()) c.status = Status::Fail;
    return c;
}

Check residual_check(std::string name, std::string identity, const TensorVector& residual,
                     std::string detail) {
    Check c{std::move(name), std::move(identity), Status::Pass,
            static_cast<long>(residual.coeff.size()), std::move(detail)};
    if (!residual.is_zero()) c.status = Status::Fail;
    return c;
}

Check bool_check(std::string name, std::string identity, bool ok, std::string detail) {
    Check c{std::move(name), std::move(identity), ok ? Status::Pass : Status::Fail, ok ? 0 : 1,
            std::move(detail)};
    return c;
}

Check skipped_check(std::string name, std::string identity, std::string reason) {
    return Check{std::move(name), std::move(identity), Status::Skipped, 0, std::move(reason)};
}

} // namespace spoq

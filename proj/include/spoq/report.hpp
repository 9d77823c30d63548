#pragma once

#include <string>
#include <vector>

#include "spoq/graded_op.hpp"
#include "spoq/super_index.hpp"

namespace spoq {

enum class Status { Pass, Fail, Skipped };

std::string status_name(Status s);

/// One verified identity instance.  `identity` states the checked equation in
/// plain notation; `residual_nonzero_count` is the number of nonzero entries
/// left after moving everything to one side.
struct Check {
    std::string name;
    std::string identity;
    Status status = Status::Pass;
    long residual_nonzero_count = 0;
    std::string detail;
};

struct Report {
    SuperDims dims;
    std::string suite;
    std::vector<Check> checks;

    bool all_pass() const;
    long fail_count() const;
    void sort_checks();
    void append(const Report& other, const std::string& prefix);
};

Check residual_check(std::string name, std::string identity, const GradedOperator& residual,
                     std::string detail = "");
Check residual_check(std::string name, std::string identity, const TensorVector& residual,
                     std::string detail = "");
Check bool_check(std::string name, std::string identity, bool ok, std::string detail = "");
Check skipped_check(std::string name, std::string identity, std::string reason);

} // namespace spoq

#pragma once

#include <stdexcept>
#include <string>

namespace qh {

// Raised when a desk-scale enumeration cap or node budget is exceeded.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qh

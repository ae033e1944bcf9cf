#include "ordclose/engine.hpp"

namespace ordclose {

std::string to_string(ExtensionStatus status)
{
    switch (status) {
    case ExtensionStatus::converged:
        return "Converged";
    case ExtensionStatus::gap_at_least:
        return "GapAtLeast";
    case ExtensionStatus::budget_exhausted:
        return "BudgetExhausted";
    case ExtensionStatus::not_k_bounded:
        return "NotKBounded";
    }
    return "Unknown";
}

}  // namespace ordclose

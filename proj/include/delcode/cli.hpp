#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace delcode::cli {

/// Process exit statuses.
enum ExitCode : int {
    kOk = 0,
    kDomainError = 1,
    kUsageError = 2,
    kDiscrepancy = 3,      ///< verify found missing or spurious pairs
    kBudgetExhausted = 4,  ///< search ran out of time
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace delcode::cli

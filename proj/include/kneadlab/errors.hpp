#pragma once

#include <stdexcept>
#include <string>

namespace kneadlab {

// Base for errors the toolkit can legitimately hit on valid input (the CLI
// maps these to exit code 1; configuration mistakes map to 2).
struct domain_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A point was expected to code into the Cantor set but falls into a gap.
struct not_in_cantor_set : domain_failure {
    using domain_failure::domain_failure;
};

// A gap route was not found within the depth budget.
struct gap_budget_exceeded : domain_failure {
    using domain_failure::domain_failure;
};

// Label sets disagree, pairing order disagrees, or the kneading prerequisite
// fails while building a finite-depth conjugacy table.
struct combinatorial_inequivalence : domain_failure {
    std::string label;  // offending preimage label or fiber route, if known
    combinatorial_inequivalence(const std::string& what, std::string offending)
        : domain_failure(what), label(std::move(offending)) {}
};

// An operation was invoked outside its stated precondition.
struct precondition_violation : domain_failure {
    using domain_failure::domain_failure;
};

}  // namespace kneadlab

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kneadlab::cli {

// Full dispatcher. args is argv without the program name. Structured output
// goes to out (or the --out file); diagnostics go to err. Returns 0 on
// success, 1 on domain findings (mismatch, failed validation), 2 on config
// or usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kneadlab::cli

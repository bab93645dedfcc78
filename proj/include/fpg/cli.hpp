#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fpg {

// Dispatches one CLI invocation. `args` excludes argv[0]. Exit codes:
// 0 success, 1 check or hypothesis refuted, 2 resource limit hit (verdict
// unknown), 3 input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fpg

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace conecalc {
namespace cli {

// Runs one CLI invocation; args excludes the program name. JSON results
// go to `out`, logs and prose reports to `err`. Returns the process
// exit code: 0 success, 2 input error, 3 resource cap, 4 audit failure.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace cli
}  // namespace conecalc

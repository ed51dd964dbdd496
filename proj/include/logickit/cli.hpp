#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace logickit::cli {

// Runs one subcommand. Exit code 0 on success, 1 on a negative domain
// verdict (invalid, unsatisfiable, rejected, ...), 2 on usage or parse
// errors.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace logickit::cli

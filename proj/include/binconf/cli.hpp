#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace binconf {

/// Command dispatch for the binconf tool. Exit status: 0 success,
/// 1 negative predicate result, 2 usage or parse error.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace binconf

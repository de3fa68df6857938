#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gmf {

// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or parse error.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gmf

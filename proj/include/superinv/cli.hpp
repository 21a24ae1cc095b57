#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace superinv {

// Exit codes: 0 success, 1 not a member, 2 usage error, 3 theorem or internal failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace superinv

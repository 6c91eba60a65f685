#ifndef OKB_CLI_HPP
#define OKB_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace okb::cli {

// Exit-code contract: 0 success, 2 input error, 3 assumption violation,
// 4 resource cap, 5 internal invariant breach.
int run(const std::vector<std::string>& args, std::ostream& out);

}  // namespace okb::cli

#endif

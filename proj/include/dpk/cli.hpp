#ifndef DPK_CLI_HPP
#define DPK_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace dpk::cli {

// Exit codes: 0 success, 1 domain error, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dpk::cli

#endif

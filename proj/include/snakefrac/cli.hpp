#ifndef SNAKEFRAC_CLI_HPP
#define SNAKEFRAC_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace snakefrac {

// Runs one command. Exit codes: 0 success/PASS, 1 identity FAIL,
// 2 usage or parse error.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace snakefrac

#endif

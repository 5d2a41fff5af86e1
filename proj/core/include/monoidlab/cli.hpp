#ifndef MONOIDLAB_CLI_HPP_
#define MONOIDLAB_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace monoidlab::cli {

/// Exit codes: 0 success, 1 theorem violation (a verified identity failed),
/// 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace monoidlab::cli

#endif  // MONOIDLAB_CLI_HPP_

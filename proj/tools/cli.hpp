#ifndef RWGRAPH_CLI_HPP
#define RWGRAPH_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace rwgraph::cli {

// Exit codes: 0 success, 1 violated identity in a verify suite, 2 input
// parse error, 3 missing table data, 4 out-of-range manifold index.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace rwgraph::cli

#endif

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace aalpha {

// Entry point behind the aalpha binary. Exit codes: 0 success / all cases
// matched, 1 verification mismatch, 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

// "kind:params" constructor strings ("complete:5", "firefly:2,5",
// "multipartite:2,3,3", "powercyclic:12"); anything else is read as an
// edge-list file path.
class Graph;
Graph graph_from_spec(const std::string& spec);

}  // namespace aalpha

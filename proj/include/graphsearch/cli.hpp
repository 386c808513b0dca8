#pragma once

#include <string>
#include <vector>

namespace graphsearch {

// Subcommands: gen, search, adversary, experiment, verify.
// Exit status: 0 ok, 1 bound violation or failed search, 2 usage error.
int run_cli(const std::vector<std::string>& args);

}  // namespace graphsearch

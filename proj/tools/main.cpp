#include <string>
#include <vector>

#include "graphsearch/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return graphsearch::run_cli(args);
}

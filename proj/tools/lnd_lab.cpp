#include <iostream>

#include "lndlab/cli/run.hpp"

int main(int argc, char** argv) {
  return lnd::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}

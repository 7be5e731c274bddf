#include <iostream>

#include "cli.hpp"
#include "limitlab/errors.hpp"

int main(int argc, char** argv) {
  try {
    auto config = limitlab::cli::parse_arguments(argc, argv, std::cout);
    if (!config) return limitlab::cli::kOk;
    return limitlab::cli::run(*config, std::cout, std::cerr);
  } catch (const limitlab::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return limitlab::cli::kConfigError;
  }
}

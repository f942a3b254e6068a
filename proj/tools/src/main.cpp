#include <iostream>

#include "lexsemi_cli/cli.hpp"

int main(int argc, char** argv) {
  return lexsemi::cli::dispatch({argv + 1, argv + argc}, std::cout, std::cerr);
}

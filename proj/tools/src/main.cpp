#include <iostream>

#include "htcover/cli/commands.hpp"

int main(int argc, char** argv) {
  htcover::cli::CliContext ctx{std::cin, std::cout, std::cerr, htcover::cli::capture_environment()};
  return htcover::cli::run({argv, argv + argc}, ctx);
}

#include <iostream>
#include <string>
#include <vector>

#include "glk/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  glk::cli::CliResult res = glk::cli::run(args);
  if (res.code == glk::cli::kOk)
    std::cout << res.text;
  else
    std::cerr << res.text;
  return res.code;
}

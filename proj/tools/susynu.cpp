#include <iostream>
#include <string>
#include <vector>

#include "susynu/app/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return susynu::app::run(args, std::cout, std::cerr);
}

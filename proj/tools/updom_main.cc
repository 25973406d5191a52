#include <iostream>

#include "updom/cli.h"

int main(int argc, char** argv) {
  return updom::run_cli(argc, argv, std::cout, std::cerr);
}

#include "hopfca/io.hpp"

int main(int argc, char** argv) {
  return hopfca::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}

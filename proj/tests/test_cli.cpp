#include "harness.hpp"

int main(int argc, char** argv) {
  CHECK(argc > 1);
  return harness::done("test_cli");
}

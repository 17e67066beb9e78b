#include "harness.hpp"

int main() {
  CHECK(true);
  return harness::done("test_serialization");
}

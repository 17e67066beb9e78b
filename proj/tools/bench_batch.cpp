// Benchmark for the batched hull certification: serial reference vs the
// OpenMP fan-out used by `tightstorage certify --random`.  Checks that both
// paths produce identical equality flags before reporting timings.

#include "tsf/hull.hpp"
#include "tsf/storage.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(stop - start).count();
}

} // namespace

int main(int argc, char** argv) {
  using namespace tsf;

  std::string family_arg = argc > 1 ? argv[1] : "bo";
  int n = argc > 2 ? std::atoi(argv[2]) : 40;
  unsigned long seed = argc > 3 ? std::strtoul(argv[3], nullptr, 10) : 7;
  if (n <= 0) {
    std::cerr << "usage: bench_batch [family] [n] [seed]\n";
    return 2;
  }

  Family fam;
  try {
    fam = family_parse(family_arg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  std::cout << "family: " << family_name(fam) << "  instances: " << n
            << "  seed: " << seed << "\n";

  auto t0 = std::chrono::steady_clock::now();
  std::vector<HullCertificate> serial =
      certify_random_batch(fam, n, seed, /*parallel=*/false);
  double serial_s = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  std::vector<HullCertificate> parallel =
      certify_random_batch(fam, n, seed, /*parallel=*/true);
  double parallel_s = seconds_since(t0);

  if (serial.size() != parallel.size()) {
    std::cerr << "MISMATCH: result counts differ\n";
    return 1;
  }
  int equal_serial = 0;
  bool agree = true;
  for (size_t i = 0; i < serial.size(); ++i) {
    if (serial[i].equality) ++equal_serial;
    if (serial[i].equality != parallel[i].equality ||
        serial[i].lifted.rows.size() != parallel[i].lifted.rows.size() ||
        serial[i].hull.rows.size() != parallel[i].hull.rows.size()) {
      std::cerr << "MISMATCH at instance " << i << "\n";
      agree = false;
    }
  }
  if (!agree) return 1;

  std::cout << "certified equal: " << equal_serial << "/" << n << "\n";
  std::cout << "serial:   " << serial_s << " s\n";
  std::cout << "parallel: " << parallel_s << " s\n";
  if (parallel_s > 0)
    std::cout << "speedup:  " << serial_s / parallel_s << "x\n";
  return 0;
}

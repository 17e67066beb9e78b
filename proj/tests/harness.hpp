// Tiny assertion harness shared by the test executables. Each test file
// defines main(), calls CHECK/CHECK_EQ freely and returns harness::done().

#pragma once

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace harness {

inline int failures = 0;
inline int checks = 0;

inline int done(const std::string& name) {
  if (failures == 0) {
    std::cout << name << ": all " << checks << " checks passed\n";
    return 0;
  }
  std::cout << name << ": " << failures << " of " << checks << " checks FAILED\n";
  return 1;
}

template <class T>
std::string show(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

// Runs a shell command, merging stderr into the captured output.
struct CmdResult {
  int status = -1;
  std::string out;
};

inline CmdResult run_cmd(const std::string& cmd) {
  CmdResult r;
  std::string full = cmd + " 2>&1";
  FILE* p = popen(full.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int raw = pclose(p);
  if (WIFEXITED(raw)) r.status = WEXITSTATUS(raw);
  return r;
}

} // namespace harness

#define CHECK(cond)                                                          \
  do {                                                                       \
    ++harness::checks;                                                       \
    if (!(cond)) {                                                           \
      ++harness::failures;                                                   \
      std::cerr << __FILE__ << ":" << __LINE__ << ": CHECK failed: " #cond   \
                << "\n";                                                     \
    }                                                                        \
  } while (0)

#define CHECK_EQ(a, b)                                                       \
  do {                                                                       \
    ++harness::checks;                                                       \
    const auto& va_ = (a);                                                   \
    const auto& vb_ = (b);                                                   \
    if (!(va_ == vb_)) {                                                     \
      ++harness::failures;                                                   \
      std::cerr << __FILE__ << ":" << __LINE__ << ": CHECK_EQ failed: " #a   \
                << " == " #b << "  (" << harness::show(va_) << " vs "        \
                << harness::show(vb_) << ")\n";                              \
    }                                                                        \
  } while (0)

#define CHECK_MSG(cond, msg)                                                 \
  do {                                                                       \
    ++harness::checks;                                                       \
    if (!(cond)) {                                                           \
      ++harness::failures;                                                   \
      std::cerr << __FILE__ << ":" << __LINE__ << ": CHECK failed: " #cond   \
                << "  [" << msg << "]\n";                                    \
    }                                                                        \
  } while (0)

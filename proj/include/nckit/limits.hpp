#pragma once

#include <algorithm>
#include <cstdlib>
#include <string>

#include "nckit/error.hpp"

namespace nckit {

// Enumeration caps. NCKIT_MAX_N in the environment raises (never lowers)
// every cap; it is read once per process.
struct Limits {
  int all_partitions = 12;
  int noncrossing = 14;
  int interval = 20;
  int gram_matrix_dim = 1500;
};

inline const Limits& limits() {
  static const Limits value = [] {
    Limits l;
    if (const char* env = std::getenv("NCKIT_MAX_N")) {
      char* end = nullptr;
      const long raised = std::strtol(env, &end, 10);
      if (end != env && *end == '\0' && raised > 0 && raised < 64) {
        const int r = static_cast<int>(raised);
        l.all_partitions = std::max(l.all_partitions, r);
        l.noncrossing = std::max(l.noncrossing, r);
        l.interval = std::max(l.interval, r);
      }
    }
    return l;
  }();
  return value;
}

inline void check_size(int n, int cap, const char* what) {
  if (n < 1 || n > cap) {
    throw size_error(std::string(what) + ": n=" + std::to_string(n) +
                     " outside [1, " + std::to_string(cap) + "]");
  }
}

} // namespace nckit

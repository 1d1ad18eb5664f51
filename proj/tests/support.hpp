#pragma once

#include <initializer_list>
#include <vector>

#include "nckit/partition.hpp"

namespace nckit::test {

// P(4, {{1, 4}, {2, 3}}) reads like the block notation in the literature
inline Partition P(int n, std::initializer_list<std::vector<int>> blocks) {
  return Partition::from_blocks(n, std::vector<Block>(blocks));
}

inline Partition zero(int n) { return Partition::finest(n); }
inline Partition one(int n) { return Partition::coarsest(n); }

} // namespace nckit::test

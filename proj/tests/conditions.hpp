#pragma once

// The classification condition written out literally, for use as a test
// oracle: exactly one cycle of each length 2^i with 2^i <= k, and every other
// cycle of length at least k + 1. For k = 0 the condition is vacuous.

#include "sncode/perm.hpp"

namespace sncode::testing {

inline bool code_condition(const CycleType& ct, int k) {
  if (k <= 0)
    return true;
  int j = 0;
  while ((2 << j) <= k)
    ++j;
  for (int i = 0; i <= j; ++i)
    if (ct.multiplicity(1 << i) != 1)
      return false;
  const Partition lengths = ct.to_partition();
  for (const int length : lengths.parts()) {
    bool designated = (length & (length - 1)) == 0 && length <= (1 << j);
    if (!designated && length < k + 1)
      return false;
  }
  return true;
}

} // namespace sncode::testing

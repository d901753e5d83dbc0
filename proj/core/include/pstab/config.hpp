#pragma once
#include <cstddef>

namespace pstab {

struct Limits {
  std::size_t order_cap = 200000;
  std::size_t degree_cap = 4096;
  std::size_t subgroup_cap = 200000;  // largest group order for full lattice enumeration

  // Defaults overridden by ORDER_CAP, DEGREE_CAP, SUBGROUP_CAP.
  static Limits from_env();
};

// Process-wide configuration. Set it before starting worker threads.
const Limits& limits();
void set_limits(const Limits& l);

}  // namespace pstab

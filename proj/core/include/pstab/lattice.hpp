#pragma once
#include <vector>

#include "pstab/subgroups.hpp"

namespace pstab {

// One subgroup per conjugacy class, each the lexicographically least in its
// class, sorted by (order, elements). Throws OrderCapExceeded when |G|
// exceeds the subgroup-enumeration cap.
std::vector<Subgroup> subgroups_up_to_conjugacy(const Group& G);

// Normal subgroups of H, sorted by (order, elements).
std::vector<Subgroup> normal_subgroups(const Group& G, const Subgroup& H);

// Subgroups of a fixed Sylow p-subgroup P grouped by G-conjugacy. Every
// p-subgroup of G is conjugate to a member of exactly one class.
struct PSubgroupClasses {
  std::uint64_t p = 0;
  Subgroup P;
  std::vector<Subgroup> subgroups;                // all subgroups of P, sorted by (order, elements)
  std::vector<std::size_t> class_of;              // subgroup index -> class index
  std::vector<std::vector<std::size_t>> classes;  // class -> member indices, ascending
  std::size_t index_of(const Subgroup& S) const;  // throws BadParameters if S is not a subgroup of P
  const Subgroup& rep(std::size_t c) const { return subgroups[classes[c].front()]; }
};
PSubgroupClasses p_subgroup_classes(const Group& G, std::uint64_t p, const Subgroup& P);
PSubgroupClasses p_subgroup_classes(const Group& G, std::uint64_t p);

bool is_cyclic(const Group& G, const Subgroup& H);

}  // namespace pstab

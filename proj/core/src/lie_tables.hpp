#pragma once
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pstab/lie.hpp"

namespace pstab::lie::detail {

struct ExceptionalEntry {
  std::string type;
  CyclotomicOrder b;
  int centre = 0;  // 0: none, +3: gcd(3,q-1), -3: gcd(3,q+1), 2: gcd(2,q-1)
};
const std::vector<ExceptionalEntry>& exceptional_entries();

struct SporadicEntry {
  std::string name;
  std::map<std::uint64_t, unsigned> order;  // prime -> exponent
  // Primes at which the group involves qdp(p), with the witness kind.
  std::map<std::uint64_t, Witness> involved;
  // Odd primes with a Sylow subgroup of order at least p^3 that is Abelian.
  std::vector<std::uint64_t> abelian_large;
};
const std::vector<SporadicEntry>& sporadic_entries();
const SporadicEntry* find_sporadic(const std::string& name);

}  // namespace pstab::lie::detail

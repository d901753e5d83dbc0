#pragma once
#include <string>

#include "pstab/constructions.hpp"
#include "pstab/subgroups.hpp"

namespace testing_support {

inline pstab::Built recipe(const std::string& kind, std::uint32_t p = 0, std::uint32_t q = 0, std::size_t n = 0,
                           const std::string& family = {}) {
  pstab::Recipe r;
  r.kind = kind;
  r.p = p;
  r.q = q;
  r.n = n;
  r.family = family;
  return pstab::build_recipe(r);
}

inline pstab::GroupPtr group(const std::string& kind, std::uint32_t p = 0, std::uint32_t q = 0, std::size_t n = 0,
                             const std::string& family = {}) {
  return recipe(kind, p, q, n, family).group;
}

inline pstab::GroupPtr perm_group(const std::vector<std::string>& cycles, std::size_t degree) {
  std::vector<pstab::Perm> gens;
  for (const auto& c : cycles) gens.push_back(pstab::Perm::from_cycles(c, degree));
  return pstab::Group::generate(gens, degree);
}

inline std::vector<pstab::Idx> to_set(const pstab::Subgroup& H) { return H.elems; }

// Small groups where brute-force oracles are affordable, with a prime.
struct Small {
  const char* name;
  pstab::GroupPtr G;
  std::uint64_t p;
};
inline std::vector<Small> small_groups() {
  return {
      {"S4@3", group("symmetric", 0, 0, 4), 3},
      {"S4@2", group("symmetric", 0, 0, 4), 2},
      {"SL2(3)@3", group("classical", 0, 3, 2, "SL"), 3},
      {"3^(1+2)", group("extraspecial", 3), 3},
      {"3^(1+2):2^2", group("extraspecial_klein", 3), 3},
      {"3^(1+2):Q8", group("extraspecial_q8", 3), 3},
      {"Qd(3)", group("qdp", 3), 3},
  };
}

}  // namespace testing_support

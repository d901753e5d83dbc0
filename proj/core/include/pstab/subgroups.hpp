#pragma once
#include <cstdint>
#include <optional>
#include <vector>

#include "pstab/group.hpp"

namespace pstab {

// Subgroup of a fixed parent group, stored as its sorted element indices.
struct Subgroup {
  std::vector<Idx> elems;  // sorted ascending
  std::vector<Idx> gens;

  std::size_t order() const { return elems.size(); }
  bool contains(Idx x) const;
  bool operator==(const Subgroup& o) const { return elems == o.elems; }
};

// Byte mask over the parent's elements.
using Mask = std::vector<std::uint8_t>;
Mask mask_of(const Group& G, const Subgroup& H);

Subgroup trivial_subgroup(const Group& G);
Subgroup whole(const Group& G);
Subgroup closure(const Group& G, const std::vector<Idx>& gens);
Subgroup closure_with(const Group& G, const Subgroup& H, const std::vector<Idx>& extra);
// Wraps a set already known to be a subgroup; picks generators greedily.
Subgroup subgroup_from_elements(const Group& G, std::vector<Idx> elems);
std::vector<Idx> greedy_generators(const Group& G, const std::vector<Idx>& elems);

bool is_subset(const Subgroup& a, const Subgroup& b);
Subgroup intersection(const Group& G, const Subgroup& a, const Subgroup& b);
Subgroup join(const Group& G, const Subgroup& a, const Subgroup& b);
Subgroup conjugate(const Group& G, const Subgroup& H, Idx g);

bool normalizes(const Group& G, Idx g, const Subgroup& H, const Mask& h_mask);
bool is_normal_in(const Group& G, const Subgroup& H, const Subgroup& K);  // H normal in K
Subgroup normalizer(const Group& G, const Subgroup& H, const Subgroup& within);
Subgroup normalizer(const Group& G, const Subgroup& H);
Subgroup centralizer(const Group& G, const Subgroup& H, const Subgroup& within);
Subgroup centralizer(const Group& G, const Subgroup& H);
Subgroup center(const Group& G, const Subgroup& H);
Subgroup normal_closure(const Group& G, const std::vector<Idx>& S, const Subgroup& within);
Subgroup derived_subgroup(const Group& G, const Subgroup& H);
Subgroup core(const Group& G, const Subgroup& H, const Subgroup& within);
bool is_abelian(const Group& G, const Subgroup& H);
std::uint64_t exponent(const Group& G, const Subgroup& H);

// All conjugates of H under `within`, and an element g with A^g = B if any.
std::vector<Subgroup> conjugacy_orbit(const Group& G, const Subgroup& H, const Subgroup& within);
std::optional<Idx> conjugating_element(const Group& G, const Subgroup& A, const Subgroup& B, const Subgroup& within);
// Lexicographically least conjugate (by sorted element list).
Subgroup least_conjugate(const Group& G, const Subgroup& H, const Subgroup& within);

std::uint64_t p_part(std::uint64_t n, std::uint64_t p);
bool is_prime(std::uint64_t n);
std::uint64_t smallest_prime(std::uint64_t n);
bool is_p_element(const Group& G, Idx x, std::uint64_t p);

// Sylow p-subgroup of `within`; the lexicographically least one.
Subgroup sylow(const Group& G, std::uint64_t p, const Subgroup& within);
Subgroup sylow(const Group& G, std::uint64_t p);
// A Sylow subgroup built from a seeded random walk (not canonicalised).
Subgroup sylow_seeded(const Group& G, std::uint64_t p, std::uint64_t seed);

enum class CoreMode { p, p_prime };
Subgroup p_core(const Group& G, std::uint64_t p, CoreMode mode, const Subgroup& within);
Subgroup p_core(const Group& G, std::uint64_t p, CoreMode mode);

// Every subgroup of the p-group P, sorted by (order, elements).
std::vector<Subgroup> subgroups_of_pgroup(const Group& G, const Subgroup& P);

// Orbits of `within` acting by conjugation on a set of elements.
std::vector<std::vector<Idx>> conjugation_orbits(const Group& G, const std::vector<Idx>& points,
                                                 const Subgroup& within);

}  // namespace pstab

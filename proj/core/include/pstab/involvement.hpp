#pragma once
#include <cstdint>
#include <optional>

#include "pstab/quotient.hpp"

namespace pstab {

// A section H/K of G together with an isomorphism onto a target group.
struct SectionWitness {
  Subgroup H;            // in G
  Subgroup K;            // in G, normal in H
  Subgroup Q;            // the p-subgroup whose section Q/W becomes O_p(H/K)
  Subgroup W;
  GroupPtr section;      // H/K on right cosets of K
  Hom iso;               // section -> target
};

// The group qdp(p), built once per p and shared.
GroupPtr qdp_reference(std::uint32_t p);

// Searches for a section of G isomorphic to qdp(p). Every candidate comes
// from a non-cyclic p-subgroup Q and W normal in Q with Q/W elementary
// Abelian of order p^2 on which N_G(Q) ∩ N_G(W) induces SL_2(p). Among the
// sections found, the one with least (|H|, |K|) is returned.
std::optional<SectionWitness> involves_qdp(const GroupPtr& G, std::uint32_t p);

// Elementwise re-check: K normal in H, H/K has the target's order and iso
// is a bijective homomorphism.
bool verify_section(const Group& G, const SectionWitness& w);

// A subgroup of G isomorphic to target, if any.
std::optional<Subgroup> has_subgroup_qdp_like(const GroupPtr& G, const GroupPtr& target);

}  // namespace pstab

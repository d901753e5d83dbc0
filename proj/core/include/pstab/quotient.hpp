#pragma once
#include <vector>

#include "pstab/group.hpp"
#include "pstab/subgroups.hpp"

namespace pstab {

// Homomorphism stored as a full element map src -> dst.
struct Hom {
  GroupPtr src;
  GroupPtr dst;
  std::vector<Idx> map;

  Idx operator()(Idx x) const { return map[x]; }
  Subgroup kernel() const;
  Subgroup image() const;
  bool is_injective() const { return kernel().order() == 1; }
};

// Extends generator images to a homomorphism; nullopt if relations fail.
std::optional<Hom> extend_to_hom(const GroupPtr& src, const std::vector<Idx>& src_gens, const GroupPtr& dst,
                                 const std::vector<Idx>& images);
// Elementwise check that map is a homomorphism.
bool verify_hom(const Hom& h);

struct Quotient {
  GroupPtr group;  // acts on right cosets N g
  Hom proj;
};
// G/N as a permutation group on right cosets; throws NotNormal.
Quotient quotient(const GroupPtr& G, const Subgroup& N);

// Subgroup H of G as a group in its own right, plus index translation.
struct Embedded {
  GroupPtr group;
  std::vector<Idx> to_parent;  // child index -> parent index (= H.elems)
  Idx to_child(Idx parent_idx) const;
  Subgroup child_subgroup(const Group& parent, const Subgroup& S) const;  // S inside H
  Subgroup parent_subgroup(const Subgroup& S) const;
};
Embedded embed_subgroup(const Group& G, const Subgroup& H, std::string label = {});

}  // namespace pstab

#include "pstab/lattice.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "pstab/config.hpp"
#include "pstab/errors.hpp"

namespace pstab {
namespace {

struct VecHash {
  std::size_t operator()(const std::vector<Idx>& v) const {
    std::size_t h = v.size();
    for (Idx x : v) h = h * 1000003u ^ x;
    return h;
  }
};

bool by_order_then_elems(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.elems < b.elems;
}

}  // namespace

std::vector<Subgroup> subgroups_up_to_conjugacy(const Group& G) {
  if (G.order() > limits().subgroup_cap)
    throw OrderCapExceeded("group order " + std::to_string(G.order()) + " exceeds the subgroup-enumeration cap");
  const Subgroup all = whole(G);
  std::vector<Subgroup> reps{trivial_subgroup(G)};
  std::unordered_set<std::vector<Idx>, VecHash> canon{reps[0].elems};
  std::unordered_set<std::vector<Idx>, VecHash> tried;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const Subgroup H = reps[i];
    Mask covered = mask_of(G, H);
    for (Idx g = 0; g < G.order(); ++g) {
      if (covered[g]) continue;
      for (Idx h : H.elems) covered[G.mul(h, g)] = 1;
      Subgroup S = closure_with(G, H, {g});
      if (!tried.insert(S.elems).second) continue;
      Subgroup c = least_conjugate(G, S, all);
      if (canon.insert(c.elems).second) reps.push_back(std::move(c));
    }
  }
  std::sort(reps.begin(), reps.end(), by_order_then_elems);
  return reps;
}

std::vector<Subgroup> normal_subgroups(const Group& G, const Subgroup& H) {
  // Every normal subgroup is a join of normal closures of single elements.
  std::vector<Subgroup> ncl;
  {
    Mask done(G.order(), 0);
    for (Idx x : H.elems) {
      if (done[x]) continue;
      std::vector<Idx> cls{x};
      done[x] = 1;
      for (std::size_t i = 0; i < cls.size(); ++i)
        for (Idx w : H.gens) {
          Idx y = G.conj(cls[i], w);
          if (!done[y]) {
            done[y] = 1;
            cls.push_back(y);
          }
        }
      ncl.push_back(normal_closure(G, {x}, H));
    }
  }
  std::unordered_set<std::vector<Idx>, VecHash> seen;
  std::vector<Subgroup> out;
  for (auto& n : ncl)
    if (seen.insert(n.elems).second) out.push_back(n);
  std::vector<Subgroup> base = out;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const Subgroup& b : base) {
      if (is_subset(b, out[i])) continue;
      Subgroup j = join(G, out[i], b);
      if (seen.insert(j.elems).second) out.push_back(std::move(j));
    }
  std::sort(out.begin(), out.end(), by_order_then_elems);
  return out;
}

std::size_t PSubgroupClasses::index_of(const Subgroup& S) const {
  auto it = std::lower_bound(subgroups.begin(), subgroups.end(), S, [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elems < b.elems;
  });
  if (it == subgroups.end() || it->elems != S.elems) throw BadParameters("not a subgroup of the Sylow subgroup");
  return static_cast<std::size_t>(it - subgroups.begin());
}

PSubgroupClasses p_subgroup_classes(const Group& G, std::uint64_t p, const Subgroup& P) {
  PSubgroupClasses out;
  out.p = p;
  out.P = P;
  out.subgroups = subgroups_of_pgroup(G, P);
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  out.class_of.assign(out.subgroups.size(), kNone);
  const Subgroup all = whole(G);
  for (std::size_t i = 0; i < out.subgroups.size(); ++i) {
    if (out.class_of[i] != kNone) continue;
    const std::size_t c = out.classes.size();
    out.classes.emplace_back();
    for (const Subgroup& S : conjugacy_orbit(G, out.subgroups[i], all)) {
      if (!is_subset(S, P)) continue;
      const std::size_t j = out.index_of(S);
      out.class_of[j] = c;
      out.classes[c].push_back(j);
    }
    std::sort(out.classes[c].begin(), out.classes[c].end());
  }
  return out;
}

PSubgroupClasses p_subgroup_classes(const Group& G, std::uint64_t p) { return p_subgroup_classes(G, p, sylow(G, p)); }

bool is_cyclic(const Group& G, const Subgroup& H) {
  for (Idx x : H.elems)
    if (G.elt_order(x) == H.order()) return true;
  return false;
}

}  // namespace pstab

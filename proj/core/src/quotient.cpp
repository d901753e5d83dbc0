#include "pstab/quotient.hpp"

#include <algorithm>

#include "pstab/errors.hpp"

namespace pstab {

Subgroup Hom::kernel() const {
  std::vector<Idx> k;
  for (Idx x = 0; x < map.size(); ++x)
    if (map[x] == 0) k.push_back(x);
  return subgroup_from_elements(*src, std::move(k));
}

Subgroup Hom::image() const {
  std::vector<Idx> im(map.begin(), map.end());
  std::sort(im.begin(), im.end());
  im.erase(std::unique(im.begin(), im.end()), im.end());
  return subgroup_from_elements(*dst, std::move(im));
}

std::optional<Hom> extend_to_hom(const GroupPtr& src, const std::vector<Idx>& src_gens, const GroupPtr& dst,
                                 const std::vector<Idx>& images) {
  const Group& A = *src;
  const Group& B = *dst;
  constexpr Idx kUnset = 0xffffffffu;
  Hom h{src, dst, std::vector<Idx>(A.order(), kUnset)};
  h.map[0] = 0;
  std::vector<Idx> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Idx a = queue[i];
    for (std::size_t k = 0; k < src_gens.size(); ++k) {
      Idx y = A.mul(a, src_gens[k]);
      Idx v = B.mul(h.map[a], images[k]);
      if (h.map[y] == kUnset) {
        h.map[y] = v;
        queue.push_back(y);
      } else if (h.map[y] != v) {
        return std::nullopt;
      }
    }
  }
  if (queue.size() != A.order()) return std::nullopt;  // src_gens do not generate
  return h;
}

bool verify_hom(const Hom& h) {
  const Group& A = *h.src;
  const Group& B = *h.dst;
  if (h.map.size() != A.order()) return false;
  for (Idx x = 0; x < A.order(); ++x)
    for (Idx g : A.gens())
      if (h.map[A.mul(x, g)] != B.mul(h.map[x], h.map[g])) return false;
  return h.map[0] == 0;
}

Quotient quotient(const GroupPtr& Gp, const Subgroup& N) {
  const Group& G = *Gp;
  if (!is_normal_in(G, N, whole(G))) throw NotNormal("quotient by a subgroup that is not normal");
  if (N.order() == 1) {
    Hom id{Gp, Gp, std::vector<Idx>(G.order())};
    for (Idx x = 0; x < G.order(); ++x) id.map[x] = x;
    return Quotient{Gp, std::move(id)};
  }
  const std::size_t index = G.order() / N.order();
  if (index > kMaxDegree) throw OrderCapExceeded("quotient index too large for a coset action");
  constexpr std::uint32_t kNone = 0xffffffffu;
  std::vector<std::uint32_t> coset(G.order(), kNone);
  std::vector<Idx> rep;
  for (Idx x = 0; x < G.order(); ++x) {
    if (coset[x] != kNone) continue;
    const std::uint32_t c = static_cast<std::uint32_t>(rep.size());
    rep.push_back(x);
    for (Idx n : N.elems) coset[G.mul(n, x)] = c;
  }
  auto action = [&](Idx g) {
    std::vector<Point> img(index);
    for (std::size_t c = 0; c < index; ++c) img[c] = static_cast<Point>(coset[G.mul(rep[c], g)]);
    return Perm(std::move(img));
  };
  std::vector<Perm> gens;
  for (Idx g : G.gens()) gens.push_back(action(g));
  GroupPtr Q = Group::generate(gens, index, G.label().empty() ? std::string() : G.label() + "/N");
  Hom proj{Gp, Q, std::vector<Idx>(G.order())};
  const auto& base = Q->base();
  std::vector<Point> b(base.size());
  for (Idx x = 0; x < G.order(); ++x) {
    for (std::size_t j = 0; j < base.size(); ++j) b[j] = static_cast<Point>(coset[G.mul(rep[base[j]], x)]);
    proj.map[x] = *Q->find_by_base(b.data());
  }
  return Quotient{Q, std::move(proj)};
}

Idx Embedded::to_child(Idx parent_idx) const {
  auto it = std::lower_bound(to_parent.begin(), to_parent.end(), parent_idx);
  if (it == to_parent.end() || *it != parent_idx) throw BadParameters("element outside the embedded subgroup");
  return static_cast<Idx>(it - to_parent.begin());
}

Subgroup Embedded::child_subgroup(const Group&, const Subgroup& S) const {
  Subgroup r;
  for (Idx x : S.elems) r.elems.push_back(to_child(x));
  for (Idx x : S.gens) r.gens.push_back(to_child(x));
  return r;
}

Subgroup Embedded::parent_subgroup(const Subgroup& S) const {
  Subgroup r;
  for (Idx x : S.elems) r.elems.push_back(to_parent[x]);
  for (Idx x : S.gens) r.gens.push_back(to_parent[x]);
  return r;
}

Embedded embed_subgroup(const Group& G, const Subgroup& H, std::string label) {
  Embedded e;
  e.group = Group::from_subset(G, H.elems, std::move(label));
  e.to_parent = H.elems;
  return e;
}

}  // namespace pstab

#include "pstab/involvement.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "pstab/constructions.hpp"
#include "pstab/errors.hpp"
#include "pstab/iso.hpp"
#include "pstab/lattice.hpp"

namespace pstab {

GroupPtr qdp_reference(std::uint32_t p) {
  static std::mutex mu;
  static std::map<std::uint32_t, GroupPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(p);
  if (it != cache.end()) return it->second;
  GroupPtr g = qdp(p).group;
  cache.emplace(p, g);
  return g;
}

namespace {

// Coordinates of Q/W in the basis (aW, bW), and the induced 2x2 matrices.
struct PlaneAction {
  std::uint32_t p;
  std::map<Idx, std::uint32_t> coord;  // element of Q -> i + p*j
  Idx a = 0, b = 0;

  PlaneAction(const Group& G, std::uint32_t p_, const Subgroup& Q, const Subgroup& W) : p(p_) {
    const Mask w = mask_of(G, W);
    for (Idx x : Q.elems)
      if (!w[x]) {
        a = x;
        break;
      }
    Subgroup WA = closure_with(G, W, {a});
    const Mask wa = mask_of(G, WA);
    for (Idx x : Q.elems)
      if (!wa[x]) {
        b = x;
        break;
      }
    Idx ai = 0;
    for (std::uint32_t i = 0; i < p; ++i, ai = G.mul(ai, a)) {
      Idx aibj = ai;
      for (std::uint32_t j = 0; j < p; ++j, aibj = G.mul(aibj, b))
        for (Idx y : W.elems) coord[G.mul(y, aibj)] = i + p * j;
    }
  }

  // Row-major code of the matrix of l: rows are the images of aW and bW.
  std::uint32_t matrix_code(const Group& G, Idx l) const {
    const std::uint32_t ra = coord.at(G.conj(a, l)), rb = coord.at(G.conj(b, l));
    return ra + p * p * rb;
  }
  std::uint32_t det(std::uint32_t code) const {
    const std::uint32_t m00 = code % p, m01 = (code / p) % p, m10 = (code / (p * p)) % p,
                        m11 = (code / (p * p * p)) % p;
    return (m00 * m11 % p + p - m01 * m10 % p) % p;
  }
  std::uint32_t code_of(std::uint32_t m00, std::uint32_t m01, std::uint32_t m10, std::uint32_t m11) const {
    return m00 + p * m01 + p * p * m10 + p * p * p * m11;
  }
};

bool elementary_quotient(const Group& G, std::uint32_t p, const Subgroup& Q, const Subgroup& W) {
  const Mask w = mask_of(G, W);
  for (Idx a : Q.elems)
    if (!w[G.pow(a, p)]) return false;
  for (Idx a : Q.gens)
    for (Idx b : Q.gens)
      if (!w[G.comm(a, b)]) return false;
  return true;
}

struct Candidate {
  Subgroup H, K, Q, W;
  GroupPtr section;
  Hom iso;
};

// Tries to cut a qdp(p) section out of H = <Q, xt, at>.
std::optional<Candidate> try_section(const GroupPtr& Gp, std::uint32_t p, const Subgroup& Q, const Subgroup& W,
                                     const PlaneAction& pa, Idx xt, Idx at, const GroupPtr& target) {
  const Group& G = *Gp;
  std::vector<Idx> gens = Q.gens;
  gens.push_back(xt);
  gens.push_back(at);
  Subgroup H = closure(G, gens);
  if (H.order() % target->order() != 0) return std::nullopt;
  std::vector<Idx> dker;
  const std::uint32_t id = pa.code_of(1, 0, 0, 1);
  for (Idx h : H.elems)
    if (pa.matrix_code(G, h) == id) dker.push_back(h);
  Subgroup D = subgroup_from_elements(G, std::move(dker));
  if (D.order() * (p * (p * p - 1)) != H.order()) return std::nullopt;

  // D/K must be elementary Abelian of order p^2 and meet Q in W.
  std::vector<Idx> seeds = W.gens;
  for (Idx d : D.elems) {
    if (!is_p_element(G, d, p)) seeds.push_back(d);
    else if (Idx dp = G.pow(d, p); dp != 0) seeds.push_back(dp);
  }
  for (Idx a : D.gens)
    for (Idx b : D.gens) seeds.push_back(G.comm(a, b));
  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
  Subgroup K = normal_closure(G, seeds, H);
  if (intersection(G, K, Q) != W) return std::nullopt;
  const std::size_t want = D.order() / (std::size_t(p) * p);
  while (K.order() < want) {
    bool grown = false;
    const Mask km = mask_of(G, K);
    for (Idx d : D.elems) {
      if (km[d]) continue;
      std::vector<Idx> s = K.gens;
      s.push_back(d);
      Subgroup K2 = normal_closure(G, s, H);
      if (K2.order() > want || intersection(G, K2, Q) != W) continue;
      K = std::move(K2);
      grown = true;
      break;
    }
    if (!grown) return std::nullopt;
  }
  if (K.order() != want) return std::nullopt;

  Embedded eh = embed_subgroup(G, H);
  Quotient quo = quotient(eh.group, eh.child_subgroup(G, K));
  auto iso = is_isomorphic(quo.group, target);
  if (!iso) return std::nullopt;
  return Candidate{std::move(H), std::move(K), Q, W, quo.group, std::move(*iso)};
}

bool better(const Candidate& a, const Candidate& b) {
  if (a.H.order() != b.H.order()) return a.H.order() < b.H.order();
  return a.K.order() < b.K.order();
}

}  // namespace

std::optional<SectionWitness> involves_qdp(const GroupPtr& Gp, std::uint32_t p) {
  const Group& G = *Gp;
  if (p < 3 || !is_prime(p)) throw BadParameters("p must be an odd prime");
  const std::uint64_t target_order = std::uint64_t(p) * p * p * (std::uint64_t(p) * p - 1);
  if (G.order() % target_order != 0) return std::nullopt;
  const Subgroup P = sylow(G, p);
  if (P.order() < std::size_t(p) * p * p || is_abelian(G, P)) return std::nullopt;
  const GroupPtr target = qdp_reference(p);
  const std::size_t sl2 = std::size_t(p) * (std::size_t(p) * p - 1);

  std::optional<Candidate> best;
  const PSubgroupClasses cls = p_subgroup_classes(G, p, P);
  for (std::size_t c = 0; c < cls.classes.size(); ++c) {
    const Subgroup& Q = cls.rep(c);
    if (Q.order() < std::size_t(p) * p || is_cyclic(G, Q)) continue;
    const Subgroup NQ = normalizer(G, Q);
    if (NQ.order() % sl2 != 0) continue;
    std::vector<Subgroup> normals = normal_subgroups(G, Q);
    std::vector<Subgroup> reps;
    for (const Subgroup& W : normals) {
      if (W.order() * p * p != Q.order() || !elementary_quotient(G, p, Q, W)) continue;
      bool seen = false;
      for (const Subgroup& R : reps)
        if (conjugating_element(G, W, R, NQ)) {
          seen = true;
          break;
        }
      if (!seen) reps.push_back(W);
    }
    for (const Subgroup& W : reps) {
      const Subgroup L = normalizer(G, W, NQ);
      if (L.order() % sl2 != 0) continue;
      PlaneAction pa(G, p, Q, W);
      std::map<std::uint32_t, std::vector<Idx>> pre;
      for (Idx l : L.elems) {
        const std::uint32_t m = pa.matrix_code(G, l);
        if (pa.det(m) == 1) pre[m].push_back(l);
      }
      if (pre.size() != sl2) continue;
      const auto& us = pre[pa.code_of(1, 1, 0, 1)];
      const auto& ts = pre[pa.code_of(0, p - 1, 1, 0)];
      constexpr std::size_t kTries = 6;
      bool found = false;
      for (std::size_t i = 0; i < us.size() && i < kTries && !found; ++i)
        for (std::size_t j = 0; j < ts.size() && j < kTries && !found; ++j) {
          auto cand = try_section(Gp, p, Q, W, pa, us[i], ts[j], target);
          if (!cand) continue;
          found = true;
          if (!best || better(*cand, *best)) best = std::move(cand);
        }
    }
  }
  if (!best) return std::nullopt;
  return SectionWitness{std::move(best->H), std::move(best->K), std::move(best->Q), std::move(best->W),
                        std::move(best->section), std::move(best->iso)};
}

bool verify_section(const Group& G, const SectionWitness& w) {
  if (!is_subset(w.K, w.H) || !is_normal_in(G, w.K, w.H)) return false;
  if (w.H.order() / w.K.order() != w.iso.dst->order() || w.section->order() != w.iso.dst->order()) return false;
  return verify_hom(w.iso) && w.iso.is_injective();
}

std::optional<Subgroup> has_subgroup_qdp_like(const GroupPtr& G, const GroupPtr& target) {
  if (G->order() % target->order() != 0) return std::nullopt;
  auto emb = find_embedding(target, G);
  if (!emb) return std::nullopt;
  return emb->image();
}

}  // namespace pstab

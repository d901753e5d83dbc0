#include "pstab/fusion.hpp"

#include <algorithm>
#include <cstring>
#include <set>

#include "pstab/errors.hpp"

namespace pstab {

FusionSystem fusion_system_on(const GroupPtr& Gp, std::uint64_t p, const Subgroup& P) {
  const Group& G = *Gp;
  if (P.order() != p_part(G.order(), p)) throw MismatchedSylow("P is not a Sylow p-subgroup");
  FusionSystem F;
  F.G = Gp;
  F.p = p;
  F.P = P;
  F.classes = p_subgroup_classes(G, p, P);
  const auto& subs = F.classes.subgroups;
  F.np_order.resize(subs.size());
  for (std::size_t i = 0; i < subs.size(); ++i) F.np_order[i] = normalizer(G, subs[i], P).order();
  F.class_rep.resize(F.classes.classes.size());
  for (std::size_t c = 0; c < F.classes.classes.size(); ++c) {
    std::size_t best = F.classes.classes[c].front();
    for (std::size_t i : F.classes.classes[c])
      if (F.np_order[i] > F.np_order[best]) best = i;
    F.class_rep[c] = best;
  }
  return F;
}

FusionSystem fusion_system(const GroupPtr& G, std::uint64_t p) { return fusion_system_on(G, p, sylow(*G, p)); }

std::vector<FusionMorphism> hom_set(const FusionSystem& F, const Subgroup& Q, const Subgroup& R) {
  const Group& G = *F.G;
  std::vector<FusionMorphism> out;
  if (R.order() < Q.order()) return out;
  const Mask r = mask_of(G, R);
  const Subgroup C = centralizer(G, Q);
  Mask covered(G.order(), 0);
  for (Idx g = 0; g < G.order(); ++g) {
    if (covered[g]) continue;
    bool in = true;
    for (Idx a : Q.gens)
      if (!r[G.conj(a, g)]) {
        in = false;
        break;
      }
    if (!in) continue;
    for (Idx c : C.elems) covered[G.mul(c, g)] = 1;
    out.push_back(FusionMorphism{Q, R, g});
  }
  return out;
}

SectionAction aut_F(const FusionSystem& F, const Subgroup& Q) {
  return section_action(*F.G, F.p, Q, trivial_subgroup(*F.G), normalizer(*F.G, Q));
}

bool is_fully_normalized(const FusionSystem& F, const Subgroup& Q) {
  const std::size_t i = F.classes.index_of(Q);
  return F.np_order[i] == F.np_order[F.class_rep[F.classes.class_of[i]]];
}

bool is_centric(const FusionSystem& F, const Subgroup& Q) {
  const Group& G = *F.G;
  const std::size_t c = F.class_of(Q);
  for (std::size_t i : F.classes.classes[c]) {
    const Subgroup& S = F.classes.subgroups[i];
    if (!is_subset(centralizer(G, S, F.P), S)) return false;
  }
  return true;
}

bool is_p_centric(const FusionSystem& F, const Subgroup& Q) {
  const Group& G = *F.G;
  for (Idx x : centralizer(G, Q).elems)
    if (is_p_element(G, x, F.p) && !Q.contains(x)) return false;
  return true;
}

bool is_radical(const FusionSystem& F, const Subgroup& Q) {
  const SectionAction a = aut_F(F, Q);
  return a.op.order() * center(*F.G, Q).order() == Q.order();
}

bool is_strongly_closed(const FusionSystem& F, const Subgroup& Q) {
  const Group& G = *F.G;
  const auto& ids = G.class_ids();
  std::set<std::uint32_t> cls;
  for (Idx x : Q.elems) cls.insert(ids[x]);
  for (Idx y : F.P.elems)
    if (cls.count(ids[y]) && !Q.contains(y)) return false;
  return true;
}

bool is_normal_in_F(const FusionSystem& F, const Subgroup& Q) {
  const Group& G = *F.G;
  if (!is_normal_in(G, Q, F.P)) return false;
  if (!is_strongly_closed(F, Q)) return false;
  for (std::size_t c = 0; c < F.classes.classes.size(); ++c) {
    const Subgroup& R = F.rep(c);
    const Subgroup N = normalizer(G, R);
    const Subgroup C = centralizer(G, R, N);
    const Subgroup M = normalizer(G, Q, N);
    // Every coset C g of N must meet N_G(Q).
    if (C.order() * M.order() / intersection(G, C, M).order() != N.order()) return false;
  }
  return true;
}

SubgroupStatus subgroup_status(const FusionSystem& F, const Subgroup& Q) {
  SubgroupStatus s;
  s.fully_normalized = is_fully_normalized(F, Q);
  s.centric = is_centric(F, Q);
  s.p_centric = is_p_centric(F, Q);
  s.radical = is_radical(F, Q);
  s.strongly_closed = is_strongly_closed(F, Q);
  s.normal_in_F = s.strongly_closed && is_normal_in_F(F, Q);
  return s;
}

bool sylow_axiom_holds(const FusionSystem& F) {
  const Group& G = *F.G;
  const SectionAction a = aut_F(F, F.P);
  // Image of P in Aut_F(P).
  std::set<Idx> img;
  for (Idx x : F.P.elems) img.insert(a.proj.map[a.n_group.to_child(x)]);
  return img.size() == p_part(a.group->order(), F.p) && p_part(G.order(), F.p) == F.P.order();
}

NormalizerSystem normalizer_system(const FusionSystem& F, const Subgroup& Q) {
  if (!is_fully_normalized(F, Q)) throw NotFullyNormalized("subgroup is not fully normalized");
  const Group& G = *F.G;
  const Subgroup N = normalizer(G, Q);
  Embedded n = embed_subgroup(G, N);
  const Subgroup NP = normalizer(G, Q, F.P);
  FusionSystem sub = fusion_system_on(n.group, F.p, n.child_subgroup(G, NP));
  return NormalizerSystem{std::move(sub), std::move(n)};
}

Subgroup QuotientSystem::preimage(const Subgroup& S) const {
  const Mask s = mask_of(*quo.group, S);
  std::vector<Idx> elems;
  for (Idx x = 0; x < n.group->order(); ++x)
    if (s[quo.proj.map[x]]) elems.push_back(n.to_parent[x]);
  std::vector<Idx> gens;
  for (Idx g : S.gens)
    for (Idx x = 0; x < n.group->order(); ++x)
      if (quo.proj.map[x] == g) {
        gens.push_back(n.to_parent[x]);
        break;
      }
  Subgroup r;
  r.elems = std::move(elems);  // to_parent is increasing, so still sorted
  r.gens = std::move(gens);
  return r;
}

QuotientSystem quotient_system(const FusionSystem& F, const Subgroup& Q) {
  if (!is_normal_in_F(F, Q)) throw NotNormalInF("subgroup is not normal in the fusion system");
  const Group& G = *F.G;
  Embedded n = embed_subgroup(G, normalizer(G, Q));
  Quotient quo = quotient(n.group, n.child_subgroup(G, Q));
  const Subgroup Pc = n.child_subgroup(G, F.P);
  std::vector<Idx> img;
  for (Idx x : Pc.gens) img.push_back(quo.proj.map[x]);
  const Subgroup Pbar = closure(*quo.group, img);
  FusionSystem fq = fusion_system_on(quo.group, F.p, Pbar);
  return QuotientSystem{std::move(fq), std::move(n), std::move(quo)};
}

Subgroup op_F(const FusionSystem& F) {
  const Group& G = *F.G;
  std::vector<Subgroup> normals = normal_subgroups(G, F.P);
  for (auto it = normals.rbegin(); it != normals.rend(); ++it)
    if (is_normal_in_F(F, *it)) return *it;
  return trivial_subgroup(G);
}

bool is_constrained(const FusionSystem& F) {
  const Subgroup O = op_F(F);
  return is_subset(centralizer(*F.G, O, F.P), O);
}

SolubilityChain is_soluble(const FusionSystem& F) {
  SolubilityChain out;
  out.chain.push_back(trivial_subgroup(*F.G));
  std::vector<QuotientSystem> stages;
  auto lift = [&](Subgroup S) {
    for (auto it = stages.rbegin(); it != stages.rend(); ++it) S = it->preimage(S);
    return S;
  };
  const FusionSystem* cur = &F;
  while (true) {
    if (cur->P.order() == 1) {
      out.soluble = true;
      return out;
    }
    const Subgroup O = op_F(*cur);
    if (O.order() == 1) return out;
    QuotientSystem q = quotient_system(*cur, O);
    out.chain.push_back(lift(O));
    stages.push_back(std::move(q));
    cur = &stages.back().F;
  }
}

StabilityVerdict is_p_stable_fusion(const FusionSystem& F) {
  const Group& G = *F.G;
  StabilityVerdict v;
  v.definition = Definition::def_1971;
  for (std::size_t c = 0; c < F.classes.classes.size(); ++c) {
    const Subgroup& Q = F.rep(c);
    const SectionAction a = aut_F(F, Q);
    const Group& A = *a.group;
    ++v.pairs_checked;
    if (a.op.order() == A.order()) continue;
    const Mask op = mask_of(A, a.op);
    Mask done(A.order(), 0);
    for (std::size_t i = 0; i < a.N.order(); ++i) {
      const Idx chi = a.proj.map[i];
      if (done[chi]) continue;
      done[chi] = 1;
      if (op[chi]) continue;
      const Idx x = a.N.elems[i];
      if (!quadratic_identity_holds(G, Q, x)) continue;
      StabilityWitness w;
      w.Q = Q;
      w.R = trivial_subgroup(G);
      w.x = x;
      w.automizer_order = A.order();
      w.automizer_op_order = a.op.order();
      v.stable = false;
      v.witness = std::move(w);
      return v;
    }
  }
  return v;
}

Model model_of_normalizer(const FusionSystem& F, const Subgroup& Q) {
  if (!is_fully_normalized(F, Q)) throw NotFullyNormalized("subgroup is not fully normalized");
  if (!is_centric(F, Q)) throw NotCentric("subgroup is not centric");
  const Group& G = *F.G;
  Embedded n = embed_subgroup(G, normalizer(G, Q));
  const Subgroup O = p_core(*n.group, F.p, CoreMode::p_prime);
  Model m;
  m.group = O.order() == 1 ? n.group : quotient(n.group, O).group;
  const Group& L = *m.group;
  m.p_reduced = p_core(L, F.p, CoreMode::p_prime).order() == 1;
  const Subgroup Op = p_core(L, F.p, CoreMode::p);
  m.constrained = is_subset(centralizer(L, Op), Op);
  return m;
}

FreenessVerdict is_qdp_free(const FusionSystem& F) {
  FreenessVerdict v;
  for (std::size_t c = 0; c < F.classes.classes.size(); ++c) {
    const Subgroup& Q = F.rep(c);
    if (!is_centric(F, Q)) continue;
    const Model m = model_of_normalizer(F, Q);
    ++v.models_checked;
    if (auto w = involves_qdp(m.group, static_cast<std::uint32_t>(F.p))) {
      v.free = false;
      v.Q = Q;
      v.witness = std::move(w);
      return v;
    }
  }
  return v;
}

SectionFusionVerdict section_p_stable_fusion(const FusionSystem& F) {
  const Group& G = *F.G;
  SectionFusionVerdict v;
  for (std::size_t c = 0; c < F.classes.classes.size(); ++c) {
    const Subgroup& R = F.rep(c);
    Embedded n = embed_subgroup(G, normalizer(G, R));
    const Subgroup NP = n.child_subgroup(G, normalizer(G, R, F.P));
    FusionSystem sub;
    if (R.order() == 1) {
      sub = fusion_system_on(n.group, F.p, NP);
    } else {
      Quotient quo = quotient(n.group, n.child_subgroup(G, R));
      std::vector<Idx> img;
      for (Idx x : NP.gens) img.push_back(quo.proj.map[x]);
      sub = fusion_system_on(quo.group, F.p, closure(*quo.group, img));
    }
    if (!is_p_stable_fusion(sub).stable) {
      v.stable = false;
      v.R = R;
      return v;
    }
  }
  return v;
}

SylowIdentification identify_by_hom(const Hom& h, const Subgroup& P) {
  SylowIdentification m;
  for (Idx x : P.elems) m[x] = h.map[x];
  return m;
}

SylowIdentification identify_identity(const Subgroup& P) {
  SylowIdentification m;
  for (Idx x : P.elems) m[x] = x;
  return m;
}

namespace {

std::set<std::vector<Idx>> restricted_maps(const Group& G, const Mask& pmask, const std::vector<Idx>& gens) {
  std::set<std::vector<Idx>> out;
  std::vector<Idx> img(gens.size());
  for (Idx g = 0; g < G.order(); ++g) {
    bool in = true;
    for (std::size_t i = 0; i < gens.size() && in; ++i) {
      img[i] = G.conj(gens[i], g);
      in = pmask[img[i]] != 0;
    }
    if (in) out.insert(img);
  }
  return out;
}

}  // namespace

bool fusion_equal(const FusionSystem& F1, const FusionSystem& F2, const SylowIdentification& ident) {
  const Group& G1 = *F1.G;
  const Group& G2 = *F2.G;
  if (F1.P.order() != F2.P.order() || ident.size() != F1.P.order())
    throw MismatchedSylow("Sylow subgroups have different orders");
  std::set<Idx> image;
  for (Idx x : F1.P.elems) {
    auto it = ident.find(x);
    if (it == ident.end() || !F2.P.contains(it->second)) throw MismatchedSylow("identification leaves P");
    image.insert(it->second);
  }
  if (image.size() != F2.P.order()) throw MismatchedSylow("identification is not bijective");
  for (Idx a : F1.P.elems)
    for (Idx b : F1.P.gens)
      if (ident.at(G1.mul(a, b)) != G2.mul(ident.at(a), ident.at(b)))
        throw MismatchedSylow("identification is not a homomorphism");

  const Mask p1 = mask_of(G1, F1.P), p2 = mask_of(G2, F2.P);
  for (const Subgroup& S : F1.classes.subgroups) {
    if (S.order() == 1) continue;
    std::vector<Idx> g2;
    for (Idx x : S.gens) g2.push_back(ident.at(x));
    std::set<std::vector<Idx>> m1;
    for (auto img : restricted_maps(G1, p1, S.gens)) {
      for (Idx& x : img) x = ident.at(x);
      m1.insert(std::move(img));
    }
    if (m1 != restricted_maps(G2, p2, g2)) return false;
  }
  return true;
}

bool fusion_equal(const FusionSystem& F1, const FusionSystem& F2) {
  const Group& G1 = *F1.G;
  const Group& G2 = *F2.G;
  bool same = F1.G == F2.G;
  if (!same && G1.order() == G2.order() && G1.degree() == G2.degree())
    same = std::memcmp(G1.data(0), G2.data(0), G1.order() * G1.degree() * sizeof(Point)) == 0;
  if (!same || F1.P != F2.P) throw MismatchedSylow("no identification given for different groups");
  return fusion_equal(F1, F2, identify_identity(F1.P));
}

}  // namespace pstab

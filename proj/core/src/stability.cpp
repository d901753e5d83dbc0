#include "pstab/stability.hpp"

#include <algorithm>
#include <unordered_map>

#include "pstab/errors.hpp"

namespace pstab {

namespace {

bool is_p_power(std::uint64_t n, std::uint64_t p) { return p_part(n, p) == n; }

}  // namespace

bool triple_commutator_in(const Group& G, const Subgroup& Q, Idx x, const Subgroup& R) {
  const Mask q = mask_of(G, Q);
  if (!normalizes(G, x, Q, q)) throw NotNormalized("element does not normalize Q");
  const Mask r = mask_of(G, R);
  for (Idx a : Q.elems)
    if (!r[G.comm(G.comm(a, x), x)]) return false;
  return true;
}

bool quadratic_identity_holds(const Group& G, const Subgroup& Q, Idx x) {
  const Mask q = mask_of(G, Q);
  if (!normalizes(G, x, Q, q)) throw NotNormalized("element does not normalize Q");
  const Idx x2 = G.mul(x, x);
  for (Idx a : Q.elems) {
    const Idx ai_x = G.conj(G.inv(a), x);
    const Idx v = G.mul(G.mul(G.mul(ai_x, a), ai_x), G.conj(a, x2));
    if (v != 0) return false;
  }
  return true;
}

SectionAction section_action(const Group& G, std::uint64_t p, const Subgroup& Q, const Subgroup& R,
                             const Subgroup& N) {
  std::unordered_map<Idx, std::uint32_t> coset;
  coset.reserve(Q.order() * 2);
  std::vector<Idx> reps;
  for (Idx a : Q.elems) {
    if (coset.count(a)) continue;
    const std::uint32_t c = static_cast<std::uint32_t>(reps.size());
    reps.push_back(a);
    for (Idx r : R.elems) coset[G.mul(r, a)] = c;
  }
  const std::size_t degree = reps.size();
  auto image = [&](Idx x, std::size_t c) -> Point {
    auto it = coset.find(G.conj(reps[c], x));
    if (it == coset.end()) throw NotNormalized("element does not normalize the section");
    return static_cast<Point>(it->second);
  };

  SectionAction out;
  out.N = N;
  out.n_group = embed_subgroup(G, N);
  std::vector<Perm> gens;
  for (Idx g : N.gens) {
    std::vector<Point> img(degree);
    for (std::size_t c = 0; c < degree; ++c) img[c] = image(g, c);
    gens.push_back(Perm(std::move(img)));
  }
  out.group = Group::generate(gens, degree);
  const Group& A = *out.group;
  out.proj = Hom{out.n_group.group, out.group, std::vector<Idx>(N.order())};
  const auto& base = A.base();
  std::vector<Point> b(base.size());
  std::vector<Idx> kernel;
  for (std::size_t i = 0; i < N.order(); ++i) {
    const Idx x = N.elems[i];
    for (std::size_t j = 0; j < base.size(); ++j) b[j] = image(x, base[j]);
    auto a = A.find_by_base(b.data());
    if (!a) throw Error("section action image not found");
    out.proj.map[i] = *a;
    if (*a == 0) kernel.push_back(x);
  }
  out.C = subgroup_from_elements(G, std::move(kernel));
  out.op = p_core(A, p, CoreMode::p);
  return out;
}

SectionAction induced_automizer(const Group& G, std::uint64_t p, const Subgroup& Q) {
  return section_action(G, p, Q, trivial_subgroup(G), normalizer(G, Q));
}

ThompsonData thompson_subgroup(const Group& G, const Subgroup& P) {
  ThompsonData t;
  std::vector<Subgroup> abelian;
  for (auto& S : subgroups_of_pgroup(G, P))
    if (is_abelian(G, S)) {
      if (S.order() > t.max_abelian_order) {
        t.max_abelian_order = S.order();
        abelian.clear();
      }
      if (S.order() == t.max_abelian_order) abelian.push_back(std::move(S));
    }
  std::vector<Idx> gens;
  for (const auto& S : abelian) gens.insert(gens.end(), S.gens.begin(), S.gens.end());
  t.J = closure(G, gens);
  t.ZJ = center(G, t.J);
  return t;
}

Subgroup thompson_center(const Group& G, const Subgroup& P) { return thompson_subgroup(G, P).ZJ; }

std::string definition_name(Definition d) {
  switch (d) {
    case Definition::def_1971: return "p-stable";
    case Definition::def_1968: return "p-stable-1968";
    case Definition::section: return "section-p-stable";
  }
  return "?";
}

bool quotient_is_cyclic(const Group& G, const Subgroup& Q, const Subgroup& R) {
  const std::size_t m = Q.order() / R.order();
  if (m == 1) return true;
  const Mask r = mask_of(G, R);
  for (Idx a : Q.elems) {
    if (G.elt_order(a) < m) continue;
    std::size_t k = 1;
    for (Idx y = a; !r[y]; y = G.mul(y, a)) ++k;
    if (k == m) return true;
  }
  return false;
}

std::optional<StabilityWitness> find_unstable_element(const Group& G, std::uint64_t p, const Subgroup& Q,
                                                      const Subgroup& R, const Subgroup& N) {
  SectionAction act = section_action(G, p, Q, R, N);
  const Group& A = *act.group;
  if (act.op.order() == A.order()) return std::nullopt;
  const Mask op = mask_of(A, act.op);
  const Mask r = mask_of(G, R);
  std::vector<Idx> qreps;  // one element per coset of R
  {
    Mask seen(G.order(), 0);
    for (Idx a : Q.elems) {
      if (seen[a]) continue;
      qreps.push_back(a);
      for (Idx y : R.elems) seen[G.mul(y, a)] = 1;
    }
  }
  Mask done(A.order(), 0);
  for (std::size_t i = 0; i < N.order(); ++i) {
    const Idx x = N.elems[i];
    const Idx alpha = act.proj.map[i];
    if (done[alpha]) continue;
    if (op[alpha] || !is_p_power(A.elt_order(alpha), p)) {
      done[alpha] = 1;
      continue;
    }
    if (!is_p_power(G.elt_order(x), p)) continue;  // a p-element preimage comes later
    done[alpha] = 1;
    bool quadratic = true;
    for (Idx a : qreps)
      if (!r[G.comm(G.comm(a, x), x)]) {
        quadratic = false;
        break;
      }
    if (!quadratic) continue;
    StabilityWitness w;
    w.Q = Q;
    w.R = R;
    w.x = x;
    w.automizer_order = A.order();
    w.automizer_op_order = act.op.order();
    return w;
  }
  return std::nullopt;
}

bool verify_witness(const Group& G, std::uint64_t p, const StabilityWitness& w) {
  if (!is_p_power(G.elt_order(w.x), p)) return false;
  if (!is_subset(w.R, w.Q) || !is_normal_in(G, w.R, w.Q)) return false;
  const Subgroup ambient = w.M ? *w.M : whole(G);
  if (!ambient.contains(w.x) || !is_subset(w.Q, ambient)) return false;
  const Mask qm = mask_of(G, w.Q), rm = mask_of(G, w.R);
  if (!normalizes(G, w.x, w.Q, qm) || !normalizes(G, w.x, w.R, rm)) return false;
  if (!triple_commutator_in(G, w.Q, w.x, w.R)) return false;
  const Subgroup N = intersection(G, normalizer(G, w.Q, ambient), normalizer(G, w.R, ambient));
  SectionAction act = section_action(G, p, w.Q, w.R, N);
  const Idx alpha = act.proj.map[act.n_group.to_child(w.x)];
  return !act.op.contains(alpha);
}

StabilityVerdict is_p_stable(const Group& G, std::uint64_t p) {
  StabilityVerdict v;
  v.definition = Definition::def_1971;
  const Subgroup P = sylow(G, p);
  if (is_abelian(G, P)) {
    v.abelian_sylow = true;
    return v;
  }
  const PSubgroupClasses cls = p_subgroup_classes(G, p, P);
  for (std::size_t c = 0; c < cls.classes.size(); ++c) {
    const Subgroup& Q = cls.rep(c);
    if (is_cyclic(G, Q)) continue;
    ++v.pairs_checked;
    if (auto w = find_unstable_element(G, p, Q, trivial_subgroup(G), normalizer(G, Q))) {
      v.stable = false;
      v.witness = std::move(w);
      return v;
    }
  }
  return v;
}

namespace {

// Some conjugate A^g lies in B (compared through the generators of A).
bool conjugate_into(const Group& G, const Subgroup& A, const Subgroup& B) {
  if (B.order() % A.order() != 0) return false;
  const Mask b = mask_of(G, B);
  for (Idx g = 0; g < G.order(); ++g) {
    bool in = true;
    for (Idx a : A.gens)
      if (!b[G.conj(a, g)]) {
        in = false;
        break;
      }
    if (in) return true;
  }
  return false;
}

}  // namespace

StabilityVerdict is_p_stable_def1968(const Group& G, std::uint64_t p) {
  StabilityVerdict v;
  v.definition = Definition::def_1968;
  const Subgroup P = sylow(G, p);
  if (is_abelian(G, P)) {
    v.abelian_sylow = true;
    return v;
  }
  // Members of the maximal local family are normalizers of nontrivial
  // p-subgroups that lie in no larger such normalizer.
  const PSubgroupClasses cls = p_subgroup_classes(G, p, P);
  std::vector<Subgroup> cands;
  for (std::size_t c = 0; c < cls.classes.size(); ++c) {
    if (cls.rep(c).order() == 1) continue;
    cands.push_back(normalizer(G, cls.rep(c)));
  }
  std::sort(cands.begin(), cands.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() > b.order();
    return a.elems < b.elems;
  });
  std::vector<Subgroup> family;
  for (const Subgroup& M : cands) {
    bool dominated = false;
    for (const Subgroup& F : family)
      if (conjugate_into(G, M, F)) {
        dominated = true;
        break;
      }
    if (!dominated)
      for (const Subgroup& C : cands)
        if (C.order() > M.order() && conjugate_into(G, M, C)) {
          dominated = true;
          break;
        }
    if (!dominated) family.push_back(M);
  }

  for (const Subgroup& M : family) {
    Embedded em = embed_subgroup(G, M);
    const Group& H = *em.group;
    const Subgroup Op = p_core(H, p, CoreMode::p_prime);
    const PSubgroupClasses mc = p_subgroup_classes(H, p);
    for (std::size_t c = 0; c < mc.classes.size(); ++c) {
      const Subgroup& Q = mc.rep(c);
      if (is_cyclic(H, Q)) continue;
      if (!is_normal_in(H, join(H, Op, Q), whole(H))) continue;
      ++v.pairs_checked;
      if (auto w = find_unstable_element(H, p, Q, trivial_subgroup(H), normalizer(H, Q))) {
        StabilityWitness pw;
        pw.Q = em.parent_subgroup(w->Q);
        pw.R = trivial_subgroup(G);
        pw.x = em.to_parent[w->x];
        pw.M = M;
        pw.automizer_order = w->automizer_order;
        pw.automizer_op_order = w->automizer_op_order;
        v.stable = false;
        v.witness = std::move(pw);
        return v;
      }
    }
  }
  return v;
}

StabilityVerdict is_section_p_stable(const Group& G, std::uint64_t p) {
  StabilityVerdict v;
  v.definition = Definition::section;
  const Subgroup P = sylow(G, p);
  if (is_abelian(G, P)) {
    v.abelian_sylow = true;
    return v;
  }
  const PSubgroupClasses cls = p_subgroup_classes(G, p, P);
  for (std::size_t c = 0; c < cls.classes.size(); ++c) {
    const Subgroup& Q = cls.rep(c);
    if (Q.order() < p * p) continue;
    const Subgroup NQ = normalizer(G, Q);
    std::vector<Subgroup> normals = normal_subgroups(G, Q);
    std::vector<std::uint8_t> seen(normals.size(), 0);
    for (std::size_t i = 0; i < normals.size(); ++i) {
      if (seen[i]) continue;
      for (const Subgroup& S : conjugacy_orbit(G, normals[i], NQ)) {
        auto it = std::lower_bound(normals.begin(), normals.end(), S, [](const Subgroup& a, const Subgroup& b) {
          if (a.order() != b.order()) return a.order() < b.order();
          return a.elems < b.elems;
        });
        if (it != normals.end() && it->elems == S.elems) seen[it - normals.begin()] = 1;
      }
      const Subgroup& R = normals[i];
      if (quotient_is_cyclic(G, Q, R)) continue;
      ++v.pairs_checked;
      if (auto w = find_unstable_element(G, p, Q, R, normalizer(G, R, NQ))) {
        v.stable = false;
        v.witness = std::move(w);
        return v;
      }
    }
  }
  return v;
}

}  // namespace pstab

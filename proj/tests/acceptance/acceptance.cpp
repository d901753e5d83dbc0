// Acceptance suite: one line per criterion, exact agreement required and
// each criterion held to a wall-clock budget.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles/brute.hpp"
#include "pstab/constructions.hpp"
#include "pstab/errors.hpp"
#include "pstab/fusion.hpp"
#include "pstab/involvement.hpp"
#include "pstab/iso.hpp"
#include "pstab/lattice.hpp"
#include "pstab/lie.hpp"
#include "pstab/stability.hpp"

using namespace pstab;

namespace {

// Budgets in seconds.
constexpr double kBudget[13] = {0, 5, 60, 60, 10, 900, 900, 30, 600, 60, 600, 300, 900};
constexpr int kFuzzQueries = 10000;

struct Ctx {
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  void check(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void note(const std::string& s) { notes.push_back(s); }
};

struct Entry {
  std::string name;
  Recipe recipe;
  std::uint64_t p;
};

Recipe rc(std::string kind, std::uint32_t p = 0, std::uint32_t q = 0, std::size_t n = 0, std::string family = {},
          int sign = 0) {
  Recipe r;
  r.kind = std::move(kind);
  r.p = p;
  r.q = q;
  r.n = n;
  r.family = std::move(family);
  r.sign = sign;
  return r;
}

// The groups of the shipped corpus.
std::vector<Entry> corpus() {
  return {
      {"Qd(3)", rc("qdp", 3), 3},
      {"tilde-Qd(3)/F13", rc("tilde_qdp", 3, 13), 3},
      {"tilde-Qd-minus(3)/F19", rc("tilde_qd3_minus", 0, 19), 3},
      {"tilde-Qd-plus(3)/F19", rc("tilde_qd3_plus", 0, 19), 3},
      {"PSL3(3)", rc("classical", 0, 3, 3, "PSL"), 3},
      {"PSL3(4)", rc("classical", 0, 4, 3, "PSL"), 3},
      {"PSU3(5)@3", rc("classical", 0, 5, 3, "PSU"), 3},
      {"PSU3(5)@5", rc("classical", 0, 5, 3, "PSU"), 5},
      {"S4", rc("symmetric", 0, 0, 4), 3},
      {"SL2(3)", rc("classical", 0, 3, 2, "SL"), 3},
      {"3^2:GL2(3)", rc("affine_gl", 0, 3, 2), 3},
      {"3^(1+2)", rc("extraspecial", 3), 3},
      {"3^(1+2):2^2", rc("extraspecial_klein", 3), 3},
      {"3^(1+2):Q8", rc("extraspecial_q8", 3), 3},
      {"Qd(5)", rc("qdp", 5), 5},
      {"dual forms factor(5)", rc("dual_forms_factor", 5), 5},
      {"Sp4(3)", rc("classical", 0, 3, 4, "Sp"), 3},
  };
}

struct Built2 {
  Entry e;
  GroupPtr G;
};
std::vector<Built2>& corpus_groups() {
  static std::vector<Built2> gs = [] {
    std::vector<Built2> v;
    for (const Entry& e : corpus()) v.push_back({e, build_recipe(e.recipe).group});
    return v;
  }();
  return gs;
}

void criterion1(Ctx& c) {
  const Built qd = qdp(3);
  const Group& G = *qd.group;
  c.check(G.order() == 216, "order 216");
  const Subgroup O = p_core(G, 3, CoreMode::p);
  c.check(O.order() == 9 && O == qd.named_subgroup("V"), "O_3 = V of order 9");
  const Subgroup P = sylow(G, 3);
  c.check(P.order() == 27 && !is_abelian(G, P) && exponent(G, P) == 3, "Sylow extraspecial 27, exponent 3");
  c.check(center(G, P).order() == 3 && derived_subgroup(G, P) == center(G, P), "Z(P) = P' of order 3");
  const StabilityVerdict v = is_p_stable(G, 3);
  c.check(!v.stable && v.witness.has_value(), "not 3-stable with witness");
  if (!v.witness) return;
  const StabilityWitness& w = *v.witness;
  // elementwise: [a, x, x] = 1 for all a in Q, x normalizes Q, x outside O_3(N/C)
  bool comm = true;
  for (Idx a : w.Q.elems) comm = comm && G.comm(G.comm(a, w.x), w.x) == 0;
  c.check(comm, "commutator condition elementwise");
  c.check(oracle::conjugate(G, w.Q.elems, w.x) == w.Q.elems, "x normalizes Q");
  const oracle::Set N = oracle::normalizer(G, w.Q.elems), C = oracle::centralizer(G, w.Q.elems);
  c.check(!oracle::contains(oracle::op_preimage(G, 3, N, C), w.x), "x outside O_3 of the automizer");
  c.check(verify_witness(G, 3, w), "library re-verification");
  c.note("witness |Q|=" + std::to_string(w.Q.order()) + " |x|=" + std::to_string(G.elt_order(w.x)));
}

bool no_subgroup_iso(const GroupPtr& G, const GroupPtr& T) {
  for (const Subgroup& H : subgroups_up_to_conjugacy(*G))
    if (H.order() == T->order() && is_isomorphic(embed_subgroup(*G, H).group, T)) return false;
  return true;
}

void criterion2(Ctx& c) {
  const Built t = tilde_qdp(3, 13);
  c.check(t.group->order() == 648, "order 648");
  const Subgroup Z = center(*t.group, whole(*t.group));
  c.check(Z.order() == 3, "centre of order 3");
  c.check(bool(is_isomorphic(quotient(t.group, Z).group, qdp_reference(3))), "G/Z = Qd(3)");
  c.check(no_subgroup_iso(t.group, qdp_reference(3)), "exhaustive: no subgroup = Qd(3)");
  c.check(!has_subgroup_qdp_like(t.group, qdp_reference(3)), "embedding search finds none");
  c.check(!is_p_stable(*t.group, 3).stable, "not 3-stable");
}

void criterion3(Ctx& c) {
  const Built m = tilde_qd3_variant(-1, 19), p = tilde_qd3_variant(1, 19);
  c.check(m.group->order() == 648 && p.group->order() == 648, "orders 648");
  bool det1 = !m.matrices.empty();
  for (const FqMatrix& x : m.matrices) det1 = det1 && x.det() == 1;
  c.check(det1, "minus-variant generators have determinant 1");
  const auto Pm = embed_subgroup(*m.group, sylow(*m.group, 3));
  const auto Pp = embed_subgroup(*p.group, sylow(*p.group, 3));
  c.check(!is_isomorphic(Pm.group, Pp.group), "Sylow 3-subgroups not isomorphic");
  // every pair of Sylow subgroups, not just the chosen ones
  for (std::uint64_t s = 1; s <= 3; ++s) {
    const auto A = embed_subgroup(*m.group, sylow_seeded(*m.group, 3, s));
    const auto B = embed_subgroup(*p.group, sylow_seeded(*p.group, 3, s + 10));
    c.check(!is_isomorphic(A.group, B.group), "seeded Sylow pair not isomorphic");
  }
  c.note("|P| = " + std::to_string(Pm.group->order()));
}

void criterion4(Ctx& c) {
  const AlternatingEmbedding e = qdp_in_alternating(3);
  const Group& I = *e.image.group;
  c.check(I.degree() == 9, "degree 9");
  std::set<Point> orbit{0};
  std::vector<Point> todo{0};
  while (!todo.empty()) {
    const Point x = todo.back();
    todo.pop_back();
    for (const Perm& g : I.generator_perms())
      if (orbit.insert(g[x]).second) todo.push_back(g[x]);
  }
  c.check(orbit.size() == 9, "transitive");
  bool even = true;
  for (Idx i = 0; i < I.order(); ++i) even = even && I.element(i).is_even();
  c.check(even, "image inside A9");
  c.check(verify_hom(e.iso) && e.iso.is_injective(), "faithful");
  c.check(bool(is_isomorphic(e.image.group, qdp_reference(3))), "image = Qd(3)");
}

void criterion5(Ctx& c) {
  std::size_t agree = 0;
  for (const auto& [e, G] : corpus_groups()) {
    const bool stable = is_section_p_stable(*G, e.p).stable;
    const bool involved = involves_qdp(G, std::uint32_t(e.p)).has_value();
    c.check(stable == !involved, e.name + ": section stability vs involvement");
    agree += stable == !involved;
  }
  c.note(std::to_string(agree) + "/" + std::to_string(corpus_groups().size()) + " agree");
}

void criterion6(Ctx& c) {
  std::size_t agree = 0;
  for (const auto& [e, G] : corpus_groups()) {
    const FusionSystem F = fusion_system(G, e.p);
    const bool a = is_p_stable_fusion(F).stable == is_p_stable(*G, e.p).stable;
    const bool b = is_qdp_free(F).free == !involves_qdp(G, std::uint32_t(e.p)).has_value();
    c.check(a, e.name + ": fusion stability vs group stability");
    c.check(b, e.name + ": freeness vs involvement");
    agree += a && b;
  }
  c.note(std::to_string(agree) + "/" + std::to_string(corpus_groups().size()) + " agree");
}

void criterion7(Ctx& c) {
  const Built qd = qdp(3);
  const FusionSystem F = fusion_system(qd.group, 3);
  const SolubilityChain ch = is_soluble(F);
  c.check(ch.soluble, "soluble");
  c.check(ch.chain.size() == 3 && ch.chain[0].order() == 1 && ch.chain[1] == qd.named_subgroup("V") &&
              ch.chain[2] == F.P,
          "chain 1 < V < P");
  c.check(!is_p_stable_fusion(F).stable, "not 3-stable");
  c.check(!is_qdp_free(F).free, "not Qd(3)-free");
  const Model m = model_of_normalizer(F, qd.named_subgroup("V"));
  c.check(bool(is_isomorphic(m.group, qdp_reference(3))), "model of N_F(V) = Qd(3)");
}

void criterion8(Ctx& c) {
  const GroupPtr G = classical_group(Family::PSL, 3, 3).group;
  const FusionSystem F = fusion_system(G, 3);
  c.check(op_F(F).order() == 1, "O_3(F) = 1");
  c.check(!is_soluble(F).soluble, "not soluble");
  c.check(!is_p_stable_fusion(F).stable, "not 3-stable");
  c.check(!is_qdp_free(F).free, "not Qd(3)-free");
  const auto H = has_subgroup_qdp_like(G, qdp_reference(3));
  c.check(H.has_value(), "subgroup = Qd(3)");
  if (H) c.check(bool(is_isomorphic(embed_subgroup(*G, *H).group, qdp_reference(3))), "subgroup re-checked");
}

void criterion9(Ctx& c) {
  const lie::IdentityGridReport g = lie::identity_grid(10, 9, {3, 5, 7, 11, 13});
  std::size_t total = 0;
  for (const auto& row : g.rows) {
    c.check(row.checked > 0, lie::identity_name(row.id) + " exercised");
    total += row.checked;
  }
  for (const auto& f : g.failures) c.check(false, f);
  c.check(g.rows.size() == lie::all_identities().size(), "all identities present");
  c.note(std::to_string(total) + " grid points");
}

// A Sylow 3-subgroup of PSU3(8) inside the monomial subgroup of SU3(8) mod
// scalars; |PSU3(8)|_3 = 81 = |monomial / Z|_3.
bool psu38_sylow_abelian(Ctx& c) {
  auto F = std::make_shared<const FqField>(64);
  const std::uint32_t z = F->least_of_order(9), zi = F->inv(z);
  const std::vector<FqMatrix> gens = {
      FqMatrix::from_rows(F, {{z, 0, 0}, {0, zi, 0}, {0, 0, 1}}),
      FqMatrix::from_rows(F, {{1, 0, 0}, {0, z, 0}, {0, 0, zi}}),
      FqMatrix::from_rows(F, {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}),
      FqMatrix::from_rows(F, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}),
  };
  for (const FqMatrix& m : gens) {
    // unitary for the standard Hermitian form: M * conj(M)^T = I, conj = x -> x^8
    c.check(m * m.frobenius(8).transpose() == FqMatrix::identity(F, 3) && m.det() == 1, "monomial generator in SU3(8)");
  }
  const MatrixAction a = as_permutation_group(gens, VectorAction::basis_orbits);
  const GroupPtr M = a.group;
  const Subgroup Z = center(*M, whole(*M));
  const Quotient q = quotient(M, Z);
  const Subgroup P = sylow(*q.group, 3);
  const lie::BigInt full = lie::group_order("PSU", 3, 8);
  c.check(P.order() == std::size_t(lie::p_part(full, 3)), "monomial subgroup holds a full Sylow 3-subgroup");
  c.note("PSU3(8) Sylow from monomial subgroup: |P|=" + std::to_string(P.order()));
  return is_abelian(*q.group, P);
}

void criterion10(Ctx& c) {
  const std::vector<lie::ClassifierQuery> qs = {{"PSL", 3, 4, 3, ""}, {"PSU", 3, 5, 3, ""}, {"PSU", 3, 8, 3, ""}};
  const bool expect[] = {true, true, false};
  for (std::size_t i = 0; i < qs.size(); ++i) {
    const std::string name = qs[i].family + std::to_string(qs[i].n) + "(" + std::to_string(qs[i].q) + ")";
    const bool table = lie::sylow_abelian_verdict(qs[i]);
    c.check(table == expect[i], name + " table entry");
    const lie::Crosscheck x = lie::verdict_crosscheck(qs[i]);
    if (x.constructed) {
      c.check(x.agree(), name + " table vs direct");
    } else if (i == 2) {
      c.check(psu38_sylow_abelian(c) == table, name + " table vs direct Sylow");
    } else {
      c.check(false, name + " not constructed: " + x.skipped);
    }
  }
  std::mt19937_64 rng(20260);
  std::size_t boundary = 0;
  for (int i = 0; i < kFuzzQueries; ++i) {
    const lie::ClassifierQuery q = lie::random_query(rng);
    const lie::ClassifierVerdict v = lie::qdp_verdict(q);
    if (v.sylow_abelian && (v.involves_qdp || !v.p_stable)) c.check(false, "abelian but unstable: " + q.family);
    if (v.p_stable != !v.involves_qdp) c.check(false, "stable vs involvement: " + q.family);
    boundary += v.boundary;
  }
  c.note(std::to_string(kFuzzQueries) + " random queries, " + std::to_string(boundary) + " boundary flags");
}

void criterion11(Ctx& c) {
  const DualFormsFactor d = dual_forms_factor(5);
  c.check(d.submodule_invariant, "codimension-2 submodule invariant");
  c.check(d.quotient_irreducible, "quotient module irreducible");
  c.check(d.acting_order == 120, "SL2(5) acts faithfully on the quotient");
  c.check(d.factor.group->order() == 3000, "factor order 3000");
  c.check(bool(is_isomorphic(d.factor.group, qdp_reference(5))), "factor = Qd(5)");
}

// Subgroups used for the hereditary check: every class for small groups,
// p-locals and Sylow normalizers for the rest.
std::vector<Subgroup> samples(const Group& G, std::uint64_t p) {
  if (G.order() <= 1000) return subgroups_up_to_conjugacy(G);
  std::vector<Subgroup> out;
  const PSubgroupClasses cls = p_subgroup_classes(G, p);
  for (std::size_t k = 0; k < cls.classes.size(); ++k) {
    out.push_back(cls.rep(k));
    out.push_back(normalizer(G, cls.rep(k)));
    out.push_back(centralizer(G, cls.rep(k)));
  }
  std::mt19937_64 rng(G.order());
  for (int i = 0; i < 10; ++i) out.push_back(closure(G, {Idx(rng() % G.order()), Idx(rng() % G.order())}));
  return out;
}

void criterion12(Ctx& c) {
  std::size_t subgroups = 0, subsystems = 0;
  for (const auto& [e, G] : corpus_groups()) {
    if (!is_p_stable(*G, e.p).stable) continue;
    for (const Subgroup& H : samples(*G, e.p)) {
      if (H.order() == G->order()) continue;
      const Embedded eh = embed_subgroup(*G, H);
      c.check(is_p_stable(*eh.group, e.p).stable, e.name + ": subgroup of order " + std::to_string(H.order()));
      ++subgroups;
    }
    const FusionSystem F = fusion_system(G, e.p);
    if (!is_p_stable_fusion(F).stable) continue;
    for (std::size_t k = 0; k < F.classes.classes.size(); ++k) {
      c.check(is_p_stable_fusion(normalizer_system(F, F.rep(k)).F).stable,
              e.name + ": normalizer subsystem of class " + std::to_string(k));
      ++subsystems;
    }
  }
  c.note(std::to_string(subgroups) + " subgroups, " + std::to_string(subsystems) + " subsystems");
}

}  // namespace

int main() {
  const std::vector<std::function<void(Ctx&)>> criteria = {criterion1, criterion2,  criterion3,  criterion4,
                                                           criterion5, criterion6,  criterion7,  criterion8,
                                                           criterion9, criterion10, criterion11, criterion12};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int n = int(i) + 1;
    Ctx c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i](c);
    } catch (const std::exception& ex) {
      c.failures.push_back(std::string("exception: ") + ex.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > kBudget[n]) c.failures.push_back("over budget");
    const bool ok = c.failures.empty();
    failed += !ok;
    std::ostringstream line;
    line << "criterion " << n << ": " << (ok ? "PASS" : "FAIL") << "  [" << std::fixed;
    line.precision(2);
    line << secs << " s / " << kBudget[n] << " s]";
    for (const auto& s : c.notes) line << "  " << s;
    for (const auto& s : c.failures) line << "\n    failed: " << s;
    std::printf("%s\n", line.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

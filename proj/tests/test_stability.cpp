#include <random>

#include "doctest.h"
#include "oracles/brute.hpp"
#include "pstab/errors.hpp"
#include "pstab/involvement.hpp"
#include "pstab/iso.hpp"
#include "pstab/lattice.hpp"
#include "pstab/stability.hpp"
#include "support.hpp"

using namespace pstab;
using testing_support::group;
using testing_support::recipe;

namespace {

// Independent check of a (Q, R, x) witness with the brute-force helpers.
bool oracle_witness(const Group& G, std::uint64_t p, const StabilityWitness& w) {
  const oracle::Set& Q = w.Q.elems;
  const oracle::Set& R = w.R.elems;
  if (oracle::conjugate(G, Q, w.x) != Q || oracle::conjugate(G, R, w.x) != R) return false;
  if (!oracle::is_power_of(G.elt_order(w.x), p)) return false;
  for (Idx a : Q)
    if (!oracle::contains(R, G.comm(G.comm(a, w.x), w.x))) return false;
  if (R.size() > 1) return true;  // the O_p part for sections is re-checked by verify_witness
  const oracle::Set N = oracle::normalizer(G, Q), C = oracle::centralizer(G, Q);
  return !oracle::contains(oracle::op_preimage(G, p, N, C), w.x);
}

std::vector<testing_support::Small> medium_groups() {
  auto v = testing_support::small_groups();
  v.push_back({"tilde-Qd(3)", group("tilde_qdp", 3, 13), 3});
  v.push_back({"3^2:GL2(3)", group("affine_gl", 0, 3, 2), 3});
  v.push_back({"tilde-Qd-minus(3)", group("tilde_qd3_minus", 0, 19), 3});
  v.push_back({"tilde-Qd-plus(3)", group("tilde_qd3_plus", 0, 19), 3});
  return v;
}

}  // namespace

TEST_CASE("p-stability examples") {
  const Built qd = recipe("qdp", 3);
  const StabilityVerdict v = is_p_stable(*qd.group, 3);
  CHECK_FALSE(v.stable);
  REQUIRE(v.witness);
  CHECK(v.witness->Q == qd.named_subgroup("V"));
  CHECK(triple_commutator_in(*qd.group, v.witness->Q, v.witness->x, trivial_subgroup(*qd.group)));
  CHECK(verify_witness(*qd.group, 3, *v.witness));
  CHECK(oracle_witness(*qd.group, 3, *v.witness));
  CHECK(v.witness->automizer_order == 24);

  const StabilityVerdict s = is_p_stable(*group("classical", 0, 3, 2, "SL"), 3);
  CHECK(s.stable);
  CHECK(s.abelian_sylow);

  const Built t = recipe("tilde_qdp", 3, 13);
  CHECK_FALSE(is_p_stable(*t.group, 3).stable);
  const Subgroup E = t.named_subgroup("E");
  const auto w = find_unstable_element(*t.group, 3, E, trivial_subgroup(*t.group), normalizer(*t.group, E));
  REQUIRE(w);
  CHECK(verify_witness(*t.group, 3, *w));
  CHECK(oracle_witness(*t.group, 3, *w));
}

TEST_CASE("p-stability against the brute-force definition") {
  for (const auto& [name, G, p] : testing_support::small_groups()) {
    CAPTURE(std::string(name));
    CHECK(is_p_stable(*G, p).stable == oracle::p_stable(*G, p));
  }
}

TEST_CASE("the older definition") {
  const GroupPtr qd = group("qdp", 3);
  const StabilityVerdict v = is_p_stable_def1968(*qd, 3);
  CHECK_FALSE(v.stable);
  REQUIRE(v.witness);
  REQUIRE(v.witness->M);
  CHECK(v.witness->M->order() == qd->order());
  CHECK(is_p_stable_def1968(*group("symmetric", 0, 0, 4), 3).stable);
  for (const auto& [name, G, p] : medium_groups()) {
    CAPTURE(std::string(name));
    if (is_p_stable(*G, p).stable) CHECK(is_p_stable_def1968(*G, p).stable);
  }
}

TEST_CASE("section p-stability examples") {
  CHECK_FALSE(is_section_p_stable(*group("qdp", 3), 3).stable);
  CHECK(is_section_p_stable(*group("symmetric", 0, 0, 4), 3).stable);
  CHECK_FALSE(is_section_p_stable(*group("affine_gl", 0, 3, 2), 3).stable);
}

TEST_CASE("Abelian Sylow shortcut") {
  for (const auto& [name, G, p] : medium_groups()) {
    CAPTURE(std::string(name));
    if (!is_abelian(*G, sylow(*G, p))) continue;
    for (const StabilityVerdict& v : {is_p_stable(*G, p), is_p_stable_def1968(*G, p), is_section_p_stable(*G, p)}) {
      CHECK(v.stable);
      CHECK(v.abelian_sylow);
    }
  }
}

TEST_CASE("witnesses re-verify") {
  for (const auto& [name, G, p] : medium_groups()) {
    CAPTURE(std::string(name));
    for (const StabilityVerdict& v : {is_p_stable(*G, p), is_section_p_stable(*G, p)}) {
      if (v.stable) continue;
      REQUIRE(v.witness);
      CHECK(verify_witness(*G, p, *v.witness));
      CHECK(oracle_witness(*G, p, *v.witness));
    }
  }
}

TEST_CASE("witnesses transport under conjugation") {
  std::mt19937_64 rng(7);
  for (const auto& [name, G, p] : medium_groups()) {
    CAPTURE(std::string(name));
    const StabilityVerdict v = is_p_stable(*G, p);
    if (v.stable) continue;
    for (int i = 0; i < 5; ++i) {
      const Idx g = Idx(rng() % G->order());
      StabilityWitness w = *v.witness;
      w.Q = conjugate(*G, w.Q, g);
      w.R = conjugate(*G, w.R, g);
      w.x = G->conj(w.x, g);
      CHECK(verify_witness(*G, p, w));
    }
  }
}

TEST_CASE("subgroups of p-stable groups are p-stable") {
  for (const auto& [name, G, p] : medium_groups()) {
    CAPTURE(std::string(name));
    if (!is_p_stable(*G, p).stable) continue;
    for (const Subgroup& H : subgroups_up_to_conjugacy(*G)) {
      const Embedded e = embed_subgroup(*G, H);
      CHECK(is_p_stable(*e.group, p).stable);
    }
  }
}

TEST_CASE("section stability is local") {
  for (const auto& [name, G, p] : medium_groups()) {
    CAPTURE(std::string(name));
    bool all_local = true;
    const PSubgroupClasses cls = p_subgroup_classes(*G, p);
    for (std::size_t c = 0; c < cls.classes.size(); ++c) {
      const Subgroup& R = cls.rep(c);
      const Subgroup N = normalizer(*G, R);
      const Embedded e = embed_subgroup(*G, N);
      const Quotient q = quotient(e.group, e.child_subgroup(*G, R));
      all_local = all_local && is_p_stable(*q.group, p).stable;
    }
    CHECK(is_section_p_stable(*G, p).stable == all_local);
  }
}

TEST_CASE("involvement") {
  const GroupPtr qd = group("qdp", 3);
  auto w = involves_qdp(qd, 3);
  REQUIRE(w);
  CHECK(w->H.order() == 216);
  CHECK(w->K.order() == 1);

  const Built t = recipe("tilde_qdp", 3, 13);
  auto wt = involves_qdp(t.group, 3);
  REQUIRE(wt);
  CHECK(wt->H.order() == 648);
  CHECK(wt->K == t.named_subgroup("Z"));
  CHECK(verify_section(*t.group, *wt));

  CHECK_FALSE(involves_qdp(group("classical", 0, 3, 2, "SL"), 3));
  CHECK_THROWS_AS(involves_qdp(qd, 2), BadParameters);
}

TEST_CASE("involvement witnesses re-verify elementwise") {
  for (const auto& [name, G, p] : medium_groups()) {
    if (p == 2) continue;
    CAPTURE(std::string(name));
    auto w = involves_qdp(G, std::uint32_t(p));
    if (!w) continue;
    CHECK(verify_section(*G, *w));
    for (Idx k : w->K.elems)
      for (Idx h : w->H.elems) CHECK(w->K.contains(G->conj(k, h)));
    CHECK(w->H.order() / w->K.order() == 216);
    const Group& S = *w->section;
    const Group& T = *w->iso.dst;
    std::vector<Idx> img = w->iso.map;
    std::sort(img.begin(), img.end());
    CHECK(std::adjacent_find(img.begin(), img.end()) == img.end());
    for (Idx a = 0; a < S.order(); ++a)
      for (Idx b = 0; b < S.order(); b += 3) CHECK(w->iso.map[S.mul(a, b)] == T.mul(w->iso.map[a], w->iso.map[b]));
  }
}

TEST_CASE("section stability is the absence of involvement") {
  for (const auto& [name, G, p] : medium_groups()) {
    if (p == 2) continue;
    CAPTURE(std::string(name));
    CHECK(is_section_p_stable(*G, p).stable == !involves_qdp(G, std::uint32_t(p)));
  }
}

TEST_CASE("Qd-like subgroups") {
  CHECK(has_subgroup_qdp_like(group("classical", 0, 3, 3, "PSL"), qdp_reference(3)));
  CHECK_FALSE(has_subgroup_qdp_like(group("tilde_qdp", 3, 13), qdp_reference(3)));
  const GroupPtr qd = group("qdp", 3);
  const auto e = has_subgroup_qdp_like(qd, group("extraspecial", 3));
  REQUIRE(e);
  CHECK(e->order() == 27);
}

TEST_CASE("cyclic sections") {
  const GroupPtr E = group("extraspecial", 3);
  const Subgroup all = whole(*E), Z = center(*E, all);
  CHECK(quotient_is_cyclic(*E, Z, trivial_subgroup(*E)));
  CHECK_FALSE(quotient_is_cyclic(*E, all, Z));
}

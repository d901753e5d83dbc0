#include "doctest.h"
#include "pstab/errors.hpp"
#include "pstab/involvement.hpp"
#include "pstab/iso.hpp"
#include "pstab/lattice.hpp"
#include "pstab/lie.hpp"
#include "support.hpp"

using namespace pstab;
using testing_support::group;
using testing_support::recipe;

namespace {

std::size_t orbit_size(const Group& G, Point x) {
  std::set<Point> seen{x};
  std::vector<Point> todo{x};
  while (!todo.empty()) {
    const Point y = todo.back();
    todo.pop_back();
    for (const Perm& g : G.generator_perms())
      if (seen.insert(g[y]).second) todo.push_back(g[y]);
  }
  return seen.size();
}

bool has_subgroup_iso_to(const GroupPtr& G, const GroupPtr& T) {
  for (const Subgroup& H : subgroups_up_to_conjugacy(*G))
    if (H.order() == T->order() && is_isomorphic(embed_subgroup(*G, H).group, T)) return true;
  return false;
}

}  // namespace

TEST_CASE("qdp") {
  CHECK(qdp(3).group->order() == 9 * 24);
  CHECK(qdp(5).group->order() == 25 * 120);
  CHECK_THROWS_AS(qdp(2), BadParameters);
  CHECK_THROWS_AS(qdp(9), BadParameters);

  for (std::uint32_t p : {3u, 5u}) {
    CAPTURE(p);
    const Built b = qdp(p);
    const Subgroup O = p_core(*b.group, p, CoreMode::p);
    CHECK(O.order() == p * p);
    CHECK(O == b.named_subgroup("V"));
    CHECK(is_isomorphic(quotient(b.group, O).group, classical_group(Family::SL, 2, p).group));
    CHECK(b.group->elt_order(b.named_element("unipotent")) == p);
    CHECK(b.group->elt_order(b.named_element("t")) == 4);
  }
}

TEST_CASE("qdp inside SL3") {
  const Built a = qdp_sl3(3);
  CHECK(a.group->order() == 216);
  CHECK(is_isomorphic(a.group, qdp(3).group));
  CHECK(center(*a.group, whole(*a.group)).order() == 1);
  for (const FqMatrix& m : a.matrices) CHECK(m.det() == 1);
  CHECK(qdp_sl3(5).group->order() == 3000);
}

TEST_CASE("extraspecial") {
  for (std::uint32_t p : {3u, 5u}) {
    CAPTURE(p);
    const GroupPtr E = extraspecial(p).group;
    CHECK(E->order() == p * p * p);
    const Subgroup all = whole(*E), Z = center(*E, all);
    CHECK(exponent(*E, all) == p);
    CHECK(Z.order() == p);
    CHECK(derived_subgroup(*E, all) == Z);
    for (Idx x = 1; x < E->order(); ++x) {
      CHECK(E->elt_order(x) == p);
      if (Z.contains(x)) continue;
      // the commutator form on E/Z has trivial radical
      bool paired = false;
      for (Idx y = 0; y < E->order() && !paired; ++y) paired = E->comm(x, y) != 0;
      CHECK(paired);
    }
  }
}

TEST_CASE("tilde qdp over F13") {
  const Built t = tilde_qdp(3, 13);
  CHECK(t.group->order() == 648);
  const Subgroup Z = center(*t.group, whole(*t.group));
  CHECK(Z.order() == 3);
  CHECK(Z == t.named_subgroup("Z"));
  CHECK(is_isomorphic(quotient(t.group, Z).group, qdp(3).group));
  CHECK_FALSE(has_subgroup_qdp_like(t.group, qdp_reference(3)));
  CHECK_FALSE(has_subgroup_iso_to(t.group, qdp_reference(3)));
  CHECK_THROWS_AS(tilde_qdp(3, 5), BadParameters);
}

TEST_CASE("tilde qdp for p = 5") {
  const Built t = tilde_qdp(5, std::nullopt);
  CHECK(t.group->order() == 125 * 120);
  const Subgroup Z = center(*t.group, whole(*t.group));
  CHECK(Z.order() == 5);
  CHECK(is_isomorphic(quotient(t.group, Z).group, qdp(5).group));
}

TEST_CASE("ninth-root variants over F19") {
  const Built minus = tilde_qd3_variant(-1, 19), plus = tilde_qd3_variant(1, 19);
  for (const Built* b : {&minus, &plus}) {
    CHECK(b->group->order() == 648);
    const Subgroup Z = center(*b->group, whole(*b->group));
    CHECK(Z.order() == 3);
    CHECK(is_isomorphic(quotient(b->group, Z).group, qdp(3).group));
    CHECK_FALSE(has_subgroup_qdp_like(b->group, qdp_reference(3)));
  }
  REQUIRE(minus.matrices.size() == 4);
  for (const FqMatrix& m : minus.matrices) CHECK(m.det() == 1);
  bool plus_det_one = true;
  for (const FqMatrix& m : plus.matrices) plus_det_one = plus_det_one && m.det() == 1;
  CHECK_FALSE(plus_det_one);

  const auto Pm = embed_subgroup(*minus.group, sylow(*minus.group, 3));
  const auto Pp = embed_subgroup(*plus.group, sylow(*plus.group, 3));
  CHECK(Pm.group->order() == 81);
  CHECK_FALSE(is_isomorphic(Pm.group, Pp.group));
  CHECK_THROWS_AS(tilde_qd3_variant(-1, 7), BadParameters);
}

TEST_CASE("embedding into the alternating group") {
  const AlternatingEmbedding e = qdp_in_alternating(3);
  const Group& I = *e.image.group;
  CHECK(I.degree() == 9);
  CHECK(I.order() == 216);
  CHECK(orbit_size(I, 0) == 9);
  for (const Perm& g : I.generator_perms()) CHECK(g.is_even());
  CHECK(verify_hom(e.iso));
  CHECK(e.iso.is_injective());
  CHECK(is_isomorphic(e.image.group, qdp(3).group));

  const AlternatingEmbedding e5 = qdp_in_alternating(5);
  CHECK(e5.image.group->degree() == 25);
  CHECK(e5.image.group->order() == 3000);
  CHECK(orbit_size(*e5.image.group, 0) == 25);
}

TEST_CASE("classical group orders match the order formulas") {
  struct Row {
    Family f;
    const char* name;
    std::size_t n;
    std::uint32_t q;
  };
  const Row rows[] = {{Family::GL, "GL", 2, 3},  {Family::SL, "SL", 2, 3},   {Family::PGL, "PGL", 2, 5},
                      {Family::PSL, "PSL", 2, 7}, {Family::PSL, "PSL", 2, 8}, {Family::PSL, "PSL", 2, 9},
                      {Family::PSL, "PSL", 3, 3}, {Family::PSL, "PSL", 3, 4}, {Family::GU, "GU", 2, 3},
                      {Family::SU, "SU", 3, 2},   {Family::PSU, "PSU", 3, 3}, {Family::Sp, "Sp", 4, 2},
                      {Family::GL, "GL", 3, 2},   {Family::SL, "SL", 2, 5},   {Family::Sp, "Sp", 4, 3}};
  for (const Row& r : rows) {
    CAPTURE(r.name);
    CAPTURE(r.n);
    CAPTURE(r.q);
    const Built b = classical_group(r.f, r.n, r.q);
    CHECK(lie::BigInt(b.group->order()) == lie::group_order(r.name, unsigned(r.n), r.q));
  }
  CHECK(classical_group(Family::PSL, 3, 3).group->order() == 5616);
  CHECK(classical_group(Family::SL, 2, 3).group->order() == 24);
  CHECK(classical_group(Family::Sp, 4, 3).group->order() == 51840);
}

TEST_CASE("factor of the dual binary forms module") {
  const DualFormsFactor d = dual_forms_factor(5);
  CHECK(d.submodule_invariant);
  CHECK(d.quotient_irreducible);
  CHECK(d.acting_order == 120);
  CHECK(d.factor.group->order() == 3000);
  CHECK(is_isomorphic(d.factor.group, qdp(5).group));
}

TEST_CASE("recipes are deterministic and round trip") {
  for (const char* kind : {"qdp", "extraspecial", "tilde_qdp"}) {
    CAPTURE(kind);
    const Built a = recipe(kind, 3, 13), b = recipe(kind, 3, 13);
    CHECK(write_group_spec(a.spec) == write_group_spec(b.spec));
    const GroupPtr back = load_group(parse_group_spec(write_group_spec(a.spec)));
    CHECK(back->order() == a.group->order());
    for (Idx i = 0; i < back->order(); ++i) CHECK(back->element(i) == a.group->element(i));
  }
  pstab::Recipe bad;
  bad.kind = "nonsense";
  CHECK_THROWS_AS(build_recipe(bad), BadParameters);
}

#pragma once
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pstab/field.hpp"
#include "pstab/quotient.hpp"
#include "pstab/spec_io.hpp"

namespace pstab {

// A constructed group together with the document that reproduces it and,
// for matrix models, the matrices and their action.
struct Built {
  GroupPtr group;
  GroupSpec spec;
  std::vector<FqMatrix> matrices;
  std::optional<MatrixAction> action;
  // Named elements or subgroup generators, as permutations of group->degree().
  std::map<std::string, std::vector<Perm>> named;

  Subgroup named_subgroup(const std::string& key) const;  // closure of named[key]
  Idx named_element(const std::string& key) const;        // index of named[key][0]
};

// V x| SL_2(p), V = F_p^2. Faithful on the affine plane plus the nonzero
// vectors of V (degree 2p^2 - 1). Named: "V", "complement", "unipotent"
// (the linear map [[1,1],[0,1]]), "t" ([[0,-1],[1,0]]).
Built qdp(std::uint32_t p);
// Matrices [[a,b,0],[c,d,0],[t,u,1]] in SL_3(p) acting on F_p^3 by v -> vM.
Built qdp_sl3(std::uint32_t p);
// Heisenberg group of exponent p, order p^3, as unitriangular 3x3 matrices.
Built extraspecial(std::uint32_t p);
// E x| SL_2(p) with E extraspecial of exponent p. For p = 3 the complex
// model with rho reduced into F_q (needs 3 | q-1); for p > 3 the abstract
// semidirect product acting on E (q, if given, must satisfy p | q-1).
// Named: "E", "Z", "unipotent", "t".
Built tilde_qdp(std::uint32_t p, std::optional<std::uint32_t> q);
// The variants with x replaced by theta^{+-1} x, theta of order 9 and
// theta^3 = rho. Needs 9 | q-1. Named: "E", "Z", "x", "t", "a", "b".
Built tilde_qd3_variant(int sign, std::uint32_t q);

struct AlternatingEmbedding {
  Built image;  // transitive group of degree p^2
  Hom iso;      // qdp(p) -> image
  Built source;
};
// Action of qdp(p) on the right cosets of its SL_2(p) complement.
AlternatingEmbedding qdp_in_alternating(std::uint32_t p);

enum class Family { GL, SL, PGL, PSL, GU, SU, PSU, Sp };
std::optional<Family> family_from_name(const std::string& s);
std::string family_name(Family f);
// GU/SU/PSU take q as the order of the fixed field of the involution (the
// matrices live over F_{q^2}). Sp takes the full dimension n (even).
Built classical_group(Family family, std::size_t n, std::uint32_t q);

// Helpers shared by the recipes.
Built symmetric_group(std::size_t n);
Built alternating_group(std::size_t n);
// F_q^n x| <linear>, acting on the q^n vectors by v -> vM + t.
Built affine_group(std::uint32_t q, const std::vector<FqMatrix>& linear, std::string name);
// Heisenberg group over F_p extended by 2x2 matrices acting through
// (v, z) -> (vM, det(M) z), faithful on the p^3 group elements.
Built heisenberg_extension(std::uint32_t p, const std::vector<std::vector<std::uint32_t>>& mats2x2, std::string name);

// Dual of the degree-p binary forms module for SL_2(p), its codimension-2
// submodule M (annihilator of <X^p, Y^p>), and the affine group on the
// quotient W*/M.
struct DualFormsFactor {
  std::uint32_t p = 0;
  std::vector<FqMatrix> module_gens;    // (p+1)x(p+1) dual action of the SL_2(p) generators
  std::vector<FqMatrix> quotient_gens;  // induced 2x2 action on W*/M
  bool submodule_invariant = false;     // M is stable under every generator
  bool quotient_irreducible = false;    // no line of W*/M is stable
  std::size_t acting_order = 0;         // order of the group generated by quotient_gens
  Built factor;                         // (W*/M) x| SL_2(p) on p^2 points
};
DualFormsFactor dual_forms_factor(std::uint32_t p);

// Parameterised recipes used by the CLI and the corpus.
struct Recipe {
  std::string kind;
  std::uint32_t p = 0, q = 0;
  std::size_t n = 0;
  std::string family;
  int sign = 0;
};
// Throws BadParameters on an unknown kind or invalid parameters.
Built build_recipe(const Recipe& r);
std::vector<std::string> recipe_kinds();

}  // namespace pstab

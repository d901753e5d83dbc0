#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pstab/lattice.hpp"
#include "pstab/quotient.hpp"

namespace pstab {

// True iff [a, x, x] lies in R for every a in Q. Throws NotNormalized if x
// does not normalize Q.
bool triple_commutator_in(const Group& G, const Subgroup& Q, Idx x, const Subgroup& R);
// The same condition for R = 1 evaluated in the expanded form
// (a^-1)^x a (a^-1)^x a^(x^2) = 1.
bool quadratic_identity_holds(const Group& G, const Subgroup& Q, Idx x);

// N acting on the cosets of R in Q (on Q itself when R = 1) by conjugation.
// N must normalize both Q and R.
struct SectionAction {
  Subgroup N;                  // in G
  Subgroup C;                  // kernel of the action, in G
  Embedded n_group;            // N as a group
  GroupPtr group;              // the image, a permutation group of degree |Q:R|
  Hom proj;                    // n_group.group -> group
  Subgroup op;                 // O_p(group)
};
SectionAction section_action(const Group& G, std::uint64_t p, const Subgroup& Q, const Subgroup& R,
                             const Subgroup& N);

// N_G(Q)/C_G(Q) acting faithfully on the elements of Q.
SectionAction induced_automizer(const Group& G, std::uint64_t p, const Subgroup& Q);

// Z(J(P)); J(P) is generated by the Abelian subgroups of P of largest order.
struct ThompsonData {
  Subgroup J;
  Subgroup ZJ;
  std::size_t max_abelian_order = 0;
};
ThompsonData thompson_subgroup(const Group& G, const Subgroup& P);
Subgroup thompson_center(const Group& G, const Subgroup& P);

enum class Definition { def_1971, def_1968, section };
std::string definition_name(Definition d);

struct StabilityWitness {
  Subgroup Q;
  Subgroup R;                 // trivial except for section witnesses
  Idx x = 0;                  // p-element of G normalizing Q and R
  std::optional<Subgroup> M;  // the member of the maximal local family (1968 definition)
  std::size_t automizer_order = 0;
  std::size_t automizer_op_order = 0;
};

struct StabilityVerdict {
  bool stable = true;
  Definition definition = Definition::def_1971;
  std::optional<StabilityWitness> witness;
  bool abelian_sylow = false;     // decided by the Abelian Sylow shortcut
  std::size_t pairs_checked = 0;  // (Q, R) or (M, Q) pairs examined
};

// Scans the G-classes of non-cyclic p-subgroups. The first witness in class
// order is returned.
StabilityVerdict is_p_stable(const Group& G, std::uint64_t p);
StabilityVerdict is_p_stable_def1968(const Group& G, std::uint64_t p);
StabilityVerdict is_section_p_stable(const Group& G, std::uint64_t p);

// Checks one (Q, R, N) triple; N must normalize Q and R. Returns a witness
// if some element of N violates the condition.
std::optional<StabilityWitness> find_unstable_element(const Group& G, std::uint64_t p, const Subgroup& Q,
                                                      const Subgroup& R, const Subgroup& N);

// Re-evaluates a witness from scratch: x normalizes Q and R, [Q,x,x] <= R,
// and x acts outside O_p of the induced group on Q/R.
bool verify_witness(const Group& G, std::uint64_t p, const StabilityWitness& w);

// Abelian p-sections only: true when Q/R is cyclic.
bool quotient_is_cyclic(const Group& G, const Subgroup& Q, const Subgroup& R);

}  // namespace pstab

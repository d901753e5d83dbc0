#pragma once
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "pstab/involvement.hpp"
#include "pstab/lattice.hpp"
#include "pstab/stability.hpp"

namespace pstab {

// The fusion system F_P(G) of G on a Sylow p-subgroup P. Objects are the
// subgroups of P; F-isomorphism classes are the G-conjugacy classes of
// those subgroups.
struct FusionSystem {
  GroupPtr G;
  std::uint64_t p = 0;
  Subgroup P;
  PSubgroupClasses classes;
  std::vector<std::size_t> np_order;   // |N_P(S)| per subgroup of P
  std::vector<std::size_t> class_rep;  // per class: a fully normalized member (least index)

  const Subgroup& rep(std::size_t c) const { return classes.subgroups[class_rep[c]]; }
  std::size_t class_of(const Subgroup& Q) const { return classes.class_of[classes.index_of(Q)]; }
};

FusionSystem fusion_system(const GroupPtr& G, std::uint64_t p);
// P must be a Sylow p-subgroup of G (MismatchedSylow otherwise).
FusionSystem fusion_system_on(const GroupPtr& G, std::uint64_t p, const Subgroup& P);

// Conjugation by g restricted to Q, with g the least element of C_G(Q) g.
struct FusionMorphism {
  Subgroup source;
  Subgroup target;
  Idx g = 0;
};
std::vector<FusionMorphism> hom_set(const FusionSystem& F, const Subgroup& Q, const Subgroup& R);

// Aut_F(Q) = N_G(Q)/C_G(Q) acting on Q.
SectionAction aut_F(const FusionSystem& F, const Subgroup& Q);

struct SubgroupStatus {
  bool fully_normalized = false;
  bool centric = false;
  bool p_centric = false;
  bool radical = false;
  bool strongly_closed = false;
  bool normal_in_F = false;
};
SubgroupStatus subgroup_status(const FusionSystem& F, const Subgroup& Q);

bool is_fully_normalized(const FusionSystem& F, const Subgroup& Q);
// C_P(Q') <= Q' for every F-conjugate Q'.
bool is_centric(const FusionSystem& F, const Subgroup& Q);
// Every p-element of C_G(Q) lies in Q.
bool is_p_centric(const FusionSystem& F, const Subgroup& Q);
// O_p(Aut_F(Q)) = Inn(Q).
bool is_radical(const FusionSystem& F, const Subgroup& Q);
bool is_strongly_closed(const FusionSystem& F, const Subgroup& Q);
// Q is normal in P and every automorphism in Aut_F(R), R running over the
// chosen fully normalized class members, extends to RQ leaving Q invariant.
bool is_normal_in_F(const FusionSystem& F, const Subgroup& Q);

// The Sylow axiom: Aut_P(P) is a Sylow p-subgroup of Aut_F(P).
bool sylow_axiom_holds(const FusionSystem& F);

// N_F(Q) realized as F_{N_P(Q)}(N_G(Q)). Throws NotFullyNormalized.
struct NormalizerSystem {
  FusionSystem F;
  Embedded n;  // N_G(Q) inside the ambient group
};
NormalizerSystem normalizer_system(const FusionSystem& F, const Subgroup& Q);

// F/Q realized as F_{P/Q}(N_G(Q)/Q). Throws NotNormalInF.
struct QuotientSystem {
  FusionSystem F;
  Embedded n;
  Quotient quo;
  // Full preimage in the ambient group of a subgroup of the quotient group.
  Subgroup preimage(const Subgroup& S) const;
};
QuotientSystem quotient_system(const FusionSystem& F, const Subgroup& Q);

Subgroup op_F(const FusionSystem& F);
bool is_constrained(const FusionSystem& F);

struct SolubilityChain {
  bool soluble = false;
  std::vector<Subgroup> chain;  // 1 = Q_0 < Q_1 < ..., subgroups of P
};
// Q_i is the preimage of O_p(F/Q_{i-1}); soluble iff the chain reaches P.
SolubilityChain is_soluble(const FusionSystem& F);

// Stability over Aut_F(Q) for one fully normalized member of each class.
StabilityVerdict is_p_stable_fusion(const FusionSystem& F);

// N_G(Q)/O_p'(N_G(Q)). Throws NotFullyNormalized or NotCentric.
struct Model {
  GroupPtr group;
  bool p_reduced = false;    // O_p'(L) = 1
  bool constrained = false;  // C_L(O_p(L)) <= O_p(L)
};
Model model_of_normalizer(const FusionSystem& F, const Subgroup& Q);

struct FreenessVerdict {
  bool free = true;
  std::optional<Subgroup> Q;  // centric fully normalized subgroup whose model involves qdp(p)
  std::optional<SectionWitness> witness;  // inside the model
  std::size_t models_checked = 0;
};
FreenessVerdict is_qdp_free(const FusionSystem& F);

struct SectionFusionVerdict {
  bool stable = true;
  std::optional<Subgroup> R;  // N_F(R)/R fails to be p-stable
};
SectionFusionVerdict section_p_stable_fusion(const FusionSystem& F);

// Maps elements of F1.P (indices in F1.G) to elements of F2.P.
using SylowIdentification = std::map<Idx, Idx>;
SylowIdentification identify_by_hom(const Hom& h, const Subgroup& P);
SylowIdentification identify_identity(const Subgroup& P);
// True iff Hom_F1(S, P1) and Hom_F2(S', P2) agree as maps for every
// subgroup S of P1, S' its image. Throws MismatchedSylow if the
// identification is not an isomorphism P1 -> P2.
bool fusion_equal(const FusionSystem& F1, const FusionSystem& F2, const SylowIdentification& ident);
bool fusion_equal(const FusionSystem& F1, const FusionSystem& F2);

}  // namespace pstab

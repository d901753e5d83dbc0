#include "pstab_cli/report.hpp"

#include "pstab/config.hpp"

#ifndef PSTAB_VERSION
#define PSTAB_VERSION "0.0.0"
#endif

namespace pstab::cli {

std::string toolkit_version() { return PSTAB_VERSION; }

Json subgroup_json(const Group& G, const Subgroup& H) {
  Json gens = Json::array();
  for (Idx g : H.gens) gens.push_back(G.element(g).to_cycles());
  return Json{{"order", H.order()}, {"generators", gens}};
}

Json stability_json(const Group& G, std::uint64_t p, const StabilityVerdict& v) {
  Json j{{"definition", definition_name(v.definition)},
         {"stable", v.stable},
         {"abelian_sylow", v.abelian_sylow},
         {"pairs_checked", v.pairs_checked}};
  if (v.witness) {
    const StabilityWitness& w = *v.witness;
    Json wj{{"Q", subgroup_json(G, w.Q)},
            {"R", subgroup_json(G, w.R)},
            {"x", G.element(w.x).to_cycles()},
            {"x_order", G.elt_order(w.x)},
            {"automizer_order", w.automizer_order},
            {"automizer_op_order", w.automizer_op_order}};
    if (w.M) wj["M"] = subgroup_json(G, *w.M);
    wj["verified"] = verify_witness(G, p, w);
    j["witness"] = wj;
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json section_json(const Group& G, const std::optional<SectionWitness>& w) {
  Json j{{"involved", w.has_value()}};
  if (!w) {
    j["witness"] = nullptr;
    return j;
  }
  j["witness"] = Json{{"H", subgroup_json(G, w->H)},
                      {"K", subgroup_json(G, w->K)},
                      {"Q", subgroup_json(G, w->Q)},
                      {"W", subgroup_json(G, w->W)},
                      {"section_order", w->section->order()},
                      {"verified", verify_section(G, *w)}};
  return j;
}

Json fusion_json(const FusionSystem& F, bool table) {
  const Group& G = *F.G;
  Json j{{"p", F.p}, {"sylow", subgroup_json(G, F.P)}, {"classes", F.classes.classes.size()}};
  j["sylow_axiom"] = sylow_axiom_holds(F);
  j["op_F"] = subgroup_json(G, op_F(F));
  j["constrained"] = is_constrained(F);
  const SolubilityChain sc = is_soluble(F);
  Json chain = Json::array();
  for (const Subgroup& Q : sc.chain) chain.push_back(Q.order());
  j["soluble"] = Json{{"value", sc.soluble}, {"chain_orders", chain}};
  j["p_stable"] = stability_json(G, F.p, is_p_stable_fusion(F));
  const FreenessVerdict fv = is_qdp_free(F);
  Json fj{{"free", fv.free}, {"models_checked", fv.models_checked}};
  fj["Q"] = fv.Q ? subgroup_json(G, *fv.Q) : Json(nullptr);
  fj["witness_section_order"] = fv.witness ? Json(fv.witness->section->order()) : Json(nullptr);
  j["qdp_free"] = fj;
  j["section_p_stable"] = section_p_stable_fusion(F).stable;
  if (table) {
    Json rows = Json::array();
    for (std::size_t c = 0; c < F.classes.classes.size(); ++c) {
      const Subgroup& Q = F.rep(c);
      const SubgroupStatus st = subgroup_status(F, Q);
      rows.push_back(Json{{"class", c},
                          {"order", Q.order()},
                          {"members", F.classes.classes[c].size()},
                          {"generators", subgroup_json(G, Q)["generators"]},
                          {"np_order", F.np_order[F.class_rep[c]]},
                          {"aut_F_order", aut_F(F, Q).group->order()},
                          {"fully_normalized", st.fully_normalized},
                          {"centric", st.centric},
                          {"p_centric", st.p_centric},
                          {"radical", st.radical},
                          {"strongly_closed", st.strongly_closed},
                          {"normal_in_F", st.normal_in_F}});
    }
    j["table"] = rows;
  }
  return j;
}

Json classifier_json(const lie::ClassifierQuery& q, const lie::ClassifierVerdict& v) {
  Json in{{"family", q.family}, {"p", q.p}};
  if (q.family == "sporadic") in["name"] = q.name;
  else in["n"] = q.n;
  if (q.q) in["q"] = q.q;
  Json j{{"query", in},
         {"order", lie::simple_order(q).str()},
         {"sylow_exponent", v.sylow_exponent},
         {"sylow_abelian", v.sylow_abelian},
         {"involves_qdp", v.involves_qdp},
         {"p_stable", v.p_stable},
         {"minimal_witness", lie::witness_name(v.minimal_witness, q.p)},
         {"defining_characteristic", v.defining_characteristic},
         {"rationale", v.rationale}};
  j["literal_table"] = v.literal_table ? Json(*v.literal_table) : Json(nullptr);
  j["boundary"] = v.boundary;
  return j;
}

Json crosscheck_json(const lie::Crosscheck& c) {
  Json j{{"constructed", c.constructed}};
  if (!c.constructed) {
    j["skipped"] = c.skipped;
    return j;
  }
  j["order_matches"] = c.order_matches;
  j["table_abelian"] = c.table_abelian;
  j["direct_abelian"] = c.direct_abelian;
  j["table_involves"] = c.table_involves;
  j["direct_involves"] = c.direct_involves;
  j["agree"] = c.agree();
  return j;
}

Json identity_grid_json(const lie::IdentityGridReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back(Json{{"identity", lie::identity_name(row.id)}, {"checked", row.checked}, {"failed", row.failed}});
  return Json{{"ok", r.ok()}, {"identities", rows}, {"failures", r.failures}};
}

Json limits_json() {
  const Limits& l = limits();
  return Json{{"order_cap", l.order_cap}, {"degree_cap", l.degree_cap}, {"subgroup_cap", l.subgroup_cap}};
}

Json envelope(const std::string& command) {
  return Json{{"tool", kToolName}, {"version", toolkit_version()}, {"command", command}, {"caps", limits_json()}};
}

}  // namespace pstab::cli

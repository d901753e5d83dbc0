#pragma once
#include <string>

#include "json.hpp"
#include "pstab/fusion.hpp"
#include "pstab/involvement.hpp"
#include "pstab/lie.hpp"
#include "pstab/stability.hpp"

namespace pstab::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "pstab";
std::string toolkit_version();

Json subgroup_json(const Group& G, const Subgroup& H);
Json stability_json(const Group& G, std::uint64_t p, const StabilityVerdict& v);
Json section_json(const Group& G, const std::optional<SectionWitness>& w);
// Summary of the fusion system; with `table` the per-class status rows too.
Json fusion_json(const FusionSystem& F, bool table);
Json classifier_json(const lie::ClassifierQuery& q, const lie::ClassifierVerdict& v);
Json crosscheck_json(const lie::Crosscheck& c);
Json identity_grid_json(const lie::IdentityGridReport& r);
Json limits_json();

// Envelope shared by every command.
Json envelope(const std::string& command);

}  // namespace pstab::cli

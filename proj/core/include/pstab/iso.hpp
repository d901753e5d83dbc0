#pragma once
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "pstab/quotient.hpp"

namespace pstab {

struct Fingerprint {
  std::size_t order = 0;
  std::map<std::uint64_t, std::size_t> order_histogram;
  std::size_t center_order = 0;
  std::vector<std::size_t> derived_series;  // orders down to the perfect core
  std::map<std::uint64_t, std::size_t> abelianization_histogram;
  std::vector<std::pair<std::uint64_t, std::size_t>> classes;  // (element order, class size), sorted

  bool operator==(const Fingerprint&) const = default;
};
Fingerprint fingerprint(const Group& G);

// Few generators, found deterministically (two whenever a pair is found).
std::vector<Idx> small_generating_set(const Group& G);

// Injective homomorphism T -> G, if one exists.
std::optional<Hom> find_embedding(const GroupPtr& T, const GroupPtr& G);
// Isomorphism A -> B, if one exists.
std::optional<Hom> is_isomorphic(const GroupPtr& A, const GroupPtr& B);

}  // namespace pstab

#pragma once
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "pstab/perm.hpp"

namespace pstab {

using Idx = std::uint32_t;
class Group;
using GroupPtr = std::shared_ptr<const Group>;

// Finite permutation group with its full element list.
// Elements are indexed 0..order-1 in lexicographic order of their image
// arrays, so index 0 is the identity. Immutable after construction; the
// lazily built class data is guarded by call_once.
class Group {
 public:
  // Closure of gens, all of the given degree. Throws OrderCapExceeded.
  static GroupPtr generate(const std::vector<Perm>& gens, std::size_t degree, std::string label = {});
  // Group on a sorted, multiplicatively closed subset of parent's elements.
  static GroupPtr from_subset(const Group& parent, const std::vector<Idx>& sorted_elems, std::string label = {});

  std::size_t order() const { return order_; }
  std::size_t degree() const { return n_; }
  const std::string& label() const { return label_; }

  const Point* data(Idx i) const { return pts_.data() + static_cast<std::size_t>(i) * n_; }
  Perm element(Idx i) const;

  Idx mul(Idx a, Idx b) const;
  Idx inv(Idx a) const { return inv_[a]; }
  Idx conj(Idx a, Idx g) const { return mul(mul(inv_[g], a), g); }  // g^-1 a g
  Idx comm(Idx a, Idx b) const { return mul(mul(inv_[a], inv_[b]), mul(a, b)); }
  Idx pow(Idx a, long long e) const;
  std::uint64_t elt_order(Idx a) const { return ord_[a]; }

  std::optional<Idx> find(const Perm& p) const;
  std::optional<Idx> find(const Point* images) const;  // full image array of length degree()
  // Lookup by images of the base points only (see base()).
  std::optional<Idx> find_by_base(const Point* base_images) const;
  const std::vector<Point>& base() const { return base_; }

  const std::vector<Idx>& gens() const { return gens_; }
  std::vector<Perm> generator_perms() const;

  // Conjugacy classes; class ids are numbered by their least element.
  const std::vector<std::uint32_t>& class_ids() const;
  const std::vector<Idx>& class_reps() const;

 private:
  Group() = default;
  void finalize(std::vector<Idx> gen_hint);
  std::size_t hash_base(const Point* b) const;
  void compute_classes() const;

  std::string label_;
  std::size_t n_ = 0;
  std::size_t order_ = 0;
  std::vector<Point> pts_;
  std::vector<Idx> inv_;
  std::vector<std::uint32_t> ord_;
  std::vector<Point> base_;
  std::vector<Idx> table_;
  std::size_t mask_ = 0;
  std::vector<Idx> gens_;

  mutable std::once_flag classes_once_;
  mutable std::vector<std::uint32_t> class_id_;
  mutable std::vector<Idx> class_reps_;
};

}  // namespace pstab

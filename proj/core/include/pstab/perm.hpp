#pragma once
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pstab {

using Point = std::uint16_t;
inline constexpr std::size_t kMaxDegree = 65535;

// Permutation of {0..n-1}. Products act on the right: (a*b)[x] = b[a[x]].
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<Point> images);  // throws BadParameters if not a bijection

  static Perm identity(std::size_t n);
  // Cycle notation with 0-based points, e.g. "(0 1 2)(3 4)"; "()" is the identity.
  static Perm from_cycles(std::string_view text, std::size_t degree);

  std::size_t degree() const { return img_.size(); }
  Point operator[](std::size_t i) const { return img_[i]; }
  const std::vector<Point>& images() const { return img_; }

  Perm operator*(const Perm& o) const;
  Perm inverse() const;
  Perm pow(long long e) const;
  bool is_identity() const;
  bool is_even() const;
  std::uint64_t order() const;
  std::string to_cycles() const;

  auto operator<=>(const Perm&) const = default;
  bool operator==(const Perm&) const = default;

 private:
  std::vector<Point> img_;
};

}  // namespace pstab

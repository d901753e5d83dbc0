#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pstab/field.hpp"
#include "pstab/group.hpp"

namespace pstab {

// Group specification document, format 1.
//
//   { "format": 1, "name": str, "kind": "perm", "degree": n,
//     "generators": ["(0 1 2)(3 4)", ...] }
//   { "format": 1, "name": str, "kind": "matrix", "field": q, "dim": n,
//     "action": "auto" | "vectors" | "basis-orbits" | "projective",   (optional, default "auto")
//     "seeds": [[...], ...],                                  (projective only, optional)
//     "generators": [[e00, e01, ..., e(n-1)(n-1)], ...] }
//
// Cycle strings use 0-based points. Matrix entries are row-major field
// codes 0..q-1 (for prime q these are the residues). "format" may be
// omitted when reading; it is always written.
struct GroupSpec {
  std::string name;
  enum class Kind { perm, matrix } kind = Kind::perm;
  std::size_t degree = 0;
  std::vector<Perm> perms;

  std::uint32_t field = 0;
  std::size_t dim = 0;
  std::string action = "auto";  // auto: all vectors within the degree cap, else basis orbits
  std::vector<std::vector<std::uint32_t>> seeds;
  std::vector<std::vector<std::uint32_t>> matrices;  // row-major
};

// Throws ParseError (with "line L, column C" or a JSON path) on malformed
// input, non-bijective permutations or singular matrices.
GroupSpec parse_group_spec(std::string_view text);
std::string write_group_spec(const GroupSpec& spec);  // pretty JSON, trailing newline

GroupPtr load_group(const GroupSpec& spec);
GroupSpec perm_spec_of(const Group& G, std::string name);

// Reads a whole file; throws BadParameters if unreadable.
std::string read_text_file(const std::string& path);

}  // namespace pstab

#pragma once
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pstab/group.hpp"

namespace pstab {

// F_q with q = p^s. Elements are 0..q-1; the base-p digits of an element are
// its coefficients in the basis 1, w, w^2, ... where w is a root of the
// least monic irreducible polynomial of degree s over F_p.
class FqField {
 public:
  explicit FqField(std::uint32_t q);  // throws BadParameters unless q is a prime power

  std::uint32_t q() const { return q_; }
  std::uint32_t p() const { return p_; }
  std::uint32_t s() const { return s_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }  // low degree first, monic

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_[a * q_ + b]; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add_[a * q_ + neg_[b]]; }
  std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a * q_ + b]; }
  std::uint32_t inv(std::uint32_t a) const;  // throws on zero
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  std::uint32_t from_int(long long v) const;  // image of an integer
  std::uint64_t mult_order(std::uint32_t a) const;
  // Least element (as an integer code) of multiplicative order d; throws if none.
  std::uint32_t least_of_order(std::uint64_t d) const;
  std::uint32_t primitive() const { return least_of_order(q_ - 1); }
  // F_p-basis 1, w, ..., w^{s-1} as codes.
  std::vector<std::uint32_t> prime_basis() const;

 private:
  std::uint32_t q_, p_, s_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> add_, mul_, neg_;
};

using FieldPtr = std::shared_ptr<const FqField>;

// Square matrix over F_q acting on row vectors from the right: v -> v M.
class FqMatrix {
 public:
  FqMatrix(FieldPtr f, std::size_t n);  // zero matrix
  static FqMatrix identity(FieldPtr f, std::size_t n);
  static FqMatrix from_rows(FieldPtr f, const std::vector<std::vector<std::uint32_t>>& rows);

  std::size_t dim() const { return n_; }
  const FqField& field() const { return *f_; }
  const FieldPtr& field_ptr() const { return f_; }
  std::uint32_t at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  std::uint32_t& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const std::vector<std::uint32_t>& entries() const { return a_; }

  FqMatrix operator*(const FqMatrix& o) const;
  FqMatrix scaled(std::uint32_t c) const;
  FqMatrix transpose() const;
  FqMatrix frobenius(std::uint32_t power) const;  // entrywise x -> x^power
  std::uint32_t det() const;
  FqMatrix inverse() const;  // throws BadParameters if singular
  bool operator==(const FqMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }

  // Row vector (length n) times this matrix.
  std::vector<std::uint32_t> apply(const std::vector<std::uint32_t>& v) const;

 private:
  FieldPtr f_;
  std::size_t n_;
  std::vector<std::uint32_t> a_;
};

std::uint64_t vector_code(const FqField& f, const std::vector<std::uint32_t>& v);
std::vector<std::uint32_t> vector_from_code(const FqField& f, std::uint64_t code, std::size_t n);

enum class VectorAction {
  automatic,     // all q^n vectors when within the degree cap, else basis orbits
  all_vectors,   // all q^n vectors
  basis_orbits,  // union of the orbits of the standard basis vectors
};

struct MatrixAction {
  GroupPtr group;
  FieldPtr field;
  std::size_t dim = 0;
  bool projective = false;            // points are normalized vectors (first nonzero entry 1)
  std::vector<std::uint64_t> points;  // vector code of each permutation point, ascending
  VectorAction used = VectorAction::all_vectors;
  std::vector<std::size_t> kept;      // indices of the input matrices used as generators

  // Throws BadParameters if m does not preserve the point set.
  Perm perm_of(const FqMatrix& m) const;
  std::optional<Point> point_of(std::uint64_t code) const;
};

// Faithful permutation representation of <mats>. Throws DegreeCapExceeded,
// BadParameters (singular or mismatched matrices), OrderCapExceeded.
// With prune set, a matrix is kept only if it is not already in the group
// generated by the earlier kept ones.
MatrixAction as_permutation_group(const std::vector<FqMatrix>& mats, VectorAction mode = VectorAction::automatic,
                                  std::string label = {}, bool prune = false);

// Action on the projective points in the orbits of the given seed vectors.
// Empty seeds means all points of the projective space.
MatrixAction projective_action(const std::vector<FqMatrix>& mats, const std::vector<std::vector<std::uint32_t>>& seeds,
                               std::string label = {}, bool prune = false);

}  // namespace pstab

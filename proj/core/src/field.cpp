#include "pstab/field.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "pstab/config.hpp"
#include "pstab/errors.hpp"

namespace pstab {

namespace {

constexpr std::uint32_t kMaxFieldSize = 1024;

using Poly = std::vector<std::uint32_t>;  // coefficients, low degree first

Poly digits(std::uint32_t code, std::uint32_t p, std::uint32_t s) {
  Poly d(s);
  for (std::uint32_t i = 0; i < s; ++i) {
    d[i] = code % p;
    code /= p;
  }
  return d;
}

std::uint32_t undigits(const Poly& d, std::uint32_t p) {
  std::uint32_t c = 0;
  for (std::size_t i = d.size(); i-- > 0;) c = c * p + d[i];
  return c;
}

// Remainder of a modulo the monic polynomial m (both low degree first).
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  const std::size_t dm = m.size() - 1;
  for (std::size_t i = a.size(); i-- > dm;) {
    const std::uint32_t c = a[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dm; ++j) a[i - dm + j] = (a[i - dm + j] + (p - c) * m[j]) % p;
  }
  a.resize(std::min(a.size(), dm));
  return a;
}

bool poly_is_zero(const Poly& a) {
  return std::all_of(a.begin(), a.end(), [](std::uint32_t c) { return c == 0; });
}

bool is_irreducible(const Poly& m, std::uint32_t p) {
  const std::size_t deg = m.size() - 1;
  for (std::size_t d = 1; d * 2 <= deg; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly f = digits(static_cast<std::uint32_t>(code), p, static_cast<std::uint32_t>(d));
      f.push_back(1);
      if (poly_is_zero(poly_mod(m, f, p))) return false;
    }
  }
  return true;
}

}  // namespace

FqField::FqField(std::uint32_t q) : q_(q) {
  if (q < 2 || q > kMaxFieldSize) throw BadParameters("field size " + std::to_string(q) + " out of range");
  std::uint32_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t s = 0, r = q;
  while (r % p == 0) {
    r /= p;
    ++s;
  }
  if (r != 1) throw BadParameters("field size " + std::to_string(q) + " is not a prime power");
  p_ = p;
  s_ = s;

  if (s == 1) {
    modulus_ = {0, 1};
  } else {
    for (std::uint32_t code = 0;; ++code) {
      Poly m = digits(code, p, s);
      m.push_back(1);
      if (m[0] != 0 && is_irreducible(m, p)) {
        modulus_ = m;
        break;
      }
    }
  }

  add_.resize(static_cast<std::size_t>(q) * q);
  mul_.resize(static_cast<std::size_t>(q) * q);
  neg_.resize(q);
  std::vector<Poly> dg(q);
  for (std::uint32_t a = 0; a < q; ++a) dg[a] = digits(a, p, s);
  for (std::uint32_t a = 0; a < q; ++a) {
    Poly n(s);
    for (std::uint32_t i = 0; i < s; ++i) n[i] = (p - dg[a][i]) % p;
    neg_[a] = undigits(n, p);
    for (std::uint32_t b = 0; b < q; ++b) {
      Poly sum(s);
      for (std::uint32_t i = 0; i < s; ++i) sum[i] = (dg[a][i] + dg[b][i]) % p;
      add_[a * q + b] = undigits(sum, p);
      Poly prod(2 * s, 0);
      for (std::uint32_t i = 0; i < s; ++i)
        for (std::uint32_t j = 0; j < s; ++j) prod[i + j] = (prod[i + j] + dg[a][i] * dg[b][j]) % p;
      Poly red = s == 1 ? Poly{prod[0]} : poly_mod(prod, modulus_, p);
      red.resize(s);
      mul_[a * q + b] = undigits(red, p);
    }
  }
}

std::uint32_t FqField::inv(std::uint32_t a) const {
  if (a == 0) throw BadParameters("inverse of zero in F_" + std::to_string(q_));
  return pow(a, q_ - 2);
}

std::uint32_t FqField::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint32_t FqField::from_int(long long v) const {
  long long m = v % static_cast<long long>(p_);
  if (m < 0) m += p_;
  return static_cast<std::uint32_t>(m);
}

std::uint64_t FqField::mult_order(std::uint32_t a) const {
  if (a == 0) throw BadParameters("zero has no multiplicative order");
  std::uint64_t k = 1;
  for (std::uint32_t x = a; x != 1; x = mul(x, a)) ++k;
  return k;
}

std::uint32_t FqField::least_of_order(std::uint64_t d) const {
  for (std::uint32_t a = 1; a < q_; ++a)
    if (mult_order(a) == d) return a;
  throw BadParameters("F_" + std::to_string(q_) + " has no element of order " + std::to_string(d));
}

std::vector<std::uint32_t> FqField::prime_basis() const {
  std::vector<std::uint32_t> b;
  std::uint32_t w = 1;
  for (std::uint32_t i = 0; i < s_; ++i) {
    b.push_back(w);
    w *= p_;
  }
  return b;
}

FqMatrix::FqMatrix(FieldPtr f, std::size_t n) : f_(std::move(f)), n_(n), a_(n * n, 0) {}

FqMatrix FqMatrix::identity(FieldPtr f, std::size_t n) {
  FqMatrix m(std::move(f), n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

FqMatrix FqMatrix::from_rows(FieldPtr f, const std::vector<std::vector<std::uint32_t>>& rows) {
  const std::size_t n = rows.size();
  FqMatrix m(f, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw BadParameters("matrix is not square");
    for (std::size_t j = 0; j < n; ++j) {
      if (rows[i][j] >= f->q()) throw BadParameters("matrix entry outside the field");
      m.at(i, j) = rows[i][j];
    }
  }
  return m;
}

FqMatrix FqMatrix::operator*(const FqMatrix& o) const {
  if (n_ != o.n_ || f_->q() != o.f_->q()) throw BadParameters("matrix dimensions or fields differ");
  FqMatrix r(f_, n_);
  const FqField& F = *f_;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      const std::uint32_t a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) r.at(i, j) = F.add(r.at(i, j), F.mul(a, o.at(k, j)));
    }
  return r;
}

FqMatrix FqMatrix::scaled(std::uint32_t c) const {
  FqMatrix r = *this;
  for (auto& x : r.a_) x = f_->mul(x, c);
  return r;
}

FqMatrix FqMatrix::transpose() const {
  FqMatrix r(f_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
  return r;
}

FqMatrix FqMatrix::frobenius(std::uint32_t power) const {
  FqMatrix r = *this;
  for (auto& x : r.a_) x = f_->pow(x, power);
  return r;
}

std::uint32_t FqMatrix::det() const {
  const FqField& F = *f_;
  std::vector<std::uint32_t> a = a_;
  std::uint32_t d = 1;
  for (std::size_t c = 0; c < n_; ++c) {
    std::size_t piv = c;
    while (piv < n_ && a[piv * n_ + c] == 0) ++piv;
    if (piv == n_) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < n_; ++j) std::swap(a[piv * n_ + j], a[c * n_ + j]);
      d = F.neg(d);
    }
    const std::uint32_t pv = a[c * n_ + c];
    d = F.mul(d, pv);
    const std::uint32_t pinv = F.inv(pv);
    for (std::size_t i = c + 1; i < n_; ++i) {
      const std::uint32_t f = F.mul(a[i * n_ + c], pinv);
      if (f == 0) continue;
      for (std::size_t j = c; j < n_; ++j) a[i * n_ + j] = F.sub(a[i * n_ + j], F.mul(f, a[c * n_ + j]));
    }
  }
  return d;
}

FqMatrix FqMatrix::inverse() const {
  const FqField& F = *f_;
  FqMatrix a = *this;
  FqMatrix r = identity(f_, n_);
  for (std::size_t c = 0; c < n_; ++c) {
    std::size_t piv = c;
    while (piv < n_ && a.at(piv, c) == 0) ++piv;
    if (piv == n_) throw BadParameters("singular matrix");
    for (std::size_t j = 0; j < n_; ++j) {
      std::swap(a.at(piv, j), a.at(c, j));
      std::swap(r.at(piv, j), r.at(c, j));
    }
    const std::uint32_t pinv = F.inv(a.at(c, c));
    for (std::size_t j = 0; j < n_; ++j) {
      a.at(c, j) = F.mul(a.at(c, j), pinv);
      r.at(c, j) = F.mul(r.at(c, j), pinv);
    }
    for (std::size_t i = 0; i < n_; ++i) {
      if (i == c) continue;
      const std::uint32_t f = a.at(i, c);
      if (f == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        a.at(i, j) = F.sub(a.at(i, j), F.mul(f, a.at(c, j)));
        r.at(i, j) = F.sub(r.at(i, j), F.mul(f, r.at(c, j)));
      }
    }
  }
  return r;
}

std::vector<std::uint32_t> FqMatrix::apply(const std::vector<std::uint32_t>& v) const {
  const FqField& F = *f_;
  std::vector<std::uint32_t> r(n_, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < n_; ++j) r[j] = F.add(r[j], F.mul(v[i], at(i, j)));
  }
  return r;
}

std::uint64_t vector_code(const FqField& f, const std::vector<std::uint32_t>& v) {
  std::uint64_t c = 0;
  for (std::size_t i = v.size(); i-- > 0;) c = c * f.q() + v[i];
  return c;
}

std::vector<std::uint32_t> vector_from_code(const FqField& f, std::uint64_t code, std::size_t n) {
  std::vector<std::uint32_t> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = static_cast<std::uint32_t>(code % f.q());
    code /= f.q();
  }
  return v;
}

namespace {

void normalize_projective(const FqField& f, std::vector<std::uint32_t>& v) {
  auto it = std::find_if(v.begin(), v.end(), [](std::uint32_t x) { return x != 0; });
  if (it == v.end()) throw BadParameters("zero vector has no projective point");
  const std::uint32_t c = f.inv(*it);
  for (auto& x : v) x = f.mul(x, c);
}

void check_matrices(const std::vector<FqMatrix>& mats, std::size_t& n, FieldPtr& f) {
  if (mats.empty()) throw BadParameters("no matrices given");
  f = mats.front().field_ptr();
  n = mats.front().dim();
  if (n == 0) throw BadParameters("zero-dimensional matrix");
  for (std::size_t i = 0; i < mats.size(); ++i) {
    const FqMatrix& m = mats[i];
    if (m.dim() != n || m.field().q() != f->q())
      throw BadParameters("matrix " + std::to_string(i) + " has a different dimension or field");
    if (m.det() == 0) throw BadParameters("matrix " + std::to_string(i) + " is singular");
  }
}

// Union of orbits of the seeds, sorted by code. Throws DegreeCapExceeded.
std::vector<std::uint64_t> orbit_union(const std::vector<FqMatrix>& mats, std::vector<std::vector<std::uint32_t>> seeds,
                                       bool projective, std::size_t cap) {
  const FqField& f = mats.front().field();
  std::unordered_set<std::uint64_t> seen;
  std::deque<std::vector<std::uint32_t>> queue;
  auto push = [&](std::vector<std::uint32_t> v) {
    if (projective) normalize_projective(f, v);
    if (seen.insert(vector_code(f, v)).second) {
      if (seen.size() > cap)
        throw DegreeCapExceeded("action degree exceeds the degree cap " + std::to_string(cap));
      queue.push_back(std::move(v));
    }
  };
  for (auto& s : seeds) push(std::move(s));
  while (!queue.empty()) {
    auto v = std::move(queue.front());
    queue.pop_front();
    for (const auto& m : mats) push(m.apply(v));
  }
  std::vector<std::uint64_t> pts(seen.begin(), seen.end());
  std::sort(pts.begin(), pts.end());
  return pts;
}

MatrixAction build_action(const std::vector<FqMatrix>& mats, MatrixAction act, std::string label, bool prune) {
  if (act.points.size() > kMaxDegree) throw DegreeCapExceeded("action degree exceeds the maximal degree");
  const std::size_t deg = act.points.size();
  std::vector<Perm> gens;
  if (!prune) {
    for (std::size_t i = 0; i < mats.size(); ++i) {
      gens.push_back(act.perm_of(mats[i]));
      act.kept.push_back(i);
    }
    act.group = Group::generate(gens, deg, std::move(label));
    return act;
  }
  GroupPtr cur = Group::generate({}, deg, label);
  for (std::size_t i = 0; i < mats.size(); ++i) {
    Perm g = act.perm_of(mats[i]);
    if (cur->find(g)) continue;
    gens.push_back(std::move(g));
    act.kept.push_back(i);
    cur = Group::generate(gens, deg, label);
  }
  act.group = cur;
  return act;
}

}  // namespace

std::optional<Point> MatrixAction::point_of(std::uint64_t code) const {
  if (used == VectorAction::all_vectors && !projective) {
    if (code >= points.size()) return std::nullopt;
    return static_cast<Point>(code);
  }
  auto it = std::lower_bound(points.begin(), points.end(), code);
  if (it == points.end() || *it != code) return std::nullopt;
  return static_cast<Point>(it - points.begin());
}

Perm MatrixAction::perm_of(const FqMatrix& m) const {
  if (m.dim() != dim || m.field().q() != field->q()) throw BadParameters("matrix does not match the action");
  std::vector<Point> img(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    auto w = m.apply(vector_from_code(*field, points[i], dim));
    if (projective) normalize_projective(*field, w);
    auto pt = point_of(vector_code(*field, w));
    if (!pt) throw BadParameters("matrix does not preserve the acted-on point set");
    img[i] = *pt;
  }
  return Perm(std::move(img));
}

MatrixAction as_permutation_group(const std::vector<FqMatrix>& mats, VectorAction mode, std::string label,
                                  bool prune) {
  std::size_t n = 0;
  FieldPtr f;
  check_matrices(mats, n, f);
  const std::size_t cap = limits().degree_cap;
  std::uint64_t total = 1;
  bool fits = true;
  for (std::size_t i = 0; i < n; ++i) {
    total *= f->q();
    if (total > cap) {
      fits = false;
      break;
    }
  }
  if (mode == VectorAction::automatic) mode = fits ? VectorAction::all_vectors : VectorAction::basis_orbits;

  MatrixAction act;
  act.field = f;
  act.dim = n;
  act.used = mode;
  if (mode == VectorAction::all_vectors) {
    if (!fits) throw DegreeCapExceeded("q^n exceeds the degree cap " + std::to_string(cap));
    act.points.resize(total);
    for (std::uint64_t c = 0; c < total; ++c) act.points[c] = c;
  } else {
    std::vector<std::vector<std::uint32_t>> seeds;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::uint32_t> e(n, 0);
      e[i] = 1;
      seeds.push_back(std::move(e));
    }
    act.points = orbit_union(mats, std::move(seeds), false, cap);
  }
  return build_action(mats, std::move(act), std::move(label), prune);
}

MatrixAction projective_action(const std::vector<FqMatrix>& mats, const std::vector<std::vector<std::uint32_t>>& seeds,
                               std::string label, bool prune) {
  std::size_t n = 0;
  FieldPtr f;
  check_matrices(mats, n, f);
  const std::size_t cap = limits().degree_cap;
  MatrixAction act;
  act.field = f;
  act.dim = n;
  act.projective = true;
  act.used = seeds.empty() ? VectorAction::all_vectors : VectorAction::basis_orbits;
  if (seeds.empty()) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
      total *= f->q();
      if (total > static_cast<std::uint64_t>(cap) * f->q())
        throw DegreeCapExceeded("projective space exceeds the degree cap " + std::to_string(cap));
    }
    for (std::uint64_t c = 1; c < total; ++c) {
      auto v = vector_from_code(*f, c, n);
      auto w = v;
      normalize_projective(*f, w);
      if (w == v) act.points.push_back(c);
    }
    if (act.points.size() > cap)
      throw DegreeCapExceeded("projective space exceeds the degree cap " + std::to_string(cap));
  } else {
    for (const auto& s : seeds)
      if (s.size() != n) throw BadParameters("seed vector has the wrong length");
    act.points = orbit_union(mats, seeds, true, cap);
  }
  return build_action(mats, std::move(act), std::move(label), prune);
}

}  // namespace pstab

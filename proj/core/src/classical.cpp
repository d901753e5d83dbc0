#include <algorithm>

#include "pstab/constructions.hpp"
#include "pstab/errors.hpp"

namespace pstab {

namespace {

using Rows = std::vector<std::vector<std::uint32_t>>;

FqMatrix elementary(const FieldPtr& f, std::size_t n, std::size_t i, std::size_t j, std::uint32_t c) {
  FqMatrix m = FqMatrix::identity(f, n);
  m.at(i, j) = c;
  return m;
}

std::vector<FqMatrix> sl_candidates(const FieldPtr& f, std::size_t n) {
  std::vector<FqMatrix> out;
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::uint32_t c : f->prime_basis()) {
      out.push_back(elementary(f, n, i, i + 1, c));
      out.push_back(elementary(f, n, i + 1, i, c));
    }
  return out;
}

// Outer product column(u) * row(v).
FqMatrix outer(const FieldPtr& f, const std::vector<std::uint32_t>& u, const std::vector<std::uint32_t>& v) {
  const std::size_t n = u.size();
  FqMatrix m(f, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = f->mul(u[i], v[j]);
  return m;
}

FqMatrix plus(const FqMatrix& a, const FqMatrix& b) {
  FqMatrix r = a;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) r.at(i, j) = a.field().add(a.at(i, j), b.at(i, j));
  return r;
}

// x -> x + a B(x, v) v with B(x, v) = x J v^T, J = [[0, I], [-I, 0]].
std::vector<FqMatrix> sp_candidates(const FieldPtr& f, std::size_t n) {
  const FqField& F = *f;
  const std::size_t m = n / 2;
  auto Jv = [&](const std::vector<std::uint32_t>& v) {
    std::vector<std::uint32_t> r(n, 0);
    for (std::size_t i = 0; i < m; ++i) {
      r[i] = v[i + m];
      r[i + m] = F.neg(v[i]);
    }
    return r;
  };
  std::vector<std::vector<std::uint32_t>> vs;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::uint32_t> v(n, 0);
    v[i] = 1;
    vs.push_back(v);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<std::uint32_t> v(n, 0);
      v[i] = v[j] = 1;
      vs.push_back(v);
    }
  std::vector<FqMatrix> out;
  const FqMatrix I = FqMatrix::identity(f, n);
  for (const auto& v : vs)
    for (std::uint32_t a : F.prime_basis()) out.push_back(plus(I, outer(f, Jv(v), v).scaled(a)));
  return out;
}

struct Hermitian {
  FieldPtr f;          // F_{q^2}
  std::uint32_t q;     // conjugation is x -> x^q
  std::uint32_t conj(std::uint32_t x) const { return f->pow(x, q); }
  std::uint32_t form(const std::vector<std::uint32_t>& x, const std::vector<std::uint32_t>& y) const {
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s = f->add(s, f->mul(x[i], conj(y[i])));
    return s;
  }
};

// Nonzero isotropic vectors with first nonzero entry 1, in code order.
std::vector<std::vector<std::uint32_t>> isotropic_points(const Hermitian& H, std::size_t n) {
  const FqField& F = *H.f;
  std::vector<std::vector<std::uint32_t>> out;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= F.q();
  for (std::uint64_t c = 1; c < total; ++c) {
    auto v = vector_from_code(F, c, n);
    auto it = std::find_if(v.begin(), v.end(), [](std::uint32_t x) { return x != 0; });
    if (*it != 1) continue;
    if (H.form(v, v) == 0) out.push_back(std::move(v));
  }
  return out;
}

// Unitary transvections x -> x + a <x, v> v with v isotropic and a + a^q = 0,
// plus diag(d, d^-1, 1, ...) with d of order q+1, two monomial matrices and a
// product of quasi-reflections.
std::vector<FqMatrix> su_candidates(const Hermitian& H, std::size_t n) {
  const FqField& F = *H.f;
  const FieldPtr& f = H.f;
  std::vector<FqMatrix> out;
  const std::uint32_t d = F.least_of_order(H.q + 1);
  FqMatrix D = FqMatrix::identity(f, n);
  D.at(0, 0) = d;
  D.at(1, 1) = F.inv(d);
  out.push_back(D);
  // Signed transposition and cycle matrices, both unitary of determinant 1.
  FqMatrix S(f, n);
  S.at(0, 1) = 1;
  S.at(1, 0) = F.neg(1);
  for (std::size_t i = 2; i < n; ++i) S.at(i, i) = 1;
  out.push_back(S);
  FqMatrix C(f, n);
  for (std::size_t i = 0; i < n; ++i) C.at(i, (i + 1) % n) = 1;
  if (C.det() != 1) C.at(0, 1) = F.neg(1);
  out.push_back(C);
  // Products of quasi-reflections along e_0 and along non-isotropic vectors
  // with at least two nonzero entries; not monomial.
  auto reflection = [&](const std::vector<std::uint32_t>& v, std::uint32_t lambda) {
    std::vector<std::uint32_t> vb(n);
    for (std::size_t i = 0; i < n; ++i) vb[i] = H.conj(v[i]);
    const std::uint32_t c = F.mul(F.sub(lambda, 1), F.inv(H.form(v, v)));
    return plus(FqMatrix::identity(f, n), outer(f, vb, v).scaled(c));
  };
  std::vector<std::uint32_t> e0(n, 0);
  e0[0] = 1;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= F.q();
  for (std::uint64_t c = 1, found = 0; c < total && found < 4; ++c) {
    auto w = vector_from_code(F, c, n);
    if (std::count(w.begin(), w.end(), 0u) + 2 > static_cast<std::ptrdiff_t>(n) || H.form(w, w) == 0) continue;
    out.push_back(reflection(w, d) * reflection(e0, F.inv(d)));
    ++found;
  }
  std::vector<std::uint32_t> traceless;
  for (std::uint32_t a = 1; a < F.q(); ++a)
    if (F.add(a, H.conj(a)) == 0) traceless.push_back(a);
  const FqMatrix I = FqMatrix::identity(f, n);
  for (const auto& v : isotropic_points(H, n)) {
    std::vector<std::uint32_t> vb(n);
    for (std::size_t i = 0; i < n; ++i) vb[i] = H.conj(v[i]);
    const FqMatrix o = outer(f, vb, v);
    for (std::uint32_t a : traceless) out.push_back(plus(I, o.scaled(a)));
  }
  return out;
}

Built finish(MatrixAction act, const std::vector<FqMatrix>& cands, std::string name) {
  Built b;
  b.group = act.group;
  for (std::size_t i : act.kept) b.matrices.push_back(cands[i]);
  b.spec.name = name;
  b.spec.kind = GroupSpec::Kind::matrix;
  b.spec.field = act.field->q();
  b.spec.dim = act.dim;
  if (act.projective) {
    b.spec.action = "projective";
    b.spec.seeds = {};
  } else {
    b.spec.action = act.used == VectorAction::all_vectors ? "vectors" : "basis-orbits";
  }
  for (const auto& m : b.matrices) b.spec.matrices.push_back(m.entries());
  b.action = std::move(act);
  return b;
}

}  // namespace

std::optional<Family> family_from_name(const std::string& s) {
  static const std::pair<const char*, Family> names[] = {{"GL", Family::GL}, {"SL", Family::SL},   {"PGL", Family::PGL},
                                                         {"PSL", Family::PSL}, {"GU", Family::GU}, {"SU", Family::SU},
                                                         {"PSU", Family::PSU}, {"Sp", Family::Sp}};
  for (const auto& [n, f] : names)
    if (s == n) return f;
  return std::nullopt;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::GL: return "GL";
    case Family::SL: return "SL";
    case Family::PGL: return "PGL";
    case Family::PSL: return "PSL";
    case Family::GU: return "GU";
    case Family::SU: return "SU";
    case Family::PSU: return "PSU";
    case Family::Sp: return "Sp";
  }
  return "?";
}

Built classical_group(Family family, std::size_t n, std::uint32_t q) {
  if (n < 1 || n > 16) throw BadParameters("dimension out of range");
  const std::string name = family_name(family) + "(" + std::to_string(n) + "," + std::to_string(q) + ")";
  switch (family) {
    case Family::GL:
    case Family::SL:
    case Family::PGL:
    case Family::PSL: {
      auto f = std::make_shared<FqField>(q);
      std::vector<FqMatrix> cands = n >= 2 ? sl_candidates(f, n) : std::vector<FqMatrix>{};
      if (family == Family::GL || family == Family::PGL || n == 1) {
        FqMatrix d = FqMatrix::identity(f, n);
        d.at(0, 0) = family == Family::GL || family == Family::PGL ? f->primitive() : 1;
        cands.push_back(d);
      }
      if (family == Family::PGL || family == Family::PSL) {
        if (n < 2) throw BadParameters("projective groups need n >= 2");
        return finish(projective_action(cands, {}, name, true), cands, name);
      }
      return finish(as_permutation_group(cands, VectorAction::automatic, name, true), cands, name);
    }
    case Family::GU:
    case Family::SU:
    case Family::PSU: {
      if (n < 2) throw BadParameters("unitary groups need n >= 2");
      FqField base(q);  // validates q
      Hermitian H{std::make_shared<FqField>(q * q), q};
      std::vector<FqMatrix> cands = su_candidates(H, n);
      if (family == Family::GU) {
        FqMatrix d = FqMatrix::identity(H.f, n);
        d.at(0, 0) = H.f->least_of_order(q + 1);
        cands.push_back(d);
      }
      if (family == Family::PSU) {
        auto pts = isotropic_points(H, n);
        if (pts.empty()) throw BadParameters("no isotropic vectors");
        Built b = finish(projective_action(cands, {pts.front()}, name, true), cands, name);
        b.spec.seeds = {pts.front()};
        return b;
      }
      return finish(as_permutation_group(cands, VectorAction::automatic, name, true), cands, name);
    }
    case Family::Sp: {
      if (n % 2 != 0 || n < 2) throw BadParameters("symplectic groups need even n >= 2");
      auto f = std::make_shared<FqField>(q);
      auto cands = sp_candidates(f, n);
      return finish(as_permutation_group(cands, VectorAction::automatic, name, true), cands, name);
    }
  }
  throw BadParameters("unknown family");
}

}  // namespace pstab

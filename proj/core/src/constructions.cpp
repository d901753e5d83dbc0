#include "pstab/constructions.hpp"

#include <algorithm>
#include <array>

#include "pstab/config.hpp"
#include "pstab/errors.hpp"
#include "pstab/subgroups.hpp"

namespace pstab {

namespace {

using Mat2 = std::array<std::uint32_t, 4>;  // [[m0, m1], [m2, m3]] over F_p

void require_odd_prime(std::uint32_t p) {
  if (!is_prime(p) || p == 2) throw BadParameters("p must be an odd prime, got " + std::to_string(p));
}

std::uint32_t md(long long v, std::uint32_t p) {
  long long r = v % static_cast<long long>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

// Row vector (v0, v1) times m over F_p.
std::pair<std::uint32_t, std::uint32_t> apply2(const Mat2& m, std::uint32_t v0, std::uint32_t v1, std::uint32_t p) {
  return {md(static_cast<long long>(v0) * m[0] + static_cast<long long>(v1) * m[2], p),
          md(static_cast<long long>(v0) * m[1] + static_cast<long long>(v1) * m[3], p)};
}

Mat2 sl2_x(std::uint32_t) { return {1, 1, 0, 1}; }
Mat2 sl2_y(std::uint32_t) { return {1, 0, 1, 1}; }
Mat2 sl2_t(std::uint32_t p) { return {0, p - 1, 1, 0}; }

FieldPtr prime_field(std::uint32_t p) { return std::make_shared<FqField>(p); }

Built from_matrices(std::vector<FqMatrix> mats, VectorAction mode, std::string name, bool prune = false) {
  Built b;
  b.action = as_permutation_group(mats, mode, name, prune);
  b.group = b.action->group;
  for (std::size_t i : b.action->kept) b.matrices.push_back(mats[i]);
  b.spec.name = name;
  b.spec.kind = GroupSpec::Kind::matrix;
  b.spec.field = b.action->field->q();
  b.spec.dim = b.action->dim;
  b.spec.action = mode == VectorAction::all_vectors    ? "vectors"
                  : mode == VectorAction::basis_orbits ? "basis-orbits"
                                                       : "auto";
  for (const auto& m : b.matrices) b.spec.matrices.push_back(m.entries());
  return b;
}

Built from_perms(const std::vector<Perm>& gens, std::size_t degree, std::string name) {
  Built b;
  b.group = Group::generate(gens, degree, name);
  b.spec.name = std::move(name);
  b.spec.kind = GroupSpec::Kind::perm;
  b.spec.degree = degree;
  b.spec.perms = gens;
  return b;
}

}  // namespace

Subgroup Built::named_subgroup(const std::string& key) const {
  auto it = named.find(key);
  if (it == named.end()) throw BadParameters("no named subgroup " + key);
  std::vector<Idx> gens;
  for (const auto& g : it->second) gens.push_back(*group->find(g));
  return closure(*group, gens);
}

Idx Built::named_element(const std::string& key) const {
  auto it = named.find(key);
  if (it == named.end() || it->second.empty()) throw BadParameters("no named element " + key);
  return *group->find(it->second.front());
}

Built qdp(std::uint32_t p) {
  require_odd_prime(p);
  const std::size_t pp = std::size_t(p) * p;
  const std::size_t degree = 2 * pp - 1;
  // Affine point v at code v0 + p v1; nonzero linear vector v at pp + code - 1.
  auto elem = [&](const Mat2& m, std::uint32_t t0, std::uint32_t t1) {
    std::vector<Point> img(degree);
    for (std::uint32_t v1 = 0; v1 < p; ++v1)
      for (std::uint32_t v0 = 0; v0 < p; ++v0) {
        auto [w0, w1] = apply2(m, v0, v1, p);
        img[v0 + p * v1] = static_cast<Point>((w0 + t0) % p + p * ((w1 + t1) % p));
        if (v0 || v1) img[pp + v0 + p * v1 - 1] = static_cast<Point>(pp + w0 + p * w1 - 1);
      }
    return Perm(std::move(img));
  };
  const Mat2 I{1, 0, 0, 1};
  Perm x = elem(sl2_x(p), 0, 0), y = elem(sl2_y(p), 0, 0), e1 = elem(I, 1, 0), e2 = elem(I, 0, 1);
  Built b = from_perms({x, y, e1}, degree, "Qd(" + std::to_string(p) + ")");
  b.named["V"] = {e1, e2};
  b.named["complement"] = {x, y};
  b.named["unipotent"] = {x};
  b.named["t"] = {elem(sl2_t(p), 0, 0)};
  return b;
}

Built qdp_sl3(std::uint32_t p) {
  require_odd_prime(p);
  auto f = prime_field(p);
  auto M = [&](std::vector<std::vector<std::uint32_t>> r) { return FqMatrix::from_rows(f, r); };
  FqMatrix x = M({{1, 1, 0}, {0, 1, 0}, {0, 0, 1}});
  FqMatrix y = M({{1, 0, 0}, {1, 1, 0}, {0, 0, 1}});
  FqMatrix t1 = M({{1, 0, 0}, {0, 1, 0}, {1, 0, 1}});
  FqMatrix t2 = M({{1, 0, 0}, {0, 1, 0}, {0, 1, 1}});
  FqMatrix t = M({{0, p - 1, 0}, {1, 0, 0}, {0, 0, 1}});
  Built b = from_matrices({x, y, t1}, VectorAction::all_vectors, "Qd(" + std::to_string(p) + ") in SL3");
  b.named["V"] = {b.action->perm_of(t1), b.action->perm_of(t2)};
  b.named["unipotent"] = {b.action->perm_of(x)};
  b.named["t"] = {b.action->perm_of(t)};
  return b;
}

Built extraspecial(std::uint32_t p) {
  require_odd_prime(p);
  auto f = prime_field(p);
  FqMatrix a = FqMatrix::from_rows(f, {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}});
  FqMatrix c = FqMatrix::from_rows(f, {{1, 0, 0}, {0, 1, 1}, {0, 0, 1}});
  return from_matrices({a, c}, VectorAction::all_vectors, "E(" + std::to_string(p) + "^{1+2})");
}

Built heisenberg_extension(std::uint32_t p, const std::vector<std::vector<std::uint32_t>>& mats, std::string name) {
  require_odd_prime(p);
  const std::uint32_t half = (p + 1) / 2;
  const std::size_t degree = std::size_t(p) * p * p;
  auto code = [p](std::uint32_t v0, std::uint32_t v1, std::uint32_t z) {
    return static_cast<Point>(v0 + p * v1 + std::size_t(p) * p * z);
  };
  // (v, z)(w, y) = (v + w, z + y + omega(v, w) / 2), omega(v, w) = v0 w1 - v1 w0.
  auto right_mult = [&](std::uint32_t w0, std::uint32_t w1, std::uint32_t y) {
    std::vector<Point> img(degree);
    for (std::uint32_t z = 0; z < p; ++z)
      for (std::uint32_t v1 = 0; v1 < p; ++v1)
        for (std::uint32_t v0 = 0; v0 < p; ++v0) {
          const long long om = static_cast<long long>(v0) * w1 - static_cast<long long>(v1) * w0;
          img[code(v0, v1, z)] = code((v0 + w0) % p, (v1 + w1) % p, md(z + y + om * half, p));
        }
    return Perm(std::move(img));
  };
  auto automorphism = [&](const Mat2& m) {
    const std::uint32_t det = md(static_cast<long long>(m[0]) * m[3] - static_cast<long long>(m[1]) * m[2], p);
    if (det == 0) throw BadParameters("singular 2x2 matrix");
    std::vector<Point> img(degree);
    for (std::uint32_t z = 0; z < p; ++z)
      for (std::uint32_t v1 = 0; v1 < p; ++v1)
        for (std::uint32_t v0 = 0; v0 < p; ++v0) {
          auto [w0, w1] = apply2(m, v0, v1, p);
          img[code(v0, v1, z)] = code(w0, w1, md(static_cast<long long>(z) * det, p));
        }
    return Perm(std::move(img));
  };
  Perm a = right_mult(1, 0, 0), bb = right_mult(0, 1, 0);
  std::vector<Perm> gens{a, bb};
  for (const auto& m : mats) {
    if (m.size() != 4) throw BadParameters("expected 2x2 matrices");
    gens.push_back(automorphism({md(m[0], p), md(m[1], p), md(m[2], p), md(m[3], p)}));
  }
  Built b = from_perms(gens, degree, std::move(name));
  b.named["E"] = {a, bb};
  b.named["Z"] = {right_mult(0, 0, 1)};
  b.named["a"] = {a};
  b.named["b"] = {bb};
  for (auto [key, m] : {std::pair{"unipotent", sl2_x(p)}, std::pair{"t", sl2_t(p)}}) {
    Perm g = automorphism(m);
    if (b.group->find(g)) b.named[key] = {g};
  }
  return b;
}

namespace {

struct Rho3 {
  FieldPtr f;
  std::uint32_t rho;
  FqMatrix a, b, x, t;
};

Rho3 rho_matrices(std::uint32_t q) {
  auto f = std::make_shared<FqField>(q);
  if ((q - 1) % 3 != 0) throw BadParameters("3 does not divide q-1 for q = " + std::to_string(q));
  const FqField& F = *f;
  const std::uint32_t r = F.least_of_order(3);
  const std::uint32_t r2 = F.mul(r, r);
  FqMatrix a = FqMatrix::from_rows(f, {{r, 0, 0}, {0, r2, 0}, {0, 0, 1}});
  FqMatrix b = FqMatrix::from_rows(f, {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
  FqMatrix x = FqMatrix::from_rows(f, {{1, 0, 0}, {0, r, 0}, {0, 0, 1}});
  FqMatrix t = FqMatrix::from_rows(f, {{1, 1, 1}, {r, r2, 1}, {r2, r, 1}}).scaled(F.inv(F.sub(1, r)));
  return {f, r, a, b, x, t};
}

void name_rho_model(Built& b, const FqMatrix& a, const FqMatrix& bm, const FqMatrix& x, const FqMatrix& t) {
  const MatrixAction& act = *b.action;
  Perm pa = act.perm_of(a), pb = act.perm_of(bm);
  Perm z = pa.inverse() * pb.inverse() * pa * pb;
  b.named["E"] = {pa, pb};
  b.named["Z"] = {z};
  b.named["a"] = {pa};
  b.named["b"] = {pb};
  b.named["x"] = {act.perm_of(x)};
  b.named["unipotent"] = {act.perm_of(x)};
  b.named["t"] = {act.perm_of(t)};
}

}  // namespace

Built tilde_qdp(std::uint32_t p, std::optional<std::uint32_t> q) {
  require_odd_prime(p);
  if (q) {
    FqField check(*q);
    if ((*q - 1) % p != 0)
      throw BadParameters(std::to_string(p) + " does not divide q-1 for q = " + std::to_string(*q));
  }
  if (p > 3) {
    return heisenberg_extension(p, {{1, 1, 0, 1}, {1, 0, 1, 1}}, "tildeQd(" + std::to_string(p) + ")");
  }
  if (!q) throw BadParameters("the model for p = 3 needs a field size q with 3 | q-1");
  Rho3 m = rho_matrices(*q);
  Built b = from_matrices({m.a, m.b, m.x, m.t}, VectorAction::automatic, "tildeQd(3) over F" + std::to_string(*q));
  name_rho_model(b, m.a, m.b, m.x, m.t);
  return b;
}

Built tilde_qd3_variant(int sign, std::uint32_t q) {
  if (sign != 1 && sign != -1) throw BadParameters("sign must be + or -");
  FqField check(q);
  if ((q - 1) % 9 != 0) throw BadParameters("9 does not divide q-1 for q = " + std::to_string(q));
  Rho3 m = rho_matrices(q);
  const FqField& F = *m.f;
  std::uint32_t theta = 0;
  for (std::uint32_t c = 1; c < q && !theta; ++c)
    if (F.mult_order(c) == 9 && F.pow(c, 3) == m.rho) theta = c;
  const std::uint32_t scal = sign > 0 ? theta : F.inv(theta);
  FqMatrix xs = m.x.scaled(scal);
  const std::string name = std::string("tildeQd") + (sign > 0 ? "+" : "-") + "(3) over F" + std::to_string(q);
  Built b = from_matrices({m.a, m.b, xs, m.t}, VectorAction::automatic, name);
  name_rho_model(b, m.a, m.b, xs, m.t);
  return b;
}

AlternatingEmbedding qdp_in_alternating(std::uint32_t p) {
  Built src = qdp(p);
  const Group& G = *src.group;
  Subgroup S = src.named_subgroup("complement");
  // Right cosets S g, numbered by their least element.
  constexpr Idx kNone = 0xffffffffu;
  std::vector<Idx> coset_of(G.order(), kNone);
  std::vector<Idx> reps;
  for (Idx g = 0; g < G.order(); ++g) {
    if (coset_of[g] != kNone) continue;
    const Idx id = static_cast<Idx>(reps.size());
    reps.push_back(g);
    for (Idx s : S.elems) coset_of[G.mul(s, g)] = id;
  }
  const std::size_t degree = reps.size();
  if (degree > kMaxDegree) throw DegreeCapExceeded("coset action degree too large");
  std::vector<Perm> gens;
  for (Idx h : G.gens()) {
    std::vector<Point> img(degree);
    for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<Point>(coset_of[G.mul(reps[i], h)]);
    gens.push_back(Perm(std::move(img)));
  }
  AlternatingEmbedding out{from_perms(gens, degree, "Qd(" + std::to_string(p) + ") on cosets"), {}, src};
  std::vector<Idx> images;
  for (const auto& g : gens) images.push_back(*out.image.group->find(g));
  auto h = extend_to_hom(src.group, G.gens(), out.image.group, images);
  if (!h) throw Error("coset action is not a homomorphism");
  out.iso = std::move(*h);
  return out;
}

Built symmetric_group(std::size_t n) {
  if (n == 0 || n > kMaxDegree) throw BadParameters("bad degree");
  std::vector<Perm> gens;
  if (n >= 2) {
    std::vector<Point> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<Point>((i + 1) % n);
    gens.push_back(Perm(c));
    std::vector<Point> t(n);
    for (std::size_t i = 0; i < n; ++i) t[i] = static_cast<Point>(i);
    std::swap(t[0], t[1]);
    if (n > 2) gens.push_back(Perm(t));
  }
  return from_perms(gens, n, "S" + std::to_string(n));
}

Built alternating_group(std::size_t n) {
  if (n == 0 || n > kMaxDegree) throw BadParameters("bad degree");
  std::vector<Perm> gens;
  if (n >= 3) {
    std::vector<Point> t(n);
    for (std::size_t i = 0; i < n; ++i) t[i] = static_cast<Point>(i);
    t[0] = 1, t[1] = 2, t[2] = 0;
    gens.push_back(Perm(t));
    if (n > 3) {
      // Long cycle on all points (n odd) or on 1..n-1 (n even), both even.
      std::vector<Point> c(n);
      const std::size_t start = n % 2 ? 0 : 1;
      for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<Point>(i);
      for (std::size_t i = start; i < n; ++i) c[i] = static_cast<Point>(i + 1 < n ? i + 1 : start);
      gens.push_back(Perm(c));
    }
  }
  return from_perms(gens, n, "A" + std::to_string(n));
}

Built affine_group(std::uint32_t q, const std::vector<FqMatrix>& linear, std::string name) {
  if (linear.empty()) throw BadParameters("affine group needs at least one linear generator");
  const FqField& F = linear.front().field();
  const std::size_t n = linear.front().dim();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= q;
    if (total > limits().degree_cap) throw DegreeCapExceeded("q^n exceeds the degree cap");
  }
  if (F.q() != q) throw BadParameters("field mismatch");
  auto act = [&](const FqMatrix& m, const std::vector<std::uint32_t>& t) {
    std::vector<Point> img(total);
    for (std::uint64_t c = 0; c < total; ++c) {
      auto w = m.apply(vector_from_code(F, c, n));
      for (std::size_t i = 0; i < n; ++i) w[i] = F.add(w[i], t[i]);
      img[c] = static_cast<Point>(vector_code(F, w));
    }
    return Perm(std::move(img));
  };
  std::vector<Perm> gens;
  const std::vector<std::uint32_t> zero(n, 0);
  for (const auto& m : linear) gens.push_back(act(m, zero));
  std::vector<Perm> translations;
  const FqMatrix I = FqMatrix::identity(linear.front().field_ptr(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::uint32_t c : F.prime_basis()) {
      std::vector<std::uint32_t> t(n, 0);
      t[i] = c;
      translations.push_back(act(I, t));
    }
  gens.push_back(translations.front());
  Built b = from_perms(gens, total, std::move(name));
  b.named["V"] = translations;
  b.named["complement"] = std::vector<Perm>(gens.begin(), gens.end() - 1);
  return b;
}

DualFormsFactor dual_forms_factor(std::uint32_t p) {
  require_odd_prime(p);
  auto f = prime_field(p);
  const FqField& F = *f;
  const std::size_t d = p + 1;
  // Binary forms of degree k as coefficient vectors over X^{k-i} Y^i.
  auto poly_mul = [&](const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    return r;
  };
  auto module_matrix = [&](const Mat2& g) {
    // X -> g0 X + g1 Y, Y -> g2 X + g3 Y.
    const std::vector<std::uint32_t> X{g[0], g[1]}, Y{g[2], g[3]};
    FqMatrix m(f, d);
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<std::uint32_t> r{1};
      for (std::size_t k = 0; k < p - i; ++k) r = poly_mul(r, X);
      for (std::size_t k = 0; k < i; ++k) r = poly_mul(r, Y);
      for (std::size_t k = 0; k < d; ++k) m.at(i, k) = r[k];
    }
    return m;
  };
  DualFormsFactor out;
  out.p = p;
  out.submodule_invariant = true;
  for (const Mat2& g : {sl2_x(p), sl2_y(p)}) {
    FqMatrix D = module_matrix(g).inverse().transpose();
    for (std::size_t i = 1; i + 1 < d; ++i)
      if (D.at(i, 0) != 0 || D.at(i, p) != 0) out.submodule_invariant = false;
    out.quotient_gens.push_back(FqMatrix::from_rows(f, {{D.at(0, 0), D.at(0, p)}, {D.at(p, 0), D.at(p, p)}}));
    out.module_gens.push_back(std::move(D));
  }
  out.quotient_irreducible = true;
  for (std::uint32_t line = 0; line <= p; ++line) {
    std::vector<std::uint32_t> v = line == p ? std::vector<std::uint32_t>{0, 1} : std::vector<std::uint32_t>{1, line};
    bool stable = true;
    for (const auto& m : out.quotient_gens) {
      auto w = m.apply(v);
      if (F.sub(F.mul(w[0], v[1]), F.mul(w[1], v[0])) != 0) stable = false;
    }
    if (stable) out.quotient_irreducible = false;
  }
  out.acting_order = as_permutation_group(out.quotient_gens, VectorAction::all_vectors).group->order();
  out.factor = affine_group(p, out.quotient_gens, "dual forms factor (" + std::to_string(p) + ")");
  return out;
}

std::vector<std::string> recipe_kinds() {
  return {"qdp",          "qdp_sl3",   "extraspecial",    "tilde_qdp",        "tilde_qd3_minus",
          "tilde_qd3_plus", "qdp_in_alternating", "classical", "symmetric",   "alternating",
          "affine_gl",    "extraspecial_klein", "extraspecial_q8", "dual_forms_factor"};
}

Built build_recipe(const Recipe& r) {
  const std::string& k = r.kind;
  if (k == "qdp") return qdp(r.p);
  if (k == "qdp_sl3") return qdp_sl3(r.p);
  if (k == "extraspecial") return extraspecial(r.p);
  if (k == "tilde_qdp") return tilde_qdp(r.p, r.q ? std::optional<std::uint32_t>(r.q) : std::nullopt);
  if (k == "tilde_qd3_minus") return tilde_qd3_variant(-1, r.q);
  if (k == "tilde_qd3_plus") return tilde_qd3_variant(1, r.q);
  if (k == "qdp_in_alternating") return qdp_in_alternating(r.p).image;
  if (k == "classical") {
    auto fam = family_from_name(r.family);
    if (!fam) throw BadParameters("unknown classical family " + r.family);
    return classical_group(*fam, r.n, r.q);
  }
  if (k == "symmetric") return symmetric_group(r.n);
  if (k == "alternating") return alternating_group(r.n);
  if (k == "affine_gl") {
    Built gl = classical_group(Family::GL, r.n, r.q);
    return affine_group(r.q, gl.matrices, std::to_string(r.q) + "^" + std::to_string(r.n) + ":GL");
  }
  if (k == "extraspecial_klein") {
    const std::uint32_t p = r.p;
    return heisenberg_extension(p, {{p - 1, 0, 0, 1}, {1, 0, 0, p - 1}}, "E(" + std::to_string(p) + "^{1+2}):2^2");
  }
  if (k == "extraspecial_q8") {
    if (r.p != 3) throw BadParameters("extraspecial_q8 is defined for p = 3");
    return heisenberg_extension(3, {{0, 2, 1, 0}, {1, 1, 1, 2}}, "E(3^{1+2}):Q8");
  }
  if (k == "dual_forms_factor") return dual_forms_factor(r.p).factor;
  throw BadParameters("unknown recipe " + k);
}

}  // namespace pstab

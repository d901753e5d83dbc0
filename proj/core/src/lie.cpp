#include "pstab/lie.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "lie_tables.hpp"
#include "pstab/config.hpp"
#include "pstab/constructions.hpp"
#include "pstab/errors.hpp"
#include "pstab/involvement.hpp"
#include "pstab/subgroups.hpp"

namespace pstab::lie {

namespace mp = boost::multiprecision;

std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  const std::uint64_t r = smallest_prime(q);
  unsigned k = 0;
  while (q % r == 0) {
    q /= r;
    ++k;
  }
  if (q != 1) return std::nullopt;
  return std::make_pair(r, k);
}

unsigned e_p(std::uint64_t q, std::uint64_t p) {
  if (!is_prime(p)) throw BadParameters("p must be prime");
  if (q % p == 0) throw BadParameters("p divides q");
  const unsigned __int128 qm = q % p;
  unsigned __int128 x = qm;
  unsigned e = 1;
  while (x != 1) {
    x = x * qm % p;
    ++e;
  }
  return e;
}

unsigned valuation(const BigInt& n, std::uint64_t p) {
  if (n == 0) throw BadParameters("valuation of zero");
  BigInt m = n;
  unsigned v = 0;
  while (m % p == 0) {
    m /= p;
    ++v;
  }
  return v;
}

BigInt p_part(const BigInt& n, std::uint64_t p) { return mp::pow(BigInt(p), valuation(n, p)); }

BigInt cyclotomic_value(unsigned m, const BigInt& q) {
  if (m == 0) throw BadParameters("cyclotomic index must be positive");
  BigInt v = mp::pow(q, m) - 1;
  for (unsigned d = 1; d < m; ++d)
    if (m % d == 0) v /= cyclotomic_value(d, q);
  return v;
}

namespace {

BigInt qpow(std::uint64_t q, unsigned k) { return mp::pow(BigInt(q), k); }

// Orders of the full groups; n is the dimension for gl/gu, the rank otherwise.
BigInt gl(unsigned n, std::uint64_t q) {
  BigInt r = qpow(q, n * (n - 1) / 2);
  for (unsigned i = 1; i <= n; ++i) r *= qpow(q, i) - 1;
  return r;
}
BigInt gu(unsigned n, std::uint64_t q) {
  BigInt r = qpow(q, n * (n - 1) / 2);
  for (unsigned i = 1; i <= n; ++i) r *= (i % 2 ? qpow(q, i) + 1 : qpow(q, i) - 1);
  return r;
}
BigInt sp(unsigned m, std::uint64_t q) {
  BigInt r = qpow(q, m * m);
  for (unsigned i = 1; i <= m; ++i) r *= qpow(q, 2 * i) - 1;
  return r;
}
// O_{2m+1}(q); for even q it coincides with Sp_{2m}(q).
BigInt o_odd(unsigned m, std::uint64_t q) { return q % 2 ? 2 * sp(m, q) : sp(m, q); }
BigInt o_even(unsigned m, std::uint64_t q, int sign) {
  BigInt r = 2 * qpow(q, m * (m - 1));
  for (unsigned i = 1; i < m; ++i) r *= qpow(q, 2 * i) - 1;
  r *= sign > 0 ? qpow(q, m) - 1 : qpow(q, m) + 1;
  return r;
}

std::uint64_t gcd_big(std::uint64_t a, const BigInt& b) {
  return static_cast<std::uint64_t>(mp::gcd(BigInt(a), b));
}

const detail::ExceptionalEntry& exceptional_entry(const std::string& type) {
  for (const auto& e : detail::exceptional_entries())
    if (e.type == type) return e;
  throw BadParameters("unknown exceptional type " + type);
}

BigInt exceptional(const std::string& type, std::uint64_t q) {
  const auto& e = exceptional_entry(type);
  BigInt r = qpow(q, e.b.q_exponent);
  for (auto [m, k] : e.b.r) r *= mp::pow(cyclotomic_value(m, BigInt(q)), k);
  if (e.centre == 3) r /= std::gcd<std::uint64_t>(3, q - 1);
  if (e.centre == -3) r /= std::gcd<std::uint64_t>(3, q + 1);
  if (e.centre == 2) r /= std::gcd<std::uint64_t>(2, q - 1);
  return r;
}

}  // namespace

BigInt group_order(const std::string& f, unsigned n, std::uint64_t q) {
  if (!prime_power(q)) throw BadParameters("q must be a prime power");
  const bool odd_q = q % 2 == 1;
  auto need = [&](bool ok, const char* what) {
    if (!ok) throw BadParameters(f + ": " + what);
  };
  if (f == "GL" || f == "SL" || f == "PGL" || f == "PSL") {
    need(n >= 1, "dimension must be positive");
    BigInt r = gl(n, q);
    if (f == "GL") return r;
    r /= q - 1;
    if (f == "PSL") r /= std::gcd<std::uint64_t>(n, q - 1);
    return r;
  }
  if (f == "GU" || f == "U" || f == "SU" || f == "PGU" || f == "PSU") {
    need(n >= 1, "dimension must be positive");
    BigInt r = gu(n, q);
    if (f == "GU" || f == "U") return r;
    r /= q + 1;
    if (f == "PSU") r /= std::gcd<std::uint64_t>(n, q + 1);
    return r;
  }
  if (f == "Sp" || f == "PSp") {
    need(n >= 2 && n % 2 == 0, "dimension must be even");
    BigInt r = sp(n / 2, q);
    return f == "PSp" && odd_q ? r / 2 : r;
  }
  if (f == "O" || f == "SO" || f == "Omega") {
    need(n >= 3 && n % 2 == 1, "dimension must be odd");
    BigInt r = o_odd((n - 1) / 2, q);
    if (f == "O" || !odd_q) return r;
    return f == "SO" ? r / 2 : r / 4;
  }
  if (f == "O+" || f == "O-" || f == "SO+" || f == "SO-") {
    need(n >= 2 && n % 2 == 0, "dimension must be even");
    BigInt r = o_even(n / 2, q, f.back() == '+' ? 1 : -1);
    return f[0] == 'S' && odd_q ? r / 2 : r;
  }
  if (f == "B" || f == "C") {
    need(n >= 1, "rank must be positive");
    return sp(n, q) / (odd_q ? 2 : 1);
  }
  if (f == "D" || f == "2D") {
    need(n >= 2, "rank must be at least 2");
    const int sign = f == "D" ? 1 : -1;
    BigInt r = o_even(n, q, sign) / 2;
    const BigInt c = sign > 0 ? qpow(q, n) - 1 : qpow(q, n) + 1;
    return r / gcd_big(4, c);
  }
  if (f == "2F4'") {
    need(q == 2, "only q = 2");
    return exceptional("2F4", 2) / 2;
  }
  return exceptional(f, q);
}

const CyclotomicOrder& exceptional_order(const std::string& type) { return exceptional_entry(type).b; }

std::vector<std::string> exceptional_types() {
  std::vector<std::string> out;
  for (const auto& e : detail::exceptional_entries()) out.push_back(e.type);
  return out;
}

unsigned weyl_sylow_exponent(const std::string& type, std::uint64_t q, std::uint64_t p) {
  const unsigned m0 = e_p(q, p);
  unsigned d = 0;
  for (auto [m, r] : exceptional_order(type).r) {
    if (m % m0) continue;
    unsigned k = m / m0;
    if (k == 1 || k % p) continue;
    while (k % p == 0) k /= p;
    if (k == 1) d += r;
  }
  return d;
}

// ---- identities ----------------------------------------------------------

namespace {

const std::vector<std::pair<Identity, const char*>>& identity_names() {
  static const std::vector<std::pair<Identity, const char*>> t = {
      {Identity::unitary_as_linear, "unitary-as-linear"},
      {Identity::symplectic_odd_e, "symplectic-odd-e"},
      {Identity::symplectic_even_e, "symplectic-even-e"},
      {Identity::symplectic_unitary, "symplectic-unitary"},
      {Identity::odd_orthogonal, "odd-orthogonal"},
      {Identity::even_orthogonal_either, "even-orthogonal-either"},
      {Identity::even_orthogonal_both, "even-orthogonal-both"},
      {Identity::even_orthogonal_sylow, "even-orthogonal-sylow"},
      {Identity::unitary_half_e, "unitary-half-e"},
      {Identity::quotient_coprime, "quotient-coprime"},
      {Identity::gcd_of_powers, "gcd-of-powers"},
      {Identity::order_of_q, "order-of-q"},
  };
  return t;
}

}  // namespace

std::string identity_name(Identity id) {
  for (auto [i, s] : identity_names())
    if (i == id) return s;
  return "?";
}

std::optional<Identity> identity_from_name(const std::string& s) {
  for (auto [i, n] : identity_names())
    if (s == n) return i;
  return std::nullopt;
}

std::vector<Identity> all_identities() {
  std::vector<Identity> out;
  for (auto [i, s] : identity_names()) out.push_back(i);
  return out;
}

bool identity_applies(Identity id, unsigned n, std::uint64_t q, std::uint64_t p) {
  if (n < 1 || !is_prime(p) || p < 3 || q % p == 0 || !prime_power(q)) return false;
  const unsigned e = e_p(q, p);
  switch (id) {
    case Identity::unitary_as_linear: return true;
    case Identity::symplectic_odd_e: return e % 2 == 1;
    case Identity::symplectic_even_e: return e % 2 == 0;
    case Identity::symplectic_unitary: return e % 2 == 0 && (2 * n) % e == 0;
    case Identity::odd_orthogonal: return q % 2 == 1;
    case Identity::even_orthogonal_either:
    case Identity::even_orthogonal_sylow: return n > 3;
    case Identity::even_orthogonal_both: return n > 3 && (2 * n) % e != 0;
    case Identity::unitary_half_e: return 2 * n == e;
    case Identity::quotient_coprime:
    case Identity::order_of_q: return n == 1;
    case Identity::gcd_of_powers: return true;
  }
  return false;
}

bool p_part_identity_check(Identity id, unsigned n, std::uint64_t q, std::uint64_t p) {
  if (!identity_applies(id, n, q, p))
    throw BadParameters(identity_name(id) + ": case condition fails for n=" + std::to_string(n) +
                        " q=" + std::to_string(q) + " p=" + std::to_string(p));
  const unsigned e = e_p(q, p);
  auto v = [p](const BigInt& x) { return valuation(x, p); };
  switch (id) {
    case Identity::unitary_as_linear:
      if (e % 4 == 2) return v(gu(n, q)) == v(gl(n, q * q));
      return v(gu(n, q)) == v(gl(n / 2, q * q));
    case Identity::symplectic_odd_e: return v(sp(n, q)) == v(gl(n, q));
    case Identity::symplectic_even_e: return v(sp(n, q)) == v(gl(2 * n, q));
    case Identity::symplectic_unitary: {
      std::uint64_t qe = 1;
      for (unsigned i = 0; i < e / 2; ++i) qe *= q;
      return v(sp(n, q)) == v(gu(2 * n / e, qe));
    }
    case Identity::odd_orthogonal:
      return v(o_odd(n, q)) == (e % 2 == 0 ? v(gl(2 * n + 1, q)) : v(gl(n, q)));
    case Identity::even_orthogonal_either:
      for (int s : {1, -1}) {
        const unsigned x = v(o_even(n, q, s));
        if (x != v(o_odd(n, q)) && x != v(o_odd(n - 1, q))) return false;
      }
      return true;
    case Identity::even_orthogonal_both:
      for (int s : {1, -1}) {
        const unsigned x = v(o_even(n, q, s));
        if (x != v(o_odd(n, q)) || x != v(o_odd(n - 1, q))) return false;
      }
      return true;
    case Identity::even_orthogonal_sylow:
      for (int s : {1, -1}) {
        const bool same = v(o_even(n, q, s)) == v(o_odd(n, q));
        const bool predicted = (2 * n) % e != 0 || (s > 0 ? n % e == 0 : n % e != 0);
        if (same != predicted) return false;
      }
      return true;
    case Identity::unitary_half_e: return (v(gu(n, q)) >= 1) == (n % 2 == 1);
    case Identity::quotient_coprime: {
      const BigInt base = qpow(q, e) - 1;
      for (unsigned i = 1; i < p; ++i) {
        const BigInt num = qpow(q, i * e) - 1;
        if (num % base != 0 || (num / base) % p == 0) return false;
      }
      return true;
    }
    case Identity::gcd_of_powers: {
      // The exponent pair runs over m <= n; p plays no part.
      const BigInt a = qpow(q, n) - 1;
      for (unsigned m = 1; m <= n; ++m)
        if (mp::gcd(qpow(q, m) - 1, a) != qpow(q, std::gcd(m, n)) - 1) return false;
      return true;
    }
    case Identity::order_of_q: {
      if ((p - 1) % e != 0 || (qpow(q, e) - 1) % p != 0) return false;
      for (unsigned i = 1; i < e; ++i)
        if ((qpow(q, i) - 1) % p == 0) return false;
      return true;
    }
  }
  return false;
}

IdentityGridReport identity_grid(unsigned max_n, std::uint64_t max_q, const std::vector<std::uint64_t>& primes) {
  IdentityGridReport rep;
  for (Identity id : all_identities()) {
    IdentityGridReport::Row row{id};
    for (std::uint64_t p : primes)
      for (std::uint64_t q = 2; q <= max_q; ++q)
        for (unsigned n = 1; n <= max_n; ++n) {
          if (!identity_applies(id, n, q, p)) continue;
          ++row.checked;
          if (!p_part_identity_check(id, n, q, p)) {
            ++row.failed;
            rep.failures.push_back(identity_name(id) + " n=" + std::to_string(n) + " q=" + std::to_string(q) +
                                   " p=" + std::to_string(p));
          }
        }
    rep.rows.push_back(row);
  }
  return rep;
}

// ---- classifier ----------------------------------------------------------

std::string witness_name(Witness w, std::uint64_t p) {
  const std::string ps = std::to_string(p);
  switch (w) {
    case Witness::none: return "none";
    case Witness::qd: return "Qd(" + ps + ")";
    case Witness::qd_tilde: return "tilde-Qd(" + ps + ")";
    case Witness::qd_tilde_minus: return "tilde-Qd-minus(3)";
    case Witness::he_type: return "3^2:(2^2.SL2(3))";
  }
  return "?";
}

std::vector<std::string> sporadic_names() {
  std::vector<std::string> out;
  for (const auto& e : detail::sporadic_entries()) out.push_back(e.name);
  return out;
}

namespace {

bool is_exceptional(const std::string& f) {
  for (const auto& e : detail::exceptional_entries())
    if (e.type == f) return true;
  return false;
}

// q = r^k with r = base and k odd, k >= 3 when strict.
bool odd_power_of(std::uint64_t q, std::uint64_t base, bool strict) {
  auto pp = prime_power(q);
  return pp && pp->first == base && pp->second % 2 == 1 && (!strict || pp->second >= 3);
}

// Name under which the order is computed.
std::string order_family(const ClassifierQuery& q) {
  if (q.family == "PSL" || q.family == "PSU" || q.family == "PSp") return q.family;
  if (q.family == "2F4" && q.q == 2) return "2F4'";
  return q.family;
}

}  // namespace

ClassifierQuery validate(const ClassifierQuery& in) {
  ClassifierQuery q = in;
  auto bad = [&](const std::string& what) { throw BadParameters(q.family + ": " + what); };
  if (q.p < 3 || !is_prime(q.p)) throw BadParameters("p must be an odd prime");
  if (q.family == "A" || q.family == "Alt") q.family = "alternating";
  if (q.family == "alternating") {
    if (q.n < 5) bad("degree must be at least 5");
    q.q = 0;
    return q;
  }
  if (q.family == "sporadic") {
    const auto* e = detail::find_sporadic(q.name);
    if (!e) throw BadParameters("unknown sporadic group '" + q.name + "'");
    q.name = e->name;
    q.n = 0;
    q.q = 0;
    return q;
  }
  if (!prime_power(q.q)) bad("q must be a prime power");
  if (q.family == "L") q.family = "PSL";
  if (q.family == "U") q.family = "PSU";
  if (q.family == "S") q.family = "PSp";
  if (q.family == "Omega") {
    if (q.n < 5 || q.n % 2 == 0) bad("dimension must be odd and at least 5");
    q.family = "B";
    q.n = (q.n - 1) / 2;
  } else if (q.family == "Omega+" || q.family == "Omega-") {
    if (q.n < 8 || q.n % 2) bad("dimension must be even and at least 8");
    q.family = q.family == "Omega+" ? "D" : "2D";
    q.n /= 2;
  }
  if (q.family == "PSU" && q.n == 2) q.family = "PSL";
  if (q.family == "PSL") {
    if (q.n < 2) bad("dimension must be at least 2");
    if (q.n == 2 && q.q < 4) bad("PSL2(q) needs q >= 4");
  } else if (q.family == "PSU") {
    if (q.n < 3) bad("dimension must be at least 3");
    if (q.n == 3 && q.q == 2) bad("PSU3(2) is soluble");
  } else if (q.family == "PSp") {
    if (q.n < 4 || q.n % 2) bad("dimension must be even and at least 4");
    if (q.n == 4 && q.q == 2) bad("PSp4(2) is not simple");
  } else if (q.family == "B") {
    if (q.n < 2) bad("rank must be at least 2");
    if (q.q % 2 == 0) bad("q must be odd");
  } else if (q.family == "C") {
    if (q.n < 2) bad("rank must be at least 2");
    if (q.n == 2 && q.q == 2) bad("C2(2) is not simple");
  } else if (q.family == "D" || q.family == "2D") {
    if (q.n < 4) bad("rank must be at least 4");
  } else if (is_exceptional(q.family)) {
    q.n = 0;
    if (q.family == "G2" && q.q == 2) bad("G2(2) is not simple");
    if (q.family == "2B2" && !odd_power_of(q.q, 2, true)) bad("q must be 2^(2m+1), m > 0");
    if (q.family == "2G2" && !odd_power_of(q.q, 3, true)) bad("q must be 3^(2m+1), m > 0");
    if (q.family == "2F4" && !odd_power_of(q.q, 2, false)) bad("q must be 2^(2m+1)");
  } else {
    throw BadParameters("unknown family '" + in.family + "'");
  }
  return q;
}

BigInt simple_order(const ClassifierQuery& in) {
  const ClassifierQuery q = validate(in);
  if (q.family == "alternating") {
    BigInt r = 1;
    for (unsigned i = 3; i <= q.n; ++i) r *= i;
    return r;
  }
  if (q.family == "sporadic") {
    BigInt r = 1;
    for (auto [pr, k] : detail::find_sporadic(q.name)->order) r *= mp::pow(BigInt(pr), k);
    return r;
  }
  return group_order(order_family(q), q.n, q.q);
}

namespace {

struct AbelianAnswer {
  bool abelian = false;
  std::string why;
};

// The iff criteria for Lie type in characteristic prime to p.
AbelianAnswer abelian_non_defining(const ClassifierQuery& q) {
  const std::uint64_t p = q.p;
  const unsigned n = q.n;
  const std::uint64_t e = e_p(q.q, p), ep = e * p;
  const std::string& f = q.family;
  if (f == "PSL") {
    if (p == 3 && n == 3 && e == 1) return {(q.q - 1) % 9 != 0, "PSL3 with 3 | q-1: abelian iff 9 does not divide q-1"};
    return {n < ep, "linear: abelian iff n < e*p"};
  }
  if (f == "PSU") {
    if (p == 3 && n == 3 && e == 2) return {(q.q + 1) % 9 != 0, "PSU3 with 3 | q+1: abelian iff 9 does not divide q+1"};
    if (e % 2) return {n < 2 * ep, "unitary, e odd: abelian iff n < 2*e*p"};
    if (e % 4 == 0) return {n < ep, "unitary, 4 | e: abelian iff n < e*p"};
    return {2 * n < ep, "unitary, e = 2 mod 4: abelian iff n < e*p/2"};
  }
  if (f == "PSp" || f == "C" || f == "B") {
    const unsigned m = f == "PSp" ? n / 2 : n;
    if (e % 2) return {m < ep, "symplectic/orthogonal odd dimension, e odd: abelian iff rank < e*p"};
    return {2 * m < ep, "symplectic/orthogonal odd dimension, e even: abelian iff rank < e*p/2"};
  }
  if (f == "D") {
    if (e % 2) return {n < ep, "orthogonal plus type, e odd: abelian iff n < e*p"};
    return {2 * (n - 1) < ep, "orthogonal plus type, e even: abelian iff n-1 < e*p/2"};
  }
  if (f == "2D") {
    if (e % 2) return {n - 1 < ep, "orthogonal minus type, e odd: abelian iff n-1 < e*p"};
    return {2 * n < ep, "orthogonal minus type, e even: abelian iff n < e*p/2"};
  }
  const std::string type = f;
  const unsigned d = weyl_sylow_exponent(type, q.q, p);
  return {d == 0, "exceptional: Weyl-group Sylow exponent " + std::to_string(d)};
}

// The Abelian-Sylow list read literally. The second member is the value of n
// at which an inequality of the relevant clause changes from strict to not.
struct Literal {
  bool abelian = false;
  std::vector<std::uint64_t> bounds;
};

Literal literal_table(const ClassifierQuery& q) {
  const std::uint64_t p = q.p, qq = q.q, n = q.n;
  const std::uint64_t e = e_p(qq, p), ep = e * p;
  const std::string& f = q.family;
  if (p == 3) {
    if (f == "PSL") {
      if (n == 2) return {qq > 2, {}};
      if (n == 3 && ((qq - 1) % 9 == 3 || (qq - 1) % 9 == 6)) return {true, {}};
      return {(qq + 1) % 3 == 0 && n > 2 && n < 6, {2, 6}};
    }
    if (f == "PSU") {
      if (n == 3 && qq > 2 && ((qq + 1) % 9 == 3 || (qq + 1) % 9 == 6)) return {true, {}};
      return {(qq - 1) % 3 == 0 && n > 2 && n < 6, {2, 6}};
    }
    if (f == "PSp") return {n == 4, {}};
    if (f == "B" || f == "C") return {n == 2, {}};
    return {f == "2B2", {}};
  }
  if (f == "2B2" || f == "G2" || f == "2G2" || f == "2F4" || f == "3D4" || f == "F4") return {true, {}};
  if (f == "E6") return {p > 5 || (qq - 1) % 5 != 0, {}};
  if (f == "2E6") return {p > 5 || (qq + 1) % 5 != 0, {}};
  if (f == "E7") return {p > 7 || (qq * qq - 1) % p != 0, {}};
  if (f == "E8") return {p > 7 || (p == 7 && (qq * qq - 1) % 7 != 0) || p == 5, {}};
  if (f == "PSL") return {n < ep, {ep}};
  if (f == "PSU") {
    if (e % 2) return {n > 2 && n < 2 * ep, {2, 2 * ep}};
    if (e % 4 == 0) return {n > 2 && n < ep, {2, ep}};
    return {2 * n < ep, {ep / 2}};
  }
  auto clause_b = [&](std::uint64_t m) -> Literal {
    if (qq % 2 == 0) return {false, {}};
    if (e % 2) return {m > 1 && m < ep, {1, ep}};
    return {m > 1 && 2 * m < ep, {1, ep / 2}};
  };
  auto clause_c = [&](std::uint64_t m) -> Literal {
    if (e % 2) return {m > 2 && m < ep, {2, ep}};
    return {m > 2 && 2 * m < ep, {2, ep / 2}};
  };
  if (f == "B") return clause_b(n);
  if (f == "C") return clause_c(n);
  if (f == "PSp") {
    Literal c = clause_c(n / 2);
    if (n == 4) {
      const Literal b = clause_b(2);
      c.abelian = c.abelian || b.abelian;
      c.bounds.insert(c.bounds.end(), b.bounds.begin(), b.bounds.end());
    }
    return c;
  }
  if (f == "D") {
    if (e % 2) return {n > 3 && n < ep, {3, ep}};
    return {n > 4 && 2 * n <= ep, {4, ep / 2}};
  }
  if (f == "2D") {
    if (e % 2) return {n > 3 && n <= ep, {3, ep}};
    return {n > 4 && 2 * n < ep, {4, ep / 2}};
  }
  return {false, {}};
}

// Rank-type of a classical family in defining characteristic.
ClassifierVerdict defining(const ClassifierQuery& q, ClassifierVerdict v) {
  v.defining_characteristic = true;
  const std::string& f = q.family;
  const bool a1 = f == "PSL" && q.n == 2;
  const bool twisted_a2 = f == "PSU" && q.n == 3;
  const bool ree = f == "2G2";
  v.sylow_abelian = a1;
  if (a1 || twisted_a2 || ree) {
    v.involves_qdp = false;
    v.rationale = "defining characteristic: types A1, 2A2 and 2G2 do not involve Qd(p)";
    return v;
  }
  v.involves_qdp = true;
  const bool b2 = (f == "PSp" && q.n == 4) || ((f == "B" || f == "C") && q.n == 2);
  if (b2 || f == "PSU") {
    v.minimal_witness = Witness::qd_tilde;
    v.rationale = "defining characteristic: types B2 and 2An (n >= 3) contain tilde-Qd(p)";
  } else {
    v.minimal_witness = Witness::qd;
    v.rationale = "defining characteristic: contains Qd(p) through a parabolic of type A2";
  }
  return v;
}

ClassifierVerdict non_defining(const ClassifierQuery& q, ClassifierVerdict v) {
  const AbelianAnswer a = abelian_non_defining(q);
  v.sylow_abelian = a.abelian;
  const Literal lit = literal_table(q);
  v.literal_table = lit.abelian;
  v.boundary = lit.abelian != a.abelian ||
               std::find(lit.bounds.begin(), lit.bounds.end(), std::uint64_t(q.n)) != lit.bounds.end();
  if (a.abelian) {
    v.rationale = "non-defining characteristic, abelian Sylow (" + a.why + ")";
    return v;
  }
  const std::uint64_t p = q.p, qq = q.q;
  const std::string& f = q.family;
  v.involves_qdp = true;
  v.minimal_witness = Witness::qd_tilde;
  v.rationale = "non-defining characteristic, non-abelian Sylow: contains tilde-Qd(p)";
  if (f == "PSL" && q.n == p && (qq - 1) % p == 0) {
    v.minimal_witness = Witness::qd;
    v.rationale = "non-defining characteristic: PSLp(q) with p | q-1 contains Qd(p)";
  } else if (f == "PSU" && q.n == p && (qq + 1) % p == 0) {
    v.minimal_witness = Witness::qd;
    v.rationale = "non-defining characteristic: PSUp(q) with p | q+1 contains Qd(p)";
  } else if (p == 3 && (f == "3D4" || f == "F4" || f == "2F4")) {
    v.minimal_witness = Witness::qd;
    v.rationale = "non-defining characteristic: 3D4, F4 and 2F4 contain Qd(3) at p = 3";
  } else if (p == 3 && f == "G2") {
    if ((qq * qq - 1) % 9 == 0) {
      v.minimal_witness = Witness::qd_tilde_minus;
      v.rationale = "non-defining characteristic: G2(q) with 9 | q^2-1 contains tilde-Qd-minus(3)";
    } else {
      v.involves_qdp = false;
      v.minimal_witness = Witness::none;
      v.rationale = "non-defining characteristic: G2(q) with 9 not dividing q^2-1 has no Qd(3) section";
    }
  }
  return v;
}

}  // namespace

ClassifierVerdict qdp_verdict(const ClassifierQuery& in) {
  const ClassifierQuery q = validate(in);
  ClassifierVerdict v;
  v.sylow_exponent = valuation(simple_order(q), q.p);
  if (q.family == "alternating") {
    v.involves_qdp = q.n >= q.p * q.p;
    v.sylow_abelian = !v.involves_qdp;
    v.minimal_witness = v.involves_qdp ? Witness::qd : Witness::none;
    v.rationale = v.involves_qdp ? "alternating: n >= p^2, Qd(p) embeds in A_{p^2}" : "alternating: n < p^2, abelian Sylow";
  } else if (q.family == "sporadic") {
    const auto* e = detail::find_sporadic(q.name);
    const auto it = e->involved.find(q.p);
    v.involves_qdp = it != e->involved.end();
    v.minimal_witness = v.involves_qdp ? it->second : Witness::none;
    v.sylow_abelian = v.sylow_exponent <= 2 || std::count(e->abelian_large.begin(), e->abelian_large.end(), q.p);
    v.rationale = std::string("sporadic table: ") + (v.involves_qdp ? "involves Qd(p)" : "does not involve Qd(p)") +
                  (v.sylow_abelian ? ", abelian Sylow" : "");
  } else if (q.q % q.p == 0) {
    v = defining(q, v);
  } else if (v.sylow_exponent == 0) {
    v.sylow_abelian = true;
    v.rationale = "p does not divide the group order";
  } else {
    v = non_defining(q, v);
  }
  v.p_stable = !v.involves_qdp;
  return v;
}

bool sylow_abelian_verdict(const ClassifierQuery& q) { return qdp_verdict(q).sylow_abelian; }

// ---- cross-check against constructed groups --------------------------------

Crosscheck verdict_crosscheck(const ClassifierQuery& in) {
  const ClassifierQuery q = validate(in);
  Crosscheck c;
  const ClassifierVerdict v = qdp_verdict(q);
  c.table_abelian = v.sylow_abelian;
  c.table_involves = v.involves_qdp;
  const BigInt order = simple_order(q);
  if (order > limits().order_cap) {
    c.skipped = "order " + order.str() + " exceeds the order cap";
    return c;
  }
  GroupPtr G;
  try {
    if (q.family == "alternating") {
      G = alternating_group(q.n).group;
    } else if (q.family == "PSL" || q.family == "PSU") {
      if (q.q > std::numeric_limits<std::uint32_t>::max()) throw BadParameters("q too large");
      G = classical_group(q.family == "PSL" ? Family::PSL : Family::PSU, q.n, std::uint32_t(q.q)).group;
    } else if (q.family == "PSp" || ((q.family == "B" || q.family == "C") && q.n == 2)) {
      const std::size_t dim = q.family == "PSp" ? q.n : 4;
      GroupPtr S = classical_group(Family::Sp, dim, std::uint32_t(q.q)).group;
      G = quotient(S, center(*S, whole(*S))).group;
    } else {
      c.skipped = "no construction for family " + q.family;
      return c;
    }
  } catch (const CapExceeded& ex) {
    c.skipped = ex.what();
    return c;
  }
  c.constructed = true;
  c.order_matches = BigInt(G->order()) == order;
  c.direct_abelian = is_abelian(*G, sylow(*G, q.p));
  c.direct_involves = involves_qdp(G, std::uint32_t(q.p)).has_value();
  return c;
}

ClassifierQuery random_query(std::mt19937_64& rng) {
  static const std::vector<std::string> families = {
      "alternating", "PSL", "PSU", "PSp", "Omega", "Omega+", "Omega-", "B",   "C",   "D",   "2D", "E6",
      "E7",          "E8",  "2E6", "F4",  "2F4",   "G2",     "2G2",    "3D4", "2B2", "sporadic"};
  static const std::vector<std::uint64_t> primes = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43};
  static const std::vector<std::uint64_t> qs = {2,  3,  4,  5,  7,  8,  9,  11, 13, 16,  17,  19,  23, 25,
                                                27, 29, 31, 32, 37, 41, 43, 49, 64, 81, 125, 128, 243, 512};
  auto pick = [&](const auto& v) { return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)]; };
  const auto sporadic = sporadic_names();
  for (;;) {
    ClassifierQuery q;
    q.family = pick(families);
    q.p = pick(primes);
    q.q = pick(qs);
    q.n = std::uniform_int_distribution<unsigned>(2, 24)(rng);
    if (q.family == "sporadic") q.name = pick(sporadic);
    try {
      return validate(q);
    } catch (const BadParameters&) {
    }
  }
}

}  // namespace pstab::lie

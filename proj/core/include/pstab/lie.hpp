#pragma once
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace pstab::lie {

using BigInt = boost::multiprecision::cpp_int;

// (r, k) with q = r^k and r prime, or nullopt.
std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t q);

// Multiplicative order of q modulo p. Throws BadParameters if p is not prime
// or p | q.
unsigned e_p(std::uint64_t q, std::uint64_t p);

unsigned valuation(const BigInt& n, std::uint64_t p);
BigInt p_part(const BigInt& n, std::uint64_t p);
BigInt cyclotomic_value(unsigned m, const BigInt& q);

// Exact group orders. Matrix families take the dimension n and follow the
// classical_group conventions: GL SL PGL PSL, GU (alias U) SU PGU PSU with q
// the order of the fixed field, Sp PSp (n even), O SO Omega (n odd),
// O+ O- SO+ SO- (n even). Lie types take the rank: B C D 2D; the exceptional
// types G2 F4 E6 E7 E8 2E6 3D4 2B2 2G2 2F4 ignore n. "2F4'" is the Tits group.
BigInt group_order(const std::string& family, unsigned n, std::uint64_t q);

// b(G) = prod Phi_m(q)^{r_m}, the order with the q-power and the centre
// divisor stripped off.
struct CyclotomicOrder {
  unsigned q_exponent = 0;
  std::map<unsigned, unsigned> r;  // m -> r_m
};
const CyclotomicOrder& exceptional_order(const std::string& type);
std::vector<std::string> exceptional_types();
// d with |P_W| = p^d: the sum of r_m over m = p^k * e_p(q), k >= 1.
unsigned weyl_sylow_exponent(const std::string& type, std::uint64_t q, std::uint64_t p);

enum class Identity {
  unitary_as_linear,      // p-part |GU_n(q)| vs |GL_n(q^2)| or |GL_{n/2}(q^2)|
  symplectic_odd_e,       // |Sp_2n(q)|_p = |GL_n(q)|_p, e odd
  symplectic_even_e,      // |Sp_2n(q)|_p = |GL_2n(q)|_p, e even
  symplectic_unitary,     // |Sp_2n(q)|_p = |GU_{2n/e}(q^{e/2})|_p, e even, e | 2n
  odd_orthogonal,         // |O_2n+1(q)|_p vs |GL_2n+1(q)|_p or |GL_n(q)|_p, q odd
  even_orthogonal_either, // |O±_2n(q)|_p equals |O_2n+1(q)|_p or |O_2n-1(q)|_p
  even_orthogonal_both,   // e does not divide 2n: it equals both
  even_orthogonal_sylow,  // equals |O_2n+1(q)|_p iff e ∤ 2n, or e | n (+), or e ∤ n (-)
  unitary_half_e,         // 2n = e: p divides |GU_n(q)| iff n odd
  quotient_coprime,       // p ∤ (q^{ie}-1)/(q^e-1) for 0 < i < p
  gcd_of_powers,          // gcd(q^m-1, q^n-1) = q^gcd(m,n)-1 for m <= n
  order_of_q,             // e | p-1, p | q^e-1, p ∤ q^i-1 for i < e
};
std::string identity_name(Identity id);
std::optional<Identity> identity_from_name(const std::string& s);
std::vector<Identity> all_identities();

// Whether the case condition of the identity holds for (n, q, p). For
// gcd_of_powers, n is the larger exponent and m runs over 1..n.
bool identity_applies(Identity id, unsigned n, std::uint64_t q, std::uint64_t p);
// Throws BadParameters if the case condition fails or p | q.
bool p_part_identity_check(Identity id, unsigned n, std::uint64_t q, std::uint64_t p);

struct IdentityGridReport {
  struct Row {
    Identity id;
    std::size_t checked = 0;
    std::size_t failed = 0;
  };
  std::vector<Row> rows;
  std::vector<std::string> failures;  // "name n=.. q=.. p=.."
  bool ok() const { return failures.empty(); }
};
// Every applicable (identity, n, q, p) with n <= max_n, q <= max_q a prime
// power, p in primes and p ∤ q.
IdentityGridReport identity_grid(unsigned max_n = 10, std::uint64_t max_q = 9,
                                 const std::vector<std::uint64_t>& primes = {3, 5, 7, 11, 13});

struct ClassifierQuery {
  std::string family;  // alternating PSL PSU PSp Omega Omega+ Omega- B C D 2D E6 ... sporadic
  unsigned n = 0;      // degree, dimension or rank
  std::uint64_t q = 0;
  std::uint64_t p = 0;
  std::string name;  // sporadic group name
};

enum class Witness { none, qd, qd_tilde, qd_tilde_minus, he_type };
std::string witness_name(Witness w, std::uint64_t p);

struct ClassifierVerdict {
  bool sylow_abelian = false;
  bool involves_qdp = false;
  bool p_stable = true;
  Witness minimal_witness = Witness::none;
  std::string rationale;
  bool defining_characteristic = false;
  unsigned sylow_exponent = 0;  // v_p(|G|)
  // The Abelian-Sylow table read literally, where it speaks to the query,
  // and whether the query sits on one of its inequality bounds or the
  // literal reading disagrees with the verdict.
  std::optional<bool> literal_table;
  bool boundary = false;
};

// Normalised copy: family aliases resolved, sporadic names canonical.
// Throws BadParameters on anything outside the simple-group families.
ClassifierQuery validate(const ClassifierQuery& q);
BigInt simple_order(const ClassifierQuery& q);
bool sylow_abelian_verdict(const ClassifierQuery& q);
ClassifierVerdict qdp_verdict(const ClassifierQuery& q);

std::vector<std::string> sporadic_names();

struct Crosscheck {
  bool constructed = false;
  std::string skipped;  // reason when not constructed
  bool table_abelian = false, direct_abelian = false;
  bool table_involves = false, direct_involves = false;
  bool order_matches = false;
  bool agree() const {
    return constructed && order_matches && table_abelian == direct_abelian && table_involves == direct_involves;
  }
};
// Builds PSL/PSU/PSp/alternating groups within the caps and compares the
// tables with direct computation. Cap failures are reported as skipped.
Crosscheck verdict_crosscheck(const ClassifierQuery& q);

// A random query that passes validate().
ClassifierQuery random_query(std::mt19937_64& rng);

}  // namespace pstab::lie

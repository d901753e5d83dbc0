#include <numeric>
#include <random>

#include "doctest.h"
#include "oracles/arith.hpp"
#include "pstab/errors.hpp"
#include "pstab/lie.hpp"

using namespace pstab;
using lie::BigInt;

namespace {

const std::vector<std::uint64_t> kPrimes = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool prime_power_q(std::uint64_t q) {
  if (q < 2) return false;
  std::uint64_t r = 2;
  while (q % r) ++r;
  while (q % r == 0) q /= r;
  return q == 1;
}

BigInt ipow(std::uint64_t q, unsigned k) {
  BigInt r = 1;
  for (unsigned i = 0; i < k; ++i) r *= q;
  return r;
}

BigInt mm(std::uint64_t q, std::initializer_list<int> factors) {
  BigInt r = 1;
  for (int f : factors) r *= f > 0 ? ipow(q, unsigned(f)) - 1 : ipow(q, unsigned(-f)) + 1;
  return r;
}

// Closed-form orders before dividing by the centre, and the centre divisor.
std::pair<BigInt, unsigned> closed_form(const std::string& t, std::uint64_t q) {
  const auto g = [](std::uint64_t a, std::uint64_t b) { return unsigned(std::gcd(a, b)); };
  if (t == "G2") return {ipow(q, 6) * mm(q, {6, 2}), 1};
  if (t == "F4") return {ipow(q, 24) * mm(q, {12, 8, 6, 2}), 1};
  if (t == "E6") return {ipow(q, 36) * mm(q, {12, 9, 8, 6, 5, 2}), g(3, q - 1)};
  if (t == "2E6") return {ipow(q, 36) * mm(q, {12, -9, 8, 6, -5, 2}), g(3, q + 1)};
  if (t == "E7") return {ipow(q, 63) * mm(q, {2, 6, 8, 10, 12, 14, 18}), g(2, q - 1)};
  if (t == "E8") return {ipow(q, 120) * mm(q, {2, 8, 12, 14, 18, 20, 24, 30}), 1};
  if (t == "3D4") return {ipow(q, 12) * (ipow(q, 8) + ipow(q, 4) + 1) * mm(q, {6, 2}), 1};
  if (t == "2B2") return {ipow(q, 2) * mm(q, {-2, 1}), 1};
  if (t == "2G2") return {ipow(q, 3) * mm(q, {-3, 1}), 1};
  if (t == "2F4") return {ipow(q, 12) * mm(q, {-6, 4, -3, 1}), 1};
  throw std::logic_error("type");
}

}  // namespace

TEST_CASE("multiplicative order") {
  CHECK(lie::e_p(7, 3) == 1);
  CHECK(lie::e_p(2, 5) == 4);
  CHECK(lie::e_p(2, 3) == 2);
  CHECK_THROWS_AS(lie::e_p(9, 3), BadParameters);
  CHECK_THROWS_AS(lie::e_p(7, 9), BadParameters);
  for (std::uint64_t p : kPrimes)
    for (std::uint64_t q = 2; q <= 128; ++q) {
      if (!prime_power_q(q) || q % p == 0) continue;
      const unsigned e = lie::e_p(q, p);
      CHECK((p - 1) % e == 0);
      std::uint64_t x = 1;
      for (unsigned i = 1; i <= e; ++i) {
        x = x * q % p;
        if (i < e) CHECK(x != 1);
      }
      CHECK(x == 1);
    }
}

TEST_CASE("group orders") {
  CHECK(lie::group_order("GL", 2, 3) == 48);
  CHECK(lie::group_order("U", 3, 2) == 648);
  CHECK(lie::group_order("Sp", 4, 3) == 51840);
  CHECK(lie::group_order("PSL", 3, 3) == 5616);
  CHECK(lie::group_order("PSU", 3, 5) == 126000);
  // |GL_n(q)| as the number of ordered bases
  for (unsigned n = 1; n <= 6; ++n)
    for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
      BigInt bases = 1;
      for (unsigned i = 0; i < n; ++i) bases *= ipow(q, n) - ipow(q, i);
      CHECK(lie::group_order("GL", n, q) == bases);
    }
  CHECK_THROWS_AS(lie::group_order("XY", 2, 3), BadParameters);
}

TEST_CASE("p-parts against lifting-the-exponent") {
  for (std::uint64_t p : {3u, 5u, 7u, 11u, 13u})
    for (std::uint64_t q = 2; q <= 49; ++q) {
      if (!prime_power_q(q) || q % p == 0) continue;
      for (unsigned n = 1; n <= 10; ++n) {
        CAPTURE(p);
        CAPTURE(q);
        CAPTURE(n);
        CHECK(lie::valuation(lie::group_order("GL", n, q), p) == oracle::vp_gl(n, q, p));
        CHECK(lie::valuation(lie::group_order("GU", n, q), p) == oracle::vp_gu(n, q, p));
        CHECK(lie::valuation(lie::group_order("Sp", 2 * n, q), p) == oracle::vp_sp(n, q, p));
        if (n >= 2) {
          CHECK(lie::valuation(lie::group_order("O+", 2 * n, q), p) == oracle::vp_o_even(n, q, p, 1));
          CHECK(lie::valuation(lie::group_order("O-", 2 * n, q), p) == oracle::vp_o_even(n, q, p, -1));
        }
      }
    }
}

TEST_CASE("cyclotomic factorisations match the closed forms") {
  for (const std::string& t : lie::exceptional_types())
    for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u, 27u, 32u}) {
      if (t == "2B2" && q != 8 && q != 32 && q != 2) continue;
      if (t == "2G2" && q != 27 && q != 3) continue;
      if (t == "2F4" && q != 8 && q != 32 && q != 2) continue;
      CAPTURE(t);
      CAPTURE(q);
      const lie::CyclotomicOrder& c = lie::exceptional_order(t);
      BigInt b = ipow(q, c.q_exponent);
      for (const auto& [m, r] : c.r)
        for (unsigned i = 0; i < r; ++i) b *= lie::cyclotomic_value(m, q);
      const auto [full, centre] = closed_form(t, q);
      CHECK(b == full);
      if (q != 2 || (t != "2F4" && t != "G2")) CHECK(lie::group_order(t, 0, q) * centre == full);
    }
}

TEST_CASE("the twisted E6 factorisation") {
  const lie::CyclotomicOrder& c = lie::exceptional_order("2E6");
  const std::map<unsigned, unsigned> expect = {{1, 4}, {2, 6}, {3, 2}, {4, 2}, {6, 3},
                                               {8, 1}, {10, 1}, {12, 1}, {18, 1}};
  CHECK(c.r == expect);
  // p > 5: Abelian; p = 5 with e = 1 Abelian, with e = 2 a Weyl part of order 5
  CHECK(lie::weyl_sylow_exponent("2E6", 2, 7) == 0);
  CHECK(lie::weyl_sylow_exponent("2E6", 11, 5) == 0);
  CHECK(lie::weyl_sylow_exponent("2E6", 4, 5) == 1);
}

TEST_CASE("Weyl-Sylow exponents of the E types") {
  // non-Abelian iff: E6 p=5 e=1; 2E6 p=5 e=2; E7 p in {5,7} e in {1,2};
  // E8 p=5 e in {1,2,4}, p=7 e in {1,2}; always at p=3; never for p>7.
  for (const std::string t : {"E6", "2E6", "E7", "E8"})
    for (std::uint64_t p : {3u, 5u, 7u, 11u, 13u})
      for (std::uint64_t q = 2; q <= 64; ++q) {
        if (!prime_power_q(q) || q % p == 0) continue;
        const unsigned e = lie::e_p(q, p);
        bool non_abelian = p == 3;
        if (p == 5) non_abelian = (t == "E6" && e == 1) || (t == "2E6" && e == 2) || (t == "E7" && e <= 2) ||
                                  (t == "E8" && (e <= 2 || e == 4));
        if (p == 7) non_abelian = (t == "E7" || t == "E8") && e <= 2;
        CAPTURE(t);
        CAPTURE(p);
        CAPTURE(q);
        CHECK((lie::weyl_sylow_exponent(t, q, p) > 0) == non_abelian);
      }
}

TEST_CASE("Weyl-Sylow exponent accounts for the p-part") {
  for (const std::string& t : lie::exceptional_types()) {
    if (t[0] == '2' && t != "2E6") continue;
    for (std::uint64_t p : {5u, 7u, 11u, 13u})
      for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
        if (q % p == 0) continue;
        const unsigned e = lie::e_p(q, p);
        const auto& r = lie::exceptional_order(t).r;
        const unsigned re = r.count(e) ? r.at(e) : 0;
        CAPTURE(t);
        CAPTURE(p);
        CAPTURE(q);
        CHECK(lie::valuation(lie::group_order(t, 0, q), p) ==
              re * oracle::vp_minus(q, e, p) + lie::weyl_sylow_exponent(t, q, p));
      }
  }
}

TEST_CASE("identity checks") {
  using lie::Identity;
  CHECK(lie::p_part_identity_check(Identity::unitary_as_linear, 4, 5, 3));
  CHECK(lie::valuation(lie::group_order("GU", 4, 5), 3) == 5);
  CHECK(lie::valuation(lie::group_order("GL", 4, 25), 3) == 5);
  CHECK(lie::e_p(4, 7) == 3);
  CHECK(lie::p_part_identity_check(Identity::symplectic_odd_e, 3, 4, 7));
  CHECK(lie::p_part_identity_check(Identity::odd_orthogonal, 2, 3, 5));
  CHECK_THROWS_AS(lie::p_part_identity_check(Identity::symplectic_odd_e, 3, 2, 5), BadParameters);
  for (Identity id : lie::all_identities()) CHECK(lie::identity_from_name(lie::identity_name(id)) == id);

  const auto grid = lie::identity_grid();
  CHECK(grid.ok());
  for (const auto& row : grid.rows) CHECK(row.checked > 0);
}

TEST_CASE("gcd of q-powers") {
  for (std::uint64_t q = 2; q <= 9; ++q)
    for (unsigned m = 1; m <= 10; ++m)
      for (unsigned n = m; n <= 10; ++n) {
        const BigInt a = ipow(q, m) - 1, b = ipow(q, n) - 1;
        CHECK(boost::multiprecision::gcd(a, b) == ipow(q, std::gcd(m, n)) - 1);
      }
}

TEST_CASE("coprime quotients and unitary half order") {
  for (std::uint64_t p : {3u, 5u, 7u, 11u, 13u})
    for (std::uint64_t q = 2; q <= 9; ++q) {
      if (!prime_power_q(q) || q % p == 0) continue;
      const unsigned e = lie::e_p(q, p);
      for (unsigned i = 1; i < p; ++i) {
        const BigInt num = ipow(q, i * e) - 1, den = ipow(q, e) - 1;
        CHECK(num % den == 0);
        CHECK((num / den) % p != 0);
      }
      if (e % 2 == 0) {
        const unsigned n = e / 2;
        CHECK((oracle::vp_gu(n, q, p) >= 1) == (n % 2 == 1));
      }
    }
}

TEST_CASE("sporadic orders") {
  const std::map<std::string, std::string> known = {
      {"M11", "7920"},
      {"M12", "95040"},
      {"J1", "175560"},
      {"M22", "443520"},
      {"J2", "604800"},
      {"M23", "10200960"},
      {"HS", "44352000"},
      {"J3", "50232960"},
      {"M24", "244823040"},
      {"McL", "898128000"},
      {"He", "4030387200"},
      {"Ru", "145926144000"},
      {"Suz", "448345497600"},
      {"ON", "460815505920"},
      {"Co3", "495766656000"},
      {"Co2", "42305421312000"},
      {"Fi22", "64561751654400"},
      {"HN", "273030912000000"},
      {"Ly", "51765179004000000"},
      {"Th", "90745943887872000"},
      {"Fi23", "4089470473293004800"},
      {"Co1", "4157776806543360000"},
      {"J4", "86775571046077562880"},
      {"Fi24'", "1255205709190661721292800"},
      {"B", "4154781481226426191177580544000000"},
      {"M", "808017424794512875886459904961710757005754368000000000"},
  };
  CHECK(lie::sporadic_names().size() == 26);
  for (const std::string& name : lie::sporadic_names()) {
    CAPTURE(name);
    lie::ClassifierQuery q;
    q.family = "sporadic";
    q.name = name;
    q.p = 3;
    const std::string canon = lie::validate(q).name;
    REQUIRE(known.count(canon));
    CHECK(lie::simple_order(q) == BigInt(known.at(canon)));
    for (std::uint64_t p : {3u, 5u, 7u, 11u, 13u}) {
      q.p = p;
      const unsigned v = lie::valuation(lie::simple_order(q), p);
      const lie::ClassifierVerdict d = lie::qdp_verdict(q);
      CHECK(d.sylow_exponent == v);
      if (v < 3) CHECK_FALSE(d.involves_qdp);
      if (v <= 2) CHECK(d.sylow_abelian);
      if (d.involves_qdp) CHECK(v >= 3);
    }
  }
}

TEST_CASE("verdict examples") {
  const auto query = [](std::string f, unsigned n, std::uint64_t q, std::uint64_t p, std::string name = {}) {
    return lie::ClassifierQuery{std::move(f), n, q, p, std::move(name)};
  };
  CHECK(lie::sylow_abelian_verdict(query("PSL", 3, 4, 3)));
  CHECK_FALSE(lie::sylow_abelian_verdict(query("PSU", 3, 8, 3)));
  CHECK(lie::sylow_abelian_verdict(query("2B2", 0, 8, 5)));
  CHECK(lie::sylow_abelian_verdict(query("PSU", 3, 5, 3)));

  const auto a9 = lie::qdp_verdict(query("alternating", 9, 0, 3));
  CHECK(a9.involves_qdp);
  CHECK(a9.minimal_witness == lie::Witness::qd);
  CHECK_FALSE(lie::qdp_verdict(query("alternating", 8, 0, 3)).involves_qdp);

  const auto he = lie::qdp_verdict(query("sporadic", 0, 0, 3, "He"));
  CHECK(he.involves_qdp);
  CHECK(he.minimal_witness == lie::Witness::he_type);
  CHECK(lie::witness_name(he.minimal_witness, 3) == "3^2:(2^2.SL2(3))");

  const auto m13 = lie::qdp_verdict(query("sporadic", 0, 0, 13, "M"));
  CHECK(m13.involves_qdp);
  CHECK(lie::witness_name(m13.minimal_witness, 13) == "Qd(13)");

  const auto psl33 = lie::qdp_verdict(query("PSL", 3, 3, 3));
  CHECK(psl33.defining_characteristic);
  CHECK(psl33.involves_qdp);
  const auto psl2 = lie::qdp_verdict(query("PSL", 2, 27, 3));
  CHECK(psl2.sylow_abelian);
  CHECK_FALSE(psl2.involves_qdp);

  CHECK_THROWS_AS(lie::validate(query("PSL", 2, 3, 3)), BadParameters);
  CHECK_THROWS_AS(lie::validate(query("2B2", 0, 4, 5)), BadParameters);
  CHECK_THROWS_AS(lie::validate(query("PSL", 3, 4, 2)), BadParameters);
  CHECK_THROWS_AS(lie::validate(query("nonsense", 3, 4, 3)), BadParameters);
  CHECK_THROWS_AS(lie::validate(query("sporadic", 0, 0, 3, "J5")), BadParameters);
}

TEST_CASE("verdicts against direct computation") {
  const std::vector<lie::ClassifierQuery> qs = {
      {"PSL", 3, 4, 3, ""}, {"PSU", 3, 5, 3, ""}, {"PSL", 3, 3, 3, ""},
      {"PSL", 2, 7, 3, ""}, {"alternating", 7, 0, 3, ""}, {"PSp", 4, 3, 3, ""},
  };
  for (const auto& q : qs) {
    CAPTURE(q.family);
    CAPTURE(q.n);
    CAPTURE(q.q);
    const lie::Crosscheck c = lie::verdict_crosscheck(q);
    CHECK(c.constructed);
    CHECK(c.agree());
  }
  const lie::Crosscheck big = lie::verdict_crosscheck({"PSU", 3, 8, 3, ""});
  CHECK_FALSE(big.constructed);
  CHECK_FALSE(big.skipped.empty());
}

TEST_CASE("verdict invariants over random queries") {
  std::mt19937_64 rng(12345);
  for (int i = 0; i < 3000; ++i) {
    const lie::ClassifierQuery q = lie::random_query(rng);
    const lie::ClassifierVerdict v = lie::qdp_verdict(q);
    CAPTURE(q.family);
    CAPTURE(q.n);
    CAPTURE(q.q);
    CAPTURE(q.p);
    CAPTURE(q.name);
    if (v.sylow_abelian) CHECK((!v.involves_qdp && v.p_stable));
    CHECK(v.p_stable == !v.involves_qdp);
    CHECK(v.sylow_exponent == lie::valuation(lie::simple_order(q), q.p));
    if (v.sylow_exponent <= 2) CHECK(v.sylow_abelian);
    CHECK(v.sylow_abelian == lie::sylow_abelian_verdict(q));
    CHECK((v.minimal_witness == lie::Witness::none) == !v.involves_qdp);
  }
}

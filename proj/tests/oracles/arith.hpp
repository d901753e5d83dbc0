#pragma once
// Valuations of Lie-type orders from lifting-the-exponent, with no big
// integers: v_p(q^k - 1) = v_p(q^e - 1) + v_p(k/e) when e | k, else 0.
#include <cstdint>

namespace oracle {

inline unsigned vp_int(std::uint64_t n, std::uint64_t p) {
  unsigned v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

inline unsigned order_mod(std::uint64_t q, std::uint64_t p) {
  std::uint64_t x = q % p;
  unsigned e = 1;
  while (x != 1) {
    x = x * (q % p) % p;
    ++e;
  }
  return e;
}

// v_p(q^k - 1), p odd, p not dividing q. v_p(q^e - 1) is read off q^e
// modulo p^8, which is exact while q^e - 1 < p^8 or p^8 does not divide it.
inline unsigned vp_minus(std::uint64_t q, unsigned k, std::uint64_t p) {
  const unsigned e = order_mod(q, p);
  if (k % e) return 0;
  std::uint64_t m = 1;
  for (int i = 0; i < 8; ++i) m *= p;
  std::uint64_t qe = 1;
  for (unsigned i = 0; i < e; ++i) qe = qe * (q % m) % m;
  const std::uint64_t r = (qe + m - 1) % m;
  return (r == 0 ? 8 : vp_int(r, p)) + vp_int(k / e, p);
}
inline unsigned vp_plus(std::uint64_t q, unsigned k, std::uint64_t p) {
  return vp_minus(q, 2 * k, p) - vp_minus(q, k, p);
}

inline unsigned vp_gl(unsigned n, std::uint64_t q, std::uint64_t p) {
  unsigned v = 0;
  for (unsigned i = 1; i <= n; ++i) v += vp_minus(q, i, p);
  return v;
}
inline unsigned vp_gu(unsigned n, std::uint64_t q, std::uint64_t p) {
  unsigned v = 0;
  for (unsigned i = 1; i <= n; ++i) v += i % 2 ? vp_plus(q, i, p) : vp_minus(q, i, p);
  return v;
}
inline unsigned vp_sp(unsigned m, std::uint64_t q, std::uint64_t p) {
  unsigned v = 0;
  for (unsigned i = 1; i <= m; ++i) v += vp_minus(q, 2 * i, p);
  return v;
}
inline unsigned vp_o_even(unsigned m, std::uint64_t q, std::uint64_t p, int sign) {
  return vp_sp(m - 1, q, p) + (sign > 0 ? vp_minus(q, m, p) : vp_plus(q, m, p));
}

}  // namespace oracle

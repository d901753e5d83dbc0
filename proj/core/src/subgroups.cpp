#include "pstab/subgroups.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <unordered_set>

#include "pstab/errors.hpp"

namespace pstab {
namespace {

// Zero-initialised scratch mask; callers must clear the entries they set.
std::vector<std::uint8_t>& scratch(std::size_t n) {
  thread_local std::vector<std::uint8_t> s;
  if (s.size() < n) s.resize(n, 0);
  return s;
}

struct VecHash {
  std::size_t operator()(const std::vector<Idx>& v) const {
    std::size_t h = v.size();
    for (Idx x : v) h = h * 1000003u ^ x;
    return h;
  }
};

}  // namespace

bool Subgroup::contains(Idx x) const { return std::binary_search(elems.begin(), elems.end(), x); }

Mask mask_of(const Group& G, const Subgroup& H) {
  Mask m(G.order(), 0);
  for (Idx x : H.elems) m[x] = 1;
  return m;
}

Subgroup trivial_subgroup(const Group&) { return Subgroup{{0}, {}}; }

Subgroup whole(const Group& G) {
  Subgroup S;
  S.elems.resize(G.order());
  for (Idx i = 0; i < G.order(); ++i) S.elems[i] = i;
  S.gens = G.gens();
  return S;
}

Subgroup closure(const Group& G, const std::vector<Idx>& gens_in) {
  std::vector<Idx> gens;
  for (Idx g : gens_in)
    if (g != 0 && std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
  auto& in = scratch(G.order());
  std::vector<Idx> el{0};
  in[0] = 1;
  for (std::size_t i = 0; i < el.size(); ++i)
    for (Idx g : gens) {
      Idx y = G.mul(el[i], g);
      if (!in[y]) {
        in[y] = 1;
        el.push_back(y);
      }
    }
  for (Idx x : el) in[x] = 0;
  std::sort(el.begin(), el.end());
  return Subgroup{std::move(el), std::move(gens)};
}

Subgroup closure_with(const Group& G, const Subgroup& H, const std::vector<Idx>& extra) {
  std::vector<Idx> g = H.gens;
  g.insert(g.end(), extra.begin(), extra.end());
  return closure(G, g);
}

std::vector<Idx> greedy_generators(const Group& G, const std::vector<Idx>& elems) {
  auto& in = scratch(G.order());
  std::vector<Idx> gens, cur{0};
  in[0] = 1;
  for (Idx x : elems) {
    if (in[x]) continue;
    gens.push_back(x);
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (Idx g : gens) {
        Idx y = G.mul(cur[i], g);
        if (!in[y]) {
          in[y] = 1;
          cur.push_back(y);
        }
      }
  }
  for (Idx x : cur) in[x] = 0;
  return gens;
}

Subgroup subgroup_from_elements(const Group& G, std::vector<Idx> elems) {
  std::sort(elems.begin(), elems.end());
  Subgroup S;
  S.gens = greedy_generators(G, elems);
  S.elems = std::move(elems);
  return S;
}

bool is_subset(const Subgroup& a, const Subgroup& b) {
  return std::includes(b.elems.begin(), b.elems.end(), a.elems.begin(), a.elems.end());
}

Subgroup intersection(const Group& G, const Subgroup& a, const Subgroup& b) {
  std::vector<Idx> r;
  std::set_intersection(a.elems.begin(), a.elems.end(), b.elems.begin(), b.elems.end(), std::back_inserter(r));
  return subgroup_from_elements(G, std::move(r));
}

Subgroup join(const Group& G, const Subgroup& a, const Subgroup& b) {
  std::vector<Idx> g = a.gens;
  g.insert(g.end(), b.gens.begin(), b.gens.end());
  return closure(G, g);
}

Subgroup conjugate(const Group& G, const Subgroup& H, Idx g) {
  Subgroup S;
  S.elems.reserve(H.elems.size());
  for (Idx x : H.elems) S.elems.push_back(G.conj(x, g));
  std::sort(S.elems.begin(), S.elems.end());
  for (Idx x : H.gens) S.gens.push_back(G.conj(x, g));
  return S;
}

bool normalizes(const Group& G, Idx g, const Subgroup& H, const Mask& m) {
  for (Idx h : H.gens)
    if (!m[G.conj(h, g)]) return false;
  return true;
}

bool is_normal_in(const Group& G, const Subgroup& H, const Subgroup& K) {
  if (!is_subset(H, K)) return false;
  Mask m = mask_of(G, H);
  for (Idx k : K.gens)
    if (!normalizes(G, k, H, m)) return false;
  return true;
}

Subgroup normalizer(const Group& G, const Subgroup& H, const Subgroup& within) {
  Mask m = mask_of(G, H);
  std::vector<Idx> r;
  for (Idx g : within.elems)
    if (normalizes(G, g, H, m)) r.push_back(g);
  return subgroup_from_elements(G, std::move(r));
}

Subgroup normalizer(const Group& G, const Subgroup& H) { return normalizer(G, H, whole(G)); }

Subgroup centralizer(const Group& G, const Subgroup& H, const Subgroup& within) {
  std::vector<Idx> r;
  for (Idx g : within.elems) {
    bool ok = true;
    for (Idx h : H.gens)
      if (G.mul(g, h) != G.mul(h, g)) {
        ok = false;
        break;
      }
    if (ok) r.push_back(g);
  }
  return subgroup_from_elements(G, std::move(r));
}

Subgroup centralizer(const Group& G, const Subgroup& H) { return centralizer(G, H, whole(G)); }

Subgroup center(const Group& G, const Subgroup& H) { return centralizer(G, H, H); }

Subgroup normal_closure(const Group& G, const std::vector<Idx>& S, const Subgroup& within) {
  Subgroup N = closure(G, S);
  for (;;) {
    Mask m = mask_of(G, N);
    std::vector<Idx> extra;
    for (Idx w : within.gens)
      for (Idx h : N.gens) {
        Idx c = G.conj(h, w);
        if (!m[c]) {
          extra.push_back(c);
          m[c] = 1;
        }
      }
    if (extra.empty()) return N;
    N = closure_with(G, N, extra);
  }
}

Subgroup derived_subgroup(const Group& G, const Subgroup& H) {
  std::vector<Idx> c;
  for (std::size_t i = 0; i < H.gens.size(); ++i)
    for (std::size_t j = i + 1; j < H.gens.size(); ++j) c.push_back(G.comm(H.gens[i], H.gens[j]));
  return normal_closure(G, c, H);
}

Subgroup core(const Group& G, const Subgroup& H, const Subgroup& within) {
  Subgroup K = H;
  for (;;) {
    bool changed = false;
    for (Idx w : within.gens) {
      Subgroup C = conjugate(G, K, w);
      if (C.elems != K.elems) {
        K = intersection(G, K, C);
        changed = true;
      }
    }
    if (!changed) return K;
  }
}

bool is_abelian(const Group& G, const Subgroup& H) {
  for (std::size_t i = 0; i < H.gens.size(); ++i)
    for (std::size_t j = i + 1; j < H.gens.size(); ++j)
      if (G.mul(H.gens[i], H.gens[j]) != G.mul(H.gens[j], H.gens[i])) return false;
  return true;
}

std::uint64_t exponent(const Group& G, const Subgroup& H) {
  std::uint64_t e = 1;
  for (Idx x : H.elems) e = std::lcm(e, G.elt_order(x));
  return e;
}

std::vector<Subgroup> conjugacy_orbit(const Group& G, const Subgroup& H, const Subgroup& within) {
  std::unordered_set<std::vector<Idx>, VecHash> seen;
  std::vector<Subgroup> orbit{H};
  seen.insert(H.elems);
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (Idx w : within.gens) {
      Subgroup C = conjugate(G, orbit[i], w);
      if (seen.insert(C.elems).second) orbit.push_back(std::move(C));
    }
  return orbit;
}

std::optional<Idx> conjugating_element(const Group& G, const Subgroup& A, const Subgroup& B,
                                       const Subgroup& within) {
  if (A.order() != B.order()) return std::nullopt;
  if (A.elems == B.elems) return Idx{0};
  std::unordered_set<std::vector<Idx>, VecHash> seen;
  std::vector<std::pair<Subgroup, Idx>> orbit{{A, 0}};
  seen.insert(A.elems);
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (Idx w : within.gens) {
      Subgroup C = conjugate(G, orbit[i].first, w);
      if (!seen.insert(C.elems).second) continue;
      Idx g = G.mul(orbit[i].second, w);
      if (C.elems == B.elems) return g;
      orbit.emplace_back(std::move(C), g);
    }
  return std::nullopt;
}

Subgroup least_conjugate(const Group& G, const Subgroup& H, const Subgroup& within) {
  auto orbit = conjugacy_orbit(G, H, within);
  std::size_t best = 0;
  for (std::size_t i = 1; i < orbit.size(); ++i)
    if (orbit[i].elems < orbit[best].elems) best = i;
  return orbit[best];
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  if (p < 2 || n == 0) return 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t smallest_prime(std::uint64_t n) {
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return d;
  return n;
}

bool is_p_element(const Group& G, Idx x, std::uint64_t p) { return p_part(G.elt_order(x), p) == G.elt_order(x); }

Subgroup sylow(const Group& G, std::uint64_t p, const Subgroup& within) {
  const std::uint64_t target = p_part(within.order(), p);
  Subgroup H = trivial_subgroup(G);
  while (H.order() < target) {
    Subgroup N = normalizer(G, H, within);
    Mask hm = mask_of(G, H);
    std::optional<Idx> pick;
    for (Idx g : N.elems) {
      if (hm[g] || !is_p_element(G, g, p)) continue;
      if (hm[G.pow(g, static_cast<long long>(p))]) {
        pick = g;
        break;
      }
    }
    if (!pick) throw Error("internal: Sylow growth step failed");
    H = closure_with(G, H, {*pick});
  }
  return least_conjugate(G, H, within);
}

Subgroup sylow(const Group& G, std::uint64_t p) { return sylow(G, p, whole(G)); }

Subgroup sylow_seeded(const Group& G, std::uint64_t p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::uint64_t target = p_part(G.order(), p);
  Subgroup H = trivial_subgroup(G);
  Subgroup all = whole(G);
  while (H.order() < target) {
    Subgroup N = normalizer(G, H, all);
    Mask hm = mask_of(G, H);
    std::vector<Idx> cand;
    for (Idx g : N.elems)
      if (!hm[g] && is_p_element(G, g, p) && hm[G.pow(g, static_cast<long long>(p))]) cand.push_back(g);
    if (cand.empty()) throw Error("internal: Sylow growth step failed");
    H = closure_with(G, H, {cand[rng() % cand.size()]});
  }
  return H;
}

Subgroup p_core(const Group& G, std::uint64_t p, CoreMode mode, const Subgroup& within) {
  if (mode == CoreMode::p) {
    if (p_part(within.order(), p) == 1) return trivial_subgroup(G);
    return core(G, sylow(G, p, within), within);
  }
  // Join of normal closures of p'-elements whose normal closure is a p'-group.
  Subgroup O = trivial_subgroup(G);
  Mask done(G.order(), 0);
  Mask in_o = mask_of(G, O);
  for (Idx x : within.elems) {
    if (done[x] || in_o[x]) continue;
    if (G.elt_order(x) % p == 0) {
      done[x] = 1;
      continue;
    }
    // mark the within-class of x
    std::vector<Idx> cls{x};
    done[x] = 1;
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (Idx w : within.gens) {
        Idx y = G.conj(cls[i], w);
        if (!done[y]) {
          done[y] = 1;
          cls.push_back(y);
        }
      }
    Subgroup N = normal_closure(G, {x}, within);
    if (N.order() % p == 0) continue;
    O = join(G, O, N);
    in_o = mask_of(G, O);
  }
  return O;
}

Subgroup p_core(const Group& G, std::uint64_t p, CoreMode mode) { return p_core(G, p, mode, whole(G)); }

std::vector<Subgroup> subgroups_of_pgroup(const Group& G, const Subgroup& P) {
  std::vector<Subgroup> all{trivial_subgroup(G)};
  std::unordered_set<std::vector<Idx>, VecHash> seen;
  seen.insert(all[0].elems);
  std::size_t layer_begin = 0;
  while (layer_begin < all.size()) {
    const std::size_t layer_end = all.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      const Subgroup H = all[i];
      if (H.order() == P.order()) continue;
      Subgroup N = normalizer(G, H, P);
      Mask covered = mask_of(G, H);
      const std::uint64_t p = smallest_prime(P.order());
      for (Idx g : N.elems) {
        if (covered[g]) continue;
        // With g^p in H the subgroup <H, g> has order p|H|, and every element
        // of it outside H generates the same subgroup together with H.
        if (!covered[G.pow(g, static_cast<long long>(p))]) continue;
        Subgroup S = closure_with(G, H, {g});
        for (Idx x : S.elems) covered[x] = 1;
        if (seen.insert(S.elems).second) all.push_back(std::move(S));
      }
    }
    layer_begin = layer_end;
  }
  std::sort(all.begin(), all.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elems < b.elems;
  });
  return all;
}

std::vector<std::vector<Idx>> conjugation_orbits(const Group& G, const std::vector<Idx>& points,
                                                 const Subgroup& within) {
  std::vector<std::vector<Idx>> orbits;
  Mask done(G.order(), 0);
  for (Idx x : points) {
    if (done[x]) continue;
    std::vector<Idx> orb{x};
    done[x] = 1;
    for (std::size_t i = 0; i < orb.size(); ++i)
      for (Idx w : within.gens) {
        Idx y = G.conj(orb[i], w);
        if (!done[y]) {
          done[y] = 1;
          orb.push_back(y);
        }
      }
    std::sort(orb.begin(), orb.end());
    orbits.push_back(std::move(orb));
  }
  return orbits;
}

}  // namespace pstab

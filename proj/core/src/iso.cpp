#include "pstab/iso.hpp"

#include <algorithm>
#include <random>

namespace pstab {
namespace {

std::map<std::uint64_t, std::size_t> histogram_mod(const Group& G, const Subgroup& N) {
  Mask in = mask_of(G, N);
  std::map<std::uint64_t, std::size_t> h;
  for (Idx x = 0; x < G.order(); ++x) {
    std::uint64_t o = G.elt_order(x);
    std::uint64_t best = o;
    for (std::uint64_t d = 1; d <= o; ++d)
      if (o % d == 0 && in[G.pow(x, static_cast<long long>(d))]) {
        best = d;
        break;
      }
    ++h[best];
  }
  for (auto& [k, v] : h) v /= N.order();
  return h;
}

std::vector<std::size_t> class_sizes(const Group& G) {
  const auto& ids = G.class_ids();
  std::vector<std::size_t> sz(G.class_reps().size(), 0);
  for (auto c : ids) ++sz[c];
  return sz;
}

// Orders of short words in (a, b), used to prune candidate images.
std::vector<std::uint64_t> pair_signature(const Group& G, Idx a, Idx b) {
  Idx ab = G.mul(a, b);
  Idx aib = G.mul(G.inv(a), b);
  Idx a2b = G.mul(a, ab);
  Idx ab2 = G.mul(ab, b);
  Idx c = G.comm(a, b);
  Idx abab_i = G.mul(G.mul(ab, a), G.inv(b));
  return {G.elt_order(ab), G.elt_order(aib), G.elt_order(a2b), G.elt_order(ab2), G.elt_order(c),
          G.elt_order(abab_i), G.elt_order(G.mul(c, a)), G.elt_order(G.mul(c, b))};
}

struct Search {
  const GroupPtr& T;
  const GroupPtr& G;
  bool iso;
  std::vector<Idx> tg;  // generators of T
  std::vector<std::vector<std::vector<std::uint64_t>>> tsig;
  std::vector<std::size_t> tcls, gcls;
  std::vector<Idx> images;
  std::optional<Hom> found;

  bool compatible(std::size_t i, Idx y) const {
    const Group& A = *T;
    const Group& B = *G;
    if (B.elt_order(y) != A.elt_order(tg[i])) return false;
    if (iso && gcls[B.class_ids()[y]] != tcls[A.class_ids()[tg[i]]]) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (pair_signature(B, images[j], y) != tsig[i][j]) return false;
    return true;
  }

  bool leaf() {
    auto h = extend_to_hom(T, tg, G, images);
    if (!h) return false;
    std::vector<char> hit(G->order(), 0);
    for (Idx v : h->map) {
      if (hit[v]) return false;
      hit[v] = 1;
    }
    found = std::move(h);
    return true;
  }

  bool descend(std::size_t i) {
    if (i == tg.size()) return leaf();
    const Group& B = *G;
    for (Idx y = 0; y < B.order(); ++y) {
      if (!compatible(i, y)) continue;
      images[i] = y;
      if (descend(i + 1)) return true;
    }
    return false;
  }

  bool run() {
    const Group& A = *T;
    const Group& B = *G;
    if (A.order() == 1) {
      found = Hom{T, G, std::vector<Idx>(1, 0)};
      return true;
    }
    tg = small_generating_set(A);
    tsig.assign(tg.size(), {});
    for (std::size_t i = 0; i < tg.size(); ++i)
      for (std::size_t j = 0; j < i; ++j) tsig[i].push_back(pair_signature(A, tg[j], tg[i]));
    if (iso) {
      tcls = class_sizes(A);
      gcls = class_sizes(B);
    }
    images.assign(tg.size(), 0);
    // First image up to conjugacy in G.
    for (Idx c : B.class_reps()) {
      if (!compatible(0, c)) continue;
      images[0] = c;
      if (tg.size() == 1) {
        if (leaf()) return true;
        continue;
      }
      // Second image up to conjugation by the centralizer of the first.
      Subgroup C = centralizer(B, closure(B, {c}));
      std::vector<Idx> cand;
      for (Idx y = 0; y < B.order(); ++y)
        if (compatible(1, y)) cand.push_back(y);
      for (const auto& orb : conjugation_orbits(B, cand, C)) {
        images[1] = orb.front();
        if (descend(2)) return true;
      }
    }
    return false;
  }
};

}  // namespace

Fingerprint fingerprint(const Group& G) {
  Fingerprint f;
  f.order = G.order();
  for (Idx x = 0; x < G.order(); ++x) ++f.order_histogram[G.elt_order(x)];
  Subgroup all = whole(G);
  f.center_order = center(G, all).order();
  Subgroup D = all;
  f.derived_series.push_back(D.order());
  for (;;) {
    Subgroup E = derived_subgroup(G, D);
    if (E.order() == D.order()) break;
    f.derived_series.push_back(E.order());
    D = std::move(E);
  }
  Subgroup Gp = derived_subgroup(G, all);
  f.abelianization_histogram = histogram_mod(G, Gp);
  auto sz = class_sizes(G);
  for (std::size_t c = 0; c < sz.size(); ++c) f.classes.emplace_back(G.elt_order(G.class_reps()[c]), sz[c]);
  std::sort(f.classes.begin(), f.classes.end());
  return f;
}

std::vector<Idx> small_generating_set(const Group& G) {
  if (G.order() == 1) return {};
  if (G.gens().size() <= 2) return G.gens();
  std::vector<Idx> reps = G.class_reps();
  std::stable_sort(reps.begin(), reps.end(), [&](Idx a, Idx b) { return G.elt_order(a) > G.elt_order(b); });
  if (reps.size() > 24) reps.resize(24);
  std::mt19937_64 rng(0x5eed);
  for (Idx a : reps) {
    if (a == 0) continue;
    if (closure(G, {a}).order() == G.order()) return {a};
    for (int t = 0; t < 256; ++t) {
      Idx b = static_cast<Idx>(rng() % G.order());
      if (closure(G, {a, b}).order() == G.order()) return {a, b};
    }
  }
  // Drop redundant generators.
  std::vector<Idx> g = G.gens();
  for (std::size_t i = 0; i < g.size();) {
    std::vector<Idx> h = g;
    h.erase(h.begin() + static_cast<long>(i));
    if (closure(G, h).order() == G.order())
      g = h;
    else
      ++i;
  }
  return g;
}

std::optional<Hom> find_embedding(const GroupPtr& T, const GroupPtr& G) {
  if (G->order() % T->order() != 0) return std::nullopt;
  Search s{T, G, false, {}, {}, {}, {}, {}, {}};
  if (s.run()) return s.found;
  return std::nullopt;
}

std::optional<Hom> is_isomorphic(const GroupPtr& A, const GroupPtr& B) {
  if (A->order() != B->order()) return std::nullopt;
  if (!(fingerprint(*A) == fingerprint(*B))) return std::nullopt;
  Search s{A, B, true, {}, {}, {}, {}, {}, {}};
  if (s.run()) return s.found;
  return std::nullopt;
}

}  // namespace pstab

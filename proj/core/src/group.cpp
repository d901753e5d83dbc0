#include "pstab/group.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>

#include "pstab/config.hpp"
#include "pstab/errors.hpp"

namespace pstab {
namespace {

constexpr Idx kEmpty = 0xffffffffu;
constexpr std::size_t kMaxBase = 64;

inline std::uint64_t mix(std::uint64_t h) {
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdULL;
  h ^= h >> 33;
  h *= 0xc4ceb9fe1a85ec53ULL;
  h ^= h >> 33;
  return h;
}

std::uint64_t hash_points(const Point* p, std::size_t n) {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ n;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    std::uint64_t w = std::uint64_t(p[i]) | std::uint64_t(p[i + 1]) << 16 | std::uint64_t(p[i + 2]) << 32 |
                      std::uint64_t(p[i + 3]) << 48;
    h = mix(h ^ w) + i;
  }
  for (; i < n; ++i) h = mix(h ^ p[i]) + i;
  return h;
}

std::size_t table_size_for(std::size_t n) {
  std::size_t s = 16;
  while (s < 2 * n) s <<= 1;
  return s;
}

// Full-permutation hash set used while the element list is still growing.
class ClosureSet {
 public:
  ClosureSet(std::vector<Point>& pts, std::size_t n) : pts_(pts), n_(n), table_(1024, kEmpty), mask_(1023) {}

  // Returns true if the permutation stored at index `id` was new.
  bool insert(Idx id) {
    if ((count_ + 1) * 2 > table_.size()) grow();
    return place(id, table_, mask_);
  }

 private:
  const Point* at(Idx i) const { return pts_.data() + std::size_t(i) * n_; }
  bool place(Idx id, std::vector<Idx>& t, std::size_t mask) {
    std::size_t h = hash_points(at(id), n_) & mask;
    while (t[h] != kEmpty) {
      if (std::memcmp(at(t[h]), at(id), n_ * sizeof(Point)) == 0) return false;
      h = (h + 1) & mask;
    }
    t[h] = id;
    ++count_;
    return true;
  }
  void grow() {
    std::vector<Idx> t(table_.size() * 2, kEmpty);
    std::size_t mask = t.size() - 1;
    std::size_t old = count_;
    count_ = 0;
    for (Idx id : table_)
      if (id != kEmpty) place(id, t, mask);
    count_ = old;
    table_.swap(t);
    mask_ = mask;
  }

  std::vector<Point>& pts_;
  std::size_t n_;
  std::vector<Idx> table_;
  std::size_t mask_;
  std::size_t count_ = 0;
};

}  // namespace

GroupPtr Group::generate(const std::vector<Perm>& gens, std::size_t degree, std::string label) {
  if (degree > kMaxDegree) throw DegreeCapExceeded("degree " + std::to_string(degree) + " exceeds the hard limit");
  for (const Perm& g : gens)
    if (g.degree() != degree) throw BadParameters("generator degree does not match group degree");
  const std::size_t cap = limits().order_cap;

  std::shared_ptr<Group> G(new Group());
  G->label_ = std::move(label);
  G->n_ = degree;
  std::vector<Point>& pts = G->pts_;
  const std::size_t n = degree;

  std::vector<Point> gp;  // generator images, deduplicated, identity removed
  std::vector<Perm> ug;
  for (const Perm& g : gens) {
    if (g.is_identity()) continue;
    if (std::find(ug.begin(), ug.end(), g) != ug.end()) continue;
    ug.push_back(g);
  }
  for (const Perm& g : ug) gp.insert(gp.end(), g.images().begin(), g.images().end());

  ClosureSet set(pts, n);
  Perm id = Perm::identity(n);
  pts.insert(pts.end(), id.images().begin(), id.images().end());
  set.insert(0);
  std::size_t count = 1;
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t k = 0; k < ug.size(); ++k) {
      const std::size_t off = pts.size();
      pts.resize(off + n);
      const Point* a = pts.data() + i * n;
      const Point* b = gp.data() + k * n;
      Point* c = pts.data() + off;
      for (std::size_t x = 0; x < n; ++x) c[x] = b[a[x]];
      if (set.insert(static_cast<Idx>(count))) {
        ++count;
        if (count > cap)
          throw OrderCapExceeded("group order exceeds the order cap " + std::to_string(cap));
      } else {
        pts.resize(off);
      }
    }
  }

  // Reorder lexicographically.
  std::vector<Idx> perm(count);
  std::iota(perm.begin(), perm.end(), Idx{0});
  std::sort(perm.begin(), perm.end(), [&](Idx x, Idx y) {
    const Point* a = pts.data() + std::size_t(x) * n;
    const Point* b = pts.data() + std::size_t(y) * n;
    return std::lexicographical_compare(a, a + n, b, b + n);
  });
  std::vector<Point> sorted(count * n);
  for (std::size_t i = 0; i < count; ++i)
    std::memcpy(sorted.data() + i * n, pts.data() + std::size_t(perm[i]) * n, n * sizeof(Point));
  pts.swap(sorted);
  G->order_ = count;
  G->finalize({});
  // Generators in the caller's order.
  G->gens_.clear();
  for (const Perm& g : ug) G->gens_.push_back(*G->find(g));
  return G;
}

GroupPtr Group::from_subset(const Group& parent, const std::vector<Idx>& elems, std::string label) {
  std::shared_ptr<Group> G(new Group());
  G->label_ = std::move(label);
  G->n_ = parent.n_;
  G->order_ = elems.size();
  G->pts_.resize(elems.size() * parent.n_);
  for (std::size_t i = 0; i < elems.size(); ++i)
    std::memcpy(G->pts_.data() + i * parent.n_, parent.data(elems[i]), parent.n_ * sizeof(Point));
  G->finalize({});
  // Greedy generators in index order.
  std::vector<char> in(G->order_, 0);
  std::vector<Idx> cur{0};
  in[0] = 1;
  for (Idx x = 1; x < G->order_; ++x) {
    if (in[x]) continue;
    G->gens_.push_back(x);
    // Re-close with all generators so far.
    for (std::size_t i = 0; i < cur.size(); ++i) {
      for (Idx g : G->gens_) {
        Idx y = G->mul(cur[i], g);
        if (!in[y]) {
          in[y] = 1;
          cur.push_back(y);
        }
      }
    }
  }
  return G;
}

void Group::finalize(std::vector<Idx>) {
  const std::size_t n = n_;
  // Base: points whose images separate all elements.
  std::vector<Idx> cur;
  for (Idx i = 1; i < order_; ++i) cur.push_back(i);
  base_.clear();
  while (!cur.empty()) {
    std::size_t best = n;
    for (Idx e : cur) {
      const Point* d = data(e);
      for (std::size_t x = 0; x < best; ++x)
        if (d[x] != x) {
          best = x;
          break;
        }
    }
    base_.push_back(static_cast<Point>(best));
    if (base_.size() > kMaxBase) throw OrderCapExceeded("base too long");
    std::vector<Idx> next;
    for (Idx e : cur)
      if (data(e)[best] == best) next.push_back(e);
    cur.swap(next);
  }
  // Base lookup table.
  table_.assign(table_size_for(order_), kEmpty);
  mask_ = table_.size() - 1;
  Point buf[kMaxBase];
  for (Idx i = 0; i < order_; ++i) {
    const Point* d = data(i);
    for (std::size_t j = 0; j < base_.size(); ++j) buf[j] = d[base_[j]];
    std::size_t h = hash_base(buf) & mask_;
    while (table_[h] != kEmpty) h = (h + 1) & mask_;
    table_[h] = i;
  }
  // Inverses and element orders.
  inv_.assign(order_, 0);
  ord_.assign(order_, 1);
  std::vector<char> seen(n);
  for (Idx i = 0; i < order_; ++i) {
    const Point* d = data(i);
    for (std::size_t j = 0; j < base_.size(); ++j) {
      // preimage of base point
      Point b = base_[j];
      std::size_t x = 0;
      while (d[x] != b) ++x;
      buf[j] = static_cast<Point>(x);
    }
    inv_[i] = *find_by_base(buf);
    std::fill(seen.begin(), seen.end(), 0);
    std::uint64_t o = 1;
    for (std::size_t x = 0; x < n; ++x) {
      if (seen[x]) continue;
      std::uint64_t len = 0;
      for (std::size_t y = x; !seen[y]; y = d[y]) {
        seen[y] = 1;
        ++len;
      }
      o = std::lcm(o, len);
    }
    ord_[i] = static_cast<std::uint32_t>(o);
  }
}

std::size_t Group::hash_base(const Point* b) const { return static_cast<std::size_t>(hash_points(b, base_.size())); }

std::optional<Idx> Group::find_by_base(const Point* b) const {
  std::size_t h = hash_base(b) & mask_;
  const std::size_t k = base_.size();
  while (table_[h] != kEmpty) {
    const Point* d = data(table_[h]);
    bool eq = true;
    for (std::size_t j = 0; j < k; ++j)
      if (d[base_[j]] != b[j]) {
        eq = false;
        break;
      }
    if (eq) return table_[h];
    h = (h + 1) & mask_;
  }
  return std::nullopt;
}

Idx Group::mul(Idx a, Idx b) const {
  const Point* pa = data(a);
  const Point* pb = data(b);
  Point buf[kMaxBase];
  const std::size_t k = base_.size();
  for (std::size_t j = 0; j < k; ++j) buf[j] = pb[pa[base_[j]]];
  std::size_t h = hash_base(buf) & mask_;
  for (;;) {
    Idx c = table_[h];
    const Point* d = data(c);
    bool eq = true;
    for (std::size_t j = 0; j < k; ++j)
      if (d[base_[j]] != buf[j]) {
        eq = false;
        break;
      }
    if (eq) return c;
    h = (h + 1) & mask_;
  }
}

Idx Group::pow(Idx a, long long e) const {
  Idx base = e < 0 ? inv_[a] : a;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  k %= ord_[a];
  Idx r = 0;
  while (k) {
    if (k & 1) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

Perm Group::element(Idx i) const { return Perm(std::vector<Point>(data(i), data(i) + n_)); }

std::optional<Idx> Group::find(const Point* img) const {
  Point buf[kMaxBase];
  for (std::size_t j = 0; j < base_.size(); ++j) buf[j] = img[base_[j]];
  auto r = find_by_base(buf);
  if (!r) return r;
  if (std::memcmp(data(*r), img, n_ * sizeof(Point)) != 0) return std::nullopt;
  return r;
}

std::optional<Idx> Group::find(const Perm& p) const {
  if (p.degree() != n_) return std::nullopt;
  return find(p.images().data());
}

std::vector<Perm> Group::generator_perms() const {
  std::vector<Perm> r;
  for (Idx g : gens_) r.push_back(element(g));
  return r;
}

void Group::compute_classes() const {
  class_id_.assign(order_, 0xffffffffu);
  class_reps_.clear();
  std::vector<Idx> queue;
  for (Idx x = 0; x < order_; ++x) {
    if (class_id_[x] != 0xffffffffu) continue;
    const std::uint32_t c = static_cast<std::uint32_t>(class_reps_.size());
    class_reps_.push_back(x);
    class_id_[x] = c;
    queue.assign(1, x);
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (Idx g : gens_) {
        Idx y = conj(queue[i], g);
        if (class_id_[y] == 0xffffffffu) {
          class_id_[y] = c;
          queue.push_back(y);
        }
      }
  }
}

const std::vector<std::uint32_t>& Group::class_ids() const {
  std::call_once(classes_once_, [this] { compute_classes(); });
  return class_id_;
}

const std::vector<Idx>& Group::class_reps() const {
  std::call_once(classes_once_, [this] { compute_classes(); });
  return class_reps_;
}

}  // namespace pstab

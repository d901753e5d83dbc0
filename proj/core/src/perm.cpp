#include "pstab/perm.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "pstab/errors.hpp"

namespace pstab {

Perm::Perm(std::vector<Point> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    Point v = img_[i];
    if (v >= img_.size())
      throw BadParameters("image " + std::to_string(v) + " of point " + std::to_string(i) + " out of range");
    if (seen[v]) throw BadParameters("point " + std::to_string(v) + " is hit twice");
    seen[v] = 1;
  }
}

Perm Perm::identity(std::size_t n) {
  if (n > kMaxDegree) throw BadParameters("degree too large");
  Perm p;
  p.img_.resize(n);
  std::iota(p.img_.begin(), p.img_.end(), Point{0});
  return p;
}

Perm Perm::from_cycles(std::string_view text, std::size_t degree) {
  Perm p = identity(degree);
  std::vector<char> used(degree, 0);
  std::size_t i = 0;
  auto where = [&](std::size_t at) { return "column " + std::to_string(at + 1); };
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (i == text.size()) throw ParseError(where(i), "empty permutation (write \"()\" for the identity)");
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError(where(i), "expected '('");
    ++i;
    std::vector<Point> cycle;
    for (;;) {
      skip();
      if (i == text.size()) throw ParseError(where(i), "unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw ParseError(where(i), "expected a point");
      std::size_t start = i;
      unsigned long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<unsigned long>(text[i] - '0');
        if (v > kMaxDegree) throw ParseError(where(start), "point too large");
        ++i;
      }
      if (v >= degree)
        throw ParseError(where(start), "point " + std::to_string(v) + " outside degree " + std::to_string(degree));
      if (used[v]) throw ParseError(where(start), "point " + std::to_string(v) + " repeated, not a bijection");
      used[v] = 1;
      cycle.push_back(static_cast<Point>(v));
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) p.img_[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip();
  }
  return p;
}

Perm Perm::operator*(const Perm& o) const {
  if (o.degree() != degree()) throw BadParameters("degree mismatch in product");
  Perm r;
  r.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) r.img_[i] = o.img_[img_[i]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) r.img_[img_[i]] = static_cast<Point>(i);
  return r;
}

Perm Perm::pow(long long e) const {
  Perm base = e < 0 ? inverse() : *this;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  Perm r = identity(degree());
  while (k) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

bool Perm::is_even() const {
  std::vector<char> seen(img_.size(), 0);
  std::size_t transpositions = 0;
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = 1;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

std::uint64_t Perm::order() const {
  std::vector<char> seen(img_.size(), 0);
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = 1;
      ++len;
    }
    r = std::lcm(r, len);
  }
  return r;
}

std::string Perm::to_cycles() const {
  std::ostringstream os;
  std::vector<char> seen(img_.size(), 0);
  bool any = false;
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    os << '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = 1;
      if (!first) os << ' ';
      os << j;
      first = false;
    }
    os << ')';
    any = true;
  }
  if (!any) os << "()";
  return os.str();
}

}  // namespace pstab

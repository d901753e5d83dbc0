#include "pstab/config.hpp"

#include <cstdlib>
#include <string>

#include "pstab/errors.hpp"

namespace pstab {
namespace {

Limits initial_limits() {
  try {
    return Limits::from_env();
  } catch (const Error&) {
    return Limits{};  // the CLI reports malformed variables itself
  }
}

Limits& storage() {
  static Limits l = initial_limits();
  return l;
}

void read_env(const char* name, std::size_t& out) {
  const char* v = std::getenv(name);
  if (!v || !*v) return;
  try {
    std::size_t pos = 0;
    unsigned long long x = std::stoull(v, &pos);
    if (pos != std::string(v).size() || x == 0) throw std::invalid_argument(v);
    out = static_cast<std::size_t>(x);
  } catch (const std::exception&) {
    throw BadParameters(std::string(name) + " must be a positive integer, got '" + v + "'");
  }
}

}  // namespace

Limits Limits::from_env() {
  Limits l;
  read_env("ORDER_CAP", l.order_cap);
  read_env("DEGREE_CAP", l.degree_cap);
  read_env("SUBGROUP_CAP", l.subgroup_cap);
  return l;
}

const Limits& limits() { return storage(); }
void set_limits(const Limits& l) { storage() = l; }

}  // namespace pstab

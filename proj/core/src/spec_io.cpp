#include "pstab/spec_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "pstab/errors.hpp"

namespace pstab {

using nlohmann::json;

namespace {

std::string line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

const json& require(const json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("/") + key, "missing field");
  return j.at(key);
}

std::uint64_t as_count(const json& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<long long>() < 0) throw ParseError(where, "expected a non-negative integer");
  return v.get<std::uint64_t>();
}

}  // namespace

GroupSpec parse_group_spec(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(line_col(text, e.byte > 0 ? e.byte - 1 : 0), "malformed JSON");
  }
  if (!j.is_object()) throw ParseError("/", "expected an object");
  if (j.contains("format") && j["format"] != 1) throw ParseError("/format", "unsupported format version");

  GroupSpec s;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ParseError("/name", "expected a string");
    s.name = j["name"].get<std::string>();
  }
  const json& kind = require(j, "kind");
  const json& gens = require(j, "generators");
  if (!gens.is_array()) throw ParseError("/generators", "expected an array");

  if (kind == "perm") {
    s.kind = GroupSpec::Kind::perm;
    s.degree = as_count(require(j, "degree"), "/degree");
    if (s.degree > kMaxDegree) throw ParseError("/degree", "degree too large");
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const std::string where = "/generators/" + std::to_string(i);
      if (!gens[i].is_string()) throw ParseError(where, "expected a cycle string");
      try {
        s.perms.push_back(Perm::from_cycles(gens[i].get<std::string>(), s.degree));
      } catch (const ParseError& e) {
        throw ParseError(where + " " + e.location, e.what());
      } catch (const BadParameters& e) {
        throw ParseError(where, e.what());
      }
    }
  } else if (kind == "matrix") {
    s.kind = GroupSpec::Kind::matrix;
    const std::uint64_t q = as_count(require(j, "field"), "/field");
    s.dim = as_count(require(j, "dim"), "/dim");
    if (s.dim == 0 || s.dim > 16) throw ParseError("/dim", "dimension out of range");
    FieldPtr f;
    try {
      f = std::make_shared<FqField>(static_cast<std::uint32_t>(q));
    } catch (const BadParameters& e) {
      throw ParseError("/field", e.what());
    }
    s.field = f->q();
    if (j.contains("action")) {
      const json& a = j["action"];
      if (!a.is_string() || (a != "auto" && a != "vectors" && a != "basis-orbits" && a != "projective"))
        throw ParseError("/action", "expected auto, vectors, basis-orbits or projective");
      s.action = a.get<std::string>();
    }
    auto read_vec = [&](const json& v, std::size_t len, const std::string& where) {
      if (!v.is_array() || v.size() != len)
        throw ParseError(where, "expected an array of " + std::to_string(len) + " entries");
      std::vector<std::uint32_t> out;
      for (std::size_t k = 0; k < len; ++k) {
        const std::string w = where + "/" + std::to_string(k);
        const std::uint64_t x = as_count(v[k], w);
        if (x >= s.field) throw ParseError(w, "entry outside F_" + std::to_string(s.field));
        out.push_back(static_cast<std::uint32_t>(x));
      }
      return out;
    };
    if (j.contains("seeds")) {
      if (s.action != "projective") throw ParseError("/seeds", "seeds require the projective action");
      const json& sd = j["seeds"];
      if (!sd.is_array()) throw ParseError("/seeds", "expected an array");
      for (std::size_t i = 0; i < sd.size(); ++i) {
        auto v = read_vec(sd[i], s.dim, "/seeds/" + std::to_string(i));
        bool nonzero = false;
        for (auto x : v) nonzero |= x != 0;
        if (!nonzero) throw ParseError("/seeds/" + std::to_string(i), "zero vector");
        s.seeds.push_back(std::move(v));
      }
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const std::string where = "/generators/" + std::to_string(i);
      auto m = read_vec(gens[i], s.dim * s.dim, where);
      FqMatrix M(f, s.dim);
      for (std::size_t r = 0; r < s.dim; ++r)
        for (std::size_t c = 0; c < s.dim; ++c) M.at(r, c) = m[r * s.dim + c];
      if (M.det() == 0) throw ParseError(where, "singular matrix");
      s.matrices.push_back(std::move(m));
    }
  } else {
    throw ParseError("/kind", "expected \"perm\" or \"matrix\"");
  }
  return s;
}

std::string write_group_spec(const GroupSpec& s) {
  json j = json::object();
  j["format"] = 1;
  j["name"] = s.name;
  if (s.kind == GroupSpec::Kind::perm) {
    j["kind"] = "perm";
    j["degree"] = s.degree;
    json g = json::array();
    for (const auto& p : s.perms) g.push_back(p.to_cycles());
    j["generators"] = g;
  } else {
    j["kind"] = "matrix";
    j["field"] = s.field;
    j["dim"] = s.dim;
    j["action"] = s.action;
    if (!s.seeds.empty()) j["seeds"] = s.seeds;
    j["generators"] = s.matrices;
  }
  return j.dump(2) + "\n";
}

GroupPtr load_group(const GroupSpec& s) {
  if (s.kind == GroupSpec::Kind::perm) return Group::generate(s.perms, s.degree, s.name);
  auto f = std::make_shared<FqField>(s.field);
  std::vector<FqMatrix> mats;
  for (const auto& m : s.matrices) {
    FqMatrix M(f, s.dim);
    for (std::size_t r = 0; r < s.dim; ++r)
      for (std::size_t c = 0; c < s.dim; ++c) M.at(r, c) = m[r * s.dim + c];
    mats.push_back(std::move(M));
  }
  if (mats.empty()) return Group::generate({}, 1, s.name);
  if (s.action == "projective") return projective_action(mats, s.seeds, s.name).group;
  VectorAction mode = VectorAction::automatic;
  if (s.action == "vectors") mode = VectorAction::all_vectors;
  if (s.action == "basis-orbits") mode = VectorAction::basis_orbits;
  return as_permutation_group(mats, mode, s.name).group;
}

GroupSpec perm_spec_of(const Group& G, std::string name) {
  GroupSpec s;
  s.name = std::move(name);
  s.kind = GroupSpec::Kind::perm;
  s.degree = G.degree();
  s.perms = G.generator_perms();
  return s;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw BadParameters("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace pstab

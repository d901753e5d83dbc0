#include "pstab_cli/corpus.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <thread>

#include "pstab/config.hpp"
#include "pstab/errors.hpp"
#include "pstab/spec_io.hpp"
#include "pstab/subgroups.hpp"

#ifndef PSTAB_DATA_DIR
#define PSTAB_DATA_DIR "data"
#endif

namespace pstab::cli {

namespace fs = std::filesystem;

const std::vector<std::string>& corpus_checks() {
  static const std::vector<std::string> c = {
      "order",           "sylow-order",    "sylow-abelian",   "p-stable",      "p-stable-1968",
      "section-p-stable", "involves-qdp",  "has-qdp-subgroup", "fusion-p-stable", "fusion-qdp-free",
      "fusion-soluble",  "op-order"};
  return c;
}

namespace {

std::uint32_t u32(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned()) throw ParseError(where, "expected a non-negative integer");
  const auto v = j.get<std::uint64_t>();
  if (v > 0xffffffffu) throw ParseError(where, "value too large");
  return static_cast<std::uint32_t>(v);
}

}  // namespace

Recipe parse_recipe(const Json& j) {
  if (!j.is_object()) throw ParseError("recipe", "expected an object");
  Recipe r;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& k = it.key();
    const std::string where = "recipe." + k;
    if (k == "kind") r.kind = it->get<std::string>();
    else if (k == "p") r.p = u32(*it, where);
    else if (k == "q") r.q = u32(*it, where);
    else if (k == "n") r.n = u32(*it, where);
    else if (k == "family") r.family = it->get<std::string>();
    else if (k == "sign") r.sign = it->get<int>();
    else throw ParseError(where, "unknown recipe field");
  }
  if (r.kind.empty()) throw ParseError("recipe.kind", "missing");
  return r;
}

Recipe parse_recipe_string(const std::string& s) {
  Json j{{"kind", s.substr(0, s.find(':'))}};
  if (auto colon = s.find(':'); colon != std::string::npos) {
    std::string rest = s.substr(colon + 1);
    std::size_t pos = 0;
    while (pos < rest.size()) {
      std::size_t comma = rest.find(',', pos);
      if (comma == std::string::npos) comma = rest.size();
      const std::string kv = rest.substr(pos, comma - pos);
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw BadParameters("recipe parameter '" + kv + "' is not key=value");
      const std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
      if (key == "family") {
        j[key] = val;
      } else {
        try {
          std::size_t used = 0;
          const long long v = std::stoll(val, &used);
          if (used != val.size()) throw std::invalid_argument(val);
          if (key == "sign") j[key] = int(v);
          else if (v < 0) throw BadParameters("recipe parameter " + key + " must be non-negative");
          else j[key] = std::uint64_t(v);
        } catch (const std::logic_error&) {
          throw BadParameters("recipe parameter " + key + " is not an integer");
        }
      }
      pos = comma + 1;
    }
  }
  return parse_recipe(j);
}

Json recipe_json(const Recipe& r) {
  Json j{{"kind", r.kind}};
  if (r.p) j["p"] = r.p;
  if (r.q) j["q"] = r.q;
  if (r.n) j["n"] = r.n;
  if (!r.family.empty()) j["family"] = r.family;
  if (r.sign) j["sign"] = r.sign;
  return j;
}

Suite parse_suite(const std::string& text, const std::string& base_dir) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), e.what());
  }
  if (!doc.is_object()) throw ParseError("$", "suite must be an object");
  if (doc.contains("format") && doc["format"] != 1) throw ParseError("format", "unsupported format");
  Suite s;
  s.name = doc.value("name", std::string("unnamed"));
  s.base_dir = base_dir;
  if (!doc.contains("entries") || !doc["entries"].is_array()) throw ParseError("entries", "expected an array");
  const Json& entries = doc["entries"];
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const Json& ej = entries[i];
    const std::string where = "entries[" + std::to_string(i) + "]";
    if (!ej.is_object()) throw ParseError(where, "expected an object");
    CorpusEntry e;
    if (!ej.contains("name") || !ej["name"].is_string()) throw ParseError(where + ".name", "missing");
    e.name = ej["name"].get<std::string>();
    if (!ej.contains("p")) throw ParseError(where + ".p", "missing");
    e.p = u32(ej["p"], where + ".p");
    if (ej.contains("recipe")) e.recipe = parse_recipe(ej["recipe"]);
    else if (ej.contains("group") && ej["group"].is_string()) e.group_path = ej["group"].get<std::string>();
    else throw ParseError(where, "needs a recipe or a group path");
    const Json exp = ej.value("expected", Json::object());
    if (!exp.is_object()) throw ParseError(where + ".expected", "expected an object");
    for (auto it = exp.begin(); it != exp.end(); ++it) {
      const std::string w = where + ".expected." + it.key();
      const auto& known = corpus_checks();
      if (std::find(known.begin(), known.end(), it.key()) == known.end()) throw ParseError(w, "unknown check");
      if (!it->is_object() || !it->contains("value")) throw ParseError(w, "needs a value");
      const std::string basis = it->value("basis", std::string());
      if (basis != "published" && basis != "derived" && basis != "trivial")
        throw ParseError(w + ".basis", "must be published, derived or trivial");
      e.expected.push_back({it.key(), (*it)["value"], basis});
    }
    s.entries.push_back(std::move(e));
  }
  return s;
}

Suite load_suite(const std::string& path) {
  const fs::path p(path);
  return parse_suite(read_text_file(path), p.has_parent_path() ? p.parent_path().string() : ".");
}

std::string resolve_suite_path(const std::string& name) {
  if (name != "default") return name;
  if (const char* env = std::getenv("PSTAB_DATA_DIR")) return (fs::path(env) / "default_suite.json").string();
  return (fs::path(PSTAB_DATA_DIR) / "default_suite.json").string();
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Evaluator {
  GroupPtr G;
  std::uint64_t p;
  bool timing;
  Json times = Json::object();
  bool witnesses_ok = true;
  std::optional<FusionSystem> F;

  template <class Fn>
  Json timed(const std::string& key, Fn&& fn) {
    const auto t0 = Clock::now();
    Json v = fn();
    if (timing) times[key] = ms_since(t0);
    return v;
  }

  const FusionSystem& fusion() {
    if (!F) F = fusion_system(G, p);
    return *F;
  }

  Json eval(const std::string& c) {
    const Group& g = *G;
    return timed(c, [&]() -> Json {
      if (c == "order") return g.order();
      if (c == "sylow-order") return sylow(g, p).order();
      if (c == "sylow-abelian") return is_abelian(g, sylow(g, p));
      if (c == "p-stable" || c == "p-stable-1968" || c == "section-p-stable") {
        const StabilityVerdict v = c == "p-stable"        ? is_p_stable(g, p)
                                   : c == "p-stable-1968" ? is_p_stable_def1968(g, p)
                                                          : is_section_p_stable(g, p);
        if (v.witness && !verify_witness(g, p, *v.witness)) witnesses_ok = false;
        return v.stable;
      }
      if (c == "involves-qdp") {
        const auto w = involves_qdp(G, std::uint32_t(p));
        if (w && !verify_section(g, *w)) witnesses_ok = false;
        return w.has_value();
      }
      if (c == "has-qdp-subgroup") return has_subgroup_qdp_like(G, qdp_reference(std::uint32_t(p))).has_value();
      if (c == "fusion-p-stable") return is_p_stable_fusion(fusion()).stable;
      if (c == "fusion-qdp-free") return is_qdp_free(fusion()).free;
      if (c == "fusion-soluble") return is_soluble(fusion()).soluble;
      if (c == "op-order") return op_F(fusion()).order();
      throw BadParameters("unknown check " + c);
    });
  }
};

}  // namespace

EntryResult run_entry(const Suite& s, const CorpusEntry& e, bool timing) {
  EntryResult res;
  Json& r = res.report;
  r["name"] = e.name;
  r["p"] = e.p;
  if (e.recipe) r["recipe"] = recipe_json(*e.recipe);
  else r["group"] = e.group_path;
  const auto t0 = Clock::now();
  try {
    GroupPtr G;
    if (e.recipe) {
      G = build_recipe(*e.recipe).group;
    } else {
      fs::path path(e.group_path);
      if (path.is_relative()) path = fs::path(s.base_dir) / path;
      G = load_group(parse_group_spec(read_text_file(path.string())));
    }
    Evaluator ev{G, e.p, timing, Json::object(), true, std::nullopt};
    Json checks = Json::object();
    for (const Expectation& x : e.expected) {
      const Json actual = ev.eval(x.check);
      const bool ok = actual == x.value;
      res.ok = res.ok && ok;
      checks[x.check] = Json{{"expected", x.value}, {"actual", actual}, {"basis", x.basis}, {"ok", ok}};
    }
    r["checks"] = checks;
    r["witnesses_verified"] = ev.witnesses_ok;
    res.ok = res.ok && ev.witnesses_ok;
    if (timing) r["timing_ms"] = ev.times;
  } catch (const CapExceeded& ex) {
    res.ok = false;
    res.cap_hit = true;
    r["error"] = Json{{"kind", "CapExceeded"}, {"message", ex.what()}};
  } catch (const BadParameters& ex) {
    res.ok = false;
    r["error"] = Json{{"kind", "BadParameters"}, {"message", ex.what()}};
  }
  if (timing) r["total_ms"] = ms_since(t0);
  r["ok"] = res.ok;
  return res;
}

SuiteResult run_suite(const Suite& s, unsigned threads, bool timing) {
  std::vector<EntryResult> results(s.entries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < s.entries.size();) results[i] = run_entry(s, s.entries[i], timing);
  };
  threads = std::max(1u, std::min<unsigned>(threads, std::max<std::size_t>(1, s.entries.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  SuiteResult out;
  out.report = envelope("corpus");
  out.report["suite"] = s.name;
  Json entries = Json::array(), failed = Json::array(), caps_hit = Json::array();
  for (std::size_t i = 0; i < results.size(); ++i) {
    entries.push_back(results[i].report);
    if (!results[i].ok) failed.push_back(s.entries[i].name);
    if (results[i].cap_hit) caps_hit.push_back(s.entries[i].name);
  }
  out.failed = failed.size();
  out.report["entries"] = entries;
  out.report["caps_hit"] = caps_hit;
  out.report["summary"] =
      Json{{"total", results.size()}, {"passed", results.size() - failed.size()}, {"failed", failed.size()},
           {"failed_entries", failed}};
  return out;
}

}  // namespace pstab::cli

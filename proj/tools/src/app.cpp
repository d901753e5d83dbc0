#include "pstab_cli/app.hpp"

#include <chrono>
#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "pstab/config.hpp"
#include "pstab/constructions.hpp"
#include "pstab/errors.hpp"
#include "pstab/spec_io.hpp"
#include "pstab/subgroups.hpp"
#include "pstab_cli/corpus.hpp"

namespace pstab::cli {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct GroupInput {
  std::string group_path;
  std::string recipe;
  std::uint64_t p = 0;
  bool timing = false;
};

struct Loaded {
  GroupPtr G;
  Json echo;
};

Loaded load_input(const GroupInput& in) {
  if (in.group_path.empty() == in.recipe.empty()) throw BadParameters("give exactly one of --group and --recipe");
  Loaded l;
  if (!in.recipe.empty()) {
    const Recipe r = parse_recipe_string(in.recipe);
    l.G = build_recipe(r).group;
    l.echo["recipe"] = recipe_json(r);
  } else {
    const GroupSpec spec = parse_group_spec(read_text_file(in.group_path));
    l.G = load_group(spec);
    l.echo["group"] = in.group_path;
    l.echo["name"] = spec.name;
  }
  l.echo["p"] = in.p;
  l.echo["order"] = l.G->order();
  return l;
}

void add_group_input(CLI::App* cmd, GroupInput& in) {
  cmd->add_option("--group", in.group_path, "group-spec JSON file");
  cmd->add_option("--recipe", in.recipe, "recipe such as qdp:p=3 or classical:family=PSL,n=3,q=3");
  cmd->add_option("--p", in.p, "prime")->required();
  cmd->add_flag("--timing", in.timing, "include wall-clock timings (makes output run-dependent)");
}

void check_prime(std::uint64_t p) {
  if (!is_prime(p)) throw BadParameters("p must be prime");
}

int emit(std::ostream& out, const Json& j) {
  out << j.dump(2) << '\n';
  return kOk;
}

int error_report(std::ostream& out, std::ostream& err, const std::string& command, const std::string& kind,
                 const std::string& message, int code) {
  Json j = envelope(command);
  j["error"] = Json{{"kind", kind}, {"message", message}};
  if (code == kCapExceeded) j["caps_hit"] = Json::array({message});
  out << j.dump(2) << '\n';
  err << "error: " << message << '\n';
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite-group p-stability toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", toolkit_version());

  std::optional<std::size_t> order_cap, degree_cap, subgroup_cap;
  app.add_option("--order-cap", order_cap, "largest group order to build (env ORDER_CAP)");
  app.add_option("--degree-cap", degree_cap, "largest permutation degree (env DEGREE_CAP)");
  app.add_option("--subgroup-cap", subgroup_cap, "largest order for lattice enumeration (env SUBGROUP_CAP)");

  // construct
  auto* construct = app.add_subcommand("construct", "build a named group and write its group-spec document");
  std::string c_recipe, c_out, c_family;
  std::uint32_t c_p = 0, c_q = 0;
  std::size_t c_n = 0;
  int c_sign = 0;
  construct->add_option("recipe", c_recipe, "recipe kind, optionally with parameters (kind:p=3,...)")->required();
  construct->add_option("--p", c_p);
  construct->add_option("--q", c_q);
  construct->add_option("--n", c_n);
  construct->add_option("--family", c_family);
  construct->add_option("--sign", c_sign);
  construct->add_option("--out", c_out, "output file (default stdout)");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "decide p-stability variants and Qd(p) involvement");
  GroupInput a_in;
  std::vector<std::string> a_checks{"p-stable"};
  add_group_input(analyze, a_in);
  analyze->add_option("--check", a_checks, "p-stable | p-stable-1968 | section-p-stable | involves-qdp")
      ->check(CLI::IsMember({"p-stable", "p-stable-1968", "section-p-stable", "involves-qdp"}))
      ->capture_default_str();

  // fusion
  auto* fusion = app.add_subcommand("fusion", "fusion system of G on a Sylow p-subgroup");
  GroupInput f_in;
  bool f_report = false;
  add_group_input(fusion, f_in);
  fusion->add_flag("--report", f_report, "include the per-class status table");

  // classify
  auto* classify = app.add_subcommand("classify", "classification verdicts for simple groups");
  lie::ClassifierQuery cq;
  bool cl_selfcheck = false, cl_cross = false;
  std::size_t cl_fuzz = 0;
  classify->add_option("--family", cq.family, "alternating PSL PSU PSp Omega Omega+ Omega- B C D 2D E6 E7 E8 2E6 F4 2F4 G2 2G2 3D4 2B2 sporadic");
  classify->add_option("--n", cq.n, "degree, dimension or rank");
  classify->add_option("--q", cq.q, "field order");
  classify->add_option("--p", cq.p, "odd prime");
  classify->add_option("--name", cq.name, "sporadic group name");
  classify->add_flag("--crosscheck", cl_cross, "build the group when it fits the caps and compare");
  classify->add_flag("--selfcheck", cl_selfcheck, "run the arithmetic identity grids");
  classify->add_option("--fuzz", cl_fuzz, "with --selfcheck: number of random verdict queries");

  // corpus
  auto* corpus = app.add_subcommand("corpus", "run a corpus of groups against recorded expectations");
  std::string suite = "default";
  unsigned threads = 1;
  bool k_timing = false;
  corpus->add_option("--suite", suite, "suite file, or 'default'")->capture_default_str();
  corpus->add_option("--threads", threads, "worker threads")->check(CLI::Range(1u, 256u));
  corpus->add_flag("--timing", k_timing, "include wall-clock timings");

  std::vector<const char*> argv{"pstab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::string command = args.empty() ? "" : args.front();
  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    return error_report(out, err, command, "BadParameters", e.what(), kBadParameters);
  }

  try {
    Limits l = Limits::from_env();
    if (order_cap) l.order_cap = *order_cap;
    if (degree_cap) l.degree_cap = *degree_cap;
    if (subgroup_cap) l.subgroup_cap = *subgroup_cap;
    set_limits(l);

    if (*construct) {
      command = "construct";
      Recipe r = parse_recipe_string(c_recipe);
      if (c_p) r.p = c_p;
      if (c_q) r.q = c_q;
      if (c_n) r.n = c_n;
      if (!c_family.empty()) r.family = c_family;
      if (c_sign) r.sign = c_sign;
      const Built b = build_recipe(r);
      const std::string doc = write_group_spec(b.spec);
      if (c_out.empty()) {
        out << doc;
      } else {
        std::ofstream f(c_out);
        if (!(f << doc)) throw BadParameters("cannot write " + c_out);
        Json j = envelope("construct");
        j["recipe"] = recipe_json(r);
        j["order"] = b.group->order();
        j["degree"] = b.group->degree();
        j["out"] = c_out;
        emit(out, j);
      }
      err << b.spec.name << ": order " << b.group->order() << ", degree " << b.group->degree() << '\n';
      return kOk;
    }

    if (*analyze) {
      command = "analyze";
      check_prime(a_in.p);
      const Loaded in = load_input(a_in);
      const Group& G = *in.G;
      Json j = envelope("analyze");
      j["input"] = in.echo;
      Json results = Json::object(), times = Json::object();
      for (const std::string& c : a_checks) {
        const auto t0 = Clock::now();
        if (c == "involves-qdp") {
          results[c] = section_json(G, involves_qdp(in.G, std::uint32_t(a_in.p)));
        } else {
          const StabilityVerdict v = c == "p-stable"        ? is_p_stable(G, a_in.p)
                                     : c == "p-stable-1968" ? is_p_stable_def1968(G, a_in.p)
                                                            : is_section_p_stable(G, a_in.p);
          results[c] = stability_json(G, a_in.p, v);
        }
        times[c] = ms_since(t0);
        const Json& r = results[c];
        err << c << ": " << (r.contains("stable") ? (r["stable"].get<bool>() ? "stable" : "not stable")
                                                  : (r["involved"].get<bool>() ? "involved" : "not involved"))
            << '\n';
      }
      j["results"] = results;
      j["caps_hit"] = Json::array();
      if (a_in.timing) j["timing_ms"] = times;
      return emit(out, j);
    }

    if (*fusion) {
      command = "fusion";
      check_prime(f_in.p);
      const Loaded in = load_input(f_in);
      const auto t0 = Clock::now();
      const FusionSystem F = fusion_system(in.G, f_in.p);
      Json j = envelope("fusion");
      j["input"] = in.echo;
      j["fusion"] = fusion_json(F, f_report);
      j["caps_hit"] = Json::array();
      if (f_in.timing) j["timing_ms"] = ms_since(t0);
      const Json& fj = j["fusion"];
      err << "classes " << fj["classes"] << ", |O_p(F)| " << fj["op_F"]["order"] << ", soluble "
          << fj["soluble"]["value"] << ", p-stable " << fj["p_stable"]["stable"] << ", Qd(p)-free "
          << fj["qdp_free"]["free"] << '\n';
      return emit(out, j);
    }

    if (*classify) {
      command = "classify";
      Json j = envelope("classify");
      if (cl_selfcheck) {
        const lie::IdentityGridReport grid = lie::identity_grid();
        j["selfcheck"] = identity_grid_json(grid);
        bool ok = grid.ok();
        if (cl_fuzz) {
          std::mt19937_64 rng(20240601);
          std::size_t bad = 0, boundary = 0;
          for (std::size_t i = 0; i < cl_fuzz; ++i) {
            const lie::ClassifierVerdict v = lie::qdp_verdict(lie::random_query(rng));
            if ((v.sylow_abelian && (v.involves_qdp || !v.p_stable)) || v.p_stable == v.involves_qdp) ++bad;
            boundary += v.boundary;
          }
          j["fuzz"] = Json{{"queries", cl_fuzz}, {"violations", bad}, {"boundary_flags", boundary}};
          ok = ok && bad == 0;
        }
        std::size_t checked = 0;
        for (const auto& row : grid.rows) checked += row.checked;
        err << "identity grid: " << checked << " checks, " << grid.failures.size() << " failures\n";
        emit(out, j);
        return ok ? kOk : kMismatch;
      }
      if (cq.family.empty() || cq.p == 0) throw BadParameters("classify needs --family and --p (or --selfcheck)");
      const lie::ClassifierQuery q = lie::validate(cq);
      const lie::ClassifierVerdict v = lie::qdp_verdict(q);
      j["verdict"] = classifier_json(q, v);
      if (cl_cross) j["crosscheck"] = crosscheck_json(lie::verdict_crosscheck(q));
      err << "sylow abelian " << v.sylow_abelian << ", involves Qd(p) " << v.involves_qdp << " ("
          << lie::witness_name(v.minimal_witness, q.p) << ")" << (v.boundary ? ", boundary flagged" : "") << '\n';
      return emit(out, j);
    }

    if (*corpus) {
      command = "corpus";
      const Suite s = load_suite(resolve_suite_path(suite));
      const SuiteResult r = run_suite(s, threads, k_timing);
      emit(out, r.report);
      err << s.name << ": " << r.report["summary"]["passed"] << "/" << r.report["summary"]["total"] << " passed\n";
      for (const auto& name : r.report["summary"]["failed_entries"]) err << "  failed: " << name.get<std::string>() << '\n';
      return r.failed ? kMismatch : kOk;
    }
  } catch (const CapExceeded& e) {
    return error_report(out, err, command, "CapExceeded", e.what(), kCapExceeded);
  } catch (const BadParameters& e) {
    return error_report(out, err, command, "BadParameters", e.what(), kBadParameters);
  } catch (const std::exception& e) {
    return error_report(out, err, command, "Internal", e.what(), kInternal);
  }
  return kOk;
}

}  // namespace pstab::cli

#include "hap/cli.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hap/error.hpp"
#include "hap/io.hpp"
#include "hap/parallel.hpp"

namespace hap::cli {

namespace {

using io::json;

struct Emission {
  json result = json::object();
  json parameters = json::object();
  std::string mode = "exact";
  std::ostringstream table;
  int code = kOk;

  Emission() { table << std::boolalpha; }
};

class Table {
 public:
  explicit Table(std::ostream& os) : os_(os) {}
  template <class V>
  Table& row(const std::string& key, const V& value) {
    os_ << "  " << std::left << std::setw(22) << key << ' ' << value << '\n';
    return *this;
  }

 private:
  std::ostream& os_;
};

std::string join_sets(const std::vector<FiniteSet>& sets) {
  std::string s;
  for (const auto& f : sets) s += (s.empty() ? "" : " ") + f.to_string();
  return s;
}

std::uint64_t effective_seed(const std::optional<std::uint64_t>& seed) { return seed.value_or(0); }

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BudgetExceeded:
    case ErrorKind::ModeInfeasible: return kBudgetExceeded;
    case ErrorKind::Internal: return kInvariantViolation;
    default: return kInputError;
  }
}

SetFamily load_family(const std::string& path, std::optional<int> universe) {
  return io::parse_family(io::read_file(path), universe);
}

int infer_m(const SetFamily& family, std::optional<int> m) {
  if (m) return *m;
  auto size = common_size(family);
  require(size.has_value(), ErrorKind::Input, "cannot infer m: pass --m or supply a nonempty uniform family");
  return *size;
}

}  // namespace

CliResult run(const std::vector<std::string>& args) {
  CliResult result;
  std::ostringstream out, err;

  CLI::App app{"Exhaustive search and verification for reachable house sets and related set systems", "hap"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  int threads = 0;
  std::optional<std::uint64_t> seed;
  app.add_flag("--json", as_json, "Machine-readable JSON output");
  app.add_option("--threads", threads, "Thread cap (default: all cores)")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", seed, "Seed for sampled and heuristic modes");

  Emission em;
  std::function<void()> action;
  std::string command;

  // reach
  auto* reach = app.add_subcommand("reach", "Reachable family of a profile, by both enumerators");
  std::string reach_file;
  reach->add_option("profile", reach_file, "Profile file (text or JSON)")->required();
  reach->callback([&] {
    command = "reach";
    action = [&] {
      auto profile = io::parse_profile(io::read_file(reach_file));
      em.parameters = {{"profile", io::to_json(profile)}};
      auto by_perm = reachable_family_by_permutations(profile);
      auto by_pom = reachable_family_by_one_poms(profile);
      const bool agree = by_perm.family.sets == by_pom.family.sets;
      auto verdict = has_property_p(by_perm.family, profile.m, CheckMode::Exact);
      em.result = {{"family", io::to_json(by_perm.family)},
                   {"size", by_perm.family.size()},
                   {"enumerators_agree", agree},
                   {"property_p", io::to_json(verdict)}};
      em.table << "reachable sets (" << by_perm.family.size() << "):\n" << io::format_family(by_perm.family);
      em.table << (agree ? "enumerators agree\n" : "ENUMERATORS DISAGREE\n");
      em.table << (verdict.holds ? "property P holds\n" : "PROPERTY P FAILS\n");
      if (!agree || !verdict.holds) em.code = kInvariantViolation;
    };
  });

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Closed-form bounds for m buyers");
  int bounds_m = 1;
  bounds->add_option("m", bounds_m)->required()->check(CLI::Range(1, 4096));
  bounds->callback([&] {
    command = "bounds";
    action = [&] {
      em.parameters = {{"m", bounds_m}};
      auto r = bounds_report(bounds_m);
      em.result = io::to_json(r);
      Table(em.table)
          .row("m", r.m)
          .row("ell", r.ell)
          .row("thm_i (asymptotic)", to_decimal(r.thm_i))
          .row("thm_ii", to_decimal(r.thm_ii))
          .row("prop_lower", to_decimal(r.prop_lower))
          .row("akm_upper", to_decimal(r.akm_upper));
    };
  });

  // ak
  auto* akc = app.add_subcommand("ak", "Maximum k-uniform t-intersecting family on [n]");
  int ak_n = 1, ak_k = 1, ak_t = 1;
  bool ak_cross = false;
  akc->add_option("n", ak_n)->required();
  akc->add_option("k", ak_k)->required();
  akc->add_option("t", ak_t)->required();
  akc->add_flag("--crosscheck", ak_cross, "Compare against maximum-clique search when C(n,k) <= 70");
  akc->callback([&] {
    command = "ak";
    action = [&] {
      em.parameters = {{"n", ak_n}, {"k", ak_k}, {"t", ak_t}, {"crosscheck", ak_cross}};
      auto v = ak(ak_n, ak_k, ak_t, ak_cross);
      em.result = {{"ak", to_decimal(v)}};
      Table(em.table).row("AK(n,k,t)", to_decimal(v));
    };
  });

  // fi-scan
  auto* fi = app.add_subcommand("fi-scan", "Sizes of the families F_i for m");
  int fi_m = 1;
  fi->add_option("m", fi_m)->required()->check(CLI::Range(1, 64));
  fi->callback([&] {
    command = "fi-scan";
    action = [&] {
      em.parameters = {{"m", fi_m}};
      auto scan = fi_family_scan(fi_m);
      em.result = io::to_json(scan);
      for (std::size_t i = 0; i < scan.sizes.size(); ++i)
        Table(em.table).row("|F_" + std::to_string(i) + "|", to_decimal(scan.sizes[i]));
      Table(em.table).row("argmax", scan.argmax).row("m/8", fi_m / 8.0);
    };
  });

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Brute-force extremal values f, g, h, j, or the DR-free maximum");
  std::string which;
  int o_m = 1, o_u = 0, o_r = 1, o_k = 2, o_restarts = 32, o_iterations = 200;
  bool o_exhaustive = false, o_heuristic = false;
  std::uint64_t o_budget = 50'000'000;
  oracle->add_option("which", which)->required()->check(CLI::IsMember({"f", "g", "h", "j", "dr"}));
  oracle->add_option("--m", o_m);
  oracle->add_option("--u", o_u, "Ground-set size");
  oracle->add_option("--r", o_r, "Uniformity (dr)");
  oracle->add_option("--k", o_k, "Forbidden number of disjointly representable sets (dr)");
  oracle->add_flag("--exhaustive", o_exhaustive);
  oracle->add_flag("--heuristic", o_heuristic, "Random restarts with hill climbing (f)");
  oracle->add_option("--budget", o_budget, "Node limit for branch and bound");
  oracle->add_option("--restarts", o_restarts);
  oracle->add_option("--iterations", o_iterations);
  oracle->callback([&] {
    command = "oracle";
    action = [&] {
      em.parameters = {{"which", which}};
      if (which == "f") {
        FOracleConfig cfg;
        cfg.exhaustive = !o_heuristic;
        cfg.seed = effective_seed(seed);
        cfg.restarts = o_restarts;
        cfg.iterations = o_iterations;
        cfg.universe = o_u;
        if (!cfg.exhaustive) require(seed.has_value(), ErrorKind::Input, "heuristic mode requires --seed");
        em.parameters["m"] = o_m;
        em.parameters["heuristic"] = o_heuristic;
        if (o_heuristic) {
          em.parameters["restarts"] = o_restarts;
          em.parameters["iterations"] = o_iterations;
          em.mode = "sample";
        }
        auto r = f_oracle(o_m, cfg);
        em.result = io::to_json(r);
        Table(em.table).row("f(" + std::to_string(o_m) + ")", r.value).row("exact", r.exact);
        em.table << "witness:\n" << io::format_profile(r.witness);
        return;
      }
      if (which == "dr") {
        const int u = o_u > 0 ? o_u : 6;
        em.parameters.update({{"r", o_r}, {"k", o_k}, {"u", u}, {"exhaustive", o_exhaustive}});
        auto r = max_dr_free_family_oracle(o_r, o_k, u, o_exhaustive, o_budget);
        em.result = io::to_json(r);
        Table(em.table)
            .row("value", r.value)
            .row("bound C(r+k-1,k-1)", to_decimal(r.bound))
            .row("exact", r.exact)
            .row("witness", join_sets(r.witness.sets));
        if (BigCount(r.value) > r.bound) em.code = kInvariantViolation;
        return;
      }
      const int u = o_u > 0 ? o_u : 5;
      em.parameters.update({{"m", o_m}, {"u", u}, {"exhaustive", o_exhaustive}});
      if (which == "j") {
        auto r = j_oracle(o_m, u, SearchBudget{o_exhaustive, o_budget});
        em.result = io::to_json(r);
        Table(em.table)
            .row("j(" + std::to_string(o_m) + ")", r.value)
            .row("bound", to_decimal(r.bound))
            .row("exact", r.exact)
            .row("witness", join_sets(r.witness.sets));
        if (BigCount(r.value) > r.bound) em.code = kInvariantViolation;
        return;
      }
      OracleBudget budget{o_exhaustive, o_budget};
      auto r = which == "g" ? g_oracle(o_m, u, budget) : h_oracle(o_m, u, budget);
      em.result = io::to_json(r);
      Table(em.table)
          .row(which + "(" + std::to_string(o_m) + ")", r.value)
          .row("exact", r.exact)
          .row("witness", join_sets(r.witness.sets));
    };
  });

  // conjecture
  auto* conj = app.add_subcommand("conjecture", "Search for counterexamples to the set-pair conjectures");
  std::string conj_which;
  int c_a = 1, c_b = 1, c_t = 1, c_u = 0;
  bool c_exhaustive = false;
  std::uint64_t c_budget = 100'000'000;
  conj->add_option("which", conj_which)->required()->check(CLI::IsMember({"tuz", "ak"}));
  conj->add_option("a", c_a)->required();
  conj->add_option("b", c_b)->required();
  conj->add_option("--t", c_t);
  conj->add_option("--u", c_u);
  conj->add_flag("--exhaustive", c_exhaustive);
  conj->add_option("--budget", c_budget);
  conj->callback([&] {
    command = "conjecture";
    action = [&] {
      const int u = c_u > 0 ? c_u : c_a + c_b + 1;
      em.parameters = {{"which", conj_which}, {"a", c_a}, {"b", c_b}};
      if (conj_which == "ak") em.parameters["t"] = c_t;
      em.parameters.update({{"u", u}, {"exhaustive", c_exhaustive}});
      SearchBudget budget{c_exhaustive, c_budget};
      auto r = conj_which == "tuz" ? conjecture_tuz_search(c_a, c_b, u, budget)
                                   : conjecture_ak_search(c_a, c_b, c_t, u, budget);
      em.result = io::to_json(r);
      Table(em.table)
          .row("max_found", r.max_found)
          .row("conjectured_bound", to_decimal(r.conjectured_bound))
          .row("known_bound", to_decimal(r.known_bound))
          .row("exact", r.exact);
      if (r.counterexample)
        em.table << "COUNTEREXAMPLE FOUND\n";
      else
        em.table << "NO COUNTEREXAMPLE (" << (r.exact ? "exhaustive" : "budgeted") << " up to u=" << u << ")\n";
      em.result["verdict"] = r.counterexample ? "COUNTEREXAMPLE FOUND"
                                              : std::string("NO COUNTEREXAMPLE (") +
                                                    (r.exact ? "exhaustive" : "budgeted") +
                                                    " up to u=" + std::to_string(u) + ")";
      if (!r.known_bound_respected) em.code = kInvariantViolation;
    };
  });

  // ellem
  auto* ellem = app.add_subcommand("ellem", "Round procedure on a preference matrix");
  std::string ellem_file;
  std::optional<int> e_L, e_depth;
  bool e_verify = false;
  ellem->add_option("profile", ellem_file)->required();
  ellem->add_option("--L", e_L);
  ellem->add_option("--depth", e_depth);
  ellem->add_flag("--verify", e_verify, "Check the outcome against all reachable sets");
  ellem->callback([&] {
    command = "ellem";
    action = [&] {
      auto profile = io::parse_profile(io::read_file(ellem_file));
      auto params = default_ellem_params(profile.m);
      if (e_L) params.L = *e_L;
      if (e_depth) params.depth = *e_depth;
      em.parameters = {{"profile", io::to_json(profile)}, {"L", params.L}, {"depth", params.depth}};
      auto outcome = ellem_analyze(profile, params);
      em.result = {{"outcome", io::to_json(outcome)}};
      Table(em.table).row("outcome", variant_name(outcome));
      if (const auto* cc = std::get_if<CommonCore>(&outcome)) Table(em.table).row("core", cc->core.to_string());
      if (const auto* lx = std::get_if<LargeX>(&outcome))
        Table(em.table).row("x_set", lx->x_set.to_string()).row("level", lx->level);
      if (e_verify) {
        bool ok = verify_ellem_outcome(profile, outcome);
        em.result["verified"] = ok;
        Table(em.table).row("verified", ok);
        if (!ok) em.code = kInvariantViolation;
      }
    };
  });

  // check-p / check-q
  std::string chk_file, chk_mode = "exact";
  std::optional<int> chk_m, chk_u;
  std::uint64_t chk_samples = 100'000;
  int chk_small = 4;
  auto add_check = [&](const std::string& name, Property property) {
    auto* sub = app.add_subcommand(name, "Property " + to_string(property) + " of a uniform family");
    sub->add_option("family", chk_file)->required();
    sub->add_option("--m", chk_m);
    sub->add_option("--u", chk_u);
    sub->add_option("--mode", chk_mode)->check(CLI::IsMember({"exact", "refute"}));
    sub->add_option("--samples", chk_samples);
    sub->add_option("--small", chk_small, "Refute mode scans every tuple up to this size");
    sub->callback([&, name, property] {
      command = name;
      action = [&, property] {
        auto family = load_family(chk_file, chk_u);
        const int m = infer_m(family, chk_m);
        const auto mode = chk_mode == "exact" ? CheckMode::Exact : CheckMode::Refute;
        CheckConfig cfg;
        cfg.seed = effective_seed(seed);
        cfg.samples = chk_samples;
        cfg.small_tuples = chk_small;
        em.mode = chk_mode;
        em.parameters = {{"family", io::to_json(family)}, {"m", m}, {"mode", chk_mode}};
        if (mode == CheckMode::Refute) em.parameters.update({{"samples", chk_samples}, {"small", chk_small}});
        auto v = property == Property::P ? has_property_p(family, m, mode, cfg) : has_property_q(family, m, mode, cfg);
        em.result = io::to_json(v);
        Table t(em.table);
        t.row("property", to_string(property)).row("mode", chk_mode);
        t.row("holds", mode == CheckMode::Refute && v.holds ? std::string("no violation found")
                                                            : std::string(v.holds ? "true" : "false"));
        if (!v.holds) t.row("k", *v.k).row("witness", join_sets(v.witness_sets));
        if (property == Property::Q && v.holds && mode == CheckMode::Exact) {
          bool ub = union_bound_check(family, m);
          em.result["union_bound"] = ub;
          t.row("union bound", ub);
          if (!ub) em.code = kInvariantViolation;
        }
      };
    });
  };
  add_check("check-p", Property::P);
  add_check("check-q", Property::Q);

  // transversals
  auto* trans = app.add_subcommand("transversals", "Minimal transversals and the Bollobás sum of a family");
  std::string tr_file;
  std::optional<int> tr_u;
  trans->add_option("family", tr_file)->required();
  trans->add_option("--u", tr_u);
  trans->callback([&] {
    command = "transversals";
    action = [&] {
      auto family = load_family(tr_file, tr_u);
      em.parameters = {{"family", io::to_json(family)}};
      auto system = minimal_transversals(family);
      auto sum = bollobas_sum(system);
      int widest = 0;
      for (const auto& p : system.pairs) widest = std::max(widest, p.b.size());
      em.result = {{"system", io::to_json(system)},
                   {"bollobas_sum", to_decimal(sum)},
                   {"sum_at_most_one", sum <= 1},
                   {"max_transversal", widest}};
      for (const auto& p : system.pairs) Table(em.table).row(p.a.to_string(), p.b.to_string());
      Table(em.table).row("Bollobas sum", to_decimal(sum)).row("max |E_i|", widest);
      if (sum > 1) em.code = kInvariantViolation;
    };
  });

  // skew-double
  auto* skew = app.add_subcommand("skew-double", "Skew cross-intersecting doubling of an intersecting Bollobás system");
  std::string sk_file;
  skew->add_option("system", sk_file, "Set-pair system JSON")->required();
  skew->callback([&] {
    command = "skew-double";
    action = [&] {
      auto system = io::parse_setpairs(io::read_file(sk_file));
      em.parameters = {{"system", io::to_json(system)}};
      auto doubled = skew_double(system);
      bool ok = check_skew_cross_intersecting(doubled);
      em.result = {{"system", io::to_json(doubled)}, {"skew_cross_intersecting", ok}};
      for (const auto& p : doubled.pairs) Table(em.table).row(p.a.to_string(), p.b.to_string());
      Table(em.table).row("skew check", ok);
      if (!ok) em.code = kInvariantViolation;
    };
  });

  std::vector<const char*> argv{"hap"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    result.out = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    result.err = std::string(e.what()) + "\n";
    result.exit_code = kInputError;
    return result;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    parallel::ThreadScope scope(threads > 0 ? threads : parallel::max_threads());
    action();
  } catch (const Error& e) {
    result.err = std::string("error: ") + e.what() + "\n";
    result.exit_code = exit_code_for(e.kind());
    return result;
  } catch (const std::exception& e) {
    result.err = std::string("internal error: ") + e.what() + "\n";
    result.exit_code = kInvariantViolation;
    return result;
  }
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();

  json manifest{{"command", command},
                {"parameters", em.parameters},
                {"seed", seed ? json(*seed) : json(nullptr)},
                {"mode", em.mode},
                {"elapsed_ms", elapsed},
                {"tool_version", kToolVersion}};
  if (command == "oracle" && which == "f") em.result["elapsed_ms"] = elapsed;
  if (as_json) {
    out << json{{"manifest", manifest}, {"result", em.result}}.dump(2) << '\n';
  } else {
    out << command << '\n' << em.table.str();
    out << "  [seed=" << (seed ? std::to_string(*seed) : "none") << " mode=" << em.mode << " elapsed_ms=" << elapsed
        << " version=" << kToolVersion << "]\n";
  }
  result.out = out.str();
  result.err = err.str();
  result.exit_code = em.code;
  return result;
}

}  // namespace hap::cli

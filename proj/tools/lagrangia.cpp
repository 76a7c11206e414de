#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lagrangia/families.hpp"
#include "lagrangia/hypergraph.hpp"
#include "lagrangia/lagrangian.hpp"
#include "lagrangia/search.hpp"
#include "lagrangia/verify.hpp"
#include "lagrangia/wiss.hpp"
#include "report.hpp"

namespace {

using lagrangia::report::Json;
namespace rep = lagrangia::report;

enum Exit : int { kOk = 0, kFailed = 1, kUsage = 2, kBudget = 3 };

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Flat key=value lines; '#' starts a comment.
std::map<std::string, std::string> read_config(const std::string& path) {
  std::map<std::string, std::string> out;
  std::istringstream in(slurp(path));
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      const auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string{} : s.substr(a, b - a + 1);
    };
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw lagrangia::ParseError(no, "expected key=value");
    std::string key = trim(line.substr(0, eq));
    while (!key.empty() && key.front() == '-') key.erase(0, 1);
    if (key.empty()) throw lagrangia::ParseError(no, "empty key");
    out[key] = trim(line.substr(eq + 1));
  }
  return out;
}

// Effective configuration: every long option of the subcommand with its value or default.
Json effective_config(const CLI::App* sub, std::uint64_t workers) {
  Json j;
  for (const CLI::Option* opt : sub->get_options()) {
    if (opt->get_lnames().empty() && !opt->get_positional()) continue;
    const std::string name = opt->get_lnames().empty() ? opt->get_name() : opt->get_lnames().front();
    if (name == "help") continue;
    std::string value;
    if (opt->count() > 0) {
      const auto& res = opt->results();
      for (std::size_t i = 0; i < res.size(); ++i) value += (i ? "," : "") + res[i];
      if (opt->get_type_size() == 0 && value.empty()) value = "true";
    } else {
      value = opt->get_default_str();
      if (opt->get_type_size() == 0 && value.empty()) value = "false";
    }
    j[name] = value;
  }
  j["workers"] = workers;
  return j;
}

void emit(const Json& j) { std::cout << rep::dump(j) << '\n'; }

std::vector<int> parse_sizes(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    const int v = std::stoi(tok, &used);
    if (used != tok.size() || v <= 0) throw std::invalid_argument("orbit sizes must be positive integers");
    out.push_back(v);
  }
  return out;
}

std::string edge_line(const lagrangia::SetSystem& g) {
  std::string out = std::to_string(g.s()) + " " + std::to_string(g.size()) + ":";
  bool first = true;
  for (lagrangia::Mask m : g.edges()) {
    out += first ? " " : "; ";
    bool inner = true;
    for (lagrangia::Vertex v : lagrangia::from_mask(m)) {
      out += (inner ? "" : " ") + std::to_string(v);
      inner = false;
    }
    first = false;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace lagrangia;

  CLI::App app{"Hypergraph Lagrangians, weighted intersecting set systems and the checks built on them."};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  std::string config_path;
  std::uint64_t workers = 1;
  app.add_option("--config", config_path, "Flat key=value file mirroring long flags; flags take precedence");
  app.add_option("--workers", workers, "Worker count; output does not depend on it")->check(CLI::PositiveNumber);

  // lambda
  auto* c_lambda = app.add_subcommand("lambda", "Lagrangian of an r-graph file: multistart ascent, or exact over orbits");
  std::string lam_file, lam_orbits;
  LagrangianConfig lam_cfg;
  c_lambda->add_option("file", lam_file, "Hypergraph text file")->required();
  c_lambda->add_option("--restarts", lam_cfg.restarts, "Random simplex starts");
  c_lambda->add_option("--seed", lam_cfg.seed, "RNG seed");
  c_lambda->add_option("--max-iters", lam_cfg.max_iters, "Ascent iterations per start");
  c_lambda->add_option("--tol", lam_cfg.tol, "Ascent stopping tolerance");
  c_lambda->add_option("--orbits", lam_orbits,
                       "Comma-separated consecutive orbit sizes; switches to the certified orbit method");

  // wiss-weight
  auto* c_ww = app.add_subcommand("wiss-weight", "Weight of a weighted intersecting set system, per edge and total");
  std::string ww_file;
  std::uint64_t ww_samples = 0, ww_seed = 1;
  c_ww->add_option("file", ww_file, "W.i.s.s. text file")->required();
  c_ww->add_option("--monte-carlo", ww_samples, "Also estimate the weight from this many sampled multisets (0 = off)");
  c_ww->add_option("--seed", ww_seed, "RNG seed for sampling");

  // wiss-opt
  auto* c_wo = app.add_subcommand("wiss-opt", "Best weight found over probability vectors for the file's set system");
  std::string wo_file;
  WeightOptConfig wo_cfg;
  bool wo_free = false;
  c_wo->add_option("file", wo_file, "W.i.s.s. text file (its weights are the reference point)")->required();
  c_wo->add_option("--restarts", wo_cfg.restarts, "Random starts");
  c_wo->add_option("--seed", wo_cfg.seed, "RNG seed");
  c_wo->add_option("--max-iters", wo_cfg.max_iters, "Ascent iterations per start");
  c_wo->add_flag("--free", wo_free, "Drop the non-increasing constraint on p (maximum over relabellings)");

  // wiss-compress
  auto* c_wc = app.add_subcommand("wiss-compress", "Apply the (i, j) shift and compare weights exactly");
  std::string wc_file, wc_out;
  int wc_i = 1, wc_j = 2;
  c_wc->add_option("file", wc_file, "W.i.s.s. text file")->required();
  c_wc->add_option("--i", wc_i, "Target element (smaller index)")->required();
  c_wc->add_option("--j", wc_j, "Source element (larger index)")->required();
  c_wc->add_option("-o,--output", wc_out, "Write the compressed system here");

  // enumerate
  auto* c_en = app.add_subcommand("enumerate", "Intersecting (<= r)-families on [s] with full support, one class per line");
  EnumConfig en_cfg;
  en_cfg.maximal_only = false;
  c_en->add_option("--r", en_cfg.r, "Edge size cap")->required();
  c_en->add_option("--max-ground", en_cfg.max_ground, "Largest ground set (0 = 2r-1)");
  c_en->add_option("--min-ground", en_cfg.min_ground, "Smallest ground set");
  c_en->add_flag("--maximal", en_cfg.maximal_only, "Only families that admit no further candidate");
  c_en->add_flag("--compressed", en_cfg.left_compressed_only, "Only left-compressed families");
  c_en->add_flag("--uniform", en_cfg.uniform, "Only r-sets as edges");
  c_en->add_option("--budget", en_cfg.node_budget, "Search node budget");

  // sweep
  auto* c_sw = app.add_subcommand("sweep", "Best weight per maximal intersecting class against L_r - c_r");
  SweepConfig sw_cfg;
  std::string sw_format = "csv";
  c_sw->add_option("--r", sw_cfg.enumeration.r, "Edge size cap")->required();
  c_sw->add_option("--max-ground", sw_cfg.enumeration.max_ground, "Largest ground set (0 = 2r-1)");
  c_sw->add_option("--budget", sw_cfg.enumeration.node_budget, "Search node budget");
  c_sw->add_option("--weight-restarts", sw_cfg.weight_restarts, "Random starts for the weight ascent");
  c_sw->add_option("--lambda-restarts", sw_cfg.lambda_restarts,
                   "Random starts for the reconstructed Lagrangian (negative skips it)");
  c_sw->add_option("--seed", sw_cfg.seed, "RNG seed");
  c_sw->add_option("--format", sw_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  // conjecture
  auto* c_cj = app.add_subcommand("conjecture", "Best weights found for the complete-intersection families F(r, t, i)");
  int cj_r = 3, cj_t = 1;
  WeightOptConfig cj_cfg;
  c_cj->add_option("--r", cj_r, "Edge size cap")->required();
  c_cj->add_option("--t", cj_t, "Intersection size")->required();
  c_cj->add_option("--restarts", cj_cfg.restarts, "Random starts per family");
  c_cj->add_option("--seed", cj_cfg.seed, "RNG seed");

  // verify-paper
  auto* c_vp = app.add_subcommand(
      "verify-paper",
      "Exact checks of the finite inequalities in the stability argument.\n"
      "  constants      L_r, e_r, d_r, c, c_r and d_r = r e_r for r in [2,12]\n"
      "  2, two-heavy   two heavy elements: sliced objective max and the exact chain, r in [4,10]\n"
      "  3, uniform-tail  uniform-tail probabilities for r in {5,6}, and the large-r tail\n"
      "  4, four        the quartic bound at r = 4 and the two tail inequalities\n"
      "  principal      the principal-family maximum r x (1-x)^(r-1) at x = 1/r, r in [2,10]");
  std::string vp_case = "all";
  int vp_r = 0;
  c_vp->add_option("--case", vp_case, "all|2|3|4|constants|principal")
      ->check(CLI::IsMember({"all", "2", "3", "4", "constants", "principal", "two-heavy", "uniform-tail", "four"}));
  c_vp->add_option("--r", vp_r, "Restrict r-indexed checks to this r (0 = default range)");

  // construct
  auto* c_co = app.add_subcommand("construct", "Write a named construction in the hypergraph text format");
  std::string co_what, co_out;
  int co_r = 3, co_t = 0, co_a = 1, co_b = 1, co_n = 0;
  c_co->add_option("--what", co_what, "m2|complete|k_rr|star|principal|t5|best_star")
      ->required()
      ->check(CLI::IsMember({"m2", "complete", "k_rr", "star", "principal", "t5", "best_star"}));
  c_co->add_option("--r", co_r, "Uniformity");
  c_co->add_option("--t", co_t, "Clique order for complete");
  c_co->add_option("--a", co_a, "Centre size for star");
  c_co->add_option("--b", co_b, "Leaf-side size for star");
  c_co->add_option("--n", co_n, "Vertex count for principal, t5 and best_star");
  c_co->add_option("-o,--output", co_out, "Output path (default stdout)");

  // hom-check
  auto* c_hc = app.add_subcommand("hom-check", "Search for an edge-preserving map from pattern to target");
  std::string hc_pattern, hc_target;
  bool hc_injective = false;
  SearchConfig hc_cfg;
  c_hc->add_option("pattern", hc_pattern, "Pattern hypergraph file")->required();
  c_hc->add_option("target", hc_target, "Target hypergraph file")->required();
  c_hc->add_flag("--injective", hc_injective, "Require an injective map (subgraph containment)");
  c_hc->add_option("--budget", hc_cfg.node_budget, "Search node budget");

  // Config file entries become --key=value arguments unless the flag is already present.
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    for (std::size_t k = 0; k < args.size(); ++k) {
      if (args[k] == "--config" && k + 1 < args.size()) config_path = args[k + 1];
      else if (args[k].rfind("--config=", 0) == 0) config_path = args[k].substr(9);
    }
    if (!config_path.empty()) {
      const auto cfg = read_config(config_path);
      CLI::App* chosen = nullptr;
      for (const auto& a : args)
        if (auto* s = app.get_subcommand_no_throw(a)) {
          chosen = s;
          break;
        }
      if (chosen) {
        for (const auto& [key, value] : cfg) {
          const std::string flag = "--" + key;
          if (!chosen->get_option_no_throw(flag)) continue;
          const bool given = std::any_of(args.begin(), args.end(), [&](const std::string& a) {
            return a == flag || a.rfind(flag + "=", 0) == 0;
          });
          if (!given) args.push_back(flag + "=" + value);
        }
      }
    }
  } catch (const ParseError& e) {
    std::cerr << config_path << ": " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  const Json config = effective_config(sub, workers);
  std::string current_file;

  try {
    if (sub == c_lambda) {
      current_file = lam_file;
      const std::string text = slurp(lam_file);
      const Hypergraph f = parse_hypergraph(text);
      LagrangianResult res;
      if (!lam_orbits.empty()) {
        const auto sizes = parse_sizes(lam_orbits);
        res = orbit_exact(f, consecutive_orbits(f.n(), sizes), lam_cfg.support_tol);
      } else {
        res = maximize(f, lam_cfg);
      }
      emit(rep::envelope("lambda", config, rep::fnv1a_hex(text), rep::lagrangian(res)));
      return kOk;
    }

    if (sub == c_ww) {
      current_file = ww_file;
      const std::string text = slurp(ww_file);
      const Wiss w = parse_wiss(text);
      Json result = rep::weight_report(weight_system(w));
      if (ww_samples > 0) {
        const auto mc = monte_carlo_weight(w, ww_samples, ww_seed);
        result["monte_carlo"] = {{"samples", ww_samples}, {"estimate", mc.estimate}, {"stderr", mc.stderr_}};
      }
      emit(rep::envelope("wiss-weight", config, rep::fnv1a_hex(text), std::move(result)));
      return kOk;
    }

    if (sub == c_wo) {
      current_file = wo_file;
      const std::string text = slurp(wo_file);
      const Wiss w = parse_wiss(text);
      wo_cfg.ordered = !wo_free;
      Json result = rep::weight_optimum(optimize_weight(w.g, w.r, wo_cfg));
      result["input_weight"] = weight_system(w).total;
      emit(rep::envelope("wiss-opt", config, rep::fnv1a_hex(text), std::move(result)));
      return kOk;
    }

    if (sub == c_wc) {
      current_file = wc_file;
      const std::string text = slurp(wc_file);
      const Wiss w = parse_wiss(text);
      const Wiss shifted(compress(w.g, wc_i, wc_j), w.r, w.p);
      const auto before = weight_system(w);
      const auto after = weight_system(shifted);
      Json result;
      result["i"] = wc_i;
      result["j"] = wc_j;
      result["edges"] = rep::edges(shifted.g);
      result["cardinality_preserved"] = shifted.g.size() == w.g.size();
      result["intersecting"] = is_intersecting(shifted.g);
      result["weight_before"] = before.exact_total ? rep::rational(*before.exact_total) : Json(before.total);
      result["weight_after"] = after.exact_total ? rep::rational(*after.exact_total) : Json(after.total);
      const bool nondecreasing = before.exact_total && after.exact_total ? *after.exact_total >= *before.exact_total
                                                                         : after.total >= before.total - 1e-12;
      result["weight_nondecreasing"] = nondecreasing;
      if (!wc_out.empty()) {
        std::ofstream out(wc_out);
        out << to_text(shifted);
        if (!out) throw InputError("cannot write " + wc_out);
      }
      emit(rep::envelope("wiss-compress", config, rep::fnv1a_hex(text), std::move(result)));
      return nondecreasing && is_intersecting(shifted.g) ? kOk : kFailed;
    }

    if (sub == c_en) {
      const auto res = enumerate_intersecting(en_cfg);
      std::cout << "# lagrangia " << rep::kVersion << " enumerate " << rep::dump(config, 0) << '\n';
      for (const auto& e : res.systems) std::cout << edge_line(e.g) << '\n';
      std::cerr << "classes=" << res.systems.size() << " nodes=" << res.nodes << " complete=" << res.complete << '\n';
      return res.complete ? kOk : kBudget;
    }

    if (sub == c_sw) {
      const bool csv = sw_format == "csv";
      if (csv) {
        std::cout << "# lagrangia " << rep::kVersion << " sweep " << rep::dump(config, 0) << '\n';
        std::cout << "canonical_key,s,principal,value,gap\n";
      }
      const auto sum = nonprincipal_gap_sweep(sw_cfg, [&](const SweepRecord& rec) {
        if (!csv) return;
        char buf[96];
        std::snprintf(buf, sizeof buf, ",%d,%d,%.17g,%.17g", rec.s, rec.principal ? 1 : 0, rec.value, rec.gap);
        std::cout << rec.key.to_string() << buf << '\n';
      });
      if (csv) {
        std::cerr << "classes=" << sum.records.size() << " complete=" << sum.complete
                  << " bound=" << to_string(sum.bound) << " bound_holds=" << sum.bound_holds
                  << " principal_holds=" << sum.principal_holds << '\n';
      } else {
        emit(rep::envelope("sweep", config, rep::fnv1a_hex(""), rep::sweep_summary(sum, true)));
      }
      if (!sum.complete) return kBudget;
      const bool asserted = sw_cfg.enumeration.r >= 4 ? sum.bound_holds : true;
      return asserted && sum.principal_holds ? kOk : kFailed;
    }

    if (sub == c_cj) {
      const auto fr = conjecture_frontier(cj_r, cj_t, cj_cfg);
      emit(rep::envelope("conjecture", config, rep::fnv1a_hex(""), rep::frontier(fr)));
      return kOk;
    }

    if (sub == c_vp) {
      const std::string which = vp_case == "two-heavy" ? "2" : vp_case == "uniform-tail" ? "3" : vp_case == "four" ? "4" : vp_case;
      auto range = [&](int lo, int hi) {
        std::vector<int> rs;
        if (vp_r > 0) rs.push_back(vp_r);
        else
          for (int r = lo; r <= hi; ++r) rs.push_back(r);
        return rs;
      };
      const bool all = which == "all";
      bool ok = true;
      Json result;
      auto line = [](const std::string& name, bool pass, const std::string& detail) {
        std::cerr << (pass ? "PASS " : "FAIL ") << name << ": " << detail << '\n';
      };
      if (all || which == "constants") {
        Json rows = Json::array();
        for (int r : range(2, 12)) {
          const auto k = verify::constants(r);
          const bool pass = k.d == r * k.e;
          ok = ok && pass;
          line("constants r=" + std::to_string(r), pass, "L_r=" + to_string(k.L) + " c_r=" + to_string(k.c_r));
          rows.push_back(rep::constants(k));
        }
        result["constants"] = std::move(rows);
      }
      if (all || which == "2") {
        Json rows = Json::array();
        for (int r : range(4, 10)) {
          const auto th = verify::two_heavy_check(r);
          ok = ok && th.passed();
          char buf[128];
          std::snprintf(buf, sizeof buf, "max %.12f <= bound %.12f", th.numeric.value, th.bound.get_d());
          line("two-heavy r=" + std::to_string(r), th.passed(), buf);
          rows.push_back(rep::two_heavy(th));
        }
        result["two_heavy"] = std::move(rows);
      }
      if (all || which == "3") {
        const auto table = verify::uniform_tail_table();
        bool pass = true;
        for (const auto& row : table) pass = pass && row.ok;
        ok = ok && pass;
        line("uniform-tail table", pass, std::to_string(table.size()) + " rows, each at most L_r - 1/25");
        result["uniform_tail"] = rep::uniform_tail(table);
        result["uniform_tail_rows"] = table.size();
        const auto lr = verify::large_r_check();
        ok = ok && lr.passed();
        line("large-r tail", lr.passed(), "f(7) = " + to_string(lr.f7) + ", decreasing to r = " + std::to_string(lr.r_max));
        result["large_r"] = rep::large_r(lr);
      }
      if (all || which == "4") {
        const auto q = verify::quartic_check();
        ok = ok && q.passed();
        char buf[128];
        std::snprintf(buf, sizeof buf, "max in [%.12f, %.12f] at x = %.12f", q.lower.get_d(), q.upper.get_d(), q.argmax);
        line("quartic", q.passed(), buf);
        result["quartic"] = rep::quartic(q);
        const auto tc = verify::tail_chain_check();
        ok = ok && tc.passed();
        line("tail chain", tc.passed(), to_string(tc.lhs) + " <= " + to_string(tc.rhs));
        result["tail_chain"] = rep::tail_chain(tc);
      }
      if (all || which == "principal") {
        Json rows = Json::array();
        for (int r : range(2, 10)) {
          const auto pr = verify::principal_check(r);
          ok = ok && pr.passed();
          line("principal r=" + std::to_string(r), pr.passed(), "value at 1/r = " + to_string(pr.value_at_root));
          rows.push_back(rep::principal(pr));
        }
        result["principal"] = std::move(rows);
      }
      result["passed"] = ok;
      emit(rep::envelope("verify-paper", config, rep::fnv1a_hex(""), std::move(result)));
      return ok ? kOk : kFailed;
    }

    if (sub == c_co) {
      Hypergraph h = [&] {
        if (co_what == "m2") return matching2(co_r);
        if (co_what == "complete") return complete(co_t, co_r);
        if (co_what == "k_rr") return k_rr(co_r);
        if (co_what == "star") return star(co_a, co_b, co_r);
        if (co_what == "principal") return principal_star(co_n, co_r);
        if (co_what == "t5") return balanced_blowup_t5(co_n);
        const auto bs = best_star(co_n, co_r);
        return star(bs.a_star, co_n - bs.a_star, co_r);
      }();
      const std::string text = to_text(h);
      if (co_out.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(co_out);
        out << text;
        if (!out) throw InputError("cannot write " + co_out);
      }
      return kOk;
    }

    if (sub == c_hc) {
      current_file = hc_pattern;
      const std::string pt = slurp(hc_pattern);
      const Hypergraph pattern = parse_hypergraph(pt);
      current_file = hc_target;
      const std::string tt = slurp(hc_target);
      const Hypergraph target = parse_hypergraph(tt);
      const auto res = hc_injective ? contains_subgraph(target, pattern, hc_cfg) : has_homomorphism(pattern, target, hc_cfg);
      Json result;
      result["outcome"] = std::string(to_string(res.outcome));
      result["nodes"] = res.nodes;
      result["witness"] = res.witness ? Json(*res.witness) : Json(nullptr);
      emit(rep::envelope("hom-check", config, rep::fnv1a_hex(pt + tt), std::move(result)));
      return res.outcome == SearchOutcome::inconclusive ? kBudget : kOk;
    }
  } catch (const ParseError& e) {
    std::cerr << current_file << ": " << e.what() << '\n';
    return kUsage;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  }
  return kUsage;
}

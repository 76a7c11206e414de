#include "report.hpp"

#include <cmath>
#include <cstdio>

namespace lagrangia::report {

namespace {

void write(const Json& j, int indent, int depth, std::string& out) {
  const std::string pad = indent > 0 ? "\n" + std::string(static_cast<std::size_t>(indent * (depth + 1)), ' ') : "";
  const std::string close = indent > 0 ? "\n" + std::string(static_cast<std::size_t>(indent * depth), ' ') : "";
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        out += first ? "" : ",";
        out += pad;
        out += Json(it.key()).dump();
        out += indent > 0 ? ": " : ":";
        write(it.value(), indent, depth + 1, out);
        first = false;
      }
      out += close + '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += '[';
      bool first = true;
      for (const auto& v : j) {
        out += first ? "" : ",";
        out += pad;
        write(v, indent, depth + 1, out);
        first = false;
      }
      out += close + ']';
      return;
    }
    case Json::value_t::number_float: {
      const double d = j.get<double>();
      if (!std::isfinite(d)) {
        out += "null";
        return;
      }
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", d);
      out += buf;
      return;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

std::string dump(const Json& j, int indent) {
  std::string out;
  write(j, indent, 0, out);
  return out;
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json rational(const Rational& q) { return to_string(q); }

Json edge(Mask m) {
  Json a = Json::array();
  for (Vertex v : from_mask(m)) a.push_back(v);
  return a;
}

Json edges(const SetSystem& g) {
  Json a = Json::array();
  for (Mask m : g.edges()) a.push_back(edge(m));
  return a;
}

Json doubles(const std::vector<double>& v) {
  Json a = Json::array();
  for (double d : v) a.push_back(d);
  return a;
}

Json lagrangian(const LagrangianResult& res) {
  Json j;
  j["value"] = res.value;
  j["point"] = doubles(res.point);
  j["support"] = res.support;
  j["converged"] = res.converged;
  j["method"] = std::string(to_string(res.method));
  j["lower_bound"] = res.lower_bound;
  j["restarts_used"] = res.restarts_used;
  j["kkt_residual"] = res.kkt_residual;
  if (res.certified_lower) j["certified_lower"] = *res.certified_lower;
  if (res.certified_upper) j["certified_upper"] = *res.certified_upper;
  if (res.exact_value) j["exact_value"] = rational(*res.exact_value);
  return j;
}

Json weight_report(const WeightReport& rep) {
  Json j;
  j["mode"] = rep.rational_mode ? "rational" : "float";
  j["total"] = rep.total;
  if (rep.exact_total) j["exact_total"] = rational(*rep.exact_total);
  Json per = Json::array();
  for (std::size_t k = 0; k < rep.per_edge.size(); ++k) {
    Json e;
    e["edge"] = edge(rep.per_edge[k].first);
    e["weight"] = rep.per_edge[k].second;
    if (rep.rational_mode) e["exact"] = rational(rep.exact_per_edge[k]);
    per.push_back(std::move(e));
  }
  j["per_edge"] = std::move(per);
  return j;
}

Json weight_optimum(const WeightOptimum& opt) {
  Json j;
  j["value"] = opt.value;
  j["p"] = doubles(opt.p);
  j["p_inf"] = opt.p_inf;
  j["converged"] = opt.converged;
  j["starts_used"] = opt.starts_used;
  j["lower_bound"] = true;
  return j;
}

Json sweep_record(const SweepRecord& rec) {
  Json j;
  j["key"] = rec.key.to_string();
  j["s"] = rec.s;
  j["principal"] = rec.principal;
  j["value"] = rec.value;
  j["weight_value"] = rec.weight_value;
  j["lambda_value"] = rec.lambda_value;
  j["gap"] = rec.gap;
  j["edges"] = edges(rec.g);
  j["witness_p"] = doubles(rec.witness_p);
  j["witness_inf"] = rec.witness_inf;
  return j;
}

Json sweep_summary(const SweepSummary& sum, bool with_records) {
  Json j;
  j["r"] = sum.r;
  j["classes"] = sum.records.size();
  j["complete"] = sum.complete;
  j["bound"] = rational(sum.bound);
  j["bound_float"] = sum.bound.get_d();
  auto pick = [&](const std::optional<std::size_t>& i) -> Json {
    return i ? sweep_record(sum.records[*i]) : Json(nullptr);
  };
  j["best_nonprincipal"] = pick(sum.best_nonprincipal);
  j["best_principal"] = pick(sum.best_principal);
  j["best_overall"] = pick(sum.best_overall);
  j["bound_holds"] = sum.bound_holds;
  j["principal_holds"] = sum.principal_holds;
  j["routes_consistent"] = sum.routes_consistent;
  if (with_records) {
    Json rows = Json::array();
    for (const auto& r : sum.records) rows.push_back(sweep_record(r));
    j["records"] = std::move(rows);
  }
  return j;
}

Json frontier(const Frontier& f) {
  Json j;
  j["r"] = f.r;
  j["t"] = f.t;
  Json rows = Json::array();
  for (const auto& row : f.rows) {
    Json x;
    x["i"] = row.i;
    x["ground"] = row.family.s();
    x["edges"] = row.family.size();
    x["value"] = row.value;
    x["p"] = doubles(row.p);
    x["p_inf"] = row.p_inf;
    rows.push_back(std::move(x));
  }
  j["rows"] = std::move(rows);
  j["best_i"] = f.rows.empty() ? Json(nullptr) : Json(f.rows[f.best].i);
  j["best_value"] = f.rows.empty() ? Json(nullptr) : Json(f.rows[f.best].value);
  j["values_are"] = "lower bounds";
  return j;
}

Json constants(const verify::ExtremalConstants& k) {
  Json j;
  j["r"] = k.r;
  j["L_r"] = rational(k.L);
  j["e_r"] = rational(k.e);
  j["d_r"] = rational(k.d);
  j["c"] = rational(k.c);
  j["c_r"] = rational(k.c_r);
  j["L_r_float"] = k.L.get_d();
  j["d_equals_r_e"] = k.d == k.r * k.e;
  return j;
}

Json two_heavy(const verify::TwoHeavyReport& rep) {
  Json j;
  j["r"] = rep.r;
  j["numeric_max"] = rep.numeric.value;
  j["argmax"] = Json::array({rep.numeric.x, rep.numeric.y});
  j["bound"] = rational(rep.bound);
  j["bound_float"] = rep.bound.get_d();
  j["chain_target"] = rational(rep.chain_target);
  j["margin"] = Rational(rep.chain_target - rep.bound).get_d();
  j["numeric_ok"] = rep.numeric_ok;
  j["chain_ok"] = rep.chain_ok;
  j["constant_ok"] = rep.constant_ok;
  j["passed"] = rep.passed();
  return j;
}

Json uniform_tail(const std::vector<verify::TailRow>& rows) {
  Json j = Json::array();
  for (const auto& r : rows) {
    Json x;
    x["r"] = r.r;
    x["s"] = r.s;
    x["value"] = rational(r.value);
    x["value_float"] = r.value.get_d();
    x["bound"] = rational(r.bound);
    x["margin"] = Rational(r.bound - r.value).get_d();
    x["ok"] = r.ok;
    j.push_back(std::move(x));
  }
  return j;
}

Json large_r(const verify::LargeRReport& rep) {
  Json j;
  j["f7"] = rational(rep.f7);
  j["f7_float"] = rep.f7.get_d();
  j["f7_below_one_third"] = rep.f7_ok;
  j["decreasing_to"] = rep.r_max;
  j["decreasing"] = rep.decreasing_ok;
  j["inverse_e_lower"] = rep.inverse_e_lower.get_d();
  j["inverse_e_minus_third_at_least_c"] = rep.constant_ok;
  j["passed"] = rep.passed();
  return j;
}

Json quartic(const verify::QuarticReport& rep) {
  Json j;
  j["max_lower"] = rational(rep.lower);
  j["max_upper"] = rational(rep.upper);
  j["max_float"] = rep.lower.get_d();
  j["argmax"] = rep.argmax;
  j["closed_form_argmax"] = rep.closed_form_argmax;
  j["derivative_at_closed_form"] = rep.derivative_at_closed_form;
  j["endpoint_value"] = rational(rep.endpoint_value);
  j["range_ok"] = rep.range_ok;
  j["argmax_ok"] = rep.argmax_ok;
  j["stationary_ok"] = rep.stationary_ok;
  j["margin_ok"] = rep.margin_ok;
  j["passed"] = rep.passed();
  return j;
}

Json tail_chain(const verify::TailChainReport& rep) {
  Json j;
  j["lhs"] = rational(rep.lhs);
  j["rhs"] = rational(rep.rhs);
  j["equal"] = rep.equal;
  j["constant_ok"] = rep.constant_ok;
  j["samples"] = rep.samples;
  j["failures_first"] = rep.failures_first;
  j["failures_second"] = rep.failures_second;
  j["passed"] = rep.passed();
  return j;
}

Json principal(const verify::PrincipalReport& rep) {
  Json j;
  j["r"] = rep.r;
  j["value_at_root"] = rational(rep.value_at_root);
  j["root_ok"] = rep.root_ok;
  j["bracket_ok"] = rep.bracket_ok;
  j["weight_ok"] = rep.weight_ok;
  j["grid_max"] = rep.grid_max;
  j["grid_ok"] = rep.grid_ok;
  j["passed"] = rep.passed();
  return j;
}

Json envelope(std::string_view command, Json config, std::string_view input_hash, Json result) {
  Json j;
  j["tool"] = "lagrangia";
  j["version"] = std::string(kVersion);
  j["command"] = std::string(command);
  j["config"] = std::move(config);
  j["input_hash"] = std::string(input_hash);
  j["result"] = std::move(result);
  return j;
}

}  // namespace lagrangia::report

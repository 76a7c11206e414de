#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "json.hpp"
#include "lagrangia/families.hpp"
#include "lagrangia/lagrangian.hpp"
#include "lagrangia/verify.hpp"
#include "lagrangia/wiss.hpp"

namespace lagrangia::report {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kVersion = "1.0.0";

/// Serialises with floats at 17 significant digits; keys keep insertion order.
std::string dump(const Json& j, int indent = 2);

/// 64-bit FNV-1a as 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);

Json rational(const Rational& q);
Json edge(Mask m);
Json edges(const SetSystem& g);
Json doubles(const std::vector<double>& v);

Json lagrangian(const LagrangianResult& res);
Json weight_report(const WeightReport& rep);
Json weight_optimum(const WeightOptimum& opt);
Json sweep_record(const SweepRecord& rec);
Json sweep_summary(const SweepSummary& sum, bool with_records);
Json frontier(const Frontier& f);

Json constants(const verify::ExtremalConstants& k);
Json two_heavy(const verify::TwoHeavyReport& rep);
Json uniform_tail(const std::vector<verify::TailRow>& rows);
Json large_r(const verify::LargeRReport& rep);
Json quartic(const verify::QuarticReport& rep);
Json tail_chain(const verify::TailChainReport& rep);
Json principal(const verify::PrincipalReport& rep);

/// {"tool", "version", "command", "config", "input_hash", "result"}.
Json envelope(std::string_view command, Json config, std::string_view input_hash, Json result);

}  // namespace lagrangia::report

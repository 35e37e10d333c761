// Copyright (c) the wcikit authors. All rights reserved.
// Licensed under the Apache 2.0 License.

#include "wci/json_io.hpp"

#include <nlohmann/json.hpp>

#include "wci/errors.hpp"

namespace wci {

json to_json(const Int& n) { return n.get_str(); }

json to_json(const Rational& q) { return rational_to_string(q); }

json to_json(const std::vector<Int>& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(x.get_str());
  return arr;
}

json to_json(const Pair& pair) {
  return json{{"degrees", to_json(pair.degrees())},
              {"weights", to_json(pair.weights())}};
}

namespace {

Int int_from_json(const json& j) {
  if (j.is_string()) return int_from_string(j.get<std::string>());
  if (j.is_number_unsigned())
    return Int(static_cast<unsigned long>(j.get<std::uint64_t>()));
  if (j.is_number_integer())
    return Int(static_cast<long>(j.get<std::int64_t>()));
  throw precondition_error("expected an integer or decimal string");
}

std::vector<Int> int_list_from_json(const json& j, const char* field) {
  if (!j.is_array())
    throw precondition_error(std::string(field) + " must be an array");
  std::vector<Int> out;
  for (const auto& e : j) out.push_back(int_from_json(e));
  return out;
}

}  // namespace

Pair pair_from_json(const json& j) {
  if (!j.is_object() || !j.contains("degrees") || !j.contains("weights"))
    throw precondition_error(
        "pair must be an object with 'degrees' and 'weights'");
  return Pair(int_list_from_json(j["degrees"], "degrees"),
              int_list_from_json(j["weights"], "weights"));
}

json to_json(const PairClass& cls) {
  return json{{"kind", pair_kind_name(cls.kind)},
              {"index", cls.index.get_str()}};
}

json to_json(const CheckReport& report) {
  json j{{"regular", report.regular},
         {"space_well_formed", report.space_well_formed},
         {"cartier", report.cartier},
         {"linear_cone", report.linear_cone}};
  if (report.regular_witness) {
    const auto& w = *report.regular_witness;
    j["regular_witness"] = {
        {"divisor", w.divisor.get_str()},
        {"degrees_divisible", w.degrees_divisible},
        {"weights_divisible", w.weights_divisible},
        {"weight_indices", w.weight_indices}};
  }
  if (report.cartier_witness)
    j["cartier_witness"] = {{"weight_index", report.cartier_witness->weight_index},
                            {"degree_index", report.cartier_witness->degree_index}};
  if (report.linear_cone_pair)
    j["linear_cone_match"] = {{"degree_index", report.linear_cone_pair->first},
                              {"weight_index", report.linear_cone_pair->second}};
  return j;
}

json to_json(const Representation& rep) {
  return json{{"coefficients", to_json(rep.coefficients)},
              {"target", rep.target.get_str()},
              {"weights", to_json(rep.weights)},
              {"positive", rep.positive},
              {"verified", rep.verify()}};
}

json to_json(const HodgeVerdict& verdict) {
  return json{{"dimension", verdict.dimension},
              {"index", verdict.index.get_str()},
              {"h0n", verdict.h0n.get_str()},
              {"hodge_level_max", verdict.hodge_level_max},
              {"branch", theorem_branch_name(verdict.branch)}};
}

json to_json(const HodgeVector& vec) { return json{{"h_pr", to_json(vec.h)}}; }

json to_json(const primes::PrimeChain& chain) {
  return json{{"primes", to_json(chain.primes)},
              {"partial_sum", rational_to_string(chain.partial_sum)}};
}

json to_json(const primes::IntervalLemmaReport& report) {
  const auto samples = [](const std::vector<primes::IntervalLemmaSample>& v) {
    json arr = json::array();
    for (const auto& s : v)
      arr.push_back(json{{"x", rational_to_string(s.x)},
                         {"count", s.count},
                         {"required", s.required},
                         {"holds", s.holds}});
    return arr;
  };
  json j{{"n", report.n}, {"all_hold", report.all_hold}};
  if (report.checked_part_i) j["part_i"] = samples(report.part_i);
  if (report.checked_part_ii) j["part_ii"] = samples(report.part_ii);
  return j;
}

json to_json(const CounterexampleReport& report) {
  json checks{{"general_type", report.general_type},
              {"cartier", report.cartier},
              {"ambient_well_formed", report.ambient_well_formed},
              {"h0n_zero", report.h0n_zero},
              {"no_linear_monomial", report.no_linear_monomial},
              {"quadratic_deficit", report.quadratic_deficit},
              {"not_regular", report.not_regular}};
  if (report.regularity_witness)
    checks["regularity_witness"] = {
        {"divisor", report.regularity_witness->divisor.get_str()},
        {"degrees_divisible", report.regularity_witness->degrees_divisible},
        {"weights_divisible", report.regularity_witness->weights_divisible}};
  return json{{"dimension", report.n},
              {"m", report.m},
              {"chain", to_json(report.chain)},
              {"pair", to_json(report.pair)},
              {"index", report.index.get_str()},
              {"index_via_rational", report.index_via_rational.get_str()},
              {"quadratic_deficit_max", report.quadratic_deficit_max.get_str()},
              {"checks", checks},
              {"all_checks", report.all_checks()}};
}

json to_json(const PointFamilyReport& report) {
  return json{{"primes_used", report.n_primes},
              {"pair", to_json(report.pair)},
              {"index", report.index.get_str()},
              {"checks",
               {{"regular", report.regular},
                {"cartier", report.cartier},
                {"general_type", report.general_type},
                {"no_positive_representation",
                 report.no_positive_representation},
                {"codim_equals_ambient_dim",
                 report.codim_equals_ambient_dim}}},
              {"all_checks", report.all_checks()}};
}

json to_json(const ScanRecord& record) {
  json j{{"pair", to_json(record.pair)},
         {"class", to_json(record.cls)},
         {"regular", record.regular},
         {"cartier", record.cartier},
         {"positive_representation", record.oracle_some},
         {"h0n", record.h0n.get_str()},
         {"conforms", record.violations.empty()}};
  if (record.beta_oracle) j["beta_oracle"] = to_json(*record.beta_oracle);
  if (record.beta_cartier) j["beta_cartier"] = to_json(*record.beta_cartier);
  if (record.beta_codim2) j["beta_codim2"] = to_json(*record.beta_codim2);
  if (!record.violations.empty()) j["violations"] = record.violations;
  return j;
}

json to_json(const ScanSummary& summary) {
  return json{{"pairs_scanned", summary.pairs_scanned},
              {"violations", summary.violations},
              {"violations_by_rule", summary.violations_by_rule},
              {"fano", summary.fano},
              {"calabi_yau", summary.calabi_yau},
              {"general_type", summary.general_type},
              {"cartier", summary.cartier},
              {"positive_representations", summary.positive_representations},
              {"cartier_constructed", summary.cartier_constructed},
              {"codim2_constructed", summary.codim2_constructed}};
}

namespace {

std::string join_ints(const std::vector<Int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? " " : "") + v[i].get_str();
  return s;
}

}  // namespace

std::string scan_record_csv_header() {
  return "degrees,weights,kind,index,regular,cartier,"
         "positive_representation,h0n,conforms,violations";
}

std::string scan_record_csv(const ScanRecord& record) {
  std::string violations;
  for (std::size_t i = 0; i < record.violations.size(); ++i)
    violations += (i ? " " : "") + record.violations[i];
  return join_ints(record.pair.degrees()) + "," +
         join_ints(record.pair.weights()) + "," +
         pair_kind_name(record.cls.kind) + "," + record.cls.index.get_str() +
         "," + (record.regular ? "true" : "false") + "," +
         (record.cartier ? "true" : "false") + "," +
         (record.oracle_some ? "true" : "false") + "," +
         record.h0n.get_str() + "," +
         (record.violations.empty() ? "true" : "false") + "," + violations;
}

}  // namespace wci

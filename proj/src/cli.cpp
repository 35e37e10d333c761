// Copyright (c) the wcikit authors. All rights reserved.
// Licensed under the Apache 2.0 License.

#include "wci/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <nlohmann/json.hpp>

#include "wci/acceptance.hpp"
#include "wci/errors.hpp"
#include "wci/json_io.hpp"

namespace wci {

namespace {

Pair parse_pair_option(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw precondition_error(std::string("pair is not valid JSON: ") +
                             e.what());
  }
  return pair_from_json(j);
}

std::vector<Int> parse_int_list_option(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw precondition_error(std::string("not a valid JSON array: ") +
                             e.what());
  }
  if (!j.is_array()) throw precondition_error("expected a JSON array");
  std::vector<Int> out;
  for (const auto& e : j) {
    if (e.is_string())
      out.push_back(int_from_string(e.get<std::string>()));
    else if (e.is_number_integer())
      out.push_back(Int(static_cast<long>(e.get<std::int64_t>())));
    else
      throw precondition_error("array entries must be integers or strings");
  }
  return out;
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"weighted complete intersection toolkit"};
  app.require_subcommand(1);

  std::string pair_text, weights_text, target_text;
  std::string out_path, format = "json";
  std::uint64_t x_value = 0;
  int n_value = 0, m_value = 0, dim_value = 0, jobs = 1;
  std::uint64_t budget = primes::kDefaultDeltaNodeBudget;
  std::vector<std::string> x_list;
  bool flag_h0n = false, flag_middle = false, flag_verdict = false;
  std::string method = "oracle";
  ScanBounds bounds;
  int scan_max_n = 4;

  auto* classify_cmd = app.add_subcommand("classify", "classify a pair");
  classify_cmd->add_option("--pair", pair_text, "pair JSON")->required();

  auto* check_cmd = app.add_subcommand("check", "run all validity checks");
  check_cmd->add_option("--pair", pair_text, "pair JSON")->required();

  auto* represent_cmd =
      app.add_subcommand("represent", "find representation certificates");
  represent_cmd->add_option("--pair", pair_text, "pair JSON");
  represent_cmd->add_option("--target", target_text,
                            "nonnegative target (with --weights)");
  represent_cmd->add_option("--weights", weights_text, "weights JSON array");
  represent_cmd->add_option("--method", method,
                            "oracle | cartier | codim2 (with --pair)");

  auto* hodge_cmd = app.add_subcommand("hodge", "Hodge-number computations");
  hodge_cmd->add_option("--pair", pair_text, "pair JSON")->required();
  hodge_cmd->add_flag("--h0n", flag_h0n, "print h^{0,n} only");
  hodge_cmd->add_flag("--middle", flag_middle,
                      "primitive middle Hodge numbers (k = 1, Cartier)");
  hodge_cmd->add_flag("--verdict", flag_verdict,
                      "Hodge-level verdict (default)");

  auto* primes_cmd = app.add_subcommand("primes", "prime-number utilities");
  primes_cmd->require_subcommand(1);
  auto* pi_cmd = primes_cmd->add_subcommand("pi", "prime counting");
  pi_cmd->add_option("--x", x_value, "upper bound")->required();
  auto* rs_cmd = primes_cmd->add_subcommand(
      "rs-check", "rigorous x/ln x < pi(x) < 1.25506 x/ln x");
  rs_cmd->add_option("--x", x_value, "evaluation point (>= 17)")->required();
  auto* lemma_cmd = primes_cmd->add_subcommand(
      "interval-lemma", "prime counts in (x, 2x) and (2x/3, x)");
  lemma_cmd->add_option("--n", n_value, "lemma parameter (>= 5)")->required();
  lemma_cmd->add_option("--x", x_list, "sample points (default 2^n)");
  auto* straddle_cmd =
      primes_cmd->add_subcommand("straddle", "reciprocal straddle chain");
  straddle_cmd->add_option("--m", m_value, "chain parameter (>= 1)")
      ->required();
  auto* delta_cmd =
      primes_cmd->add_subcommand("delta", "exact minimal prime-reciprocal gap");
  delta_cmd->add_option("--n", n_value, "number of primes")->required();
  delta_cmd->add_option("--budget", budget, "search node budget");
  auto* delta_upper_cmd = primes_cmd->add_subcommand(
      "delta-upper", "witness certifying delta(n) <= 1/2^n");
  delta_upper_cmd->add_option("--n", n_value, "number of primes (>= 5)")
      ->required();

  auto* counterexample_cmd = app.add_subcommand(
      "counterexample", "quasi-smooth general-type family with h^{0,n} = 0");
  counterexample_cmd->add_option("--dim", dim_value, "dimension (> 2)")
      ->required();

  auto* point_cmd = app.add_subcommand(
      "point-family", "N = k family without positive representations");
  point_cmd->add_option("--n", n_value, "family parameter N (>= 1)")
      ->required();

  auto* scan_cmd =
      app.add_subcommand("scan", "enumerate regular pairs and check theorems");
  scan_cmd->add_option("--max-k", bounds.max_k, "maximum codimension")
      ->required();
  scan_cmd->add_option("--max-n", scan_max_n, "maximum ambient index N")
      ->required();
  std::string max_degree_sum_text = "24", max_weight_text = "12";
  scan_cmd->add_option("--max-degree-sum", max_degree_sum_text,
                       "maximum total degree")->required();
  scan_cmd->add_option("--max-weight", max_weight_text, "maximum weight")
      ->required();
  scan_cmd->add_option("--out", out_path, "JSONL output path");
  scan_cmd->add_flag("--include-linear-cones", bounds.include_linear_cones,
                     "also enumerate pairs with a degree equal to a weight");
  scan_cmd->add_option("--jobs", jobs, "parallel workers");
  scan_cmd->add_option("--format", format, "json | csv");

  auto* reproduce_cmd = app.add_subcommand(
      "reproduce", "run the full verification battery");
  int reproduce_jobs = 0;
  reproduce_cmd->add_option("--jobs", reproduce_jobs, "parallel workers");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }

  try {
    if (*classify_cmd) {
      print_json(out, to_json(classify(parse_pair_option(pair_text))));
    } else if (*check_cmd) {
      print_json(out, to_json(check_pair(parse_pair_option(pair_text))));
    } else if (*represent_cmd) {
      if (!pair_text.empty()) {
        const Pair pair = parse_pair_option(pair_text);
        std::optional<Representation> rep;
        if (method == "oracle") {
          rep = find_positive_representation(pair);
        } else if (method == "cartier") {
          rep = constructive_representation_cartier(pair);
        } else if (method == "codim2") {
          rep = representation_codim_le2(pair);
        } else {
          throw precondition_error("unknown method '" + method + "'");
        }
        if (rep)
          print_json(out, to_json(*rep));
        else
          print_json(out, json{{"found", false},
                               {"pair", to_json(pair)},
                               {"index", pair.index().get_str()}});
      } else if (!target_text.empty() && !weights_text.empty()) {
        const auto rep = find_nonneg_representation(
            int_from_string(target_text), parse_int_list_option(weights_text));
        if (rep)
          print_json(out, to_json(*rep));
        else
          print_json(out, json{{"found", false}, {"target", target_text}});
      } else {
        throw precondition_error(
            "represent needs --pair or --target with --weights");
      }
    } else if (*hodge_cmd) {
      const Pair pair = parse_pair_option(pair_text);
      if (flag_middle) {
        print_json(out, to_json(hypersurface_middle_hodge(pair)));
      } else if (flag_h0n) {
        print_json(out, json{{"h0n", h0n(pair).get_str()}});
      } else {
        print_json(out, to_json(hodge_level_verdict(pair)));
      }
    } else if (*pi_cmd) {
      print_json(out, json{{"x", x_value}, {"pi", primes::prime_pi(x_value)}});
    } else if (*rs_cmd) {
      print_json(out, json{{"x", x_value},
                           {"holds", primes::check_rs_inequality(x_value)}});
    } else if (*lemma_cmd) {
      std::vector<Rational> xs;
      for (const auto& s : x_list) xs.push_back(rational_from_string(s));
      if (xs.empty()) xs.emplace_back(Int(1) << n_value);
      print_json(out, to_json(primes::verify_interval_lemma(n_value, xs)));
    } else if (*straddle_cmd) {
      print_json(out, to_json(primes::straddle_chain(m_value)));
    } else if (*delta_cmd) {
      const auto search = primes::delta(n_value, budget);
      json j{{"n", n_value}, {"nodes_used", search.nodes_used}};
      if (search.exact) {
        j["value"] = rational_to_string(search.exact->value);
        j["witness"] = to_json(search.exact->witness);
      } else {
        j["budget_exceeded"] = true;
      }
      print_json(out, j);
    } else if (*delta_upper_cmd) {
      const auto witness = primes::delta_upper_bound(n_value);
      print_json(out, json{{"n", n_value},
                           {"value", rational_to_string(witness.value)},
                           {"witness", to_json(witness.witness)},
                           {"bound", rational_to_string(make_rational(
                                         1, Int(1) << n_value))}});
    } else if (*counterexample_cmd) {
      print_json(out, to_json(build_counterexample(dim_value)));
    } else if (*point_cmd) {
      print_json(out, to_json(build_point_family(n_value)));
    } else if (*scan_cmd) {
      bounds.max_weights = scan_max_n + 1;
      bounds.max_degree_sum = int_from_string(max_degree_sum_text);
      bounds.max_weight = int_from_string(max_weight_text);
      bounds.jobs = jobs;
      if (format != "json" && format != "csv")
        throw precondition_error("format must be json or csv");
      std::ofstream file;
      std::ostream* records = &out;
      if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw precondition_error("cannot write to " + out_path);
        records = &file;
      }
      if (format == "csv") *records << scan_record_csv_header() << '\n';
      const ScanSummary summary =
          scan_theorem(bounds, [&](const ScanRecord& rec) {
            if (format == "csv")
              *records << scan_record_csv(rec) << '\n';
            else
              *records << to_json(rec).dump() << '\n';
          });
      print_json(out, to_json(summary));
    } else if (*reproduce_cmd) {
      acceptance::Options options;
      options.jobs = reproduce_jobs;
      return acceptance::run_and_report(options, out) == 0 ? 0 : 1;
    }
    return 0;
  } catch (const precondition_error& e) {
    print_json(out, json{{"error", {{"type", "precondition"},
                                    {"message", e.what()}}}});
    return 1;
  } catch (const resource_error& e) {
    print_json(out,
               json{{"error", {{"type", "resource"}, {"message", e.what()}}}});
    return 1;
  } catch (const contract_error& e) {
    print_json(out,
               json{{"error", {{"type", "contract"}, {"message", e.what()}}}});
    return 1;
  } catch (const std::exception& e) {
    print_json(out,
               json{{"error", {{"type", "internal"}, {"message", e.what()}}}});
    return 1;
  }
}

}  // namespace wci

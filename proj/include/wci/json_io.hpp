// Copyright (c) the wcikit authors. All rights reserved.
// Licensed under the Apache 2.0 License.

#pragma once

#include <nlohmann/json_fwd.hpp>

#include "wci/construct.hpp"
#include "wci/hodge.hpp"
#include "wci/pairs.hpp"
#include "wci/primes.hpp"
#include "wci/represent.hpp"

// Big integers serialize as decimal strings so no consumer loses precision;
// rationals as "num/den". Pair inputs accept JSON numbers as well.
namespace wci {

using json = nlohmann::json;

json to_json(const Int& n);
json to_json(const Rational& q);
json to_json(const std::vector<Int>& v);

json to_json(const Pair& pair);
Pair pair_from_json(const json& j);

json to_json(const PairClass& cls);
json to_json(const CheckReport& report);
json to_json(const Representation& rep);
json to_json(const HodgeVerdict& verdict);
json to_json(const HodgeVector& vec);
json to_json(const primes::PrimeChain& chain);
json to_json(const primes::IntervalLemmaReport& report);
json to_json(const CounterexampleReport& report);
json to_json(const PointFamilyReport& report);
json to_json(const ScanRecord& record);
json to_json(const ScanSummary& summary);

/// One CSV line per record; header provided separately.
std::string scan_record_csv_header();
std::string scan_record_csv(const ScanRecord& record);

}  // namespace wci

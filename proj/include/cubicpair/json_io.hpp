#pragma once

#include <json.hpp>

#include "cubicpair/arrangement.hpp"
#include "cubicpair/local_counting.hpp"
#include "cubicpair/mgood.hpp"
#include "cubicpair/optimize.hpp"
#include "cubicpair/probability.hpp"
#include "cubicpair/search.hpp"
#include "cubicpair/singular_series.hpp"

namespace cubicpair {

using nlohmann::json;

// Rationals serialize as a "num/den" string in the canonical field, plus a
// fixed-precision decimal rendering; never as binary floats.
json rat_json(const Rat& x, int precision);
json int_json(const Int& v);
json interval_json(const RatInterval& iv, int precision);

json to_json(const PrimeVerdict& v);
json to_json(const MGoodReport& r);
json to_json(const PartitionAB& p);
json to_json(const EtaVector& e);
json to_json(const ReductionTrace& t);
json to_json(const LocalCount& c);
json to_json(const LiftWitness& w);
json to_json(const LiftCountReport& r);
json to_json(const Mod9Report& r);
json to_json(const SeriesTruncation& s, int precision);
json to_json(const ProbabilityReport& r, int precision);
json to_json(const MonteCarloResult& r, int precision);
json to_json(const OptimizationResult& r);
json to_json(const SearchResult& r);
json to_json(const LambdaProfile& p);

} // namespace cubicpair

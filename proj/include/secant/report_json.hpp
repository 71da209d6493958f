#pragma once

#include "secant/combinatorics.hpp"
#include "secant/oracle.hpp"
#include "secant/predictor.hpp"
#include "secant/series.hpp"

#include <json.hpp>

namespace secant {

using Json = nlohmann::ordered_json;

// Exact integers travel as decimal strings.
Json to_json(const Int& v);
Json to_json(const TruncatedSeries& s);
Json to_json(const SeriesNumerator& s);
Json to_json(const PredictionReport& rep);
Json to_json(const OracleRun& run);
Json to_json(const WlpResult& res);
Json to_json(const SegreReport& rep);
Json to_json(const SecantLineN3Result& res);

}  // namespace secant

#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "crossvar/arrangement.hpp"
#include "crossvar/census.hpp"
#include "crossvar/variance.hpp"

namespace crossvar {

using json = nlohmann::ordered_json;

/// A number when it fits in int64, otherwise a decimal string.
json integer_json(const Integer& v);

/// Census fields under stable names: q, K, phi1, phi2, lambda1, lambda2, mu1, mu2, nP4, nP5, nC3, nC4, nPaw, nC3L2.
json census_json(const CensusReport& c);
CensusReport census_from_json(const json& j);

/// {variance, variance_decimal, expectation, algorithm, census?, hash_table_size?}
json variance_json(const VarianceResult& r);

json exhaustive_json(const ExhaustiveStats& s);
json monte_carlo_json(const MonteCarloStats& s);

/// 64-bit FNV-1a of the file contents, as 16 hex digits.
std::string file_fingerprint(const std::string& path);

} // namespace crossvar

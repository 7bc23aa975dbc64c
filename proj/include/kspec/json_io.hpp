#pragma once

#include "kspec/classifier.hpp"
#include "kspec/cpn_spectrum.hpp"
#include "kspec/diophantine.hpp"
#include "kspec/patodi.hpp"

#include <json.hpp>

namespace kspec::json {

using nlohmann::ordered_json;

// All exact values serialize as strings: rationals as "a/b" (or "a" when
// integral), big integers as decimal strings. Parsing a dump and dumping it
// again is byte-identical; the CLI relies on that.

ordered_json to_json(const Rational& r);
ordered_json to_json(const Integer& z);
ordered_json to_json(const patodi::PatodiCoefficients& l);
ordered_json to_json(const patodi::HeatInvariants& h);
ordered_json to_json(const patodi::NumericalCondition& c, long long p, long long n);
ordered_json to_json(const dioph::ExceptionalPair& pair);
ordered_json to_json(const classifier::ClassificationResult& r);
ordered_json to_json(const classifier::LastLemmaReport& rep);
ordered_json to_json(const cpn::HeatTraceFit& fit);

}  // namespace kspec::json

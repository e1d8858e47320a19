#pragma once

#include <json.hpp>

#include "hyperfact/campaign.hpp"
#include "hyperfact/factorization.hpp"
#include "hyperfact/identities.hpp"
#include "hyperfact/poly.hpp"
#include "hyperfact/rational.hpp"
#include "hyperfact/series.hpp"
#include "hyperfact/tridiag.hpp"

namespace hyperfact {

using Json = nlohmann::ordered_json;

// Rationals are always "numerator/denominator" strings. Readers also
// accept plain JSON integers.
Json to_json(const Rational& value);
Rational rational_from_json(const Json& value);

Json to_json(const Poly& poly);
Json to_json(const SeriesSpec& spec);
SeriesSpec series_from_json(const Json& value);
Json to_json(const IdentityReport& report);
Json to_json(const FactorizationReport& report);
Json to_json(const TridiagSpec& spec);
TridiagSpec tridiag_from_json(const Json& value);
Json to_json(const DiophantineReport& report);
Json to_json(const TrialOutcome& outcome);

Json to_json(const std::vector<Rational>& values);

}  // namespace hyperfact

#include "hyperfact/json_io.hpp"

#include <stdexcept>
#include <string>

namespace hyperfact {

Json to_json(const Rational& value) { return value.str(); }

Rational rational_from_json(const Json& value) {
  if (value.is_string()) return Rational::parse(value.get<std::string>());
  if (value.is_number_integer()) return Rational(value.get<long>());
  throw std::invalid_argument("expected a rational string \"p/q\" or an integer, got " + value.dump());
}

Json to_json(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_json(v));
  return out;
}

Json to_json(const Poly& poly) { return to_json(poly.coeffs()); }

Json to_json(const SeriesSpec& spec) {
  Json num = Json::array();
  for (const auto& p : spec.num) {
    if (const auto* plain = std::get_if<Rational>(&p)) {
      num.push_back({{"plain", to_json(*plain)}});
    } else {
      const auto& pair = std::get<PairParam>(p);
      num.push_back({{"pair", {{"base", to_json(pair.base)}, {"x", to_json(pair.x)}}}});
    }
  }
  Json out;
  out["kind"] = spec.kind == SeriesKind::Ordinary ? "ordinary" : "basic";
  out["num"] = std::move(num);
  out["den"] = to_json(spec.den);
  out["z"] = to_json(spec.z);
  if (spec.kind == SeriesKind::Basic) out["q"] = to_json(spec.q);
  out["n"] = spec.n;
  return out;
}

SeriesSpec series_from_json(const Json& value) {
  SeriesSpec spec;
  const std::string kind = value.value("kind", std::string("ordinary"));
  if (kind == "ordinary") {
    spec.kind = SeriesKind::Ordinary;
  } else if (kind == "basic") {
    spec.kind = SeriesKind::Basic;
  } else {
    throw std::invalid_argument("series kind must be \"ordinary\" or \"basic\"");
  }
  for (const auto& entry : value.at("num")) {
    if (entry.contains("plain")) {
      spec.num.emplace_back(rational_from_json(entry.at("plain")));
    } else if (entry.contains("pair")) {
      const auto& pair = entry.at("pair");
      spec.num.emplace_back(PairParam{rational_from_json(pair.at("base")), rational_from_json(pair.at("x"))});
    } else {
      throw std::invalid_argument("numerator entry needs \"plain\" or \"pair\": " + entry.dump());
    }
  }
  for (const auto& entry : value.at("den")) spec.den.push_back(rational_from_json(entry));
  spec.z = value.contains("z") ? rational_from_json(value.at("z")) : Rational(1);
  if (value.contains("q")) spec.q = rational_from_json(value.at("q"));
  const long n = value.at("n").get<long>();
  if (n < 0) throw std::invalid_argument("series n must be nonnegative");
  spec.n = static_cast<unsigned>(n);
  return spec;
}

Json to_json(const IdentityReport& report) {
  Json params = Json::object();
  for (const auto& [name, value] : report.parameter_assignment) params[name] = to_json(value);
  return Json{{"identity", report.identity_name},
              {"params", std::move(params)},
              {"lhs", to_json(report.lhs)},
              {"rhs", to_json(report.rhs)},
              {"holds", report.holds}};
}

Json to_json(const FactorizationReport& report) {
  Json factors = Json::array();
  for (const auto& f : report.factors) {
    if (const auto* quad = std::get_if<QuadraticFactor>(&f)) {
      factors.push_back({{"type", "x_plus_a2"}, {"a", to_json(quad->a)}});
    } else {
      const auto& qf = std::get<QQuadraticFactor>(f);
      factors.push_back({{"type", "q_quadratic"}, {"t", to_json(qf.t)}, {"q", to_json(qf.q)}, {"k", qf.k}});
    }
  }
  Json out{{"constant", to_json(report.constant)},
           {"factors", std::move(factors)},
           {"cofactor_coeffs", to_json(report.cofactor)},
           {"zeros", to_json(report.zeros)}};
  if (report.has_displayed_constant) {
    out["displayed_constant"] = to_json(report.displayed_constant);
    out["displayed_constant_matches"] = report.displayed_constant_matches;
  }
  return out;
}

Json to_json(const TridiagSpec& spec) { return Json{{"alpha", to_json(spec.alpha)}, {"beta", to_json(spec.beta)}}; }

TridiagSpec tridiag_from_json(const Json& value) {
  TridiagSpec spec;
  for (const auto& a : value.at("alpha")) spec.alpha.push_back(rational_from_json(a));
  for (const auto& b : value.at("beta")) spec.beta.push_back(rational_from_json(b));
  validate(spec);
  return spec;
}

Json to_json(const DiophantineReport& report) {
  Json out{{"all_integer", report.all_integer}, {"equispaced", report.equispaced}};
  out["spacing"] = report.spacing ? to_json(*report.spacing) : Json(nullptr);
  out["sqrt_lattice"] = report.sqrt_lattice;
  out["sqrt_equispaced"] = report.sqrt_equispaced;
  out["sqrt_spacing"] = report.sqrt_spacing ? to_json(*report.sqrt_spacing) : Json(nullptr);
  return out;
}

Json to_json(const TrialOutcome& outcome) {
  Json params = Json::object();
  for (const auto& [name, value] : outcome.params) params[name] = to_json(value);
  Json out{{"check", outcome.check}, {"trial", outcome.trial}, {"params", std::move(params)}};
  if (outcome.lhs) out["lhs"] = to_json(*outcome.lhs);
  if (outcome.rhs) out["rhs"] = to_json(*outcome.rhs);
  out["holds"] = outcome.holds;
  if (!outcome.error.empty()) out["error"] = outcome.error;
  if (!outcome.detail.is_null()) out["detail"] = outcome.detail;
  return out;
}

}  // namespace hyperfact

#include "hyperfact/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iterator>
#include <ostream>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hyperfact/askey_wilson.hpp"
#include "hyperfact/campaign.hpp"
#include "hyperfact/errors.hpp"
#include "hyperfact/identities.hpp"
#include "hyperfact/json_io.hpp"
#include "hyperfact/series.hpp"
#include "hyperfact/tridiag.hpp"
#include "hyperfact/wilson.hpp"

namespace hyperfact::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::string& need(const RunConfig& c, const std::string& key) {
  const auto it = c.params.find(key);
  if (it == c.params.end()) throw UsageError("missing required option --" + key);
  return it->second;
}

bool has(const RunConfig& c, const std::string& key) { return c.params.count(key) != 0; }

Rational rat(const RunConfig& c, const std::string& key) { return Rational::parse(need(c, key)); }

unsigned count(const RunConfig& c, const std::string& key) {
  const Rational r = rat(c, key);
  if (!r.is_integer() || r.sign() < 0 || r > Rational(100000)) {
    throw UsageError("--" + key + " must be a nonnegative integer");
  }
  return static_cast<unsigned>(r.numerator().get_ui());
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

std::vector<Rational> rat_list(const RunConfig& c, const std::string& key) {
  std::vector<Rational> values;
  for (const auto& item : split_list(need(c, key))) values.push_back(Rational::parse(item));
  return values;
}

// "--pairs 3:1,5/2:2" -> (B_j, m_j) entries.
std::vector<ShiftPair> shift_pairs(const RunConfig& c) {
  std::vector<ShiftPair> pairs;
  if (!has(c, "pairs")) return pairs;
  for (const auto& item : split_list(need(c, "pairs"))) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw UsageError("--pairs entries look like B:m, got '" + item + "'");
    const Rational shift = Rational::parse(item.substr(colon + 1));
    if (!shift.is_integer() || shift.sign() < 0) throw UsageError("pair shift must be a nonnegative integer");
    pairs.push_back({Rational::parse(item.substr(0, colon)), static_cast<unsigned>(shift.numerator().get_ui())});
  }
  return pairs;
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char ch : text) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + "\"";
}

std::string scalar_text(const Json& value) {
  if (value.is_string()) return value.get<std::string>();
  return value.dump();
}

void emit(const Json& doc, OutputFormat format, std::ostream& out) {
  switch (format) {
    case OutputFormat::Json:
      out << doc.dump(2) << '\n';
      return;
    case OutputFormat::Jsonl:
      out << doc.dump() << '\n';
      return;
    case OutputFormat::Csv:
      out << "field,value\n";
      for (const auto& [key, value] : doc.items()) out << csv_field(key) << ',' << csv_field(scalar_text(value)) << '\n';
      return;
    case OutputFormat::Pretty:
      for (const auto& [key, value] : doc.items()) out << key << ": " << scalar_text(value) << '\n';
      return;
  }
}

Json poly_json(const Poly& p) { return Json{{"poly", p.str()}, {"coeffs", to_json(p)}}; }

WilsonParams wilson_params(const RunConfig& c) {
  return {{rat(c, "t1"), rat(c, "t2"), rat(c, "t3"), rat(c, "t4")}, count(c, "n")};
}

AWParams aw_params(const RunConfig& c) {
  return {{rat(c, "t1"), rat(c, "t2"), rat(c, "t3"), rat(c, "t4")}, rat(c, "q"), count(c, "n")};
}

int cmd_eval(const RunConfig& c, OutputFormat format, std::ostream& out) {
  Json spec_json;
  if (has(c, "spec")) {
    spec_json = Json::parse(need(c, "spec"));
  } else if (has(c, "spec-file")) {
    std::ifstream in(need(c, "spec-file"));
    if (!in) throw UsageError("cannot read " + need(c, "spec-file"));
    spec_json = Json::parse(in);
  } else {
    throw UsageError("eval needs --spec or --spec-file");
  }
  const SeriesSpec spec = series_from_json(spec_json);
  emit(Json{{"spec", to_json(spec)}, {"value", to_json(eval_terminating(spec))}}, format, out);
  return kExitOk;
}

int cmd_wilson(const RunConfig& c, OutputFormat format, std::ostream& out) {
  const std::string& action = c.action;
  if (action == "eval") {
    emit(Json{{"value", to_json(wilson_eval(rat(c, "x"), wilson_params(c)))}}, format, out);
  } else if (action == "poly") {
    const WilsonParams p = wilson_params(c);
    Json doc = poly_json(monic_wilson_poly(p));
    doc["raw_coeffs"] = to_json(wilson_poly(p));
    emit(doc, format, out);
  } else if (action == "case1") {
    emit(to_json(case1_factorize(rat(c, "t1"), rat(c, "t2"), rat(c, "t3"), count(c, "n"))), format, out);
  } else if (action == "case2-zeros") {
    const auto zeros = case2_zeros(rat(c, "t1"), rat(c, "t2"), rat(c, "t4"), count(c, "m"), count(c, "n"));
    emit(Json{{"zeros", to_json(zeros)}, {"verified", true}}, format, out);
  } else if (action == "case2-split") {
    emit(to_json(case2_split(rat(c, "t1"), rat(c, "t2"), rat(c, "t4"), count(c, "m"), count(c, "n"))), format, out);
  } else {
    throw UsageError("unknown wilson action '" + action + "'");
  }
  return kExitOk;
}

int cmd_askey_wilson(const RunConfig& c, OutputFormat format, std::ostream& out) {
  const std::string& action = c.action;
  if (action == "eval") {
    emit(Json{{"value", to_json(aw_eval(rat(c, "x"), aw_params(c)))}}, format, out);
  } else if (action == "poly") {
    emit(poly_json(aw_poly(aw_params(c))), format, out);
  } else if (action == "case1") {
    emit(to_json(q_case1_factorize(rat(c, "t1"), rat(c, "t2"), rat(c, "t3"), rat(c, "q"), count(c, "n"))), format,
         out);
  } else if (action == "case2-split") {
    emit(to_json(q_case2_split(rat(c, "t1"), rat(c, "t2"), rat(c, "t4"), rat(c, "q"), count(c, "m"), count(c, "n"))),
         format, out);
  } else if (action == "zeros") {
    emit(Json{{"zeros", to_json(q_lattice_zeros(rat(c, "t"), rat(c, "q"), count(c, "m")))}}, format, out);
  } else {
    throw UsageError("unknown askey-wilson action '" + action + "'");
  }
  return kExitOk;
}

int cmd_tridiag(const RunConfig& c, OutputFormat format, std::ostream& out) {
  if (has(c, "zeros")) {
    emit(to_json(diophantine_check(rat_list(c, "zeros"))), format, out);
    return kExitOk;
  }
  TridiagSpec spec;
  spec.alpha = rat_list(c, "alpha");
  if (has(c, "beta")) spec.beta = rat_list(c, "beta");
  validate(spec);
  const Poly det = det_poly(spec);
  const bool agrees = det == recurrence_poly(spec, spec.size());
  Json blocks = Json::array();
  Poly product = Poly::constant(Rational(1));
  for (const auto& b : split_on_zero_beta(spec)) {
    blocks.push_back(poly_json(b));
    product *= b;
  }
  Json doc = poly_json(det);
  doc["N"] = spec.size();
  doc["recurrence_agrees"] = agrees;
  doc["blocks"] = std::move(blocks);
  doc["block_product_agrees"] = product == det;
  emit(doc, format, out);
  return agrees && product == det ? kExitOk : kExitCheckFailed;
}

IdentityReport verify_named(const RunConfig& c) {
  const std::string& name = need(c, "identity");
  if (name == "saalschutz") return verify_saalschutz(rat(c, "A"), rat(c, "B"), rat(c, "C"), count(c, "n"));
  if (name == "karlsson-minton") return verify_karlsson_minton(count(c, "N"), rat(c, "B"), shift_pairs(c));
  if (name == "fields-wimp") return verify_fields_wimp_vanishing(count(c, "N"), shift_pairs(c));
  if (name == "whipple") {
    return verify_whipple(count(c, "n"), rat(c, "A"), rat(c, "B"), rat(c, "C"), rat(c, "D"), rat(c, "E"));
  }
  if (name == "q-saalschutz") {
    return verify_q_saalschutz(rat(c, "A"), rat(c, "B"), rat(c, "C"), rat(c, "q"), count(c, "n"));
  }
  if (name == "sears") {
    return verify_sears(count(c, "n"), rat(c, "A"), rat(c, "B"), rat(c, "C"), rat(c, "D"), rat(c, "E"), rat(c, "q"));
  }
  throw UsageError("unknown identity '" + name + "'");
}

int cmd_verify(const RunConfig& c, OutputFormat format, std::ostream& out) {
  const IdentityReport report = verify_named(c);
  emit(to_json(report), format, out);
  return report.holds ? kExitOk : kExitCheckFailed;
}

std::string params_text(const TrialOutcome& o, char sep) {
  std::string text;
  for (const auto& [name, value] : o.params) {
    if (!text.empty()) text += sep;
    text += name + "=" + value.pretty();
  }
  return text;
}

int cmd_fuzz(const RunConfig& c, OutputFormat format, std::ostream& out, std::ostream& err) {
  const std::string which = has(c, "identity") ? need(c, "identity") : std::string("all");
  std::vector<CheckKind> kinds;
  if (which == "all") {
    kinds.assign(all_checks().begin(), all_checks().end());
  } else if (const auto kind = parse_check(which)) {
    kinds.push_back(*kind);
  } else {
    throw UsageError("unknown check '" + which + "'");
  }
  if (c.trials == 0) throw UsageError("--trials must be positive");

  Json results = Json::array();
  Json summary = Json::object();
  bool all_hold = true;
  if (format == OutputFormat::Csv) out << "check,trial,holds,params,lhs,rhs,error\n";
  for (const CheckKind kind : kinds) {
    const auto outcomes = run_campaign(kind, c.seed, c.trials, c.threads);
    std::uint64_t passed = 0;
    for (const auto& o : outcomes) {
      passed += o.holds ? 1 : 0;
      switch (format) {
        case OutputFormat::Jsonl:
          out << to_json(o).dump() << '\n';
          break;
        case OutputFormat::Json:
          results.push_back(to_json(o));
          break;
        case OutputFormat::Csv:
          out << o.check << ',' << o.trial << ',' << (o.holds ? "true" : "false") << ','
              << csv_field(params_text(o, ';')) << ',' << (o.lhs ? o.lhs->str() : "") << ','
              << (o.rhs ? o.rhs->str() : "") << ',' << csv_field(o.error) << '\n';
          break;
        case OutputFormat::Pretty:
          out << (o.holds ? "PASS " : "FAIL ") << o.check << " #" << o.trial << ' ' << params_text(o, ' ');
          if (o.lhs) out << " lhs=" << o.lhs->pretty();
          if (o.rhs) out << " rhs=" << o.rhs->pretty();
          if (!o.error.empty()) out << " error=" << o.error;
          out << '\n';
          break;
      }
    }
    all_hold = all_hold && passed == outcomes.size();
    summary[std::string(check_name(kind))] = Json{{"passed", passed}, {"failed", outcomes.size() - passed}};
  }
  const Json tail{{"seed", c.seed}, {"trials", c.trials}, {"checks", summary}, {"all_hold", all_hold}};
  if (format == OutputFormat::Json) {
    out << Json{{"results", std::move(results)}, {"summary", tail}}.dump(2) << '\n';
  } else if (format == OutputFormat::Pretty) {
    out << "summary: " << tail.dump() << '\n';
  } else {
    err << tail.dump() << '\n';
  }
  return all_hold ? kExitOk : kExitCheckFailed;
}

std::optional<OutputFormat> parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "jsonl") return OutputFormat::Jsonl;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "pretty") return OutputFormat::Pretty;
  return std::nullopt;
}

// CLI11 reads "--t1 -1/2" as two options; glue negative values onto the flag.
std::vector<std::string> normalize_args(int argc, const char* const* argv) {
  static const std::regex negative(R"(-[0-9][0-9/]*(,-?[0-9][0-9/:]*)*)");
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg.rfind("--", 0) == 0 && arg.find('=') == std::string::npos && i + 1 < argc &&
        std::regex_match(argv[i + 1], negative)) {
      arg += "=";
      arg += argv[++i];
    }
    args.push_back(std::move(arg));
  }
  return args;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const bool fuzz = config.command == "fuzz";
  const OutputFormat format = config.output.value_or(fuzz ? OutputFormat::Jsonl : OutputFormat::Json);
  try {
    if (config.command == "eval") return cmd_eval(config, format, out);
    if (config.command == "wilson") return cmd_wilson(config, format, out);
    if (config.command == "askey-wilson") return cmd_askey_wilson(config, format, out);
    if (config.command == "tridiag") return cmd_tridiag(config, format, out);
    if (config.command == "verify") return cmd_verify(config, format, out);
    if (fuzz) return cmd_fuzz(config, format, out, err);
    throw UsageError("unknown command '" + config.command + "'");
  } catch (const FactorizationMismatch& e) {
    err << "check failed: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const ZeroCheckFailed& e) {
    err << "check failed: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const Error& e) {
    err << "invalid parameters: " << e.what() << '\n';
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "bad JSON input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Exact hypergeometric series, Wilson / Askey-Wilson factorizations and identity checks", "hyperfact"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string output;
  app.add_option("--output", output, "json | jsonl | csv | pretty");

  auto param = [&config](CLI::App* sub, const std::string& name, const std::string& help) {
    sub->add_option_function<std::string>(
        "--" + name, [&config, name](const std::string& value) { config.params[name] = value; }, help);
  };

  auto* eval = app.add_subcommand("eval", "Evaluate a terminating series given as JSON");
  param(eval, "spec", "SeriesSpec JSON text");
  param(eval, "spec-file", "path to a SeriesSpec JSON file");

  auto* wilson = app.add_subcommand("wilson", "Wilson polynomials and their factorizations");
  wilson->add_option("action", config.action, "eval | poly | case1 | case2-zeros | case2-split")->required();
  for (const char* name : {"x", "t1", "t2", "t3", "t4", "m", "n"}) param(wilson, name, "rational parameter");

  auto* aw = app.add_subcommand("askey-wilson", "Askey-Wilson polynomials and their factorizations");
  aw->add_option("action", config.action, "eval | poly | case1 | case2-split | zeros")->required();
  for (const char* name : {"x", "t", "t1", "t2", "t3", "t4", "q", "m", "n"}) param(aw, name, "rational parameter");

  auto* tridiag = app.add_subcommand("tridiag", "Characteristic polynomial of a tridiagonal (Jacobi) matrix");
  param(tridiag, "alpha", "comma-separated diagonal alpha_0..alpha_{N-1}");
  param(tridiag, "beta", "comma-separated beta_1..beta_{N-1}");
  param(tridiag, "zeros", "comma-separated zero list for the integer/equi-spacing check");

  auto* verify = app.add_subcommand("verify", "Check one identity instance");
  param(verify, "identity", "saalschutz | karlsson-minton | fields-wimp | whipple | q-saalschutz | sears");
  for (const char* name : {"A", "B", "C", "D", "E", "q", "n", "N"}) param(verify, name, "rational parameter");
  param(verify, "pairs", "B_j:m_j list, e.g. 3:1,5/2:2");

  auto* fuzz = app.add_subcommand("fuzz", "Randomized verification campaign");
  param(fuzz, "identity", "check name or 'all'");
  fuzz->add_option("--trials", config.trials, "trials per check");
  fuzz->add_option("--seed", config.seed, "campaign seed (HYPERFACT_SEED overrides)");
  fuzz->add_option("--threads", config.threads, "worker threads");

  const std::vector<std::string> args = normalize_args(argc, argv);
  std::vector<const char*> raw{argc > 0 ? argv[0] : "hyperfact"};
  for (const auto& a : args) raw.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::Success&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n' << "run with --help for usage\n";
    return kExitUsage;
  }

  for (auto* sub : app.get_subcommands()) config.command = sub->get_name();
  if (!output.empty()) {
    config.output = parse_format(output);
    if (!config.output) {
      err << "--output must be one of json, jsonl, csv, pretty\n";
      return kExitUsage;
    }
  }
  if (const char* env = std::getenv("HYPERFACT_SEED"); env != nullptr && *env != '\0') {
    try {
      config.seed = std::stoull(env);
    } catch (const std::exception&) {
      err << "HYPERFACT_SEED must be an unsigned integer\n";
      return kExitUsage;
    }
  }
  if (config.command == "fuzz" && config.threads == 0) config.threads = 1;
  return run(config, out, err);
}

}  // namespace hyperfact::cli

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "hyperfact/askey_wilson.hpp"
#include "hyperfact/campaign.hpp"
#include "hyperfact/errors.hpp"
#include "hyperfact/identities.hpp"
#include "hyperfact/json_io.hpp"
#include "hyperfact/series.hpp"
#include "hyperfact/tridiag.hpp"
#include "hyperfact/wilson.hpp"

namespace py = pybind11;
using namespace hyperfact;

namespace {

// int, str ("p/q") and fractions.Fraction all stringify to something Rational::parse accepts.
Rational to_rat(const py::handle& value) {
  if (py::isinstance<py::bool_>(value) || py::isinstance<py::float_>(value)) {
    throw py::type_error("expected int, str or Fraction, got " + std::string(py::str(py::type::handle_of(value))));
  }
  return Rational::parse(std::string(py::str(value)));
}

std::vector<Rational> to_rats(const py::iterable& values) {
  std::vector<Rational> out;
  for (const auto& v : values) out.push_back(to_rat(v));
  return out;
}

py::object fraction(const Rational& value) {
  return py::module_::import("fractions").attr("Fraction")(value.str());
}

py::list fractions(const std::vector<Rational>& values) {
  py::list out;
  for (const auto& v : values) out.append(fraction(v));
  return out;
}

py::object from_json(const Json& doc) { return py::module_::import("json").attr("loads")(doc.dump()); }

std::vector<ShiftPair> to_pairs(const py::iterable& pairs) {
  std::vector<ShiftPair> out;
  for (const auto& item : pairs) {
    const auto pair = item.cast<py::tuple>();
    if (pair.size() != 2) throw py::value_error("pairs are (B, m) tuples");
    out.push_back({to_rat(pair[0]), pair[1].cast<unsigned>()});
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_hyperfact, m) {
  m.doc() = "Exact terminating hypergeometric series and Wilson/Askey-Wilson factorizations";

  auto base = py::register_exception<Error>(m, "HyperfactError", PyExc_ValueError);
  py::register_exception<InvalidSpec>(m, "InvalidSpec", base.ptr());
  py::register_exception<PoleInRHS>(m, "PoleInRHS", base.ptr());
  py::register_exception<PoleInNormalization>(m, "PoleInNormalization", base.ptr());
  py::register_exception<FactorizationMismatch>(m, "FactorizationMismatch", base.ptr());
  py::register_exception<ZeroCheckFailed>(m, "ZeroCheckFailed", base.ptr());

  m.def(
      "eval_series", [](const std::string& spec) { return fraction(eval_terminating(series_from_json(Json::parse(spec)))); },
      py::arg("spec_json"));

  m.def(
      "wilson_eval",
      [](const py::handle& x, const py::iterable& t, unsigned n) {
        const auto ts = to_rats(t);
        if (ts.size() != 4) throw py::value_error("t needs four entries");
        return fraction(wilson_eval(to_rat(x), {{ts[0], ts[1], ts[2], ts[3]}, n}));
      },
      py::arg("x"), py::arg("t"), py::arg("n"));
  m.def(
      "wilson_poly",
      [](const py::iterable& t, unsigned n, bool monic) {
        const auto ts = to_rats(t);
        if (ts.size() != 4) throw py::value_error("t needs four entries");
        const WilsonParams p{{ts[0], ts[1], ts[2], ts[3]}, n};
        return fractions((monic ? monic_wilson_poly(p) : wilson_poly(p)).coeffs());
      },
      py::arg("t"), py::arg("n"), py::arg("monic") = true);
  m.def(
      "case1_factorize",
      [](const py::handle& t1, const py::handle& t2, const py::handle& t3, unsigned n) {
        return from_json(to_json(case1_factorize(to_rat(t1), to_rat(t2), to_rat(t3), n)));
      },
      py::arg("t1"), py::arg("t2"), py::arg("t3"), py::arg("n"));
  m.def(
      "case2_zeros",
      [](const py::handle& t1, const py::handle& t2, const py::handle& t4, unsigned m_, unsigned n) {
        return fractions(case2_zeros(to_rat(t1), to_rat(t2), to_rat(t4), m_, n));
      },
      py::arg("t1"), py::arg("t2"), py::arg("t4"), py::arg("m"), py::arg("n"));
  m.def(
      "case2_split",
      [](const py::handle& t1, const py::handle& t2, const py::handle& t4, unsigned m_, unsigned n) {
        return from_json(to_json(case2_split(to_rat(t1), to_rat(t2), to_rat(t4), m_, n)));
      },
      py::arg("t1"), py::arg("t2"), py::arg("t4"), py::arg("m"), py::arg("n"));

  m.def(
      "aw_eval",
      [](const py::handle& x, const py::iterable& t, const py::handle& q, unsigned n) {
        const auto ts = to_rats(t);
        if (ts.size() != 4) throw py::value_error("t needs four entries");
        return fraction(aw_eval(to_rat(x), {{ts[0], ts[1], ts[2], ts[3]}, to_rat(q), n}));
      },
      py::arg("x"), py::arg("t"), py::arg("q"), py::arg("n"));
  m.def(
      "aw_poly",
      [](const py::iterable& t, const py::handle& q, unsigned n) {
        const auto ts = to_rats(t);
        if (ts.size() != 4) throw py::value_error("t needs four entries");
        return fractions(aw_poly({{ts[0], ts[1], ts[2], ts[3]}, to_rat(q), n}).coeffs());
      },
      py::arg("t"), py::arg("q"), py::arg("n"));
  m.def(
      "q_lattice_zeros",
      [](const py::handle& t, const py::handle& q, unsigned m_) {
        return fractions(q_lattice_zeros(to_rat(t), to_rat(q), m_));
      },
      py::arg("t"), py::arg("q"), py::arg("m"));
  m.def(
      "q_case1_factorize",
      [](const py::handle& t1, const py::handle& t2, const py::handle& t3, const py::handle& q, unsigned n) {
        return from_json(to_json(q_case1_factorize(to_rat(t1), to_rat(t2), to_rat(t3), to_rat(q), n)));
      },
      py::arg("t1"), py::arg("t2"), py::arg("t3"), py::arg("q"), py::arg("n"));
  m.def(
      "q_case2_split",
      [](const py::handle& t1, const py::handle& t2, const py::handle& t4, const py::handle& q, unsigned m_,
         unsigned n) {
        return from_json(to_json(q_case2_split(to_rat(t1), to_rat(t2), to_rat(t4), to_rat(q), m_, n)));
      },
      py::arg("t1"), py::arg("t2"), py::arg("t4"), py::arg("q"), py::arg("m"), py::arg("n"));

  m.def(
      "det_poly",
      [](const py::iterable& alpha, const py::iterable& beta) {
        TridiagSpec spec{to_rats(alpha), to_rats(beta)};
        validate(spec);
        return fractions(det_poly(spec).coeffs());
      },
      py::arg("alpha"), py::arg("beta"));
  m.def(
      "recurrence_poly",
      [](const py::iterable& alpha, const py::iterable& beta) {
        TridiagSpec spec{to_rats(alpha), to_rats(beta)};
        validate(spec);
        return fractions(recurrence_poly(spec, spec.size()).coeffs());
      },
      py::arg("alpha"), py::arg("beta"));
  m.def(
      "diophantine_check", [](const py::iterable& zeros) { return from_json(to_json(diophantine_check(to_rats(zeros)))); },
      py::arg("zeros"));

  m.def(
      "verify_saalschutz",
      [](const py::handle& a, const py::handle& b, const py::handle& c, unsigned n) {
        return from_json(to_json(verify_saalschutz(to_rat(a), to_rat(b), to_rat(c), n)));
      },
      py::arg("A"), py::arg("B"), py::arg("C"), py::arg("n"));
  m.def(
      "verify_karlsson_minton",
      [](unsigned big_n, const py::handle& b, const py::iterable& pairs) {
        return from_json(to_json(verify_karlsson_minton(big_n, to_rat(b), to_pairs(pairs))));
      },
      py::arg("N"), py::arg("B"), py::arg("pairs"));
  m.def(
      "verify_fields_wimp",
      [](unsigned big_n, const py::iterable& pairs) {
        return from_json(to_json(verify_fields_wimp_vanishing(big_n, to_pairs(pairs))));
      },
      py::arg("N"), py::arg("pairs"));
  m.def(
      "verify_whipple",
      [](unsigned n, const py::handle& a, const py::handle& b, const py::handle& c, const py::handle& d,
         const py::handle& e) {
        return from_json(to_json(verify_whipple(n, to_rat(a), to_rat(b), to_rat(c), to_rat(d), to_rat(e))));
      },
      py::arg("n"), py::arg("A"), py::arg("B"), py::arg("C"), py::arg("D"), py::arg("E"));
  m.def(
      "verify_q_saalschutz",
      [](const py::handle& a, const py::handle& b, const py::handle& c, const py::handle& q, unsigned n) {
        return from_json(to_json(verify_q_saalschutz(to_rat(a), to_rat(b), to_rat(c), to_rat(q), n)));
      },
      py::arg("A"), py::arg("B"), py::arg("C"), py::arg("q"), py::arg("n"));
  m.def(
      "verify_sears",
      [](unsigned n, const py::handle& a, const py::handle& b, const py::handle& c, const py::handle& d,
         const py::handle& e, const py::handle& q) {
        return from_json(
            to_json(verify_sears(n, to_rat(a), to_rat(b), to_rat(c), to_rat(d), to_rat(e), to_rat(q))));
      },
      py::arg("n"), py::arg("A"), py::arg("B"), py::arg("C"), py::arg("D"), py::arg("E"), py::arg("q"));

  m.def("checks", [] {
    std::vector<std::string> names;
    for (const CheckKind kind : all_checks()) names.emplace_back(check_name(kind));
    return names;
  });
  m.def(
      "fuzz",
      [](const std::string& check, std::uint64_t seed, std::uint64_t trials, unsigned threads) {
        const auto kind = parse_check(check);
        if (!kind) throw py::value_error("unknown check '" + check + "'");
        std::vector<TrialOutcome> outcomes;
        {
          py::gil_scoped_release release;
          outcomes = run_campaign(*kind, seed, trials, threads);
        }
        py::list out;
        for (const auto& o : outcomes) out.append(from_json(to_json(o)));
        return out;
      },
      py::arg("check"), py::arg("seed") = 0, py::arg("trials") = 100, py::arg("threads") = 1);
}

#include <pybind11/pybind11.h>

#include <string>

#include "morrey/errors.hpp"
#include "morrey/jobs.hpp"
#include "morrey/json_io.hpp"
#include "morrey/norms.hpp"
#include "morrey/phi.hpp"
#include "morrey/space.hpp"
#include "morrey/verdict.hpp"

namespace py = pybind11;

namespace {

morrey::ordered_json parse_request(const std::string& text) {
  try {
    return morrey::ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw morrey::config_error(std::string("request is not valid JSON: ") +
                               e.what());
  }
}

std::string decide_json(const std::string& request) {
  const auto req = parse_request(request);
  const morrey::SpaceSpec src = morrey::space_from_json(req.at("source"));
  const morrey::SpaceSpec tgt = morrey::space_from_json(req.at("target"));
  return morrey::verdict_to_json(morrey::decide(src, tgt)).dump(2) + "\n";
}

std::string norms_json(const std::string& request) {
  const auto req = parse_request(request);
  int d = 1;
  const morrey::NormParams prm =
      morrey::params_from_json(req.at("params"), &d);
  const morrey::DyadicSeq seq = morrey::seq_from_json(req.at("sequence"));
  if (seq.d != d)
    throw morrey::config_error("sequence dimension does not match params");
  morrey::ordered_json rep;
  rep["n_norm_star"] = morrey::number_to_json(morrey::n_norm_star(seq, prm));
  rep["n_norm_morrey"] =
      morrey::number_to_json(morrey::n_norm_morrey(seq, prm));
  rep["b_norm"] = morrey::number_to_json(morrey::b_norm(seq, prm));
  rep["besov_sup_norm"] =
      morrey::number_to_json(morrey::besov_sup_norm(seq, prm.s, prm.q));
  return rep.dump(2) + "\n";
}

std::string eval_phi_json(const std::string& request) {
  const auto req = parse_request(request);
  int d = 1;
  if (auto it = req.find("d"); it != req.end()) d = it->get<int>();
  const morrey::PhiSpec phi = morrey::phi_from_json(req.at("phi"), d);
  const double t = morrey::number_from_json(req.at("t"), "t");
  const morrey::RateTerm rate = morrey::rate_at_zero(phi);
  morrey::ordered_json rep;
  rep["family"] = morrey::family_name(phi.family);
  rep["value"] = morrey::number_to_json(morrey::eval_phi(phi, t));
  rep["rate"]["beta"] = morrey::number_to_json(rate.beta);
  rep["rate"]["gamma"] = morrey::number_to_json(rate.gamma);
  rep["rate"]["trusted"] = rate.trusted;
  return rep.dump(2) + "\n";
}

py::tuple run_config(const std::string& config_text, const std::string& format,
                     int jobs) {
  const morrey::RunResult res =
      morrey::run_config_text(config_text, format, jobs);
  return py::make_tuple(res.exit_code, res.report, res.error);
}

}  // namespace

PYBIND11_MODULE(morreyseq, m) {
  m.doc() = "Embedding decisions and sequence norms for generalized "
            "smoothness scales on the dyadic cube";
  py::register_exception<morrey::config_error>(m, "ConfigError",
                                               PyExc_ValueError);

  m.def("version", [] { return std::string("0.1.0"); },
        "Library version string.");
  m.attr("__version__") = "0.1.0";

  m.def("decide_json", &decide_json, py::arg("request"),
        "Decide an embedding. Request: {\"source\": space, \"target\": "
        "space}; returns the verdict document as JSON text.");
  m.def("norms_json", &norms_json, py::arg("request"),
        "Evaluate all sequence norms. Request: {\"params\": norm params, "
        "\"sequence\": sequence}; returns a JSON report.");
  m.def("eval_phi_json", &eval_phi_json, py::arg("request"),
        "Evaluate a weight at a point. Request: {\"d\": int, \"phi\": weight "
        "spec, \"t\": number}; returns value and decay rate as JSON.");
  m.def("run_config", &run_config, py::arg("config_text"),
        py::arg("format") = "json", py::arg("jobs") = 1,
        "Run a full config document; returns (exit_code, report, error).");
}

#include "morrey/json_io.hpp"

#include <cmath>

#include "morrey/errors.hpp"

namespace morrey {

namespace {

const ordered_json& require_field(const ordered_json& j, const char* key,
                                  const char* ctx) {
  auto it = j.find(key);
  if (it == j.end())
    throw config_error(std::string(ctx) + ": missing field '" + key + "'");
  return *it;
}

double number_field(const ordered_json& j, const char* key, const char* ctx) {
  return number_from_json(require_field(j, key, ctx), key);
}

double number_field_or(const ordered_json& j, const char* key, double dflt) {
  auto it = j.find(key);
  if (it == j.end()) return dflt;
  return number_from_json(*it, key);
}

}  // namespace

double number_from_json(const ordered_json& v, const char* what) {
  if (v.is_string()) {
    if (v.get<std::string>() == "inf") return INFINITY;
    throw config_error(std::string(what) +
                       ": only the string \"inf\" denotes infinity");
  }
  if (v.is_number()) return v.get<double>();
  throw config_error(std::string(what) + ": expected a number or \"inf\"");
}

ordered_json number_to_json(double v) {
  if (is_pos_inf(v)) return ordered_json("inf");
  if (!std::isfinite(v))
    throw internal_error("non-finite value cannot be serialized");
  return ordered_json(v);
}

PhiSpec phi_from_json(const ordered_json& j, int d) {
  if (!j.is_object()) throw config_error("weight: expected an object");
  const std::string family =
      require_field(j, "family", "weight").get<std::string>();
  if (family == "power") return make_power(d, number_field(j, "u", "weight"));
  if (family == "piecewise_power")
    return make_piecewise_power(d, number_field(j, "u", "weight"),
                                number_field_or(j, "v", INFINITY));
  if (family == "power_log")
    return make_power_log(d, number_field(j, "u", "weight"),
                          number_field(j, "a", "weight"),
                          number_field(j, "L", "weight"));
  if (family == "log_blend") return make_log_blend(d);
  if (family == "inv_log")
    return make_inv_log(d, number_field(j, "a", "weight"));
  if (family == "psi_critical")
    return make_psi_critical(d, number_field(j, "p", "weight"));
  if (family == "tabulated") {
    const ordered_json& samples = require_field(j, "samples", "weight");
    if (!samples.is_array() || samples.empty())
      throw config_error("weight: samples must be a non-empty array");
    std::vector<double> vals;
    for (const auto& s : samples)
      vals.push_back(number_from_json(s, "samples"));
    const ordered_json& rate = require_field(j, "rate", "weight");
    RateTerm rt;
    rt.beta = number_field(rate, "beta", "rate");
    rt.gamma = number_field(rate, "gamma", "rate");
    const std::string conf =
        require_field(rate, "confidence", "rate").get<std::string>();
    if (conf != "high" && conf != "low")
      throw config_error("rate confidence must be \"high\" or \"low\"");
    rt.trusted = conf == "high";
    return make_tabulated(d, std::move(vals), rt);
  }
  throw config_error("unknown weight family: " + family);
}

ordered_json phi_to_json(const PhiSpec& phi) {
  ordered_json j;
  j["family"] = family_name(phi.family);
  switch (phi.family) {
    case PhiFamily::power:
      j["u"] = number_to_json(phi.u);
      break;
    case PhiFamily::piecewise_power:
      j["u"] = number_to_json(phi.u);
      j["v"] = number_to_json(phi.v);
      break;
    case PhiFamily::power_log:
      j["u"] = number_to_json(phi.u);
      j["a"] = number_to_json(phi.a);
      j["L"] = number_to_json(phi.L);
      break;
    case PhiFamily::log_blend:
      break;
    case PhiFamily::inv_log:
      j["a"] = number_to_json(phi.a);
      break;
    case PhiFamily::psi_critical:
      j["p"] = number_to_json(phi.p);
      break;
    case PhiFamily::tabulated: {
      ordered_json samples = ordered_json::array();
      for (double s : phi.samples) samples.push_back(number_to_json(s));
      j["samples"] = std::move(samples);
      j["rate"] = {{"beta", number_to_json(phi.tab_rate.beta)},
                   {"gamma", number_to_json(phi.tab_rate.gamma)},
                   {"confidence", phi.tab_rate.trusted ? "high" : "low"}};
      break;
    }
  }
  return j;
}

SpaceSpec space_from_json(const ordered_json& j) {
  if (!j.is_object()) throw config_error("space: expected an object");
  SpaceSpec spec;
  spec.scale =
      scale_from_string(require_field(j, "scale", "space").get<std::string>());
  const double d = number_field_or(j, "d", 1.0);
  if (d != std::floor(d) || d < 1 || d > 4)
    throw config_error("space: d must be an integer in 1..4");
  spec.d = static_cast<int>(d);
  spec.s = number_field_or(j, "s", 0.0);
  spec.p = number_field_or(j, "p", 1.0);
  spec.q = number_field_or(j, "q", 1.0);
  spec.r = number_field_or(j, "r", 1.0);
  if (auto it = j.find("phi"); it != j.end() && !it->is_null())
    spec.phi = phi_from_json(*it, spec.d);
  validate_space(spec);
  return spec;
}

ordered_json space_to_json(const SpaceSpec& spec) {
  ordered_json j;
  j["scale"] = scale_name(spec.scale);
  j["d"] = spec.d;
  if (spec.scale == Scale::Lr) {
    j["r"] = number_to_json(spec.r);
    return j;
  }
  if (spec.scale == Scale::bmo) return j;
  j["s"] = number_to_json(spec.s);
  j["p"] = number_to_json(spec.p);
  j["q"] = number_to_json(spec.q);
  if (spec.phi) j["phi"] = phi_to_json(*spec.phi);
  return j;
}

DyadicSeq seq_from_json(const ordered_json& j) {
  if (!j.is_object()) throw config_error("sequence: expected an object");
  const double d = number_field(j, "d", "sequence");
  const double J = number_field(j, "J", "sequence");
  if (d != std::floor(d) || J != std::floor(J))
    throw config_error("sequence: d and J must be integers");
  DyadicSeq seq(static_cast<int>(d), static_cast<int>(J));
  const ordered_json& entries = require_field(j, "entries", "sequence");
  if (!entries.is_array())
    throw config_error("sequence: entries must be an array");
  for (const auto& e : entries) {
    const double level = number_field(e, "j", "entry");
    if (level != std::floor(level))
      throw config_error("entry: j must be an integer");
    const ordered_json& m = require_field(e, "m", "entry");
    if (!m.is_array()) throw config_error("entry: m must be an array");
    std::vector<int64_t> coords;
    for (const auto& c : m) {
      const double x = number_from_json(c, "m");
      if (x != std::floor(x)) throw config_error("entry: m must be integers");
      coords.push_back(static_cast<int64_t>(x));
    }
    seq.set(static_cast<int>(level), coords, number_field(e, "v", "entry"));
  }
  return seq;
}

ordered_json seq_to_json(const DyadicSeq& seq) {
  ordered_json j;
  j["d"] = seq.d;
  j["J"] = seq.J;
  ordered_json entries = ordered_json::array();
  for (int lvl = 0; lvl <= seq.J; ++lvl) {
    for_each_coded(seq, lvl, [&](uint64_t code, double v) {
      ordered_json e;
      e["j"] = lvl;
      e["m"] = morton_decode(code, lvl, seq.d);
      e["v"] = number_to_json(v);
      entries.push_back(std::move(e));
    });
  }
  j["entries"] = std::move(entries);
  return j;
}

NormParams params_from_json(const ordered_json& j, int* d_out) {
  if (!j.is_object()) throw config_error("params: expected an object");
  const double d = number_field_or(j, "d", 1.0);
  if (d != std::floor(d) || d < 1 || d > 4)
    throw config_error("params: d must be an integer in 1..4");
  NormParams prm;
  prm.s = number_field_or(j, "s", 0.0);
  prm.p = number_field(j, "p", "params");
  prm.q = number_field(j, "q", "params");
  prm.phi = phi_from_json(require_field(j, "phi", "params"),
                          static_cast<int>(d));
  if (d_out) *d_out = static_cast<int>(d);
  return prm;
}

namespace {

ordered_json rate_to_json(const RateTerm& r) {
  return {{"beta", number_to_json(r.beta)},
          {"gamma", number_to_json(r.gamma)},
          {"trusted", r.trusted}};
}

}  // namespace

ordered_json verdict_to_json(const Verdict& v) {
  ordered_json j;
  j["continuous"] = to_string(v.continuous);
  j["compact"] = to_string(v.compact);
  j["rules"] = v.rules;
  ordered_json tr;
  tr["rho"] = number_to_json(v.trace.rho);
  tr["qstar"] = number_to_json(v.trace.qstar);
  if (v.trace.ratio_rate) tr["ratio_rate"] = rate_to_json(*v.trace.ratio_rate);
  if (v.trace.alpha_rate) tr["alpha_rate"] = rate_to_json(*v.trace.alpha_rate);
  if (v.trace.xi_rate) tr["xi_rate"] = rate_to_json(*v.trace.xi_rate);
  if (v.trace.sigma) tr["sigma"] = number_to_json(*v.trace.sigma);
  if (v.trace.sigma_inf) tr["sigma_inf"] = number_to_json(*v.trace.sigma_inf);
  if (v.trace.sigma_bar) tr["sigma_bar"] = number_to_json(*v.trace.sigma_bar);
  if (v.trace.dominance) tr["dominance"] = *v.trace.dominance;
  tr["notes"] = v.trace.notes;
  j["trace"] = std::move(tr);
  return j;
}

ordered_json probe_to_json(const ProbeReport& r) {
  ordered_json j;
  j["max_source_norm"] = number_to_json(r.max_source_norm);
  j["min_pairwise_target_gap"] = number_to_json(r.min_pairwise_target_gap);
  j["beta_hat"] = number_to_json(r.beta_hat);
  j["J"] = r.J;
  j["K"] = r.K;
  ordered_json src = ordered_json::array(), tgt = ordered_json::array(),
               gaps = ordered_json::array();
  for (double x : r.source_norms) src.push_back(number_to_json(x));
  for (double x : r.target_norms) tgt.push_back(number_to_json(x));
  for (double x : r.nearest_gaps) gaps.push_back(number_to_json(x));
  j["source_norms"] = std::move(src);
  j["target_norms"] = std::move(tgt);
  j["nearest_gaps"] = std::move(gaps);
  j["notes"] = r.notes;
  return j;
}

}  // namespace morrey

#include "morrey/jobs.hpp"

#include <atomic>
#include <charconv>
#include <cmath>
#include <mutex>
#include <sstream>
#include <thread>
#include <vector>

#include "morrey/acceptance.hpp"
#include "morrey/errors.hpp"
#include "morrey/json_io.hpp"

namespace morrey {

namespace {

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::vector<int> default_levels(int d) {
  switch (d) {
    case 1:
      return {15, 20, 25, 30, 35, 40};
    case 2:
      return {6, 11, 16, 21, 26, 31};
    case 3:
      return {5, 8, 11, 14, 17, 20};
    default:
      return {5, 7, 9, 11, 13, 15};
  }
}

void apply_sweep_value(SpaceSpec& src, SpaceSpec& tgt,
                       const std::string& parameter, double value) {
  SpaceSpec* spec = nullptr;
  std::string field;
  if (parameter.rfind("source.", 0) == 0) {
    spec = &src;
    field = parameter.substr(7);
  } else if (parameter.rfind("target.", 0) == 0) {
    spec = &tgt;
    field = parameter.substr(7);
  } else {
    throw config_error("sweep parameter must start with source. or target.");
  }
  if (field == "s")
    spec->s = value;
  else if (field == "p")
    spec->p = value;
  else if (field == "q")
    spec->q = value;
  else if (field == "r")
    spec->r = value;
  else
    throw config_error("sweep parameter field must be s, p, q or r");
}

std::vector<double> sweep_values(const ordered_json& cfg) {
  if (auto it = cfg.find("values"); it != cfg.end()) {
    if (!it->is_array() || it->empty())
      throw config_error("sweep: values must be a non-empty array");
    std::vector<double> out;
    for (const auto& v : *it) out.push_back(number_from_json(v, "values"));
    return out;
  }
  const double from = number_from_json(cfg.at("from"), "from");
  const double to = number_from_json(cfg.at("to"), "to");
  const double step = number_from_json(cfg.at("step"), "step");
  if (!(step > 0) || !std::isfinite(step) || !std::isfinite(from) ||
      !std::isfinite(to) || to < from)
    throw config_error("sweep: need finite from <= to and step > 0");
  const int count = static_cast<int>(std::floor((to - from) / step + 1e-9)) + 1;
  if (count > 100000) throw config_error("sweep: too many grid points");
  std::vector<double> out;
  out.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(from + i * step);
  return out;
}

struct SweepRow {
  double value = 0;
  Verdict verdict;
};

std::vector<SweepRow> run_sweep(const SpaceSpec& src, const SpaceSpec& tgt,
                                const std::string& parameter,
                                const std::vector<double>& values, int jobs) {
  std::vector<SweepRow> rows(values.size());
  std::atomic<size_t> next{0};
  std::atomic<bool> saw_config{false}, saw_internal{false};
  std::string config_msg, internal_msg;
  std::mutex err_mu;

  auto worker = [&]() {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= values.size()) return;
      try {
        SpaceSpec a = src, b = tgt;
        apply_sweep_value(a, b, parameter, values[i]);
        rows[i].value = values[i];
        rows[i].verdict = decide(a, b);
      } catch (const config_error& e) {
        std::lock_guard<std::mutex> lk(err_mu);
        if (!saw_config.exchange(true)) config_msg = e.what();
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lk(err_mu);
        if (!saw_internal.exchange(true)) internal_msg = e.what();
      }
    }
  };

  if (jobs <= 1 || values.size() < 2) {
    worker();
  } else {
    std::vector<std::thread> pool;
    const int n = std::min<int>(jobs, static_cast<int>(values.size()));
    pool.reserve(static_cast<size_t>(n));
    for (int t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (saw_config.load()) throw config_error(config_msg);
  if (saw_internal.load()) throw internal_error(internal_msg);
  return rows;
}

std::string join_rules(const std::vector<std::string>& rules) {
  std::string out;
  for (size_t i = 0; i < rules.size(); ++i) {
    if (i) out += "|";
    out += rules[i];
  }
  return out;
}

std::string render_sweep_csv(const std::string& parameter,
                             const std::vector<SweepRow>& rows) {
  std::string out = "value,continuous,compact,rules\n";
  (void)parameter;
  for (const SweepRow& r : rows) {
    out += format_double(r.value);
    out += ",";
    out += to_string(r.verdict.continuous);
    out += ",";
    out += to_string(r.verdict.compact);
    out += ",";
    out += join_rules(r.verdict.rules);
    out += "\n";
  }
  return out;
}

std::string dispatch(const ordered_json& cfg, const std::string& format,
                     int jobs, int* exit_code) {
  const std::string task = cfg.at("task").get<std::string>();
  const bool csv = format == "csv";
  if (format != "json" && format != "csv")
    throw config_error("format must be json or csv");
  if (csv && task != "sweep")
    throw config_error("csv output is only defined for sweeps");

  if (task == "verdict") {
    const SpaceSpec src = space_from_json(cfg.at("source"));
    const SpaceSpec tgt = space_from_json(cfg.at("target"));
    ordered_json rep;
    rep["task"] = "verdict";
    rep["source"] = space_to_json(src);
    rep["target"] = space_to_json(tgt);
    rep["verdict"] = verdict_to_json(decide(src, tgt));
    return rep.dump(2) + "\n";
  }

  if (task == "norms") {
    int d = 1;
    const NormParams prm = params_from_json(cfg.at("params"), &d);
    const DyadicSeq seq = seq_from_json(cfg.at("sequence"));
    if (seq.d != d)
      throw config_error("sequence dimension does not match params");
    ordered_json rep;
    rep["task"] = "norms";
    rep["n_norm_star"] = number_to_json(n_norm_star(seq, prm));
    rep["n_norm_morrey"] = number_to_json(n_norm_morrey(seq, prm));
    rep["b_norm"] = number_to_json(b_norm(seq, prm));
    rep["besov_sup_norm"] =
        number_to_json(besov_sup_norm(seq, prm.s, prm.q));
    return rep.dump(2) + "\n";
  }

  if (task == "sweep") {
    const SpaceSpec src = space_from_json(cfg.at("source"));
    const SpaceSpec tgt = space_from_json(cfg.at("target"));
    const std::string parameter = cfg.at("parameter").get<std::string>();
    const std::vector<double> values = sweep_values(cfg);
    const std::vector<SweepRow> rows =
        run_sweep(src, tgt, parameter, values, jobs);
    if (csv) return render_sweep_csv(parameter, rows);
    ordered_json rep;
    rep["task"] = "sweep";
    rep["parameter"] = parameter;
    ordered_json jrows = ordered_json::array();
    for (const SweepRow& r : rows) {
      ordered_json row;
      row["value"] = number_to_json(r.value);
      row["continuous"] = to_string(r.verdict.continuous);
      row["compact"] = to_string(r.verdict.compact);
      row["rules"] = r.verdict.rules;
      jrows.push_back(std::move(row));
    }
    rep["rows"] = std::move(jrows);
    return rep.dump(2) + "\n";
  }

  if (task == "witness") {
    const SpaceSpec src = space_from_json(cfg.at("source"));
    const SpaceSpec tgt = space_from_json(cfg.at("target"));
    std::vector<int> levels = default_levels(src.d);
    if (auto it = cfg.find("levels"); it != cfg.end()) {
      levels.clear();
      for (const auto& v : *it) {
        const double x = number_from_json(v, "levels");
        if (x != std::floor(x)) throw config_error("levels must be integers");
        levels.push_back(static_cast<int>(x));
      }
    }
    const WitnessPlan plan = witness_for(src, tgt, levels);
    ordered_json rep;
    rep["task"] = "witness";
    rep["verdict"] = verdict_to_json(decide(src, tgt));
    rep["available"] = plan.available;
    rep["note"] = plan.note;
    if (plan.available) {
      rep["construction"] = plan.construction;
      ordered_json lv = ordered_json::array();
      for (int x : plan.family.levels) lv.push_back(x);
      rep["levels"] = std::move(lv);
      rep["probe"] = probe_to_json(probe_compactness(plan.family, src, tgt));
    }
    return rep.dump(2) + "\n";
  }

  if (task == "selftest") {
    std::ostringstream log;
    const bool passed = run_acceptance(log);
    ordered_json rep;
    rep["task"] = "selftest";
    rep["passed"] = passed;
    rep["log"] = log.str();
    if (exit_code) *exit_code = 0;
    return rep.dump(2) + "\n";
  }

  throw config_error("unknown task: " + task);
}

}  // namespace

RunResult run_config_text(const std::string& config_text,
                          const std::string& format, int jobs) {
  RunResult result;
  try {
    if (jobs < 1) throw config_error("jobs must be at least 1");
    ordered_json cfg;
    try {
      cfg = ordered_json::parse(config_text);
    } catch (const nlohmann::json::parse_error& e) {
      throw config_error(std::string("config is not valid JSON: ") + e.what());
    }
    if (!cfg.is_object() || !cfg.contains("task"))
      throw config_error("config must be an object with a task field");
    result.report = dispatch(cfg, format, jobs, &result.exit_code);
  } catch (const config_error& e) {
    result.exit_code = 2;
    result.report.clear();
    result.error = e.what();
  } catch (const nlohmann::json::exception& e) {
    // Missing or mistyped config fields surface here.
    result.exit_code = 2;
    result.report.clear();
    result.error = e.what();
  } catch (const std::exception& e) {
    result.exit_code = 1;
    result.report.clear();
    result.error = e.what();
  }
  return result;
}

}  // namespace morrey

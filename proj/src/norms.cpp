#include "morrey/norms.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

#include "morrey/errors.hpp"
#include "morrey/summation.hpp"

namespace morrey {

namespace {

void check_params(const NormParams& prm) {
  if (!(prm.p > 0) || is_pos_inf(prm.p))
    throw config_error("norm parameter p must be finite positive");
  if (!(prm.q > 0)) throw config_error("norm parameter q must be positive");
  if (!std::isfinite(prm.s)) throw config_error("smoothness s must be finite");
}

}  // namespace

double ell_q(const std::vector<double>& values, double q) {
  if (!(q > 0)) throw config_error("ell_q exponent must be positive or inf");
  if (is_pos_inf(q)) {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::abs(v));
    return m;
  }
  Accum<double> acc;
  for (double v : values) acc.add(std::pow(std::abs(v), q));
  return std::pow(acc.value(), 1.0 / q);
}

// Bottom-up evaluator: per level j the cell power sums are merged ancestor by
// ancestor, taking the windowed supremum at each coarsening step, then the
// weighted level values aggregate in ell_q.
double n_norm_star(const DyadicSeq& seq, const NormParams& prm) {
  check_params(prm);
  const int d = seq.d;
  std::vector<double> level_terms(static_cast<size_t>(seq.J) + 1, 0.0);
  std::vector<std::pair<uint64_t, Accum<double>>> groups, merged;
  for (int j = 0; j <= seq.J; ++j) {
    groups.clear();
    for_each_coded(seq, j, [&](uint64_t code, double v) {
      Accum<double> a;
      a.add(std::pow(std::abs(v), prm.p));
      groups.emplace_back(code, a);
    });
    double best = 0.0;
    for (int nu = j; nu >= 0; --nu) {
      const double w = eval_phi(prm.phi, std::ldexp(1.0, -nu)) *
                       std::exp2(static_cast<double>((nu - j) * d) / prm.p);
      for (const auto& [code, acc] : groups)
        best = std::max(best, w * std::pow(acc.value(), 1.0 / prm.p));
      if (nu == 0) break;
      merged.clear();
      for (const auto& [code, acc] : groups) {
        const uint64_t parent = code >> d;
        if (merged.empty() || merged.back().first != parent)
          merged.emplace_back(parent, Accum<double>{});
        merged.back().second.add(acc.sum);
        merged.back().second.add(acc.comp);
      }
      groups.swap(merged);
    }
    level_terms[static_cast<size_t>(j)] =
        std::exp2(static_cast<double>(j) * prm.s) * best;
  }
  return ell_q(level_terms, prm.q);
}

// Window-supremum evaluator over the same quantity, written as an independent
// cross-check: per level it scans every coarser window directly (including
// windows larger than the unit cube, which admissible weights dominate away),
// sums in extended precision, and carries the measure factor inside the root.
double n_norm_morrey(const DyadicSeq& seq, const NormParams& prm) {
  check_params(prm);
  const int d = seq.d;
  const long double pl = static_cast<long double>(prm.p);
  const bool skip_coarse = prm.phi.family == PhiFamily::tabulated;
  std::vector<std::pair<uint64_t, double>> cells;
  std::vector<long double> level_vals(static_cast<size_t>(seq.J) + 1, 0.0L);
  for (int j = 0; j <= seq.J; ++j) {
    cells.clear();
    for_each_coded(seq, j, [&](uint64_t code, double v) {
      cells.emplace_back(code, v);
    });
    long double best = 0.0L;
    for (int nu = j; nu >= -5; --nu) {
      if (nu < 0 && skip_coarse) break;
      const int shift = (j - nu) * d;
      const long double measure =
          std::pow(2.0L, static_cast<long double>((nu - j) * d));
      const double wphi = eval_phi(prm.phi, std::ldexp(1.0, -nu));
      if (nu <= 0) {
        long double total = 0.0L;
        for (const auto& [code, v] : cells)
          total += std::pow(static_cast<long double>(v), pl);
        best = std::max(best, static_cast<long double>(wphi) *
                                  std::pow(measure * total, 1.0L / pl));
        continue;
      }
      size_t i = 0;
      while (i < cells.size()) {
        const uint64_t anc = cells[i].first >> shift;
        long double s = 0.0L;
        while (i < cells.size() && (cells[i].first >> shift) == anc) {
          s += std::pow(static_cast<long double>(cells[i].second), pl);
          ++i;
        }
        best = std::max(best, static_cast<long double>(wphi) *
                                  std::pow(measure * s, 1.0L / pl));
      }
    }
    level_vals[static_cast<size_t>(j)] =
        std::pow(2.0L, static_cast<long double>(j) * prm.s) * best;
  }
  if (is_pos_inf(prm.q)) {
    long double m = 0.0L;
    for (long double v : level_vals) m = std::max(m, v);
    return static_cast<double>(m);
  }
  long double acc = 0.0L;
  for (long double v : level_vals)
    acc += std::pow(v, static_cast<long double>(prm.q));
  return static_cast<double>(
      std::pow(acc, 1.0L / static_cast<long double>(prm.q)));
}

namespace {

// Power sums of every level restricted to every window touching mass,
// keyed (window level, window cell, contributing level).
std::map<std::tuple<int, uint64_t, int>, Accum<double>> window_power_sums(
    const DyadicSeq& seq, double p) {
  std::map<std::tuple<int, uint64_t, int>, Accum<double>> sums;
  for (int j = 0; j <= seq.J; ++j) {
    for_each_coded(seq, j, [&](uint64_t code, double v) {
      const double pw = std::pow(std::abs(v), p);
      for (int nu = 0; nu <= j; ++nu)
        sums[{nu, code >> ((j - nu) * seq.d), j}].add(pw);
    });
  }
  return sums;
}

}  // namespace

std::vector<WindowValue> b_norm_windows(const DyadicSeq& seq,
                                        const NormParams& prm) {
  check_params(prm);
  const auto sums = window_power_sums(seq, prm.p);
  std::vector<WindowValue> out;
  const double excess = prm.s - static_cast<double>(seq.d) / prm.p;
  auto it = sums.begin();
  while (it != sums.end()) {
    const int nu = std::get<0>(it->first);
    const uint64_t anc = std::get<1>(it->first);
    std::vector<double> terms;
    while (it != sums.end() && std::get<0>(it->first) == nu &&
           std::get<1>(it->first) == anc) {
      const int j = std::get<2>(it->first);
      terms.push_back(std::exp2(static_cast<double>(j) * excess) *
                      std::pow(it->second.value(), 1.0 / prm.p));
      ++it;
    }
    WindowValue wv;
    wv.nu = nu;
    wv.code = anc;
    wv.value = eval_phi(prm.phi, std::ldexp(1.0, -nu)) *
               std::exp2(static_cast<double>(nu * seq.d) / prm.p) *
               ell_q(terms, prm.q);
    out.push_back(wv);
  }
  return out;
}

double b_norm(const DyadicSeq& seq, const NormParams& prm) {
  double best = 0.0;
  for (const WindowValue& wv : b_norm_windows(seq, prm))
    best = std::max(best, wv.value);
  return best;
}

double besov_sup_norm(const DyadicSeq& seq, double s, double q) {
  if (!std::isfinite(s)) throw config_error("smoothness s must be finite");
  std::vector<double> terms(static_cast<size_t>(seq.J) + 1, 0.0);
  for (int j = 0; j <= seq.J; ++j)
    terms[static_cast<size_t>(j)] =
        std::exp2(static_cast<double>(j) * s) * seq.level_max(j);
  return ell_q(terms, q);
}

std::vector<WindowValue> sup_norm_windows(const DyadicSeq& seq, double s2) {
  if (!std::isfinite(s2)) throw config_error("smoothness s must be finite");
  std::map<std::tuple<int, uint64_t, int>, double> peaks;
  for (int j = 0; j <= seq.J; ++j) {
    for_each_coded(seq, j, [&](uint64_t code, double v) {
      const double av = std::abs(v);
      for (int nu = 0; nu <= j; ++nu) {
        double& slot = peaks[{nu, code >> ((j - nu) * seq.d), j}];
        slot = std::max(slot, av);
      }
    });
  }
  std::vector<WindowValue> out;
  auto it = peaks.begin();
  while (it != peaks.end()) {
    const int nu = std::get<0>(it->first);
    const uint64_t anc = std::get<1>(it->first);
    double best = 0.0;
    while (it != peaks.end() && std::get<0>(it->first) == nu &&
           std::get<1>(it->first) == anc) {
      const int j = std::get<2>(it->first);
      best = std::max(
          best, std::exp2(static_cast<double>(j) * s2) * it->second);
      ++it;
    }
    out.push_back(WindowValue{nu, anc, best});
  }
  return out;
}

}  // namespace morrey

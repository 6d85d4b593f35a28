#include "morrey/witness.hpp"

#include <algorithm>
#include <cmath>

#include "morrey/errors.hpp"
#include "morrey/indices.hpp"

namespace morrey {

namespace {

double single_cell_value(const SpaceSpec& spec, int j) {
  const PhiSpec phi = effective_phi(spec);
  return std::exp2(-static_cast<double>(j) * spec.s) /
         eval_phi(phi, std::ldexp(1.0, -j));
}

void check_levels(const std::vector<int>& levels, int d) {
  if (levels.empty()) throw config_error("witness family needs levels");
  for (size_t i = 0; i < levels.size(); ++i) {
    if (levels[i] < 0 || levels[i] * d > 62)
      throw config_error("witness level out of range");
    if (i > 0 && levels[i] <= levels[i - 1])
      throw config_error("witness levels must increase");
  }
}

}  // namespace

WitnessFamily build_family_single_cube(const SpaceSpec& spec,
                                       const std::vector<int>& levels,
                                       WitnessScaling scaling) {
  check_levels(levels, spec.d);
  WitnessFamily fam;
  fam.levels = levels;
  fam.construction = scaling == WitnessScaling::source_normalized
                         ? "single-cube-source-normalized"
                         : "single-cube-target-normalized";
  for (int j : levels) {
    DyadicSeq m(spec.d, j);
    m.set_coded(j, 0, single_cell_value(spec, j));
    fam.members.push_back(std::move(m));
  }
  return fam;
}

WitnessFamily build_family_filling(const SpaceSpec& src, int j0,
                                   const std::vector<int>& levels) {
  check_levels(levels, src.d);
  if (j0 < 0 || j0 * src.d > 62)
    throw config_error("filling window level out of range");
  const PhiSpec phi = effective_phi(src);
  const double phi_j0 = eval_phi(phi, std::ldexp(1.0, -j0));
  WitnessFamily fam;
  fam.levels = levels;
  fam.j0 = j0;
  fam.construction = "filling-window";
  for (int j : levels) {
    if (j < j0)
      throw config_error("filling levels must be at least the window level");
    const int depth = (j - j0) * src.d;
    if (depth > 62 || (uint64_t(1) << depth) > 10000000ull)
      throw config_error("filling member would need too many cells");
    const double value =
        std::exp2(-static_cast<double>(j) * src.s) / phi_j0;
    DyadicSeq m(src.d, j);
    for (uint64_t code = 0; code < (uint64_t(1) << depth); ++code)
      m.set_coded(j, code, value);
    fam.members.push_back(std::move(m));
  }
  return fam;
}

WitnessFamily build_family_binf(const SpaceSpec& src,
                                const std::vector<int>& levels) {
  WitnessFamily fam = build_family_single_cube(
      src, levels, WitnessScaling::source_normalized);
  fam.construction = "single-cube-window-normalized";
  return fam;
}

double norm_in_space(const DyadicSeq& seq, const SpaceSpec& spec) {
  validate_space(spec);
  if (seq.d != spec.d)
    throw config_error("sequence dimension does not match the space");
  switch (spec.scale) {
    case Scale::N:
      return n_norm_star(seq, NormParams{spec.s, spec.p, spec.q, *spec.phi});
    case Scale::B:
      return b_norm(seq, NormParams{spec.s, spec.p, spec.q, *spec.phi});
    case Scale::classical_besov:
      if (is_pos_inf(spec.p)) return besov_sup_norm(seq, spec.s, spec.q);
      return n_norm_star(seq,
                         NormParams{spec.s, spec.p, spec.q, effective_phi(spec)});
    case Scale::bmo:
      return b_norm(seq, NormParams{0.0, 2.0, 2.0, make_constant(spec.d)});
    default:
      throw config_error("no sequence evaluator for this scale");
  }
}

std::vector<double> embedding_condition_samples(const SpaceSpec& src,
                                                const SpaceSpec& tgt, int J) {
  const Scale a = src.scale, b = tgt.scale;
  if ((a == Scale::N && b == Scale::N) || (a == Scale::E && b == Scale::E) ||
      (a == Scale::classical_besov && b == Scale::classical_besov)) {
    const PairContext ctx = make_pair_context(effective_phi(src), src.p, src.q,
                                              effective_phi(tgt), tgt.p, tgt.q);
    return xi_seq(ctx, src.s, tgt.s, J);
  }
  if (a == Scale::N && b == Scale::classical_besov) {
    const PhiSpec phi1 = effective_phi(src);
    const double rho = std::min(1.0, src.p / tgt.p);
    std::vector<double> out;
    for (int j = 0; j <= J; ++j) {
      if (phi1.family == PhiFamily::tabulated && j > phi1.tab_levels()) break;
      out.push_back(std::exp2(static_cast<double>(j) * (tgt.s - src.s)) *
                    std::pow(eval_phi(phi1, std::ldexp(1.0, -j)), rho - 1.0));
    }
    return out;
  }
  if ((a == Scale::B || a == Scale::bmo) &&
      (b == Scale::B || b == Scale::bmo || b == Scale::classical_besov)) {
    const PhiSpec phi1 =
        a == Scale::bmo ? make_constant(src.d) : effective_phi(src);
    const PhiSpec phi2 = b == Scale::B ? effective_phi(tgt)
                                       : make_constant(tgt.d);
    const double s1 = a == Scale::bmo ? 0.0 : src.s;
    const double s2 = b == Scale::bmo ? 0.0 : tgt.s;
    std::vector<double> out;
    for (int j = 0; j <= J; ++j) {
      const bool off1 =
          phi1.family == PhiFamily::tabulated && j > phi1.tab_levels();
      const bool off2 =
          phi2.family == PhiFamily::tabulated && j > phi2.tab_levels();
      if (off1 || off2) break;
      const double t = std::ldexp(1.0, -j);
      out.push_back(std::exp2(static_cast<double>(j) * (s2 - s1)) *
                    eval_phi(phi2, t) / eval_phi(phi1, t));
    }
    return out;
  }
  throw config_error("no condition sequence for this scale pair");
}

ProbeReport probe_compactness(const WitnessFamily& fam, const SpaceSpec& src,
                              const SpaceSpec& tgt) {
  if (fam.members.empty())
    throw config_error("cannot probe an empty witness family");
  ProbeReport rep;
  rep.K = static_cast<int>(fam.members.size());
  rep.J = *std::max_element(fam.levels.begin(), fam.levels.end());
  for (const DyadicSeq& m : fam.members) {
    rep.source_norms.push_back(norm_in_space(m, src));
    rep.target_norms.push_back(norm_in_space(m, tgt));
  }
  for (size_t k = 0; k < fam.members.size(); ++k) {
    double nearest = INFINITY;
    for (size_t l = 0; l < fam.members.size(); ++l) {
      if (l == k) continue;
      nearest = std::min(
          nearest,
          norm_in_space(seq_abs_diff(fam.members[k], fam.members[l]), tgt));
    }
    rep.nearest_gaps.push_back(nearest);
  }
  rep.max_source_norm =
      *std::max_element(rep.source_norms.begin(), rep.source_norms.end());
  rep.min_pairwise_target_gap =
      *std::min_element(rep.nearest_gaps.begin(), rep.nearest_gaps.end());
  const std::vector<double> cond =
      embedding_condition_samples(src, tgt, rep.J);
  double peak = 0.0;
  for (size_t j = cond.size() / 2; j < cond.size(); ++j)
    peak = std::max(peak, cond[j]);
  rep.beta_hat = peak;
  rep.notes.push_back("construction: " + fam.construction);
  return rep;
}

WitnessPlan witness_for(const SpaceSpec& src, const SpaceSpec& tgt,
                        const std::vector<int>& levels) {
  WitnessPlan plan;
  Verdict v = decide(src, tgt);

  const bool seq_scales =
      (src.scale == Scale::N || src.scale == Scale::B ||
       src.scale == Scale::classical_besov || src.scale == Scale::bmo) &&
      (tgt.scale == Scale::N || tgt.scale == Scale::B ||
       tgt.scale == Scale::classical_besov || tgt.scale == Scale::bmo);
  if (!seq_scales) {
    plan.note = "no sequence-level construction for this scale pair";
    return plan;
  }

  if (v.compact == Tri::yes) {
    plan.available = true;
    plan.family = build_family_single_cube(src, levels,
                                           WitnessScaling::source_normalized);
    plan.construction = plan.family.construction;
    plan.note = "compact embedding: family demonstrates vanishing gaps";
    return plan;
  }
  if (v.compact != Tri::no) {
    plan.note = "verdict not negative; no certificate attempted";
    return plan;
  }

  if (src.scale == Scale::B && tgt.scale == Scale::classical_besov) {
    plan.available = true;
    plan.family = build_family_binf(src, levels);
    plan.construction = plan.family.construction;
    plan.note = "sup-type target: window-normalized cubes stay separated";
    return plan;
  }

  const PhiSpec phi1 = effective_phi(src);
  const PhiSpec phi2 = effective_phi(tgt);
  if (positive_limit_at_zero(phi2)) {
    plan.available = true;
    plan.family = build_family_single_cube(src, levels,
                                           WitnessScaling::source_normalized);
    plan.construction = plan.family.construction;
    plan.note = "target weight has a positive limit: cubes stay separated";
    return plan;
  }

  const PairContext ctx =
      make_pair_context(phi1, src.p, src.q, phi2, tgt.p, tgt.q);
  const RateTerm rr = ratio_rate(ctx);
  if (rr.trusted && (rr.beta < 0 || (rr.beta == 0 && rr.gamma >= 0))) {
    plan.available = true;
    plan.family = build_family_single_cube(tgt, levels,
                                           WitnessScaling::target_normalized);
    plan.construction = plan.family.construction;
    plan.note = "non-decaying weight ratio: target-normalized cubes";
    return plan;
  }
  if (ctx.rho == 1.0 && rr.trusted) {
    const std::vector<double> r = ratio_samples(ctx, 40);
    const int j0 = static_cast<int>(
        std::max_element(r.begin(), r.end()) - r.begin());
    std::vector<int> filled;
    const int step = src.d == 1 ? 2 : 1;
    for (int k = 1; k <= 6; ++k) filled.push_back(j0 + step * k);
    plan.available = true;
    plan.family = build_family_filling(src, j0, filled);
    plan.construction = plan.family.construction;
    plan.note = "full transfer exponent: filled windows stay separated";
    return plan;
  }
  plan.note =
      "no in-scope extremal construction for a decaying ratio with "
      "transfer exponent below one";
  return plan;
}

namespace {

double inv_or_zero(double x) { return is_pos_inf(x) ? 0.0 : 1.0 / x; }

PhiSpec interpolated_phi(const PhiSpec& a, const PhiSpec& b, double theta,
                         int J) {
  std::vector<double> samples;
  samples.reserve(static_cast<size_t>(J) + 1);
  for (int j = 0; j <= J; ++j) {
    const double t = std::ldexp(1.0, -j);
    samples.push_back(std::pow(eval_phi(a, t), 1.0 - theta) *
                      std::pow(eval_phi(b, t), theta));
  }
  const RateTerm ra = rate_at_zero(a), rb = rate_at_zero(b);
  RateTerm rate{(1.0 - theta) * ra.beta + theta * rb.beta,
                (1.0 - theta) * ra.gamma + theta * rb.gamma,
                ra.trusted && rb.trusted};
  return make_tabulated(a.d, std::move(samples), rate);
}

PhiSpec powered_phi(const PhiSpec& a, double expo, int J) {
  std::vector<double> samples;
  samples.reserve(static_cast<size_t>(J) + 1);
  for (int j = 0; j <= J; ++j)
    samples.push_back(std::pow(eval_phi(a, std::ldexp(1.0, -j)), expo));
  const RateTerm ra = rate_at_zero(a);
  return make_tabulated(a.d, std::move(samples),
                        RateTerm{expo * ra.beta, expo * ra.gamma, ra.trusted});
}

}  // namespace

GnReport gn_check(const DyadicSeq& lambda, const NormParams& prm1,
                  const NormParams& prm2, double theta) {
  if (!(theta > 0.0 && theta < 1.0))
    throw config_error("interpolation parameter must lie in (0,1)");
  const bool sup_variant = is_pos_inf(prm2.p);
  if (sup_variant && !is_pos_inf(prm2.q))
    throw config_error("sup-type second factor needs q = inf");

  NormParams mid;
  mid.s = (1.0 - theta) * prm1.s + theta * prm2.s;
  const double invp =
      (1.0 - theta) * inv_or_zero(prm1.p) + theta * inv_or_zero(prm2.p);
  const double invq =
      (1.0 - theta) * inv_or_zero(prm1.q) + theta * inv_or_zero(prm2.q);
  mid.p = invp > 0 ? 1.0 / invp : INFINITY;
  mid.q = invq > 0 ? 1.0 / invq : INFINITY;
  mid.phi = sup_variant
                ? powered_phi(prm1.phi, 1.0 - theta, lambda.J)
                : interpolated_phi(prm1.phi, prm2.phi, theta, lambda.J);

  const std::vector<WindowValue> wmid = b_norm_windows(lambda, mid);
  const std::vector<WindowValue> w1 = b_norm_windows(lambda, prm1);
  const std::vector<WindowValue> w2 =
      sup_variant ? sup_norm_windows(lambda, prm2.s)
                  : b_norm_windows(lambda, prm2);
  if (wmid.size() != w1.size() || wmid.size() != w2.size())
    throw internal_error("window keysets diverged between factor norms");

  GnReport rep;
  rep.windows_checked = static_cast<int>(wmid.size());
  double g0 = 0, g1 = 0, g2 = 0;
  for (size_t i = 0; i < wmid.size(); ++i) {
    if (wmid[i].nu != w1[i].nu || wmid[i].code != w1[i].code ||
        wmid[i].nu != w2[i].nu || wmid[i].code != w2[i].code)
      throw internal_error("window keysets diverged between factor norms");
    const double bound =
        std::pow(w1[i].value, 1.0 - theta) * std::pow(w2[i].value, theta);
    if (bound > 0)
      rep.max_window_ratio =
          std::max(rep.max_window_ratio, wmid[i].value / bound);
    g0 = std::max(g0, wmid[i].value);
    g1 = std::max(g1, w1[i].value);
    g2 = std::max(g2, w2[i].value);
  }
  rep.interpolated_norm = g0;
  rep.factor1 = g1;
  rep.factor2 = g2;
  rep.bound = std::pow(g1, 1.0 - theta) * std::pow(g2, theta);
  rep.ratio = rep.bound > 0 ? rep.interpolated_norm / rep.bound : 0.0;
  return rep;
}

}  // namespace morrey

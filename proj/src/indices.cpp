#include "morrey/indices.hpp"

#include <algorithm>
#include <cmath>

#include "morrey/errors.hpp"

namespace morrey {

namespace {

double reciprocal(double x) { return is_pos_inf(x) ? 0.0 : 1.0 / x; }

int clamp_levels(const PhiSpec& phi, int J) {
  if (phi.family == PhiFamily::tabulated) return std::min(J, phi.tab_levels());
  return J;
}

}  // namespace

PairContext make_pair_context(const PhiSpec& phi1, double p1, double q1,
                              const PhiSpec& phi2, double p2, double q2) {
  if (!(p1 > 0) || !(p2 > 0))
    throw config_error("integrability exponents must be positive");
  if (!(q1 > 0) || !(q2 > 0))
    throw config_error("fine indices must be positive or inf");
  PairContext ctx;
  ctx.phi1 = phi1;
  ctx.phi2 = phi2;
  ctx.p1 = p1;
  ctx.p2 = p2;
  ctx.q1 = q1;
  ctx.q2 = q2;
  ctx.rho = std::min(1.0, p1 / p2);
  const double gap = reciprocal(q2) - reciprocal(q1);
  ctx.qstar = gap > 0 ? 1.0 / gap : INFINITY;
  return ctx;
}

std::vector<double> ratio_samples(const PairContext& ctx, int J) {
  const int JJ = std::min(clamp_levels(ctx.phi1, J), clamp_levels(ctx.phi2, J));
  std::vector<double> out;
  out.reserve(static_cast<size_t>(JJ) + 1);
  for (int j = 0; j <= JJ; ++j) {
    const double t = std::ldexp(1.0, -j);
    out.push_back(eval_phi(ctx.phi2, t) / std::pow(eval_phi(ctx.phi1, t), ctx.rho));
  }
  return out;
}

std::vector<double> alpha_seq(const PairContext& ctx, int J) {
  std::vector<double> out = ratio_samples(ctx, J);
  for (size_t j = 1; j < out.size(); ++j) out[j] = std::max(out[j], out[j - 1]);
  return out;
}

RateTerm ratio_rate(const PairContext& ctx) {
  return rate_at_zero(ctx.phi2) * rate_pow(rate_at_zero(ctx.phi1), -ctx.rho);
}

RateTerm alpha_rate(const PairContext& ctx) {
  const RateTerm r = ratio_rate(ctx);
  if (r.beta < 0) return r;
  if (r.beta == 0 && r.gamma > 0) return {0.0, r.gamma, r.trusted};
  return {0.0, 0.0, r.trusted};
}

RateTerm xi_rate(const PairContext& ctx, double s1, double s2) {
  const RateTerm smooth{s1 - s2, 0.0, true};
  return smooth * alpha_rate(ctx) * rate_pow(rate_at_zero(ctx.phi1), ctx.rho - 1.0);
}

std::vector<double> xi_seq(const PairContext& ctx, double s1, double s2,
                           int J) {
  const std::vector<double> alpha = alpha_seq(ctx, J);
  std::vector<double> out(alpha.size(), 0.0);
  for (size_t j = 0; j < alpha.size(); ++j) {
    const double t = std::ldexp(1.0, -static_cast<int>(j));
    out[j] = std::exp2(static_cast<double>(j) * (s2 - s1)) * alpha[j] *
             std::pow(eval_phi(ctx.phi1, t), ctx.rho - 1.0);
  }
  return out;
}

double sigma_index(double s1, const PhiSpec& phi1, double rho) {
  return s1 - (1.0 - rho) * rate_at_zero(phi1).beta;
}

double sigma_inf_index(double s1, const PhiSpec& phi1) {
  return s1 - rate_at_zero(phi1).beta;
}

const char* to_string(Dominance d) {
  switch (d) {
    case Dominance::leq:
      return "leq";
    case Dominance::geq:
      return "geq";
    case Dominance::both:
      return "both";
    default:
      return "neither";
  }
}

DominanceReport dominance_check(const PairContext& ctx, int J) {
  const RateTerm r = ratio_rate(ctx);
  DominanceReport rep;
  rep.rate_asserted = r.trusted;

  if (r.beta > 0 || (r.beta == 0 && r.gamma < 0))
    rep.cls = Dominance::leq;
  else if (r.beta < 0 || (r.beta == 0 && r.gamma > 0))
    rep.cls = Dominance::geq;
  else
    rep.cls = Dominance::both;

  const std::vector<double> samples = ratio_samples(ctx, J);
  rep.upper_constant = *std::max_element(samples.begin(), samples.end());
  rep.lower_constant = *std::min_element(samples.begin(), samples.end());

  // Tabulated data can contradict its asserted rate; strong sampled growth
  // strips an upper-dominance claim and strong decay a lower one.
  const bool tab = ctx.phi1.family == PhiFamily::tabulated ||
                   ctx.phi2.family == PhiFamily::tabulated;
  if (tab && samples.size() >= 4) {
    const size_t half = samples.size() / 2;
    const double head_max =
        *std::max_element(samples.begin(), samples.begin() + half);
    const double tail_max =
        *std::max_element(samples.begin() + half, samples.end());
    const double head_min =
        *std::min_element(samples.begin(), samples.begin() + half);
    const double tail_min =
        *std::min_element(samples.begin() + half, samples.end());
    const bool rising =
        tail_max > 4.0 * head_max && samples.back() > samples[half];
    const bool falling =
        tail_min < 0.25 * head_min && samples.back() < samples[half];
    if (rising && allows_leq(rep.cls))
      rep.cls = rep.cls == Dominance::both ? Dominance::geq : Dominance::neither;
    if (falling && allows_geq(rep.cls))
      rep.cls = rep.cls == Dominance::both ? Dominance::leq : Dominance::neither;
  }
  return rep;
}

double sigma_bar_index(double s1, const PairContext& ctx) {
  const DominanceReport rep = dominance_check(ctx, 40);
  if (!allows_geq(rep.cls))
    throw config_error(
        "shifted threshold requires the target weight to dominate from below");
  return sigma_index(s1, ctx.phi1, ctx.rho) + ratio_rate(ctx).beta;
}

SlopeInterval slope_interval(const PhiSpec& phi, int J) {
  const int JJ = clamp_levels(phi, J);
  if (JJ < 8) throw config_error("slope estimation needs at least 8 levels");
  const std::vector<double> s = dyadic_samples(phi, JJ);
  auto slope = [&s](int a, int b) {
    return -(std::log2(s[static_cast<size_t>(b)]) -
             std::log2(s[static_cast<size_t>(a)])) /
           static_cast<double>(b - a);
  };
  const int half = JJ / 2, three4 = (3 * JJ) / 4;
  SlopeInterval out;
  out.beta_hat = slope(half, JJ);
  out.margin = std::abs(slope(half, three4) - slope(three4, JJ)) + 2.0 / JJ;
  out.lo = out.beta_hat - out.margin;
  out.hi = out.beta_hat + out.margin;
  return out;
}

SlopeInterval sigma_numeric(double s1, const PhiSpec& phi1, double rho,
                            int J) {
  const SlopeInterval b = slope_interval(phi1, J);
  const double t = 1.0 - rho;
  SlopeInterval out;
  out.beta_hat = s1 - t * b.beta_hat;
  out.margin = t * b.margin;
  out.lo = out.beta_hat - out.margin;
  out.hi = out.beta_hat + out.margin;
  return out;
}

SlopeInterval sigma_inf_numeric(double s1, const PhiSpec& phi1, int J) {
  return sigma_numeric(s1, phi1, 0.0, J);
}

}  // namespace morrey

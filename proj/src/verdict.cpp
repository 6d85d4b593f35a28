#include "morrey/verdict.hpp"

#include <algorithm>
#include <cmath>

#include "morrey/errors.hpp"

namespace morrey {

namespace {

double reciprocal(double x) { return is_pos_inf(x) ? 0.0 : 1.0 / x; }

// Tabulated weights carry an asserted rate. When the sampled tail slope
// visibly contradicts it, the rate is demoted to untrusted so downstream
// tail decisions degrade to unknown instead of silently using bad data.
PhiSpec audit_tabulated(const PhiSpec& phi, std::vector<std::string>& notes) {
  if (phi.family != PhiFamily::tabulated || !phi.tab_rate.trusted) return phi;
  if (phi.tab_levels() < 8) return phi;
  const SlopeInterval si = slope_interval(phi, phi.tab_levels());
  if (phi.tab_rate.beta >= si.lo && phi.tab_rate.beta <= si.hi) return phi;
  PhiSpec demoted = phi;
  demoted.tab_rate.trusted = false;
  notes.push_back("asserted decay rate lies outside the sampled slope interval");
  return demoted;
}

void fill_pair_trace(Trace& tr, const PairContext& ctx, double s1, double s2) {
  tr.rho = ctx.rho;
  tr.qstar = ctx.qstar;
  tr.ratio_rate = ratio_rate(ctx);
  tr.alpha_rate = alpha_rate(ctx);
  tr.xi_rate = xi_rate(ctx, s1, s2);
  tr.sigma = sigma_index(s1, ctx.phi1, ctx.rho);
  tr.sigma_inf = sigma_inf_index(s1, ctx.phi1);
  const DominanceReport dom = dominance_check(ctx, 40);
  tr.dominance = to_string(dom.cls);
  if (allows_geq(dom.cls)) tr.sigma_bar = sigma_bar_index(s1, ctx);
}

void require_same_dimension(const SpaceSpec& a, const SpaceSpec& b) {
  if (a.d != b.d)
    throw config_error("source and target dimensions must match");
}

}  // namespace

Verdict decide_n(const SpaceSpec& src, const SpaceSpec& tgt) {
  require_same_dimension(src, tgt);
  validate_space(src);
  validate_space(tgt);
  Verdict v;
  const PhiSpec phi1 = audit_tabulated(effective_phi(src), v.trace.notes);
  const PhiSpec phi2 = audit_tabulated(effective_phi(tgt), v.trace.notes);
  const PairContext ctx =
      make_pair_context(phi1, src.p, src.q, phi2, tgt.p, tgt.q);
  fill_pair_trace(v.trace, ctx, src.s, tgt.s);
  const RateTerm xi = xi_rate(ctx, src.s, tgt.s);

  v.continuous = ellq_membership(xi, ctx.qstar);
  if (v.continuous == Tri::yes)
    v.rules.push_back("n.continuity.weighted-ratio-in-ellqstar");
  else if (v.continuous == Tri::no)
    v.rules.push_back("n.continuity.weighted-ratio-not-in-ellqstar");
  else
    v.rules.push_back("n.continuity.unknown-rate");

  if (src.q > tgt.q) {
    v.compact = v.continuous;
    if (v.compact == Tri::yes)
      v.rules.push_back("n.compactness.follows-continuity-qdrop");
    else if (v.compact == Tri::no)
      v.rules.push_back("n.compactness.weighted-ratio-not-vanishing");
  } else {
    v.compact = c0_membership(xi);
    if (v.compact == Tri::yes)
      v.rules.push_back("n.compactness.weighted-ratio-vanishes");
    else if (v.compact == Tri::no)
      v.rules.push_back("n.compactness.weighted-ratio-not-vanishing");
  }
  if (v.compact == Tri::yes && src.s == tgt.s)
    throw internal_error("equal smoothness cannot yield a compact embedding");
  return v;
}

Verdict decide_n_classical(double s1, double u1, double p1, double q1,
                           double s2, double u2, double p2, double q2,
                           int d) {
  if (!(p1 > 0) || !(p2 > 0) || !(q1 > 0) || !(q2 > 0))
    throw config_error("exponents must be positive");
  if (is_pos_inf(u1) || is_pos_inf(u2) || !(p1 <= u1) || !(p2 <= u2))
    throw config_error("classical form needs finite u with p <= u");
  const double rho = std::min(1.0, p1 / p2);
  const double threshold = (u1 / u2 >= rho)
                               ? std::max(0.0, 1.0 - rho) / u1
                               : 1.0 / u1 - 1.0 / u2;
  const double gap = (s1 - s2) / static_cast<double>(d);
  Verdict v;
  v.trace.rho = rho;
  const double qgap = reciprocal(q2) - reciprocal(q1);
  v.trace.qstar = qgap > 0 ? 1.0 / qgap : INFINITY;
  const bool strict = gap > threshold;
  const bool boundary = gap == threshold && q1 <= q2;
  v.continuous = to_tri(strict || boundary);
  v.compact = to_tri(strict);
  v.rules.push_back("n.classical.smoothness-threshold");
  return v;
}

Verdict decide_b(const SpaceSpec& src, const SpaceSpec& tgt) {
  require_same_dimension(src, tgt);
  validate_space(src);
  validate_space(tgt);
  Verdict v;
  const PhiSpec phi1 = audit_tabulated(effective_phi(src), v.trace.notes);
  const PhiSpec phi2 = audit_tabulated(effective_phi(tgt), v.trace.notes);
  const double s1 = src.s, s2 = tgt.s;
  const PairContext ctx =
      make_pair_context(phi1, src.p, src.q, phi2, tgt.p, tgt.q);
  fill_pair_trace(v.trace, ctx, s1, s2);

  const RateTerm r1 = rate_at_zero(phi1);
  const RateTerm r2 = rate_at_zero(phi2);
  // Single-cube condition: 2^(j(s2-s1)) phi2 / phi1 must stay bounded.
  const RateTerm cond =
      RateTerm{s1 - s2, 0.0, true} * r2 * rate_pow(r1, -1.0);
  const Tri cond_bounded = ellq_membership(cond, INFINITY);
  const DominanceReport dom = dominance_check(ctx, 40);
  const double sigma = sigma_index(s1, phi1, ctx.rho);

  if (src.p >= tgt.p) {
    Tri gate = Tri::no;
    if (s1 > s2)
      gate = Tri::yes;
    else if (s1 == s2)
      gate = to_tri(src.q <= tgt.q);
    v.continuous = tri_and(cond_bounded, gate);
    if (v.continuous == Tri::yes)
      v.rules.push_back("b.continuity.ratio-bounded-and-smoothness-gap");
    else if (cond_bounded == Tri::no)
      v.rules.push_back("b.continuity.ratio-unbounded");
    else if (gate == Tri::no)
      v.rules.push_back("b.continuity.requires-smoothness-drop");
    else
      v.rules.push_back("b.continuity.gap-between-sufficient-and-necessary");
  } else {
    // Larger target integrability: boundedness of the single-cube condition
    // and of the source-decay condition are necessary; the window-scaled
    // criterion below is sufficient but not matching.
    const RateTerm decay =
        RateTerm{s1 - s2, 0.0, true} * rate_pow(r1, ctx.rho - 1.0);
    const Tri decay_bounded = ellq_membership(decay, INFINITY);
    if (cond_bounded == Tri::no) {
      v.continuous = Tri::no;
      v.rules.push_back("b.continuity.ratio-unbounded");
    } else if (decay_bounded == Tri::no) {
      v.continuous = Tri::no;
      v.rules.push_back("b.continuity.source-decay-unbounded");
    } else {
      const bool q_scaled =
          is_pos_inf(tgt.q) || (!is_pos_inf(src.q) && src.q <= ctx.rho * tgt.q);
      const bool source_log_ok = r1.gamma >= 0;
      bool sufficient = false;
      if (q_scaled && source_log_ok && r1.trusted && r2.trusted) {
        if (allows_leq(dom.cls) && s2 <= sigma) sufficient = true;
        if (allows_geq(dom.cls) && r2.gamma - ctx.rho * r1.gamma <= 0 &&
            s2 <= sigma_bar_index(s1, ctx))
          sufficient = true;
      }
      if (sufficient) {
        v.continuous = Tri::yes;
        v.rules.push_back("b.continuity.sufficient-window-qscaled");
      } else {
        v.continuous = Tri::unknown;
        v.rules.push_back("b.continuity.gap-between-sufficient-and-necessary");
      }
    }
  }

  if (s1 == s2) {
    v.compact = Tri::no;
    v.rules.push_back("b.compactness.requires-smoothness-drop");
  } else if (v.continuous == Tri::no) {
    v.compact = Tri::no;
  } else if (r1.trusted && r2.trusted && allows_leq(dom.cls) && s2 < sigma) {
    v.compact = Tri::yes;
    v.rules.push_back("b.compactness.below-sigma");
  } else if (r1.trusted && r2.trusted && allows_geq(dom.cls) &&
             s2 < sigma_bar_index(s1, ctx)) {
    v.compact = Tri::yes;
    v.rules.push_back("b.compactness.below-sigma-bar");
  } else {
    v.compact = Tri::unknown;
    v.rules.push_back("b.compactness.boundary-unknown");
  }

  if (v.compact == Tri::yes && v.continuous != Tri::yes) {
    v.continuous = Tri::yes;
    v.trace.notes.push_back("continuity implied by compactness");
  }
  return v;
}

Verdict decide_b_sup_target(const SpaceSpec& src, double s2) {
  validate_space(src);
  if (src.scale != Scale::B)
    throw config_error("sup-type target rule needs a uniform-window source");
  if (!std::isfinite(s2)) throw config_error("target smoothness must be finite");
  Verdict v;
  const PhiSpec phi1 = audit_tabulated(effective_phi(src), v.trace.notes);
  const RateTerm r1 = rate_at_zero(phi1);
  const RateTerm cond = RateTerm{src.s - s2, 0.0, true} * rate_pow(r1, -1.0);
  v.trace.rho = 1.0;
  v.trace.ratio_rate = cond;
  v.trace.sigma_inf = sigma_inf_index(src.s, phi1);
  if (r1.gamma >= 0)
    v.trace.notes.push_back("source weight has non-negative log exponent");

  v.continuous = ellq_membership(cond, INFINITY);
  v.rules.push_back(v.continuous == Tri::yes
                        ? "b-sup.continuity.condition-bounded"
                        : v.continuous == Tri::no
                              ? "b-sup.continuity.condition-unbounded"
                              : "b.continuity.gap-between-sufficient-and-necessary");
  v.compact = c0_membership(cond);
  if (v.compact == Tri::yes)
    v.rules.push_back("b-sup.compactness.condition-vanishes");
  else if (v.compact == Tri::no)
    v.rules.push_back("b-sup.compactness.condition-not-vanishing");
  return v;
}

Verdict decide_e(const SpaceSpec& src, const SpaceSpec& tgt) {
  require_same_dimension(src, tgt);
  validate_space(src);
  validate_space(tgt);
  Verdict v;
  const PhiSpec phi1 = audit_tabulated(effective_phi(src), v.trace.notes);
  const PhiSpec phi2 = audit_tabulated(effective_phi(tgt), v.trace.notes);
  const PairContext ctx =
      make_pair_context(phi1, src.p, src.q, phi2, tgt.p, tgt.q);
  fill_pair_trace(v.trace, ctx, src.s, tgt.s);
  const RateTerm xi = xi_rate(ctx, src.s, tgt.s);
  const double m = is_pos_inf(tgt.q) ? tgt.p : std::min(tgt.p, tgt.q);

  if (ellq_membership(xi, m) == Tri::yes) {
    v.continuous = Tri::yes;
    v.compact = Tri::yes;
    v.rules.push_back("e.compactness.min-exponent-sum");
  } else if (ellq_membership(xi, INFINITY) == Tri::no) {
    v.continuous = Tri::no;
    v.compact = Tri::no;
    v.rules.push_back("e.continuity.condition-unbounded");
  } else {
    v.rules.push_back("e.gap-unknown");
  }
  return v;
}

Verdict decide_morrey(const PhiSpec& phi1, double p1, const PhiSpec& phi2,
                      double p2) {
  if (!(p1 > 0) || is_pos_inf(p1) || !(p2 > 0) || is_pos_inf(p2))
    throw config_error("plain Morrey scale needs finite positive p");
  for (const auto& [phi, p] : {std::pair{&phi1, p1}, {&phi2, p2}}) {
    const GpReport rep = validate_gp(*phi, p, 24);
    if (!rep.monotone_ok || !rep.gp_ok)
      throw config_error("weight fails the admissibility conditions");
  }
  Verdict v;
  const RateTerm r1 = rate_at_zero(phi1);
  const RateTerm r2 = rate_at_zero(phi2);
  const RateTerm quot = r2 * rate_pow(r1, -1.0);

  if (positive_limit_at_zero(phi1)) {
    v.continuous = Tri::yes;
    v.rules.push_back("m.linfty-source");
  } else if (p2 <= p1 && r1.trusted && r2.trusted &&
             (quot.beta > 0 || (quot.beta == 0 && quot.gamma <= 0))) {
    v.continuous = Tri::yes;
    v.rules.push_back("m.continuity.weight-domination");
  } else if (!r1.trusted || !r2.trusted) {
    v.continuous = Tri::unknown;
    v.rules.push_back("m.continuity.unknown-small-p");
  } else if (p1 > 1 && p2 > 1) {
    v.continuous = Tri::no;
    v.rules.push_back("m.continuity.weight-domination-fails");
  } else {
    v.continuous = Tri::unknown;
    v.rules.push_back("m.continuity.unknown-small-p");
  }
  v.compact = Tri::no;
  v.rules.push_back("m.never-compact");
  return v;
}

namespace {

Verdict decide_n_to_classical(const SpaceSpec& src, const SpaceSpec& tgt) {
  validate_space(src);
  validate_space(tgt);
  Verdict v;
  const PhiSpec phi1 = audit_tabulated(effective_phi(src), v.trace.notes);
  const double rho = std::min(1.0, src.p / tgt.p);
  const double qgap = reciprocal(tgt.q) - reciprocal(src.q);
  const double qstar = qgap > 0 ? 1.0 / qgap : INFINITY;
  const RateTerm cond = RateTerm{src.s - tgt.s, 0.0, true} *
                        rate_pow(rate_at_zero(phi1), rho - 1.0);
  v.trace.rho = rho;
  v.trace.qstar = qstar;
  v.trace.ratio_rate = cond;
  v.continuous = ellq_membership(cond, qstar);
  v.rules.push_back("n-to-classical.ratio-ellqstar");
  if (src.q <= tgt.q)
    v.compact = c0_membership(cond);
  else
    v.compact = v.continuous;
  return v;
}

Verdict decide_classical_to_n(const SpaceSpec& src, const SpaceSpec& tgt) {
  validate_space(src);
  validate_space(tgt);
  Verdict v;
  const double edge = src.s - (is_pos_inf(src.p)
                                   ? 0.0
                                   : static_cast<double>(src.d) / src.p);
  if (edge > tgt.s || (edge == tgt.s && src.q <= tgt.q)) {
    v.continuous = Tri::yes;
    v.compact = to_tri(edge > tgt.s);
    v.rules.push_back("classical-to-n.smoothness-sufficient");
    if (v.compact == Tri::no) v.compact = Tri::unknown;
  } else {
    v.continuous = Tri::unknown;
    v.compact = Tri::unknown;
    v.rules.push_back("classical-to-n.unknown");
  }
  return v;
}

Verdict decide_n_to_lr(const SpaceSpec& src, const SpaceSpec& tgt) {
  validate_space(src);
  validate_space(tgt);
  const double r = tgt.r;
  Verdict v;
  const PhiSpec phi1 = audit_tabulated(effective_phi(src), v.trace.notes);
  const RateTerm r1 = rate_at_zero(phi1);
  const double rho = std::min(1.0, src.p / r);
  v.trace.rho = rho;

  // Zero-smoothness limiting case has its own sharp criterion.
  if (src.s == 0.0 && r == std::max(1.0, src.p)) {
    if (src.q <= std::min(r, 2.0)) {
      v.continuous = Tri::yes;
      v.compact = Tri::unknown;
    } else if (src.p > 1 && src.q > std::max(r, 2.0)) {
      v.continuous = Tri::no;
      v.compact = Tri::no;
    } else {
      v.continuous = Tri::unknown;
      v.compact = Tri::unknown;
    }
    v.rules.push_back("n-to-lr.zero-smoothness-limiting");
    return v;
  }

  double lower = std::min(r, 2.0);
  const bool sharpened = src.p > 1 && src.p >= r && r1.trusted && r1.beta > 0;
  if (sharpened) lower = std::min(src.p, 2.0);
  const double inv_t1 = std::max(0.0, 1.0 / lower - reciprocal(src.q));
  const double t1 = inv_t1 > 0 ? 1.0 / inv_t1 : INFINITY;
  const double inv_t2 =
      r == 1.0 ? 0.0 : std::max(0.0, 1.0 / std::max(r, 2.0) - reciprocal(src.q));
  const double t2 = inv_t2 > 0 ? 1.0 / inv_t2 : INFINITY;

  const RateTerm cond =
      RateTerm{src.s, 0.0, true} * rate_pow(r1, rho - 1.0);
  v.trace.ratio_rate = cond;
  if (ellq_membership(cond, t1) == Tri::yes) {
    v.continuous = Tri::yes;
    v.compact = Tri::unknown;
    v.rules.push_back("n-to-lr.sufficient-window");
  } else if (ellq_membership(cond, t2) == Tri::no) {
    v.continuous = Tri::no;
    v.compact = Tri::no;
    v.rules.push_back("n-to-lr.necessary-window-fails");
  } else {
    v.continuous = Tri::unknown;
    v.compact = Tri::unknown;
    v.rules.push_back("n-to-lr.gap-unknown");
  }
  return v;
}

SpaceSpec bmo_as_b(int d) {
  SpaceSpec b;
  b.scale = Scale::B;
  b.d = d;
  b.s = 0;
  b.p = 2;
  b.q = 2;
  b.phi = make_constant(d);
  return b;
}

}  // namespace

Verdict decide_special(const SpaceSpec& src, const SpaceSpec& tgt) {
  require_same_dimension(src, tgt);
  if (src.scale == Scale::N && tgt.scale == Scale::classical_besov)
    return decide_n_to_classical(src, tgt);
  if (src.scale == Scale::classical_besov && tgt.scale == Scale::N)
    return decide_classical_to_n(src, tgt);
  if (src.scale == Scale::N && tgt.scale == Scale::Lr)
    return decide_n_to_lr(src, tgt);
  if (src.scale == Scale::B && tgt.scale == Scale::classical_besov) {
    if (!is_pos_inf(tgt.p) || !is_pos_inf(tgt.q))
      throw config_error(
          "uniform-window sources are only decided against sup-type targets");
    Verdict v = decide_b_sup_target(src, tgt.s);
    return v;
  }
  if (src.scale == Scale::B && tgt.scale == Scale::bmo) {
    Verdict v = decide_b(src, bmo_as_b(src.d));
    v.rules.push_back("bmo.route-constant-weight");
    v.rules.push_back("bmo.smoothness-threshold");
    return v;
  }
  if (src.scale == Scale::bmo && tgt.scale == Scale::B) {
    Verdict v = decide_b(bmo_as_b(tgt.d), tgt);
    v.rules.push_back("bmo.route-constant-weight");
    v.rules.push_back("bmo.smoothness-threshold");
    return v;
  }
  if (src.scale == Scale::classical_besov &&
      tgt.scale == Scale::classical_besov) {
    if (is_pos_inf(src.p) || is_pos_inf(tgt.p))
      throw config_error("classical pair decisions need finite p");
    validate_space(src);
    validate_space(tgt);
    return decide_n_classical(src.s, src.p, src.p, src.q, tgt.s, tgt.p, tgt.p,
                              tgt.q, src.d);
  }
  throw config_error("unsupported scale pair");
}

Verdict decide(const SpaceSpec& src, const SpaceSpec& tgt) {
  require_same_dimension(src, tgt);
  if (src.scale == tgt.scale) {
    switch (src.scale) {
      case Scale::N:
        return decide_n(src, tgt);
      case Scale::B:
        return decide_b(src, tgt);
      case Scale::E:
        return decide_e(src, tgt);
      case Scale::M: {
        validate_space(src);
        validate_space(tgt);
        return decide_morrey(effective_phi(src), src.p, effective_phi(tgt),
                             tgt.p);
      }
      case Scale::classical_besov:
        return decide_special(src, tgt);
      default:
        throw config_error("unsupported scale pair");
    }
  }
  return decide_special(src, tgt);
}

}  // namespace morrey

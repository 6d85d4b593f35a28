#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "morrey/verdict.hpp"

using namespace morrey;

namespace {

SpaceSpec space(Scale sc, int d, double s, double p, double q,
                std::optional<PhiSpec> phi = std::nullopt) {
  SpaceSpec sp;
  sp.scale = sc;
  sp.d = d;
  sp.s = s;
  sp.p = p;
  sp.q = q;
  sp.phi = std::move(phi);
  return sp;
}

bool has_rule(const Verdict& v, const std::string& rule) {
  return std::find(v.rules.begin(), v.rules.end(), rule) != v.rules.end();
}

}  // namespace

TEST_CASE("same space embeds continuously but never compactly") {
  const SpaceSpec sp = space(Scale::N, 1, 1.0, 2, 2, make_power(1, 2));
  const Verdict v = decide(sp, sp);
  CHECK(v.continuous == Tri::yes);
  CHECK(v.compact == Tri::no);
  CHECK(has_rule(v, "n.continuity.weighted-ratio-in-ellqstar"));
  CHECK(has_rule(v, "n.compactness.weighted-ratio-not-vanishing"));
  CHECK(v.trace.rho == 1.0);
  CHECK(std::isinf(v.trace.qstar));
  CHECK(v.trace.sigma.has_value());
  CHECK(v.trace.sigma_inf.has_value());
}

TEST_CASE("smoothness drop gives compactness, fine-index drop does not") {
  const SpaceSpec hi = space(Scale::N, 1, 1.0, 2, 2, make_power(1, 2));
  const SpaceSpec lo = space(Scale::N, 1, 0.25, 2, 2, make_power(1, 2));
  Verdict v = decide(hi, lo);
  CHECK(v.continuous == Tri::yes);
  CHECK(v.compact == Tri::yes);
  CHECK(has_rule(v, "n.compactness.weighted-ratio-vanishes"));

  // A smoothness gap plus a q-drop: compactness rides on continuity.
  const SpaceSpec lo_q1 = space(Scale::N, 1, 0.25, 2, 1, make_power(1, 2));
  v = decide(hi, lo_q1);
  CHECK(v.continuous == Tri::yes);
  CHECK(v.compact == Tri::yes);
  CHECK(has_rule(v, "n.compactness.follows-continuity-qdrop"));

  // Lowering only q: the dual fine index becomes finite and the constant
  // condition sequence falls out of it.
  const SpaceSpec q1 = space(Scale::N, 1, 1.0, 2, 1, make_power(1, 2));
  const SpaceSpec q2 = space(Scale::N, 1, 1.0, 2, 2, make_power(1, 2));
  v = decide(q2, q1);
  CHECK(v.continuous == Tri::no);
  CHECK(v.compact == Tri::no);
  CHECK(has_rule(v, "n.compactness.weighted-ratio-not-vanishing"));
  CHECK(v.trace.qstar == 2.0);
}

TEST_CASE("weight growth can absorb a smoothness gap") {
  // Ratio phi2/phi1 grows like 2^(j/4), cancelling the 1/4 smoothness drop:
  // bounded but not vanishing.
  const SpaceSpec src = space(Scale::N, 1, 1.0, 2, 1, make_power(1, 2));
  const SpaceSpec tgt = space(Scale::N, 1, 0.75, 2, 2, make_power(1, 4));
  const Verdict v = decide(src, tgt);
  CHECK(v.continuous == Tri::yes);
  CHECK(v.compact == Tri::no);
  CHECK(v.trace.xi_rate.has_value());
  CHECK(v.trace.xi_rate->beta == 0.0);
}

TEST_CASE("closed-form power rule frozen cases") {
  // Strict gap above the threshold: compact.
  Verdict v = decide_n_classical(1.0, 2, 2, 1, 0.5, 2, 2, 2, 1);
  CHECK(v.continuous == Tri::yes);
  CHECK(v.compact == Tri::yes);
  CHECK(has_rule(v, "n.classical.smoothness-threshold"));

  // Boundary with non-increasing fine index: continuous only.
  v = decide_n_classical(1.0, 2, 2, 1, 1.0, 2, 2, 2, 1);
  CHECK(v.continuous == Tri::yes);
  CHECK(v.compact == Tri::no);
  v = decide_n_classical(1.0, 2, 2, 2, 1.0, 2, 2, 1, 1);
  CHECK(v.continuous == Tri::no);

  // Integrability transfer shifts the threshold to (1 - rho)/u1.
  v = decide_n_classical(0.3, 2, 1, 1, 0.0, 2, 2, 2, 1);
  CHECK(v.continuous == Tri::yes);
  CHECK(v.compact == Tri::yes);
  v = decide_n_classical(0.25, 2, 1, 1, 0.0, 2, 2, 2, 1);
  CHECK(v.continuous == Tri::yes);
  CHECK(v.compact == Tri::no);
  v = decide_n_classical(0.2, 2, 1, 1, 0.0, 2, 2, 2, 1);
  CHECK(v.continuous == Tri::no);
  CHECK(v.compact == Tri::no);
}

TEST_CASE("uniform-window scale with a common integrability exponent") {
  const PhiSpec phi = make_power(1, 2);
  Verdict v = decide(space(Scale::B, 1, 1.0, 2, 2, phi),
                     space(Scale::B, 1, 0.5, 2, 2, phi));
  CHECK(v.continuous == Tri::yes);
  CHECK(v.compact == Tri::yes);
  CHECK(has_rule(v, "b.continuity.ratio-bounded-and-smoothness-gap"));
  CHECK(has_rule(v, "b.compactness.below-sigma"));

  v = decide(space(Scale::B, 1, 1.0, 2, 2, phi),
             space(Scale::B, 1, 1.0, 2, 2, phi));
  CHECK(v.continuous == Tri::yes);
  CHECK(v.compact == Tri::no);
  CHECK(has_rule(v, "b.compactness.requires-smoothness-drop"));

  v = decide(space(Scale::B, 1, 1.0, 2, 1, phi),
             space(Scale::B, 1, 1.0, 2, 0.5, phi));
  CHECK(v.continuous == Tri::no);
  CHECK(has_rule(v, "b.continuity.requires-smoothness-drop"));

  v = decide(space(Scale::B, 1, 1.0, 2, 2, phi),
             space(Scale::B, 1, 1.2, 2, 2, phi));
  CHECK(v.continuous == Tri::no);
  CHECK(v.compact == Tri::no);
  CHECK(has_rule(v, "b.continuity.ratio-unbounded"));
}

TEST_CASE("uniform-window scale across integrability exponents") {
  // Source decay strong enough for the scaled fine-index condition.
  const Verdict v = decide(space(Scale::B, 1, 1.5, 1, 1, make_power(1, 1)),
                           space(Scale::B, 1, 0.0, 2, 2, make_constant(1)));
  CHECK(v.continuous == Tri::yes);
  CHECK(v.compact == Tri::yes);
  CHECK(has_rule(v, "b.continuity.sufficient-window-qscaled"));
  CHECK(has_rule(v, "b.compactness.below-sigma-bar"));

  // Same geometry at the critical target smoothness but with fine indices
  // outside the scaled window: neither side decides.
  const Verdict u = decide(space(Scale::B, 1, 1.5, 1, 4, make_power(1, 1)),
                           space(Scale::B, 1, 1.0, 2, 2, make_power(1, 2)));
  CHECK(u.continuous == Tri::unknown);
  CHECK(u.compact == Tri::unknown);
  CHECK(has_rule(u, "b.continuity.gap-between-sufficient-and-necessary"));
  CHECK(has_rule(u, "b.compactness.boundary-unknown"));
}

TEST_CASE("sup-type classical target") {
  const SpaceSpec src = space(Scale::B, 1, 1.0, 2, 2, make_power(1, 2));
  Verdict v = decide(src, space(Scale::classical_besov, 1, 0.5, INFINITY,
                                INFINITY));
  CHECK(v.continuous == Tri::yes);
  CHECK(v.compact == Tri::no);
  CHECK(has_rule(v, "b-sup.continuity.condition-bounded"));
  CHECK(has_rule(v, "b-sup.compactness.condition-not-vanishing"));

  v = decide(src, space(Scale::classical_besov, 1, 0.25, INFINITY, INFINITY));
  CHECK(v.compact == Tri::yes);
  CHECK(has_rule(v, "b-sup.compactness.condition-vanishes"));

  v = decide(src, space(Scale::classical_besov, 1, 0.75, INFINITY, INFINITY));
  CHECK(v.continuous == Tri::no);
  CHECK(has_rule(v, "b-sup.continuity.condition-unbounded"));

  CHECK_THROWS_AS(
      decide(src, space(Scale::classical_besov, 1, 0.5, INFINITY, 2.0)),
      config_error);
}

TEST_CASE("integrability-mixing scale") {
  const PhiSpec phi = make_power(1, 2);
  Verdict v = decide(space(Scale::E, 1, 1.0, 2, 2, phi),
                     space(Scale::E, 1, 0.0, 2, 2, phi));
  CHECK(v.continuous == Tri::yes);
  CHECK(v.compact == Tri::yes);
  CHECK(has_rule(v, "e.compactness.min-exponent-sum"));

  v = decide(space(Scale::E, 1, 0.0, 2, 2, phi),
             space(Scale::E, 1, 1.0, 2, 2, phi));
  CHECK(v.continuous == Tri::no);
  CHECK(v.compact == Tri::no);
  CHECK(has_rule(v, "e.continuity.condition-unbounded"));

  v = decide(space(Scale::E, 1, 1.0, 2, 2, phi),
             space(Scale::E, 1, 1.0, 2, 2, phi));
  CHECK(v.continuous == Tri::unknown);
  CHECK(v.compact == Tri::unknown);
  CHECK(has_rule(v, "e.gap-unknown"));
}

TEST_CASE("plain Morrey scale") {
  const Verdict ident =
      decide_morrey(make_power(1, 2), 2, make_power(1, 2), 2);
  CHECK(ident.continuous == Tri::yes);
  CHECK(ident.compact == Tri::no);
  CHECK(has_rule(ident, "m.continuity.weight-domination"));
  CHECK(has_rule(ident, "m.never-compact"));

  const Verdict bounded =
      decide_morrey(make_constant(1), 2, make_power(1, 2), 2);
  CHECK(bounded.continuous == Tri::yes);
  CHECK(has_rule(bounded, "m.linfty-source"));

  const Verdict fails =
      decide_morrey(make_power(1, 2), 2, make_constant(1), 1.5);
  CHECK(fails.continuous == Tri::no);
  CHECK(has_rule(fails, "m.continuity.weight-domination-fails"));

  const Verdict small =
      decide_morrey(make_power(1, 2), 1, make_constant(1), 1);
  CHECK(small.continuous == Tri::unknown);
  CHECK(has_rule(small, "m.continuity.unknown-small-p"));

  // Inadmissible weight/exponent combination is a config error.
  CHECK_THROWS_AS(decide_morrey(make_power(1, 2), 4, make_power(1, 2), 4),
                  config_error);
  CHECK_THROWS_AS(decide_morrey(make_power(1, 2), INFINITY, make_power(1, 2),
                                2),
                  config_error);
}

TEST_CASE("weighted-to-classical corridor") {
  Verdict v = decide(space(Scale::N, 1, 1.0, 2, 2, make_power(1, 2)),
                     space(Scale::classical_besov, 1, 0.25, 2, 2));
  CHECK(v.continuous == Tri::yes);
  CHECK(v.compact == Tri::yes);
  CHECK(has_rule(v, "n-to-classical.ratio-ellqstar"));

  v = decide(space(Scale::classical_besov, 1, 1.5, 2, 2),
             space(Scale::N, 1, 0.0, 2, 2, make_power(1, 2)));
  CHECK(v.continuous == Tri::yes);
  CHECK(v.compact == Tri::yes);
  CHECK(has_rule(v, "classical-to-n.smoothness-sufficient"));

  // At the exact edge compactness degrades to unknown.
  v = decide(space(Scale::classical_besov, 1, 0.5, 2, 2),
             space(Scale::N, 1, 0.0, 2, 2, make_power(1, 2)));
  CHECK(v.continuous == Tri::yes);
  CHECK(v.compact == Tri::unknown);

  v = decide(space(Scale::classical_besov, 1, 0.4, 2, 2),
             space(Scale::N, 1, 0.0, 2, 2, make_power(1, 2)));
  CHECK(v.continuous == Tri::unknown);
  CHECK(has_rule(v, "classical-to-n.unknown"));

  // Classical pair on both sides routes through the power rule.
  v = decide(space(Scale::classical_besov, 1, 1.0, 2, 2),
             space(Scale::classical_besov, 1, 0.0, 2, 2));
  CHECK(v.continuous == Tri::yes);
  CHECK(v.compact == Tri::yes);
  CHECK(has_rule(v, "n.classical.smoothness-threshold"));
}

TEST_CASE("Lebesgue targets") {
  SpaceSpec lr = space(Scale::Lr, 1, 0, 1, 1);
  lr.r = 2.0;

  Verdict v =
      decide(space(Scale::N, 1, 0.0, 2, 1, make_power(1, 2)), lr);
  CHECK(v.continuous == Tri::yes);
  CHECK(v.compact == Tri::unknown);
  CHECK(has_rule(v, "n-to-lr.zero-smoothness-limiting"));

  v = decide(space(Scale::N, 1, 0.0, 2, 4, make_power(1, 2)), lr);
  CHECK(v.continuous == Tri::no);
  CHECK(v.compact == Tri::no);
  CHECK(has_rule(v, "n-to-lr.zero-smoothness-limiting"));

  v = decide(space(Scale::N, 1, 0.5, 2, 2, make_power(1, 2)), lr);
  CHECK(v.continuous == Tri::yes);
  CHECK(has_rule(v, "n-to-lr.sufficient-window"));

  v = decide(space(Scale::N, 1, -0.5, 2, 2, make_power(1, 2)), lr);
  CHECK(v.continuous == Tri::no);
  CHECK(v.compact == Tri::no);
  CHECK(has_rule(v, "n-to-lr.necessary-window-fails"));

  // Low-confidence tabulated rate: neither window decides.
  std::vector<double> samples;
  for (int j = 0; j <= 24; ++j) samples.push_back(std::exp2(-0.5 * j));
  const PhiSpec low = make_tabulated(1, samples, {0.5, 0.0, false});
  v = decide(space(Scale::N, 1, 0.5, 2, 2, low), lr);
  CHECK(v.continuous == Tri::unknown);
  CHECK(has_rule(v, "n-to-lr.gap-unknown"));
}

TEST_CASE("mean-oscillation routes through the constant-weight point") {
  const Verdict v = decide(space(Scale::B, 1, 1.5, 1, 1, make_power(1, 1)),
                           space(Scale::bmo, 1, 0, 1, 1));
  CHECK(v.continuous == Tri::yes);
  CHECK(v.compact == Tri::yes);
  CHECK(has_rule(v, "bmo.route-constant-weight"));
  CHECK(has_rule(v, "bmo.smoothness-threshold"));

  const Verdict back = decide(space(Scale::bmo, 1, 0, 1, 1),
                              space(Scale::B, 1, 0.5, 2, 2, make_power(1, 2)));
  CHECK(has_rule(back, "bmo.route-constant-weight"));
  CHECK(back.continuous == Tri::no);  // target needs more smoothness
}

TEST_CASE("unsupported pairs and mismatched dimensions are config errors") {
  const SpaceSpec n1 = space(Scale::N, 1, 1.0, 2, 2, make_power(1, 2));
  const SpaceSpec n2 = space(Scale::N, 2, 1.0, 2, 2, make_power(2, 2));
  CHECK_THROWS_AS(decide(n1, n2), config_error);
  CHECK_THROWS_AS(decide(n1, space(Scale::bmo, 1, 0, 1, 1)), config_error);

  SpaceSpec lr = space(Scale::Lr, 1, 0, 1, 1);
  lr.r = 2.0;
  CHECK_THROWS_AS(decide(lr, lr), config_error);
  CHECK_THROWS_AS(decide(space(Scale::E, 1, 1, 2, 2, make_power(1, 2)), n1),
                  config_error);

  // Missing weight on a weighted scale.
  CHECK_THROWS_AS(decide(space(Scale::N, 1, 1.0, 2, 2), n1), config_error);
}

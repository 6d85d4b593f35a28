#include <cmath>
#include <string>

#include "doctest.h"
#include "morrey/witness.hpp"

using namespace morrey;
using doctest::Approx;

namespace {

SpaceSpec n_spec(int d, double s, PhiSpec phi, double p, double q) {
  SpaceSpec sp;
  sp.scale = Scale::N;
  sp.d = d;
  sp.s = s;
  sp.p = p;
  sp.q = q;
  sp.phi = std::move(phi);
  return sp;
}

}  // namespace

TEST_CASE("single-cube members are normalized in their own space") {
  const SpaceSpec sp = n_spec(1, 1.0, make_power(1, 2), 2, 2);
  const WitnessFamily fam = build_family_single_cube(
      sp, {3, 5, 7}, WitnessScaling::source_normalized);
  CHECK(fam.members.size() == 3);
  CHECK(fam.construction == "single-cube-source-normalized");
  for (const DyadicSeq& m : fam.members) {
    CHECK(nnz(m) == 1);
    CHECK(norm_in_space(m, sp) == Approx(1.0).epsilon(1e-12));
  }

  const WitnessFamily tn = build_family_single_cube(
      sp, {2, 4}, WitnessScaling::target_normalized);
  CHECK(tn.construction == "single-cube-target-normalized");
  for (const DyadicSeq& m : tn.members)
    CHECK(norm_in_space(m, sp) == Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(build_family_single_cube(
                      sp, {}, WitnessScaling::source_normalized),
                  config_error);
  CHECK_THROWS_AS(build_family_single_cube(
                      sp, {5, 3}, WitnessScaling::source_normalized),
                  config_error);
  const SpaceSpec sp2 = n_spec(2, 1.0, make_power(2, 2), 2, 2);
  CHECK_THROWS_AS(build_family_single_cube(
                      sp2, {40}, WitnessScaling::source_normalized),
                  config_error);
}

TEST_CASE("filling members respect the cell budget") {
  const SpaceSpec sp = n_spec(2, 0.5, make_power(2, 2), 2, 2);
  const WitnessFamily fam = build_family_filling(sp, 1, {3, 5});
  CHECK(fam.construction == "filling-window");
  CHECK(fam.j0 == 1);
  // Level-5 member fills the 2^((5-1)*2) cells under the fixed window.
  CHECK(fam.members[1].level_nnz(5) == 256);

  CHECK_THROWS_AS(build_family_filling(sp, 1, {13}), config_error);
  CHECK_THROWS_AS(build_family_filling(sp, 3, {2, 5}), config_error);
}

TEST_CASE("probing the identity embedding shows uniform separation") {
  const SpaceSpec sp = n_spec(1, 1.0, make_power(1, 2), 2, 2);
  const WitnessFamily fam = build_family_single_cube(
      sp, {10, 14, 18, 22}, WitnessScaling::source_normalized);
  const ProbeReport rep = probe_compactness(fam, sp, sp);
  CHECK(rep.K == 4);
  CHECK(rep.J == 22);
  CHECK(rep.max_source_norm == Approx(1.0).epsilon(1e-12));
  CHECK(rep.beta_hat == Approx(1.0).epsilon(1e-12));
  CHECK(rep.min_pairwise_target_gap >= 0.25);
  CHECK(rep.source_norms.size() == 4);
  CHECK(rep.nearest_gaps.size() == 4);
  bool tagged = false;
  for (const std::string& n : rep.notes)
    tagged = tagged || n == "construction: single-cube-source-normalized";
  CHECK(tagged);

  WitnessFamily empty;
  CHECK_THROWS_AS(probe_compactness(empty, sp, sp), config_error);
}

TEST_CASE("witness planning follows the decided regime") {
  const std::vector<int> levels = {15, 20, 25, 30, 35, 40};

  // Compact verdict: the family demonstrates decaying gaps.
  WitnessPlan plan = witness_for(n_spec(1, 1.0, make_power(1, 2), 2, 2),
                                 n_spec(1, 0.25, make_power(1, 2), 2, 2),
                                 levels);
  CHECK(plan.available);
  CHECK(plan.construction == "single-cube-source-normalized");
  CHECK(plan.note == "compact embedding: family demonstrates vanishing gaps");

  // Non-compact with a non-decaying weight ratio: target-normalized cubes.
  plan = witness_for(
      n_spec(1, 0.0, make_power_log(1, 2, -1, std::exp(1.0)), 2, 1),
      n_spec(1, 0.0, make_power(1, 2), 2, 2), levels);
  CHECK(plan.available);
  CHECK(plan.construction == "single-cube-target-normalized");

  // Full transfer exponent with a decaying ratio: filled windows.
  plan = witness_for(n_spec(1, 0.5, make_power(1, 4), 1, 1),
                     n_spec(1, 0.5, make_power(1, 2), 1, INFINITY),
                     {2, 4, 6, 8, 10, 12});
  CHECK(plan.available);
  CHECK(plan.construction == "filling-window");

  // Decaying ratio below full transfer: no in-scope construction.
  plan = witness_for(n_spec(1, 0.25, make_power(1, 2), 1, 1),
                     n_spec(1, 0.0, make_power(1, 2), 2, 2), levels);
  CHECK_FALSE(plan.available);
  CHECK(plan.note.find("no in-scope extremal construction") !=
        std::string::npos);

  // Undecided verdicts are never certified.
  SpaceSpec bsrc = n_spec(1, 1.5, make_power(1, 1), 1, 4);
  bsrc.scale = Scale::B;
  SpaceSpec btgt = n_spec(1, 1.0, make_power(1, 2), 2, 2);
  btgt.scale = Scale::B;
  plan = witness_for(bsrc, btgt, levels);
  CHECK_FALSE(plan.available);
  CHECK(plan.note == "verdict not negative; no certificate attempted");
}

TEST_CASE("sup-type targets get window-normalized members") {
  SpaceSpec src = n_spec(1, 1.0, make_power(1, 2), 2, 2);
  src.scale = Scale::B;
  SpaceSpec tgt;
  tgt.scale = Scale::classical_besov;
  tgt.d = 1;
  tgt.s = 0.5;
  tgt.p = INFINITY;
  tgt.q = INFINITY;

  const WitnessPlan plan = witness_for(src, tgt, {15, 20, 25, 30, 35, 40});
  CHECK(plan.available);
  CHECK(plan.construction == "single-cube-window-normalized");
  const ProbeReport rep = probe_compactness(plan.family, src, tgt);
  CHECK(rep.max_source_norm <= 1.0 + 1e-12);
  CHECK(rep.min_pairwise_target_gap >= 0.25 * rep.beta_hat);
}

TEST_CASE("norms inside spaces and condition samples") {
  DyadicSeq seq(1, 4);
  seq.set_coded(3, 2, 0.5);

  const SpaceSpec nsp = n_spec(1, 0.5, make_power(1, 2), 2, 1);
  const NormParams prm{0.5, 2, 1, make_power(1, 2)};
  CHECK(norm_in_space(seq, nsp) == Approx(n_norm_star(seq, prm)));

  SpaceSpec sup;
  sup.scale = Scale::classical_besov;
  sup.d = 1;
  sup.s = 0.25;
  sup.p = INFINITY;
  sup.q = INFINITY;
  CHECK(norm_in_space(seq, sup) ==
        Approx(besov_sup_norm(seq, 0.25, INFINITY)));

  SpaceSpec lr;
  lr.scale = Scale::Lr;
  lr.d = 1;
  lr.r = 2;
  CHECK_THROWS_AS(norm_in_space(seq, lr), config_error);

  const SpaceSpec same = n_spec(1, 1.0, make_power(1, 2), 2, 2);
  const auto xi = embedding_condition_samples(same, same, 12);
  CHECK(xi.size() == 13);
  for (double x : xi) CHECK(x == Approx(1.0));
  CHECK_THROWS_AS(embedding_condition_samples(same, lr, 12), config_error);
}

TEST_CASE("interpolation bound is exact on a single cell") {
  DyadicSeq seq(1, 3);
  seq.set_coded(2, 1, 0.7);
  const NormParams prm1{1.0, 2, 2, make_power(1, 2)};
  const NormParams prm2{0.25, 4, 4, make_power(1, 4)};
  const GnReport rep = gn_check(seq, prm1, prm2, 0.5);
  CHECK(rep.windows_checked > 0);
  CHECK(rep.ratio == Approx(1.0).epsilon(1e-12));
  CHECK(rep.max_window_ratio <= 1.0 + 1e-12);
  CHECK(rep.interpolated_norm ==
        Approx(std::pow(rep.factor1, 0.5) * std::pow(rep.factor2, 0.5))
            .epsilon(1e-12));

  // Sup-type second factor.
  const NormParams sup{0.0, INFINITY, INFINITY, make_constant(1)};
  const GnReport rep2 = gn_check(seq, prm1, sup, 0.25);
  CHECK(rep2.windows_checked > 0);
  CHECK(rep2.max_window_ratio <= 1.0 + 1e-12);
  CHECK(rep2.ratio <= 1.0 + 1e-9);

  CHECK_THROWS_AS(gn_check(seq, prm1, prm2, 0.0), config_error);
  CHECK_THROWS_AS(gn_check(seq, prm1, prm2, 1.0), config_error);
  NormParams bad = sup;
  bad.q = 2.0;
  CHECK_THROWS_AS(gn_check(seq, prm1, bad, 0.5), config_error);
}

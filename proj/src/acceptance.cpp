#include "morrey/acceptance.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "morrey/dyadic.hpp"
#include "morrey/errors.hpp"
#include "morrey/indices.hpp"
#include "morrey/jobs.hpp"
#include "morrey/norms.hpp"
#include "morrey/phi.hpp"
#include "morrey/space.hpp"
#include "morrey/verdict.hpp"
#include "morrey/witness.hpp"

namespace morrey {

namespace {

struct CritResult {
  bool pass = true;
  std::string detail;
};

SpaceSpec n_space(int d, double s, PhiSpec phi, double p, double q) {
  SpaceSpec sp;
  sp.scale = Scale::N;
  sp.d = d;
  sp.s = s;
  sp.p = p;
  sp.q = q;
  sp.phi = std::move(phi);
  return sp;
}

SpaceSpec b_space(int d, double s, PhiSpec phi, double p, double q) {
  SpaceSpec sp = n_space(d, s, std::move(phi), p, q);
  sp.scale = Scale::B;
  return sp;
}

SpaceSpec cb_space(int d, double s, double p, double q) {
  SpaceSpec sp;
  sp.scale = Scale::classical_besov;
  sp.d = d;
  sp.s = s;
  sp.p = p;
  sp.q = q;
  return sp;
}

SpaceSpec bmo_space(int d) {
  SpaceSpec sp;
  sp.scale = Scale::bmo;
  sp.d = d;
  return sp;
}

int pool_threads() {
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(std::min(hc, 16u));
}

// 1. The rate-algebra decision path must reproduce, pair for pair, the
// closed-form threshold criterion on the power-weight subfamily.
CritResult criterion_power_oracle() {
  const auto t0 = std::chrono::steady_clock::now();
  struct Side {
    SpaceSpec spec;
    double s, u, p, q;
  };
  const double exps[] = {0.5, 1.0, 2.0, 4.0};
  const double qs[] = {0.5, 1.0, 2.0, INFINITY};

  long total = 0;
  std::atomic<long> mismatches{0};
  std::atomic<long> failures{0};
  std::mutex mu;
  std::string first_bad;

  for (int d : {1, 2}) {
    std::vector<Side> sides;
    for (double u : exps)
      for (double p : exps) {
        if (p > u) continue;
        for (int k = 0; k < 17; ++k) {
          const double s = -2.0 + 0.25 * k;
          for (double q : qs)
            sides.push_back({n_space(d, s, make_power(d, u), p, q), s, u, p, q});
        }
      }
    const size_t n = sides.size();
    total += static_cast<long>(n) * static_cast<long>(n);

    std::atomic<size_t> next{0};
    auto worker = [&]() {
      for (;;) {
        const size_t i = next.fetch_add(1);
        if (i >= n) return;
        const Side& a = sides[i];
        for (size_t k = 0; k < n; ++k) {
          const Side& b = sides[k];
          try {
            const Verdict lhs = decide_n(a.spec, b.spec);
            const Verdict rhs = decide_n_classical(a.s, a.u, a.p, a.q, b.s,
                                                   b.u, b.p, b.q, d);
            if (lhs.continuous != rhs.continuous ||
                lhs.compact != rhs.compact) {
              mismatches.fetch_add(1);
              std::lock_guard<std::mutex> lk(mu);
              if (first_bad.empty()) {
                std::ostringstream os;
                os << "d=" << d << " (" << a.s << "," << a.u << "," << a.p
                   << "," << a.q << ")->(" << b.s << "," << b.u << "," << b.p
                   << "," << b.q << "): " << to_string(lhs.continuous) << "/"
                   << to_string(lhs.compact) << " vs "
                   << to_string(rhs.continuous) << "/"
                   << to_string(rhs.compact);
                first_bad = os.str();
              }
            }
          } catch (const std::exception&) {
            failures.fetch_add(1);
          }
        }
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < pool_threads(); ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  CritResult r;
  r.pass = mismatches.load() == 0 && failures.load() == 0 && elapsed < 60.0;
  std::ostringstream os;
  os << total << " pairs, " << mismatches.load() << " mismatches, "
     << failures.load() << " errors, " << std::fixed << elapsed
     << "s of 60s budget";
  if (!first_bad.empty()) os << "; first: " << first_bad;
  r.detail = os.str();
  return r;
}

// 2. Both level-wise and window-wise evaluators must agree to 1e-12 on
// random truncated sequences, with the uniform-window norm dominated by the
// level-wise norm and equal to it at q = inf.
CritResult criterion_norm_agreement() {
  auto params_for = [](int k, int d) -> NormParams {
    const double e = std::exp(1.0);
    switch (k) {
      case 0: return {0.5, 2, 1, make_power(d, 2)};
      case 1: return {1.0, 1, 2, make_power(d, 4)};
      case 2: return {-0.5, 2, INFINITY, make_piecewise_power(d, 2, INFINITY)};
      case 3: return {0.0, 1, 1, make_log_blend(d)};
      case 4: return {1.5, 1, 2, make_psi_critical(d, 1)};
      case 5: return {0.75, 1, 0.5, make_inv_log(d, e)};
      case 6: return {0.25, 2, 2, make_power_log(d, 2, -1, e)};
      case 7: return {-1.0, 0.5, INFINITY, make_power(d, 1)};
      case 8: return {0.0, 2, INFINITY, make_constant(d)};
      default: return {0.5, 4, 1, make_power(d, 4)};
    }
  };
  const double densities[] = {1.0, 0.5, 0.25, 0.1, 0.75};

  int cross_fails = 0, order_fails = 0, sup_checks = 0, sup_fails = 0;
  std::string first_bad;
  for (int i = 0; i < 200; ++i) {
    const int d = 1 + (i % 2);
    const int J = i % 6;
    const DyadicSeq seq =
        random_seq(1000 + static_cast<uint64_t>(i), d, J, densities[i % 5],
                   (i % 3 == 0) ? "dyadic-decaying" : "uniform01");
    const NormParams prm = params_for(i % 10, d);
    const double star = n_norm_star(seq, prm);
    const double mor = n_norm_morrey(seq, prm);
    const double b = b_norm(seq, prm);
    const double scale = std::max({star, mor, 1e-300});

    if (std::abs(star - mor) > 1e-12 * scale) {
      ++cross_fails;
      if (first_bad.empty()) {
        std::ostringstream os;
        os << "case " << i << ": star=" << star << " window=" << mor;
        first_bad = os.str();
      }
    }
    if (b > star * (1.0 + 1e-12) + 1e-300) ++order_fails;
    if (is_pos_inf(prm.q)) {
      ++sup_checks;
      if (std::abs(b - star) > 1e-12 * scale) ++sup_fails;
    }
  }
  CritResult r;
  r.pass = cross_fails == 0 && order_fails == 0 && sup_fails == 0;
  std::ostringstream os;
  os << "200 sequences: " << cross_fails << " cross-path, " << order_fails
     << " ordering, " << sup_fails << "/" << sup_checks
     << " sup-equality failures";
  if (!first_bad.empty()) os << "; first: " << first_bad;
  r.detail = os.str();
  return r;
}

// 3. On power weights written through the (p, tau) parametrization the
// critical indices must match their closed forms to 1e-9 and the sampled
// slope estimates to 0.05.
CritResult criterion_index_closed_forms() {
  const double taus[] = {0.0, 0.1, 0.3};
  const double ps[] = {1.0, 2.0, 4.0};
  const double s1 = 0.5;
  int checked = 0, fails = 0;
  std::string first_bad;
  auto record = [&](bool ok, const char* what, double got, double want) {
    ++checked;
    if (ok) return;
    ++fails;
    if (first_bad.empty()) {
      std::ostringstream os;
      os << what << " got " << got << " want " << want;
      first_bad = os.str();
    }
  };

  for (int d : {1, 2}) {
    for (double p1 : ps)
      for (double t1 : taus) {
        if (p1 == 4.0 && t1 == 0.3) continue;
        const double a1 = 1.0 / p1 - t1;
        const PhiSpec phi1 = make_power(d, 1.0 / a1);
        for (double p2 : ps)
          for (double t2 : taus) {
            if (p2 == 4.0 && t2 == 0.3) continue;
            const double a2 = 1.0 / p2 - t2;
            const PhiSpec phi2 = make_power(d, 1.0 / a2);
            const PairContext ctx =
                make_pair_context(phi1, p1, 1.0, phi2, p2, 1.0);

            const double sig = sigma_index(s1, phi1, ctx.rho);
            const double sig_want = s1 - (1.0 - ctx.rho) * d * a1;
            record(std::abs(sig - sig_want) <= 1e-9, "sigma", sig, sig_want);

            const double sinf = sigma_inf_index(s1, phi1);
            const double sinf_want = s1 - d * a1;
            record(std::abs(sinf - sinf_want) <= 1e-9, "sigma_inf", sinf,
                   sinf_want);

            const double br = ratio_rate(ctx).beta;
            if (br <= 0) {
              const double sbar = sigma_bar_index(s1, ctx);
              const double sbar_want = s1 - d * (a1 - a2);
              record(std::abs(sbar - sbar_want) <= 1e-9, "sigma_bar", sbar,
                     sbar_want);
            } else {
              bool threw = false;
              try {
                (void)sigma_bar_index(s1, ctx);
              } catch (const config_error&) {
                threw = true;
              }
              record(threw, "sigma_bar-domain", 0, 1);
            }

            const double num = sigma_numeric(s1, phi1, ctx.rho, 200).beta_hat;
            record(std::abs(num - sig_want) <= 0.05, "sigma-numeric", num,
                   sig_want);
            const double numinf = sigma_inf_numeric(s1, phi1, 200).beta_hat;
            record(std::abs(numinf - sinf_want) <= 0.05, "sigma_inf-numeric",
                   numinf, sinf_want);
          }
      }
  }

  // Log-type weights: vanishing decay exponent keeps sigma at s1, the
  // critical-weight family shifts sigma_inf by exactly d/p.
  {
    const PhiSpec inv = make_inv_log(1, std::exp(1.0));
    const PairContext ctx =
        make_pair_context(inv, 1.0, 1.0, make_power(1, 2), 2.0, 1.0);
    const double sig = sigma_index(s1, inv, ctx.rho);
    record(std::abs(sig - s1) <= 1e-12, "sigma-slow-weight", sig, s1);
    const double num = sigma_numeric(s1, inv, ctx.rho, 200).beta_hat;
    record(std::abs(num - s1) <= 0.05, "sigma-slow-weight-numeric", num, s1);

    const PhiSpec psi = make_psi_critical(1, 1.5);
    const double sinf = sigma_inf_index(1.0, psi);
    const double sinf_want = 1.0 - 1.0 / 1.5;
    record(std::abs(sinf - sinf_want) <= 1e-12, "sigma_inf-critical", sinf,
           sinf_want);
    const double numinf = sigma_inf_numeric(1.0, psi, 200).beta_hat;
    record(std::abs(numinf - sinf_want) <= 0.05, "sigma_inf-critical-numeric",
           numinf, sinf_want);
  }

  CritResult r;
  r.pass = fails == 0;
  std::ostringstream os;
  os << checked << " checks, " << fails << " failures";
  if (!first_bad.empty()) os << "; first: " << first_bad;
  r.detail = os.str();
  return r;
}

// 4. Across the weight menu the indices must stay inside their structural
// bounds: sigma in [s1 - (d/p1)(1-rho), s1], sigma_inf in [s1 - d/p1, s1],
// and under lower dominance sigma_bar in [s1 - d/p1, sigma].
CritResult criterion_index_bounds() {
  const double e = std::exp(1.0);
  struct Pair {
    PhiSpec phi1;
    double p1;
    PhiSpec phi2;
    double p2;
  };
  const std::vector<Pair> pairs = {
      {make_power(1, 2), 2, make_power(1, 4), 4},
      {make_power(1, 2), 2, make_power(1, 2), 2},
      {make_piecewise_power(1, 2, 4), 2, make_power(1, 3), 3},
      {make_power_log(1, 2, -1, e), 2, make_power(1, 4), 4},
      {make_log_blend(1), 1, make_power(1, 2), 2},
      {make_inv_log(1, e), 1, make_power(1, 2), 2},
      {make_psi_critical(1, 1), 1, make_power(1, 3), 3},
      {make_psi_critical(1, 1), 1, make_psi_critical(1, 1), 1},
      {make_power(2, 2), 2, make_power(2, 4), 4},
      {make_log_blend(2), 1, make_power(2, 2), 2},
      {make_inv_log(2, e), 2, make_power(2, 4), 4},
      {make_psi_critical(2, 2), 2, make_power(2, 4), 4},
      {make_power(1, 1), 1, make_constant(1), 2},
      {make_power(1, 2), 2, make_power(1, 8), 4},
      {make_power(2, 2), 1, make_constant(2), 4},
  };

  const double tol = 1e-12;
  int checked = 0, fails = 0;
  std::string first_bad;
  auto expect = [&](bool ok, const std::string& what) {
    ++checked;
    if (ok) return;
    ++fails;
    if (first_bad.empty()) first_bad = what;
  };

  for (const Pair& pr : pairs) {
    const int d = pr.phi1.d;
    const PairContext ctx =
        make_pair_context(pr.phi1, pr.p1, 1.0, pr.phi2, pr.p2, 1.0);
    for (double s1 : {-1.0, 0.0, 1.0}) {
      const double sig = sigma_index(s1, pr.phi1, ctx.rho);
      const double lo = s1 - (d / pr.p1) * (1.0 - ctx.rho);
      expect(sig >= lo - tol && sig <= s1 + tol,
             "sigma out of range: " + std::to_string(sig));
      const double sinf = sigma_inf_index(s1, pr.phi1);
      expect(sinf >= s1 - d / pr.p1 - tol && sinf <= s1 + tol,
             "sigma_inf out of range: " + std::to_string(sinf));

      const DominanceReport dom = dominance_check(ctx, 40);
      if (allows_geq(dom.cls)) {
        const double sbar = sigma_bar_index(s1, ctx);
        expect(sbar >= s1 - d / pr.p1 - tol && sbar <= sig + tol,
               "sigma_bar out of range: " + std::to_string(sbar));
      } else {
        bool threw = false;
        try {
          (void)sigma_bar_index(s1, ctx);
        } catch (const config_error&) {
          threw = true;
        }
        expect(threw, "sigma_bar accepted without lower dominance");
      }
    }
  }

  CritResult r;
  r.pass = fails == 0;
  std::ostringstream os;
  os << checked << " bound checks over " << pairs.size()
     << " weight pairs, " << fails << " failures";
  if (!first_bad.empty()) os << "; first: " << first_bad;
  r.detail = os.str();
  return r;
}

// 5. Ten pairs decided non-compact must admit witness families with source
// norms at most 2 and pairwise target gaps at least a quarter of the tail
// condition peak; ten compact pairs must show a tenfold gap decay.
CritResult criterion_witness_families() {
  const double e = std::exp(1.0);
  const std::vector<int> lv1 = {15, 20, 25, 30, 35, 40};
  const std::vector<int> lv2 = {6, 11, 16, 21, 26, 31};

  struct Tuple {
    SpaceSpec src, tgt;
    bool compact;
    std::vector<int> levels;
  };
  std::vector<Tuple> tuples;

  tuples.push_back({n_space(1, 1, make_power(1, 2), 2, 2),
                    n_space(1, 1, make_power(1, 2), 2, 2), false, lv1});
  tuples.push_back({n_space(1, 0, make_inv_log(1, e), 1, 1),
                    n_space(1, 0, make_inv_log(1, e), 1, 1), false, lv1});
  tuples.push_back({n_space(1, 1, make_power(1, 2), 2, 1),
                    n_space(1, 0.75, make_power(1, 4), 2, 2), false, lv1});
  tuples.push_back({n_space(1, 0.5, make_power(1, 4), 1, 1),
                    n_space(1, 0.5, make_power(1, 2), 1, INFINITY), false,
                    lv1});
  tuples.push_back({n_space(1, 0, make_power_log(1, 2, -1, e), 2, 1),
                    n_space(1, 0, make_power(1, 2), 2, 2), false, lv1});
  tuples.push_back({b_space(1, 1, make_power(1, 2), 2, 2),
                    cb_space(1, 0.5, INFINITY, INFINITY), false, lv1});
  tuples.push_back({n_space(1, 0, make_piecewise_power(1, 4, 2), 4, 2),
                    n_space(1, 0, make_power(1, 4), 4, 2), false, lv1});
  tuples.push_back({n_space(1, 0.25, make_power(1, 2), 2, 1),
                    n_space(1, 0, make_power(1, 4), 2, 1), false, lv1});
  tuples.push_back({n_space(2, 0, make_power(2, 2), 2, INFINITY),
                    n_space(2, 0, make_power(2, 2), 2, INFINITY), false, lv2});
  tuples.push_back({b_space(1, 0.3, make_power(1, 2), 2, 1),
                    b_space(1, 0.3, make_power(1, 2), 2, 2), false, lv1});

  tuples.push_back({cb_space(1, 1, 2, 2), cb_space(1, 0, 2, 2), true, lv1});
  tuples.push_back({n_space(2, 1.5, make_power(2, 2), 1, INFINITY),
                    n_space(2, 0, make_power(2, 4), 2, 1), true, lv2});
  tuples.push_back({n_space(1, 1, make_inv_log(1, e), 1, 1),
                    n_space(1, 0, make_inv_log(1, e), 1, 2), true, lv1});
  tuples.push_back({n_space(1, 2, make_psi_critical(1, 1), 1, 1),
                    n_space(1, 0, make_power(1, 2), 2, 2), true, lv1});
  tuples.push_back({b_space(2, 1.5, make_psi_critical(2, 1.5), 1.5, 2),
                    cb_space(2, 1.5 - 4.0 / 3.0, INFINITY, INFINITY), true,
                    std::vector<int>{1, 2, 4, 8, 16, 31}});
  tuples.push_back({b_space(1, 1, make_power(1, 2), 2, 2),
                    b_space(1, 0, make_power(1, 2), 2, 2), true, lv1});
  tuples.push_back({b_space(1, 2, make_psi_critical(1, 1), 1, 1),
                    b_space(1, 0, make_power(1, 2), 2, 2), true, lv1});
  tuples.push_back({cb_space(2, 2, 4, 0.5), cb_space(2, 0.5, 4, 4), true,
                    lv2});
  tuples.push_back({b_space(1, 1.5, make_power(1, 1), 1, 1), bmo_space(1),
                    true, lv1});
  tuples.push_back({cb_space(1, 1, 2, 2), cb_space(1, 0, 2, 1), true, lv1});

  int checked = 0, fails = 0;
  std::string first_bad;
  auto expect = [&](bool ok, int idx, const std::string& what) {
    ++checked;
    if (ok) return;
    ++fails;
    if (first_bad.empty())
      first_bad = "tuple " + std::to_string(idx) + ": " + what;
  };

  for (size_t i = 0; i < tuples.size(); ++i) {
    const Tuple& t = tuples[i];
    const int idx = static_cast<int>(i);
    try {
      const Verdict v = decide(t.src, t.tgt);
      expect(v.continuous == Tri::yes, idx, "expected continuity");
      expect(v.compact == (t.compact ? Tri::yes : Tri::no), idx,
             std::string("compactness verdict ") + to_string(v.compact));
      const WitnessPlan plan = witness_for(t.src, t.tgt, t.levels);
      expect(plan.available, idx, "witness unavailable: " + plan.note);
      if (!plan.available) continue;
      const ProbeReport probe = probe_compactness(plan.family, t.src, t.tgt);
      expect(probe.K == 6, idx, "wrong family size");
      expect(probe.max_source_norm <= 2.0 + 1e-9, idx,
             "source norm " + std::to_string(probe.max_source_norm));
      if (!t.compact) {
        expect(probe.beta_hat > 0, idx, "vanishing condition peak");
        expect(probe.min_pairwise_target_gap >= 0.25 * probe.beta_hat, idx,
               "gap " + std::to_string(probe.min_pairwise_target_gap) +
                   " vs peak " + std::to_string(probe.beta_hat));
      } else {
        expect(plan.construction == "single-cube-source-normalized", idx,
               "unexpected construction " + plan.construction);
        expect(probe.nearest_gaps.front() >= 10.0 * probe.nearest_gaps.back(),
               idx,
               "gap decay " + std::to_string(probe.nearest_gaps.front()) +
                   " -> " + std::to_string(probe.nearest_gaps.back()));
      }
    } catch (const std::exception& ex) {
      expect(false, idx, std::string("exception: ") + ex.what());
    }
  }

  CritResult r;
  r.pass = fails == 0;
  std::ostringstream os;
  os << "20 tuples, " << checked << " checks, " << fails << " failures";
  if (!first_bad.empty()) os << "; first: " << first_bad;
  r.detail = os.str();
  return r;
}

// 6. The parameter-interpolated norm must obey the product bound with
// constant one, window by window (1e-12) and globally (1e-9), on 500
// random instances across both factor variants.
CritResult criterion_interpolation() {
  const double e = std::exp(1.0);
  auto factors = [&](int k, int d) -> std::pair<NormParams, NormParams> {
    switch (k) {
      case 0:
        return {{1.0, 2, 2, make_power(d, 2)}, {0.25, 4, 4, make_power(d, 4)}};
      case 1:
        return {{0.5, 1, 1, make_log_blend(d)},
                {1.5, 2, 2, make_psi_critical(d, 2)}};
      case 2:
        return {{-0.5, 2, INFINITY, make_power_log(d, 2, -1, e)},
                {0.75, 2, 1, make_power(d, 2)}};
      case 3:
        return {{0.0, 0.5, 0.5, make_power(d, 1)},
                {1.0, 2, 2, make_inv_log(d, e)}};
      case 4:
        return {{1.0, 2, 2, make_power(d, 2)},
                {0.25, INFINITY, INFINITY, make_constant(d)}};
      default:
        return {{0.5, 1.5, 3, make_psi_critical(d, 1.5)},
                {0.0, INFINITY, INFINITY, make_constant(d)}};
    }
  };
  const double thetas[] = {0.25, 0.5, 0.75};
  const double densities[] = {0.2, 0.5, 0.9};

  int window_fails = 0, global_fails = 0;
  long windows = 0;
  double worst_window = 0, worst_global = 0;
  for (int i = 0; i < 500; ++i) {
    const int d = 1 + (i % 2);
    const int J = 2 + (i % 4);
    DyadicSeq lambda =
        random_seq(7000 + static_cast<uint64_t>(i), d, J, densities[i % 3],
                   ((i / 2) % 2) ? "dyadic-decaying" : "uniform01");
    if (nnz(lambda) == 0) lambda.set_coded(0, 0, 0.7);
    const auto [prm1, prm2] = factors(i % 6, d);
    const GnReport rep = gn_check(lambda, prm1, prm2, thetas[(i / 3) % 3]);
    windows += rep.windows_checked;
    worst_window = std::max(worst_window, rep.max_window_ratio);
    worst_global = std::max(worst_global, rep.ratio);
    if (rep.windows_checked == 0 || rep.max_window_ratio > 1.0 + 1e-12)
      ++window_fails;
    if (rep.ratio > 1.0 + 1e-9) ++global_fails;
  }
  CritResult r;
  r.pass = window_fails == 0 && global_fails == 0;
  std::ostringstream os;
  os << "500 instances, " << windows << " windows, worst window ratio "
     << worst_window << ", worst global ratio " << worst_global << ", "
     << window_fails + global_fails << " failures";
  r.detail = os.str();
  return r;
}

// 7. The plain Morrey scale: never compact, with continuity matching the
// exact power-weight rule on locally defined weights.
CritResult criterion_plain_morrey() {
  const double e = std::exp(1.0);
  struct Entry {
    PhiSpec phi;
    double p;
  };
  const std::vector<Entry> pool = {
      {make_constant(1), 1},        {make_power(1, 1), 1},
      {make_power(1, 1), 0.5},      {make_power(1, 2), 2},
      {make_power(1, 2), 1},        {make_power(1, 4), 4},
      {make_piecewise_power(1, 2, 4), 2},
      {make_log_blend(1), 1},       {make_inv_log(1, e), 1},
      {make_psi_critical(1, 1), 1},
  };

  int checked = 0, fails = 0;
  std::string first_bad;
  auto expect = [&](bool ok, const std::string& what) {
    ++checked;
    if (ok) return;
    ++fails;
    if (first_bad.empty()) first_bad = what;
  };

  for (size_t i = 0; i < pool.size(); ++i)
    for (size_t k = 0; k < pool.size(); ++k) {
      try {
        const Verdict v =
            decide_morrey(pool[i].phi, pool[i].p, pool[k].phi, pool[k].p);
        expect(v.compact == Tri::no, "compact verdict on menu pair");
        expect(std::find(v.rules.begin(), v.rules.end(), "m.never-compact") !=
                   v.rules.end(),
               "missing never-compact rule");
        if (i == k)
          expect(v.continuous == Tri::yes, "identity pair not continuous");
      } catch (const std::exception& ex) {
        expect(false, std::string("menu exception: ") + ex.what());
      }
    }

  // Locally defined negative-exponent power weights: the embedding holds
  // exactly when p1 >= p2 and sigma1 >= sigma2.
  const double fracs[] = {0.25, 0.5, 0.75};
  for (int d : {1, 2})
    for (double p1 : {1.5, 3.0})
      for (double p2 : {1.5, 3.0})
        for (double f1 : fracs)
          for (double f2 : fracs) {
            const double u1 = p1 / f1, u2 = p2 / f2;
            const PhiSpec phi1 = make_piecewise_power(d, u1, INFINITY);
            const PhiSpec phi2 = make_piecewise_power(d, u2, INFINITY);
            const bool want = p1 >= p2 && d / u2 >= d / u1;
            try {
              const Verdict v = decide_morrey(phi1, p1, phi2, p2);
              expect(v.continuous == (want ? Tri::yes : Tri::no),
                     "local power rule mismatch");
              expect(v.compact == Tri::no, "local power pair compact");
            } catch (const std::exception& ex) {
              expect(false, std::string("local exception: ") + ex.what());
            }
          }

  CritResult r;
  r.pass = fails == 0;
  std::ostringstream os;
  os << checked << " checks (100 menu pairs + 72 local power pairs), "
     << fails << " failures";
  if (!first_bad.empty()) os << "; first: " << first_bad;
  r.detail = os.str();
  return r;
}

// 8. Tail membership decisions of the rate algebra must agree with a
// million-term partial-sum oracle that classifies divergence by the tail
// slope of the partial sums.
CritResult criterion_partial_sum_oracle() {
  auto oracle_diverges = [](double beta, double gamma, double q) {
    long double sum = 0.0L, at_1e5 = 0.0L;
    for (long j = 1; j <= 1000000; ++j) {
      const double logt =
          q * (-beta * static_cast<double>(j) * M_LN2 +
               gamma * std::log(static_cast<double>(j)));
      if (logt > 700.0) return true;
      if (logt > -745.0) sum += std::exp(logt);
      if (j == 100000) at_1e5 = sum;
    }
    const double slope =
        static_cast<double>(std::log(sum) - std::log(at_1e5)) / std::log(10.0);
    return slope > 0.01;
  };

  int checked = 0, fails = 0;
  std::string first_bad;
  for (double beta : {-0.25, 0.0, 0.25})
    for (double gamma : {-1.5, -1.0, -0.5, 0.0, 0.5})
      for (double q : {1.0, 2.0}) {
        ++checked;
        const Tri member = ellq_membership(RateTerm{beta, gamma, true}, q);
        const Tri want = oracle_diverges(beta, gamma, q) ? Tri::no : Tri::yes;
        if (member != want) {
          ++fails;
          if (first_bad.empty()) {
            std::ostringstream os;
            os << "beta=" << beta << " gamma=" << gamma << " q=" << q << ": "
               << to_string(member) << " vs oracle " << to_string(want);
            first_bad = os.str();
          }
        }
      }

  CritResult r;
  r.pass = fails == 0;
  std::ostringstream os;
  os << checked << " rate classes, " << fails << " disagreements";
  if (!first_bad.empty()) os << "; first: " << first_bad;
  r.detail = os.str();
  return r;
}

// 9. Sweeps must be byte-identical across repeats and worker counts, and a
// monotone smoothness sweep may change its verdict pair at most twice.
CritResult criterion_sweep_determinism() {
  const std::string cfg = R"({
    "task": "sweep",
    "source": {"scale": "N", "d": 1, "s": 1.5, "p": 2.0, "q": 2.0,
               "phi": {"family": "power", "u": 2.0}},
    "target": {"scale": "N", "d": 1, "s": 0.0, "p": 2.0, "q": 2.0,
               "phi": {"family": "power", "u": 2.0}},
    "parameter": "target.s",
    "from": -0.5, "to": 2.0, "step": 0.05
  })";

  CritResult r;
  const RunResult j1 = run_config_text(cfg, "json", 1);
  const RunResult j1b = run_config_text(cfg, "json", 1);
  const RunResult j4 = run_config_text(cfg, "json", 4);
  const RunResult j4b = run_config_text(cfg, "json", 4);
  const RunResult c1 = run_config_text(cfg, "csv", 1);
  const RunResult c4 = run_config_text(cfg, "csv", 4);

  std::ostringstream os;
  bool ok = true;
  for (const RunResult* rr : {&j1, &j1b, &j4, &j4b, &c1, &c4})
    if (rr->exit_code != 0 || rr->report.empty()) ok = false;
  if (!ok) {
    r.pass = false;
    r.detail = "sweep execution failed: " + j1.error + c1.error;
    return r;
  }
  const bool repeat_same = j1.report == j1b.report && j4.report == j4b.report;
  const bool jobs_same = j1.report == j4.report && c1.report == c4.report;

  // Count verdict-pair changes along the monotone target-smoothness sweep.
  int rows = 0, transitions = 0;
  {
    std::istringstream in(c1.report);
    std::string line, prev;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      const size_t a = line.find(',');
      const size_t b = line.find(',', a + 1);
      const size_t c = line.find(',', b + 1);
      if (a == std::string::npos || b == std::string::npos ||
          c == std::string::npos)
        continue;
      const std::string pair = line.substr(a + 1, c - a - 1);
      if (rows > 0 && pair != prev) ++transitions;
      prev = pair;
      ++rows;
    }
  }

  r.pass = repeat_same && jobs_same && rows == 51 && transitions == 2;
  os << "repeat-identical " << (repeat_same ? "yes" : "no")
     << ", jobs-identical " << (jobs_same ? "yes" : "no") << ", " << rows
     << " rows, " << transitions << " verdict transitions (expected 2)";
  r.detail = os.str();
  return r;
}

}  // namespace

bool run_acceptance(std::ostream& out) {
  struct Entry {
    const char* label;
    CritResult (*fn)();
  };
  const Entry entries[] = {
      {"decision engine matches the closed-form power-weight oracle",
       criterion_power_oracle},
      {"independent norm evaluators agree on random sequences",
       criterion_norm_agreement},
      {"critical indices match closed forms and sampled slopes",
       criterion_index_closed_forms},
      {"critical indices respect the structural bounds",
       criterion_index_bounds},
      {"witness families certify the compactness verdicts",
       criterion_witness_families},
      {"interpolation inequality holds with constant one",
       criterion_interpolation},
      {"plain Morrey verdicts match the local power rule and never compact",
       criterion_plain_morrey},
      {"tail membership agrees with the partial-sum oracle",
       criterion_partial_sum_oracle},
      {"sweeps are deterministic with at most two verdict transitions",
       criterion_sweep_determinism},
  };

  int passed = 0;
  int idx = 0;
  for (const Entry& e : entries) {
    ++idx;
    CritResult res;
    try {
      res = e.fn();
    } catch (const std::exception& ex) {
      res.pass = false;
      res.detail = std::string("unhandled exception: ") + ex.what();
    }
    if (res.pass) ++passed;
    out << "[" << idx << "] " << (res.pass ? "PASS" : "FAIL") << "  "
        << e.label << " (" << res.detail << ")\n";
  }
  out << "acceptance: " << passed << "/9 criteria passed\n";
  return passed == 9;
}

}  // namespace morrey

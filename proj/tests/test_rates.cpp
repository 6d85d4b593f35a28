#include "doctest.h"
#include "morrey/rates.hpp"
#include "oracles.hpp"

using namespace morrey;

TEST_CASE("rate algebra composes multiplicatively") {
  const RateTerm a{0.5, -1.0, true};
  const RateTerm b{-0.25, 2.0, true};
  CHECK((a * b) == RateTerm{0.25, 1.0, true});
  CHECK(rate_pow(a, 2.0) == RateTerm{1.0, -2.0, true});
  CHECK(rate_pow(a, -1.0) == RateTerm{-0.5, 1.0, true});

  const RateTerm low{0.5, 0.0, false};
  CHECK_FALSE((a * low).trusted);
  CHECK_FALSE(rate_pow(low, 3.0).trusted);
}

TEST_CASE("ell_q membership boundary conventions") {
  CHECK(ellq_membership({1.0, 5.0, true}, 0.5) == Tri::yes);
  CHECK(ellq_membership({-0.001, -9.0, true}, 2.0) == Tri::no);

  // beta == 0: the log exponent decides; the harmonic edge diverges.
  CHECK(ellq_membership({0.0, -1.1, true}, 1.0) == Tri::yes);
  CHECK(ellq_membership({0.0, -1.0, true}, 1.0) == Tri::no);
  CHECK(ellq_membership({0.0, -0.6, true}, 2.0) == Tri::yes);
  CHECK(ellq_membership({0.0, -0.5, true}, 2.0) == Tri::no);
  CHECK(ellq_membership({0.0, 0.0, true}, INFINITY) == Tri::yes);
  CHECK(ellq_membership({0.0, 0.5, true}, INFINITY) == Tri::no);
  CHECK(ellq_membership({0.0, -3.0, true}, INFINITY) == Tri::yes);

  CHECK(ellq_membership({0.5, 0.0, false}, 1.0) == Tri::unknown);
  CHECK_THROWS_AS(ellq_membership({0.0, 0.0, true}, 0.0), config_error);
  CHECK_THROWS_AS(ellq_membership({0.0, 0.0, true}, -1.0), config_error);
}

TEST_CASE("c0 membership") {
  CHECK(c0_membership({0.25, 3.0, true}) == Tri::yes);
  CHECK(c0_membership({-0.25, -3.0, true}) == Tri::no);
  CHECK(c0_membership({0.0, -0.5, true}) == Tri::yes);
  CHECK(c0_membership({0.0, 0.0, true}) == Tri::no);
  CHECK(c0_membership({0.0, 0.5, true}) == Tri::no);
  CHECK(c0_membership({1.0, 0.0, false}) == Tri::unknown);
}

TEST_CASE("membership agrees with the partial-sum probe") {
  for (double beta : {-0.25, 0.0, 0.25})
    for (double gamma : {-1.5, -1.0, 0.0, 0.5})
      for (double q : {1.0, 2.0}) {
        const Tri got = ellq_membership({beta, gamma, true}, q);
        const Tri want =
            oracle::series_diverges(beta, gamma, q) ? Tri::no : Tri::yes;
        CAPTURE(beta);
        CAPTURE(gamma);
        CAPTURE(q);
        CHECK(got == want);
      }
}

TEST_CASE("tri combinators") {
  CHECK(tri_and(Tri::yes, Tri::yes) == Tri::yes);
  CHECK(tri_and(Tri::yes, Tri::no) == Tri::no);
  CHECK(tri_and(Tri::unknown, Tri::no) == Tri::no);
  CHECK(tri_and(Tri::unknown, Tri::yes) == Tri::unknown);
  CHECK(to_tri(true) == Tri::yes);
  CHECK(tri_from_string("unknown") == Tri::unknown);
  CHECK_THROWS_AS(tri_from_string("maybe"), config_error);
}

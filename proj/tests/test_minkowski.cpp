#include <doctest.h>

#include <cmath>
#include <numbers>

#include "catalog.hpp"
#include "steiner/minkowski.hpp"
#include "steiner/steiner_polynomial.hpp"

using namespace steiner;

TEST_CASE("summand condition for balls is exact arithmetic on radii") {
    const QuadratureRule rule = QuadratureRule::build(2, 16);
    const ConvexBody big = ConvexBody::ball(2, 2.0);
    const ConvexBody small = ConvexBody::ball(2, 0.5);
    const SummandCertificate ok = summand_condition(small, big, rule);
    CHECK(ok.holds);
    CHECK(ok.margin == doctest::Approx(1.5).epsilon(1e-9));
    const SummandCertificate bad = summand_condition(big, small, rule);
    CHECK_FALSE(bad.holds);
    CHECK(bad.margin == doctest::Approx(-1.5).epsilon(1e-9));
    CHECK(bad.directions_checked > 0);
}

TEST_CASE("a ball is a summand of an ellipse iff it fits the min curvature") {
    // Ellipse (2, 1): principal radii range over [1/2, 4].
    const QuadratureRule rule = QuadratureRule::build(2, 32);
    const ConvexBody e = ConvexBody::ellipsoid({2.0, 1.0});
    CHECK(summand_condition(ConvexBody::ball(2, 0.4), e, rule).holds);
    CHECK_FALSE(summand_condition(ConvexBody::ball(2, 0.6), e, rule).holds);
    // And the ellipse is a summand of a big enough ball.
    CHECK(summand_condition(e, ConvexBody::ball(2, 4.5), rule).holds);
    CHECK_FALSE(summand_condition(e, ConvexBody::ball(2, 3.5), rule).holds);
}

TEST_CASE("inner parallel bodies evaluate and recombine") {
    const QuadratureRule rule = QuadratureRule::build(2, 32);
    const ConvexBody e = ConvexBody::ellipsoid({2.0, 1.0});
    const ConvexBody shrunk = inner_parallel(e, 0.3, rule); // 0.3 < rho_min = 0.5
    Vec u(2);
    u << 1.0, 0.0;
    CHECK(shrunk.support(u) == doctest::Approx(1.7).epsilon(1e-12));

    // (K ~ cB) + cB recovers K for smooth K with c below the minimal radius.
    const ConvexBody rebuilt = ConvexBody::offset(shrunk, 0.3);
    const auto pk = steiner_polynomial(e, rule).first;
    const auto pr = steiner_polynomial(rebuilt, rule).first;
    for (int i = 0; i <= 2; ++i)
        CHECK(pk.coeffs[static_cast<std::size_t>(i)] ==
              doctest::Approx(pr.coeffs[static_cast<std::size_t>(i)]).epsilon(1e-9));
}

TEST_CASE("inner parallel rejects an oversized shrink") {
    const QuadratureRule rule = QuadratureRule::build(2, 32);
    const ConvexBody e = ConvexBody::ellipsoid({2.0, 1.0});
    CHECK_THROWS_AS(inner_parallel(e, 0.6, rule), SummandViolationError);
    try {
        inner_parallel(e, 0.6, rule);
    } catch (const SummandViolationError& err) {
        CHECK(err.margin() < 0.0);
        CHECK(err.margin() == doctest::Approx(0.5 - 0.6).epsilon(1e-6));
    }
}

TEST_CASE("inner parallel with nonpositive c degenerates gracefully") {
    const QuadratureRule rule = QuadratureRule::build(2, 16);
    const ConvexBody e = ConvexBody::ellipsoid({2.0, 1.0});
    Vec u(2);
    u << 0.0, 1.0;
    CHECK(inner_parallel(e, 0.0, rule).support(u) == e.support(u));
    CHECK(inner_parallel(e, -0.5, rule).support(u) ==
          doctest::Approx(e.support(u) + 0.5).epsilon(1e-14));
}

TEST_CASE("ball complements evaluate and respect the threshold") {
    const QuadratureRule rule = QuadratureRule::build(2, 32);
    const ConvexBody e = ConvexBody::ellipsoid({2.0, 1.0}); // rho_max = 4
    const ConvexBody comp = ball_complement(e, 5.0, rule);
    Vec u(2);
    u << 1.0, 0.0;
    CHECK(comp.support(u) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK_THROWS_AS(ball_complement(e, 3.0, rule), SummandViolationError);
}

TEST_CASE("complement curvature is the ball-minus-body radius") {
    // For the complement cB ~ K at direction w, the principal radii are
    // c - rho_i(-w) in the planar case: check on a circle where it is exact.
    const QuadratureRule rule = QuadratureRule::build(2, 16);
    const ConvexBody disc = ConvexBody::ball(2, 1.0);
    const ConvexBody comp = ball_complement(disc, 3.0, rule);
    Vec u(2);
    u << std::cos(0.7), std::sin(0.7);
    const PrincipalRadii r = comp.principal_radii(Direction(u));
    CHECK(r.min() == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("minkowski_sum matches the sum factory") {
    const QuadratureRule rule = QuadratureRule::build(3, 12);
    const ConvexBody a = ConvexBody::ellipsoid({2.0, 1.5, 1.0});
    const ConvexBody b = ConvexBody::ball(3, 0.7);
    const ConvexBody s = minkowski_sum(a, b);
    Vec u(3);
    u << 0.6, -0.8, 0.0;
    CHECK(s.support(u) == a.support(u) + b.support(u));
    CHECK_THROWS_AS(minkowski_sum(a, ConvexBody::ball(2, 1.0)), InvalidBodyError);
}

TEST_CASE("summand condition across catalog sums") {
    // Each catalog sum body contains a ball summand by construction: check
    // that the certificate accepts the ball against the sum.
    const QuadratureRule rule = QuadratureRule::build(3, 12);
    const ConvexBody inner = ConvexBody::ellipsoid({2.0, 1.5, 1.0});
    const ConvexBody ball = ConvexBody::ball(3, 0.5);
    const ConvexBody total = ConvexBody::sum({inner, ball});
    CHECK(summand_condition(ball, total, rule).holds);
    // The full sum is never a summand of its own ball part.
    CHECK_FALSE(summand_condition(total, ball, rule).holds);
}

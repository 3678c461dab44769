#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "steiner/enclosing_ball.hpp"
#include "steiner/errors.hpp"

using namespace steiner;

namespace {

Vec v2(double x, double y) {
    Vec v(2);
    v << x, y;
    return v;
}

void check_covers(const EnclosingBall& ball, const std::vector<Vec>& pts) {
    for (const Vec& p : pts) CHECK((p - ball.center).norm() <= ball.radius + 1e-9);
}

} // namespace

TEST_CASE("trivial inputs") {
    CHECK_THROWS_AS(min_enclosing_ball({}), PreconditionError);

    const std::vector<Vec> one{v2(3.0, -1.0)};
    const EnclosingBall b1 = min_enclosing_ball(one);
    CHECK(b1.radius == 0.0);
    CHECK((b1.center - one[0]).norm() == 0.0);

    const std::vector<Vec> two{v2(0.0, 0.0), v2(2.0, 0.0)};
    const EnclosingBall b2 = min_enclosing_ball(two);
    CHECK(b2.radius == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(b2.center(0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(b2.center(1) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("obtuse triangle: diameter pair wins") {
    // The far pair spans the ball; the third point is inside it.
    const std::vector<Vec> pts{v2(0.0, 0.0), v2(4.0, 0.0), v2(2.0, 0.5)};
    const EnclosingBall b = min_enclosing_ball(pts);
    CHECK(b.radius == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(b.center(0) == doctest::Approx(2.0).epsilon(1e-12));
    check_covers(b, pts);
}

TEST_CASE("acute triangle: circumcircle") {
    // Equilateral triangle with side 2: circumradius 2/sqrt(3).
    const double h = std::sqrt(3.0);
    const std::vector<Vec> pts{v2(-1.0, 0.0), v2(1.0, 0.0), v2(0.0, h)};
    const EnclosingBall b = min_enclosing_ball(pts);
    CHECK(b.radius == doctest::Approx(2.0 / h).epsilon(1e-12));
    CHECK(b.center(0) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(b.center(1) == doctest::Approx(1.0 / h).epsilon(1e-12));
    CHECK(b.support_size == 3);
}

TEST_CASE("duplicated and collinear points") {
    std::vector<Vec> pts;
    for (int i = 0; i <= 10; ++i) pts.push_back(v2(0.3 * i, 0.4 * i));
    pts.push_back(pts[4]);
    pts.push_back(pts[4]);
    const EnclosingBall b = min_enclosing_ball(pts);
    CHECK(b.radius == doctest::Approx(0.25 * 10.0).epsilon(1e-10)); // half of |(3,4)| = 5/2
    check_covers(b, pts);
}

TEST_CASE("points on a known sphere in higher dimensions") {
    std::mt19937_64 rng(55);
    std::normal_distribution<double> gauss;
    for (int dim = 3; dim <= 6; ++dim) {
        Vec center(dim);
        for (int k = 0; k < dim; ++k) center(k) = 0.1 * (k + 1);
        std::vector<Vec> pts;
        for (int i = 0; i < 120; ++i) {
            Vec u(dim);
            for (int k = 0; k < dim; ++k) u(k) = gauss(rng);
            u *= (i % 3 == 0 ? 1.0 : 0.2 + 0.5 * (i % 7) / 7.0) / u.norm();
            pts.push_back(center + u); // on or inside the unit sphere
        }
        const EnclosingBall b = min_enclosing_ball(pts);
        CHECK(b.radius <= 1.0 + 1e-9);
        CHECK(b.radius >= 0.99); // every third point sits on the sphere
        check_covers(b, pts);
    }
}

TEST_CASE("random clouds agree with brute force") {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    for (int rep = 0; rep < 30; ++rep) {
        const int dim = 2 + static_cast<int>(rng() % 3u);
        const int n = 4 + static_cast<int>(rng() % 6u);
        std::vector<Vec> pts;
        for (int i = 0; i < n; ++i) {
            Vec p(dim);
            for (int k = 0; k < dim; ++k) p(k) = uni(rng);
            pts.push_back(p);
        }
        const EnclosingBall got = min_enclosing_ball(pts);
        const oracle::RefBall want = oracle::brute_force_meb(pts);
        CHECK(got.radius == doctest::Approx(want.radius).epsilon(1e-9));
        CHECK((got.center - want.center).norm() <= 1e-7 * (1.0 + want.radius));
        check_covers(got, pts);
    }
}

TEST_CASE("results are deterministic") {
    std::mt19937_64 rng(88);
    std::uniform_real_distribution<double> uni(-2.0, 2.0);
    std::vector<Vec> pts;
    for (int i = 0; i < 200; ++i) {
        Vec p(4);
        for (int k = 0; k < 4; ++k) p(k) = uni(rng);
        pts.push_back(p);
    }
    const EnclosingBall a = min_enclosing_ball(pts);
    const EnclosingBall b = min_enclosing_ball(pts);
    CHECK(a.radius == b.radius);
    CHECK((a.center - b.center).cwiseAbs().maxCoeff() == 0.0);
}

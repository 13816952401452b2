#include <doctest.h>

#include <cmath>

#include "hypdisk/circles.hpp"
#include "hypdisk/sampling.hpp"
#include "test_helpers.hpp"

using namespace hypdisk;


TEST_CASE("hyperbolic_disk_to_euclidean") {
    const auto c0 = hyperbolic_disk_to_euclidean({PoincarePoint(0, 0), std::log(3.0)});
    CHECK(std::abs(c0.center) < 1e-14);
    CHECK(c0.radius == doctest::Approx(0.5).epsilon(1e-12));

    const double r = 0.7;
    const auto c1 = hyperbolic_disk_to_euclidean({PoincarePoint(0, 0), r});
    CHECK(c1.radius == doctest::Approx(std::tanh(r / 2)).epsilon(1e-12));

    // Every boundary point of the image circle is at hyperbolic distance
    // exactly the radius from the hyperbolic center.
    const HyperbolicDisk d{PoincarePoint(0.5, 0), std::log(3.0)};
    const auto ec = hyperbolic_disk_to_euclidean(d);
    for (int k = 0; k < 32; ++k) {
        const complex z = ec.center + std::polar(ec.radius, k * M_PI / 16.0);
        CHECK(std::abs(hyp_distance(PoincarePoint(z), d.center) - d.radius) < 1e-10);
    }
}

TEST_CASE("horodisk_from_euclidean") {
    const Horodisk h1 = horodisk_from_euclidean(complex(2.0 / 3, 0), 1.0 / 3);
    CHECK(h1.base.theta == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(h1.size == doctest::Approx(1.0).epsilon(1e-12));

    const Horodisk h2 = horodisk_from_euclidean(complex(0, 0.5), 0.5);
    CHECK(h2.base.theta == doctest::Approx(M_PI / 2).epsilon(1e-12));
    CHECK(h2.size == doctest::Approx(2.0).epsilon(1e-12));

    CHECK_THROWS_AS(horodisk_from_euclidean(complex(0.5, 0), 0.4), NotAHorodisk);
}

TEST_CASE("horodisk Euclidean form round-trips through the size coordinate") {
    Rng rng(3);
    std::uniform_real_distribution<double> angle(0.0, 2 * M_PI);
    for (int i = 0; i < 200; ++i) {
        const Horodisk h(IdealPoint(angle(rng)), std::exp(angle(rng) - M_PI));
        // Internally tangent to the unit circle at the base point.
        CHECK(std::abs(std::abs(h.euclidean_center()) + h.euclidean_radius() - 1.0) < 1e-12);
        const Horodisk back = horodisk_from_euclidean(h.euclidean_center(), h.euclidean_radius());
        CHECK(std::abs(back.size - h.size) < 1e-10 * h.size);
    }
}

TEST_CASE("are_tangent against the Euclidean oracle") {
    const Horodisk a(IdealPoint(0), 2), b(IdealPoint(M_PI), 2);
    CHECK(are_tangent(a, b, 1e-9));

    const Horodisk c(IdealPoint(0), 1), d(IdealPoint(M_PI / 2), 2);
    CHECK(are_tangent(c, d, 1e-9));
    // Euclidean check: centers (2/3, 0) and (0, 1/2), radii 1/3 and 1/2.
    CHECK(std::abs(std::abs(c.euclidean_center() - d.euclidean_center()) -
                   (c.euclidean_radius() + d.euclidean_radius())) < 1e-12);

    const Horodisk e(IdealPoint(M_PI / 2), 1);
    CHECK_FALSE(are_tangent(c, e, 1e-9));

    CHECK_THROWS_AS(are_tangent(c, Horodisk(IdealPoint(0), 3), 1e-9), SameBasePoint);
}

TEST_CASE("size-product law matches Euclidean tangency on random pairs") {
    Rng rng(5);
    std::uniform_real_distribution<double> angle(0.0, 2 * M_PI);
    std::uniform_real_distribution<double> logs(-1.5, 1.5);
    for (int i = 0; i < 500; ++i) {
        const double t1 = angle(rng);
        double t2 = angle(rng);
        if (std::abs(std::remainder(t1 - t2, 2 * M_PI)) < 1e-3) continue;
        const Horodisk h1(IdealPoint(t1), std::exp(logs(rng)));
        const Horodisk h2(IdealPoint(t2), std::exp(logs(rng)));
        const double algebraic = std::norm(h1.base.unit() - h2.base.unit()) - h1.size * h2.size;
        const double euclidean = std::abs(h1.euclidean_center() - h2.euclidean_center()) -
                                 (h1.euclidean_radius() + h2.euclidean_radius());
        if (std::abs(algebraic) > 1e-9 && std::abs(euclidean) > 1e-9) {
            CHECK((algebraic > 0) == (euclidean > 0));
        }
    }
}

TEST_CASE("clipped_length_ideal") {
    CHECK(clipped_length_ideal(IdealPoint(0), 1, IdealPoint(M_PI), 1) ==
          doctest::Approx(std::log(4.0)).epsilon(1e-12));
    CHECK(std::abs(clipped_length_ideal(IdealPoint(0), 2, IdealPoint(M_PI), 2)) < 1e-12);
    CHECK(std::abs(clipped_length_ideal(IdealPoint(0), 1, IdealPoint(M_PI / 2), 2)) < 1e-12);
    CHECK_THROWS_AS(clipped_length_ideal(IdealPoint(0), 1, IdealPoint(0), 1), SameBasePoint);
}

TEST_CASE("clipped_length_mixed") {
    CHECK(std::abs(clipped_length_mixed(PoincarePoint(0, 0), IdealPoint(0), 2)) < 1e-12);
    CHECK(clipped_length_mixed(PoincarePoint(0, 0), IdealPoint(0), 1) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK(clipped_length_mixed(PoincarePoint(0.5, 0), IdealPoint(M_PI), 1) ==
          doctest::Approx(std::log(6.0)).epsilon(1e-12));
}

TEST_CASE("clipped_length_ideal matches the geometric clipping oracle") {
    Rng rng(7);
    std::uniform_real_distribution<double> angle(0.0, 2 * M_PI);
    std::uniform_real_distribution<double> logs(-1.0, 0.3);
    int checked = 0;
    while (checked < 200) {
        const double t1 = angle(rng);
        const double t2 = angle(rng);
        if (std::abs(std::remainder(t1 - t2, 2 * M_PI)) < 0.1) continue;
        const Horodisk h1(IdealPoint(t1), std::exp(logs(rng)));
        const Horodisk h2(IdealPoint(t2), std::exp(logs(rng)));
        const double closed = clipped_length_ideal(h1.base, h1.size, h2.base, h2.size);
        if (closed <= 1e-3) continue; // oracle needs disjoint horodisks
        const Geodesic g = geodesic_from_ideal(h1.base, h2.base);
        // The carrier meets each horocircle at the base point and at the
        // clipping point; discard the base point.
        auto clip_point = [&](const Horodisk& h) {
            const auto hits =
                testutil::carrier_circle(g, h.euclidean_center(), h.euclidean_radius());
            REQUIRE(hits.size() == 2);
            return std::abs(hits[0] - h.base.unit()) > std::abs(hits[1] - h.base.unit())
                       ? hits[0]
                       : hits[1];
        };
        const PoincarePoint p1(clip_point(h1));
        const PoincarePoint p2(clip_point(h2));
        CHECK(std::abs(hyp_distance(p1, p2) - closed) < 1e-9);
        ++checked;
    }
}

TEST_CASE("tangency is equivalent to zero clipped length") {
    Rng rng(11);
    std::uniform_real_distribution<double> angle(0.0, 2 * M_PI);
    std::uniform_real_distribution<double> logs(-1.5, 1.5);
    for (int i = 0; i < 300; ++i) {
        const double t1 = angle(rng);
        const double t2 = angle(rng);
        if (std::abs(std::remainder(t1 - t2, 2 * M_PI)) < 1e-2) continue;
        const double s1 = std::exp(logs(rng));
        // Choose s2 to force tangency, then perturb.
        const double chord2 = std::norm(std::polar(1.0, t1) - std::polar(1.0, t2));
        const Horodisk h1(IdealPoint(t1), s1);
        const Horodisk tangent(IdealPoint(t2), chord2 / s1);
        CHECK(are_tangent(h1, tangent, 1e-9));
        CHECK(std::abs(clipped_length_ideal(h1.base, h1.size, tangent.base, tangent.size)) <
              1e-10);
        const Horodisk off(IdealPoint(t2), 1.1 * chord2 / s1);
        CHECK_FALSE(are_tangent(h1, off, 1e-9));
        CHECK(std::abs(clipped_length_ideal(h1.base, h1.size, off.base, off.size)) > 1e-10);
    }
}

TEST_CASE("clipped lengths are isometry covariant") {
    Rng rng(13);
    std::uniform_real_distribution<double> angle(0.0, 2 * M_PI);
    std::uniform_real_distribution<double> logs(-1.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const double t1 = angle(rng);
        const double t2 = angle(rng);
        if (std::abs(std::remainder(t1 - t2, 2 * M_PI)) < 1e-2) continue;
        const Horodisk h1(IdealPoint(t1), std::exp(logs(rng)));
        const Horodisk h2(IdealPoint(t2), std::exp(logs(rng)));
        const MobiusTransform t = random_disk_isometry(rng);
        // Transport each horodisk as a Euclidean circle and re-measure.
        auto transport = [&](const Horodisk& h) {
            const auto [c, r] = testutil::map_circle(t, h.euclidean_center(), h.euclidean_radius());
            return horodisk_from_euclidean(c, r);
        };
        const Horodisk g1 = transport(h1);
        const Horodisk g2 = transport(h2);
        CHECK(std::abs(clipped_length_ideal(g1.base, g1.size, g2.base, g2.size) -
                       clipped_length_ideal(h1.base, h1.size, h2.base, h2.size)) < 1e-9);

        const PoincarePoint p(random_disk_point(rng));
        const PoincarePoint tp(t.apply(p.z()));
        CHECK(std::abs(clipped_length_mixed(tp, g1.base, g1.size) -
                       clipped_length_mixed(p, h1.base, h1.size)) < 1e-9);
    }
}

TEST_CASE("semi_ideal_A") {
    const SemiIdealTriangle flat(IdealPoint(0), IdealPoint(M_PI), PoincarePoint(0, 0));
    CHECK(std::abs(semi_ideal_A(flat, 2, 2)) < 1e-12);

    const SemiIdealTriangle v(IdealPoint(0), IdealPoint(M_PI), PoincarePoint(0, 0.5));
    const double expected = 2.0 * std::log(1.25 / 0.75);
    CHECK(semi_ideal_A(v, 2, 2) == doctest::Approx(expected).epsilon(1e-12));
    // Independent of the horodisk sizes.
    CHECK(semi_ideal_A(v, 1, 8) == doctest::Approx(expected).epsilon(1e-12));

    Rng rng(17);
    std::uniform_real_distribution<double> logs(-2.0, 2.0);
    double lo = 1e300, hi = -1e300;
    for (int i = 0; i < 50; ++i) {
        const double val = semi_ideal_A(v, std::exp(logs(rng)), std::exp(logs(rng)));
        lo = std::min(lo, val);
        hi = std::max(hi, val);
    }
    CHECK(hi - lo < 1e-10);
}

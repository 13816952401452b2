#include "hypdisk/sampling.hpp"

#include <algorithm>
#include <cmath>

namespace hypdisk {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kMinGap = 1e-3;

double cyclic_gap(double a, double b) {
    double d = std::fmod(b - a, kTwoPi);
    if (d <= 0) d += kTwoPi;
    return d;
}
} // namespace

std::complex<double> random_disk_point(Rng& rng, double rmax) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double r = rmax * std::sqrt(unit(rng));
    const double phi = kTwoPi * unit(rng);
    return std::polar(r, phi);
}

MobiusTransform random_disk_isometry(Rng& rng, double rmax) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double phi = kTwoPi * unit(rng);
    return compose(rotation(phi), isometry_to_zero(random_disk_point(rng, rmax)));
}

std::array<double, 6> random_hexagon_angles(Rng& rng) {
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    for (;;) {
        std::array<double, 6> t;
        for (double& x : t) x = angle(rng);
        std::sort(t.begin(), t.end());
        bool ok = true;
        for (int k = 0; k < 6; ++k) {
            if (cyclic_gap(t[k], t[(k + 1) % 6]) <= kMinGap) ok = false;
        }
        if (ok) return t;
    }
}

IdealHexagon random_hexagon(Rng& rng) {
    const auto t = random_hexagon_angles(rng);
    std::array<IdealPoint, 6> v;
    for (int k = 0; k < 6; ++k) v[k] = IdealPoint(t[k]);
    return IdealHexagon(v);
}

IdealHexagon random_symmetric_hexagon(Rng& rng) {
    std::uniform_real_distribution<double> half(0.0, M_PI);
    std::array<double, 3> t;
    for (;;) {
        for (double& x : t) x = half(rng);
        std::sort(t.begin(), t.end());
        if (t[1] - t[0] > kMinGap && t[2] - t[1] > kMinGap && t[2] - t[0] < M_PI - kMinGap) {
            break;
        }
    }
    const MobiusTransform push = random_disk_isometry(rng);
    std::array<IdealPoint, 6> v;
    for (int k = 0; k < 6; ++k) {
        const double theta = k < 3 ? t[k] : t[k - 3] + M_PI;
        const auto image = push.apply(std::polar(1.0, theta));
        v[k] = IdealPoint(std::arg(image));
    }
    return IdealHexagon(v);
}

SizeVector random_sizes(Rng& rng, double scale) {
    std::uniform_real_distribution<double> expo(-std::log(scale), std::log(scale));
    SizeVector s;
    for (double& x : s) x = std::exp(expo(rng));
    return s;
}

CircleChain random_chain(Rng& rng) {
    const auto t = random_hexagon_angles(rng);
    std::uniform_real_distribution<double> expo(-std::log(4.0), std::log(4.0));
    return build_tangent_chain(t, std::exp(expo(rng)));
}

} // namespace hypdisk

#pragma once

#include <complex>

#include "hypdisk/errors.hpp"

namespace hypdisk {

using complex = std::complex<double>;

inline constexpr double kEpsDegenerate = 1e-12;

// T(z) = (az + b) / (cz + d), stored with ad - bc = 1.
// Two normalized coefficient tuples +-(a,b,c,d) denote the same map.
class MobiusTransform {
public:
    MobiusTransform() : a_(1), b_(0), c_(0), d_(1) {}
    MobiusTransform(complex a, complex b, complex c, complex d);

    complex a() const { return a_; }
    complex b() const { return b_; }
    complex c() const { return c_; }
    complex d() const { return d_; }

    complex apply(complex z) const;
    MobiusTransform inverse() const;

    static MobiusTransform identity() { return MobiusTransform(); }

private:
    complex a_, b_, c_, d_;
};

MobiusTransform compose(const MobiusTransform& t1, const MobiusTransform& t2);

// Equality up to the +- normalization ambiguity.
bool approx_equal(const MobiusTransform& t1, const MobiusTransform& t2, double tol = 1e-12);

// True iff T maps the open unit disk bijectively to itself. Decided from the
// normalized coefficients: disk automorphisms satisfy d = conj(a), c = conj(b)
// up to the global sign.
bool is_disk_isometry(const MobiusTransform& t, double tol);

// The involution T(z) = (z - p) / (conj(p) z - 1); swaps p and 0.
MobiusTransform isometry_to_zero(complex p);

// z -> e^{i theta} z.
MobiusTransform rotation(double theta);

// Order-two isometry fixing p, conjugate to z -> -z.
MobiusTransform point_reflection(complex p);

} // namespace hypdisk

#pragma once

// Rational unknots in L(p,q): the explicit p-disk bounded by a principal
// circle, monodromy and self-linking (numerically and by formula), torus
// slope intersections and the lens space classification arithmetic.

#include "reebkit/geometry.hpp"

#include <vector>

namespace reebkit {

/// Order p, monodromy class in Z_p and self-linking of a rational unknot.
struct KnotData {
    int p = 1;
    int monodromy = 0;
    int sl = 0;

    /// Throws PreconditionError unless gcd(monodromy, p) = 1 (p > 1) and p | sl.
    void validate() const;
};

/// Which principal circle bounds the disk: Z is {w = 0} (the binding K),
/// W is {z = 0} (K').
enum class DiskAxis { Z, W };

/// The p-disk re^{i theta} -> Pi(f(r) e^{i theta}, sqrt(1 - f(r)^2)) with
/// f(r) = r near 0, f(r) = sin(pi r / 2) near 1 and a cubic smoothstep
/// blend on [blend_lo, blend_hi]. For axis W the two factors are swapped.
class PDisk {
public:
    explicit PDisk(LensParams lens, DiskAxis axis = DiskAxis::Z, double blend_lo = 0.2, double blend_hi = 0.8);

    const LensParams& lens() const { return lens_; }
    DiskAxis axis() const { return axis_; }
    double blend_lo() const { return lo_; }
    double blend_hi() const { return hi_; }

    double profile(double r) const;
    double profile_derivative(double r) const;
    /// r with profile(r) = f, by bisection.
    double profile_inverse(double f) const;

    /// Lift to S^3 of the disk point at polar coordinates (r, theta).
    Point4 point(double r, double theta) const;
    Vec4 d_r(double r, double theta) const;
    Vec4 d_theta(double r, double theta) const;

    /// Polar coordinates of a lifted point lying on this disk (no deck action applied).
    std::pair<double, double> coordinates(const Point4& pt) const;

private:
    LensParams lens_;
    DiskAxis axis_;
    double lo_, hi_;
};

struct DiskPoint {
    Point4 lift;
    /// Deck-orbit representative: the image whose binding-plane argument lies in [0, 2 pi / p).
    Point4 canonical;
};

DiskPoint pdisk_point(const PDisk& disk, double r, double theta);

/// w mod p in {0, ..., p-1}.
int monodromy_from_winding(int p, int w);
/// (-q) mod p.
int lens_binding_monodromy(const LensParams& lens);
/// p * wind.
int self_linking_from_winding(int p, int wind);

/// Winding of the global section W(z,w) = (-conj w, conj z) against the
/// radial derivative of the disk along the collar r = 1 - collar, times p.
int binding_sl_numeric(const PDisk& disk, int samples = 4096, double collar = 1e-3);
/// Winding alone (expected -1).
int binding_sl_winding(const PDisk& disk, int samples = 4096, double collar = 1e-3);

/// Self-linking as the signed count of intersections of the push-off of the
/// binding along W with the lifted page set, oriented by lambda ^ dlambda.
int binding_sl_intersection(const PDisk& disk, double push = 1e-3, int samples = 8192);

/// Winding of the collar of the disk in the Z_p-invariant tubular coordinate
/// of the binding, optionally in a frame twisted `frame_shift` times per
/// traversal of the binding.
int binding_collar_winding(const PDisk& disk, int frame_shift = 0, int samples = 4096, double collar = 1e-3);
/// Monodromy class of the collar winding.
int binding_monodromy_numeric(const PDisk& disk, int frame_shift = 0);

/// |p' q - p q'|.
long long slope_intersection(long long p, long long q, long long p2, long long q2);

bool lens_homeomorphic(int p, int q1, int q2);
bool lens_homotopy_equivalent(int p, int q1, int q2);

/// Residues q with 1 <= q < p and gcd(p, q) = 1 ({1} for p = 1).
std::vector<int> coprime_residues(int p);

/// Classification matrices over coprime residues.
struct LensTables {
    int p = 0;
    std::vector<int> residues;
    std::vector<std::vector<bool>> homeomorphic;
    std::vector<std::vector<bool>> homotopy_equivalent;
    /// Homeomorphism classes as lists of residues.
    std::vector<std::vector<int>> classes;
};

LensTables lens_tables(int p);

} // namespace reebkit

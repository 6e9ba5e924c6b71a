#pragma once

// Closed Reeb orbits of the toric ellipsoid family, the linearized
// transverse flow along them in a chosen trivialization of the contact
// plane, and their Conley-Zehnder indices and rotation numbers.

#include "reebkit/geometry.hpp"
#include "reebkit/index.hpp"
#include "reebkit/knots.hpp"

#include <functional>
#include <string>
#include <vector>

namespace reebkit {

/// K is the z-circle {w = 0}, KPrime the w-circle {z = 0}; Other marks a
/// hand-built orbit (e.g. a Hopf fibre of the round form).
enum class Principal { K, KPrime, Other };

std::string principal_name(Principal which);

struct ClosedOrbit {
    ContactSystem system;
    Point4 anchor;
    double prime_period = 0;
    int multiplicity = 1;
    /// Deck element identifying flow(anchor, prime_period) with the anchor.
    int deck_power = 0;
    Principal which = Principal::Other;

    double period() const { return multiplicity * prime_period; }
    /// Deck element closing the full multiplicity-fold orbit, in {0..p-1}.
    int total_deck_power() const;
    /// Whether the orbit lifts to a closed loop in S^3 (contractible in the quotient).
    bool closes_on_lift() const { return total_deck_power() == 0; }
    ClosedOrbit iterate(int k) const;
    /// flow(anchor, prime_period) = deck_action(deck_power, anchor) within tol.
    bool closes(double tol = 1e-8) const;
    /// Point at time t along the lift.
    Point4 at(double t) const { return flow(system, anchor, t); }
};

/// Prime principal orbit of an ellipsoid system (quotient periods divided by p).
ClosedOrbit principal_orbit(const ContactSystem& sys, Principal which);

/// All iterates of K and K' with period <= C, sorted by period (ties: K first).
/// Throws DegenerateError for the round family.
std::vector<ClosedOrbit> catalog(const ContactSystem& sys, double C);

/// Trivialization of the contact plane along an orbit: a section X of xi,
/// normalized to e1 = sqrt(H) X / |X| and e2 = i e1 so that dlambda(e1,e2) = 1.
class TransverseFrame {
public:
    using Section = std::function<Vec4(const Point4&)>;

    TransverseFrame(Section section, FrameClass cls) : section_(std::move(section)), cls_(cls) {}

    /// The global section W(z,w) = (-conj w, conj z); extends over every
    /// capping disk, so it represents the disk class (offset 0).
    static TransverseFrame disk(const ContactSystem& sys);
    /// A constant ambient vector projected to xi (must not become tangent to the Reeb line).
    static TransverseFrame constant(const ContactSystem& sys, const Vec4& c, FrameClass cls = {});
    /// The radial derivative of a p-disk at its boundary, projected to xi;
    /// valid along the binding of `disk`. Its class relative to the disk
    /// class is unknown a priori and left at offset 0; see frame_offset.
    static TransverseFrame pdisk_normal(const ContactSystem& sys, const PDisk& disk);
    /// The frame twisted m times per unit orbit time s in [0,1]: X -> e^{2 pi i m s} X.
    TransverseFrame shifted(int m) const;

    const FrameClass& frame_class() const { return cls_; }

    /// (e1, e2) at pt, with s the normalized orbit time (used only by shifted frames).
    std::pair<Vec4, Vec4> at(const ContactSystem& sys, const Point4& pt, double s) const;
    /// Coordinates (dlambda(v, e2), dlambda(e1, v)) of v in the frame.
    Vec2 coordinates(const ContactSystem& sys, const Point4& pt, double s, const Vec4& v) const;

private:
    TransverseFrame(Section section, FrameClass cls, int twist)
        : section_(std::move(section)), cls_(cls), twist_(twist) {}

    Section section_;
    FrameClass cls_;
    int twist_ = 0;
};

/// Projection of v onto xi = ker lambda0 (orthogonal complement of {x, ix}).
Vec4 project_to_xi(const Point4& pt, const Vec4& v);

struct LinearizationOptions {
    /// Grid intervals per unit of (lifted) z- or w-turn; the path has
    /// samples_per_turn * ceil(turns) intervals.
    int samples_per_turn = 1024;
    double rtol = 1e-11;
    double atol = 1e-12;
    double det_tol = 1e-6;
};

/// t -> Psi_t o d phi_{T t} o Psi_0^{-1} on [0,1] over the full multiplicity
/// of the orbit, by Dormand-Prince integration of the point together with
/// two variational vectors. Requires an orbit that closes on the lift.
SymplecticPath linearized_path(const ClosedOrbit& orbit, const TransverseFrame& frame,
                               const LinearizationOptions& opt = {});

/// S(t) = -J0 phi'(t) phi(t)^{-1} of the linearized path.
SymmetricLoop asymptotic_loop(const ClosedOrbit& orbit, const TransverseFrame& frame,
                              const LinearizationOptions& opt = {});

/// wind(frame, reference) along the orbit: winding of frame's e1 in the
/// coordinates of `reference`, sampled on the lift. Indices satisfy
/// mu(reference) = mu(frame) + 2 wind(frame, reference).
int frame_offset(const ClosedOrbit& orbit, const TransverseFrame& frame, const TransverseFrame& reference,
                 int samples = 4096);

enum class FramingRoute { DiskSection, PDiskNormal };

struct OrbitIndexOptions {
    FramingRoute route = FramingRoute::DiskSection;
    bool spectral = true;
    LinearizationOptions linearization;
    SpectralOptions spectral_options;
};

struct OrbitIndex {
    int k = 1;
    double period = 0;
    /// Geometric index in the disk class.
    int mu = 0;
    /// Spectral index of the extracted asymptotic loop (equals mu unless degenerate).
    int mu_spectral = 0;
    double rho = 0;
    bool degenerate = false;
    /// wind(beta_u, beta_disk) applied for the p-disk route (0 otherwise).
    int frame_shift = 0;
};

/// Index and rotation number of the k-th iterate of `orbit` in the capping
/// disk class. Quotient orbits are supported when the iterate closes on the
/// lift; otherwise UnsupportedError.
OrbitIndex orbit_index(const ClosedOrbit& orbit, int k, const OrbitIndexOptions& opt = {});

/// Closed-form rotation number of the k-th iterate of a principal orbit of
/// an ellipsoid in the disk class: turns of the transverse rotation plus one
/// framing turn per lifted circle.
double principal_rho_closed_form(const ClosedOrbit& orbit, int k);

} // namespace reebkit

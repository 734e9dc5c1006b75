// Spin observables t.W restricted to fixed momentum, polarization frames
// (momentum-indexed spin bases), reduced 2x2 density matrices, von Neumann
// entropy, the gauge shift t -> t + theta P, boost-adapted frames built on
// null eigenvectors, and the effective spin channel of a boost.

#ifndef RELSPIN_POLARIZATION_HPP
#define RELSPIN_POLARIZATION_HPP

#include "relspin/minkowski.hpp"
#include "relspin/wavepacket.hpp"

#include <vector>

namespace relspin {

using ReducedDensity = Eigen::Matrix2cd;

/// A rule assigning an orthonormal spin basis to every momentum on a mass
/// shell. All built-in frames share one phase convention: with (theta, phi)
/// the polar angles of the frame's axis b-hat,
///   u+ = (cos(th/2), e^{+i phi} sin(th/2)),
///   u- = (-e^{-i phi} sin(th/2), cos(th/2)),
/// singular at b-hat = -z (within angle 1e-6 of the pole).
class PolarizationFrame {
public:
    enum class Kind { Canonical, Helicity, PauliLubanski, Custom };

    /// Constant sigma_z basis; the frame of the momentum-blind reduction.
    static PolarizationFrame canonical();
    /// Eigenbasis of sigma.p-hat per momentum.
    static PolarizationFrame helicity();
    /// Eigenbasis of the spin observable t.W at each momentum.
    static PolarizationFrame pauli_lubanski(const FourVector& t);
    /// Arbitrary per-momentum unitary whose columns are the basis.
    static PolarizationFrame custom(SpinorRule basis);

    Kind kind() const { return kind_; }
    const FourVector& direction() const { return t_; }

private:
    PolarizationFrame(Kind kind, FourVector t, SpinorRule rule)
        : kind_(kind), t_(std::move(t)), rule_(std::move(rule)) {}

    Kind kind_;
    FourVector t_;
    SpinorRule rule_;

    friend SpinorMap frame_basis(const PolarizationFrame&, const MassiveMomentum&);
};

/// Spin-space axis of t.W at momentum q: b = -spatial(L(p)^-1 t).
/// The observable is (m/2) sigma.b; b = 0 exactly when t is proportional to
/// the four-momentum.
Vec3 pl_axis(const FourVector& t, const MassiveMomentum& q);

/// The 2x2 Hermitian restriction of t.W at momentum q, eigenvalues
/// +- (m/2)|b|.
SpinorMap pl_matrix(const FourVector& t, const MassiveMomentum& q);

/// t' = t + theta P with theta = -(t.P)/m^2, so that t'.P = 0. Leaves
/// pl_matrix unchanged. Throws numerical_error when t' degenerates to zero
/// (t proportional to P).
FourVector gauge_shift(const FourVector& t, const MassiveMomentum& q);

/// Frame basis at momentum q, columns (u+, u-). Throws numerical_error on the
/// frame's singular set, naming the offending momentum.
SpinorMap frame_basis(const PolarizationFrame& frame, const MassiveMomentum& q);

/// rho_rs = sum_i w_i a_i(r) conj(a_i(s)), a_i = U(p_i)^dag chi_i.
/// The canonical frame reproduces the momentum-blind reduced density matrix.
ReducedDensity reduced_density(const WavePacketState& state,
                               const PolarizationFrame& frame);

/// Checks Hermiticity (1e-10), unit trace (1e-10) and spectrum in
/// [-1e-10, 1 + 1e-10]; throws numerical_error otherwise.
void validate_density(const ReducedDensity& rho);

/// Von Neumann entropy in bits. Eigenvalues are clamped to [0,1]; clamping
/// by more than 1e-8 is an error.
double entropy_bits(const ReducedDensity& rho);

/// trace(rho pi) for a projector pi (pi^2 = pi, pi^dag = pi within 1e-10).
double measure(const ReducedDensity& rho, const SpinorMap& projector);

/// The Pauli-Lubanski frame of the boost's null eigenvector whose spatial
/// part is anti-parallel to the boost axis, t = (1, -n) for a boost along n.
/// Ties (rotations) resolve to the same t by the deterministic ordering of
/// null_eigenvectors.
PolarizationFrame adapted_frame(const LorentzTransform& lambda);

/// Effective spin channel D(p) = U(Lambda p)^dag W(Lambda, p) U(p).
SpinorMap channel_matrix(const TransformPair& lambda, const PolarizationFrame& frame,
                         const MassiveMomentum& q);

struct ChannelDefect {
    double offdiag; // max |off-diagonal entry| over all D(p)
    double spread;  // max pairwise Frobenius distance after removing one
                    // global phase per matrix
};

/// Diagnostics of the momentum (in)dependence of D(p) over a set of momenta.
ChannelDefect channel_defect(const TransformPair& lambda, const PolarizationFrame& frame,
                             const std::vector<Vec3>& momenta, double mass);

} // namespace relspin

#endif

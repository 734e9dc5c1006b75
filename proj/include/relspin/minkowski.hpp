// Minkowski geometry and the spin-1/2 representation machinery: four-vectors,
// proper orthochronous Lorentz transforms in the 4x4 vector and 2x2 spinor
// pictures, canonical (rotationless) boosts, and Wigner rotations.
//
// Conventions, fixed once for the whole library:
//   metric (+,-,-,-), active transformations, natural units (hbar = c = 1),
//   component order (t, x, y, z), Pauli matrices in the standard basis.

#ifndef RELSPIN_MINKOWSKI_HPP
#define RELSPIN_MINKOWSKI_HPP

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace relspin {

using Complex = std::complex<double>;
using Vec3 = Eigen::Vector3d;
using FourVector = Eigen::Vector4d;       // (t, x, y, z)
using LorentzTransform = Eigen::Matrix4d; // acts actively on FourVectors
using SpinorMap = Eigen::Matrix2cd;       // SL(2,C) elements and spin operators

/// On-shell momentum of a massive particle. Energy is derived, never stored.
struct MassiveMomentum {
    Vec3 p;
    double m;

    MassiveMomentum(const Vec3& momentum, double mass);

    double energy() const { return std::sqrt(m * m + p.squaredNorm()); }
    FourVector four_momentum() const;
};

/// A Lorentz transform carried in both representations at once. The two parts
/// always describe the same group element: sl2c_to_lorentz(spinor) == vector.
struct TransformPair {
    LorentzTransform vector;
    SpinorMap spinor;
};

const SpinorMap& pauli_x();
const SpinorMap& pauli_y();
const SpinorMap& pauli_z();

/// sigma . v for a real 3-vector.
SpinorMap pauli_dot(const Vec3& v);

/// Metric contraction a0*b0 - a.b.
double minkowski_dot(const FourVector& a, const FourVector& b);

/// Pure boost of given rapidity along a unit axis.
/// Spinor part: cosh(xi/2) I + sinh(xi/2) sigma.n (Hermitian, det 1).
TransformPair boost(const Vec3& axis, double rapidity);

/// Rotation by angle about a unit axis.
/// Spinor part: cos(th/2) I - i sin(th/2) sigma.n (SU(2)).
TransformPair rotation(const Vec3& axis, double angle);

/// The 2-to-1 covering map: X = x0 I + x.sigma  ->  A X A^dag.
/// Requires |det A - 1| <= 1e-10.
LorentzTransform sl2c_to_lorentz(const SpinorMap& a);

/// Canonical rotationless boost L(p) taking (m,0,0,0) to (E,p).
/// Spinor part: (E + m + sigma.p) / sqrt(2m(E+m)), Hermitian positive.
TransformPair standard_boost(const MassiveMomentum& q);

/// Inverse group element (exact for proper transforms: g Lambda^T g).
TransformPair inverse(const TransformPair& t);

/// Composition: ab acts as "first b, then a".
TransformPair compose(const TransformPair& a, const TransformPair& b);

/// Transported on-shell momentum: spatial part of Lambda (E, p).
MassiveMomentum transform_momentum(const LorentzTransform& lambda,
                                   const MassiveMomentum& q);

/// Little-group element W = L(Lambda p)^-1 A L(p). SU(2) for massive momenta.
SpinorMap wigner_rotation(const TransformPair& lambda, const MassiveMomentum& q);

/// Rotation angle of an SU(2) element, insensitive to the double-cover sign:
/// Omega = 2 atan2(|vector part|, |scalar part|).
double rotation_angle(const SpinorMap& w);

/// Closed-form Wigner angle for a boost of rapidity xi applied to a particle
/// of momentum rapidity eta at angle theta to the boost axis:
///   tan(Omega/2) = sin th sinh(xi/2) sinh(eta/2)
///                  / (cosh(xi/2) cosh(eta/2) + cos th sinh(xi/2) sinh(eta/2)).
/// Independent of wigner_rotation; used as its test oracle.
double wigner_angle_oracle(double boost_rapidity, double particle_rapidity,
                           double angle);

struct NullEigenvector {
    FourVector direction; // normalized to t0 = 1
    double eigenvalue;    // > 0
};

/// Real null eigenvectors of a proper orthochronous transform, normalized to
/// t0 = 1 and sorted by (eigenvalue, spatial lexicographic order).
/// Throws numerical_error when Lambda is within 1e-12 of the identity
/// ("degenerate") or when no real null eigenvector exists.
std::vector<NullEigenvector> null_eigenvectors(const LorentzTransform& lambda);

} // namespace relspin

#endif

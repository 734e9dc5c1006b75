#include "relspin/minkowski.hpp"
#include "relspin/numerics.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <sstream>

namespace relspin {

namespace {

const Complex kI{0.0, 1.0};

Eigen::Matrix4d metric() {
    Eigen::Matrix4d g = Eigen::Matrix4d::Identity();
    g(1, 1) = g(2, 2) = g(3, 3) = -1.0;
    return g;
}

void require_unit_axis(const Vec3& axis, const char* who) {
    if (std::abs(axis.norm() - 1.0) > 1e-12) {
        std::ostringstream msg;
        msg << who << ": axis must be a unit vector (|axis| = " << axis.norm() << ")";
        throw std::invalid_argument(msg.str());
    }
}

SpinorMap standard_boost_spinor(const MassiveMomentum& q) {
    const double e = q.energy();
    const double scale = 1.0 / std::sqrt(2.0 * q.m * (e + q.m));
    return scale * ((e + q.m) * SpinorMap::Identity() + pauli_dot(q.p));
}

} // namespace

MassiveMomentum::MassiveMomentum(const Vec3& momentum, double mass)
    : p(momentum), m(mass) {
    if (!(m > 0.0) || !std::isfinite(m) || !p.allFinite()) {
        throw std::invalid_argument("MassiveMomentum: requires finite p and m > 0");
    }
}

FourVector MassiveMomentum::four_momentum() const {
    return FourVector(energy(), p.x(), p.y(), p.z());
}

const SpinorMap& pauli_x() {
    static const SpinorMap s = (SpinorMap() << 0, 1, 1, 0).finished();
    return s;
}

const SpinorMap& pauli_y() {
    static const SpinorMap s = (SpinorMap() << 0, -kI, kI, 0).finished();
    return s;
}

const SpinorMap& pauli_z() {
    static const SpinorMap s = (SpinorMap() << 1, 0, 0, -1).finished();
    return s;
}

SpinorMap pauli_dot(const Vec3& v) {
    SpinorMap s;
    s << Complex(v.z(), 0), Complex(v.x(), -v.y()),
         Complex(v.x(), v.y()), Complex(-v.z(), 0);
    return s;
}

double minkowski_dot(const FourVector& a, const FourVector& b) {
    return a(0) * b(0) - a(1) * b(1) - a(2) * b(2) - a(3) * b(3);
}

TransformPair boost(const Vec3& axis, double rapidity) {
    require_unit_axis(axis, "boost");
    const SpinorMap a = std::cosh(rapidity / 2) * SpinorMap::Identity()
                      + std::sinh(rapidity / 2) * pauli_dot(axis);
    return {sl2c_to_lorentz(a), a};
}

TransformPair rotation(const Vec3& axis, double angle) {
    require_unit_axis(axis, "rotation");
    const SpinorMap a = std::cos(angle / 2) * SpinorMap::Identity()
                      - kI * std::sin(angle / 2) * pauli_dot(axis);
    return {sl2c_to_lorentz(a), a};
}

LorentzTransform sl2c_to_lorentz(const SpinorMap& a) {
    if (std::abs(a.determinant() - Complex(1.0, 0.0)) > 1e-10) {
        throw std::invalid_argument("sl2c_to_lorentz: det A must be 1");
    }
    const SpinorMap sigma_mu[4] = {SpinorMap::Identity(), pauli_x(), pauli_y(), pauli_z()};
    LorentzTransform l;
    for (int nu = 0; nu < 4; ++nu) {
        const SpinorMap image = a * sigma_mu[nu] * a.adjoint();
        l(0, nu) = 0.5 * image.trace().real();
        for (int i = 1; i < 4; ++i) {
            l(i, nu) = 0.5 * (sigma_mu[i] * image).trace().real();
        }
    }
    return l;
}

TransformPair standard_boost(const MassiveMomentum& q) {
    const SpinorMap a = standard_boost_spinor(q);
    return {sl2c_to_lorentz(a), a};
}

TransformPair inverse(const TransformPair& t) {
    const Eigen::Matrix4d g = metric();
    // det 1: the spinor inverse is the adjugate.
    SpinorMap ainv;
    ainv << t.spinor(1, 1), -t.spinor(0, 1),
            -t.spinor(1, 0), t.spinor(0, 0);
    return {g * t.vector.transpose() * g, ainv};
}

TransformPair compose(const TransformPair& a, const TransformPair& b) {
    return {a.vector * b.vector, a.spinor * b.spinor};
}

MassiveMomentum transform_momentum(const LorentzTransform& lambda,
                                   const MassiveMomentum& q) {
    const FourVector image = lambda * q.four_momentum();
    return MassiveMomentum(image.tail<3>(), q.m);
}

SpinorMap wigner_rotation(const TransformPair& lambda, const MassiveMomentum& q) {
    const MassiveMomentum out = transform_momentum(lambda.vector, q);
    const SpinorMap l_out = standard_boost_spinor(out);
    // det-1 matrix: inverse by adjugate.
    SpinorMap l_out_inv;
    l_out_inv << l_out(1, 1), -l_out(0, 1),
                 -l_out(1, 0), l_out(0, 0);
    return l_out_inv * lambda.spinor * standard_boost_spinor(q);
}

double rotation_angle(const SpinorMap& w) {
    // W = a0 I - i (a . sigma) with a0^2 + |a|^2 = 1 for SU(2).
    const Complex a0 = 0.5 * w.trace();
    const Complex ax = 0.5 * (pauli_x() * w).trace() / -kI;
    const Complex ay = 0.5 * (pauli_y() * w).trace() / -kI;
    const Complex az = 0.5 * (pauli_z() * w).trace() / -kI;
    const double vec = std::sqrt(std::norm(ax) + std::norm(ay) + std::norm(az));
    return 2.0 * std::atan2(vec, std::abs(a0));
}

double wigner_angle_oracle(double boost_rapidity, double particle_rapidity,
                           double angle) {
    const double shx = std::sinh(boost_rapidity / 2);
    const double chx = std::cosh(boost_rapidity / 2);
    const double she = std::sinh(particle_rapidity / 2);
    const double che = std::cosh(particle_rapidity / 2);
    const double num = std::sin(angle) * shx * she;
    const double den = chx * che + std::cos(angle) * shx * she;
    return 2.0 * std::atan2(num, den);
}

namespace {

// Null directions t = a + s*b inside a real eigenspace span, from the
// quadratic (a+sb,a+sb) = 0. Degenerate eigenvalues of rotations carry their
// null directions inside a 2-dim span, so a plain eigenvector read-off is not
// enough.
void null_directions_in_span(const std::vector<FourVector>& basis,
                             std::vector<FourVector>& out) {
    if (basis.size() == 1) {
        out.push_back(basis[0]);
        return;
    }
    if (basis.size() != 2) {
        return; // 3+ dim real eigenspaces only arise next to the identity
    }
    const FourVector& a = basis[0];
    const FourVector& b = basis[1];
    const double aa = minkowski_dot(a, a);
    const double ab = minkowski_dot(a, b);
    const double bb = minkowski_dot(b, b);
    const double scale = std::max({std::abs(aa), std::abs(ab), std::abs(bb), 1e-300});
    if (std::abs(bb) < 1e-12 * scale) {
        out.push_back(b);
        if (std::abs(ab) > 1e-12 * scale) {
            out.push_back(a - (aa / (2.0 * ab)) * b);
        }
        return;
    }
    const double disc = ab * ab - aa * bb;
    if (disc < 0.0) {
        return; // spacelike span, no real null direction
    }
    const double root = std::sqrt(disc);
    out.push_back(a + ((-ab + root) / bb) * b);
    out.push_back(a + ((-ab - root) / bb) * b);
}

} // namespace

std::vector<NullEigenvector> null_eigenvectors(const LorentzTransform& lambda) {
    if ((lambda - LorentzTransform::Identity()).cwiseAbs().maxCoeff() < 1e-12) {
        throw numerical_error("null_eigenvectors: degenerate (transform is the identity)");
    }

    Eigen::EigenSolver<Eigen::Matrix4d> solver(lambda);
    const auto values = solver.eigenvalues();
    const auto vectors = solver.eigenvectors();

    // Cluster real eigenvalues, then search each eigenspace span.
    std::vector<int> real_idx;
    for (int i = 0; i < 4; ++i) {
        if (std::abs(values(i).imag()) < 1e-10) real_idx.push_back(i);
    }

    std::vector<NullEigenvector> found;
    std::vector<bool> used(real_idx.size(), false);
    for (std::size_t i = 0; i < real_idx.size(); ++i) {
        if (used[i]) continue;
        const double ev = values(real_idx[i]).real();
        std::vector<FourVector> basis;
        for (std::size_t j = i; j < real_idx.size(); ++j) {
            if (used[j]) continue;
            if (std::abs(values(real_idx[j]).real() - ev) < 1e-8 * std::max(1.0, std::abs(ev))) {
                used[j] = true;
                Eigen::Vector4cd col = vectors.col(real_idx[j]);
                // Rephase so the largest component is real, then drop the
                // imaginary noise.
                int argmax = 0;
                col.cwiseAbs().maxCoeff(&argmax);
                col *= std::abs(col(argmax)) / col(argmax);
                if (col.imag().cwiseAbs().maxCoeff() > 1e-10) continue;
                basis.push_back(col.real());
            }
        }
        std::vector<FourVector> candidates;
        null_directions_in_span(basis, candidates);
        for (const FourVector& t : candidates) {
            if (std::abs(t(0)) < 1e-10 * t.norm()) continue;
            FourVector tn = t / t(0);
            const double defect = std::abs(minkowski_dot(tn, tn));
            const double residual = (lambda * tn - ev * tn).cwiseAbs().maxCoeff();
            if (defect < 1e-10 && residual < 1e-10 && ev > 0.0) {
                found.push_back({tn, ev});
            }
        }
    }

    // Drop duplicates (a degenerate pair can yield the same direction twice).
    std::sort(found.begin(), found.end(), [](const NullEigenvector& a, const NullEigenvector& b) {
        if (std::abs(a.eigenvalue - b.eigenvalue) > 1e-8) return a.eigenvalue < b.eigenvalue;
        for (int k = 1; k < 4; ++k) {
            if (std::abs(a.direction(k) - b.direction(k)) > 1e-8) {
                return a.direction(k) < b.direction(k);
            }
        }
        return false;
    });
    found.erase(std::unique(found.begin(), found.end(),
                            [](const NullEigenvector& a, const NullEigenvector& b) {
                                return std::abs(a.eigenvalue - b.eigenvalue) < 1e-8 &&
                                       (a.direction - b.direction).cwiseAbs().maxCoeff() < 1e-8;
                            }),
                found.end());

    if (found.empty()) {
        throw numerical_error("null_eigenvectors: no real null eigenvector found");
    }
    return found;
}

} // namespace relspin

#include "relspin/polarization.hpp"
#include "relspin/numerics.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>

namespace relspin {

PolarizationFrame PolarizationFrame::canonical() {
    return {Kind::Canonical, FourVector::Zero(), nullptr};
}

PolarizationFrame PolarizationFrame::helicity() {
    return {Kind::Helicity, FourVector(1, 0, 0, 0), nullptr};
}

PolarizationFrame PolarizationFrame::pauli_lubanski(const FourVector& t) {
    if (t.cwiseAbs().maxCoeff() == 0.0) {
        throw std::invalid_argument("PolarizationFrame: t must be nonzero");
    }
    return {Kind::PauliLubanski, t, nullptr};
}

PolarizationFrame PolarizationFrame::custom(SpinorRule basis) {
    if (!basis) throw std::invalid_argument("PolarizationFrame: empty rule");
    return {Kind::Custom, FourVector::Zero(), std::move(basis)};
}

Vec3 pl_axis(const FourVector& t, const MassiveMomentum& q) {
    // spatial(L(p)^-1 t) = t_vec + p ((p.t_vec)/(E+m) - t0) / m, closed form
    // of the inverse canonical boost.
    const double e = q.energy();
    const Vec3 tv = t.tail<3>();
    const Vec3 spatial = tv + q.p * ((q.p.dot(tv) / (e + q.m) - t(0)) / q.m);
    return -spatial;
}

SpinorMap pl_matrix(const FourVector& t, const MassiveMomentum& q) {
    return 0.5 * q.m * pauli_dot(pl_axis(t, q));
}

FourVector gauge_shift(const FourVector& t, const MassiveMomentum& q) {
    const FourVector p4 = q.four_momentum();
    const double theta = -minkowski_dot(t, p4) / (q.m * q.m);
    const FourVector shifted = t + theta * p4;
    const double scale = t.cwiseAbs().maxCoeff() + std::abs(theta) * p4.cwiseAbs().maxCoeff();
    if (shifted.cwiseAbs().maxCoeff() <= 1e-12 * scale) {
        throw numerical_error("gauge_shift: degenerate, t is proportional to the four-momentum");
    }
    return shifted;
}

namespace {

// Half-angle basis for a unit axis. Columns (u+, u-).
SpinorMap half_angle_basis(const Vec3& bhat, const Vec3& at_momentum) {
    if (1.0 + bhat.z() < 0.5e-12) { // angle to the -z pole below 1e-6
        std::ostringstream msg;
        msg << "frame_basis: axis within 1e-6 of the singular pole -z at p = ("
            << at_momentum.transpose() << ")";
        throw numerical_error(msg.str());
    }
    const double c = std::sqrt(0.5 * (1.0 + bhat.z()));
    const double s = std::sqrt(std::max(0.0, 0.5 * (1.0 - bhat.z())));
    const double phi = std::atan2(bhat.y(), bhat.x());
    const Complex eip = std::polar(1.0, phi);
    SpinorMap u;
    u << Complex(c, 0), -std::conj(eip) * s,
         eip * s, Complex(c, 0);
    return u;
}

} // namespace

SpinorMap frame_basis(const PolarizationFrame& frame, const MassiveMomentum& q) {
    switch (frame.kind()) {
    case PolarizationFrame::Kind::Canonical:
        return SpinorMap::Identity();
    case PolarizationFrame::Kind::Helicity: {
        const double n = q.p.norm();
        if (n < 1e-12 * q.m) {
            std::ostringstream msg;
            msg << "frame_basis: helicity undefined at near-zero momentum ("
                << q.p.transpose() << ")";
            throw numerical_error(msg.str());
        }
        return half_angle_basis(q.p / n, q.p);
    }
    case PolarizationFrame::Kind::PauliLubanski: {
        const Vec3 b = pl_axis(frame.direction(), q);
        const double n = b.norm();
        // |b| = 0 iff t ~ P; threshold scaled by the boost amplification.
        const double scale =
            frame.direction().cwiseAbs().maxCoeff() * (q.energy() + q.p.norm()) / q.m;
        if (n <= 1e-12 * scale) {
            std::ostringstream msg;
            msg << "frame_basis: t.W degenerate (t ~ P) at p = (" << q.p.transpose() << ")";
            throw numerical_error(msg.str());
        }
        return half_angle_basis(b / n, q.p);
    }
    case PolarizationFrame::Kind::Custom: {
        const SpinorMap u = frame.rule_(q.p);
        if ((u.adjoint() * u - SpinorMap::Identity()).cwiseAbs().maxCoeff() > 1e-10) {
            std::ostringstream msg;
            msg << "frame_basis: custom rule not unitary at p = (" << q.p.transpose() << ")";
            throw numerical_error(msg.str());
        }
        return u;
    }
    }
    throw std::logic_error("frame_basis: unreachable");
}

ReducedDensity reduced_density(const WavePacketState& state,
                               const PolarizationFrame& frame) {
    std::vector<Spinor> components(state.samples.size());
    numerics::parallel_for(state.samples.size(), [&](std::size_t i) {
        const SpinorSample& s = state.samples[i];
        const SpinorMap u = frame_basis(frame, MassiveMomentum(s.p, state.mass));
        components[i] = u.adjoint() * s.chi;
    });
    numerics::KahanSum<ReducedDensity> acc;
    acc.sum.setZero();
    acc.carry.setZero();
    for (std::size_t i = 0; i < components.size(); ++i) {
        acc.add(state.samples[i].w * (components[i] * components[i].adjoint()));
    }
    validate_density(acc.sum);
    return acc.sum;
}

void validate_density(const ReducedDensity& rho) {
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
        throw numerical_error("density matrix is not Hermitian");
    }
    if (std::abs(rho.trace().real() - 1.0) > 1e-10 || std::abs(rho.trace().imag()) > 1e-10) {
        throw numerical_error("density matrix trace is not 1");
    }
    Eigen::SelfAdjointEigenSolver<ReducedDensity> solver(0.5 * (rho + rho.adjoint()));
    for (int i = 0; i < 2; ++i) {
        const double ev = solver.eigenvalues()(i);
        if (ev < -1e-10 || ev > 1.0 + 1e-10) {
            throw numerical_error("density matrix spectrum outside [0, 1]");
        }
    }
}

double entropy_bits(const ReducedDensity& rho) {
    Eigen::SelfAdjointEigenSolver<ReducedDensity> solver(0.5 * (rho + rho.adjoint()));
    double s = 0.0;
    for (int i = 0; i < 2; ++i) {
        const double raw = solver.eigenvalues()(i);
        if (raw < -1e-8 || raw > 1.0 + 1e-8) {
            std::ostringstream msg;
            msg << "entropy: eigenvalue " << raw << " clamped beyond 1e-8";
            throw numerical_error(msg.str());
        }
        const double ev = std::min(1.0, std::max(0.0, raw));
        if (ev > 0.0) s -= ev * std::log2(ev);
    }
    return s;
}

double measure(const ReducedDensity& rho, const SpinorMap& projector) {
    if ((projector - projector.adjoint()).cwiseAbs().maxCoeff() > 1e-10 ||
        (projector * projector - projector).cwiseAbs().maxCoeff() > 1e-10) {
        throw std::invalid_argument("measure: pi must be a Hermitian projector");
    }
    return (rho * projector).trace().real();
}

PolarizationFrame adapted_frame(const LorentzTransform& lambda) {
    // Sorted ascending by eigenvalue, so a boost yields its contracting null
    // direction (1, -n); the rotation tie resolves lexicographically to the
    // same choice.
    const auto eigen = null_eigenvectors(lambda);
    return PolarizationFrame::pauli_lubanski(eigen.front().direction);
}

SpinorMap channel_matrix(const TransformPair& lambda, const PolarizationFrame& frame,
                         const MassiveMomentum& q) {
    const MassiveMomentum out = transform_momentum(lambda.vector, q);
    return frame_basis(frame, out).adjoint() * wigner_rotation(lambda, q) *
           frame_basis(frame, q);
}

ChannelDefect channel_defect(const TransformPair& lambda, const PolarizationFrame& frame,
                             const std::vector<Vec3>& momenta, double mass) {
    if (momenta.size() < 2) {
        throw std::invalid_argument("channel_defect: need at least 2 momenta");
    }
    const std::size_t n = momenta.size();
    std::vector<SpinorMap> channels(n);
    numerics::parallel_for(n, [&](std::size_t i) {
        SpinorMap d = channel_matrix(lambda, frame, MassiveMomentum(momenta[i], mass));
        // Fix the one unphysical global phase: largest entry real positive.
        // Near-ties (a diagonal unitary has two unit entries) resolve by scan
        // order so the choice cannot flip with rounding noise.
        const double top = d.cwiseAbs().maxCoeff();
        Complex pivot = d(0, 0);
        for (int r = 0; r < 2; ++r) {
            for (int c = 0; c < 2; ++c) {
                if (std::abs(d(r, c)) >= top * (1.0 - 1e-6)) {
                    pivot = d(r, c);
                    r = 2;
                    break;
                }
            }
        }
        d *= std::abs(pivot) / pivot;
        channels[i] = d;
    });

    double offdiag = 0.0;
    for (const SpinorMap& d : channels) {
        offdiag = std::max({offdiag, std::abs(d(0, 1)), std::abs(d(1, 0))});
    }

    // Max pairwise distance; max-reductions are exact, so chunked threading
    // cannot change the result.
    std::vector<double> partial(n, 0.0);
    numerics::parallel_for(n, [&](std::size_t i) {
        double worst = 0.0;
        for (std::size_t j = i + 1; j < n; ++j) {
            worst = std::max(worst, (channels[i] - channels[j]).norm());
        }
        partial[i] = worst;
    });
    double spread = 0.0;
    for (double w : partial) spread = std::max(spread, w);
    return {offdiag, spread};
}

} // namespace relspin

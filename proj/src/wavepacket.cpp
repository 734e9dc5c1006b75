#include "relspin/wavepacket.hpp"
#include "relspin/numerics.hpp"

#include <cmath>
#include <sstream>

namespace relspin {

double WavePacketState::norm_squared() const {
    numerics::KahanSum<double> acc;
    for (const auto& s : samples) {
        acc.add(s.w * s.chi.squaredNorm());
    }
    return acc.sum;
}

namespace {

void renormalize(WavePacketState& state) {
    const double n2 = state.norm_squared();
    if (!(n2 > 0.0) || !std::isfinite(n2)) {
        throw numerical_error("wavepacket: cannot normalize a null state");
    }
    const double scale = 1.0 / std::sqrt(n2);
    for (auto& s : state.samples) s.chi *= scale;
}

} // namespace

WavePacketState gaussian_packet(double mass, const Vec3& center, double width,
                                const Spinor& chi0, const GridSpec& grid) {
    if (!(mass > 0.0)) throw std::invalid_argument("gaussian_packet: mass must be > 0");
    if (!(width > 0.0)) throw std::invalid_argument("gaussian_packet: width must be > 0");
    if (chi0.norm() == 0.0) throw std::invalid_argument("gaussian_packet: zero spinor");
    if (grid.n < 3 || grid.n % 2 == 0) {
        throw std::invalid_argument("gaussian_packet: grid.n must be odd and >= 3");
    }
    if (!(grid.span > 0.0)) throw std::invalid_argument("gaussian_packet: grid.span must be > 0");

    const Spinor chi_unit = chi0 / chi0.norm();
    const double half = grid.span * width;
    const double step = 2.0 * half / (grid.n - 1);
    const double cell = step * step * step;

    WavePacketState state;
    state.mass = mass;
    state.samples.reserve(static_cast<std::size_t>(grid.n) * grid.n * grid.n);
    for (int ix = 0; ix < grid.n; ++ix) {
        for (int iy = 0; iy < grid.n; ++iy) {
            for (int iz = 0; iz < grid.n; ++iz) {
                const Vec3 d(-half + step * ix, -half + step * iy, -half + step * iz);
                const Vec3 p = center + d;
                const double e = std::sqrt(mass * mass + p.squaredNorm());
                const double amp = std::exp(-d.squaredNorm() / (4.0 * width * width));
                state.samples.push_back({p, cell / (2.0 * e), amp * chi_unit});
            }
        }
    }
    renormalize(state);
    return state;
}

WavePacketState boost_state(const WavePacketState& state, const TransformPair& lambda) {
    WavePacketState out;
    out.mass = state.mass;
    out.samples.resize(state.samples.size());
    numerics::parallel_for(state.samples.size(), [&](std::size_t i) {
        const SpinorSample& s = state.samples[i];
        const MassiveMomentum q(s.p, state.mass);
        const SpinorMap w = wigner_rotation(lambda, q);
        out.samples[i] = {transform_momentum(lambda.vector, q).p, s.w, w * s.chi};
    });
    return out;
}

std::pair<double, double> helicity_probabilities(const WavePacketState& state) {
    for (const auto& s : state.samples) {
        if (s.p.norm() < 1e-12 * state.mass) {
            std::ostringstream msg;
            msg << "helicity_probabilities: helicity undefined at near-zero momentum ("
                << s.p.transpose() << ")";
            throw numerical_error(msg.str());
        }
    }
    numerics::KahanSum<double> plus;
    numerics::KahanSum<double> minus;
    for (const auto& s : state.samples) {
        // Projectors (1 +- sigma.phat)/2 avoid any phase convention.
        const SpinorMap sp = pauli_dot(s.p.normalized());
        const double n2 = s.chi.squaredNorm();
        const double axis = (s.chi.adjoint() * sp * s.chi)(0).real();
        plus.add(0.5 * s.w * (n2 + axis));
        minus.add(0.5 * s.w * (n2 - axis));
    }
    return {plus.sum, minus.sum};
}

WavePacketState apply_spin_unitary(const WavePacketState& state, const SpinorMap& u) {
    return apply_spin_unitary(state, SpinorRule([&u](const Vec3&) { return u; }));
}

WavePacketState apply_spin_unitary(const WavePacketState& state, const SpinorRule& u) {
    WavePacketState out;
    out.mass = state.mass;
    out.samples.resize(state.samples.size());
    numerics::parallel_for(state.samples.size(), [&](std::size_t i) {
        const SpinorSample& s = state.samples[i];
        const SpinorMap ui = u(s.p);
        if ((ui.adjoint() * ui - SpinorMap::Identity()).cwiseAbs().maxCoeff() > 1e-10) {
            std::ostringstream msg;
            msg << "apply_spin_unitary: non-unitary map at p = (" << s.p.transpose() << ")";
            throw numerical_error(msg.str());
        }
        out.samples[i] = {s.p, s.w, ui.adjoint() * s.chi};
    });
    return out;
}

} // namespace relspin

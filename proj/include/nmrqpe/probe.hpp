// Copyright 2026 The nmrqpe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// The interferometric measurement arm. The probe qubit is the leading tensor
// factor; the probe's |down> branch carries U, so after the controlled gate the
// probe coherence <sigma^-> = rho_probe[1][0] rotates by the eigenphase of U.

#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>

#include "nmrqpe/error.hpp"
#include "nmrqpe/molham.hpp"
#include "nmrqpe/qcore.hpp"
#include "nmrqpe/turns.hpp"

namespace nmrqpe {

inline constexpr double kMinCoherence = 1e-6;

/// Default readout error bound: +-5 degrees.
inline constexpr double kDefaultPhaseErrorBound = 5.0 / 360.0;

struct ProbeReadout {
    Complex expectation;    // unit modulus
    double phase_fraction;  // arg(expectation) / 2pi in [0, 1)
};

enum class JitterLaw {
    uniform,  // uniform on [-bound, +bound)
    extreme,  // +-bound with a fair random sign (worst case)
};

struct NoiseModel {
    double phase_jitter_bound = 0.0;  // turns
    double coherent_epsilon = 0.0;    // hartree
    HermitianMatrix perturbation_direction{pauli::z()};
    std::uint64_t rng_seed = 0;
    JitterLaw law = JitterLaw::uniform;

    bool is_ideal() const { return phase_jitter_bound == 0.0 && coherent_epsilon == 0.0; }

    void validate() const {
        if (!(phase_jitter_bound >= 0.0) || !std::isfinite(phase_jitter_bound)) {
            throw ValidationError("phase jitter bound must be finite and non-negative");
        }
        if (!(coherent_epsilon >= 0.0) || !std::isfinite(coherent_epsilon)) {
            throw ValidationError("coherent epsilon must be finite and non-negative");
        }
        if (std::abs(max_norm(perturbation_direction.matrix()) - 1.0) > 1e-12) {
            throw ValidationError("perturbation direction must have unit max-norm");
        }
    }
};

/// Jitter for measurement number `draw_index` of a run. Each draw reseeds a
/// fresh engine from (seed, index), so the value never depends on call order.
inline double jitter_draw(const NoiseModel &noise, std::uint64_t draw_index) {
    if (noise.phase_jitter_bound == 0.0) {
        return 0.0;
    }
    std::seed_seq seq{static_cast<std::uint32_t>(noise.rng_seed), static_cast<std::uint32_t>(noise.rng_seed >> 32),
                      static_cast<std::uint32_t>(draw_index), static_cast<std::uint32_t>(draw_index >> 32)};
    std::mt19937_64 engine(seq);
    const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;  // [0, 1)
    switch (noise.law) {
        case JitterLaw::extreme:
            return u < 0.5 ? -noise.phase_jitter_bound : noise.phase_jitter_bound;
        case JitterLaw::uniform:
        default:
            return noise.phase_jitter_bound * (2.0 * u - 1.0);
    }
}

/// |up><up| (x) I + |down><down| (x) u. The system register is one qubit in
/// the two-spin setup; two-qubit registers (dim 4) are also accepted.
inline UnitaryMatrix controlled_u(const UnitaryMatrix &u) {
    const std::size_t d = u.dim();
    if (d != 2 && d != 4) {
        throw ValidationError("controlled_u expects a 2x2 (or 4x4) system unitary, got dim " + std::to_string(d));
    }
    ComplexMatrix out(2 * d);
    for (std::size_t i = 0; i < d; ++i) {
        out(i, i) = 1.0;
    }
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            out(d + r, d + c) = u(r, c);
        }
    }
    return UnitaryMatrix(std::move(out));
}

/// |+> (x) prep.
inline PureState interferometer_input(const PureState &prep) { return tensor(ket_plus(), prep); }

namespace detail {

/// `scale` is the polarization of the joint state (1 for pure states, eps for
/// a pseudo-pure state); the coherence floor is taken relative to it.
inline ProbeReadout readout_from_probe(const DensityMatrix &probe, double scale) {
    const Complex coherence = probe(1, 0);
    const double mag = 2.0 * std::abs(coherence);
    if (!(mag >= kMinCoherence * scale) || mag == 0.0) {
        throw ReadoutError("probe coherence " + format_number(mag) + " is too small to define a phase");
    }
    const Complex expectation = coherence / std::abs(coherence);
    return ProbeReadout{expectation, wrap_turns(std::arg(expectation) / kTwoPi)};
}

/// Frobenius norm of rho - I/d relative to that of a pure state.
inline double polarization(const DensityMatrix &rho) {
    const double d = static_cast<double>(rho.dim());
    double acc = 0.0;
    for (std::size_t r = 0; r < rho.dim(); ++r) {
        for (std::size_t c = 0; c < rho.dim(); ++c) {
            acc += std::norm(rho(r, c) - (r == c ? Complex(1.0 / d) : Complex(0.0)));
        }
    }
    return std::sqrt(acc / (1.0 - 1.0 / d));
}

}  // namespace detail

/// Reduced probe state of a probe (x) system density matrix of any even dim.
inline DensityMatrix probe_state(const DensityMatrix &joint) {
    if (joint.dim() == 4) {
        return partial_trace(joint, 0);
    }
    if (joint.dim() % 2 != 0) {
        throw ValidationError("joint state dimension must be even (probe qubit leading)");
    }
    const std::size_t d = joint.dim() / 2;
    ComplexMatrix out(2);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            for (std::size_t t = 0; t < d; ++t) {
                out(i, j) += joint(i * d + t, j * d + t);
            }
        }
    }
    return DensityMatrix(std::move(out));
}

inline ProbeReadout ideal_readout(const DensityMatrix &joint) {
    return detail::readout_from_probe(probe_state(joint), detail::polarization(joint));
}

inline ProbeReadout ideal_readout(const PureState &joint) {
    if (joint.dim() < 4 || joint.dim() % 2 != 0) {
        throw ValidationError("readout expects a probe (x) system state (dim 4 or 8)");
    }
    return ideal_readout(DensityMatrix::from_pure(joint));
}

inline ProbeReadout noisy_readout(const ProbeReadout &ideal, const NoiseModel &noise, std::uint64_t draw_index) {
    const double phase = wrap_turns(ideal.phase_fraction + jitter_draw(noise, draw_index));
    return ProbeReadout{std::polar(1.0, kTwoPi * phase), phase};
}

template <typename State>
ProbeReadout noisy_readout(const State &joint, const NoiseModel &noise, std::uint64_t draw_index) {
    return noisy_readout(ideal_readout(joint), noise, draw_index);
}

/// exp(-i (H + eps V) tau). At eps = 0 this is exactly expm_herm(H, tau).
inline UnitaryMatrix perturbed_u(const MolecularHamiltonian &h, double tau, const NoiseModel &noise) {
    if (!(tau > 0.0) || !std::isfinite(tau)) {
        throw ValidationError("tau must be positive");
    }
    if (noise.coherent_epsilon == 0.0) {
        return expm_herm(h.matrix, tau);
    }
    noise.validate();
    if (noise.perturbation_direction.dim() != h.dim()) {
        throw ValidationError("perturbation direction dimension does not match the Hamiltonian");
    }
    const HermitianMatrix perturbed(h.matrix.matrix() +
                                    noise.coherent_epsilon * noise.perturbation_direction.matrix());
    return expm_herm(perturbed, tau);
}

}  // namespace nmrqpe

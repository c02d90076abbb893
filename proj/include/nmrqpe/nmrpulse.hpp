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

// Two-spin liquid-state NMR backend in the doubly rotating frame.
//
// Pulses are hard (instantaneous) rotations about transverse axes; free
// evolution is generated by (w_p/2) Zp + (w_s/2) Zs + (pi J/2) Zp Zs. The probe
// spin is the leading tensor factor throughout.

#pragma once

#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "nmrqpe/error.hpp"
#include "nmrqpe/ipea.hpp"
#include "nmrqpe/molham.hpp"
#include "nmrqpe/probe.hpp"
#include "nmrqpe/qcore.hpp"

namespace nmrqpe {

inline constexpr double kDefaultJCoupling = 214.6;  // Hz, 1H-13C in chloroform
inline constexpr double kMinCompileFidelity = 1.0 - 1e-9;

struct SpinSystem {
    double omega_probe = 0.0;   // rad/s
    double omega_system = 0.0;  // rad/s
    double j_coupling = kDefaultJCoupling;  // Hz
};

enum class Spin { probe, system, both };

inline const char *spin_name(Spin s) {
    switch (s) {
        case Spin::probe:
            return "probe";
        case Spin::system:
            return "system";
        case Spin::both:
        default:
            return "both";
    }
}

struct PulseEvent {
    Spin spin = Spin::probe;
    double phase = 0.0;  // rotation axis angle in the transverse plane, rad (0 = x, pi/2 = y)
    double angle = 0.0;  // rad
};

struct DelayEvent {
    double duration = 0.0;  // s
};

using SequenceEvent = std::variant<PulseEvent, DelayEvent>;

/// Imperfections applied while evolving a sequence.
struct PulseErrors {
    double over_rotation = 0.0;  // fractional error on every pulse angle
};

inline HermitianMatrix nmr_hamiltonian(const SpinSystem &sys) {
    const double zp = 0.5 * sys.omega_probe;
    const double zs = 0.5 * sys.omega_system;
    const double zz = 0.5 * kPi * sys.j_coupling;
    const std::vector<Complex> diag{zp + zs + zz, zp - zs - zz, -zp + zs - zz, -zp - zs + zz};
    return HermitianMatrix(ComplexMatrix::diagonal(diag));
}

/// exp(-i (angle/2) (cos(phase) X + sin(phase) Y)).
inline ComplexMatrix transverse_rotation(double phase, double angle) {
    const double c = std::cos(0.5 * angle);
    const double s = std::sin(0.5 * angle);
    const Complex axis = std::polar(1.0, phase);
    // cos(phase) X + sin(phase) Y = [[0, e^{-i phase}], [e^{i phase}, 0]]
    return ComplexMatrix{{c, Complex(0.0, -s) * std::conj(axis)}, {Complex(0.0, -s) * axis, c}};
}

inline ComplexMatrix event_unitary(const SequenceEvent &event, const SpinSystem &sys, const PulseErrors &errors = {}) {
    if (const auto *pulse = std::get_if<PulseEvent>(&event)) {
        if (!std::isfinite(pulse->angle) || !std::isfinite(pulse->phase)) {
            throw ValidationError("pulse angle and phase must be finite");
        }
        const ComplexMatrix r = transverse_rotation(pulse->phase, pulse->angle * (1.0 + errors.over_rotation));
        switch (pulse->spin) {
            case Spin::probe:
                return tensor(r, pauli::identity());
            case Spin::system:
                return tensor(pauli::identity(), r);
            case Spin::both:
            default:
                return tensor(r, r);
        }
    }
    const auto &delay = std::get<DelayEvent>(event);
    if (!(delay.duration >= 0.0) || !std::isfinite(delay.duration)) {
        throw ValidationError("delay duration must be finite and non-negative");
    }
    return expm_herm(nmr_hamiltonian(sys), delay.duration).matrix();
}

/// Time-ordered product of the event propagators (first event acts first).
inline ComplexMatrix evolve_events(const std::vector<SequenceEvent> &events, const SpinSystem &sys,
                                   const PulseErrors &errors = {}) {
    ComplexMatrix total = ComplexMatrix::identity(4);
    for (const SequenceEvent &e : events) {
        total = event_unitary(e, sys, errors) * total;
    }
    return total;
}

/// |Tr(A^dag B)| / dim, insensitive to global phase.
inline double gate_fidelity(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.dim() != b.dim()) {
        throw ValidationError("gate fidelity of operators with different dimensions");
    }
    return std::abs((a.adjoint() * b).trace()) / static_cast<double>(a.dim());
}

class PulseSequence {
   public:
    PulseSequence(std::vector<SequenceEvent> events, UnitaryMatrix intended, const SpinSystem &sys)
        : events_(std::move(events)), intended_(std::move(intended)), spins_(sys) {
        if (intended_.dim() != 4) {
            throw ValidationError("pulse sequences act on two spins (dim 4)");
        }
        fidelity_ = gate_fidelity(intended_.matrix(), evolve_events(events_, spins_));
    }

    const std::vector<SequenceEvent> &events() const { return events_; }
    const UnitaryMatrix &intended_unitary() const { return intended_; }
    const SpinSystem &spins() const { return spins_; }
    double achieved_fidelity() const { return fidelity_; }

   private:
    std::vector<SequenceEvent> events_;
    UnitaryMatrix intended_;
    SpinSystem spins_;
    double fidelity_ = 0.0;
};

inline UnitaryMatrix evolve_sequence(const PulseSequence &seq, const SpinSystem &sys, const PulseErrors &errors = {}) {
    return UnitaryMatrix(evolve_events(seq.events(), sys, errors));
}

/// rho_00 = (1 - eps)/4 I + eps |up up><up up|.
inline DensityMatrix prepare_pps(double epsilon = 1.0) {
    if (!(epsilon > 0.0 && epsilon <= 1.0)) {
        throw ValidationError("PPS polarization must lie in (0, 1]");
    }
    ComplexMatrix m = ComplexMatrix::identity(4) * Complex((1.0 - epsilon) / 4.0);
    m(0, 0) += epsilon;
    return DensityMatrix(std::move(m));
}

namespace detail {

inline double wrap_angle(double a) {
    double w = std::remainder(a, kTwoPi);  // (-pi, pi]
    return w;
}

inline bool negligible_angle(double a) { return std::abs(wrap_angle(a)) < 1e-14; }

/// Rz(zeta) up to global phase as two pi pulses about axes zeta/2 apart.
inline void append_z_rotation(std::vector<SequenceEvent> &out, Spin spin, double zeta) {
    if (negligible_angle(zeta)) {
        return;
    }
    out.emplace_back(PulseEvent{spin, 0.0, kPi});
    out.emplace_back(PulseEvent{spin, 0.5 * wrap_angle(zeta), kPi});
}

/// Any single-spin unitary as at most three transverse pulses (global phase
/// dropped): W ~ Rz(a) Ry(b) Rz(c) = R_{pi/2 + a}(b) Rz(a + c).
inline void append_single_spin(std::vector<SequenceEvent> &out, Spin spin, const ComplexMatrix &w) {
    const Complex det = w(0, 0) * w(1, 1) - w(0, 1) * w(1, 0);
    const Complex scale = 1.0 / std::sqrt(det);
    const Complex w00 = w(0, 0) * scale;
    const Complex w10 = w(1, 0) * scale;
    const Complex w11 = w(1, 1) * scale;
    const double beta = 2.0 * std::atan2(std::abs(w10), std::abs(w00));
    const double sum = std::abs(w00) > 1e-14 ? 2.0 * std::arg(w11) : 0.0;   // a + c
    const double diff = std::abs(w10) > 1e-14 ? 2.0 * std::arg(w10) : 0.0;  // a - c
    const double a = 0.5 * (sum + diff);
    append_z_rotation(out, spin, sum);
    if (!negligible_angle(beta)) {
        out.emplace_back(PulseEvent{spin, 0.5 * kPi + a, beta});
    }
}

struct TwoLevelSplit {
    ComplexMatrix basis;  // columns are eigenvectors of u
    double phase0;
    double phase1;
};

/// Eigenbasis of a 2x2 unitary via a Hermitian combination of its real and
/// imaginary parts; of three mixing weights the best-separated one is used.
inline TwoLevelSplit split_unitary(const UnitaryMatrix &u) {
    const ComplexMatrix &m = u.matrix();
    const ComplexMatrix re = 0.5 * (m + m.adjoint());
    const ComplexMatrix im = Complex(0.0, -0.5) * (m - m.adjoint());
    std::optional<EigenDecomposition> best;
    double best_gap = -1.0;
    for (double weight : {0.0, 1.0, -1.0}) {
        EigenDecomposition eig = hermitian_eig(HermitianMatrix(re + weight * im));
        const double gap = eig.eigenvalues[1] - eig.eigenvalues[0];
        if (gap > best_gap) {
            best_gap = gap;
            best = std::move(eig);
        }
    }
    if (best_gap < 1e-12) {
        return {ComplexMatrix::identity(2), std::arg(m(0, 0)), std::arg(m(0, 0))};
    }
    const ComplexMatrix &v = best->eigenvectors.matrix();
    auto eigenphase = [&](std::size_t j) {
        Complex acc = 0.0;
        for (std::size_t r = 0; r < 2; ++r) {
            for (std::size_t c = 0; c < 2; ++c) {
                acc += std::conj(v(r, j)) * m(r, c) * v(c, j);
            }
        }
        return std::arg(acc);
    };
    return {v, eigenphase(0), eigenphase(1)};
}

inline std::vector<SequenceEvent> controlled_u_events(const UnitaryMatrix &u, const SpinSystem &sys) {
    if (u.dim() != 2) {
        throw ValidationError("pulse compilation targets a single system spin (2x2 unitary)");
    }
    if (!(sys.j_coupling > 0.0)) {
        throw ValidationError("compilation needs a positive J coupling");
    }
    if (sys.omega_probe != 0.0 || sys.omega_system != 0.0) {
        throw ValidationError("compilation assumes on-resonance spins (zero offsets)");
    }
    // controlled-diag(e^{i l0}, e^{i l1}) = e^{iA} exp(-iA Zp) exp(iB Zs) exp(-iB Zp Zs)
    // with A = (l0 + l1)/4, B = (l0 - l1)/4.
    const TwoLevelSplit split = split_unitary(u);
    const double a = 0.25 * (split.phase0 + split.phase1);
    const double b = 0.25 * (split.phase0 - split.phase1);

    // exp(-iB ZZ) = exp(-ic ZZ) (-i ZZ)^m with |c| <= pi/4; an odd m leaves a
    // Zp Zs factor, i.e. a pi z-rotation on each spin.
    const double m = std::round(b / (0.5 * kPi));
    const double c = b - m * 0.5 * kPi;
    const bool odd = std::fmod(std::abs(m), 2.0) == 1.0;

    const double probe_z = 2.0 * a + (odd ? kPi : 0.0);
    const double system_z = -2.0 * b + (odd ? kPi : 0.0);

    std::vector<SequenceEvent> events;
    append_single_spin(events, Spin::system, split.basis.adjoint());
    if (std::abs(c) > 1e-15) {
        const double delay = 2.0 * std::abs(c) / (kPi * sys.j_coupling);
        if (c < 0.0) {
            // A probe pi pulse on each side flips the sign of the coupling.
            events.emplace_back(PulseEvent{Spin::probe, 0.0, kPi});
            events.emplace_back(DelayEvent{delay});
            events.emplace_back(PulseEvent{Spin::probe, 0.0, kPi});
        } else {
            events.emplace_back(DelayEvent{delay});
        }
    }
    append_z_rotation(events, Spin::probe, probe_z);
    const ComplexMatrix rz_system{{std::polar(1.0, -0.5 * system_z), 0.0}, {0.0, std::polar(1.0, 0.5 * system_z)}};
    append_single_spin(events, Spin::system, split.basis * rz_system);
    return events;
}

}  // namespace detail

/// Compiles |up><up| (x) I + |down><down| (x) u into hard pulses and one
/// J-coupling delay of at most 1/(2J), verified by evolution.
inline PulseSequence compile_controlled_u(const UnitaryMatrix &u, const SpinSystem &sys = {}) {
    const UnitaryMatrix target = controlled_u(u);
    PulseSequence seq(detail::controlled_u_events(u, sys), target, sys);
    if (seq.achieved_fidelity() < kMinCompileFidelity) {
        const double residual = max_abs_diff(evolve_events(seq.events(), sys), target.matrix());
        throw CompilationError("compiled controlled-U reaches fidelity " + format_number(seq.achieved_fidelity()) +
                               " (max residual " + format_number(residual) + ")");
    }
    return seq;
}

/// Probe-only phase correction diag(1, e^{-i chi}) up to global phase.
inline std::vector<SequenceEvent> probe_phase_events(double chi) {
    std::vector<SequenceEvent> events;
    detail::append_z_rotation(events, Spin::probe, -chi);
    return events;
}

/// Pseudo-Hadamard on the probe and |up> -> prep on the system.
inline std::vector<SequenceEvent> input_preparation_events(const PureState &prep) {
    if (prep.dim() != 2) {
        throw ValidationError("pulse backend prepares a single system spin");
    }
    std::vector<SequenceEvent> events;
    events.emplace_back(PulseEvent{Spin::probe, 0.5 * kPi, 0.5 * kPi});
    const ComplexMatrix w{{prep[0], -std::conj(prep[1])}, {prep[1], std::conj(prep[0])}};
    detail::append_single_spin(events, Spin::system, w);
    return events;
}

enum class PulseRealization {
    // controlled-U_k = [phase(phi') controlled-U_{k-1}]^{2^n} built from the one
    // compiled controlled-U_0 block, so pulse errors compound like repeated
    // application of an imperfect U.
    repeated_block,
    // each controlled-U_k compiled afresh from the exactly computed U_k.
    recompile_each,
};

struct PulseBackendOptions {
    SpinSystem spins;
    PulseErrors errors;
    double pps_polarization = 1.0;
    PulseRealization realization = PulseRealization::repeated_block;
};

class PulseBackend {
   public:
    PulseBackend(const UnitaryMatrix &u0, const PureState &prep, PulseBackendOptions options)
        : options_(std::move(options)),
          exact_u_(u0),
          block_(realize(compile_controlled_u(u0, options_.spins).events())),
          input_(prepare_pps(options_.pps_polarization).evolve(realize(input_preparation_events(prep)))) {}

    double measure(int /*k*/) { return ideal_readout(input_.evolve(block_)).phase_fraction; }

    void advance(double clipped_phase, int bits_per_iteration) {
        exact_u_ = next_operator(exact_u_, clipped_phase, bits_per_iteration);
        if (options_.realization == PulseRealization::recompile_each) {
            block_ = realize(compile_controlled_u(exact_u_, options_.spins).events());
            return;
        }
        ComplexMatrix m = realize(probe_phase_events(kTwoPi * clipped_phase)) * block_;
        for (int i = 0; i < bits_per_iteration; ++i) {
            m = m * m;
        }
        block_ = nearest_unitary(m).matrix();
    }

    const ComplexMatrix &realized_block() const { return block_; }

   private:
    ComplexMatrix realize(const std::vector<SequenceEvent> &events) const {
        return evolve_events(events, options_.spins, options_.errors);
    }

    PulseBackendOptions options_;
    UnitaryMatrix exact_u_;
    ComplexMatrix block_;
    DensityMatrix input_;
};

/// IPEA with every controlled-U_k realized at pulse level and read out from
/// the evolved pseudo-pure state.
inline IpeaRun run_pulse_backend(const MolecularHamiltonian &h, const IterationConfig &config,
                                 const std::optional<PureState> &prep = std::nullopt,
                                 const PulseBackendOptions &options = {}) {
    config.validate();
    if (h.dim() != 2) {
        throw ValidationError("the two-spin pulse backend needs a 2x2 Hamiltonian");
    }
    const PureState state = prep ? *prep : spectrum(h).ground_state;
    const std::optional<std::string> warning = check_preparation(h, state);
    PulseBackend backend(initial_operator(h, config.tau), state, options);
    IpeaRun run = run_with_backend(h, config, backend);
    if (warning) {
        run.warnings.push_back(*warning);
    }
    return run;
}

inline void write_pulse_sequence(std::ostream &out, const PulseSequence &seq) {
    char buf[160];
    for (const SequenceEvent &e : seq.events()) {
        if (const auto *p = std::get_if<PulseEvent>(&e)) {
            std::snprintf(buf, sizeof buf, "PULSE %s %.17g %.17g\n", spin_name(p->spin), p->phase, p->angle);
        } else {
            std::snprintf(buf, sizeof buf, "DELAY %.17g\n", std::get<DelayEvent>(e).duration);
        }
        out << buf;
    }
    std::snprintf(buf, sizeof buf, "FIDELITY %.17g\n", seq.achieved_fidelity());
    out << buf;
}

}  // namespace nmrqpe

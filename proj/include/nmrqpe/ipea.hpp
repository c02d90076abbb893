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

// Iterative phase estimation with clipped phase feedback.
//
// Iteration k measures the eigenphase theta_k of U_k, clips it to
// phi'_k = max(phi_k - errbd, 0) and forms U_{k+1} = [e^{-i 2pi phi'_k} U_k]^{2^n}.
// With every measurement within +-errbd of theta_k, theta_{k+1} lies in
// [0, 2^n * 2 errbd], so each later measurement can be unwrapped without
// ambiguity and the phase is rebuilt as phi^c_{i-1} = phi^c_i 2^-n + phi'_{i-1}.

#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "nmrqpe/error.hpp"
#include "nmrqpe/molham.hpp"
#include "nmrqpe/probe.hpp"
#include "nmrqpe/qcore.hpp"
#include "nmrqpe/turns.hpp"

namespace nmrqpe {

inline constexpr int kDoublePrecisionBits = 52;

struct IterationConfig {
    int bits_per_iteration = 3;
    int iterations = 6;
    double phase_error_bound = kDefaultPhaseErrorBound;
    double tau = 1.0;

    void validate() const {
        if (bits_per_iteration < 1) {
            throw ConfigError("bits per iteration must be >= 1");
        }
        if (iterations < 1) {
            throw ConfigError("iteration count must be >= 1");
        }
        if (bits_per_iteration * (iterations - 1) >= 63) {
            throw ConfigError("accumulated operator power 2^(n(k-1)) does not fit in 63 bits");
        }
        if (!(phase_error_bound >= 0.0) || !std::isfinite(phase_error_bound)) {
            throw ConfigError("phase error bound must be finite and non-negative");
        }
        if (!(tau > 0.0) || !std::isfinite(tau)) {
            throw ConfigError("tau must be positive and finite");
        }
        if (std::ldexp(1.0, -bits_per_iteration) < 2.0 * phase_error_bound) {
            throw ConfigError("2^-n = " + format_number(std::ldexp(1.0, -bits_per_iteration)) +
                              " is below 2 * errbd = " + format_number(2.0 * phase_error_bound) +
                              "; use fewer bits per iteration");
        }
    }
};

struct IterationRecord {
    int k = 0;
    // Unwrapped measurement. Iteration 0 lives in [errbd, 1 + errbd); later
    // iterations may dip slightly below zero.
    double measured_phase = 0.0;
    double clipped_phase = 0.0;
    std::uint64_t operator_power = 1;  // 2^(n k)
};

using BitString = std::vector<std::uint8_t>;

struct PhaseEstimate {
    double value = 0.0;
    std::vector<double> reconstruction_trace;  // phi^c_i for i = k..0
    BitString binary_digits;                   // most significant first
    int guaranteed_bits = 0;
};

struct EnergyResult {
    double energy = 0.0;  // hartree
    PhaseEstimate phase;
    double tau = 0.0;
    std::optional<double> oracle_energy;
    std::optional<double> abs_error;
};

/// Truncated binary expansion of a value in [0, 1).
inline BitString to_binary(double value, int digits) {
    if (digits < 1) {
        throw ValidationError("need at least one binary digit");
    }
    if (!(value >= 0.0 && value < 1.0)) {
        throw ValidationError("binary expansion needs a value in [0, 1)");
    }
    BitString bits;
    bits.reserve(static_cast<std::size_t>(digits));
    double x = value;
    for (int j = 0; j < digits; ++j) {
        x *= 2.0;  // exact in binary floating point
        const bool one = x >= 1.0;
        bits.push_back(one ? 1 : 0);
        if (one) {
            x -= 1.0;
        }
    }
    return bits;
}

inline std::string bits_to_string(const BitString &bits) {
    std::string s;
    s.reserve(bits.size());
    for (std::uint8_t b : bits) {
        s.push_back(b ? '1' : '0');
    }
    return s;
}

/// Largest j with |error| < 2^-j, capped at the double-precision floor.
inline int bits_below(double error) {
    if (!(error > 0.0)) {
        return kDoublePrecisionBits;
    }
    int j = static_cast<int>(std::floor(-std::log2(error)));
    if (std::ldexp(1.0, -j) <= error) {
        --j;
    }
    return std::clamp(j, 0, kDoublePrecisionBits);
}

/// Count of leading bits of `estimate` that agree with `oracle_phase`.
inline int precision_report(double estimate, double oracle_phase) {
    if (!(oracle_phase >= 0.0 && oracle_phase < 1.0)) {
        throw ValidationError("oracle phase must lie in [0, 1)");
    }
    return bits_below(turn_distance(estimate, oracle_phase));
}

inline int precision_report(const PhaseEstimate &estimate, double oracle_phase) {
    return precision_report(estimate.value, oracle_phase);
}

inline PhaseEstimate reconstruct(const std::vector<IterationRecord> &records, int bits_per_iteration,
                                 double phase_error_bound = 0.0) {
    if (records.empty()) {
        throw ValidationError("cannot reconstruct a phase from zero iterations");
    }
    if (bits_per_iteration < 1) {
        throw ValidationError("bits per iteration must be >= 1");
    }
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (records[i].k != static_cast<int>(i)) {
            throw ValidationError("iteration records must be contiguous from k = 0; found k = " +
                                  std::to_string(records[i].k) + " at position " + std::to_string(i));
        }
    }
    const double shrink = std::ldexp(1.0, -bits_per_iteration);
    PhaseEstimate est;
    double phi_c = records.back().measured_phase;
    est.reconstruction_trace.push_back(phi_c);
    for (std::size_t i = records.size() - 1; i >= 1; --i) {
        phi_c = phi_c * shrink + records[i - 1].clipped_phase;
        est.reconstruction_trace.push_back(phi_c);
    }
    est.value = wrap_turns(phi_c);
    est.reconstruction_trace.back() = est.value;

    const int produced = bits_per_iteration * static_cast<int>(records.size());
    if (phase_error_bound > 0.0) {
        const double bound =
            phase_error_bound * std::ldexp(1.0, -bits_per_iteration * (static_cast<int>(records.size()) - 1));
        est.guaranteed_bits = bits_below(bound);
    } else {
        est.guaranteed_bits = kDoublePrecisionBits;
    }
    est.binary_digits = to_binary(est.value, std::clamp(std::max(produced, est.guaranteed_bits), 1, kDoublePrecisionBits));
    est.guaranteed_bits = std::min<int>(est.guaranteed_bits, static_cast<int>(est.binary_digits.size()));
    return est;
}

inline EnergyResult energy_from_phase(const PhaseEstimate &phase, double tau,
                                      std::optional<double> oracle_energy = std::nullopt) {
    if (!(tau > 0.0)) {
        throw ValidationError("tau must be positive");
    }
    EnergyResult out;
    out.energy = -kTwoPi * phase.value / tau;
    out.phase = phase;
    out.tau = tau;
    out.oracle_energy = oracle_energy;
    if (oracle_energy) {
        out.abs_error = std::abs(out.energy - *oracle_energy);
    }
    return out;
}

inline UnitaryMatrix initial_operator(const MolecularHamiltonian &h, double tau) {
    if (!(tau > 0.0)) {
        throw ValidationError("tau must be positive");
    }
    return expm_herm(h.matrix, tau);
}

/// [e^{-i 2pi phi'} U]^{2^n} by n successive squarings, re-unitarized
/// once at the end.
inline UnitaryMatrix next_operator(const UnitaryMatrix &u, double clipped_phase, int bits_per_iteration) {
    if (bits_per_iteration < 1) {
        throw ValidationError("bits per iteration must be >= 1");
    }
    ComplexMatrix m = u.matrix() * std::polar(1.0, -kTwoPi * clipped_phase);
    for (int i = 0; i < bits_per_iteration; ++i) {
        m = m * m;
    }
    return nearest_unitary(m);
}

/// Places a raw [0, 1) readout in the window where the true eigenphase of
/// U_k must lie. Iteration 0 uses [errbd, 1 + errbd) so that clipping
/// followed by the mod-1 operator update is exact near both ends of the
/// circle; later iterations cut halfway through the gap above 2^n * 2 errbd.
inline double unwrap_measurement(double raw, int k, const IterationConfig &config) {
    const double e = config.phase_error_bound;
    if (k == 0) {
        return raw < e ? raw + 1.0 : raw;
    }
    const double top = std::ldexp(2.0 * e, config.bits_per_iteration);
    const double cut = 0.5 * (1.0 + top);
    return raw >= cut ? raw - 1.0 : raw;
}

inline double clip_phase(double measured, double phase_error_bound) {
    return std::max(measured - phase_error_bound, 0.0);
}

struct IpeaRun {
    std::vector<IterationRecord> records;
    PhaseEstimate estimate;
    EnergyResult energy;
    std::vector<std::string> warnings;
};

/// A measurement backend supplies the raw probe phase of the current
/// controlled-U_k and advances its operator with the clipped feedback phase.
template <typename B>
concept IpeaBackend = requires(B b, int k, double phase, int n) {
    { b.measure(k) } -> std::convertible_to<double>;
    b.advance(phase, n);
};

template <IpeaBackend Backend>
IpeaRun run_with_backend(const MolecularHamiltonian &h, const IterationConfig &config, Backend &backend) {
    config.validate();
    IpeaRun run;
    run.records.reserve(static_cast<std::size_t>(config.iterations));
    for (int k = 0; k < config.iterations; ++k) {
        double raw = 0.0;
        try {
            raw = backend.measure(k);
        } catch (const ReadoutError &e) {
            throw ReadoutError("iteration " + std::to_string(k) + ": " + e.what());
        } catch (const CompilationError &e) {
            throw CompilationError("iteration " + std::to_string(k) + ": " + e.what());
        }
        IterationRecord rec;
        rec.k = k;
        rec.measured_phase = unwrap_measurement(raw, k, config);
        rec.clipped_phase = clip_phase(rec.measured_phase, config.phase_error_bound);
        rec.operator_power = std::uint64_t{1} << (config.bits_per_iteration * k);
        run.records.push_back(rec);
        if (k + 1 < config.iterations) {
            backend.advance(rec.clipped_phase, config.bits_per_iteration);
        }
    }
    run.estimate = reconstruct(run.records, config.bits_per_iteration, config.phase_error_bound);
    std::optional<double> oracle;
    try {
        oracle = ground_energy(h);
    } catch (const DegeneracyError &) {
    }
    run.energy = energy_from_phase(run.estimate, config.tau, oracle);
    return run;
}

/// Controlled-U_k applied to |+> (x) prep as an exact state vector.
class StateVectorBackend {
   public:
    StateVectorBackend(UnitaryMatrix u0, const PureState &prep, std::optional<NoiseModel> jitter = std::nullopt)
        : u_(std::move(u0)), input_(interferometer_input(prep)), jitter_(std::move(jitter)) {}

    double measure(int k) {
        const ProbeReadout ideal = ideal_readout(apply(controlled_u(u_), input_));
        if (jitter_) {
            return noisy_readout(ideal, *jitter_, static_cast<std::uint64_t>(k)).phase_fraction;
        }
        return ideal.phase_fraction;
    }

    void advance(double clipped_phase, int bits_per_iteration) {
        u_ = next_operator(u_, clipped_phase, bits_per_iteration);
    }

    const UnitaryMatrix &current_operator() const { return u_; }

   private:
    UnitaryMatrix u_;
    PureState input_;
    std::optional<NoiseModel> jitter_;
};

/// Adds bounded readout jitter to any backend.
template <IpeaBackend Backend>
class JitteredBackend {
   public:
    JitteredBackend(Backend inner, NoiseModel noise) : inner_(std::move(inner)), noise_(std::move(noise)) {}

    double measure(int k) {
        return wrap_turns(inner_.measure(k) + jitter_draw(noise_, static_cast<std::uint64_t>(k)));
    }

    void advance(double clipped_phase, int bits_per_iteration) { inner_.advance(clipped_phase, bits_per_iteration); }

   private:
    Backend inner_;
    NoiseModel noise_;
};

struct IdealReadout {};

/// Jitter on every readout plus coherent error in U itself.
struct NoisyReadout {
    NoiseModel noise;
};

using ReadoutMode = std::variant<IdealReadout, NoisyReadout>;

inline constexpr double kMinPrepOverlap = 0.9;
inline constexpr double kWarnPrepOverlap = 0.999;

/// Checks the prepared register against the exact ground state; returns a
/// warning when the overlap is admissible but below kWarnPrepOverlap.
inline std::optional<std::string> check_preparation(const MolecularHamiltonian &h, const PureState &prep) {
    if (prep.dim() != h.dim()) {
        throw ConfigError("prepared state dimension " + std::to_string(prep.dim()) +
                          " does not match the Hamiltonian dimension " + std::to_string(h.dim()));
    }
    const double overlap = state_fidelity(spectrum(h).ground_state, prep);
    if (overlap < kMinPrepOverlap) {
        throw ConfigError("prepared state overlaps the ground state with fidelity " + format_number(overlap) +
                          " < 0.9");
    }
    if (overlap < kWarnPrepOverlap) {
        return "prepared state has ground-state fidelity " + format_number(overlap) + " (< 0.999)";
    }
    return std::nullopt;
}

inline IpeaRun run_ipea(const MolecularHamiltonian &h, const IterationConfig &config, const PureState &prep,
                        const ReadoutMode &mode = IdealReadout{}) {
    config.validate();
    const std::optional<std::string> warning = check_preparation(h, prep);

    IpeaRun run = std::visit(
        [&](const auto &m) {
            using Mode = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<Mode, IdealReadout>) {
                StateVectorBackend backend(initial_operator(h, config.tau), prep);
                return run_with_backend(h, config, backend);
            } else {
                m.noise.validate();
                StateVectorBackend backend(perturbed_u(h, config.tau, m.noise), prep, m.noise);
                return run_with_backend(h, config, backend);
            }
        },
        mode);
    if (warning) {
        run.warnings.push_back(*warning);
    }
    return run;
}

/// Per-iteration error of the measured phases against an exact-U replay that
/// feeds back the same clipped phases. Isolates operator imperfection from the
/// feedback path: any error in U is amplified by the 2^(nk) powers in U_k.
inline std::vector<double> phase_error_profile(const MolecularHamiltonian &h, const IterationConfig &config,
                                               const PureState &prep, const std::vector<IterationRecord> &records) {
    config.validate();
    StateVectorBackend exact(initial_operator(h, config.tau), prep);
    std::vector<double> errors;
    errors.reserve(records.size());
    for (std::size_t k = 0; k < records.size(); ++k) {
        const double ideal = exact.measure(static_cast<int>(k));
        errors.push_back(turn_distance(records[k].measured_phase, ideal));
        if (k + 1 < records.size()) {
            exact.advance(records[k].clipped_phase, config.bits_per_iteration);
        }
    }
    return errors;
}

/// Geometric-mean ratio e_{k+1} / e_k over the pre-saturation part of an error
/// profile: pairs whose first member is above `floor` and not above `ceiling`.
inline std::optional<double> fit_growth_ratio(const std::vector<double> &errors, double ceiling,
                                              double floor = 1e-12) {
    double log_sum = 0.0;
    int count = 0;
    for (std::size_t k = 0; k + 1 < errors.size(); ++k) {
        if (errors[k] > floor && errors[k] <= ceiling && errors[k + 1] > 0.0) {
            log_sum += std::log(errors[k + 1] / errors[k]);
            ++count;
        }
    }
    if (count == 0) {
        return std::nullopt;
    }
    return std::exp(log_sum / count);
}

}  // namespace nmrqpe

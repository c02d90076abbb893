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

#include "nmrqpe/nmrpulse.hpp"

#include <random>
#include <sstream>

#include "gtest/gtest.h"
#include "test_util.hpp"

using namespace nmrqpe;

namespace {

constexpr double kJ = 214.6;

IterationConfig h2_config(int iterations = 6) {
    IterationConfig cfg;
    cfg.tau = choose_tau(build_h2());
    cfg.iterations = iterations;
    return cfg;
}

}  // namespace

TEST(nmrpulse, hamiltonian_examples) {
    const double zz = 0.5 * kPi * kJ;
    EXPECT_EQ(nmr_hamiltonian({}).matrix(), ComplexMatrix::diagonal({zz, -zz, -zz, zz}));
    EXPECT_EQ(nmr_hamiltonian({0.0, 0.0, 0.0}).matrix(), ComplexMatrix(4));
    EXPECT_LE(max_abs_diff(nmr_hamiltonian({3.0, 0.0, 0.0}).matrix(), tensor(pauli::z(), pauli::identity()) * Complex(1.5)),
              1e-15);
}

TEST(nmrpulse, evolve_examples) {
    const SpinSystem sys;
    EXPECT_EQ(evolve_events({}, sys), ComplexMatrix::identity(4));
    const ComplexMatrix zz = tensor(pauli::z(), pauli::z());
    const ComplexMatrix expected = expm_herm(HermitianMatrix(zz * Complex(kPi / 4.0)), 1.0).matrix();
    EXPECT_LE(max_abs_diff(evolve_events({DelayEvent{1.0 / (2.0 * kJ)}}, sys), expected), 1e-12);
    const ComplexMatrix x_pi = tensor(ComplexMatrix(pauli::x() * Complex(0.0, -1.0)), pauli::identity());
    EXPECT_LE(max_abs_diff(evolve_events({PulseEvent{Spin::probe, 0.0, kPi}}, sys), x_pi), 1e-15);
    const ComplexMatrix y_half = transverse_rotation(0.5 * kPi, 0.5 * kPi);
    EXPECT_LE(max_abs_diff(evolve_events({PulseEvent{Spin::both, 0.5 * kPi, 0.5 * kPi}}, sys), tensor(y_half, y_half)),
              1e-15);
    EXPECT_THROW(evolve_events({DelayEvent{-1.0}}, sys), ValidationError);
}

TEST(nmrpulse, long_sequences_stay_unitary) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    std::uniform_real_distribution<double> delay(0.0, 1e-3);
    std::vector<SequenceEvent> events;
    for (int i = 0; i < 10000; ++i) {
        if (i % 3 == 2) {
            events.emplace_back(DelayEvent{delay(rng)});
        } else {
            events.emplace_back(PulseEvent{i % 2 ? Spin::probe : Spin::system, angle(rng), angle(rng)});
        }
    }
    EXPECT_LE(unitarity_defect(evolve_events(events, SpinSystem{100.0, -50.0, kJ})), 1e-9);
}

TEST(nmrpulse, pps_examples) {
    DensityMatrix pure = prepare_pps(1.0);
    EXPECT_EQ(pure.matrix(), ComplexMatrix::diagonal({1.0, 0.0, 0.0, 0.0}));
    auto eig = hermitian_eig(HermitianMatrix(prepare_pps(0.5).matrix()));
    EXPECT_NEAR(eig.eigenvalues[0], 0.125, 1e-15);
    EXPECT_NEAR(eig.eigenvalues[2], 0.125, 1e-15);
    EXPECT_NEAR(eig.eigenvalues[3], 0.625, 1e-15);
    EXPECT_THROW(prepare_pps(0.0), ValidationError);
    EXPECT_THROW(prepare_pps(1.5), ValidationError);
}

TEST(nmrpulse, pps_readout_independent_of_polarization) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 50; ++trial) {
        const ComplexMatrix u = tensor(test_util::random_unitary(rng).matrix(), test_util::random_unitary(rng).matrix()) *
                                controlled_u(test_util::random_unitary(rng)).matrix();
        const double reference = ideal_readout(prepare_pps(1.0).evolve(u)).phase_fraction;
        for (double eps : {0.5, 1e-3, 1e-5}) {
            const double phase = ideal_readout(prepare_pps(eps).evolve(u)).phase_fraction;
            EXPECT_LE(turn_distance(phase, reference), 1e-12) << eps;
        }
    }
}

TEST(nmrpulse, compile_identity) {
    PulseSequence seq = compile_controlled_u(UnitaryMatrix::identity(2));
    EXPECT_TRUE(seq.events().empty());
    EXPECT_NEAR(seq.achieved_fidelity(), 1.0, 1e-15);
}

TEST(nmrpulse, compile_phase_gate_uses_one_delay) {
    for (double theta : {0.3, -1.1, kPi, 2.9}) {
        const UnitaryMatrix u(ComplexMatrix{{1.0, 0.0}, {0.0, std::polar(1.0, theta)}});
        PulseSequence seq = compile_controlled_u(u);
        int delays = 0;
        for (const SequenceEvent &e : seq.events()) {
            if (const auto *d = std::get_if<DelayEvent>(&e)) {
                ++delays;
                EXPECT_LE(d->duration, 1.0 / (2.0 * kJ) + 1e-15);
            }
        }
        EXPECT_EQ(delays, 1) << theta;
        EXPECT_GE(seq.achieved_fidelity(), kMinCompileFidelity);
        EXPECT_GE(gate_fidelity(evolve_sequence(seq, SpinSystem{}).matrix(), controlled_u(u).matrix()),
                  kMinCompileFidelity);
    }
}

TEST(nmrpulse, compile_h2_propagator) {
    PulseSequence seq = compile_controlled_u(expm_herm(build_h2().matrix, 1.941122));
    EXPECT_GE(seq.achieved_fidelity(), kMinCompileFidelity);
    EXPECT_LE(seq.events().size(), 12u);
    EXPECT_NEAR(seq.achieved_fidelity(),
                gate_fidelity(seq.intended_unitary().matrix(), evolve_sequence(seq, seq.spins()).matrix()), 1e-12);
}

TEST(nmrpulse, compile_random_unitaries) {
    std::mt19937_64 rng(100);
    for (int trial = 0; trial < 100; ++trial) {
        const UnitaryMatrix u = test_util::random_unitary(rng);
        PulseSequence seq = compile_controlled_u(u);
        ASSERT_GE(seq.achieved_fidelity(), kMinCompileFidelity) << trial;
        ASSERT_LE(seq.events().size(), 12u);
    }
}

TEST(nmrpulse, compile_special_unitaries) {
    const std::vector<ComplexMatrix> cases{
        pauli::x(), pauli::y(), pauli::z(), pauli::identity() * Complex(0.0, 1.0),
        ComplexMatrix{{std::polar(1.0, 0.7), 0.0}, {0.0, std::polar(1.0, 0.7 + 1e-13)}},
        ComplexMatrix{{0.0, std::polar(1.0, 0.2)}, {std::polar(1.0, -1.3), 0.0}},
    };
    for (const ComplexMatrix &m : cases) {
        EXPECT_GE(compile_controlled_u(UnitaryMatrix(m)).achieved_fidelity(), kMinCompileFidelity);
    }
}

TEST(nmrpulse, compile_preconditions) {
    EXPECT_THROW(compile_controlled_u(UnitaryMatrix::identity(4)), ValidationError);
    EXPECT_THROW(compile_controlled_u(UnitaryMatrix(pauli::x()), SpinSystem{0.0, 0.0, 0.0}), ValidationError);
    EXPECT_THROW(compile_controlled_u(UnitaryMatrix(pauli::x()), SpinSystem{10.0, 0.0, kJ}), ValidationError);
}

TEST(nmrpulse, input_preparation) {
    const PureState g = spectrum(build_h2()).ground_state;
    const ComplexMatrix prep = evolve_events(input_preparation_events(g), SpinSystem{});
    const PureState out = apply(prep, tensor(ket_up(), ket_up()));
    EXPECT_NEAR(state_fidelity(out, interferometer_input(g)), 1.0, 1e-13);
}

TEST(nmrpulse, probe_phase_correction) {
    const double chi = 0.83;
    const ComplexMatrix m = evolve_events(probe_phase_events(chi), SpinSystem{});
    const ComplexMatrix expected = tensor(ComplexMatrix{{1.0, 0.0}, {0.0, std::polar(1.0, -chi)}}, pauli::identity());
    EXPECT_NEAR(gate_fidelity(m, expected), 1.0, 1e-14);
}

TEST(nmrpulse, backend_matches_ideal_readout) {
    const MolecularHamiltonian h = build_h2();
    for (int kmax : {1, 3, 6}) {
        const IterationConfig cfg = h2_config(kmax);
        const IpeaRun ideal = run_ipea(h, cfg, spectrum(h).ground_state);
        for (PulseRealization mode : {PulseRealization::repeated_block, PulseRealization::recompile_each}) {
            PulseBackendOptions opts;
            opts.realization = mode;
            const IpeaRun pulse = run_pulse_backend(h, cfg, std::nullopt, opts);
            ASSERT_EQ(pulse.records.size(), ideal.records.size());
            for (std::size_t k = 0; k < ideal.records.size(); ++k) {
                EXPECT_NEAR(pulse.records[k].measured_phase, ideal.records[k].measured_phase, 1e-8) << kmax << " " << k;
            }
            EXPECT_LE(turn_distance(pulse.estimate.value, ideal.estimate.value), 1e-8);
        }
    }
}

TEST(nmrpulse, backend_with_weak_polarization) {
    const MolecularHamiltonian h = build_h2();
    const IterationConfig cfg = h2_config(3);
    PulseBackendOptions opts;
    opts.pps_polarization = 1e-5;
    const IpeaRun weak = run_pulse_backend(h, cfg, std::nullopt, opts);
    const IpeaRun ideal = run_ipea(h, cfg, spectrum(h).ground_state);
    for (std::size_t k = 0; k < ideal.records.size(); ++k) {
        EXPECT_NEAR(weak.records[k].measured_phase, ideal.records[k].measured_phase, 1e-8);
    }
}

TEST(nmrpulse, over_rotation_error_compounds) {
    const MolecularHamiltonian h = build_h2();
    const IterationConfig cfg = h2_config();
    const PureState g = spectrum(h).ground_state;
    auto profile = [&](double r) {
        PulseBackendOptions opts;
        opts.errors.over_rotation = r;
        return phase_error_profile(h, cfg, g, run_pulse_backend(h, cfg, g, opts).records);
    };
    const std::vector<double> errors = profile(1e-3);
    const auto ratio = fit_growth_ratio(errors, cfg.phase_error_bound);
    ASSERT_TRUE(ratio.has_value());
    EXPECT_GE(*ratio, 6.0);
    // Over-rotated pi-pulse pairs shift the probe phase only at second order.
    const std::vector<double> weak = profile(1e-4);
    EXPECT_NEAR(errors[0] / weak[0], 100.0, 1.0);
    // Recompiling every U_k keeps the error at the single-block level.
    PulseBackendOptions opts;
    opts.errors.over_rotation = 1e-3;
    opts.realization = PulseRealization::recompile_each;
    const std::vector<double> flat = phase_error_profile(h, cfg, g, run_pulse_backend(h, cfg, g, opts).records);
    for (double e : flat) {
        EXPECT_LE(e, 1e-5);
    }
}

TEST(nmrpulse, backend_rejects_larger_systems) {
    MolecularHamiltonian h4{HermitianMatrix(ComplexMatrix::diagonal({-1.0, 0.0, 0.5, 1.0})), "diag4", {}};
    IterationConfig cfg;
    EXPECT_THROW(run_pulse_backend(h4, cfg), ValidationError);
}

TEST(nmrpulse, sequence_export_format) {
    const UnitaryMatrix u(ComplexMatrix{{1.0, 0.0}, {0.0, std::polar(1.0, 0.4)}});
    PulseSequence seq = compile_controlled_u(u);
    std::ostringstream out;
    write_pulse_sequence(out, seq);
    std::istringstream in(out.str());
    std::string line;
    std::size_t lines = 0;
    std::string last;
    while (std::getline(in, line)) {
        ++lines;
        last = line;
        EXPECT_TRUE(line.rfind("PULSE probe ", 0) == 0 || line.rfind("PULSE system ", 0) == 0 ||
                    line.rfind("DELAY ", 0) == 0 || line.rfind("FIDELITY ", 0) == 0)
            << line;
    }
    EXPECT_EQ(lines, seq.events().size() + 1);
    EXPECT_EQ(last.rfind("FIDELITY ", 0), 0u);
    EXPECT_GE(std::stod(last.substr(9)), kMinCompileFidelity);
}

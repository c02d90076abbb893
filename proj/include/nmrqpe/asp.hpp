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

// Adiabatic state preparation along H(s) = (1 - s) sigma_x + s H.

#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "nmrqpe/error.hpp"
#include "nmrqpe/molham.hpp"
#include "nmrqpe/qcore.hpp"

namespace nmrqpe {

struct AdiabaticSchedule {
    int steps = 6;  // M + 1
    double total_time = 1.0;
    MolecularHamiltonian target;

    double step_duration() const { return total_time / steps; }

    /// s_m = m / M so that the sweep starts at sigma_x and ends at H; a
    /// single-step schedule jumps straight to s = 1.
    double parameter(int m) const { return steps == 1 ? 1.0 : static_cast<double>(m) / (steps - 1); }

    void validate() const {
        if (steps < 1) {
            throw ValidationError("adiabatic schedule needs at least one step");
        }
        if (!(total_time > 0.0) || !std::isfinite(total_time)) {
            throw ValidationError("adiabatic total time must be positive and finite");
        }
        if (target.dim() != 2) {
            throw ValidationError("adiabatic preparation drives a single system qubit (2x2 target)");
        }
    }
};

struct ASPResult {
    PureState final_state;
    double fidelity = 0.0;
    std::vector<double> per_step_fidelities;
    AdiabaticSchedule schedule;
};

inline HermitianMatrix interpolated_hamiltonian(const MolecularHamiltonian &target, double s) {
    if (!(s >= 0.0 && s <= 1.0)) {
        throw ValidationError("interpolation parameter s must lie in [0, 1], got " + format_number(s));
    }
    if (target.dim() != 2) {
        throw ValidationError("interpolation with sigma_x needs a 2x2 target");
    }
    return HermitianMatrix((1.0 - s) * pauli::x() + s * target.matrix.matrix());
}

/// Symmetric split e^{-i(d/2)(1-s)X} e^{-i s H d} e^{-i(d/2)(1-s)X}; local
/// error O(d^3).
inline UnitaryMatrix trotter_step(const MolecularHamiltonian &target, double s, double delta) {
    if (!(delta > 0.0) || !std::isfinite(delta)) {
        throw ValidationError("Trotter step duration must be positive");
    }
    if (!(s >= 0.0 && s <= 1.0)) {
        throw ValidationError("interpolation parameter s must lie in [0, 1], got " + format_number(s));
    }
    const HermitianMatrix sx(pauli::x());
    const UnitaryMatrix half = expm_herm(sx, 0.5 * delta * (1.0 - s));
    const UnitaryMatrix body = expm_herm(target.matrix, s * delta);
    return half * body * half;
}

inline ASPResult run_asp(const AdiabaticSchedule &schedule) {
    schedule.validate();
    const double delta = schedule.step_duration();

    // Check the whole path before evolving anything.
    std::vector<PureState> ground;
    ground.reserve(static_cast<std::size_t>(schedule.steps));
    for (int m = 0; m < schedule.steps; ++m) {
        const double s = schedule.parameter(m);
        MolecularHamiltonian sampled{interpolated_hamiltonian(schedule.target, s), schedule.target.label, {}};
        try {
            ground.push_back(spectrum(sampled).ground_state);
        } catch (const DegeneracyError &) {
            throw DegeneracyError("interpolated Hamiltonian is degenerate at s_" + std::to_string(m) + " = " +
                                  format_number(s));
        }
    }

    PureState psi = ket_minus();
    std::vector<double> fidelities;
    fidelities.reserve(ground.size());
    for (int m = 0; m < schedule.steps; ++m) {
        psi = apply(trotter_step(schedule.target, schedule.parameter(m), delta), psi);
        fidelities.push_back(state_fidelity(ground[static_cast<std::size_t>(m)], psi));
    }
    const double final_fidelity = fidelities.back();
    return ASPResult{std::move(psi), final_fidelity, std::move(fidelities), schedule};
}

struct ScanPoint {
    double total_time;
    double fidelity;
};

inline std::vector<ScanPoint> scan_total_time(const MolecularHamiltonian &target, int steps,
                                              const std::vector<double> &t_grid) {
    if (t_grid.empty()) {
        throw ValidationError("total-time grid is empty");
    }
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        if (!(t_grid[i] > 0.0) || (i > 0 && !(t_grid[i] > t_grid[i - 1]))) {
            throw ValidationError("total-time grid must be positive and strictly ascending");
        }
    }
    std::vector<ScanPoint> out;
    out.reserve(t_grid.size());
    for (double t : t_grid) {
        out.push_back({t, run_asp(AdiabaticSchedule{steps, t, target}).fidelity});
    }
    return out;
}

}  // namespace nmrqpe

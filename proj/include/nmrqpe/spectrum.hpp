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

// Simulated probe spectra. The probe FID of a two-spin system is a J doublet
// whose zero-order phase is the interferometer phase; integrating the complex
// spectrum against a reference spectrum recovers it.

#pragma once

#include <fftw3.h>

#include <cmath>
#include <complex>
#include <cstdio>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "nmrqpe/error.hpp"
#include "nmrqpe/qcore.hpp"
#include "nmrqpe/turns.hpp"

namespace nmrqpe {

struct SpectrumParams {
    double line_width_hz = 2.0;
    double j_coupling_hz = 214.6;
    int points = 4096;
    double spectral_width_hz = 2000.0;
};

struct SpectrumTrace {
    std::vector<double> frequencies;  // Hz, ascending, uniform
    std::vector<Complex> complex_amplitudes;
    double reference_phase = 0.0;  // radians
};

namespace detail {

struct FftwPlanDeleter {
    void operator()(fftw_plan_s *plan) const { fftw_destroy_plan(plan); }
};

inline bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace detail

inline SpectrumTrace synthesize_spectrum(double phase_fraction, const SpectrumParams &params = {}) {
    if (!detail::is_power_of_two(params.points) || params.points < 256) {
        throw ValidationError("spectrum points must be a power of two >= 256");
    }
    if (!(params.line_width_hz > 0.0)) {
        throw ValidationError("line width must be positive");
    }
    if (!(params.j_coupling_hz > 0.0) || !(params.spectral_width_hz > params.j_coupling_hz)) {
        throw ValidationError("need 0 < J < spectral width");
    }
    if (!std::isfinite(phase_fraction)) {
        throw ValidationError("phase fraction must be finite");
    }

    const auto n = static_cast<std::size_t>(params.points);
    const double dt = 1.0 / params.spectral_width_hz;
    const double df = params.spectral_width_hz / static_cast<double>(n);
    const Complex amplitude = std::polar(1.0, kTwoPi * phase_fraction);

    std::vector<Complex> fid(n);
    std::vector<Complex> spec(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double t = static_cast<double>(k) * dt;
        fid[k] = amplitude * std::cos(kPi * params.j_coupling_hz * t) * std::exp(-kPi * params.line_width_hz * t);
    }

    std::unique_ptr<fftw_plan_s, detail::FftwPlanDeleter> plan(
        fftw_plan_dft_1d(params.points, reinterpret_cast<fftw_complex *>(fid.data()),
                         reinterpret_cast<fftw_complex *>(spec.data()), FFTW_FORWARD, FFTW_ESTIMATE));
    fftw_execute(plan.get());

    // Shift zero frequency to the middle so the grid ascends from -SW/2.
    SpectrumTrace trace;
    trace.frequencies.resize(n);
    trace.complex_amplitudes.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t src = (k + n / 2) % n;
        trace.frequencies[k] = (static_cast<double>(k) - static_cast<double>(n / 2)) * df;
        trace.complex_amplitudes[k] = spec[src] * dt;
    }
    return trace;
}

/// Complex integral of the spectrum over the full band.
inline Complex line_integral(const SpectrumTrace &trace) {
    if (trace.frequencies.size() < 2 || trace.frequencies.size() != trace.complex_amplitudes.size()) {
        throw ValidationError("spectrum trace needs matching frequency and amplitude arrays");
    }
    const double df = trace.frequencies[1] - trace.frequencies[0];
    Complex acc = 0.0;
    for (const Complex &z : trace.complex_amplitudes) {
        acc += z;
    }
    return acc * df;
}

inline double extract_phase_from_spectrum(const SpectrumTrace &trace, const SpectrumTrace &reference) {
    if (trace.frequencies.size() != reference.frequencies.size()) {
        throw ValidationError("spectrum and reference have different grid sizes");
    }
    for (std::size_t k = 0; k < trace.frequencies.size(); ++k) {
        const double scale = std::max(1.0, std::abs(reference.frequencies[k]));
        if (std::abs(trace.frequencies[k] - reference.frequencies[k]) > 1e-9 * scale) {
            throw ValidationError("spectrum and reference frequency grids differ at index " + std::to_string(k));
        }
    }
    const Complex ref = line_integral(reference);
    if (std::abs(ref) < 1e-9) {
        throw ReadoutError("reference spectrum integral vanishes");
    }
    return wrap_turns(std::arg(line_integral(trace) / ref) / kTwoPi);
}

inline void write_spectrum_csv(std::ostream &out, const SpectrumTrace &trace) {
    out << "frequency_hz,amplitude_re,amplitude_im\n";
    char buf[128];
    for (std::size_t k = 0; k < trace.frequencies.size(); ++k) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", trace.frequencies[k],
                      trace.complex_amplitudes[k].real(), trace.complex_amplitudes[k].imag());
        out << buf;
    }
}

}  // namespace nmrqpe

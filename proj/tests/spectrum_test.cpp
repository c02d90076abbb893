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

#include "nmrqpe/spectrum.hpp"

#include <sstream>

#include "gtest/gtest.h"

using namespace nmrqpe;

namespace {

// Amplitude at the grid point closest to a line position.
Complex peak_value(const SpectrumTrace &t, double center) {
    std::size_t best = 0;
    for (std::size_t k = 0; k < t.frequencies.size(); ++k) {
        if (std::abs(t.frequencies[k] - center) < std::abs(t.frequencies[best] - center)) {
            best = k;
        }
    }
    return t.complex_amplitudes[best];
}

// Lines at +-J/2 = +-100 Hz fall exactly on the 0.5 Hz grid.
SpectrumParams on_grid_params() {
    SpectrumParams p;
    p.j_coupling_hz = 200.0;
    p.spectral_width_hz = 2048.0;
    return p;
}

}  // namespace

TEST(spectrum, grid_contract) {
    SpectrumTrace t = synthesize_spectrum(0.1);
    ASSERT_EQ(t.frequencies.size(), 4096u);
    ASSERT_EQ(t.complex_amplitudes.size(), 4096u);
    const double df = t.frequencies[1] - t.frequencies[0];
    EXPECT_NEAR(df, 2000.0 / 4096.0, 1e-12);
    for (std::size_t k = 1; k < t.frequencies.size(); ++k) {
        ASSERT_NEAR(t.frequencies[k] - t.frequencies[k - 1], df, 1e-9);
    }
    EXPECT_DOUBLE_EQ(t.frequencies.front(), -1000.0);
}

TEST(spectrum, doublet_at_half_j) {
    SpectrumTrace t = synthesize_spectrum(0.0);
    std::size_t peak = 0;
    for (std::size_t k = 0; k < t.frequencies.size(); ++k) {
        if (t.frequencies[k] > 0.0 && std::abs(t.complex_amplitudes[k]) > std::abs(t.complex_amplitudes[peak])) {
            peak = k;
        }
    }
    EXPECT_NEAR(t.frequencies[peak], 214.6 / 2.0, 1.0);
}

TEST(spectrum, zero_phase_is_absorptive) {
    SpectrumTrace t = synthesize_spectrum(0.0, on_grid_params());
    for (double center : {-100.0, 100.0}) {
        Complex line = peak_value(t, center);
        EXPECT_GT(line.real(), 0.0);
        EXPECT_LT(std::abs(line.imag()), 2e-2 * line.real()) << center;
    }
}

TEST(spectrum, quarter_turn_is_dispersive) {
    SpectrumTrace t = synthesize_spectrum(0.25, on_grid_params());
    for (double center : {-100.0, 100.0}) {
        Complex line = peak_value(t, center);
        EXPECT_GT(line.imag(), 0.0);
        EXPECT_LT(std::abs(line.real()), 2e-2 * line.imag()) << center;
    }
}

TEST(spectrum, round_trip_h2_phase) {
    SpectrumTrace ref = synthesize_spectrum(0.0);
    EXPECT_EQ(extract_phase_from_spectrum(ref, ref), 0.0);
    EXPECT_LE(turn_distance(extract_phase_from_spectrum(synthesize_spectrum(0.572022), ref), 0.572022), 0.0003);
}

TEST(spectrum, round_trip_grid) {
    SpectrumTrace ref = synthesize_spectrum(0.0);
    for (int i = 0; i < 64; ++i) {
        const double phi = i / 64.0;
        EXPECT_LE(turn_distance(extract_phase_from_spectrum(synthesize_spectrum(phi), ref), phi), 0.0003) << phi;
    }
}

TEST(spectrum, validation) {
    SpectrumParams p;
    p.points = 1000;
    EXPECT_THROW(synthesize_spectrum(0.0, p), ValidationError);
    p.points = 128;
    EXPECT_THROW(synthesize_spectrum(0.0, p), ValidationError);
    p = SpectrumParams{};
    p.spectral_width_hz = 200.0;
    EXPECT_THROW(synthesize_spectrum(0.0, p), ValidationError);

    SpectrumParams small;
    small.points = 1024;
    EXPECT_THROW(extract_phase_from_spectrum(synthesize_spectrum(0.1, small), synthesize_spectrum(0.0)),
                 ValidationError);
    SpectrumTrace ref = synthesize_spectrum(0.0);
    SpectrumTrace dead = ref;
    for (auto &z : dead.complex_amplitudes) {
        z = 0.0;
    }
    EXPECT_THROW(extract_phase_from_spectrum(ref, dead), ReadoutError);
}

TEST(spectrum, csv_export) {
    SpectrumParams p;
    p.points = 256;
    std::ostringstream out;
    write_spectrum_csv(out, synthesize_spectrum(0.2, p));
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "frequency_hz,amplitude_re,amplitude_im");
    int rows = 0;
    while (std::getline(in, line)) {
        ++rows;
    }
    EXPECT_EQ(rows, 256);
}

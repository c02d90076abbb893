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

#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "nmrqpe/molham.hpp"
#include "nmrqpe/qcore.hpp"

namespace test_util {

using nmrqpe::Complex;
using nmrqpe::ComplexMatrix;

inline nmrqpe::HermitianMatrix random_hermitian(std::size_t dim, std::mt19937_64 &rng, double scale = 1.0) {
    std::normal_distribution<double> normal(0.0, scale);
    ComplexMatrix m(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        m(r, r) = normal(rng);
        for (std::size_t c = r + 1; c < dim; ++c) {
            m(r, c) = Complex(normal(rng), normal(rng));
            m(c, r) = std::conj(m(r, c));
        }
    }
    return nmrqpe::HermitianMatrix(std::move(m));
}

inline nmrqpe::UnitaryMatrix random_unitary(std::mt19937_64 &rng) {
    return nmrqpe::expm_herm(random_hermitian(2, rng, 2.0), 1.0);
}

inline nmrqpe::DensityMatrix random_density(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> weight(0.0, 1.0);
    auto eig = nmrqpe::hermitian_eig(random_hermitian(2, rng));
    const double p = weight(rng);
    std::vector<Complex> diag{p, 1.0 - p};
    const ComplexMatrix &v = eig.eigenvectors.matrix();
    ComplexMatrix rho = v * ComplexMatrix::diagonal(diag) * v.adjoint();
    rho = 0.5 * (rho + rho.adjoint());
    return nmrqpe::DensityMatrix(std::move(rho));
}

/// Random 2x2 Hamiltonian whose ground energy satisfies -2pi/tau < E_g < 0
/// (negative energy, phase in (0, 1)) under the automatic tau choice.
inline nmrqpe::MolecularHamiltonian random_negative_h2like(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> diag(-3.0, 0.5);
    std::uniform_real_distribution<double> off(-1.0, 1.0);
    for (;;) {
        const double h11 = diag(rng);
        const double h22 = diag(rng);
        const Complex h12(off(rng), off(rng));
        ComplexMatrix m{{h11, h12}, {std::conj(h12), h22}};
        nmrqpe::MolecularHamiltonian h{nmrqpe::HermitianMatrix(m), "random", {}};
        const auto eig = nmrqpe::hermitian_eig(h.matrix);
        if (eig.eigenvalues[1] - eig.eigenvalues[0] < 1e-3 || eig.eigenvalues[0] >= -1e-3) {
            continue;
        }
        try {
            (void)nmrqpe::choose_tau(h);
        } catch (const nmrqpe::RangeError &) {
            continue;
        }
        return h;
    }
}

}  // namespace test_util

#ifndef NMRQPE_TEST_DATA
#define NMRQPE_TEST_DATA "tests/data"
#endif

inline std::string test_util_read(const std::string &name) {
    std::ifstream in(std::string(NMRQPE_TEST_DATA) + "/" + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

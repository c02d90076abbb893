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

// Molecular Hamiltonians supplied as small Hermitian matrices (hartree).

#pragma once

#include <cmath>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nlohmann/json.hpp"
#include "nmrqpe/error.hpp"
#include "nmrqpe/qcore.hpp"
#include "nmrqpe/turns.hpp"

namespace nmrqpe {

inline constexpr double kMinGap = 1e-9;

struct MolecularHamiltonian {
    HermitianMatrix matrix;
    std::string label;
    std::map<std::string, std::string> metadata;

    std::size_t dim() const { return matrix.dim(); }
    friend bool operator==(const MolecularHamiltonian &, const MolecularHamiltonian &) = default;
};

struct EnergySpectrum {
    std::vector<double> energies;  // ascending, hartree
    PureState ground_state;
};

/// Two-configuration H2 Hamiltonian in the STO-3G basis at R = 1.4 a.u.
inline MolecularHamiltonian build_h2() {
    return MolecularHamiltonian{
        HermitianMatrix{{-1.8310, 0.1813}, {0.1813, -0.2537}},
        "H2/STO-3G",
        {{"basis", "STO-3G"}, {"distance", "1.4 a.u."}},
    };
}

/// Exact diagonalization. Throws DegeneracyError when the ground state is
/// not separated from the first excited state by more than kMinGap.
inline EnergySpectrum spectrum(const MolecularHamiltonian &h) {
    EigenDecomposition eig = hermitian_eig(h.matrix);
    if (eig.eigenvalues.size() > 1 && eig.eigenvalues[1] - eig.eigenvalues[0] <= kMinGap) {
        throw DegeneracyError(
            "ground state of '" + h.label + "' is degenerate (gap " +
            format_number(eig.eigenvalues[1] - eig.eigenvalues[0]) + " hartree)");
    }
    PureState ground = eig.eigenvector(0);
    return EnergySpectrum{std::move(eig.eigenvalues), std::move(ground)};
}

inline double ground_energy(const MolecularHamiltonian &h) { return spectrum(h).energies.front(); }

/// Eigenphase fraction of exp(-iH tau) on the ground state: -E_g tau / 2pi mod 1.
inline double ground_phase(const MolecularHamiltonian &h, double tau) {
    return wrap_turns(-ground_energy(h) * tau / kTwoPi);
}

/// tau = pi / sqrt((2 H12)^2 + (H11 - H22)^2), the half-period of the
/// two-level beat. Only defined for 2x2 Hamiltonians.
inline double choose_tau(const MolecularHamiltonian &h) {
    if (h.dim() != 2) {
        throw ValidationError("automatic tau needs a 2x2 Hamiltonian; pass tau explicitly");
    }
    const ComplexMatrix &m = h.matrix.matrix();
    const double off = 2.0 * std::abs(m(0, 1));
    const double diag = m(0, 0).real() - m(1, 1).real();
    const double denom = std::sqrt(off * off + diag * diag);
    if (!(denom > 0.0)) {
        throw RangeError("automatic tau is undefined for a Hamiltonian proportional to the identity");
    }
    const double tau = kPi / denom;
    const double eg = hermitian_eig(h.matrix).eigenvalues.front();
    if (std::abs(eg) * tau >= kTwoPi) {
        throw RangeError(
            "automatic tau = " + format_number(tau) + " gives |E_g| tau >= 2 pi; supply tau manually");
    }
    return tau;
}

namespace detail {

inline std::string line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

inline std::vector<double> read_matrix(const nlohmann::json &doc, const std::string &field, std::size_t dim) {
    const auto &rows = doc.at(field);
    if (!rows.is_array() || rows.size() != dim) {
        throw ParseError("field '" + field + "': expected an array of " + std::to_string(dim) + " rows");
    }
    std::vector<double> out;
    out.reserve(dim * dim);
    for (std::size_t r = 0; r < dim; ++r) {
        const auto &row = rows[r];
        const std::string where = field + "[" + std::to_string(r) + "]";
        if (!row.is_array() || row.size() != dim) {
            throw ParseError("field '" + where + "': expected an array of " + std::to_string(dim) + " numbers");
        }
        for (std::size_t c = 0; c < dim; ++c) {
            if (!row[c].is_number()) {
                throw ParseError("field '" + where + "[" + std::to_string(c) + "]': expected a number");
            }
            out.push_back(row[c].get<double>());
        }
    }
    return out;
}

}  // namespace detail

/// Parses the JSON Hamiltonian document
/// {"label", "dim", "matrix_re", "matrix_im"?, "metadata"?}.
inline MolecularHamiltonian load_hamiltonian(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError("malformed Hamiltonian document at " + detail::line_column(text, e.byte) + ": " + e.what());
    }
    if (!doc.is_object()) {
        throw ParseError("Hamiltonian document must be a JSON object");
    }
    for (const char *required : {"label", "dim", "matrix_re"}) {
        if (!doc.contains(required)) {
            throw ParseError(std::string("field '") + required + "' is missing");
        }
    }
    if (!doc["label"].is_string()) {
        throw ParseError("field 'label': expected a string");
    }
    if (!doc["dim"].is_number_integer() || doc["dim"].get<long long>() < 1 ||
        doc["dim"].get<long long>() > static_cast<long long>(kMaxDim)) {
        throw ParseError("field 'dim': expected an integer in [1, 8]");
    }
    const auto dim = doc["dim"].get<std::size_t>();
    const std::vector<double> re = detail::read_matrix(doc, "matrix_re", dim);
    std::vector<double> im(dim * dim, 0.0);
    if (doc.contains("matrix_im")) {
        im = detail::read_matrix(doc, "matrix_im", dim);
    }
    std::map<std::string, std::string> metadata;
    if (doc.contains("metadata")) {
        const auto &meta = doc["metadata"];
        if (!meta.is_object()) {
            throw ParseError("field 'metadata': expected an object of strings");
        }
        for (const auto &[key, value] : meta.items()) {
            if (!value.is_string()) {
                throw ParseError("field 'metadata." + key + "': expected a string");
            }
            metadata.emplace(key, value.get<std::string>());
        }
    }
    std::vector<Complex> entries(dim * dim);
    for (std::size_t i = 0; i < entries.size(); ++i) {
        entries[i] = Complex(re[i], im[i]);
    }
    return MolecularHamiltonian{
        HermitianMatrix(ComplexMatrix(dim, std::move(entries))),
        doc["label"].get<std::string>(),
        std::move(metadata),
    };
}

inline std::string serialize_hamiltonian(const MolecularHamiltonian &h) {
    const std::size_t dim = h.dim();
    nlohmann::json re = nlohmann::json::array();
    nlohmann::json im = nlohmann::json::array();
    bool has_imag = false;
    for (std::size_t r = 0; r < dim; ++r) {
        nlohmann::json row_re = nlohmann::json::array();
        nlohmann::json row_im = nlohmann::json::array();
        for (std::size_t c = 0; c < dim; ++c) {
            row_re.push_back(h.matrix(r, c).real());
            row_im.push_back(h.matrix(r, c).imag());
            has_imag = has_imag || h.matrix(r, c).imag() != 0.0;
        }
        re.push_back(std::move(row_re));
        im.push_back(std::move(row_im));
    }
    nlohmann::json doc = {{"label", h.label}, {"dim", dim}, {"matrix_re", std::move(re)}};
    if (has_imag) {
        doc["matrix_im"] = std::move(im);
    }
    doc["metadata"] = h.metadata;
    return doc.dump(2);
}

}  // namespace nmrqpe

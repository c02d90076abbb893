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

// Dense complex linear algebra for one to three qubits.
//
// Everything here is a value type. Invariant-carrying wrappers
// (HermitianMatrix, UnitaryMatrix, PureState, DensityMatrix) validate on
// construction and throw ValidationError, so a live object always satisfies
// its tolerance contract.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nmrqpe/error.hpp"

namespace nmrqpe {

using Complex = std::complex<double>;

inline constexpr std::size_t kMaxDim = 8;

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kUnitaryTol = 1e-10;
inline constexpr double kNormTol = 1e-12;
inline constexpr double kJacobiTol = 1e-13;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

class ComplexMatrix {
   public:
    explicit ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) { check_dim(dim); }

    ComplexMatrix(std::size_t dim, std::vector<Complex> entries) : dim_(dim), entries_(std::move(entries)) {
        check_dim(dim);
        if (entries_.size() != dim * dim) {
            throw ValidationError(
                "matrix of dim " + std::to_string(dim) + " needs " + std::to_string(dim * dim) +
                " entries, got " + std::to_string(entries_.size()));
        }
        for (const Complex &z : entries_) {
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
                throw ValidationError("matrix entry is not finite");
            }
        }
    }

    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) : dim_(rows.size()) {
        check_dim(dim_);
        entries_.reserve(dim_ * dim_);
        for (const auto &row : rows) {
            if (row.size() != dim_) {
                throw ValidationError("matrix rows must all have length " + std::to_string(dim_));
            }
            entries_.insert(entries_.end(), row.begin(), row.end());
        }
    }

    static ComplexMatrix identity(std::size_t dim) {
        ComplexMatrix m(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            m(i, i) = 1.0;
        }
        return m;
    }

    static ComplexMatrix diagonal(std::span<const Complex> diag) {
        ComplexMatrix m(diag.size());
        for (std::size_t i = 0; i < diag.size(); ++i) {
            m(i, i) = diag[i];
        }
        return m;
    }

    static ComplexMatrix diagonal(std::initializer_list<Complex> diag) {
        return diagonal(std::span<const Complex>(diag.begin(), diag.size()));
    }

    std::size_t dim() const { return dim_; }
    std::span<const Complex> entries() const { return entries_; }

    Complex operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
    Complex &operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }

    ComplexMatrix adjoint() const {
        ComplexMatrix out(dim_);
        for (std::size_t r = 0; r < dim_; ++r) {
            for (std::size_t c = 0; c < dim_; ++c) {
                out(c, r) = std::conj((*this)(r, c));
            }
        }
        return out;
    }

    Complex trace() const {
        Complex t = 0.0;
        for (std::size_t i = 0; i < dim_; ++i) {
            t += (*this)(i, i);
        }
        return t;
    }

    ComplexMatrix &operator+=(const ComplexMatrix &rhs) {
        require_same_dim(rhs);
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            entries_[i] += rhs.entries_[i];
        }
        return *this;
    }

    ComplexMatrix &operator-=(const ComplexMatrix &rhs) {
        require_same_dim(rhs);
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            entries_[i] -= rhs.entries_[i];
        }
        return *this;
    }

    ComplexMatrix &operator*=(Complex scale) {
        for (Complex &z : entries_) {
            z *= scale;
        }
        return *this;
    }

    friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix &rhs) { return lhs += rhs; }
    friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix &rhs) { return lhs -= rhs; }
    friend ComplexMatrix operator*(ComplexMatrix m, Complex scale) { return m *= scale; }
    friend ComplexMatrix operator*(Complex scale, ComplexMatrix m) { return m *= scale; }

    friend ComplexMatrix operator*(const ComplexMatrix &lhs, const ComplexMatrix &rhs) {
        lhs.require_same_dim(rhs);
        const std::size_t n = lhs.dim_;
        ComplexMatrix out(n);
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t k = 0; k < n; ++k) {
                const Complex a = lhs(r, k);
                if (a == Complex{}) {
                    continue;
                }
                for (std::size_t c = 0; c < n; ++c) {
                    out(r, c) += a * rhs(k, c);
                }
            }
        }
        return out;
    }

    friend bool operator==(const ComplexMatrix &, const ComplexMatrix &) = default;

   private:
    static void check_dim(std::size_t dim) {
        if (dim == 0 || dim > kMaxDim) {
            throw ValidationError("matrix dimension must be in [1, 8], got " + std::to_string(dim));
        }
    }

    void require_same_dim(const ComplexMatrix &rhs) const {
        if (rhs.dim_ != dim_) {
            throw ValidationError(
                "dimension mismatch: " + std::to_string(dim_) + " vs " + std::to_string(rhs.dim_));
        }
    }

    std::size_t dim_;
    std::vector<Complex> entries_;
};

/// Largest entrywise modulus of a - b.
inline double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.dim() != b.dim()) {
        throw ValidationError("dimension mismatch in max_abs_diff");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
    }
    return worst;
}

inline double max_norm(const ComplexMatrix &a) {
    double worst = 0.0;
    for (const Complex &z : a.entries()) {
        worst = std::max(worst, std::abs(z));
    }
    return worst;
}

/// Worst deviation from Hermiticity, max |A[i][j] - conj(A[j][i])|.
inline double hermiticity_defect(const ComplexMatrix &a) {
    return max_abs_diff(a, a.adjoint());
}

inline double unitarity_defect(const ComplexMatrix &u) {
    return max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(u.dim()));
}

class HermitianMatrix {
   public:
    explicit HermitianMatrix(ComplexMatrix base) : base_(std::move(base)) {
        double worst = 0.0;
        std::size_t wr = 0;
        std::size_t wc = 0;
        for (std::size_t r = 0; r < base_.dim(); ++r) {
            for (std::size_t c = r; c < base_.dim(); ++c) {
                double d = std::abs(base_(r, c) - std::conj(base_(c, r)));
                if (d > worst) {
                    worst = d;
                    wr = r;
                    wc = c;
                }
            }
        }
        if (worst > kHermitianTol) {
            throw ValidationError(
                "matrix is not Hermitian: entries (" + std::to_string(wr) + "," + std::to_string(wc) +
                ") and (" + std::to_string(wc) + "," + std::to_string(wr) + ") differ by " +
                format_number(worst));
        }
    }

    HermitianMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
        : HermitianMatrix(ComplexMatrix(rows)) {}

    std::size_t dim() const { return base_.dim(); }
    const ComplexMatrix &matrix() const { return base_; }
    Complex operator()(std::size_t r, std::size_t c) const { return base_(r, c); }

    friend bool operator==(const HermitianMatrix &, const HermitianMatrix &) = default;

   private:
    ComplexMatrix base_;
};

class UnitaryMatrix {
   public:
    explicit UnitaryMatrix(ComplexMatrix base) : base_(std::move(base)) {
        double defect = unitarity_defect(base_);
        if (defect > kUnitaryTol) {
            throw ValidationError("matrix is not unitary: max |U^dag U - I| = " + format_number(defect));
        }
    }

    static UnitaryMatrix identity(std::size_t dim) { return UnitaryMatrix(ComplexMatrix::identity(dim)); }

    std::size_t dim() const { return base_.dim(); }
    const ComplexMatrix &matrix() const { return base_; }
    Complex operator()(std::size_t r, std::size_t c) const { return base_(r, c); }

    UnitaryMatrix adjoint() const { return UnitaryMatrix(base_.adjoint()); }

    friend UnitaryMatrix operator*(const UnitaryMatrix &a, const UnitaryMatrix &b) {
        return UnitaryMatrix(a.base_ * b.base_);
    }

    friend bool operator==(const UnitaryMatrix &, const UnitaryMatrix &) = default;

   private:
    ComplexMatrix base_;
};

class PureState {
   public:
    explicit PureState(std::vector<Complex> amplitudes) : amps_(std::move(amplitudes)) {
        if (amps_.empty() || amps_.size() > kMaxDim) {
            throw ValidationError("state dimension must be in [1, 8]");
        }
        double norm2 = 0.0;
        for (const Complex &z : amps_) {
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
                throw ValidationError("state amplitude is not finite");
            }
            norm2 += std::norm(z);
        }
        if (std::abs(norm2 - 1.0) > kNormTol) {
            throw ValidationError("state is not normalized: |psi|^2 = " + format_number(norm2));
        }
    }

    PureState(std::initializer_list<Complex> amplitudes) : PureState(std::vector<Complex>(amplitudes)) {}

    /// Rescales to unit norm before validating.
    static PureState normalized(std::vector<Complex> amplitudes) {
        double norm2 = 0.0;
        for (const Complex &z : amplitudes) {
            norm2 += std::norm(z);
        }
        if (!(norm2 > 0.0)) {
            throw ValidationError("cannot normalize a zero vector");
        }
        const double inv = 1.0 / std::sqrt(norm2);
        for (Complex &z : amplitudes) {
            z *= inv;
        }
        return PureState(std::move(amplitudes));
    }

    /// Computational basis vector |index>.
    static PureState basis(std::size_t dim, std::size_t index) {
        std::vector<Complex> a(dim);
        a.at(index) = 1.0;
        return PureState(std::move(a));
    }

    std::size_t dim() const { return amps_.size(); }
    std::span<const Complex> amplitudes() const { return amps_; }
    Complex operator[](std::size_t i) const { return amps_[i]; }

   private:
    std::vector<Complex> amps_;
};

inline Complex inner(const PureState &bra, const PureState &ket) {
    if (bra.dim() != ket.dim()) {
        throw ValidationError("state dimension mismatch");
    }
    Complex acc = 0.0;
    for (std::size_t i = 0; i < bra.dim(); ++i) {
        acc += std::conj(bra[i]) * ket[i];
    }
    return acc;
}

/// Applies a (numerically) unitary operator to a pure state.
inline PureState apply(const ComplexMatrix &op, const PureState &psi) {
    if (op.dim() != psi.dim()) {
        throw ValidationError("operator/state dimension mismatch");
    }
    std::vector<Complex> out(psi.dim());
    for (std::size_t r = 0; r < psi.dim(); ++r) {
        for (std::size_t c = 0; c < psi.dim(); ++c) {
            out[r] += op(r, c) * psi[c];
        }
    }
    return PureState(std::move(out));
}

/// Unitaries are only held to kUnitaryTol, so the image is renormalized.
inline PureState apply(const UnitaryMatrix &u, const PureState &psi) {
    if (u.dim() != psi.dim()) {
        throw ValidationError("operator/state dimension mismatch");
    }
    std::vector<Complex> out(psi.dim());
    for (std::size_t r = 0; r < psi.dim(); ++r) {
        for (std::size_t c = 0; c < psi.dim(); ++c) {
            out[r] += u(r, c) * psi[c];
        }
    }
    return PureState::normalized(std::move(out));
}

struct EigenDecomposition {
    std::vector<double> eigenvalues;  // ascending
    UnitaryMatrix eigenvectors;       // column j pairs with eigenvalues[j]

    PureState eigenvector(std::size_t j) const {
        std::vector<Complex> v(eigenvectors.dim());
        for (std::size_t r = 0; r < v.size(); ++r) {
            v[r] = eigenvectors(r, j);
        }
        return PureState::normalized(std::move(v));
    }
};

/// Cyclic complex Jacobi eigensolver.
///
/// Each rotation first removes the phase of the pivot A[p][q] with a diagonal
/// unitary, then applies the real symmetric Jacobi rotation. Sweeps stop once
/// the off-diagonal Frobenius norm drops below kJacobiTol (scaled by the matrix
/// norm when that exceeds one). Columns are returned in ascending eigenvalue
/// order with the first non-negligible component of each made real positive,
/// so the output is a deterministic function of the input.
inline EigenDecomposition hermitian_eig(const HermitianMatrix &h) {
    const std::size_t n = h.dim();
    ComplexMatrix a = 0.5 * (h.matrix() + h.matrix().adjoint());
    ComplexMatrix v = ComplexMatrix::identity(n);

    double frob2 = 0.0;
    for (const Complex &z : a.entries()) {
        frob2 += std::norm(z);
    }
    const double threshold = kJacobiTol * std::max(1.0, std::sqrt(frob2));

    auto off_norm = [&] {
        double s = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                if (r != c) {
                    s += std::norm(a(r, c));
                }
            }
        }
        return std::sqrt(s);
    };

    constexpr int kMaxSweeps = 100;
    for (int sweep = 0; sweep < kMaxSweeps && off_norm() > threshold; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex hpq = a(p, q);
                const double mag = std::abs(hpq);
                if (mag == 0.0) {
                    continue;
                }
                const Complex phase = std::conj(hpq) / mag;  // e^{-i arg h}
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = (aqq - app) / (2.0 * mag);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                // G restricted to (p, q): [[c, s], [-s e^{-i arg h}, c e^{-i arg h}]].
                const Complex gpp = c;
                const Complex gpq = s;
                const Complex gqp = -s * phase;
                const Complex gqq = c * phase;

                for (std::size_t r = 0; r < n; ++r) {
                    const Complex arp = a(r, p);
                    const Complex arq = a(r, q);
                    a(r, p) = arp * gpp + arq * gqp;
                    a(r, q) = arp * gpq + arq * gqq;
                    const Complex vrp = v(r, p);
                    const Complex vrq = v(r, q);
                    v(r, p) = vrp * gpp + vrq * gqp;
                    v(r, q) = vrp * gpq + vrq * gqq;
                }
                for (std::size_t col = 0; col < n; ++col) {
                    const Complex apc = a(p, col);
                    const Complex aqc = a(q, col);
                    a(p, col) = std::conj(gpp) * apc + std::conj(gqp) * aqc;
                    a(q, col) = std::conj(gpq) * apc + std::conj(gqq) * aqc;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return a(i, i).real() < a(j, j).real();
    });

    std::vector<double> values(n);
    ComplexMatrix vectors(n);
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t src = order[j];
        values[j] = a(src, src).real();
        Complex fix = 1.0;
        for (std::size_t r = 0; r < n; ++r) {
            const double mag = std::abs(v(r, src));
            if (mag > 1e-8) {
                fix = std::conj(v(r, src)) / mag;
                break;
            }
        }
        for (std::size_t r = 0; r < n; ++r) {
            vectors(r, j) = v(r, src) * fix;
        }
    }
    return EigenDecomposition{std::move(values), UnitaryMatrix(std::move(vectors))};
}

/// exp(-i h t) assembled from the eigendecomposition of h.
inline UnitaryMatrix expm_herm(const HermitianMatrix &h, double t) {
    if (!std::isfinite(t)) {
        throw ValidationError("evolution time must be finite");
    }
    const EigenDecomposition eig = hermitian_eig(h);
    const std::size_t n = h.dim();
    const ComplexMatrix &v = eig.eigenvectors.matrix();
    ComplexMatrix out(n);
    for (std::size_t k = 0; k < n; ++k) {
        const Complex phase = std::polar(1.0, -eig.eigenvalues[k] * t);
        for (std::size_t r = 0; r < n; ++r) {
            const Complex left = v(r, k) * phase;
            for (std::size_t c = 0; c < n; ++c) {
                out(r, c) += left * std::conj(v(c, k));
            }
        }
    }
    return UnitaryMatrix(std::move(out));
}

/// Closest unitary in Frobenius norm, M (M^dag M)^{-1/2}. Removes the
/// rounding drift that long chains of products accumulate.
inline UnitaryMatrix nearest_unitary(const ComplexMatrix &m) {
    ComplexMatrix gram = m.adjoint() * m;
    gram = 0.5 * (gram + gram.adjoint());
    const EigenDecomposition eig = hermitian_eig(HermitianMatrix(std::move(gram)));
    const std::size_t n = m.dim();
    const ComplexMatrix &v = eig.eigenvectors.matrix();
    ComplexMatrix inv_sqrt(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (!(eig.eigenvalues[k] > 0.0)) {
            throw ValidationError("cannot project a singular matrix onto the unitary group");
        }
        const double w = 1.0 / std::sqrt(eig.eigenvalues[k]);
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                inv_sqrt(r, c) += w * v(r, k) * std::conj(v(c, k));
            }
        }
    }
    return UnitaryMatrix(m * inv_sqrt);
}

/// Kronecker product; the first argument is the leading (most significant) factor.
inline ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b) {
    const std::size_t da = a.dim();
    const std::size_t db = b.dim();
    if (da * db > kMaxDim) {
        throw ValidationError(
            "tensor product dimension " + std::to_string(da * db) + " exceeds " + std::to_string(kMaxDim));
    }
    ComplexMatrix out(da * db);
    for (std::size_t ar = 0; ar < da; ++ar) {
        for (std::size_t ac = 0; ac < da; ++ac) {
            const Complex x = a(ar, ac);
            for (std::size_t br = 0; br < db; ++br) {
                for (std::size_t bc = 0; bc < db; ++bc) {
                    out(ar * db + br, ac * db + bc) = x * b(br, bc);
                }
            }
        }
    }
    return out;
}

inline PureState tensor(const PureState &a, const PureState &b) {
    if (a.dim() * b.dim() > kMaxDim) {
        throw ValidationError("tensor product dimension exceeds 8");
    }
    std::vector<Complex> out;
    out.reserve(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < b.dim(); ++j) {
            out.push_back(a[i] * b[j]);
        }
    }
    return PureState(std::move(out));
}

class DensityMatrix {
   public:
    explicit DensityMatrix(ComplexMatrix base);

    static DensityMatrix from_pure(const PureState &psi) {
        ComplexMatrix m(psi.dim());
        for (std::size_t r = 0; r < psi.dim(); ++r) {
            for (std::size_t c = 0; c < psi.dim(); ++c) {
                m(r, c) = psi[r] * std::conj(psi[c]);
            }
        }
        return DensityMatrix(std::move(m));
    }

    std::size_t dim() const { return base_.dim(); }
    const ComplexMatrix &matrix() const { return base_; }
    Complex operator()(std::size_t r, std::size_t c) const { return base_(r, c); }

    /// U rho U^dag. Only the traceless part is conjugated, so weakly polarized
    /// states keep full relative precision; U need only be unitary to
    /// kUnitaryTol.
    DensityMatrix evolve(const ComplexMatrix &u) const {
        const std::size_t d = dim();
        const ComplexMatrix mixed = ComplexMatrix::identity(d) * Complex(1.0 / static_cast<double>(d));
        ComplexMatrix m = u * (base_ - mixed) * u.adjoint();
        m = 0.5 * (m + m.adjoint());
        const Complex drift = m.trace() / static_cast<double>(d);
        for (std::size_t i = 0; i < d; ++i) {
            m(i, i) += 1.0 / static_cast<double>(d) - drift;
        }
        return DensityMatrix(std::move(m));
    }

   private:
    ComplexMatrix base_;
};

inline DensityMatrix::DensityMatrix(ComplexMatrix base) : base_(std::move(base)) {
    const double herm = hermiticity_defect(base_);
    if (herm > kHermitianTol) {
        throw ValidationError("density matrix is not Hermitian (defect " + format_number(herm) + ")");
    }
    const double tr = base_.trace().real();
    if (std::abs(tr - 1.0) > kNormTol) {
        throw ValidationError("density matrix trace is " + format_number(tr));
    }
    const double lowest = hermitian_eig(HermitianMatrix(base_)).eigenvalues.front();
    if (lowest < -1e-10) {
        throw ValidationError("density matrix has negative eigenvalue " + format_number(lowest));
    }
}

inline DensityMatrix tensor(const DensityMatrix &a, const DensityMatrix &b) {
    return DensityMatrix(tensor(a.matrix(), b.matrix()));
}

/// Reduced state of one qubit of a two-qubit density matrix (keep = 0 for the
/// leading factor, 1 for the trailing one).
inline DensityMatrix partial_trace(const DensityMatrix &rho, int keep) {
    if (rho.dim() != 4) {
        throw ValidationError("partial_trace expects a two-qubit (dim 4) density matrix");
    }
    if (keep != 0 && keep != 1) {
        throw ValidationError("subsystem index must be 0 or 1, got " + std::to_string(keep));
    }
    ComplexMatrix out(2);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            Complex acc = 0.0;
            for (std::size_t t = 0; t < 2; ++t) {
                acc += keep == 0 ? rho(i * 2 + t, j * 2 + t) : rho(t * 2 + i, t * 2 + j);
            }
            out(i, j) = acc;
        }
    }
    return DensityMatrix(std::move(out));
}

/// |<a|b>|^2.
inline double state_fidelity(const PureState &a, const PureState &b) {
    if (a.dim() != b.dim()) {
        throw ValidationError(
            "fidelity of states with dims " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
    }
    return std::clamp(std::norm(inner(a, b)), 0.0, 1.0);
}

namespace pauli {

inline ComplexMatrix identity() { return ComplexMatrix::identity(2); }
inline ComplexMatrix x() { return ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}}; }
inline ComplexMatrix y() { return ComplexMatrix{{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}}; }
inline ComplexMatrix z() { return ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}}; }

}  // namespace pauli

// |up> is basis index 0.
inline PureState ket_up() { return PureState{1.0, 0.0}; }
inline PureState ket_down() { return PureState{0.0, 1.0}; }
inline PureState ket_plus() { return PureState::normalized({1.0, 1.0}); }
inline PureState ket_minus() { return PureState::normalized({1.0, -1.0}); }

}  // namespace nmrqpe

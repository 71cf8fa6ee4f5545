#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "entswap/errors.hpp"

namespace entswap {

using cdouble = std::complex<double>;

// Dense complex matrix, row-major. Sized for the 2x2 / 4x4 / 16x16 operators
// this engine works with; no attempt at large-dimension performance.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    cdouble& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const cdouble& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(cdouble s);

    cdouble trace() const;
    double max_abs() const;
    double frobenius_norm() const;
    // max_{r,c} |a(r,c) - conj(a(c,r))|
    double hermiticity_defect() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cdouble> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cdouble s, ComplexMatrix a);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// Complex column vector of amplitudes.
class StateVector {
public:
    StateVector() = default;
    explicit StateVector(std::size_t dim) : amplitudes_(dim) {}
    explicit StateVector(std::vector<cdouble> amplitudes) : amplitudes_(std::move(amplitudes)) {}

    std::size_t dim() const { return amplitudes_.size(); }
    cdouble& operator[](std::size_t i) { return amplitudes_[i]; }
    const cdouble& operator[](std::size_t i) const { return amplitudes_[i]; }

    double norm() const;
    StateVector& normalize();

private:
    std::vector<cdouble> amplitudes_;
};

cdouble inner_product(const StateVector& a, const StateVector& b);  // <a|b>
StateVector kron(const StateVector& a, const StateVector& b);
StateVector operator*(const ComplexMatrix& m, const StateVector& v);
double max_abs_diff(const StateVector& a, const StateVector& b);
// |v><v|
ComplexMatrix outer(const StateVector& v);

// 3x3 real matrix holding two-qubit Pauli correlations.
struct RealMatrix3 {
    std::array<std::array<double, 3>, 3> m{};

    double& operator()(std::size_t r, std::size_t c) { return m[r][c]; }
    double operator()(std::size_t r, std::size_t c) const { return m[r][c]; }
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix dagger(const ComplexMatrix& a);
ComplexMatrix conjugate_in_computational_basis(const ComplexMatrix& a);

struct EigResult {
    std::vector<double> eigenvalues;  // ascending
    ComplexMatrix eigenvectors;       // orthonormal columns, column i pairs with eigenvalues[i]
};

// Cyclic complex Jacobi. Requires hermiticity_defect() <= 1e-10, throws NotHermitian otherwise.
EigResult hermitian_eig(const ComplexMatrix& h);

// Unique PSD square root via the eigendecomposition. Eigenvalues in [-1e-10, 0)
// are clamped to zero; anything below -1e-10 throws NotPsd.
ComplexMatrix psd_sqrt(const ComplexMatrix& h);

// Partial trace of |psi><psi| onto the kept qubit pair. psi is a 16-dim state
// over qubits 1..4 with qubit 1 the most significant factor (basis index
// 8*b1 + 4*b2 + 2*b3 + b4); the lower kept label becomes the first factor of
// the result. Throws BadQubitSet for labels outside 1..4 or a repeated label.
ComplexMatrix reduced_density(const StateVector& psi, std::pair<int, int> keep);

}  // namespace entswap

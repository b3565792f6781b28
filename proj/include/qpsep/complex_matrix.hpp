#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace qpsep {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major. The workhorse value of the
/// library; small dimensions only (up to 2^10 x 2^10).
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t dim)
        : dim_(dim), entries_(dim * dim, Complex(0.0, 0.0)) {}
    ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }

    Complex& operator()(std::size_t row, std::size_t col) {
        return entries_[row * dim_ + col];
    }
    const Complex& operator()(std::size_t row, std::size_t col) const {
        return entries_[row * dim_ + col];
    }

    const std::vector<Complex>& entries() const { return entries_; }

    Complex trace() const;
    double frobenius_norm() const;
    bool all_finite() const;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex scalar);

    friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) {
        lhs -= rhs;
        return lhs;
    }
    friend ComplexMatrix operator*(Complex scalar, ComplexMatrix m) {
        m *= scalar;
        return m;
    }
    friend ComplexMatrix operator*(ComplexMatrix m, Complex scalar) {
        m *= scalar;
        return m;
    }

    bool operator==(const ComplexMatrix& other) const = default;

private:
    std::size_t dim_ = 0;
    std::vector<Complex> entries_;
};

/// Matrix product (naive triple loop; fine at these sizes).
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product: result[(i*db+k),(j*db+l)] = a[i,j] * b[k,l].
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Conjugate transpose.
ComplexMatrix dagger(const ComplexMatrix& a);

/// Largest entrywise |a[i,j] - b[i,j]|. Dimension mismatch throws.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// True iff max entrywise |a - dagger(a)| <= tol.
bool is_hermitian(const ComplexMatrix& a, double tol);

/// Eigenvalues of a Hermitian matrix, ascending. Throws NotHermitian if the
/// input fails is_hermitian(a, tol).
///
/// Cyclic Jacobi with complex Givens rotations; sweeps until the
/// off-diagonal Frobenius norm drops below 1e-12 * ||a||_F (or 100 sweeps).
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a, double tol);

struct Eigensystem {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // column k pairs with values[k]
};

/// Same solver with accumulated eigenvectors (a*v = lambda*v per column).
Eigensystem hermitian_eigensystem(const ComplexMatrix& a, double tol);

} // namespace qpsep

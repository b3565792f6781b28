#include "qpsep/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qpsep/errors.hpp"

namespace qpsep {

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
    if (entries_.size() != dim_ * dim_) {
        throw DimensionMismatch("entry count does not match dim*dim");
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = Complex(1.0, 0.0);
    }
    return m;
}

Complex ComplexMatrix::trace() const {
    Complex t(0.0, 0.0);
    for (std::size_t i = 0; i < dim_; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double sum = 0.0;
    for (const Complex& z : entries_) {
        sum += std::norm(z);
    }
    return std::sqrt(sum);
}

bool ComplexMatrix::all_finite() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Complex& z) {
        return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    if (dim_ != other.dim_) {
        throw DimensionMismatch("matrix addition requires equal dims");
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] += other.entries_[i];
    }
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    if (dim_ != other.dim_) {
        throw DimensionMismatch("matrix subtraction requires equal dims");
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] -= other.entries_[i];
    }
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
    for (Complex& z : entries_) {
        z *= scalar;
    }
    return *this;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch("matrix product requires equal dims");
    }
    const std::size_t n = a.dim();
    ComplexMatrix c(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex(0.0, 0.0)) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                c(i, j) += aik * b(k, j);
            }
        }
    }
    return c;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t da = a.dim();
    const std::size_t db = b.dim();
    ComplexMatrix c(da * db);
    for (std::size_t i = 0; i < da; ++i) {
        for (std::size_t j = 0; j < da; ++j) {
            const Complex aij = a(i, j);
            for (std::size_t k = 0; k < db; ++k) {
                for (std::size_t l = 0; l < db; ++l) {
                    c(i * db + k, j * db + l) = aij * b(k, l);
                }
            }
        }
    }
    return c;
}

ComplexMatrix dagger(const ComplexMatrix& a) {
    const std::size_t n = a.dim();
    ComplexMatrix c(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            c(i, j) = std::conj(a(j, i));
        }
    }
    return c;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch("max_abs_diff requires equal dims");
    }
    double m = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
    }
    return m;
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
    const std::size_t n = a.dim();
    if (!a.all_finite()) {
        return false;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            if (std::abs(a(i, j) - std::conj(a(j, i))) > tol) {
                return false;
            }
        }
    }
    return true;
}

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            if (i != j) {
                sum += std::norm(a(i, j));
            }
        }
    }
    return std::sqrt(sum);
}

// One complex Jacobi rotation eliminating a(p,q). The unitary is
// diag(1, e^{-i phi}) on the (p,q) plane followed by a real Givens rotation,
// which reduces to the classical symmetric update once the off-diagonal
// entry is phased to be real.
void apply_rotation(ComplexMatrix& a, ComplexMatrix* vecs, std::size_t p,
                    std::size_t q) {
    const Complex apq = a(p, q);
    const double r = std::abs(apq);
    if (r == 0.0) {
        return;
    }
    const Complex phase = apq / r;  // e^{i phi}
    const double alpha = a(p, p).real();
    const double gamma = a(q, q).real();
    const double tau = (gamma - alpha) / (2.0 * r);
    double t;
    if (tau >= 0.0) {
        t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
    } else {
        t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
    }
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const std::size_t n = a.dim();
    // Columns p and q: A <- A * U with U = [[c, s], [-s e^{-i phi}, c e^{-i phi}]].
    for (std::size_t k = 0; k < n; ++k) {
        const Complex akp = a(k, p);
        const Complex akq = a(k, q);
        a(k, p) = c * akp - s * std::conj(phase) * akq;
        a(k, q) = s * akp + c * std::conj(phase) * akq;
    }
    // Rows p and q: A <- U^dagger * A.
    for (std::size_t k = 0; k < n; ++k) {
        const Complex apk = a(p, k);
        const Complex aqk = a(q, k);
        a(p, k) = c * apk - s * phase * aqk;
        a(q, k) = s * apk + c * phase * aqk;
    }
    // t-based diagonal update; stays exact for exactly representable inputs.
    a(p, p) = Complex(alpha - t * r, 0.0);
    a(q, q) = Complex(gamma + t * r, 0.0);
    a(p, q) = Complex(0.0, 0.0);
    a(q, p) = Complex(0.0, 0.0);

    if (vecs != nullptr) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex vkp = (*vecs)(k, p);
            const Complex vkq = (*vecs)(k, q);
            (*vecs)(k, p) = c * vkp - s * std::conj(phase) * vkq;
            (*vecs)(k, q) = s * vkp + c * std::conj(phase) * vkq;
        }
    }
}

Eigensystem jacobi_eigensystem(const ComplexMatrix& input, double tol,
                               bool want_vectors) {
    if (!is_hermitian(input, tol)) {
        throw NotHermitian("matrix is not Hermitian within tolerance");
    }
    const std::size_t n = input.dim();
    ComplexMatrix a = input;
    ComplexMatrix vecs = want_vectors ? ComplexMatrix::identity(n)
                                      : ComplexMatrix();
    ComplexMatrix* vptr = want_vectors ? &vecs : nullptr;

    const double stop = 1e-12 * input.frobenius_norm();
    constexpr int kMaxSweeps = 100;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_norm(a) <= stop) {
            break;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                apply_rotation(a, vptr, p, q);
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return a(i, i).real() < a(j, j).real();
    });

    Eigensystem result;
    result.values.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        result.values.push_back(a(order[k], order[k]).real());
    }
    if (want_vectors) {
        result.vectors = ComplexMatrix(n);
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t row = 0; row < n; ++row) {
                result.vectors(row, k) = vecs(row, order[k]);
            }
        }
    }
    return result;
}

} // namespace

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a, double tol) {
    return jacobi_eigensystem(a, tol, false).values;
}

Eigensystem hermitian_eigensystem(const ComplexMatrix& a, double tol) {
    return jacobi_eigensystem(a, tol, true);
}

} // namespace qpsep

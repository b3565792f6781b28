#include "qpsep/states.hpp"

#include <cmath>
#include <string>

#include "qpsep/errors.hpp"
#include "qpsep/rng.hpp"

namespace qpsep {

namespace {

// Returns N for dim = 2^N with N >= 1, else -1.
int qubit_count_for_dim(std::size_t dim) {
    if (dim < 2) {
        return -1;
    }
    int n = 0;
    std::size_t d = dim;
    while (d > 1) {
        if (d % 2 != 0) {
            return -1;
        }
        d /= 2;
        ++n;
    }
    return n;
}

} // namespace

DensityMatrix validate_density(ComplexMatrix m, double tol) {
    const int n = qubit_count_for_dim(m.dim());
    if (n < 1) {
        throw NotPowerOfTwoDim("density matrix dimension " +
                               std::to_string(m.dim()) +
                               " is not 2^N with N >= 1");
    }
    if (!m.all_finite()) {
        throw NotFinite("density matrix has non-finite entries");
    }
    if (!is_hermitian(m, tol)) {
        throw NotHermitian("density matrix is not Hermitian within " +
                           std::to_string(tol));
    }
    const double tr = m.trace().real();
    if (std::abs(tr - 1.0) > tol) {
        throw TraceNotOne("density matrix trace is " + std::to_string(tr), tr);
    }
    const std::vector<double> eigs = hermitian_eigenvalues(m, tol);
    if (eigs.front() < -10.0 * tol) {
        throw NotPositive("density matrix minimum eigenvalue is " +
                              std::to_string(eigs.front()),
                          eigs.front());
    }
    return DensityMatrix(n, std::move(m));
}

PureState PureState::normalized(int num_qubits, std::vector<Complex> amplitudes) {
    if (num_qubits < 1 ||
        amplitudes.size() != (std::size_t{1} << num_qubits)) {
        throw NotPowerOfTwoDim("amplitude vector length must be 2^num_qubits");
    }
    double norm2 = 0.0;
    for (const Complex& a : amplitudes) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw NotFinite("amplitude vector has non-finite entries");
        }
        norm2 += std::norm(a);
    }
    if (std::abs(norm2 - 1.0) > 1e-10) {
        throw NotNormalized("state norm^2 is " + std::to_string(norm2));
    }
    return PureState(num_qubits, std::move(amplitudes));
}

DensityMatrix pure_to_density(const PureState& psi) {
    const std::size_t d = psi.dim();
    ComplexMatrix m(d);
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            m(r, c) = psi.amp()[r] * std::conj(psi.amp()[c]);
        }
    }
    return validate_density(std::move(m));
}

DensityMatrix werner(double x) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw XOutOfRange("werner parameter x must lie in [0, 1]");
    }
    // Singlet projector plus the maximally mixed fraction.
    ComplexMatrix m(4);
    m(0, 0) = (1.0 - x) * 0.25;
    m(1, 1) = x * 0.5 + (1.0 - x) * 0.25;
    m(2, 2) = x * 0.5 + (1.0 - x) * 0.25;
    m(3, 3) = (1.0 - x) * 0.25;
    m(1, 2) = -x * 0.5;
    m(2, 1) = -x * 0.5;
    return validate_density(std::move(m));
}

DensityMatrix tripartite_example(ExampleVariant variant, double x) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw XOutOfRange("example parameter x must lie in [0, 1]");
    }
    const double a = (1.0 - x) * 0.25;
    const double b = x * 0.5;
    ComplexMatrix m(8);
    if (variant == ExampleVariant::Prime) {
        const double diag[8] = {0.0, a, a, b, b, a, a, 0.0};
        for (std::size_t i = 0; i < 8; ++i) {
            m(i, i) = diag[i];
        }
        m(3, 4) = -b;
        m(4, 3) = -b;
    } else {
        const double diag[8] = {0.0, a, b, a, a, b, a, 0.0};
        for (std::size_t i = 0; i < 8; ++i) {
            m(i, i) = diag[i];
        }
        m(2, 5) = -b;
        m(5, 2) = -b;
    }
    return validate_density(std::move(m));
}

PureState ghz(int n) {
    if (n < 2) {
        throw NTooSmall("ghz needs at least 2 qubits");
    }
    std::vector<Complex> amp(std::size_t{1} << n, Complex(0.0, 0.0));
    const double w = std::sqrt(0.5);
    amp.front() = Complex(w, 0.0);
    amp.back() = Complex(w, 0.0);
    return PureState::normalized(n, std::move(amp));
}

DensityMatrix random_density(int num_qubits, std::uint64_t seed) {
    if (num_qubits < 1 || num_qubits > 10) {
        throw NOutOfRange("random_density supports 1..10 qubits");
    }
    const std::size_t d = std::size_t{1} << num_qubits;
    rng::GaussianSource gauss(seed);
    ComplexMatrix g(d);
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            g(r, c) = gauss.next_complex();
        }
    }
    ComplexMatrix m = matmul(g, dagger(g));
    const double tr = m.trace().real();
    m *= Complex(1.0 / tr, 0.0);
    return validate_density(std::move(m));
}

DensityMatrix construct_inseparable(const std::vector<DensityMatrix>& sigmas,
                                    const std::vector<double>& weights,
                                    const Partition& layout) {
    const int n = layout.n();
    if (n != 3 || layout.first() != std::vector<int>{2} ||
        layout.second() != std::vector<int>{1, 3}) {
        throw UnsupportedLayout(
            "construction is only defined for the 3-qubit layout B|AC");
    }
    const std::size_t expected = std::size_t{1} << (n - 2);
    if (sigmas.size() != expected || weights.size() != expected) {
        throw CountMismatch("need exactly " + std::to_string(expected) +
                            " pieces and weights for " + std::to_string(n) +
                            " qubits");
    }
    double weight_sum = 0.0;
    for (double w : weights) {
        if (!(w > 0.0)) {
            throw WeightsInvalid("weights must be positive");
        }
        weight_sum += w;
    }
    if (std::abs(weight_sum - 1.0) > 1e-12) {
        throw WeightsInvalid("weights must sum to 1, got " +
                             std::to_string(weight_sum));
    }
    for (const DensityMatrix& sigma : sigmas) {
        if (sigma.num_qubits() != 2) {
            throw DimensionMismatch("construction pieces must be 2-qubit states");
        }
    }

    // Entry rule: row bits (i, j, k) over qubits A, B, C; sigma 1 fills the
    // k = i, t = r positions with [sigma1]_{ji,sr}, sigma 2 the k = 1-i,
    // t = 1-r positions with [sigma2]_{ji,sr}; everything else is zero.
    ComplexMatrix m(8);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            for (int r = 0; r < 2; ++r) {
                for (int s = 0; s < 2; ++s) {
                    const Complex same =
                        weights[0] * sigmas[0].mat()(2 * j + i, 2 * s + r);
                    const Complex flipped =
                        weights[1] * sigmas[1].mat()(2 * j + i, 2 * s + r);
                    m(4 * i + 2 * j + i, 4 * r + 2 * s + r) = same;
                    m(4 * i + 2 * j + (1 - i), 4 * r + 2 * s + (1 - r)) = flipped;
                }
            }
        }
    }
    return validate_density(std::move(m));
}

} // namespace qpsep

#pragma once

#include <cstdint>
#include <vector>

#include "qpsep/complex_matrix.hpp"
#include "qpsep/partition.hpp"

namespace qpsep {

/// Default tolerance for state validation: Hermiticity and trace within
/// this, eigenvalues allowed down to -10x this.
inline constexpr double kDensityTol = 1e-10;

/// An N-qubit density matrix: Hermitian, unit trace, positive semidefinite,
/// dimension 2^N. Instances only exist in validated form. Basis convention:
/// qubit 1 is the most significant bit of the row/column index.
class DensityMatrix {
public:
    int num_qubits() const { return num_qubits_; }
    std::size_t dim() const { return mat_.dim(); }
    const ComplexMatrix& mat() const { return mat_; }

    bool operator==(const DensityMatrix& other) const = default;

private:
    DensityMatrix(int num_qubits, ComplexMatrix mat)
        : num_qubits_(num_qubits), mat_(std::move(mat)) {}

    friend DensityMatrix validate_density(ComplexMatrix m, double tol);

    int num_qubits_;
    ComplexMatrix mat_;
};

/// Checks all density-matrix invariants at tolerance tol and wraps the
/// matrix. Throws NotPowerOfTwoDim, NotFinite, NotHermitian,
/// TraceNotOne (with the actual trace), or NotPositive (with the minimum
/// eigenvalue).
DensityMatrix validate_density(ComplexMatrix m, double tol = kDensityTol);

/// Normalized N-qubit state vector, amplitudes in the standard basis with
/// qubit 1 as the most significant bit.
class PureState {
public:
    /// Validates sum |amp|^2 = 1 within 1e-10; throws NotNormalized or
    /// NotPowerOfTwoDim.
    static PureState normalized(int num_qubits, std::vector<Complex> amplitudes);

    int num_qubits() const { return num_qubits_; }
    std::size_t dim() const { return amp_.size(); }
    const std::vector<Complex>& amp() const { return amp_; }

private:
    PureState(int num_qubits, std::vector<Complex> amplitudes)
        : num_qubits_(num_qubits), amp_(std::move(amplitudes)) {}

    int num_qubits_;
    std::vector<Complex> amp_;
};

/// Outer product |psi><psi|.
DensityMatrix pure_to_density(const PureState& psi);

/// Werner state: singlet fraction x plus random fraction (1-x) on two
/// qubits. Throws XOutOfRange unless 0 <= x <= 1.
DensityMatrix werner(double x);

enum class ExampleVariant { Prime, DoublePrime };

/// Two named tripartite states built around a singlet fraction x: Prime
/// couples qubit A against the BC pair, DoublePrime couples B against AC,
/// and the matching reduction of either is the Werner state.
DensityMatrix tripartite_example(ExampleVariant variant, double x);

/// (|0...0> + |1...1>)/sqrt(2) on n >= 2 qubits.
PureState ghz(int n);

/// Reproducible random density matrix: G G^dagger normalized to unit trace,
/// G filled with standard complex Gaussians from a xoshiro256** stream
/// seeded with seed. Same seed, same matrix, bit for bit.
DensityMatrix random_density(int num_qubits, std::uint64_t seed);

/// Builds a tripartite state whose reduction along the given layout is
/// exactly the weighted mix of the supplied two-qubit pieces. Only the
/// three-qubit B|AC layout is supported; the general rule for other layouts
/// is not pinned down, so anything else throws UnsupportedLayout.
/// Also throws WeightsInvalid, CountMismatch, DimensionMismatch.
DensityMatrix construct_inseparable(const std::vector<DensityMatrix>& sigmas,
                                    const std::vector<double>& weights,
                                    const Partition& layout);

} // namespace qpsep

#pragma once

#include <vector>

#include "qpsep/complex_matrix.hpp"
#include "qpsep/partition.hpp"
#include "qpsep/states.hpp"

namespace qpsep {

/// Relabels tensor factors: bit m of the new index reads the input's qubit
/// perm[m] (1-based). perm must be a permutation of 1..N; the result is the
/// same state with its qubits listed in the order perm.
DensityMatrix reorder_qubits(const DensityMatrix& rho,
                             const std::vector<int>& perm);

/// The explicit 0/1 unitary realizing reorder_qubits by conjugation:
/// reorder_qubits(rho, perm).mat() == S * rho.mat() * dagger(S).
ComplexMatrix permutation_matrix(int n, const std::vector<int>& perm);

/// The basis bitstring selected by a split for bit pair (i, j): qubits in
/// r_prime carry i, r_dprime carry 1-i, s_prime j, s_dprime 1-j. Entry k of
/// the result is the bit of qubit k+1.
std::vector<int> index_vector(const SubSplit& split, int i, int j);

/// index_vector folded to a row/column index (qubit 1 = most significant).
std::size_t basis_index(const SubSplit& split, int i, int j);

/// The 4x4 submatrix of rho read through a split:
/// result[(2i+j),(2u+v)] = rho[basis_index(i,j), basis_index(u,v)].
/// A principal submatrix, hence Hermitian and PSD with trace <= 1.
ComplexMatrix extract_submatrix(const DensityMatrix& rho, const SubSplit& split);

/// Reduces an N-qubit state to a two-qubit state along a bipartition: the
/// sum of the 4x4 submatrices over all canonical splits. The output's first
/// tensor factor corresponds to p.first(). For N = 2 the reduction is the
/// state itself.
DensityMatrix reduce(const DensityMatrix& rho, const Partition& p);

/// One term of the pure-state decomposition of a reduction: the squared
/// normalization weight and the (unnormalized) projector it scales.
struct PureReductionTerm {
    SubSplit split;
    double eta_squared;
    ComplexMatrix term;  // 4x4, equals eta_squared * normalized projector
};

/// Decomposes the reduction of a pure state split by split, reading
/// amplitudes directly: per split, Phi_(ij) = amp[basis_index(i,j)],
/// eta_squared = |Phi|^2, term = Phi Phi^dagger. The terms sum to
/// reduce(pure_to_density(psi), p) and the weights sum to 1.
std::vector<PureReductionTerm> reduce_pure_oracle(const PureState& psi,
                                                  const Partition& p);

} // namespace qpsep

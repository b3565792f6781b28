#include "qpsep/reduction.hpp"

#include <algorithm>

#include "qpsep/errors.hpp"

namespace qpsep {

namespace {

void check_permutation(int n, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != n) {
        throw NotAPermutation("permutation length must equal qubit count");
    }
    std::vector<bool> seen(n + 1, false);
    for (int q : perm) {
        if (q < 1 || q > n || seen[q]) {
            throw NotAPermutation("indices must be a permutation of 1..N");
        }
        seen[q] = true;
    }
}

// Maps a new basis index to the original one: bit m of x lands at original
// qubit perm[m].
std::size_t permuted_index(int n, const std::vector<int>& perm, std::size_t x) {
    std::size_t old_index = 0;
    for (int m = 0; m < n; ++m) {
        const std::size_t bit = (x >> (n - 1 - m)) & 1u;
        old_index |= bit << (n - perm[m]);
    }
    return old_index;
}

} // namespace

DensityMatrix reorder_qubits(const DensityMatrix& rho,
                             const std::vector<int>& perm) {
    const int n = rho.num_qubits();
    check_permutation(n, perm);
    const std::size_t d = rho.dim();
    ComplexMatrix out(d);
    for (std::size_t r = 0; r < d; ++r) {
        const std::size_t pr = permuted_index(n, perm, r);
        for (std::size_t c = 0; c < d; ++c) {
            out(r, c) = rho.mat()(pr, permuted_index(n, perm, c));
        }
    }
    return validate_density(std::move(out));
}

ComplexMatrix permutation_matrix(int n, const std::vector<int>& perm) {
    check_permutation(n, perm);
    const std::size_t d = std::size_t{1} << n;
    ComplexMatrix s(d);
    for (std::size_t x = 0; x < d; ++x) {
        s(x, permuted_index(n, perm, x)) = Complex(1.0, 0.0);
    }
    return s;
}

std::vector<int> index_vector(const SubSplit& split, int i, int j) {
    std::vector<int> bits(split.parent.n(), 0);
    for (int q : split.r_prime) {
        bits[q - 1] = i;
    }
    for (int q : split.r_dprime) {
        bits[q - 1] = 1 - i;
    }
    for (int q : split.s_prime) {
        bits[q - 1] = j;
    }
    for (int q : split.s_dprime) {
        bits[q - 1] = 1 - j;
    }
    return bits;
}

std::size_t basis_index(const SubSplit& split, int i, int j) {
    const std::vector<int> bits = index_vector(split, i, j);
    std::size_t index = 0;
    for (int bit : bits) {
        index = (index << 1) | static_cast<std::size_t>(bit);
    }
    return index;
}

ComplexMatrix extract_submatrix(const DensityMatrix& rho,
                                const SubSplit& split) {
    if (split.parent.n() != rho.num_qubits()) {
        throw DimensionMismatch("split qubit count does not match the state");
    }
    std::size_t rows[4];
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            rows[2 * i + j] = basis_index(split, i, j);
        }
    }
    ComplexMatrix out(4);
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            out(r, c) = rho.mat()(rows[r], rows[c]);
        }
    }
    return out;
}

DensityMatrix reduce(const DensityMatrix& rho, const Partition& p) {
    if (p.n() != rho.num_qubits()) {
        throw DimensionMismatch("partition qubit count does not match the state");
    }
    if (rho.num_qubits() == 2 && !p.swapped()) {
        return rho;  // two-qubit states are their own reduction
    }
    ComplexMatrix sum(4);
    for (const SubSplit& split : enumerate_canonical_splits(p)) {
        sum += extract_submatrix(rho, split);
    }
    return validate_density(std::move(sum));
}

std::vector<PureReductionTerm> reduce_pure_oracle(const PureState& psi,
                                                  const Partition& p) {
    if (p.n() != psi.num_qubits()) {
        throw DimensionMismatch("partition qubit count does not match the state");
    }
    std::vector<PureReductionTerm> terms;
    for (const SubSplit& split : enumerate_canonical_splits(p)) {
        Complex phi[4];
        double weight = 0.0;
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                phi[2 * i + j] = psi.amp()[basis_index(split, i, j)];
                weight += std::norm(phi[2 * i + j]);
            }
        }
        ComplexMatrix term(4);
        for (int r = 0; r < 4; ++r) {
            for (int c = 0; c < 4; ++c) {
                term(r, c) = phi[r] * std::conj(phi[c]);
            }
        }
        terms.push_back(PureReductionTerm{split, weight, std::move(term)});
    }
    return terms;
}

} // namespace qpsep

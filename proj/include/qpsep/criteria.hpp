#pragma once

#include <vector>

#include "qpsep/complex_matrix.hpp"
#include "qpsep/partition.hpp"
#include "qpsep/reduction.hpp"
#include "qpsep/states.hpp"

namespace qpsep {

/// Default threshold for calling a partial-transpose eigenvalue negative.
/// Sits well above eigensolver residue and well below the negativities that
/// actually occur in the worked examples.
inline constexpr double kPptTol = 1e-9;

/// Transpose of the second tensor factor of a 4x4 matrix:
/// result[(2i+j),(2u+v)] = m[(2i+v),(2u+j)]. An involution that preserves
/// Hermiticity and trace.
ComplexMatrix partial_transpose(const ComplexMatrix& m);

/// Minimum eigenvalue of the partial transpose of a two-qubit state. The
/// state is separable exactly when this is nonnegative (2x2 systems are the
/// case where the PPT condition is both necessary and sufficient).
double ppt_min_eigenvalue(const DensityMatrix& rho);

enum class VerdictKind { Inseparable, Undetermined };

/// Outcome of the necessary-condition test for one partition. A negative
/// partial-transpose eigenvalue on the reduction proves the original state
/// inseparable across that partition; a nonnegative one proves nothing
/// about the original state, so the verdict stays Undetermined. The
/// reduced_separable flag speaks only about the reduced two-qubit state.
struct Verdict {
    VerdictKind kind;
    Partition partition;
    double min_pt_eigenvalue;
    double tolerance;
    bool reduced_separable;
};

/// Reduces rho along p and applies the PPT test at tolerance tol.
Verdict check_partial_separability(const DensityMatrix& rho, const Partition& p,
                                   double tol = kPptTol);

/// Verdicts for every canonical partition, in enumeration order, plus the
/// reduced states they were computed from. entangled is true exactly when
/// at least one verdict is Inseparable.
struct SeparabilityReport {
    int num_qubits;
    double tolerance;
    std::vector<Verdict> verdicts;
    std::vector<DensityMatrix> reduced;
    bool entangled;
};

SeparabilityReport analyze_all(const DensityMatrix& rho, double tol = kPptTol);

} // namespace qpsep

#include "qpsep/criteria.hpp"

#include "qpsep/errors.hpp"

namespace qpsep {

ComplexMatrix partial_transpose(const ComplexMatrix& m) {
    if (m.dim() != 4) {
        throw DimensionMismatch("partial transpose expects a 4x4 matrix");
    }
    ComplexMatrix out(4);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            for (int u = 0; u < 2; ++u) {
                for (int v = 0; v < 2; ++v) {
                    out(2 * i + j, 2 * u + v) = m(2 * i + v, 2 * u + j);
                }
            }
        }
    }
    return out;
}

double ppt_min_eigenvalue(const DensityMatrix& rho) {
    if (rho.num_qubits() != 2) {
        throw DimensionMismatch("PPT test expects a two-qubit state");
    }
    const std::vector<double> eigs =
        hermitian_eigenvalues(partial_transpose(rho.mat()), kDensityTol);
    return eigs.front();
}

Verdict check_partial_separability(const DensityMatrix& rho, const Partition& p,
                                   double tol) {
    if (!(tol > 0.0)) {
        throw ValidationError("tolerance must be positive");
    }
    const DensityMatrix reduced = reduce(rho, p);
    const double min_eig = ppt_min_eigenvalue(reduced);
    return Verdict{
        min_eig < -tol ? VerdictKind::Inseparable : VerdictKind::Undetermined,
        p, min_eig, tol, min_eig >= -tol};
}

SeparabilityReport analyze_all(const DensityMatrix& rho, double tol) {
    if (!(tol > 0.0)) {
        throw ValidationError("tolerance must be positive");
    }
    SeparabilityReport report;
    report.num_qubits = rho.num_qubits();
    report.tolerance = tol;
    report.entangled = false;
    for (const Partition& p : enumerate_partitions(rho.num_qubits())) {
        DensityMatrix reduced = reduce(rho, p);
        const double min_eig = ppt_min_eigenvalue(reduced);
        Verdict v{
            min_eig < -tol ? VerdictKind::Inseparable : VerdictKind::Undetermined,
            p, min_eig, tol, min_eig >= -tol};
        report.entangled = report.entangled || v.kind == VerdictKind::Inseparable;
        report.verdicts.push_back(std::move(v));
        report.reduced.push_back(std::move(reduced));
    }
    return report;
}

} // namespace qpsep

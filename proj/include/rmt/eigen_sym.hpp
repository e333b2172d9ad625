#pragma once

#include <vector>

namespace rmt {

/// Householder reduction of the dense symmetric matrix a (row-major p x p,
/// destroyed) to tridiagonal form. diag receives the p diagonal entries,
/// off the p-1 off-diagonal entries. Works on full rows so the inner loops
/// are contiguous kernel calls.
void householder_tridiagonalize(std::vector<double>& a, int p, std::vector<double>& diag,
                                std::vector<double>& off);

/// Implicit-shift QL on a tridiagonal matrix; eigenvalues replace diag, off is
/// destroyed. Deflation at relative off-diagonal 1e-14; throws on
/// non-convergence with the stuck index in the message.
void tridiagonal_eigenvalues(std::vector<double>& diag, std::vector<double>& off);

/// All eigenvalues of a symmetric matrix, sorted descending. Verifies
/// symmetry entrywise within 1e-12 and throws std::invalid_argument otherwise.
std::vector<double> symmetric_eigenvalues(std::vector<double> a, int p);

}  // namespace rmt

#pragma once

#include <complex>
#include <vector>

namespace paralg {

// Eigenvalues of a dense row-major Hermitian matrix, ascending. Cyclic Jacobi
// with complex rotations; intended for the desk-scale matrices this project
// diagonalizes (hard cap enforced by callers).
std::vector<double> hermitian_eigenvalues(std::vector<std::complex<double>> matrix, int n);

}  // namespace paralg

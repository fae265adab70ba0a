#pragma once

#include <vector>

#include "qrmt/matrix.hpp"

namespace qrmt {

struct EigenDecomposition {
  std::vector<double> values;   // ascending
  std::vector<double> vectors;  // row-major n x n, column k pairs with values[k]
};

/// All eigenvalues of h in ascending order.  Householder reduction to
/// tridiagonal form followed by the implicit QL iteration with Wilkinson
/// shifts.
std::vector<double> eigenvalues(const SymmetricMatrix& h);

/// Eigenvalues and orthonormal eigenvectors.
EigenDecomposition eigen_decompose(const SymmetricMatrix& h);

}  // namespace qrmt

#ifndef EFFLAB_EIGEN_HPP
#define EFFLAB_EIGEN_HPP

#include <vector>

#include "efflab/cmatrix.hpp"

namespace efflab {

// Eigendecomposition of a Hermitian matrix. Eigenvalues sorted descending;
// column i of `vectors` is the unit eigenvector for values[i].
struct EigenSys {
    std::vector<double> values;
    CMat vectors;
};

// Cyclic Jacobi with complex rotations. Throws Error("eigensolver-nonconvergence")
// if the off-diagonal norm target is not reached within the sweep cap.
EigenSys eigen_hermitian(const CMat& a);

}  // namespace efflab

#endif  // EFFLAB_EIGEN_HPP

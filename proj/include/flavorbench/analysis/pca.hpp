#pragma once

#include <cstdint>
#include <vector>

#include "flavorbench/dataset/records.hpp"

namespace flavorbench::analysis {

struct PcaResult {
  std::vector<std::vector<double>> components;  // K rows of length V, orthonormal
  std::vector<double> explained_variance;       // K values, non-increasing
  std::vector<std::vector<double>> projections; // one K-vector per input row
  std::vector<double> mean;                     // column means of the input
  std::vector<std::int64_t> row_ids;            // food ids when built from FeatureVectors
};

// Symmetric eigendecomposition by cyclic Jacobi rotations; eigenpairs are
// returned sorted by descending eigenvalue. Deterministic across platforms.
void jacobi_eigen_symmetric(std::vector<std::vector<double>> matrix,
                            std::vector<double>& eigenvalues,
                            std::vector<std::vector<double>>& eigenvectors_columns);

// Mean-centers the rows, then extracts the top-K principal components.
// When V > N the covariance eigenproblem is solved on the N x N Gram side.
// Sign convention: each component is flipped so its largest-magnitude
// coordinate is positive. Requires >= 2 rows, K <= min(V, N-1), and
// non-identical rows.
PcaResult pca_rows(const std::vector<std::vector<double>>& rows, std::size_t k);

PcaResult pca(const std::vector<dataset::FeatureVector>& vectors, std::size_t k);

}  // namespace flavorbench::analysis

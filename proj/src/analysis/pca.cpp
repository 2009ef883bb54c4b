#include "flavorbench/analysis/pca.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "flavorbench/util/errors.hpp"

namespace flavorbench::analysis {

namespace {

double off_diagonal_norm(const std::vector<std::vector<double>>& a) {
  double sum = 0.0;
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) sum += a[i][j] * a[i][j];
  }
  return std::sqrt(2.0 * sum);
}

void flip_sign_convention(std::vector<double>& component) {
  std::size_t argmax = 0;
  for (std::size_t i = 1; i < component.size(); ++i) {
    if (std::abs(component[i]) > std::abs(component[argmax])) argmax = i;
  }
  if (component[argmax] < 0.0) {
    for (auto& value : component) value = -value;
  }
}

}  // namespace

void jacobi_eigen_symmetric(std::vector<std::vector<double>> a,
                            std::vector<double>& eigenvalues,
                            std::vector<std::vector<double>>& eigenvectors_columns) {
  const std::size_t n = a.size();
  std::vector<std::vector<double>> v(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) v[i][i] = 1.0;

  double frobenius = 0.0;
  for (const auto& row : a) {
    for (double value : row) frobenius += value * value;
  }
  frobenius = std::sqrt(frobenius);
  const double tolerance = std::max(1e-300, 1e-14 * frobenius);

  for (int sweep = 0; sweep < 100 && off_diagonal_norm(a) > tolerance; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) <= tolerance * 1e-2) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double sign = theta >= 0.0 ? 1.0 : -1.0;
        const double t = sign / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t i = 0; i < n; ++i) {
          const double aip = a[i][p];
          const double aiq = a[i][q];
          a[i][p] = c * aip - s * aiq;
          a[i][q] = s * aip + c * aiq;
        }
        for (std::size_t i = 0; i < n; ++i) {
          const double api = a[p][i];
          const double aqi = a[q][i];
          a[p][i] = c * api - s * aqi;
          a[q][i] = s * api + c * aqi;
        }
        for (std::size_t i = 0; i < n; ++i) {
          const double vip = v[i][p];
          const double viq = v[i][q];
          v[i][p] = c * vip - s * viq;
          v[i][q] = s * vip + c * viq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return a[x][x] > a[y][y]; });

  eigenvalues.assign(n, 0.0);
  eigenvectors_columns.assign(n, std::vector<double>(n, 0.0));
  for (std::size_t k = 0; k < n; ++k) {
    eigenvalues[k] = a[order[k]][order[k]];
    for (std::size_t i = 0; i < n; ++i) eigenvectors_columns[k][i] = v[i][order[k]];
  }
}

PcaResult pca_rows(const std::vector<std::vector<double>>& rows, std::size_t k) {
  const std::size_t n = rows.size();
  if (n < 2) throw DataError("pca requires at least 2 vectors");
  const std::size_t dim = rows[0].size();
  for (const auto& row : rows) {
    if (row.size() != dim) throw DataError("pca input rows have inconsistent dimensions");
  }
  const std::size_t max_k = std::min(dim, n - 1);
  if (k == 0 || k > max_k) {
    throw DataError("pca: K=" + std::to_string(k) + " exceeds min(V, N-1)=" +
                    std::to_string(max_k));
  }

  PcaResult result;
  result.mean.assign(dim, 0.0);
  for (const auto& row : rows) {
    for (std::size_t j = 0; j < dim; ++j) result.mean[j] += row[j];
  }
  for (auto& value : result.mean) value /= static_cast<double>(n);

  std::vector<std::vector<double>> centered(n, std::vector<double>(dim));
  double total_variance = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      centered[i][j] = rows[i][j] - result.mean[j];
      total_variance += centered[i][j] * centered[i][j];
    }
  }
  if (total_variance == 0.0) {
    throw DataError("pca: all input vectors are identical (zero variance)");
  }

  const double scale = 1.0 / static_cast<double>(n - 1);
  std::vector<double> eigenvalues;
  std::vector<std::vector<double>> eigenvectors;

  if (dim <= n) {
    // Covariance route: V x V.
    std::vector<std::vector<double>> cov(dim, std::vector<double>(dim, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t a = 0; a < dim; ++a) {
        const double ca = centered[i][a];
        if (ca == 0.0) continue;
        for (std::size_t b = a; b < dim; ++b) cov[a][b] += ca * centered[i][b];
      }
    }
    for (std::size_t a = 0; a < dim; ++a) {
      for (std::size_t b = a; b < dim; ++b) {
        cov[a][b] *= scale;
        cov[b][a] = cov[a][b];
      }
    }
    jacobi_eigen_symmetric(std::move(cov), eigenvalues, eigenvectors);
    result.components.assign(k, std::vector<double>(dim));
    for (std::size_t c = 0; c < k; ++c) result.components[c] = eigenvectors[c];
  } else {
    // Gram route: N x N, components recovered as X^T u and normalized.
    std::vector<std::vector<double>> gram(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        double dot = 0.0;
        for (std::size_t a = 0; a < dim; ++a) dot += centered[i][a] * centered[j][a];
        gram[i][j] = dot * scale;
        gram[j][i] = gram[i][j];
      }
    }
    jacobi_eigen_symmetric(std::move(gram), eigenvalues, eigenvectors);
    result.components.assign(k, std::vector<double>(dim, 0.0));
    for (std::size_t c = 0; c < k; ++c) {
      for (std::size_t i = 0; i < n; ++i) {
        const double weight = eigenvectors[c][i];
        if (weight == 0.0) continue;
        for (std::size_t a = 0; a < dim; ++a) {
          result.components[c][a] += weight * centered[i][a];
        }
      }
      double norm = 0.0;
      for (const double value : result.components[c]) norm += value * value;
      norm = std::sqrt(norm);
      if (norm > 0.0) {
        for (auto& value : result.components[c]) value /= norm;
      }
    }
  }

  result.explained_variance.assign(k, 0.0);
  for (std::size_t c = 0; c < k; ++c) {
    result.explained_variance[c] = std::max(0.0, eigenvalues[c]);
    flip_sign_convention(result.components[c]);
  }

  result.projections.assign(n, std::vector<double>(k, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < k; ++c) {
      double dot = 0.0;
      for (std::size_t a = 0; a < dim; ++a) dot += centered[i][a] * result.components[c][a];
      result.projections[i][c] = dot;
    }
  }
  return result;
}

PcaResult pca(const std::vector<dataset::FeatureVector>& vectors, std::size_t k) {
  std::vector<std::vector<double>> rows;
  rows.reserve(vectors.size());
  std::vector<std::int64_t> ids;
  ids.reserve(vectors.size());
  for (const auto& vec : vectors) {
    std::vector<double> row(vec.bits.size());
    for (std::size_t j = 0; j < vec.bits.size(); ++j) row[j] = vec.bits[j];
    rows.push_back(std::move(row));
    ids.push_back(vec.food_id);
  }
  PcaResult result = pca_rows(rows, k);
  result.row_ids = std::move(ids);
  return result;
}

}  // namespace flavorbench::analysis

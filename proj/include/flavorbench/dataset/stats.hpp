#pragma once

#include <cstddef>
#include <vector>

#include "flavorbench/dataset/records.hpp"

namespace flavorbench::dataset {

struct HistogramBucket {
  std::size_t lower = 0;  // inclusive
  std::size_t upper = 0;  // exclusive
  std::size_t count = 0;
  double fraction = 0.0;
};

struct MoleculeCountStats {
  std::vector<HistogramBucket> buckets;
  std::size_t total_foods = 0;
  std::size_t min_count = 0;
  std::size_t max_count = 0;
  double mean_count = 0.0;
  double fraction_below_100 = 0.0;  // computed from raw counts, not buckets
};

MoleculeCountStats compute_stats(const FoodStore& foods, std::size_t bucket_width = 25);

}  // namespace flavorbench::dataset

#include "flavorbench/dataset/stats.hpp"

#include <algorithm>

#include "flavorbench/util/errors.hpp"

namespace flavorbench::dataset {

MoleculeCountStats compute_stats(const FoodStore& foods, std::size_t bucket_width) {
  if (bucket_width == 0) throw DataError("bucket width must be positive");
  MoleculeCountStats stats;
  stats.total_foods = foods.size();
  if (stats.total_foods == 0) return stats;

  std::size_t below_100 = 0;
  std::size_t total_molecules = 0;
  stats.min_count = foods.records().front().molecule_ids.size();
  for (const auto& food : foods.records()) {
    const std::size_t count = food.molecule_ids.size();
    stats.min_count = std::min(stats.min_count, count);
    stats.max_count = std::max(stats.max_count, count);
    total_molecules += count;
    if (count < 100) ++below_100;
  }
  stats.mean_count = static_cast<double>(total_molecules) / static_cast<double>(stats.total_foods);
  stats.fraction_below_100 =
      static_cast<double>(below_100) / static_cast<double>(stats.total_foods);

  const std::size_t bucket_count = stats.max_count / bucket_width + 1;
  stats.buckets.resize(bucket_count);
  for (std::size_t i = 0; i < bucket_count; ++i) {
    stats.buckets[i].lower = i * bucket_width;
    stats.buckets[i].upper = (i + 1) * bucket_width;
  }
  for (const auto& food : foods.records()) {
    stats.buckets[food.molecule_ids.size() / bucket_width].count++;
  }
  for (auto& bucket : stats.buckets) {
    bucket.fraction = static_cast<double>(bucket.count) / static_cast<double>(stats.total_foods);
  }
  return stats;
}

}  // namespace flavorbench::dataset

#pragma once

#include <cstdint>
#include <filesystem>

#include "flavorbench/dataset/records.hpp"

namespace flavorbench::dataset {

// Fisher-Yates over ascending food ids with a seeded xoshiro256**, then
// contiguous 80/10/10 slicing: floor(0.8N) / floor(0.1N) / remainder.
// Requires at least 10 foods so dev and test are non-empty.
DatasetSplit make_split(const FoodStore& foods, std::uint64_t seed);

void save_split(const DatasetSplit& split, const std::filesystem::path& path);
DatasetSplit load_split(const std::filesystem::path& path);

}  // namespace flavorbench::dataset

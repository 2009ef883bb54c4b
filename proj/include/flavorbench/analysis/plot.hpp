#pragma once

#include <filesystem>

#include "flavorbench/analysis/pca.hpp"
#include "flavorbench/dataset/records.hpp"

namespace flavorbench::analysis {

// Writes pca.csv (food_id,name,category,pc1,pc2) and pca.svg (scatter
// colored by category). Output is byte-deterministic for fixed input.
// The result must carry row_ids and at least 2 components.
void emit_plot_data(const PcaResult& result, const dataset::FoodStore& foods,
                    const std::filesystem::path& out_dir);

}  // namespace flavorbench::analysis

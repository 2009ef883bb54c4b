#pragma once

#include <cstdint>
#include <map>

#include "flavorbench/dataset/records.hpp"

namespace flavorbench::analysis {

// Molecule appearance counts over TRAIN foods only. Pure function of
// (store, split).
struct MoleculeFrequencyTable {
  std::map<std::int64_t, std::size_t> counts;  // molecule_id -> #train foods containing it
  std::size_t total_train_foods = 0;
};

MoleculeFrequencyTable build_frequency_table(const dataset::FoodStore& foods,
                                             const dataset::DatasetSplit& split);

}  // namespace flavorbench::analysis

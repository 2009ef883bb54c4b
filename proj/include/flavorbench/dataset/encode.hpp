#pragma once

#include <cstdint>
#include <vector>

#include "flavorbench/dataset/records.hpp"

namespace flavorbench::dataset {

// The vocabulary is the sorted list of all molecule ids in the store.
std::vector<std::int64_t> molecule_vocabulary(const MoleculeStore& molecules);

// One binary vector per food, bit j set iff vocabulary[j] is associated.
// A food referencing a molecule outside the vocabulary is an error.
std::vector<FeatureVector> encode(const FoodStore& foods,
                                  const std::vector<std::int64_t>& vocabulary);

}  // namespace flavorbench::dataset

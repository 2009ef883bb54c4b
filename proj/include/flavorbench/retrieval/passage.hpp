#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "flavorbench/dataset/records.hpp"

namespace flavorbench::retrieval {

struct Passage {
  std::int64_t food_id = 0;
  std::string text;  // "Food: {name}. Molecules: {m1, m2, ...}."
};

// One passage per TRAIN food, molecule names comma-space separated in
// ascending molecule_id order. Train ids are taken in sorted order so the
// corpus (and passage ids) do not depend on the shuffle.
std::vector<Passage> build_corpus(const dataset::FoodStore& foods,
                                  const dataset::MoleculeStore& molecules,
                                  const dataset::DatasetSplit& split);

std::string passage_text(const dataset::FoodRecord& food,
                         const dataset::MoleculeStore& molecules);

}  // namespace flavorbench::retrieval

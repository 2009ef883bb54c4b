#include "flavorbench/dataset/encode.hpp"

#include <unordered_map>

#include "flavorbench/util/errors.hpp"

namespace flavorbench::dataset {

std::vector<std::int64_t> molecule_vocabulary(const MoleculeStore& molecules) {
  std::vector<std::int64_t> vocabulary;
  vocabulary.reserve(molecules.size());
  for (const auto& molecule : molecules.records()) vocabulary.push_back(molecule.molecule_id);
  return vocabulary;  // store records are id-sorted
}

std::vector<FeatureVector> encode(const FoodStore& foods,
                                  const std::vector<std::int64_t>& vocabulary) {
  std::unordered_map<std::int64_t, std::size_t> index;
  index.reserve(vocabulary.size());
  for (std::size_t i = 0; i < vocabulary.size(); ++i) index[vocabulary[i]] = i;

  std::vector<FeatureVector> vectors;
  vectors.reserve(foods.size());
  for (const auto& food : foods.records()) {
    FeatureVector vec;
    vec.food_id = food.food_id;
    vec.bits.assign(vocabulary.size(), 0);
    for (const auto molecule_id : food.molecule_ids) {
      const auto it = index.find(molecule_id);
      if (it == index.end()) {
        throw DataError("food " + std::to_string(food.food_id) + " references molecule " +
                        std::to_string(molecule_id) + " outside the vocabulary");
      }
      vec.bits[it->second] = 1;
    }
    vectors.push_back(std::move(vec));
  }
  return vectors;
}

}  // namespace flavorbench::dataset

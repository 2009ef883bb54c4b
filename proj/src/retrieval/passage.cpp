#include "flavorbench/retrieval/passage.hpp"

#include <algorithm>

#include "flavorbench/util/errors.hpp"

namespace flavorbench::retrieval {

std::string passage_text(const dataset::FoodRecord& food,
                         const dataset::MoleculeStore& molecules) {
  std::string text = "Food: " + food.name + ". Molecules: ";
  bool first = true;
  for (const auto molecule_id : food.molecule_ids) {  // already ascending
    const auto* molecule = molecules.find(molecule_id);
    if (molecule == nullptr) {
      throw DataError("passage for food " + std::to_string(food.food_id) +
                      " references unknown molecule " + std::to_string(molecule_id));
    }
    if (!first) text += ", ";
    text += molecule->name;
    first = false;
  }
  text += ".";
  return text;
}

std::vector<Passage> build_corpus(const dataset::FoodStore& foods,
                                  const dataset::MoleculeStore& molecules,
                                  const dataset::DatasetSplit& split) {
  std::vector<std::int64_t> train_ids = split.train;
  std::sort(train_ids.begin(), train_ids.end());

  std::vector<Passage> corpus;
  corpus.reserve(train_ids.size());
  for (const auto food_id : train_ids) {
    const auto* food = foods.find(food_id);
    if (food == nullptr) {
      throw DataError("split names unknown food " + std::to_string(food_id));
    }
    corpus.push_back({food_id, passage_text(*food, molecules)});
  }
  return corpus;
}

}  // namespace flavorbench::retrieval

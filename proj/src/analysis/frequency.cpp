#include "flavorbench/analysis/frequency.hpp"

#include "flavorbench/util/errors.hpp"

namespace flavorbench::analysis {

MoleculeFrequencyTable build_frequency_table(const dataset::FoodStore& foods,
                                             const dataset::DatasetSplit& split) {
  MoleculeFrequencyTable table;
  table.total_train_foods = split.train.size();
  for (const auto food_id : split.train) {
    const auto* food = foods.find(food_id);
    if (food == nullptr) {
      throw DataError("split names unknown food " + std::to_string(food_id));
    }
    for (const auto molecule_id : food->molecule_ids) {
      table.counts[molecule_id]++;
    }
  }
  return table;
}

}  // namespace flavorbench::analysis

#include "flavorbench/dataset/records.hpp"

#include <algorithm>

#include "flavorbench/util/text.hpp"

namespace flavorbench::dataset {

MoleculeStore::MoleculeStore(std::vector<MoleculeRecord> records)
    : records_(std::move(records)) {
  std::sort(records_.begin(), records_.end(),
            [](const auto& a, const auto& b) { return a.molecule_id < b.molecule_id; });
  by_id_.reserve(records_.size());
  by_name_.reserve(records_.size());
  for (std::size_t i = 0; i < records_.size(); ++i) {
    by_id_[records_[i].molecule_id] = i;
    by_name_[collapse_whitespace(lower_ascii(records_[i].name))] = i;
  }
}

const MoleculeRecord* MoleculeStore::find(std::int64_t molecule_id) const {
  const auto it = by_id_.find(molecule_id);
  return it == by_id_.end() ? nullptr : &records_[it->second];
}

const MoleculeRecord* MoleculeStore::find_by_name(const std::string& name) const {
  const auto it = by_name_.find(collapse_whitespace(lower_ascii(name)));
  return it == by_name_.end() ? nullptr : &records_[it->second];
}

FoodStore::FoodStore(std::vector<FoodRecord> records) : records_(std::move(records)) {
  std::sort(records_.begin(), records_.end(),
            [](const auto& a, const auto& b) { return a.food_id < b.food_id; });
  by_id_.reserve(records_.size());
  for (std::size_t i = 0; i < records_.size(); ++i) {
    by_id_[records_[i].food_id] = i;
  }
}

const FoodRecord* FoodStore::find(std::int64_t food_id) const {
  const auto it = by_id_.find(food_id);
  return it == by_id_.end() ? nullptr : &records_[it->second];
}

}  // namespace flavorbench::dataset

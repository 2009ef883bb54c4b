#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace flavorbench::dataset {

struct MoleculeRecord {
  std::int64_t molecule_id = 0;
  std::string name;
  std::optional<std::string> smiles;
  std::vector<std::string> descriptors;
  std::map<std::string, double> properties;
};

struct FoodRecord {
  std::int64_t food_id = 0;
  std::string name;
  std::string category;                   // canonical label from the 21-entry table
  std::vector<std::int64_t> molecule_ids; // sorted ascending, unique, non-empty
};

// Two views of one relation; validated against per-food molecule sets.
struct AssociationMatrix {
  std::set<std::pair<std::int64_t, std::int64_t>> pairs;  // (food_id, molecule_id)
};

// Immutable after ingest; safe for concurrent reads.
class MoleculeStore {
 public:
  explicit MoleculeStore(std::vector<MoleculeRecord> records);
  MoleculeStore() = default;

  const std::vector<MoleculeRecord>& records() const { return records_; }
  const MoleculeRecord* find(std::int64_t molecule_id) const;
  // Case-insensitive, whitespace-collapsed name lookup.
  const MoleculeRecord* find_by_name(const std::string& name) const;
  std::size_t size() const { return records_.size(); }

 private:
  std::vector<MoleculeRecord> records_;  // sorted by molecule_id
  std::unordered_map<std::int64_t, std::size_t> by_id_;
  std::unordered_map<std::string, std::size_t> by_name_;
};

class FoodStore {
 public:
  explicit FoodStore(std::vector<FoodRecord> records);
  FoodStore() = default;

  const std::vector<FoodRecord>& records() const { return records_; }
  const FoodRecord* find(std::int64_t food_id) const;
  std::size_t size() const { return records_.size(); }

 private:
  std::vector<FoodRecord> records_;  // sorted by food_id
  std::unordered_map<std::int64_t, std::size_t> by_id_;
};

struct Stores {
  MoleculeStore molecules;
  FoodStore foods;
  AssociationMatrix associations;
};

struct DatasetSplit {
  std::vector<std::int64_t> train;
  std::vector<std::int64_t> dev;
  std::vector<std::int64_t> test;
  std::uint64_t seed = 0;
};

struct FeatureVector {
  std::int64_t food_id = 0;
  std::vector<std::uint8_t> bits;  // bit j set iff vocabulary[j] is associated
};

}  // namespace flavorbench::dataset

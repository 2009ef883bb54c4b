#include "flavorbench/dataset/ingest.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <set>
#include <unordered_set>

#include "flavorbench/dataset/categories.hpp"
#include "flavorbench/util/errors.hpp"
#include "flavorbench/util/fsio.hpp"
#include "flavorbench/util/hash.hpp"
#include "flavorbench/util/jsonl.hpp"
#include "flavorbench/util/text.hpp"

namespace flavorbench::dataset {

namespace fs = std::filesystem;

namespace {

[[noreturn]] void record_error(const fs::path& file, std::size_t line, const std::string& what) {
  throw DataError(file.string() + " line " + std::to_string(line) + ": " + what);
}

std::int64_t require_positive_id(const fs::path& file, std::size_t line, const json& record,
                                 const char* field) {
  if (!record.contains(field) || !record[field].is_number_integer()) {
    record_error(file, line, std::string("missing or non-integer field '") + field + "'");
  }
  const auto id = record[field].get<std::int64_t>();
  if (id <= 0) record_error(file, line, std::string(field) + " must be positive");
  return id;
}

std::string require_name(const fs::path& file, std::size_t line, const json& record) {
  if (!record.contains("name") || !record["name"].is_string()) {
    record_error(file, line, "missing or non-string field 'name'");
  }
  std::string name = trim(record["name"].get<std::string>());
  if (name.empty()) record_error(file, line, "name is empty");
  return name;
}

std::vector<MoleculeRecord> read_molecules(const fs::path& file) {
  std::vector<MoleculeRecord> molecules;
  std::unordered_set<std::int64_t> seen;
  for_each_jsonl(file, [&](std::size_t line, const json& record) {
    if (!record.is_object()) record_error(file, line, "record is not an object");
    MoleculeRecord molecule;
    molecule.molecule_id = require_positive_id(file, line, record, "molecule_id");
    if (!seen.insert(molecule.molecule_id).second) {
      record_error(file, line, "duplicate molecule_id " + std::to_string(molecule.molecule_id));
    }
    molecule.name = require_name(file, line, record);
    if (record.contains("smiles") && !record["smiles"].is_null()) {
      if (!record["smiles"].is_string()) record_error(file, line, "smiles must be a string");
      std::string smiles = trim(record["smiles"].get<std::string>());
      if (!smiles.empty()) molecule.smiles = std::move(smiles);
    }
    if (record.contains("descriptors") && !record["descriptors"].is_null()) {
      if (!record["descriptors"].is_array()) record_error(file, line, "descriptors must be an array");
      for (const auto& item : record["descriptors"]) {
        if (!item.is_string()) record_error(file, line, "descriptors must contain strings");
        molecule.descriptors.push_back(item.get<std::string>());
      }
    }
    if (record.contains("properties") && !record["properties"].is_null()) {
      if (!record["properties"].is_object()) record_error(file, line, "properties must be an object");
      for (const auto& [key, value] : record["properties"].items()) {
        if (!value.is_number()) record_error(file, line, "property '" + key + "' must be a number");
        molecule.properties[key] = value.get<double>();
      }
    }
    molecules.push_back(std::move(molecule));
  });
  return molecules;
}

std::vector<FoodRecord> read_foods(const fs::path& file) {
  std::vector<FoodRecord> foods;
  std::unordered_set<std::int64_t> seen;
  for_each_jsonl(file, [&](std::size_t line, const json& record) {
    if (!record.is_object()) record_error(file, line, "record is not an object");
    FoodRecord food;
    food.food_id = require_positive_id(file, line, record, "food_id");
    if (!seen.insert(food.food_id).second) {
      record_error(file, line, "duplicate food_id " + std::to_string(food.food_id));
    }
    food.name = require_name(file, line, record);
    if (!record.contains("category") || !record["category"].is_string()) {
      record_error(file, line, "missing or non-string field 'category'");
    }
    const std::string raw_category = record["category"].get<std::string>();
    const auto canonical = canonical_category(raw_category);
    if (!canonical) {
      record_error(file, line,
                   "unknown category label '" + raw_category + "' (did you mean '" +
                       nearest_category(raw_category) + "'?)");
    }
    food.category = *canonical;
    if (!record.contains("molecule_ids") || !record["molecule_ids"].is_array() ||
        record["molecule_ids"].empty()) {
      record_error(file, line, "molecule_ids must be a non-empty array");
    }
    std::set<std::int64_t> ids;
    for (const auto& item : record["molecule_ids"]) {
      if (!item.is_number_integer() || item.get<std::int64_t>() <= 0) {
        record_error(file, line, "molecule_ids must contain positive integers");
      }
      ids.insert(item.get<std::int64_t>());
    }
    food.molecule_ids.assign(ids.begin(), ids.end());
    foods.push_back(std::move(food));
  });
  return foods;
}

AssociationMatrix read_associations(const fs::path& file) {
  AssociationMatrix matrix;
  for_each_jsonl(file, [&](std::size_t line, const json& record) {
    if (!record.is_object()) record_error(file, line, "record is not an object");
    const auto food_id = require_positive_id(file, line, record, "food_id");
    const auto molecule_id = require_positive_id(file, line, record, "molecule_id");
    matrix.pairs.emplace(food_id, molecule_id);
  });
  return matrix;
}

void validate_cross_references(const std::vector<MoleculeRecord>& molecules,
                               const std::vector<FoodRecord>& foods,
                               const AssociationMatrix& matrix) {
  std::unordered_set<std::int64_t> molecule_ids;
  for (const auto& molecule : molecules) molecule_ids.insert(molecule.molecule_id);
  std::unordered_set<std::int64_t> food_ids;
  for (const auto& food : foods) food_ids.insert(food.food_id);

  AssociationMatrix from_foods;
  for (const auto& food : foods) {
    for (const auto molecule_id : food.molecule_ids) {
      if (!molecule_ids.count(molecule_id)) {
        throw DataError("dangling reference: food " + std::to_string(food.food_id) +
                        " references unknown molecule " + std::to_string(molecule_id));
      }
      from_foods.pairs.emplace(food.food_id, molecule_id);
    }
  }
  for (const auto& [food_id, molecule_id] : matrix.pairs) {
    if (!food_ids.count(food_id)) {
      throw DataError("dangling reference: association names unknown food " +
                      std::to_string(food_id));
    }
    if (!molecule_ids.count(molecule_id)) {
      throw DataError("dangling reference: association names unknown molecule " +
                      std::to_string(molecule_id));
    }
  }
  // The matrix and the per-food sets are two views of one relation.
  for (const auto& pair : matrix.pairs) {
    if (!from_foods.pairs.count(pair)) {
      throw DataError("association (" + std::to_string(pair.first) + ", " +
                      std::to_string(pair.second) + ") is absent from the food's molecule_ids");
    }
  }
  for (const auto& pair : from_foods.pairs) {
    if (!matrix.pairs.count(pair)) {
      throw DataError("food " + std::to_string(pair.first) + " lists molecule " +
                      std::to_string(pair.second) + " but the association file does not");
    }
  }
}

json molecule_to_json(const MoleculeRecord& molecule) {
  json record;
  record["molecule_id"] = molecule.molecule_id;
  record["name"] = molecule.name;
  record["smiles"] = molecule.smiles ? json(*molecule.smiles) : json(nullptr);
  record["descriptors"] = molecule.descriptors;
  record["properties"] = molecule.properties;
  return record;
}

json food_to_json(const FoodRecord& food) {
  json record;
  record["food_id"] = food.food_id;
  record["name"] = food.name;
  record["category"] = food.category;
  record["molecule_ids"] = food.molecule_ids;
  return record;
}

std::string iso_timestamp_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm_utc{};
  gmtime_r(&t, &tm_utc);
  char buffer[32];
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buffer;
}

}  // namespace

Stores ingest(const fs::path& export_dir) {
  for (const char* file : {kMoleculesFile, kFoodsFile, kAssociationsFile}) {
    if (!fs::exists(export_dir / file)) {
      throw DataError("missing file: " + (export_dir / file).string());
    }
  }
  auto molecules = read_molecules(export_dir / kMoleculesFile);
  auto foods = read_foods(export_dir / kFoodsFile);
  auto matrix = read_associations(export_dir / kAssociationsFile);
  validate_cross_references(molecules, foods, matrix);

  Stores stores;
  stores.molecules = MoleculeStore(std::move(molecules));
  stores.foods = FoodStore(std::move(foods));
  stores.associations = std::move(matrix);
  return stores;
}

void save_stores(const Stores& stores, const fs::path& out_dir) {
  ensure_directory(out_dir);

  std::vector<json> molecule_lines;
  for (const auto& molecule : stores.molecules.records()) {
    molecule_lines.push_back(molecule_to_json(molecule));
  }
  std::vector<json> food_lines;
  for (const auto& food : stores.foods.records()) {
    food_lines.push_back(food_to_json(food));
  }
  std::vector<json> association_lines;
  for (const auto& [food_id, molecule_id] : stores.associations.pairs) {
    association_lines.push_back({{"food_id", food_id}, {"molecule_id", molecule_id}});
  }

  const std::string molecules_text = dump_jsonl(molecule_lines);
  const std::string foods_text = dump_jsonl(food_lines);
  const std::string associations_text = dump_jsonl(association_lines);

  Fnv1a64 hasher;
  hasher.update(molecules_text).update(foods_text).update(associations_text);

  atomic_write_file(out_dir / kMoleculesFile, molecules_text);
  atomic_write_file(out_dir / kFoodsFile, foods_text);
  atomic_write_file(out_dir / kAssociationsFile, associations_text);

  json manifest;
  manifest["schema_version"] = 1;
  manifest["counts"] = {{"molecules", stores.molecules.size()},
                        {"foods", stores.foods.size()},
                        {"associations", stores.associations.pairs.size()}};
  manifest["content_hash"] = hasher.value();
  manifest["ingested_at"] = iso_timestamp_now();
  atomic_write_file(out_dir / kManifestFile, manifest.dump(2) + "\n");
}

Stores load_stores(const fs::path& dir) { return ingest(dir); }

}  // namespace flavorbench::dataset

#pragma once

#include <filesystem>

#include "flavorbench/dataset/records.hpp"

namespace flavorbench::dataset {

// Export/store directory layout: molecules.jsonl, foods.jsonl,
// associations.jsonl. Validated stores additionally carry manifest.json.
inline constexpr const char* kMoleculesFile = "molecules.jsonl";
inline constexpr const char* kFoodsFile = "foods.jsonl";
inline constexpr const char* kAssociationsFile = "associations.jsonl";
inline constexpr const char* kManifestFile = "manifest.json";

// Reads and validates an export directory. Throws DataError on missing
// files, malformed records (with line numbers), duplicate ids, dangling
// references, and unknown category labels (with the nearest valid label).
Stores ingest(const std::filesystem::path& export_dir);

// Writes validated stores in canonical form (records sorted by id, sorted
// object keys) plus manifest.json with counts, a content hash over the three
// files, and the ingest timestamp. The three store files are byte-identical
// across repeated runs on the same input.
void save_stores(const Stores& stores, const std::filesystem::path& out_dir);

// Stores round-trip through the export format, so loading is re-validation.
Stores load_stores(const std::filesystem::path& dir);

}  // namespace flavorbench::dataset

#include "flavorbench/dataset/split.hpp"

#include "flavorbench/util/errors.hpp"
#include "flavorbench/util/fsio.hpp"
#include "flavorbench/util/jsonl.hpp"
#include "flavorbench/util/rng.hpp"

namespace flavorbench::dataset {

DatasetSplit make_split(const FoodStore& foods, std::uint64_t seed) {
  const std::size_t n = foods.size();
  if (n < 10) {
    throw DataError("split requires at least 10 foods, got " + std::to_string(n));
  }
  std::vector<std::int64_t> ids;
  ids.reserve(n);
  for (const auto& food : foods.records()) ids.push_back(food.food_id);  // ascending

  Xoshiro256 rng(seed);
  rng.shuffle(ids);

  // Integer arithmetic: train = floor(0.8N), dev = floor(0.1N), test = rest.
  const std::size_t train_size = n * 8 / 10;
  const std::size_t dev_size = n / 10;

  DatasetSplit split;
  split.seed = seed;
  split.train.assign(ids.begin(), ids.begin() + train_size);
  split.dev.assign(ids.begin() + train_size, ids.begin() + train_size + dev_size);
  split.test.assign(ids.begin() + train_size + dev_size, ids.end());
  return split;
}

void save_split(const DatasetSplit& split, const std::filesystem::path& path) {
  json doc;
  doc["seed"] = split.seed;
  doc["train"] = split.train;
  doc["dev"] = split.dev;
  doc["test"] = split.test;
  atomic_write_file(path, doc.dump(2) + "\n");
}

DatasetSplit load_split(const std::filesystem::path& path) {
  json doc;
  try {
    doc = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw DataError("malformed split file " + path.string() + ": " + e.what());
  }
  DatasetSplit split;
  try {
    split.seed = doc.at("seed").get<std::uint64_t>();
    split.train = doc.at("train").get<std::vector<std::int64_t>>();
    split.dev = doc.at("dev").get<std::vector<std::int64_t>>();
    split.test = doc.at("test").get<std::vector<std::int64_t>>();
  } catch (const json::exception& e) {
    throw DataError("invalid split file " + path.string() + ": " + e.what());
  }
  return split;
}

}  // namespace flavorbench::dataset

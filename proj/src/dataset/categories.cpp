#include "flavorbench/dataset/categories.hpp"

#include <limits>
#include <unordered_map>

#include "flavorbench/util/text.hpp"

namespace flavorbench::dataset {

const std::vector<std::string>& category_table() {
  static const std::vector<std::string> table = {
      "Additive",        "Animal Product", "Bakery",          "Beverage",
      "Cereal",          "Cereal Crop",    "Dairy",           "Dish",
      "Essential Oil",   "Fish and Seafood", "Flower",        "Fruit",
      "Fungus",          "Herb",           "Meat",            "Nut and Seed",
      "Plant",           "Plant Derivative", "Seed",          "Spice",
      "Vegetable",
  };
  return table;
}

std::string normalize_category(const std::string& raw) {
  return singularize_last_word(collapse_whitespace(lower_ascii(raw)));
}

namespace {

const std::unordered_map<std::string, std::string>& normalized_index() {
  static const auto* index = [] {
    auto* map = new std::unordered_map<std::string, std::string>();
    for (const auto& label : category_table()) {
      (*map)[normalize_category(label)] = label;
    }
    return map;
  }();
  return *index;
}

}  // namespace

std::optional<std::string> canonical_category(const std::string& raw) {
  const auto& index = normalized_index();
  const auto it = index.find(normalize_category(raw));
  if (it == index.end()) return std::nullopt;
  return it->second;
}

std::string nearest_category(const std::string& raw) {
  const std::string normalized = normalize_category(raw);
  std::size_t best_distance = std::numeric_limits<std::size_t>::max();
  std::string best;
  for (const auto& label : category_table()) {
    const auto distance = levenshtein(normalized, normalize_category(label));
    if (distance < best_distance) {
      best_distance = distance;
      best = label;
    }
  }
  return best;
}

}  // namespace flavorbench::dataset

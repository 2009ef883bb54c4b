#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flavorbench/agent/instance.hpp"
#include "flavorbench/analysis/entropy.hpp"
#include "flavorbench/dataset/records.hpp"

namespace flavorbench::evidence {

struct EvidenceQuery {
  enum class Kind { MoleculeSources, FoodMolecules };
  Kind kind = Kind::MoleculeSources;
  std::string subject;  // molecule or food name
  std::string text;     // the exact templated query
};

std::string molecule_sources_query(const std::string& molecule_name);
std::string food_molecules_query(const std::string& food_name);

// Lowercased, whitespace-collapsed cache key.
std::string normalize_query_key(const std::string& query_text);

// MFP: one molecule_sources query per selected molecule (at most 10, by the
// SelectedMolecules invariant). MPC: a single food_molecules query.
std::vector<EvidenceQuery> make_queries(
    const agent::TaskInstance& instance,
    const std::optional<analysis::SelectedMolecules>& selected,
    const dataset::MoleculeStore& molecules);

}  // namespace flavorbench::evidence

#include "flavorbench/evidence/query.hpp"

#include "flavorbench/util/errors.hpp"
#include "flavorbench/util/text.hpp"

namespace flavorbench::evidence {

std::string molecule_sources_query(const std::string& molecule_name) {
  return "What are the common food sources that could contain " + molecule_name + "?";
}

std::string food_molecules_query(const std::string& food_name) {
  return "What molecules are present in " + food_name + "?";
}

std::string normalize_query_key(const std::string& query_text) {
  return collapse_whitespace(lower_ascii(query_text));
}

std::vector<EvidenceQuery> make_queries(
    const agent::TaskInstance& instance,
    const std::optional<analysis::SelectedMolecules>& selected,
    const dataset::MoleculeStore& molecules) {
  std::vector<EvidenceQuery> queries;
  if (instance.task == agent::Task::MFP) {
    if (!selected) {
      throw DataError("MFP evidence queries require selected starting-point molecules");
    }
    for (const auto& molecule : selected->molecules) {
      const auto* record = molecules.find(molecule.molecule_id);
      if (record == nullptr) continue;  // only store-resolvable molecules are queryable
      queries.push_back({EvidenceQuery::Kind::MoleculeSources, record->name,
                         molecule_sources_query(record->name)});
    }
  } else {
    if (instance.food_name.empty()) {
      throw DataError("MPC evidence query requires the instance food name");
    }
    queries.push_back({EvidenceQuery::Kind::FoodMolecules, instance.food_name,
                       food_molecules_query(instance.food_name)});
  }
  return queries;
}

}  // namespace flavorbench::evidence

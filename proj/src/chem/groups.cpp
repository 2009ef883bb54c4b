#include "flavorbench/chem/groups.hpp"

#include <algorithm>

#include "json.hpp"

#include "flavorbench/chem/smiles.hpp"
#include "flavorbench/util/errors.hpp"
#include "flavorbench/util/fsio.hpp"

namespace flavorbench::chem {

using json = nlohmann::json;

GroupTaxonomy GroupTaxonomy::load(const std::filesystem::path& path) {
  return from_json_text(read_file(path), path.string());
}

GroupTaxonomy GroupTaxonomy::from_json_text(const std::string& text, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DataError("malformed group taxonomy " + origin + ": " + e.what());
  }
  GroupTaxonomy taxonomy;
  try {
    taxonomy.version_ = doc.at("version").get<int>();
    for (const auto& entry : doc.at("groups")) {
      GroupDefinition group;
      group.label = entry.at("label").get<std::string>();
      group.builtin = entry.value("builtin", "");
      if (entry.contains("patterns")) {
        group.patterns = entry["patterns"].get<std::vector<std::string>>();
      }
      if (entry.contains("suppresses")) {
        group.suppresses = entry["suppresses"].get<std::vector<std::string>>();
      }
      if (group.builtin.empty() && group.patterns.empty()) {
        throw DataError("group '" + group.label + "' has neither patterns nor a builtin");
      }
      if (!group.builtin.empty() && group.builtin != "aromatic_ring") {
        throw DataError("unknown builtin detector '" + group.builtin + "'");
      }
      for (const auto& pattern : group.patterns) {
        group.compiled.push_back(parse_pattern(pattern));
      }
      taxonomy.groups_.push_back(std::move(group));
    }
  } catch (const json::exception& e) {
    throw DataError("invalid group taxonomy " + origin + ": " + e.what());
  }
  return taxonomy;
}

std::set<std::string> GroupMatches::labels() const {
  std::set<std::string> out;
  for (const auto& [label, label_sites] : sites) {
    if (!label_sites.empty()) out.insert(label);
  }
  return out;
}

GroupMatches match_functional_groups(const MolGraph& mol, const GroupTaxonomy& taxonomy) {
  GroupMatches matches;
  for (const auto& group : taxonomy.groups()) {
    std::vector<std::vector<int>> sites;
    if (group.builtin == "aromatic_ring") {
      has_aromatic_ring(mol, &sites);
    } else {
      for (const auto& pattern : group.compiled) {
        for (auto& site : match_pattern(pattern, mol)) {
          if (std::find(sites.begin(), sites.end(), site) == sites.end()) {
            sites.push_back(std::move(site));
          }
        }
      }
      std::sort(sites.begin(), sites.end());
    }
    if (!sites.empty()) matches.sites[group.label] = std::move(sites);
  }

  // Suppression: most specific interpretation per site.
  for (const auto& group : taxonomy.groups()) {
    if (group.suppresses.empty()) continue;
    const auto winner_it = matches.sites.find(group.label);
    if (winner_it == matches.sites.end()) continue;
    for (const auto& loser_label : group.suppresses) {
      const auto loser_it = matches.sites.find(loser_label);
      if (loser_it == matches.sites.end()) continue;
      auto& loser_sites = loser_it->second;
      loser_sites.erase(
          std::remove_if(loser_sites.begin(), loser_sites.end(),
                         [&](const std::vector<int>& loser_site) {
                           for (const auto& winner_site : winner_it->second) {
                             if (std::includes(winner_site.begin(), winner_site.end(),
                                               loser_site.begin(), loser_site.end())) {
                               return true;
                             }
                           }
                           return false;
                         }),
          loser_sites.end());
      if (loser_sites.empty()) matches.sites.erase(loser_it);
    }
  }
  return matches;
}

std::set<std::string> functional_groups(const MolGraph& mol, const GroupTaxonomy& taxonomy) {
  return match_functional_groups(mol, taxonomy).labels();
}

std::set<std::string> groups_of_structures(const std::vector<std::string>& smiles_set,
                                           const GroupTaxonomy& taxonomy) {
  std::set<std::string> all;
  for (const auto& smiles : smiles_set) {
    try {
      const MolGraph mol = parse_smiles(smiles);
      const auto groups = functional_groups(mol, taxonomy);
      all.insert(groups.begin(), groups.end());
    } catch (const SmilesError& e) {
      throw DataError("cannot parse structure '" + smiles + "': " + e.what());
    }
  }
  return all;
}

double group_f1(const std::set<std::string>& a, const std::set<std::string>& b) {
  if (a.empty() && b.empty()) return 1.0;
  if (a.empty() || b.empty()) return 0.0;
  std::vector<std::string> intersection;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(intersection));
  return 2.0 * static_cast<double>(intersection.size()) /
         static_cast<double>(a.size() + b.size());
}

double group_f1_structures(const std::vector<std::string>& predicted,
                           const std::vector<std::string>& gold,
                           const GroupTaxonomy& taxonomy) {
  return group_f1(groups_of_structures(predicted, taxonomy),
                  groups_of_structures(gold, taxonomy));
}

}  // namespace flavorbench::chem

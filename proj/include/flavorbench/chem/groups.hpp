#pragma once

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "flavorbench/chem/molgraph.hpp"
#include "flavorbench/chem/pattern.hpp"

namespace flavorbench::chem {

struct GroupDefinition {
  std::string label;
  std::vector<std::string> patterns;      // empty for builtin detectors
  std::vector<PatternGraph> compiled;
  std::vector<std::string> suppresses;    // labels hidden on overlapping sites
  std::string builtin;                    // "aromatic_ring" or empty
};

// Shipped as a versioned data file so the taxonomy is auditable and
// extensible without code change.
class GroupTaxonomy {
 public:
  static GroupTaxonomy load(const std::filesystem::path& path);
  static GroupTaxonomy from_json_text(const std::string& text, const std::string& origin);

  const std::vector<GroupDefinition>& groups() const { return groups_; }
  int version() const { return version_; }

 private:
  int version_ = 0;
  std::vector<GroupDefinition> groups_;
};

struct GroupMatches {
  // label -> matched sites (sorted molecule atom index sets), post-suppression
  std::map<std::string, std::vector<std::vector<int>>> sites;
  std::set<std::string> labels() const;
};

// Matches every group pattern, then applies suppression: a composite group
// hides a constituent group's match when the constituent's atoms are a
// subset of the composite's site.
GroupMatches match_functional_groups(const MolGraph& mol, const GroupTaxonomy& taxonomy);

std::set<std::string> functional_groups(const MolGraph& mol, const GroupTaxonomy& taxonomy);

// Union of groups across a set of molecules given as structure strings.
// Parse failures are rethrown naming the offending molecule.
std::set<std::string> groups_of_structures(const std::vector<std::string>& smiles_set,
                                           const GroupTaxonomy& taxonomy);

// F1 over two group-label sets: 2|A∩B| / (|A|+|B|); defined as 1 when both
// sets are empty (identical degenerate profiles) and 0 when exactly one is.
double group_f1(const std::set<std::string>& a, const std::set<std::string>& b);

double group_f1_structures(const std::vector<std::string>& predicted,
                           const std::vector<std::string>& gold,
                           const GroupTaxonomy& taxonomy);

}  // namespace flavorbench::chem

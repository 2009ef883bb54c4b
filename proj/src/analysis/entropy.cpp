#include "flavorbench/analysis/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "flavorbench/util/errors.hpp"

namespace flavorbench::analysis {

double binary_entropy(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

SelectedMolecules select_starting_points(const std::vector<std::int64_t>& candidate_ids,
                                         const MoleculeFrequencyTable& table,
                                         std::size_t limit) {
  if (candidate_ids.empty()) {
    throw DataError("select_starting_points: molecule set is empty");
  }
  const std::set<std::int64_t> unique(candidate_ids.begin(), candidate_ids.end());

  std::vector<SelectedMolecule> seen;
  std::vector<SelectedMolecule> unseen;
  for (const auto molecule_id : unique) {
    const auto it = table.counts.find(molecule_id);
    if (it != table.counts.end() && table.total_train_foods > 0) {
      const double p = static_cast<double>(it->second) /
                       static_cast<double>(table.total_train_foods);
      seen.push_back({molecule_id, binary_entropy(p), true});
    } else {
      unseen.push_back({molecule_id, 0.0, false});
    }
  }
  std::sort(seen.begin(), seen.end(), [](const auto& a, const auto& b) {
    if (a.entropy_bits != b.entropy_bits) return a.entropy_bits < b.entropy_bits;
    return a.molecule_id < b.molecule_id;
  });
  // `unseen` is already id-sorted via the std::set above.

  SelectedMolecules result;
  for (const auto& molecule : seen) {
    if (result.molecules.size() >= limit) break;
    result.molecules.push_back(molecule);
  }
  for (const auto& molecule : unseen) {
    if (result.molecules.size() >= limit) break;
    result.molecules.push_back(molecule);
  }
  return result;
}

}  // namespace flavorbench::analysis

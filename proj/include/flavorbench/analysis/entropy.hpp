#pragma once

#include <cstdint>
#include <vector>

#include "flavorbench/analysis/frequency.hpp"

namespace flavorbench::analysis {

// Binary entropy in bits of the "a train food contains this molecule"
// event; H(0) = H(1) = 0. Only the ordering matters for selection, so the
// base is irrelevant there, but values are reported in bits.
double binary_entropy(double p);

struct SelectedMolecule {
  std::int64_t molecule_id = 0;
  double entropy_bits = 0.0;
  bool seen_in_train = false;
};

// Ordered ascending by entropy, ties by ascending molecule_id. Molecules
// absent from the table carry zero train evidence and are ranked after all
// seen molecules (then by id), despite their nominal H=0.
struct SelectedMolecules {
  std::vector<SelectedMolecule> molecules;  // at most `limit`
};

SelectedMolecules select_starting_points(const std::vector<std::int64_t>& candidate_ids,
                                         const MoleculeFrequencyTable& table,
                                         std::size_t limit = 10);

}  // namespace flavorbench::analysis

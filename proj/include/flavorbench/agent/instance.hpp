#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "flavorbench/dataset/records.hpp"

namespace flavorbench::agent {

enum class Task { MFP, MPC };

std::string task_name(Task task);
Task parse_task(const std::string& name);

// A single benchmark problem with its gold answer and provenance.
struct TaskInstance {
  Task task = Task::MFP;
  std::string id;            // e.g. "mfp-000102"; zero-padded so id order == numeric order
  std::int64_t food_id = 0;
  std::string food_name;
  std::string split_tag;     // "dev" or "test"

  // MFP: predict the category from the full molecule set.
  std::vector<std::string> input_molecules;  // names, ascending molecule_id order
  std::string gold_category;

  // MPC: predict the n held-out molecules from the partial profile.
  std::vector<std::string> partial_molecules;
  std::vector<std::string> gold_missing;
  int missing_count = 0;
};

enum class SplitSegment { Dev, Test, DevAndTest };

// MFP: one instance per segment food. MPC: n = round(holdout_fraction *
// |molecules|) clamped to [1, |molecules|-1], membership drawn by a per-food
// seeded shuffle; single-molecule foods are skipped (logged) since no
// partial set would remain.
std::vector<TaskInstance> make_instances(const dataset::Stores& stores,
                                         const dataset::DatasetSplit& split, Task task,
                                         std::uint64_t seed, double holdout_fraction,
                                         SplitSegment segment = SplitSegment::DevAndTest);

}  // namespace flavorbench::agent

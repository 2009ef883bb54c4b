#include "flavorbench/agent/instance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "flavorbench/util/errors.hpp"
#include "flavorbench/util/log.hpp"
#include "flavorbench/util/rng.hpp"

namespace flavorbench::agent {

std::string task_name(Task task) { return task == Task::MFP ? "mfp" : "mpc"; }

Task parse_task(const std::string& name) {
  if (name == "mfp") return Task::MFP;
  if (name == "mpc") return Task::MPC;
  throw DataError("unknown task '" + name + "' (expected mfp or mpc)");
}

namespace {

std::string instance_id(Task task, std::int64_t food_id) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%s-%06lld", task_name(task).c_str(),
                static_cast<long long>(food_id));
  return buffer;
}

std::vector<std::string> molecule_names(const dataset::MoleculeStore& molecules,
                                        const std::vector<std::int64_t>& ids) {
  std::vector<std::string> names;
  names.reserve(ids.size());
  for (const auto molecule_id : ids) {
    const auto* molecule = molecules.find(molecule_id);
    if (molecule == nullptr) {
      throw DataError("instance references unknown molecule " + std::to_string(molecule_id));
    }
    names.push_back(molecule->name);
  }
  return names;
}

}  // namespace

std::vector<TaskInstance> make_instances(const dataset::Stores& stores,
                                         const dataset::DatasetSplit& split, Task task,
                                         std::uint64_t seed, double holdout_fraction,
                                         SplitSegment segment) {
  if (task == Task::MPC && (holdout_fraction <= 0.0 || holdout_fraction >= 1.0)) {
    throw DataError("holdout_fraction must be in (0, 1)");
  }

  std::vector<std::int64_t> food_ids;
  const auto add_segment = [&](const std::vector<std::int64_t>& ids, const char*) {
    food_ids.insert(food_ids.end(), ids.begin(), ids.end());
  };
  if (segment == SplitSegment::Dev || segment == SplitSegment::DevAndTest) {
    add_segment(split.dev, "dev");
  }
  if (segment == SplitSegment::Test || segment == SplitSegment::DevAndTest) {
    add_segment(split.test, "test");
  }
  std::sort(food_ids.begin(), food_ids.end());

  const auto split_tag_of = [&](std::int64_t food_id) {
    return std::find(split.dev.begin(), split.dev.end(), food_id) != split.dev.end()
               ? "dev"
               : "test";
  };

  std::vector<TaskInstance> instances;
  for (const auto food_id : food_ids) {
    const auto* food = stores.foods.find(food_id);
    if (food == nullptr) throw DataError("split names unknown food " + std::to_string(food_id));

    TaskInstance instance;
    instance.task = task;
    instance.id = instance_id(task, food_id);
    instance.food_id = food_id;
    instance.food_name = food->name;
    instance.split_tag = split_tag_of(food_id);

    if (task == Task::MFP) {
      instance.input_molecules = molecule_names(stores.molecules, food->molecule_ids);
      instance.gold_category = food->category;
    } else {
      const std::size_t total = food->molecule_ids.size();
      if (total < 2) {
        log_info("instances", "skipping food " + std::to_string(food_id) +
                                  " for MPC: only one molecule, nothing to hold out");
        continue;
      }
      auto n = static_cast<std::size_t>(
          std::lround(holdout_fraction * static_cast<double>(total)));
      n = std::clamp<std::size_t>(n, 1, total - 1);

      // Per-food stream so membership does not depend on iteration order.
      std::uint64_t mix = seed ^ (static_cast<std::uint64_t>(food_id) * 0x9e3779b97f4a7c15ULL);
      Xoshiro256 rng(splitmix64_next(mix));
      std::vector<std::int64_t> shuffled = food->molecule_ids;
      rng.shuffle(shuffled);

      std::vector<std::int64_t> missing(shuffled.begin(),
                                        shuffled.begin() + static_cast<std::ptrdiff_t>(n));
      std::vector<std::int64_t> partial(shuffled.begin() + static_cast<std::ptrdiff_t>(n),
                                        shuffled.end());
      std::sort(missing.begin(), missing.end());
      std::sort(partial.begin(), partial.end());

      instance.missing_count = static_cast<int>(n);
      instance.gold_missing = molecule_names(stores.molecules, missing);
      instance.partial_molecules = molecule_names(stores.molecules, partial);
    }
    instances.push_back(std::move(instance));
  }
  return instances;
}

}  // namespace flavorbench::agent

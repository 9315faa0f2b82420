#pragma once

#include <cstdint>

#include "fairagent/corpus.hpp"

namespace fairagent {

// Synthetic desk-scale corpus generator. The timeline is divided into
// num_train_cohorts + num_test_stages equal windows; one item cohort
// enters at the start of each window. Within a window a user picks the
// fresh cohort with their personal new-item affinity, otherwise a
// training-cohort item; picks inside a pool follow a latent-factor
// preference model with an additive recency bonus.
struct SynthSpec {
  int num_users = 500;
  int items_per_cohort = 200;
  int num_train_cohorts = 5;
  int num_test_stages = 5;
  int events_per_user_per_window = 6;
  double new_item_affinity = 0.5;  // mean of the per-user affinity
  double affinity_sigma = 0.5;     // logit-normal spread; 0 = constant
  int latent_dim = 16;
  double recency_bonus = 0.25;
  double temperature = 0.35;  // lower = more concentrated preferences
};

Dataset synth_generate(const SynthSpec& spec, std::uint64_t seed);

}  // namespace fairagent

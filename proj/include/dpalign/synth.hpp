#pragma once

#include <string>

#include "dpalign/core.hpp"
#include "dpalign/prefs.hpp"

namespace dpalign {

// Synthetic preference-learning instances: contexts uniform on [-1,1]^p,
// interleaved linear/quadratic features with action-dependent signs, a
// unit-norm alternating ground truth and a uniform reference policy over
// the four sign combinations.

struct SyntheticInstance {
  int d = 0;
  int p = 0;  // ceil(d / 2)
  FeatureMap fmap;
  RewardParams theta_star;
  int action_count = 4;
  double bound_L = 0.0;
};

// Feature slots alternate u(a)*x_j (even slot) and v(a)*(x_j^2 - 1/3) (odd
// slot), truncated to length d. Actions 0..3 carry signs (u, v) =
// (+,+), (+,-), (-,+), (-,-). theta*_k = (-1)^(k+1)/sqrt(d) in 1-based k.
// bound_L is analytic: sqrt(n_lin + n_quad * (2/3)^2).
SyntheticInstance make_instance(int d);

Context sample_context(const SyntheticInstance& inst, Rng& rng);

// n records: x ~ Unif, two candidates i.i.d. from the uniform reference
// (ties redrawn), winner labelled by the Bradley-Terry probability under
// label_theta (defaults to theta*; zero vector is the symmetric-label hook).
PreferenceDataset sample_dataset(const SyntheticInstance& inst, std::size_t n, Seed seed);
PreferenceDataset sample_dataset(const SyntheticInstance& inst, std::size_t n, Seed seed, const Vector& label_theta);

std::vector<Context> sample_eval_contexts(const SyntheticInstance& inst, std::size_t n_eval, Seed seed);

// FNV digest of the context coordinates; recorded per sweep cell so the
// shared-eval-set discipline is checkable after the fact.
std::uint64_t context_set_digest(const std::vector<Context>& contexts);

// Flat key=value sidecar describing an instance (d, p, bound_L, theta_star,
// seed, rng tag).
void write_instance_manifest(const std::string& path, const SyntheticInstance& inst, Seed seed);
SyntheticInstance read_instance_manifest(const std::string& path);

// Stream ids per stage, combined with a base seed into independent streams.
namespace streams {
constexpr std::uint64_t kDataset = 1;
constexpr std::uint64_t kTraining = 2;
constexpr std::uint64_t kEval = 3;
constexpr std::uint64_t kBon = 4;
}  // namespace streams

}  // namespace dpalign

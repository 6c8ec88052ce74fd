#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dpalign/core.hpp"

namespace dpalign {

// Preference data model: Bradley-Terry likelihood over a finite action set
// with a linear reward r_theta(x, a) = <theta, phi(x, a)>.

struct Context {
  Vector coords;  // length p, entries in [-1, 1]
};

using ActionId = int;

struct PreferencePair {
  Context context;
  ActionId winner = 0;
  ActionId loser = 0;
};

struct PreferenceDataset {
  std::vector<PreferencePair> pairs;
  std::size_t n() const { return pairs.size(); }
};

// Deterministic feature map with a certified sup-norm bound:
// ||phi(x, a)||_2 <= bound_L for every reachable (x, a).
struct FeatureMap {
  int d = 0;
  double bound_L = 0.0;
  std::function<Vector(const Context&, ActionId)> eval;

  Vector operator()(const Context& x, ActionId a) const { return eval(x, a); }
};

struct RewardParams {
  Vector theta;
  double radius_R = 0.0;

  bool inside_ball(double tol = 1e-9) const { return theta.norm() <= radius_R + tol; }
};

inline Vector pair_delta_phi(const FeatureMap& fmap, const PreferencePair& pair) {
  return fmap(pair.context, pair.winner) - fmap(pair.context, pair.loser);
}

// P(a1 preferred over a2 | x) = sigmoid(<theta, phi(x,a1) - phi(x,a2)>).
double bt_prob(const RewardParams& theta, const FeatureMap& fmap, const Context& x, ActionId a1, ActionId a2);

// -log sigmoid(margin), computed as softplus(-margin).
double pair_nll(const RewardParams& theta, const FeatureMap& fmap, const PreferencePair& pair);

// Gradient of pair_nll in theta: -(1 - sigmoid(margin)) * dphi.
// Satisfies ||grad||_2 <= ||dphi||_2 <= 2 * bound_L.
Vector pair_grad(const RewardParams& theta, const FeatureMap& fmap, const PreferencePair& pair);

// Average negative log-likelihood over the dataset. Throws on empty data.
double dataset_nll(const RewardParams& theta, const FeatureMap& fmap, const PreferenceDataset& data);

// Full-batch gradient of dataset_nll.
Vector dataset_grad(const RewardParams& theta, const FeatureMap& fmap, const PreferenceDataset& data);

// CSV serialization. Header: pair_id,x_0,...,x_{p-1},winner,loser.
// Floats are rendered with 17 significant digits so a round trip is exact.
void write_dataset_csv(const std::string& path, const PreferenceDataset& data);
PreferenceDataset read_dataset_csv(const std::string& path);

}  // namespace dpalign

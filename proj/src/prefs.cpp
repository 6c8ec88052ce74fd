#include "dpalign/prefs.hpp"

#include <fstream>
#include <sstream>

namespace dpalign {

double bt_prob(const RewardParams& theta, const FeatureMap& fmap, const Context& x, ActionId a1, ActionId a2) {
  const Vector dphi = fmap(x, a1) - fmap(x, a2);
  return sigmoid(theta.theta.dot(dphi));
}

double pair_nll(const RewardParams& theta, const FeatureMap& fmap, const PreferencePair& pair) {
  const double margin = theta.theta.dot(pair_delta_phi(fmap, pair));
  return softplus(-margin);
}

Vector pair_grad(const RewardParams& theta, const FeatureMap& fmap, const PreferencePair& pair) {
  const Vector dphi = pair_delta_phi(fmap, pair);
  const double margin = theta.theta.dot(dphi);
  return -(1.0 - sigmoid(margin)) * dphi;
}

double dataset_nll(const RewardParams& theta, const FeatureMap& fmap, const PreferenceDataset& data) {
  if (data.pairs.empty()) throw ConfigError("empty dataset");
  KahanSum sum;
  for (const auto& pair : data.pairs) sum.add(pair_nll(theta, fmap, pair));
  return sum.value() / static_cast<double>(data.n());
}

Vector dataset_grad(const RewardParams& theta, const FeatureMap& fmap, const PreferenceDataset& data) {
  if (data.pairs.empty()) throw ConfigError("empty dataset");
  Vector g = Vector::Zero(fmap.d);
  for (const auto& pair : data.pairs) g += pair_grad(theta, fmap, pair);
  return g / static_cast<double>(data.n());
}

void write_dataset_csv(const std::string& path, const PreferenceDataset& data) {
  if (data.pairs.empty()) throw ConfigError("empty dataset");
  const int p = static_cast<int>(data.pairs.front().context.coords.size());
  std::ostringstream out;
  out << "pair_id";
  for (int j = 0; j < p; ++j) out << ",x_" << j;
  out << ",winner,loser\n";
  for (std::size_t i = 0; i < data.pairs.size(); ++i) {
    const auto& pair = data.pairs[i];
    out << i;
    for (int j = 0; j < p; ++j) out << ',' << fmt_g17(pair.context.coords[j]);
    out << ',' << pair.winner << ',' << pair.loser << '\n';
  }
  write_text_file(path, out.str());
}

PreferenceDataset read_dataset_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open dataset: " + path);
  std::string line;
  if (!std::getline(in, line)) throw ConfigError("empty dataset file: " + path);
  const auto header = split(trim(line), ',');
  if (header.size() < 4 || header.front() != "pair_id") throw ConfigError("bad dataset header: " + path);
  const int p = static_cast<int>(header.size()) - 3;

  PreferenceDataset data;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty()) continue;
    const auto cells = split(line, ',');
    if (static_cast<int>(cells.size()) != p + 3) throw ConfigError("bad dataset row: " + line);
    PreferencePair pair;
    pair.context.coords = Vector(p);
    for (int j = 0; j < p; ++j) pair.context.coords[j] = std::stod(cells[1 + j]);
    pair.winner = std::stoi(cells[p + 1]);
    pair.loser = std::stoi(cells[p + 2]);
    data.pairs.push_back(std::move(pair));
  }
  if (data.pairs.empty()) throw ConfigError("empty dataset");
  return data;
}

}  // namespace dpalign

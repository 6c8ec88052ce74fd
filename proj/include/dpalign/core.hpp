#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace dpalign {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// ---------------------------------------------------------------------------
// Seeded random streams.
//
// Generator: xoshiro256++ (Blackman & Vigna), state expanded from (base,
// stream) with SplitMix64. The algorithm is fixed and recorded in run
// manifests as "rng=xoshiro256++/splitmix64 v1"; identical (base, stream)
// pairs reproduce identical draws on every platform.
// ---------------------------------------------------------------------------

struct Seed {
  std::uint64_t base = 0;
  std::uint64_t stream = 0;
};

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class Rng {
 public:
  explicit Rng(Seed seed) {
    std::uint64_t s = seed.base ^ (0x632be59bd9b4e019ULL * (seed.stream + 1));
    for (auto& w : state_) w = splitmix64(s);
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Unbiased integer in [0, n) by rejection.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = n * ((~std::uint64_t{0}) / n);
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return x % n;
  }

  // Standard normal via Box-Muller (cosine branch, two uniforms per draw).
  double normal() {
    const double u1 = 1.0 - uniform01();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  std::uint64_t state_[4];
};

// ---------------------------------------------------------------------------
// Scalar kernels.
// ---------------------------------------------------------------------------

// Numerically stable sigmoid; saturates instead of overflowing.
template <typename Scalar>
Scalar sigmoid(Scalar t) {
  if (t >= Scalar(0)) return Scalar(1) / (Scalar(1) + std::exp(-t));
  const Scalar e = std::exp(t);
  return e / (Scalar(1) + e);
}

// softplus(t) = log(1 + e^t), branch on sign to avoid overflow.
template <typename Scalar>
Scalar softplus(Scalar t) {
  if (t > Scalar(0)) return t + std::log1p(std::exp(-t));
  return std::log1p(std::exp(t));
}

inline double log_sum_exp(const std::vector<double>& v) {
  double m = -std::numeric_limits<double>::infinity();
  for (double x : v) m = std::max(m, x);
  if (!std::isfinite(m)) return m;
  double s = 0.0;
  for (double x : v) s += std::exp(x - m);
  return m + std::log(s);
}

// Compensated (Kahan) accumulator; keeps Monte Carlo means stable and
// independent of harmless reassociation.
class KahanSum {
 public:
  void add(double x) {
    const double y = x - c_;
    const double t = s_ + y;
    c_ = (t - s_) - y;
    s_ = t;
  }
  double value() const { return s_; }

 private:
  double s_ = 0.0;
  double c_ = 0.0;
};

// ---------------------------------------------------------------------------
// Text plumbing shared by manifests, model files and CSVs.
// ---------------------------------------------------------------------------

// Shortest round-trip decimal rendering (17 significant digits).
inline std::string fmt_g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

inline std::uint64_t fnv1a64(const void* data, std::size_t len, std::uint64_t h = 0xcbf29ce484222325ULL) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::uint64_t fnv1a64(const std::string& s) { return fnv1a64(s.data(), s.size()); }

using KvMap = std::map<std::string, std::string>;

std::string trim(const std::string& s);
std::vector<std::string> split(const std::string& s, char sep);
KvMap parse_kv_text(const std::string& text);
KvMap read_kv_file(const std::string& path);
void write_kv_file(const std::string& path, const std::vector<std::pair<std::string, std::string>>& kv);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace dpalign

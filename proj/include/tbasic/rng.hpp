#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace tbasic {

// Stream derivation for independent deterministic substreams (runs, stages).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

// Deterministic generator. std::mt19937_64 output is fixed by the standard,
// and every distribution below is implemented explicitly so that streams are
// bit-identical across compilers and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform on [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  // Uniform integer on [0, n). n must be > 0.
  std::uint64_t below(std::uint64_t n);

  double range(double lo, double hi) { return lo + (hi - lo) * unit(); }

  double normal();

  // Exact Poisson sampling by exponential inter-arrival accumulation.
  std::int64_t poisson(double mean);

 private:
  std::mt19937_64 gen_;
};

template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[rng.below(i)]);
  }
}

// k distinct indices drawn from [0, n), returned sorted ascending.
std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k, Rng& rng);

}  // namespace tbasic

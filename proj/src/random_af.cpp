#include "matrixx/random_af.hpp"

#include <random>
#include <stdexcept>

namespace matrixx {

namespace {

// Draws against a fixed 32-bit threshold instead of a distribution object;
// distribution implementations differ between standard libraries.
class Coin {
 public:
  explicit Coin(std::uint32_t seed) : rng_(seed) {}

  bool flip(double probability) {
    auto threshold =
        static_cast<std::uint64_t>(probability * 4294967296.0);  // p * 2^32
    return static_cast<std::uint64_t>(rng_()) < threshold;
  }

 private:
  std::mt19937 rng_;
};

}  // namespace

ArgumentationFramework random_framework(const RandomAfParams& params) {
  if (params.attack_probability < 0.0 || params.attack_probability > 1.0 ||
      params.self_attack_probability < 0.0 ||
      params.self_attack_probability > 1.0) {
    throw std::invalid_argument("attack probabilities must be within [0,1]");
  }
  std::vector<std::string> names;
  names.reserve(params.n);
  for (std::uint32_t i = 1; i <= params.n; ++i) {
    names.push_back("a" + std::to_string(i));
  }

  Coin coin(params.seed);
  std::vector<std::pair<ArgId, ArgId>> attacks;
  for (ArgId i = 0; i < params.n; ++i) {
    for (ArgId j = 0; j < params.n; ++j) {
      double p = i == j ? params.self_attack_probability
                        : params.attack_probability;
      if (coin.flip(p)) attacks.emplace_back(i, j);
    }
  }
  return ArgumentationFramework(std::move(names), attacks);
}

}  // namespace matrixx

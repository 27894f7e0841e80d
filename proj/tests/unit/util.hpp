#pragma once

#include <random>

#include "twring/twisted_ring.hpp"

namespace twring::testing {

// Integer coefficients in [-b, b] on every basis element.
inline TwElement random_element(const RingPtr& r, std::mt19937_64& rng, int b = 2) {
  std::vector<std::int64_t> c(r->order());
  for (auto& x : c) x = static_cast<std::int64_t>(rng() % (2 * b + 1)) - b;
  return TwElement::from_ints(r, c);
}

}  // namespace twring::testing

// Copyright 2026 The netload Authors. Apache 2.0 License.
#pragma once

#include <cstdint>
#include <stdexcept>

#include "netload/matrix.hpp"
#include "netload/rng.hpp"

namespace netload {

// Inverted dropout: surviving units are scaled by 1/(1-rate) at train time so
// inference needs no rescaling.
struct DropoutSpec {
  double rate = 0.2;
  std::uint64_t rng_seed = 0;

  void validate() const {
    if (rate < 0.1 || rate > 0.3)
      throw std::invalid_argument("dropout rate " + std::to_string(rate) +
                                  " outside supported band [0.1, 0.3]");
  }
};

inline Matrix dropout_mask(int rows, int cols, double rate, Rng& rng) {
  Matrix mask(rows, cols);
  const double keep_scale = 1.0 / (1.0 - rate);
  for (double& v : mask.values()) v = (rng.uniform01() < rate) ? 0.0 : keep_scale;
  return mask;
}

}  // namespace netload

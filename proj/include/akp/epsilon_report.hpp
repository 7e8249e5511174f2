#pragma once

#include <cstddef>
#include <vector>

#include "akp/value.hpp"

namespace akp {

/// epsilon(P) = max_b (mu(P) - mu(d_b P)) / b over b with d_b P != 0,
/// I(P) = the maximizing b (ascending), b(P) = min I(P).
struct EpsilonReport {
  Value epsilon;
  std::vector<std::size_t> maximizers;
  std::size_t b = 0;

  friend bool operator==(const EpsilonReport&, const EpsilonReport&) = default;
};

}  // namespace akp

#pragma once

// Commuting chains: finite sequences of nonscalar matrices in which every
// adjacent pair commutes.

#include <cstddef>
#include <string>
#include <vector>

#include "ccg/matrix.hpp"

namespace ccg {

template <FieldDescriptor F>
using CommutingChain = std::vector<Matrix<F>>;

struct ChainCheck {
  bool ok = true;
  std::size_t first_failure = 0;  // entry index (scalar) or left index of the offending pair
  std::string reason;

  explicit operator bool() const { return ok; }
};

template <class F>
ChainCheck verify_chain(const CommutingChain<F>& chain) {
  for (std::size_t i = 0; i < chain.size(); ++i)
    if (chain[i].is_scalar()) return {false, i, "scalar entry"};
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    if (!commute(chain[i], chain[i + 1])) return {false, i, "adjacent entries do not commute"};
  return {};
}

}  // namespace ccg

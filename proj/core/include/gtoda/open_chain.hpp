#pragma once

#include <vector>

namespace gtoda {

/// Phase point of the open Toda chain
///   H = sum p_k^2 / 2 + sum_{k<n} exp(q_k - q_{k+1}).
struct OpenChainState {
  std::vector<double> q;
  std::vector<double> p;
  double t = 0.0;

  std::size_t size() const { return q.size(); }
};

/// Energy of the open chain.
double open_chain_energy(const OpenChainState& s);

}  // namespace gtoda

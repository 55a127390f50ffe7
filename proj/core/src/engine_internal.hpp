#pragma once

#include <chrono>
#include <vector>

#include "rpq/engine.hpp"

namespace rpq::detail {

class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  explicit Deadline(std::chrono::milliseconds budget);

  bool expired() const { return Clock::now() >= end_; }
  std::chrono::nanoseconds elapsed() const { return Clock::now() - start_; }

 private:
  Clock::time_point start_;
  Clock::time_point end_;
};

// An automaton symbol paired with the graph matrix it traverses.
struct BoundSymbol {
  SparseBoolMatrix transposed;  // (N^a)^T
  const SparseBoolMatrix* graph;
};

// Symbols of `n` whose label is interned in `g`.
std::vector<BoundSymbol> bind(const LabeledGraph& g, const TwoNfa& n);

// OR over symbols of (N^a)^T x X x G^a in the requested association order.
SparseBoolMatrix products(const SparseBoolMatrix& x, const std::vector<BoundSymbol>& symbols,
                          ProductOrder order);

}  // namespace rpq::detail

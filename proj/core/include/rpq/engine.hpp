#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rpq/automaton.hpp"
#include "rpq/graph.hpp"
#include "rpq/regex.hpp"
#include "rpq/sparse_bool.hpp"

namespace rpq {

enum class Algorithm { masked, no_mask, hybrid, plan };
enum class ProductOrder { left, right };
enum class Mode { ssr, sdr };
enum class Status { ok, timeout };

std::string_view to_string(Algorithm a);
std::string_view to_string(Mode m);
std::string_view to_string(Status s);
std::optional<Algorithm> parse_algorithm(std::string_view text);
std::optional<ProductOrder> parse_product_order(std::string_view text);

// Frontier M, visited P and final selector F of one traversal, all over
// |Q| x |V| (F is 1 x |Q|).
struct EvalState {
  SparseBoolMatrix frontier;
  SparseBoolMatrix visited;
  SparseBoolMatrix final_selector;
  std::size_t iterations = 0;
};

struct EngineOptions {
  Algorithm algorithm = Algorithm::hybrid;
  // Hybrid evaluation switches to the masked loop once nnz(P) exceeds this.
  std::size_t switch_threshold = 100;
  // left: ((N^a)^T x M) x G^a, right: (N^a)^T x (M x G^a).
  ProductOrder product_order = ProductOrder::left;
  std::chrono::milliseconds timeout{60'000};
  // Verify frontier/visited disjointness, monotone growth and the |Q||V|
  // iteration bound on every loop; violations throw InvariantViolation.
  bool check_invariants = false;
  // Called after every loop iteration of the traversal evaluators.
  std::function<void(const EvalState&)> on_iteration;
};

struct EvalResult {
  std::vector<Index> reachable;  // sorted vertex indices
  std::size_t iterations = 0;
  std::chrono::nanoseconds elapsed{0};
  Algorithm algorithm = Algorithm::masked;
  Status status = Status::ok;
};

// One traversal step: (OR_a product(a))<¬p> over the symbols a shared by the
// automaton and the graph. Symbols whose label the graph lacks are skipped.
SparseBoolMatrix step_update(const SparseBoolMatrix& m, const SparseBoolMatrix& p,
                             const LabeledGraph& g, const TwoNfa& n, const EngineOptions& opts = {});

// Single-source evaluation with an explicit frontier (masked BFS).
EvalResult eval_ssr_masked(const LabeledGraph& g, const TwoNfa& n, Index source,
                           const EngineOptions& opts = {});

// Single-source evaluation iterating P <- P + step(P) to a fixpoint.
EvalResult eval_ssr_no_mask(const LabeledGraph& g, const TwoNfa& n, Index source,
                            const EngineOptions& opts = {});

// Starts mask-free and switches to the masked loop once nnz(P) exceeds
// opts.switch_threshold.
EvalResult eval_ssr_hybrid(const LabeledGraph& g, const TwoNfa& n, Index source,
                           const EngineOptions& opts = {});

// Dispatches on `algorithm` (plan is not available from an automaton).
EvalResult eval_ssr(const LabeledGraph& g, const TwoNfa& n, Index source, Algorithm algorithm,
                    const EngineOptions& opts = {});

// Single-destination evaluation: single-source over reverse(n) from `target`.
EvalResult eval_sdr(const LabeledGraph& g, const TwoNfa& n, Index target, Algorithm algorithm,
                    const EngineOptions& opts = {});

struct Endpoint {
  Mode mode = Mode::ssr;
  Index vertex = 0;
};

// Plan-based baseline: evaluates the syntax tree bottom-up as matrix
// expressions, propagating a vector from the bound endpoint through the
// outermost concatenation chain.
EvalResult eval_plan(const LabeledGraph& g, const RegexAst& ast, Endpoint endpoint,
                     const EngineOptions& opts = {});

// Pattern parsed and compiled in both directions, ready for repeated runs.
struct PreparedQuery {
  RegexAst ast;
  TwoNfa forward;
  TwoNfa reversed;

  static PreparedQuery from_ast(RegexAst ast);
  static PreparedQuery from_text(std::string_view pattern);
};

// Runs `query` with opts.algorithm in the given mode.
EvalResult evaluate(const LabeledGraph& g, const PreparedQuery& query, Endpoint endpoint,
                    const EngineOptions& opts = {});

}  // namespace rpq

#include "rpq/engine.hpp"

#include <string>

#include "engine_internal.hpp"
#include "rpq/error.hpp"

namespace rpq {

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::masked: return "masked";
    case Algorithm::no_mask: return "no_mask";
    case Algorithm::hybrid: return "hybrid";
    case Algorithm::plan: return "plan";
  }
  return "?";
}

std::string_view to_string(Mode m) { return m == Mode::ssr ? "ssr" : "sdr"; }

std::string_view to_string(Status s) { return s == Status::ok ? "ok" : "timeout"; }

std::optional<Algorithm> parse_algorithm(std::string_view text) {
  if (text == "masked") return Algorithm::masked;
  if (text == "no_mask" || text == "no-mask" || text == "nomask") return Algorithm::no_mask;
  if (text == "hybrid") return Algorithm::hybrid;
  if (text == "plan") return Algorithm::plan;
  return std::nullopt;
}

std::optional<ProductOrder> parse_product_order(std::string_view text) {
  if (text == "left") return ProductOrder::left;
  if (text == "right") return ProductOrder::right;
  return std::nullopt;
}

namespace detail {

Deadline::Deadline(std::chrono::milliseconds budget)
    : start_(Clock::now()), end_(budget.count() > 0 ? start_ + budget : Clock::time_point::max()) {}

std::vector<BoundSymbol> bind(const LabeledGraph& g, const TwoNfa& n) {
  std::vector<BoundSymbol> out;
  for (const auto& [sym, m] : n.transitions) {
    const auto label = g.label_index(sym.label);
    if (!label) continue;
    const SparseBoolMatrix& adj = g.adjacency(*label, sym.inverted);
    if (m.nrows() != n.nstates || m.ncols() != n.nstates) {
      throw DimensionMismatch("transition matrix for " + to_string(sym) + " is not |Q|x|Q|");
    }
    out.push_back({transpose(m), &adj});
  }
  return out;
}

SparseBoolMatrix products(const SparseBoolMatrix& x, const std::vector<BoundSymbol>& symbols,
                          ProductOrder order) {
  std::vector<SparseBoolMatrix> terms;
  terms.reserve(symbols.size());
  for (const auto& s : symbols) {
    SparseBoolMatrix t = order == ProductOrder::left ? bool_matmul(bool_matmul(s.transposed, x), *s.graph)
                                                     : bool_matmul(s.transposed, bool_matmul(x, *s.graph));
    if (!t.empty()) terms.push_back(std::move(t));
  }
  if (terms.empty()) return zero(x.nrows(), x.ncols());
  return or_sum(terms);
}

}  // namespace detail

namespace {

using detail::BoundSymbol;
using detail::Deadline;

void check(bool ok, const char* what) {
  if (!ok) throw InvariantViolation(what);
}

SparseBoolMatrix start_matrix(const TwoNfa& n, Index num_vertices, Index source) {
  std::vector<std::pair<Index, Index>> pairs;
  if (n.starts.nrows() > 0) {
    for (Index q : n.starts.row(0)) pairs.emplace_back(q, source);
  }
  return SparseBoolMatrix::from_pairs(n.nstates, num_vertices, std::move(pairs));
}

void require_vertex(const LabeledGraph& g, Index v) {
  if (v >= g.num_vertices()) {
    throw LookupError("vertex index " + std::to_string(v) + " out of range [0," +
                      std::to_string(g.num_vertices()) + ")");
  }
}

// Shared driver for the three traversal evaluators. `switch_at` is the nnz(P)
// above which the mask-free phase hands over to the masked loop: 0 means
// masked from the start, SIZE_MAX means never switch.
EvalResult traverse(const LabeledGraph& g, const TwoNfa& n, Index source, const EngineOptions& opts,
                    Algorithm tag, std::optional<std::size_t> switch_at) {
  require_vertex(g, source);
  const Deadline deadline(opts.timeout);
  const auto nv = static_cast<Index>(g.num_vertices());
  const std::vector<BoundSymbol> symbols = detail::bind(g, n);
  const std::size_t bound = std::size_t{n.nstates} * nv;

  EvalState state;
  state.frontier = start_matrix(n, nv, source);
  state.visited = state.frontier;
  state.final_selector = n.finals;

  EvalResult result;
  result.algorithm = tag;

  bool masked = !switch_at.has_value();
  while (true) {
    if (deadline.expired()) {
      result.status = Status::timeout;
      break;
    }
    if (masked) {
      if (state.frontier.empty()) break;
      if (opts.check_invariants) {
        check(mask(state.frontier, state.visited) == state.frontier,
              "frontier is not contained in visited at loop head");
      }
      SparseBoolMatrix next = mask_complement(detail::products(state.frontier, symbols, opts.product_order),
                                              state.visited);
      ++state.iterations;
      if (opts.check_invariants) {
        check(mask(next, state.visited).empty(), "new frontier intersects visited");
        check(state.iterations <= bound, "iteration count exceeds |Q||V|");
      }
      const std::size_t before = state.visited.nnz();
      state.visited = or_sum(state.visited, next);
      if (opts.check_invariants && !next.empty()) {
        check(state.visited.nnz() > before, "visited did not grow while frontier is non-empty");
      }
      state.frontier = std::move(next);
    } else {
      SparseBoolMatrix grown = or_sum(state.visited, detail::products(state.visited, symbols, opts.product_order));
      ++state.iterations;
      if (opts.check_invariants) {
        check(mask(state.visited, grown) == state.visited, "visited shrank");
        check(state.iterations <= bound, "iteration count exceeds |Q||V|");
      }
      if (grown.nnz() == state.visited.nnz()) {
        state.frontier = zero(n.nstates, nv);
        if (opts.on_iteration) opts.on_iteration(state);
        break;
      }
      state.frontier = mask_complement(grown, state.visited);
      state.visited = std::move(grown);
      if (state.visited.nnz() > *switch_at) masked = true;
    }
    if (opts.on_iteration) opts.on_iteration(state);
  }

  if (opts.check_invariants && result.status == Status::ok) {
    check(state.frontier.empty(), "loop exited with a non-empty frontier");
  }

  const SparseBoolMatrix answer = bool_matmul(state.final_selector, state.visited);
  if (answer.nrows() > 0) result.reachable.assign(answer.row(0).begin(), answer.row(0).end());
  result.iterations = state.iterations;
  result.elapsed = deadline.elapsed();
  return result;
}

}  // namespace

SparseBoolMatrix step_update(const SparseBoolMatrix& m, const SparseBoolMatrix& p, const LabeledGraph& g,
                             const TwoNfa& n, const EngineOptions& opts) {
  if (m.nrows() != n.nstates || m.ncols() != g.num_vertices()) {
    throw DimensionMismatch("step_update: frontier must be |Q|x|V|");
  }
  return mask_complement(detail::products(m, detail::bind(g, n), opts.product_order), p);
}

EvalResult eval_ssr_masked(const LabeledGraph& g, const TwoNfa& n, Index source, const EngineOptions& opts) {
  return traverse(g, n, source, opts, Algorithm::masked, std::nullopt);
}

EvalResult eval_ssr_no_mask(const LabeledGraph& g, const TwoNfa& n, Index source, const EngineOptions& opts) {
  return traverse(g, n, source, opts, Algorithm::no_mask, SIZE_MAX);
}

EvalResult eval_ssr_hybrid(const LabeledGraph& g, const TwoNfa& n, Index source, const EngineOptions& opts) {
  return traverse(g, n, source, opts, Algorithm::hybrid, opts.switch_threshold);
}

EvalResult eval_ssr(const LabeledGraph& g, const TwoNfa& n, Index source, Algorithm algorithm,
                    const EngineOptions& opts) {
  switch (algorithm) {
    case Algorithm::masked: return eval_ssr_masked(g, n, source, opts);
    case Algorithm::no_mask: return eval_ssr_no_mask(g, n, source, opts);
    case Algorithm::hybrid: return eval_ssr_hybrid(g, n, source, opts);
    case Algorithm::plan: break;
  }
  throw Error("plan evaluation needs the pattern syntax tree; use eval_plan");
}

EvalResult eval_sdr(const LabeledGraph& g, const TwoNfa& n, Index target, Algorithm algorithm,
                    const EngineOptions& opts) {
  return eval_ssr(g, reverse(n), target, algorithm, opts);
}

PreparedQuery PreparedQuery::from_ast(RegexAst ast) {
  PreparedQuery q;
  q.forward = compile(ast);
  q.reversed = reverse(q.forward);
  q.ast = std::move(ast);
  return q;
}

PreparedQuery PreparedQuery::from_text(std::string_view pattern) { return from_ast(parse_query(pattern)); }

EvalResult evaluate(const LabeledGraph& g, const PreparedQuery& query, Endpoint endpoint,
                    const EngineOptions& opts) {
  if (opts.algorithm == Algorithm::plan) return eval_plan(g, query.ast, endpoint, opts);
  const TwoNfa& n = endpoint.mode == Mode::ssr ? query.forward : query.reversed;
  return eval_ssr(g, n, endpoint.vertex, opts.algorithm, opts);
}

}  // namespace rpq

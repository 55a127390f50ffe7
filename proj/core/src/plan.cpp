#include <optional>

#include "engine_internal.hpp"
#include "rpq/engine.hpp"
#include "rpq/error.hpp"

namespace rpq {
namespace {

struct TimedOut {};

// Matrix attached to a plan node: either borrowed from the graph or owned.
class NodeMatrix {
 public:
  static NodeMatrix borrow(const SparseBoolMatrix& m) {
    NodeMatrix out;
    out.borrowed_ = &m;
    return out;
  }
  static NodeMatrix own(SparseBoolMatrix m) {
    NodeMatrix out;
    out.owned_ = std::move(m);
    return out;
  }

  const SparseBoolMatrix& get() const { return borrowed_ != nullptr ? *borrowed_ : *owned_; }

 private:
  const SparseBoolMatrix* borrowed_ = nullptr;
  std::optional<SparseBoolMatrix> owned_;
};

class PlanEvaluator {
 public:
  PlanEvaluator(const LabeledGraph& g, const detail::Deadline& deadline)
      : g_(g), n_(static_cast<Index>(g.num_vertices())), deadline_(deadline) {}

  std::size_t steps() const { return steps_; }

  SparseBoolMatrix run(const RegexAst& ast, Index source) {
    SparseBoolMatrix v = SparseBoolMatrix::from_pairs(1, n_, {{0, source}});
    std::vector<const RegexAst*> chain;
    flatten_chain(ast, chain);
    for (const RegexAst* item : chain) {
      if (v.empty()) break;
      v = propagate(*item, v);
    }
    return v;
  }

 private:
  static void flatten_chain(const RegexAst& node, std::vector<const RegexAst*>& out) {
    if (node.kind == RegexKind::Concat) {
      for (const auto& c : node.children) flatten_chain(c, out);
    } else {
      out.push_back(&node);
    }
  }

  void tick() {
    ++steps_;
    if (deadline_.expired()) throw TimedOut{};
  }

  // Pushes a row vector through one element of the endpoint-bound chain.
  // Closures at this level are taken over the vector, never materialised.
  SparseBoolMatrix propagate(const RegexAst& node, const SparseBoolMatrix& v) {
    switch (node.kind) {
      case RegexKind::Star:
        return vector_closure(v, matrix_of(node.children.front()).get());
      case RegexKind::Plus: {
        const NodeMatrix body = matrix_of(node.children.front());
        tick();
        return vector_closure(bool_matmul(v, body.get()), body.get());
      }
      default:
        tick();
        return bool_matmul(v, matrix_of(node).get());
    }
  }

  // Smallest superset of v closed under right-multiplication by m.
  SparseBoolMatrix vector_closure(SparseBoolMatrix acc, const SparseBoolMatrix& m) {
    for (;;) {
      tick();
      SparseBoolMatrix next = or_sum(acc, bool_matmul(acc, m));
      if (next.nnz() == acc.nnz()) return acc;
      acc = std::move(next);
    }
  }

  // Transitive closure R+ by accumulating R <- R + R x R until nnz settles.
  SparseBoolMatrix closure(SparseBoolMatrix r) {
    for (;;) {
      tick();
      SparseBoolMatrix next = or_sum(r, bool_matmul(r, r));
      if (next.nnz() == r.nnz()) return r;
      r = std::move(next);
    }
  }

  NodeMatrix matrix_of(const RegexAst& node) {
    switch (node.kind) {
      case RegexKind::Label: {
        if (auto label = g_.label_index(node.symbol.label)) {
          return NodeMatrix::borrow(g_.adjacency(*label, node.symbol.inverted));
        }
        return NodeMatrix::own(zero(n_, n_));
      }
      case RegexKind::Concat: {
        NodeMatrix acc = matrix_of(node.children.front());
        for (std::size_t i = 1; i < node.children.size(); ++i) {
          tick();
          acc = NodeMatrix::own(bool_matmul(acc.get(), matrix_of(node.children[i]).get()));
        }
        return acc;
      }
      case RegexKind::Alt: {
        std::vector<SparseBoolMatrix> terms;
        for (const auto& c : node.children) terms.push_back(matrix_of(c).get());
        tick();
        return NodeMatrix::own(or_sum(terms));
      }
      case RegexKind::Star:
        return NodeMatrix::own(or_sum(closure(matrix_of(node.children.front()).get()), SparseBoolMatrix::identity(n_)));
      case RegexKind::Plus:
        return NodeMatrix::own(closure(matrix_of(node.children.front()).get()));
      case RegexKind::Opt:
        tick();
        return NodeMatrix::own(or_sum(matrix_of(node.children.front()).get(), SparseBoolMatrix::identity(n_)));
    }
    throw Error("unknown regex node");
  }

  const LabeledGraph& g_;
  Index n_;
  const detail::Deadline& deadline_;
  std::size_t steps_ = 0;
};

}  // namespace

EvalResult eval_plan(const LabeledGraph& g, const RegexAst& ast, Endpoint endpoint, const EngineOptions& opts) {
  if (endpoint.vertex >= g.num_vertices()) {
    throw LookupError("vertex index " + std::to_string(endpoint.vertex) + " out of range");
  }
  const detail::Deadline deadline(opts.timeout);
  // A destination-bound pattern is the source-bound evaluation of its reverse.
  const RegexAst reversed = endpoint.mode == Mode::sdr ? reverse(ast) : RegexAst{};
  const RegexAst& plan = endpoint.mode == Mode::sdr ? reversed : ast;

  PlanEvaluator evaluator(g, deadline);
  EvalResult result;
  result.algorithm = Algorithm::plan;
  try {
    const SparseBoolMatrix v = evaluator.run(plan, endpoint.vertex);
    result.reachable.assign(v.row(0).begin(), v.row(0).end());
  } catch (const TimedOut&) {
    result.status = Status::timeout;
  }
  result.iterations = evaluator.steps();
  result.elapsed = deadline.elapsed();
  return result;
}

}  // namespace rpq

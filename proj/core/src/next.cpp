#include "heredenum/next.hpp"

#include <limits>
#include <unordered_set>

#include "heredenum/errors.hpp"
#include "heredenum/extend.hpp"

namespace heredenum {

namespace {

constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kMax / a) return kMax;
  return a * b;
}

// Runs the solver under a child budget; nullopt when it was aborted.
std::optional<std::vector<VertexSet>> run_bounded(const TotalSolver& solver, const Graph& G,
                                                  const VertexSet& W, std::uint64_t budget,
                                                  StepCounter& steps) {
  StepCounter child(budget, &steps);
  try {
    return solver(G, W, child);
  } catch (const BudgetExhausted&) {
    if (child.steps() <= child.limit()) throw;  // an outer budget ran out
    return std::nullopt;
  }
}

bool inside_known(const VertexSet& s, const std::vector<VertexSet>& known) {
  for (const VertexSet& k : known)
    if (s.is_subset_of(k)) return true;
  return false;
}

}  // namespace

BudgetFn default_budget() {
  return [](std::size_t n, std::size_t N) {
    std::uint64_t a = n + 1;
    std::uint64_t b = N + 1;
    return sat_mul(256, sat_mul(sat_mul(a * a, a * a), sat_mul(b, b)));
  };
}

NextResult next_solution(const ClassSpec& spec, Variant variant, const Graph& G,
                         const std::vector<VertexSet>& known, const TotalSolver& solver,
                         const NextOptions& options, StepCounter& steps) {
  std::unordered_set<VertexSet> known_set(known.begin(), known.end());
  auto fresh_in = [&](const std::vector<VertexSet>& sols) -> std::optional<VertexSet> {
    for (const VertexSet& s : sols)
      if (!known_set.count(s)) return s;
    return std::nullopt;
  };
  std::size_t n = G.order();
  std::size_t N = known.size();
  VertexSet V = G.vertices();

  // Steps 1-2.
  if (auto sols = run_bounded(solver, G, V, options.budget(n, N + 1), steps))
    return {fresh_in(*sols), false};

  // Steps 3-4.
  std::uint64_t peel_budget = variant == Variant::Connected
                                  ? options.budget(n, sat_mul(n, N) + 1)
                                  : options.budget(n, N + 1);
  VertexSet cur = V;
  for (Vertex v = 0; v < n; ++v) {
    VertexSet sub = cur.without(v);
    if (auto sols = run_bounded(solver, G, sub, peel_budget, steps)) {
      for (const VertexSet& s : *sols)
        if (!inside_known(s, known)) return {extend(spec, variant, G, s, V, steps), false};
    } else {
      cur = std::move(sub);
    }
  }

  // Steps 5-7.
  for (const VertexSet& s : solver(G, cur, steps))
    if (!inside_known(s, known)) return {extend(spec, variant, G, s, V, steps), false};

  if (options.strict)
    throw ContractViolation("total solver exceeded its step budget: no fresh sub-solution");
  return {fresh_in(solver(G, V, steps)), true};
}

namespace {

class IncrementalEnumerator : public Enumerator {
 public:
  IncrementalEnumerator(ClassSpec spec, Variant variant, std::shared_ptr<const Graph> G,
                        TotalSolver solver, NextOptions options, std::optional<std::size_t> limit)
      : Enumerator(limit),
        spec_(std::move(spec)),
        variant_(variant),
        G_(std::move(G)),
        solver_(std::move(solver)),
        options_(std::move(options)) {}

 protected:
  std::optional<VertexSet> produce() override {
    NextResult r = next_solution(spec_, variant_, *G_, known_, solver_, options_, counter());
    if (r.budget_miss) ++stats_.budget_misses;
    if (r.solution) known_.push_back(*r.solution);
    return r.solution;
  }

 private:
  ClassSpec spec_;
  Variant variant_;
  std::shared_ptr<const Graph> G_;
  TotalSolver solver_;
  NextOptions options_;
  std::vector<VertexSet> known_;
};

}  // namespace

std::unique_ptr<Enumerator> incremental_enumerator(const ClassSpec& spec, Variant variant,
                                                   std::shared_ptr<const Graph> G,
                                                   TotalSolver solver, NextOptions options,
                                                   std::optional<std::size_t> limit) {
  return std::make_unique<IncrementalEnumerator>(spec, variant, std::move(G), std::move(solver),
                                                 std::move(options), limit);
}

}  // namespace heredenum

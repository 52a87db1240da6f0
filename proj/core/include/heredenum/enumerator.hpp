#pragma once

#include <chrono>
#include <cstdint>
#include <deque>
#include <functional>
#include <memory>
#include <optional>
#include <unordered_set>
#include <vector>

#include "heredenum/class_spec.hpp"
#include "heredenum/graph.hpp"
#include "heredenum/steps.hpp"

namespace heredenum {

struct EnumStats {
  std::size_t emitted = 0;
  std::uint64_t steps = 0;
  std::uint64_t max_delay = 0;  // in steps, including the tail after the last emission
  double mean_delay = 0.0;      // steps per emission gap
  double wall_seconds = 0.0;
  std::size_t budget_misses = 0;  // incremental mode: total-solver budget contract misses
};

// Pull-based stream of distinct solutions.
class Enumerator {
 public:
  explicit Enumerator(std::optional<std::size_t> limit = std::nullopt);
  virtual ~Enumerator() = default;
  Enumerator(const Enumerator&) = delete;
  Enumerator& operator=(const Enumerator&) = delete;

  std::optional<VertexSet> next();
  std::vector<VertexSet> drain();

  const EnumStats& stats() const { return stats_; }
  StepCounter& counter() { return counter_; }

 protected:
  virtual std::optional<VertexSet> produce() = 0;
  EnumStats stats_;

 private:
  StepCounter counter_;
  std::optional<std::size_t> limit_;
  bool done_ = false;
  std::uint64_t last_mark_ = 0;
  std::uint64_t gap_sum_ = 0;
  std::size_t gaps_ = 0;
  std::chrono::steady_clock::time_point start_;
};

class ListEnumerator : public Enumerator {
 public:
  ListEnumerator(std::vector<VertexSet> items, std::optional<std::size_t> limit = std::nullopt);

 protected:
  std::optional<VertexSet> produce() override;

 private:
  std::vector<VertexSet> items_;
  std::size_t pos_ = 0;
};

// Successor function of a solution map over G[W]: appends succ(S, v) to out.
using SuccessorFn = std::function<void(const Graph& G, const VertexSet& W, const VertexSet& S,
                                       Vertex v, StepCounter& steps, std::vector<VertexSet>& out)>;

// Checks that a set is a solution; used to catch contract violations.
using SolutionCheck = std::function<bool(const VertexSet&)>;

// Breadth-first traversal of a solution map. A solution is emitted when it
// is popped and expanded lazily on the following call, so each call costs at
// most one expansion. Connected maps scan v in N(S) ∩ W; general maps scan
// W \ S.
class Traversal {
 public:
  Traversal(const Graph& G, VertexSet W, Variant scan, SuccessorFn succ,
            std::vector<VertexSet> seeds, SolutionCheck check = nullptr);

  std::optional<VertexSet> next(StepCounter& steps);
  std::vector<VertexSet> run(StepCounter& steps);

 private:
  void push(const VertexSet& s);
  void expand(const VertexSet& S, StepCounter& steps);

  const Graph& G_;
  VertexSet W_;
  Variant scan_;
  SuccessorFn succ_;
  SolutionCheck check_;
  std::deque<VertexSet> frontier_;
  std::unordered_set<VertexSet> seen_;
  std::optional<VertexSet> pending_;
  std::vector<VertexSet> scratch_;
};

class TraversalEnumerator : public Enumerator {
 public:
  TraversalEnumerator(std::shared_ptr<const Graph> G, VertexSet W, Variant scan, SuccessorFn succ,
                      std::function<std::vector<VertexSet>(StepCounter&)> seeds,
                      std::optional<std::size_t> limit = std::nullopt,
                      SolutionCheck check = nullptr);

 protected:
  std::optional<VertexSet> produce() override;

 private:
  std::shared_ptr<const Graph> G_;
  VertexSet W_;
  Variant scan_;
  SuccessorFn succ_;
  SolutionCheck check_;
  std::function<std::vector<VertexSet>(StepCounter&)> seeds_;
  std::unique_ptr<Traversal> traversal_;
};

// Applies `map` to every solution of `inner`; nullopt results are dropped.
class MappedEnumerator : public Enumerator {
 public:
  MappedEnumerator(std::unique_ptr<Enumerator> inner,
                   std::function<std::optional<VertexSet>(const VertexSet&)> map,
                   std::optional<std::size_t> limit = std::nullopt);

 protected:
  std::optional<VertexSet> produce() override;

 private:
  std::unique_ptr<Enumerator> inner_;
  std::function<std::optional<VertexSet>(const VertexSet&)> map_;
  std::uint64_t inner_seen_ = 0;
};

}  // namespace heredenum

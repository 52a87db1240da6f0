#include "heredenum/enumerator.hpp"

#include <algorithm>

#include "heredenum/errors.hpp"

namespace heredenum {

Enumerator::Enumerator(std::optional<std::size_t> limit)
    : limit_(limit), start_(std::chrono::steady_clock::now()) {}

std::optional<VertexSet> Enumerator::next() {
  if (done_) return std::nullopt;
  if (limit_ && stats_.emitted >= *limit_) {
    done_ = true;
    return std::nullopt;
  }
  std::optional<VertexSet> s = produce();
  std::uint64_t now = counter_.steps();
  std::uint64_t gap = now - last_mark_;
  last_mark_ = now;
  stats_.max_delay = std::max(stats_.max_delay, gap);
  stats_.steps = now;
  stats_.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  if (!s) {
    done_ = true;
    return std::nullopt;
  }
  ++stats_.emitted;
  gap_sum_ += gap;
  ++gaps_;
  stats_.mean_delay = static_cast<double>(gap_sum_) / static_cast<double>(gaps_);
  return s;
}

std::vector<VertexSet> Enumerator::drain() {
  std::vector<VertexSet> out;
  while (auto s = next()) out.push_back(std::move(*s));
  return out;
}

ListEnumerator::ListEnumerator(std::vector<VertexSet> items, std::optional<std::size_t> limit)
    : Enumerator(limit), items_(std::move(items)) {}

std::optional<VertexSet> ListEnumerator::produce() {
  if (pos_ >= items_.size()) return std::nullopt;
  return items_[pos_++];
}

Traversal::Traversal(const Graph& G, VertexSet W, Variant scan, SuccessorFn succ,
                     std::vector<VertexSet> seeds, SolutionCheck check)
    : G_(G), W_(std::move(W)), scan_(scan), succ_(std::move(succ)), check_(std::move(check)) {
  for (const VertexSet& s : seeds) push(s);
}

void Traversal::push(const VertexSet& s) {
  if (seen_.count(s)) return;
  if (check_ && !check_(s))
    throw ContractViolation("successor function produced a non-solution: " + s.to_string());
  seen_.insert(s);
  frontier_.push_back(s);
}

void Traversal::expand(const VertexSet& S, StepCounter& steps) {
  VertexSet scan = scan_ == Variant::Connected ? (G_.neighborhood(S) & W_) : (W_ - S);
  for (Vertex v : scan) {
    steps.tick();
    scratch_.clear();
    succ_(G_, W_, S, v, steps, scratch_);
    for (const VertexSet& s : scratch_) push(s);
  }
}

std::optional<VertexSet> Traversal::next(StepCounter& steps) {
  if (pending_) {
    VertexSet S = std::move(*pending_);
    pending_.reset();
    expand(S, steps);
  }
  if (frontier_.empty()) return std::nullopt;
  VertexSet s = std::move(frontier_.front());
  frontier_.pop_front();
  pending_ = s;
  return s;
}

std::vector<VertexSet> Traversal::run(StepCounter& steps) {
  std::vector<VertexSet> out;
  while (auto s = next(steps)) out.push_back(std::move(*s));
  return out;
}

TraversalEnumerator::TraversalEnumerator(std::shared_ptr<const Graph> G, VertexSet W, Variant scan,
                                         SuccessorFn succ,
                                         std::function<std::vector<VertexSet>(StepCounter&)> seeds,
                                         std::optional<std::size_t> limit, SolutionCheck check)
    : Enumerator(limit),
      G_(std::move(G)),
      W_(std::move(W)),
      scan_(scan),
      succ_(std::move(succ)),
      check_(std::move(check)),
      seeds_(std::move(seeds)) {}

std::optional<VertexSet> TraversalEnumerator::produce() {
  if (!traversal_)
    traversal_ = std::make_unique<Traversal>(*G_, W_, scan_, succ_, seeds_(counter()), check_);
  return traversal_->next(counter());
}

MappedEnumerator::MappedEnumerator(std::unique_ptr<Enumerator> inner,
                                   std::function<std::optional<VertexSet>(const VertexSet&)> map,
                                   std::optional<std::size_t> limit)
    : Enumerator(limit), inner_(std::move(inner)), map_(std::move(map)) {}

std::optional<VertexSet> MappedEnumerator::produce() {
  while (true) {
    std::optional<VertexSet> s = inner_->next();
    std::uint64_t now = inner_->counter().steps();
    counter().tick(now - inner_seen_);
    inner_seen_ = now;
    stats_.budget_misses = inner_->stats().budget_misses;
    if (!s) return std::nullopt;
    if (auto m = map_(*s)) return m;
  }
}

}  // namespace heredenum

#include "heredenum/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

#include "heredenum/errors.hpp"
#include "heredenum/recognition.hpp"

namespace heredenum {

std::vector<VertexSet> brute_force_enumerate(const ClassSpec& spec, Variant variant,
                                             const Graph& G, const VertexSet& W,
                                             std::size_t max_order) {
  std::vector<Vertex> ids = W.to_vector();
  std::size_t k = ids.size();
  if (k > max_order)
    throw UnsupportedError("oracle refuses " + std::to_string(k) + " vertices (bound " +
                           std::to_string(max_order) + ")");
  std::vector<std::uint32_t> local_adj(k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (G.adjacent(ids[i], ids[j])) local_adj[i] |= std::uint32_t{1} << j;

  auto to_set = [&](std::uint32_t mask) {
    VertexSet s(G.order());
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1U) s.insert(ids[i]);
    return s;
  };
  auto connected = [&](std::uint32_t mask) {
    if (mask == 0) return false;
    std::uint32_t seen = mask & (~mask + 1);
    std::uint32_t frontier = seen;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f; f &= f - 1)
        next |= local_adj[static_cast<std::size_t>(__builtin_ctz(f))];
      next &= mask & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen == mask;
  };

  std::size_t total = std::size_t{1} << k;
  std::vector<bool> kept(total, false);
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    if (variant == Variant::Connected && !connected(mask)) continue;
    kept[mask] = in_class(spec, G, to_set(mask));
  }
  // Inclusion among kept sets: a kept set has a kept proper superset iff it
  // has one with a single extra vertex (adjacent to it, when connected).
  std::vector<VertexSet> out;
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    if (!kept[mask]) continue;
    std::uint32_t reach = 0;
    if (variant == Variant::Connected) {
      for (std::uint32_t f = mask; f; f &= f - 1)
        reach |= local_adj[static_cast<std::size_t>(__builtin_ctz(f))];
    } else {
      reach = static_cast<std::uint32_t>(total - 1);
    }
    reach &= ~mask & static_cast<std::uint32_t>(total - 1);
    bool maximal = true;
    for (std::uint32_t r = reach; r; r &= r - 1) {
      if (kept[mask | (r & (~r + 1))]) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(to_set(mask));
  }
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

std::vector<VertexSet> brute_force_enumerate(const ClassSpec& spec, Variant variant,
                                             const Graph& G, std::size_t max_order) {
  return brute_force_enumerate(spec, variant, G, G.vertices(), max_order);
}

SolutionMapReport solution_map_diagnostics(const SuccessorFn& succ, const ClassSpec& spec,
                                           Variant variant, const Graph& G) {
  std::vector<VertexSet> nodes = brute_force_enumerate(spec, variant, G);
  SolutionMapReport report;
  report.node_count = nodes.size();
  std::unordered_map<VertexSet, std::size_t> index;
  for (std::size_t i = 0; i < nodes.size(); ++i) index.emplace(nodes[i], i);

  std::vector<std::vector<std::size_t>> out(nodes.size()), in(nodes.size());
  VertexSet W = G.vertices();
  StepCounter steps;
  std::vector<VertexSet> batch;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const VertexSet& S = nodes[i];
    VertexSet scan = variant == Variant::Connected ? G.neighborhood(S) : W - S;
    for (Vertex v : scan) {
      batch.clear();
      succ(G, W, S, v, steps, batch);
      for (const VertexSet& T : batch) {
        auto it = index.find(T);
        if (it == index.end()) {
          if (report.sound) report.unsound_witness = T;
          report.sound = false;
          continue;
        }
        out[i].push_back(it->second);
        ++report.arc_count;
      }
    }
    std::sort(out[i].begin(), out[i].end());
    out[i].erase(std::unique(out[i].begin(), out[i].end()), out[i].end());
    report.max_out_degree = std::max(report.max_out_degree, out[i].size());
    for (std::size_t j : out[i]) in[j].push_back(i);
  }

  // Kosaraju: finishing order on the graph, then components on the reverse.
  std::size_t m = nodes.size();
  std::vector<std::size_t> order;
  std::vector<bool> seen(m, false);
  for (std::size_t s = 0; s < m; ++s) {
    if (seen[s]) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{s, 0}};
    seen[s] = true;
    while (!stack.empty()) {
      auto& [x, pos] = stack.back();
      if (pos < out[x].size()) {
        std::size_t y = out[x][pos++];
        if (!seen[y]) {
          seen[y] = true;
          stack.emplace_back(y, 0);
        }
      } else {
        order.push_back(x);
        stack.pop_back();
      }
    }
  }
  std::vector<std::size_t> comp(m, m);
  std::size_t count = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (comp[*it] != m) continue;
    std::vector<std::size_t> stack{*it};
    comp[*it] = count;
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t y : in[x])
        if (comp[y] == m) {
          comp[y] = count;
          stack.push_back(y);
        }
    }
    ++count;
  }
  report.condensation_size = count;
  report.strongly_connected = count <= 1;
  return report;
}

}  // namespace heredenum

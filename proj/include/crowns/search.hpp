#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <future>
#include <mutex>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>
#include <vector>

#include "crowns/crown.hpp"
#include "crowns/errors.hpp"
#include "crowns/graph.hpp"
#include "crowns/rational.hpp"

namespace crowns {

// Closed-form lower bound 6*floor((n-3)/4) + eps with eps depending on
// (n-3) mod 4: 0 for residues 0 and 1, then 1, then 3.
struct LowerBoundValue {
  int n = 0;
  int epsilon = 0;
  long value = 0;
};

inline LowerBoundValue lower_bound_value(int n) {
  if (n < 3) throw std::domain_error("lower bound needs n >= 3");
  static constexpr int eps_by_residue[4] = {0, 0, 1, 3};
  LowerBoundValue out;
  out.n = n;
  out.epsilon = eps_by_residue[(n - 3) % 4];
  out.value = 6L * ((n - 3) / 4) + out.epsilon;
  return out;
}

// 3(n-3)/2; coincides with the closed-form lower bound exactly when
// n == 3 (mod 4).
inline Rational corollary_bound(int n) {
  if (n < 3) throw std::domain_error("corollary bound needs n >= 3");
  return Rational(3L * (n - 3), 2);
}

// Seeded incremental generator: sample triples uniformly, keep one when it
// preserves linearity and creates no crown, stop at target_edges (negative
// means unbounded) or after kGeneratorRejectionBudget consecutive
// rejections. Output is always valid and crown-free.
inline constexpr int kGeneratorRejectionBudget = 500;

inline LinearThreeGraph random_crown_free(int n, std::uint64_t seed, int target_edges = -1) {
  if (n < 3) throw std::domain_error("generator needs n >= 3");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<Edge> edges;
  std::set<Edge> edge_set;
  std::set<std::pair<int, int>> pairs_used;
  auto edge_pairs = [](const Edge& f) {
    return std::array<std::pair<int, int>, 3>{
        {{f[0], f[1]}, {f[0], f[2]}, {f[1], f[2]}}};
  };
  int rejections = 0;
  while ((target_edges < 0 || static_cast<int>(edges.size()) < target_edges) &&
         rejections < kGeneratorRejectionBudget) {
    const int a = pick(rng), b = pick(rng), c = pick(rng);
    if (a == b || b == c || a == c) {
      ++rejections;
      continue;
    }
    const Edge f = make_edge(a, b, c);
    bool clash = edge_set.count(f) > 0;
    for (const auto& p : edge_pairs(f)) clash = clash || pairs_used.count(p) > 0;
    if (clash) {
      ++rejections;
      continue;
    }
    edges.push_back(f);
    if (find_crown_exhaustive(LinearThreeGraph::build(n, edges))) {
      edges.pop_back();
      ++rejections;
      continue;
    }
    edge_set.insert(f);
    for (const auto& p : edge_pairs(f)) pairs_used.insert(p);
    rejections = 0;
  }
  return LinearThreeGraph::build(n, edges);
}

// Lexicographic-minimality test over vertex relabelings. A sorted edge
// list is canonical iff no permutation of [0,n) maps it to a strictly
// smaller sorted list. Works position by position: once the image agrees
// with the list up to position k, finding any remaining edge whose image
// can be pushed below list[k] settles the question, because strictly
// increasing edge lists make every such completion smaller overall.
class CanonicalChecker {
 public:
  explicit CanonicalChecker(int n)
      : n_(n), label_of_(static_cast<std::size_t>(n), -1),
        label_used_(static_cast<std::size_t>(n), false) {}

  bool is_canonical(const std::vector<Edge>& sorted_edges) {
    edges_ = &sorted_edges;
    edge_used_.assign(sorted_edges.size(), false);
    std::fill(label_of_.begin(), label_of_.end(), -1);
    std::fill(label_used_.begin(), label_used_.end(), false);
    return !exists_smaller(0);
  }

 private:
  bool exists_smaller(std::size_t pos) {
    if (pos == edges_->size()) return false;
    const Edge& target = (*edges_)[pos];
    for (std::size_t j = 0; j < edges_->size(); ++j) {
      if (edge_used_[j]) continue;
      const Edge& f = (*edges_)[j];
      const Edge min_img = minimal_image(f);
      if (min_img < target) return true;
      if (min_img > target) continue;
      static constexpr std::array<std::array<int, 3>, 6> kPerms = {
          {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
      for (const auto& perm : kPerms) {
        std::array<int, 3> newly_assigned{-1, -1, -1};
        bool ok = true;
        for (int k = 0; k < 3 && ok; ++k) {
          const int v = f[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])];
          const int val = target[static_cast<std::size_t>(k)];
          if (label_of_[static_cast<std::size_t>(v)] >= 0) {
            ok = label_of_[static_cast<std::size_t>(v)] == val;
          } else if (label_used_[static_cast<std::size_t>(val)]) {
            ok = false;
          } else {
            label_of_[static_cast<std::size_t>(v)] = val;
            label_used_[static_cast<std::size_t>(val)] = true;
            newly_assigned[static_cast<std::size_t>(k)] = v;
          }
        }
        if (ok) {
          edge_used_[j] = true;
          const bool found = exists_smaller(pos + 1);
          edge_used_[j] = false;
          if (found) {
            undo(newly_assigned);
            return true;
          }
        }
        undo(newly_assigned);
      }
    }
    return false;
  }

  void undo(const std::array<int, 3>& newly_assigned) {
    for (int v : newly_assigned) {
      if (v < 0) continue;
      label_used_[static_cast<std::size_t>(label_of_[static_cast<std::size_t>(v)])] = false;
      label_of_[static_cast<std::size_t>(v)] = -1;
    }
  }

  // Smallest sorted image f can take under any extension of the current
  // partial relabeling: keep fixed labels, give free slots the smallest
  // unused labels.
  Edge minimal_image(const Edge& f) const {
    std::array<int, 3> img{};
    int count = 0, free_slots = 0;
    for (int v : f) {
      if (label_of_[static_cast<std::size_t>(v)] >= 0)
        img[static_cast<std::size_t>(count++)] = label_of_[static_cast<std::size_t>(v)];
      else
        ++free_slots;
    }
    for (int label = 0; free_slots > 0 && label < n_; ++label) {
      if (!label_used_[static_cast<std::size_t>(label)]) {
        img[static_cast<std::size_t>(count++)] = label;
        --free_slots;
      }
    }
    std::sort(img.begin(), img.end());
    return img;
  }

  int n_;
  const std::vector<Edge>* edges_ = nullptr;
  std::vector<int> label_of_;
  std::vector<bool> label_used_;
  std::vector<bool> edge_used_;
};

inline bool is_canonical_edge_list(int n, std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  return CanonicalChecker(n).is_canonical(edges);
}

struct SearchResult {
  int n = 0;
  int best_count = 0;
  LinearThreeGraph witness;
  bool exhaustive = false;
  std::uint64_t nodes_explored = 0;
  double wall_time_seconds = 0.0;
  std::uint64_t seed = 0;
  bool single_threaded = true;
};

namespace detail {

inline std::vector<Edge> all_sorted_triples(int n) {
  std::vector<Edge> triples;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) triples.push_back(Edge{a, b, c});
  return triples;
}

// Backtracking state for the canonical-prefix search. Extensions must be
// lexicographically above the last edge, keep the graph linear, complete
// no crown, and leave the prefix canonical.
struct MaxSearch {
  int n;
  const std::vector<Edge>& triples;
  CanonicalChecker checker;
  std::vector<Edge> edges;
  std::vector<std::vector<int>> incident;
  std::vector<bool> pair_used;
  int pairs_in_use = 0;

  bool use_deadline = false;
  std::chrono::steady_clock::time_point deadline{};
  bool timed_out = false;
  std::uint64_t nodes = 0;

  int best = 0;
  std::vector<Edge> best_edges;
  std::atomic<int>* shared_best = nullptr;

  MaxSearch(int n_, const std::vector<Edge>& triples_)
      : n(n_), triples(triples_), checker(n_),
        incident(static_cast<std::size_t>(n_)),
        pair_used(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), false) {}

  std::size_t pair_id(int a, int b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b);
  }

  bool pairs_free(const Edge& f) const {
    return !pair_used[pair_id(f[0], f[1])] && !pair_used[pair_id(f[0], f[2])] &&
           !pair_used[pair_id(f[1], f[2])];
  }

  void push(const Edge& f) {
    const int index = static_cast<int>(edges.size());
    edges.push_back(f);
    for (int v : f) incident[static_cast<std::size_t>(v)].push_back(index);
    pair_used[pair_id(f[0], f[1])] = pair_used[pair_id(f[0], f[2])] =
        pair_used[pair_id(f[1], f[2])] = true;
    pairs_in_use += 3;
  }

  void pop() {
    const Edge f = edges.back();
    edges.pop_back();
    for (int v : f) incident[static_cast<std::size_t>(v)].pop_back();
    pair_used[pair_id(f[0], f[1])] = pair_used[pair_id(f[0], f[2])] =
        pair_used[pair_id(f[1], f[2])] = false;
    pairs_in_use -= 3;
  }

  // Would adding f complete a crown? The prefix is crown-free, so any new
  // crown contains f, either as the central edge or as a pendant.
  bool creates_crown(const Edge& f) const {
    // f central: one pendant per vertex of f, pairwise disjoint.
    for (int i0 : incident[static_cast<std::size_t>(f[0])]) {
      const Edge& p0 = edges[static_cast<std::size_t>(i0)];
      for (int i1 : incident[static_cast<std::size_t>(f[1])]) {
        const Edge& p1 = edges[static_cast<std::size_t>(i1)];
        if (!edges_disjoint(p0, p1)) continue;
        for (int i2 : incident[static_cast<std::size_t>(f[2])]) {
          const Edge& p2 = edges[static_cast<std::size_t>(i2)];
          if (edges_disjoint(p0, p2) && edges_disjoint(p1, p2)) return true;
        }
      }
    }
    // f pendant: central is an existing edge meeting f in one vertex; the
    // other two pendants hang off the central's other vertices.
    for (int v : f) {
      for (int ci : incident[static_cast<std::size_t>(v)]) {
        const Edge& central = edges[static_cast<std::size_t>(ci)];
        std::array<int, 2> others{};
        int count = 0;
        for (int w : central)
          if (w != v) others[static_cast<std::size_t>(count++)] = w;
        for (int i1 : incident[static_cast<std::size_t>(others[0])]) {
          if (i1 == ci) continue;
          const Edge& p1 = edges[static_cast<std::size_t>(i1)];
          if (!edges_disjoint(p1, f)) continue;
          for (int i2 : incident[static_cast<std::size_t>(others[1])]) {
            if (i2 == ci) continue;
            const Edge& p2 = edges[static_cast<std::size_t>(i2)];
            if (edges_disjoint(p2, f) && edges_disjoint(p2, p1)) return true;
          }
        }
      }
    }
    return false;
  }

  int upper_bound() const {
    const int free_pairs = n * (n - 1) / 2 - pairs_in_use;
    return static_cast<int>(edges.size()) + free_pairs / 3;
  }

  int current_best() const {
    if (shared_best) return std::max(best, shared_best->load(std::memory_order_relaxed));
    return best;
  }

  void record_incumbent() {
    if (static_cast<int>(edges.size()) > best) {
      best = static_cast<int>(edges.size());
      best_edges = edges;
      if (shared_best) {
        int seen = shared_best->load(std::memory_order_relaxed);
        while (seen < best &&
               !shared_best->compare_exchange_weak(seen, best, std::memory_order_relaxed)) {
        }
      }
    }
  }

  void dfs(int from_idx) {
    ++nodes;
    if (use_deadline && std::chrono::steady_clock::now() > deadline) {
      timed_out = true;
      return;
    }
    record_incumbent();
    if (upper_bound() <= current_best()) return;
    for (std::size_t idx = static_cast<std::size_t>(from_idx); idx < triples.size(); ++idx) {
      const Edge& f = triples[idx];
      if (!pairs_free(f)) continue;
      if (creates_crown(f)) continue;
      push(f);
      if (checker.is_canonical(edges)) dfs(static_cast<int>(idx) + 1);
      pop();
      if (timed_out) return;
    }
  }

  // Enumerates canonical prefixes of exactly `depth` edges, recording each
  // as (edge list, next candidate index). Shallower nodes are counted and
  // scored here so subtree workers do not revisit them.
  void collect_prefixes(int from_idx, int depth,
                        std::vector<std::pair<std::vector<Edge>, int>>& out) {
    ++nodes;
    record_incumbent();
    if (depth == 0) {
      out.emplace_back(edges, from_idx);
      return;
    }
    for (std::size_t idx = static_cast<std::size_t>(from_idx); idx < triples.size(); ++idx) {
      const Edge& f = triples[idx];
      if (!pairs_free(f)) continue;
      if (creates_crown(f)) continue;
      push(f);
      if (checker.is_canonical(edges)) collect_prefixes(static_cast<int>(idx) + 1, depth - 1, out);
      pop();
    }
  }
};

}  // namespace detail

// Exact maximum edge count of crown-free linear 3-graphs on n vertices,
// by canonical-prefix backtracking. `exhaustive` is set only when the
// whole tree was explored within the time limit (non-positive limit means
// no limit). The seed feeds a generated warm-start incumbent, which only
// sharpens pruning; single-threaded runs are fully deterministic, and the
// parallel mode may return a different (equally large) witness.
inline SearchResult exact_max_edges(int n, double time_limit_seconds = 0.0,
                                    std::uint64_t seed = 0, bool parallel = false) {
  if (n < 3) throw std::domain_error("search needs n >= 3");
  const auto start = std::chrono::steady_clock::now();
  const std::vector<Edge> triples = detail::all_sorted_triples(n);

  SearchResult result;
  result.n = n;
  result.seed = seed;
  result.single_threaded = !parallel;

  const LinearThreeGraph warm = random_crown_free(n, seed);
  detail::MaxSearch search(n, triples);
  search.best = warm.edge_count();
  search.best_edges = warm.edges();
  if (time_limit_seconds > 0.0) {
    search.use_deadline = true;
    search.deadline = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                  std::chrono::duration<double>(time_limit_seconds));
  }

  bool timed_out = false;
  if (!parallel) {
    search.dfs(0);
    timed_out = search.timed_out;
    result.nodes_explored = search.nodes;
  } else {
    std::vector<std::pair<std::vector<Edge>, int>> roots;
    search.collect_prefixes(0, std::min(3, n >= 6 ? 3 : 1), roots);
    std::atomic<int> shared_best{search.best};
    std::mutex witness_mutex;
    std::vector<Edge> shared_witness = search.best_edges;
    std::atomic<std::uint64_t> total_nodes{search.nodes};
    std::atomic<bool> any_timeout{false};
    auto run_root = [&](const std::pair<std::vector<Edge>, int>& root) {
      detail::MaxSearch worker(n, triples);
      worker.shared_best = &shared_best;
      worker.use_deadline = search.use_deadline;
      worker.deadline = search.deadline;
      for (const Edge& e : root.first) worker.push(e);
      worker.dfs(root.second);
      total_nodes += worker.nodes;
      if (worker.timed_out) any_timeout = true;
      std::lock_guard<std::mutex> lock(witness_mutex);
      if (worker.best > static_cast<int>(shared_witness.size())) shared_witness = worker.best_edges;
    };
    std::vector<std::future<void>> futures;
    const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    std::atomic<std::size_t> next_root{0};
    for (unsigned w = 0; w < workers; ++w) {
      futures.push_back(std::async(std::launch::async, [&] {
        for (std::size_t i = next_root++; i < roots.size(); i = next_root++) run_root(roots[i]);
      }));
    }
    for (auto& f : futures) f.get();
    search.best = shared_best.load();
    search.best_edges = shared_witness;
    timed_out = any_timeout.load();
    result.nodes_explored = total_nodes.load();
  }

  result.best_count = search.best;
  result.witness = LinearThreeGraph::build(n, search.best_edges);
  result.exhaustive = !timed_out;
  result.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace crowns

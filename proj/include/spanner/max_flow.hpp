#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "spanner/errors.hpp"

namespace spanner {

// Directed flow network with paired arcs: arc id a and a^1 are each other's
// reverses. Capacities are doubles; every use in this project keeps them
// integer-valued so residual arithmetic stays exact.
class FlowNetwork {
 public:
  explicit FlowNetwork(int32_t n = 0) : adj_(size_t(n)) {}

  int32_t n() const { return int32_t(adj_.size()); }

  int32_t add_node() {
    adj_.emplace_back();
    return n() - 1;
  }

  // Returns the forward arc id; the reverse arc is id ^ 1.
  int32_t add_arc(int32_t u, int32_t v, double cap, double rev_cap = 0.0) {
    if (u < 0 || u >= n() || v < 0 || v >= n() || u == v)
      throw GraphError("bad arc endpoints");
    if (cap < 0.0 || rev_cap < 0.0) throw GraphError("negative capacity");
    int32_t a = int32_t(head_.size());
    head_.push_back(v);
    head_.push_back(u);
    resid_.push_back(cap);
    resid_.push_back(rev_cap);
    orig_.push_back(cap);
    orig_.push_back(rev_cap);
    adj_[size_t(u)].push_back(a);
    adj_[size_t(v)].push_back(a + 1);
    return a;
  }

  void set_capacity(int32_t arc, double cap) {
    if (cap < 0.0) throw GraphError("negative capacity");
    orig_[size_t(arc)] = cap;
    resid_[size_t(arc)] = cap;
  }

  void reset() { resid_ = orig_; }

  int32_t arc_slots() const { return int32_t(head_.size()); }
  int32_t head(int32_t arc) const { return head_[size_t(arc)]; }
  int32_t tail(int32_t arc) const { return head_[size_t(arc ^ 1)]; }
  double capacity(int32_t arc) const { return orig_[size_t(arc)]; }
  double residual(int32_t arc) const { return resid_[size_t(arc)]; }
  double flow(int32_t arc) const { return orig_[size_t(arc)] - resid_[size_t(arc)]; }
  const std::vector<int32_t>& arcs_of(int32_t v) const { return adj_[size_t(v)]; }

  friend struct MaxFlowRunner;

 private:
  std::vector<std::vector<int32_t>> adj_;
  std::vector<int32_t> head_;
  std::vector<double> resid_;
  std::vector<double> orig_;
};

struct MaxFlowOptions {
  bool global_relabel = true;
  bool gap_relabel = true;
};

struct MaxFlowResult {
  double value = 0.0;
  std::vector<uint8_t> cut_side;  // 1 = source side of a minimum cut
  int64_t pushes = 0;
  int64_t relabels = 0;
};

// FIFO push-relabel. Runs to a full flow (excess drained back to the source),
// so conservation holds at every non-terminal afterwards. Heuristics:
// periodic global relabeling by reverse BFS and the gap rule, both on by
// default and individually switchable.
struct MaxFlowRunner {
  FlowNetwork& net;
  int32_t n, s, t;
  MaxFlowOptions opt;
  std::vector<double>& resid;
  std::vector<double> excess;
  std::vector<int32_t> height, cur, fifo;
  std::vector<int32_t> level_count;
  std::vector<uint8_t> in_queue;
  size_t fifo_head = 0;
  int64_t pushes = 0, relabels = 0, relabels_since_global = 0;

  MaxFlowRunner(FlowNetwork& network, int32_t source, int32_t sink, MaxFlowOptions options)
      : net(network),
        n(network.n()),
        s(source),
        t(sink),
        opt(options),
        resid(network.resid_),
        excess(size_t(network.n()), 0.0),
        height(size_t(network.n()), 0),
        cur(size_t(network.n()), 0),
        level_count(size_t(2 * network.n() + 1), 0),
        in_queue(size_t(network.n()), 0) {}

  void enqueue(int32_t v) {
    if (v == s || v == t || in_queue[size_t(v)] || excess[size_t(v)] <= 0.0) return;
    in_queue[size_t(v)] = 1;
    fifo.push_back(v);
  }

  void push(int32_t arc) {
    int32_t u = net.tail(arc), v = net.head(arc);
    double delta = std::min(excess[size_t(u)], resid[size_t(arc)]);
    resid[size_t(arc)] -= delta;
    resid[size_t(arc ^ 1)] += delta;
    excess[size_t(u)] -= delta;
    excess[size_t(v)] += delta;
    ++pushes;
    enqueue(v);
  }

  void change_height(int32_t v, int32_t h) {
    --level_count[size_t(height[size_t(v)])];
    height[size_t(v)] = h;
    ++level_count[size_t(h)];
  }

  // Raise heights of every node trapped above an empty level below n.
  void apply_gap(int32_t gap) {
    for (int32_t v = 0; v < n; ++v) {
      if (v == s) continue;
      int32_t h = height[size_t(v)];
      if (h > gap && h < n) change_height(v, n + 1);
    }
  }

  void relabel(int32_t v) {
    ++relabels;
    ++relabels_since_global;
    int32_t best = 2 * n;
    for (int32_t arc : net.arcs_of(v))
      if (resid[size_t(arc)] > 0.0)
        best = std::min(best, height[size_t(net.head(arc))] + 1);
    int32_t old = height[size_t(v)];
    change_height(v, best);
    cur[size_t(v)] = 0;
    if (opt.gap_relabel && old < n && level_count[size_t(old)] == 0) apply_gap(old);
  }

  // Exact distance labels: reverse BFS from the sink over residual arcs, then
  // from the source for whatever the sink BFS missed. The sink BFS must not
  // pass through s: with s pinned at height n, a path via the source is not a
  // valid route to t for the nodes behind it.
  void global_relabel() {
    std::vector<int32_t> dist(size_t(n), -1), queue;
    auto bfs = [&](int32_t root, int32_t base, int32_t skip) {
      queue.clear();
      queue.push_back(root);
      dist[size_t(root)] = base;
      for (size_t head = 0; head < queue.size(); ++head) {
        int32_t w = queue[size_t(head)];
        for (int32_t arc : net.arcs_of(w)) {
          // arc is w->v; usable in reverse if v->w (the pair) has residual
          int32_t v = net.head(arc);
          if (v == skip || dist[size_t(v)] >= 0 || resid[size_t(arc ^ 1)] <= 0.0)
            continue;
          dist[size_t(v)] = dist[size_t(w)] + 1;
          queue.push_back(v);
        }
      }
    };
    bfs(t, 0, s);
    bfs(s, n, -1);
    std::fill(level_count.begin(), level_count.end(), 0);
    for (int32_t v = 0; v < n; ++v) {
      if (v == s) {
        height[size_t(v)] = n;
      } else if (dist[size_t(v)] >= 0) {
        height[size_t(v)] = dist[size_t(v)];
      } else {
        height[size_t(v)] = 2 * n;
      }
      ++level_count[size_t(height[size_t(v)])];
      cur[size_t(v)] = 0;
    }
    relabels_since_global = 0;
  }

  void discharge(int32_t v) {
    while (excess[size_t(v)] > 0.0) {
      if (cur[size_t(v)] >= int32_t(net.arcs_of(v).size())) {
        relabel(v);
        if (opt.global_relabel && relabels_since_global >= n) global_relabel();
        continue;
      }
      int32_t arc = net.arcs_of(v)[size_t(cur[size_t(v)])];
      if (resid[size_t(arc)] > 0.0 &&
          height[size_t(v)] == height[size_t(net.head(arc))] + 1)
        push(arc);
      else
        ++cur[size_t(v)];
    }
  }

  MaxFlowResult run() {
    MaxFlowResult res;
    if (s == t) {
      res.cut_side.assign(size_t(n), 0);
      res.cut_side[size_t(s)] = 1;
      return res;
    }
    level_count[0] = n;
    change_height(s, n);
    excess[size_t(s)] = 0.0;
    for (int32_t arc : net.arcs_of(s)) {
      if (resid[size_t(arc)] <= 0.0) continue;
      excess[size_t(s)] += resid[size_t(arc)];
      push(arc);
    }
    if (opt.global_relabel) global_relabel();
    while (fifo_head < fifo.size()) {
      int32_t v = fifo[fifo_head++];
      in_queue[size_t(v)] = 0;
      discharge(v);
      if (fifo_head > 1024 && fifo_head * 2 > fifo.size()) {
        fifo.erase(fifo.begin(), fifo.begin() + ptrdiff_t(fifo_head));
        fifo_head = 0;
      }
    }
    res.value = excess[size_t(t)];
    res.pushes = pushes;
    res.relabels = relabels;
    // Min cut: residual reachability from s.
    res.cut_side.assign(size_t(n), 0);
    std::vector<int32_t> queue{s};
    res.cut_side[size_t(s)] = 1;
    for (size_t head = 0; head < queue.size(); ++head) {
      int32_t u = queue[size_t(head)];
      for (int32_t arc : net.arcs_of(u)) {
        int32_t v = net.head(arc);
        if (!res.cut_side[size_t(v)] && resid[size_t(arc)] > 0.0) {
          res.cut_side[size_t(v)] = 1;
          queue.push_back(v);
        }
      }
    }
    return res;
  }
};

inline MaxFlowResult max_flow(FlowNetwork& net, int32_t s, int32_t t,
                              const MaxFlowOptions& opt = {}) {
  MaxFlowRunner runner(net, s, t, opt);
  return runner.run();
}

}  // namespace spanner

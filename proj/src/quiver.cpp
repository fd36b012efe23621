#include "qm/quiver.hpp"

#include <algorithm>
#include <set>

namespace qm {

void Quiver::validate() const {
  if (vertices < 0) throw ShapeError("negative vertex count");
  for (const Edge& e : edges)
    if (e.src < 0 || e.src >= vertices || e.tgt < 0 || e.tgt >= vertices)
      throw ShapeError("edge endpoint out of range");
  if (!labels.empty() && labels.size() != edges.size())
    throw ShapeError("labels must be empty or one per edge");
}

void MarkedQuiver::validate() const {
  quiver.validate();
  if (static_cast<int>(dims.size()) != quiver.vertices)
    throw ShapeError("one dimension per vertex required");
  for (int d : dims)
    if (d < 0) throw ShapeError("negative vertex dimension");
  int prev = -1;
  for (int v : marked) {
    if (v <= prev) throw ShapeError("marked set must be sorted and unique");
    if (v < 0 || v >= quiver.vertices) throw ShapeError("marked vertex out of range");
    prev = v;
  }
}

bool MarkedQuiver::is_marked(int v) const {
  return std::binary_search(marked.begin(), marked.end(), v);
}

int MarkedQuiver::marked_index(int v) const {
  auto it = std::lower_bound(marked.begin(), marked.end(), v);
  if (it == marked.end() || *it != v) return -1;
  return static_cast<int>(it - marked.begin());
}

long long MarkedQuiver::total_dim() const {
  long long n = 0;
  for (int d : dims) n += d;
  return n;
}

long long pairing_full(const Character& chi, const MarkedQuiver& mq) {
  if (chi.weights.size() != mq.marked.size())
    throw ShapeError("character arity does not match marked set");
  long long acc = 0;
  for (std::size_t i = 0; i < mq.marked.size(); ++i)
    acc += static_cast<long long>(mq.dims[mq.marked[i]]) * chi.weights[i];
  return acc;
}

MarkedQuiver strip_unmarked_unmarked_edges(const MarkedQuiver& mq, std::vector<int>* removed) {
  mq.validate();
  MarkedQuiver out = mq;
  out.quiver.edges.clear();
  out.quiver.labels.clear();
  const bool has_labels = !mq.quiver.labels.empty();
  for (std::size_t e = 0; e < mq.quiver.edges.size(); ++e) {
    const auto& ed = mq.quiver.edges[e];
    if (!mq.is_marked(ed.src) && !mq.is_marked(ed.tgt)) {
      if (removed) removed->push_back(static_cast<int>(e));
      continue;
    }
    out.quiver.edges.push_back(ed);
    if (has_labels) out.quiver.labels.push_back(mq.quiver.labels[e]);
  }
  return out;
}

ReduceResult reduce_step_one(const MarkedQuiver& mq) {
  mq.validate();
  for (const auto& ed : mq.quiver.edges)
    if (!mq.is_marked(ed.src) && !mq.is_marked(ed.tgt))
      throw ShapeError("edge joins two unmarked vertices; strip those first");

  ReduceResult rr;
  const int nm = static_cast<int>(mq.marked.size());
  rr.collapse_vertex = nm;
  rr.vertex_map.assign(mq.quiver.vertices, nm);
  for (int i = 0; i < nm; ++i) rr.vertex_map[mq.marked[i]] = i;

  rr.reduced.quiver.vertices = nm + 1;
  rr.reduced.dims.resize(nm + 1, 1);
  for (int i = 0; i < nm; ++i) {
    rr.reduced.dims[i] = mq.dims[mq.marked[i]];
    rr.reduced.marked.push_back(i);
  }

  const bool has_labels = !mq.quiver.labels.empty();
  const auto label_of = [&](std::size_t e, EdgeOrigin::Kind kind, int index) {
    if (!has_labels) return;
    std::string l = mq.quiver.labels[e];
    if (kind != EdgeOrigin::Kind::Whole) l += "[" + std::to_string(index) + "]";
    rr.reduced.quiver.labels.push_back(std::move(l));
  };
  for (std::size_t e = 0; e < mq.quiver.edges.size(); ++e) {
    const auto& ed = mq.quiver.edges[e];
    const bool ms = mq.is_marked(ed.src), mt = mq.is_marked(ed.tgt);
    const int ns = rr.vertex_map[ed.src], nt = rr.vertex_map[ed.tgt];
    if (ms && mt) {
      rr.reduced.quiver.edges.push_back({ns, nt});
      rr.edge_table.push_back({static_cast<int>(e), EdgeOrigin::Kind::Whole, -1});
      label_of(e, EdgeOrigin::Kind::Whole, -1);
    } else if (ms) {
      for (int r = 0; r < mq.dims[ed.tgt]; ++r) {
        rr.reduced.quiver.edges.push_back({ns, nm});
        rr.edge_table.push_back({static_cast<int>(e), EdgeOrigin::Kind::Row, r});
        label_of(e, EdgeOrigin::Kind::Row, r);
      }
    } else {
      for (int c = 0; c < mq.dims[ed.src]; ++c) {
        rr.reduced.quiver.edges.push_back({nm, nt});
        rr.edge_table.push_back({static_cast<int>(e), EdgeOrigin::Kind::Col, c});
        label_of(e, EdgeOrigin::Kind::Col, c);
      }
    }
  }
  rr.reduced.validate();
  return rr;
}

MarkedQuiver mark_all(const MarkedQuiver& mq) {
  MarkedQuiver out = mq;
  out.marked.resize(mq.quiver.vertices);
  for (int v = 0; v < mq.quiver.vertices; ++v) out.marked[v] = v;
  return out;
}

Character extend_character_step_two(const Character& chi, const MarkedQuiver& mq) {
  mq.validate();
  if (chi.weights.size() != mq.marked.size())
    throw ShapeError("character arity does not match marked set");
  int unmarked = -1;
  for (int v = 0; v < mq.quiver.vertices; ++v) {
    if (mq.is_marked(v)) continue;
    if (unmarked >= 0) throw ShapeError("exactly one unmarked vertex expected");
    unmarked = v;
  }
  if (unmarked < 0 || mq.dims[unmarked] != 1)
    throw ShapeError("exactly one unmarked vertex of dimension 1 expected");
  Character out;
  out.weights.resize(mq.quiver.vertices, 0);
  long long balance = 0;
  for (std::size_t i = 0; i < mq.marked.size(); ++i) {
    out.weights[mq.marked[i]] = chi.weights[i];
    balance += chi.weights[i] * mq.dims[mq.marked[i]];
  }
  out.weights[unmarked] = -balance;
  return out;
}

namespace {

std::vector<std::vector<int>> out_edges(const MarkedQuiver& mq) {
  std::vector<std::vector<int>> out(mq.quiver.vertices);
  for (std::size_t e = 0; e < mq.quiver.edges.size(); ++e)
    out[mq.quiver.edges[e].src].push_back(static_cast<int>(e));
  return out;
}

std::vector<int> canonical_rotation(const std::vector<int>& cycle) {
  std::vector<int> best = cycle;
  std::vector<int> rot = cycle;
  for (std::size_t r = 1; r < cycle.size(); ++r) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (rot < best) best = rot;
  }
  return best;
}

void sort_sequences(std::vector<std::vector<int>>& seqs) {
  std::sort(seqs.begin(), seqs.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
}

}  // namespace

std::vector<std::vector<int>> enumerate_cycles(const MarkedQuiver& mq, int max_len,
                                               bool marked_only) {
  mq.validate();
  if (max_len < 1) throw ShapeError("max_len must be >= 1");
  const auto adj = out_edges(mq);
  std::set<std::vector<int>> found;
  std::vector<int> walk;

  // All closed walks from `start`; dedup across starts via rotation classes.
  auto dfs = [&](auto&& self, int start, int cur) -> void {
    for (int e : adj[cur]) {
      walk.push_back(e);
      const int nxt = mq.quiver.edges[e].tgt;
      if (nxt == start) found.insert(canonical_rotation(walk));
      if (static_cast<int>(walk.size()) < max_len) self(self, start, nxt);
      walk.pop_back();
    }
  };
  for (int v = 0; v < mq.quiver.vertices; ++v) dfs(dfs, v, v);

  std::vector<std::vector<int>> out;
  for (const auto& c : found) {
    if (marked_only) {
      bool touches_marked = false;
      for (int e : c)
        if (mq.is_marked(mq.quiver.edges[e].src)) { touches_marked = true; break; }
      if (!touches_marked) continue;
    }
    out.push_back(c);
  }
  sort_sequences(out);
  return out;
}

std::vector<std::vector<int>> enumerate_unmarked_paths(const MarkedQuiver& mq, int max_len) {
  mq.validate();
  if (max_len < 1) throw ShapeError("max_len must be >= 1");
  const auto adj = out_edges(mq);
  std::vector<std::vector<int>> out;
  std::vector<int> walk;

  auto dfs = [&](auto&& self, int cur) -> void {
    for (int e : adj[cur]) {
      walk.push_back(e);
      const int nxt = mq.quiver.edges[e].tgt;
      if (!mq.is_marked(nxt)) out.push_back(walk);
      if (static_cast<int>(walk.size()) < max_len) self(self, nxt);
      walk.pop_back();
    }
  };
  for (int v = 0; v < mq.quiver.vertices; ++v)
    if (!mq.is_marked(v)) dfs(dfs, v);

  sort_sequences(out);
  return out;
}

bool is_quotient_projective(const MarkedQuiver& mq) {
  mq.validate();
  const auto adj = out_edges(mq);

  // Cycle detection, iterative three-color DFS.
  std::vector<int> color(mq.quiver.vertices, 0);
  for (int s = 0; s < mq.quiver.vertices; ++s) {
    if (color[s] != 0) continue;
    std::vector<std::pair<int, std::size_t>> stack{{s, 0}};
    color[s] = 1;
    while (!stack.empty()) {
      auto& [v, i] = stack.back();
      if (i < adj[v].size()) {
        const int w = mq.quiver.edges[adj[v][i++]].tgt;
        if (color[w] == 1) return false;
        if (color[w] == 0) {
          color[w] = 1;
          stack.emplace_back(w, 0);
        }
      } else {
        color[v] = 2;
        stack.pop_back();
      }
    }
  }

  // No cycles: look for a path (length >= 1) between unmarked vertices.
  // The frontier only ever grows through marked vertices, so hitting an
  // unmarked target anywhere along the way decides the question.
  for (int s = 0; s < mq.quiver.vertices; ++s) {
    if (mq.is_marked(s)) continue;
    std::vector<bool> seen(mq.quiver.vertices, false);
    std::vector<int> stack{s};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int e : adj[v]) {
        const int w = mq.quiver.edges[e].tgt;
        if (!mq.is_marked(w)) return false;
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  return true;
}

GeneratorList invariant_generators(const MarkedQuiver& mq, std::optional<long long> cap) {
  mq.validate();
  const long long n = mq.total_dim();
  const long long full_cap = n * n;
  GeneratorList out;
  out.cap = cap ? std::min(*cap, full_cap) : full_cap;
  out.truncated = out.cap < full_cap;
  if (out.cap < 1) return out;

  const int len = static_cast<int>(out.cap);
  for (const auto& cyc : enumerate_cycles(mq, len, /*marked_only=*/true))
    out.generators.push_back({GeneratorDescriptor::Kind::CycleTrace, cyc, -1, -1});
  for (const auto& path : enumerate_unmarked_paths(mq, len)) {
    const int src = mq.quiver.edges[path.front()].src;
    const int tgt = mq.quiver.edges[path.back()].tgt;
    for (int r = 0; r < mq.dims[tgt]; ++r)
      for (int c = 0; c < mq.dims[src]; ++c)
        out.generators.push_back({GeneratorDescriptor::Kind::PathCoordinate, path, r, c});
  }
  return out;
}

MarkedQuiver sigma_quiver(int n, int m, int p) {
  if (n < 1 || m < 0 || p < 0) throw ShapeError("sigma quiver needs n >= 1, m, p >= 0");
  MarkedQuiver mq;
  mq.quiver.vertices = 3;  // 0: state (marked), 1: input, 2: output
  mq.quiver.edges = {{0, 0}, {1, 0}, {0, 2}, {1, 2}};
  mq.quiver.labels = {"A", "B", "C", "D"};
  mq.marked = {0};
  mq.dims = {n, m, p};
  return mq;
}

MarkedQuiver lomadze_quiver(int n, int m, int p) {
  if (n < 1 || m < 0 || p < 0) throw ShapeError("lomadze quiver needs n >= 1, m, p >= 0");
  MarkedQuiver mq;
  mq.quiver.vertices = 3;  // 0: n (marked), 1: n+p (marked), 2: p+m
  mq.quiver.edges = {{0, 1}, {0, 1}, {2, 1}};
  mq.quiver.labels = {"K", "L", "M"};
  mq.marked = {0, 1};
  mq.dims = {n, n + p, p + m};
  return mq;
}

MarkedQuiver helmke_quiver(int n, int m, int p) {
  if (n < 1 || m < 0 || p < 0) throw ShapeError("helmke quiver needs n >= 1, m, p >= 0");
  MarkedQuiver mq;
  // 0: state source (marked), 1: state target (marked), 2: output (marked),
  // 3: input, 4: output source.
  mq.quiver.vertices = 5;
  mq.quiver.edges = {{0, 1}, {0, 1}, {3, 1}, {0, 2}, {3, 2}, {4, 2}};
  mq.quiver.labels = {"E", "A", "B", "C", "D", "F"};
  mq.marked = {0, 1, 2};
  mq.dims = {n, n, p, m, p};
  return mq;
}

}  // namespace qm

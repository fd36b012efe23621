#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qm/matrix.hpp"
#include "qm/subspace.hpp"

namespace qm {

struct Quiver {
  struct Edge {
    int src;
    int tgt;
  };
  int vertices = 0;
  std::vector<Edge> edges;
  std::vector<std::string> labels;  // optional, empty or one per edge

  void validate() const;
};

/// Quiver with a marked vertex set and a dimension vector. The general
/// linear groups at the marked vertices act on representations; unmarked
/// vertices are fixed.
struct MarkedQuiver {
  Quiver quiver;
  std::vector<int> marked;  // sorted, unique vertex ids
  std::vector<int> dims;    // one per vertex, >= 0

  void validate() const;
  bool is_marked(int v) const;
  /// Position of v in the marked list, or -1.
  int marked_index(int v) const;
  long long total_dim() const;
};

/// Integer weight per marked vertex, aligned with MarkedQuiver::marked.
struct Character {
  std::vector<long long> weights;
};

/// Matrix family over a marked quiver: maps[e] has shape
/// dims[tgt(e)] x dims[src(e)].
template <class K>
struct Representation {
  MarkedQuiver mq;
  std::vector<Matrix<K>> maps;

  void validate() const {
    mq.validate();
    if (maps.size() != mq.quiver.edges.size())
      throw ShapeError("one matrix per edge required");
    for (std::size_t e = 0; e < maps.size(); ++e) {
      const auto& ed = mq.quiver.edges[e];
      if (maps[e].rows() != mq.dims[ed.tgt] || maps[e].cols() != mq.dims[ed.src])
        throw ShapeError("edge map shape does not match endpoint dimensions");
    }
  }
};

/// One subspace per vertex; a subrepresentation witness once closed under
/// all edge maps.
template <class K>
struct SubrepWitness {
  std::vector<Subspace<K>> subspaces;
};

/// Closure check: every edge map carries the source subspace into the
/// target subspace.
template <class K>
bool subrep_is_valid(const Representation<K>& rep, const SubrepWitness<K>& s) {
  if (s.subspaces.size() != static_cast<std::size_t>(rep.mq.quiver.vertices))
    throw ShapeError("witness needs one subspace per vertex");
  for (int v = 0; v < rep.mq.quiver.vertices; ++v)
    if (s.subspaces[v].ambient_dim() != rep.mq.dims[v])
      throw ShapeError("witness ambient dimension mismatch");
  for (std::size_t e = 0; e < rep.maps.size(); ++e) {
    const auto& ed = rep.mq.quiver.edges[e];
    const auto& src = s.subspaces[ed.src];
    const auto& tgt = s.subspaces[ed.tgt];
    for (int i = 0; i < src.dim(); ++i) {
      Matrix<K> v = rep.maps[e] * src.basis().row(i).transpose();
      if (!tgt.contains_vector(v.transpose())) return false;
    }
  }
  return true;
}

/// Sum over marked vertices of dim(subspace) * weight.
template <class K>
long long pairing(const Character& chi, const SubrepWitness<K>& s, const MarkedQuiver& mq) {
  if (chi.weights.size() != mq.marked.size())
    throw ShapeError("character arity does not match marked set");
  long long acc = 0;
  for (std::size_t i = 0; i < mq.marked.size(); ++i)
    acc += static_cast<long long>(s.subspaces[mq.marked[i]].dim()) * chi.weights[i];
  return acc;
}

/// Pairing against the full representation: sum of weight * dims over
/// marked vertices.
long long pairing_full(const Character& chi, const MarkedQuiver& mq);

/// Drops edges joining two unmarked vertices (they carry no group action);
/// returns the removed edge indices through `removed` when non-null.
MarkedQuiver strip_unmarked_unmarked_edges(const MarkedQuiver& mq, std::vector<int>* removed);

struct EdgeOrigin {
  enum class Kind { Whole, Row, Col };
  int old_edge;
  Kind kind;
  int index;  // row or column sliced out of the old map; -1 for Whole
};

struct ReduceResult {
  MarkedQuiver reduced;          // marked vertices re-indexed, then the collapse vertex
  int collapse_vertex;           // index of the fresh dimension-1 unmarked vertex
  std::vector<int> vertex_map;   // old vertex -> new vertex (unmarked -> collapse)
  std::vector<EdgeOrigin> edge_table;
};

/// Collapse all unmarked vertices to a single dimension-1 vertex; an edge
/// between a marked vertex and an unmarked one of dimension d becomes d
/// parallel edges, orientation kept. Requires that no edge joins two
/// unmarked vertices.
ReduceResult reduce_step_one(const MarkedQuiver& mq);

/// Moves a representation across reduce_step_one: blocks between marked
/// vertices are kept, blocks at a collapsed vertex split into their rows
/// (marked -> unmarked) or columns (unmarked -> marked).
template <class K>
Representation<K> transport_representation(const Representation<K>& rep, const ReduceResult& rr) {
  rep.validate();
  std::vector<Matrix<K>> maps;
  maps.reserve(rr.edge_table.size());
  for (const EdgeOrigin& eo : rr.edge_table) {
    const Matrix<K>& old_map = rep.maps.at(eo.old_edge);
    switch (eo.kind) {
      case EdgeOrigin::Kind::Whole:
        maps.push_back(old_map);
        break;
      case EdgeOrigin::Kind::Row:
        maps.push_back(old_map.row(eo.index));
        break;
      case EdgeOrigin::Kind::Col:
        maps.push_back(old_map.col(eo.index));
        break;
    }
  }
  Representation<K> out{rr.reduced, std::move(maps)};
  out.validate();
  return out;
}

/// Marks every vertex; weights of the returned character follow vertex
/// order. The weight at the collapse vertex balances the pairing to zero
/// on the full representation.
Character extend_character_step_two(const Character& chi, const MarkedQuiver& mq_reduced);

MarkedQuiver mark_all(const MarkedQuiver& mq);

/// Oriented cycles (edge index sequences, edges may repeat) of length
/// <= max_len, one representative per rotation class (lexicographically
/// least), sorted by (length, sequence). With marked_only, keeps cycles
/// passing through at least one marked vertex — every such cycle has a
/// rotation starting there, and traces are rotation-invariant.
std::vector<std::vector<int>> enumerate_cycles(const MarkedQuiver& mq, int max_len,
                                               bool marked_only);

/// Oriented paths (edges may repeat) of length <= max_len whose source and
/// target vertices are both unmarked, sorted by (length, sequence).
std::vector<std::vector<int>> enumerate_unmarked_paths(const MarkedQuiver& mq, int max_len);

/// The semistable quotient is projective iff the quiver has no oriented
/// cycle and no oriented path from an unmarked vertex to an unmarked one.
bool is_quotient_projective(const MarkedQuiver& mq);

struct GeneratorDescriptor {
  enum class Kind { CycleTrace, PathCoordinate };
  Kind kind;
  std::vector<int> edges;
  int row = -1;  // for PathCoordinate
  int col = -1;
};

struct GeneratorList {
  std::vector<GeneratorDescriptor> generators;
  bool truncated = false;
  long long cap = 0;
};

/// Generators of the invariant ring: traces of marked cycles and
/// coordinate functions of unmarked-to-unmarked paths, up to length
/// N^2 with N the total dimension (or the given lower cap).
GeneratorList invariant_generators(const MarkedQuiver& mq,
                                   std::optional<long long> cap = std::nullopt);

template <class K>
K evaluate_generator(const Representation<K>& rep, const GeneratorDescriptor& d) {
  if (d.edges.empty()) throw ShapeError("empty generator descriptor");
  Matrix<K> m = rep.maps.at(d.edges.front());
  for (std::size_t i = 1; i < d.edges.size(); ++i) {
    const auto& ed = rep.mq.quiver.edges.at(d.edges[i]);
    const auto& prev = rep.mq.quiver.edges.at(d.edges[i - 1]);
    if (ed.src != prev.tgt) throw ShapeError("descriptor edges do not compose");
    m = rep.maps.at(d.edges[i]) * m;
  }
  if (d.kind == GeneratorDescriptor::Kind::CycleTrace) {
    if (m.rows() != m.cols()) throw ShapeError("cycle composite is not square");
    K acc = m.zero();
    for (int i = 0; i < m.rows(); ++i) acc += m.at(i, i);
    return acc;
  }
  if (d.row < 0 || d.row >= m.rows() || d.col < 0 || d.col >= m.cols())
    throw ShapeError("coordinate outside composite shape");
  return m.at(d.row, d.col);
}

/// Group action on a representation: one invertible block per marked
/// vertex (aligned with mq.marked), identity at unmarked vertices.
template <class K>
Representation<K> act_representation(const Representation<K>& rep,
                                     const std::vector<Matrix<K>>& blocks) {
  if (blocks.size() != rep.mq.marked.size())
    throw ShapeError("one block per marked vertex required");
  std::vector<Matrix<K>> inv;
  inv.reserve(blocks.size());
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].rows() != rep.mq.dims[rep.mq.marked[i]])
      throw ShapeError("block size does not match vertex dimension");
    inv.push_back(inverse(blocks[i]));
  }
  Representation<K> out = rep;
  for (std::size_t e = 0; e < rep.maps.size(); ++e) {
    const auto& ed = rep.mq.quiver.edges[e];
    Matrix<K> m = rep.maps[e];
    const int ti = rep.mq.marked_index(ed.tgt);
    const int si = rep.mq.marked_index(ed.src);
    if (ti >= 0) m = blocks[ti] * m;
    if (si >= 0) m = m * inv[si];
    out.maps[e] = m;
  }
  return out;
}

// The three quivers used throughout: classical state-space systems,
// Lomadze triples, and Helmke six-tuples.
MarkedQuiver sigma_quiver(int n, int m, int p);
MarkedQuiver lomadze_quiver(int n, int m, int p);
MarkedQuiver helmke_quiver(int n, int m, int p);

}  // namespace qm

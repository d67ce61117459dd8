#ifndef PTRI_PTGRAPH_HPP
#define PTRI_PTGRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ptri/geom.hpp"

namespace ptri {

using Edge = std::pair<int, int>;  // always stored with first < second

inline Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// Subset of interior vertices, identified by its bitmask over positions in
// PointSet::interior (bit k = interior[k] is a member).
struct InteriorSubset {
  uint64_t mask = 0;

  friend bool operator==(const InteriorSubset&, const InteriorSubset&) = default;
  friend auto operator<=>(const InteriorSubset&, const InteriorSubset&) = default;

  bool contains(int pos) const { return (mask >> pos) & 1; }
  int count() const { return __builtin_popcountll(mask); }
  // Point indices of the members, ascending.
  std::vector<int> members(const PointSet& ps) const;
  static InteriorSubset from_members(const PointSet& ps,
                                     const std::vector<int>& pts);
};

struct PlaneGraph {
  const PointSet* ps = nullptr;
  std::vector<Edge> edges;  // sorted, unique, each with first < second

  bool has_edge(int a, int b) const;
};

struct Face {
  std::vector<int> boundary;  // counter-clockwise cyclic vertex walk
  std::vector<int> corners;   // subsequence of boundary at convex angles
};

enum class ValidationErrorKind {
  CrossingEdges,
  MissingHullEdge,
  IsolatedOrDegreeOneVertex,
  Disconnected,
  FaceNotPseudoTriangle,
  EdgeCountMismatch,
};

struct ValidationError {
  ValidationErrorKind kind;
  std::string witness;
};

struct PseudoTriangulation {
  PlaneGraph graph;
  std::vector<Face> faces;    // bounded faces only
  std::vector<bool> pointed;  // per vertex
  InteriorSubset signature;   // pointed interior vertices

  const PointSet& pointset() const { return *graph.ps; }
};

// Bounded faces of a non-crossing graph with all hull edges present,
// extracted from the rotation system (exact angular order at each vertex).
std::vector<Face> faces_of(const PlaneGraph& g);

// True iff some angular gap between consecutive edges at v exceeds pi.
// Requires degree >= 2 (throws std::invalid_argument otherwise).
bool is_pointed(const PlaneGraph& g, int v);

std::optional<PseudoTriangulation> try_validate(const PointSet& ps,
                                                const std::vector<Edge>& edges,
                                                ValidationError* err = nullptr);
// Throwing variant; the message carries the error kind and witness.
PseudoTriangulation validate(const PointSet& ps, const std::vector<Edge>& edges);

// Interior chain vertices adjacent to the tip of a single chain.
InteriorSubset tip_signature(const PseudoTriangulation& t);

std::string describe(ValidationErrorKind kind);

// Edge-set text format: lines "i j" with i < j.
std::string write_edges(const std::vector<Edge>& edges);
std::vector<Edge> read_edges(std::istream& in);

}  // namespace ptri

#endif

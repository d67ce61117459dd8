#ifndef PTRI_CONSTRUCTIONS_HPP
#define PTRI_CONSTRUCTIONS_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "ptri/ptgraph.hpp"

namespace ptri {

// Cached canonical point sets; references stay valid for the process
// lifetime, so PseudoTriangulations built on them can be passed around.
const PointSet& canonical_single_chain(int l);
const PointSet& canonical_double_chain(int l, int m);

// entries[k] is the end point x_{k+1}, aligned with the sorted elements of
// the relevant interior subset; values are chain labels in {0..l+1}.
struct EndPointVector {
  std::vector<int> entries;
  friend bool operator==(const EndPointVector&, const EndPointVector&) = default;
  friend auto operator<=>(const EndPointVector&, const EndPointVector&) = default;
};

enum class EndPointVariant { W, WMinusV };

// For variant W: x_i is the non-tip corner of the unique pseudo-edge having
// the i-th element of W as reflex vertex. For variant WMinusV (v supplied):
// x_1 is the third corner of the triangle below the chain edge (v-1, v);
// later entries are as in the W variant for the elements of W \ {v}.
EndPointVector end_point_vector(const PseudoTriangulation& t,
                                EndPointVariant variant, int v = -1);

// Lemma-8 map: t in PPT_W with v = min(W) and edge (v, l+1) unused, to an
// element of PPT_{W \ {v}}. Throws std::invalid_argument on precondition
// violations.
PseudoTriangulation bijection_forward(const PseudoTriangulation& t);

// Inverse map: t in PPT_{W \ {v}} back to PPT_W (edge (v, l+1) unused).
PseudoTriangulation bijection_inverse(const PseudoTriangulation& t, int v);

struct BadEarError : std::runtime_error {
  int vertex;
  explicit BadEarError(int vtx)
      : std::runtime_error("bad ear at chain vertex " + std::to_string(vtx)),
        vertex(vtx) {}
};

// Builds the unique pointed pseudo-triangulation of the single chain l that
// restricts to the given triangulation of the closed chain polygon
// {0..l+1} and omits exactly the listed chain boundary edges (k, k+1),
// given by their lower index k in 0..l. Throws BadEarError if some ear of
// the triangulation is incident to two missing boundary edges.
PseudoTriangulation reconstruct_from_choice(int l,
                                            const std::vector<Edge>& tri,
                                            const std::vector<int>& missing);

// symbols[k] = 0 if the k-th middle pseudo-triangle hangs from the top
// chain, 1 if from the bottom; read left to right.
struct ShuffleWord {
  std::vector<int> symbols;
  friend bool operator==(const ShuffleWord&, const ShuffleWord&) = default;
  friend auto operator<=>(const ShuffleWord&, const ShuffleWord&) = default;
};

struct DoubleChainDecomposition {
  PseudoTriangulation top;     // single chain on l interior vertices
  PseudoTriangulation bottom;  // single chain on m interior vertices
  ShuffleWord word;
};

DoubleChainDecomposition decompose_double_chain(const PseudoTriangulation& t);

PseudoTriangulation compose_double_chain(const PseudoTriangulation& top,
                                         const PseudoTriangulation& bottom,
                                         const ShuffleWord& word);

}  // namespace ptri

#endif

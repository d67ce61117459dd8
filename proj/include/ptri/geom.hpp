#ifndef PTRI_GEOM_HPP
#define PTRI_GEOM_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ptri {

using Coord = long long;

struct Point {
  Coord x = 0;
  Coord y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

enum class Orientation { Right = -1, Collinear = 0, Left = 1 };

// Sign of det(b-a, c-a). Exact for |coord| < 2^62 via 128-bit products.
Orientation orientation(const Point& a, const Point& b, const Point& c);

// Proper crossing: the open segments ab and cd share exactly one point.
// Shared endpoints and collinear overlaps (excluded by general position)
// do not count.
bool segments_properly_cross(const Point& a, const Point& b, const Point& c,
                             const Point& d);

// Planar point set in general position with hull/interior partition.
// hull indices are in counter-clockwise order; interior is ascending.
struct PointSet {
  std::vector<Point> points;
  std::vector<int> hull;
  std::vector<int> interior;
  std::string label;

  int size() const { return static_cast<int>(points.size()); }
  bool is_hull_vertex(int v) const;
  bool is_hull_edge(int a, int b) const;
  // Position of point index v inside `interior`, or -1.
  int interior_pos(int v) const;
};

struct FamilySpec {
  enum class Kind { Convex, AlmostConvex, SingleChain, DoubleChain };
  Kind kind;
  int n = 0;                   // convex
  int v = 0;                   // almost-convex
  std::vector<int> hosts;      // almost-convex host hull-edge indices
  int l = 0, m = 0;            // chains
};

// Builds hull/interior and validates general position. Throws
// std::invalid_argument naming the offending collinear triple.
PointSet make_point_set(std::vector<Point> pts, std::string label = "");

PointSet make_convex(int n);
PointSet make_almost_convex(int v, const std::vector<int>& hosts);
PointSet make_single_chain(int l);
PointSet make_double_chain(int l, int m);
PointSet make_family(const FamilySpec& spec);

// True iff no segment between two points of ps separates interior point p
// from the hull edge (q, r): no chord properly crosses both (p,q) and (p,r).
bool validate_closeness(const PointSet& ps, int p, std::pair<int, int> edge);

// Structural view of a single chain: chain[k] is the point index of chain
// vertex k (0..l+1), tip is the apex.
struct SingleChainView {
  int l = 0;
  int tip = -1;
  std::vector<int> chain;
};
std::optional<SingleChainView> as_single_chain(const PointSet& ps);

// Structural view of a double chain, valid for make_double_chain output.
struct DoubleChainView {
  int l = 0, m = 0;
  std::vector<int> top;     // top-left corner, top chain, top-right corner
  std::vector<int> bottom;  // bottom-left corner, bottom chain, bottom-right
};
std::optional<DoubleChainView> as_double_chain(const PointSet& ps);

// Text format: optional '#' comments, a line "n", then n lines "x y".
std::string write_point_set(const PointSet& ps);
PointSet read_point_set(std::istream& in);

}  // namespace ptri

#endif

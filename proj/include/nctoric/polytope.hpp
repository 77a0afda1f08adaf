#pragma once

#include <cstddef>
#include <vector>

#include "nctoric/linalg.hpp"

namespace nctoric {

/// Closed halfspace {x : <x, normal> >= offset}.
struct Halfspace {
  Vector normal;
  Scalar offset;
};

enum class DelzantClass { Irrational, Rational, Integral };

const char* to_string(DelzantClass c);

/// Sorted list of facet indices (0-based).
using IndexSet = std::vector<std::size_t>;

/// Family of index sets ordered by size, then lexicographically.
using IndexFamily = std::vector<IndexSet>;

/// Bounded, full-dimensional, simple polytope given by halfspaces.
///
/// Construction enumerates vertices exhaustively and throws Error with one of
/// DimensionMismatch, FieldMismatch, Empty, Unbounded, NotFullDimensional or
/// NotSimple. Halfspaces that do not support a facet, or that repeat an
/// earlier facet, are kept in place and flagged as redundant.
class SimplePolytope {
 public:
  SimplePolytope(std::size_t dim, std::vector<Halfspace> halfspaces);

  std::size_t dim() const { return dim_; }
  const std::vector<Halfspace>& halfspaces() const { return halfspaces_; }
  std::size_t halfspace_count() const { return halfspaces_.size(); }

  const std::vector<Vector>& vertices() const { return vertices_; }
  /// Essential facets through each vertex; exactly dim() of them.
  const std::vector<IndexSet>& vertex_facets() const { return vertex_facets_; }
  /// Edge directions leaving each vertex; entry j moves off vertex_facets()[v][j].
  const std::vector<std::vector<Vector>>& edge_directions() const { return edges_; }

  bool is_redundant(std::size_t i) const { return redundant_[i]; }
  IndexSet redundant_facets() const;
  IndexSet essential_facets() const;

  /// All I (over every halfspace) such that some point of P is tight on I.
  const IndexFamily& family() const { return family_; }
  /// The same, restricted to essential facets.
  const IndexFamily& essential_family() const { return essential_family_; }

  /// Slack <x, n_i> - b_i of every halfspace at x.
  Vector slacks(const Vector& x) const;
  bool contains(const Vector& x) const;

 private:
  std::size_t dim_;
  std::vector<Halfspace> halfspaces_;
  std::vector<Vector> vertices_;
  std::vector<IndexSet> tight_;  // all tight halfspaces per vertex
  std::vector<IndexSet> vertex_facets_;
  std::vector<std::vector<Vector>> edges_;
  std::vector<bool> redundant_;
  IndexFamily family_;
  IndexFamily essential_family_;
};

/// Polygon from vertices listed counter-clockwise; one halfspace per edge,
/// facet i running from vertex i to vertex i+1.
SimplePolytope polygon_from_vertices(const std::vector<Vector>& ccw_vertices);

/// Axis-aligned box prod [lo_i, hi_i]; facets ordered x_1 >= lo_1, x_1 <= hi_1, ...
SimplePolytope box(const Vector& lo, const Vector& hi);

DelzantClass classify_delzant(const SimplePolytope& p);

struct NormalData {
  IntMatrix rho;   // primitive inward normals as rows (zero row for a zero normal)
  Vector lambda;   // P = {x : <x, rho_i> >= lambda_i}
};

/// Throws Error("IrrationalNormals") when some facet normal has no rational direction.
NormalData normal_data(const SimplePolytope& p);

/// f-vector (f_{-1} = 1, f_0, ..., f_{d-1}) of the simplicial dual polytope.
std::vector<Integer> face_counts(const SimplePolytope& p);

bool is_subset(const IndexSet& a, const IndexSet& b);
void sort_family(IndexFamily& f);

}  // namespace nctoric

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nashtopo/errors.hpp"

namespace nashtopo {

enum class SpaceKind { Interval, Circle, Product };

/// An elementary grid factor: an interval or a circle at a given resolution.
struct Factor {
  SpaceKind kind = SpaceKind::Interval; // Interval or Circle only
  int resolution = 0;

  int ambient_dim() const { return kind == SpaceKind::Circle ? 2 : 1; }
  bool operator==(const Factor&) const = default;
};

/// A discretized compact connected strategy space: an interval, a circle, or
/// a finite product of those.  Grid points are indexed in mixed radix with
/// factor 0 most significant; embeddings are computed on demand (circle
/// points are stored as angle indices, angle 2*pi*k/n).
class DiscreteSpace {
public:
  static DiscreteSpace interval(int n);
  static DiscreteSpace circle(int n);
  static DiscreteSpace product(const std::vector<DiscreteSpace>& factors);

  SpaceKind kind() const;
  const std::vector<Factor>& factors() const { return factors_; }
  long long point_count() const { return point_count_; }
  int ambient_dim() const { return ambient_dim_; }

  /// Embedding coordinates of one grid point (interval in [0,1] x R^0,
  /// circle on the unit circle in R^2, products concatenated).
  std::vector<double> point(long long index) const;
  void write_point(long long index, double* out) const;

  /// Mixed-radix digit helpers (one digit per factor).
  void decompose(long long index, std::span<int> digits) const;
  long long compose(std::span<const int> digits) const;

  /// Grid points reachable by moving one factor one step.
  std::vector<long long> neighbors(long long index) const;

  /// Euclidean distance between the embeddings of two grid points.
  double distance(long long a, long long b) const;

  /// Largest embedding distance between adjacent grid points of any factor.
  double grid_spacing() const;

  /// Diameter of the embedded space (not of the grid): product of factor
  /// diameters in the Euclidean sense.
  double diameter() const;

  /// Embedding slice occupied by factor f: [offset, offset + dim).
  int factor_offset(int f) const { return factor_offsets_[f]; }

  bool operator==(const DiscreteSpace&) const = default;

private:
  DiscreteSpace() = default;
  void finish();

  std::vector<Factor> factors_;
  std::vector<int> factor_offsets_;
  long long point_count_ = 0;
  int ambient_dim_ = 0;
};

/// A finite simplicial complex.  Simplices are stored per dimension as
/// ascending vertex tuples in lexicographic order; every vertex is a
/// 0-simplex implicitly.
class SimplicialComplex {
public:
  SimplicialComplex(long long vertex_count,
                    std::vector<std::vector<std::vector<int32_t>>> simplices_by_dim);

  long long vertex_count() const { return vertex_count_; }
  int top_dim() const { return static_cast<int>(simplices_by_dim_.size()); }

  /// Number of d-simplices (d = 0 counts vertices).
  long long simplex_count(int dim) const;

  /// d >= 1 only; tuples sorted ascending, list in lexicographic order.
  const std::vector<std::vector<int32_t>>& simplices(int dim) const;

  /// Index of a simplex in its dimension's list, if present.
  std::optional<long long> index_of(int dim, const std::vector<int32_t>& s) const;

  /// Checks that every face of every simplex is present.
  /// Throws invalid_complex_error otherwise.
  void validate() const;

  /// Subcomplex spanned by a vertex subset, with vertices relabelled
  /// 0..k-1 in the order given.
  SimplicialComplex induced(const std::vector<int32_t>& vertices) const;

private:
  long long vertex_count_ = 0;
  std::vector<std::vector<std::vector<int32_t>>> simplices_by_dim_; // [d-1] holds d-simplices
};

/// Path complex for intervals, cycle complex for circles, staircase
/// triangulation of the product cell structure for products.
SimplicialComplex triangulate(const DiscreteSpace& space);

std::string to_string(SpaceKind kind);

} // namespace nashtopo

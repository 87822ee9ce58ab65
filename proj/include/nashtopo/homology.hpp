#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "nashtopo/spaces.hpp"

namespace nashtopo {

using Int = boost::multiprecision::cpp_int;

/// Sparse matrix over arbitrary-precision integers, stored row-wise with
/// columns sorted inside each row.
class IntegerMatrix {
public:
  using Entry = std::pair<int32_t, Int>;

  IntegerMatrix(long long rows, long long cols);
  static IntegerMatrix from_rows(const std::vector<std::vector<long long>>& dense);

  long long rows() const { return rows_n_; }
  long long cols() const { return cols_n_; }
  Int at(long long r, long long c) const;
  void set(long long r, long long c, Int v);
  long long nonzero_count() const;
  const std::vector<Entry>& row(long long r) const { return rows_[r]; }
  std::vector<std::vector<Entry>> release_rows() { return std::move(rows_); }

private:
  long long rows_n_ = 0;
  long long cols_n_ = 0;
  std::vector<std::vector<Entry>> rows_;
};

struct SmithResult {
  /// d1 | d2 | ... | d_rank, all positive.
  std::vector<Int> invariant_factors;
  long long rank = 0;
};

/// Smith normal form invariant factors and rank.  Pivots are chosen among
/// the nonzero entries of minimal absolute value, with sparsity-aware and
/// index tie-breaking, so results are deterministic.
SmithResult smith_normal_form(IntegerMatrix m);

/// Matrix of the simplicial boundary operator in dimension `dim`
/// (rows: (dim-1)-simplices, cols: dim-simplices, entries in {-1,0,+1}).
IntegerMatrix boundary_matrix(const SimplicialComplex& complex, int dim);

struct HomologyResult {
  std::vector<long long> betti;          // by dimension, 0..top
  std::vector<std::vector<Int>> torsion; // per dimension, coefficients > 1

  bool operator==(const HomologyResult&) const = default;
};

/// Integer simplicial homology of a validated complex via Smith normal form.
HomologyResult homology(const SimplicialComplex& complex);

/// True iff the homology is that of a point: betti (1, 0, 0, ...) and no
/// torsion anywhere.
bool is_acyclic(const HomologyResult& h);

/// Betti numbers of a product from torsion-free factor homologies
/// (convolution of the betti sequences; Tor terms vanish).
HomologyResult kunneth_predict(const HomologyResult& hx, const HomologyResult& hy);

} // namespace nashtopo

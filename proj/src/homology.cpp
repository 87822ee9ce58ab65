#include "nashtopo/homology.hpp"

#include <algorithm>

namespace nashtopo {

IntegerMatrix::IntegerMatrix(long long rows, long long cols)
    : rows_n_(rows), cols_n_(cols), rows_(rows) {
  if (rows < 0 || cols < 0)
    throw invalid_argument_error("matrix dimensions must be nonnegative");
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<long long>>& dense) {
  const long long r = static_cast<long long>(dense.size());
  const long long c = dense.empty() ? 0 : static_cast<long long>(dense[0].size());
  IntegerMatrix m(r, c);
  for (long long i = 0; i < r; ++i) {
    if (static_cast<long long>(dense[i].size()) != c)
      throw invalid_argument_error("ragged rows in dense matrix");
    for (long long j = 0; j < c; ++j)
      if (dense[i][j] != 0) m.rows_[i].push_back({static_cast<int32_t>(j), Int(dense[i][j])});
  }
  return m;
}

Int IntegerMatrix::at(long long r, long long c) const {
  if (r < 0 || r >= rows_n_ || c < 0 || c >= cols_n_)
    throw invalid_argument_error("matrix index out of range");
  const auto& row = rows_[r];
  const auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const Entry& e, long long v) { return e.first < v; });
  if (it == row.end() || it->first != c) return Int(0);
  return it->second;
}

void IntegerMatrix::set(long long r, long long c, Int v) {
  if (r < 0 || r >= rows_n_ || c < 0 || c >= cols_n_)
    throw invalid_argument_error("matrix index out of range");
  auto& row = rows_[r];
  const auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const Entry& e, long long v2) { return e.first < v2; });
  if (it != row.end() && it->first == c) {
    if (v == 0)
      row.erase(it);
    else
      it->second = std::move(v);
  } else if (v != 0) {
    row.insert(it, {static_cast<int32_t>(c), std::move(v)});
  }
}

long long IntegerMatrix::nonzero_count() const {
  long long n = 0;
  for (const auto& row : rows_) n += static_cast<long long>(row.size());
  return n;
}

namespace {

Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

// Sparse Smith normal form working state.  Rows hold exact sorted entries;
// the per-column row lists are lazy (may contain stale ids) but the per-column
// counts are exact and drive a lazy bucket queue keyed by count.
struct SnfState {
  std::vector<std::vector<IntegerMatrix::Entry>> rows;
  std::vector<std::vector<int32_t>> col_rows;
  std::vector<int32_t> col_count;
  std::vector<char> row_alive, col_alive;
  std::vector<std::vector<int32_t>> buckets; // buckets[k]: cols that had count k
  std::size_t bucket_min = 0;
  std::vector<Int> factors;
  std::vector<IntegerMatrix::Entry> scratch;

  explicit SnfState(IntegerMatrix&& m) {
    const long long R = m.rows(), C = m.cols();
    rows = std::move(m).release_rows();
    rows.resize(R);
    col_rows.resize(C);
    col_count.assign(C, 0);
    row_alive.assign(R, 1);
    col_alive.assign(C, 1);
    for (long long r = 0; r < R; ++r) {
      for (const auto& [c, v] : rows[r]) {
        col_rows[c].push_back(static_cast<int32_t>(r));
        ++col_count[c];
      }
    }
    for (long long c = 0; c < C; ++c)
      if (col_count[c] > 0) enqueue(static_cast<int32_t>(c));
  }

  void enqueue(int32_t c) {
    const auto k = static_cast<std::size_t>(col_count[c]);
    if (buckets.size() <= k) buckets.resize(k + 1);
    buckets[k].push_back(c);
    if (k < bucket_min) bucket_min = k;
  }

  // Pops the live column with the smallest count, or -1 when drained.
  int32_t pop_min_col() {
    while (bucket_min < buckets.size()) {
      auto& b = buckets[bucket_min];
      if (b.empty()) {
        ++bucket_min;
        continue;
      }
      const int32_t c = b.back();
      b.pop_back();
      if (col_alive[c] && static_cast<std::size_t>(col_count[c]) == bucket_min)
        return c;
    }
    return -1;
  }

  void bump_col(int32_t c, int delta) {
    col_count[c] += delta;
    if (col_alive[c] && col_count[c] > 0) enqueue(c);
  }

  const Int* row_entry(int32_t r, int32_t c) const {
    const auto& row = rows[r];
    const auto it = std::lower_bound(
        row.begin(), row.end(), c,
        [](const IntegerMatrix::Entry& e, int32_t v) { return e.first < v; });
    if (it == row.end() || it->first != c) return nullptr;
    return &it->second;
  }

  // Live (row, value) pairs of a column, sorted by row id; also compacts the
  // lazy row list.
  std::vector<std::pair<int32_t, const Int*>> live_column(int32_t c) {
    std::vector<std::pair<int32_t, const Int*>> out;
    auto& lst = col_rows[c];
    std::sort(lst.begin(), lst.end());
    lst.erase(std::unique(lst.begin(), lst.end()), lst.end());
    std::vector<int32_t> keep;
    keep.reserve(lst.size());
    for (int32_t r : lst) {
      if (!row_alive[r]) continue;
      const Int* v = row_entry(r, c);
      if (!v) continue;
      keep.push_back(r);
      out.push_back({r, v});
    }
    lst.swap(keep);
    return out;
  }

  // row_r -= k * row_p.  Updates column counts and lazy lists.
  void row_axpy(int32_t r, const Int& k, int32_t p) {
    if (k == 0) return;
    const int sign = k == 1 ? 1 : (k == -1 ? -1 : 0); // unit fast path
    const auto& rp = rows[p];
    auto& rr = rows[r];
    auto& merged = scratch;
    merged.clear();
    merged.reserve(rr.size() + rp.size());
    std::size_t i = 0, j = 0;
    while (i < rr.size() || j < rp.size()) {
      if (j >= rp.size() || (i < rr.size() && rr[i].first < rp[j].first)) {
        merged.push_back(std::move(rr[i]));
        ++i;
      } else if (i >= rr.size() || rp[j].first < rr[i].first) {
        Int v = sign == 1 ? -rp[j].second : (sign == -1 ? rp[j].second : Int(-k * rp[j].second));
        bump_col(rp[j].first, +1);
        col_rows[rp[j].first].push_back(r);
        merged.push_back({rp[j].first, std::move(v)});
        ++j;
      } else {
        Int v = sign == 1   ? Int(rr[i].second - rp[j].second)
                : sign == -1 ? Int(rr[i].second + rp[j].second)
                             : Int(rr[i].second - k * rp[j].second);
        if (v == 0)
          bump_col(rr[i].first, -1);
        else
          merged.push_back({rr[i].first, std::move(v)});
        ++i;
        ++j;
      }
    }
    rows[r].swap(merged);
  }

  // row_p += row_r (used by the divisibility fix; r has no entry at the
  // pivot column).
  void row_add_into(int32_t p, int32_t r) {
    const auto& ra = rows[r];
    const auto& rp = rows[p];
    std::vector<IntegerMatrix::Entry> merged;
    merged.reserve(rp.size() + ra.size());
    std::size_t i = 0, j = 0;
    while (i < rp.size() || j < ra.size()) {
      if (j >= ra.size() || (i < rp.size() && rp[i].first < ra[j].first)) {
        merged.push_back(rp[i]);
        ++i;
      } else if (i >= rp.size() || ra[j].first < rp[i].first) {
        bump_col(ra[j].first, +1);
        col_rows[ra[j].first].push_back(p);
        merged.push_back(ra[j]);
        ++j;
      } else {
        Int v = rp[i].second + ra[j].second;
        if (v == 0)
          bump_col(rp[i].first, -1);
        else
          merged.push_back({rp[i].first, std::move(v)});
        ++i;
        ++j;
      }
    }
    rows[p].swap(merged);
  }

  // Retire a fully isolated pivot: remove its row and column.
  void retire(int32_t p_row, int32_t p_col, const Int& v) {
    for (const auto& [c, val] : rows[p_row])
      if (c != p_col) bump_col(c, -1);
    bump_col(p_col, -1);
    rows[p_row].clear();
    rows[p_row].shrink_to_fit();
    row_alive[p_row] = 0;
    col_alive[p_col] = 0;
    factors.push_back(abs_int(v));
  }

  // General pivot elimination with remainder descent and the global
  // divisibility fix.  Assumes the entry (p_row, p_col) is nonzero.
  void eliminate(int32_t p_row, int32_t p_col) {
    for (;;) {
      Int v = *row_entry(p_row, p_col);
      // Clear the pivot column by row operations; a nonzero remainder
      // becomes the new (smaller) pivot.
      bool descended = false;
      for (const auto& [r, pv] : live_column(p_col)) {
        if (r == p_row) continue;
        const Int a = *pv;
        const Int k = a / v; // truncation: |a - k*v| < |v|
        row_axpy(r, k, p_row);
        const Int* rem = row_entry(r, p_col);
        if (rem) {
          p_row = r;
          descended = true;
          break;
        }
      }
      if (descended) continue;
      // Column is clear.  Clearing the pivot row is a set of column
      // operations that touch no other row (the pivot column is otherwise
      // zero), so remainders are written in place.
      int32_t switch_col = -1;
      {
        auto& rp = rows[p_row];
        std::vector<IntegerMatrix::Entry> kept;
        kept.reserve(rp.size());
        for (auto& [c, b] : rp) {
          if (c == p_col) {
            kept.push_back({c, std::move(b)});
            continue;
          }
          Int k = b / v;
          Int rem = b - k * v;
          if (rem == 0) {
            bump_col(c, -1);
          } else {
            kept.push_back({c, std::move(rem)});
            if (switch_col < 0) switch_col = c;
          }
        }
        rp.swap(kept);
      }
      if (switch_col >= 0) {
        p_col = switch_col;
        continue;
      }
      // Pivot is isolated.  Make sure it divides everything that remains.
      if (abs_int(v) > 1) {
        int32_t bad_row = -1;
        for (std::size_t r = 0; r < rows.size() && bad_row < 0; ++r) {
          if (!row_alive[r] || static_cast<int32_t>(r) == p_row) continue;
          for (const auto& [c, val] : rows[r]) {
            if (val % v != 0) {
              bad_row = static_cast<int32_t>(r);
              break;
            }
          }
        }
        if (bad_row >= 0) {
          row_add_into(p_row, bad_row);
          continue;
        }
      }
      retire(p_row, p_col, v);
      return;
    }
  }
};

} // namespace

SmithResult smith_normal_form(IntegerMatrix m) {
  SnfState st(std::move(m));

  // Main pass: cheapest live column first; within it the minimal-|value|
  // entry, preferring shorter rows then lower row ids.  Columns whose
  // minimal entry is not a unit are skipped here and swept up below.
  for (;;) {
    const int32_t c = st.pop_min_col();
    if (c < 0) break;
    auto live = st.live_column(c);
    if (live.empty()) continue;
    int32_t best_row = -1;
    Int best_abs;
    std::size_t best_len = 0;
    for (const auto& [r, pv] : live) {
      const Int a = abs_int(*pv);
      if (best_row < 0 || a < best_abs ||
          (a == best_abs && st.rows[r].size() < best_len)) {
        best_row = r;
        best_abs = a;
        best_len = st.rows[r].size();
      }
    }
    if (best_abs != 1) continue; // handled by the general sweep
    st.eliminate(best_row, c);
  }

  // General sweep: global minimal-|value| pivot until nothing is left.
  for (;;) {
    int32_t p_row = -1, p_col = -1;
    Int best_abs;
    for (std::size_t r = 0; r < st.rows.size(); ++r) {
      if (!st.row_alive[r]) continue;
      for (const auto& [c, v] : st.rows[r]) {
        const Int a = abs_int(v);
        if (p_row < 0 || a < best_abs) {
          p_row = static_cast<int32_t>(r);
          p_col = c;
          best_abs = a;
        }
      }
    }
    if (p_row < 0) break;
    st.eliminate(p_row, p_col);
  }

  SmithResult out;
  out.rank = static_cast<long long>(st.factors.size());
  // The in-loop divisibility fix makes factors appear in chain order
  // already; a gcd/lcm sweep over the non-unit ones guards the invariant
  // regardless (units divide everything and need no work).
  std::vector<Int> nonunit;
  long long units = 0;
  for (Int& f : st.factors) {
    if (f == 1)
      ++units;
    else
      nonunit.push_back(std::move(f));
  }
  for (std::size_t i = 0; i + 1 < nonunit.size(); ++i) {
    for (std::size_t j = i + 1; j < nonunit.size(); ++j) {
      if (nonunit[j] % nonunit[i] != 0) {
        const Int g = boost::multiprecision::gcd(nonunit[i], nonunit[j]);
        const Int l = nonunit[i] / g * nonunit[j];
        nonunit[i] = g;
        nonunit[j] = l;
      }
    }
  }
  std::sort(nonunit.begin(), nonunit.end());
  while (!nonunit.empty() && nonunit.front() == 1) { // gcd steps can mint units
    ++units;
    nonunit.erase(nonunit.begin());
  }
  out.invariant_factors.assign(units, Int(1));
  for (Int& f : nonunit) out.invariant_factors.push_back(std::move(f));
  return out;
}

IntegerMatrix boundary_matrix(const SimplicialComplex& complex, int dim) {
  if (dim < 1 || dim > complex.top_dim())
    throw invalid_dimension_error("boundary dimension " + std::to_string(dim) +
                                  " out of range 1.." +
                                  std::to_string(complex.top_dim()));
  IntegerMatrix m(complex.simplex_count(dim - 1), complex.simplex_count(dim));
  const auto& simplices = complex.simplices(dim);
  std::vector<int32_t> face(dim);
  for (long long j = 0; j < static_cast<long long>(simplices.size()); ++j) {
    const auto& s = simplices[j];
    for (int drop = 0; drop <= dim; ++drop) {
      int w = 0;
      for (int i = 0; i <= dim; ++i)
        if (i != drop) face[w++] = s[i];
      const auto row = complex.index_of(dim - 1, face);
      if (!row)
        throw invalid_complex_error("missing face while assembling boundary matrix");
      m.set(*row, j, (drop % 2 == 0) ? Int(1) : Int(-1));
    }
  }
  return m;
}

HomologyResult homology(const SimplicialComplex& complex) {
  complex.validate();
  const int top = complex.top_dim();
  std::vector<SmithResult> snf(top + 2);
  for (int d = 1; d <= top; ++d) snf[d] = smith_normal_form(boundary_matrix(complex, d));

  HomologyResult h;
  h.betti.resize(top + 1);
  h.torsion.resize(top + 1);
  for (int n = 0; n <= top; ++n) {
    const long long rank_dn = n >= 1 ? snf[n].rank : 0;
    const long long rank_dn1 = n + 1 <= top ? snf[n + 1].rank : 0;
    h.betti[n] = complex.simplex_count(n) - rank_dn - rank_dn1;
    if (n + 1 <= top)
      for (const Int& f : snf[n + 1].invariant_factors)
        if (f > 1) h.torsion[n].push_back(f);
  }
  return h;
}

bool is_acyclic(const HomologyResult& h) {
  if (h.betti.empty() || h.betti[0] != 1) return false;
  for (std::size_t n = 1; n < h.betti.size(); ++n)
    if (h.betti[n] != 0) return false;
  for (const auto& t : h.torsion)
    if (!t.empty()) return false;
  return true;
}

HomologyResult kunneth_predict(const HomologyResult& hx, const HomologyResult& hy) {
  for (const auto& t : hx.torsion)
    if (!t.empty())
      throw unsupported_torsion_error("kunneth_predict requires torsion-free factors");
  for (const auto& t : hy.torsion)
    if (!t.empty())
      throw unsupported_torsion_error("kunneth_predict requires torsion-free factors");
  HomologyResult h;
  if (hx.betti.empty() || hy.betti.empty()) return h;
  h.betti.assign(hx.betti.size() + hy.betti.size() - 1, 0);
  for (std::size_t i = 0; i < hx.betti.size(); ++i)
    for (std::size_t j = 0; j < hy.betti.size(); ++j)
      h.betti[i + j] += hx.betti[i] * hy.betti[j];
  h.torsion.assign(h.betti.size(), {});
  return h;
}

} // namespace nashtopo

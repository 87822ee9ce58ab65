#include "nashtopo/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace nashtopo {

std::string to_string(SpaceKind kind) {
  switch (kind) {
  case SpaceKind::Interval: return "interval";
  case SpaceKind::Circle: return "circle";
  case SpaceKind::Product: return "product";
  }
  return "?";
}

void DiscreteSpace::finish() {
  factor_offsets_.clear();
  point_count_ = 1;
  ambient_dim_ = 0;
  for (const Factor& f : factors_) {
    factor_offsets_.push_back(ambient_dim_);
    ambient_dim_ += f.ambient_dim();
    point_count_ *= f.resolution;
  }
}

DiscreteSpace DiscreteSpace::interval(int n) {
  if (n < 2)
    throw invalid_resolution_error("interval needs at least 2 grid points, got " +
                                   std::to_string(n));
  DiscreteSpace s;
  s.factors_ = {Factor{SpaceKind::Interval, n}};
  s.finish();
  return s;
}

DiscreteSpace DiscreteSpace::circle(int n) {
  if (n < 3)
    throw invalid_resolution_error("circle needs at least 3 grid points, got " +
                                   std::to_string(n));
  DiscreteSpace s;
  s.factors_ = {Factor{SpaceKind::Circle, n}};
  s.finish();
  return s;
}

DiscreteSpace DiscreteSpace::product(const std::vector<DiscreteSpace>& factors) {
  if (factors.empty())
    throw invalid_argument_error("product of spaces needs at least one factor");
  DiscreteSpace s;
  for (const DiscreteSpace& f : factors)
    s.factors_.insert(s.factors_.end(), f.factors_.begin(), f.factors_.end());
  s.finish();
  return s;
}

SpaceKind DiscreteSpace::kind() const {
  if (factors_.size() == 1) return factors_[0].kind;
  return SpaceKind::Product;
}

void DiscreteSpace::decompose(long long index, std::span<int> digits) const {
  for (int f = static_cast<int>(factors_.size()) - 1; f >= 0; --f) {
    digits[f] = static_cast<int>(index % factors_[f].resolution);
    index /= factors_[f].resolution;
  }
}

long long DiscreteSpace::compose(std::span<const int> digits) const {
  long long index = 0;
  for (std::size_t f = 0; f < factors_.size(); ++f)
    index = index * factors_[f].resolution + digits[f];
  return index;
}

void DiscreteSpace::write_point(long long index, double* out) const {
  if (index < 0 || index >= point_count_)
    throw invalid_point_error("grid index " + std::to_string(index) +
                              " out of range [0, " + std::to_string(point_count_) + ")");
  long long rest = index;
  for (int f = static_cast<int>(factors_.size()) - 1; f >= 0; --f) {
    const Factor& fac = factors_[f];
    const int k = static_cast<int>(rest % fac.resolution);
    rest /= fac.resolution;
    double* dst = out + factor_offsets_[f];
    if (fac.kind == SpaceKind::Interval) {
      dst[0] = static_cast<double>(k) / (fac.resolution - 1);
    } else {
      const double angle = 2.0 * std::numbers::pi * k / fac.resolution;
      dst[0] = std::cos(angle);
      dst[1] = std::sin(angle);
    }
  }
}

std::vector<double> DiscreteSpace::point(long long index) const {
  std::vector<double> out(ambient_dim_);
  write_point(index, out.data());
  return out;
}

std::vector<long long> DiscreteSpace::neighbors(long long index) const {
  if (index < 0 || index >= point_count_)
    throw invalid_point_error("grid index out of range");
  std::vector<int> digits(factors_.size());
  decompose(index, digits);
  std::vector<long long> out;
  for (std::size_t f = 0; f < factors_.size(); ++f) {
    const Factor& fac = factors_[f];
    const int k = digits[f];
    for (int step : {-1, +1}) {
      int k2 = k + step;
      if (fac.kind == SpaceKind::Circle) {
        k2 = (k2 + fac.resolution) % fac.resolution;
      } else if (k2 < 0 || k2 >= fac.resolution) {
        continue;
      }
      if (k2 == k) continue;
      digits[f] = k2;
      out.push_back(compose(digits));
      digits[f] = k;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

double DiscreteSpace::distance(long long a, long long b) const {
  std::vector<double> pa(ambient_dim_), pb(ambient_dim_);
  write_point(a, pa.data());
  write_point(b, pb.data());
  double sum = 0;
  for (int i = 0; i < ambient_dim_; ++i) {
    const double d = pa[i] - pb[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

double DiscreteSpace::grid_spacing() const {
  double h = 0;
  for (const Factor& f : factors_) {
    if (f.kind == SpaceKind::Interval)
      h = std::max(h, 1.0 / (f.resolution - 1));
    else
      h = std::max(h, 2.0 * std::sin(std::numbers::pi / f.resolution));
  }
  return h;
}

double DiscreteSpace::diameter() const {
  double sq = 0;
  for (const Factor& f : factors_) {
    const double d = f.kind == SpaceKind::Interval ? 1.0 : 2.0;
    sq += d * d;
  }
  return std::sqrt(sq);
}

SimplicialComplex::SimplicialComplex(
    long long vertex_count,
    std::vector<std::vector<std::vector<int32_t>>> simplices_by_dim)
    : vertex_count_(vertex_count), simplices_by_dim_(std::move(simplices_by_dim)) {
  for (std::size_t d = 0; d < simplices_by_dim_.size(); ++d) {
    auto& list = simplices_by_dim_[d];
    for (auto& s : list) {
      if (s.size() != d + 2)
        throw invalid_complex_error("simplex arity does not match its dimension");
      std::sort(s.begin(), s.end());
      if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw invalid_complex_error("simplex with repeated vertex");
      if (s.front() < 0 || s.back() >= vertex_count_)
        throw invalid_complex_error("simplex vertex out of range");
    }
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  while (!simplices_by_dim_.empty() && simplices_by_dim_.back().empty())
    simplices_by_dim_.pop_back();
}

long long SimplicialComplex::simplex_count(int dim) const {
  if (dim == 0) return vertex_count_;
  if (dim < 0 || dim > top_dim()) return 0;
  return static_cast<long long>(simplices_by_dim_[dim - 1].size());
}

const std::vector<std::vector<int32_t>>& SimplicialComplex::simplices(int dim) const {
  if (dim < 1 || dim > top_dim())
    throw invalid_dimension_error("no simplices stored for dimension " +
                                  std::to_string(dim));
  return simplices_by_dim_[dim - 1];
}

std::optional<long long> SimplicialComplex::index_of(int dim,
                                                     const std::vector<int32_t>& s) const {
  if (dim == 0) {
    if (s.size() == 1 && s[0] >= 0 && s[0] < vertex_count_) return s[0];
    return std::nullopt;
  }
  if (dim < 1 || dim > top_dim()) return std::nullopt;
  const auto& list = simplices_by_dim_[dim - 1];
  const auto it = std::lower_bound(list.begin(), list.end(), s);
  if (it == list.end() || *it != s) return std::nullopt;
  return static_cast<long long>(it - list.begin());
}

void SimplicialComplex::validate() const {
  for (int dim = 2; dim <= top_dim(); ++dim) {
    for (const auto& s : simplices_by_dim_[dim - 1]) {
      std::vector<int32_t> face(s.size() - 1);
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        std::size_t w = 0;
        for (std::size_t i = 0; i < s.size(); ++i)
          if (i != drop) face[w++] = s[i];
        if (!index_of(dim - 1, face))
          throw invalid_complex_error("missing face of a " + std::to_string(dim) +
                                      "-simplex");
      }
    }
  }
}

SimplicialComplex SimplicialComplex::induced(const std::vector<int32_t>& vertices) const {
  std::vector<int32_t> relabel(vertex_count_, -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] < 0 || vertices[i] >= vertex_count_)
      throw invalid_point_error("induced subcomplex vertex out of range");
    relabel[vertices[i]] = static_cast<int32_t>(i);
  }
  std::vector<std::vector<std::vector<int32_t>>> sub(simplices_by_dim_.size());
  for (std::size_t d = 0; d < simplices_by_dim_.size(); ++d) {
    for (const auto& s : simplices_by_dim_[d]) {
      std::vector<int32_t> mapped;
      mapped.reserve(s.size());
      bool keep = true;
      for (int32_t v : s) {
        if (relabel[v] < 0) {
          keep = false;
          break;
        }
        mapped.push_back(relabel[v]);
      }
      if (keep) sub[d].push_back(std::move(mapped));
    }
  }
  return SimplicialComplex(static_cast<long long>(vertices.size()), std::move(sub));
}

namespace {

// Ordered simplicial product: simplices of A x B are the monotone chains in
// sigma x tau that use every vertex of both, i.e. staircase paths with steps
// (1,0), (0,1), (1,1).  Vertex (u, v) gets global index u * nB + v, matching
// the grid's mixed radix.
void staircase_chains(int p, int q, std::vector<std::vector<std::pair<int, int>>>& out) {
  std::vector<std::pair<int, int>> chain = {{0, 0}};
  // iterative DFS over step choices
  struct Frame { int a, b, next_step; };
  std::vector<Frame> stack = {{0, 0, 0}};
  constexpr int steps[3][2] = {{1, 0}, {0, 1}, {1, 1}};
  while (!stack.empty()) {
    Frame& fr = stack.back();
    if (fr.a == p && fr.b == q) {
      out.push_back(chain);
      stack.pop_back();
      chain.pop_back();
      continue;
    }
    if (fr.next_step >= 3) {
      stack.pop_back();
      chain.pop_back();
      continue;
    }
    const int da = steps[fr.next_step][0], db = steps[fr.next_step][1];
    ++fr.next_step;
    const int na = fr.a + da, nb = fr.b + db;
    if (na > p || nb > q) continue;
    chain.push_back({na, nb});
    stack.push_back({na, nb, 0});
  }
}

SimplicialComplex ordered_product(const SimplicialComplex& A, const SimplicialComplex& B) {
  const long long nB = B.vertex_count();
  const int topA = A.top_dim(), topB = B.top_dim();
  std::vector<std::vector<std::vector<int32_t>>> simplices(topA + topB);

  // chains cache keyed by (p, q)
  std::vector<std::vector<std::vector<std::pair<int, int>>>> chains(
      (topA + 1) * (topB + 1));
  for (int p = 0; p <= topA; ++p)
    for (int q = 0; q <= topB; ++q)
      staircase_chains(p, q, chains[p * (topB + 1) + q]);

  auto emit = [&](const int32_t* sa, int p, const int32_t* sb, int q) {
    for (const auto& chain : chains[p * (topB + 1) + q]) {
      if (chain.size() < 2) continue;
      std::vector<int32_t> s;
      s.reserve(chain.size());
      for (const auto& [a, b] : chain)
        s.push_back(static_cast<int32_t>(sa[a] * nB + sb[b]));
      simplices[chain.size() - 2].push_back(std::move(s));
    }
  };

  for (int p = 0; p <= topA; ++p) {
    for (int q = 0; q <= topB; ++q) {
      if (p == 0 && q == 0) continue;
      if (p == 0) {
        for (int32_t va = 0; va < A.vertex_count(); ++va)
          for (const auto& sb : B.simplices(q)) emit(&va, 0, sb.data(), q);
      } else if (q == 0) {
        for (const auto& sa : A.simplices(p))
          for (int32_t vb = 0; vb < B.vertex_count(); ++vb) emit(sa.data(), p, &vb, 0);
      } else {
        for (const auto& sa : A.simplices(p))
          for (const auto& sb : B.simplices(q)) emit(sa.data(), p, sb.data(), q);
      }
    }
  }
  return SimplicialComplex(A.vertex_count() * nB, std::move(simplices));
}

SimplicialComplex triangulate_factor(const Factor& f) {
  const int n = f.resolution;
  std::vector<std::vector<int32_t>> edges;
  if (f.kind == SpaceKind::Interval) {
    for (int k = 0; k + 1 < n; ++k) edges.push_back({k, k + 1});
  } else {
    for (int k = 0; k < n; ++k)
      edges.push_back({k, (k + 1) % n});
  }
  return SimplicialComplex(n, {std::move(edges)});
}

} // namespace

SimplicialComplex triangulate(const DiscreteSpace& space) {
  const auto& factors = space.factors();
  if (factors.empty())
    throw unsupported_space_error("cannot triangulate a space with no factors");
  SimplicialComplex c = triangulate_factor(factors[0]);
  for (std::size_t f = 1; f < factors.size(); ++f)
    c = ordered_product(c, triangulate_factor(factors[f]));
  return c;
}

} // namespace nashtopo

#include "nctoric/hochschild.hpp"

#include <algorithm>

#include "nctoric/linalg.hpp"

namespace nctoric {

namespace {

constexpr std::size_t kMaxTensors = 300000;

void require(bool ok, const std::string& msg) {
  if (!ok) fail("InvalidAlgebra", msg);
}

void axpy(RationalVector& acc, const Rational& s, const SparseVector& v) {
  for (const auto& [k, x] : v) acc[k] += s * x;
}

// Rank of a family of sparse vectors by incremental elimination on leading entries.
class SparseRank {
 public:
  void insert(std::map<std::size_t, Rational> v) {
    while (!v.empty()) {
      auto lead = v.begin();
      auto it = pivots_.find(lead->first);
      if (it == pivots_.end()) {
        Rational inv = 1 / lead->second;
        for (auto& [k, x] : v) x *= inv;
        pivots_.emplace(lead->first, std::move(v));
        return;
      }
      Rational f = lead->second;
      for (const auto& [k, x] : it->second) {
        Rational& slot = v[k];
        slot -= f * x;
        if (slot == 0) v.erase(k);
      }
    }
  }
  std::size_t rank() const { return pivots_.size(); }

 private:
  std::map<std::size_t, std::map<std::size_t, Rational>> pivots_;
};

// Tensor basis of one chain degree: any label in position 0, allowed labels elsewhere.
struct TensorSpace {
  std::size_t dim = 0;
  std::size_t degree = 0;
  std::optional<std::size_t> excluded;  // unit label in reduced mode

  std::size_t tail_base() const { return excluded ? dim - 1 : dim; }
  std::size_t size() const {
    std::size_t s = dim;
    for (std::size_t i = 0; i < degree; ++i) s *= tail_base();
    return s;
  }
  std::size_t index(const std::vector<std::size_t>& t) const {
    std::size_t idx = t[0];
    for (std::size_t i = 1; i < t.size(); ++i) {
      std::size_t digit = excluded && t[i] > *excluded ? t[i] - 1 : t[i];
      idx = idx * tail_base() + digit;
    }
    return idx;
  }
  std::vector<std::size_t> tensor(std::size_t idx) const {
    std::vector<std::size_t> t(degree + 1);
    for (std::size_t i = degree; i >= 1; --i) {
      std::size_t digit = idx % tail_base();
      idx /= tail_base();
      t[i] = excluded && digit >= *excluded ? digit + 1 : digit;
    }
    t[0] = idx;
    return t;
  }
};

std::size_t required_unit(const FinDimAlgebra& a) {
  auto u = a.unit_index();
  if (!u) fail("UnitNotBasis", "the unit is not a basis vector; use with_unit_basis");
  return *u;
}

bool degenerate(const std::vector<std::size_t>& t, std::size_t unit) {
  return std::find(t.begin() + 1, t.end(), unit) != t.end();
}

ChainElement normalized(const FinDimAlgebra& a, const ChainElement& x) {
  if (!x.reduced) return x;
  std::size_t u = required_unit(a);
  ChainElement out{x.degree, true, {}};
  for (const auto& [t, c] : x.terms)
    if (!degenerate(t, u)) out.terms.emplace(t, c);
  return out;
}

void boundary_term(const FinDimAlgebra& a, const std::vector<std::size_t>& t, const Rational& c, ChainElement& out) {
  const std::size_t n = t.size() - 1;
  for (std::size_t i = 0; i < n; ++i) {
    Rational s = i % 2 == 0 ? c : Rational(-c);
    for (const auto& [k, x] : a.product(t[i], t[i + 1])) {
      std::vector<std::size_t> r(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(i));
      r.push_back(k);
      r.insert(r.end(), t.begin() + static_cast<std::ptrdiff_t>(i) + 2, t.end());
      out.add(r, s * x);
    }
  }
  Rational s = n % 2 == 0 ? c : Rational(-c);
  for (const auto& [k, x] : a.product(t[n], t[0])) {
    std::vector<std::size_t> r{k};
    r.insert(r.end(), t.begin() + 1, t.begin() + static_cast<std::ptrdiff_t>(n));
    out.add(r, s * x);
  }
}

void b_term(std::size_t unit, const std::vector<std::size_t>& t, const Rational& c, ChainElement& out) {
  const std::size_t n = t.size() - 1;
  for (std::size_t i = 0; i <= n; ++i) {
    std::vector<std::size_t> r{unit};
    r.insert(r.end(), t.begin() + static_cast<std::ptrdiff_t>(i), t.end());
    r.insert(r.end(), t.begin(), t.begin() + static_cast<std::ptrdiff_t>(i));
    out.add(r, (n * i) % 2 == 0 ? c : Rational(-c));
  }
}

ChainElement drop_degenerate(const FinDimAlgebra& a, ChainElement x) {
  return x.reduced ? normalized(a, x) : x;
}

ChainElement boundary_of(const FinDimAlgebra& a, const std::vector<std::size_t>& t, bool reduced) {
  ChainElement out{t.size() - 2, reduced, {}};
  boundary_term(a, t, 1, out);
  return drop_degenerate(a, std::move(out));
}

ChainElement b_of(const FinDimAlgebra& a, std::size_t unit, const std::vector<std::size_t>& t, bool reduced) {
  ChainElement out{t.size(), reduced, {}};
  b_term(unit, t, 1, out);
  return drop_degenerate(a, std::move(out));
}

void guard(const TensorSpace& s) {
  std::size_t size = s.dim;
  for (std::size_t i = 0; i < s.degree; ++i) {
    size *= s.tail_base();
    if (size > kMaxTensors) fail("ComplexTooLarge", "chain space exceeds the size guard");
  }
}

std::size_t boundary_rank(const FinDimAlgebra& a, std::size_t k, std::optional<std::size_t> excluded) {
  TensorSpace src{a.dim(), k, excluded}, dst{a.dim(), k - 1, excluded};
  guard(src);
  SparseRank r;
  for (std::size_t idx = 0; idx < src.size(); ++idx) {
    ChainElement img = boundary_of(a, src.tensor(idx), excluded.has_value());
    std::map<std::size_t, Rational> v;
    for (const auto& [t, c] : img.terms) v.emplace(dst.index(t), c);
    r.insert(std::move(v));
  }
  return r.rank();
}

// Total complex of C^red[u]/u^N with differential d + uB.
struct TotalDegree {
  std::vector<TensorSpace> parts;  // parts[j] carries u^j
  std::vector<std::size_t> offsets;
  std::vector<bool> present;
  std::size_t size = 0;
};

TotalDegree total_degree(const FinDimAlgebra& a, long t, std::size_t N, std::size_t unit) {
  TotalDegree d;
  for (std::size_t j = 0; j < N; ++j) {
    long chain = t + 2 * static_cast<long>(j);
    bool ok = chain >= 0;
    TensorSpace s{a.dim(), ok ? static_cast<std::size_t>(chain) : 0, unit};
    if (ok) guard(s);
    d.parts.push_back(s);
    d.present.push_back(ok);
    d.offsets.push_back(d.size);
    if (ok) d.size += s.size();
  }
  return d;
}

std::size_t total_rank(const FinDimAlgebra& a, long t, std::size_t N, std::size_t unit) {
  TotalDegree src = total_degree(a, t, N, unit), dst = total_degree(a, t - 1, N, unit);
  SparseRank r;
  for (std::size_t j = 0; j < N; ++j) {
    if (!src.present[j]) continue;
    const TensorSpace& s = src.parts[j];
    for (std::size_t idx = 0; idx < s.size(); ++idx) {
      auto tensor = s.tensor(idx);
      std::map<std::size_t, Rational> v;
      if (s.degree >= 1) {
        for (const auto& [x, c] : boundary_of(a, tensor, true).terms)
          v[dst.offsets[j] + dst.parts[j].index(x)] += c;
      }
      if (j + 1 < N) {
        for (const auto& [x, c] : b_of(a, unit, tensor, true).terms)
          v[dst.offsets[j + 1] + dst.parts[j + 1].index(x)] += c;
      }
      std::erase_if(v, [](const auto& e) { return e.second == 0; });
      r.insert(std::move(v));
    }
  }
  return r.rank();
}

}  // namespace

FinDimAlgebra::FinDimAlgebra(std::vector<std::string> labels, const std::vector<std::vector<RationalVector>>& c,
                             RationalVector unit)
    : labels_(std::move(labels)), unit_(std::move(unit)) {
  const std::size_t d = labels_.size();
  require(d > 0, "dimension must be positive");
  require(c.size() == d && unit_.size() == d, "structure constants and unit must match the dimension");
  products_.resize(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    require(c[i].size() == d, "structure constants must be D x D x D");
    for (std::size_t j = 0; j < d; ++j) {
      require(c[i][j].size() == d, "structure constants must be D x D x D");
      for (std::size_t k = 0; k < d; ++k)
        if (c[i][j][k] != 0) products_[i * d + j].emplace_back(k, c[i][j][k]);
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    RationalVector e(d);
    e[i] = 1;
    require(multiply(unit_, e) == e && multiply(e, unit_) == e, "unit law fails for " + labels_[i]);
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        RationalVector left(d), right(d);
        for (const auto& [p, x] : product(i, j)) axpy(left, x, product(p, k));
        for (const auto& [p, x] : product(j, k)) axpy(right, x, product(i, p));
        require(left == right, "associativity fails for (" + labels_[i] + ", " + labels_[j] + ", " + labels_[k] + ")");
      }
}

std::vector<std::vector<RationalVector>> FinDimAlgebra::structure_constants() const {
  const std::size_t d = dim();
  std::vector<std::vector<RationalVector>> c(d, std::vector<RationalVector>(d, RationalVector(d)));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& [k, x] : product(i, j)) c[i][j][k] = x;
  return c;
}

std::optional<std::size_t> FinDimAlgebra::unit_index() const {
  std::optional<std::size_t> idx;
  for (std::size_t k = 0; k < unit_.size(); ++k) {
    if (unit_[k] == 0) continue;
    if (unit_[k] != 1 || idx) return std::nullopt;
    idx = k;
  }
  return idx;
}

RationalVector FinDimAlgebra::multiply(const RationalVector& x, const RationalVector& y) const {
  RationalVector out(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j)
      if (y[j] != 0) axpy(out, x[i] * y[j], product(i, j));
  }
  return out;
}

FinDimAlgebra change_basis(const FinDimAlgebra& a, const RationalMatrix& p) {
  const std::size_t d = a.dim();
  if (p.rows() != d || p.cols() != d) fail("InvalidAlgebra", "basis change must be D x D");
  auto q = inverse(p);
  if (!q) fail("InvalidAlgebra", "basis change is singular");
  auto to_new = [&](const RationalVector& old) {
    RationalVector out(d);
    for (std::size_t k = 0; k < d; ++k)
      if (old[k] != 0)
        for (std::size_t l = 0; l < d; ++l) out[l] += old[k] * (*q)(k, l);
    return out;
  };
  std::vector<std::vector<RationalVector>> c(d, std::vector<RationalVector>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) c[i][j] = to_new(a.multiply(p.row_vector(i), p.row_vector(j)));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < d; ++i) labels.push_back("b" + std::to_string(i + 1));
  return FinDimAlgebra(labels, c, to_new(a.unit()));
}

FinDimAlgebra with_unit_basis(const FinDimAlgebra& a) {
  if (a.unit_index()) return a;
  const std::size_t d = a.dim();
  std::size_t p = 0;
  while (a.unit()[p] == 0) ++p;
  RationalMatrix m = RationalMatrix::identity(d);
  for (std::size_t k = 0; k < d; ++k) m(p, k) = a.unit()[k];
  FinDimAlgebra out = change_basis(a, m);
  std::vector<std::string> labels = a.labels();
  labels[p] = "1";
  return FinDimAlgebra(labels, out.structure_constants(), out.unit());
}

void ChainElement::add(const std::vector<std::size_t>& tensor, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, fresh] = terms.emplace(tensor, coeff);
  if (fresh) return;
  it->second += coeff;
  if (it->second == 0) terms.erase(it);
}

ChainElement& ChainElement::operator+=(const ChainElement& o) {
  for (const auto& [t, c] : o.terms) add(t, c);
  return *this;
}

ChainElement hochschild_boundary(const FinDimAlgebra& a, const ChainElement& x) {
  if (x.degree == 0) fail("DegreeZero", "the boundary of a degree-0 chain is not defined");
  ChainElement in = normalized(a, x);
  ChainElement out{x.degree - 1, x.reduced, {}};
  for (const auto& [t, c] : in.terms) boundary_term(a, t, c, out);
  return drop_degenerate(a, std::move(out));
}

ChainElement connes_B(const FinDimAlgebra& a, const ChainElement& x) {
  std::size_t unit = required_unit(a);
  ChainElement in = normalized(a, x);
  ChainElement out{x.degree + 1, x.reduced, {}};
  for (const auto& [t, c] : in.terms) b_term(unit, t, c, out);
  return drop_degenerate(a, std::move(out));
}

std::vector<std::size_t> hh_ranks(const FinDimAlgebra& a, std::size_t up_to, bool reduced) {
  if (up_to > 6) fail("ComplexTooLarge", "hh_ranks is limited to degrees up to 6");
  std::optional<std::size_t> excluded;
  if (reduced) excluded = required_unit(a);
  std::vector<std::size_t> boundary(up_to + 2, 0);
  for (std::size_t k = 1; k <= up_to + 1; ++k) boundary[k] = boundary_rank(a, k, excluded);
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k <= up_to; ++k) {
    TensorSpace s{a.dim(), k, excluded};
    out.push_back(s.size() - boundary[k] - boundary[k + 1]);
  }
  return out;
}

HPResult hp_truncated(const FinDimAlgebra& input, std::size_t N) {
  if (N == 0) fail("OutOfRange", "truncation order must be at least 1");
  if (2 * N + 1 > 13) fail("ComplexTooLarge", "truncation order too large");
  FinDimAlgebra a = with_unit_basis(input);
  std::size_t unit = *a.unit_index();
  std::size_t r0 = total_rank(a, 0, N, unit), r1 = total_rank(a, 1, N, unit), r2 = total_rank(a, 2, N, unit);
  HPResult h;
  h.N = N;
  h.even = total_degree(a, 0, N, unit).size - r0 - r1;
  h.odd = total_degree(a, 1, N, unit).size - r1 - r2;
  return h;
}

HPReport hp_stabilization(const FinDimAlgebra& a, std::size_t N_max) {
  HPReport r;
  for (std::size_t N = 1; N <= N_max; ++N) r.by_N.push_back(hp_truncated(a, N));
  r.stabilized = r.by_N.size() >= 2 && r.by_N[r.by_N.size() - 1].even == r.by_N[r.by_N.size() - 2].even &&
                 r.by_N[r.by_N.size() - 1].odd == r.by_N[r.by_N.size() - 2].odd;
  return r;
}

void validate_groupoid(const FiniteGroupoid& g) {
  auto bad = [](const std::string& m) { fail("InvalidGroupoid", m); };
  const std::size_t n = g.source.size();
  if (g.target.size() != n || g.compose.size() != n) bad("arrow tables have different lengths");
  for (std::size_t a = 0; a < n; ++a) {
    if (g.source[a] >= g.objects || g.target[a] >= g.objects) bad("arrow endpoint out of range");
    if (g.compose[a].size() != n) bad("composition table must be square");
    for (std::size_t b = 0; b < n; ++b) {
      const auto& c = g.compose[a][b];
      bool composable = g.source[a] == g.target[b];
      if (composable != c.has_value()) bad("composition defined exactly when source(a) == target(b)");
      if (c && (*c >= n || g.source[*c] != g.source[b] || g.target[*c] != g.target[a])) bad("composite has wrong endpoints");
    }
  }
  std::vector<std::size_t> identity(g.objects, n);
  for (std::size_t x = 0; x < g.objects; ++x)
    for (std::size_t e = 0; e < n && identity[x] == n; ++e) {
      if (g.source[e] != x || g.target[e] != x) continue;
      bool ok = true;
      for (std::size_t a = 0; a < n && ok; ++a) {
        if (g.target[a] == x && g.compose[e][a] != a) ok = false;
        if (g.source[a] == x && g.compose[a][e] != a) ok = false;
      }
      if (ok) identity[x] = e;
    }
  for (auto e : identity)
    if (e == n) bad("an object has no identity arrow");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        if (!g.compose[a][b] || !g.compose[b][c]) continue;
        if (g.compose[*g.compose[a][b]][c] != g.compose[a][*g.compose[b][c]]) bad("composition is not associative");
      }
  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n && !found; ++b)
      found = g.compose[a][b] == identity[g.target[a]] && g.compose[b][a] == identity[g.source[a]];
    if (!found) bad("an arrow has no inverse");
  }
}

FiniteGroupoid pair_groupoid(std::size_t n) {
  FiniteGroupoid g;
  g.objects = n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      g.target.push_back(i);
      g.source.push_back(j);
      g.labels.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  const std::size_t m = n * n;
  g.compose.assign(m, std::vector<std::optional<std::size_t>>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (g.source[a] == g.target[b]) g.compose[a][b] = g.target[a] * n + g.source[b];
  return g;
}

FiniteGroupoid cyclic_group_groupoid(std::size_t order) {
  FiniteGroupoid g;
  g.objects = 1;
  g.source.assign(order, 0);
  g.target.assign(order, 0);
  g.compose.assign(order, std::vector<std::optional<std::size_t>>(order));
  for (std::size_t a = 0; a < order; ++a) {
    g.labels.push_back(a == 0 ? "1" : "g^" + std::to_string(a));
    for (std::size_t b = 0; b < order; ++b) g.compose[a][b] = (a + b) % order;
  }
  return g;
}

FiniteGroupoid discrete_groupoid(std::size_t n) {
  FiniteGroupoid g;
  g.objects = n;
  g.compose.assign(n, std::vector<std::optional<std::size_t>>(n));
  for (std::size_t x = 0; x < n; ++x) {
    g.source.push_back(x);
    g.target.push_back(x);
    g.labels.push_back("id" + std::to_string(x + 1));
    g.compose[x][x] = x;
  }
  return g;
}

FinDimAlgebra convolution_algebra(const FiniteGroupoid& g) {
  validate_groupoid(g);
  const std::size_t n = g.source.size();
  std::vector<std::vector<RationalVector>> c(n, std::vector<RationalVector>(n, RationalVector(n)));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (g.compose[a][b]) c[a][b][*g.compose[a][b]] = 1;
  RationalVector unit(n);
  for (std::size_t a = 0; a < n; ++a)
    if (g.source[a] == g.target[a] && g.compose[a][a] == a) unit[a] = 1;
  std::vector<std::string> labels = g.labels;
  labels.resize(n);
  for (std::size_t a = 0; a < n; ++a)
    if (labels[a].empty()) labels[a] = "a" + std::to_string(a + 1);
  return FinDimAlgebra(labels, c, unit);
}

}  // namespace nctoric

#include "coarsekit/zoo.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

namespace coarsekit {

namespace {

constexpr Distance kInf = std::numeric_limits<Distance>::max() / 4;

Distance checked_mul(Distance a, Distance b) {
  Distance out;
  if (__builtin_mul_overflow(a, b, &out) || out > kInf) throw UsageError("growth function overflow");
  return out;
}

Distance checked_add(Distance a, Distance b) {
  Distance out;
  if (__builtin_add_overflow(a, b, &out) || out > kInf) throw UsageError("growth function overflow");
  return out;
}

// floor(sqrt(v)) for v >= 0
Coord isqrt(Coord v) {
  if (v <= 0) return 0;
  auto s = static_cast<Coord>(std::sqrt(static_cast<long double>(v)));
  while (s * s > v) --s;
  while ((s + 1) * (s + 1) <= v) ++s;
  return s;
}

// ceil(sqrt(v)) for v >= 0
Coord isqrt_ceil(Coord v) {
  const Coord s = isqrt(v);
  return s * s == v ? s : s + 1;
}

bool is_square(Coord v, Coord& root) {
  if (v < 1) return false;
  root = isqrt(v);
  return root * root == v;
}

const std::array<Distance, TernarySpace::kMaxDigit + 2>& pow3_table() {
  static const auto table = [] {
    std::array<Distance, TernarySpace::kMaxDigit + 2> t{};
    t[0] = 1;
    for (std::size_t i = 1; i < t.size(); ++i) t[i] = t[i - 1] * 3;
    return t;
  }();
  return table;
}

}  // namespace

// ---------------------------------------------------------------------------

Distance GrowthFunction::operator()(std::int64_t n) const {
  switch (form) {
    case Form::Linear: return checked_add(checked_mul(a, n), b);
    case Form::Quadratic: return checked_add(checked_mul(a, checked_mul(n, n)), b);
    case Form::Exponential: {
      Distance p = 1;
      for (std::int64_t i = 0; i < n; ++i) p = checked_mul(p, base);
      return checked_add(checked_mul(a, p), b);
    }
  }
  return 0;
}

void GrowthFunction::validate() const {
  if (a < 1) throw UsageError("growth function: coefficient a must be >= 1");
  if (form == Form::Exponential && base < 2) throw UsageError("growth function: base must be >= 2");
  if ((*this)(1) < 0) throw UsageError("growth function: value at n=1 must be nonnegative");
}

std::string to_string(GrowthFunction::Form f) {
  switch (f) {
    case GrowthFunction::Form::Linear: return "linear";
    case GrowthFunction::Form::Quadratic: return "quadratic";
    case GrowthFunction::Form::Exponential: return "exponential";
  }
  return "linear";
}

// ---------------------------------------------------------------------------

GridSpace::GridSpace(bool is_signed, int dims) : signed_(is_signed), dims_(dims) {
  if (dims < 1) throw UsageError("grid: dimension must be >= 1");
}

bool GridSpace::contains(const Coords& p) const {
  if (static_cast<int>(p.size()) != dims_) return false;
  return signed_ || std::all_of(p.begin(), p.end(), [](Coord c) { return c >= 0; });
}

Distance GridSpace::distance(const Coords& a, const Coords& b) const {
  Distance d = 0;
  for (int i = 0; i < dims_; ++i) d += std::abs(a[i] - b[i]);
  return d;
}

std::vector<Coords> GridSpace::ball(const Coords& center, Distance r) const {
  std::vector<Coords> out;
  Coords cur(dims_);
  auto rec = [&](auto&& self, int i, Distance budget) -> void {
    if (i == dims_) {
      out.push_back(cur);
      return;
    }
    const Coord lo = signed_ ? center[i] - budget : std::max<Coord>(0, center[i] - budget);
    for (Coord v = lo; v <= center[i] + budget; ++v) {
      cur[i] = v;
      self(self, i + 1, budget - std::abs(v - center[i]));
    }
  };
  if (r >= 0) rec(rec, 0, r);
  return out;
}

// ---------------------------------------------------------------------------

FreeGroupSpace::FreeGroupSpace(int rank) : rank_(rank) {
  if (rank < 1) throw UsageError("free_group: rank must be >= 1");
}

bool FreeGroupSpace::contains(const Coords& p) const {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0 || std::abs(p[i]) > rank_) return false;
    if (i > 0 && p[i] == -p[i - 1]) return false;
  }
  return true;
}

Distance FreeGroupSpace::distance(const Coords& a, const Coords& b) const {
  std::size_t c = 0;
  while (c < a.size() && c < b.size() && a[c] == b[c]) ++c;
  return static_cast<Distance>(a.size() + b.size() - 2 * c);
}

std::vector<Coords> FreeGroupSpace::ball(const Coords& center, Distance r) const {
  std::vector<Coords> out;
  if (r < 0) return out;
  const auto len = static_cast<Distance>(center.size());
  Coords word;
  // Extend `word` by reduced suffixes of length <= budget.
  auto extend = [&](auto&& self, Distance budget, Coord forbidden_first, bool first) -> void {
    out.push_back(word);
    if (budget == 0) return;
    for (Coord g = -rank_; g <= rank_; ++g) {
      if (g == 0) continue;
      if (!word.empty() && g == -word.back()) continue;
      if (first && g == forbidden_first) continue;
      word.push_back(g);
      self(self, budget - 1, 0, false);
      word.pop_back();
    }
  };
  for (Distance k = 0; k <= std::min(r, len); ++k) {
    word.assign(center.begin(), center.end() - k);
    const Coord forbidden = k > 0 ? center[len - k] : 0;
    extend(extend, r - k, forbidden, true);
  }
  return out;
}

std::string FreeGroupSpace::label(const Coords& p) const {
  if (p.empty()) return "e";
  std::string s;
  for (Coord g : p) s += static_cast<char>(g > 0 ? 'a' + (g - 1) : 'A' + (-g - 1));
  return s;
}

// ---------------------------------------------------------------------------

Distance TernarySpace::value(Coord mask) {
  const auto& p3 = pow3_table();
  Distance v = 0;
  for (int i = 0; i < kMaxDigit; ++i) {
    if ((mask >> i) & 1) v += p3[i + 1];
  }
  return v;
}

Distance TernarySpace::radius_for_digits(int digits) {
  if (digits < 0 || digits > kMaxDigit) throw UsageError("M: digit horizon out of range");
  return (pow3_table()[digits + 1] - 3) / 2;
}

bool TernarySpace::contains(const Coords& p) const {
  return p.size() == 1 && p[0] >= 0 && p[0] < (Coord{1} << kMaxDigit);
}

Distance TernarySpace::distance(const Coords& a, const Coords& b) const {
  return std::abs(value(a[0]) - value(b[0]));
}

std::vector<Coords> TernarySpace::ball(const Coords& center, Distance r) const {
  std::vector<Coords> out;
  if (r < 0) return out;
  const auto& p3 = pow3_table();
  const Distance v = value(center[0]);
  const Distance lo = v - r;
  const Distance hi = r > kInf - v ? kInf : v + r;
  // Digits are fixed from the top down; `rest` bounds what lower digits can add.
  auto rec = [&](auto&& self, int digit, Distance partial, Coord mask) -> void {
    if (digit == 0) {
      if (partial >= lo && partial <= hi) out.push_back({mask});
      return;
    }
    const Distance rest = (p3[digit] - 3) / 2;  // sum of 3^1..3^(digit-1)
    for (int bit = 0; bit <= 1; ++bit) {
      const Distance s = partial + (bit ? p3[digit] : 0);
      if (s > hi || s + rest < lo) continue;
      self(self, digit - 1, s, bit ? (mask | (Coord{1} << (digit - 1))) : mask);
    }
  };
  rec(rec, kMaxDigit, 0, 0);
  return out;
}

std::string TernarySpace::label(const Coords& p) const {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < kMaxDigit; ++i) {
    if ((p[0] >> i) & 1) {
      s += (first ? "" : " ") + std::to_string(i + 1);
      first = false;
    }
  }
  return s + "}";
}

// ---------------------------------------------------------------------------

SquaresSpace::SquaresSpace(int k) : k_(k) {
  if (k < 1) throw UsageError("Mk: k must be >= 1");
}

Coords SquaresSpace::basepoint() const {
  Coords c(k_);
  for (int i = 0; i < k_; ++i) c[i] = Coord{i + 1} * (i + 1);
  return c;
}

bool SquaresSpace::contains(const Coords& p) const {
  if (static_cast<int>(p.size()) != k_) return false;
  Coord prev = 0;
  for (Coord v : p) {
    Coord root;
    if (!is_square(v, root) || root <= prev) return false;
    prev = root;
  }
  return true;
}

Distance SquaresSpace::distance(const Coords& a, const Coords& b) const {
  Distance d = 0;
  for (int i = 0; i < k_; ++i) d += std::abs(a[i] - b[i]);
  return d;
}

std::vector<Coords> SquaresSpace::ball(const Coords& center, Distance r) const {
  std::vector<Coords> out;
  if (r < 0) return out;
  Coords cur(k_);
  auto rec = [&](auto&& self, int i, Coord prev_root, Distance budget) -> void {
    if (i == k_) {
      out.push_back(cur);
      return;
    }
    const Coord c = center[i];
    const Coord lo = std::max(prev_root + 1, isqrt_ceil(std::max<Coord>(c - budget, 1)));
    const Coord hi = isqrt(c + budget);
    for (Coord n = lo; n <= hi; ++n) {
      cur[i] = n * n;
      self(self, i + 1, n, budget - std::abs(n * n - c));
    }
  };
  rec(rec, 0, 0, r);
  return out;
}

// ---------------------------------------------------------------------------

int HalfStratumSpace::dyadic_class(Coord k) {
  int v = 0;
  while (k > 0 && (k & 1) == 0) {
    k >>= 1;
    ++v;
  }
  return v + 1;
}

bool HalfStratumSpace::contains(const Coords& p) const {
  if (p.size() != 2) return false;
  Coord k;
  if (!is_square(p[1], k)) return false;
  return p[0] == 1 || p[0] == dyadic_class(k);
}

Distance HalfStratumSpace::distance(const Coords& a, const Coords& b) const {
  return std::abs(a[0] - b[0]) + std::abs(a[1] - b[1]);
}

std::vector<Coords> HalfStratumSpace::ball(const Coords& center, Distance r) const {
  std::vector<Coords> out;
  if (r < 0) return out;
  const Coord lo = isqrt_ceil(std::max<Coord>(center[1] - r, 1));
  const Coord hi = isqrt(center[1] + r);
  for (Coord k = std::max<Coord>(lo, 1); k <= hi; ++k) {
    const Coord sq = k * k;
    const Distance dy = std::abs(sq - center[1]);
    const Coord n = dyadic_class(k);
    if (dy + std::abs(1 - center[0]) <= r) out.push_back({1, sq});
    if (n != 1 && dy + std::abs(n - center[0]) <= r) out.push_back({n, sq});
  }
  return out;
}

// ---------------------------------------------------------------------------

FiniteMetricSpace::FiniteMetricSpace(std::vector<std::string> labels, std::vector<std::vector<Distance>> matrix)
    : labels_(std::move(labels)), matrix_(std::move(matrix)) {
  const std::size_t k = matrix_.size();
  if (k == 0) throw UsageError("finite metric: empty pattern");
  if (labels_.empty()) {
    for (std::size_t i = 0; i < k; ++i) labels_.push_back(std::to_string(i));
  }
  if (labels_.size() != k) throw UsageError("finite metric: label count does not match matrix size");
  for (const auto& row : matrix_) {
    if (row.size() != k) throw UsageError("finite metric: distance matrix is not square");
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const Distance d = matrix_[i][j];
      if (d < 0 || d != matrix_[j][i] || ((d == 0) != (i == j))) {
        throw UsageError("finite metric: matrix is not a metric at (" + std::to_string(i) + "," +
                         std::to_string(j) + ")");
      }
      for (std::size_t l = 0; l < k; ++l) {
        if (matrix_[i][l] > d + matrix_[j][l]) {
          throw UsageError("finite metric: triangle inequality fails at (" + std::to_string(i) + "," +
                           std::to_string(j) + "," + std::to_string(l) + ")");
        }
      }
    }
  }
}

bool FiniteMetricSpace::contains(const Coords& p) const {
  return p.size() == 1 && p[0] >= 0 && static_cast<std::size_t>(p[0]) < labels_.size();
}

Distance FiniteMetricSpace::distance(const Coords& a, const Coords& b) const {
  return matrix_[a[0]][b[0]];
}

std::vector<Coords> FiniteMetricSpace::ball(const Coords& center, Distance r) const {
  std::vector<Coords> out;
  for (std::size_t q = 0; q < labels_.size(); ++q) {
    if (matrix_[center[0]][q] <= r) out.push_back({static_cast<Coord>(q)});
  }
  return out;
}

std::string FiniteMetricSpace::label(const Coords& p) const { return labels_.at(p[0]); }

Distance FiniteMetricSpace::diameter() const {
  Distance d = 0;
  for (const auto& row : matrix_) d = std::max(d, *std::max_element(row.begin(), row.end()));
  return d;
}

Distance FiniteMetricSpace::eccentricity(std::size_t q) const {
  return *std::max_element(matrix_.at(q).begin(), matrix_.at(q).end());
}

// ---------------------------------------------------------------------------

CoarseUnionSpace::CoarseUnionSpace(std::vector<SpacePtr> components, GrowthFunction spoke)
    : components_(std::move(components)), spoke_(spoke) {
  if (components_.empty()) throw UsageError("coarse_union: no components");
  for (const auto& c : components_) {
    if (!c) throw UsageError("coarse_union: null component");
  }
  spoke_.validate();
  for (std::size_t n = 1; n <= components_.size(); ++n) spoke_(static_cast<std::int64_t>(n));
}

Coords CoarseUnionSpace::basepoint() const {
  Coords c{1};
  const Coords p = components_.front()->basepoint();
  c.insert(c.end(), p.begin(), p.end());
  return c;
}

bool CoarseUnionSpace::contains(const Coords& p) const {
  if (p.empty() || p[0] < 1 || static_cast<std::size_t>(p[0]) > components_.size()) return false;
  return components_[p[0] - 1]->contains(Coords(p.begin() + 1, p.end()));
}

Distance CoarseUnionSpace::distance(const Coords& a, const Coords& b) const {
  const Coords ca(a.begin() + 1, a.end()), cb(b.begin() + 1, b.end());
  const auto& xa = *components_[a[0] - 1];
  if (a[0] == b[0]) return xa.distance(ca, cb);
  const auto& xb = *components_[b[0] - 1];
  return xa.distance(ca, xa.basepoint()) + spoke_(a[0]) + spoke_(b[0]) + xb.distance(xb.basepoint(), cb);
}

std::vector<Coords> CoarseUnionSpace::ball(const Coords& center, Distance r) const {
  std::vector<Coords> out;
  if (r < 0) return out;
  const Coord n = center[0];
  const Coords c(center.begin() + 1, center.end());
  const auto& xn = *components_[n - 1];
  auto emit = [&](Coord m, std::vector<Coords> pts) {
    for (auto& p : pts) {
      Coords q{m};
      q.insert(q.end(), p.begin(), p.end());
      out.push_back(std::move(q));
    }
  };
  emit(n, xn.ball(c, r));
  const Distance to_hub = xn.distance(c, xn.basepoint()) + spoke_(n);
  for (std::size_t m = 1; m <= components_.size(); ++m) {
    if (static_cast<Coord>(m) == n) continue;
    const Distance reach = to_hub + spoke_(static_cast<std::int64_t>(m));
    if (reach > r) {
      if (static_cast<Coord>(m) > n) break;  // spoke lengths increase
      continue;
    }
    const auto& xm = *components_[m - 1];
    emit(static_cast<Coord>(m), xm.ball(xm.basepoint(), r - reach));
  }
  return out;
}

std::string CoarseUnionSpace::label(const Coords& p) const {
  return std::to_string(p[0]) + ":" + components_[p[0] - 1]->label(Coords(p.begin() + 1, p.end()));
}

// ---------------------------------------------------------------------------

std::string SpaceSpec::kind() const {
  static constexpr const char* names[] = {"grid",   "free_group", "M",        "Mk",
                                          "M32",    "finite",     "clusters", "coarse_union"};
  return names[shape.index()];
}

namespace {

SpacePtr make_finite(const FiniteSpec& f) { return std::make_shared<FiniteMetricSpace>(f.labels, f.distances); }

struct SpaceMaker {
  SpacePtr operator()(const GridSpec& g) const { return std::make_shared<GridSpace>(g.is_signed, g.dims); }
  SpacePtr operator()(const FreeGroupSpec& g) const { return std::make_shared<FreeGroupSpace>(g.rank); }
  SpacePtr operator()(const TernarySpec&) const { return std::make_shared<TernarySpace>(); }
  SpacePtr operator()(const SquaresSpec& s) const { return std::make_shared<SquaresSpace>(s.k); }
  SpacePtr operator()(const HalfStratumSpec&) const { return std::make_shared<HalfStratumSpace>(); }
  SpacePtr operator()(const FiniteSpec& f) const { return make_finite(f); }
  SpacePtr operator()(const ClusterSpec& c) const {
    if (c.count < 1) throw UsageError("clusters: count must be >= 1");
    auto pattern = make_finite(c.pattern);
    return std::make_shared<CoarseUnionSpace>(std::vector<SpacePtr>(c.count, pattern), c.gap);
  }
  SpacePtr operator()(const CoarseUnionSpec& u) const {
    std::vector<SpacePtr> parts;
    for (const auto& s : u.components) parts.push_back(make_space(s));
    return std::make_shared<CoarseUnionSpace>(std::move(parts), u.spoke);
  }
};

}  // namespace

SpacePtr make_space(const SpaceSpec& spec) { return std::visit(SpaceMaker{}, spec.shape); }

Distance cluster_space_radius(const FiniteMetricSpace& pattern, const GrowthFunction& gap, int count) {
  Distance r = pattern.eccentricity(0);
  for (int n = 2; n <= count; ++n) r = std::max(r, gap(1) + gap(n) + pattern.eccentricity(0));
  return r;
}

Window build_window(const SpaceSpec& spec) {
  auto space = make_space(spec);
  if (std::holds_alternative<TernarySpec>(spec.shape)) {
    if (!spec.horizon) throw UsageError("M: horizon (max support index) required");
    if (*spec.horizon < 1) throw UsageError("M: horizon must be >= 1");
    return Window(space, TernarySpace::radius_for_digits(static_cast<int>(*spec.horizon)));
  }
  if (const auto* c = std::get_if<ClusterSpec>(&spec.shape)) {
    const auto& u = static_cast<const CoarseUnionSpace&>(*space);
    const auto& p = static_cast<const FiniteMetricSpace&>(u.component(1));
    return Window(space, spec.horizon.value_or(cluster_space_radius(p, c->gap, c->count)));
  }
  if (std::holds_alternative<FiniteSpec>(spec.shape)) {
    const auto& p = static_cast<const FiniteMetricSpace&>(*space);
    return Window(space, spec.horizon.value_or(p.eccentricity(0)));
  }
  if (!spec.horizon) throw UsageError(spec.kind() + ": horizon required");
  if (*spec.horizon < 0) throw UsageError(spec.kind() + ": horizon must be >= 0");
  return Window(space, *spec.horizon);
}

Window make_grid(bool is_signed, int k, Distance horizon) {
  return build_window({GridSpec{is_signed, k}, horizon});
}

Window make_free_group(int rank, Distance horizon) { return build_window({FreeGroupSpec{rank}, horizon}); }

Window make_M(int digits) { return build_window({TernarySpec{}, digits}); }

Window make_Mk(int k, Distance horizon) { return build_window({SquaresSpec{k}, horizon}); }

Window make_M32(Distance horizon) { return build_window({HalfStratumSpec{}, horizon}); }

Window make_cluster_space(const FiniteSpec& pattern, GrowthFunction gap, int count,
                          std::optional<Distance> horizon) {
  return build_window({ClusterSpec{pattern, gap, count}, horizon});
}

Window make_coarse_union(std::vector<SpacePtr> components, GrowthFunction spoke, Distance horizon) {
  return Window(std::make_shared<CoarseUnionSpace>(std::move(components), spoke), horizon);
}

}  // namespace coarsekit

#include "coarsekit/roe.hpp"

#include <algorithm>
#include <stdexcept>

namespace coarsekit {

// ---------------------------------------------------------------------------
// Band operators.

BandOperator BandOperator::from_entries(const Window& w, std::map<Key, Rational> entries) {
  BandOperator op;
  for (auto it = entries.begin(); it != entries.end();) {
    if (it->first.first >= w.size() || it->first.second >= w.size()) {
      throw UsageError("band operator: index outside the window");
    }
    it = (it->second == 0) ? entries.erase(it) : std::next(it);
  }
  op.entries_ = std::move(entries);
  op.propagation_ = op.recompute_propagation(w);
  return op;
}

Rational BandOperator::at(PointId row, PointId col) const {
  auto it = entries_.find({row, col});
  return it == entries_.end() ? Rational(0) : it->second;
}

Distance BandOperator::recompute_propagation(const Window& w) const {
  Distance p = 0;
  for (const auto& [key, v] : entries_) p = std::max(p, w.distance(key.first, key.second));
  return p;
}

BandOperator DiagonalOperator::to_band(const Window& w) const {
  std::map<BandOperator::Key, Rational> e;
  for (const auto& [x, v] : values) e.emplace(BandOperator::Key{x, x}, v);
  return BandOperator::from_entries(w, std::move(e));
}

DiagonalOperator indicator(const PointSet& s) {
  DiagonalOperator d;
  for (PointId x : s) d.values.emplace(x, Rational(1));
  return d;
}

BandOperator vf(const Window& w, const PartialTranslation& f) {
  std::map<BandOperator::Key, Rational> e;
  for (const auto& [x, y] : f.graph()) e.emplace(BandOperator::Key{y, x}, Rational(1));
  return BandOperator::from_entries(w, std::move(e));
}

BandOperator add(const Window& w, const BandOperator& a, const BandOperator& b) {
  auto e = a.entries();
  for (const auto& [key, v] : b.entries()) e[key] += v;
  return BandOperator::from_entries(w, std::move(e));
}

BandOperator subtract(const Window& w, const BandOperator& a, const BandOperator& b) {
  return add(w, a, scalar(Rational(-1), b));
}

BandOperator multiply(const Window& w, const BandOperator& a, const BandOperator& b) {
  std::map<PointId, std::vector<std::pair<PointId, const Rational*>>> b_rows;
  for (const auto& [key, v] : b.entries()) b_rows[key.first].emplace_back(key.second, &v);
  std::map<BandOperator::Key, Rational> e;
  for (const auto& [key, v] : a.entries()) {
    auto it = b_rows.find(key.second);
    if (it == b_rows.end()) continue;
    for (const auto& [col, bv] : it->second) e[{key.first, col}] += v * *bv;
  }
  return BandOperator::from_entries(w, std::move(e));
}

BandOperator adjoint(const BandOperator& a) {
  BandOperator out = a;
  out.entries_.clear();
  for (const auto& [key, v] : a.entries()) out.entries_.emplace(BandOperator::Key{key.second, key.first}, v);
  return out;
}

BandOperator scalar(const Rational& c, const BandOperator& a) {
  if (c == 0) return BandOperator{};
  BandOperator out = a;
  for (auto& [key, v] : out.entries_) v *= c;
  return out;
}

DiagonalOperator expectation(const BandOperator& a) {
  DiagonalOperator d;
  for (const auto& [key, v] : a.entries()) {
    if (key.first == key.second) d.values.emplace(key.first, v);
  }
  return d;
}

bool ideal_membership(const BandOperator& a, const PointSet& f) {
  // (a* a)(x, x) is the squared norm of column x; a sum of squares vanishes iff every term does.
  for (const auto& [key, v] : a.entries()) {
    if (std::binary_search(f.begin(), f.end(), key.second)) return false;
  }
  return true;
}

namespace {

DiagonalOperator random_diagonal(const Window& w, std::mt19937_64& rng) {
  DiagonalOperator d;
  for (PointId x = 0; x < w.size(); ++x) {
    const auto v = static_cast<std::int64_t>(rng() % 7) - 3;
    if (v != 0) d.values.emplace(x, Rational(v, 1 + static_cast<std::int64_t>(rng() % 3)));
  }
  return d;
}

}  // namespace

std::vector<IdentityCheck> roe_identities(const Window& w, std::size_t samples, std::uint64_t seed,
                                          Distance max_displacement) {
  std::mt19937_64 rng(seed);
  std::vector<IdentityCheck> checks = {
      {"adjoint_is_inverse"},     {"domain_projection"},  {"image_projection"},  {"composition"},
      {"expectation_fixed_set"},  {"conjugated_fixed_set"}, {"expectation_bimodular"},
      {"expectation_idempotent"}, {"expectation_positive"}, {"propagation_recorded"},
      {"propagation_product"},    {"propagation_sum"},
  };
  const auto record = [&](std::size_t i, bool ok) {
    ++checks[i].checked;
    if (!ok) ++checks[i].failed;
  };

  for (std::size_t s = 0; s < samples; ++s) {
    const auto f = random_translation(w, rng, max_displacement);
    const auto g = random_translation(w, rng, max_displacement);
    const auto vf_ = vf(w, f), vg_ = vf(w, g);
    const auto vf_star = adjoint(vf_), vg_star = adjoint(vg_);

    record(0, vf_star == vf(w, invert(f)));
    record(1, multiply(w, vf_star, vf_) == indicator(f.domain()).to_band(w));
    record(2, multiply(w, vf_, vf_star) == indicator(f.image()).to_band(w));
    const auto fg = multiply(w, vf_, vg_);
    record(3, fg == vf(w, compose(w, f, g)));
    record(4, expectation(vf_) == indicator(fixed_points(f)));
    const auto conj = compose(w, invert(g), compose(w, f, g));
    record(5, expectation(multiply(w, vg_star, fg)) == indicator(fixed_points(conj)));

    const auto d1 = random_diagonal(w, rng), d2 = random_diagonal(w, rng);
    const auto a = add(w, fg, scalar(Rational(1, 2), vg_star));
    const auto lhs = expectation(multiply(w, multiply(w, d1.to_band(w), a), d2.to_band(w)));
    const auto rhs = expectation(multiply(w, multiply(w, d1.to_band(w), expectation(a).to_band(w)), d2.to_band(w)));
    record(6, lhs == rhs);
    record(7, expectation(expectation(a).to_band(w)) == expectation(a));
    const auto aa = expectation(multiply(w, adjoint(a), a));
    record(8, std::all_of(aa.values.begin(), aa.values.end(), [](const auto& kv) { return kv.second >= 0; }));
    record(9, vf_.propagation() == f.displacement() && a.propagation() == a.recompute_propagation(w));
    record(10, fg.propagation() <= vf_.propagation() + vg_.propagation());
    record(11, add(w, vf_, vg_).propagation() <= std::max(vf_.propagation(), vg_.propagation()));
  }
  return checks;
}

// ---------------------------------------------------------------------------
// Dense matrices.

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rational& v) { return v == 0; });
}

Matrix Matrix::operator+(const Matrix& o) const {
  Matrix m(n_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + o.a_[i];
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + o.scaled(Rational(-1)); }

Matrix Matrix::operator*(const Matrix& o) const {
  Matrix m(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t k = 0; k < n_; ++k) {
      if ((*this)(i, k) == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) m(i, j) += (*this)(i, k) * o(k, j);
    }
  }
  return m;
}

Matrix Matrix::scaled(const Rational& c) const {
  Matrix m = *this;
  for (auto& v : m.a_) v *= c;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix m(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) m(j, i) = (*this)(i, j);
  }
  return m;
}

// ---------------------------------------------------------------------------
// Finite cluster model.

namespace {

void validate_tail(const TailTranslation& t, std::size_t k) {
  if (t.map.size() != k) throw UsageError("tail translation: size does not match the pattern");
  std::vector<char> hit(k, 0);
  for (const auto& q : t.map) {
    if (!q) continue;
    if (*q < 0 || static_cast<std::size_t>(*q) >= k) throw UsageError("tail translation: target outside the pattern");
    if (hit[*q]++) throw UsageError("tail translation: not injective");
  }
}

}  // namespace

ClusterLimitRep cluster_rep(const FiniteMetricSpace& pattern, const std::vector<TailTranslation>& gens,
                            const std::vector<std::vector<Rational>>& diags) {
  const std::size_t k = pattern.size();
  if (k == 0) throw UsageError("cluster_rep: empty pattern");
  ClusterLimitRep rep;
  rep.k = k;
  for (const auto& t : gens) {
    validate_tail(t, k);
    Matrix m(k);
    for (std::size_t q = 0; q < k; ++q) {
      if (t.map[q]) m(static_cast<std::size_t>(*t.map[q]), q) = 1;
    }
    rep.translations.push_back(std::move(m));
  }
  for (const auto& lambda : diags) {
    if (lambda.size() != k) throw UsageError("cluster_rep: diagonal size does not match the pattern");
    Matrix m(k);
    for (std::size_t q = 0; q < k; ++q) m(q, q) = lambda[q];
    rep.diagonals.push_back(std::move(m));
  }
  return rep;
}

std::size_t commutant_dimension(const ClusterLimitRep& rep) {
  const std::size_t k = rep.k, n = k * k;
  std::vector<Matrix> gens;
  for (const auto* family : {&rep.translations, &rep.diagonals}) {
    for (const auto& m : *family) {
      gens.push_back(m);
      gens.push_back(m.transpose());
    }
  }
  // Unknown X(i, j) is variable i * k + j. Each generator M contributes the k^2
  // equations (XM - MX)(i, j) = 0.
  std::vector<std::vector<Rational>> rows;
  for (const auto& m : gens) {
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        std::vector<Rational> row(n);
        for (std::size_t l = 0; l < k; ++l) {
          row[i * k + l] += m(l, j);
          row[l * k + j] -= m(i, l);
        }
        if (std::any_of(row.begin(), row.end(), [](const Rational& v) { return v != 0; })) rows.push_back(std::move(row));
      }
    }
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const Rational factor = rows[r][col] / rows[rank][col];
      for (std::size_t c = col; c < n; ++c) rows[r][c] -= factor * rows[rank][c];
    }
    ++rank;
  }
  return n - rank;
}

std::string to_string(const Combination& a) {
  if (a.terms.empty()) return "0";
  std::string s;
  for (const auto& t : a.terms) {
    if (!s.empty()) s += " + ";
    s += "(" + to_string(t.coeff) + ")";
    if (t.word.empty()) s += "*1";
    for (const auto& l : t.word) {
      s += std::string("*") + (l.kind == Letter::Kind::Translation ? "v" : "d") + std::to_string(l.index) +
           (l.adjoint ? "'" : "");
    }
  }
  return s;
}

Combination random_combination(std::mt19937_64& rng, std::size_t translations, std::size_t diagonals) {
  Combination a;
  const std::size_t letters = translations + diagonals;
  const std::size_t terms = 1 + rng() % 3;
  for (std::size_t t = 0; t < terms; ++t) {
    Term term;
    std::int64_t num = static_cast<std::int64_t>(rng() % 7) - 3;
    if (num == 0) num = 1;
    term.coeff = Rational(num, 1 + static_cast<std::int64_t>(rng() % 3));
    const std::size_t len = letters == 0 ? 0 : rng() % 4;
    for (std::size_t i = 0; i < len; ++i) {
      const std::size_t pick = rng() % letters;
      Letter l;
      l.kind = pick < translations ? Letter::Kind::Translation : Letter::Kind::Diagonal;
      l.index = pick < translations ? pick : pick - translations;
      l.adjoint = rng() % 2;
      term.word.push_back(l);
    }
    a.terms.push_back(std::move(term));
  }
  // Half the samples cancel exactly: append the negation of an existing term.
  if (rng() % 2) {
    Term neg = a.terms[rng() % a.terms.size()];
    neg.coeff = -neg.coeff;
    a.terms.push_back(std::move(neg));
  }
  return a;
}

Matrix evaluate(const ClusterLimitRep& rep, const Combination& a) {
  Matrix sum(rep.k);
  for (const auto& t : a.terms) {
    Matrix prod = Matrix::identity(rep.k);
    for (const auto& l : t.word) {
      const auto& family = l.kind == Letter::Kind::Translation ? rep.translations : rep.diagonals;
      if (l.index >= family.size()) throw UsageError("combination refers to a missing generator");
      prod = prod * (l.adjoint ? family[l.index].transpose() : family[l.index]);
    }
    sum = sum + prod.scaled(t.coeff);
  }
  return sum;
}

namespace {

PointId cluster_point(const Window& w, int n, std::size_t q) {
  auto id = w.find({n, static_cast<Coord>(q)});
  if (!id) throw UsageError("cluster window does not contain cluster " + std::to_string(n));
  return *id;
}

}  // namespace

ClusterRealization realize_on_window(const Window& w, const FiniteMetricSpace& pattern, int count,
                                     const std::vector<TailTranslation>& gens,
                                     const std::vector<std::vector<Rational>>& diags, int n0, std::uint64_t seed) {
  const std::size_t k = pattern.size();
  if (n0 < 1 || n0 > count) throw UsageError("realize_on_window: stabilization index outside 1..count");
  std::mt19937_64 rng(seed);
  ClusterRealization real;
  real.n0 = n0;
  real.count = count;
  real.k = k;
  for (const auto& t : gens) {
    validate_tail(t, k);
    std::vector<Arrow> graph;
    for (int n = 1; n <= count; ++n) {
      if (n >= n0) {
        for (std::size_t q = 0; q < k; ++q) {
          if (t.map[q]) graph.emplace_back(cluster_point(w, n, q), cluster_point(w, n, static_cast<std::size_t>(*t.map[q])));
        }
        continue;
      }
      std::vector<std::size_t> perm(k);
      for (std::size_t q = 0; q < k; ++q) perm[q] = q;
      for (std::size_t i = k; i > 1; --i) std::swap(perm[i - 1], perm[rng() % i]);
      for (std::size_t q = 0; q < k; ++q) {
        if (rng() % 3 != 0) graph.emplace_back(cluster_point(w, n, q), cluster_point(w, n, perm[q]));
      }
    }
    real.translations.push_back(PartialTranslation::from_graph(w, std::move(graph)));
  }
  for (const auto& lambda : diags) {
    if (lambda.size() != k) throw UsageError("realize_on_window: diagonal size does not match the pattern");
    DiagonalOperator d;
    for (int n = 1; n <= count; ++n) {
      for (std::size_t q = 0; q < k; ++q) {
        const Rational v = n >= n0 ? lambda[q] : Rational(static_cast<std::int64_t>(rng() % 5) - 2);
        if (v != 0) d.values.emplace(cluster_point(w, n, q), v);
      }
    }
    real.diagonals.push_back(std::move(d));
  }
  return real;
}

BandOperator evaluate(const Window& w, const ClusterRealization& real, const Combination& a) {
  std::map<BandOperator::Key, Rational> one;
  for (PointId x = 0; x < w.size(); ++x) one.emplace(BandOperator::Key{x, x}, Rational(1));
  const BandOperator identity = BandOperator::from_entries(w, std::move(one));
  BandOperator sum;
  for (const auto& t : a.terms) {
    BandOperator prod = identity;
    for (const auto& l : t.word) {
      BandOperator g;
      if (l.kind == Letter::Kind::Translation) {
        if (l.index >= real.translations.size()) throw UsageError("combination refers to a missing generator");
        g = vf(w, real.translations[l.index]);
      } else {
        if (l.index >= real.diagonals.size()) throw UsageError("combination refers to a missing generator");
        g = real.diagonals[l.index].to_band(w);
      }
      prod = multiply(w, prod, l.adjoint ? adjoint(g) : g);
    }
    sum = add(w, sum, scalar(t.coeff, prod));
  }
  return sum;
}

Matrix cluster_block(const Window& w, const BandOperator& a, int n, std::size_t k) {
  Matrix m(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) m(i, j) = a.at(cluster_point(w, n, i), cluster_point(w, n, j));
  }
  return m;
}

KernelCheck kernel_check(const Window& w, const ClusterLimitRep& rep, const ClusterRealization& real,
                         const Combination& a) {
  KernelCheck out;
  out.matrix_zero = evaluate(rep, a).is_zero();

  const BandOperator op = evaluate(w, real, a);
  const DiagonalOperator e = expectation(multiply(w, adjoint(op), op));
  std::optional<bool> zero;
  for (int n = real.n0; n <= real.count; ++n) {
    bool here = true;
    for (std::size_t q = 0; q < real.k; ++q) {
      if (e.values.count(cluster_point(w, n, q))) here = false;
    }
    if (zero && *zero != here) throw std::logic_error("kernel_check: tail clusters disagree for " + to_string(a));
    zero = here;
  }
  out.diagonal_zero = zero.value_or(true);
  return out;
}

}  // namespace coarsekit

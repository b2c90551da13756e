#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "coarsekit/rational.hpp"
#include "coarsekit/space.hpp"
#include "coarsekit/translations.hpp"
#include "coarsekit/zoo.hpp"

namespace coarsekit {

/// Finitely supported matrix on l2(window) with exact entries. Zero entries are never stored.
class BandOperator {
 public:
  using Key = std::pair<PointId, PointId>;  // (row, column)

  BandOperator() = default;
  static BandOperator from_entries(const Window& w, std::map<Key, Rational> entries);

  const std::map<Key, Rational>& entries() const { return entries_; }
  Distance propagation() const { return propagation_; }
  Rational at(PointId row, PointId col) const;
  bool is_zero() const { return entries_.empty(); }

  /// max d(row, col) over stored entries, recomputed from the window.
  Distance recompute_propagation(const Window& w) const;

  bool operator==(const BandOperator& o) const { return entries_ == o.entries_; }

 private:
  std::map<Key, Rational> entries_;
  Distance propagation_ = 0;

  friend BandOperator adjoint(const BandOperator& a);
  friend BandOperator scalar(const Rational& c, const BandOperator& a);
};

/// Diagonal operator, stored as point -> value with zeros dropped.
struct DiagonalOperator {
  std::map<PointId, Rational> values;

  BandOperator to_band(const Window& w) const;
  bool operator==(const DiagonalOperator&) const = default;
};

DiagonalOperator indicator(const PointSet& s);

BandOperator vf(const Window& w, const PartialTranslation& f);
BandOperator add(const Window& w, const BandOperator& a, const BandOperator& b);
BandOperator subtract(const Window& w, const BandOperator& a, const BandOperator& b);
BandOperator multiply(const Window& w, const BandOperator& a, const BandOperator& b);
BandOperator adjoint(const BandOperator& a);
BandOperator scalar(const Rational& c, const BandOperator& a);

/// Diagonal part of a.
DiagonalOperator expectation(const BandOperator& a);

/// True iff (a* a)(x, x) = 0 for every x in f.
bool ideal_membership(const BandOperator& a, const PointSet& f);

struct IdentityCheck {
  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;
};

/// Samples `samples` pairs of random partial translations (seeded) and checks the
/// partial-isometry, composition, expectation and propagation identities exactly.
std::vector<IdentityCheck> roe_identities(const Window& w, std::size_t samples, std::uint64_t seed,
                                          Distance max_displacement = 3);

// ---------------------------------------------------------------------------
// Finite model of the representation on a finite orbit, realized by uniform clusters.

/// Dense square matrix over the rationals.
class Matrix {
 public:
  explicit Matrix(std::size_t n = 0) : n_(n), a_(n * n) {}
  static Matrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  bool is_zero() const;
  bool operator==(const Matrix&) const = default;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix scaled(const Rational& c) const;
  Matrix transpose() const;

 private:
  std::size_t n_;
  std::vector<Rational> a_;
};

/// A partial injection of the pattern, applied to every cluster past the stabilization index.
struct TailTranslation {
  std::vector<std::optional<int>> map;  // map[q] = t(q)
};

struct ClusterLimitRep {
  std::size_t k = 0;
  std::vector<Matrix> translations;  // M_t e_q = e_{t(q)} on dom(t), 0 elsewhere
  std::vector<Matrix> diagonals;     // limit diagonals
};

ClusterLimitRep cluster_rep(const FiniteMetricSpace& pattern, const std::vector<TailTranslation>& gens,
                            const std::vector<std::vector<Rational>>& diags);

/// Dimension of the commutant of the generators and their adjoints, by exact elimination.
std::size_t commutant_dimension(const ClusterLimitRep& rep);

/// A symbolic element: sum of coeff * (product of generators, left to right).
struct Letter {
  enum class Kind { Translation, Diagonal };
  Kind kind = Kind::Translation;
  std::size_t index = 0;
  bool adjoint = false;
};
struct Term {
  Rational coeff;
  std::vector<Letter> word;  // empty word is the identity
};
struct Combination {
  std::vector<Term> terms;
};

std::string to_string(const Combination& a);

Combination random_combination(std::mt19937_64& rng, std::size_t translations, std::size_t diagonals);

Matrix evaluate(const ClusterLimitRep& rep, const Combination& a);

/// Tail data realized on a cluster window: translations act by t on clusters n >= n0
/// and by an unrelated seeded injection below; diagonals carry the limit values on
/// n >= n0 and seeded values below.
struct ClusterRealization {
  int n0 = 1;
  int count = 0;
  std::size_t k = 0;
  std::vector<PartialTranslation> translations;
  std::vector<DiagonalOperator> diagonals;
};

ClusterRealization realize_on_window(const Window& w, const FiniteMetricSpace& pattern, int count,
                                     const std::vector<TailTranslation>& gens,
                                     const std::vector<std::vector<Rational>>& diags, int n0, std::uint64_t seed);

BandOperator evaluate(const Window& w, const ClusterRealization& real, const Combination& a);

/// The k x k block of a on cluster n, rows and columns in pattern order.
Matrix cluster_block(const Window& w, const BandOperator& a, int n, std::size_t k);

struct KernelCheck {
  bool matrix_zero = false;    // pi(a) = 0 in the finite model
  bool diagonal_zero = false;  // E(a* a) vanishes on the tail clusters of the window
  bool agree() const { return matrix_zero == diagonal_zero; }
};

KernelCheck kernel_check(const Window& w, const ClusterLimitRep& rep, const ClusterRealization& real,
                         const Combination& a);

}  // namespace coarsekit

#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "coarsekit/space.hpp"

namespace coarsekit {

/// Strictly increasing, unbounded integer function of a 1-based index:
/// linear a*n + b, quadratic a*n^2 + b, or exponential a*base^n + b.
struct GrowthFunction {
  enum class Form { Linear, Quadratic, Exponential };
  Form form = Form::Linear;
  Distance a = 1;
  Distance b = 0;
  Distance base = 2;

  Distance operator()(std::int64_t n) const;
  void validate() const;  // throws UsageError
};

std::string to_string(GrowthFunction::Form f);

// ---------------------------------------------------------------------------
// Concrete presentations.

/// N^k (unsigned) or Z^k (signed) with the l1 metric. Basepoint is the origin.
class GridSpace final : public SpacePresentation {
 public:
  GridSpace(bool is_signed, int dims);
  std::string kind() const override { return "grid"; }
  Coords basepoint() const override { return Coords(dims_, 0); }
  bool contains(const Coords& p) const override;
  Distance distance(const Coords& a, const Coords& b) const override;
  std::vector<Coords> ball(const Coords& center, Distance r) const override;
  bool is_signed() const { return signed_; }
  int dims() const { return dims_; }

 private:
  bool signed_;
  int dims_;
};

/// Free group of rank n with the word metric. Points are reduced words, letter
/// +i is the i-th generator and -i its inverse. Distance is |u^-1 v| after free
/// reduction, i.e. |u| + |v| - 2 * (common prefix length).
class FreeGroupSpace final : public SpacePresentation {
 public:
  explicit FreeGroupSpace(int rank);
  std::string kind() const override { return "free_group"; }
  Coords basepoint() const override { return {}; }
  bool contains(const Coords& p) const override;
  Distance distance(const Coords& a, const Coords& b) const override;
  std::vector<Coords> ball(const Coords& center, Distance r) const override;
  std::string label(const Coords& p) const override;
  int rank() const { return rank_; }

 private:
  int rank_;
};

/// The ternary space M: finitely supported 0/1 sequences (a_i)_{i>=1} with
/// d(a, b) = |sum a_i 3^i - sum b_i 3^i|. A point is stored as a bit mask whose
/// bit i-1 is a_i. Supports are limited to indices 1..kMaxDigit.
class TernarySpace final : public SpacePresentation {
 public:
  static constexpr int kMaxDigit = 38;
  std::string kind() const override { return "M"; }
  Coords basepoint() const override { return {0}; }
  bool contains(const Coords& p) const override;
  Distance distance(const Coords& a, const Coords& b) const override;
  std::vector<Coords> ball(const Coords& center, Distance r) const override;
  std::string label(const Coords& p) const override;

  static Distance value(Coord mask);
  /// Metric radius of the set of supports within indices 1..digits.
  static Distance radius_for_digits(int digits);
};

/// M_k realized as {(n_1^2, ..., n_k^2) : 1 <= n_1 < ... < n_k} inside N^k with l1.
class SquaresSpace final : public SpacePresentation {
 public:
  explicit SquaresSpace(int k);
  std::string kind() const override { return "Mk"; }
  Coords basepoint() const override;
  bool contains(const Coords& p) const override;
  Distance distance(const Coords& a, const Coords& b) const override;
  std::vector<Coords> ball(const Coords& center, Distance r) const override;
  int k() const { return k_; }

 private:
  int k_;
};

/// M_{3/2} realized as {(1, k^2), (n, k^2) : k in N_n} in N^2 with l1, where
/// N_n = {2^(n-1) (2j - 1) : j >= 1}; so (n, k^2) is present iff n = v2(k) + 1.
class HalfStratumSpace final : public SpacePresentation {
 public:
  std::string kind() const override { return "M32"; }
  Coords basepoint() const override { return {1, 1}; }
  bool contains(const Coords& p) const override;
  Distance distance(const Coords& a, const Coords& b) const override;
  std::vector<Coords> ball(const Coords& center, Distance r) const override;

  static int dyadic_class(Coord k);  // v2(k) + 1
};

/// A finite metric space given by its distance matrix; points are {0}, {1}, ...
class FiniteMetricSpace final : public SpacePresentation {
 public:
  FiniteMetricSpace(std::vector<std::string> labels, std::vector<std::vector<Distance>> matrix);
  std::string kind() const override { return "finite"; }
  Coords basepoint() const override { return {0}; }
  bool contains(const Coords& p) const override;
  Distance distance(const Coords& a, const Coords& b) const override;
  std::vector<Coords> ball(const Coords& center, Distance r) const override;
  std::string label(const Coords& p) const override;

  std::size_t size() const { return labels_.size(); }
  Distance diameter() const;
  Distance eccentricity(std::size_t q) const;
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::vector<Distance>>& matrix() const { return matrix_; }

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<Distance>> matrix_;
};

/// Coarse disjoint union of components X_1, X_2, ... with the star metric:
/// d(x, y) = d_n(x, y) inside X_n, otherwise
/// d(x, y) = d_n(x, p_n) + f(n) + f(m) + d_m(p_m, y).
/// Points are (n, component coords...). Basepoint is (1, p_1).
class CoarseUnionSpace final : public SpacePresentation {
 public:
  CoarseUnionSpace(std::vector<SpacePtr> components, GrowthFunction spoke);
  std::string kind() const override { return "coarse_union"; }
  Coords basepoint() const override;
  bool contains(const Coords& p) const override;
  Distance distance(const Coords& a, const Coords& b) const override;
  std::vector<Coords> ball(const Coords& center, Distance r) const override;
  std::string label(const Coords& p) const override;

  std::size_t component_count() const { return components_.size(); }
  const SpacePresentation& component(std::size_t n) const { return *components_.at(n - 1); }
  const GrowthFunction& spoke() const { return spoke_; }

 private:
  std::vector<SpacePtr> components_;
  GrowthFunction spoke_;
};

// ---------------------------------------------------------------------------
// Space descriptions.

struct SpaceSpec;

struct GridSpec {
  bool is_signed = false;
  int dims = 1;
};
struct FreeGroupSpec {
  int rank = 2;
};
struct TernarySpec {};
struct SquaresSpec {
  int k = 2;
};
struct HalfStratumSpec {};
struct FiniteSpec {
  std::vector<std::string> labels;
  std::vector<std::vector<Distance>> distances;
};
struct ClusterSpec {
  FiniteSpec pattern;
  GrowthFunction gap;
  int count = 1;
};
struct CoarseUnionSpec {
  std::vector<SpaceSpec> components;
  GrowthFunction spoke;
};

/// Declarative description of a zoo space plus its window horizon.
///
/// Horizon is a metric radius around the basepoint, except for kind "M" where it
/// is the largest support index (the window is then the exact ball of radius
/// TernarySpace::radius_for_digits(horizon)). For clusters the horizon is optional
/// and defaults to the radius covering every cluster.
struct SpaceSpec {
  std::variant<GridSpec, FreeGroupSpec, TernarySpec, SquaresSpec, HalfStratumSpec, FiniteSpec, ClusterSpec,
               CoarseUnionSpec>
      shape;
  std::optional<Distance> horizon;

  std::string kind() const;
};

SpacePtr make_space(const SpaceSpec& spec);
Window build_window(const SpaceSpec& spec);

// Named constructors.
Window make_grid(bool is_signed, int k, Distance horizon);
Window make_free_group(int rank, Distance horizon);
Window make_M(int digits);
Window make_Mk(int k, Distance horizon);
Window make_M32(Distance horizon);
Window make_cluster_space(const FiniteSpec& pattern, GrowthFunction gap, int count,
                          std::optional<Distance> horizon = std::nullopt);
Window make_coarse_union(std::vector<SpacePtr> components, GrowthFunction spoke, Distance horizon);

/// Radius of the smallest basepoint ball containing every point of a cluster space.
Distance cluster_space_radius(const FiniteMetricSpace& pattern, const GrowthFunction& gap, int count);

}  // namespace coarsekit

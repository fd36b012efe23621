#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qm/rational.hpp"

namespace qm {

/// Sparse integer polynomial in a fixed number of variables; keys are
/// exponent vectors.
struct IntPolynomial {
  std::map<std::vector<unsigned>, BigInt> terms;

  static IntPolynomial constant(const BigInt& c, std::size_t nvars);
  static IntPolynomial variable(std::size_t index, std::size_t nvars, unsigned power = 1);

  bool is_zero() const { return terms.empty(); }
  std::size_t nvars() const;

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  IntPolynomial operator-() const;
  bool operator==(const IntPolynomial& o) const { return terms == o.terms; }

  /// Polynomial with every exponent vector widened to `nvars` (zeros
  /// appended); used when adjoining variables to a ring.
  IntPolynomial widened(std::size_t nvars) const;

  void prune();
};

/// Weighted-variable polynomial presentation of a graded ring together
/// with the dimension of the underlying variety.
struct GradedPresentation {
  struct Var {
    std::string name;
    unsigned weight;
  };
  std::vector<Var> vars;
  std::vector<IntPolynomial> relations;
  long long top_degree = 0;

  long long weighted_degree(const std::vector<unsigned>& exps) const;
  /// Degree when homogeneous, nullopt otherwise. The zero polynomial is
  /// homogeneous of any degree.
  std::optional<long long> homogeneous_degree(const IntPolynomial& p) const;
  void validate() const;
};

/// Chern classes c_0 = 1, c_1, ..., c_r of a rank-r bundle, expressed in
/// the base presentation's variables; class_k homogeneous of weight k.
struct ChernClassVector {
  std::vector<IntPolynomial> classes;
};

struct RankReport {
  long long total = 0;
  std::vector<long long> per_degree;
};

/// A point: the ring Z in no variables.
GradedPresentation presentation_point();

/// Z[h] / (h^(N+1)), top degree N.
GradedPresentation presentation_projective_space(long long N);

/// Adjoins X_1..X_d (weights 1..d) and Y_1..Y_(r-d) (weights 1..r-d) to
/// the base and imposes the full relation list
///   sum_{i+j=k} X_i Y_j = c_k(E)   for k = 1..r
/// (X_0 = Y_0 = 1). Top degree grows by the fiber dimension d(r-d) unless
/// overridden. d = 0 returns the base unchanged.
GradedPresentation grassmann_bundle_presentation(const GradedPresentation& base,
                                                 const ChernClassVector& chern, int d, int r,
                                                 std::optional<long long> fiber_top = std::nullopt);

/// Compactified single-input moduli with outputs: the Grassmann bundle of
/// p-planes in a rank n+1+p bundle with total Chern class (1+h)^n over
/// projective n-space.
GradedPresentation presentation_H_single_input(int n, int p);

/// Single-input pencil compactification: projective space of dimension
/// (p+1)(n+1) - 1.
GradedPresentation presentation_L_single_input(int n, int p);

inline constexpr std::size_t kMonomialBudget = 200000;

/// Additive rank, degree by degree: monomial count minus the rank of the
/// Macaulay matrix spanned by (relation x monomial) products. Degrees
/// above top_degree are verified to vanish.
RankReport additive_rank(const GradedPresentation& pres,
                         std::size_t monomial_budget = kMonomialBudget);

BigInt rank_L_formula(int n, int m, int p);
BigInt rank_H_formula(int n, int m, int p);

struct NonIsoCertificate {
  bool not_isomorphic;
  BigInt rank_L;
  BigInt rank_H;
};

/// The two compactifications differ exactly when p > 0, certified by the
/// additive rank gap.
NonIsoCertificate not_isomorphic(int n, int m, int p);

/// q(r+d) - r^2 for the parameter space of rank-r degree-d quotients of a
/// trivial rank-q bundle on the projective line; requires r < q.
long long quot_dimension(int q, int r, int d);

/// Human-readable polynomial ("X1*Y2 + 2*h^3 - 1") and its inverse.
std::string poly_to_string(const IntPolynomial& p, const std::vector<GradedPresentation::Var>& vars);
IntPolynomial poly_parse(const std::string& text, const std::vector<GradedPresentation::Var>& vars);

}  // namespace qm

#pragma once

#include <array>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "omega/basis.hpp"
#include "omega/hnum.hpp"

namespace omega {

/// Sorted list of basis indices spanning a candidate subalgebra.
using IndexSubset = std::vector<BasisIndex>;

struct ZeroDivisorWitness {
  ExactNum left;
  ExactNum right;  // left * right == 0, both nonzero
};

/// A copy of C inside a 2-dimensional subalgebra.
///
/// `imaginary * imaginary == -scale * unity` holds exactly. When `scale` is the
/// square of a rational the imaginary element is already normalised and scale == 1;
/// otherwise the unit imaginary is imaginary / sqrt(scale), which is irrational.
struct ComplexStructure {
  IndexSubset subset;
  ExactNum unity;
  ExactNum imaginary;
  Rational scale{1};

  bool normalised() const { return scale == 1; }
};

/// Structure of the subalgebra span(e_p, e_q) of a table.
struct PlaneAnalysis {
  bool closed = false;
  std::optional<std::pair<BasisIndex, BasisIndex>> escaping_product;  // set when not closed
  std::optional<ExactNum> unity;                                       // two-sided unity, if any
  std::optional<ExactNum> generator_square;                            // x*x for the non-unity generator x
  std::optional<ComplexStructure> complex;
};

PlaneAnalysis analyze_plane(const MultiplicationTable& table, BasisIndex p, BasisIndex q);

struct PropertyReport {
  bool unital = false;
  bool commutative = false;
  bool associative = false;
  std::optional<std::pair<BasisIndex, BasisIndex>> noncommuting_pair;
  std::optional<std::array<BasisIndex, 3>> nonassociative_triple;
  std::optional<ZeroDivisorWitness> zero_divisor;
  std::vector<IndexSubset> closed_subalgebras;
  std::vector<ComplexStructure> complex_structures;

  bool has_closed(const IndexSubset& s) const;
  const ComplexStructure* complex_structure_on(const IndexSubset& s) const;

  bool operator==(const PropertyReport& o) const;
};

/// Left-multiplication matrix: column b holds the coefficients of x * e_b.
template <class Scalar>
using Matrix4 = std::array<std::array<Scalar, kDim>, kDim>;

/// A named table plus its memoised structural analysis.
///
/// Copies share the memo. The analysis is computed at most once, under std::call_once.
class Algebra {
 public:
  explicit Algebra(MultiplicationTable table);

  static Algebra omega() { return Algebra(omega_table()); }
  static Algebra quaternion() { return Algebra(quaternion_table()); }
  static Algebra complex() { return Algebra(complex_table()); }

  const MultiplicationTable& table() const noexcept { return table_; }
  const std::string& name() const noexcept { return table_.name(); }

  SignedBasis basis_mul(BasisIndex a, BasisIndex b) const noexcept { return table_(a, b); }

  /// Bilinear extension of the table over the 16 basis products.
  template <class Scalar>
  HNum<Scalar> mul(const HNum<Scalar>& x, const HNum<Scalar>& y) const {
    HNum<Scalar> out;
    for (BasisIndex a = 0; a < kDim; ++a) {
      if (ScalarTraits<Scalar>::is_zero(x[a])) continue;
      for (BasisIndex b = 0; b < kDim; ++b) {
        if (ScalarTraits<Scalar>::is_zero(y[b])) continue;
        const SignedBasis e = table_(a, b);
        if (e.sign() < 0)
          out[e.basis()] -= x[a] * y[b];
        else
          out[e.basis()] += x[a] * y[b];
      }
    }
    return out;
  }

  template <class Scalar>
  Matrix4<Scalar> left_matrix(const HNum<Scalar>& x) const {
    Matrix4<Scalar> m;
    for (auto& row : m) row.fill(ScalarTraits<Scalar>::zero());
    for (BasisIndex b = 0; b < kDim; ++b) {
      const HNum<Scalar> col = mul(x, HNum<Scalar>::unit(b));
      for (int r = 0; r < kDim; ++r) m[r][b] = col[r];
    }
    return m;
  }

  /// Two-sided inverse. Throws SingularElement when x is zero or a zero divisor,
  /// or when the left and right inverses disagree.
  ExactNum invert(const ExactNum& x) const;
  /// Float variant; pivots below `pivot_tol` times the largest matrix entry count as singular.
  FloatNum invert(const FloatNum& x, double pivot_tol = kDefaultTolerance) const;

  const PropertyReport& properties() const;
  bool properties_cached() const;

 private:
  struct Memo {
    std::once_flag once;
    std::optional<PropertyReport> report;
  };

  MultiplicationTable table_;
  std::shared_ptr<Memo> memo_;
};

/// Uncached structural analysis; Algebra::properties() memoises this.
PropertyReport check_properties(const MultiplicationTable& table);

/// Bounded zero-divisor search over signed basis elements and binomials e +- f.
///
/// Pairs are tried in phases (basis,basis), (binomial,basis), (basis,binomial),
/// (binomial,binomial); within each list idempotents come first, otherwise code
/// order. The first hit is returned.
std::optional<ZeroDivisorWitness> find_zero_divisor(const MultiplicationTable& table);

}  // namespace omega

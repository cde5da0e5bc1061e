#include "omega/algebra.hpp"

#include <algorithm>
#include <cmath>

namespace omega {

namespace {

// Solves m * y = rhs by Gauss-Jordan elimination with first-nonzero pivots (exact).
std::optional<std::array<Rational, kDim>> solve_exact(Matrix4<Rational> m, std::array<Rational, kDim> rhs) {
  for (int col = 0; col < kDim; ++col) {
    int pivot = -1;
    for (int r = col; r < kDim; ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return std::nullopt;
    std::swap(m[col], m[pivot]);
    std::swap(rhs[col], rhs[pivot]);
    const Rational inv = 1 / m[col][col];
    for (int c = col; c < kDim; ++c) m[col][c] *= inv;
    rhs[col] *= inv;
    for (int r = 0; r < kDim; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (int c = col; c < kDim; ++c) m[r][c] -= f * m[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  return rhs;
}

std::optional<std::array<double, kDim>> solve_float(Matrix4<double> m, std::array<double, kDim> rhs,
                                                    double pivot_tol) {
  double scale = 0.0;
  for (const auto& row : m)
    for (double v : row) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) return std::nullopt;
  for (int col = 0; col < kDim; ++col) {
    int pivot = col;
    for (int r = col + 1; r < kDim; ++r)
      if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
    if (std::abs(m[pivot][col]) <= pivot_tol * scale) return std::nullopt;
    std::swap(m[col], m[pivot]);
    std::swap(rhs[col], rhs[pivot]);
    for (int r = col + 1; r < kDim; ++r) {
      const double f = m[r][col] / m[col][col];
      for (int c = col; c < kDim; ++c) m[r][c] -= f * m[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  std::array<double, kDim> y{};
  for (int r = kDim - 1; r >= 0; --r) {
    double s = rhs[r];
    for (int c = r + 1; c < kDim; ++c) s -= m[r][c] * y[c];
    y[r] = s / m[r][r];
  }
  return y;
}

ExactNum basis_num(BasisIndex b) { return ExactNum::unit(b); }

// Coordinates of v in the plane (p, q); v must lie in it.
std::array<Rational, 2> plane_coords(const ExactNum& v, BasisIndex p, BasisIndex q) { return {v[p], v[q]}; }

}  // namespace

bool PropertyReport::has_closed(const IndexSubset& s) const {
  return std::find(closed_subalgebras.begin(), closed_subalgebras.end(), s) != closed_subalgebras.end();
}

const ComplexStructure* PropertyReport::complex_structure_on(const IndexSubset& s) const {
  for (const auto& cs : complex_structures)
    if (cs.subset == s) return &cs;
  return nullptr;
}

bool PropertyReport::operator==(const PropertyReport& o) const {
  auto zd_eq = [](const std::optional<ZeroDivisorWitness>& a, const std::optional<ZeroDivisorWitness>& b) {
    if (a.has_value() != b.has_value()) return false;
    return !a || (a->left == b->left && a->right == b->right);
  };
  if (unital != o.unital || commutative != o.commutative || associative != o.associative ||
      noncommuting_pair != o.noncommuting_pair || nonassociative_triple != o.nonassociative_triple ||
      !zd_eq(zero_divisor, o.zero_divisor) || closed_subalgebras != o.closed_subalgebras ||
      complex_structures.size() != o.complex_structures.size())
    return false;
  for (std::size_t n = 0; n < complex_structures.size(); ++n) {
    const auto& a = complex_structures[n];
    const auto& b = o.complex_structures[n];
    if (a.subset != b.subset || a.unity != b.unity || a.imaginary != b.imaginary || a.scale != b.scale)
      return false;
  }
  return true;
}

Algebra::Algebra(MultiplicationTable table) : table_(std::move(table)), memo_(std::make_shared<Memo>()) {}

ExactNum Algebra::invert(const ExactNum& x) const {
  auto y = solve_exact(left_matrix(x), {1, 0, 0, 0});
  if (!y) throw SingularElement(format(x) + " is not invertible in " + name() + " (singular left-multiplication)");
  ExactNum inv(*y);
  if (mul(inv, x) != ExactNum::real(1))
    throw SingularElement(format(x) + " has a right inverse but no left inverse in " + name());
  return inv;
}

FloatNum Algebra::invert(const FloatNum& x, double pivot_tol) const {
  if (!x.is_finite()) throw ArithmeticError("cannot invert a non-finite value");
  auto y = solve_float(left_matrix(x), {1.0, 0.0, 0.0, 0.0}, pivot_tol);
  if (!y) throw SingularElement(format(x) + " is not invertible in " + name() + " (singular left-multiplication)");
  FloatNum inv(*y);
  const double bound = 1e-8 * (1.0 + coefficient_norm(x) * coefficient_norm(inv));
  if (coefficient_norm(mul(inv, x) - FloatNum::real(1.0)) > bound)
    throw SingularElement(format(x) + " has a right inverse but no left inverse in " + name());
  return inv;
}

const PropertyReport& Algebra::properties() const {
  std::call_once(memo_->once, [this] { memo_->report = check_properties(table_); });
  return *memo_->report;
}

bool Algebra::properties_cached() const { return memo_->report.has_value(); }

PlaneAnalysis analyze_plane(const MultiplicationTable& table, BasisIndex p, BasisIndex q) {
  PlaneAnalysis out;
  const std::array<BasisIndex, 2> gens = {p, q};
  for (BasisIndex a : gens)
    for (BasisIndex b : gens) {
      const BasisIndex c = table(a, b).basis();
      if (c != p && c != q) {
        out.escaping_product = std::make_pair(a, b);
        return out;
      }
    }
  out.closed = true;

  const Algebra alg(table);
  // Unity e = alpha e_p + beta e_q: e*g = g and g*e = g for g in {e_p, e_q}.
  // Eight linear equations in (alpha, beta); augmented rows [coef_alpha, coef_beta | rhs].
  std::vector<std::array<Rational, 3>> rows;
  for (BasisIndex g : gens) {
    const ExactNum gp = alg.mul(basis_num(p), basis_num(g));
    const ExactNum gq = alg.mul(basis_num(q), basis_num(g));
    const ExactNum pg = alg.mul(basis_num(g), basis_num(p));
    const ExactNum qg = alg.mul(basis_num(g), basis_num(q));
    for (BasisIndex comp : gens) {
      const Rational rhs = comp == g ? 1 : 0;
      rows.push_back({gp[comp], gq[comp], rhs});
      rows.push_back({pg[comp], qg[comp], rhs});
    }
  }
  std::size_t rank = 0;
  for (int col = 0; col < 2; ++col) {
    std::size_t pivot = rows.size();
    for (std::size_t r = rank; r < rows.size(); ++r)
      if (rows[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const Rational inv = 1 / rows[rank][col];
    for (auto& v : rows[rank]) v *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const Rational f = rows[r][col];
      for (int c = 0; c < 3; ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  for (std::size_t r = rank; r < rows.size(); ++r)
    if (rows[r][2] != 0) return out;  // inconsistent: no unity
  if (rank < 2) return out;

  ExactNum e;
  e[p] = rows[0][2];
  e[q] = rows[1][2];
  out.unity = e;

  // Generator x: a basis element of the plane not proportional to e.
  const BasisIndex xi = e[q] != 0 ? p : q;
  const ExactNum x = basis_num(xi);
  const ExactNum xx = alg.mul(x, x);
  out.generator_square = xx;

  // Solve x*x = A e + B x in plane coordinates (Cramer).
  const auto ec = plane_coords(e, p, q);
  const auto xc = plane_coords(x, p, q);
  const auto sc = plane_coords(xx, p, q);
  const Rational det = ec[0] * xc[1] - ec[1] * xc[0];
  const Rational A = (sc[0] * xc[1] - sc[1] * xc[0]) / det;
  const Rational B = (ec[0] * sc[1] - ec[1] * sc[0]) / det;
  const Rational disc = B * B + 4 * A;
  if (disc >= 0) return out;  // split or degenerate: R+R or dual numbers

  // w = 2x - B e satisfies w*w = disc * e.
  ComplexStructure cs;
  cs.subset = {std::min(p, q), std::max(p, q)};
  cs.unity = e;
  ExactNum w = x * Rational(2) - e * B;
  const Rational d = -disc;
  Rational root;
  if (rational_sqrt(d, root)) {
    cs.imaginary = w * (1 / root);
    cs.scale = 1;
  } else {
    cs.imaginary = w;
    cs.scale = d;
  }
  out.complex = cs;
  return out;
}

std::optional<ZeroDivisorWitness> find_zero_divisor(const MultiplicationTable& table) {
  const Algebra alg(table);
  std::vector<ExactNum> basis;
  for (std::uint8_t code = 0; code < 2 * kDim; ++code) basis.push_back(ExactNum::from(SignedBasis::from_code(code)));
  std::vector<ExactNum> binomials;
  for (BasisIndex e = 0; e < kDim; ++e)
    for (BasisIndex f = e + 1; f < kDim; ++f) {
      binomials.push_back(ExactNum::unit(e) + ExactNum::unit(f));
      binomials.push_back(ExactNum::unit(e) - ExactNum::unit(f));
    }
  // Idempotents first, so orthogonal idempotent pairs are reported when they exist.
  auto idempotents_first = [&](std::vector<ExactNum>& v) {
    std::stable_partition(v.begin(), v.end(), [&](const ExactNum& e) { return alg.mul(e, e) == e; });
  };
  idempotents_first(basis);
  idempotents_first(binomials);
  const std::array<std::pair<const std::vector<ExactNum>*, const std::vector<ExactNum>*>, 4> phases = {{
      {&basis, &basis},
      {&binomials, &basis},
      {&basis, &binomials},
      {&binomials, &binomials},
  }};
  for (const auto& [lefts, rights] : phases)
    for (const auto& x : *lefts)
      for (const auto& y : *rights)
        if (alg.mul(x, y).is_zero()) return ZeroDivisorWitness{x, y};
  return std::nullopt;
}

PropertyReport check_properties(const MultiplicationTable& table) {
  PropertyReport r;

  r.unital = true;
  for (BasisIndex b = 0; b < kDim; ++b)
    if (table(0, b) != SignedBasis(1, b) || table(b, 0) != SignedBasis(1, b)) r.unital = false;

  r.commutative = true;
  for (BasisIndex a = 0; a < kDim && r.commutative; ++a)
    for (BasisIndex b = a + 1; b < kDim; ++b)
      if (table(a, b) != table(b, a)) {
        r.commutative = false;
        r.noncommuting_pair = std::make_pair(a, b);
        break;
      }

  r.associative = true;
  for (BasisIndex a = 0; a < kDim && r.associative; ++a)
    for (BasisIndex b = 0; b < kDim && r.associative; ++b)
      for (BasisIndex c = 0; c < kDim; ++c) {
        const SignedBasis left = table.product(table(a, b), SignedBasis(1, c));
        const SignedBasis right = table.product(SignedBasis(1, a), table(b, c));
        if (left != right) {
          r.associative = false;
          r.nonassociative_triple = std::array<BasisIndex, 3>{a, b, c};
          break;
        }
      }

  r.zero_divisor = find_zero_divisor(table);

  for (BasisIndex p = 0; p < kDim; ++p)
    for (BasisIndex q = p + 1; q < kDim; ++q) {
      const PlaneAnalysis plane = analyze_plane(table, p, q);
      if (!plane.closed) continue;
      r.closed_subalgebras.push_back({p, q});
      if (plane.complex) r.complex_structures.push_back(*plane.complex);
    }
  r.closed_subalgebras.push_back({0, 1, 2, 3});
  return r;
}

}  // namespace omega

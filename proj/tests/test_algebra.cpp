#include <doctest.h>

#include <cmath>
#include <numbers>
#include <thread>

#include "omega/algebra.hpp"
#include "omega/io.hpp"
#include "oracles.hpp"

using namespace omega;

namespace {

SignedBasis sb(const char* s) { return *SignedBasis::parse(s); }
ExactNum ex(long a, long b, long c, long d) { return ExactNum(Rational(a), Rational(b), Rational(c), Rational(d)); }

constexpr BasisIndex ONE = 0, I = 1, J = 2, K = 3;

}  // namespace

TEST_CASE("signed basis codes follow 1,-1,i,-i,j,-j,k,-k") {
  const char* order[] = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  for (std::uint8_t c = 0; c < 8; ++c) {
    CHECK(SignedBasis::from_code(c).str() == order[c]);
    CHECK(sb(order[c]).code() == c);
  }
  CHECK_FALSE(SignedBasis::parse("l"));
  CHECK_FALSE(SignedBasis::parse("--i"));
  CHECK_FALSE(SignedBasis::parse(""));
}

TEST_CASE("basis_mul on omega") {
  const Algebra w = Algebra::omega();
  CHECK(w.basis_mul(I, J) == sb("-k"));
  CHECK(w.basis_mul(K, J) == sb("j"));
  CHECK(w.basis_mul(K, K) == sb("k"));
  CHECK(w.basis_mul(J, J) == sb("-k"));
  CHECK(w.basis_mul(I, I) == sb("-1"));
}

TEST_CASE("basis_mul on quaternions") {
  const Algebra h = Algebra::quaternion();
  CHECK(h.basis_mul(I, J) == sb("k"));
  CHECK(h.basis_mul(K, J) == sb("-i"));
  CHECK(h.basis_mul(I, I) == sb("-1"));
}

TEST_CASE("identity row and column for every built-in") {
  for (const auto* name : {"omega", "quaternion", "complex"}) {
    const Algebra alg(*builtin_table(name));
    for (BasisIndex b = 0; b < kDim; ++b) {
      CHECK(alg.basis_mul(ONE, b) == SignedBasis(1, b));
      CHECK(alg.basis_mul(b, ONE) == SignedBasis(1, b));
    }
  }
}

TEST_CASE("tables reject non-unital grids and bad entries") {
  auto cells = omega_table().to_strings();
  cells[0][2] = "-j";
  CHECK_THROWS_AS(MultiplicationTable::from_strings("bad", cells), InvalidTable);
  cells = omega_table().to_strings();
  cells[3][0] = "j";
  CHECK_THROWS_AS(MultiplicationTable::from_strings("bad", cells), InvalidTable);
  cells = omega_table().to_strings();
  cells[2][2] = "2k";
  CHECK_THROWS_AS(MultiplicationTable::from_strings("bad", cells), InvalidTable);
  cells[2][2] = "+k";
  CHECK_THROWS_AS(MultiplicationTable::from_strings("bad", cells), InvalidTable);
}

TEST_CASE("algebra definition files") {
  const auto t = parse_algebra_json(algebra_json(quaternion_table()));
  CHECK(t == quaternion_table());
  CHECK(t.name() == "quaternion");
  CHECK_THROWS_AS(parse_algebra_json("{\"name\": \"x\"}"), InvalidTable);
  CHECK_THROWS_AS(parse_algebra_json("{\"name\": \"x\", \"table\": [[\"1\"]]}"), InvalidTable);
  CHECK_THROWS_AS(parse_algebra_json("not json"), InvalidTable);
  CHECK_THROWS_AS(load_algebra_file("/nonexistent/algebra.json"), IoError);
  CHECK_THROWS_AS(resolve_algebra("octonion"), InvalidTable);
  CHECK(resolve_algebra("complex").name() == "complex");
}

TEST_CASE("mul: worked omega examples") {
  const Algebra w = Algebra::omega();
  CHECK(w.mul(ex(1, 0, 0, -1), ex(0, 0, 0, 1)).is_zero());

  const ExactNum x = ex(3, -2, 5, 7);
  CHECK(w.mul(x, ExactNum()).is_zero());
  CHECK(w.mul(x, ExactNum::real(1)) == x);
  CHECK(w.mul(ExactNum::real(1), x) == x);
}

TEST_CASE("mul: phi phases add on a grid") {
  const Algebra w = Algebra::omega();
  for (int a = 0; a <= 12; ++a)
    for (int b = 0; b <= 12; ++b) {
      const double x = a * std::numbers::pi / 6;
      const double y = b * std::numbers::pi / 6;
      const FloatNum qx(0, 0, std::sin(x), std::cos(x));
      const FloatNum qy(0, 0, std::sin(y), std::cos(y));
      const FloatNum expected(0, 0, std::sin(x + y), std::cos(x + y));
      CHECK(approx_equal(w.mul(qx, qy), expected, 1e-14));
      CHECK(approx_equal(w.mul(qx, qy), oracle::omega_mul(qx, qy), 1e-15));
    }
}

TEST_CASE("mul agrees with the hand-expanded products") {
  oracle::RationalGen gen(7);
  const Algebra w = Algebra::omega();
  const Algebra h = Algebra::quaternion();
  for (int n = 0; n < 2000; ++n) {
    const ExactNum x = gen.value();
    const ExactNum y = gen.value();
    CHECK(w.mul(x, y) == oracle::omega_mul(x, y));
    CHECK(h.mul(x, y) == oracle::quaternion_mul(x, y));
  }
}

TEST_CASE("linear operations") {
  CHECK(ex(1, 1, 0, 0) + ex(0, 0, 1, 1) == ex(1, 1, 1, 1));
  CHECK(ex(1, 0, 0, -1) * Rational(2) == ex(2, 0, 0, -2));
  const ExactNum x = ex(4, -3, 2, 9);
  CHECK((x - x).is_zero());
  CHECK(-x == ex(-4, 3, -2, -9));
  CHECK(format(ex(2, 0, 0, -2)) == "2 - 2k");
  CHECK(format(ex(0, 0, 0, -1)) == "-k");
  CHECK(format(ExactNum()) == "0");
  CHECK(format(ExactNum(Rational(1, 2), 0, 0, 0)) == "1/2");
}

TEST_CASE("conjugations") {
  CHECK(conjugate(ex(3, 2, 0, 0), Conjugation::psi) == ex(3, -2, 0, 0));
  CHECK(conjugate(ex(0, 0, 1, 1), Conjugation::phi) == ex(0, 0, -1, 1));
  CHECK(conjugate(ex(1, 1, 1, 1), Conjugation::full) == ex(1, -1, -1, -1));
}

TEST_CASE("phi conjugation is complex conjugation about k") {
  const Algebra w = Algebra::omega();
  oracle::RationalGen gen(11);
  for (int n = 0; n < 200; ++n) {
    ExactNum x = gen.value();
    x[0] = 0;
    x[1] = 0;
    const ExactNum norm = w.mul(x, conjugate(x, Conjugation::phi));
    CHECK(norm == ExactNum(0, 0, 0, x[2] * x[2] + x[3] * x[3]));
  }
}

TEST_CASE("invert") {
  const Algebra w = Algebra::omega();
  const Algebra h = Algebra::quaternion();
  CHECK(w.invert(ex(0, 1, 0, 0)) == ex(0, -1, 0, 0));
  CHECK(h.invert(ex(0, 0, 1, 0)) == ex(0, 0, -1, 0));

  CHECK_THROWS_AS(w.invert(ex(0, 0, 0, 1)), SingularElement);
  CHECK(oracle::determinant(oracle::omega_left_matrix(ex(0, 0, 0, 1))) == 0);
  CHECK_THROWS_AS(w.invert(ex(1, 0, 0, -1)), SingularElement);
  CHECK(oracle::determinant(oracle::omega_left_matrix(ex(1, 0, 0, -1))) == 0);
  CHECK_THROWS_AS(w.invert(ExactNum()), SingularElement);
  CHECK_THROWS_AS(w.invert(FloatNum(0, 0, 0, 1)), SingularElement);
  CHECK_THROWS_AS(w.invert(FloatNum()), SingularElement);
}

TEST_CASE("invert matches the determinant oracle and round-trips exactly") {
  const Algebra w = Algebra::omega();
  oracle::RationalGen gen(3);
  int invertible = 0;
  for (int n = 0; n < 500; ++n) {
    const ExactNum x = gen.value();
    const bool singular = oracle::determinant(oracle::omega_left_matrix(x)) == 0;
    if (singular) {
      CHECK_THROWS_AS(w.invert(x), SingularElement);
      continue;
    }
    ++invertible;
    const ExactNum y = w.invert(x);
    CHECK(w.mul(x, y) == ExactNum::real(1));
    CHECK(w.mul(y, x) == ExactNum::real(1));
  }
  CHECK(invertible > 400);
}

TEST_CASE("float invert round trip") {
  const Algebra w = Algebra::omega();
  const Algebra h = Algebra::quaternion();
  oracle::FloatGen gen(5);
  for (int n = 0; n < 500; ++n) {
    FloatNum x = gen.value();
    // Keep away from the zero-divisor cone of Omega: both idempotent components sizeable.
    x[0] += 2.0;
    x[3] += 0.5;
    CHECK(approx_equal(w.mul(x, w.invert(x)), FloatNum::real(1.0), 1e-12));
    CHECK(approx_equal(h.mul(x, h.invert(x)), FloatNum::real(1.0), 1e-12));
  }
}

TEST_CASE("check_properties: omega") {
  const PropertyReport r = Algebra::omega().properties();
  CHECK(r.unital);
  CHECK(r.commutative);
  CHECK(r.associative);
  REQUIRE(r.zero_divisor);
  CHECK(r.zero_divisor->left == ex(1, 0, 0, -1));
  CHECK(r.zero_divisor->right == ex(0, 0, 0, 1));
  CHECK(r.has_closed({J, K}));
  CHECK(r.has_closed({ONE, I}));
  CHECK(r.has_closed({ONE, I, J, K}));
  const ComplexStructure* phi = r.complex_structure_on({J, K});
  REQUIRE(phi);
  CHECK(phi->unity == ex(0, 0, 0, 1));
  CHECK(phi->imaginary == ex(0, 0, 1, 0));
  CHECK(phi->normalised());
  const ComplexStructure* psi = r.complex_structure_on({ONE, I});
  REQUIRE(psi);
  CHECK(psi->unity == ex(1, 0, 0, 0));
  CHECK(psi->imaginary == ex(0, 1, 0, 0));
  // span(1,k) is closed but split (k is a nontrivial idempotent), so no complex structure.
  CHECK(r.has_closed({ONE, K}));
  CHECK(r.complex_structure_on({ONE, K}) == nullptr);
}

TEST_CASE("check_properties: quaternions") {
  const PropertyReport r = Algebra::quaternion().properties();
  CHECK_FALSE(r.commutative);
  REQUIRE(r.noncommuting_pair);
  CHECK(r.associative);
  CHECK_FALSE(r.zero_divisor);
  CHECK_FALSE(r.has_closed({J, K}));
  CHECK(quaternion_table()(J, K) == sb("i"));
}

TEST_CASE("check_properties: complex embeds C on psi") {
  const PropertyReport r = Algebra::complex().properties();
  const ComplexStructure* psi = r.complex_structure_on({ONE, I});
  REQUIRE(psi);
  CHECK(psi->unity == ex(1, 0, 0, 0));
  CHECK(psi->imaginary == ex(0, 1, 0, 0));
  CHECK(r.commutative);
  CHECK(r.associative);
}

TEST_CASE("report witnesses re-verify under table arithmetic") {
  for (const auto* name : {"omega", "quaternion", "complex"}) {
    const Algebra alg(*builtin_table(name));
    const PropertyReport& r = alg.properties();
    if (r.zero_divisor) {
      CHECK_FALSE(r.zero_divisor->left.is_zero());
      CHECK_FALSE(r.zero_divisor->right.is_zero());
      CHECK(alg.mul(r.zero_divisor->left, r.zero_divisor->right).is_zero());
    }
    for (const auto& cs : r.complex_structures) {
      CHECK(alg.mul(cs.unity, cs.unity) == cs.unity);
      CHECK(alg.mul(cs.unity, cs.imaginary) == cs.imaginary);
      CHECK(alg.mul(cs.imaginary, cs.unity) == cs.imaginary);
      CHECK(alg.mul(cs.imaginary, cs.imaginary) == -(cs.unity * cs.scale));
    }
    for (const auto& s : r.closed_subalgebras)
      for (BasisIndex a : s)
        for (BasisIndex b : s)
          CHECK(std::find(s.begin(), s.end(), alg.basis_mul(a, b).basis()) != s.end());
  }
}

TEST_CASE("closed plane with unity but real square roots is split") {
  auto cells = omega_table().to_strings();
  cells[2][2] = "-j";
  const Algebra alg(MultiplicationTable::from_strings("skew", cells));
  const PlaneAnalysis plane = analyze_plane(alg.table(), J, K);
  REQUIRE(plane.closed);
  REQUIRE(plane.unity);
  CHECK(*plane.unity == ex(0, 0, 0, 1));
  // j*j = -j gives x^2 = -x, discriminant 1.
  CHECK_FALSE(plane.complex);
}

TEST_CASE("plane without unity") {
  // j*j = k, j*k = k, k*k = k: no element acts as identity on span(j,k).
  auto cells = omega_table().to_strings();
  cells[2][2] = "k";
  cells[2][3] = "k";
  cells[3][2] = "k";
  const PlaneAnalysis plane = analyze_plane(MultiplicationTable::from_strings("nounit", cells), J, K);
  CHECK(plane.closed);
  CHECK_FALSE(plane.unity);
  CHECK_FALSE(plane.complex);
}

TEST_CASE("unitality on random values") {
  oracle::RationalGen gen(19);
  for (const auto* name : {"omega", "quaternion", "complex"}) {
    const Algebra alg(*builtin_table(name));
    for (int n = 0; n < 300; ++n) {
      const ExactNum x = gen.value();
      CHECK(alg.mul(ExactNum::real(1), x) == x);
      CHECK(alg.mul(x, ExactNum::real(1)) == x);
    }
  }
}

TEST_CASE("omega is commutative and associative on 10,000 random rational samples") {
  const Algebra w = Algebra::omega();
  oracle::RationalGen gen(2024);
  int commute_failures = 0;
  int assoc_failures = 0;
  for (int n = 0; n < 10000; ++n) {
    const ExactNum x = gen.value();
    const ExactNum y = gen.value();
    const ExactNum z = gen.value();
    if (w.mul(x, y) != w.mul(y, x)) ++commute_failures;
    if (w.mul(w.mul(x, y), z) != w.mul(x, w.mul(y, z))) ++assoc_failures;
  }
  CHECK(commute_failures == 0);
  CHECK(assoc_failures == 0);
}

TEST_CASE("omega basis triples associate") {
  const Algebra w = Algebra::omega();
  for (BasisIndex a = 0; a < kDim; ++a)
    for (BasisIndex b = 0; b < kDim; ++b)
      for (BasisIndex c = 0; c < kDim; ++c) {
        const ExactNum ea = ExactNum::unit(a), eb = ExactNum::unit(b), ec = ExactNum::unit(c);
        CHECK(w.mul(w.mul(ea, eb), ec) == w.mul(ea, w.mul(eb, ec)));
      }
}

TEST_CASE("quaternions do not commute: i*j = k, j*i = -k") {
  const Algebra h = Algebra::quaternion();
  CHECK(h.mul(ExactNum::unit(I), ExactNum::unit(J)) == ex(0, 0, 0, 1));
  CHECK(h.mul(ExactNum::unit(J), ExactNum::unit(I)) == ex(0, 0, 0, -1));
}

TEST_CASE("phi is closed and k is its unity") {
  const Algebra w = Algebra::omega();
  oracle::RationalGen gen(23);
  for (int n = 0; n < 1000; ++n) {
    ExactNum x = gen.value(), y = gen.value();
    x[0] = x[1] = y[0] = y[1] = 0;
    const ExactNum p = w.mul(x, y);
    CHECK(p[0] == 0);
    CHECK(p[1] == 0);
    CHECK(w.mul(ExactNum::unit(K), x) == x);
  }
  CHECK(w.mul(ExactNum::unit(J), ExactNum::unit(J)) == ex(0, 0, 0, -1));
}

TEST_CASE("memoised report equals a fresh analysis, also under concurrent first use") {
  const Algebra w = Algebra::omega();
  CHECK_FALSE(w.properties_cached());
  std::vector<const PropertyReport*> seen(8);
  std::vector<std::thread> threads;
  for (std::size_t n = 0; n < seen.size(); ++n) threads.emplace_back([&, n] { seen[n] = &w.properties(); });
  for (auto& t : threads) t.join();
  for (const auto* p : seen) CHECK(p == seen[0]);
  CHECK(w.properties_cached());
  CHECK(w.properties() == check_properties(omega_table()));
  const Algebra copy = w;
  CHECK(copy.properties_cached());
  CHECK(&copy.properties() == seen[0]);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wrep/families.hpp"
#include "wrep/matrix.hpp"

using namespace wrep;

namespace {

const std::vector<std::string> T{"t"};

Laurent lc(long v) { return Laurent::constant(T, CycRat(v)); }
Laurent lvar() { return Laurent::variable(T, "t"); }
Laurent ec(long v) { return Laurent::constant({}, CycRat(v)); }  // evaluated ring

// independent determinant oracle: Laplace cofactor expansion
Laurent laplace_det(const LMat& a) {
  const int n = a.rows();
  if (n == 1) return a(0, 0);
  Laurent acc = ring_zero_like(a.proto());
  for (int j = 0; j < n; ++j) {
    LMat sub(n - 1, n - 1, ring_zero_like(a.proto()));
    for (int i = 1; i < n; ++i)
      for (int c = 0, sc = 0; c < n; ++c) {
        if (c == j) continue;
        sub(i - 1, sc++) = a(i, c);
      }
    Laurent term = a(0, j) * laplace_det(sub);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

LMat random_exact(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> v(-4, 4);
  LMat m(n, n, ec(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = ec(v(rng));
  return m;
}

}  // namespace

TEST_CASE("identity and block products") {
  LMat id3 = LMat::identity(3, lc(1));
  LMat m(3, 3, lc(0));
  m(0, 1) = lvar();
  m(1, 0) = lc(1);
  m(2, 2) = lc(5);
  CHECK(id3 * m == m);
  // the swap block squares to t * I
  LMat swp(2, 2, lc(0));
  swp(0, 1) = lvar();
  swp(1, 0) = lc(1);
  LMat sq = swp * swp;
  CHECK(sq(0, 0) == lvar());
  CHECK(sq(1, 1) == lvar());
  CHECK(sq(0, 1).is_zero());
  CHECK(sq(1, 0).is_zero());
}

TEST_CASE("determinants against the cofactor oracle") {
  CHECK(det(LMat::identity(5, lc(1))) == lc(1));
  // tridiagonal change-of-basis matrix at n = 3: det = z + z^2 + z^3
  LMat q3 = q_change_of_basis<Laurent>(3, lvar());
  Laurent expected = lvar() * poly_p(3, "t");
  CHECK(det(q3) == expected);
  CHECK(laplace_det(q3) == expected);
  // standard braid image: det = -z
  FamilyParams fp;
  fp.family = Family::Tau;
  fp.n = 3;
  fp.assign["t"] = ParamValue::sym();
  LRep tau3 = std::get<LRep>(make_family(fp));
  CHECK(det(tau3.sigma[0]) == lc(0) - lvar());
  std::mt19937_64 rng(5);
  for (int i = 0; i < 60; ++i) {
    LMat a = random_exact(4, rng);
    CHECK(det(a) == laplace_det(a));
  }
}

TEST_CASE("determinant is multiplicative and product associativity") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 40; ++i) {
    LMat a = random_exact(4, rng), b = random_exact(4, rng), c = random_exact(4, rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(det(a * b) == det(a) * det(b));
  }
}

TEST_CASE("exact inverse") {
  CHECK(inverse(LMat::identity(4, lc(1))) == LMat::identity(4, lc(1)));
  // braid image over the Laurent ring: det -t is a unit
  FamilyParams fp;
  fp.family = Family::BurauV;
  fp.n = 3;
  fp.assign["t"] = ParamValue::sym();
  LRep rep = std::get<LRep>(make_family(fp));
  LMat g = rep.sigma[0];
  CHECK(g * inverse(g) == LMat::identity(2, lc(1)));
  CHECK(inverse(g) * g == LMat::identity(2, lc(1)));
  LMat bad(1, 1, poly_p(2, "t"));
  CHECK_THROWS_AS(inverse(bad), NonUnitDeterminant);
  LMat zero(2, 2, lc(0));
  CHECK_THROWS_AS(inverse(zero), Singular);
  std::mt19937_64 rng(13);
  int done = 0;
  while (done < 25) {
    LMat a = random_exact(4, rng);
    if (det(a).is_zero()) continue;
    CHECK(a * inverse(a) == LMat::identity(4, ec(1)));
    ++done;
  }
  // numeric inverse round trip
  CMat c(3, 3, CD(0, 0));
  std::mt19937_64 rng2(17);
  std::normal_distribution<double> nd;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) c(i, j) = CD(nd(rng2), nd(rng2));
  CHECK(max_abs_diff(c * inverse(c), CMat::identity(3, CD(1, 0))) < 1e-10);
}

TEST_CASE("kernels") {
  LMat zero22(2, 2, ec(0));
  CHECK(kernel_basis(zero22).size() == 2);
  // first shifted braid image of the corank-1 family at n = 5, z = 2 (W basis)
  FamilyParams fp;
  fp.family = Family::BurauW;
  fp.n = 5;
  fp.assign["t"] = ParamValue::of(CycRat(2));
  LRep rep = std::get<LRep>(make_family(fp));
  LMat c1 = rep.sigma[0] - LMat::identity(4, ec(1));
  auto ker = kernel_basis(c1);
  CHECK(ker.size() == 3);
  // kernel vectors live on coordinates 2..n-1 (the e_1 direction is not fixed)
  for (const auto& v : ker) CHECK(v(0, 0).is_zero());
  // standard family at n = 4, z = 2: kernel dimension n - 2
  FamilyParams fp2;
  fp2.family = Family::Tau;
  fp2.n = 4;
  fp2.assign["t"] = ParamValue::of(CycRat(2));
  LRep tau = std::get<LRep>(make_family(fp2));
  LMat tc1 = tau.sigma[0] - LMat::identity(4, ec(1));
  CHECK(kernel_basis(tc1).size() == 2);
  CHECK_THROWS_AS(kernel_basis(LMat(2, 2, lvar())), SymbolicInput);
}

TEST_CASE("rank") {
  CHECK(rank(LMat::identity(6, ec(1))) == 6);
  FamilyParams fp;
  fp.family = Family::TildeBeta;
  fp.n = 5;
  fp.assign["t"] = ParamValue::of(CycRat(2));
  LRep rep = std::get<LRep>(make_family(fp));
  CHECK(rank(rep.alpha[0] - LMat::identity(4, ec(1))) == 1);
  FamilyParams fp2;
  fp2.family = Family::TildeTau;
  fp2.n = 4;
  fp2.assign["t"] = ParamValue::of(CycRat(2));
  fp2.assign["q"] = ParamValue::of(CycRat(3));
  LRep tt = std::get<LRep>(make_family(fp2));
  CHECK(rank(tt.sigma[0] - LMat::identity(4, ec(1))) == 2);
}

TEST_CASE("rank plus nullity") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 40; ++i) {
    LMat a = random_exact(5, rng);
    CHECK(rank(a) + static_cast<int>(kernel_basis(a).size()) == 5);
  }
}

TEST_CASE("linear solve") {
  LMat id = LMat::identity(3, ec(1));
  LMat b(3, 1, ec(0));
  b(0, 0) = ec(2);
  b(2, 0) = ec(-1);
  auto sol = solve_linear(id, b);
  REQUIRE(sol.solvable);
  CHECK(*sol.particular == b);
  CHECK(sol.kernel.empty());
  // image membership for a rank-1 operator
  FamilyParams fp;
  fp.family = Family::BurauV;
  fp.n = 3;
  fp.assign["t"] = ParamValue::of(CycRat(2));
  LRep rep = std::get<LRep>(make_family(fp));
  LMat c1 = rep.sigma[0] - LMat::identity(2, ec(1));
  LMat v1(2, 1, ec(0));
  v1(0, 0) = c1(0, 0);
  v1(1, 0) = c1(1, 0);
  CHECK(solve_linear(c1, v1).solvable);
  LMat off(2, 1, ec(0));
  off(1, 0) = ec(1);  // not proportional to the image line
  CHECK_FALSE(solve_linear(c1, off).solvable);
}

TEST_CASE("numeric rank and kernel agree with exact evaluation") {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<int> num(1, 9), den(1, 4);
  for (int trial = 0; trial < 50; ++trial) {
    CycRat z(Rat(num(rng), den(rng)));
    FamilyParams fp;
    fp.family = Family::BurauW;
    fp.n = 5;
    fp.assign["t"] = ParamValue::of(z);
    LRep exact = std::get<LRep>(make_family(fp));
    LMat c1 = exact.sigma[1] - LMat::identity(4, ec(1));
    CMat c1n = to_complex(c1);
    CHECK(rank(c1n, 1e-9) == rank(c1));
    CHECK(kernel_basis(c1n, 1e-9).size() == kernel_basis(c1).size());
  }
}

TEST_CASE("shape errors") {
  LMat a(2, 3, lc(0)), b(2, 3, lc(0));
  CHECK_THROWS_AS(a * b, ShapeMismatch);
  CHECK_THROWS_AS(det(a), NotSquare);
  CHECK_THROWS_AS(inverse(a), NotSquare);
}

#include <doctest.h>

#include <algorithm>

#include "rst/examples.hpp"
#include "rst/product.hpp"
#include "test_helpers.hpp"

using namespace rst;

namespace {

RealSpectralTriple thin_torus(int n, int variant_or_sign) {
  TorusSpec spec;
  spec.n = n;
  spec.K = 1;
  spec.active_axes = 1;
  if (n % 2 == 0)
    spec.j_variant = variant_or_sign;
  else
    spec.odd_sign = variant_or_sign;
  return torus_triple(spec);
}

double eigenbasis_worst_residual(const ComplexMatrix& d,
                                 const std::vector<EigenPair>& basis) {
  double worst = 0.0;
  for (const auto& p : basis) {
    const double r =
        max_abs(ComplexVector(d * p.vector - p.value * p.vector)) /
        (1.0 + std::abs(p.value));
    worst = std::max(worst, r);
  }
  return worst;
}

double gram_deviation(const std::vector<EigenPair>& basis) {
  const Eigen::Index n = static_cast<Eigen::Index>(basis.size());
  ComplexMatrix v(basis[0].vector.size(), n);
  for (Eigen::Index i = 0; i < n; ++i) v.col(i) = basis[i].vector;
  return max_abs(ComplexMatrix(v.adjoint() * v - identity(static_cast<int>(n))));
}

}  // namespace

TEST_CASE("predicted_ko reproduces the table examples") {
  CHECK(*predicted_ko({0, 1}, {2, 1}, ProductVariant::D) == KOLabel{2, 1});
  CHECK(!predicted_ko({0, 1}, {2, 1}, ProductVariant::Dt).has_value());
  CHECK(*predicted_ko({4, 1}, {6, 1}, ProductVariant::D) == KOLabel{2, 1});
  CHECK(*predicted_ko({2, 1}, {1, -1}, ProductVariant::D) == KOLabel{3, 1});
  CHECK(*predicted_ko({3, 1}, {4, 1}, ProductVariant::Dt) == KOLabel{7, 1});
  CHECK_THROWS_AS(predicted_ko({1, -1}, {2, 1}, ProductVariant::D),
                  ParityMismatchError);
}

TEST_CASE("m_matrix closed form matches the stored table cells") {
  CHECK(max_abs(ComplexMatrix(m_matrix(3, 1, 1) - pauli(0))) == 0.0);
  CHECK(max_abs(ComplexMatrix(m_matrix(1, 3, -1) - pauli(0))) == 0.0);
  CHECK(max_abs(ComplexMatrix(m_matrix(5, 5, 1) - pauli(2))) == 0.0);

  // every cell against the sign-consistency solve
  for (int n1 : {1, 3, 5, 7}) {
    for (int n2 : {1, 3, 5, 7}) {
      const int v1 = (n1 % 8 == 3 || n1 % 8 == 7) ? 1 : -1;
      const int v2 = (n2 % 8 == 3 || n2 % 8 == 7) ? 1 : -1;
      auto [mp, mm] = solve_m_matrices(table1_signature({n1 % 8, v1}),
                                       table1_signature({n2 % 8, v2}),
                                       {1, 2, 3});
      CHECK(max_abs(ComplexMatrix(m_matrix(n1, n2, 1) - mp)) <= kTolAlg);
      CHECK(max_abs(ComplexMatrix(m_matrix(n1, n2, -1) - mm)) <= kTolAlg);
    }
  }
}

TEST_CASE("intertwiner U is the diagonal sector involution") {
  const ComplexMatrix u = intertwiner_U(pauli(3), pauli(3));
  ComplexMatrix want = identity(4);
  want(3, 3) = -1;
  CHECK(max_abs(ComplexMatrix(u - want)) == 0.0);
  CHECK(max_abs(ComplexMatrix(u * u - identity(4))) == 0.0);
}

TEST_CASE("U conjugates D into Dt on even-even instances") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 4; ++trial) {
    const auto f1 = testing::random_graded_factor(rng, 2, 2, 1);
    const auto f2 = testing::random_graded_factor(rng, 3, 2, 2);
    ProductRecipe d_recipe{ProductVariant::D};
    ProductRecipe dt_recipe{ProductVariant::Dt};
    const ComplexMatrix d =
        product_dirac(f1.D, &f1.chi, f2.D, &f2.chi, d_recipe);
    const ComplexMatrix dt =
        product_dirac(f1.D, &f1.chi, f2.D, &f2.chi, dt_recipe);
    const ComplexMatrix u = intertwiner_U(f1.chi, f2.chi);
    CHECK(is_unitary(u));
    CHECK(max_abs(ComplexMatrix(u * d * u.adjoint() - dt)) <=
          kTolAlg * (1.0 + max_abs(d)));
  }
}

TEST_CASE("predicted_spectrum closed forms") {
  // {+-3} x {4} -> {+-5}
  SpectrumReport s1;
  s1.lines = {{-3.0, 1}, {3.0, 1}};
  SpectrumReport s2;
  s2.lines = {{4.0, 1}};
  const SpectrumReport got = predicted_spectrum(s1, {0, 0}, s2);
  REQUIRE(got.lines.size() == 2);
  CHECK(got.lines[0].value == doctest::Approx(-5.0));
  CHECK(got.lines[1].value == doctest::Approx(5.0));

  // pure kernel with K+ = 2: {+7 x2}
  SpectrumReport ker;
  ker.lines = {{0.0, 2}};
  SpectrumReport s7;
  s7.lines = {{7.0, 1}};
  const SpectrumReport got2 = predicted_spectrum(ker, {2, 0}, s7);
  REQUIRE(got2.lines.size() == 1);
  CHECK(got2.lines[0].value == doctest::Approx(7.0));
  CHECK(got2.lines[0].multiplicity == 2);

  // kernel x kernel stays at zero
  SpectrumReport z1;
  z1.lines = {{0.0, 2}};
  SpectrumReport z2;
  z2.lines = {{0.0, 1}};
  const SpectrumReport got3 = predicted_spectrum(z1, {1, 1}, z2);
  REQUIRE(got3.lines.size() == 1);
  CHECK(got3.lines[0].value == doctest::Approx(0.0));
  CHECK(got3.lines[0].multiplicity == 2);

  SpectrumReport asym;
  asym.lines = {{-1.0, 1}, {2.0, 1}};
  CHECK_THROWS_AS(predicted_spectrum(asym, {0, 0}, s2),
                  AsymmetricSpectrumError);
  CHECK_THROWS_AS(predicted_spectrum(ker, {1, 0}, s2),
                  MissingKernelSplitError);
}

TEST_CASE("spectrum oracle: eigh(D_prod) matches the closed form") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 3; ++trial) {
    const auto even1 = testing::random_graded_factor(rng, 3, 2, 2);
    const auto even2 = testing::random_graded_factor(rng, 2, 2, 1);
    const ComplexMatrix odd1 = testing::random_hermitian(rng, 3);
    const ComplexMatrix odd2 = testing::random_hermitian(rng, 4);

    struct Case {
      const ComplexMatrix *d1, *chi1, *d2, *chi2;
      ProductVariant v;
    };
    const Case cases[] = {
        {&even1.D, &even1.chi, &even2.D, &even2.chi, ProductVariant::D},
        {&even1.D, &even1.chi, &even2.D, &even2.chi, ProductVariant::Dt},
        {&even1.D, &even1.chi, &odd2, nullptr, ProductVariant::D},
        {&odd1, nullptr, &even2.D, &even2.chi, ProductVariant::Dt},
        {&odd1, nullptr, &odd2, nullptr, ProductVariant::OOPlus},
    };
    for (const auto& c : cases) {
      ProductRecipe recipe{c.v};
      const ComplexMatrix d = product_dirac(*c.d1, c.chi1, *c.d2, c.chi2,
                                            recipe);
      const SpectrumReport want =
          predicted_product_spectrum(*c.d1, c.chi1, *c.d2, c.chi2, c.v);
      CHECK(same_spectrum(eigh(d).spectrum, want));
    }
  }
}

TEST_CASE("kernel of the product counts dim ker D1 * dim ker D2") {
  std::mt19937 rng(29);
  const auto f1 = testing::random_graded_factor(rng, 3, 2, 1);  // ker dim 3
  const auto f2 = testing::random_graded_factor(rng, 2, 2, 1);  // ker dim 2
  ProductRecipe recipe{ProductVariant::D};
  const ComplexMatrix d = product_dirac(f1.D, &f1.chi, f2.D, &f2.chi, recipe);
  CHECK(eigh(d).spectrum.kernel_multiplicity() == 6);

  // odd-odd doubles through the C^2 factor
  ComplexMatrix o1 = ComplexMatrix::Zero(3, 3);
  o1(0, 0) = 2.0;  // ker dim 2
  ComplexMatrix o2 = ComplexMatrix::Zero(2, 2);
  o2(0, 0) = 1.0;  // ker dim 1
  ProductRecipe oo{ProductVariant::OOPlus};
  const ComplexMatrix doo = product_dirac(o1, nullptr, o2, nullptr, oo);
  CHECK(eigh(doo).spectrum.kernel_multiplicity() == 4);
}

TEST_CASE("closed-form eigenbasis: residuals, orthonormality, completeness") {
  std::mt19937 rng(31);
  const auto f1 = testing::random_graded_factor(rng, 3, 2, 1);
  const auto f2 = testing::random_graded_factor(rng, 2, 2, 1);
  const ComplexMatrix odd1 = testing::random_hermitian(rng, 3);
  const ComplexMatrix odd2 = testing::random_hermitian(rng, 2);

  for (ProductVariant v :
       {ProductVariant::D, ProductVariant::Dt, ProductVariant::OOPlus}) {
    ProductRecipe recipe{v};
    const ComplexMatrix* d1 = v == ProductVariant::OOPlus ? &odd1 : &f1.D;
    const ComplexMatrix* c1 =
        v == ProductVariant::OOPlus ? nullptr : &f1.chi;
    const ComplexMatrix* d2 = v == ProductVariant::OOPlus ? &odd2 : &f2.D;
    const ComplexMatrix* c2 =
        v == ProductVariant::OOPlus ? nullptr : &f2.chi;
    const ComplexMatrix d = product_dirac(*d1, c1, *d2, c2, recipe);
    const auto basis = product_eigenbasis(*d1, c1, *d2, c2, recipe);
    CHECK(static_cast<Eigen::Index>(basis.size()) == d.rows());
    CHECK(eigenbasis_worst_residual(d, basis) <= kTolNum);
    CHECK(gram_deviation(basis) <= kTolNum);
  }
}

TEST_CASE("eigenbasis angle examples") {
  // lambda = mu = 1: theta = pi/8, eigenvalue sqrt(2)
  ComplexMatrix d1 = pauli(3);           // lambda = +-1, chi-partner via s1
  ComplexMatrix chi1 = pauli(1);
  // chi must anticommute with D and square to 1: use D = s3, chi = s1
  ProductRecipe recipe{ProductVariant::D};
  ComplexMatrix d2 = identity(1);
  d2(0, 0) = 1.0;  // mu = 1 on a 1-dim factor
  const auto basis = product_eigenbasis(d1, &chi1, d2, nullptr, recipe);
  REQUIRE(basis.size() == 2);
  CHECK(std::abs(basis[0].value) == doctest::Approx(std::sqrt(2.0)));

  // mu = 0: u+ = v x w with eigenvalue lambda
  ComplexMatrix dz = ComplexMatrix::Zero(1, 1);
  const auto basis0 = product_eigenbasis(d1, &chi1, dz, nullptr, recipe);
  REQUIRE(basis0.size() == 2);
  CHECK(basis0[0].value == doctest::Approx(1.0));

  // odd-odd lambda = 3, mu = 4 lands on +-5 through the C^2 slots
  ComplexMatrix o1 = ComplexMatrix::Constant(1, 1, 3.0);
  ComplexMatrix o2 = ComplexMatrix::Constant(1, 1, 4.0);
  ProductRecipe oo{ProductVariant::OOPlus};
  const auto basis_oo = product_eigenbasis(o1, nullptr, o2, nullptr, oo);
  REQUIRE(basis_oo.size() == 2);
  std::vector<double> vals = {basis_oo[0].value, basis_oo[1].value};
  std::sort(vals.begin(), vals.end());
  CHECK(vals[0] == doctest::Approx(-5.0));
  CHECK(vals[1] == doctest::Approx(5.0));
  const ComplexMatrix doo = product_dirac(o1, nullptr, o2, nullptr, oo);
  CHECK(eigenbasis_worst_residual(doo, basis_oo) <= kTolNum);
}

TEST_CASE("product_triple 1- x 1- with oo+ lands in the 2+ column") {
  const RealSpectralTriple c1 = thin_torus(1, 1);
  ProductRecipe recipe{ProductVariant::OOPlus};
  const RealSpectralTriple prod = product_triple(c1, c1, recipe);
  REQUIRE(prod.claimed_label.has_value());
  CHECK(*prod.claimed_label == KOLabel{2, 1});
  // M+ = s2 sits in the last factor of J's linear part
  const KOSignature sig = signature_of(prod.J, prod.D, &*prod.chi);
  CHECK(ko_label(sig) == KOLabel{2, 1});

  ProductRecipe minus{ProductVariant::OOMinus};
  const RealSpectralTriple prodm = product_triple(c1, c1, minus);
  CHECK(*prodm.claimed_label == KOLabel{2, -1});
}

TEST_CASE("blank cells refuse to build and force to an inconsistent J") {
  const RealSpectralTriple a = two_point_triple(1.0, 1);   // 0+
  const RealSpectralTriple b = thin_torus(2, 1);           // 2+
  ProductRecipe recipe{ProductVariant::Dt};
  CHECK_THROWS_AS(product_triple(a, b, recipe), NoTableEntryError);

  recipe.force = true;
  const RealSpectralTriple forced = product_triple(a, b, recipe);
  CHECK(!forced.claimed_label.has_value());
  CHECK_THROWS_AS(signature_of(forced.J, forced.D, &*forced.chi),
                  NotASignatureError);
}

TEST_CASE("oracle equivalence on a sample of filled cells") {
  struct Cell {
    KOLabel l1, l2;
    ProductVariant v;
  };
  const Cell cells[] = {
      {{0, 1}, {2, 1}, ProductVariant::D},
      {{2, 1}, {0, -1}, ProductVariant::D},
      {{4, 1}, {0, 1}, ProductVariant::Dt},
      {{2, 1}, {1, -1}, ProductVariant::D},
      {{3, 1}, {4, 1}, ProductVariant::Dt},
      {{1, -1}, {0, -1}, ProductVariant::Dt},
  };
  for (const auto& cell : cells) {
    auto build = [](const KOLabel& l) {
      if (l.is_even() && l.n_mod8 == 0) return two_point_triple(1.0, l.variant);
      return thin_torus(l.n_mod8, l.is_even() ? l.variant : 1);
    };
    const RealSpectralTriple t1 = build(cell.l1);
    const RealSpectralTriple t2 = build(cell.l2);
    ProductRecipe recipe{cell.v};
    const RealSpectralTriple prod = product_triple(t1, t2, recipe);
    const KOSignature sig =
        signature_of(prod.J, prod.D, prod.chi ? &*prod.chi : nullptr);
    CHECK(ko_label(sig) == *predicted_ko(cell.l1, cell.l2, cell.v));
  }
}

TEST_CASE("odd-odd Pauli permutation freedom") {
  const RealSpectralTriple c1 = thin_torus(1, 1);
  const RealSpectralTriple c3 = thin_torus(3, 1);
  ProductRecipe base{ProductVariant::OOPlus};
  const RealSpectralTriple ref = product_triple(c3, c1, base);
  const KOSignature ref_sig = signature_of(ref.J, ref.D, &*ref.chi);
  const SpectrumReport ref_spec = eigh(ref.D).spectrum;

  for (const std::array<int, 3> assignment :
       {std::array<int, 3>{2, 3, 1}, {3, 1, 2}, {1, 3, 2}, {2, 1, 3}}) {
    ProductRecipe recipe{ProductVariant::OOPlus, assignment};
    const RealSpectralTriple perm = product_triple(c3, c1, recipe);
    const KOSignature sig = signature_of(perm.J, perm.D, &*perm.chi);
    CHECK(sig == ref_sig);
    CHECK(same_spectrum(eigh(perm.D).spectrum, ref_spec));
  }
}

TEST_CASE("parity-recipe mismatches are rejected") {
  const RealSpectralTriple even = two_point_triple(1.0, 1);
  const RealSpectralTriple odd = thin_torus(1, 1);
  CHECK_THROWS_AS(product_triple(odd, even, ProductRecipe{ProductVariant::D}),
                  ParityRecipeMismatchError);
  CHECK_THROWS_AS(
      product_triple(even, odd, ProductRecipe{ProductVariant::Dt}),
      ParityRecipeMismatchError);
  CHECK_THROWS_AS(
      product_triple(odd, odd, ProductRecipe{ProductVariant::D}),
      ParityRecipeMismatchError);
  CHECK_THROWS_AS(
      product_triple(even, even, ProductRecipe{ProductVariant::OOPlus}),
      ParityRecipeMismatchError);
}

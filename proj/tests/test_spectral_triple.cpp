#include <doctest.h>

#include "rst/examples.hpp"
#include "rst/product.hpp"
#include "rst/serialize.hpp"
#include "rst/spectral_triple.hpp"
#include "test_helpers.hpp"

using namespace rst;

TEST_CASE("two-point triple: zero order holds, first order cannot") {
  const RealSpectralTriple t = two_point_triple(1.5, 1);
  validate_triple(t);
  CHECK(check_zero_order(t).passed);
  // [[D, p1], J p1 J^-1] = 1.5 sigma_1 regardless of the J chosen; no
  // antiunitary on C^2 satisfies both conditions with D != 0
  const CheckReport first = check_first_order(t);
  CHECK(!first.passed);
  CHECK(first.max_violation == doctest::Approx(1.5));

  auto [reality, sig] = check_reality(t);
  CHECK(reality.passed);
  REQUIRE(sig.has_value());
  CHECK(sig->eps == 1);
  CHECK(sig->eps_prime == 1);
  CHECK(*sig->eps_dblprime == 1);

  const RealSpectralTriple tm = two_point_triple(1.5, -1);
  auto [reality_m, sig_m] = check_reality(tm);
  CHECK(reality_m.passed);
  CHECK(ko_label(*sig_m) == KOLabel{0, -1});
}

TEST_CASE("one-generator algebra passes both orders with zero violation") {
  RealSpectralTriple t;
  t.hilbert_dim = 2;
  t.algebra.push_back({"1", identity(2)});
  t.D = pauli(1);
  t.J = AntiUnitaryOp(identity(2));
  validate_triple(t);
  const CheckReport zero = check_zero_order(t);
  const CheckReport first = check_first_order(t);
  CHECK(zero.passed);
  CHECK(zero.max_violation == 0.0);
  CHECK(first.passed);
  CHECK(first.max_violation == 0.0);
}

TEST_CASE("hard torus passes orders on the probe, leaks on the full space") {
  TorusSpec spec;
  spec.n = 1;
  spec.K = 3;
  spec.odd_sign = 1;
  const RealSpectralTriple t = torus_triple(spec);
  validate_triple(t);
  CHECK(check_zero_order(t).passed);
  CHECK(check_first_order(t).passed);

  RealSpectralTriple full = t;
  full.probe_subspace.reset();
  CHECK(!check_zero_order(full).passed);   // shift algebra breaks at the edge
  CHECK(!check_first_order(full).passed);  // boundary leakage
}

TEST_CASE("checks are conjugation covariant") {
  std::mt19937 rng(5);
  TorusSpec spec;
  spec.n = 1;
  spec.K = 3;
  spec.odd_sign = 1;
  const RealSpectralTriple t = torus_triple(spec);
  const ComplexMatrix u = testing::random_unitary(rng, t.hilbert_dim);

  RealSpectralTriple moved = t;
  moved.D = u * t.D * u.adjoint();
  moved.J = AntiUnitaryOp(u * t.J.linear_part * u.transpose());
  for (auto& g : moved.algebra) g.rep = u * g.rep * u.adjoint();
  if (t.probe_subspace)
    moved.probe_subspace = u * (*t.probe_subspace) * u.adjoint();

  CHECK(check_zero_order(moved, kTolNum).passed ==
        check_zero_order(t, kTolNum).passed);
  CHECK(check_first_order(moved, kTolNum).passed ==
        check_first_order(t, kTolNum).passed);
  const auto sig = signature_of(moved.J, moved.D, nullptr, kTolNum);
  CHECK(sig == signature_of(t.J, t.D));
}

TEST_CASE("dimension additivity in the single-value case") {
  // spec(D1^2) = {2.25 x2}, spec(D2^2) = {4 x2} -> spec(D^2) = {6.25 x4}
  const RealSpectralTriple t1 = two_point_triple(1.5, 1);
  const RealSpectralTriple t2 = two_point_triple(2.0, 1);
  ProductRecipe recipe;
  recipe.variant = ProductVariant::D;
  const RealSpectralTriple prod = product_triple(t1, t2, recipe);
  const CheckReport rep = check_dimension_spectrum_additivity(t1, t2, prod);
  CHECK(rep.passed);
  const EighResult e = eigh(ComplexMatrix(prod.D * prod.D));
  REQUIRE(e.spectrum.lines.size() == 1);
  CHECK(e.spectrum.lines[0].value == doctest::Approx(6.25));
  CHECK(e.spectrum.lines[0].multiplicity == 4);
}

TEST_CASE("serialization round trip is bit-exact") {
  for (const RealSpectralTriple& t :
       {two_point_triple(1.5, 1), [] {
          TorusSpec spec;
          spec.n = 2;
          spec.K = 1;
          spec.j_variant = -1;
          return torus_triple(spec);
        }()}) {
    const nlohmann::json doc = triple_to_json(t);
    const RealSpectralTriple back =
        triple_from_json(nlohmann::json::parse(doc.dump()));
    CHECK(back.hilbert_dim == t.hilbert_dim);
    CHECK(back.metric_dim == t.metric_dim);
    REQUIRE(back.claimed_label.has_value());
    CHECK(*back.claimed_label == *t.claimed_label);
    REQUIRE(back.algebra.size() == t.algebra.size());
    auto bit_equal = [](const ComplexMatrix& a, const ComplexMatrix& b) {
      if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
      for (Eigen::Index i = 0; i < a.size(); ++i)
        if (a.data()[i].real() != b.data()[i].real() ||
            a.data()[i].imag() != b.data()[i].imag())
          return false;
      return true;
    };
    CHECK(bit_equal(back.D, t.D));
    CHECK(bit_equal(back.J.linear_part, t.J.linear_part));
    for (std::size_t i = 0; i < t.algebra.size(); ++i) {
      CHECK(back.algebra[i].label == t.algebra[i].label);
      CHECK(bit_equal(back.algebra[i].rep, t.algebra[i].rep));
    }
    if (t.chi) CHECK(bit_equal(*back.chi, *t.chi));
    if (t.probe_subspace)
      CHECK(bit_equal(*back.probe_subspace, *t.probe_subspace));
    CHECK(back.meta == t.meta);
  }
}

TEST_CASE("malformed documents are rejected with the right error class") {
  const RealSpectralTriple t = two_point_triple(1.0, 1);
  nlohmann::json good = triple_to_json(t);

  nlohmann::json bad_d = good;
  bad_d["D"][0][1] = nlohmann::json::array({2.0, 0.0});  // breaks hermiticity
  CHECK_THROWS_AS(triple_from_json(bad_d), InvariantViolationError);

  nlohmann::json bad_chi = good;
  bad_chi["chi"] = matrix_to_json(identity(2));
  CHECK_THROWS_AS(triple_from_json(bad_chi), InvariantViolationError);

  nlohmann::json missing = good;
  missing.erase("D");
  CHECK_THROWS_AS(triple_from_json(missing), ParseError);

  nlohmann::json bad_label = good;
  bad_label["claimed_label"] = "9*";
  CHECK_THROWS_AS(triple_from_json(bad_label), ParseError);

  nlohmann::json unknown = good;
  unknown["extra_field"] = 1;
  CHECK_THROWS_AS(triple_from_json(unknown), ParseError);

  nlohmann::json bad_j = good;
  bad_j["J"]["linear_part"][0][0] = nlohmann::json::array({3.0, 0.0});
  CHECK_THROWS_AS(triple_from_json(bad_j), InvariantViolationError);
}

TEST_CASE("validate_triple catches a broken grading") {
  RealSpectralTriple t = two_point_triple(1.0, 1);
  t.chi = identity(2);
  CHECK_THROWS_AS(validate_triple(t), InvariantViolationError);
  t.chi = pauli(1);  // fails [chi, a] = 0 for the diagonal algebra
  CHECK_THROWS_AS(validate_triple(t), InvariantViolationError);
}

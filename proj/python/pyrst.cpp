// Python bindings for the spectral-triple core: gamma representations,
// KO signatures, example triples, products, spectra and orientation cycles.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rst/clifford.hpp"
#include "rst/examples.hpp"
#include "rst/hochschild.hpp"
#include "rst/product.hpp"
#include "rst/serialize.hpp"

namespace py = pybind11;
using namespace rst;

namespace {

std::optional<int> sign_arg(const py::object& obj, const char* what) {
  if (obj.is_none()) return std::nullopt;
  if (py::isinstance<py::str>(obj)) {
    const std::string s = obj.cast<std::string>();
    if (s == "+") return 1;
    if (s == "-") return -1;
    throw py::value_error(std::string(what) + " must be '+', '-' or +-1");
  }
  const int v = obj.cast<int>();
  if (v != 1 && v != -1)
    throw py::value_error(std::string(what) + " must be '+', '-' or +-1");
  return v;
}

ProductVariant variant_arg(const std::string& s) {
  if (s == "D") return ProductVariant::D;
  if (s == "Dt") return ProductVariant::Dt;
  if (s == "oo+") return ProductVariant::OOPlus;
  if (s == "oo-") return ProductVariant::OOMinus;
  throw py::value_error("variant must be one of 'D', 'Dt', 'oo+', 'oo-'");
}

py::list spectrum_list(const SpectrumReport& rep) {
  py::list out;
  for (const auto& l : rep.lines)
    out.append(py::make_tuple(l.value, l.multiplicity));
  return out;
}

}  // namespace

PYBIND11_MODULE(pyrst, m) {
  m.doc() = "finite real spectral triples: gamma algebras, KO tables, "
            "products, spectra, orientation";

  py::register_exception<Error>(m, "RstError");

  // ---- matrices ----
  m.def("kron",
        [](const ComplexMatrix& a, const ComplexMatrix& b) {
          return kron(a, b);
        },
        py::arg("a"), py::arg("b"), "Kronecker product");
  m.def("eigh",
        [](const ComplexMatrix& h) {
          const EighResult r = eigh(h);
          return py::make_tuple(r.eigenvalues, r.eigenvectors);
        },
        py::arg("h"), "Hermitian eigendecomposition (values, vectors)");
  m.def("spectrum",
        [](const ComplexMatrix& h) { return spectrum_list(eigh(h).spectrum); },
        py::arg("h"), "clustered spectrum as (value, multiplicity) pairs");

  // ---- clifford ----
  m.def("pauli", &pauli, py::arg("i"));
  m.def("gamma_matrices",
        [](int n, const py::object& sign) {
          return build_gamma_rep(n, sign_arg(sign, "sign")).matrices;
        },
        py::arg("n"), py::arg("sign") = py::none());
  m.def("chirality",
        [](int n, const py::object& sign) {
          const Chirality c = chirality_of(n, sign_arg(sign, "sign"));
          return py::make_tuple(c.matrix, c.alpha);
        },
        py::arg("n"), py::arg("sign") = py::none(),
        "(chirality matrix, alpha_n)");
  m.def("classify_odd_rep",
        [](const std::vector<ComplexMatrix>& gammas) {
          return classify_odd_rep(gammas) == 1 ? "+" : "-";
        },
        py::arg("gammas"));

  // ---- real structure ----
  py::class_<KOSignature>(m, "KOSignature")
      .def_readonly("eps", &KOSignature::eps)
      .def_readonly("eps_prime", &KOSignature::eps_prime)
      .def_property_readonly(
          "eps_dblprime",
          [](const KOSignature& s) -> py::object {
            if (!s.eps_dblprime) return py::none();
            return py::int_(*s.eps_dblprime);
          })
      .def("__repr__", [](const KOSignature& s) {
        std::string out = "KOSignature(";
        out += s.eps == 1 ? "+" : "-";
        out += s.eps_prime == 1 ? "+" : "-";
        if (s.eps_dblprime) out += *s.eps_dblprime == 1 ? "+" : "-";
        return out + ")";
      });

  m.def("charge_conjugation",
        [](int n, const py::object& variant, const py::object& odd_sign) {
          return build_charge_conjugation(n, *sign_arg(variant, "variant"),
                                          sign_arg(odd_sign, "odd_sign"))
              .linear_part;
        },
        py::arg("n"), py::arg("variant"), py::arg("odd_sign") = py::none(),
        "linear part of J (compose with complex conjugation)");
  m.def("signature_of",
        [](const ComplexMatrix& j_linear, const ComplexMatrix& D,
           const py::object& chi) {
          const AntiUnitaryOp j(j_linear);
          if (chi.is_none()) return signature_of(j, D);
          const ComplexMatrix c = chi.cast<ComplexMatrix>();
          return signature_of(j, D, &c);
        },
        py::arg("j_linear"), py::arg("D"), py::arg("chi") = py::none());
  m.def("ko_label",
        [](const KOSignature& sig) { return ko_label(sig).str(); },
        py::arg("signature"));
  m.def("table1_signature",
        [](const std::string& label) {
          return table1_signature(parse_ko_label(label));
        },
        py::arg("label"));

  // ---- triples ----
  py::class_<CheckReport>(m, "CheckReport")
      .def_readonly("passed", &CheckReport::passed)
      .def_readonly("max_violation", &CheckReport::max_violation)
      .def_readonly("relation", &CheckReport::relation)
      .def("__repr__", [](const CheckReport& r) {
        return "CheckReport(passed=" + std::string(r.passed ? "True" : "False") +
               ", max_violation=" + std::to_string(r.max_violation) + ")";
      });

  py::class_<RealSpectralTriple>(m, "Triple")
      .def_property_readonly("hilbert_dim",
                             [](const RealSpectralTriple& t) {
                               return t.hilbert_dim;
                             })
      .def_property_readonly("D",
                             [](const RealSpectralTriple& t) { return t.D; })
      .def_property_readonly(
          "chi",
          [](const RealSpectralTriple& t) -> py::object {
            if (!t.chi) return py::none();
            return py::cast(*t.chi);
          })
      .def_property_readonly(
          "j_linear",
          [](const RealSpectralTriple& t) { return t.J.linear_part; })
      .def_property_readonly(
          "probe_subspace",
          [](const RealSpectralTriple& t) -> py::object {
            if (!t.probe_subspace) return py::none();
            return py::cast(*t.probe_subspace);
          })
      .def_property_readonly(
          "claimed_label",
          [](const RealSpectralTriple& t) -> py::object {
            if (!t.claimed_label) return py::none();
            return py::str(t.claimed_label->str());
          })
      .def_property_readonly(
          "metric_dim",
          [](const RealSpectralTriple& t) -> py::object {
            if (!t.metric_dim) return py::none();
            return py::int_(*t.metric_dim);
          })
      .def_property_readonly("algebra",
                             [](const RealSpectralTriple& t) {
                               py::list out;
                               for (const auto& g : t.algebra)
                                 out.append(py::make_tuple(g.label, g.rep));
                               return out;
                             })
      .def("check_zero_order",
           [](const RealSpectralTriple& t) { return check_zero_order(t); })
      .def("check_first_order",
           [](const RealSpectralTriple& t) { return check_first_order(t); })
      .def("check_reality",
           [](const RealSpectralTriple& t) {
             auto [rep, sig] = check_reality(t);
             return py::make_tuple(rep, sig ? py::cast(*sig) : py::none());
           })
      .def("spectrum",
           [](const RealSpectralTriple& t) {
             return spectrum_list(eigh(t.D).spectrum);
           })
      .def("to_json",
           [](const RealSpectralTriple& t) { return triple_to_json(t).dump(); })
      .def_static("from_json", [](const std::string& text) {
        return triple_from_json(nlohmann::json::parse(text));
      });

  m.def("torus_triple",
        [](int n, int K, const std::string& mode, const py::object& j_variant,
           const py::object& odd_sign, int generator_degree,
           const py::object& active_axes, int dim_cap) {
          TorusSpec spec;
          spec.n = n;
          spec.K = K;
          if (mode == "hard")
            spec.mode = TruncationMode::Hard;
          else if (mode == "cyclic")
            spec.mode = TruncationMode::Cyclic;
          else
            throw py::value_error("mode must be 'hard' or 'cyclic'");
          spec.j_variant = sign_arg(j_variant, "j_variant");
          spec.odd_sign = sign_arg(odd_sign, "odd_sign");
          spec.generator_degree = generator_degree;
          if (!active_axes.is_none()) spec.active_axes = active_axes.cast<int>();
          spec.dim_cap = dim_cap;
          return torus_triple(spec);
        },
        py::arg("n"), py::arg("K"), py::arg("mode") = "hard",
        py::arg("j_variant") = py::none(), py::arg("odd_sign") = py::none(),
        py::arg("generator_degree") = 1, py::arg("active_axes") = py::none(),
        py::arg("dim_cap") = 4096);
  m.def("two_point_triple",
        [](double mass, const py::object& variant) {
          return two_point_triple(mass, *sign_arg(variant, "variant"));
        },
        py::arg("mass"), py::arg("variant") = "+");

  // ---- products ----
  m.def("product_triple",
        [](const RealSpectralTriple& t1, const RealSpectralTriple& t2,
           const std::string& variant, bool force,
           std::array<int, 3> pauli_assignment) {
          ProductRecipe recipe;
          recipe.variant = variant_arg(variant);
          recipe.force = force;
          recipe.pauli_assignment = pauli_assignment;
          return product_triple(t1, t2, recipe);
        },
        py::arg("t1"), py::arg("t2"), py::arg("variant") = "D",
        py::arg("force") = false,
        py::arg("pauli_assignment") = std::array<int, 3>{1, 2, 3});
  m.def("predicted_ko",
        [](const std::string& l1, const std::string& l2,
           const std::string& variant) -> py::object {
          const auto res = predicted_ko(parse_ko_label(l1), parse_ko_label(l2),
                                        variant_arg(variant));
          if (!res) return py::none();
          return py::str(res->str());
        },
        py::arg("l1"), py::arg("l2"), py::arg("variant"),
        "product KO label, None on blank cells");
  m.def("m_matrix",
        [](int n1, int n2, const py::object& which) {
          return m_matrix(n1, n2, *sign_arg(which, "which"));
        },
        py::arg("n1"), py::arg("n2"), py::arg("which"));
  m.def("intertwiner_U",
        [](const ComplexMatrix& chi1, const ComplexMatrix& chi2) {
          return intertwiner_U(chi1, chi2);
        },
        py::arg("chi1"), py::arg("chi2"));
  m.def("predicted_product_spectrum",
        [](const RealSpectralTriple& t1, const RealSpectralTriple& t2,
           const std::string& variant) {
          return spectrum_list(predicted_product_spectrum(
              t1.D, t1.chi ? &*t1.chi : nullptr, t2.D,
              t2.chi ? &*t2.chi : nullptr, variant_arg(variant)));
        },
        py::arg("t1"), py::arg("t2"), py::arg("variant") = "D");

  // ---- hochschild ----
  py::class_<HochschildChain>(m, "Chain")
      .def_property_readonly("degree",
                             [](const HochschildChain& c) { return c.degree; })
      .def_property_readonly(
          "term_count",
          [](const HochschildChain& c) { return c.terms.size(); })
      .def("to_json",
           [](const HochschildChain& c) { return chain_to_json(c).dump(); });

  py::class_<OrientationReport>(m, "OrientationReport")
      .def_readonly("is_cycle", &OrientationReport::is_cycle)
      .def_readonly("proportional", &OrientationReport::proportional)
      .def_readonly("scalar", &OrientationReport::scalar)
      .def_readonly("residual", &OrientationReport::residual)
      .def_readonly("degenerate", &OrientationReport::degenerate);

  m.def("circle_cycle", &circle_cycle, py::arg("triple"));
  m.def("torus2_cycle", &torus2_cycle, py::arg("triple"));
  m.def("boundary", &boundary, py::arg("chain"));
  m.def("shuffle", &shuffle, py::arg("x"), py::arg("y"));
  m.def("lift_right", &lift_right, py::arg("chain"), py::arg("extra_dim"));
  m.def("pi_D", &pi_D, py::arg("triple"), py::arg("chain"));
  m.def("check_orientation",
        [](const RealSpectralTriple& t, const HochschildChain& c) {
          return check_orientation(t, c);
        },
        py::arg("triple"), py::arg("chain"));

  m.attr("__version__") = "0.1.0";
}

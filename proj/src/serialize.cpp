#include "rst/serialize.hpp"

#include <fstream>

namespace rst {

using nlohmann::json;

namespace {

constexpr int kFormatVersion = 1;

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string("document: missing field '") + key + "'");
  return j.at(key);
}

void check_known_keys(const json& j, std::initializer_list<const char*> keys) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* k : keys) known = known || it.key() == k;
    if (!known)
      throw ParseError("document: unknown field '" + it.key() + "'");
  }
}

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ParseError("document: complex scalar must be [re, im]");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

json complex_to_json(const Complex& z) {
  return json::array({z.real(), z.imag()});
}

}  // namespace

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty())
    throw ParseError("document: matrix must be a nonempty array of rows");
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  if (!j[0].is_array() || j[0].empty())
    throw ParseError("document: matrix rows must be nonempty arrays");
  const Eigen::Index cols = static_cast<Eigen::Index>(j[0].size());
  ComplexMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    if (!j[r].is_array() || static_cast<Eigen::Index>(j[r].size()) != cols)
      throw ParseError("document: ragged matrix rows");
    for (Eigen::Index c = 0; c < cols; ++c)
      m(r, c) = complex_from_json(j[r][c]);
  }
  if (!all_finite(m))
    throw InvariantViolationError("document: matrix entries must be finite");
  return m;
}

json triple_to_json(const RealSpectralTriple& t) {
  json doc;
  doc["version"] = kFormatVersion;
  doc["hilbert_dim"] = t.hilbert_dim;
  if (t.metric_dim) doc["metric_dim"] = *t.metric_dim;
  if (t.claimed_label) doc["claimed_label"] = t.claimed_label->str();
  json algebra = json::array();
  for (const auto& g : t.algebra)
    algebra.push_back({{"label", g.label}, {"matrix", matrix_to_json(g.rep)}});
  doc["algebra"] = std::move(algebra);
  doc["D"] = matrix_to_json(t.D);
  doc["J"] = json{{"linear_part", matrix_to_json(t.J.linear_part)}};
  if (t.chi) doc["chi"] = matrix_to_json(*t.chi);
  if (t.probe_subspace)
    doc["probe_subspace"] = matrix_to_json(*t.probe_subspace);
  if (!t.meta.empty()) doc["meta"] = t.meta;
  return doc;
}

RealSpectralTriple triple_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("document: expected an object");
  check_known_keys(j, {"version", "hilbert_dim", "metric_dim",
                       "claimed_label", "algebra", "D", "J", "chi",
                       "probe_subspace", "meta"});
  const int version = require(j, "version").get<int>();
  if (version != kFormatVersion)
    throw ParseError("document: unsupported version " +
                     std::to_string(version));
  RealSpectralTriple t;
  t.hilbert_dim = require(j, "hilbert_dim").get<int>();
  if (j.contains("metric_dim")) t.metric_dim = j.at("metric_dim").get<int>();
  if (j.contains("claimed_label"))
    t.claimed_label = parse_ko_label(j.at("claimed_label").get<std::string>());
  const json& algebra = require(j, "algebra");
  if (!algebra.is_array())
    throw ParseError("document: algebra must be an array");
  for (const auto& g : algebra) {
    check_known_keys(g, {"label", "matrix"});
    t.algebra.push_back({require(g, "label").get<std::string>(),
                         matrix_from_json(require(g, "matrix"))});
  }
  t.D = matrix_from_json(require(j, "D"));
  const json& jj = require(j, "J");
  check_known_keys(jj, {"linear_part"});
  try {
    t.J = AntiUnitaryOp(matrix_from_json(require(jj, "linear_part")));
  } catch (const NotUnitaryError& e) {
    throw InvariantViolationError(std::string("document: ") + e.what());
  }
  if (j.contains("chi")) t.chi = matrix_from_json(j.at("chi"));
  if (j.contains("probe_subspace"))
    t.probe_subspace = matrix_from_json(j.at("probe_subspace"));
  if (j.contains("meta")) {
    const json& meta = j.at("meta");
    if (!meta.is_object()) throw ParseError("document: meta must be an object");
    for (auto it = meta.begin(); it != meta.end(); ++it)
      t.meta[it.key()] = it.value().get<std::string>();
  }
  validate_triple(t);
  return t;
}

void save_triple(const RealSpectralTriple& t, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("save_triple: cannot open " + path);
  out << triple_to_json(t).dump(1) << "\n";
}

RealSpectralTriple load_triple(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("load_triple: cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(std::string("load_triple: ") + e.what());
  }
  return triple_from_json(j);
}

json chain_to_json(const HochschildChain& c) {
  json doc;
  doc["degree"] = c.degree;
  json terms = json::array();
  for (const auto& t : c.terms) {
    json term;
    term["coeff"] = complex_to_json(t.coeff);
    term["a0_left"] = matrix_to_json(t.a0_left);
    term["a0_right"] = matrix_to_json(t.a0_right);
    json legs = json::array();
    for (const auto& leg : t.legs) legs.push_back(matrix_to_json(leg));
    term["legs"] = std::move(legs);
    terms.push_back(std::move(term));
  }
  doc["terms"] = std::move(terms);
  return doc;
}

HochschildChain chain_from_json(const json& j,
                                const RealSpectralTriple* resolve) {
  if (!j.is_object()) throw ParseError("chain document: expected an object");
  check_known_keys(j, {"degree", "terms"});
  auto slot = [&](const json& s) -> ComplexMatrix {
    if (s.is_string()) {
      if (!resolve)
        throw ParseError("chain document: label slot without a triple to "
                         "resolve against");
      const ComplexMatrix* m = resolve->find_gen(s.get<std::string>());
      if (!m)
        throw ParseError("chain document: unknown generator label '" +
                         s.get<std::string>() + "'");
      return *m;
    }
    return matrix_from_json(s);
  };
  HochschildChain c;
  c.degree = require(j, "degree").get<int>();
  const json& terms = require(j, "terms");
  if (!terms.is_array())
    throw ParseError("chain document: terms must be an array");
  for (const auto& t : terms) {
    check_known_keys(t, {"coeff", "a0_left", "a0_right", "legs"});
    ChainTerm term;
    term.coeff = complex_from_json(require(t, "coeff"));
    term.a0_left = slot(require(t, "a0_left"));
    term.a0_right = slot(require(t, "a0_right"));
    for (const auto& leg : require(t, "legs")) term.legs.push_back(slot(leg));
    if (static_cast<int>(term.legs.size()) != c.degree)
      throw ParseError("chain document: term leg count != degree");
    c.terms.push_back(std::move(term));
  }
  return c;
}

}  // namespace rst

#include "rst/examples.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "rst/clifford.hpp"

namespace rst {

namespace {

const Complex kI(0.0, 1.0);

struct MomentumBox {
  int axes = 0;   // active axes
  int K = 0;
  int side = 1;   // 2K+1
  int modes = 1;  // side^axes

  int index(const std::vector<int>& k) const {
    int idx = 0;
    for (int a = axes - 1; a >= 0; --a) idx = idx * side + (k[a] + K);
    return idx;
  }
  std::vector<int> tuple(int idx) const {
    std::vector<int> k(axes, 0);
    for (int a = 0; a < axes; ++a) {
      k[a] = idx % side - K;
      idx /= side;
    }
    return k;
  }
};

// shift by +step along axis; hard mode truncates, cyclic wraps
ComplexMatrix shift_matrix(const MomentumBox& box, int axis, int step,
                           TruncationMode mode) {
  ComplexMatrix s = ComplexMatrix::Zero(box.modes, box.modes);
  for (int idx = 0; idx < box.modes; ++idx) {
    std::vector<int> k = box.tuple(idx);
    int target = k[axis] + step;
    if (mode == TruncationMode::Hard) {
      if (target < -box.K || target > box.K) continue;
    } else {
      target = (target + box.K) % box.side;
      if (target < 0) target += box.side;
      target -= box.K;
    }
    std::vector<int> kt = k;
    kt[axis] = target;
    s(box.index(kt), idx) = 1.0;
  }
  return s;
}

ComplexMatrix flip_matrix(const MomentumBox& box) {
  ComplexMatrix f = ComplexMatrix::Zero(box.modes, box.modes);
  for (int idx = 0; idx < box.modes; ++idx) {
    std::vector<int> k = box.tuple(idx);
    for (auto& c : k) c = -c;
    f(box.index(k), idx) = 1.0;
  }
  return f;
}

}  // namespace

RealSpectralTriple torus_triple(const TorusSpec& spec) {
  if (spec.n < 1) throw Error("torus_triple: n must be positive");
  if (spec.K < 1) throw Error("torus_triple: K must be positive");
  if (spec.generator_degree < 1)
    throw Error("torus_triple: generator_degree must be positive");
  const bool odd = spec.n % 2 == 1;
  if (odd && !spec.odd_sign)
    throw BadSignError("torus_triple: odd n requires odd_sign");
  if (!odd && spec.odd_sign)
    throw BadSignError("torus_triple: even n admits no odd_sign");

  int variant;
  if (odd) {
    // the only J that exists in odd dimension (n = 3,7 mod 8 -> J_+)
    const int n8 = spec.n % 8;
    variant = (n8 == 3 || n8 == 7) ? 1 : -1;
    if (spec.j_variant && *spec.j_variant != variant)
      throw NoSuchJError("torus_triple: J_" +
                         std::string(*spec.j_variant == 1 ? "+" : "-") +
                         " does not exist in odd dimension " +
                         std::to_string(spec.n));
  } else {
    if (!spec.j_variant)
      throw BadSignError("torus_triple: even n requires j_variant");
    variant = *spec.j_variant;
  }

  MomentumBox box;
  box.axes = spec.active_axes < 0 ? spec.n : spec.active_axes;
  if (box.axes < 1 || box.axes > spec.n)
    throw Error("torus_triple: active_axes out of range");
  box.K = spec.K;
  box.side = 2 * spec.K + 1;

  const GammaRep rep = build_gamma_rep(spec.n, spec.odd_sign);
  const int sdim = rep.spinor_dim();
  long modes = 1;
  for (int a = 0; a < box.axes; ++a) {
    modes *= box.side;
    if (modes * sdim > spec.dim_cap)
      throw CapExceededError("torus_triple: hilbert dim at least " +
                             std::to_string(modes * sdim) + " exceeds cap " +
                             std::to_string(spec.dim_cap));
  }
  box.modes = static_cast<int>(modes);
  const int dim = box.modes * sdim;

  RealSpectralTriple t;
  t.hilbert_dim = dim;
  t.metric_dim = spec.n;

  // D = sum_mu gamma^mu d/dx^mu, block i sum_mu k_mu gamma^mu per mode
  t.D = ComplexMatrix::Zero(dim, dim);
  for (int idx = 0; idx < box.modes; ++idx) {
    const std::vector<int> k = box.tuple(idx);
    ComplexMatrix block = ComplexMatrix::Zero(sdim, sdim);
    for (int a = 0; a < box.axes; ++a)
      if (k[a] != 0)
        block += kI * static_cast<double>(k[a]) * rep.matrices[a];
    t.D.block(idx * sdim, idx * sdim, sdim, sdim) = block;
  }

  const ComplexMatrix spinor_id = identity(sdim);
  t.algebra.push_back({"1", identity(dim)});
  for (int a = 0; a < box.axes; ++a) {
    for (int d = 1; d <= spec.generator_degree; ++d) {
      const ComplexMatrix s = shift_matrix(box, a, d, spec.mode);
      std::string name = "u" + std::to_string(a + 1);
      if (d > 1) name += "^" + std::to_string(d);
      t.algebra.push_back({name, kron(s, spinor_id)});
      t.algebra.push_back(
          {name + "*", kron(ComplexMatrix(s.adjoint()), spinor_id)});
    }
  }

  const AntiUnitaryOp c = build_charge_conjugation(spec.n, variant,
                                                   spec.odd_sign);
  t.J = AntiUnitaryOp(kron(flip_matrix(box), c.linear_part));

  if (!odd) t.chi = kron(identity(box.modes), chirality_of(spec.n).matrix);

  if (spec.mode == TruncationMode::Hard) {
    const int margin = 2 * spec.generator_degree;
    ComplexMatrix p = ComplexMatrix::Zero(box.modes, box.modes);
    for (int idx = 0; idx < box.modes; ++idx) {
      const std::vector<int> k = box.tuple(idx);
      bool interior = true;
      for (int a = 0; a < box.axes; ++a)
        interior = interior && std::abs(k[a]) <= box.K - margin;
      if (interior) p(idx, idx) = 1.0;
    }
    t.probe_subspace = kron(p, spinor_id);
  }

  t.claimed_label = KOLabel{spec.n % 8, variant};

  t.meta["kind"] = "torus";
  t.meta["n"] = std::to_string(spec.n);
  t.meta["K"] = std::to_string(spec.K);
  t.meta["mode"] = spec.mode == TruncationMode::Hard ? "hard" : "cyclic";
  t.meta["active_axes"] = std::to_string(box.axes);
  t.meta["generator_degree"] = std::to_string(spec.generator_degree);
  if (odd) t.meta["odd_sign"] = *spec.odd_sign == 1 ? "+" : "-";
  return t;
}

RealSpectralTriple two_point_triple(double mass, int j_variant) {
  if (!(mass > 0)) throw Error("two_point_triple: mass must be positive");
  if (j_variant != 1 && j_variant != -1)
    throw BadSignError("two_point_triple: variant must be +1 or -1");
  RealSpectralTriple t;
  t.hilbert_dim = 2;
  ComplexMatrix p1 = ComplexMatrix::Zero(2, 2), p2 = ComplexMatrix::Zero(2, 2);
  p1(0, 0) = 1.0;
  p2(1, 1) = 1.0;
  t.algebra.push_back({"e1", p1});
  t.algebra.push_back({"e2", p2});
  t.D = mass * pauli(1);
  t.chi = pauli(3);
  t.J = AntiUnitaryOp(j_variant == 1 ? identity(2) : pauli(3));
  t.claimed_label = KOLabel{0, j_variant};
  t.metric_dim = 0;
  t.meta["kind"] = "two-point";
  t.meta["mass"] = std::to_string(mass);
  return t;
}

HochschildChain circle_cycle(const RealSpectralTriple& t) {
  if (!t.metric_dim || *t.metric_dim != 1)
    throw WrongDimensionError("circle_cycle: need a 1-dimensional triple");
  const ComplexMatrix* u = t.find_gen("u1");
  const ComplexMatrix* ustar = t.find_gen("u1*");
  if (!u || !ustar)
    throw WrongDimensionError("circle_cycle: generators u1, u1* not found");
  ChainTerm term;
  term.coeff = Complex(1, 0);
  term.a0_left = *u;
  term.a0_right = identity(t.hilbert_dim);
  term.legs = {*ustar};
  return make_chain(1, {std::move(term)});
}

HochschildChain torus2_cycle(const RealSpectralTriple& t) {
  const ComplexMatrix id = identity(t.hilbert_dim);
  HochschildChain raw;
  raw.degree = 2;

  if (const ComplexMatrix* a0 = t.find_gen("u1(x)u1")) {
    // product of two circles
    const ComplexMatrix* l1 = t.find_gen("u1*(x)1");
    const ComplexMatrix* l2 = t.find_gen("1(x)u1*");
    if (!l1 || !l2)
      throw WrongDimensionError("torus2_cycle: factor shift generators "
                                "not found");
    raw.terms.push_back({Complex(1, 0), *a0, id, {*l1, *l2}});
    raw.terms.push_back({Complex(-1, 0), *a0, id, {*l2, *l1}});
  } else if (t.metric_dim && *t.metric_dim == 2) {
    const ComplexMatrix* u1 = t.find_gen("u1");
    const ComplexMatrix* u2 = t.find_gen("u2");
    const ComplexMatrix* u1s = t.find_gen("u1*");
    const ComplexMatrix* u2s = t.find_gen("u2*");
    if (!u1 || !u2 || !u1s || !u2s)
      throw WrongDimensionError("torus2_cycle: generators u1, u2 not found");
    const ComplexMatrix a0 = (*u1) * (*u2);
    raw.terms.push_back({Complex(1, 0), a0, id, {*u1s, *u2s}});
    raw.terms.push_back({Complex(-1, 0), a0, id, {*u2s, *u1s}});
  } else {
    throw WrongDimensionError(
        "torus2_cycle: need a 2-torus or a product of two circles");
  }

  const OrientationReport rep = check_orientation(t, raw);
  if (rep.degenerate || std::abs(rep.scalar) <= kTolNum)
    throw Error("torus2_cycle: measured proportionality is degenerate");
  return scale(raw, Complex(1, 0) / rep.scalar);
}

}  // namespace rst

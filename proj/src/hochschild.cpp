#include "rst/hochschild.hpp"

#include <algorithm>
#include <cmath>

namespace rst {

namespace {

void check_term_shape(const HochschildChain& c) {
  for (const auto& t : c.terms)
    if (static_cast<int>(t.legs.size()) != c.degree)
      throw Error("chain: term leg count does not match degree");
}

// all (p,q)-shuffles as interleavings: result[k] = 0 for an x-leg, 1 for a
// y-leg, plus the permutation sign
void enumerate_shuffles(int p, int q, std::vector<int>& pick,
                        std::vector<std::pair<std::vector<int>, int>>& out) {
  if (static_cast<int>(pick.size()) == p + q) {
    // sign = (-1)^{# inversions between the two blocks}
    int inversions = 0;
    int seen_y = 0;
    for (int s : pick) {
      if (s == 1)
        ++seen_y;
      else
        inversions += seen_y;
    }
    out.push_back({pick, inversions % 2 == 0 ? 1 : -1});
    return;
  }
  int used_x = static_cast<int>(std::count(pick.begin(), pick.end(), 0));
  int used_y = static_cast<int>(pick.size()) - used_x;
  if (used_x < p) {
    pick.push_back(0);
    enumerate_shuffles(p, q, pick, out);
    pick.pop_back();
  }
  if (used_y < q) {
    pick.push_back(1);
    enumerate_shuffles(p, q, pick, out);
    pick.pop_back();
  }
}

}  // namespace

HochschildChain make_chain(int degree, std::vector<ChainTerm> terms) {
  HochschildChain c{degree, std::move(terms)};
  check_term_shape(c);
  return c;
}

HochschildChain boundary(const HochschildChain& c) {
  if (c.degree < 1) throw DegreeZeroError("boundary: chain has degree 0");
  check_term_shape(c);
  HochschildChain out;
  out.degree = c.degree - 1;
  const int p = c.degree;
  for (const auto& t : c.terms) {
    // m a1 (x) a2 ... ap
    {
      ChainTerm nt;
      nt.coeff = t.coeff;
      nt.a0_left = t.a0_left * t.legs[0];
      nt.a0_right = t.a0_right;
      nt.legs.assign(t.legs.begin() + 1, t.legs.end());
      out.terms.push_back(std::move(nt));
    }
    // interior multiplications
    for (int i = 1; i < p; ++i) {
      ChainTerm nt;
      nt.coeff = (i % 2 == 0 ? 1.0 : -1.0) * t.coeff;
      nt.a0_left = t.a0_left;
      nt.a0_right = t.a0_right;
      for (int k = 0; k < p; ++k) {
        if (k == i - 1) {
          nt.legs.push_back(t.legs[k] * t.legs[k + 1]);
          ++k;
        } else {
          nt.legs.push_back(t.legs[k]);
        }
      }
      out.terms.push_back(std::move(nt));
    }
    // wrap: (-1)^p (a_p . m)
    {
      ChainTerm nt;
      nt.coeff = (p % 2 == 0 ? 1.0 : -1.0) * t.coeff;
      nt.a0_left = t.legs[p - 1] * t.a0_left;
      nt.a0_right = t.a0_right;
      nt.legs.assign(t.legs.begin(), t.legs.end() - 1);
      out.terms.push_back(std::move(nt));
    }
  }
  return out;
}

HochschildChain shuffle(const HochschildChain& x, const HochschildChain& y) {
  check_term_shape(x);
  check_term_shape(y);
  const int p = x.degree, q = y.degree;
  std::vector<std::pair<std::vector<int>, int>> shuffles;
  std::vector<int> pick;
  enumerate_shuffles(p, q, pick, shuffles);

  HochschildChain out;
  out.degree = p + q;
  for (const auto& tx : x.terms) {
    const int d1 = static_cast<int>(tx.a0_left.rows());
    const ComplexMatrix id1 = identity(d1);
    for (const auto& ty : y.terms) {
      const int d2 = static_cast<int>(ty.a0_left.rows());
      const ComplexMatrix id2 = identity(d2);
      for (const auto& [pattern, sign] : shuffles) {
        ChainTerm nt;
        nt.coeff = static_cast<double>(sign) * tx.coeff * ty.coeff;
        nt.a0_left = kron(tx.a0_left, ty.a0_left);
        nt.a0_right = kron(tx.a0_right, ty.a0_right);
        int ix = 0, iy = 0;
        for (int s : pattern) {
          if (s == 0)
            nt.legs.push_back(kron(tx.legs[ix++], id2));
          else
            nt.legs.push_back(kron(id1, ty.legs[iy++]));
        }
        out.terms.push_back(std::move(nt));
      }
    }
  }
  return out;
}

HochschildChain lift_right(const HochschildChain& c, int extra_dim) {
  const ComplexMatrix id = identity(extra_dim);
  HochschildChain out;
  out.degree = c.degree;
  for (const auto& t : c.terms) {
    ChainTerm nt;
    nt.coeff = t.coeff;
    nt.a0_left = kron(t.a0_left, id);
    nt.a0_right = kron(t.a0_right, id);
    for (const auto& leg : t.legs) nt.legs.push_back(kron(leg, id));
    out.terms.push_back(std::move(nt));
  }
  return out;
}

HochschildChain scale(const HochschildChain& c, Complex factor) {
  HochschildChain out = c;
  for (auto& t : out.terms) t.coeff *= factor;
  return out;
}

ComplexMatrix chain_tensor_eval(const HochschildChain& c) {
  check_term_shape(c);
  if (c.terms.empty()) throw Error("chain_tensor_eval: empty chain");
  ComplexMatrix sum;
  bool first = true;
  for (const auto& t : c.terms) {
    ComplexMatrix acc = kron(t.a0_left, t.a0_right);
    for (const auto& leg : t.legs) acc = kron(acc, leg);
    acc *= t.coeff;
    if (first) {
      sum = std::move(acc);
      first = false;
    } else {
      if (sum.rows() != acc.rows() || sum.cols() != acc.cols())
        throw DimensionMismatchError("chain_tensor_eval: ragged term shapes");
      sum += acc;
    }
  }
  return sum;
}

ComplexMatrix pi_D(const RealSpectralTriple& t, const HochschildChain& c) {
  check_term_shape(c);
  const int n = t.hilbert_dim;
  ComplexMatrix sum = ComplexMatrix::Zero(n, n);
  for (const auto& term : c.terms) {
    if (term.a0_left.rows() != n || term.a0_right.rows() != n)
      throw DimensionMismatchError("pi_D: a0 slot dimension mismatch");
    ComplexMatrix acc = term.a0_left * t.opposite(term.a0_right);
    for (const auto& leg : term.legs) {
      if (leg.rows() != n)
        throw DimensionMismatchError("pi_D: leg dimension mismatch");
      acc = acc * (t.D * leg - leg * t.D);
    }
    sum += term.coeff * acc;
  }
  return sum;
}

OrientationReport check_orientation(const RealSpectralTriple& t,
                                    const HochschildChain& c, double tol) {
  OrientationReport rep;
  const int n = t.hilbert_dim;
  const ComplexMatrix probe =
      t.probe_subspace ? *t.probe_subspace : identity(n);

  // cycle test under pi-evaluation of the boundary
  if (c.degree >= 1) {
    const ComplexMatrix bnd = probe * pi_D(t, boundary(c)) * probe;
    rep.cycle_violation = max_abs(bnd);
    rep.is_cycle = rep.cycle_violation <= kTolAlg;
  } else {
    rep.is_cycle = true;
    rep.cycle_violation = 0.0;
  }

  const ComplexMatrix target =
      t.chi ? ComplexMatrix(probe * (*t.chi) * probe)
            : ComplexMatrix(probe);
  const ComplexMatrix value = probe * pi_D(t, c) * probe;

  const Complex denom = (target.adjoint() * target).trace();
  if (std::abs(denom) <= kTolAlg) {
    rep.degenerate = true;
    return rep;
  }
  rep.scalar = (target.adjoint() * value).trace() / denom;
  rep.residual = max_abs(ComplexMatrix(value - rep.scalar * target));
  if (std::abs(rep.scalar) <= tol) {
    rep.degenerate = true;
    rep.scalar = Complex(0, 0);
    rep.proportional = rep.residual <= tol;
  } else {
    rep.proportional = rep.residual <= tol;
  }
  return rep;
}

}  // namespace rst

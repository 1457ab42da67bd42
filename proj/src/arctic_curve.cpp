#include "arctic/arctic_curve.hpp"

#include "arctic/errors.hpp"

namespace arctic {

namespace {

using D1 = Dual<MPScalar>;

struct AB {
  MPScalar A, B;
};

// A and B (and their xi-derivatives when seeded) for the NE family.
template <typename T>
void ab_t(const ModelParams& p, Model model, const T& u, const T& v, const T& eta, const T& xi,
          T& A, T& B) {
  switch (model) {
    case Model::SixV:
      A = impl::A6v_t(u - v, eta, xi);
      B = impl::kappa6v_t(u - v, eta, xi);
      break;
    case Model::SixVPrime:
      A = impl::A6vp_t(u, v, eta, xi);
      B = impl::kappa6vp_t(u, v, eta, xi);
      B = B + B;
      break;
    case Model::TwentyV:
      A = impl::A20v_t(u, v, eta, xi);
      B = impl::kappa20v_t(u, v, eta, xi);
      B = B + B;
      break;
    case Model::DT:
      A = impl::Adt_t(xi);
      B = impl::kappadt_t(u, v, eta, xi);
      break;
  }
}

ModelParams effective(const ModelParams& params, mpfr_prec_t prec) {
  if (params.model == Model::DT) return named_point(NamedPoint::Uniform20V, prec);
  return params.with_precision(prec);
}

}  // namespace

std::string branch_name(BranchId b) {
  switch (b) {
    case BranchId::NE: return "NE";
    case BranchId::SE: return "SE";
    case BranchId::FullAnalytic: return "full";
  }
  return "?";
}

TangentLine tangent_line(const ModelParams& params, const MPScalar& xi, mpfr_prec_t precision) {
  check_domain(params);
  mpfr_prec_t prec = precision + 64;
  ModelParams p = effective(params, prec);
  MPScalar A(0L, prec), B(0L, prec);
  ab_t(p, params.model, p.u, p.v, p.eta, xi.with_precision(prec), A, B);
  return {A.with_precision(precision), B.with_precision(precision), xi.with_precision(precision)};
}

CurvePoint envelope_point(const ModelParams& params, const MPScalar& xi, mpfr_prec_t precision) {
  check_domain(params);
  mpfr_prec_t prec = precision + 64;
  ModelParams p = effective(params, prec);
  D1 xd(xi.with_precision(prec), {MPScalar(1L, prec)});
  D1 uc = D1::constant(p.u, 1), vc = D1::constant(p.v, 1), ec = D1::constant(p.eta, 1);
  D1 A(MPScalar(0L, prec)), B(MPScalar(0L, prec));
  ab_t(p, params.model, uc, vc, ec, xd, A, B);
  const MPScalar &Ap = A.tan[0], &Bp = B.tan[0];
  if (Ap.is_zero()) throw SingularityError("envelope_point: A'(xi) vanishes");
  MPScalar X = Bp / Ap;
  MPScalar Y = B.val - A.val / Ap * Bp;
  return {X.with_precision(precision), Y.with_precision(precision)};
}

ModelParams star_involution(const ModelParams& params) {
  check_domain(params);
  ModelParams q = params;
  mpfr_prec_t prec = params.precision();
  MPScalar pi = MPScalar::pi(prec);
  switch (params.model) {
    case Model::SixV:
      // u-v -> pi-(u-v), keeping v fixed.
      q.u = pi - params.u + params.v + params.v;
      break;
    case Model::SixVPrime:
      q.u = -params.u;
      q.v = -pi - params.v;
      break;
    case Model::TwentyV:
      q.v = -pi - params.v;
      break;
    case Model::DT:
      throw DomainError("star_involution: not defined for the DT model");
  }
  check_domain(q);
  return q;
}

CurvePoint se_branch_map(Model model, const CurvePoint& p) {
  mpfr_prec_t prec = p.x.precision();
  MPScalar mu(model == Model::SixV ? 1L : 2L, prec);
  switch (model) {
    case Model::SixV:
    case Model::SixVPrime:
      return {p.x, mu - p.y};
    case Model::TwentyV:
      return {p.x, MPScalar(2L, prec) - p.x - p.y};
    case Model::DT:
      throw DomainError("se_branch_map: not defined for the DT model");
  }
  throw DomainError("se_branch_map: unknown model");
}

namespace {

std::vector<MPScalar> chebyshev_nodes(const MPScalar& lo, const MPScalar& hi, int n,
                                      mpfr_prec_t prec) {
  // Lobatto nodes with the two endpoints pulled inward by 1e-8 of the range
  // (the endpoint formulas are frequently 0/0).
  std::vector<MPScalar> xs;
  MPScalar mid = (lo + hi) / MPScalar(2L, prec);
  MPScalar half = (hi - lo) / MPScalar(2L, prec);
  MPScalar pi = MPScalar::pi(prec);
  MPScalar pull = (hi - lo) * MPScalar(1e-8, prec);
  for (int i = 0; i < n; ++i) {
    MPScalar theta = pi * MPScalar(i, prec) / MPScalar(n - 1, prec);
    MPScalar x = mid + half * cos(theta);
    xs.push_back(x);
  }
  // cos runs hi -> lo; reorder ascending and pull the ends inside.
  std::vector<MPScalar> out(xs.rbegin(), xs.rend());
  out.front() = lo + pull;
  out.back() = hi - pull;
  return out;
}

}  // namespace

Branch branch_curve(const ModelParams& params, BranchId id, int num_points,
                    mpfr_prec_t precision) {
  if (num_points < 2) throw DomainError("branch_curve: need at least 2 points");
  check_domain(params);
  mpfr_prec_t prec = precision + 64;

  if (id == BranchId::SE) {
    if (params.model == Model::DT)
      throw DomainError("branch_curve: DT has no separate SE branch (use FullAnalytic)");
    ModelParams starred = star_involution(params.with_precision(prec));
    Branch ne = branch_curve(starred, BranchId::NE, num_points, precision);
    Branch se;
    se.model = params.model;
    se.id = BranchId::SE;
    se.xi_lo = ne.xi_lo;
    se.xi_hi = ne.xi_hi;
    MPScalar mu(params.mu(), precision);
    for (size_t i = 0; i < ne.points.size(); ++i) {
      CurvePoint q = se_branch_map(params.model, ne.points[i]);
      TangentLine l = ne.lines[i];
      TangentLine lt;
      lt.xi = l.xi;
      if (params.model == Model::TwentyV) {
        // (x,y) -> (x, 2-x-y): y + Ax - B = 0 becomes y + (1-A)x - (2-B) = 0.
        lt.A = MPScalar(1L, precision) - l.A;
        lt.B = MPScalar(2L, precision) - l.B;
      } else {
        // (x,y) -> (x, mu-y): y + Ax - B = 0 becomes y - Ax - (mu-B) = 0.
        lt.A = -l.A;
        lt.B = mu - l.B;
      }
      se.points.push_back(q);
      se.lines.push_back(lt);
    }
    return se;
  }

  if (id == BranchId::FullAnalytic && params.model != Model::DT)
    throw DomainError("branch_curve: FullAnalytic is the DT extended range");

  Branch br;
  br.model = params.model;
  br.id = id;
  MPScalar lo = branch_xi_min(params.with_precision(prec));
  if (params.model == Model::DT && id == BranchId::FullAnalytic) {
    MPScalar pi = MPScalar::pi(prec);
    lo = -pi * MPScalar(3L, prec) / MPScalar(8L, prec);
  }
  MPScalar hi(0L, prec);
  br.xi_lo = lo.with_precision(precision);
  br.xi_hi = hi.with_precision(precision);
  for (const MPScalar& x : chebyshev_nodes(lo, hi, num_points, prec)) {
    br.lines.push_back(tangent_line(params, x, precision));
    br.points.push_back(envelope_point(params, x, precision));
  }
  return br;
}

Branch central_symmetry_completion_6v(const Branch& b) {
  if (b.model != Model::SixV)
    throw DomainError("central symmetry completion applies to the 6V model only");
  Branch out = b;
  for (size_t i = 0; i < b.points.size(); ++i) {
    mpfr_prec_t prec = b.points[i].x.precision();
    MPScalar one(1L, prec);
    out.points[i] = {-one - b.points[i].x, one - b.points[i].y};
    // y + Ax - B = 0 under (x,y) -> (-1-x, 1-y) becomes y + Ax - (1-A-B) = 0.
    out.lines[i].A = b.lines[i].A;
    out.lines[i].B = one - b.lines[i].A - b.lines[i].B;
  }
  return out;
}

MPScalar algebraic_residual_20v(const CurvePoint& p, AlgebraicShift shift) {
  mpfr_prec_t prec = p.x.precision() + 64;
  MPScalar x = p.x.with_precision(prec), y = p.y.with_precision(prec);
  if (shift == AlgebraicShift::TwentyV) {
    x += MPScalar(2L, prec);
    y -= MPScalar(1L, prec);
  } else if (shift == AlgebraicShift::DT) {
    x += MPScalar(2L, prec);
  }
  MPScalar r2 = x * x + y * y;
  MPScalar s = r2 - MPScalar(2L, prec) / MPScalar(3L, prec);
  MPScalar c5(729L, prec);          // 3^6
  MPScalar c3(3375L, prec);         // 5^3 3^3
  MPScalar c2(11250L, prec);        // 2 3^2 5^4
  MPScalar c0(12500L, prec);        // 2^2 5^5
  MPScalar res = c5 * pow(s, 5) - c3 * pow(s, 3) - c2 * s * s -
                 c0 * (r2 - MPScalar(4L, prec) * x * x * y * y);
  return res.with_precision(p.x.precision());
}

}  // namespace arctic

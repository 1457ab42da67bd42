#include "arctic/verify.hpp"

#include <random>
#include <sstream>

#include "arctic/arctic_curve.hpp"
#include "arctic/asymptotics.hpp"
#include "arctic/enumerate.hpp"
#include "arctic/errors.hpp"
#include "arctic/partition.hpp"
#include "arctic/paths.hpp"

namespace arctic {

namespace {

MPScalar rel_err(const MPScalar& a, const MPScalar& b) {
  MPScalar scale = abs(a) > abs(b) ? abs(a) : abs(b);
  if (scale.is_zero()) return abs(a - b);
  return abs(a - b) / scale;
}

class Recorder {
 public:
  explicit Recorder(SuiteReport& rep) : rep_(rep) {}

  void value(const std::string& name, const MPScalar& computed, const MPScalar& reference,
             const std::string& ref_note, double rel_tol) {
    CheckResult c;
    c.name = name;
    c.computed = computed.to_string(20);
    c.reference = reference.to_string(20) + " (" + ref_note + ")";
    c.pass = rel_err(computed, reference).to_double() < rel_tol;
    rep_.checks.push_back(std::move(c));
  }

  void residual(const std::string& name, const MPScalar& computed, double abs_tol) {
    CheckResult c;
    c.name = name;
    c.computed = computed.to_string(8);
    std::ostringstream os;
    os << "|residual| < " << abs_tol;
    c.reference = os.str();
    c.pass = abs(computed).to_double() < abs_tol;
    rep_.checks.push_back(std::move(c));
  }

  void integer(const std::string& name, const mpz_class& computed, const mpz_class& reference,
               const std::string& ref_note) {
    CheckResult c;
    c.name = name;
    c.computed = computed.get_str();
    c.reference = reference.get_str() + " (" + ref_note + ")";
    c.pass = computed == reference;
    rep_.checks.push_back(std::move(c));
  }

  void boolean(const std::string& name, bool pass, const std::string& note) {
    rep_.checks.push_back({name, pass ? "ok" : "violated", note, pass});
  }

 private:
  SuiteReport& rep_;
};

std::string pname(const ModelParams& p) {
  std::ostringstream os;
  os.precision(4);
  os << model_name(p.model) << "(eta=" << p.eta.to_double() << ",u=" << p.u.to_double()
     << ",v=" << p.v.to_double() << ")";
  return os.str();
}

ModelParams random_at_eta(Model m, const MPScalar& eta, std::mt19937_64& rng, mpfr_prec_t prec) {
  for (int it = 0; it < 200; ++it) {
    ModelParams p = random_in_domain(m, rng, prec);
    p.eta = eta.with_precision(prec);
    if (in_domain(p)) return p;
  }
  throw DomainError("random_at_eta: sampling failed");
}

// ------------------------------- counts -------------------------------

void suite_counts(SuiteReport& rep) {
  Recorder rec(rep);
  const mpfr_prec_t P = 320;
  const long asm_counts[] = {1, 2, 7, 42, 429};
  ModelParams asmp = named_point(NamedPoint::ASM, P);
  for (int n = 1; n <= 5; ++n) {
    RefinedCountsZ e = enumerate_uniform_counts(Model::SixV, n);
    rec.integer("6v asm enumeration n=" + std::to_string(n), e.total, asm_counts[n - 1],
                "alternating sign matrix numbers");
    rec.value("6v asm determinant n=" + std::to_string(n), partition_fn(asmp, n, P),
              MPScalar(e.total, P), "enumeration", 1e-20);
  }
  const long vsasm_counts[] = {1, 3, 26};
  ModelParams vs = named_point(NamedPoint::VSASM, P);
  for (int n = 1; n <= 3; ++n) {
    RefinedCountsZ e = enumerate_uniform_counts(Model::SixVPrime, n);
    rec.integer("6vp vsasm enumeration n=" + std::to_string(n), e.total, vsasm_counts[n - 1],
                "vertically symmetric ASM numbers");
    rec.value("6vp vsasm determinant n=" + std::to_string(n), partition_fn(vs, n, P),
              MPScalar(e.total, P), "enumeration", 1e-20);
  }
  ModelParams up = named_point(NamedPoint::Uniform20V, P);
  for (int n = 1; n <= 3; ++n) {
    RefinedCountsZ e = enumerate_uniform_counts(Model::TwentyV, n);
    rec.integer("20v uniform enumeration n=" + std::to_string(n), e.total,
                z20v_product_formula(n), "product formula");
    rec.value("20v uniform determinant n=" + std::to_string(n), partition_fn(up, n, P),
              MPScalar(e.total, P), "enumeration", 1e-20);
  }
  for (int n = 1; n <= 4; ++n) {
    RefinedCountsZ dt = count_aztec_triangle(n);
    rec.integer("aztec triangle tilings n=" + std::to_string(n), dt.total,
                z20v_product_formula(n), "20V product formula");
    rec.integer("aztec triangle vs 20v configurations n=" + std::to_string(n), dt.total,
                enumerate_uniform_counts(Model::TwentyV, n).total, "20V enumeration");
  }
  for (int n = 1; n <= 3; ++n)
    rec.integer("refined domino/20V identity n=" + std::to_string(n), refined_dt_identity(n), 0,
                "exact integer identity");
}

// ---------------------------- closed_forms ----------------------------

void suite_closed_forms(SuiteReport& rep) {
  Recorder rec(rep);
  const mpfr_prec_t P = 512;
  std::mt19937_64 rng(20260810);
  // Classical and free-fermion closed forms vs the determinant pipeline.
  for (int trial = 0; trial < 5; ++trial) {
    ModelParams base = random_in_domain(Model::SixVPrime, rng, P);
    ModelParams cls = base;
    cls.eta = MPScalar(0L, P);
    for (int n = 1; n <= 8; ++n) {
      rec.value("classical closed form " + pname(cls) + " n=" + std::to_string(n),
                delta_closed_form(ClosedFormCase::Classical, cls.u, cls.v, n, P),
                delta(cls, n, P), "determinant", 1e-30);
    }
    ModelParams ff = random_at_eta(Model::SixVPrime, MPScalar::pi(P) / MPScalar(4L, P), rng, P);
    for (int n = 1; n <= 8; ++n) {
      rec.value("free-fermion closed form " + pname(ff) + " n=" + std::to_string(n),
                delta_closed_form(ClosedFormCase::FreeFermion, ff.u, ff.v, n, P),
                delta(ff, n, P), "determinant", 1e-30);
    }
  }
  // Single-path partition functions: closed series vs the DP oracle.
  const mpfr_prec_t PP = 320;
  for (Model m : {Model::SixV, Model::SixVPrime, Model::TwentyV}) {
    for (int trial = 0; trial < 5; ++trial) {
      ModelParams p = random_in_domain(m, rng, PP);
      MPScalar worst(0L, PP);
      for (int k = 0; k <= 30; ++k)
        for (int l = 0; l <= 30; ++l) {
          MPScalar r = rel_err(path_partition_closed(p, k, l, PP),
                               path_partition_dp(p, k, l, PP));
          if (r > worst) worst = r;
        }
      rec.residual("path closed vs dp, k,l<=30, " + pname(p), worst, 1e-25);
    }
  }
  ModelParams u20 = named_point(NamedPoint::Uniform20V, PP);
  MPScalar worst(0L, PP);
  for (int k = 0; k <= 12; ++k)
    for (int l = 0; l <= 12; ++l) {
      MPScalar y = path_partition_closed(u20, k, l, PP);
      MPScalar r = abs(y - floor(y + MPScalar(0.5, PP)));
      if (r > worst) worst = r;
    }
  rec.residual("uniform 20v path counts integral", worst, 1e-20);
}

// ----------------------------- recursions -----------------------------

void suite_recursions(SuiteReport& rep) {
  Recorder rec(rep);
  const mpfr_prec_t P = 448;
  std::mt19937_64 rng(5150);
  MPScalar xi(-0.35, P);
  std::vector<ModelParams> pts6 = {named_point(NamedPoint::ASM, P),
                                   random_in_domain(Model::SixV, rng, P),
                                   random_in_domain(Model::SixV, rng, P)};
  for (const auto& p : pts6)
    for (int n = 1; n <= 6; ++n) {
      auto [r1, r2] = recursion_residual(p, n, xi, P);
      rec.residual("6v delta recursion " + pname(p) + " n=" + std::to_string(n), r1, 1e-20);
      rec.residual("6v one-point relation " + pname(p) + " n=" + std::to_string(n), r2, 1e-20);
    }
  std::vector<ModelParams> ptsp = {named_point(NamedPoint::VSASM, P),
                                   named_point(NamedPoint::FreeFermion6VP, P),
                                   random_in_domain(Model::SixVPrime, rng, P)};
  for (const auto& p : ptsp)
    for (int n = 1; n <= 6; ++n) {
      auto [r1, r2] = recursion_residual(p, n, xi, P);
      rec.residual("6vp delta recursion " + pname(p) + " n=" + std::to_string(n), r1, 1e-20);
      rec.residual("6vp one-point relation " + pname(p) + " n=" + std::to_string(n), r2, 1e-20);
    }
}

// ----------------------------- sum_rules ------------------------------

void suite_sum_rules(SuiteReport& rep) {
  Recorder rec(rep);
  const mpfr_prec_t P = 384;
  std::mt19937_64 rng(314159);
  MPScalar pi = MPScalar::pi(P);
  // Reflection symmetries.
  for (int trial = 0; trial < 10; ++trial) {
    ModelParams p = random_in_domain(Model::SixV, rng, P);
    ModelParams q = p;
    q.u = pi - (p.u - p.v) + p.v;
    MPScalar worst(0L, P);
    for (int n = 1; n <= 6; ++n) {
      MPScalar r = rel_err(partition_fn(p, n, P), partition_fn(q, n, P));
      if (r > worst) worst = r;
    }
    rec.residual("6v reflection symmetry " + pname(p) + " n<=6", worst, 1e-25);
  }
  for (int trial = 0; trial < 10; ++trial) {
    ModelParams p = random_in_domain(Model::SixVPrime, rng, P);
    ModelParams q = p;
    q.u = -p.u;
    q.v = -pi - p.v;
    MPScalar worst(0L, P);
    for (int n = 1; n <= 6; ++n) {
      MPScalar r = rel_err(partition_fn(p, n, P), partition_fn(q, n, P));
      if (r > worst) worst = r;
    }
    rec.residual("6vp reflection symmetry " + pname(p) + " n<=6", worst, 1e-25);
  }
  // Free-fermion factorization of Z^6V'.
  ModelParams ff = random_at_eta(Model::SixVPrime, pi / MPScalar(4L, P), rng, P);
  for (int n = 1; n <= 8; ++n) {
    MPScalar rhs = pow(-cos(ff.u + ff.u) * cos(ff.v + ff.v), static_cast<long>(n) * (n - 1) / 2);
    rec.value("free-fermion factorization " + pname(ff) + " n=" + std::to_string(n),
              partition_fn(ff, n, P), rhs, "factorized form", 1e-30);
  }
  // Refined sum rules against enumerated exit-point counts.
  {
    ModelParams p = named_point(NamedPoint::ASM, P);
    int n = 4;
    RefinedCountsZ e = enumerate_uniform_counts(Model::SixV, n);
    for (double x : {-0.3, 0.2, -0.55}) {
      MPScalar xi(x, P);
      MPScalar w = p.u - p.v, eta = p.eta;
      MPScalar ab = sin(w - xi + eta) / sin(w + eta);
      MPScalar bb = sin(w - xi - eta) / sin(w - eta);
      MPScalar rhs(0L, P);
      for (int k = 1; k <= n; ++k)
        rhs += MPScalar(e.by_exit[k - 1], P) * pow(bb, k - 1) * pow(ab, n - k);
      rec.value("6v refined sum rule n=4 xi=" + std::to_string(x),
                refined_partition(p, n, xi, P), rhs, "enumerated exit counts", 1e-25);
    }
  }
  {
    ModelParams p = random_in_domain(Model::SixVPrime, rng, P);
    int n = 3;
    RefinedCountsW e = enumerate_vertex_model(p, n, P);
    MPScalar u = p.u, v = p.v, eta = p.eta;
    for (double x : {-0.2, 0.15, -0.4}) {
      MPScalar xi(x, P);
      MPScalar ao = sin(u - v - xi + eta) / sin(u - v + eta);
      MPScalar bo = sin(u - v - xi - eta) / sin(u - v - eta);
      MPScalar ae = sin(u + v + xi - eta) / sin(u + v - eta);
      MPScalar be = sin(u + v + xi + eta) / sin(u + v + eta);
      MPScalar rhs(0L, P);
      for (int j = 1; j <= n; ++j)
        rhs += e.by_exit[2 * j - 2] * pow(bo * be, j - 1) * pow(ae * ao, n - j);
      for (int j = 1; j <= n - 1; ++j)
        rhs += e.by_exit[2 * j - 1] * pow(bo * be, j - 1) * bo * ao * pow(ae * ao, n - j - 1);
      rec.value("6vp refined sum rule " + pname(p) + " xi=" + std::to_string(x),
                refined_partition(p, n, xi, P), rhs, "enumerated exit counts", 1e-25);
    }
  }
  {
    ModelParams p = random_in_domain(Model::TwentyV, rng, P);
    int n = 3;
    RefinedCountsW e = enumerate_vertex_model(p, n, P);
    MPScalar u = p.u, v = p.v, eta = p.eta;
    for (double x : {-0.2, 0.1, -0.35}) {
      MPScalar xi(x, P);
      MPScalar w0b = sin(u - v - xi + eta) * sin(eta - u - v - xi) /
                     (sin(u - v + eta) * sin(eta - u - v));
      MPScalar w1b = sin(u - v - xi - eta) * sin(-u - v - xi - eta) /
                     (sin(u - v - eta) * sin(-u - v - eta));
      MPScalar w2b = sin(u - v - xi - eta) / sin(u - v - eta);
      MPScalar w4b = sin(eta - u - v - xi) / sin(eta - u - v);
      MPScalar rhs(0L, P);
      for (int k = 1; k <= 2 * n - 1; ++k)
        rhs += (w4b * e.by_exit_horizontal[k - 1] + w2b * e.by_exit_diagonal[k - 1]) *
               pow(w0b, 2 * n - k - 1) * pow(w1b, k - 1);
      rec.value("20v refined sum rule " + pname(p) + " xi=" + std::to_string(x),
                refined_partition(p, n, xi, P), rhs, "enumerated exit counts", 1e-25);
    }
  }
}

// ------------------------------ saddles -------------------------------

void suite_saddles(SuiteReport& rep) {
  Recorder rec(rep);
  const mpfr_prec_t P = 512;
  std::mt19937_64 rng(271828);
  MPScalar pi = MPScalar::pi(P);
  std::vector<ModelParams> pts = {
      named_point(NamedPoint::ASM, P),
      random_in_domain(Model::SixV, rng, P),
      make_params(Model::SixVPrime, pi / MPScalar(3L, P), pi / MPScalar(12L, P),
                  -pi / MPScalar(2L, P)),
      random_in_domain(Model::SixVPrime, rng, P),
      named_point(NamedPoint::Uniform20V, P),
      random_in_domain(Model::TwentyV, rng, P),
  };
  ModelParams dt = named_point(NamedPoint::Uniform20V, P);
  dt.model = Model::DT;
  pts.push_back(dt);
  for (const ModelParams& p : pts) {
    MPScalar lo = branch_xi_min(p);
    MPScalar worst(0L, P);
    for (int i = 1; i <= 10; ++i) {
      MPScalar xi = lo * MPScalar(i, P) / MPScalar(11L, P);
      for (const MPScalar& r : saddle_residuals(p, xi, P))
        if (r > worst) worst = r;
    }
    rec.residual("saddle system " + pname(p) + ", 10 xi values", worst, 1e-25);
  }
  // Wronskian / Liouville / psi-ODE residuals on a small parameter grid.
  {
    double etas[] = {0.3, 0.55, 0.8, 1.05, 1.25};
    for (double e : etas) {
      ModelParams p = random_at_eta(Model::SixV, MPScalar(e, P), rng, P);
      MPScalar xi = branch_xi_min(p) * MPScalar(0.3, P);
      auto [w, ode] = liouville_residuals(p, xi, P);
      rec.residual("6v wronskian " + pname(p), w, 1e-25);
      rec.residual("6v psi-ode " + pname(p), ode, 1e-25);
    }
    for (double e : etas) {
      ModelParams p = random_at_eta(Model::SixVPrime, MPScalar(e, P), rng, P);
      MPScalar xi = branch_xi_min(p) * MPScalar(0.3, P);
      auto [w, ode] = liouville_residuals(p, xi, P);
      rec.residual("6vp liouville " + pname(p), w, 1e-25);
      rec.residual("6vp psi-ode " + pname(p), ode, 1e-25);
    }
    ModelParams vs = named_point(NamedPoint::VSASM, P);
    for (double x : {-0.2, -0.4, -0.6}) {
      auto [w, ode] = liouville_residuals(vs, MPScalar(x, P), P);
      rec.residual("6vp liouville at vsasm xi=" + std::to_string(x), w, 1e-25);
      rec.residual("6vp psi-ode at vsasm xi=" + std::to_string(x), ode, 1e-25);
    }
  }
  // kappa round trip on the monotone branch.
  ModelParams asmp = named_point(NamedPoint::ASM, P);
  MPScalar lo = branch_xi_min(asmp);
  MPScalar ka = kappa_of_xi(asmp, lo * MPScalar(0.9, P), P);
  MPScalar kb = kappa_of_xi(asmp, lo * MPScalar(0.1, P), P);
  MPScalar worst(0L, P);
  for (double f : {0.2, 0.5, 0.8}) {
    MPScalar kappa = ka + (kb - ka) * MPScalar(f, P);
    MPScalar r = rel_err(kappa_of_xi(asmp, xi_from_kappa(asmp, kappa, P), P), kappa);
    if (r > worst) worst = r;
  }
  rec.residual("kappa->xi->kappa round trip (6v asm)", worst, 1e-20);
}

// ------------------------------- curves -------------------------------

MPScalar solve_branch_x(const ModelParams& p, const MPScalar& a, const MPScalar& b,
                        const MPScalar& x, mpfr_prec_t prec) {
  const int grid = 96;
  MPScalar lo = a, flo = envelope_point(p, lo, prec).x - x;
  MPScalar hi = b;
  bool bracketed = false;
  for (int i = 1; i <= grid; ++i) {
    MPScalar nxt = a + (b - a) * MPScalar(i, prec) / MPScalar(grid, prec);
    MPScalar fn = envelope_point(p, nxt, prec).x - x;
    if (flo.sign() != fn.sign()) {
      hi = nxt;
      bracketed = true;
      break;
    }
    lo = nxt;
    flo = fn;
  }
  if (!bracketed) throw DomainError("solve_branch_x: no bracket");
  for (int it = 0; it < 220; ++it) {
    MPScalar mid = (lo + hi) / MPScalar(2L, prec);
    MPScalar fm = envelope_point(p, mid, prec).x - x;
    if (fm.sign() == flo.sign()) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / MPScalar(2L, prec);
}

void suite_curves(SuiteReport& rep) {
  Recorder rec(rep);
  const mpfr_prec_t P = 512;
  std::mt19937_64 rng(161803);
  MPScalar pi = MPScalar::pi(P);

  std::vector<std::pair<ModelParams, std::vector<BranchId>>> cases;
  cases.push_back({named_point(NamedPoint::ASM, P), {BranchId::NE, BranchId::SE}});
  cases.push_back({random_in_domain(Model::SixV, rng, P), {BranchId::NE, BranchId::SE}});
  cases.push_back({named_point(NamedPoint::TwentyVDwbc3, P), {BranchId::NE, BranchId::SE}});
  cases.push_back({random_in_domain(Model::SixVPrime, rng, P), {BranchId::NE, BranchId::SE}});
  cases.push_back({named_point(NamedPoint::Uniform20V, P), {BranchId::NE, BranchId::SE}});
  cases.push_back({random_in_domain(Model::TwentyV, rng, P), {BranchId::NE, BranchId::SE}});
  ModelParams dt = named_point(NamedPoint::Uniform20V, P);
  dt.model = Model::DT;
  cases.push_back({dt, {BranchId::NE, BranchId::FullAnalytic}});

  // (a) tangency along every sampled branch.
  for (const auto& [p, ids] : cases) {
    MPScalar worst(0L, P);
    for (BranchId id : ids) {
      Branch b = branch_curve(p, id, 25, P);
      for (size_t i = 0; i < b.points.size(); ++i) {
        MPScalar r = abs(b.points[i].y + b.lines[i].A * b.points[i].x - b.lines[i].B);
        if (r > worst) worst = r;
      }
    }
    rec.residual("tangency " + pname(p), worst, 1e-20);
  }
  // secant-envelope geometric check on the NE branch.
  for (const auto& [p, ids] : cases) {
    MPScalar lo = branch_xi_min(p);
    MPScalar worst(0L, P);
    MPScalar d(1e-6, P);
    for (int i = 1; i <= 6; ++i) {
      MPScalar xi = lo * MPScalar(i, P) / MPScalar(7L, P);
      TangentLine l1 = tangent_line(p, xi, P);
      TangentLine l2 = tangent_line(p, xi + d, P);
      CurvePoint pt = envelope_point(p, xi, P);
      MPScalar xs = (l2.B - l1.B) / (l2.A - l1.A);
      MPScalar ys = l1.B - l1.A * xs;
      MPScalar r = abs(xs - pt.x) + abs(ys - pt.y);
      if (r > worst) worst = r;
    }
    rec.residual("secant envelope " + pname(p), worst, 1e-4);
  }
  // (b) dual-computed A', B' vs central finite differences.
  for (const auto& [p, ids] : cases) {
    MPScalar lo = branch_xi_min(p);
    MPScalar h(1e-10, P);
    MPScalar worst(0L, P);
    for (int i = 1; i <= 10; ++i) {
      MPScalar xi = lo * MPScalar(i, P) / MPScalar(11L, P);
      TangentLine lp = tangent_line(p, xi + h, P);
      TangentLine lm = tangent_line(p, xi - h, P);
      CurvePoint pt = envelope_point(p, xi, P);
      TangentLine l = tangent_line(p, xi, P);
      MPScalar Ap = (lp.A - lm.A) / (h + h), Bp = (lp.B - lm.B) / (h + h);
      MPScalar r1 = rel_err(pt.x, Bp / Ap);
      MPScalar r2 = rel_err(pt.y, l.B - l.A / Ap * Bp);
      if (r1 > worst) worst = r1;
      if (r2 > worst) worst = r2;
    }
    rec.residual("dual vs finite-difference envelope " + pname(p), worst, 1e-8);
  }
  // (c) free-fermion half circle, plus the near-limit ellipse at u -> pi/4.
  {
    ModelParams ff = named_point(NamedPoint::FreeFermion6VP, P);
    Branch b = branch_curve(ff, BranchId::NE, 25, P);
    MPScalar worst(0L, P);
    for (const CurvePoint& pt : b.points) {
      MPScalar r = abs(pow(pt.x + MPScalar(1L, P), 2) + pow(pt.y - MPScalar(1L, P), 2) -
                       MPScalar(1L, P));
      if (r > worst) worst = r;
    }
    rec.residual("free-fermion 6vp half circle", worst, 1e-20);
    ModelParams el = make_params(Model::SixVPrime, pi / MPScalar(4L, P),
                                 pi / MPScalar(4L, P) - MPScalar(1e-6, P),
                                 -pi / MPScalar(2L, P));
    Branch be = branch_curve(el, BranchId::NE, 17, P);
    worst = MPScalar(0L, P);
    for (const CurvePoint& pt : be.points) {
      MPScalar r = abs(pow(MPScalar(2L, P) * pt.x + MPScalar(1L, P), 2) +
                       pow(pt.y - MPScalar(1L, P), 2) - MPScalar(1L, P));
      if (r > worst) worst = r;
    }
    rec.residual("near-limit ellipse 6vp u->pi/4", worst, 1e-4);
  }
  // (d) algebraic equation on the uniform 20V NE branch and the DT curve.
  {
    ModelParams up = named_point(NamedPoint::Uniform20V, P);
    Branch b = branch_curve(up, BranchId::NE, 25, P);
    MPScalar worst(0L, P);
    for (const CurvePoint& pt : b.points) {
      MPScalar r = abs(algebraic_residual_20v(pt, AlgebraicShift::TwentyV));
      if (r > worst) worst = r;
    }
    rec.residual("algebraic equation, uniform 20v NE", worst, 1e-8);
    Branch f = branch_curve(dt, BranchId::FullAnalytic, 25, P);
    worst = MPScalar(0L, P);
    for (const CurvePoint& pt : f.points) {
      MPScalar r = abs(algebraic_residual_20v(pt, AlgebraicShift::DT));
      if (r > worst) worst = r;
    }
    rec.residual("algebraic equation, DT curve", worst, 1e-8);
    CurvePoint origin{MPScalar(0L, P), MPScalar(0L, P)};
    rec.value("algebraic polynomial at the origin",
              algebraic_residual_20v(origin, AlgebraicShift::None), MPScalar(-4096L, P),
              "direct arithmetic", 1e-30);
  }
  // (e) 6V'(0,-pi/2) equals twice the 6V(pi/2) branch.
  for (long den : {6L, 4L, 3L}) {
    MPScalar eta = pi / MPScalar(den, P);
    ModelParams p6 = make_params(Model::SixV, eta, pi / MPScalar(2L, P), MPScalar(0L, P));
    ModelParams pp = make_params(Model::SixVPrime, eta, MPScalar(0L, P), -pi / MPScalar(2L, P));
    MPScalar lo = branch_xi_min(p6);
    MPScalar worst(0L, P);
    for (int i = 1; i <= 8; ++i) {
      MPScalar xi = lo * MPScalar(i, P) / MPScalar(9L, P);
      CurvePoint a = envelope_point(p6, xi, P);
      CurvePoint b = envelope_point(pp, xi, P);
      MPScalar r = abs(b.x - MPScalar(2L, P) * a.x) + abs(b.y - MPScalar(2L, P) * a.y);
      if (r > worst) worst = r;
    }
    rec.residual("6vp = 2 x 6v branch, eta=pi/" + std::to_string(den), worst, 1e-10);
  }
  // (f) DT endpoints.
  {
    MPScalar xi1 = -pi * MPScalar(3L, P) / MPScalar(8L, P) + MPScalar(1e-12, P);
    CurvePoint a = envelope_point(dt, xi1, P);
    MPScalar s2 = sqrt(MPScalar(2L, P));
    MPScalar target_x = (s2 + s2) / MPScalar(3L, P) - MPScalar(2L, P);
    MPScalar target_y = (s2 + s2) / MPScalar(3L, P);
    rec.residual("DT NW tangency point", abs(a.x - target_x) + abs(a.y - target_y), 1e-10);
    MPScalar xi2 = -pi / MPScalar(4L, P) + MPScalar(1e-12, P);
    CurvePoint b = envelope_point(dt, xi2, P);
    MPScalar s3 = sqrt(MPScalar(3L, P));
    MPScalar hx = MPScalar(2L, P) * (s3 - MPScalar(3L, P)) / MPScalar(3L, P);
    rec.residual("DT horizontal tangency point",
                 abs(b.x - hx) + abs(b.y - MPScalar(1L, P)), 1e-10);
  }
  // (g) free-fermion SE branch = analytic continuation of NE (x-matched).
  {
    std::vector<ModelParams> ffs;
    ffs.push_back(make_params(Model::SixVPrime, pi / MPScalar(4L, P), MPScalar(0.15, P),
                              -pi / MPScalar(2L, P) - MPScalar(0.1, P)));
    ffs.push_back(make_params(Model::TwentyV, pi / MPScalar(4L, P), MPScalar(0.2, P),
                              -pi / MPScalar(2L, P) - MPScalar(0.05, P)));
    for (const ModelParams& ff : ffs) {
      Branch se = branch_curve(ff, BranchId::SE, 11, P);
      MPScalar lo(0.0005, P);
      MPScalar hi = -branch_xi_min(star_involution(ff)) * MPScalar(0.9999, P);
      MPScalar worst(0L, P);
      for (size_t i = 2; i + 2 < se.points.size(); ++i) {
        MPScalar xi = solve_branch_x(ff, lo, hi, se.points[i].x, P);
        CurvePoint cont = envelope_point(ff, xi, P);
        MPScalar r = abs(cont.y - se.points[i].y);
        if (r > worst) worst = r;
      }
      rec.residual("SE = analytic continuation of NE, " + pname(ff), worst, 1e-8);
    }
  }
}

// ----------------------- asymptotic_convergence -----------------------

void suite_asymptotic_convergence(SuiteReport& rep) {
  Recorder rec(rep);
  const mpfr_prec_t P = 320;
  ModelParams up = named_point(NamedPoint::Uniform20V, P);
  MPScalar f = free_energy(up, P);
  MPScalar prev(1e9, P);
  bool decreasing = true;
  MPScalar e32(0L, P);
  for (int N : {8, 16, 32}) {
    MPScalar z(z20v_product_formula(N), P);
    MPScalar e = abs(-log(z) / MPScalar(static_cast<long>(N) * N, P) - f);
    if (!(e < prev)) decreasing = false;
    prev = e;
    if (N == 32) e32 = e;
  }
  rec.boolean("20v free-energy error decreasing over N=8,16,32", decreasing,
              "finite-N product formula vs closed form");
  rec.residual("20v free-energy error at N=32", e32, 0.05);

  ModelParams asmp = named_point(NamedPoint::ASM, P);
  mpfr_prec_t prec = default_precision_bits(33);
  for (double x : {-0.3, -0.6, -0.9}) {
    MPScalar xi(x, prec);
    MPScalar h = one_point(asmp.with_precision(prec), 32, xi, prec);
    MPScalar est = -log(h) / MPScalar(32L, prec);
    MPScalar psi = one_point_exponent(asmp, xi, ExponentKind::Psi, P);
    rec.residual("6v one-point exponent at N=32, xi=" + std::to_string(x),
                 (est.with_precision(P) - psi), 0.05);
  }
}

}  // namespace

std::vector<std::string> verify_suite_names() {
  return {"counts",  "recursions", "closed_forms", "sum_rules",
          "saddles", "curves",     "asymptotic_convergence"};
}

SuiteReport run_verify_suite(const std::string& name) {
  SuiteReport rep;
  rep.suite = name;
  if (name == "counts")
    suite_counts(rep);
  else if (name == "recursions")
    suite_recursions(rep);
  else if (name == "closed_forms")
    suite_closed_forms(rep);
  else if (name == "sum_rules")
    suite_sum_rules(rep);
  else if (name == "saddles")
    suite_saddles(rep);
  else if (name == "curves")
    suite_curves(rep);
  else if (name == "asymptotic_convergence")
    suite_asymptotic_convergence(rep);
  else
    throw DomainError("unknown verify suite: " + name);
  return rep;
}

}  // namespace arctic

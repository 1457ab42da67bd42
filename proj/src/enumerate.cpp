#include "arctic/enumerate.hpp"

#include <array>
#include <map>
#include <optional>
#include <utility>

#include "arctic/errors.hpp"

namespace arctic {

namespace {

constexpr int kCap6V = 8;    // 2^n frontier states
constexpr int kCap20V = 4;   // 2^(2n+1) frontier states
constexpr int kCapDT = 16;

// ---------------------------------------------------------------------------
// Row-to-row sweep shared by the 6V and 6V' models. Paths travel right and
// down; the state is the vector of vertical-edge bits between consecutive
// rows. Rows are numbered 1..nrows from the bottom, processed top to bottom.
// W stubs feed paths in on selected rows; all S stubs must carry a path out.
// pin_k (if set) pins the last column to the refined configuration: empty
// above row k, a turn at row k, vertical passes below.
// ---------------------------------------------------------------------------
template <typename R>
struct RowWeights {
  R a, b, c;
};

template <typename R>
R sweep_6v_family(int ncols, int nrows, const std::vector<bool>& w_stub,
                  const std::vector<RowWeights<R>>& row_w, int pin_k, const R& zero,
                  const R& one) {
  std::map<std::vector<char>, R> states;
  states[std::vector<char>(ncols, 0)] = one;
  for (int r = nrows; r >= 1; --r) {
    const RowWeights<R>& rw = row_w[r - 1];
    std::map<std::pair<std::vector<char>, char>, R> cur;
    for (auto& [vb, amp] : states) cur[{vb, w_stub[r - 1] ? 1 : 0}] = amp;
    for (int j = 1; j <= ncols; ++j) {
      std::map<std::pair<std::vector<char>, char>, R> nxt;
      for (auto& [key, amp] : cur) {
        const auto& [vb, h] = key;
        int W = h, N = vb[j - 1];
        for (int E = 0; E <= 1; ++E) {
          int S = W + N - E;
          if (S < 0 || S > 1) continue;
          if (j == ncols && E != 0) continue;
          if (pin_k > 0 && j == ncols) {
            if (r > pin_k && !(W == 0 && N == 0 && S == 0)) continue;
            if (r == pin_k && !(W == 1 && N == 0 && S == 1)) continue;
            if (r < pin_k && !(W == 0 && N == 1 && S == 1)) continue;
          }
          R w = zero;
          if (W == N)
            w = (W == E) ? rw.a : rw.c;   // empty/kiss are a-type, double turn impossible
          else
            w = (W == E) ? rw.b : rw.c;   // straight pass vs turn
          if (W == 1 && N == 1) w = rw.a; // two paths osculating
          std::vector<char> vb2 = vb;
          vb2[j - 1] = static_cast<char>(S);
          auto k2 = std::make_pair(std::move(vb2), static_cast<char>(E));
          auto it = nxt.find(k2);
          if (it == nxt.end())
            nxt.emplace(std::move(k2), amp * w);
          else
            it->second = it->second + amp * w;
        }
      }
      cur = std::move(nxt);
    }
    states.clear();
    for (auto& [key, amp] : cur) {
      auto it = states.find(key.first);
      if (it == states.end())
        states.emplace(key.first, amp);
      else
        it->second = it->second + amp;
    }
  }
  R total = zero;
  for (auto& [vb, amp] : states) {
    bool all = true;
    for (char b : vb) all = all && b == 1;
    if (all) total = total + amp;
  }
  return total;
}

// ---------------------------------------------------------------------------
// 20V-DWBC3 raster sweep over the quadrangle Q_n. Column j = 1..n spans rows
// n-j+1 .. 2n-1; paths enter at the W stubs of column 1 and exit through the
// vertical stub below the bottom vertex of every column. The frontier state
// carries one vertical and one pending-diagonal bit per column plus the
// in-row horizontal bit; the predecessor's diagonal is held in a separate
// register until its consumer (next column, next row) has read the old slot.
// ---------------------------------------------------------------------------
struct Cfg {
  int W, N, Din, E, S, Dout;
};

template <typename R>
class Weight20V {
 public:
  // weights[mask] with mask = W | N<<1 | Din<<2 | E<<3 | S<<4 | Dout<<5
  std::array<R, 64> w;
  const R& operator()(const Cfg& c) const {
    return w[c.W | c.N << 1 | c.Din << 2 | c.E << 3 | c.S << 4 | c.Dout << 5];
  }
};

// Composite weight of one 20V vertex configuration, summing over the three
// internal edges of the resolved triple intersection (h-v, d-v, h-d simple
// crossings with their a/b/c weights).
template <typename R>
R w20v_config(const Cfg& c, const std::array<R, 3>& hv, const std::array<R, 3>& dv,
              const std::array<R, 3>& hd, const R& zero) {
  auto w6 = [](int i1, int i2, int o1, int o2, const std::array<R, 3>& abc) -> std::optional<R> {
    if (i1 + i2 != o1 + o2) return std::nullopt;
    if (i1 == i2) return abc[0];
    if (i1 == 1) return o1 == 1 ? abc[1] : abc[2];
    return o2 == 1 ? abc[1] : abc[2];
  };
  R tot = zero;
  for (int ih = 0; ih <= 1; ++ih)
    for (int iv = 0; iv <= 1; ++iv)
      for (int id = 0; id <= 1; ++id) {
        auto w1 = w6(c.W, iv, ih, c.S, hv);
        auto w2 = w6(c.Din, c.N, id, iv, dv);
        auto w3 = w6(ih, id, c.E, c.Dout, hd);
        if (!w1 || !w2 || !w3) continue;
        tot = tot + *w1 * *w2 * *w3;
      }
  return tot;
}

template <typename R>
Weight20V<R> build_w20v(const std::array<R, 3>& hv, const std::array<R, 3>& dv,
                        const std::array<R, 3>& hd, const R& nu, const R& zero) {
  Weight20V<R> out;
  for (int m = 0; m < 64; ++m) {
    Cfg c{m & 1, (m >> 1) & 1, (m >> 2) & 1, (m >> 3) & 1, (m >> 4) & 1, (m >> 5) & 1};
    if (c.W + c.N + c.Din != c.E + c.S + c.Dout)
      out.w[m] = zero;
    else
      out.w[m] = nu * w20v_config(c, hv, dv, hd, zero);
  }
  return out;
}

// pin: 0 = unpinned; otherwise pins the last column at height k with the
// given entry kind ('-' horizontal, '\\' diagonal).
template <typename R>
R sweep_20v(int n, const Weight20V<R>& W20, int pin_k, char pin_kind, const R& zero,
            const R& one) {
  using VKey = std::pair<std::vector<char>, std::vector<char>>;
  std::map<VKey, R> states;
  states[{std::vector<char>(n, 0), std::vector<char>(n, 0)}] = one;
  for (int i = 2 * n - 1; i >= 1; --i) {
    int j0 = std::max(1, n - i + 1);
    // in-row key: (Vbits, Dbits, Hbit, Dprev)
    std::map<std::tuple<std::vector<char>, std::vector<char>, char, char>, R> cur;
    for (auto& [key, amp] : states)
      cur[{key.first, key.second, static_cast<char>(j0 == 1 ? 1 : 0), 0}] = amp;
    for (int j = j0; j <= n; ++j) {
      std::map<std::tuple<std::vector<char>, std::vector<char>, char, char>, R> nxt;
      for (auto& [key, amp] : cur) {
        const auto& [vb, db, h, dprev] = key;
        Cfg c;
        c.W = h;
        c.N = vb[j - 1];
        c.Din = j >= 2 ? db[j - 2] : 0;
        int tin = c.W + c.N + c.Din;
        for (c.E = 0; c.E <= 1; ++c.E)
          for (c.S = 0; c.S <= 1; ++c.S)
            for (c.Dout = 0; c.Dout <= 1; ++c.Dout) {
              if (c.E + c.S + c.Dout != tin) continue;
              if (j == n && (c.E != 0 || c.Dout != 0)) continue;
              if (i == n - j + 1 && c.S != 1) continue;  // staircase exit
              if (pin_k > 0 && j == n) {
                bool ok;
                if (i > pin_k)
                  ok = c.W == 0 && c.N == 0 && c.Din == 0 && c.S == 0;
                else if (i == pin_k)
                  ok = (pin_kind == '-') ? (c.W == 1 && c.N == 0 && c.Din == 0 && c.S == 1)
                                         : (c.W == 0 && c.N == 0 && c.Din == 1 && c.S == 1);
                else
                  ok = c.W == 0 && c.N == 1 && c.Din == 0 && c.S == 1;
                if (!ok) continue;
              }
              const R& w = W20(c);
              std::vector<char> vb2 = vb;
              vb2[j - 1] = static_cast<char>(c.S);
              std::vector<char> db2 = db;
              if (j > j0 && j >= 2) db2[j - 2] = dprev;
              auto k2 = std::make_tuple(std::move(vb2), std::move(db2), static_cast<char>(c.E),
                                        static_cast<char>(c.Dout));
              auto it = nxt.find(k2);
              if (it == nxt.end())
                nxt.emplace(std::move(k2), amp * w);
              else
                it->second = it->second + amp * w;
            }
      }
      cur = std::move(nxt);
    }
    states.clear();
    for (auto& [key, amp] : cur) {
      const auto& [vb, db, h, dprev] = key;
      std::vector<char> db2 = db;
      db2[n - 1] = dprev;
      VKey k2{vb, std::move(db2)};
      auto it = states.find(k2);
      if (it == states.end())
        states.emplace(std::move(k2), amp);
      else
        it->second = it->second + amp;
    }
  }
  R total = zero;
  for (auto& [key, amp] : states) total = total + amp;
  return total;
}

std::vector<RowWeights<mpz_class>> uniform_rows(int nrows) {
  return std::vector<RowWeights<mpz_class>>(nrows, {mpz_class(1), mpz_class(1), mpz_class(1)});
}

}  // namespace

mpz_class det_bareiss(std::vector<std::vector<mpz_class>> m) {
  const size_t n = m.size();
  if (n == 0) return mpz_class(1);
  mpz_class prev(1);
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t piv = k + 1;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) return mpz_class(0);
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    for (size_t r = k + 1; r < n; ++r)
      for (size_t c = k + 1; c < n; ++c) {
        mpz_class num = m[r][c] * m[k][k] - m[r][k] * m[k][c];
        mpz_divexact(m[r][c].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m[k][k];
  }
  return sign < 0 ? mpz_class(-m[n - 1][n - 1]) : m[n - 1][n - 1];
}

RefinedCountsZ enumerate_uniform_counts(Model model, int n) {
  if (n < 1) throw DomainError("enumerate_uniform_counts: n must be >= 1");
  RefinedCountsZ out;
  mpz_class zero(0), one(1);
  if (model == Model::SixV || model == Model::SixVPrime) {
    if (n > kCap6V) throw CapacityError("enumerate: n too large for the 6V/6V' sweep");
    int nrows = model == Model::SixV ? n : 2 * n - 1;
    std::vector<bool> stub(nrows);
    for (int r = 1; r <= nrows; ++r) stub[r - 1] = model == Model::SixV || r % 2 == 1;
    auto rows = uniform_rows(nrows);
    out.total = sweep_6v_family<mpz_class>(n, nrows, stub, rows, 0, zero, one);
    for (int k = 1; k <= nrows; ++k)
      out.by_exit.push_back(sweep_6v_family<mpz_class>(n, nrows, stub, rows, k, zero, one));
    return out;
  }
  if (model == Model::TwentyV || model == Model::DT) {
    if (n > kCap20V) throw CapacityError("enumerate: n too large for the 20V sweep");
    std::array<mpz_class, 3> abc{mpz_class(1), mpz_class(1), mpz_class(1)};
    // Uniform point: every simple crossing carries weight 1 and nu cancels
    // the composite normalization exactly; count configurations directly by
    // giving each consistent vertex configuration weight 1.
    Weight20V<mpz_class> W20;
    for (int m = 0; m < 64; ++m) {
      Cfg c{m & 1, (m >> 1) & 1, (m >> 2) & 1, (m >> 3) & 1, (m >> 4) & 1, (m >> 5) & 1};
      W20.w[m] = (c.W + c.N + c.Din == c.E + c.S + c.Dout) ? one : zero;
    }
    out.total = sweep_20v<mpz_class>(n, W20, 0, 0, zero, one);
    for (int k = 1; k <= 2 * n - 1; ++k) {
      out.by_exit_horizontal.push_back(sweep_20v<mpz_class>(n, W20, k, '-', zero, one));
      out.by_exit_diagonal.push_back(sweep_20v<mpz_class>(n, W20, k, '\\', zero, one));
      out.by_exit.push_back(out.by_exit_horizontal.back() + out.by_exit_diagonal.back());
    }
    return out;
  }
  throw DomainError("enumerate_uniform_counts: unknown model");
}

RefinedCountsW enumerate_vertex_model(const ModelParams& params, int n, mpfr_prec_t precision) {
  if (n < 1) throw DomainError("enumerate_vertex_model: n must be >= 1");
  check_domain(params);
  RefinedCountsW out;
  MPScalar zero(0L, precision), one(1L, precision);
  WeightTable wt = weight_table(params.with_precision(precision));
  if (params.model == Model::SixV || params.model == Model::SixVPrime) {
    if (n > kCap6V) throw CapacityError("enumerate: n too large for the 6V/6V' sweep");
    int nrows = params.model == Model::SixV ? n : 2 * n - 1;
    std::vector<bool> stub(nrows);
    std::vector<RowWeights<MPScalar>> rows;
    for (int r = 1; r <= nrows; ++r) {
      stub[r - 1] = params.model == Model::SixV || r % 2 == 1;
      if (params.model == Model::SixV)
        rows.push_back({wt.a, wt.b, wt.c});
      else if (r % 2 == 1)
        rows.push_back({wt.a_o, wt.b_o, wt.c_o});
      else
        rows.push_back({wt.a_e, wt.b_e, wt.c_e});
    }
    out.total = sweep_6v_family<MPScalar>(n, nrows, stub, rows, 0, zero, one);
    for (int k = 1; k <= nrows; ++k)
      out.by_exit.push_back(sweep_6v_family<MPScalar>(n, nrows, stub, rows, k, zero, one));
    return out;
  }
  if (params.model == Model::TwentyV) {
    if (n > kCap20V) throw CapacityError("enumerate: n too large for the 20V sweep");
    mpfr_prec_t prec = precision;
    MPScalar u = params.u.with_precision(prec), v = params.v.with_precision(prec),
             eta = params.eta.with_precision(prec);
    MPScalar s2e = sin(eta + eta);
    std::array<MPScalar, 3> hv{sin(u - v + eta), sin(u - v - eta), s2e};
    std::array<MPScalar, 3> dv{sin(eta - u - v), sin(-u - v - eta), s2e};
    std::array<MPScalar, 3> hd{sin(u + u + eta + eta), sin(u + u), s2e};
    auto W20 = build_w20v<MPScalar>(hv, dv, hd, params.nu.with_precision(prec), zero);
    out.total = sweep_20v<MPScalar>(n, W20, 0, 0, zero, one);
    for (int k = 1; k <= 2 * n - 1; ++k) {
      out.by_exit_horizontal.push_back(sweep_20v<MPScalar>(n, W20, k, '-', zero, one));
      out.by_exit_diagonal.push_back(sweep_20v<MPScalar>(n, W20, k, '\\', zero, one));
      out.by_exit.push_back(out.by_exit_horizontal.back() + out.by_exit_diagonal.back());
    }
    return out;
  }
  throw DomainError("enumerate_vertex_model: weighted enumeration covers 6V, 6V', 20V");
}

namespace {

// Delannoy numbers D(m, k): paths with m down, k right and diagonal steps.
mpz_class delannoy(int m, int k, std::map<std::pair<int, int>, mpz_class>& memo) {
  if (m < 0 || k < 0) return mpz_class(0);
  if (m == 0 || k == 0) return mpz_class(1);
  auto key = std::make_pair(m, k);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  mpz_class r = delannoy(m - 1, k, memo) + delannoy(m, k - 1, memo) + delannoy(m - 1, k - 1, memo);
  memo.emplace(key, r);
  return r;
}

}  // namespace

RefinedCountsZ count_aztec_triangle(int n) {
  if (n < 1) throw DomainError("count_aztec_triangle: n must be >= 1");
  if (n > kCapDT) throw CapacityError("count_aztec_triangle: n too large");
  std::map<std::pair<int, int>, mpz_class> memo;
  RefinedCountsZ out;
  // Paths S_i = (-(2n-1)+i, i) -> E_j = (-2j, 0), steps right/down/diagonal.
  auto entry = [&](int i, int j) { return delannoy(i, 2 * n - 1 - i - 2 * j, memo); };
  std::vector<std::vector<mpz_class>> M(n, std::vector<mpz_class>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) M[i][j] = entry(i, j);
  mpz_class d = det_bareiss(M);
  out.total = d >= 0 ? d : mpz_class(-d);
  // Refined: topmost path constrained to enter the last vertical (x = 0) at
  // height k; its last step crosses from x = -1 at height k (right step) or
  // k+1 (diagonal step).
  for (int k = 0; k < n; ++k) {
    std::vector<std::vector<mpz_class>> Mk(n, std::vector<mpz_class>(n));
    for (int i = 0; i < n; ++i) {
      Mk[i][0] = delannoy(i - k, 2 * n - 2 - i, memo) + delannoy(i - k - 1, 2 * n - 2 - i, memo);
      for (int j = 1; j < n; ++j) Mk[i][j] = entry(i, j);
    }
    mpz_class dk = det_bareiss(Mk);
    out.by_exit.push_back(dk >= 0 ? dk : mpz_class(-dk));
  }
  return out;
}

mpz_class refined_dt_identity(int n) {
  RefinedCountsZ dt = count_aztec_triangle(n);
  RefinedCountsZ tv = enumerate_uniform_counts(Model::TwentyV, n);
  auto z20 = [&](int k) {
    return (k >= 1 && k <= 2 * n - 1) ? tv.by_exit[k - 1] : mpz_class(0);
  };
  mpz_class worst(0);
  for (int k = 0; k < n; ++k) {
    mpz_class r = dt.by_exit[k] - (z20(n + k + 1) + z20(n + k));
    if (r < 0) r = -r;
    if (r > worst) worst = r;
  }
  return worst;
}

mpz_class z20v_product_formula(int n) {
  if (n < 1) throw DomainError("z20v_product_formula: n must be >= 1");
  mpq_class q(1);
  mpz_class two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(n) * (n - 1) / 2);
  q = two_pow;
  for (int i = 0; i < n; ++i) {
    q *= factorial_z(4 * static_cast<unsigned long>(i) + 2);
    q /= factorial_z(static_cast<unsigned long>(n) + 2 * i + 1);
  }
  q.canonicalize();
  if (q.get_den() != 1) throw DomainError("z20v_product_formula: non-integer value");
  return q.get_num();
}

}  // namespace arctic

#include "bgmu/linalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace bgmu {

QMat q_identity(size_t n) {
  QMat m(n, QVec(n));
  for (size_t i = 0; i < n; ++i) m[i][i] = Rat(1);
  return m;
}

QMat q_from_z(ZMat const& a) {
  QMat m(a.size());
  for (size_t i = 0; i < a.size(); ++i) m[i] = to_qvec(a[i]);
  return m;
}

QVec q_mat_vec(QMat const& m, QVec const& v) {
  QVec r(m.size());
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != v.size()) throw std::invalid_argument("matrix/vector size mismatch");
    Rat s;
    for (size_t j = 0; j < v.size(); ++j) s += m[i][j] * v[j];
    r[i] = s;
  }
  return r;
}

QMat q_mat_mul(QMat const& a, QMat const& b) {
  size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
  QMat r(n, QVec(m));
  for (size_t i = 0; i < n; ++i) {
    if (a[i].size() != k) throw std::invalid_argument("matrix size mismatch");
    for (size_t j = 0; j < m; ++j) {
      Rat s;
      for (size_t t = 0; t < k; ++t) s += a[i][t] * b[t][j];
      r[i][j] = s;
    }
  }
  return r;
}

QMat q_transpose(QMat const& m) {
  size_t r = m.size(), c = r ? m[0].size() : 0;
  QMat t(c, QVec(r));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < c; ++j) t[j][i] = m[i][j];
  return t;
}

namespace {

// Row echelon elimination of [a | b]; returns pivot column per pivot row.
std::vector<size_t> eliminate(QMat& a, QMat& b) {
  size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::vector<size_t> pivots;
  size_t pr = 0;
  for (size_t pc = 0; pc < cols && pr < rows; ++pc) {
    size_t sel = pr;
    while (sel < rows && a[sel][pc].is_zero()) ++sel;
    if (sel == rows) continue;
    std::swap(a[sel], a[pr]);
    if (!b.empty()) std::swap(b[sel], b[pr]);
    Rat inv = Rat(1) / a[pr][pc];
    for (auto& x : a[pr]) x *= inv;
    if (!b.empty())
      for (auto& x : b[pr]) x *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == pr || a[i][pc].is_zero()) continue;
      Rat f = a[i][pc];
      for (size_t j = 0; j < cols; ++j) a[i][j] -= f * a[pr][j];
      if (!b.empty())
        for (size_t j = 0; j < b[i].size(); ++j) b[i][j] -= f * b[pr][j];
    }
    pivots.push_back(pc);
    ++pr;
  }
  return pivots;
}

}  // namespace

std::optional<QVec> q_solve(QMat a, QVec b) {
  size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  QMat rhs(rows, QVec(1));
  for (size_t i = 0; i < rows; ++i) rhs[i][0] = b[i];
  auto pivots = eliminate(a, rhs);
  // consistency: zero rows of a must have zero rhs
  for (size_t i = pivots.size(); i < rows; ++i)
    if (!rhs[i][0].is_zero()) return std::nullopt;
  QVec x(cols);
  for (size_t p = 0; p < pivots.size(); ++p) x[pivots[p]] = rhs[p][0];
  return x;
}

QMat q_inverse(QMat const& a) {
  size_t n = a.size();
  QMat m = a, inv = q_identity(n);
  auto pivots = eliminate(m, inv);
  if (pivots.size() != n) throw std::domain_error("matrix is singular");
  return inv;
}

size_t q_rank(QMat a) {
  QMat dummy;
  return eliminate(a, dummy).size();
}

ZMat z_identity(size_t n) {
  ZMat m(n, ZVec(n, 0));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

ZVec z_mat_vec(ZMat const& m, ZVec const& v) {
  ZVec r(m.size(), 0);
  for (size_t i = 0; i < m.size(); ++i) {
    __int128 s = 0;
    for (size_t j = 0; j < v.size(); ++j) s += (__int128)m[i][j] * v[j];
    if (s > INT64_MAX || s < INT64_MIN) throw std::overflow_error("integer overflow");
    r[i] = (long long)s;
  }
  return r;
}

ZMat z_mat_mul(ZMat const& a, ZMat const& b) {
  size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
  ZMat r(n, ZVec(m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j) {
      __int128 s = 0;
      for (size_t t = 0; t < k; ++t) s += (__int128)a[i][t] * b[t][j];
      if (s > INT64_MAX || s < INT64_MIN) throw std::overflow_error("integer overflow");
      r[i][j] = (long long)s;
    }
  return r;
}

bool z_is_identity(ZMat const& m) {
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[i].size(); ++j)
      if (m[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

std::optional<ZVec> z_solve(ZMat a, ZVec const& b) {
  size_t m = a.size(), n = m ? a[0].size() : 0;
  if (n == 0) {
    for (auto x : b)
      if (x != 0) return std::nullopt;
    return ZVec();
  }
  ZMat v = z_identity(n);
  auto add_col = [&](size_t i, size_t j, long long f) {
    if (!f) return;
    for (size_t r = 0; r < m; ++r) a[r][i] += f * a[r][j];
    for (size_t r = 0; r < n; ++r) v[r][i] += f * v[r][j];
  };
  auto swap_col = [&](size_t i, size_t j) {
    if (i == j) return;
    for (size_t r = 0; r < m; ++r) std::swap(a[r][i], a[r][j]);
    for (size_t r = 0; r < n; ++r) std::swap(v[r][i], v[r][j]);
  };
  auto neg_col = [&](size_t i) {
    for (size_t r = 0; r < m; ++r) a[r][i] = -a[r][i];
    for (size_t r = 0; r < n; ++r) v[r][i] = -v[r][i];
  };
  size_t pc = 0;
  std::vector<std::pair<size_t, size_t>> pivots;
  for (size_t pr = 0; pr < m && pc < n; ++pr) {
    while (true) {
      size_t sel = n;
      long long best = 0;
      for (size_t j = pc; j < n; ++j) {
        long long x = std::llabs(a[pr][j]);
        if (x && (best == 0 || x < best)) { best = x; sel = j; }
      }
      if (sel == n) break;
      swap_col(pc, sel);
      if (a[pr][pc] < 0) neg_col(pc);
      bool clean = true;
      for (size_t j = pc + 1; j < n; ++j) {
        long long q = a[pr][j] / a[pr][pc];
        add_col(j, pc, -q);
        if (a[pr][j] != 0) clean = false;
      }
      if (clean) break;
    }
    if (a[pr][pc] != 0) {
      pivots.emplace_back(pr, pc);
      ++pc;
    }
  }
  ZVec y(n, 0), resid = b;
  for (auto [r, c] : pivots) {
    if (resid[r] % a[r][c] != 0) return std::nullopt;
    long long t = resid[r] / a[r][c];
    y[c] = t;
    if (t)
      for (size_t rr = 0; rr < m; ++rr) resid[rr] -= t * a[rr][c];
  }
  for (size_t r = 0; r < m; ++r)
    if (resid[r] != 0) return std::nullopt;
  return z_mat_vec(v, y);
}

namespace {

struct RowTracked {
  ZMat a, u, uinv;

  void swap_rows(size_t i, size_t j) {
    std::swap(a[i], a[j]);
    std::swap(u[i], u[j]);
    for (auto& row : uinv) std::swap(row[i], row[j]);  // inverse: swap columns
  }
  void negate_row(size_t i) {
    for (auto& x : a[i]) x = -x;
    for (auto& x : u[i]) x = -x;
    for (auto& row : uinv) row[i] = -row[i];
  }
  // row_i += f * row_j ; inverse: col_j -= f * col_i
  void add_row(size_t i, size_t j, long long f) {
    if (f == 0) return;
    auto fma = [&](ZVec& dst, ZVec const& src) {
      for (size_t t = 0; t < dst.size(); ++t) {
        __int128 v = (__int128)dst[t] + (__int128)f * src[t];
        if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("integer overflow in normal form");
        dst[t] = (long long)v;
      }
    };
    fma(a[i], a[j]);
    fma(u[i], u[j]);
    for (auto& row : uinv) {
      __int128 v = (__int128)row[j] - (__int128)f * row[i];
      if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("integer overflow in normal form");
      row[j] = (long long)v;
    }
  }
  void swap_cols(size_t i, size_t j) {
    for (auto& row : a) std::swap(row[i], row[j]);
  }
  void negate_col(size_t i) {
    for (auto& row : a) row[i] = -row[i];
  }
  void add_col(size_t i, size_t j, long long f) {  // col_i += f * col_j
    if (f == 0) return;
    for (auto& row : a) {
      __int128 v = (__int128)row[i] + (__int128)f * row[j];
      if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("integer overflow in normal form");
      row[i] = (long long)v;
    }
  }
};

}  // namespace

SmithForm smith_form(ZMat a) {
  size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  RowTracked t{std::move(a), z_identity(rows), z_identity(rows)};
  size_t k = 0;
  while (k < rows && k < cols) {
    // locate a nonzero pivot of minimal absolute value in the trailing block
    size_t pi = rows, pj = cols;
    long long best = 0;
    for (size_t i = k; i < rows; ++i)
      for (size_t j = k; j < cols; ++j) {
        long long v = std::llabs(t.a[i][j]);
        if (v != 0 && (best == 0 || v < best)) { best = v; pi = i; pj = j; }
      }
    if (best == 0) break;
    t.swap_rows(k, pi);
    t.swap_cols(k, pj);
    if (t.a[k][k] < 0) t.negate_row(k);
    bool again = false;
    for (size_t i = k + 1; i < rows; ++i) {
      long long q = t.a[i][k] / t.a[k][k];
      t.add_row(i, k, -q);
      if (t.a[i][k] != 0) again = true;
    }
    for (size_t j = k + 1; j < cols; ++j) {
      long long q = t.a[k][j] / t.a[k][k];
      t.add_col(j, k, -q);
      if (t.a[k][j] != 0) again = true;
    }
    if (again) continue;  // residues became new smaller pivots
    // divisibility chain: fold any non-multiple into the pivot's column
    bool fixed = true;
    for (size_t i = k + 1; i < rows && fixed; ++i)
      for (size_t j = k + 1; j < cols && fixed; ++j)
        if (t.a[i][j] % t.a[k][k] != 0) {
          t.add_row(k, i, 1);
          fixed = false;
        }
    if (!fixed) continue;
    ++k;
  }
  SmithForm out;
  out.u = std::move(t.u);
  out.uinv = std::move(t.uinv);
  for (size_t i = 0; i < k; ++i) out.divisors.push_back(t.a[i][i]);
  return out;
}

ZMat hnf_rows(ZMat rows) {
  size_t r = rows.size(), c = r ? rows[0].size() : 0;
  size_t pr = 0;
  std::vector<size_t> pivots;
  for (size_t pc = 0; pc < c && pr < r; ++pc) {
    // reduce column pc below pr by gcd steps
    while (true) {
      size_t sel = r;
      long long best = 0;
      for (size_t i = pr; i < r; ++i) {
        long long v = std::llabs(rows[i][pc]);
        if (v != 0 && (best == 0 || v < best)) { best = v; sel = i; }
      }
      if (sel == r) break;
      std::swap(rows[pr], rows[sel]);
      if (rows[pr][pc] < 0)
        for (auto& x : rows[pr]) x = -x;
      bool clean = true;
      for (size_t i = pr + 1; i < r; ++i) {
        long long q = rows[i][pc] / rows[pr][pc];
        if (q)
          for (size_t j = 0; j < c; ++j) rows[i][j] -= q * rows[pr][j];
        if (rows[i][pc] != 0) clean = false;
      }
      if (clean) break;
    }
    if (rows[pr][pc] == 0) continue;
    pivots.push_back(pc);
    ++pr;
  }
  rows.resize(pr);
  // reduce entries above each pivot into [0, pivot)
  for (size_t i = pr; i-- > 0;) {
    size_t pc = pivots[i];
    for (size_t j = 0; j < i; ++j) {
      long long q = rows[j][pc] / rows[i][pc];
      if (rows[j][pc] % rows[i][pc] < 0) --q;
      if (q)
        for (size_t t2 = 0; t2 < c; ++t2) rows[j][t2] -= q * rows[i][t2];
    }
  }
  return rows;
}

namespace {

long long mod_reduce(long long x, long long d) {
  long long r = x % d;
  return r < 0 ? r + d : r;
}

long long mod_inverse(long long a, long long d) {
  long long t = 0, nt = 1, r = d, nr = mod_reduce(a, d);
  while (nr != 0) {
    long long q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  if (r != 1) throw std::domain_error("not invertible mod d");
  return mod_reduce(t, d);
}

}  // namespace

LatticeQuotient::LatticeQuotient(size_t ambient_rank, ZMat const& relation_columns)
    : rank_(ambient_rank) {
  // assemble the relation matrix (ambient_rank x #generators)
  ZMat rel(ambient_rank, ZVec(relation_columns.size(), 0));
  for (size_t g = 0; g < relation_columns.size(); ++g) {
    if (relation_columns[g].size() != ambient_rank)
      throw std::invalid_argument("relation generator has wrong length");
    for (size_t i = 0; i < ambient_rank; ++i) rel[i][g] = relation_columns[g][i];
  }
  if (relation_columns.empty()) rel.assign(ambient_rank, ZVec());
  SmithForm sf = smith_form(rel);
  uinv_ = sf.uinv;
  size_t k = sf.divisors.size();
  for (size_t i = 0; i < k; ++i) {
    if (sf.divisors[i] == 1) continue;  // trivial factor
    torsion_divisors_.push_back(sf.divisors[i]);
    torsion_rows_.push_back(sf.u[i]);
    torsion_slots_.push_back(i);
  }
  std::vector<size_t> free_slots;
  ZMat free_rows;
  for (size_t i = k; i < ambient_rank; ++i) {
    free_rows.push_back(sf.u[i]);
    free_slots.push_back(i);
  }
  free_slots_ = free_slots;
  // Normalize torsion functionals: scale each by a unit so the first
  // coordinate pairing coprime to d reports 1. Keeps residues presentation
  // independent for cyclic quotients like Z^n -> Z/n.
  torsion_scale_.assign(torsion_divisors_.size(), 1);
  torsion_row_unscale_.assign(torsion_divisors_.size(), 1);
  for (size_t i = 0; i < torsion_rows_.size(); ++i) {
    long long d = torsion_divisors_[i];
    for (size_t j = 0; j < rank_; ++j) {
      long long v = mod_reduce(torsion_rows_[i][j], d);
      if (v != 0 && std::gcd(v, d) == 1) {
        long long s = mod_inverse(v, d);
        torsion_scale_[i] = s;
        torsion_row_unscale_[i] = mod_inverse(s, d);
        break;
      }
    }
  }
  // Normalize free functionals to a Hermite basis of their row space, and
  // keep the transform inverse so sections can undo it.
  if (!free_rows.empty()) {
    // track transform: run HNF on [free_rows | I]
    size_t fr = free_rows.size();
    ZMat aug = free_rows;
    for (size_t i = 0; i < fr; ++i) {
      for (size_t j = 0; j < fr; ++j) aug[i].push_back(i == j ? 1 : 0);
    }
    ZMat h = hnf_rows(aug);
    if (h.size() != fr) throw std::logic_error("free functionals not independent");
    ZMat tmat(fr, ZVec(fr, 0));
    free_rows_.assign(fr, ZVec(rank_, 0));
    for (size_t i = 0; i < fr; ++i) {
      for (size_t j = 0; j < rank_; ++j) free_rows_[i][j] = h[i][j];
      for (size_t j = 0; j < fr; ++j) tmat[i][j] = h[i][rank_ + j];
    }
    QMat tq = q_inverse(q_from_z(tmat));
    free_tinv_.assign(fr, ZVec(fr, 0));
    for (size_t i = 0; i < fr; ++i)
      for (size_t j = 0; j < fr; ++j) free_tinv_[i][j] = tq[i][j].as_integer();
  }
}

LatticeQuotient::Elem LatticeQuotient::project(ZVec const& x) const {
  if (x.size() != rank_) throw std::invalid_argument("ambient vector has wrong length");
  Elem e;
  e.torsion.resize(torsion_divisors_.size());
  for (size_t i = 0; i < torsion_rows_.size(); ++i) {
    __int128 s = 0;
    for (size_t j = 0; j < rank_; ++j) s += (__int128)torsion_rows_[i][j] * x[j];
    long long d = torsion_divisors_[i];
    long long base = (long long)(((s % d) + d) % d);
    e.torsion[i] = mod_reduce(base * torsion_scale_[i], d);
  }
  e.free_part.resize(free_rows_.size());
  for (size_t i = 0; i < free_rows_.size(); ++i) {
    __int128 s = 0;
    for (size_t j = 0; j < rank_; ++j) s += (__int128)free_rows_[i][j] * x[j];
    if (s > INT64_MAX || s < INT64_MIN) throw std::overflow_error("integer overflow");
    e.free_part[i] = (long long)s;
  }
  return e;
}

QVec LatticeQuotient::project_q(QVec const& v) const {
  if (v.size() != rank_) throw std::invalid_argument("ambient vector has wrong length");
  QVec out(free_rows_.size());
  for (size_t i = 0; i < free_rows_.size(); ++i) {
    Rat s;
    for (size_t j = 0; j < rank_; ++j) s += Rat(free_rows_[i][j]) * v[j];
    out[i] = s;
  }
  return out;
}

ZVec LatticeQuotient::section(Elem const& e) const {
  if (e.torsion.size() != torsion_divisors_.size() || e.free_part.size() != free_rows_.size())
    throw std::invalid_argument("quotient element has wrong shape");
  ZVec y(rank_, 0);
  for (size_t i = 0; i < torsion_slots_.size(); ++i) {
    long long d = torsion_divisors_[i];
    y[torsion_slots_[i]] = mod_reduce(e.torsion[i] * torsion_row_unscale_[i], d);
  }
  if (!free_slots_.empty()) {
    ZVec z = z_mat_vec(free_tinv_, e.free_part);
    for (size_t i = 0; i < free_slots_.size(); ++i) y[free_slots_[i]] = z[i];
  }
  return z_mat_vec(uinv_, y);
}

LatticeQuotient::Elem LatticeQuotient::zero() const {
  return Elem{ZVec(torsion_divisors_.size(), 0), ZVec(free_rows_.size(), 0)};
}

LatticeQuotient::Elem LatticeQuotient::add(Elem const& a, Elem const& b) const {
  Elem e = zero();
  for (size_t i = 0; i < e.torsion.size(); ++i)
    e.torsion[i] = mod_reduce(a.torsion[i] + b.torsion[i], torsion_divisors_[i]);
  for (size_t i = 0; i < e.free_part.size(); ++i)
    e.free_part[i] = a.free_part[i] + b.free_part[i];
  return e;
}

LatticeQuotient::Elem LatticeQuotient::sub(Elem const& a, Elem const& b) const {
  Elem e = zero();
  for (size_t i = 0; i < e.torsion.size(); ++i)
    e.torsion[i] = mod_reduce(a.torsion[i] - b.torsion[i], torsion_divisors_[i]);
  for (size_t i = 0; i < e.free_part.size(); ++i)
    e.free_part[i] = a.free_part[i] - b.free_part[i];
  return e;
}

std::string LatticeQuotient::describe() const {
  std::string s;
  if (free_rank()) s = "Z^" + std::to_string(free_rank());
  for (auto d : torsion_divisors_) {
    if (!s.empty()) s += " + ";
    s += "Z/" + std::to_string(d);
  }
  if (s.empty()) s = "0";
  return s;
}

std::string LatticeQuotient::format(Elem const& e) const {
  std::string s = "[";
  bool first = true;
  for (size_t i = 0; i < e.torsion.size(); ++i) {
    if (!first) s += ",";
    s += std::to_string(e.torsion[i]) + " mod " + std::to_string(torsion_divisors_[i]);
    first = false;
  }
  for (auto v : e.free_part) {
    if (!first) s += ",";
    s += std::to_string(v);
    first = false;
  }
  return s + "]";
}

std::optional<QVec> solve_in_span(QMat const& generator_columns, QVec const& target) {
  // generator_columns: list of columns; build matrix and solve
  size_t s = generator_columns.size();
  size_t r = target.size();
  QMat a(r, QVec(s));
  for (size_t j = 0; j < s; ++j) {
    if (generator_columns[j].size() != r) throw std::invalid_argument("generator length mismatch");
    for (size_t i = 0; i < r; ++i) a[i][j] = generator_columns[j][i];
  }
  return q_solve(std::move(a), target);
}

bool in_convex_hull(QVec const& p, std::vector<QVec> const& points) {
  if (points.empty()) return false;
  size_t r = p.size();
  size_t m = points.size();
  // Feasibility of { lambda >= 0, sum lambda = 1, Q lambda = p } by phase-1
  // simplex with Bland's rule.
  size_t rows = r + 1;
  // constraints: for i < r: sum_j q_ji l_j = p_i ; last: sum l_j = 1
  // tableau: rows x (m + rows + 1); artificial basis = columns m..m+rows-1
  std::vector<QVec> tab(rows, QVec(m + rows + 1));
  for (size_t i = 0; i < r; ++i) {
    for (size_t j = 0; j < m; ++j) tab[i][j] = points[j][i];
    tab[i][m + rows] = p[i];
  }
  for (size_t j = 0; j < m; ++j) tab[r][j] = Rat(1);
  tab[r][m + rows] = Rat(1);
  for (size_t i = 0; i < rows; ++i) {
    if (tab[i][m + rows] < Rat(0))
      for (auto& x : tab[i]) x = -x;
    tab[i][m + i] = Rat(1);
  }
  std::vector<size_t> basis(rows);
  for (size_t i = 0; i < rows; ++i) basis[i] = m + i;
  // objective: minimize sum of artificials -> row of reduced costs
  QVec obj(m + rows + 1);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j <= m + rows; ++j) obj[j] -= tab[i][j];
  for (size_t i = 0; i < rows; ++i) obj[m + i] = Rat(0);

  while (true) {
    size_t enter = m + rows;
    for (size_t j = 0; j < m + rows; ++j)
      if (obj[j] < Rat(0)) { enter = j; break; }  // Bland: first negative
    if (enter == m + rows) break;
    size_t leave = rows;
    Rat best;
    for (size_t i = 0; i < rows; ++i) {
      if (!(tab[i][enter] > Rat(0))) continue;
      Rat ratio = tab[i][m + rows] / tab[i][enter];
      if (leave == rows || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave == rows) break;  // unbounded; cannot happen for feasibility form
    Rat piv = tab[leave][enter];
    for (auto& x : tab[leave]) x /= piv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == leave || tab[i][enter].is_zero()) continue;
      Rat f = tab[i][enter];
      for (size_t j = 0; j <= m + rows; ++j) tab[i][j] -= f * tab[leave][j];
    }
    Rat f = obj[enter];
    if (!f.is_zero())
      for (size_t j = 0; j <= m + rows; ++j) obj[j] -= f * tab[leave][j];
    basis[leave] = enter;
  }
  // feasible iff all artificial variables are zero valued
  Rat total;
  for (size_t i = 0; i < rows; ++i)
    if (basis[i] >= m) total += tab[i][m + rows];
  return total.is_zero();
}

}  // namespace bgmu

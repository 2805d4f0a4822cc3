#include "bgmu/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace bgmu::iso {

Laurent lau_zero() { return {}; }

Laurent lau_normalize(LaurentContext const& ctx, Laurent p) {
  size_t first = 0;
  while (first < p.c.size() && ctx.field.is_zero(p.c[first])) ++first;
  size_t last = p.c.size();
  while (last > first && ctx.field.is_zero(p.c[last - 1])) --last;
  if (first == last) return {};
  if (first > 0 || last < p.c.size()) {
    std::vector<GFElem> out(p.c.begin() + first, p.c.begin() + last);
    p.c = std::move(out);
    p.lo += (long long)first;
  }
  if (p.c.size() > ctx.support_ceiling)
    throw std::runtime_error("Laurent support ceiling exceeded (" +
                             std::to_string(p.c.size()) + " > " +
                             std::to_string(ctx.support_ceiling) + ")");
  return p;
}

Laurent lau_const(LaurentContext const& ctx, GFElem a) {
  Laurent p;
  p.lo = 0;
  p.c = {a};
  return lau_normalize(ctx, std::move(p));
}

Laurent lau_monomial(LaurentContext const& ctx, GFElem a, long long exp) {
  Laurent p;
  p.lo = exp;
  p.c = {a};
  return lau_normalize(ctx, std::move(p));
}

Laurent lau_add(LaurentContext const& ctx, Laurent const& a, Laurent const& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  long long lo = std::min(a.lo, b.lo);
  long long hi = std::max(a.hi(), b.hi());
  Laurent r;
  r.lo = lo;
  r.c.assign((size_t)(hi - lo + 1), GFElem{});
  for (size_t i = 0; i < a.c.size(); ++i) r.c[(size_t)(a.lo - lo) + i] = a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) {
    size_t k = (size_t)(b.lo - lo) + i;
    r.c[k] = ctx.field.add(r.c[k], b.c[i]);
  }
  return lau_normalize(ctx, std::move(r));
}

Laurent lau_neg(LaurentContext const& ctx, Laurent const& a) {
  Laurent r = a;
  for (auto& x : r.c) x = ctx.field.neg(x);
  return r;
}

Laurent lau_sub(LaurentContext const& ctx, Laurent const& a, Laurent const& b) {
  return lau_add(ctx, a, lau_neg(ctx, b));
}

Laurent lau_mul(LaurentContext const& ctx, Laurent const& a, Laurent const& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Laurent r;
  r.lo = a.lo + b.lo;
  r.c.assign(a.c.size() + b.c.size() - 1, GFElem{});
  if (r.c.size() > ctx.support_ceiling)
    throw std::runtime_error("Laurent support ceiling exceeded in product");
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (ctx.field.is_zero(a.c[i])) continue;
    for (size_t j = 0; j < b.c.size(); ++j) {
      if (ctx.field.is_zero(b.c[j])) continue;
      r.c[i + j] = ctx.field.add(r.c[i + j], ctx.field.mul(a.c[i], b.c[j]));
    }
  }
  return lau_normalize(ctx, std::move(r));
}

Laurent lau_shift(Laurent a, long long exp) {
  if (!a.is_zero()) a.lo += exp;
  return a;
}

Laurent lau_frobenius(LaurentContext const& ctx, Laurent const& a) {
  Laurent r = a;
  for (auto& x : r.c) x = ctx.field.frobenius(x);
  return r;
}

bool lau_eq(Laurent const& a, Laurent const& b) {
  if (a.is_zero() && b.is_zero()) return true;
  return a.lo == b.lo && a.c == b.c;
}

std::string lau_format(LaurentContext const& ctx, Laurent const& a) {
  if (a.is_zero()) return "0";
  std::string s;
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (ctx.field.is_zero(a.c[i])) continue;
    if (!s.empty()) s += " + ";
    s += ctx.field.format(a.c[i]) + "*e^" + std::to_string(a.lo + (long long)i);
  }
  return s;
}

LaurentMatrix lm_identity(ContextPtr const& ctx, size_t n) {
  LaurentMatrix m{ctx, n, std::vector<Laurent>(n * n)};
  for (size_t i = 0; i < n; ++i) m.at(i, i) = lau_const(*ctx, ctx->field.one());
  return m;
}

LaurentMatrix lm_mul(LaurentMatrix const& a, LaurentMatrix const& b) {
  if (a.n != b.n) throw std::invalid_argument("matrix size mismatch");
  LaurentMatrix r{a.ctx, a.n, std::vector<Laurent>(a.n * a.n)};
  for (size_t i = 0; i < a.n; ++i)
    for (size_t j = 0; j < a.n; ++j) {
      Laurent s;
      for (size_t k = 0; k < a.n; ++k)
        s = lau_add(*a.ctx, s, lau_mul(*a.ctx, a.at(i, k), b.at(k, j)));
      r.at(i, j) = s;
    }
  return r;
}

LaurentMatrix lm_frobenius(LaurentMatrix const& a, uint32_t times) {
  LaurentMatrix r = a;
  for (uint32_t t = 0; t < times; ++t)
    for (auto& x : r.e) x = lau_frobenius(*a.ctx, x);
  return r;
}

bool lm_eq(LaurentMatrix const& a, LaurentMatrix const& b) {
  if (a.n != b.n) return false;
  for (size_t i = 0; i < a.e.size(); ++i)
    if (!lau_eq(a.e[i], b.e[i])) return false;
  return true;
}

namespace {

// Determinant of the submatrix on the given rows (ascending) and any column
// subset, by subset dynamic programming over columns.
Laurent det_on_rows(LaurentMatrix const& a, std::vector<size_t> const& rows, size_t col_mask) {
  LaurentContext const& ctx = *a.ctx;
  size_t k = rows.size();
  std::vector<size_t> cols;
  for (size_t j = 0; j < a.n; ++j)
    if ((col_mask >> j) & 1) cols.push_back(j);
  if (cols.size() != k) throw std::invalid_argument("minor is not square");
  // dp over subsets of the chosen columns
  std::vector<Laurent> dp((size_t)1 << k);
  dp[0] = lau_const(ctx, ctx.field.one());
  for (size_t mask = 1; mask < dp.size(); ++mask) {
    size_t row = rows[(size_t)__builtin_popcountll(mask) - 1];
    Laurent s;
    size_t sign_toggle = 0;
    for (size_t t = 0; t < k; ++t) {
      if (!((mask >> t) & 1)) continue;
      Laurent const& entry = a.at(row, cols[t]);
      if (!entry.is_zero()) {
        Laurent term = lau_mul(ctx, entry, dp[mask ^ ((size_t)1 << t)]);
        s = (sign_toggle & 1) ? lau_sub(ctx, s, term) : lau_add(ctx, s, term);
      }
      ++sign_toggle;
    }
    dp[mask] = s;
  }
  return dp.back();
}

}  // namespace

Laurent lm_det(LaurentMatrix const& a) {
  if (a.n > 16) throw std::invalid_argument("matrix too large for subset expansion");
  std::vector<size_t> rows(a.n);
  for (size_t i = 0; i < a.n; ++i) rows[i] = i;
  return det_on_rows(a, rows, ((size_t)1 << a.n) - 1);
}

std::vector<Laurent> lm_charpoly(LaurentMatrix const& a) {
  LaurentContext const& ctx = *a.ctx;
  size_t n = a.n;
  // dp over column subsets with entries that are polynomials in x
  using XPoly = std::vector<Laurent>;  // x-degree i at index i
  auto xp_add = [&](XPoly const& p, XPoly const& q, bool negate_q) {
    XPoly r(std::max(p.size(), q.size()));
    for (size_t i = 0; i < r.size(); ++i) {
      Laurent x = i < p.size() ? p[i] : Laurent{};
      Laurent y = i < q.size() ? q[i] : Laurent{};
      r[i] = negate_q ? lau_sub(ctx, x, y) : lau_add(ctx, x, y);
    }
    return r;
  };
  std::vector<XPoly> dp((size_t)1 << n);
  dp[0] = {lau_const(ctx, ctx.field.one())};
  for (size_t mask = 1; mask < dp.size(); ++mask) {
    size_t row = (size_t)__builtin_popcountll(mask) - 1;
    XPoly s;
    size_t sign_toggle = 0;
    for (size_t j = 0; j < n; ++j) {
      if (!((mask >> j) & 1)) continue;
      XPoly const& sub = dp[mask ^ ((size_t)1 << j)];
      // entry of x*I - A at (row, j)
      Laurent diag_neg = lau_neg(ctx, a.at(row, j));
      XPoly term(sub.size() + 1);
      for (size_t i = 0; i < sub.size(); ++i) {
        term[i] = lau_add(ctx, term[i], lau_mul(ctx, diag_neg, sub[i]));
        if (row == j) term[i + 1] = lau_add(ctx, term[i + 1], sub[i]);
      }
      s = xp_add(s, term, sign_toggle & 1);
      ++sign_toggle;
    }
    dp[mask] = std::move(s);
  }
  XPoly out = std::move(dp.back());
  out.resize(n + 1);
  return out;
}

ZVec cartan_invariant(LaurentMatrix const& a) {
  size_t n = a.n;
  if (n == 0) return {};
  // shift into the power series ring
  long long min_val = kValInfinity;
  for (auto const& x : a.e) min_val = std::min(min_val, x.val());
  if (min_val == kValInfinity) throw std::domain_error("singular matrix (zero)");
  long long shift = min_val < 0 ? -min_val : 0;
  LaurentMatrix b = a;
  if (shift)
    for (auto& x : b.e) x = lau_shift(std::move(x), shift);

  // v_k = min valuation over all k x k minors; elementary divisors are the
  // successive differences (determinantal divisor theorem over a DVR).
  std::vector<long long> v(n + 1, 0);
  for (size_t k = 1; k <= n; ++k) {
    long long best = kValInfinity;
    std::vector<size_t> rows(k);
    for (size_t i = 0; i < k; ++i) rows[i] = i;
    bool more = true;
    while (more) {
      size_t mask = ((size_t)1 << k) - 1;
      size_t limit = (size_t)1 << n;
      while (mask < limit) {
        Laurent d = det_on_rows(b, rows, mask);
        best = std::min(best, d.val());
        size_t c = mask & (~mask + 1), r = mask + c;  // Gosper: next same-popcount mask
        mask = (((r ^ mask) >> 2) / c) | r;
      }
      more = false;
      for (size_t i = k; i-- > 0;) {
        if (rows[i] + 1 <= i + n - k) {
          ++rows[i];
          for (size_t j = i + 1; j < k; ++j) rows[j] = rows[j - 1] + 1;
          more = true;
          break;
        }
      }
    }
    if (best == kValInfinity) throw std::domain_error("singular matrix (vanishing minors)");
    v[k] = best;
  }
  ZVec divisors(n);
  for (size_t k = 1; k <= n; ++k) divisors[k - 1] = v[k] - v[k - 1];
  // successive minima are increasing; the Cartan invariant is the reverse
  std::sort(divisors.begin(), divisors.end(), std::greater<>());
  for (auto& x : divisors) x -= shift;
  return divisors;
}

long long kappa_valuation(LaurentMatrix const& a) {
  Laurent d = lm_det(a);
  if (d.is_zero()) throw std::domain_error("singular matrix");
  return d.val();
}

QVec newton_slopes_of_charpoly(std::vector<Laurent> const& coeffs) {
  size_t n = coeffs.size() - 1;
  if (coeffs[n].is_zero() || coeffs[0].is_zero())
    throw std::domain_error("polynomial must have nonzero constant and leading coefficients");
  // lower convex hull of (k, val c_k)
  std::vector<std::pair<long long, long long>> pts;
  for (size_t k = 0; k <= n; ++k)
    if (!coeffs[k].is_zero()) pts.emplace_back((long long)k, coeffs[k].val());
  std::vector<std::pair<long long, long long>> hull;
  for (auto const& p : pts) {
    while (hull.size() >= 2) {
      auto const& a = hull[hull.size() - 2];
      auto const& b = hull[hull.size() - 1];
      // drop b when it lies on or above segment a-p
      __int128 lhs = (__int128)(b.second - a.second) * (p.first - a.first);
      __int128 rhs = (__int128)(p.second - a.second) * (b.first - a.first);
      if (lhs >= rhs)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(p);
  }
  QVec out;
  for (size_t s = 0; s + 1 < hull.size(); ++s) {
    long long w = hull[s + 1].first - hull[s].first;
    Rat slope{hull[s + 1].second - hull[s].second, w};
    for (long long t = 0; t < w; ++t) out.push_back(-slope);  // root valuations
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace bgmu::iso

#pragma once

// Exact Laurent-polynomial arithmetic over F_{q^m} and the matrix layer on
// top of it: determinants and characteristic polynomials by division-free
// expansion, elementary divisor valuations via determinantal divisors, and
// the valuation Newton polygon.

#include <limits>
#include <memory>

#include "bgmu/gf.hpp"
#include "bgmu/rational.hpp"

namespace bgmu::iso {

constexpr long long kValInfinity = std::numeric_limits<long long>::max();

struct LaurentContext {
  FiniteFieldTower field;
  size_t support_ceiling = 8192;

  LaurentContext(uint32_t q, uint32_t m, std::vector<uint32_t> modulus = {},
                 size_t ceiling = 8192)
      : field(q, m, std::move(modulus)), support_ceiling(ceiling) {}
};

using ContextPtr = std::shared_ptr<const LaurentContext>;

/// Finite-support series: coefficient of eps^(lo + i) is c[i]. Canonical form
/// has nonzero first and last coefficients; zero is the empty vector.
struct Laurent {
  long long lo = 0;
  std::vector<GFElem> c;

  bool is_zero() const { return c.empty(); }
  long long val() const { return c.empty() ? kValInfinity : lo; }
  long long hi() const { return lo + (long long)c.size() - 1; }
};

Laurent lau_zero();
Laurent lau_const(LaurentContext const& ctx, GFElem a);
Laurent lau_monomial(LaurentContext const& ctx, GFElem a, long long exp);
Laurent lau_normalize(LaurentContext const& ctx, Laurent p);
Laurent lau_add(LaurentContext const& ctx, Laurent const& a, Laurent const& b);
Laurent lau_sub(LaurentContext const& ctx, Laurent const& a, Laurent const& b);
Laurent lau_neg(LaurentContext const& ctx, Laurent const& a);
Laurent lau_mul(LaurentContext const& ctx, Laurent const& a, Laurent const& b);
Laurent lau_shift(Laurent a, long long exp);     // multiply by eps^exp
Laurent lau_frobenius(LaurentContext const& ctx, Laurent const& a);  // coefficientwise
bool lau_eq(Laurent const& a, Laurent const& b);
std::string lau_format(LaurentContext const& ctx, Laurent const& a);

struct LaurentMatrix {
  ContextPtr ctx;
  size_t n = 0;
  std::vector<Laurent> e;  // row major

  Laurent const& at(size_t i, size_t j) const { return e[i * n + j]; }
  Laurent& at(size_t i, size_t j) { return e[i * n + j]; }
};

LaurentMatrix lm_identity(ContextPtr const& ctx, size_t n);
LaurentMatrix lm_mul(LaurentMatrix const& a, LaurentMatrix const& b);
LaurentMatrix lm_frobenius(LaurentMatrix const& a, uint32_t times = 1);
bool lm_eq(LaurentMatrix const& a, LaurentMatrix const& b);

/// Division-free determinant (column-subset expansion).
Laurent lm_det(LaurentMatrix const& a);

/// Coefficients of det(x I - A), constant term first (degree n, monic).
std::vector<Laurent> lm_charpoly(LaurentMatrix const& a);

/// Valuations of the elementary divisors over the power series ring, sorted
/// decreasingly (the Cartan invariant of an invertible matrix). Throws
/// std::domain_error when the matrix is singular.
ZVec cartan_invariant(LaurentMatrix const& a);

/// eps-valuation of the determinant.
long long kappa_valuation(LaurentMatrix const& a);

/// Root valuations of a polynomial over F((eps)) read off the lower convex
/// hull of (degree, valuation); returned sorted decreasingly with
/// multiplicity. coeffs are constant-first; the polynomial must have nonzero
/// leading and constant coefficients.
QVec newton_slopes_of_charpoly(std::vector<Laurent> const& coeffs);

}  // namespace bgmu::iso

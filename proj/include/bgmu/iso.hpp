#pragma once

// Matrix-level oracle over F_q((eps)): Newton and Kottwitz points of explicit
// elements, Cartan invariants, randomized double-coset sampling for the slope
// inequality, and constructive monomial representatives.

#include <optional>

#include "bgmu/laurent.hpp"
#include "bgmu/rng.hpp"

namespace bgmu::iso {

/// Permutation-times-diagonal element: e_i -> eps^(a_i) e_{w(i)}.
struct MonomialElement {
  std::vector<size_t> w;  // image of each index
  ZVec a;                 // eps exponents
};

LaurentMatrix monomial_matrix(ContextPtr const& ctx, MonomialElement const& m);

/// Sorted cycle averages: the Newton point of a monomial element.
QVec monomial_newton_point(MonomialElement const& m);

/// The shift element: e_i -> e_{i+1}, e_n -> eps * e_1.
MonomialElement shift_element(size_t n);

struct NewtonVerification {
  bool ran = false;
  bool agreed = false;
  long long power_used = 0;  // sigma-power at which the Cartan limit matched
};

struct NewtonResult {
  QVec slopes;  // dominant
  NewtonVerification verification;
};

/// Slopes of the isocrystal (L^n, M sigma): valuation Newton polygon of the
/// characteristic polynomial of the sigma-norm M sigma(M)...sigma^{m-1}(M),
/// divided by m. With verify set, also runs the independent Cartan-limit
/// method cartan(N_k)/k over k = m, 2m, ... until it reproduces the slopes;
/// failure to stabilize within max_power throws std::runtime_error.
NewtonResult newton_point_gl(LaurentMatrix const& mat, bool verify = false,
                             long long max_power = 512);

/// eps-valuation of the determinant.
long long kappa_gl(LaurentMatrix const& mat);

/// Random polynomial matrix with entries of degree <= degree_bound and unit
/// determinant valuation (an element of GL_n over the power series ring).
LaurentMatrix random_unit_matrix(ContextPtr const& ctx, size_t n, long long degree_bound,
                                 Rng& rng, int budget = 512);

/// k1 * mu(eps) * k2 with random unit k_i; lies in the double coset of mu.
LaurentMatrix random_in_double_coset(ContextPtr const& ctx, size_t n, ZVec const& mu,
                                     uint64_t seed, uint64_t index, long long degree_bound);

/// Product of random elementary matrices (unit triangular factors); its
/// exact inverse is returned alongside, so sigma-conjugation stays within
/// finite-support arithmetic.
std::pair<LaurentMatrix, LaurentMatrix> random_elementary_product(ContextPtr const& ctx, size_t n,
                                                                  long long degree_bound,
                                                                  size_t factors, Rng& rng);

struct MazurReport {
  size_t samples = 0;
  uint64_t seed = 0;
  ZVec mu;
  size_t violations = 0;                 // slope inequality or kappa failures
  std::vector<std::pair<QVec, size_t>> observed;  // Newton point -> hits
  std::vector<std::string> violation_details;
};

/// Draws `samples` random elements of the double coset of mu and verifies
/// nu <= mu (polygon dominance) and kappa = sum(mu) on each; counts the
/// Newton points observed. Any violation is recorded and counted.
MazurReport mazur_experiment(ContextPtr const& ctx, size_t n, ZVec const& mu, size_t samples,
                             uint64_t seed, long long degree_bound, unsigned workers = 1);

/// Monomial representative for minuscule mu (entries in {0,1}): one cycle of
/// length q per isoclinic block of slope p/q, carrying p ones. Verified
/// against the matrix oracle before returning.
MonomialElement kr_realize_minuscule(ContextPtr const& ctx, size_t n, ZVec const& mu,
                                     QVec const& nu);

struct KrSearchResult {
  std::optional<MonomialElement> monomial;   // found in the exhaustive phase
  bool randomized_hit = false;               // found by sparse perturbation
  size_t tried = 0;
  bool conclusive() const { return monomial.has_value() || randomized_hit; }
};

/// Exhaustive monomial search for a representative of nu in the double coset
/// of mu, followed by randomized sparse perturbations up to `budget` tries.
/// Not-found is an inconclusive verdict.
KrSearchResult kr_search_general(ContextPtr const& ctx, size_t n, ZVec const& mu, QVec const& nu,
                                 size_t budget, uint64_t seed);

/// All Newton points realized by monomial elements whose exponent multiset
/// equals that of mu (an independent computation of the class set below mu).
std::vector<QVec> monomial_newton_points_for_multiset(size_t n, ZVec const& mu);

}  // namespace bgmu::iso

#pragma once

// Based root data of unramified groups with a Frobenius action, and the
// lattice-theoretic objects derived from them: Weyl orbits, dominant
// representatives, the half-sum of positive roots, canonical fundamental
// weights with their Frobenius orbit sums, and Galois coinvariants of the
// fundamental group.
//
// Conventions. A datum fixes a basis of the cocharacter lattice X_*(T) once;
// cocharacters are rational coordinate vectors of length `rank`, characters
// live in the dual coordinates, and <v, w> = v^T * pairing * w. The
// Frobenius acts on X_*(T) by the integer matrix `frobenius` and on
// characters by the contragredient action; it must permute the simple
// coroots and, dually, the simple roots by the same diagram permutation.

#include <memory>
#include <optional>
#include <string>

#include "bgmu/linalg.hpp"
#include "bgmu/rational.hpp"

namespace bgmu::rootdata {

struct Pi1Group;

struct RootDatum {
  size_t rank = 0;
  ZMat simple_roots;     // one character vector per node
  ZMat simple_coroots;   // one cocharacter vector per node
  ZMat pairing;          // rank x rank; <v,w> = v^T pairing w
  ZMat frobenius;        // automorphism of X_*(T), finite order
  std::string name;
  std::string family;    // preset tag ("gl", "sl", ...) or "custom"

  // derived at validation time
  size_t nodes = 0;
  std::vector<size_t> frobenius_node_perm;  // F(coroot_i) = coroot_perm[i]
  size_t frobenius_order = 1;
  ZMat frobenius_char;                      // contragredient action
  ZMat cartan;                              // cartan[i][j] = <coroot_i, root_j>

  bool is_type_a_gl() const { return family == "gl"; }
};

using DatumPtr = std::shared_ptr<const RootDatum>;

/// Builds and validates one of the catalog data.
/// gl:n, sl:n (n>=2), pgl:n (n>=2), gsp:2g (even argument >= 2), u:n (n>=2).
DatumPtr preset(std::string const& family, long long n);

/// Validates an explicitly given datum: generalized Cartan matrix shape,
/// linear independence, finite Weyl group, Frobenius compatibility.
/// Throws std::invalid_argument with a description on failure.
DatumPtr validate(RootDatum d);

// --- pairings and Weyl combinatorics ------------------------------------

Rat pairing(RootDatum const& d, QVec const& coweight, QVec const& weight);

/// <v, root_i> for node i.
Rat root_pairing(RootDatum const& d, QVec const& v, size_t i);

bool is_dominant(RootDatum const& d, QVec const& v);
bool is_frobenius_invariant(RootDatum const& d, QVec const& v);

QVec apply_frobenius(RootDatum const& d, QVec const& v);
QVec reflect(RootDatum const& d, size_t i, QVec const& v);

/// The unique dominant element of the Weyl orbit of v.
QVec dominant_rep(RootDatum const& d, QVec const& v);

/// Full Weyl orbit of v (bounded enumeration; throws when it exceeds `cap`).
std::vector<QVec> weyl_orbit(RootDatum const& d, QVec const& v, size_t cap = 200000);

/// All positive roots (closure of the simple roots under reflections).
std::vector<QVec> positive_roots(RootDatum const& d);

/// Half-sum of the positive roots, as a rational character vector.
QVec rho(RootDatum const& d);

// --- fundamental weights --------------------------------------------------

/// Canonical fundamental weight for each node: the solution of
/// <coroot_j, w> = delta_ij chosen integral whenever an integral solution
/// exists (translates by the central character lattice are scored by
/// negative-entry count, then coordinate mass, then lexicographic order),
/// otherwise the unique lift inside the span of the simple roots.
std::vector<QVec> fundamental_weights(RootDatum const& d);

/// Z-basis of the central character lattice {w : <coroot_i, w> = 0}.
ZMat central_character_lattice(RootDatum const& d);

/// Orbit sums of fundamental weights under the Frobenius: one vector per
/// node orbit (sum of the canonical weights in the orbit), followed by one
/// vector per Frobenius orbit of central basis characters (sum over the
/// orbit; may be zero when the orbit cancels).
std::vector<QVec> fundamental_weight_orbit_sums(RootDatum const& d);

/// True when every orbit sum pairs integrally with the whole cocharacter
/// lattice; the floor-sum chain length formula is only asserted there.
bool floor_formula_domain_ok(RootDatum const& d);

// --- fundamental group ----------------------------------------------------

struct Pi1Element {
  LatticeQuotient::Elem e;
  friend bool operator==(Pi1Element const&, Pi1Element const&) = default;
  friend bool operator<(Pi1Element const& a, Pi1Element const& b) { return a.e < b.e; }
};

/// Galois coinvariants of the Borovoi fundamental group:
/// X_*(T) / (coroot lattice + (F - 1) X_*(T)).
struct Pi1Group {
  LatticeQuotient quotient;

  Pi1Element project(ZVec const& x) const { return {quotient.project(x)}; }
  QVec project_q(QVec const& v) const { return quotient.project_q(v); }
  Pi1Element add(Pi1Element const& a, Pi1Element const& b) const {
    return {quotient.add(a.e, b.e)};
  }
  Pi1Element sub(Pi1Element const& a, Pi1Element const& b) const {
    return {quotient.sub(a.e, b.e)};
  }
  std::string describe() const { return quotient.describe(); }
  std::string format(Pi1Element const& x) const { return quotient.format(x.e); }
};

Pi1Group pi1_coinvariants(RootDatum const& d);

/// Image of an integral cocharacter in pi1 coinvariants.
Pi1Element kappa_of_cochar(RootDatum const& d, Pi1Group const& pi1, QVec const& mu);

}  // namespace bgmu::rootdata

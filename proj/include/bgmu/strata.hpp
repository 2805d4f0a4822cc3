#pragma once

// The combinatorial skeleton of a Newton stratification: enumeration of the
// classes below a dominant cocharacter, the ranked partial order with its
// cover relations, chain lengths, defects, and the dimension bookkeeping for
// the strata. The enumerated poset is the ground truth; the closed formulas
// are evaluated against it, never trusted.

#include <map>
#include <optional>

#include "bgmu/root_datum.hpp"

namespace bgmu::strata {

using rootdata::DatumPtr;
using rootdata::Pi1Element;
using rootdata::Pi1Group;
using rootdata::RootDatum;

/// Dominant, Frobenius-invariant rational cocharacter.
struct NewtonPoint {
  QVec v;
  friend bool operator==(NewtonPoint const&, NewtonPoint const&) = default;
  friend bool operator<(NewtonPoint const& a, NewtonPoint const& b) { return a.v < b.v; }
};

NewtonPoint make_newton_point(RootDatum const& d, QVec v);

struct SigmaConjClass {
  NewtonPoint nu;
  Pi1Element kappa;
};

/// a <= b in the dominance order: b - a is a nonnegative rational combination
/// of the simple coroots (which also forces equal pairing with every central
/// character). Both points must be dominant for the same datum.
bool newton_leq(RootDatum const& d, NewtonPoint const& a, NewtonPoint const& b);

/// Same verdict by the convex-hull characterization: hull(W.b) contains
/// hull(W.a). Independent of newton_leq; needs a small Weyl orbit.
bool newton_leq_convex_oracle(RootDatum const& d, NewtonPoint const& a, NewtonPoint const& b);

struct StrataPoset {
  DatumPtr datum;
  QVec mu;                       // integral dominant Frobenius-invariant
  Pi1Group pi1;
  Pi1Element kappa_mu;
  std::vector<SigmaConjClass> classes;   // sorted, top first
  std::vector<std::vector<bool>> leq;    // leq[i][j]: class i <= class j
  std::vector<std::pair<size_t, size_t>> covers;  // (smaller, larger) indices
  std::vector<size_t> rank_of;           // chain length from the bottom
  size_t top = 0, bottom = 0;

  size_t index_of(NewtonPoint const& nu) const;           // throws if absent
  std::optional<size_t> find(NewtonPoint const& nu) const;
};

/// Enumerates the classes (nu, kappa(mu)) with nu in the Newton lattice and
/// nu below mu, via the standard-Levi parametrization: for every
/// Frobenius-stable set J of nodes, the candidates are the projected Galois
/// averages of lattice classes modulo the J-coroots, kept when G-dominant,
/// vanishing exactly on J, matching kappa(mu) and lying below mu. Covers and
/// ranks come from the order itself.
StrataPoset enumerate_bg_mu(DatumPtr const& datum, QVec const& mu);

/// Type A ground truth: all dominant rational vectors whose polygon lies on
/// or below the polygon of mu with the same endpoint and integral
/// breakpoints. Only for the gl presets.
std::vector<NewtonPoint> gl_polygon_oracle(RootDatum const& d, QVec const& mu);

/// Common length of the maximal chains from a to b (indices into P.classes);
/// verifies that longest and shortest agree and throws std::logic_error on a
/// rank violation.
size_t length_poset(StrataPoset const& p, size_t a, size_t b);

struct LengthFormulaResult {
  long long value = 0;  // floor-sum over fundamental weight orbit sums
  bool domain_ok = true;  // orbit sums pair integrally with the whole lattice
};

/// Floor-sum chain length: sum_j floor<b, w_j> - floor<a, w_j> over the
/// fundamental weight orbit sums. Requires a <= b.
LengthFormulaResult length_formula(RootDatum const& d, NewtonPoint const& a, NewtonPoint const& b);

/// Lattice points on or below the polygon of b and strictly above the
/// polygon of a (type A view of the length).
long long integral_point_count_gl(RootDatum const& d, NewtonPoint const& a, NewtonPoint const& b);

/// Defect of the class with the given Newton point. Type A: slope-denominator
/// rule. Otherwise: 2*(length([nu, mu*]) - <rho, mu* - nu>) for auxiliary
/// integral dominant mu* above nu, checked to be independent of the choice
/// across `witnesses` candidates (at least one must exist within the search
/// box or std::domain_error is thrown).
long long defect(DatumPtr const& datum, NewtonPoint const& nu, size_t witnesses = 3);

/// Defect read off inside an already enumerated poset, using its mu as the
/// auxiliary cocharacter.
long long defect_in_poset(StrataPoset const& p, size_t idx);

/// All derived-defect values observed over the auxiliary search box (at most
/// `max_witnesses`); throws when two auxiliaries disagree.
std::vector<long long> derived_defects_over_box(DatumPtr const& datum, NewtonPoint const& nu,
                                                size_t max_witnesses);

struct StrataRecord {
  SigmaConjClass cls;
  long long defect = 0;
  long long length_to_mu = 0;
  long long dim_adlv = 0;
  long long dim_central_leaf = 0;
  long long dim_stratum = 0;
  long long codim_stratum = 0;
};

struct TableResult {
  StrataPoset poset;
  std::vector<StrataRecord> records;   // aligned with poset.classes
  Rat total_dim;                       // <2 rho, mu>
};

/// One record per class: defect, chain length to the top, the affine
/// Deligne-Lusztig dimension <rho, mu - nu> - def/2, the central leaf
/// dimension <2 rho, nu>, their sum, and the codimension (= chain length).
/// The two crosswise identities are enforced exactly.
TableResult strata_table(DatumPtr const& datum, QVec const& mu);

/// Least upper bound and greatest lower bound of a nonempty subset; their
/// existence is a theorem, so absence throws std::logic_error.
std::pair<size_t, size_t> sup_inf(StrataPoset const& p, std::vector<size_t> const& subset);

size_t mu_ordinary(StrataPoset const& p);
size_t basic(StrataPoset const& p);

/// Indices of the classes below-or-equal the given one.
std::vector<size_t> closure_downset(StrataPoset const& p, size_t idx);

// --- type A helpers shared with the isocrystal oracle ---------------------

/// Partial sums (polygon heights at integer abscissae).
QVec polygon_heights(QVec const& slopes);

/// Dominance order on gl coordinates: partial sums of a below those of b,
/// equal total.
bool gl_slopes_leq(QVec const& a, QVec const& b);

/// True when every slope block (value p/q in lowest terms, multiplicity k)
/// has q | k and the total is an integer: polygon breakpoints are integral.
bool gl_in_newton_lattice(QVec const& dominant_slopes);

/// Slope-denominator defect: sum of m(q-1) over isoclinic blocks.
long long gl_slope_defect(QVec const& dominant_slopes);

}  // namespace bgmu::strata

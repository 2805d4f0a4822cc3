#pragma once

// Small exact linear algebra: rational Gaussian elimination and the integer
// normal form machinery (Smith form with tracked row transforms) that backs
// every lattice quotient in the library.

#include <optional>

#include "bgmu/rational.hpp"

namespace bgmu {

using QMat = std::vector<QVec>;          // dense, row major
using ZMat = std::vector<ZVec>;

QMat q_identity(size_t n);
QMat q_from_z(ZMat const& m);
QVec q_mat_vec(QMat const& m, QVec const& v);
QMat q_mat_mul(QMat const& a, QMat const& b);
QMat q_transpose(QMat const& m);

// Solves A x = b exactly. Returns nullopt when inconsistent; when the system
// is underdetermined an arbitrary solution (free variables = 0) is returned.
std::optional<QVec> q_solve(QMat a, QVec b);

// Inverse of a square matrix; throws std::domain_error when singular.
QMat q_inverse(QMat const& a);

size_t q_rank(QMat a);

ZMat z_identity(size_t n);
ZVec z_mat_vec(ZMat const& m, ZVec const& v);
ZMat z_mat_mul(ZMat const& a, ZMat const& b);
bool z_is_identity(ZMat const& m);

// Solves A w = b over the integers (column echelon with tracked transform).
// Returns nullopt when no integral solution exists.
std::optional<ZVec> z_solve(ZMat a, ZVec const& b);

// Smith normal form U*A*V = D of an r x c integer matrix. Only the row
// transform is needed by callers, so V is not tracked. uinv is maintained
// with U so that uinv*U = I exactly.
struct SmithForm {
  ZMat u, uinv;                 // r x r unimodular
  std::vector<long long> divisors;  // d_1 | d_2 | ... (positive), length = rank
};
SmithForm smith_form(ZMat a);

// Finitely generated abelian group Z^r / <columns of R>, presented through
// its Smith form. Coordinates of a class are (torsion residues, free part);
// the projection functionals are unit-normalized so that reported residues
// are stable across presentations, and a section lifts coordinates back to
// Z^r.
class LatticeQuotient {
 public:
  LatticeQuotient(size_t ambient_rank, ZMat const& relation_columns);

  struct Elem {
    ZVec torsion;  // residue per torsion factor, reduced into [0, d)
    ZVec free_part;

    friend bool operator==(Elem const&, Elem const&) = default;
    friend bool operator<(Elem const& a, Elem const& b) {
      if (a.torsion != b.torsion) return a.torsion < b.torsion;
      return a.free_part < b.free_part;
    }
  };

  size_t ambient_rank() const { return rank_; }
  size_t free_rank() const { return free_rows_.size(); }
  std::vector<long long> const& torsion() const { return torsion_divisors_; }
  bool is_trivial() const { return free_rank() == 0 && torsion_divisors_.empty(); }

  Elem project(ZVec const& x) const;
  // Free coordinates of a rational vector (the image in the quotient tensored
  // with Q; torsion dies there).
  QVec project_q(QVec const& v) const;

  // Some integral preimage of the given class.
  ZVec section(Elem const& e) const;

  Elem zero() const;
  Elem add(Elem const& a, Elem const& b) const;
  Elem sub(Elem const& a, Elem const& b) const;

  std::string describe() const;          // e.g. "Z^2 + Z/3"
  std::string format(Elem const& e) const;

 private:
  size_t rank_;
  std::vector<long long> torsion_divisors_;
  ZMat torsion_rows_;                    // normalized functionals, one per factor
  ZVec torsion_row_unscale_;             // multiplier recovering presentation coords
  ZMat free_rows_;                       // normalized (HNF) free functionals
  ZMat uinv_;                            // section data: columns of U^{-1}
  std::vector<size_t> torsion_slots_, free_slots_;
  ZMat free_tinv_;                       // undoes the HNF row transform
  std::vector<long long> torsion_scale_; // forward multiplier per torsion row
};

// Hermite-style row normalization of an integer matrix (row space basis with
// positive pivots, entries above pivots reduced). Returns the normalized
// basis; optionally tracks the unimodular transform T (rows_out = T * rows_in
// restricted to the retained basis).
ZMat hnf_rows(ZMat rows);

// Nonnegative-cone membership: solves target = sum c_i * gen_i with the
// generators linearly independent; returns the coefficient vector when it
// exists and is unique, nullopt when target is outside the span.
std::optional<QVec> solve_in_span(QMat const& generator_columns, QVec const& target);

// Exact phase-1 simplex: is p a convex combination of the given points?
bool in_convex_hull(QVec const& p, std::vector<QVec> const& points);

}  // namespace bgmu

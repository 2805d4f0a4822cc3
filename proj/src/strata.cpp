#include "bgmu/strata.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace bgmu::strata {

using namespace rootdata;

NewtonPoint make_newton_point(RootDatum const& d, QVec v) {
  if (v.size() != d.rank) throw std::invalid_argument("Newton point has wrong length");
  if (!is_dominant(d, v))
    throw std::invalid_argument("Newton point not dominant: " + format_qvec(v));
  if (!is_frobenius_invariant(d, v))
    throw std::invalid_argument("Newton point not Frobenius-invariant: " + format_qvec(v));
  return NewtonPoint{std::move(v)};
}

namespace {

// Nonnegative-coroot-cone membership with the solving data precomputed once.
struct ConeSolver {
  size_t nodes;
  QMat cols;   // rank x nodes, columns = simple coroots
  QMat pinv;   // nodes x rank

  explicit ConeSolver(RootDatum const& d) : nodes(d.nodes) {
    cols.assign(d.rank, QVec(nodes));
    for (size_t j = 0; j < nodes; ++j)
      for (size_t i = 0; i < d.rank; ++i) cols[i][j] = Rat(d.simple_coroots[j][i]);
    if (nodes) {
      QMat ct = q_transpose(cols);
      pinv = q_mat_mul(q_inverse(q_mat_mul(ct, cols)), ct);
    }
  }

  std::optional<QVec> coefficients(QVec const& diff) const {
    if (nodes == 0) {
      if (!bgmu::is_zero(diff)) return std::nullopt;
      return QVec();
    }
    QVec c = q_mat_vec(pinv, diff);
    QVec back = q_mat_vec(cols, c);
    if (back != diff) return std::nullopt;
    return c;
  }

  bool leq(QVec const& a, QVec const& b) const {
    auto c = coefficients(b - a);
    if (!c) return false;
    for (auto const& x : *c)
      if (x < Rat(0)) return false;
    return true;
  }
};

void require_same_datum(RootDatum const& d, QVec const& v) {
  if (v.size() != d.rank) throw std::invalid_argument("datum mismatch");
}

}  // namespace

bool newton_leq(RootDatum const& d, NewtonPoint const& a, NewtonPoint const& b) {
  require_same_datum(d, a.v);
  require_same_datum(d, b.v);
  return ConeSolver(d).leq(a.v, b.v);
}

bool newton_leq_convex_oracle(RootDatum const& d, NewtonPoint const& a, NewtonPoint const& b) {
  require_same_datum(d, a.v);
  require_same_datum(d, b.v);
  auto hull_points = weyl_orbit(d, b.v);
  for (auto const& p : weyl_orbit(d, a.v))
    if (!in_convex_hull(p, hull_points)) return false;
  return true;
}

size_t StrataPoset::index_of(NewtonPoint const& nu) const {
  auto idx = find(nu);
  if (!idx) throw std::invalid_argument("class not in the enumerated set: " + format_qvec(nu.v));
  return *idx;
}

std::optional<size_t> StrataPoset::find(NewtonPoint const& nu) const {
  for (size_t i = 0; i < classes.size(); ++i)
    if (classes[i].nu == nu) return i;
  return std::nullopt;
}

namespace {

// v minus the combination of J-coroots that kills every <., root_j>, j in J.
QVec project_away(RootDatum const& d, std::vector<size_t> const& J, QVec const& v) {
  if (J.empty()) return v;
  QMat g(J.size(), QVec(J.size()));
  QVec rhs(J.size());
  for (size_t x = 0; x < J.size(); ++x) {
    rhs[x] = root_pairing(d, v, J[x]);
    for (size_t y = 0; y < J.size(); ++y) g[x][y] = Rat(d.cartan[J[y]][J[x]]);
  }
  auto c = q_solve(g, rhs);
  if (!c) throw std::logic_error("degenerate Cartan subsystem");
  QVec out = v;
  for (size_t y = 0; y < J.size(); ++y)
    for (size_t j = 0; j < d.rank; ++j) out[j] -= (*c)[y] * Rat(d.simple_coroots[J[y]][j]);
  return out;
}

QMat frobenius_average(RootDatum const& d) {
  QMat avg(d.rank, QVec(d.rank));
  ZMat p = z_identity(d.rank);
  for (size_t k = 0; k < d.frobenius_order; ++k) {
    for (size_t i = 0; i < d.rank; ++i)
      for (size_t j = 0; j < d.rank; ++j) avg[i][j] += Rat(p[i][j]);
    p = z_mat_mul(p, d.frobenius);
  }
  Rat inv = Rat(1, (long long)d.frobenius_order);
  for (auto& row : avg)
    for (auto& x : row) x *= inv;
  return avg;
}

}  // namespace

StrataPoset enumerate_bg_mu(DatumPtr const& datum, QVec const& mu) {
  RootDatum const& d = *datum;
  require_same_datum(d, mu);
  if (!is_integral(mu))
    throw std::invalid_argument("mu must be integral: " + format_qvec(mu));
  if (!is_dominant(d, mu))
    throw std::invalid_argument("mu must be dominant: " + format_qvec(mu));
  if (!is_frobenius_invariant(d, mu))
    throw std::invalid_argument("mu must be Frobenius-invariant: " + format_qvec(mu));

  Pi1Group pi1 = pi1_coinvariants(d);
  Pi1Element kappa_mu = kappa_of_cochar(d, pi1, mu);
  ConeSolver cone(d);
  QMat avg = frobenius_average(d);

  // coordinate bound for candidates: |nu_j| <= max over the Weyl orbit of mu
  Rat coord_bound;
  for (auto const& w : weyl_orbit(d, mu))
    for (auto const& x : w) coord_bound = std::max(coord_bound, bgmu::abs(x));

  std::set<QVec> found;

  size_t subsets = (size_t)1 << d.nodes;
  for (size_t mask = 0; mask < subsets; ++mask) {
    // only Frobenius-stable node sets index Levi classes
    bool stable = true;
    for (size_t i = 0; i < d.nodes && stable; ++i)
      if (((mask >> i) & 1) != ((mask >> d.frobenius_node_perm[i]) & 1)) stable = false;
    if (!stable) continue;
    std::vector<size_t> J;
    for (size_t i = 0; i < d.nodes; ++i)
      if ((mask >> i) & 1) J.push_back(i);

    // pi1 of the standard Levi, with Galois coinvariants
    ZMat rels;
    for (size_t j : J) rels.push_back(d.simple_coroots[j]);
    for (size_t j = 0; j < d.rank; ++j) {
      ZVec col(d.rank);
      for (size_t i = 0; i < d.rank; ++i) col[i] = d.frobenius[i][j] - (i == j ? 1 : 0);
      rels.push_back(col);
    }
    LatticeQuotient levi(d.rank, rels);

    size_t free_rank = levi.free_rank();
    std::vector<ZVec> lifts(free_rank);
    std::vector<QVec> nu_gen(free_rank);
    for (size_t i = 0; i < free_rank; ++i) {
      auto e = levi.zero();
      e.free_part[i] = 1;
      lifts[i] = levi.section(e);
      nu_gen[i] = project_away(d, J, q_mat_vec(avg, to_qvec(lifts[i])));
    }

    // the kappa images reachable by torsion shifts
    std::set<Pi1Element> torsion_images;
    {
      auto const& tors = levi.torsion();
      __int128 combos = 1;
      for (auto t : tors) combos *= t;
      if (combos > 20000) throw std::invalid_argument("Levi torsion too large to enumerate");
      ZVec t(tors.size(), 0);
      while (true) {
        auto e = levi.zero();
        e.torsion = t;
        torsion_images.insert(pi1.project(levi.section(e)));
        size_t k = 0;
        while (k < tors.size() && ++t[k] == tors[k]) t[k++] = 0;
        if (k == tors.size()) break;
      }
    }

    // box for the free coordinates, from the hull bound on candidate points
    std::vector<long long> box(free_rank, 0);
    if (free_rank) {
      QMat nu_cols(d.rank, QVec(free_rank));
      for (size_t j = 0; j < free_rank; ++j)
        for (size_t i = 0; i < d.rank; ++i) nu_cols[i][j] = nu_gen[j][i];
      QMat nt = q_transpose(nu_cols);
      QMat pinvz = q_mat_mul(q_inverse(q_mat_mul(nt, nu_cols)), nt);
      __int128 count = 1;
      for (size_t i = 0; i < free_rank; ++i) {
        Rat s;
        for (size_t j = 0; j < d.rank; ++j) s += bgmu::abs(pinvz[i][j]);
        box[i] = (s * coord_bound).floor();
        count *= 2 * box[i] + 1;
      }
      if (count > 30000000) throw std::invalid_argument("candidate box too large");
    }

    // pairing table: <nu_gen_i, root_k>
    std::vector<QVec> pair_table(free_rank, QVec(d.nodes));
    for (size_t i = 0; i < free_rank; ++i)
      for (size_t k = 0; k < d.nodes; ++k) pair_table[i][k] = root_pairing(d, nu_gen[i], k);

    std::vector<bool> in_J(d.nodes, false);
    for (size_t j : J) in_J[j] = true;

    ZVec z(free_rank);
    for (size_t i = 0; i < free_rank; ++i) z[i] = -box[i];
    while (true) {
      // dominance with vanishing set exactly J
      bool ok = true;
      for (size_t k = 0; k < d.nodes && ok; ++k) {
        Rat s;
        for (size_t i = 0; i < free_rank; ++i)
          if (z[i]) s += Rat(z[i]) * pair_table[i][k];
        if (in_J[k]) {
          if (!s.is_zero()) throw std::logic_error("Levi projection failed to vanish on J");
        } else if (!s.is_positive()) {
          ok = false;
        }
      }
      if (ok) {
        QVec nu(d.rank);
        ZVec x(d.rank, 0);
        for (size_t i = 0; i < free_rank; ++i) {
          if (!z[i]) continue;
          for (size_t j = 0; j < d.rank; ++j) {
            nu[j] += Rat(z[i]) * nu_gen[i][j];
            x[j] += z[i] * lifts[i][j];
          }
        }
        if (cone.leq(nu, mu)) {
          Pi1Element need = pi1.sub(kappa_mu, pi1.project(x));
          if (torsion_images.count(need)) found.insert(nu);
        }
      }
      // odometer
      size_t i = 0;
      while (i < free_rank && ++z[i] > box[i]) z[i++] = -box[i];
      if (i == free_rank) break;
    }
  }

  StrataPoset p{datum, mu, std::move(pi1), kappa_mu};
  for (auto it = found.rbegin(); it != found.rend(); ++it)  // descending: top first
    p.classes.push_back(SigmaConjClass{NewtonPoint{*it}, kappa_mu});

  size_t n = p.classes.size();
  if (n == 0) throw std::logic_error("empty enumeration; mu itself should always appear");

  // kappa / Newton point compatibility in pi1 tensor Q
  QVec kq_mu = to_qvec(ZVec(kappa_mu.e.free_part));
  for (auto const& c : p.classes) {
    if (!is_dominant(d, c.nu.v) || !is_frobenius_invariant(d, c.nu.v))
      throw std::logic_error("enumerated class is not a Newton point");
    if (p.pi1.project_q(c.nu.v) != kq_mu)
      throw std::logic_error("Newton point and kappa disagree in pi1 tensor Q");
  }

  p.leq.assign(n, std::vector<bool>(n, false));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      p.leq[i][j] = (i == j) || cone.leq(p.classes[i].nu.v, p.classes[j].nu.v);

  size_t tops = 0, bottoms = 0;
  for (size_t i = 0; i < n; ++i) {
    bool maximal = true, minimal = true;
    for (size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      if (p.leq[i][j]) maximal = false;
      if (p.leq[j][i]) minimal = false;
    }
    if (maximal) { p.top = i; ++tops; }
    if (minimal) { p.bottom = i; ++bottoms; }
  }
  if (tops != 1 || bottoms != 1)
    throw std::logic_error("enumerated set lacks a unique maximum or minimum");
  if (p.classes[p.top].nu.v != mu)
    throw std::logic_error("maximal class differs from mu");

  // covers: transitive reduction of the comparability relation
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (i == j || !p.leq[i][j]) continue;
      bool direct = true;
      for (size_t k = 0; k < n && direct; ++k)
        if (k != i && k != j && p.leq[i][k] && p.leq[k][j]) direct = false;
      if (direct) p.covers.emplace_back(i, j);
    }
  std::sort(p.covers.begin(), p.covers.end());

  // ranks: longest chain from the bottom; covers must raise rank by one
  p.rank_of.assign(n, 0);
  std::vector<std::vector<size_t>> down(n);
  for (auto const& [lo, hi] : p.covers) down[hi].push_back(lo);
  std::vector<int> state(n, 0);
  std::function<size_t(size_t)> rank_rec = [&](size_t x) -> size_t {
    if (state[x] == 2) return p.rank_of[x];
    if (state[x] == 1) throw std::logic_error("cycle in cover relation");
    state[x] = 1;
    size_t r = 0;
    for (size_t lo : down[x]) r = std::max(r, rank_rec(lo) + 1);
    p.rank_of[x] = r;
    state[x] = 2;
    return r;
  };
  for (size_t i = 0; i < n; ++i) rank_rec(i);
  for (auto const& [lo, hi] : p.covers)
    if (p.rank_of[hi] != p.rank_of[lo] + 1)
      throw std::logic_error("cover relation violates the rank function");
  return p;
}

std::vector<NewtonPoint> gl_polygon_oracle(RootDatum const& d, QVec const& mu) {
  if (!d.is_type_a_gl())
    throw std::invalid_argument("polygon oracle only applies to the gl presets");
  require_same_datum(d, mu);
  if (!is_integral(mu) || !is_dominant(d, mu))
    throw std::invalid_argument("polygon oracle needs integral dominant mu");
  size_t n = d.rank;
  ZVec h(n + 1, 0);
  for (size_t j = 0; j < n; ++j) h[j + 1] = h[j] + mu[j].as_integer();

  std::vector<NewtonPoint> out;
  QVec slopes;
  std::function<void(size_t, long long, std::optional<Rat>)> rec =
      [&](size_t x, long long y, std::optional<Rat> prev) {
        if (x == n) {
          if (y == h[n]) out.push_back(NewtonPoint{slopes});
          return;
        }
        for (size_t nx = x + 1; nx <= n; ++nx) {
          // admissible integral heights at nx, scanning downward
          long long hi = h[nx];
          if (prev) {
            // strict slope drop: ny < y + prev*(nx - x)
            Rat lim = Rat(y) + *prev * Rat((long long)(nx - x));
            long long f = lim.floor();
            if (Rat(f) == lim) --f;  // strict
            hi = std::min(hi, f);
          }
          for (long long ny = hi;; --ny) {
            Rat slope{ny - y, (long long)(nx - x)};
            if (nx == n) {
              if (ny != h[n]) {
                if (ny < h[n]) break;
                continue;
              }
            } else {
              // the remaining average must still undercut this slope
              if (!(Rat(h[n] - ny) < slope * Rat((long long)(n - nx)))) break;
            }
            size_t sz = slopes.size();
            for (size_t t = 0; t < nx - x; ++t) slopes.push_back(slope);
            rec(nx, ny, slope);
            slopes.resize(sz);
            if (nx == n) break;
          }
        }
      };
  rec(0, 0, std::nullopt);
  std::sort(out.begin(), out.end());
  return out;
}

size_t length_poset(StrataPoset const& p, size_t a, size_t b) {
  size_t n = p.classes.size();
  if (a >= n || b >= n) throw std::invalid_argument("class index out of range");
  if (!p.leq[a][b]) throw std::invalid_argument("classes are not comparable");
  std::vector<std::vector<size_t>> up(n);
  for (auto const& [lo, hi] : p.covers) up[lo].push_back(hi);
  // longest and shortest maximal chain lengths inside [a, b]
  std::vector<std::pair<long long, long long>> memo(n, {-1, -1});
  std::function<std::pair<long long, long long>(size_t)> rec =
      [&](size_t x) -> std::pair<long long, long long> {
    if (x == b) return {0, 0};
    if (memo[x].first >= 0) return memo[x];
    long long lo = -1, hi = -1;
    for (size_t y : up[x]) {
      if (!p.leq[y][b]) continue;
      auto [l, h] = rec(y);
      if (lo < 0 || l + 1 < lo) lo = l + 1;
      if (h + 1 > hi) hi = h + 1;
    }
    if (lo < 0) throw std::logic_error("interval has a dead end below its top");
    return memo[x] = {lo, hi};
  };
  auto [lo, hi] = rec(a);
  if (lo != hi)
    throw std::logic_error("maximal chains of unequal length; enumeration bug");
  return (size_t)hi;
}

LengthFormulaResult length_formula(RootDatum const& d, NewtonPoint const& a, NewtonPoint const& b) {
  if (!newton_leq(d, a, b)) throw std::invalid_argument("length formula needs a <= b");
  LengthFormulaResult res;
  res.domain_ok = floor_formula_domain_ok(d);
  for (auto const& w : fundamental_weight_orbit_sums(d))
    res.value += pairing(d, b.v, w).floor() - pairing(d, a.v, w).floor();
  return res;
}

long long integral_point_count_gl(RootDatum const& d, NewtonPoint const& a, NewtonPoint const& b) {
  if (!d.is_type_a_gl())
    throw std::invalid_argument("integral point count only applies to the gl presets");
  QVec ha = polygon_heights(a.v), hb = polygon_heights(b.v);
  if (ha.back() != hb.back()) throw std::invalid_argument("polygons have different endpoints");
  long long count = 0;
  for (size_t x = 1; x + 1 < ha.size(); ++x)
    for (long long y = ha[x].floor() + 1; y <= hb[x].floor(); ++y) ++count;
  return count;
}

QVec polygon_heights(QVec const& slopes) {
  QVec h(slopes.size() + 1);
  for (size_t i = 0; i < slopes.size(); ++i) h[i + 1] = h[i] + slopes[i];
  return h;
}

bool gl_slopes_leq(QVec const& a, QVec const& b) {
  if (a.size() != b.size()) throw std::invalid_argument("slope vectors of different rank");
  QVec ha = polygon_heights(a), hb = polygon_heights(b);
  for (size_t i = 1; i + 1 < ha.size(); ++i)
    if (ha[i] > hb[i]) return false;
  return ha.back() == hb.back();
}

bool gl_in_newton_lattice(QVec const& slopes) {
  for (size_t i = 0; i < slopes.size();) {
    size_t j = i;
    while (j < slopes.size() && slopes[j] == slopes[i]) ++j;
    if ((long long)(j - i) % slopes[i].den() != 0) return false;
    i = j;
  }
  Rat total;
  for (auto const& s : slopes) total += s;
  return total.is_integer();
}

long long gl_slope_defect(QVec const& slopes) {
  long long def = 0;
  for (size_t i = 0; i < slopes.size();) {
    size_t j = i;
    while (j < slopes.size() && slopes[j] == slopes[i]) ++j;
    long long k = (long long)(j - i), q = slopes[i].den();
    if (k % q != 0)
      throw std::domain_error("slopes not in the Newton lattice: " + format_qvec(slopes));
    def += k - k / q;
    i = j;
  }
  return def;
}

long long defect_in_poset(StrataPoset const& p, size_t idx) {
  RootDatum const& d = *p.datum;
  Rat len{(long long)length_poset(p, idx, p.top)};
  Rat gap = pairing(d, p.mu - p.classes[idx].nu.v, rho(d));
  Rat def = Rat(2) * (len - gap);
  if (!def.is_integer() || def < Rat(0))
    throw std::domain_error("derived defect is not a nonnegative integer: " + def.str());
  return def.as_integer();
}

std::vector<long long> derived_defects_over_box(DatumPtr const& datum, NewtonPoint const& nu,
                                                size_t max_witnesses) {
  RootDatum const& d = *datum;
  require_same_datum(d, nu.v);
  // search integral dominant Frobenius-invariant mu* above nu
  long long lo = INT64_MAX, hi = INT64_MIN;
  for (auto const& x : nu.v) {
    lo = std::min(lo, x.floor());
    hi = std::max(hi, -((-x).floor()));
  }
  lo -= 1;
  hi += 2;
  std::vector<long long> results;
  ZVec m(d.rank, lo);
  while (true) {
    QVec mq = to_qvec(m);
    if (is_dominant(d, mq) && is_frobenius_invariant(d, mq) &&
        ConeSolver(d).leq(nu.v, mq)) {
      auto poset = enumerate_bg_mu(datum, mq);
      if (auto idx = poset.find(nu)) {
        results.push_back(defect_in_poset(poset, *idx));
        if (results.size() >= max_witnesses) break;
      }
    }
    size_t i = 0;
    while (i < d.rank && ++m[i] > hi) m[i++] = lo;
    if (i == d.rank) break;
  }
  for (auto v : results)
    if (v != results.front())
      throw std::domain_error("derived defect depends on the auxiliary cocharacter");
  return results;
}

long long defect(DatumPtr const& datum, NewtonPoint const& nu, size_t witnesses) {
  RootDatum const& d = *datum;
  require_same_datum(d, nu.v);
  if (d.is_type_a_gl()) {
    if (!gl_in_newton_lattice(nu.v))
      throw std::domain_error("Newton point outside the lattice: " + format_qvec(nu.v));
    return gl_slope_defect(nu.v);
  }
  auto results = derived_defects_over_box(datum, nu, witnesses);
  if (results.empty())
    throw std::domain_error("no auxiliary integral cocharacter found above " + format_qvec(nu.v));
  return results.front();
}

TableResult strata_table(DatumPtr const& datum, QVec const& mu) {
  RootDatum const& d = *datum;
  TableResult t{enumerate_bg_mu(datum, mu), {}, Rat()};
  QVec two_rho = rho(d);
  for (auto& x : two_rho) x *= Rat(2);
  t.total_dim = pairing(d, mu, two_rho);
  if (!t.total_dim.is_integer())
    throw std::domain_error("<2 rho, mu> is not an integer");
  QVec rho_v = rho(d);
  for (size_t i = 0; i < t.poset.classes.size(); ++i) {
    auto const& c = t.poset.classes[i];
    StrataRecord r;
    r.cls = c;
    long long der = defect_in_poset(t.poset, i);
    if (d.is_type_a_gl()) {
      r.defect = gl_slope_defect(c.nu.v);
      if (r.defect != der)
        throw std::domain_error("slope defect disagrees with the chain-length defect for " +
                                format_qvec(c.nu.v));
    } else {
      r.defect = der;
    }
    r.length_to_mu = (long long)length_poset(t.poset, i, t.poset.top);
    r.codim_stratum = r.length_to_mu;
    Rat adlv = pairing(d, mu - c.nu.v, rho_v) - Rat(r.defect, 2);
    if (!adlv.is_integer() || adlv < Rat(0))
      throw std::domain_error("affine Deligne-Lusztig dimension is not a nonnegative integer: " +
                              adlv.str());
    r.dim_adlv = adlv.as_integer();
    Rat leaf = pairing(d, c.nu.v, two_rho);
    if (!leaf.is_integer() || leaf < Rat(0))
      throw std::domain_error("central leaf dimension is not a nonnegative integer: " + leaf.str());
    r.dim_central_leaf = leaf.as_integer();
    r.dim_stratum = r.dim_adlv + r.dim_central_leaf;
    if (Rat(r.dim_stratum + r.codim_stratum) != t.total_dim)
      throw std::domain_error("dimension plus codimension misses <2 rho, mu> for " +
                              format_qvec(c.nu.v));
    t.records.push_back(r);
  }
  return t;
}

std::pair<size_t, size_t> sup_inf(StrataPoset const& p, std::vector<size_t> const& subset) {
  if (subset.empty()) throw std::invalid_argument("sup/inf of an empty subset");
  size_t n = p.classes.size();
  auto bound = [&](bool upper) -> size_t {
    std::vector<size_t> cands;
    for (size_t c = 0; c < n; ++c) {
      bool ok = true;
      for (size_t s : subset)
        if (!(upper ? p.leq[s][c] : p.leq[c][s])) { ok = false; break; }
      if (ok) cands.push_back(c);
    }
    size_t best = n;
    for (size_t c : cands) {
      bool extreme = true;
      for (size_t o : cands)
        if (!(upper ? p.leq[c][o] : p.leq[o][c])) { extreme = false; break; }
      if (extreme) {
        if (best != n) throw std::logic_error("supremum/infimum not unique");
        best = c;
      }
    }
    if (best == n) throw std::logic_error("supremum/infimum does not exist");
    return best;
  };
  return {bound(true), bound(false)};
}

size_t mu_ordinary(StrataPoset const& p) { return p.top; }
size_t basic(StrataPoset const& p) { return p.bottom; }

std::vector<size_t> closure_downset(StrataPoset const& p, size_t idx) {
  if (idx >= p.classes.size()) throw std::invalid_argument("class index out of range");
  std::vector<size_t> out;
  for (size_t i = 0; i < p.classes.size(); ++i)
    if (p.leq[i][idx]) out.push_back(i);
  return out;
}

}  // namespace bgmu::strata

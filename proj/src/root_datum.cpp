#include "bgmu/root_datum.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <tuple>

namespace bgmu::rootdata {

namespace {

ZVec unit(size_t n, size_t i) {
  ZVec v(n, 0);
  v[i] = 1;
  return v;
}

void check(bool cond, std::string const& msg) {
  if (!cond) throw std::invalid_argument("invalid root datum: " + msg);
}

}  // namespace

Rat pairing(RootDatum const& d, QVec const& coweight, QVec const& weight) {
  if (coweight.size() != d.rank || weight.size() != d.rank)
    throw std::invalid_argument("pairing: dimension mismatch with datum '" + d.name + "'");
  Rat s;
  for (size_t i = 0; i < d.rank; ++i) {
    if (d.pairing[i].empty()) continue;
    Rat row;
    for (size_t j = 0; j < d.rank; ++j)
      if (d.pairing[i][j]) row += Rat(d.pairing[i][j]) * weight[j];
    s += coweight[i] * row;
  }
  return s;
}

Rat root_pairing(RootDatum const& d, QVec const& v, size_t i) {
  return pairing(d, v, to_qvec(d.simple_roots[i]));
}

bool is_dominant(RootDatum const& d, QVec const& v) {
  for (size_t i = 0; i < d.nodes; ++i)
    if (root_pairing(d, v, i) < Rat(0)) return false;
  return true;
}

QVec apply_frobenius(RootDatum const& d, QVec const& v) {
  QVec r(d.rank);
  for (size_t i = 0; i < d.rank; ++i) {
    Rat s;
    for (size_t j = 0; j < d.rank; ++j)
      if (d.frobenius[i][j]) s += Rat(d.frobenius[i][j]) * v[j];
    r[i] = s;
  }
  return r;
}

bool is_frobenius_invariant(RootDatum const& d, QVec const& v) {
  return apply_frobenius(d, v) == v;
}

QVec reflect(RootDatum const& d, size_t i, QVec const& v) {
  Rat c = root_pairing(d, v, i);
  QVec r = v;
  for (size_t j = 0; j < d.rank; ++j) r[j] -= c * Rat(d.simple_coroots[i][j]);
  return r;
}

QVec dominant_rep(RootDatum const& d, QVec const& v) {
  QVec w = v;
  for (size_t guard = 0; guard < 1000000; ++guard) {
    bool moved = false;
    for (size_t i = 0; i < d.nodes; ++i) {
      if (root_pairing(d, w, i) < Rat(0)) {
        w = reflect(d, i, w);
        moved = true;
        break;
      }
    }
    if (!moved) return w;
  }
  throw std::logic_error("dominant_rep did not terminate; datum invalid?");
}

std::vector<QVec> weyl_orbit(RootDatum const& d, QVec const& v, size_t cap) {
  std::set<QVec> seen;
  std::vector<QVec> queue{v};
  seen.insert(v);
  for (size_t head = 0; head < queue.size(); ++head) {
    QVec cur = queue[head];
    for (size_t i = 0; i < d.nodes; ++i) {
      QVec nxt = reflect(d, i, cur);
      if (seen.insert(nxt).second) {
        if (seen.size() > cap) throw std::domain_error("Weyl orbit exceeds enumeration cap");
        queue.push_back(nxt);
      }
    }
  }
  return queue;
}

std::vector<QVec> positive_roots(RootDatum const& d) {
  // orbit of the simple roots under the reflections on the character side
  auto reflect_char = [&](size_t i, QVec const& w) {
    Rat c = pairing(d, to_qvec(d.simple_coroots[i]), w);
    QVec r = w;
    for (size_t j = 0; j < d.rank; ++j) r[j] -= c * Rat(d.simple_roots[i][j]);
    return r;
  };
  std::set<QVec> seen;
  std::vector<QVec> queue;
  for (size_t i = 0; i < d.nodes; ++i) {
    QVec w = to_qvec(d.simple_roots[i]);
    if (seen.insert(w).second) queue.push_back(w);
  }
  for (size_t head = 0; head < queue.size(); ++head) {
    QVec cur = queue[head];
    for (size_t i = 0; i < d.nodes; ++i) {
      QVec nxt = reflect_char(i, cur);
      if (seen.insert(nxt).second) {
        if (seen.size() > 20000)
          throw std::invalid_argument("root system is not finite");
        queue.push_back(nxt);
      }
    }
  }
  // keep the roots with nonnegative coordinates over the simple roots
  std::vector<QVec> gens;
  for (size_t i = 0; i < d.nodes; ++i) gens.push_back(to_qvec(d.simple_roots[i]));
  std::vector<QVec> pos;
  for (auto const& r : queue) {
    auto coeffs = solve_in_span(gens, r);
    if (!coeffs) continue;
    bool nonneg = true;
    for (auto const& c : *coeffs)
      if (c < Rat(0)) { nonneg = false; break; }
    if (nonneg) pos.push_back(r);
  }
  std::sort(pos.begin(), pos.end());
  return pos;
}

QVec rho(RootDatum const& d) {
  QVec s(d.rank);
  for (auto const& r : positive_roots(d))
    for (size_t j = 0; j < d.rank; ++j) s[j] += r[j];
  for (auto& x : s) x *= Rat(1, 2);
  return s;
}

ZMat central_character_lattice(RootDatum const& d) {
  // integer kernel of w -> (<coroot_i, w>)_i
  ZMat rows(d.nodes, ZVec(d.rank, 0));
  for (size_t i = 0; i < d.nodes; ++i) {
    for (size_t j = 0; j < d.rank; ++j) {
      __int128 s = 0;
      for (size_t t = 0; t < d.rank; ++t)
        s += (__int128)d.simple_coroots[i][t] * d.pairing[t][j];
      rows[i][j] = (long long)s;
    }
  }
  // kernel via Smith form of the transpose trick: solve rows * w = 0 over Z.
  // Run column-style: kernel of an n x r matrix = lattice of w with M w = 0.
  // Use SNF of M^T? Simpler: SNF tracks row ops only, so compute with M^T:
  // U * M^T * V = D ; kernel of M = rows of U beyond rank(D), transposed back.
  ZMat mt(d.rank, ZVec(d.nodes, 0));
  for (size_t i = 0; i < d.nodes; ++i)
    for (size_t j = 0; j < d.rank; ++j) mt[j][i] = rows[i][j];
  SmithForm sf = smith_form(mt);
  ZMat kernel;
  for (size_t i = sf.divisors.size(); i < d.rank; ++i) kernel.push_back(sf.u[i]);
  kernel = hnf_rows(kernel);
  return kernel;
}

std::vector<QVec> fundamental_weights(RootDatum const& d) {
  // pairing rows: node i equation <coroot_i, w> = delta
  QMat a(d.nodes, QVec(d.rank));
  for (size_t i = 0; i < d.nodes; ++i)
    for (size_t j = 0; j < d.rank; ++j) {
      Rat s;
      for (size_t t = 0; t < d.rank; ++t)
        if (d.simple_coroots[i][t] && d.pairing[t][j])
          s += Rat(d.simple_coroots[i][t]) * Rat(d.pairing[t][j]);
      a[i][j] = s;
    }
  ZMat central = central_character_lattice(d);
  ZMat az(d.nodes, ZVec(d.rank, 0));
  for (size_t x = 0; x < d.nodes; ++x)
    for (size_t y = 0; y < d.rank; ++y) az[x][y] = a[x][y].as_integer();
  std::vector<QVec> out;
  for (size_t i = 0; i < d.nodes; ++i) {
    QVec rhs(d.nodes);
    rhs[i] = Rat(1);
    ZVec e(d.nodes, 0);
    e[i] = 1;
    std::optional<ZVec> integral = z_solve(az, e);
    if (integral) {
      // canonical translate: fewest negative entries, then least mass, then lex
      auto score = [&](ZVec const& w) {
        long long neg = 0, mass = 0;
        for (auto v : w) {
          if (v < 0) ++neg;
          mass += std::llabs(v);
        }
        return std::tuple<long long, long long, ZVec>(neg, mass, w);
      };
      ZVec best = *integral;
      size_t cr = central.size();
      long long box = 16;
      std::function<void(size_t, ZVec)> rec = [&](size_t k, ZVec cur) {
        if (k == cr) {
          if (score(cur) < score(best)) best = cur;
          return;
        }
        for (long long t = -box; t <= box; ++t) {
          ZVec nxt = cur;
          for (size_t j = 0; j < d.rank; ++j) nxt[j] += t * central[k][j];
          rec(k + 1, nxt);
        }
      };
      rec(0, *integral);
      out.push_back(to_qvec(best));
    } else {
      // unique lift inside the span of the simple roots: solve Cartan system
      QMat cart(d.nodes, QVec(d.nodes));
      for (size_t x = 0; x < d.nodes; ++x)
        for (size_t y = 0; y < d.nodes; ++y) cart[x][y] = Rat(d.cartan[x][y]);
      auto coef = q_solve(cart, rhs);
      if (!coef) throw std::logic_error("Cartan matrix is singular");
      QVec w(d.rank);
      for (size_t y = 0; y < d.nodes; ++y)
        for (size_t j = 0; j < d.rank; ++j) w[j] += (*coef)[y] * Rat(d.simple_roots[y][j]);
      out.push_back(w);
    }
  }
  return out;
}

namespace {

QVec apply_char_frobenius(RootDatum const& d, QVec const& w) {
  QVec r(d.rank);
  for (size_t i = 0; i < d.rank; ++i) {
    Rat s;
    for (size_t j = 0; j < d.rank; ++j)
      if (d.frobenius_char[i][j]) s += Rat(d.frobenius_char[i][j]) * w[j];
    r[i] = s;
  }
  return r;
}

}  // namespace

std::vector<QVec> fundamental_weight_orbit_sums(RootDatum const& d) {
  auto weights = fundamental_weights(d);
  std::vector<bool> done(d.nodes, false);
  std::vector<QVec> sums;
  for (size_t i = 0; i < d.nodes; ++i) {
    if (done[i]) continue;
    QVec s(d.rank);
    size_t j = i;
    do {
      done[j] = true;
      s = s + weights[j];
      j = d.frobenius_node_perm[j];
    } while (j != i);
    sums.push_back(s);
  }
  // Frobenius orbits of the central basis characters.
  ZMat central = central_character_lattice(d);
  std::set<std::set<QVec>> seen_orbits;
  for (auto const& g : central) {
    QVec w = to_qvec(g);
    std::set<QVec> orbit;
    QVec cur = w;
    while (orbit.insert(cur).second) cur = apply_char_frobenius(d, cur);
    if (!seen_orbits.insert(orbit).second) continue;
    QVec s(d.rank);
    for (auto const& x : orbit) s = s + x;
    sums.push_back(s);
  }
  return sums;
}

bool floor_formula_domain_ok(RootDatum const& d) {
  for (auto const& w : fundamental_weight_orbit_sums(d)) {
    // integral pairing with every lattice cocharacter <=> pairing*w integral
    for (size_t i = 0; i < d.rank; ++i) {
      Rat s;
      for (size_t j = 0; j < d.rank; ++j)
        if (d.pairing[i][j]) s += Rat(d.pairing[i][j]) * w[j];
      if (!s.is_integer()) return false;
    }
  }
  return true;
}

Pi1Group pi1_coinvariants(RootDatum const& d) {
  ZMat rels;
  for (size_t i = 0; i < d.nodes; ++i) rels.push_back(d.simple_coroots[i]);
  for (size_t j = 0; j < d.rank; ++j) {
    ZVec col(d.rank);
    for (size_t i = 0; i < d.rank; ++i) col[i] = d.frobenius[i][j] - (i == j ? 1 : 0);
    rels.push_back(col);
  }
  return Pi1Group{LatticeQuotient(d.rank, rels)};
}

Pi1Element kappa_of_cochar(RootDatum const& d, Pi1Group const& pi1, QVec const& mu) {
  if (mu.size() != d.rank) throw std::invalid_argument("cocharacter has wrong length");
  if (!is_integral(mu))
    throw std::invalid_argument("kappa of a non-integral cocharacter " + format_qvec(mu));
  return pi1.project(to_zvec(mu));
}

DatumPtr validate(RootDatum d) {
  check(d.rank >= 1, "rank must be positive");
  d.nodes = d.simple_roots.size();
  check(d.simple_coroots.size() == d.nodes, "#simple roots != #simple coroots");
  for (auto const& r : d.simple_roots) check(r.size() == d.rank, "root length != rank");
  for (auto const& r : d.simple_coroots) check(r.size() == d.rank, "coroot length != rank");
  if (d.pairing.empty()) d.pairing = z_identity(d.rank);
  check(d.pairing.size() == d.rank, "pairing matrix shape");
  for (auto const& r : d.pairing) check(r.size() == d.rank, "pairing matrix shape");
  if (d.frobenius.empty()) d.frobenius = z_identity(d.rank);
  check(d.frobenius.size() == d.rank, "frobenius shape");
  for (auto const& r : d.frobenius) check(r.size() == d.rank, "frobenius shape");

  // pairing matrix must be invertible over Q
  QMat pq = q_from_z(d.pairing);
  check(q_rank(pq) == d.rank, "pairing matrix is degenerate");

  // Cartan matrix: diagonal 2, off-diagonal <= 0 with symmetric zero pattern
  d.cartan.assign(d.nodes, ZVec(d.nodes, 0));
  for (size_t i = 0; i < d.nodes; ++i)
    for (size_t j = 0; j < d.nodes; ++j) {
      __int128 s = 0;
      for (size_t x = 0; x < d.rank; ++x)
        for (size_t y = 0; y < d.rank; ++y)
          s += (__int128)d.simple_coroots[i][x] * d.pairing[x][y] * d.simple_roots[j][y];
      d.cartan[i][j] = (long long)s;
    }
  for (size_t i = 0; i < d.nodes; ++i) {
    check(d.cartan[i][i] == 2, "Cartan diagonal entry != 2");
    for (size_t j = 0; j < d.nodes; ++j) {
      if (i == j) continue;
      check(d.cartan[i][j] <= 0, "positive off-diagonal Cartan entry");
      check((d.cartan[i][j] == 0) == (d.cartan[j][i] == 0), "asymmetric Cartan zero pattern");
    }
  }

  // independence of the simple (co)roots
  {
    QMat rq(d.nodes), cq(d.nodes);
    for (size_t i = 0; i < d.nodes; ++i) {
      rq[i] = to_qvec(d.simple_roots[i]);
      cq[i] = to_qvec(d.simple_coroots[i]);
    }
    check(q_rank(rq) == d.nodes, "simple roots are dependent");
    check(q_rank(cq) == d.nodes, "simple coroots are dependent");
  }

  // Frobenius: finite order and unimodular
  {
    ZMat p = d.frobenius;
    size_t order = 1;
    while (!z_is_identity(p)) {
      p = z_mat_mul(p, d.frobenius);
      check(++order <= 48, "frobenius does not have small finite order");
    }
    d.frobenius_order = order;
  }
  // contragredient action on characters: pairing^{-1} * F^{-T} * pairing
  {
    QMat f = q_from_z(d.frobenius);
    QMat finv_t = q_transpose(q_inverse(f));
    QMat fc = q_mat_mul(q_mat_mul(q_inverse(pq), finv_t), pq);
    d.frobenius_char.assign(d.rank, ZVec(d.rank, 0));
    for (size_t i = 0; i < d.rank; ++i)
      for (size_t j = 0; j < d.rank; ++j) {
        check(fc[i][j].is_integer(), "frobenius does not preserve the character lattice");
        d.frobenius_char[i][j] = fc[i][j].num();
      }
  }
  // Frobenius permutes the simple coroots and, dually, the simple roots by
  // the same node permutation.
  d.frobenius_node_perm.assign(d.nodes, 0);
  for (size_t i = 0; i < d.nodes; ++i) {
    ZVec img = z_mat_vec(d.frobenius, d.simple_coroots[i]);
    size_t found = d.nodes;
    for (size_t j = 0; j < d.nodes; ++j)
      if (img == d.simple_coroots[j]) { found = j; break; }
    check(found < d.nodes, "frobenius does not permute the simple coroots");
    d.frobenius_node_perm[i] = found;
    ZVec rimg = z_mat_vec(d.frobenius_char, d.simple_roots[i]);
    check(rimg == d.simple_roots[found], "frobenius acts differently on roots and coroots");
  }

  auto out = std::make_shared<RootDatum>(std::move(d));
  positive_roots(*out);  // throws when the generated system is infinite
  return out;
}

DatumPtr preset(std::string const& family, long long n) {
  RootDatum d;
  d.family = family;
  if (family == "gl" || family == "u") {
    check(n >= 1 && !(family == "u" && n < 2), "unsupported size for family " + family);
    d.rank = (size_t)n;
    for (long long i = 0; i + 1 < n; ++i) {
      ZVec v(d.rank, 0);
      v[i] = 1;
      v[i + 1] = -1;
      d.simple_roots.push_back(v);
      d.simple_coroots.push_back(v);
    }
    if (family == "u") {
      // x -> -reverse(x); order two, flips the diagram
      d.frobenius.assign(d.rank, ZVec(d.rank, 0));
      for (size_t i = 0; i < d.rank; ++i) d.frobenius[i][d.rank - 1 - i] = -1;
    }
  } else if (family == "sl") {
    check(n >= 2, "sl requires n >= 2");
    d.rank = (size_t)n - 1;
    for (size_t i = 0; i < d.rank; ++i) {
      d.simple_coroots.push_back(unit(d.rank, i));
      ZVec root(d.rank, 0);
      root[i] = 2;
      if (i > 0) root[i - 1] = -1;
      if (i + 1 < d.rank) root[i + 1] = -1;
      d.simple_roots.push_back(root);
    }
  } else if (family == "pgl") {
    check(n >= 2, "pgl requires n >= 2");
    d.rank = (size_t)n - 1;
    for (size_t i = 0; i + 1 < (size_t)n; ++i) {
      ZVec coroot(d.rank, 0), root(d.rank, 0);
      if (i + 2 < (size_t)n) {
        coroot[i] = 1;
        coroot[i + 1] = -1;
        root[i] = 1;
        root[i + 1] = -1;
      } else {
        for (size_t j = 0; j + 1 < d.rank; ++j) coroot[j] = 1;
        coroot[d.rank - 1] = 2;
        root[d.rank - 1] = 1;
      }
      d.simple_coroots.push_back(coroot);
      d.simple_roots.push_back(root);
    }
  } else if (family == "gsp") {
    check(n >= 2 && n % 2 == 0, "gsp takes an even size 2g");
    long long g = n / 2;
    d.rank = (size_t)g + 1;  // coordinates (a_1..a_g, c)
    for (long long i = 0; i + 1 < g; ++i) {
      ZVec v(d.rank, 0);
      v[i] = 1;
      v[i + 1] = -1;
      d.simple_roots.push_back(v);
      d.simple_coroots.push_back(v);
    }
    ZVec lr(d.rank, 0), lc(d.rank, 0);
    lr[g - 1] = 2;
    lr[g] = -1;  // 2 eps_g - eta
    lc[g - 1] = 1;
    d.simple_roots.push_back(lr);
    d.simple_coroots.push_back(lc);
  } else {
    throw std::invalid_argument("unknown family '" + family + "'");
  }
  d.name = family + ":" + std::to_string(n);
  return validate(std::move(d));
}

}  // namespace bgmu::rootdata

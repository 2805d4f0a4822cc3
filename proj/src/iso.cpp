#include "bgmu/iso.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <thread>

#include "bgmu/strata.hpp"

namespace bgmu::iso {

LaurentMatrix monomial_matrix(ContextPtr const& ctx, MonomialElement const& m) {
  size_t n = m.w.size();
  if (m.a.size() != n) throw std::invalid_argument("monomial element shape mismatch");
  LaurentMatrix out{ctx, n, std::vector<Laurent>(n * n)};
  for (size_t i = 0; i < n; ++i) {
    if (m.w[i] >= n) throw std::invalid_argument("monomial permutation out of range");
    out.at(m.w[i], i) = lau_monomial(*ctx, ctx->field.one(), m.a[i]);
  }
  // permutation must be a bijection
  std::vector<bool> hit(n, false);
  for (size_t i = 0; i < n; ++i) {
    if (hit[m.w[i]]) throw std::invalid_argument("monomial map is not a permutation");
    hit[m.w[i]] = true;
  }
  return out;
}

QVec monomial_newton_point(MonomialElement const& m) {
  size_t n = m.w.size();
  QVec slopes;
  std::vector<bool> seen(n, false);
  for (size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    long long total = 0, len = 0;
    size_t j = i;
    do {
      seen[j] = true;
      total += m.a[j];
      ++len;
      j = m.w[j];
    } while (j != i);
    Rat avg{total, len};
    for (long long t = 0; t < len; ++t) slopes.push_back(avg);
  }
  std::sort(slopes.begin(), slopes.end(), std::greater<>());
  return slopes;
}

MonomialElement shift_element(size_t n) {
  MonomialElement m;
  m.w.resize(n);
  m.a.assign(n, 0);
  for (size_t i = 0; i < n; ++i) m.w[i] = (i + 1) % n;
  m.a[n - 1] = 1;
  return m;
}

namespace {

LaurentMatrix sigma_norm(LaurentMatrix const& mat) {
  uint32_t m = mat.ctx->field.m();
  LaurentMatrix prod = mat;
  LaurentMatrix twisted = mat;
  for (uint32_t k = 1; k < m; ++k) {
    twisted = lm_frobenius(twisted, 1);
    prod = lm_mul(prod, twisted);
  }
  return prod;
}

}  // namespace

NewtonResult newton_point_gl(LaurentMatrix const& mat, bool verify, long long max_power) {
  LaurentMatrix norm = sigma_norm(mat);
  auto chi = lm_charpoly(norm);
  if (chi[0].is_zero()) throw std::domain_error("singular matrix has no Newton point");
  QVec slopes = newton_slopes_of_charpoly(chi);
  uint32_t m = mat.ctx->field.m();
  for (auto& s : slopes) s /= Rat((long long)m);

  NewtonResult res{slopes, {}};
  if (verify) {
    res.verification.ran = true;
    // k must make k*nu integral before cartan(N_k) can equal k*nu
    long long step = 1;
    for (auto const& s : slopes) step = std::lcm(step, s.den());
    LaurentMatrix pw = norm;       // norm^j = sigma-norm over j*m twists
    for (long long j = 1; j * (long long)m <= max_power; ++j) {
      if (j > 1) pw = lm_mul(pw, norm);
      if (j % step != 0) continue;
      long long k = j * (long long)m;
      ZVec cart = cartan_invariant(pw);
      bool match = true;
      for (size_t i = 0; i < cart.size(); ++i)
        if (Rat(cart[i]) != Rat(k) * slopes[i]) { match = false; break; }
      if (match) {
        res.verification.agreed = true;
        res.verification.power_used = k;
        break;
      }
    }
    if (!res.verification.agreed)
      throw std::runtime_error("Cartan-limit verification did not stabilize within power " +
                               std::to_string(max_power));
  }
  return res;
}

long long kappa_gl(LaurentMatrix const& mat) { return kappa_valuation(mat); }

LaurentMatrix random_unit_matrix(ContextPtr const& ctx, size_t n, long long degree_bound,
                                 Rng& rng, int budget) {
  auto const& f = ctx->field;
  uint64_t qm = 1;
  for (uint32_t i = 0; i < f.m(); ++i) qm *= f.q();
  for (int attempt = 0; attempt < budget; ++attempt) {
    LaurentMatrix k{ctx, n, std::vector<Laurent>(n * n)};
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        Laurent entry;
        for (long long e = 0; e <= degree_bound; ++e) {
          uint64_t pick = rng.below(qm);
          if (!pick) continue;
          GFElem c{};
          for (uint32_t t = 0; t < f.m(); ++t) {
            c.c[t] = (uint32_t)(pick % f.q());
            pick /= f.q();
          }
          entry = lau_add(*ctx, entry, lau_monomial(*ctx, c, e));
        }
        k.at(i, j) = entry;
      }
    try {
      if (kappa_valuation(k) == 0) return k;
    } catch (std::domain_error const&) {
      // singular draw; try again
    }
  }
  throw std::runtime_error("rejection budget exhausted sampling a unit matrix");
}

LaurentMatrix random_in_double_coset(ContextPtr const& ctx, size_t n, ZVec const& mu,
                                     uint64_t seed, uint64_t index, long long degree_bound) {
  if (mu.size() != n) throw std::invalid_argument("mu has wrong length");
  Rng r1 = Rng::stream(seed, index, 0x6b31), r2 = Rng::stream(seed, index, 0x6b32);
  LaurentMatrix k1 = random_unit_matrix(ctx, n, degree_bound, r1);
  LaurentMatrix k2 = random_unit_matrix(ctx, n, degree_bound, r2);
  LaurentMatrix d{ctx, n, std::vector<Laurent>(n * n)};
  for (size_t i = 0; i < n; ++i) d.at(i, i) = lau_monomial(*ctx, ctx->field.one(), mu[i]);
  return lm_mul(lm_mul(k1, d), k2);
}

std::pair<LaurentMatrix, LaurentMatrix> random_elementary_product(ContextPtr const& ctx, size_t n,
                                                                  long long degree_bound,
                                                                  size_t factors, Rng& rng) {
  auto const& f = ctx->field;
  LaurentMatrix g = lm_identity(ctx, n);
  LaurentMatrix ginv = lm_identity(ctx, n);
  if (n < 2) return {g, ginv};
  for (size_t t = 0; t < factors; ++t) {
    size_t i = rng.below(n), j = rng.below(n - 1);
    if (j >= i) ++j;
    long long e = (long long)rng.below((uint64_t)degree_bound + 1);
    GFElem c = f.from_int((long long)rng.below(f.q() - 1) + 1);
    for (uint32_t tt = 1; tt < f.m(); ++tt) c.c[tt] = (uint32_t)rng.below(f.q());
    LaurentMatrix el = lm_identity(ctx, n);
    el.at(i, j) = lau_monomial(*ctx, c, e);
    LaurentMatrix elinv = lm_identity(ctx, n);
    elinv.at(i, j) = lau_monomial(*ctx, f.neg(c), e);
    g = lm_mul(g, el);
    ginv = lm_mul(elinv, ginv);  // inverses compose in reverse
  }
  return {g, ginv};
}

MazurReport mazur_experiment(ContextPtr const& ctx, size_t n, ZVec const& mu, size_t samples,
                             uint64_t seed, long long degree_bound, unsigned workers) {
  ZVec mu_sorted = mu;
  std::sort(mu_sorted.begin(), mu_sorted.end(), std::greater<>());
  if (mu_sorted != mu) throw std::invalid_argument("mu must be dominant (nonincreasing)");
  QVec mu_q = to_qvec(mu);
  long long mu_sum = 0;
  for (auto v : mu) mu_sum += v;

  struct Draw { QVec nu; bool ok; std::string detail; };
  std::vector<Draw> draws(samples);
  auto work = [&](size_t lo, size_t hi) {
    for (size_t i = lo; i < hi; ++i) {
      LaurentMatrix mtx = random_in_double_coset(ctx, n, mu, seed, i, degree_bound);
      ZVec cart = cartan_invariant(mtx);
      QVec nu = newton_point_gl(mtx).slopes;
      long long kap = kappa_gl(mtx);
      bool ok = true;
      std::string detail;
      if (cart != mu) {
        ok = false;
        detail = "cartan " + format_zvec(cart) + " != mu";
      } else if (kap != mu_sum) {
        ok = false;
        detail = "kappa " + std::to_string(kap) + " != " + std::to_string(mu_sum);
      } else if (!strata::gl_slopes_leq(nu, mu_q)) {
        ok = false;
        detail = "slope inequality violated by " + format_qvec(nu);
      }
      draws[i] = {std::move(nu), ok, std::move(detail)};
    }
  };
  if (workers <= 1 || samples < 2 * workers) {
    work(0, samples);
  } else {
    std::vector<std::thread> pool;
    size_t chunk = (samples + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      size_t lo = w * chunk, hi = std::min(samples, lo + chunk);
      if (lo < hi) pool.emplace_back(work, lo, hi);
    }
    for (auto& t : pool) t.join();
  }

  MazurReport rep;
  rep.samples = samples;
  rep.seed = seed;
  rep.mu = mu;
  std::map<QVec, size_t> counts;
  for (size_t i = 0; i < samples; ++i) {
    if (!draws[i].ok) {
      ++rep.violations;
      rep.violation_details.push_back("sample " + std::to_string(i) + ": " + draws[i].detail);
      continue;
    }
    ++counts[draws[i].nu];
  }
  for (auto const& [nu, cnt] : counts) rep.observed.emplace_back(nu, cnt);
  return rep;
}

namespace {

// slope blocks of a dominant rational vector, as (value, multiplicity)
std::vector<std::pair<Rat, long long>> slope_blocks(QVec const& nu) {
  std::vector<std::pair<Rat, long long>> blocks;
  for (size_t i = 0; i < nu.size();) {
    size_t j = i;
    while (j < nu.size() && nu[j] == nu[i]) ++j;
    blocks.emplace_back(nu[i], (long long)(j - i));
    i = j;
  }
  return blocks;
}

}  // namespace

MonomialElement kr_realize_minuscule(ContextPtr const& ctx, size_t n, ZVec const& mu,
                                     QVec const& nu) {
  if (mu.size() != n || nu.size() != n) throw std::invalid_argument("shape mismatch");
  long long ones = 0;
  for (auto v : mu) {
    if (v != 0 && v != 1) throw std::invalid_argument("mu is not minuscule (entries in {0,1})");
    ones += v;
  }
  for (size_t i = 0; i + 1 < n; ++i)
    if (mu[i] < mu[i + 1]) throw std::invalid_argument("mu must be dominant");
  if (!strata::gl_in_newton_lattice(nu) || !strata::gl_slopes_leq(nu, to_qvec(mu)))
    throw std::invalid_argument("nu is not a class below mu: " + format_qvec(nu));

  MonomialElement out;
  out.w.assign(n, 0);
  out.a.assign(n, 0);
  size_t base = 0;
  for (auto const& [slope, mult] : slope_blocks(nu)) {
    long long q = slope.den(), p = slope.num();
    long long cycles = mult / q;
    for (long long c = 0; c < cycles; ++c) {
      // one cycle on [base, base+q), carrying p ones at its first slots
      for (long long t = 0; t < q; ++t) {
        size_t idx = base + (size_t)t;
        out.w[idx] = base + (size_t)((t + 1) % q);
        out.a[idx] = t < p ? 1 : 0;
      }
      base += (size_t)q;
    }
  }
  // verify through the matrix oracle
  LaurentMatrix mtx = monomial_matrix(ctx, out);
  if (cartan_invariant(mtx) != mu)
    throw std::logic_error("witness has wrong Cartan invariant");
  if (newton_point_gl(mtx).slopes != nu)
    throw std::logic_error("witness has wrong Newton point");
  return out;
}

std::vector<QVec> monomial_newton_points_for_multiset(size_t n, ZVec const& mu) {
  std::vector<size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::set<QVec> points;
  // distinct arrangements of the exponent multiset
  ZVec arr = mu;
  std::sort(arr.begin(), arr.end());
  do {
    std::vector<size_t> w(n);
    std::iota(w.begin(), w.end(), 0);
    do {
      points.insert(monomial_newton_point(MonomialElement{w, arr}));
    } while (std::next_permutation(w.begin(), w.end()));
  } while (std::next_permutation(arr.begin(), arr.end()));
  return {points.begin(), points.end()};
}

KrSearchResult kr_search_general(ContextPtr const& ctx, size_t n, ZVec const& mu, QVec const& nu,
                                 size_t budget, uint64_t seed) {
  if (!strata::gl_in_newton_lattice(nu) || !strata::gl_slopes_leq(nu, to_qvec(mu)))
    throw std::invalid_argument("nu is not a class below mu: " + format_qvec(nu));
  KrSearchResult res;
  // exhaustive monomial phase
  ZVec arr = mu;
  std::sort(arr.begin(), arr.end());
  do {
    std::vector<size_t> w(n);
    std::iota(w.begin(), w.end(), 0);
    do {
      ++res.tried;
      MonomialElement cand{w, arr};
      if (monomial_newton_point(cand) == nu) {
        // confirm through the matrix oracle before accepting
        LaurentMatrix mtx = monomial_matrix(ctx, cand);
        if (cartan_invariant(mtx) == mu && newton_point_gl(mtx).slopes == nu) {
          res.monomial = cand;
          return res;
        }
      }
    } while (std::next_permutation(w.begin(), w.end()));
  } while (std::next_permutation(arr.begin(), arr.end()));

  // randomized phase: sparse unit perturbations inside the double coset
  for (size_t t = 0; t < budget; ++t) {
    Rng rng = Rng::stream(seed, t, 0x4b52);
    ZVec a = mu;
    for (size_t i = n - 1; i > 0; --i) std::swap(a[i], a[rng.below(i + 1)]);
    std::vector<size_t> w(n);
    std::iota(w.begin(), w.end(), 0);
    for (size_t i = n - 1; i > 0; --i) std::swap(w[i], w[rng.below(i + 1)]);
    LaurentMatrix x = monomial_matrix(ctx, MonomialElement{w, a});
    auto [g1, g1i] = random_elementary_product(ctx, n, 1, 2, rng);
    auto [g2, g2i] = random_elementary_product(ctx, n, 1, 2, rng);
    LaurentMatrix cand = lm_mul(lm_mul(g1, x), g2);
    ++res.tried;
    if (newton_point_gl(cand).slopes == nu && cartan_invariant(cand) == mu) {
      res.randomized_hit = true;
      return res;
    }
  }
  return res;
}

}  // namespace bgmu::iso

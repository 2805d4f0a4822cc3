#include "bgmu/gf.hpp"

#include <stdexcept>

namespace bgmu::iso {

namespace {

using Poly = std::vector<uint32_t>;  // dense, constant coefficient first

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mod(Poly a, Poly const& f, uint32_t q) {
  trim(a);
  uint32_t lead_inv = 0;
  {
    // modular inverse of the leading coefficient of f
    uint32_t l = f.back();
    for (uint32_t t = 1; t < q; ++t)
      if (t * l % q == 1) { lead_inv = t; break; }
  }
  while (a.size() >= f.size()) {
    uint32_t c = (uint64_t)a.back() * lead_inv % q;
    size_t shift = a.size() - f.size();
    for (size_t i = 0; i < f.size(); ++i) {
      uint64_t v = a[shift + i] + (uint64_t)(q - 1) * q;  // keep nonnegative
      v -= (uint64_t)c * f[i] % q;
      a[shift + i] = v % q;
    }
    trim(a);
  }
  return a;
}

Poly poly_mul(Poly const& a, Poly const& b, uint32_t q) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + (uint64_t)a[i] * b[j]) % q;
  }
  return r;
}

Poly poly_powmod(Poly base, unsigned long long e, Poly const& f, uint32_t q) {
  Poly r{1};
  base = poly_mod(std::move(base), f, q);
  while (e) {
    if (e & 1) r = poly_mod(poly_mul(r, base, q), f, q);
    base = poly_mod(poly_mul(base, base, q), f, q);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, uint32_t q) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, q);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

bool is_irreducible(Poly const& f, uint32_t q) {
  if (f.size() < 2 || f.back() == 0) return false;
  uint32_t m = (uint32_t)f.size() - 1;
  if (m == 1) return true;
  // x^(q^m) == x mod f, and gcd(x^(q^(m/p)) - x, f) = 1 for primes p | m
  auto xq_iterated = [&](uint32_t k) {
    // x^(q^k) mod f by iterating the q-th power map
    Poly cur{0, 1};
    for (uint32_t i = 0; i < k; ++i) cur = poly_powmod(cur, q, f, q);
    return cur;
  };
  Poly top = xq_iterated(m);
  Poly x{0, 1};
  Poly diff = top;
  if (diff.size() < 2) diff.resize(2, 0);
  diff[1] = (diff[1] + q - 1) % q;
  trim(diff);
  if (!diff.empty()) return false;
  for (uint32_t p = 2; p <= m; ++p) {
    if (!is_prime(p) || m % p != 0) continue;
    Poly mid = xq_iterated(m / p);
    if (mid.size() < 2) mid.resize(2, 0);
    mid[1] = (mid[1] + q - 1) % q;
    trim(mid);
    Poly g = poly_gcd(f, mid, q);
    if (g.size() != 1) return false;
  }
  return true;
}

FiniteFieldTower::FiniteFieldTower(uint32_t q, uint32_t m, std::vector<uint32_t> modulus)
    : q_(q), m_(m), modulus_(std::move(modulus)) {
  if (!is_prime(q) || q > 97) throw std::invalid_argument("q must be a small prime");
  if (m < 1 || m > kMaxExtensionDegree)
    throw std::invalid_argument("extension degree out of range");
  if (modulus_.empty()) {
    // least lexicographic monic irreducible: scan constant-first coefficient
    // tuples in increasing order
    std::vector<uint32_t> c(m, 0);
    while (true) {
      Poly f = c;
      f.push_back(1);
      if (is_irreducible(f, q)) { modulus_ = f; break; }
      size_t i = m;
      while (i > 0 && ++c[i - 1] == q) c[--i] = 0;
      if (i == 0 && c[0] == 0) throw std::logic_error("no irreducible polynomial found");
    }
  } else {
    for (auto& x : modulus_) x %= q;
    if (modulus_.size() != m + 1 || modulus_.back() != 1)
      throw std::invalid_argument("modulus must be monic of degree m");
    if (!is_irreducible(modulus_, q)) throw std::invalid_argument("modulus is reducible");
  }
}

GFElem FiniteFieldTower::one() const {
  GFElem e;
  e.c[0] = 1;
  return e;
}

GFElem FiniteFieldTower::from_int(long long v) const {
  GFElem e;
  long long r = v % (long long)q_;
  if (r < 0) r += q_;
  e.c[0] = (uint32_t)r;
  return e;
}

GFElem FiniteFieldTower::from_coeffs(std::vector<long long> const& v) const {
  if (v.size() > m_) throw std::invalid_argument("coefficient vector longer than degree");
  GFElem e;
  for (size_t i = 0; i < v.size(); ++i) {
    long long r = v[i] % (long long)q_;
    if (r < 0) r += q_;
    e.c[i] = (uint32_t)r;
  }
  return e;
}

bool FiniteFieldTower::is_zero(GFElem const& a) const {
  for (uint32_t i = 0; i < m_; ++i)
    if (a.c[i]) return false;
  return true;
}

GFElem FiniteFieldTower::add(GFElem const& a, GFElem const& b) const {
  GFElem r;
  for (uint32_t i = 0; i < m_; ++i) r.c[i] = (a.c[i] + b.c[i]) % q_;
  return r;
}

GFElem FiniteFieldTower::sub(GFElem const& a, GFElem const& b) const {
  GFElem r;
  for (uint32_t i = 0; i < m_; ++i) r.c[i] = (a.c[i] + q_ - b.c[i]) % q_;
  return r;
}

GFElem FiniteFieldTower::neg(GFElem const& a) const { return sub(zero(), a); }

GFElem FiniteFieldTower::mul(GFElem const& a, GFElem const& b) const {
  if (m_ == 1) {
    GFElem r;
    r.c[0] = (uint64_t)a.c[0] * b.c[0] % q_;
    return r;
  }
  std::array<uint64_t, 2 * kMaxExtensionDegree> acc{};
  for (uint32_t i = 0; i < m_; ++i) {
    if (!a.c[i]) continue;
    for (uint32_t j = 0; j < m_; ++j) acc[i + j] += (uint64_t)a.c[i] * b.c[j];
  }
  // reduce by the monic modulus from the top
  for (uint32_t k = 2 * m_ - 2; k >= m_; --k) {
    uint64_t c = acc[k] % q_;
    if (c) {
      uint64_t mult = q_ - c;  // add (q - c) * modulus shifted, same mod q
      for (uint32_t i = 0; i <= m_; ++i)
        acc[k - m_ + i] += mult * modulus_[i];
    }
    if (k == m_) break;
  }
  GFElem r;
  for (uint32_t i = 0; i < m_; ++i) r.c[i] = acc[i] % q_;
  return r;
}

GFElem FiniteFieldTower::pow(GFElem a, unsigned long long e) const {
  GFElem r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

GFElem FiniteFieldTower::inverse(GFElem const& a) const {
  if (is_zero(a)) throw std::domain_error("inverse of zero field element");
  // a^(q^m - 2); q^m <= 97^8 fits in 64 bits for our caps? 97^8 ~ 8.5e15: yes
  unsigned long long order = 1;
  for (uint32_t i = 0; i < m_; ++i) order *= q_;
  return pow(a, order - 2);
}

std::string FiniteFieldTower::format(GFElem const& a) const {
  std::string s = "[";
  for (uint32_t i = 0; i < m_; ++i) {
    if (i) s += ",";
    s += std::to_string(a.c[i]);
  }
  return s + "]";
}

}  // namespace bgmu::iso

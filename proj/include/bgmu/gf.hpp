#pragma once

// Arithmetic in F_{q^m} as F_q[x]/(f) with a deterministically chosen
// irreducible modulus, plus the coefficient Frobenius a -> a^q.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace bgmu::iso {

constexpr size_t kMaxExtensionDegree = 8;

/// Element of F_{q^m}: coefficient vector of length m (entries in [0, q)).
struct GFElem {
  std::array<uint32_t, kMaxExtensionDegree> c{};

  friend bool operator==(GFElem const&, GFElem const&) = default;
};

class FiniteFieldTower {
 public:
  /// When modulus is empty the lexicographically least monic irreducible of
  /// degree m over F_q is selected (constant coefficient first).
  FiniteFieldTower(uint32_t q, uint32_t m, std::vector<uint32_t> modulus = {});

  uint32_t q() const { return q_; }
  uint32_t m() const { return m_; }
  std::vector<uint32_t> const& modulus() const { return modulus_; }

  GFElem zero() const { return {}; }
  GFElem one() const;
  GFElem from_int(long long v) const;
  GFElem from_coeffs(std::vector<long long> const& v) const;

  bool is_zero(GFElem const& a) const;
  GFElem add(GFElem const& a, GFElem const& b) const;
  GFElem sub(GFElem const& a, GFElem const& b) const;
  GFElem neg(GFElem const& a) const;
  GFElem mul(GFElem const& a, GFElem const& b) const;
  GFElem inverse(GFElem const& a) const;  // throws on zero
  GFElem pow(GFElem a, unsigned long long e) const;
  /// x -> x^q; the generator of Gal(F_{q^m}/F_q).
  GFElem frobenius(GFElem const& a) const { return pow(a, q_); }

  std::string format(GFElem const& a) const;

  friend bool operator==(FiniteFieldTower const& a, FiniteFieldTower const& b) {
    return a.q_ == b.q_ && a.m_ == b.m_ && a.modulus_ == b.modulus_;
  }

 private:
  uint32_t q_ = 0, m_ = 0;
  std::vector<uint32_t> modulus_;  // monic of degree m; m+1 coefficients
};

/// Membership test used for validation and the deterministic modulus search.
bool is_irreducible(std::vector<uint32_t> const& poly, uint32_t q);

}  // namespace bgmu::iso

#pragma once

// Exact arithmetic in Z[zeta_L]. Elements are stored as integer polynomials
// in zeta_L of degree < phi(L), i.e. reduced modulo the L-th cyclotomic
// polynomial, so equality is coefficient equality.

#include <cmath>
#include <complex>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "wreathchar/error.hpp"

namespace wreathchar {

namespace detail {

/// Coefficients of the L-th cyclotomic polynomial, lowest degree first.
/// Obtained by exact division of x^L - 1 by Phi_d for every proper divisor d.
inline std::vector<Integer> compute_cyclotomic_polynomial(int level) {
  std::vector<Integer> num(static_cast<std::size_t>(level) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(level)] = 1;
  for (int d = 1; d < level; ++d) {
    if (level % d != 0) continue;
    const auto den = compute_cyclotomic_polynomial(d);
    // monic long division num / den
    const std::size_t dn = den.size() - 1;
    std::vector<Integer> quot(num.size() - dn, 0);
    for (std::size_t i = num.size(); i-- > dn;) {
      const Integer c = num[i];
      quot[i - dn] = c;
      if (c == 0) continue;
      for (std::size_t k = 0; k <= dn; ++k) num[i - dn + k] -= c * den[k];
    }
    num = std::move(quot);
  }
  return num;
}

inline std::shared_ptr<const std::vector<Integer>> cyclotomic_polynomial(int level) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const std::vector<Integer>>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(level);
  if (it != cache.end()) return it->second;
  auto poly = std::make_shared<const std::vector<Integer>>(compute_cyclotomic_polynomial(level));
  cache.emplace(level, poly);
  return poly;
}

inline long long positive_mod(long long a, long long m) {
  const long long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace detail

class CyclotomicInt {
 public:
  /// Zero at level 1.
  CyclotomicInt() : CyclotomicInt(1) {}

  explicit CyclotomicInt(int level) : level_(level) {
    if (level < 1) throw InvalidInput("cyclotomic level must be >= 1");
    modulus_ = detail::cyclotomic_polynomial(level);
    coeffs_.assign(modulus_->size() - 1, 0);
  }

  /// Sum over k of coeffs[k] * zeta_L^k for an arbitrary-length coefficient
  /// vector (exponents are taken mod L before reduction).
  static CyclotomicInt from_coefficients(int level, const std::vector<Integer>& coeffs) {
    CyclotomicInt x(level);
    std::vector<Integer> full(static_cast<std::size_t>(level), 0);
    for (std::size_t k = 0; k < coeffs.size(); ++k) full[k % static_cast<std::size_t>(level)] += coeffs[k];
    x.assign_reduced(std::move(full));
    return x;
  }

  static CyclotomicInt from_int(int level, const Integer& m) {
    CyclotomicInt x(level);
    x.coeffs_[0] = m;
    return x;
  }

  static CyclotomicInt zeta(int level, long long k) {
    std::vector<Integer> c(static_cast<std::size_t>(level), 0);
    c[static_cast<std::size_t>(detail::positive_mod(k, level))] = 1;
    return from_coefficients(level, c);
  }

  int level() const noexcept { return level_; }
  /// Reduced coefficients, length phi(L).
  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  std::optional<Integer> as_integer() const {
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
      if (coeffs_[k] != 0) return std::nullopt;
    return coeffs_[0];
  }

  /// The same number viewed in Z[zeta_M]; M must be a multiple of L.
  CyclotomicInt promoted(int new_level) const {
    if (new_level % level_ != 0) throw InvalidInput("promotion level must be a multiple of the current level");
    if (new_level == level_) return *this;
    const std::size_t step = static_cast<std::size_t>(new_level / level_);
    std::vector<Integer> full(static_cast<std::size_t>(new_level), 0);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) full[k * step] = coeffs_[k];
    CyclotomicInt x(new_level);
    x.assign_reduced(std::move(full));
    return x;
  }

  /// Complex conjugation: zeta^k -> zeta^-k.
  CyclotomicInt conj() const {
    std::vector<Integer> full(static_cast<std::size_t>(level_), 0);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      full[(static_cast<std::size_t>(level_) - k) % static_cast<std::size_t>(level_)] += coeffs_[k];
    CyclotomicInt x(level_);
    x.assign_reduced(std::move(full));
    return x;
  }

  /// Numeric value under zeta_L -> exp(2 pi i / L). Never used for decisions.
  std::complex<double> to_complex() const {
    std::complex<double> z = 0;
    const double pi = std::acos(-1.0);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (coeffs_[k] == 0) continue;
      z += coeffs_[k].convert_to<double>() * std::polar(1.0, 2.0 * pi * static_cast<double>(k) / level_);
    }
    return z;
  }

  CyclotomicInt& operator+=(const CyclotomicInt& o) { return combine(o, +1); }
  CyclotomicInt& operator-=(const CyclotomicInt& o) { return combine(o, -1); }

  CyclotomicInt& operator*=(const CyclotomicInt& o) {
    if (o.level_ != level_) {
      const int l = std::lcm(level_, o.level_);
      *this = promoted(l);
      return *this *= o.promoted(l);
    }
    std::vector<Integer> prod(coeffs_.size() + o.coeffs_.size(), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < o.coeffs_.size(); ++j) prod[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    assign_reduced(std::move(prod));
    return *this;
  }

  CyclotomicInt& scale_by_int(const Integer& m) {
    for (auto& c : coeffs_) c *= m;
    return *this;
  }

  friend CyclotomicInt operator+(CyclotomicInt a, const CyclotomicInt& b) { return a += b; }
  friend CyclotomicInt operator-(CyclotomicInt a, const CyclotomicInt& b) { return a -= b; }
  friend CyclotomicInt operator*(CyclotomicInt a, const CyclotomicInt& b) { return a *= b; }
  friend CyclotomicInt operator*(CyclotomicInt a, const Integer& m) { return a.scale_by_int(m); }
  friend CyclotomicInt operator*(const Integer& m, CyclotomicInt a) { return a.scale_by_int(m); }
  friend CyclotomicInt operator-(CyclotomicInt a) { return a.scale_by_int(-1); }

  /// Equality of complex values; elements of different levels are compared
  /// at the lcm of the levels.
  friend bool operator==(const CyclotomicInt& a, const CyclotomicInt& b) {
    if (a.level_ == b.level_) return a.coeffs_ == b.coeffs_;
    const int l = std::lcm(a.level_, b.level_);
    return a.promoted(l).coeffs_ == b.promoted(l).coeffs_;
  }

 private:
  CyclotomicInt& combine(const CyclotomicInt& o, int sign) {
    if (o.level_ != level_) {
      const int l = std::lcm(level_, o.level_);
      *this = promoted(l);
      return combine(o.promoted(l), sign);
    }
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (sign > 0) coeffs_[k] += o.coeffs_[k];
      else coeffs_[k] -= o.coeffs_[k];
    }
    return *this;
  }

  // Reduces an arbitrary polynomial modulo the (monic) cyclotomic polynomial.
  void assign_reduced(std::vector<Integer> poly) {
    const auto& m = *modulus_;
    const std::size_t deg = m.size() - 1;
    for (std::size_t i = poly.size(); i-- > deg;) {
      const Integer c = poly[i];
      if (c == 0) continue;
      for (std::size_t k = 0; k <= deg; ++k) poly[i - deg + k] -= c * m[k];
    }
    poly.resize(deg);
    coeffs_ = std::move(poly);
  }

  int level_;
  std::shared_ptr<const std::vector<Integer>> modulus_;
  std::vector<Integer> coeffs_;
};

/// Human-readable form such as "1 - z6^2" (terms in increasing exponent).
inline std::string to_string(const CyclotomicInt& x) {
  std::string out;
  const std::string z = "z" + std::to_string(x.level());
  for (std::size_t k = 0; k < x.coeffs().size(); ++k) {
    Integer c = x.coeffs()[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (out.empty()) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    const std::string mono = k == 0 ? "" : (k == 1 ? z : z + "^" + std::to_string(k));
    if (mono.empty()) out += c.str();
    else if (c == 1) out += mono;
    else out += c.str() + "*" + mono;
  }
  return out.empty() ? "0" : out;
}

inline std::ostream& operator<<(std::ostream& os, const CyclotomicInt& x) { return os << to_string(x); }

}  // namespace wreathchar

#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qf/numeric.hpp"

namespace qf {

// Element of the cyclotomic field Q(zeta_m), held as exact rational
// coordinates over the power basis 1, zeta_m, ..., zeta_m^(phi(m)-1).
// Coordinates are always reduced modulo the m-th cyclotomic polynomial,
// so equal elements at equal order have identical coordinate vectors.
// The declared order is kept as constructed and never auto-minimized;
// mixed-order arithmetic lifts both operands to the lcm order first.
class Cyclotomic {
 public:
  Cyclotomic() : order_(1), coeffs_(1, Rat(0)) {}

  static Cyclotomic zero(std::int64_t order = 1);
  static Cyclotomic one(std::int64_t order = 1);
  static Cyclotomic from_rational(const Rat& value, std::int64_t order = 1);
  // zeta_order^k (k may be any integer; it is reduced mod order).
  static Cyclotomic root_of_unity(std::int64_t order, std::int64_t k);
  // Coordinate vector of length phi(order) over the power basis.
  static Cyclotomic from_coords(std::int64_t order, std::vector<Rat> coords);

  std::int64_t order() const { return order_; }
  const std::vector<Rat>& coords() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;   // all coordinates beyond the constant vanish
  Rat rational_value() const; // requires is_rational()

  struct Integrality {
    bool algebraic_integer = false;
    bool rational = false;
    bool rational_integer = false;
  };
  Integrality integrality() const;

  // Re-expresses the element at a larger order; `target` must be a
  // multiple of order().
  Cyclotomic lifted(std::int64_t target) const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }

  // Field inverse; throws DivisionByZeroError on zero.
  Cyclotomic invert() const;
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
    return a * b.invert();
  }

  // Galois automorphism zeta_m -> zeta_m^k; k must be coprime to order().
  Cyclotomic galois(std::int64_t k) const;
  Cyclotomic conj() const { return galois(-1); }

  // Product of all Galois conjugates: the norm down to Q from Q(zeta_m)
  // at the declared order m.
  Rat absolute_norm() const;

  Cyclotomic pow(std::int64_t k) const;  // k >= 0

  // Equality lifts both sides to the common order.
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  // Canonical textual form, e.g. "1/2 + z5 - 3*z5^2". parse() accepts the
  // same grammar with unreduced exponents and repeated terms.
  std::string to_string() const;
  static Cyclotomic parse(std::string_view text);

  // Display-only numerical approximation. Never used on any decision path;
  // every call is counted so tests can assert that.
  std::complex<double> approx() const;

 private:
  Cyclotomic(std::int64_t order, std::vector<Rat> coeffs)
      : order_(order), coeffs_(std::move(coeffs)) {}

  std::int64_t order_;
  std::vector<Rat> coeffs_;
};

// Coefficients of the m-th cyclotomic polynomial, ascending degree, monic.
const std::vector<Int>& cyclotomic_polynomial(std::int64_t m);

// Total number of approx() evaluations in this process.
std::uint64_t approx_eval_count();
void reset_approx_eval_count();

}  // namespace qf

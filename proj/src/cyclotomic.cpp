#include "qf/cyclotomic.hpp"

#include <atomic>
#include <cctype>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>

#include "qf/errors.hpp"

namespace qf {

namespace {

std::atomic<std::uint64_t> g_approx_calls{0};

// Ascending-degree polynomial helpers over Rat. Vectors may carry trailing
// zeros; degree is tracked implicitly.

void trim(std::vector<Rat>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of p modulo a monic integer polynomial f (ascending coeffs).
std::vector<Rat> mod_monic(std::vector<Rat> p, const std::vector<Int>& f) {
  const auto deg_f = f.size() - 1;
  trim(p);
  while (p.size() > deg_f) {
    Rat lead = p.back();
    const auto shift = p.size() - 1 - deg_f;
    if (lead != 0)
      for (std::size_t i = 0; i < deg_f; ++i) p[shift + i] -= lead * Rat(f[i]);
    p.pop_back();
    trim(p);
  }
  return p;
}

std::vector<Rat> poly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Rat> out(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Exact division of integer polynomials (ascending), used to build the
// cyclotomic polynomials from x^m - 1.
std::vector<Int> poly_div_exact(std::vector<Int> num, const std::vector<Int>& den) {
  std::vector<Int> quot(num.size() - den.size() + 1, Int(0));
  for (auto i = static_cast<std::ptrdiff_t>(quot.size()) - 1; i >= 0; --i) {
    Int lead = num[i + den.size() - 1];
    if (lead % den.back() != 0) throw InternalError("cyclotomic polynomial division not exact");
    Int q = lead / den.back();
    quot[i] = q;
    if (q != 0)
      for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= q * den[j];
  }
  for (const auto& c : num)
    if (c != 0) throw InternalError("cyclotomic polynomial division left a remainder");
  return quot;
}

std::vector<Int> compute_cyclotomic_polynomial(std::int64_t m) {
  // (x^m - 1) divided by the cyclotomic polynomials of all proper divisors.
  std::vector<Int> num(m + 1, Int(0));
  num[0] = -1;
  num[m] = 1;
  for (auto d : divisors(m)) {
    if (d == m) continue;
    num = poly_div_exact(std::move(num), cyclotomic_polynomial(d));
  }
  return num;
}

std::vector<Rat> lift_poly(const std::vector<Rat>& coeffs, std::int64_t factor,
                           std::int64_t target_len) {
  std::vector<Rat> out(target_len, Rat(0));
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) out[i * factor] = coeffs[i];
  return out;
}

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(std::int64_t m) {
  if (m < 1) throw Error("cyclotomic_polynomial: order must be positive");
  static std::map<std::int64_t, std::vector<Int>> cache;
  static std::mutex mutex;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  auto poly = compute_cyclotomic_polynomial(m);
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(m, std::move(poly)).first->second;
}

Cyclotomic Cyclotomic::zero(std::int64_t order) {
  if (order < 1) throw Error("cyclotomic: order must be positive");
  return Cyclotomic(order, std::vector<Rat>(euler_phi(order), Rat(0)));
}

Cyclotomic Cyclotomic::one(std::int64_t order) { return from_rational(Rat(1), order); }

Cyclotomic Cyclotomic::from_rational(const Rat& value, std::int64_t order) {
  auto out = zero(order);
  out.coeffs_[0] = value;
  return out;
}

Cyclotomic Cyclotomic::root_of_unity(std::int64_t order, std::int64_t k) {
  auto out = zero(order);
  k = ((k % order) + order) % order;
  std::vector<Rat> poly(k + 1, Rat(0));
  poly[k] = 1;
  poly = mod_monic(std::move(poly), cyclotomic_polynomial(order));
  poly.resize(out.coeffs_.size(), Rat(0));
  out.coeffs_ = std::move(poly);
  return out;
}

Cyclotomic Cyclotomic::from_coords(std::int64_t order, std::vector<Rat> coords) {
  if (order < 1) throw Error("cyclotomic: order must be positive");
  if (static_cast<std::int64_t>(coords.size()) != euler_phi(order))
    throw Error("cyclotomic: coordinate vector must have length phi(order)");
  return Cyclotomic(order, std::move(coords));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rat Cyclotomic::rational_value() const {
  if (!is_rational()) throw Error("cyclotomic: value is not rational");
  return coeffs_[0];
}

Cyclotomic::Integrality Cyclotomic::integrality() const {
  Integrality result;
  result.algebraic_integer = true;
  for (const auto& c : coeffs_)
    if (!is_integer(c)) result.algebraic_integer = false;
  result.rational = is_rational();
  result.rational_integer = result.rational && is_integer(coeffs_[0]);
  return result;
}

Cyclotomic Cyclotomic::lifted(std::int64_t target) const {
  if (target == order_) return *this;
  if (target < order_ || target % order_ != 0)
    throw Error("cyclotomic: lift target must be a multiple of the order");
  auto poly = lift_poly(coeffs_, target / order_,
                        static_cast<std::int64_t>(coeffs_.size()) * (target / order_));
  poly = mod_monic(std::move(poly), cyclotomic_polynomial(target));
  poly.resize(euler_phi(target), Rat(0));
  return Cyclotomic(target, std::move(poly));
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  const auto m = std::lcm(order_, rhs.order_);
  *this = lifted(m);
  auto other = rhs.lifted(m);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) { return *this += -rhs; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
  const auto m = std::lcm(order_, rhs.order_);
  *this = lifted(m);
  auto other = rhs.lifted(m);
  auto poly = mod_monic(poly_mul(coeffs_, other.coeffs_), cyclotomic_polynomial(m));
  poly.resize(euler_phi(m), Rat(0));
  coeffs_ = std::move(poly);
  return *this;
}

Cyclotomic Cyclotomic::invert() const {
  if (is_zero()) throw DivisionByZeroError("cyclotomic: inverse of zero");
  // Extended Euclid in Q[x] against the (irreducible) cyclotomic polynomial:
  // s*a + t*Phi = r with r a nonzero constant, so 1/a = s/r.
  const auto& phi_int = cyclotomic_polynomial(order_);
  std::vector<Rat> r0(phi_int.begin(), phi_int.end());
  std::vector<Rat> r1 = coeffs_;
  trim(r1);
  std::vector<Rat> s0{}, s1{Rat(1)};
  while (r1.size() > 1) {
    // Divide r0 by r1.
    std::vector<Rat> q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, Rat(0));
    std::vector<Rat> rem = r0;
    for (auto i = static_cast<std::ptrdiff_t>(q.size()) - 1; i >= 0; --i) {
      if (rem.size() < r1.size() + i) continue;
      Rat factor = rem[i + r1.size() - 1] / r1.back();
      q[i] = factor;
      if (factor != 0)
        for (std::size_t j = 0; j < r1.size(); ++j) rem[i + j] -= factor * r1[j];
    }
    trim(rem);
    // s_next = s0 - q*s1
    auto qs = poly_mul(q, s1);
    std::vector<Rat> s_next(std::max(s0.size(), qs.size()), Rat(0));
    for (std::size_t i = 0; i < s0.size(); ++i) s_next[i] += s0[i];
    for (std::size_t i = 0; i < qs.size(); ++i) s_next[i] -= qs[i];
    trim(s_next);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s_next);
  }
  if (r1.empty()) throw InternalError("cyclotomic: gcd with irreducible modulus was not constant");
  Rat unit = r1[0];
  auto inv = s1;
  for (auto& c : inv) c /= unit;
  inv = mod_monic(std::move(inv), phi_int);
  inv.resize(coeffs_.size(), Rat(0));
  return Cyclotomic(order_, std::move(inv));
}

Cyclotomic Cyclotomic::galois(std::int64_t k) const {
  const auto m = order_;
  k = ((k % m) + m) % m;
  if (std::gcd(k, m) != 1)
    throw NotCoprimeError("galois: exponent " + std::to_string(k) +
                          " not coprime to order " + std::to_string(m));
  std::vector<Rat> poly(m, Rat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) poly[static_cast<std::int64_t>(i) * k % m] += coeffs_[i];
  poly = mod_monic(std::move(poly), cyclotomic_polynomial(m));
  poly.resize(coeffs_.size(), Rat(0));
  return Cyclotomic(m, std::move(poly));
}

Rat Cyclotomic::absolute_norm() const {
  Cyclotomic product = one(order_);
  for (std::int64_t k = 1; k <= order_; ++k) {
    if (std::gcd(k, order_) != 1) continue;
    product *= galois(k);
  }
  if (!product.is_rational()) throw InternalError("norm is not rational");
  return product.rational_value();
}

Cyclotomic Cyclotomic::pow(std::int64_t k) const {
  if (k < 0) throw Error("cyclotomic: negative power; use invert()");
  Cyclotomic result = one(order_);
  Cyclotomic base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  const auto m = std::lcm(a.order_, b.order_);
  return a.lifted(m).coeffs_ == b.lifted(m).coeffs_;
}

std::string Cyclotomic::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rat& c = coeffs_[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    Rat mag = negative ? Rat(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit_coeff = (mag == 1) && i > 0;
    if (!unit_coeff) out += format_rational(mag);
    if (i > 0) {
      if (!unit_coeff) out += "*";
      out += "z" + std::to_string(order_);
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

Cyclotomic Cyclotomic::parse(std::string_view text) {
  std::string s(text);
  std::erase(s, ' ');
  std::erase(s, '\t');
  if (s.empty()) throw ParseError("cyclotomic: empty literal");

  struct Term {
    Rat coeff;
    std::int64_t exponent = 0;  // in the root of unity; 0 for rational terms
    bool has_root = false;
  };
  std::vector<Term> terms;
  std::int64_t order = 0;  // 0 until a z{m} token fixes it

  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw ParseError("cyclotomic: " + why + " in '" + std::string(text) + "'");
  };
  auto read_integer = [&]() -> Int {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected digits");
    return Int(s.substr(start, pos - start));
  };

  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      if (s[pos] == '-') sign = -1;
      ++pos;
    } else if (!terms.empty()) {
      fail("expected '+' or '-' between terms");
    }
    if (pos >= s.size()) fail("dangling sign");

    Term term;
    term.coeff = Rat(sign);
    bool saw_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
      Int num = read_integer();
      Int den = 1;
      if (pos < s.size() && s[pos] == '/') {
        ++pos;
        den = read_integer();
        if (den <= 0) fail("nonpositive denominator");
      }
      term.coeff *= Rat(num, den);
      saw_coeff = true;
      if (pos < s.size() && s[pos] == '*') ++pos;
      else if (pos < s.size() && s[pos] == 'z') fail("missing '*' before root");
    }
    if (pos < s.size() && s[pos] == 'z') {
      ++pos;
      Int m = read_integer();
      if (m <= 0 || m > 1000000) fail("unsupported root order");
      auto m64 = m.convert_to<std::int64_t>();
      if (order == 0) order = m64;
      else if (order != m64) fail("mixed root orders");
      term.has_root = true;
      term.exponent = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        term.exponent = read_integer().convert_to<std::int64_t>();
      }
    } else if (!saw_coeff) {
      fail("expected coefficient or root");
    }
    terms.push_back(std::move(term));
  }

  if (order == 0) order = 1;
  std::vector<Rat> poly(order, Rat(0));
  for (const auto& term : terms) {
    std::int64_t e = term.has_root ? term.exponent % order : 0;
    poly[e] += term.coeff;
  }
  poly = mod_monic(std::move(poly), cyclotomic_polynomial(order));
  poly.resize(euler_phi(order), Rat(0));
  return Cyclotomic(order, std::move(poly));
}

std::complex<double> Cyclotomic::approx() const {
  g_approx_calls.fetch_add(1, std::memory_order_relaxed);
  const double angle = 2.0 * std::numbers::pi / static_cast<double>(order_);
  const std::complex<double> zeta = std::polar(1.0, angle);
  std::complex<double> acc{0.0, 0.0};
  for (auto i = static_cast<std::ptrdiff_t>(coeffs_.size()) - 1; i >= 0; --i)
    acc = acc * zeta + std::complex<double>(coeffs_[i].convert_to<double>(), 0.0);
  return acc;
}

std::uint64_t approx_eval_count() { return g_approx_calls.load(); }
void reset_approx_eval_count() { g_approx_calls.store(0); }

}  // namespace qf

#include "qf/numeric.hpp"

#include <algorithm>
#include <stdexcept>

#include "qf/errors.hpp"

namespace qf {

Int floor_div(const Int& a, const Int& b) {
  if (b == 0) throw DivisionByZeroError("floor_div by zero");
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Rat parse_rational(std::string_view text) {
  auto bad = [&] { throw ParseError("bad rational literal '" + std::string(text) + "'"); };
  std::string s(text);
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  if (s.empty()) bad();
  auto slash = s.find('/');
  auto check_int = [&](std::string_view part) {
    if (part.empty()) bad();
    std::size_t i = (part[0] == '+' || part[0] == '-') ? 1 : 0;
    if (i == part.size()) bad();
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') bad();
  };
  if (slash == std::string::npos) {
    check_int(s);
    return Rat(Int(s));
  }
  std::string num = s.substr(0, slash);
  std::string den = s.substr(slash + 1);
  check_int(num);
  check_int(den);
  Int d(den);
  if (d <= 0) bad();
  return Rat(Int(num), d);
}

std::string format_rational(const Rat& q) {
  std::string s = rat_num(q).str();
  if (rat_den(q) != 1) s += "/" + rat_den(q).str();
  return s;
}

std::int64_t euler_phi(std::int64_t m) {
  if (m <= 0) throw Error("euler_phi: argument must be positive");
  std::int64_t result = m;
  std::int64_t n = m;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      result -= result / p;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<std::int64_t> divisors(std::int64_t m) {
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= m; ++d) {
    if (m % d == 0) {
      small.push_back(d);
      if (d != m / d) large.push_back(m / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<std::int64_t> prime_factors(std::int64_t m) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      out.push_back(p);
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) out.push_back(m);
  return out;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t mod) {
  if (mod <= 0) throw Error("mod_pow: modulus must be positive");
  base %= mod;
  if (base < 0) base += mod;
  std::int64_t result = 1 % mod;
  while (exp > 0) {
    if (exp & 1) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t mod) {
  a %= mod;
  if (a < 0) a += mod;
  std::int64_t t = 0, new_t = 1, r = mod, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::swap(t -= q * new_t, new_t);
    std::swap(r -= q * new_r, new_r);
  }
  if (r != 1) throw DivisionByZeroError("mod_inverse: not invertible");
  return t < 0 ? t + mod : t;
}

std::int64_t smallest_primitive_root(std::int64_t p) {
  if (p == 2) return 1;
  auto factors = prime_factors(p - 1);
  for (std::int64_t r = 2; r < p; ++r) {
    bool ok = true;
    for (auto q : factors) {
      if (mod_pow(r, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return r;
  }
  throw InternalError("no primitive root found; modulus not prime?");
}

}  // namespace qf

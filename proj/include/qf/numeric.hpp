#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qf {

// Exact arbitrary-precision scalars. All decision paths run on these;
// floating point appears only in explicitly marked display helpers.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& q) { return numerator(q); }
inline Int rat_den(const Rat& q) { return denominator(q); }

inline bool is_integer(const Rat& q) { return denominator(q) == 1; }

// Floor division for Int (operator/ truncates toward zero).
Int floor_div(const Int& a, const Int& b);

// Parses "p" or "p/q" with optional sign; q must be positive.
Rat parse_rational(std::string_view text);

// Canonical form "p" or "p/q" with q > 1.
std::string format_rational(const Rat& q);

std::int64_t euler_phi(std::int64_t m);

// Divisors of m in ascending order.
std::vector<std::int64_t> divisors(std::int64_t m);

// Distinct prime factors in ascending order.
std::vector<std::int64_t> prime_factors(std::int64_t m);

bool is_prime(std::int64_t n);

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t mod);
std::int64_t mod_inverse(std::int64_t a, std::int64_t mod);

// Smallest primitive root modulo a prime p.
std::int64_t smallest_primitive_root(std::int64_t p);

}  // namespace qf

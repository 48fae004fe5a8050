#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace prodineq {

/// Parse "a" or "a/b" (base 10). Throws Errc::BadInput on malformed text or b = 0.
mpq_class parse_rational(const std::string& text);

/// Canonical "a" or "a/b" rendering, denominator always positive.
std::string rational_str(const mpq_class& v);

mpz_class floor_q(const mpq_class& v);
mpz_class ceil_q(const mpq_class& v);

/// lcm of the (positive) denominators of all values; 1 for an empty list.
mpz_class common_denominator(const std::vector<mpq_class>& values);

/// Divide two positive rationals by their greatest common rational factor.
/// The quotients are coprime positive integers: gcd(a,b) for a=n1/d1, b=n2/d2
/// is gcd(n1*d2, n2*d1)/(d1*d2).
std::pair<mpz_class, mpz_class> reduced_pair(const mpq_class& a, const mpq_class& b);

/// Minimal-denominator rational strictly inside the open interval (lo, hi),
/// hi omitted meaning +infinity. Stern-Brocot / continued-fraction walk.
mpq_class simplest_in(const mpq_class& lo, const std::optional<mpq_class>& hi);

/// Exact k-th root of a positive rational, if one exists.
std::optional<mpq_class> exact_root(const mpq_class& x, unsigned long k);

/// base^e for a non-negative integer exponent.
mpq_class pow_rational(const mpq_class& base, const mpz_class& e);

}  // namespace prodineq

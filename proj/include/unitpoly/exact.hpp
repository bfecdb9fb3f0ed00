#pragma once

// Exact integer and rational primitives.
//
// Integer and Rational are thin aliases over GMP's C++ classes. Every
// Rational produced by this library is kept in canonical form: positive
// denominator, numerator and denominator coprime.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace unitpoly {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when an operation is called outside its domain. The message names
/// the violated condition.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// p/q in canonical form. Throws PreconditionError on q == 0.
Rational make_rational(const Integer& p, const Integer& q = 1);

bool is_integral(const Rational& q);

/// gcd(a, b) >= 0, with gcd(0, 0) == 0.
Integer gcd(const Integer& a, const Integer& b);

struct BezoutResult {
    Integer g;
    Integer u;
    Integer v;
};

/// g = gcd(a, b) together with u, v such that u*a + v*b == g.
/// When a divides b the trivial pair (sign(a), 0) is returned.
BezoutResult extended_gcd(const Integer& a, const Integer& b);

/// Ascending positive divisors of n >= 1 (trial division).
std::vector<Integer> divisors(const Integer& n);

/// Deterministic primality by trial division up to sqrt(n).
bool is_prime(const Integer& n);

/// Primes p with 2 <= p <= bound, ascending.
std::vector<Integer> primes_up_to(const Integer& bound);

/// Exhaustive: is there w in [0, n) with w^2 == a (mod n)? O(n), demo use only.
bool is_quadratic_residue(const Integer& a, const Integer& n);

/// Non-negative remainder of a modulo n > 0.
Integer mod_floor(const Integer& a, const Integer& n);

std::string to_string(const Integer& v);

/// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& v);

/// Parses an optionally signed decimal integer. Rejects whitespace, empty
/// input and anything else GMP would silently accept (leading '+', hex).
Integer parse_integer(std::string_view text);

/// Parses "p" or "p/q" and canonicalizes. q must be a positive decimal.
Rational parse_rational(std::string_view text);

}  // namespace unitpoly

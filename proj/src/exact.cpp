#include "unitpoly/exact.hpp"

#include <algorithm>

namespace unitpoly {

Rational make_rational(const Integer& p, const Integer& q) {
    if (q == 0) {
        throw PreconditionError("rational with zero denominator");
    }
    Rational r(p, q);
    r.canonicalize();
    return r;
}

bool is_integral(const Rational& q) { return q.get_den() == 1; }

Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

namespace {

BezoutResult euclid(const Integer& a, const Integer& b) {
    // a, b >= 0, not both zero
    if (b == 0) {
        return {a, 1, 0};
    }
    Integer q = a / b;
    Integer r = a - q * b;
    BezoutResult inner = euclid(b, r);
    return {inner.g, inner.v, inner.u - q * inner.v};
}

}  // namespace

BezoutResult extended_gcd(const Integer& a, const Integer& b) {
    if (a == 0 && b == 0) {
        throw PreconditionError("extended_gcd: both arguments are zero");
    }
    const int sa = sgn(a);
    const int sb = sgn(b);
    const Integer abs_a = abs(a);
    const Integer abs_b = abs(b);
    if (a != 0 && abs_b % abs_a == 0) {
        return {abs_a, sa, 0};
    }
    BezoutResult res = euclid(abs_a, abs_b);
    if (sa < 0) {
        res.u = -res.u;
    }
    if (sb < 0) {
        res.v = -res.v;
    }
    return res;
}

std::vector<Integer> divisors(const Integer& n) {
    if (n <= 0) {
        throw PreconditionError("divisors: n must be >= 1, got " + to_string(n));
    }
    std::vector<Integer> low;
    std::vector<Integer> high;
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            low.push_back(d);
            Integer co = n / d;
            if (co != d) {
                high.push_back(co);
            }
        }
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

bool is_prime(const Integer& n) {
    if (n < 2) {
        return false;
    }
    if (n < 4) {
        return true;
    }
    if (n % 2 == 0) {
        return false;
    }
    for (Integer d = 3; d * d <= n; d += 2) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

std::vector<Integer> primes_up_to(const Integer& bound) {
    std::vector<Integer> out;
    for (Integer p = 2; p <= bound; ++p) {
        if (is_prime(p)) {
            out.push_back(p);
        }
    }
    return out;
}

bool is_quadratic_residue(const Integer& a, const Integer& n) {
    if (n < 2) {
        throw PreconditionError("is_quadratic_residue: modulus must be >= 2");
    }
    const Integer target = mod_floor(a, n);
    for (Integer w = 0; w < n; ++w) {
        if ((w * w) % n == target) {
            return true;
        }
    }
    return false;
}

Integer mod_floor(const Integer& a, const Integer& n) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
    return r;
}

std::string to_string(const Integer& v) { return v.get_str(); }

std::string to_string(const Rational& v) {
    if (v.get_den() == 1) {
        return v.get_num().get_str();
    }
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

Integer parse_integer(std::string_view text) {
    std::string_view digits = text;
    if (!digits.empty() && digits.front() == '-') {
        digits.remove_prefix(1);
    }
    if (!all_digits(digits)) {
        throw PreconditionError("not an integer: '" + std::string(text) + "'");
    }
    return Integer(std::string(text), 10);
}

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text));
    }
    const std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) {
        throw PreconditionError("bad denominator in '" + std::string(text) + "'");
    }
    Integer num = parse_integer(text.substr(0, slash));
    Integer den(std::string(den_text), 10);
    if (den == 0) {
        throw PreconditionError("zero denominator in '" + std::string(text) + "'");
    }
    return make_rational(num, den);
}

}  // namespace unitpoly

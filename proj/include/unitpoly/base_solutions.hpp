#pragma once

// Positive-integer solutions of m/n0 = 1/a + 1/b + 1/c.

#include "unitpoly/exact.hpp"

#include <array>
#include <compare>
#include <vector>

namespace unitpoly {

/// Unordered triple stored as a <= b <= c.
struct BaseTriple {
    Integer a;
    Integer b;
    Integer c;

    [[nodiscard]] bool contains(const Integer& v) const { return a == v || b == v || c == v; }

    friend bool operator==(const BaseTriple& l, const BaseTriple& r) {
        return l.a == r.a && l.b == r.b && l.c == r.c;
    }
    friend bool operator<(const BaseTriple& l, const BaseTriple& r) {
        if (l.a != r.a) return l.a < r.a;
        if (l.b != r.b) return l.b < r.b;
        return l.c < r.c;
    }
};

/// Sorts three values into canonical form.
BaseTriple make_base_triple(Integer x, Integer y, Integer z);

/// 1/a + 1/b + 1/c == m/n0, checked with rational arithmetic.
bool solves_unit_equation(const Integer& m, const Integer& n0, const Integer& a, const Integer& b,
                          const Integer& c);

/// Every unordered triple with 1/a+1/b+1/c = m/n0, sorted ascending.
/// For each a with n0/m < a <= 3*n0/m the remainder m/n0 - 1/a = P/Q is split
/// over Q/P < b <= 2Q/P and c = Q*b/(P*b - Q) is kept when integral.
/// Parallel over a (OpenMP); output is identical to the serial reference.
std::vector<BaseTriple> enumerate_base_solutions(const Integer& m, const Integer& n0);

/// The subset of enumerate_base_solutions(m, n0) containing `member`.
/// Computed directly from the two-term remainder m/n0 - 1/member.
std::vector<BaseTriple> triples_with_member(const Integer& m, const Integer& n0, const Integer& member);

/// Distinct orderings of a triple's members, lexicographic.
std::vector<std::array<Integer, 3>> role_assignments(const BaseTriple& t);

namespace serial {

std::vector<BaseTriple> enumerate_base_solutions(const Integer& m, const Integer& n0);

}  // namespace serial

}  // namespace unitpoly

#pragma once

// Integer polynomial solutions of m/(n0 + n1*lambda) = 1/x + 1/y + 1/z when
// gcd(n0, n1) = 1 and gcd(n1, m) = 1.
//
// Any such solution has the shape
//
//     x = k*n,   y = n*(s + r*lambda),   z = (k*l/r)*(s + r*lambda)
//
// with n = n0 + n1*lambda and positive integers k, l, s, r satisfying
//
//     (i)   n1 = l*(m*k - 1)
//     (ii)  s*n1 = k*l + r*n0
//     (iii) r divides s*k*l.
//
// decide() is a complete procedure: x0 = k*n0, y0 = s*n0 and z0 = k*l*s/r
// solve the lambda = 0 equation, so every parameter set corresponds to a
// base triple and the finite base enumeration certifies "unsolvable".

#include "unitpoly/base_solutions.hpp"
#include "unitpoly/exact.hpp"
#include "unitpoly/qpoly.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace unitpoly {

class ResidueClass {
public:
    /// Validates m >= 4, n0 >= 1, n1 >= 2, gcd(n0, n1) = 1, gcd(n1, m) = 1.
    static ResidueClass make(Integer m, Integer n0, Integer n1);
    /// Reduces n0 modulo n1 first, so n = 20 (mod 19) becomes n0 = 1.
    static ResidueClass canonical(Integer m, Integer n0, Integer n1);

    [[nodiscard]] const Integer& m() const noexcept { return m_; }
    [[nodiscard]] const Integer& n0() const noexcept { return n0_; }
    [[nodiscard]] const Integer& n1() const noexcept { return n1_; }
    /// n0 + n1*lambda
    [[nodiscard]] RationalPoly n_poly() const;

    friend bool operator==(const ResidueClass&, const ResidueClass&) = default;

private:
    ResidueClass(Integer m, Integer n0, Integer n1) : m_(std::move(m)), n0_(std::move(n0)), n1_(std::move(n1)) {}

    Integer m_;
    Integer n0_;
    Integer n1_;
};

struct KL {
    Integer k;
    Integer l;
    friend bool operator==(const KL&, const KL&) = default;
};

struct ParamSet {
    Integer k;
    Integer l;
    Integer s;
    Integer r;
    friend bool operator==(const ParamSet&, const ParamSet&) = default;
};

/// All condition-ii solutions for one (k, l): s = s0 + n0*t, r = r0 + n1*t.
struct ParamFamily {
    Integer k;
    Integer l;
    Integer s0;  // minimal, in [1, n0]
    Integer r0;  // may be <= 0
    Integer n0;
    Integer n1;

    [[nodiscard]] Integer s_at(const Integer& t) const { return s0 + n0 * t; }
    [[nodiscard]] Integer r_at(const Integer& t) const { return r0 + n1 * t; }
    /// "s=5+7t, r=13+19t"
    [[nodiscard]] std::string describe() const;
};

struct PolyTriple {
    RationalPoly x;
    RationalPoly y;
    RationalPoly z;
    friend bool operator==(const PolyTriple&, const PolyTriple&) = default;
};

/// Condition i): pairs with l*(m*k - 1) = n1, l ascending.
std::vector<KL> enumerate_kl(const Integer& m, const Integer& n1);

ParamFamily solve_condition_ii(const ResidueClass& rc, const Integer& k, const Integer& l);

/// r divides s*k*l (positivity of all four is required separately).
bool condition_iii_holds(const ParamSet& ps);

/// Conditions i)-iii) plus positivity of k, l, s, r.
bool satisfies_conditions(const ResidueClass& rc, const ParamSet& ps);

/// Smallest t in [0, t_max] giving s >= 1, r >= 1 and r | s*k*l.
/// A semi-decision: absence only covers the searched range.
std::optional<ParamSet> search_condition_iii(const ParamFamily& fam, const Integer& t_max);

/// Every t in [0, t_max] that passes, ascending in t.
std::vector<ParamSet> all_condition_iii(const ParamFamily& fam, const Integer& t_max);

PolyTriple construct_solution(const ResidueClass& rc, const ParamSet& ps);

struct IdentityReport {
    bool nonzero = false;
    bool identity = false;
    bool integral = false;
    bool sampled = false;        // rational evaluation at lambda = 0..10 agrees
    RationalPoly residual;       // m*x*y*z - n*(x*y + x*z + y*z)
    [[nodiscard]] bool verified() const { return nonzero && identity && integral && sampled; }
};

IdentityReport check_identity(const ResidueClass& rc, const PolyTriple& pt);

/// Exact identity m*x*y*z == n*(x*y + x*z + y*z), cross-checked by
/// evaluation, with every polynomial positive-integral.
bool verify_identity(const ResidueClass& rc, const PolyTriple& pt);

/// Rational identity only; no integrality requirement.
bool satisfies_rational_identity(const ResidueClass& rc, const PolyTriple& pt);

struct DegreeReport {
    std::array<std::size_t, 3> sorted{};  // ascending
    /// Degree of X = m*z*x - n*(x + z) with y the highest-degree member;
    /// empty when X vanishes.
    std::optional<std::size_t> aux_degree;
    [[nodiscard]] bool is_theorem_pattern() const {
        return sorted == std::array<std::size_t, 3>{1, 1, 2} && aux_degree == std::size_t{1};
    }
};

/// Requires verify_identity(rc, pt).
DegreeReport analyze_degrees(const ResidueClass& rc, const PolyTriple& pt);

struct Solution {
    ParamSet params;
    PolyTriple triple;
    friend bool operator==(const Solution&, const Solution&) = default;
};

enum class KLVerdict {
    accepted,
    no_base_triple_with_x0,   // no base triple of m/n0 contains k*n0
    no_y0_multiple_of_n0,     // a triple contains k*n0 but no other member is a multiple of n0
    condition_ii_not_positive,// every candidate y0 gives r <= 0 or non-integral r
    condition_iii_fails,      // r positive but r*z0 != k*l*s
};

std::string to_string(KLVerdict v);

struct KLEvidence {
    KL kl;
    ParamFamily family;
    std::size_t triples_with_x0 = 0;
    KLVerdict verdict = KLVerdict::no_base_triple_with_x0;
};

enum class Status { solvable, unsolvable };

std::string to_string(Status s);

struct DecisionOutcome {
    ResidueClass rc;
    Status status = Status::unsolvable;
    std::vector<Solution> solutions{};  // sorted by (l, k, s, r)
    std::vector<KLEvidence> evidence{}; // one record per (k, l)
    bool condition_i_fails = false;   // enumerate_kl was empty
};

DecisionOutcome decide(const ResidueClass& rc);

}  // namespace unitpoly

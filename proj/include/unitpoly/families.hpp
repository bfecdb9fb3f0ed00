#pragma once

// The two rational solution families built from a base triple (x0, y0, z0)
// of m/n0, and the discriminant identity that rules out the (1,1,3) pattern.
//
// plus:  x = x0*(1 + (n1/n0)λ)
//        z = z0 + (n1/n0)*y0*z0/(y0+z0) λ
//        y = y0 + y0*(n1/n0)*(1 + y0/(y0+z0)) λ + (y0*n1/n0)^2/(y0+z0) λ^2
// minus: x = x0 + (n1/m)*(x0+z0)/z0 λ
//        z = z0 + (n1/m)*(x0+z0)/x0 λ
//        y = y0 + (2*y0*n1/n0 - n1/m) λ + (n1/n0)*(y0*n1/n0 - n1/m) λ^2

#include "unitpoly/exact.hpp"
#include "unitpoly/theorem.hpp"

namespace unitpoly {

/// An ordered assignment of base members to the roles x0, y0, z0.
struct RoleTriple {
    Integer x0;
    Integer y0;
    Integer z0;
};

/// Throws PreconditionError unless all are positive and 1/x0+1/y0+1/z0 = m/n0.
void require_role_triple(const Integer& m, const Integer& n0, const RoleTriple& rt);

enum class Branch { plus, minus };

std::string to_string(Branch b);

struct FamilySolution {
    Branch branch = Branch::plus;
    PolyTriple triple;
    bool integral = false;
    /// y came out with degree < 2 (cancellation of the λ^2 term).
    bool degenerate = false;
};

FamilySolution plus_family(const ResidueClass& rc, const RoleTriple& rt);
FamilySolution minus_family(const ResidueClass& rc, const RoleTriple& rt);
FamilySolution build_family(const ResidueClass& rc, const RoleTriple& rt, Branch branch);

struct DiscriminantReport {
    Integer xbar0;  // m*x0 - n0
    Integer zbar0;  // m*z0 - n0
    Integer lhs;    // n0^2 - xbar0*zbar0
    Rational rhs;   // -m*n0*x0*z0/y0
    [[nodiscard]] bool holds() const { return Rational(lhs) == rhs && lhs < 0; }
};

DiscriminantReport discriminant_identity(const Integer& m, const Integer& n0, const RoleTriple& rt);
DiscriminantReport discriminant_identity(const ResidueClass& rc, const RoleTriple& rt);

}  // namespace unitpoly

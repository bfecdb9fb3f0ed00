#include "unitpoly/families.hpp"

namespace unitpoly {

void require_role_triple(const Integer& m, const Integer& n0, const RoleTriple& rt) {
    if (rt.x0 < 1 || rt.y0 < 1 || rt.z0 < 1) {
        throw PreconditionError("role triple members must be positive");
    }
    if (!solves_unit_equation(m, n0, rt.x0, rt.y0, rt.z0)) {
        throw PreconditionError("1/" + to_string(rt.x0) + " + 1/" + to_string(rt.y0) + " + 1/" +
                                to_string(rt.z0) + " != " + to_string(m) + "/" + to_string(n0));
    }
}

std::string to_string(Branch b) { return b == Branch::plus ? "plus" : "minus"; }

namespace {

FamilySolution finish(Branch branch, PolyTriple pt) {
    FamilySolution fs{branch, std::move(pt)};
    fs.integral = is_positive_integral(fs.triple.x) && is_positive_integral(fs.triple.y) &&
                  is_positive_integral(fs.triple.z);
    fs.degenerate = fs.triple.y.degree().value_or(0) < 2;
    return fs;
}

}  // namespace

FamilySolution plus_family(const ResidueClass& rc, const RoleTriple& rt) {
    require_role_triple(rc.m(), rc.n0(), rt);
    const Rational x0(rt.x0), y0(rt.y0), z0(rt.z0);
    const Rational ratio = make_rational(rc.n1(), rc.n0());
    const Rational yz = y0 + z0;
    const Rational y_scaled = y0 * ratio;

    PolyTriple pt{
        RationalPoly::linear(x0, x0 * ratio),
        RationalPoly({y0, Rational(y_scaled * (1 + y0 / yz)), Rational(y_scaled * y_scaled / yz)}),
        RationalPoly::linear(z0, Rational(ratio * y0 * z0 / yz)),
    };
    return finish(Branch::plus, std::move(pt));
}

FamilySolution minus_family(const ResidueClass& rc, const RoleTriple& rt) {
    require_role_triple(rc.m(), rc.n0(), rt);
    const Rational x0(rt.x0), y0(rt.y0), z0(rt.z0);
    const Rational over_m = make_rational(rc.n1(), rc.m());
    const Rational ratio = make_rational(rc.n1(), rc.n0());
    const Rational xz = x0 + z0;

    PolyTriple pt{
        RationalPoly::linear(x0, Rational(over_m * xz / z0)),
        RationalPoly({y0, Rational(2 * y0 * ratio - over_m), Rational(ratio * (y0 * ratio - over_m))}),
        RationalPoly::linear(z0, Rational(over_m * xz / x0)),
    };
    return finish(Branch::minus, std::move(pt));
}

FamilySolution build_family(const ResidueClass& rc, const RoleTriple& rt, Branch branch) {
    return branch == Branch::plus ? plus_family(rc, rt) : minus_family(rc, rt);
}

DiscriminantReport discriminant_identity(const Integer& m, const Integer& n0, const RoleTriple& rt) {
    require_role_triple(m, n0, rt);
    DiscriminantReport rep;
    rep.xbar0 = m * rt.x0 - n0;
    rep.zbar0 = m * rt.z0 - n0;
    rep.lhs = n0 * n0 - rep.xbar0 * rep.zbar0;
    rep.rhs = make_rational(-m * n0 * rt.x0 * rt.z0, rt.y0);
    return rep;
}

DiscriminantReport discriminant_identity(const ResidueClass& rc, const RoleTriple& rt) {
    return discriminant_identity(rc.m(), rc.n0(), rt);
}

}  // namespace unitpoly

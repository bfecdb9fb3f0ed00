#include "unitpoly/theorem.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace unitpoly {

namespace {

void require_kl_domain(const Integer& m, const Integer& n1) {
    if (m < 4) {
        throw PreconditionError("m must be >= 4, got " + to_string(m));
    }
    if (n1 < 2) {
        throw PreconditionError("n1 must be >= 2, got " + to_string(n1));
    }
    if (gcd(n1, m) != 1) {
        throw PreconditionError("gcd(n1, m) = " + to_string(gcd(n1, m)) + ", must be 1");
    }
}

std::string signed_term(const Integer& c, const Integer& step) {
    return to_string(c) + "+" + to_string(step) + "t";
}

}  // namespace

ResidueClass ResidueClass::make(Integer m, Integer n0, Integer n1) {
    require_kl_domain(m, n1);
    if (n0 < 1) {
        throw PreconditionError("n0 must be >= 1, got " + to_string(n0));
    }
    if (gcd(n0, n1) != 1) {
        throw PreconditionError("gcd(n0, n1) = " + to_string(gcd(n0, n1)) + ", must be 1");
    }
    return ResidueClass(std::move(m), std::move(n0), std::move(n1));
}

ResidueClass ResidueClass::canonical(Integer m, Integer n0, Integer n1) {
    if (n1 < 2) {
        throw PreconditionError("n1 must be >= 2, got " + to_string(n1));
    }
    Integer reduced = mod_floor(n0, n1);
    return make(std::move(m), std::move(reduced), std::move(n1));
}

RationalPoly ResidueClass::n_poly() const { return RationalPoly::linear(Rational(n0_), Rational(n1_)); }

std::string ParamFamily::describe() const {
    return "s=" + signed_term(s0, n0) + ", r=" + signed_term(r0, n1);
}

std::vector<KL> enumerate_kl(const Integer& m, const Integer& n1) {
    require_kl_domain(m, n1);
    std::vector<KL> out;
    for (const Integer& l : divisors(n1)) {
        const Integer d = n1 / l;
        if ((d + 1) % m == 0) {
            out.push_back({Integer((d + 1) / m), l});
        }
    }
    return out;
}

ParamFamily solve_condition_ii(const ResidueClass& rc, const Integer& k, const Integer& l) {
    if (k < 1 || l < 1 || l * (rc.m() * k - 1) != rc.n1()) {
        throw PreconditionError("(k, l) = (" + to_string(k) + ", " + to_string(l) +
                                ") does not satisfy n1 = l*(m*k - 1)");
    }
    const Integer kl = k * l;
    const Integer& n0 = rc.n0();
    const Integer& n1 = rc.n1();
    Integer s0 = 1;
    if (n0 > 1) {
        // s0 = kl * n1^{-1} (mod n0), lifted into [1, n0]
        const Integer inverse = extended_gcd(mod_floor(n1, n0), n0).u;
        s0 = mod_floor(kl * inverse, n0);
        if (s0 == 0) {
            s0 = n0;
        }
    }
    const Integer numer = s0 * n1 - kl;
    if (numer % n0 != 0) {
        throw std::logic_error("solve_condition_ii: modular inverse produced a non-solution");
    }
    return {k, l, s0, Integer(numer / n0), n0, n1};
}

bool condition_iii_holds(const ParamSet& ps) {
    if (ps.r == 0) {
        return false;
    }
    return (ps.s * ps.k * ps.l) % ps.r == 0;
}

bool satisfies_conditions(const ResidueClass& rc, const ParamSet& ps) {
    if (ps.k < 1 || ps.l < 1 || ps.s < 1 || ps.r < 1) {
        return false;
    }
    return rc.n1() == ps.l * (rc.m() * ps.k - 1) && ps.s * rc.n1() == ps.k * ps.l + ps.r * rc.n0() &&
           condition_iii_holds(ps);
}

namespace {

Integer first_admissible_t(const ParamFamily& fam) {
    // r0 + n1*t >= 1 and s0 + n0*t >= 1
    Integer t = 0;
    if (fam.r0 < 1) {
        Integer need = 1 - fam.r0;
        mpz_cdiv_q(t.get_mpz_t(), need.get_mpz_t(), fam.n1.get_mpz_t());
    }
    if (fam.s0 < 1) {
        Integer need = 1 - fam.s0;
        Integer ts;
        mpz_cdiv_q(ts.get_mpz_t(), need.get_mpz_t(), fam.n0.get_mpz_t());
        t = std::max(t, ts);
    }
    return t;
}

template <class Visit>
void walk_family(const ParamFamily& fam, const Integer& t_max, Visit&& visit) {
    if (t_max < 0) {
        throw PreconditionError("t_max must be >= 0, got " + to_string(t_max));
    }
    for (Integer t = first_admissible_t(fam); t <= t_max; ++t) {
        ParamSet ps{fam.k, fam.l, fam.s_at(t), fam.r_at(t)};
        if (condition_iii_holds(ps) && !visit(std::move(ps))) {
            return;
        }
    }
}

}  // namespace

std::optional<ParamSet> search_condition_iii(const ParamFamily& fam, const Integer& t_max) {
    std::optional<ParamSet> found;
    walk_family(fam, t_max, [&](ParamSet ps) {
        found = std::move(ps);
        return false;
    });
    return found;
}

std::vector<ParamSet> all_condition_iii(const ParamFamily& fam, const Integer& t_max) {
    std::vector<ParamSet> out;
    walk_family(fam, t_max, [&](ParamSet ps) {
        out.push_back(std::move(ps));
        return true;
    });
    return out;
}

PolyTriple construct_solution(const ResidueClass& rc, const ParamSet& ps) {
    if (ps.k < 1 || ps.l < 1 || ps.s < 1 || ps.r < 1) {
        throw PreconditionError("parameters k, l, s, r must be positive");
    }
    if (rc.n1() != ps.l * (rc.m() * ps.k - 1)) {
        throw PreconditionError("condition i) fails: n1 != l*(m*k - 1)");
    }
    if (ps.s * rc.n1() != ps.k * ps.l + ps.r * rc.n0()) {
        throw PreconditionError("condition ii) fails: s*n1 != k*l + r*n0");
    }
    if (!condition_iii_holds(ps)) {
        throw PreconditionError("condition iii) fails: r does not divide s*k*l");
    }
    const RationalPoly n = rc.n_poly();
    const Integer kl = ps.k * ps.l;
    const RationalPoly shifted = RationalPoly::linear(Rational(ps.s), Rational(ps.r));
    PolyTriple pt{
        n * Rational(ps.k),
        n * shifted,
        RationalPoly::linear(Rational(Integer(kl * ps.s / ps.r)), Rational(kl)),
    };
    if (!verify_identity(rc, pt)) {
        throw std::logic_error("construct_solution: produced triple fails the identity");
    }
    return pt;
}

IdentityReport check_identity(const ResidueClass& rc, const PolyTriple& pt) {
    IdentityReport rep;
    rep.nonzero = !pt.x.is_zero() && !pt.y.is_zero() && !pt.z.is_zero();
    rep.integral = is_positive_integral(pt.x) && is_positive_integral(pt.y) && is_positive_integral(pt.z);
    const RationalPoly n = rc.n_poly();
    const Rational m(rc.m());
    const RationalPoly xy = pt.x * pt.y;
    rep.residual = (xy * pt.z) * m - n * (xy + pt.x * pt.z + pt.y * pt.z);
    rep.identity = rep.nonzero && rep.residual.is_zero();
    if (!rep.nonzero) {
        return rep;
    }
    rep.sampled = true;
    for (int lambda = 0; lambda <= 10; ++lambda) {
        const Rational at(lambda);
        const Rational vx = eval(pt.x, at);
        const Rational vy = eval(pt.y, at);
        const Rational vz = eval(pt.z, at);
        if (vx == 0 || vy == 0 || vz == 0) {
            continue;
        }
        const Rational lhs = m / eval(n, at);
        const Rational rhs = 1 / vx + 1 / vy + 1 / vz;
        if (lhs != rhs) {
            rep.sampled = false;
            break;
        }
    }
    return rep;
}

bool verify_identity(const ResidueClass& rc, const PolyTriple& pt) { return check_identity(rc, pt).verified(); }

bool satisfies_rational_identity(const ResidueClass& rc, const PolyTriple& pt) {
    const IdentityReport rep = check_identity(rc, pt);
    return rep.identity && rep.sampled;
}

DegreeReport analyze_degrees(const ResidueClass& rc, const PolyTriple& pt) {
    if (!verify_identity(rc, pt)) {
        throw PreconditionError("analyze_degrees: triple does not verify");
    }
    std::array<const RationalPoly*, 3> polys{&pt.x, &pt.y, &pt.z};
    std::array<std::size_t, 3> deg{*pt.x.degree(), *pt.y.degree(), *pt.z.degree()};
    // y is the highest-degree member; prefer the given y on ties.
    std::size_t yi = 1;
    for (std::size_t i = 0; i < 3; ++i) {
        if (deg[i] > deg[yi]) {
            yi = i;
        }
    }
    const RationalPoly& a = *polys[(yi + 1) % 3];
    const RationalPoly& b = *polys[(yi + 2) % 3];
    const RationalPoly aux = a * b * Rational(rc.m()) - rc.n_poly() * (a + b);

    DegreeReport rep;
    rep.sorted = deg;
    std::sort(rep.sorted.begin(), rep.sorted.end());
    rep.aux_degree = aux.degree();
    return rep;
}

std::string to_string(KLVerdict v) {
    switch (v) {
        case KLVerdict::accepted: return "accepted";
        case KLVerdict::no_base_triple_with_x0: return "no_base_triple_with_x0";
        case KLVerdict::no_y0_multiple_of_n0: return "no_y0_multiple_of_n0";
        case KLVerdict::condition_ii_not_positive: return "condition_ii_not_positive";
        case KLVerdict::condition_iii_fails: return "condition_iii_fails";
    }
    return "unknown";
}

std::string to_string(Status s) { return s == Status::solvable ? "solvable" : "unsolvable"; }

DecisionOutcome decide(const ResidueClass& rc) {
    const Integer& m = rc.m();
    const Integer& n0 = rc.n0();
    const Integer& n1 = rc.n1();
    DecisionOutcome out{rc};
    const std::vector<KL> pairs = enumerate_kl(m, n1);
    out.condition_i_fails = pairs.empty();

    for (const KL& kl : pairs) {
        KLEvidence ev{kl, solve_condition_ii(rc, kl.k, kl.l)};
        const Integer x0 = kl.k * n0;
        const Integer klp = kl.k * kl.l;
        const std::vector<BaseTriple> triples = triples_with_member(m, n0, x0);
        ev.triples_with_x0 = triples.size();

        // Furthest stage reached across all role assignments.
        int stage = triples.empty() ? 0 : 1;
        for (const BaseTriple& t : triples) {
            for (const auto& roles : role_assignments(t)) {
                const Integer& cand_x = roles[0];
                const Integer& cand_y = roles[1];
                const Integer& cand_z = roles[2];
                if (cand_x != x0 || cand_y % n0 != 0) {
                    continue;
                }
                stage = std::max(stage, 2);
                const Integer s = cand_y / n0;
                const Integer numer = s * n1 - klp;
                if (numer % n0 != 0 || numer <= 0) {
                    continue;
                }
                stage = std::max(stage, 3);
                const Integer r = numer / n0;
                if (r * cand_z != klp * s) {
                    continue;
                }
                stage = 4;
                ParamSet ps{kl.k, kl.l, s, r};
                PolyTriple pt = construct_solution(rc, ps);
                if (!analyze_degrees(rc, pt).is_theorem_pattern()) {
                    throw std::logic_error("decide: emitted solution is not of degree pattern {1,1,2}");
                }
                out.solutions.push_back({std::move(ps), std::move(pt)});
            }
        }
        static constexpr KLVerdict by_stage[] = {
            KLVerdict::no_base_triple_with_x0, KLVerdict::no_y0_multiple_of_n0,
            KLVerdict::condition_ii_not_positive, KLVerdict::condition_iii_fails, KLVerdict::accepted};
        ev.verdict = by_stage[stage];
        out.evidence.push_back(std::move(ev));
    }

    auto key = [](const Solution& s) {
        return std::tie(s.params.l, s.params.k, s.params.s, s.params.r);
    };
    std::sort(out.solutions.begin(), out.solutions.end(),
              [&](const Solution& a, const Solution& b) { return key(a) < key(b); });
    out.solutions.erase(std::unique(out.solutions.begin(), out.solutions.end(),
                                    [](const Solution& a, const Solution& b) { return a.triple == b.triple; }),
                        out.solutions.end());
    out.status = out.solutions.empty() ? Status::unsolvable : Status::solvable;
    return out;
}

}  // namespace unitpoly

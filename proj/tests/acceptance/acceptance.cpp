// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "unitpoly/cli.hpp"
#include "unitpoly/families.hpp"
#include "unitpoly/scan_audit.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

using namespace unitpoly;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

// Records the first failure only; later checks keep running but do not overwrite it.
struct Checker {
    Outcome out;
    std::size_t checks = 0;

    void expect(bool cond, const std::string& what) {
        ++checks;
        if (!cond && out.ok) {
            out.ok = false;
            out.detail = what;
        }
    }
};

RationalPoly ints(std::initializer_list<long> cs) {
    std::vector<Rational> v;
    for (long c : cs) v.emplace_back(c);
    return RationalPoly(std::move(v));
}

std::string inst(const Integer& m, const Integer& n0, const Integer& n1) {
    return "(" + to_string(m) + "," + to_string(n0) + "," + to_string(n1) + ")";
}

template <typename F>
void for_grid(F&& f) {
    for (long m = 4; m <= 8; ++m) {
        for (long n1 = 2; n1 <= 60; ++n1) {
            if (gcd(m, n1) != 1) continue;
            for (long n0 = 1; n0 < n1; ++n0) {
                if (gcd(n0, n1) != 1) continue;
                f(ResidueClass::make(m, n0, n1));
            }
        }
    }
}

Outcome golden_solvable(Checker& c) {
    const auto out = decide(ResidueClass::make(5, 7, 9));
    c.expect(out.status == Status::solvable, "status is not solvable");
    c.expect(out.solutions.size() == 1, "expected exactly one solution, got " + std::to_string(out.solutions.size()));
    if (out.solutions.size() == 1) {
        const auto& s = out.solutions.front();
        const RationalPoly n = ints({7, 9});
        c.expect(s.params == ParamSet{2, 1, 1, 1}, "parameters differ from (2,1,1,1)");
        c.expect(s.triple.x == ints({14, 18}) && s.triple.x == n * Rational(2), "x differs from 2n");
        c.expect(s.triple.y == ints({7, 16, 9}) && s.triple.y == ints({1, 1}) * n, "y differs from (1+λ)n");
        c.expect(s.triple.z == ints({2, 2}), "z differs from 2(1+λ)");
    }
    return c.out;
}

Outcome golden_unsolvable(Checker& c) {
    const auto rc = ResidueClass::make(5, 7, 19);
    const auto out = decide(rc);
    c.expect(out.status == Status::unsolvable, "decide(5,7,19) is solvable");
    const auto kls = enumerate_kl(5, 19);
    c.expect(kls.size() == 1 && kls.front() == KL{4, 1}, "enumerate_kl(5,19) != {(4,1)}");
    const auto fam = solve_condition_ii(rc, 4, 1);
    c.expect(fam.s0 == 5 && fam.r0 == 13 && fam.describe() == "s=5+7t, r=13+19t",
             "family is " + fam.describe());
    c.expect(!search_condition_iii(fam, 10000).has_value(), "family search finds a t <= 10^4");
    c.expect(triples_with_member(5, 7, 28).empty(), "triples_with_member(5,7,28) is not empty");
    return c.out;
}

Outcome one_mod_p(Checker& c) {
    for (long m : {4, 5, 7}) {
        for (const Integer& p : primes_up_to(200)) {
            if (gcd(p, m) != 1) continue;
            for (const Integer& n0 : {Integer(1), Integer(p + 1)}) {
                const auto out = decide(ResidueClass::canonical(m, n0, p));
                c.expect(out.status == Status::unsolvable, "solvable at " + inst(m, n0, p));
            }
        }
    }
    return c.out;
}

Outcome m4_exclusion(Checker& c) {
    for (const Integer& p : primes_up_to(1000)) {
        if (p % 4 != 1) continue;
        c.expect(enumerate_kl(4, p).empty(), "enumerate_kl(4," + to_string(p) + ") not empty");
        const auto rep = scan_residues(4, p, {5});
        const std::size_t expected = p < 6 ? p.get_ui() - 1 : 5;
        c.expect(rep.rows.size() == expected, "sample size != " + std::to_string(expected) + " at p=" + to_string(p));
        c.expect(rep.summary.solvable == 0, "solvable sample residue at p=" + to_string(p));
    }
    return c.out;
}

Outcome identity_suite(Checker& c) {
    for_grid([&](const ResidueClass& rc) {
        const std::string where = inst(rc.m(), rc.n0(), rc.n1());
        for (const auto& sol : decide(rc).solutions) {
            c.expect(verify_identity(rc, sol.triple), "solution fails verify at " + where);
            c.expect(analyze_degrees(rc, sol.triple).is_theorem_pattern(), "pattern not {1,1,2} at " + where);
        }
        for (const auto& t : enumerate_base_solutions(rc.m(), rc.n0())) {
            for (const auto& r : role_assignments(t)) {
                const RoleTriple rt{r[0], r[1], r[2]};
                const auto plus = plus_family(rc, rt);
                const auto minus = minus_family(rc, rt);
                c.expect(satisfies_rational_identity(rc, plus.triple), "plus family fails at " + where);
                c.expect(satisfies_rational_identity(rc, minus.triple), "minus family fails at " + where);
                c.expect(!minus.integral, "integral minus family at " + where);
            }
        }
    });
    return c.out;
}

Outcome discriminant(Checker& c) {
    for (long m = 4; m <= 8; ++m) {
        for (long n0 = 1; n0 <= 30; ++n0) {
            for (const auto& t : enumerate_base_solutions(m, n0)) {
                for (const auto& r : role_assignments(t)) {
                    const auto rep = discriminant_identity(m, n0, {r[0], r[1], r[2]});
                    c.expect(Rational(rep.lhs) == rep.rhs, "lhs != rhs for " + inst(m, n0, 0));
                    c.expect(rep.lhs < 0, "lhs not negative for " + inst(m, n0, 0));
                }
            }
        }
    }
    return c.out;
}

Outcome oracle_equivalence(Checker& c) {
    for_grid([&](const ResidueClass& rc) {
        const std::string where = inst(rc.m(), rc.n0(), rc.n1());
        const Integer t_max = 10 * rc.n1();
        std::set<std::tuple<Integer, Integer, Integer, Integer>> via_family;
        bool family_solvable = false;
        for (const KL& kl : enumerate_kl(rc.m(), rc.n1())) {
            const auto fam = solve_condition_ii(rc, kl.k, kl.l);
            family_solvable = family_solvable || search_condition_iii(fam, t_max).has_value();
            for (const auto& ps : all_condition_iii(fam, t_max)) via_family.insert({ps.k, ps.l, ps.s, ps.r});
        }
        const auto out = decide(rc);
        std::set<std::tuple<Integer, Integer, Integer, Integer>> via_base;
        for (const auto& sol : out.solutions) {
            via_base.insert({sol.params.k, sol.params.l, sol.params.s, sol.params.r});
        }
        c.expect((out.status == Status::solvable) == family_solvable, "solvability differs at " + where);
        c.expect(via_base == via_family, "solution sets differ at " + where + " (" + std::to_string(via_base.size()) +
                                             " vs " + std::to_string(via_family.size()) + ")");
    });
    return c.out;
}

// Base triples by plain double loop, then the parameter conditions read off each role assignment.
bool brute_solvable(long m, long n0, long n1) {
    std::vector<std::array<long, 3>> triples;
    for (long a = 1; a <= 3 * n0; ++a) {
        for (long b = a; b <= 2 * n0 * a; ++b) {
            const long num = m * a * b - n0 * (a + b);
            if (num <= 0 || (n0 * a * b) % num != 0) continue;
            const long cc = n0 * a * b / num;
            if (cc >= b) triples.push_back({a, b, cc});
        }
    }
    for (auto t : triples) {
        std::sort(t.begin(), t.end());
        do {
            const long x0 = t[0], y0 = t[1], z0 = t[2];
            if (x0 % n0 != 0 || y0 % n0 != 0) continue;
            const long k = x0 / n0, s = y0 / n0;
            if (n1 % (m * k - 1) != 0) continue;
            const long l = n1 / (m * k - 1);
            const long rn = s * n1 - k * l;
            if (rn <= 0 || rn % n0 != 0) continue;
            if (rn / n0 * z0 == k * l * s) return true;
        } while (std::next_permutation(t.begin(), t.end()));
    }
    return false;
}

Outcome scan_check(Checker& c) {
    const auto rep = scan_residues(5, 9);
    c.expect(rep.summary.admissible == std::vector<Integer>{4, 7, 8}, "admissible residues differ from {4,7,8}");
    std::vector<Integer> brute;
    for (long n0 = 1; n0 < 9; ++n0) {
        if (gcd(n0, 9) == 1 && brute_solvable(5, n0, 9)) brute.emplace_back(n0);
    }
    c.expect(brute == std::vector<Integer>{4, 7, 8}, "brute force disagrees with {4,7,8}");
    return c.out;
}

Outcome discrepancy(Checker& c) {
    const auto rep = audit_corollary3(5, 29);
    c.expect(rep.has_discrepancy(), "no discrepancy reported");
    bool found = false;
    for (const auto& in : rep.instances) {
        if (in.verdict == Verdict::discrepancy) c.expect(!in.witnesses.empty(), "discrepancy without witness");
        for (const auto& w : in.witnesses) {
            c.expect(verify_identity(w.rc, w.triple), "witness fails verify");
            if (in.p == 29 && w.rc == ResidueClass::make(5, 23, 29) && w.params == ParamSet{6, 1, 1, 1}) found = true;
        }
    }
    c.expect(found, "witness (5,23,29) with (6,1,1,1) missing");
    const char* argv[] = {"unitpoly", "audit", "--corollary", "3", "--m", "5", "--bound", "29", "--format", "json"};
    std::ostringstream out, err;
    const int code = cli::main_entry(10, argv, out, err);
    c.expect(code == cli::kExitDiscrepancy, "exit code " + std::to_string(code) + " != 3");
    return c.out;
}

struct Criterion {
    int id;
    const char* name;
    double limit_s;  // 0 means no runtime bound
    std::function<Outcome(Checker&)> body;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "decide(5,7,9) golden solution", 1.0, golden_solvable},
        {2, "decide(5,7,19) unsolvable with family s=5+7t, r=13+19t", 1.0, golden_unsolvable},
        {3, "n = 1 (mod p) unsolvable, p <= 200, m in {4,5,7}", 60.0, one_mod_p},
        {4, "m = 4 excludes p = 1 (mod 4), p <= 1000", 60.0, m4_exclusion},
        {5, "identity properties on m 4..8, n1 <= 60", 0.0, identity_suite},
        {6, "discriminant identity on m 4..8, n0 <= 30", 0.0, discriminant},
        {7, "base route and t-family route agree (t_max = 10*n1)", 0.0, oracle_equivalence},
        {8, "scan(5,9) admissible = {4,7,8} with brute force", 0.0, scan_check},
        {9, "discrepancy at p = 29 with verified witness, exit 3", 0.0, discrepancy},
    };

    int failed = 0;
    for (const auto& cr : criteria) {
        Checker c;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = cr.body(c);
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.ok && cr.limit_s > 0 && secs >= cr.limit_s) {
            o = {false, "runtime " + std::to_string(secs) + " s exceeds limit"};
        }
        if (!o.ok) ++failed;
        std::printf("%s %d %s [%zu checks, %.3f s]%s%s\n", o.ok ? "PASS" : "FAIL", cr.id, cr.name, c.checks, secs,
                    o.ok ? "" : ": ", o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}

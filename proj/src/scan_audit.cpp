#include "unitpoly/scan_audit.hpp"

#include <cstdint>
#include <stdexcept>

namespace unitpoly {

std::vector<Integer> coprime_residues(const Integer& n1) {
    std::vector<Integer> out;
    for (Integer n0 = 1; n0 < n1; ++n0) {
        if (gcd(n0, n1) == 1) {
            out.push_back(n0);
        }
    }
    return out;
}

namespace {

ScanReport run_scan(const Integer& m, const Integer& n1, const ScanOptions& opts, bool parallel) {
    // Validates m >= 4, n1 >= 2, gcd(m, n1) = 1 up front.
    (void)enumerate_kl(m, n1);
    std::vector<Integer> residues = coprime_residues(n1);
    if (opts.max_residues && residues.size() > *opts.max_residues) {
        residues.resize(*opts.max_residues);
    }

    const auto count = static_cast<std::int64_t>(residues.size());
    std::vector<std::optional<DecisionOutcome>> slots(residues.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::int64_t i = 0; i < count; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        slots[idx] = decide(ResidueClass::make(m, residues[idx], n1));
    }

    ScanReport rep{m, n1};
    rep.rows.reserve(slots.size());
    for (auto& slot : slots) {
        DecisionOutcome& row = *slot;
        if (row.status == Status::solvable) {
            ++rep.summary.solvable;
            rep.summary.admissible.push_back(row.rc.n0());
        } else {
            ++rep.summary.unsolvable;
        }
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

std::vector<Witness> witnesses_of(const ScanReport& scan) {
    std::vector<Witness> out;
    for (const DecisionOutcome& row : scan.rows) {
        for (const Solution& sol : row.solutions) {
            if (!verify_identity(row.rc, sol.triple)) {
                throw std::logic_error("audit witness failed verification");
            }
            out.push_back({row.rc, sol.params, sol.triple});
        }
    }
    return out;
}

std::vector<Integer> audited_primes(const Integer& m, const Integer& bound) {
    std::vector<Integer> out;
    for (Integer& p : primes_up_to(bound)) {
        if (gcd(p, m) == 1) {
            out.push_back(std::move(p));
        }
    }
    return out;
}

void require_m(const Integer& m) {
    if (m < 4) {
        throw PreconditionError("m must be >= 4, got " + to_string(m));
    }
}

}  // namespace

ScanReport scan_residues(const Integer& m, const Integer& n1, const ScanOptions& opts) {
    return run_scan(m, n1, opts, true);
}

namespace serial {

ScanReport scan_residues(const Integer& m, const Integer& n1, const ScanOptions& opts) {
    return run_scan(m, n1, opts, false);
}

}  // namespace serial

std::string to_string(Verdict v) { return v == Verdict::consistent ? "consistent" : "discrepancy"; }

bool AuditReport::has_discrepancy() const { return discrepancy_count() > 0; }

std::size_t AuditReport::discrepancy_count() const {
    std::size_t n = 0;
    for (const auto& inst : instances) {
        n += inst.verdict == Verdict::discrepancy ? 1 : 0;
    }
    return n;
}

AuditReport audit_condition_i(const Integer& m, const Integer& bound) {
    require_m(m);
    if (bound < 2) {
        throw PreconditionError("bound must be >= 2");
    }
    AuditReport rep{"i", m, bound};
    for (const Integer& p : audited_primes(m, bound)) {
        AuditInstance inst{p};
        inst.kl_empty = enumerate_kl(m, p).empty();
        if (m == 4 && p % 4 == 1 && !inst.kl_empty) {
            throw std::logic_error("m = 4: prime " + to_string(p) + " = 1 (mod 4) admits n1 = l*(4k - 1)");
        }
        const ScanReport scan = scan_residues(m, p);
        inst.residues_tested = scan.rows.size();
        inst.solvable_residues = scan.summary.solvable;
        if (inst.kl_empty && inst.solvable_residues > 0) {
            throw std::logic_error("solvable residue without a condition-i pair at p = " + to_string(p));
        }
        if (inst.solvable_residues > 0 && p % 4 != 3) {
            inst.verdict = Verdict::discrepancy;
            inst.witnesses = witnesses_of(scan);
            inst.note = "solvable prime modulus not of the form 4k-1";
        } else if (inst.kl_empty) {
            inst.note = "no l*(m*k-1) factorization; all residues unsolvable";
        } else {
            inst.note = inst.solvable_residues > 0 ? "solvable, modulus of the form 4k-1"
                                                   : "factorization exists; all residues unsolvable";
        }
        rep.instances.push_back(std::move(inst));
    }
    return rep;
}

AuditReport audit_corollary3(const Integer& m, const Integer& bound) {
    require_m(m);
    if (bound < 5) {
        throw PreconditionError("bound must be >= 5");
    }
    AuditReport rep{"3", m, bound};
    for (const Integer& p : audited_primes(m, bound)) {
        if (p % 4 != 1) {
            continue;
        }
        AuditInstance inst{p};
        inst.kl_empty = enumerate_kl(m, p).empty();
        const ScanReport scan = scan_residues(m, p);
        inst.residues_tested = scan.rows.size();
        inst.solvable_residues = scan.summary.solvable;
        if (inst.solvable_residues > 0) {
            inst.verdict = Verdict::discrepancy;
            inst.witnesses = witnesses_of(scan);
            inst.note = "prime of the form 4K+1 admits polynomial solutions";
        }
        rep.instances.push_back(std::move(inst));
    }
    return rep;
}

AuditReport audit_corollary4(const Integer& m, const Integer& bound) {
    require_m(m);
    if (bound < 2) {
        throw PreconditionError("bound must be >= 2");
    }
    AuditReport rep{"4", m, bound};
    for (const Integer& p : audited_primes(m, bound)) {
        AuditInstance inst{p};
        inst.kl_empty = enumerate_kl(m, p).empty();
        for (const ResidueClass& rc : {ResidueClass::make(m, 1, p), ResidueClass::canonical(m, p + 1, p)}) {
            const DecisionOutcome out = decide(rc);
            ++inst.residues_tested;
            if (out.status == Status::solvable) {
                ++inst.solvable_residues;
                inst.verdict = Verdict::discrepancy;
                for (const Solution& sol : out.solutions) {
                    inst.witnesses.push_back({rc, sol.params, sol.triple});
                }
            }
        }
        rep.instances.push_back(std::move(inst));
    }
    return rep;
}

}  // namespace unitpoly

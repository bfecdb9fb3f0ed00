#pragma once

// Residue-class sweeps and empirical audits of the prime-modulus corollaries.
// Audits report; a discrepancy always carries a witness that passes
// verify_identity, so an audit cannot flag anything it has not proven.

#include "unitpoly/theorem.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace unitpoly {

struct ScanOptions {
    /// Only the first N residues coprime to n1 (ascending).
    std::optional<std::size_t> max_residues;
};

struct ScanSummary {
    std::size_t solvable = 0;
    std::size_t unsolvable = 0;
    std::vector<Integer> admissible;  // residues with a solution, ascending
};

struct ScanReport {
    Integer m;
    Integer n1;
    std::vector<DecisionOutcome> rows{};  // ordered by n0
    ScanSummary summary{};
};

/// decide() for every n0 in [1, n1) coprime to n1. Parallel over residues;
/// the output does not depend on the thread count.
ScanReport scan_residues(const Integer& m, const Integer& n1, const ScanOptions& opts = {});

/// Residues n0 in [1, n1) with gcd(n0, n1) = 1.
std::vector<Integer> coprime_residues(const Integer& n1);

namespace serial {

ScanReport scan_residues(const Integer& m, const Integer& n1, const ScanOptions& opts = {});

}  // namespace serial

enum class Verdict { consistent, discrepancy };

std::string to_string(Verdict v);

struct Witness {
    ResidueClass rc;
    ParamSet params;
    PolyTriple triple;
};

struct AuditInstance {
    Integer p;
    bool kl_empty = false;
    std::size_t residues_tested = 0;
    std::size_t solvable_residues = 0;
    Verdict verdict = Verdict::consistent;
    std::vector<Witness> witnesses{};
    std::string note{};
};

struct AuditReport {
    std::string corollary;  // "i", "3" or "4"
    Integer m;
    Integer bound;
    std::vector<AuditInstance> instances{};

    [[nodiscard]] bool has_discrepancy() const;
    [[nodiscard]] std::size_t discrepancy_count() const;
};

/// Primes p <= bound coprime to m: is enumerate_kl(m, p) empty, and is any
/// residue solvable? A solvable prime modulus not of the form 4k-1 is a
/// discrepancy with the 4k-1 claim. For m = 4, p = 1 (mod 4) forcing an
/// empty enumerate_kl is asserted.
AuditReport audit_condition_i(const Integer& m, const Integer& bound);

/// Primes p = 1 (mod 4), p <= bound, coprime to m: full residue scan.
AuditReport audit_corollary3(const Integer& m, const Integer& bound);

/// Primes p <= bound coprime to m: n = 1 (mod p), checked as n0 = 1 and as
/// n0 = p + 1 canonicalized.
AuditReport audit_corollary4(const Integer& m, const Integer& bound);

}  // namespace unitpoly

#pragma once

// Command-line frontend: decide, scan, base, family, audit, verify.

#include "unitpoly/families.hpp"
#include "unitpoly/scan_audit.hpp"
#include "unitpoly/serialize.hpp"

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace unitpoly::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNotVerified = 1;
inline constexpr int kExitPrecondition = 2;
inline constexpr int kExitDiscrepancy = 3;

inline constexpr int kSchemaVersion = 1;

enum class Format { json, csv, text };

struct CliConfig {
    std::string subcommand;
    std::optional<Integer> m;
    std::optional<Integer> n0;
    std::optional<Integer> n1;
    std::optional<std::array<Integer, 3>> base;
    std::optional<std::array<Integer, 3>> roles;
    Branch branch = Branch::plus;
    Format format = Format::text;
    Integer t_max = 10000;
    Integer bound = 200;
    std::optional<std::size_t> sample;
    std::optional<int> threads;
    std::string corollary;
    std::string file;
};

struct VerifiedEntry {
    ResidueClass rc;
    PolyTriple triple;
    IdentityReport report{};
    std::optional<DegreeReport> degrees{};  // present when verified
};

/// Checks either a bare triple document or a `decide --format json` document
/// (every listed solution). Instance parameters given explicitly take
/// precedence over the ones recorded in the document.
std::vector<VerifiedEntry> verify_document(const Json& doc, const std::optional<Integer>& m,
                                           const std::optional<Integer>& n0, const std::optional<Integer>& n1);

/// Reads `path` ("-" for standard input) and delegates to verify_document.
std::vector<VerifiedEntry> verify_file(const std::string& path, const std::optional<Integer>& m,
                                       const std::optional<Integer>& n0, const std::optional<Integer>& n1);

/// Dispatches a validated config. Diagnostics go to `err` as one line.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (argv[0] is the program name) and runs.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace unitpoly::cli

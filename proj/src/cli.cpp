#include "unitpoly/cli.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace unitpoly::cli {

namespace {

std::string instance_text(const ResidueClass& rc) {
    return to_string(rc.m()) + "/(" + to_text(rc.n_poly()) + ")";
}

Json header(const char* command) {
    Json j = Json::object();
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    return j;
}

Json degrees_json(const DegreeReport& d) {
    Json j = Json::object();
    j["pattern"] = Json::array({d.sorted[0], d.sorted[1], d.sorted[2]});
    j["aux_degree"] = d.aux_degree ? Json(*d.aux_degree) : Json(nullptr);
    return j;
}

Json solution_json(const ResidueClass& rc, const Solution& sol) {
    Json j = Json::object();
    j["params"] = params_to_json(sol.params);
    j["x"] = poly_to_json(sol.triple.x);
    j["y"] = poly_to_json(sol.triple.y);
    j["z"] = poly_to_json(sol.triple.z);
    j["degrees"] = degrees_json(analyze_degrees(rc, sol.triple));
    return j;
}

Json family_search_json(const ParamFamily& fam, const Integer& t_max) {
    Json j = Json::object();
    j["t_max"] = to_string(t_max);
    if (auto hit = search_condition_iii(fam, t_max)) {
        Json found = params_to_json(*hit);
        found["t"] = to_string(Integer((hit->s - fam.s0) / fam.n0));
        j["found"] = found;
    } else {
        j["found"] = nullptr;
    }
    return j;
}

Json outcome_json(const DecisionOutcome& out, const Integer& t_max) {
    Json j = Json::object();
    j["m"] = to_string(out.rc.m());
    j["n0"] = to_string(out.rc.n0());
    j["n1"] = to_string(out.rc.n1());
    j["status"] = to_string(out.status);
    j["condition_i_fails"] = out.condition_i_fails;
    Json sols = Json::array();
    for (const Solution& sol : out.solutions) {
        sols.push_back(solution_json(out.rc, sol));
    }
    j["solutions"] = sols;
    Json ev = Json::array();
    for (const KLEvidence& e : out.evidence) {
        Json row = Json::object();
        row["k"] = to_string(e.kl.k);
        row["l"] = to_string(e.kl.l);
        row["family"] = e.family.describe();
        row["s0"] = to_string(e.family.s0);
        row["r0"] = to_string(e.family.r0);
        row["triples_with_x0"] = e.triples_with_x0;
        row["verdict"] = to_string(e.verdict);
        row["family_search"] = family_search_json(e.family, t_max);
        ev.push_back(row);
    }
    j["evidence"] = ev;
    return j;
}

void csv_poly_rows(std::ostream& os, const std::string& prefix, const char* name, const RationalPoly& p) {
    for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
        os << prefix << name << ',' << i << ',' << to_string(p.coefficients()[i]) << '\n';
    }
}

void csv_solution(std::ostream& os, const std::string& lead, std::size_t index, const Solution& sol) {
    const std::string prefix = lead + std::to_string(index) + ',' + to_string(sol.params.k) + ',' +
                               to_string(sol.params.l) + ',' + to_string(sol.params.s) + ',' +
                               to_string(sol.params.r) + ',';
    csv_poly_rows(os, prefix, "x", sol.triple.x);
    csv_poly_rows(os, prefix, "y", sol.triple.y);
    csv_poly_rows(os, prefix, "z", sol.triple.z);
}

void text_solution(std::ostream& os, const Solution& sol, const char* indent) {
    os << indent << "(k,l,s,r) = (" << to_string(sol.params.k) << ',' << to_string(sol.params.l) << ','
       << to_string(sol.params.s) << ',' << to_string(sol.params.r) << ")\n"
       << indent << "  x = " << to_text(sol.triple.x) << '\n'
       << indent << "  y = " << to_text(sol.triple.y) << '\n'
       << indent << "  z = " << to_text(sol.triple.z) << '\n';
}

void text_outcome(std::ostream& os, const DecisionOutcome& out, const Integer& t_max) {
    os << instance_text(out.rc) << ": " << to_string(out.status) << '\n';
    if (out.condition_i_fails) {
        os << "  no (k, l) with n1 = l*(m*k - 1)\n";
    }
    for (const Solution& sol : out.solutions) {
        text_solution(os, sol, "  ");
    }
    if (out.status == Status::unsolvable) {
        for (const KLEvidence& e : out.evidence) {
            os << "  (k,l) = (" << to_string(e.kl.k) << ',' << to_string(e.kl.l) << "): " << to_string(e.verdict)
               << "; family " << e.family.describe();
            if (!search_condition_iii(e.family, t_max)) {
                os << "; no t <= " << to_string(t_max) << " satisfies r | s*k*l";
            }
            os << '\n';
        }
    }
}

const ResidueClass& require_instance(const CliConfig& c, std::optional<ResidueClass>& slot) {
    if (!c.m || !c.n0 || !c.n1) {
        throw PreconditionError("--m, --n0 and --n1 are required");
    }
    slot = ResidueClass::make(*c.m, *c.n0, *c.n1);
    return *slot;
}

int run_decide(const CliConfig& c, std::ostream& os) {
    std::optional<ResidueClass> slot;
    const DecisionOutcome out = decide(require_instance(c, slot));
    switch (c.format) {
        case Format::json: {
            Json j = header("decide");
            j.update(outcome_json(out, c.t_max));
            os << j.dump(2) << '\n';
            break;
        }
        case Format::csv:
            os << "solution,k,l,s,r,poly,degree,coefficient\n";
            for (std::size_t i = 0; i < out.solutions.size(); ++i) {
                csv_solution(os, "", i, out.solutions[i]);
            }
            break;
        case Format::text:
            text_outcome(os, out, c.t_max);
            break;
    }
    return kExitOk;
}

int run_scan(const CliConfig& c, std::ostream& os) {
    if (!c.m || !c.n1) {
        throw PreconditionError("--m and --n1 are required");
    }
    const ScanReport rep = scan_residues(*c.m, *c.n1, ScanOptions{c.sample});
    switch (c.format) {
        case Format::json: {
            Json j = header("scan");
            j["m"] = to_string(rep.m);
            j["n1"] = to_string(rep.n1);
            Json rows = Json::array();
            for (const DecisionOutcome& row : rep.rows) {
                rows.push_back(outcome_json(row, c.t_max));
            }
            j["rows"] = rows;
            Json adm = Json::array();
            for (const Integer& n0 : rep.summary.admissible) {
                adm.push_back(to_string(n0));
            }
            j["summary"] = {{"solvable", rep.summary.solvable},
                            {"unsolvable", rep.summary.unsolvable},
                            {"admissible", adm}};
            os << j.dump(2) << '\n';
            break;
        }
        case Format::csv:
            os << "n0,status,solution,k,l,s,r,poly,degree,coefficient\n";
            for (const DecisionOutcome& row : rep.rows) {
                const std::string lead = to_string(row.rc.n0()) + ',' + to_string(row.status) + ',';
                if (row.solutions.empty()) {
                    os << lead << ",,,,,,,\n";
                }
                for (std::size_t i = 0; i < row.solutions.size(); ++i) {
                    csv_solution(os, lead, i, row.solutions[i]);
                }
            }
            break;
        case Format::text:
            for (const DecisionOutcome& row : rep.rows) {
                os << "n0 = " << to_string(row.rc.n0()) << ": " << to_string(row.status) << '\n';
                for (const Solution& sol : row.solutions) {
                    text_solution(os, sol, "  ");
                }
            }
            os << "solvable " << rep.summary.solvable << ", unsolvable " << rep.summary.unsolvable
               << "; admissible residues {";
            for (std::size_t i = 0; i < rep.summary.admissible.size(); ++i) {
                os << (i ? ", " : "") << to_string(rep.summary.admissible[i]);
            }
            os << "}\n";
            break;
    }
    return kExitOk;
}

int run_base(const CliConfig& c, std::ostream& os) {
    if (!c.m || !c.n0) {
        throw PreconditionError("--m and --n0 are required");
    }
    const auto triples = enumerate_base_solutions(*c.m, *c.n0);
    switch (c.format) {
        case Format::json: {
            Json j = header("base");
            j["m"] = to_string(*c.m);
            j["n0"] = to_string(*c.n0);
            Json arr = Json::array();
            for (const auto& t : triples) {
                arr.push_back(Json::array({to_string(t.a), to_string(t.b), to_string(t.c)}));
            }
            j["triples"] = arr;
            os << j.dump(2) << '\n';
            break;
        }
        case Format::csv:
            os << "a,b,c\n";
            for (const auto& t : triples) {
                os << to_string(t.a) << ',' << to_string(t.b) << ',' << to_string(t.c) << '\n';
            }
            break;
        case Format::text:
            os << to_string(*c.m) << '/' << to_string(*c.n0) << ": " << triples.size() << " triple(s)\n";
            for (const auto& t : triples) {
                os << "  1/" << to_string(t.a) << " + 1/" << to_string(t.b) << " + 1/" << to_string(t.c) << '\n';
            }
            break;
    }
    return kExitOk;
}

int run_family(const CliConfig& c, std::ostream& os) {
    std::optional<ResidueClass> slot;
    const ResidueClass& rc = require_instance(c, slot);
    if (!c.base) {
        throw PreconditionError("--base is required");
    }
    std::array<Integer, 3> roles = c.roles.value_or(*c.base);
    {
        auto a = *c.base;
        auto b = roles;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) {
            throw PreconditionError("--roles must be a permutation of --base");
        }
    }
    const RoleTriple rt{roles[0], roles[1], roles[2]};
    const FamilySolution fs = build_family(rc, rt, c.branch);
    const DiscriminantReport disc = discriminant_identity(rc, rt);
    const bool identity = satisfies_rational_identity(rc, fs.triple);
    switch (c.format) {
        case Format::json: {
            Json j = header("family");
            j["m"] = to_string(rc.m());
            j["n0"] = to_string(rc.n0());
            j["n1"] = to_string(rc.n1());
            j["branch"] = to_string(fs.branch);
            j["roles"] = {{"x0", to_string(rt.x0)}, {"y0", to_string(rt.y0)}, {"z0", to_string(rt.z0)}};
            j.update(triple_to_json(fs.triple));
            j["identity"] = identity;
            j["integral"] = fs.integral;
            j["degenerate"] = fs.degenerate;
            j["discriminant"] = {{"xbar0", to_string(disc.xbar0)},
                                 {"zbar0", to_string(disc.zbar0)},
                                 {"lhs", to_string(disc.lhs)},
                                 {"rhs", to_string(disc.rhs)},
                                 {"holds", disc.holds()}};
            os << j.dump(2) << '\n';
            break;
        }
        case Format::csv:
            os << "poly,degree,coefficient\n";
            csv_poly_rows(os, "", "x", fs.triple.x);
            csv_poly_rows(os, "", "y", fs.triple.y);
            csv_poly_rows(os, "", "z", fs.triple.z);
            break;
        case Format::text:
            os << to_string(fs.branch) << " family for " << instance_text(rc) << " from (x0,y0,z0) = ("
               << to_string(rt.x0) << ',' << to_string(rt.y0) << ',' << to_string(rt.z0) << ")\n"
               << "  x = " << to_text(fs.triple.x) << '\n'
               << "  y = " << to_text(fs.triple.y) << '\n'
               << "  z = " << to_text(fs.triple.z) << '\n'
               << "  identity " << (identity ? "holds" : "FAILS") << ", integral " << (fs.integral ? "yes" : "no")
               << (fs.degenerate ? ", degenerate y" : "") << '\n'
               << "  n0^2 - xbar0*zbar0 = " << to_string(disc.lhs) << " = " << to_string(disc.rhs) << '\n';
            break;
    }
    return kExitOk;
}

int run_audit(const CliConfig& c, std::ostream& os) {
    if (!c.m) {
        throw PreconditionError("--m is required");
    }
    AuditReport rep;
    if (c.corollary == "i") {
        rep = audit_condition_i(*c.m, c.bound);
    } else if (c.corollary == "3") {
        rep = audit_corollary3(*c.m, c.bound);
    } else if (c.corollary == "4") {
        rep = audit_corollary4(*c.m, c.bound);
    } else {
        throw PreconditionError("--corollary must be one of i, 3, 4");
    }
    switch (c.format) {
        case Format::json: {
            Json j = header("audit");
            j["corollary"] = rep.corollary;
            j["m"] = to_string(rep.m);
            j["bound"] = to_string(rep.bound);
            j["discrepancies"] = rep.discrepancy_count();
            Json insts = Json::array();
            for (const AuditInstance& inst : rep.instances) {
                Json w = Json::array();
                for (const Witness& wit : inst.witnesses) {
                    Json wj = {{"m", to_string(wit.rc.m())},
                               {"n0", to_string(wit.rc.n0())},
                               {"n1", to_string(wit.rc.n1())},
                               {"params", params_to_json(wit.params)}};
                    wj.update(triple_to_json(wit.triple));
                    w.push_back(wj);
                }
                insts.push_back({{"p", to_string(inst.p)},
                                 {"kl_empty", inst.kl_empty},
                                 {"residues_tested", inst.residues_tested},
                                 {"solvable_residues", inst.solvable_residues},
                                 {"verdict", to_string(inst.verdict)},
                                 {"note", inst.note},
                                 {"witnesses", w}});
            }
            j["instances"] = insts;
            os << j.dump(2) << '\n';
            break;
        }
        case Format::csv:
            os << "p,kl_empty,residues_tested,solvable_residues,verdict,witness_n0,k,l,s,r\n";
            for (const AuditInstance& inst : rep.instances) {
                const std::string lead = to_string(inst.p) + ',' + (inst.kl_empty ? "true" : "false") + ',' +
                                         std::to_string(inst.residues_tested) + ',' +
                                         std::to_string(inst.solvable_residues) + ',' + to_string(inst.verdict) +
                                         ',';
                if (inst.witnesses.empty()) {
                    os << lead << ",,,,\n";
                }
                for (const Witness& w : inst.witnesses) {
                    os << lead << to_string(w.rc.n0()) << ',' << to_string(w.params.k) << ','
                       << to_string(w.params.l) << ',' << to_string(w.params.s) << ',' << to_string(w.params.r)
                       << '\n';
                }
            }
            break;
        case Format::text:
            os << "audit " << rep.corollary << ", m = " << to_string(rep.m) << ", primes <= " << to_string(rep.bound)
               << '\n';
            for (const AuditInstance& inst : rep.instances) {
                os << "  p = " << to_string(inst.p) << ": " << to_string(inst.verdict) << " (" << inst.solvable_residues
                   << '/' << inst.residues_tested << " residues solvable"
                   << (inst.kl_empty ? ", no (k,l)" : "") << ')';
                if (!inst.note.empty()) {
                    os << " " << inst.note;
                }
                os << '\n';
                for (const Witness& w : inst.witnesses) {
                    os << "    witness " << instance_text(w.rc) << " (k,l,s,r) = (" << to_string(w.params.k) << ','
                       << to_string(w.params.l) << ',' << to_string(w.params.s) << ',' << to_string(w.params.r)
                       << ")\n";
                }
            }
            os << rep.discrepancy_count() << " discrepancy(ies)\n";
            break;
    }
    return rep.has_discrepancy() ? kExitDiscrepancy : kExitOk;
}

int run_verify(const CliConfig& c, std::ostream& os) {
    if (c.file.empty()) {
        throw PreconditionError("--file is required");
    }
    const auto entries = verify_file(c.file, c.m, c.n0, c.n1);
    bool all = !entries.empty();
    Json results = Json::array();
    for (const VerifiedEntry& e : entries) {
        all = all && e.report.verified();
        if (c.format == Format::json) {
            Json r = {{"m", to_string(e.rc.m())},
                      {"n0", to_string(e.rc.n0())},
                      {"n1", to_string(e.rc.n1())},
                      {"identity", e.report.identity},
                      {"integral", e.report.integral},
                      {"verified", e.report.verified()},
                      {"residual", poly_to_json(e.report.residual)}};
            r["degrees"] = e.degrees ? degrees_json(*e.degrees) : Json(nullptr);
            results.push_back(r);
        } else {
            if (e.report.verified()) {
                os << "verified " << instance_text(e.rc) << ", degrees {" << e.degrees->sorted[0] << ','
                   << e.degrees->sorted[1] << ',' << e.degrees->sorted[2] << "}\n";
            } else {
                if (!e.report.identity) {
                    os << "identity fails for " << instance_text(e.rc) << "; residual "
                       << to_text(e.report.residual) << '\n';
                }
                if (!e.report.integral) {
                    os << "not positive-integral\n";
                }
            }
        }
    }
    if (c.format == Format::json) {
        Json j = header("verify");
        j["verified"] = all;
        j["results"] = results;
        os << j.dump(2) << '\n';
    }
    return all ? kExitOk : kExitNotVerified;
}

std::array<Integer, 3> parse_three(const std::string& text, const char* flag) {
    std::array<Integer, 3> out;
    std::stringstream ss(text);
    std::string item;
    std::size_t i = 0;
    while (std::getline(ss, item, ',')) {
        if (i == 3) {
            throw PreconditionError(std::string(flag) + ": expected three comma-separated integers");
        }
        out[i++] = parse_integer(item);
    }
    if (i != 3) {
        throw PreconditionError(std::string(flag) + ": expected three comma-separated integers");
    }
    return out;
}

}  // namespace

std::vector<VerifiedEntry> verify_document(const Json& doc, const std::optional<Integer>& m,
                                           const std::optional<Integer>& n0, const std::optional<Integer>& n1) {
    auto pick = [&](const std::optional<Integer>& given, const char* key) -> Integer {
        if (given) {
            return *given;
        }
        if (doc.is_object() && doc.contains(key) && doc[key].is_string()) {
            try {
                return parse_integer(doc[key].get<std::string>());
            } catch (const PreconditionError& e) {
                throw ParseError(std::string("field '") + key + "': " + e.what());
            }
        }
        throw PreconditionError(std::string("--") + key + " is required (not recorded in the file)");
    };
    const ResidueClass rc = ResidueClass::make(pick(m, "m"), pick(n0, "n0"), pick(n1, "n1"));

    std::vector<PolyTriple> triples;
    if (doc.is_object() && doc.contains("solutions")) {
        const Json& sols = doc["solutions"];
        if (!sols.is_array()) {
            throw ParseError("field 'solutions': expected an array");
        }
        for (std::size_t i = 0; i < sols.size(); ++i) {
            triples.push_back(triple_from_json(sols[i], "solutions[" + std::to_string(i) + "]"));
        }
    } else {
        triples.push_back(triple_from_json(doc));
    }

    std::vector<VerifiedEntry> out;
    for (PolyTriple& pt : triples) {
        VerifiedEntry e{rc, std::move(pt)};
        e.report = check_identity(rc, e.triple);
        if (e.report.verified()) {
            e.degrees = analyze_degrees(rc, e.triple);
        }
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<VerifiedEntry> verify_file(const std::string& path, const std::optional<Integer>& m,
                                       const std::optional<Integer>& n0, const std::optional<Integer>& n1) {
    std::string text;
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(path);
        if (!in) {
            throw PreconditionError("cannot open '" + path + "'");
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    return verify_document(parse_document(text, path == "-" ? "<stdin>" : path), m, n0, n1);
}

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
    try {
#ifdef _OPENMP
        if (config.threads) {
            omp_set_num_threads(*config.threads);
        }
#endif
        if (config.subcommand == "decide") return run_decide(config, out);
        if (config.subcommand == "scan") return run_scan(config, out);
        if (config.subcommand == "base") return run_base(config, out);
        if (config.subcommand == "family") return run_family(config, out);
        if (config.subcommand == "audit") return run_audit(config, out);
        if (config.subcommand == "verify") return run_verify(config, out);
        throw PreconditionError("unknown subcommand '" + config.subcommand + "'");
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
    }
    return kExitPrecondition;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Integer polynomial solutions of m/(n0 + n1*lambda) = 1/x + 1/y + 1/z"};
    app.require_subcommand(1);

    std::string m, n0, n1, base, roles, branch = "plus", format = "text", t_max = "10000", bound = "200", corollary,
                                                  file;
    std::size_t sample = 0;
    int threads = 0;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--threads", threads, "OpenMP thread count")->check(CLI::PositiveNumber);
    };

    auto* decide_cmd = app.add_subcommand("decide", "Complete decision for one residue class");
    decide_cmd->add_option("--m", m)->required();
    decide_cmd->add_option("--n0", n0)->required();
    decide_cmd->add_option("--n1", n1)->required();
    decide_cmd->add_option("--t-max", t_max, "Range of the family search reported as evidence");
    add_format(decide_cmd);

    auto* scan_cmd = app.add_subcommand("scan", "Decide every residue coprime to n1");
    scan_cmd->add_option("--m", m)->required();
    scan_cmd->add_option("--n1", n1)->required();
    scan_cmd->add_option("--sample", sample, "Only the first N coprime residues")->check(CLI::PositiveNumber);
    scan_cmd->add_option("--t-max", t_max);
    add_format(scan_cmd);

    auto* base_cmd = app.add_subcommand("base", "All positive triples with m/n0 = 1/a + 1/b + 1/c");
    base_cmd->add_option("--m", m)->required();
    base_cmd->add_option("--n0", n0)->required();
    add_format(base_cmd);

    auto* family_cmd = app.add_subcommand("family", "Plus or minus rational family from a base triple");
    family_cmd->add_option("--m", m)->required();
    family_cmd->add_option("--n0", n0)->required();
    family_cmd->add_option("--n1", n1)->required();
    family_cmd->add_option("--base", base, "A,B,C")->required();
    family_cmd->add_option("--roles", roles, "x0,y0,z0 (a permutation of --base)");
    family_cmd->add_option("--branch", branch)->check(CLI::IsMember({"plus", "minus"}));
    add_format(family_cmd);

    auto* audit_cmd = app.add_subcommand("audit", "Empirical audit over prime moduli");
    audit_cmd->add_option("--corollary", corollary)->required()->check(CLI::IsMember({"i", "3", "4"}));
    audit_cmd->add_option("--m", m)->required();
    audit_cmd->add_option("--bound", bound);
    add_format(audit_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "Check a triple file or decide output");
    verify_cmd->add_option("--m", m);
    verify_cmd->add_option("--n0", n0);
    verify_cmd->add_option("--n1", n1);
    verify_cmd->add_option("--file", file, "Path, or - for standard input")->required();
    add_format(verify_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << '\n';
        return kExitPrecondition;
    }

    CliConfig cfg;
    cfg.subcommand = app.get_subcommands().front()->get_name();
    try {
        auto opt_int = [](const std::string& s, const char* flag) -> std::optional<Integer> {
            if (s.empty()) {
                return std::nullopt;
            }
            try {
                return parse_integer(s);
            } catch (const PreconditionError&) {
                throw PreconditionError(std::string(flag) + ": not an integer: '" + s + "'");
            }
        };
        cfg.m = opt_int(m, "--m");
        cfg.n0 = opt_int(n0, "--n0");
        cfg.n1 = opt_int(n1, "--n1");
        cfg.t_max = *opt_int(t_max, "--t-max");
        cfg.bound = *opt_int(bound, "--bound");
        if (!base.empty()) cfg.base = parse_three(base, "--base");
        if (!roles.empty()) cfg.roles = parse_three(roles, "--roles");
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return kExitPrecondition;
    }
    cfg.branch = branch == "minus" ? Branch::minus : Branch::plus;
    cfg.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::text;
    if (sample > 0) cfg.sample = sample;
    if (threads > 0) cfg.threads = threads;
    cfg.corollary = corollary;
    cfg.file = file;
    return run(cfg, out, err);
}

}  // namespace unitpoly::cli

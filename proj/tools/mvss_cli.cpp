#include "CLI11.hpp"
#include "mvss/decision.hpp"
#include "mvss/document.hpp"
#include "mvss/svg.hpp"
#include "mvss/verify.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace mvss;

namespace {

enum Exit { Ok = 0, Negative = 1, ParseFailure = 2, ArityFailure = 3, Undecided = 4, EmptySet = 5, SvgArity = 6 };

struct FileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw FileError("cannot write " + path);
}

bool looks_like_document(const std::string& text) { return text.find('{') != std::string::npos; }

ClosedSetDesc read_set(const std::string& path) {
    Document d = parse_document(slurp(path));
    const Record* r = d.find("closedset");
    if (!r) throw DocumentError(1, 1, path + " has no closedset record");
    return closedset_from(*r);
}

// A function file holds a plfunction record, a formula record or bare formula text.
PLFunction read_function(const std::string& path, std::size_t n) {
    std::string text = slurp(path);
    if (!looks_like_document(text)) return compile(parse_formula(text, n), n);
    Document d = parse_document(text);
    if (const Record* r = d.find("plfunction")) {
        PLFunction f = plfunction_from(*r);
        if (f.arity() != n) throw ArityError(path + ": function of arity " + std::to_string(f.arity()) + ", set of arity " + std::to_string(n));
        return f;
    }
    if (const Record* r = d.find("formula")) {
        std::size_t m = 0;
        Formula f = formula_from(*r, &m);
        if (m != n) throw ArityError(path + ": formula of arity " + std::to_string(m) + ", set of arity " + std::to_string(n));
        return compile(f, n);
    }
    throw DocumentError(1, 1, path + " has no plfunction or formula record");
}

std::string symbolic_direction(const DirectionVerdict& d) {
    std::string s = "(";
    for (std::size_t i = 0; i < d.symbolic.size(); ++i) s += (i ? "," : "") + to_string(d.symbolic[i]);
    return s + ")";
}

std::string tangent_line(const TangentWitness& t) {
    std::string s = "x=" + to_string(t.x) + " ";
    switch (t.direction.kind) {
        case DirectionVerdict::Kind::Irrational:
            return s + "u=" + symbolic_direction(t.direction) + " IRRATIONAL (minimal poly " +
                   poly_text(t.direction.characteristic, "λ") + ")";
        case DirectionVerdict::Kind::Undetermined:
            return s + "UNDETERMINED (" + t.direction.reason + ")";
        case DirectionVerdict::Kind::Rational:
            break;
    }
    s += "u=" + to_string(t.direction.u) + " RATIONAL ";
    const Outgoing& o = t.outgoing;
    switch (o.kind) {
        case Outgoing::Kind::Yes: return s + "OUTGOING λ=" + to_string(o.lambda);
        case Outgoing::Kind::No:
            return s + "NOT-OUTGOING" + (o.blocker ? " (blocked at " + to_string(*o.blocker) + ")" : std::string());
        case Outgoing::Kind::AllAligned: return s + "ALL-ALIGNED";
        case Outgoing::Kind::Undetermined: return s + "UNDETERMINED (" + o.note + ")";
        case Outgoing::Kind::NotApplicable: return s + "NOT-APPLICABLE";
    }
    return s;
}

int cmd_compile(const std::string& file, std::size_t arity, const std::string& out) {
    std::string text = slurp(file);
    Formula f = [&] {
        if (!looks_like_document(text)) return parse_formula(text, arity);
        Document d = parse_document(text);
        const Record* r = d.find("formula");
        if (!r) throw DocumentError(1, 1, file + " has no formula record");
        std::size_t m = 0;
        Formula g = formula_from(*r, &m);
        if (m > arity) throw ArityError("formula record declares arity " + std::to_string(m));
        return g;
    }();
    PLFunction p = compile(f, arity);
    Document d{{plfunction_record("f", p)}};
    if (out.empty()) {
        std::cout << print_document(d);
    } else {
        write_file(out, print_document(d));
        std::cout << "COMPILED cells=" << p.pieces().size() << "\n";
    }
    return Ok;
}

int cmd_check_sss(const std::string& set_file, int kmax, const Integer& cap, const Rational& lambda_max,
                  const std::string& witness_file, const std::string& svg_file) {
    ClosedSetDesc x = read_set(set_file);
    if (!svg_file.empty() && x.arity() != 2) {
        std::cerr << "error: SVG output needs a set in two variables\n";
        return SvgArity;
    }
    SssVerdict v = decide_sss(x, DecisionOptions{kmax, lambda_max});
    std::cout << to_string(v.kind) << "\n";
    int code = Ok;
    switch (v.kind) {
        case SssVerdict::Kind::StronglySemisimple: std::cout << "reason: " << to_string(v.reason) << "\n"; break;
        case SssVerdict::Kind::NotStronglySemisimple: {
            code = Negative;
            const NotSssWitness& w = *v.witness;
            std::cout << "witness: x=" << to_string(w.x) << " u=" << to_string(w.u) << " λ=" << to_string(w.lambda)
                      << " sequence=" << w.sequence_index + 1 << "\n";
            std::cout << "zero set of g: conv(" << to_string(w.x) << "," << to_string(axpy(w.x, w.lambda, w.u))
                      << "); zero set of j: {" << to_string(w.x) << "}\n";
            Index worst = 0;
            for (const auto& r : w.dominance) worst = std::max(worst, r.i);
            std::cout << "dominance: " << w.dominance.size() << " rows for k=1.." << kmax << ", largest index " << worst << "\n";
            FactReport rep = verify_fact_chain(w, x);
            std::cout << "fact checks: " << (rep.all_pass() ? "all pass" : "FAILED") << "\n";
            auto m = ideal_membership(w.j, w.g, x, cap);
            std::cout << "j in ideal of g: " << to_string(m.kind) << " (k tested up to " << cap << ")\n";
            if (!witness_file.empty()) {
                Document d{{closedset_record("X", x), plfunction_record("g", w.g), plfunction_record("j", w.j),
                            witness_record("witness", w, "g", "j", "X"), verdict_record("verdict", v, "witness")}};
                write_file(witness_file, print_document(d));
                std::cout << "witness file: " << witness_file << "\n";
            }
            break;
        }
        case SssVerdict::Kind::Unknown:
            code = Undecided;
            for (const auto& b : v.blockers) std::cout << "blocker: " << b << "\n";
            break;
    }
    for (const auto& n : v.notes) std::cout << "note: " << n << "\n";
    if (!svg_file.empty()) write_file(svg_file, render_svg(x, v.report, v.witness ? &*v.witness : nullptr));
    return code;
}

int cmd_ideal_member(const std::string& f_file, const std::string& g_file, const std::string& set_file,
                     const Integer& cap, const std::string& cert_file) {
    ClosedSetDesc x = read_set(set_file);
    PLFunction f = read_function(f_file, x.arity()), g = read_function(g_file, x.arity());
    IdealMembershipResult r = ideal_membership(f, g, x, cap);
    Document d{{closedset_record("X", x), plfunction_record("f", f), plfunction_record("g", g),
                membership_record("membership", r, "f", "g", "X")}};
    int code = Ok;
    switch (r.kind) {
        case IdealMembershipResult::Kind::Member: std::cout << "MEMBER k=" << r.k << "\n"; break;
        case IdealMembershipResult::Kind::NotMember:
            std::cout << "NOT-MEMBER\n";
            code = Negative;
            break;
        case IdealMembershipResult::Kind::Unknown:
            std::cout << "UNKNOWN\n";
            code = Undecided;
            break;
    }
    if (r.zero_witness) std::cout << "zero of g where f > 0: " << to_string(*r.zero_witness) << "\n";
    for (const auto& row : r.dominance)
        std::cout << "row k=" << row.k << " i=" << row.i << " w=" << to_string(row.w) << " j=" << to_string(row.j_value)
                  << " kg=" << to_string(row.kg_value) << "\n";
    if (!r.note.empty()) std::cout << "note: " << r.note << "\n";
    if (x.arity() == 1 && r.kind == IdealMembershipResult::Kind::Member) {
        try {
            CoverCertificate1D c = cover_certificate_1d(f, g, x);
            std::cout << "cover: m=" << c.m << " with " << c.entries.size() << " neighbourhoods\n";
            d.records.push_back(cover_record("cover", c, "f", "g", "X"));
        } catch (const ClosedSetError& e) {
            std::cout << "cover: not built (" << e.what() << ")\n";
        }
    }
    if (!cert_file.empty()) {
        write_file(cert_file, print_document(d));
        std::cout << "certificate: " << cert_file << "\n";
    }
    return code;
}

int cmd_tangent_scan(const std::string& set_file, const std::string& svg_file) {
    ClosedSetDesc x = read_set(set_file);
    if (!svg_file.empty() && x.arity() != 2) {
        std::cerr << "error: SVG output needs a set in two variables\n";
        return SvgArity;
    }
    auto report = tangent_report(x);
    if (report.empty()) std::cout << "no sequence witnesses\n";
    for (const auto& t : report) std::cout << tangent_line(t) << "\n";
    if (!svg_file.empty()) write_file(svg_file, render_svg(x, report));
    return Ok;
}

int cmd_verify(const std::string& cert_file, const std::string& set_file) {
    Document d = parse_document(slurp(cert_file));
    std::optional<ClosedSetDesc> x;
    if (!set_file.empty()) x = read_set(set_file);
    bool any = false, ok = true;
    for (const auto& r : d.records) {
        if (r.type != "certificate") continue;
        any = true;
        auto bad = verify_certificate(d, r, x);
        std::cout << r.name << ": " << (bad.empty() ? "VALID" : "INVALID") << "\n";
        for (const auto& b : bad) std::cout << "  " << b << "\n";
        ok = ok && bad.empty();
    }
    if (!any) throw DocumentError(1, 1, cert_file + " has no certificate record");
    return ok ? Ok : Negative;
}

Integer parse_cap(const std::string& s) {
    Integer c(s);
    if (c < 1) throw std::invalid_argument("cap must be positive");
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"McNaughton functions, closed sets and strong semisimplicity"};
    app.require_subcommand(1);

    std::string formula_file, out_file;
    std::size_t arity = 1;
    auto* compile_cmd = app.add_subcommand("compile", "compile a formula into a piecewise linear function");
    compile_cmd->add_option("--formula", formula_file, "formula file")->required();
    compile_cmd->add_option("--arity", arity, "number of variables")->required()->check(CLI::Range(1, 16));
    compile_cmd->add_option("--out", out_file, "output document");

    std::string set_file, witness_file, svg_file, cap_text = "1048576", lambda_text = "1/2";
    int kmax = 100;
    auto* sss_cmd = app.add_subcommand("check-sss", "decide strong semisimplicity of M(X)");
    sss_cmd->add_option("--set", set_file, "closed set document")->required();
    sss_cmd->add_option("--kmax", kmax, "dominance rows for k = 1..kmax")->check(CLI::Range(1, 100000));
    sss_cmd->add_option("--cap", cap_text, "largest k tried in the ideal check");
    sss_cmd->add_option("--lambda-max", lambda_text, "longest witness segment parameter");
    sss_cmd->add_option("--emit-witness", witness_file, "write the witness document here");
    sss_cmd->add_option("--svg", svg_file, "write a picture (two variables only)");

    std::string f_file, g_file, cert_file;
    auto* member_cmd = app.add_subcommand("ideal-member", "decide f in the principal ideal of g on X");
    member_cmd->add_option("--f", f_file, "function file")->required();
    member_cmd->add_option("--g", g_file, "function file")->required();
    member_cmd->add_option("--set", set_file, "closed set document")->required();
    member_cmd->add_option("--cap", cap_text, "largest k tried");
    member_cmd->add_option("--certificate", cert_file, "write the certificate document here");

    auto* scan_cmd = app.add_subcommand("tangent-scan", "list tangent directions at sequence limits");
    scan_cmd->add_option("--set", set_file, "closed set document")->required();
    scan_cmd->add_option("--svg", svg_file, "write a picture (two variables only)");

    auto* verify_cmd = app.add_subcommand("verify", "re-check certificates without searching");
    verify_cmd->add_option("--certificate", cert_file, "certificate document")->required();
    verify_cmd->add_option("--set", set_file, "override the closed set named in the certificate");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*compile_cmd) return cmd_compile(formula_file, arity, out_file);
        if (*sss_cmd) return cmd_check_sss(set_file, kmax, parse_cap(cap_text), parse_rational(lambda_text), witness_file, svg_file);
        if (*member_cmd) return cmd_ideal_member(f_file, g_file, set_file, parse_cap(cap_text), cert_file);
        if (*scan_cmd) return cmd_tangent_scan(set_file, svg_file);
        if (*verify_cmd) return cmd_verify(cert_file, set_file);
    } catch (const SyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return ParseFailure;
    } catch (const DocumentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return ParseFailure;
    } catch (const FileError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return ParseFailure;
    } catch (const ArityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return ArityFailure;
    } catch (const EmptySetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EmptySet;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: bad argument: " << e.what() << "\n";
        return ParseFailure;
    }
    return Ok;
}

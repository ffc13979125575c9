#include "mvss/verify.hpp"

namespace mvss {

namespace {

const Record& referenced(const Document& doc, const Record& cert, const std::string& key, const std::string& type) {
    const Field& f = cert.one(key);
    const Record* r = doc.find(type, f.value);
    if (!r) throw DocumentError(f.line, f.column, "no " + type + " named '" + f.value + "'");
    return *r;
}

bool row_ok(const DominanceRow& row, const PLFunction& j, const PLFunction& g, const ProbeSequence& s) {
    return row.i >= s.start() && s.term(row.i) == row.w && j(row.w) == row.j_value &&
           Rational(row.k) * g(row.w) == row.kg_value && row.j_value > row.kg_value;
}

}  // namespace

std::vector<std::string> verify_certificate(const Document& doc, const Record& cert,
                                            const std::optional<ClosedSetDesc>& set) {
    std::vector<std::string> bad;
    const ClosedSetDesc x = set ? *set : closedset_from(referenced(doc, cert, "set", "closedset"));
    const std::string kind = cert.one("kind").value;

    if (kind == "not-sss-witness") {
        NotSssWitness w = witness_from(cert, doc);
        if (w.x.size() != x.arity()) return {"witness arity differs from the set"};
        if (w.sequence_index >= x.sequences().size()) return {"sequence number out of range"};
        const RPoint y = axpy(w.x, w.lambda, w.u);
        if (!same_point_set(zeroset(w.g).cells, {RPolytope::segment(w.x, y)}))
            bad.push_back("zero set of g is not conv(x, x + lambda u)");
        if (!same_point_set(zeroset(w.j).cells, {RPolytope::point(w.x)})) bad.push_back("zero set of j is not {x}");
        if (membership(x, w.x) != Tri::Yes) bad.push_back("x is not a point of X");
        Outgoing o = is_outgoing(x, w.x, w.u, w.lambda);
        if (o.kind != Outgoing::Kind::Yes || o.lambda != w.lambda) bad.push_back("segment meets X outside x");
        const ProbeSequence& s = x.sequences()[w.sequence_index];
        for (const auto& row : w.dominance)
            if (!row_ok(row, w.j, w.g, s)) bad.push_back("dominance row fails: " + dominance_row_text(row));
        FactReport rep = verify_fact_chain(w, x);
        for (const auto& name : rep.failed()) bad.push_back("fact check fails: " + name + " (" + rep.find(name)->detail + ")");
        return bad;
    }

    if (kind == "ideal-membership") {
        PLFunction f = plfunction_from(referenced(doc, cert, "f", "plfunction"));
        PLFunction g = plfunction_from(referenced(doc, cert, "g", "plfunction"));
        const std::string verdict = cert.one("verdict").value;
        if (verdict == "MEMBER") {
            Integer k(cert.one("k").value);
            if (auto why = certify_bound(f, g, x, k)) bad.push_back("f <= k.g not certified: " + *why);
            if (k > 0 && !certify_bound(f, g, x, k - 1)) bad.push_back("k is not minimal");
        } else if (verdict == "NOT-MEMBER") {
            if (const Field* z = cert.find("zero")) {
                RPoint p = parse_point(z->value);
                if (membership(x, p) != Tri::Yes || g(p) != 0 || !(f(p) > 0))
                    bad.push_back("zero witness " + z->value + " does not show g = 0 < f on X");
            } else {
                bool any = false;
                for (const auto& fld : cert.fields) {
                    if (fld.key != "row") continue;
                    any = true;
                    DominanceRow row = dominance_row_from(fld);
                    bool ok = false;
                    for (const auto& s : x.sequences()) ok = ok || row_ok(row, f, g, s);
                    if (!ok) bad.push_back("dominance row fails: " + fld.value);
                }
                if (!any) bad.push_back("NOT-MEMBER without evidence");
            }
        }
        return bad;
    }

    if (kind == "cover-1d") {
        PLFunction f = plfunction_from(referenced(doc, cert, "f", "plfunction"));
        PLFunction g = plfunction_from(referenced(doc, cert, "g", "plfunction"));
        if (!verify_cover_1d(cover_from(cert), f, g, x)) bad.push_back("cover certificate does not re-verify");
        return bad;
    }

    const Field& k = cert.one("kind");
    throw DocumentError(k.line, k.column, "unknown certificate kind '" + kind + "'");
}

}  // namespace mvss

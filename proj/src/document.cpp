#include "mvss/document.hpp"

#include <algorithm>
#include <sstream>

namespace mvss {

namespace {

std::string_view trim(std::string_view s) {
    const auto* ws = " \t\r";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(const Field& f, const std::string& msg) {
    throw DocumentError(f.line, f.column, "'" + f.key + "': " + msg);
}

std::vector<std::string> words(std::string_view s) {
    std::istringstream in{std::string(s)};
    std::vector<std::string> out;
    for (std::string w; in >> w;) out.push_back(w);
    return out;
}

Integer integer(const Field& f, const std::string& w) {
    try {
        if (w.empty() || w.find_first_not_of("+-0123456789") != std::string::npos) throw std::invalid_argument(w);
        return Integer(w[0] == '+' ? w.substr(1) : w);
    } catch (const std::exception&) {
        fail(f, "expected an integer, got '" + w + "'");
    }
}

Rational rational(const Field& f, const std::string& w) {
    try {
        return parse_rational(w);
    } catch (const std::exception&) {
        fail(f, "expected a rational, got '" + w + "'");
    }
}

std::size_t count(const Field& f) {
    Integer v = integer(f, f.value);
    if (v < 1 || v > 64) fail(f, "expected a small positive integer");
    return v.convert_to<std::size_t>();
}

// "(a,b) (c,d) ..."
std::vector<RPoint> points(const Field& f, std::size_t n) {
    std::vector<RPoint> out;
    std::string_view s = f.value;
    std::size_t pos = 0;
    while (true) {
        pos = s.find_first_not_of(" \t", pos);
        if (pos == std::string_view::npos) break;
        if (s[pos] != '(') fail(f, "expected '(' at offset " + std::to_string(pos + 1));
        auto close = s.find(')', pos);
        if (close == std::string_view::npos) fail(f, "unbalanced parenthesis");
        RPoint p;
        try {
            p = parse_point(s.substr(pos, close - pos + 1));
        } catch (const std::exception&) {
            fail(f, "malformed point '" + std::string(s.substr(pos, close - pos + 1)) + "'");
        }
        if (p.size() != n) fail(f, "point of arity " + std::to_string(p.size()) + ", expected " + std::to_string(n));
        out.push_back(std::move(p));
        pos = close + 1;
    }
    if (out.empty()) fail(f, "expected at least one point");
    return out;
}

RPoint one_point(const Field& f, std::size_t n) {
    auto p = points(f, n);
    if (p.size() != 1) fail(f, "expected a single point");
    return p[0];
}

std::string poly_words(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& c : p.coeffs()) out += (out.empty() ? "" : " ") + c.str();
    return out;
}

Poly poly_from(const Field& f, std::string_view s) {
    std::vector<Integer> c;
    for (const auto& w : words(s)) c.push_back(integer(f, w));
    if (c.empty()) fail(f, "empty coefficient list");
    return Poly(std::move(c));
}

std::string points_text(const std::vector<RPoint>& ps) {
    std::string out;
    for (const auto& p : ps) out += (out.empty() ? "" : " ") + to_string(p);
    return out;
}

std::pair<std::string_view, std::string_view> split_at(const Field& f, char sep) {
    auto k = f.value.find(sep);
    if (k == std::string::npos) fail(f, std::string("expected '") + sep + "'");
    std::string_view v = f.value;
    return {trim(v.substr(0, k)), trim(v.substr(k + 1))};
}

}  // namespace

DocumentError::DocumentError(std::size_t l, std::size_t c, const std::string& msg)
    : std::runtime_error("line " + std::to_string(l) + ", column " + std::to_string(c) + ": " + msg), line(l), column(c) {}

const Field& Record::one(const std::string& key) const {
    const Field* f = find(key);
    if (!f) throw DocumentError(line, 1, type + " '" + name + "' lacks field '" + key + "'");
    return *f;
}

const Field* Record::find(const std::string& key) const {
    for (const auto& f : fields)
        if (f.key == key) return &f;
    return nullptr;
}

const Record* Document::find(const std::string& type, const std::string& name) const {
    for (const auto& r : records)
        if (r.type == type && (name.empty() || r.name == name)) return &r;
    return nullptr;
}

bool operator==(const Field& a, const Field& b) { return a.key == b.key && a.value == b.value; }
bool operator==(const Record& a, const Record& b) {
    return a.type == b.type && a.name == b.name && a.fields == b.fields;
}
bool operator==(const Document& a, const Document& b) { return a.records == b.records; }

const std::vector<std::string>& record_types() {
    static const std::vector<std::string> t{"formula", "plfunction", "closedset", "cone", "verdict", "certificate"};
    return t;
}

Document parse_document(std::string_view text) {
    Document doc;
    Record* open = nullptr;
    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++lineno;
        std::string_view line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        const std::size_t indent = raw.find_first_not_of(" \t") + 1;
        if (open) {
            if (line == "}") {
                open = nullptr;
                continue;
            }
            auto colon = line.find(':');
            if (colon == std::string_view::npos || colon == 0)
                throw DocumentError(lineno, indent, "expected 'key: value' inside " + open->type + " '" + open->name + "'");
            std::string_view value = trim(line.substr(colon + 1));
            std::size_t col = value.empty() ? indent + colon + 1 : raw.find(value, indent - 1 + colon) + 1;
            open->fields.push_back(Field{std::string(trim(line.substr(0, colon))), std::string(value), lineno, col});
            continue;
        }
        auto w = words(line);
        const auto& types = record_types();
        if (std::find(types.begin(), types.end(), w[0]) == types.end())
            throw DocumentError(lineno, indent, "unknown record type '" + w[0] + "'");
        if (w.size() != 3 || w[2] != "{")
            throw DocumentError(lineno, indent, "expected '" + w[0] + " <name> {'");
        Record r;
        r.type = w[0];
        r.name = w[1];
        r.line = lineno;
        doc.records.push_back(std::move(r));
        open = &doc.records.back();
    }
    if (open) throw DocumentError(lineno, 1, "unterminated " + open->type + " '" + open->name + "'");
    return doc;
}

std::string print_document(const Document& d) {
    std::string out;
    for (std::size_t i = 0; i < d.records.size(); ++i) {
        const auto& r = d.records[i];
        if (i) out += "\n";
        out += r.type + " " + r.name + " {\n";
        for (const auto& f : r.fields) out += "  " + f.key + ": " + f.value + "\n";
        out += "}\n";
    }
    return out;
}

// ---------------------------------------------------------------- formula

Record formula_record(const std::string& name, const Formula& f, std::size_t arity) {
    Record r{"formula", name, {}, 0};
    r.add("arity", std::to_string(arity));
    r.add("text", serialize(f));
    return r;
}

Formula formula_from(const Record& r, std::size_t* arity) {
    std::size_t n = count(r.one("arity"));
    if (arity) *arity = n;
    const Field& t = r.one("text");
    try {
        return parse_formula(t.value, n);
    } catch (const SyntaxError& e) {
        std::string msg = e.what();
        msg = msg.substr(msg.find(": ") + 2);
        throw SyntaxError(t.line + e.line - 1, e.line == 1 ? t.column + e.column - 1 : e.column, msg);
    }
}

// ---------------------------------------------------------------- plfunction

Record plfunction_record(const std::string& name, const PLFunction& f) {
    Record r{"plfunction", name, {}, 0};
    r.add("arity", std::to_string(f.arity()));
    for (const auto& p : f.pieces()) {
        r.add("cell", points_text(p.cell.vertices()));
        std::string m;
        for (const auto& c : p.map.coeffs) m += c.str() + " ";
        r.add("map", m + "| " + p.map.constant.str());
    }
    return r;
}

PLFunction plfunction_from(const Record& r) {
    const std::size_t n = count(r.one("arity"));
    std::vector<Piece> pieces;
    std::optional<RPolytope> cell;
    for (const auto& f : r.fields) {
        if (f.key == "arity") continue;
        if (f.key == "cell") {
            if (cell) fail(f, "cell without map");
            cell = RPolytope::from_vertices(points(f, n), n);
        } else if (f.key == "map") {
            if (!cell) fail(f, "map without cell");
            auto [lhs, rhs] = split_at(f, '|');
            AffineMap m;
            for (const auto& w : words(lhs)) m.coeffs.push_back(integer(f, w));
            if (m.coeffs.size() != n) fail(f, "expected " + std::to_string(n) + " coefficients");
            auto c = words(rhs);
            if (c.size() != 1) fail(f, "expected one constant after '|'");
            m.constant = integer(f, c[0]);
            pieces.emplace_back(std::move(*cell), std::move(m));
            cell.reset();
        } else {
            fail(f, "unknown plfunction field");
        }
    }
    if (cell) throw DocumentError(r.line, 1, "plfunction '" + r.name + "': last cell has no map");
    try {
        return PLFunction::from_pieces(n, std::move(pieces));
    } catch (const PLError& e) {
        throw DocumentError(r.line, 1, "plfunction '" + r.name + "': " + e.what());
    }
}

// ---------------------------------------------------------------- closedset

Record closedset_record(const std::string& name, const ClosedSetDesc& x) {
    Record r{"closedset", name, {}, 0};
    r.add("arity", std::to_string(x.arity()));
    for (const auto& p : x.polytopes()) r.add("polytope", points_text(p.vertices()));
    for (const auto& s : x.sequences()) {
        if (const auto* q = std::get_if<RationalSchema>(&s.schema())) {
            r.add("sequence", "rational");
            r.add("limit", to_string(s.limit()));
            r.add("start", std::to_string(s.start()));
            for (std::size_t j = 0; j < q->num.size(); ++j) r.add("coord", poly_words(q->num[j]) + " / " + poly_words(q->den[j]));
        } else {
            const auto& b = std::get<RecurrenceSchema>(s.schema());
            r.add("sequence", "recurrence");
            r.add("limit", to_string(s.limit()));
            r.add("start", std::to_string(s.start()));
            r.add("recurrence", b.a.str() + " " + b.b.str());
            for (const auto& base : b.bases) r.add("base", base.first.str() + " " + base.second.str());
            for (std::size_t j = 0; j < b.coeff.size(); ++j) {
                std::string e;
                for (int k : b.exponents[j]) e += " " + std::to_string(k);
                r.add("coord", to_string(b.coeff[j]) + " :" + e);
            }
        }
    }
    return r;
}

ClosedSetDesc closedset_from(const Record& r) {
    const std::size_t n = count(r.one("arity"));
    struct Pending {
        const Field* head;
        bool rational;
        std::optional<RPoint> limit;
        std::optional<Index> start;
        RationalSchema q;
        std::optional<RecurrenceSchema> rec;
        std::vector<BaseSequence> bases;
        std::vector<Rational> coeff;
        std::vector<std::vector<int>> exps;
    };
    std::vector<RPolytope> polys;
    std::vector<Pending> seqs;
    for (const auto& f : r.fields) {
        if (f.key == "arity") continue;
        if (f.key == "polytope") {
            polys.push_back(RPolytope::from_vertices(points(f, n), n));
            continue;
        }
        if (f.key == "sequence") {
            if (f.value != "rational" && f.value != "recurrence") fail(f, "expected 'rational' or 'recurrence'");
            seqs.push_back(Pending{&f, f.value == "rational", {}, {}, {}, {}, {}, {}, {}});
            continue;
        }
        if (seqs.empty()) fail(f, f.key == "limit" || f.key == "start" || f.key == "coord" || f.key == "recurrence" || f.key == "base"
                                  ? "field outside a sequence" : "unknown closedset field");
        Pending& s = seqs.back();
        if (f.key == "limit") {
            s.limit = one_point(f, n);
        } else if (f.key == "start") {
            s.start = integer(f, f.value).convert_to<Index>();
        } else if (f.key == "coord" && s.rational) {
            auto [num, den] = split_at(f, '/');
            s.q.num.push_back(poly_from(f, num));
            s.q.den.push_back(poly_from(f, den));
        } else if (f.key == "coord") {
            auto [c, e] = split_at(f, ':');
            s.coeff.push_back(rational(f, std::string(c)));
            std::vector<int> ex;
            for (const auto& w : words(e)) ex.push_back(integer(f, w).convert_to<int>());
            s.exps.push_back(std::move(ex));
        } else if (f.key == "recurrence" && !s.rational) {
            auto w = words(f.value);
            if (w.size() != 2) fail(f, "expected 'a b'");
            s.rec = RecurrenceSchema{integer(f, w[0]), integer(f, w[1]), {}, {}, {}};
        } else if (f.key == "base" && !s.rational) {
            auto w = words(f.value);
            if (w.size() != 2) fail(f, "expected two initial values");
            s.bases.push_back(BaseSequence{integer(f, w[0]), integer(f, w[1])});
        } else {
            fail(f, "unknown field for a " + s.head->value + " sequence");
        }
    }
    std::vector<ProbeSequence> out;
    for (auto& s : seqs) {
        const Field& h = *s.head;
        if (!s.limit) fail(h, "sequence lacks 'limit'");
        if (!s.start) fail(h, "sequence lacks 'start'");
        try {
            if (s.rational) {
                out.emplace_back(*s.limit, *s.start, s.q);
            } else {
                if (!s.rec) fail(h, "sequence lacks 'recurrence'");
                s.rec->bases = s.bases;
                s.rec->coeff = s.coeff;
                s.rec->exponents = s.exps;
                out.emplace_back(*s.limit, *s.start, *s.rec);
            }
        } catch (const EmptySetError&) {
            throw;
        } catch (const ClosedSetError& e) {
            fail(h, e.what());
        }
    }
    try {
        return ClosedSetDesc(n, std::move(polys), std::move(out));
    } catch (const EmptySetError&) {
        throw;
    } catch (const ClosedSetError& e) {
        throw DocumentError(r.line, 1, "closedset '" + r.name + "': " + e.what());
    }
}

// ---------------------------------------------------------------- cone

Record cone_record(const std::string& name, const Cone& c) {
    Record r{"cone", name, {}, 0};
    r.add("apex", to_string(c.apex));
    r.add("axis", to_string(c.axis));
    r.add("height", to_string(c.height));
    r.add("cos", to_string(c.cos_half_angle));
    return r;
}

Cone cone_from(const Record& r) {
    const Field& a = r.one("apex");
    RPoint apex = one_point(a, std::count(a.value.begin(), a.value.end(), ',') + 1);
    RVector axis = one_point(r.one("axis"), apex.size());
    return Cone{apex, axis, rational(r.one("height"), r.one("height").value), rational(r.one("cos"), r.one("cos").value)};
}

// ---------------------------------------------------------------- outputs

std::string to_string(IdealMembershipResult::Kind k) {
    switch (k) {
        case IdealMembershipResult::Kind::Member: return "MEMBER";
        case IdealMembershipResult::Kind::NotMember: return "NOT-MEMBER";
        case IdealMembershipResult::Kind::Unknown: return "UNKNOWN";
    }
    return "?";
}

std::string dominance_row_text(const DominanceRow& row) {
    return row.k.str() + " " + std::to_string(row.i) + " " + to_string(row.w) + " " + to_string(row.j_value) + " " +
           to_string(row.kg_value);
}

DominanceRow dominance_row_from(const Field& f) {
    auto open = f.value.find('('), close = f.value.find(')');
    if (open == std::string::npos || close == std::string::npos || close < open) fail(f, "expected 'k i (w) j kg'");
    auto head = words(std::string_view(f.value).substr(0, open));
    auto tail = words(std::string_view(f.value).substr(close + 1));
    if (head.size() != 2 || tail.size() != 2) fail(f, "expected 'k i (w) j kg'");
    DominanceRow row;
    row.k = integer(f, head[0]);
    row.i = integer(f, head[1]).convert_to<Index>();
    try {
        row.w = parse_point(std::string_view(f.value).substr(open, close - open + 1));
    } catch (const std::exception&) {
        fail(f, "malformed point");
    }
    row.j_value = rational(f, tail[0]);
    row.kg_value = rational(f, tail[1]);
    return row;
}

Record verdict_record(const std::string& name, const SssVerdict& v, const std::string& witness) {
    Record r{"verdict", name, {}, 0};
    r.add("verdict", to_string(v.kind));
    if (v.reason != SssVerdict::Reason::None) r.add("reason", to_string(v.reason));
    if (!witness.empty()) r.add("witness", witness);
    for (const auto& b : v.blockers) r.add("blocker", b);
    for (const auto& n : v.notes) r.add("note", n);
    return r;
}

Record witness_record(const std::string& name, const NotSssWitness& w, const std::string& g, const std::string& j,
                      const std::string& set) {
    Record r{"certificate", name, {}, 0};
    r.add("kind", "not-sss-witness");
    r.add("set", set);
    r.add("x", to_string(w.x));
    r.add("u", to_string(w.u));
    r.add("lambda", to_string(w.lambda));
    r.add("sequence", std::to_string(w.sequence_index + 1));
    r.add("g", g);
    r.add("j", j);
    for (const auto& row : w.dominance) r.add("row", dominance_row_text(row));
    return r;
}

NotSssWitness witness_from(const Record& r, const Document& d) {
    if (r.one("kind").value != "not-sss-witness") fail(r.one("kind"), "not a witness");
    auto fn = [&](const char* key) {
        const Field& f = r.one(key);
        const Record* p = d.find("plfunction", f.value);
        if (!p) fail(f, "no plfunction named '" + f.value + "'");
        return plfunction_from(*p);
    };
    PLFunction g = fn("g"), j = fn("j");
    const std::size_t n = g.arity();
    const Field& seq = r.one("sequence");
    Integer si = integer(seq, seq.value);
    if (si < 1) fail(seq, "sequences are numbered from 1");
    NotSssWitness w{one_point(r.one("x"), n), one_point(r.one("u"), n), rational(r.one("lambda"), r.one("lambda").value),
                    std::move(g), std::move(j), si.convert_to<std::size_t>() - 1, {}};
    for (const auto& f : r.fields)
        if (f.key == "row") w.dominance.push_back(dominance_row_from(f));
    return w;
}

Record membership_record(const std::string& name, const IdealMembershipResult& m, const std::string& f,
                         const std::string& g, const std::string& set) {
    Record r{"certificate", name, {}, 0};
    r.add("kind", "ideal-membership");
    r.add("verdict", to_string(m.kind));
    r.add("f", f);
    r.add("g", g);
    r.add("set", set);
    if (m.kind == IdealMembershipResult::Kind::Member) r.add("k", m.k.str());
    if (m.zero_witness) r.add("zero", to_string(*m.zero_witness));
    for (const auto& row : m.dominance) r.add("row", dominance_row_text(row));
    if (!m.note.empty()) r.add("note", m.note);
    return r;
}

Record cover_record(const std::string& name, const CoverCertificate1D& c, const std::string& f, const std::string& g,
                    const std::string& set) {
    Record r{"certificate", name, {}, 0};
    r.add("kind", "cover-1d");
    r.add("f", f);
    r.add("g", g);
    r.add("set", set);
    r.add("m", c.m.str());
    for (const auto& e : c.entries)
        r.add("entry", to_string(e.x) + " " + to_string(e.lo) + " " + to_string(e.hi) + " " + e.m.str() + " " + to_string(e.tag));
    return r;
}

CoverCertificate1D cover_from(const Record& r) {
    CoverCertificate1D c;
    c.m = integer(r.one("m"), r.one("m").value);
    for (const auto& f : r.fields) {
        if (f.key != "entry") continue;
        auto w = words(f.value);
        if (w.size() != 5) fail(f, "expected 'x lo hi m case'");
        CoverEntry e{rational(f, w[0]), rational(f, w[1]), rational(f, w[2]), integer(f, w[3]), CoverCase::Case1};
        bool known = false;
        for (CoverCase t : {CoverCase::Case1, CoverCase::Sub2_1, CoverCase::Sub2_2_1, CoverCase::Sub2_2_2, CoverCase::Sub2_2_3})
            if (to_string(t) == w[4]) {
                e.tag = t;
                known = true;
            }
        if (!known) fail(f, "unknown case tag '" + w[4] + "'");
        c.entries.push_back(e);
    }
    return c;
}

}  // namespace mvss

// Acceptance suite: one PASS/FAIL line per criterion, exact arithmetic
// throughout; the only tolerances are the wall-clock budgets below.
#include "fixtures.hpp"
#include "mvss/decision.hpp"
#include "mvss/formula.hpp"
#include "test_support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace mvss;
using namespace mvss::fixtures;
using mvss::testing::pt;

namespace {

// Budgets in seconds.
constexpr double budget_cusp = 30, budget_suite = 60, budget_facts = 10, budget_compile = 60, budget_derivative = 30,
                 budget_cones = 30, budget_ideals = 60, budget_axioms = 60;

// Sizes.
constexpr int cusp_kmax = 100;
constexpr int compile_formulas = 50, compile_depth = 6, compile_points = 10000;
constexpr int derivative_triples = 200, derivative_steps = 5;
constexpr std::size_t cone_min = 100;
constexpr int ideal_pairs = 20;
constexpr int axiom_pairs = 30;

struct Outcome {
    bool ok = true;
    std::string detail;
    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

int failures = 0;

void run(int id, const std::string& title, double budget, const std::function<Outcome()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && secs > budget) o.fail("over budget");
    char head[160];
    std::snprintf(head, sizeof head, "%s criterion %d: %s [%.2fs / %.0fs]", o.ok ? "PASS" : "FAIL", id, title.c_str(), secs, budget);
    std::cout << head << (o.detail.empty() ? "" : " - " + o.detail) << std::endl;
    if (!o.ok) ++failures;
}

ClosedSetDesc second_polytope() { return ClosedSetDesc(2, {square(Rational(1, 4), Rational(3, 4))}, {}); }

// Witnesses shared by criteria 1-3 and 6.
std::vector<std::pair<std::string, ClosedSetDesc>> not_sss_sets() { return {{"cusp", cusp()}, {"cubic cusp", cusp(3)}}; }

Outcome cusp_experiment() {
    Outcome o;
    ClosedSetDesc x = cusp();
    SssVerdict v = decide_sss(x, DecisionOptions{cusp_kmax, Rational(1, 2)});
    if (v.kind != SssVerdict::Kind::NotStronglySemisimple || !v.witness) {
        o.fail("verdict " + to_string(v.kind));
        return o;
    }
    const NotSssWitness& w = *v.witness;
    if (!same_point_set(zeroset(w.g).cells, {RPolytope::segment(origin(2), pt({Rational(1, 2), 0}))}))
        o.fail("zero set of g is not conv((0,0),(1/2,0))");
    if (!same_point_set(zeroset(w.j).cells, {RPolytope::point(origin(2))})) o.fail("zero set of j is not {(0,0)}");
    for (int k = 1; k <= cusp_kmax; ++k) {
        const DominanceRow* row = nullptr;
        for (const auto& r : w.dominance)
            if (r.k == k) row = &r;
        if (!row) {
            o.fail("no row for k=" + std::to_string(k));
            continue;
        }
        const Rational i(row->i);
        // j is x1 + x2 near the origin, so j(w_i) = 1/i + 1/i^2
        const RPoint wi = pt({1 / i, 1 / (i * i)});
        if (row->i > 10 * k + 10) o.fail("k=" + std::to_string(k) + " needs i=" + std::to_string(row->i));
        if (row->w != wi || row->j_value != 1 / i + 1 / (i * i) || w.j(wi) != row->j_value ||
            row->kg_value != k * w.g(wi) || !(row->j_value > row->kg_value))
            o.fail("row for k=" + std::to_string(k) + " does not re-evaluate");
    }
    o.detail = std::to_string(w.dominance.size()) + " dominance rows";
    return o;
}

Outcome decision_suite() {
    Outcome o;
    struct Case {
        std::string name;
        ClosedSetDesc x;
        SssVerdict::Kind expect;
    };
    using K = SssVerdict::Kind;
    std::vector<Case> cases{{"triangle", ClosedSetDesc(2, {triangle()}, {}), K::StronglySemisimple},
                            {"square", second_polytope(), K::StronglySemisimple},
                            {"cusp", cusp(), K::NotStronglySemisimple},
                            {"cubic cusp", cusp(3), K::NotStronglySemisimple},
                            {"pell", pell(), K::StronglySemisimple},
                            {"aligned", aligned(), K::StronglySemisimple}};
    int mismatches = 0;
    for (const auto& c : cases) {
        SssVerdict v = decide_sss_dim2(c.x);
        if (v.kind != c.expect) {
            ++mismatches;
            o.fail(c.name + " gave " + to_string(v.kind));
        }
    }
    SssVerdict p = decide_sss_dim2(pell());
    if (p.report.empty() || p.report[0].direction.kind != DirectionVerdict::Kind::Irrational)
        o.fail("pell direction not certified irrational");
    SssVerdict a = decide_sss_dim2(aligned());
    if (a.report.empty() || a.report[0].outgoing.kind != Outgoing::Kind::AllAligned) o.fail("aligned tangent not AllAligned");
    if (o.ok) o.detail = std::to_string(cases.size()) + " sets, 0 mismatches";
    else o.detail += " (" + std::to_string(mismatches) + " mismatches)";
    return o;
}

std::vector<std::string> failed_facts(const FactReport& r) {
    std::vector<std::string> out;
    for (const auto& c : r.checks)
        if (!c.supporting && c.status == FactCheck::Status::Fail) out.push_back(c.name);
    return out;
}

Outcome fact_chain() {
    Outcome o;
    int witnesses = 0;
    for (const auto& [name, x] : not_sss_sets()) {
        SssVerdict v = decide_sss(x);
        if (!v.witness) {
            o.fail(name + ": no witness");
            continue;
        }
        ++witnesses;
        FactReport r = verify_fact_chain(*v.witness, x);
        for (const auto& fact : fact_names()) {
            const FactCheck* c = r.find(fact);
            if (!c || c->status != FactCheck::Status::Pass) o.fail(name + ": " + fact + " does not pass");
        }
        if (!r.all_pass()) o.fail(name + ": a supporting check fails");
    }
    const ClosedSetDesc x = cusp();
    const NotSssWitness w = *decide_sss(x).witness;
    NotSssWitness flat_j = w;
    flat_j.j = PLFunction::constant(2, 0);
    if (failed_facts(verify_fact_chain(flat_j, x)) != std::vector<std::string>{"j-rises-along-u"})
        o.fail("sabotage j = 0 does not fail exactly j-rises-along-u");
    NotSssWitness lifted = w;
    PLFunction bump = truncated_multiple(point_zero_function(w.x), 64);
    lifted.g = mv_max(w.g, mv_neg(mv_otimes(bump, bump)));
    if (failed_facts(verify_fact_chain(lifted, x)) != std::vector<std::string>{"g-vanishes-at-x"})
        o.fail("sabotage g(x) = 1 does not fail exactly g-vanishes-at-x");
    if (o.ok) o.detail = std::to_string(witnesses) + " witnesses, 2 sabotaged";
    return o;
}

Outcome compile_oracle() {
    Outcome o;
    std::mt19937_64 rng(mvss::testing::test_seed());
    long mismatches = 0;
    for (int t = 0; t < compile_formulas; ++t) {
        const std::size_t n = 1 + t % 3;
        Formula phi = mvss::testing::random_formula(rng, n, compile_depth);
        PLFunction f = compile(phi, n);
        for (int p = 0; p < compile_points; ++p) {
            RPoint q = mvss::testing::random_cube_point(rng, n, 1000);
            if (f(q) != evaluate(phi, q)) {
                if (!mismatches) o.fail("mismatch for " + serialize(phi) + " at " + to_string(q));
                ++mismatches;
            }
        }
    }
    if (o.ok) o.detail = "0 mismatches";
    return o;
}

Outcome derivative_ratio() {
    Outcome o;
    std::mt19937_64 rng(mvss::testing::test_seed() + 1);
    int done = 0;
    while (done < derivative_triples) {
        const std::size_t n = 1 + done % 3;
        PLFunction f = compile(mvss::testing::random_formula(rng, n, 4), n);
        RPoint x = mvss::testing::random_cube_point(rng, n);
        RVector u(n);
        std::uniform_int_distribution<long> c(-5, 5);
        for (auto& v : u) v = Rational(c(rng), 1 + std::abs(c(rng)));
        if (is_zero(u)) continue;
        DirectionalDerivative d;
        try {
            d = derivative_along(f, x, u);
        } catch (const DirectionError&) {
            continue;  // u leaves the cube at x
        }
        ++done;
        for (int s = 1; s <= derivative_steps; ++s) {
            Rational t = d.exit * s / (derivative_steps + 1);
            Rational ratio = (f(axpy(x, t, u)) - f(x)) / t;
            if (ratio != d.value) o.fail("f'(x;u) = " + to_string(d.value) + " but ratio " + to_string(ratio));
        }
    }
    if (o.ok) o.detail = std::to_string(done) + " triples";
    return o;
}

Outcome cone_equivalence() {
    Outcome o;
    std::vector<std::pair<std::string, ClosedSetDesc>> sets = not_sss_sets();
    sets.emplace_back("aligned", aligned());
    int witnesses = 0;
    std::string controls;
    for (const auto& [name, x] : sets)
        for (const auto& t : tangent_report(x)) {
            if (t.direction.kind != DirectionVerdict::Kind::Rational) continue;
            ++witnesses;
            ClosedSetDesc only(x.arity(), {}, {x.sequences()[t.sequence_index]});
            for (const Rational& eps : {Rational(1, 2), Rational(1, 4), Rational(1, 8)})
                for (const Rational& cs : {Rational(1, 2), Rational(9, 10), Rational(99, 100)}) {
                    ConeCount c = count_in_cone(only, Cone{t.x, t.direction.u, eps, cs}, cone_min);
                    if (c.kind != ConeCount::Kind::AtLeast)
                        o.fail(name + ": cone eps=" + to_string(eps) + " cos=" + to_string(cs) + " not AtLeast");
                }
            RVector rotated{-t.direction.u[1], t.direction.u[0]};
            ConeCount control = count_in_cone(only, Cone{t.x, rotated, Rational(1, 2), Rational(9, 10)}, cone_min);
            if (control.kind != ConeCount::Kind::Exactly) o.fail(name + ": rotated control cone is not finite");
            controls += " " + std::to_string(control.count);
            // half-way rotation catches a few early terms but not the tail
            RVector tilted = add(t.direction.u, rotated);
            ConeCount near = count_in_cone(only, Cone{t.x, tilted, Rational(1), Rational(9, 10)}, cone_min);
            if (near.kind != ConeCount::Kind::Exactly) o.fail(name + ": tilted control cone is not finite");
            controls += "/" + std::to_string(near.count);
        }
    if (witnesses == 0) o.fail("no rational tangent witnesses");
    if (o.ok) o.detail = std::to_string(witnesses) + " witnesses x 9 cones; control counts" + controls;
    return o;
}

Outcome polyhedral_ideals() {
    Outcome o;
    std::mt19937_64 rng(mvss::testing::test_seed() + 2);
    const std::vector<ClosedSetDesc> sets{
        ClosedSetDesc(2, {triangle()}, {}), second_polytope(),
        ClosedSetDesc(2, {RPolytope::segment(pt({0, Rational(1, 3)}), pt({1, Rational(2, 3)})), RPolytope::point(pt({Rational(1, 5), 1}))}, {}),
        ClosedSetDesc(2, {RPolytope::from_vertices({pt({0, 0}), pt({1, 0}), pt({1, 1}), pt({0, 1})}, 2)}, {})};
    int done = 0;
    std::string ks;
    std::uniform_int_distribution<int> kind(0, 2), mult(2, 4);
    while (done < ideal_pairs) {
        const ClosedSetDesc& x = sets[done % sets.size()];
        PLFunction g = compile(mvss::testing::random_formula(rng, 2, 3), 2);
        PLFunction h = compile(mvss::testing::random_formula(rng, 2, 3), 2);
        PLFunction f = [&] {
            switch (kind(rng)) {
                case 0: return mv_oplus(g, g);
                case 1: return mv_min(g, h);
                default: return mv_min(truncated_multiple(g, mult(rng)), h);
            }
        }();
        ++done;
        IdealMembershipResult r = ideal_membership(f, g, x);
        if (r.kind != IdealMembershipResult::Kind::Member) {
            o.fail("pair " + std::to_string(done) + ": " + (r.kind == IdealMembershipResult::Kind::Unknown ? "cap reached" : "NotMember"));
            continue;
        }
        ks += " " + r.k.str();
        if (certify_bound(f, g, x, r.k)) o.fail("pair " + std::to_string(done) + ": k does not re-verify");
        if (r.k > 0 && !certify_bound(f, g, x, r.k - 1)) o.fail("pair " + std::to_string(done) + ": k not minimal");
    }
    if (o.ok) o.detail = std::to_string(done) + " pairs, minimal k:" + ks;
    return o;
}

Outcome mv_axioms() {
    Outcome o;
    std::mt19937_64 rng(mvss::testing::test_seed() + 3);
    for (int t = 0; t < axiom_pairs; ++t) {
        const std::size_t n = 1 + t % 3;
        PLFunction f = compile(mvss::testing::random_formula(rng, n, 4), n);
        PLFunction g = compile(mvss::testing::random_formula(rng, n, 4), n);
        PLFunction h = compile(mvss::testing::random_formula(rng, n, 3), n);
        const std::string at = "pair " + std::to_string(t) + ": ";
        if (!pl_equal(mv_oplus(f, g), mv_oplus(g, f))) o.fail(at + "oplus not commutative");
        if (!pl_equal(mv_oplus(mv_oplus(f, g), h), mv_oplus(f, mv_oplus(g, h)))) o.fail(at + "oplus not associative");
        if (!pl_equal(mv_neg(mv_neg(f)), f)) o.fail(at + "double negation");
        if (!pl_equal(mv_oplus(mv_neg(mv_oplus(mv_neg(f), g)), g), mv_oplus(mv_neg(mv_oplus(mv_neg(g), f)), f)))
            o.fail(at + "Lukasiewicz axiom");
    }
    if (o.ok) o.detail = std::to_string(axiom_pairs) + " pairs, 0 failures";
    return o;
}

}  // namespace

int main() {
    std::cout << "seed " << mvss::testing::test_seed() << std::endl;
    run(1, "cusp witness and dominance table", budget_cusp, cusp_experiment);
    run(2, "two-variable decision suite", budget_suite, decision_suite);
    run(3, "fact chain on witnesses and sabotage", budget_facts, fact_chain);
    run(4, "compiled functions match formula evaluation", budget_compile, compile_oracle);
    run(5, "directional derivative equals incremental ratio", budget_derivative, derivative_ratio);
    run(6, "tangent cones catch the tail", budget_cones, cone_equivalence);
    run(7, "polyhedral ideal membership", budget_ideals, polyhedral_ideals);
    run(8, "MV-algebra identities", budget_axioms, mv_axioms);
    return failures == 0 ? 0 : 1;
}

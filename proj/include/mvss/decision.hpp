#pragma once

#include "mvss/closed_set.hpp"
#include "mvss/plfunction.hpp"
#include "mvss/tangent.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mvss {

/// Exact evidence that j beats k*g at one term of a sequence.
struct DominanceRow {
    Integer k;
    Index i = 0;
    RPoint w;
    Rational j_value;
    Rational kg_value;  // k * g(w), not truncated
};
using DominanceTable = std::vector<DominanceRow>;

/// An index i >= s.start() (within the search bound 100k + 1000) with
/// j(w_i) > k g(w_i). The first 256 indices are tried in order, then
/// offsets 512, 1024, ... from the start.
std::optional<DominanceRow> find_dominance(const PLFunction& j, const PLFunction& g, const ProbeSequence& s,
                                           const Integer& k);

struct IdealMembershipResult {
    enum class Kind { Member, NotMember, Unknown } kind = Kind::Unknown;
    Integer k;                          // Member: minimal certified k
    std::optional<RPoint> zero_witness; // NotMember: g = 0 < f at this point of X
    DominanceTable dominance;           // NotMember on sequences, one row per tested k
    std::vector<std::string> evidence;
    std::string note;
};

inline const Integer default_membership_cap = Integer(1) << 20;

/// Decides f in the principal ideal generated by g restricted to X, i.e.
/// f <= k.g on X for some k.
IdealMembershipResult ideal_membership(const PLFunction& f, const PLFunction& g, const ClosedSetDesc& x,
                                       const Integer& cap = default_membership_cap);

/// f <= min(1, k g) on X, certified exactly (polytopes, tail boxes, prefixes).
/// Returns nullopt when certified, otherwise a reason; sets violation when
/// an explicit point of X breaks the inequality.
std::optional<std::string> certify_bound(const PLFunction& f, const PLFunction& g, const ClosedSetDesc& x,
                                         const Integer& k, std::optional<RPoint>* violation = nullptr);

enum class CoverCase { Case1, Sub2_1, Sub2_2_1, Sub2_2_2, Sub2_2_3 };
std::string to_string(CoverCase c);

struct CoverEntry {
    Rational x;            // a point of X
    Rational lo, hi;       // neighbourhood: X-points of [lo, hi]
    Integer m;
    CoverCase tag;
};

struct CoverCertificate1D {
    std::vector<CoverEntry> entries;
    Integer m;  // max over entries
};

struct HypothesisViolation : std::runtime_error {
    HypothesisViolation(const RPoint& p, const std::string& what) : std::runtime_error(what), point(p) {}
    RPoint point;
};

CoverCertificate1D cover_certificate_1d(const PLFunction& f, const PLFunction& g, const ClosedSetDesc& x);

/// Re-checks a certificate: the neighbourhoods cover X and m.g >= f on each.
bool verify_cover_1d(const CoverCertificate1D& c, const PLFunction& f, const PLFunction& g, const ClosedSetDesc& x);

struct NotSssWitness {
    RPoint x;
    RVector u;
    Rational lambda;
    PLFunction g;  // zero set conv(x, x + lambda u)
    PLFunction j;  // zero set {x}
    std::size_t sequence_index = 0;
    DominanceTable dominance;
};

struct WitnessError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

NotSssWitness not_sss_witness(const ClosedSetDesc& x, const TangentWitness& t, int kmax = 100,
                              const Rational& lambda_max = Rational(1, 2));

struct FactCheck {
    enum class Status { Pass, Fail, NotApplicable };
    std::string name;
    Status status = Status::Fail;
    std::string detail;
    bool supporting = false;  // auxiliary check rather than one of the chain facts
};

struct FactReport {
    std::vector<FactCheck> checks;
    bool facts_pass() const;
    bool all_pass() const;
    const FactCheck* find(const std::string& name) const;
    std::vector<std::string> failed() const;
};

/// Names of the chain checks, in order.
const std::vector<std::string>& fact_names();

FactReport verify_fact_chain(const NotSssWitness& w, const ClosedSetDesc& x);

struct SssVerdict {
    enum class Kind { StronglySemisimple, NotStronglySemisimple, Unknown } kind = Kind::Unknown;
    enum class Reason { None, PolyhedralHW, NoRationalOutgoingTangent, Dim1 } reason = Reason::None;
    std::vector<TangentWitness> report;
    std::optional<NotSssWitness> witness;
    std::vector<std::string> blockers;
    std::vector<std::string> notes;
};

struct DecisionOptions {
    int kmax = 100;
    Rational lambda_max = Rational(1, 2);
};

SssVerdict decide_sss_dim1(const ClosedSetDesc& x);
SssVerdict decide_sss_dim2(const ClosedSetDesc& x, const DecisionOptions& opt = {});
SssVerdict decide_sss(const ClosedSetDesc& x, const DecisionOptions& opt = {});

std::string to_string(SssVerdict::Kind k);
std::string to_string(SssVerdict::Reason r);

}  // namespace mvss

#pragma once

#include "mvss/closed_set.hpp"
#include "mvss/decision.hpp"
#include "mvss/formula.hpp"
#include "mvss/plfunction.hpp"
#include "mvss/tangent.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mvss {

// Text documents made of named records:
//
//   <type> <name> {
//     key: value
//   }
//
// Lines starting with '#' are comments. Record types: formula, plfunction,
// closedset, cone, verdict, certificate.

struct Field {
    std::string key, value;
    std::size_t line = 0, column = 0;  // position of the value, 1-based
};

struct Record {
    std::string type, name;
    std::vector<Field> fields;
    std::size_t line = 0;

    void add(std::string key, std::string value) { fields.push_back(Field{std::move(key), std::move(value)}); }
    /// Value of the single field with this key; throws DocumentError if absent.
    const Field& one(const std::string& key) const;
    const Field* find(const std::string& key) const;
};

struct Document {
    std::vector<Record> records;
    /// First record of the type (and name, when given).
    const Record* find(const std::string& type, const std::string& name = {}) const;
};

/// Equality of content, ignoring positions.
bool operator==(const Field& a, const Field& b);
bool operator==(const Record& a, const Record& b);
bool operator==(const Document& a, const Document& b);

struct DocumentError : std::runtime_error {
    DocumentError(std::size_t l, std::size_t c, const std::string& msg);
    std::size_t line, column;
};

const std::vector<std::string>& record_types();

Document parse_document(std::string_view text);
std::string print_document(const Document& d);

Record formula_record(const std::string& name, const Formula& f, std::size_t arity);
Formula formula_from(const Record& r, std::size_t* arity = nullptr);

Record plfunction_record(const std::string& name, const PLFunction& f);
PLFunction plfunction_from(const Record& r);

Record closedset_record(const std::string& name, const ClosedSetDesc& x);
ClosedSetDesc closedset_from(const Record& r);

Record cone_record(const std::string& name, const Cone& c);
Cone cone_from(const Record& r);

/// Output-only records; their fields reference other records by name.
Record verdict_record(const std::string& name, const SssVerdict& v, const std::string& witness = {});
Record witness_record(const std::string& name, const NotSssWitness& w, const std::string& g, const std::string& j,
                      const std::string& set);
Record membership_record(const std::string& name, const IdealMembershipResult& r, const std::string& f,
                         const std::string& g, const std::string& set);
Record cover_record(const std::string& name, const CoverCertificate1D& c, const std::string& f, const std::string& g,
                    const std::string& set);

/// Reads a witness back, resolving g and j by name in the document.
NotSssWitness witness_from(const Record& r, const Document& d);
DominanceRow dominance_row_from(const Field& f);
CoverCertificate1D cover_from(const Record& r);

std::string dominance_row_text(const DominanceRow& row);
std::string to_string(IdealMembershipResult::Kind k);

}  // namespace mvss

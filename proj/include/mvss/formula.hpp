#pragma once

#include "mvss/rational.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mvss {

enum class Op { Var, Zero, One, Neg, OPlus, OTimes, Min, Max, Implies };

/// Immutable MV term. Children are shared; copies are cheap.
class Formula {
public:
    static Formula var(std::size_t index);  // index >= 1
    static Formula zero();
    static Formula one();
    static Formula neg(Formula a);
    static Formula binary(Op op, Formula l, Formula r);

    Op op() const { return node_->op; }
    std::size_t var_index() const { return node_->index; }
    const Formula& left() const { return *node_->left; }
    const Formula& right() const { return *node_->right; }
    const Formula& child() const { return *node_->left; }

    /// Largest variable index occurring (0 if none).
    std::size_t max_var() const;
    std::size_t depth() const;

    bool operator==(const Formula& o) const;

private:
    struct Node {
        Op op;
        std::size_t index = 0;
        std::shared_ptr<const Formula> left, right;
    };
    explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

struct SyntaxError : std::runtime_error {
    SyntaxError(std::size_t line, std::size_t column, const std::string& what);
    std::size_t line, column;
};

struct ArityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Grammar: formula := "0" | "1" | "x"<n> | "!" formula | "(" formula op formula ")"
///          op := "+" | "*" | "&" | "|" | "->"
/// When arity is given, variables above it raise ArityError.
Formula parse_formula(std::string_view text, std::optional<std::size_t> arity = std::nullopt);

/// Fully parenthesized text; parse_formula(serialize(f)) == f.
std::string serialize(const Formula& f);

/// Pointwise Łukasiewicz semantics at a rational valuation.
Rational evaluate(const Formula& f, const RPoint& v);

}  // namespace mvss

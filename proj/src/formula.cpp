#include "mvss/formula.hpp"

#include <algorithm>
#include <cctype>

namespace mvss {

Formula Formula::var(std::size_t index) {
    if (index == 0) throw ArityError("variable index must be >= 1");
    return Formula(std::make_shared<const Node>(Node{Op::Var, index, nullptr, nullptr}));
}
Formula Formula::zero() { return Formula(std::make_shared<const Node>(Node{Op::Zero, 0, nullptr, nullptr})); }
Formula Formula::one() { return Formula(std::make_shared<const Node>(Node{Op::One, 0, nullptr, nullptr})); }
Formula Formula::neg(Formula a) {
    return Formula(std::make_shared<const Node>(Node{Op::Neg, 0, std::make_shared<const Formula>(std::move(a)), nullptr}));
}
Formula Formula::binary(Op op, Formula l, Formula r) {
    return Formula(std::make_shared<const Node>(Node{op, 0, std::make_shared<const Formula>(std::move(l)),
                                                     std::make_shared<const Formula>(std::move(r))}));
}

std::size_t Formula::max_var() const {
    switch (op()) {
        case Op::Var: return var_index();
        case Op::Zero:
        case Op::One: return 0;
        case Op::Neg: return child().max_var();
        default: return std::max(left().max_var(), right().max_var());
    }
}

std::size_t Formula::depth() const {
    switch (op()) {
        case Op::Var:
        case Op::Zero:
        case Op::One: return 0;
        case Op::Neg: return 1 + child().depth();
        default: return 1 + std::max(left().depth(), right().depth());
    }
}

bool Formula::operator==(const Formula& o) const {
    if (node_ == o.node_) return true;
    if (op() != o.op()) return false;
    switch (op()) {
        case Op::Var: return var_index() == o.var_index();
        case Op::Zero:
        case Op::One: return true;
        case Op::Neg: return child() == o.child();
        default: return left() == o.left() && right() == o.right();
    }
}

SyntaxError::SyntaxError(std::size_t l, std::size_t c, const std::string& what)
    : std::runtime_error("syntax error at " + std::to_string(l) + ":" + std::to_string(c) + ": " + what),
      line(l),
      column(c) {}

namespace {

class Parser {
public:
    Parser(std::string_view text, std::optional<std::size_t> arity) : text_(text), arity_(arity) {}

    Formula parse_all() {
        Formula f = formula();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return f;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                col = 1;
            } else if ((static_cast<unsigned char>(text_[i]) & 0xC0) != 0x80) {
                ++col;  // count UTF-8 code points, not bytes
            }
        }
        throw SyntaxError(line, col, msg);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    Formula formula() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '0') {
            ++pos_;
            return Formula::zero();
        }
        if (c == '1') {
            ++pos_;
            return Formula::one();
        }
        if (c == '!') {
            ++pos_;
            return Formula::neg(formula());
        }
        if (c == 'x') return variable();
        if (c == '(') {
            ++pos_;
            Formula l = formula();
            Op op = binary_op();
            Formula r = formula();
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
            ++pos_;
            return Formula::binary(op, std::move(l), std::move(r));
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    Formula variable() {
        std::size_t start = pos_;
        ++pos_;
        std::size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == digits) fail("expected variable index after 'x'");
        std::string_view num = text_.substr(digits, pos_ - digits);
        if (num.size() > 9) {
            pos_ = start;
            throw ArityError("variable index too large: x" + std::string(num));
        }
        std::size_t idx = std::stoul(std::string(num));
        if (idx == 0) {
            pos_ = start;
            throw ArityError("variable index 0 at column " + std::to_string(start + 1));
        }
        if (arity_ && idx > *arity_)
            throw ArityError("variable x" + std::to_string(idx) + " exceeds arity " + std::to_string(*arity_));
        return Formula::var(idx);
    }

    Op binary_op() {
        skip_ws();
        if (pos_ >= text_.size()) fail("expected operator");
        char c = text_[pos_];
        switch (c) {
            case '+': ++pos_; return Op::OPlus;
            case '*': ++pos_; return Op::OTimes;
            case '&': ++pos_; return Op::Min;
            case '|': ++pos_; return Op::Max;
            case '-':
                if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
                    pos_ += 2;
                    return Op::Implies;
                }
                break;
            default: break;
        }
        fail("expected one of + * & | ->");
    }

    std::string_view text_;
    std::optional<std::size_t> arity_;
    std::size_t pos_ = 0;
};

const char* op_text(Op op) {
    switch (op) {
        case Op::OPlus: return "+";
        case Op::OTimes: return "*";
        case Op::Min: return "&";
        case Op::Max: return "|";
        case Op::Implies: return "->";
        default: return "?";
    }
}

}  // namespace

Formula parse_formula(std::string_view text, std::optional<std::size_t> arity) {
    return Parser(text, arity).parse_all();
}

std::string serialize(const Formula& f) {
    switch (f.op()) {
        case Op::Var: return "x" + std::to_string(f.var_index());
        case Op::Zero: return "0";
        case Op::One: return "1";
        case Op::Neg: return "!" + serialize(f.child());
        default: return "(" + serialize(f.left()) + " " + op_text(f.op()) + " " + serialize(f.right()) + ")";
    }
}

Rational evaluate(const Formula& f, const RPoint& v) {
    switch (f.op()) {
        case Op::Var:
            if (f.var_index() > v.size())
                throw ArityError("valuation has arity " + std::to_string(v.size()) + " but formula uses x" +
                                 std::to_string(f.var_index()));
            return v[f.var_index() - 1];
        case Op::Zero: return 0;
        case Op::One: return 1;
        case Op::Neg: return 1 - evaluate(f.child(), v);
        default: break;
    }
    Rational a = evaluate(f.left(), v);
    Rational b = evaluate(f.right(), v);
    switch (f.op()) {
        case Op::OPlus: return std::min(Rational(1), Rational(a + b));
        case Op::OTimes: return std::max(Rational(0), Rational(a + b - 1));
        case Op::Min: return std::min(a, b);
        case Op::Max: return std::max(a, b);
        case Op::Implies: return std::min(Rational(1), Rational(1 - a + b));
        default: return 0;
    }
}

}  // namespace mvss

#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "genocchi/errors.hpp"
#include "genocchi/oracle.hpp"

namespace genocchi::expr {

enum class ExprKind {
    number,
    variable, // the single free variable x
    add,
    sub,
    mul,
    div,
    neg,
    pow,
    sin,
    cos,
    exp,
    log,
    sqrt,
};

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Immutable expression tree node. Binary nodes use lhs/rhs, unary nodes
/// use lhs only, numbers carry their value.
class Expr {
public:
    static ExprPtr number(double v);
    static ExprPtr variable();
    static ExprPtr unary(ExprKind kind, ExprPtr operand);
    static ExprPtr binary(ExprKind kind, ExprPtr lhs, ExprPtr rhs);

    ExprKind kind() const { return kind_; }
    double number_value() const { return number_; }
    const ExprPtr& lhs() const { return lhs_; }
    const ExprPtr& rhs() const { return rhs_; }

    bool is_number() const { return kind_ == ExprKind::number; }
    bool is_number(double v) const {
        return kind_ == ExprKind::number && number_ == v;
    }

private:
    Expr(ExprKind kind, double number, ExprPtr lhs, ExprPtr rhs)
        : kind_(kind), number_(number), lhs_(std::move(lhs)), rhs_(std::move(rhs)) {}

    ExprKind kind_;
    double number_;
    ExprPtr lhs_;
    ExprPtr rhs_;
};

/// Parse failure with the byte offset of the offending token and the set of
/// tokens that would have been accepted there.
class SyntaxError : public Error {
public:
    SyntaxError(std::string message, std::size_t offset,
                std::vector<std::string> expected);

    std::size_t offset() const { return offset_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

/// Recursive-descent parser for the single-variable grammar:
/// +, -, *, / with usual precedence, right-associative ^ binding tighter
/// than unary minus, the functions sin/cos/exp/log/sqrt, parentheses, and
/// decimal literals. No implicit multiplication. Whitespace-insensitive.
ExprPtr parse(std::string_view text);

/// Evaluate at x. Division by zero, log of a nonpositive value, sqrt of a
/// negative value and fractional powers of negative bases raise
/// EvaluationDomainError at call time.
double eval(const Expr& e, double x);

/// First symbolic derivative, simplified.
ExprPtr differentiate(const ExprPtr& e);

/// k-th symbolic derivative (k >= 1). Results are memoized per (tree, k).
ExprPtr differentiate(const ExprPtr& e, int k);

/// Constant folding plus the basic identities (u+0, u*1, u*0, u^1, ...).
ExprPtr simplify(const ExprPtr& e);

/// Canonical printable form; reparsing yields an evaluation-equivalent tree.
std::string to_string(const Expr& e);

/// Wrap the expression as a FunctionOracle with symbolic derivatives up to
/// max_order and a sampled sup bound (1.1 x 1024-point grid max).
FunctionOracle to_oracle(const ExprPtr& e, int max_order);

} // namespace genocchi::expr

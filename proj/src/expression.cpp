#include "genocchi/expression.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <sstream>
#include <utility>

namespace genocchi::expr {

// ---------------------------------------------------------------------------
// Tree construction
// ---------------------------------------------------------------------------

ExprPtr Expr::number(double v) {
    return ExprPtr(new Expr(ExprKind::number, v, nullptr, nullptr));
}

ExprPtr Expr::variable() {
    return ExprPtr(new Expr(ExprKind::variable, 0.0, nullptr, nullptr));
}

ExprPtr Expr::unary(ExprKind kind, ExprPtr operand) {
    return ExprPtr(new Expr(kind, 0.0, std::move(operand), nullptr));
}

ExprPtr Expr::binary(ExprKind kind, ExprPtr lhs, ExprPtr rhs) {
    return ExprPtr(new Expr(kind, 0.0, std::move(lhs), std::move(rhs)));
}

namespace {

ExprPtr num(double v) { return Expr::number(v); }

bool is_unary_fn(ExprKind k) {
    switch (k) {
        case ExprKind::neg:
        case ExprKind::sin:
        case ExprKind::cos:
        case ExprKind::exp:
        case ExprKind::log:
        case ExprKind::sqrt:
            return true;
        default:
            return false;
    }
}

} // namespace

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

SyntaxError::SyntaxError(std::string message, std::size_t offset,
                         std::vector<std::string> expected)
    : Error([&] {
          std::ostringstream os;
          os << "syntax error at byte " << offset << ": " << message;
          if (!expected.empty()) {
              os << " (expected ";
              for (std::size_t i = 0; i < expected.size(); ++i) {
                  if (i > 0) os << (i + 1 == expected.size() ? " or " : ", ");
                  os << expected[i];
              }
              os << ")";
          }
          return os.str();
      }()),
      offset_(offset),
      expected_(std::move(expected)) {}

namespace {

struct Token {
    enum class Type { number, ident, plus, minus, star, slash, caret, lparen, rparen, end };
    Type type = Type::end;
    double number = 0.0;
    std::string ident;
    std::size_t offset = 0;
};

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) { advance(); }

    ExprPtr run() {
        ExprPtr e = parse_expression();
        if (current_.type != Token::Type::end)
            throw SyntaxError("unexpected input after expression", current_.offset,
                              {"'+'", "'-'", "'*'", "'/'", "'^'", "end of input"});
        return e;
    }

private:
    void advance() { current_ = lex(); }

    Token lex() {
        while (pos_ < text_.size() &&
               (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
                text_[pos_] == '\r'))
            ++pos_;
        Token t;
        t.offset = pos_;
        if (pos_ >= text_.size()) {
            t.type = Token::Type::end;
            return t;
        }
        const char c = text_[pos_];
        switch (c) {
            case '+': ++pos_; t.type = Token::Type::plus; return t;
            case '-': ++pos_; t.type = Token::Type::minus; return t;
            case '*': ++pos_; t.type = Token::Type::star; return t;
            case '/': ++pos_; t.type = Token::Type::slash; return t;
            case '^': ++pos_; t.type = Token::Type::caret; return t;
            case '(': ++pos_; t.type = Token::Type::lparen; return t;
            case ')': ++pos_; t.type = Token::Type::rparen; return t;
            default: break;
        }
        if ((c >= '0' && c <= '9') || c == '.') {
            double value = 0.0;
            const char* begin = text_.data() + pos_;
            const char* end = text_.data() + text_.size();
            auto [ptr, ec] = std::from_chars(begin, end, value);
            if (ec != std::errc{} || ptr == begin)
                throw SyntaxError("malformed number", pos_, {"number"});
            pos_ += static_cast<std::size_t>(ptr - begin);
            t.type = Token::Type::number;
            t.number = value;
            return t;
        }
        if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   ((text_[pos_] >= 'a' && text_[pos_] <= 'z') ||
                    (text_[pos_] >= 'A' && text_[pos_] <= 'Z') ||
                    (text_[pos_] >= '0' && text_[pos_] <= '9') || text_[pos_] == '_'))
                ++pos_;
            t.type = Token::Type::ident;
            t.ident = std::string(text_.substr(start, pos_ - start));
            return t;
        }
        throw SyntaxError(std::string("unexpected character '") + c + "'", pos_,
                          {"number", "'x'", "function", "'('", "'-'"});
    }

    // expression := term (('+'|'-') term)*
    ExprPtr parse_expression() {
        ExprPtr lhs = parse_term();
        while (current_.type == Token::Type::plus ||
               current_.type == Token::Type::minus) {
            const bool add = current_.type == Token::Type::plus;
            advance();
            ExprPtr rhs = parse_term();
            lhs = Expr::binary(add ? ExprKind::add : ExprKind::sub, std::move(lhs),
                               std::move(rhs));
        }
        return lhs;
    }

    // term := unary (('*'|'/') unary)*
    ExprPtr parse_term() {
        ExprPtr lhs = parse_unary();
        while (current_.type == Token::Type::star ||
               current_.type == Token::Type::slash) {
            const bool mul = current_.type == Token::Type::star;
            advance();
            ExprPtr rhs = parse_unary();
            lhs = Expr::binary(mul ? ExprKind::mul : ExprKind::div, std::move(lhs),
                               std::move(rhs));
        }
        return lhs;
    }

    // unary := '-' unary | power. Power binds tighter, so -x^2 is -(x^2).
    ExprPtr parse_unary() {
        if (current_.type == Token::Type::minus) {
            advance();
            return Expr::unary(ExprKind::neg, parse_unary());
        }
        return parse_power();
    }

    // power := primary ('^' unary)?   (right-associative)
    ExprPtr parse_power() {
        ExprPtr base = parse_primary();
        if (current_.type == Token::Type::caret) {
            advance();
            ExprPtr exponent = parse_unary();
            return Expr::binary(ExprKind::pow, std::move(base), std::move(exponent));
        }
        return base;
    }

    ExprPtr parse_primary() {
        switch (current_.type) {
            case Token::Type::number: {
                const double v = current_.number;
                advance();
                return num(v);
            }
            case Token::Type::ident: {
                const std::string name = current_.ident;
                const std::size_t offset = current_.offset;
                advance();
                if (name == "x") return Expr::variable();
                ExprKind kind;
                if (name == "sin") kind = ExprKind::sin;
                else if (name == "cos") kind = ExprKind::cos;
                else if (name == "exp") kind = ExprKind::exp;
                else if (name == "log") kind = ExprKind::log;
                else if (name == "sqrt") kind = ExprKind::sqrt;
                else
                    throw SyntaxError("unknown identifier '" + name + "'", offset,
                                      {"'x'", "'sin'", "'cos'", "'exp'", "'log'",
                                       "'sqrt'"});
                expect(Token::Type::lparen, "'('");
                ExprPtr arg = parse_expression();
                expect(Token::Type::rparen, "')'");
                return Expr::unary(kind, std::move(arg));
            }
            case Token::Type::lparen: {
                advance();
                ExprPtr e = parse_expression();
                expect(Token::Type::rparen, "')'");
                return e;
            }
            default:
                throw SyntaxError("expected an operand", current_.offset,
                                  {"number", "'x'", "function", "'('", "'-'"});
        }
    }

    void expect(Token::Type type, const char* what) {
        if (current_.type != type)
            throw SyntaxError("expected " + std::string(what), current_.offset,
                              {what});
        advance();
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    Token current_;
};

} // namespace

ExprPtr parse(std::string_view text) { return Parser(text).run(); }

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

namespace {

bool is_integral(double v) { return std::isfinite(v) && std::rint(v) == v; }

double eval_pow(double base, double exponent) {
    if (base == 0.0 && exponent < 0.0)
        throw EvaluationDomainError("power: zero base with negative exponent");
    if (base < 0.0 && !is_integral(exponent))
        throw EvaluationDomainError("power: negative base with fractional exponent");
    return std::pow(base, exponent);
}

} // namespace

double eval(const Expr& e, double x) {
    switch (e.kind()) {
        case ExprKind::number: return e.number_value();
        case ExprKind::variable: return x;
        case ExprKind::add: return eval(*e.lhs(), x) + eval(*e.rhs(), x);
        case ExprKind::sub: return eval(*e.lhs(), x) - eval(*e.rhs(), x);
        case ExprKind::mul: return eval(*e.lhs(), x) * eval(*e.rhs(), x);
        case ExprKind::div: {
            const double denom = eval(*e.rhs(), x);
            if (denom == 0.0)
                throw EvaluationDomainError("division by zero");
            return eval(*e.lhs(), x) / denom;
        }
        case ExprKind::neg: return -eval(*e.lhs(), x);
        case ExprKind::pow:
            return eval_pow(eval(*e.lhs(), x), eval(*e.rhs(), x));
        case ExprKind::sin: return std::sin(eval(*e.lhs(), x));
        case ExprKind::cos: return std::cos(eval(*e.lhs(), x));
        case ExprKind::exp: return std::exp(eval(*e.lhs(), x));
        case ExprKind::log: {
            const double arg = eval(*e.lhs(), x);
            if (!(arg > 0.0))
                throw EvaluationDomainError("log of a nonpositive value");
            return std::log(arg);
        }
        case ExprKind::sqrt: {
            const double arg = eval(*e.lhs(), x);
            if (arg < 0.0)
                throw EvaluationDomainError("sqrt of a negative value");
            return std::sqrt(arg);
        }
    }
    throw Error("eval: corrupt expression node");
}

// ---------------------------------------------------------------------------
// Simplification
// ---------------------------------------------------------------------------

namespace {

// Fold a binary node of constants, but only when the result is defined and
// finite; domain violations stay in the tree and surface at evaluation.
ExprPtr try_fold(ExprKind kind, const ExprPtr& l, const ExprPtr& r) {
    if (!l->is_number() || (r && !r->is_number())) return nullptr;
    const double a = l->number_value();
    const double b = r ? r->number_value() : 0.0;
    double v = 0.0;
    switch (kind) {
        case ExprKind::add: v = a + b; break;
        case ExprKind::sub: v = a - b; break;
        case ExprKind::mul: v = a * b; break;
        case ExprKind::div:
            if (b == 0.0) return nullptr;
            v = a / b;
            break;
        case ExprKind::pow:
            if (a == 0.0 && b < 0.0) return nullptr;
            if (a < 0.0 && !is_integral(b)) return nullptr;
            v = std::pow(a, b);
            break;
        case ExprKind::neg: v = -a; break;
        case ExprKind::sin: v = std::sin(a); break;
        case ExprKind::cos: v = std::cos(a); break;
        case ExprKind::exp: v = std::exp(a); break;
        case ExprKind::log:
            if (!(a > 0.0)) return nullptr;
            v = std::log(a);
            break;
        case ExprKind::sqrt:
            if (a < 0.0) return nullptr;
            v = std::sqrt(a);
            break;
        default: return nullptr;
    }
    if (!std::isfinite(v)) return nullptr;
    return num(v);
}

} // namespace

ExprPtr simplify(const ExprPtr& e) {
    switch (e->kind()) {
        case ExprKind::number:
        case ExprKind::variable:
            return e;
        default:
            break;
    }

    ExprPtr l = simplify(e->lhs());
    ExprPtr r = e->rhs() ? simplify(e->rhs()) : nullptr;

    if (ExprPtr folded = try_fold(e->kind(), l, r)) return folded;

    switch (e->kind()) {
        case ExprKind::add:
            if (l->is_number(0.0)) return r;
            if (r->is_number(0.0)) return l;
            break;
        case ExprKind::sub:
            if (r->is_number(0.0)) return l;
            if (l->is_number(0.0)) return simplify(Expr::unary(ExprKind::neg, r));
            break;
        case ExprKind::mul:
            if (l->is_number(0.0) || r->is_number(0.0)) return num(0.0);
            if (l->is_number(1.0)) return r;
            if (r->is_number(1.0)) return l;
            break;
        case ExprKind::div:
            if (l->is_number(0.0)) return num(0.0);
            if (r->is_number(1.0)) return l;
            break;
        case ExprKind::pow:
            if (r->is_number(1.0)) return l;
            if (r->is_number(0.0)) return num(1.0);
            break;
        case ExprKind::neg:
            if (l->kind() == ExprKind::neg) return l->lhs();
            break;
        default:
            break;
    }

    if (l == e->lhs() && r == e->rhs()) return e;
    return is_unary_fn(e->kind()) ? Expr::unary(e->kind(), std::move(l))
                                  : Expr::binary(e->kind(), std::move(l), std::move(r));
}

// ---------------------------------------------------------------------------
// Differentiation
// ---------------------------------------------------------------------------

namespace {

ExprPtr derive(const ExprPtr& e) {
    switch (e->kind()) {
        case ExprKind::number: return num(0.0);
        case ExprKind::variable: return num(1.0);
        case ExprKind::add:
            return Expr::binary(ExprKind::add, derive(e->lhs()), derive(e->rhs()));
        case ExprKind::sub:
            return Expr::binary(ExprKind::sub, derive(e->lhs()), derive(e->rhs()));
        case ExprKind::mul:
            return Expr::binary(
                ExprKind::add,
                Expr::binary(ExprKind::mul, derive(e->lhs()), e->rhs()),
                Expr::binary(ExprKind::mul, e->lhs(), derive(e->rhs())));
        case ExprKind::div:
            // (u'v - uv') / v^2
            return Expr::binary(
                ExprKind::div,
                Expr::binary(
                    ExprKind::sub,
                    Expr::binary(ExprKind::mul, derive(e->lhs()), e->rhs()),
                    Expr::binary(ExprKind::mul, e->lhs(), derive(e->rhs()))),
                Expr::binary(ExprKind::pow, e->rhs(), num(2.0)));
        case ExprKind::neg:
            return Expr::unary(ExprKind::neg, derive(e->lhs()));
        case ExprKind::pow: {
            if (e->rhs()->is_number()) {
                // c u^(c-1) u'
                const double c = e->rhs()->number_value();
                return Expr::binary(
                    ExprKind::mul,
                    Expr::binary(ExprKind::mul, num(c),
                                 Expr::binary(ExprKind::pow, e->lhs(), num(c - 1.0))),
                    derive(e->lhs()));
            }
            // u^v (v' log u + v u'/u)
            return Expr::binary(
                ExprKind::mul, e,
                Expr::binary(
                    ExprKind::add,
                    Expr::binary(ExprKind::mul, derive(e->rhs()),
                                 Expr::unary(ExprKind::log, e->lhs())),
                    Expr::binary(ExprKind::div,
                                 Expr::binary(ExprKind::mul, e->rhs(), derive(e->lhs())),
                                 e->lhs())));
        }
        case ExprKind::sin:
            return Expr::binary(ExprKind::mul, Expr::unary(ExprKind::cos, e->lhs()),
                                derive(e->lhs()));
        case ExprKind::cos:
            return Expr::unary(
                ExprKind::neg,
                Expr::binary(ExprKind::mul, Expr::unary(ExprKind::sin, e->lhs()),
                             derive(e->lhs())));
        case ExprKind::exp:
            return Expr::binary(ExprKind::mul, e, derive(e->lhs()));
        case ExprKind::log:
            return Expr::binary(ExprKind::div, derive(e->lhs()), e->lhs());
        case ExprKind::sqrt:
            return Expr::binary(
                ExprKind::div, derive(e->lhs()),
                Expr::binary(ExprKind::mul, num(2.0), e));
    }
    throw Error("differentiate: corrupt expression node");
}

} // namespace

ExprPtr differentiate(const ExprPtr& e) { return simplify(derive(e)); }

ExprPtr differentiate(const ExprPtr& e, int k) {
    if (k < 1)
        throw std::invalid_argument("differentiate: order must be >= 1");

    // Memoized per (tree, order); proof replays ask for orders 1..4 of the
    // same tree over and over. The stored input pointer keeps the key's
    // address from being reused.
    struct MemoEntry {
        ExprPtr result;
        ExprPtr pinned_input;
    };
    static std::mutex mutex;
    static std::map<std::pair<const Expr*, int>, MemoEntry> memo;

    {
        std::lock_guard lock(mutex);
        auto it = memo.find({e.get(), k});
        if (it != memo.end()) return it->second.result;
    }
    ExprPtr result =
        (k == 1) ? differentiate(e) : differentiate(differentiate(e, k - 1));
    {
        std::lock_guard lock(mutex);
        memo.emplace(std::pair{e.get(), k}, MemoEntry{result, e});
    }
    return result;
}

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

namespace {

int precedence(ExprKind k) {
    switch (k) {
        case ExprKind::add:
        case ExprKind::sub: return 1;
        case ExprKind::mul:
        case ExprKind::div: return 2;
        case ExprKind::neg: return 3;
        case ExprKind::pow: return 4;
        default: return 5; // atoms and function calls
    }
}

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void print_node(const Expr& e, int min_prec, std::string& out) {
    const int p = precedence(e.kind());
    const bool parens = p < min_prec;
    if (parens) out += '(';
    switch (e.kind()) {
        case ExprKind::number: out += format_number(e.number_value()); break;
        case ExprKind::variable: out += 'x'; break;
        case ExprKind::add:
            print_node(*e.lhs(), p, out);
            out += " + ";
            print_node(*e.rhs(), p, out);
            break;
        case ExprKind::sub:
            print_node(*e.lhs(), p, out);
            out += " - ";
            print_node(*e.rhs(), p + 1, out);
            break;
        case ExprKind::mul:
            print_node(*e.lhs(), p, out);
            out += "*";
            print_node(*e.rhs(), p, out);
            break;
        case ExprKind::div:
            print_node(*e.lhs(), p, out);
            out += "/";
            print_node(*e.rhs(), p + 1, out);
            break;
        case ExprKind::neg:
            out += '-';
            print_node(*e.lhs(), p, out);
            break;
        case ExprKind::pow:
            print_node(*e.lhs(), p + 1, out); // right-associative
            out += '^';
            print_node(*e.rhs(), p, out);
            break;
        case ExprKind::sin:
        case ExprKind::cos:
        case ExprKind::exp:
        case ExprKind::log:
        case ExprKind::sqrt: {
            switch (e.kind()) {
                case ExprKind::sin: out += "sin("; break;
                case ExprKind::cos: out += "cos("; break;
                case ExprKind::exp: out += "exp("; break;
                case ExprKind::log: out += "log("; break;
                default: out += "sqrt("; break;
            }
            print_node(*e.lhs(), 0, out);
            out += ')';
            break;
        }
    }
    if (parens) out += ')';
}

} // namespace

std::string to_string(const Expr& e) {
    std::string out;
    print_node(e, 0, out);
    return out;
}

// ---------------------------------------------------------------------------
// Oracle adapter
// ---------------------------------------------------------------------------

FunctionOracle to_oracle(const ExprPtr& e, int max_order) {
    if (max_order < 0)
        throw std::invalid_argument("to_oracle: max_order must be >= 0");

    auto derivs = std::make_shared<std::vector<ExprPtr>>();
    derivs->push_back(simplify(e));
    for (int k = 1; k <= max_order; ++k) derivs->push_back(differentiate(e, k));

    auto value = [derivs](double x) { return eval(*derivs->front(), x); };
    auto derivative = [derivs](int k, double x) {
        return eval(*(*derivs)[static_cast<std::size_t>(k)], x);
    };
    auto sup = [derivs, max_order](int k, double lo, double hi) {
        if (k < 0 || k > max_order)
            throw InsufficientDerivativeOrder(
                "sup_bound order exceeds expression oracle max_order");
        constexpr int kGridPoints = 1024;
        double max_abs = 0.0;
        const ExprPtr& tree = (*derivs)[static_cast<std::size_t>(k)];
        for (int i = 0; i < kGridPoints; ++i) {
            const double x = lo + (hi - lo) * static_cast<double>(i) /
                                      static_cast<double>(kGridPoints - 1);
            max_abs = std::max(max_abs, std::abs(eval(*tree, x)));
        }
        return SupBound{1.1 * max_abs, Rigor::sampled};
    };
    return FunctionOracle(std::move(value), max_order, std::move(derivative),
                          std::move(sup));
}

} // namespace genocchi::expr

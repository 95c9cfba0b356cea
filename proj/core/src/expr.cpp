#include "kmilnor/expr.hpp"

#include <algorithm>
#include <cctype>

namespace kmil {

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    ExprPtr parse()
    {
        ExprPtr e = expr();
        skip();
        if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
        return e;
    }

private:
    const std::string& s_;
    size_t pos_ = 0;

    [[noreturn]] void error(const std::string& msg)
    {
        fail(Errc::ParseError, msg + " at offset " + std::to_string(pos_) + " in \"" + s_ + "\"");
    }
    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    static ExprPtr node(Expr::Kind k, ExprPtr a, ExprPtr b = nullptr)
    {
        auto e = std::make_shared<Expr>();
        e->kind = k;
        e->a = std::move(a);
        e->b = std::move(b);
        return e;
    }

    ExprPtr expr()
    {
        ExprPtr e = term();
        for (;;) {
            if (eat('+'))
                e = node(Expr::Add, e, term());
            else if (eat('-'))
                e = node(Expr::Sub, e, term());
            else
                return e;
        }
    }
    ExprPtr term()
    {
        ExprPtr e = unary();
        for (;;) {
            if (eat('*'))
                e = node(Expr::Mul, e, unary());
            else if (eat('/'))
                e = node(Expr::Div, e, unary());
            else
                return e;
        }
    }
    ExprPtr unary()
    {
        if (eat('-')) return node(Expr::Neg, unary());
        if (eat('+')) return unary();
        return power();
    }
    ExprPtr power()
    {
        ExprPtr base = atom();
        if (eat('^')) {
            skip();
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) error("exponent must be a nonnegative integer literal");
            std::string digits = s_.substr(start, pos_ - start);
            if (digits.size() > 4) error("exponent too large");
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Pow;
            e->a = base;
            e->exponent = static_cast<unsigned>(std::stoul(digits));
            return e;
        }
        return base;
    }
    ExprPtr atom()
    {
        skip();
        if (pos_ >= s_.size()) error("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            ExprPtr e = expr();
            if (!eat(')')) error("missing ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Num;
            e->num = mpz_class(s_.substr(start, pos_ - start));
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            bool ok = name == "t" || name == "x";
            if ((name.size() == 2) && (name[0] == 'y' || name[0] == 'z') && name[1] >= '1' && name[1] <= '9') ok = true;
            if (!ok) {
                pos_ = start;
                error("unknown variable '" + name + "'");
            }
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Var;
            e->var = name;
            return e;
        }
        error("unexpected '" + std::string(1, c) + "'");
    }
};

} // namespace

ExprPtr parse_expr(const std::string& text) { return Parser(text).parse(); }

std::vector<std::string> split_symbol(const std::string& text)
{
    std::string s = text;
    auto first = s.find_first_not_of(" \t\n");
    auto last = s.find_last_not_of(" \t\n");
    if (first == std::string::npos) return {};
    s = s.substr(first, last - first + 1);
    if (!s.empty() && s.front() == '{') {
        if (s.back() != '}') fail(Errc::ParseError, "unbalanced braces in \"" + text + "\"");
        s = s.substr(1, s.size() - 2);
    }
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (cur.find_first_not_of(" \t\n") != std::string::npos || !out.empty()) out.push_back(cur);
    for (auto& p : out)
        if (p.find_first_not_of(" \t\n") == std::string::npos) fail(Errc::ParseError, "empty symbol entry in \"" + text + "\"");
    return out;
}

void collect_vars(const Expr& e, std::vector<std::string>& out)
{
    if (e.kind == Expr::Var) {
        if (std::find(out.begin(), out.end(), e.var) == out.end()) out.push_back(e.var);
        return;
    }
    if (e.a) collect_vars(*e.a, out);
    if (e.b) collect_vars(*e.b, out);
}

} // namespace kmil

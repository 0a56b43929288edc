#pragma once

#include "enr/core/mpoly.hpp"

#include <cctype>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace enr {

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Parses polynomial expressions such as "(1/2*a^7 - a)*t^4 + 3" into a
/// MultiPoly. Names in `variables` become polynomial variables; names in
/// `constants` are scalars of F. Division is allowed by nonzero constants only.
template <class F>
class ExprParser {
public:
    ExprParser(F ctx, std::vector<std::string> variables, std::map<std::string, F> constants = {})
        : zero_(ctx.zero()), vars_(std::move(variables)), consts_(std::move(constants)) {}

    MultiPoly<F> parse(const std::string& text) {
        s_ = text;
        pos_ = 0;
        MultiPoly<F> r = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return r;
    }

private:
    using P = MultiPoly<F>;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " at position " + std::to_string(pos_) + " in \"" + s_ + "\"");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    P constant(const F& c) const { return P::constant(c, vars_.size()); }

    P expr() {
        P r = term();
        while (true) {
            if (eat('+')) r += term();
            else if (eat('-')) r -= term();
            else return r;
        }
    }
    P term() {
        P r = unary();
        while (true) {
            if (eat('*')) r *= unary();
            else if (eat('/')) {
                P d = unary();
                if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
                r = r.scaled(d.constant_term().inv());
            } else return r;
        }
    }
    P unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }
    P power() {
        P b = atom();
        if (eat('^')) {
            skip();
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            return b.pow(static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start))));
        }
        return b;
    }
    P atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            P r = expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            Integer n(s_.substr(start, pos_ - start));
            return constant(embed(Rational(n)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            for (size_t i = 0; i < vars_.size(); ++i)
                if (vars_[i] == name) return P::variable(zero_, vars_.size(), i);
            auto it = consts_.find(name);
            if (it != consts_.end()) return constant(it->second);
            fail("unknown symbol '" + name + "'");
        }
        fail(std::string("unexpected character '") + c + "'");
    }
    F embed(const Rational& r) const {
        return from_integer(r.num()) / from_integer(r.den());
    }
    F from_integer(Integer n) const {
        // binary expansion for values beyond long
        if (n.fits_slong_p()) return zero_.from_int(n.get_si());
        bool neg = n < 0;
        if (neg) n = -n;
        F r = zero_, base = zero_.one();
        const F two = zero_.from_int(2);
        while (n > 0) {
            if (mpz_odd_p(n.get_mpz_t())) r = r + base;
            base = base * two;
            n >>= 1;
        }
        return neg ? -r : r;
    }

    F zero_;
    std::vector<std::string> vars_;
    std::map<std::string, F> consts_;
    std::string s_;
    size_t pos_ = 0;
};

}  // namespace enr

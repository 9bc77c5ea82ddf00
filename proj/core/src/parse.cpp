#include "sallylab/parse.hpp"

#include <cctype>

namespace sally {

namespace {

constexpr int kMaxParsedExponent = 100000;

class Parser {
public:
    Parser(const std::string& text, const RingSpec& spec, MonomialOrder ord)
        : text_(text), spec_(spec), ord_(ord) {}

    Polynomial run() {
        skip_ws();
        Polynomial p = expression();
        skip_ws();
        if (pos_ != text_.size())
            throw parse_error("unexpected trailing input", pos_);
        return p;
    }

private:
    const std::string& text_;
    const RingSpec& spec_;
    MonomialOrder ord_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    bool consume(char c) {
        if (peek() == c) {
            ++pos_;
            skip_ws();
            return true;
        }
        return false;
    }

    Polynomial expression() {
        Polynomial acc = sign_prefixed_term();
        for (;;) {
            if (consume('+')) {
                acc = acc + product_term();
            } else if (consume('-')) {
                acc = acc - product_term();
            } else {
                return acc;
            }
        }
    }

    Polynomial sign_prefixed_term() {
        if (consume('-')) return -product_term();
        if (consume('+')) return product_term();
        return product_term();
    }

    Polynomial product_term() {
        Polynomial acc = power_factor();
        while (consume('*')) acc = acc * power_factor();
        return acc;
    }

    Polynomial power_factor() {
        if (consume('-')) return -power_factor();
        Polynomial base = atom();
        if (consume('^')) {
            std::size_t at = pos_;
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                throw parse_error("exponent must be a non-negative integer", at);
            long long e = 0;
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                e = e * 10 + (text_[pos_] - '0');
                if (e > kMaxParsedExponent) throw parse_error("exponent overflow", at);
                ++pos_;
            }
            skip_ws();
            return base.pow(static_cast<int>(e));
        }
        return base;
    }

    Polynomial atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            std::size_t at = pos_;
            ++pos_;
            skip_ws();
            Polynomial inner = expression();
            if (!consume(')')) throw parse_error("missing ')'", at);
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return integer_atom();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier_atom();
        throw parse_error(pos_ >= text_.size() ? "unexpected end of input"
                                               : std::string("unexpected character '") + c + "'",
                          pos_);
    }

    Polynomial integer_atom() {
        const std::int64_t p = spec_.characteristic();
        std::string digits;
        while (std::isdigit(static_cast<unsigned char>(peek()))) digits += text_[pos_++];
        skip_ws();
        Coefficient c = Coefficient::zero(p);
        if (p == 0) {
            c = Coefficient::rational(Rational(boost::multiprecision::cpp_int(digits)));
        } else {
            std::int64_t v = 0;
            for (char d : digits) v = (v * 10 + (d - '0')) % p;
            c = Coefficient::fp(v, p);
        }
        return Polynomial::constant(c, spec_.nvars(), ord_);
    }

    Polynomial identifier_atom() {
        std::size_t at = pos_;
        std::string name;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')
            name += text_[pos_++];
        skip_ws();
        auto idx = spec_.var_index(name);
        if (!idx) throw parse_error("unknown identifier '" + name + "'", at);
        return Polynomial::term(spec_.one(), Monomial::variable(*idx, spec_.nvars()), ord_);
    }
};

}  // namespace

Polynomial parse_poly(const std::string& text, const RingSpec& spec, MonomialOrder ord) {
    return Parser(text, spec, ord).run();
}

std::vector<Polynomial> parse_polys(const std::vector<std::string>& texts, const RingSpec& spec) {
    std::vector<Polynomial> out;
    out.reserve(texts.size());
    for (const auto& t : texts) out.push_back(parse_poly(t, spec));
    return out;
}

}  // namespace sally

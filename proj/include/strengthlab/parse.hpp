#ifndef STRENGTHLAB_PARSE_HPP
#define STRENGTHLAB_PARSE_HPP

#include "strengthlab/errors.hpp"
#include "strengthlab/poly.hpp"

#include <cctype>
#include <cstddef>
#include <string>
#include <vector>

namespace strengthlab {

namespace detail {

/*
 * Recursive-descent scanner for the polynomial grammar:
 *   poly   = ['+'|'-'] term (('+'|'-') term)*
 *   term   = factor ('*' factor)*
 *   factor = integer ['/' integer] | 'i' | 'x' digits ['^' digits]
 * Whitespace is insignificant. Every syntax failure carries the 0-based
 * offset of the offending character.
 */
class PolyParser {
public:
    PolyParser(const std::string& text, std::size_t num_vars)
        : s_(text), nvars_(num_vars) {}

    HomogeneousPolynomial run() {
        skip_ws();
        if (eof()) throw ParseError("empty input", pos_);
        struct RawTerm {
            Exp exp;
            FieldElement coeff;
        };
        std::vector<RawTerm> terms;
        FieldElement sign(1);
        if (peek() == '+' || peek() == '-') {
            if (get() == '-') sign = FieldElement(-1);
        }
        while (true) {
            RawTerm t{Exp(nvars_, 0), sign};
            parse_term(t.exp, t.coeff);
            terms.push_back(std::move(t));
            skip_ws();
            if (eof()) break;
            const char c = get();
            if (c == '+') {
                sign = FieldElement(1);
            } else if (c == '-') {
                sign = FieldElement(-1);
            } else {
                throw ParseError("expected '+' or '-' between terms", pos_ - 1);
            }
        }
        const unsigned d = total_degree(terms.front().exp);
        for (const auto& t : terms) {
            if (total_degree(t.exp) != d) {
                throw DegreeMismatch("mixed degrees " + std::to_string(d) + " and " +
                                     std::to_string(total_degree(t.exp)));
            }
        }
        Poly p(nvars_);
        for (const auto& t : terms) p.add_term(t.exp, t.coeff);
        return HomogeneousPolynomial(std::move(p), d);
    }

private:
    bool eof() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    char get() { return s_[pos_++]; }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    Integer parse_integer() {
        skip_ws();
        if (eof() || !std::isdigit(static_cast<unsigned char>(peek()))) {
            throw ParseError("expected digits", pos_);
        }
        std::string digits;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) digits += get();
        return Integer(digits);
    }

    void parse_term(Exp& exp, FieldElement& coeff) {
        bool any = false;
        while (true) {
            skip_ws();
            if (eof()) {
                throw ParseError("unexpected end of input in term", pos_);
            }
            const char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                const Integer num = parse_integer();
                Rational r(num);
                skip_ws();
                if (!eof() && peek() == '/') {
                    get();
                    const std::size_t den_pos = pos_;
                    const Integer den = parse_integer();
                    if (den.is_zero()) throw ParseError("zero denominator", den_pos);
                    r = Rational(num, den);
                }
                coeff *= FieldElement(r);
            } else if (c == 'i') {
                get();
                coeff *= FieldElement::i();
            } else if (c == 'x') {
                const std::size_t var_pos = pos_;
                get();
                if (eof() || !std::isdigit(static_cast<unsigned char>(peek()))) {
                    throw ParseError("expected variable index after 'x'", pos_);
                }
                const Integer idx = parse_integer();
                if (idx >= Integer(nvars_)) {
                    throw VariableOutOfRange("variable x" + idx.str() + " out of range (" +
                                             std::to_string(nvars_) + " variables); at position " +
                                             std::to_string(var_pos));
                }
                unsigned e = 1;
                skip_ws();
                if (!eof() && peek() == '^') {
                    get();
                    const Integer ev = parse_integer();
                    if (ev > Integer(1000000)) throw ParseError("exponent too large", pos_);
                    e = static_cast<unsigned>(ev);
                }
                exp[static_cast<std::size_t>(idx)] += e;
            } else {
                throw ParseError(std::string("unexpected character '") + c + "'", pos_);
            }
            any = true;
            skip_ws();
            if (!eof() && peek() == '*') {
                get();
                continue;
            }
            break;
        }
        if (!any) throw ParseError("empty term", pos_);
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    std::size_t nvars_;
};

// Renders one monomial with an optional rational magnitude and i marker.
inline std::string render_term(const Rational& magnitude, bool with_i, const Exp& e) {
    std::vector<std::string> pieces;
    if (magnitude != 1 || (!with_i && total_degree(e) == 0)) {
        pieces.push_back(magnitude.str());
    }
    if (with_i) pieces.push_back("i");
    for (std::size_t v = 0; v < e.size(); ++v) {
        if (e[v] == 0) continue;
        std::string m = "x" + std::to_string(v);
        if (e[v] > 1) m += "^" + std::to_string(e[v]);
        pieces.push_back(std::move(m));
    }
    std::string out;
    for (std::size_t k = 0; k < pieces.size(); ++k) {
        if (k > 0) out += "*";
        out += pieces[k];
    }
    return out;
}

} // namespace detail

inline HomogeneousPolynomial parse_poly(const std::string& text, std::size_t num_vars) {
    return detail::PolyParser(text, num_vars).run();
}

/*
 * Canonical printer, inverse to parse_poly on canonical forms. Terms in
 * descending grlex order; a coefficient a + b*i prints as a real term
 * followed by an imaginary term on the same monomial, so the output stays
 * inside the factor grammar (no parenthesized coefficients).
 */
inline std::string print_poly(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    auto emit = [&](const Rational& value, bool with_i, const Exp& e) {
        if (value.is_zero()) return;
        const bool neg = value < 0;
        const Rational mag = neg ? Rational(-value) : value;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        out += detail::render_term(mag, with_i, e);
    };
    for (const auto& [e, c] : p.terms()) {
        emit(c.real_part(), false, e);
        emit(c.imag_part(), true, e);
    }
    return out;
}

inline std::string print_poly(const HomogeneousPolynomial& f) { return print_poly(f.poly()); }

} // namespace strengthlab

#endif // STRENGTHLAB_PARSE_HPP

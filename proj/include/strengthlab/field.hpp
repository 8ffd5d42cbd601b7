#ifndef STRENGTHLAB_FIELD_HPP
#define STRENGTHLAB_FIELD_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace strengthlab {

using Integer = boost::multiprecision::cpp_int;

// Exact rational scalar. cpp_rational keeps every value normalized:
// lowest terms, positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/*
 * Element of Q(i), the coefficient field used throughout the library.
 * Q(i) stands in for C: it is closed under the ring operations, division,
 * and the conjugation automorphism, and membership/rank/Groebner results
 * over Q(i) transfer to the algebraic closure.
 *
 * The real subfield Q (imag == 0) stands in for R.
 */
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(Rational re) : re_(std::move(re)) {}
    FieldElement(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}
    FieldElement(int v) : re_(v) {}
    FieldElement(long v) : re_(v) {}
    FieldElement(long long v) : re_(v) {}
    FieldElement(const Integer& v) : re_(v) {}

    static FieldElement i() { return FieldElement(Rational(0), Rational(1)); }

    const Rational& real_part() const { return re_; }
    const Rational& imag_part() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }
    bool is_one() const { return im_.is_zero() && re_ == 1; }

    // Conjugation sigma: the unique nontrivial field automorphism fixing Q.
    FieldElement conj() const { return FieldElement(re_, -im_); }

    // |z|^2 = z * conj(z), a nonnegative rational; zero only for z = 0.
    Rational norm() const { return re_ * re_ + im_ * im_; }

    FieldElement operator-() const { return FieldElement(-re_, -im_); }

    FieldElement& operator+=(const FieldElement& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    FieldElement& operator-=(const FieldElement& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    FieldElement& operator*=(const FieldElement& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        im_ = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        return *this;
    }
    FieldElement& operator/=(const FieldElement& o) {
        if (o.is_zero()) throw std::domain_error("FieldElement: division by zero");
        Rational n = o.norm();
        Rational r = (re_ * o.re_ + im_ * o.im_) / n;
        im_ = (im_ * o.re_ - re_ * o.im_) / n;
        re_ = std::move(r);
        return *this;
    }

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

    // Total order used only for canonical container keys, not algebra.
    friend bool operator<(const FieldElement& a, const FieldElement& b) {
        if (a.re_ != b.re_) return a.re_ < b.re_;
        return a.im_ < b.im_;
    }

    // Renders "a", "a+b*i", "b*i" with rationals in lowest terms, for diagnostics.
    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        if (!re_.is_zero()) s = re_.str();
        if (!im_.is_zero()) {
            if (!s.empty() && im_ > 0) s += "+";
            if (im_ == 1) {
                s += "i";
            } else if (im_ == -1) {
                s += "-i";
            } else {
                s += im_.str() + "*i";
            }
        }
        return s;
    }

private:
    Rational re_{0};
    Rational im_{0};
};

inline FieldElement conj(const FieldElement& z) { return z.conj(); }

} // namespace strengthlab

#endif // STRENGTHLAB_FIELD_HPP

#ifndef STRENGTHLAB_POLY_HPP
#define STRENGTHLAB_POLY_HPP

#include "strengthlab/errors.hpp"
#include "strengthlab/field.hpp"
#include "strengthlab/linalg.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace strengthlab {

// Exponent vector; entry k is the exponent of x_k.
using Exp = std::vector<unsigned>;

inline unsigned total_degree(const Exp& e) {
    unsigned d = 0;
    for (unsigned v : e) d += v;
    return d;
}

inline bool exp_divides(const Exp& a, const Exp& b) {
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] > b[k]) return false;
    }
    return true;
}

inline Exp exp_add(const Exp& a, const Exp& b) {
    Exp r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] + b[k];
    return r;
}

// Requires a | b entrywise... the caller guarantees b[k] >= a[k].
inline Exp exp_sub(const Exp& b, const Exp& a) {
    Exp r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = b[k] - a[k];
    return r;
}

inline Exp exp_lcm(const Exp& a, const Exp& b) {
    Exp r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = std::max(a[k], b[k]);
    return r;
}

/*
 * The one global monomial order: graded lexicographic with x0 > x1 > ... .
 * Higher total degree first; ties broken by the first differing exponent,
 * larger exponent first. In two variables this sorts
 *   x0^2 > x0*x1 > x1^2.
 * Every matrix, basis enumeration, and Groebner computation in the library
 * uses this comparator, so results are reproducible bit for bit.
 */
struct GrlexGreater {
    bool operator()(const Exp& a, const Exp& b) const {
        const unsigned da = total_degree(a), db = total_degree(b);
        if (da != db) return da > db;
        for (std::size_t k = 0; k < a.size() && k < b.size(); ++k) {
            if (a[k] != b[k]) return a[k] > b[k];
        }
        return false;
    }
};

// All exponent vectors of total degree d in `nvars` variables, descending
// grlex. Length binomial(nvars - 1 + d, nvars - 1).
inline std::vector<Exp> monomial_basis(std::size_t nvars, unsigned d) {
    std::vector<Exp> out;
    Exp cur(nvars, 0);
    // Enumerate compositions of d by recursion on the variable index.
    auto rec = [&](auto&& self, std::size_t pos, unsigned rem) -> void {
        if (pos + 1 == nvars) {
            cur[pos] = rem;
            out.push_back(cur);
            return;
        }
        for (unsigned e = rem + 1; e-- > 0;) {
            cur[pos] = e;
            self(self, pos + 1, rem - e);
        }
    };
    if (nvars > 0) rec(rec, 0, d);
    std::sort(out.begin(), out.end(), GrlexGreater{});
    return out;
}

/*
 * Sparse multivariate polynomial over Q(i) in variables x0..x_{nvars-1}.
 * This is the engine-level type: it tolerates inhomogeneous values, which
 * the affine solvability systems need. Graded callers use the validated
 * HomogeneousPolynomial wrapper below.
 *
 * Terms are kept in descending grlex order; stored coefficients are nonzero.
 */
class Poly {
public:
    using TermMap = std::map<Exp, FieldElement, GrlexGreater>;

    explicit Poly(std::size_t nvars) : nvars_(nvars) {}

    static Poly constant(std::size_t nvars, const FieldElement& c) {
        Poly p(nvars);
        p.add_term(Exp(nvars, 0), c);
        return p;
    }
    static Poly variable(std::size_t nvars, std::size_t idx) {
        if (idx >= nvars) throw VariableOutOfRange("variable index out of range");
        Poly p(nvars);
        Exp e(nvars, 0);
        e[idx] = 1;
        p.add_term(e, FieldElement(1));
        return p;
    }
    static Poly monomial(std::size_t nvars, Exp e, const FieldElement& c) {
        if (e.size() != nvars) throw VariableOutOfRange("exponent vector length mismatch");
        Poly p(nvars);
        p.add_term(std::move(e), c);
        return p;
    }

    std::size_t num_vars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Total degree of the polynomial; -1 for the zero polynomial.
    int degree() const {
        return terms_.empty() ? -1 : static_cast<int>(total_degree(terms_.begin()->first));
    }

    // True when every term has the same total degree; the zero polynomial
    // is homogeneous of every degree.
    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        const unsigned d = total_degree(terms_.begin()->first);
        for (const auto& [e, c] : terms_) {
            if (total_degree(e) != d) return false;
        }
        return true;
    }

    void add_term(Exp e, const FieldElement& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(std::move(e), c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    // Leading term under the global order; the polynomial must be nonzero.
    const std::pair<const Exp, FieldElement>& leading() const {
        return *terms_.begin();
    }

    Poly operator-() const {
        Poly r(nvars_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r(a.nvars_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                r.add_term(exp_add(ea, eb), ca * cb);
            }
        }
        return r;
    }

    Poly scaled(const FieldElement& c) const {
        Poly r(nvars_);
        if (c.is_zero()) return r;
        for (const auto& [e, co] : terms_) r.terms_.emplace(e, co * c);
        return r;
    }

    // Coefficientwise conjugation; an involutive ring automorphism.
    Poly conjugated() const {
        Poly r(nvars_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, c.conj());
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    FieldElement evaluate(const std::vector<FieldElement>& x) const {
        FieldElement acc;
        for (const auto& [e, c] : terms_) {
            FieldElement t = c;
            for (std::size_t v = 0; v < nvars_; ++v) {
                for (unsigned k = 0; k < e[v]; ++k) t *= x[v];
            }
            acc += t;
        }
        return acc;
    }

    // Substitutes x_v -> images[v]; images live in a common target ring.
    Poly substitute(const std::vector<Poly>& images) const {
        const std::size_t m = images.empty() ? 0 : images[0].num_vars();
        Poly out(m);
        // pw[v][k] = images[v]^k, filled on demand.
        std::vector<std::vector<Poly>> pw(nvars_);
        auto power = [&](std::size_t v, unsigned k) -> const Poly& {
            auto& cache = pw[v];
            if (cache.empty()) cache.push_back(Poly::constant(m, FieldElement(1)));
            while (cache.size() <= k) cache.push_back(cache.back() * images[v]);
            return cache[k];
        };
        for (const auto& [e, c] : terms_) {
            Poly t = Poly::constant(m, c);
            for (std::size_t v = 0; v < nvars_; ++v) {
                if (e[v] > 0) t = t * power(v, e[v]);
            }
            out += t;
        }
        return out;
    }

private:
    std::size_t nvars_ = 0;
    TermMap terms_;
};

/*
 * Homogeneous polynomial of a fixed nominal degree. The degree survives
 * cancellation: the zero polynomial keeps the degree it was declared with,
 * so graded vector spaces stay well-typed.
 */
class HomogeneousPolynomial {
public:
    HomogeneousPolynomial(Poly p, unsigned nominal_degree)
        : poly_(std::move(p)), degree_(nominal_degree) {
        for (const auto& [e, c] : poly_.terms()) {
            if (total_degree(e) != degree_) {
                throw DegreeMismatch("term of degree " + std::to_string(total_degree(e)) +
                                     " in a form declared degree " + std::to_string(degree_));
            }
        }
    }

    static HomogeneousPolynomial zero(std::size_t nvars, unsigned degree) {
        return HomogeneousPolynomial(Poly(nvars), degree);
    }

    std::size_t num_vars() const { return poly_.num_vars(); }
    unsigned degree() const { return degree_; }
    const Poly& poly() const { return poly_; }
    const Poly::TermMap& terms() const { return poly_.terms(); }
    bool is_zero() const { return poly_.is_zero(); }

    HomogeneousPolynomial operator-() const {
        return HomogeneousPolynomial(-poly_, degree_);
    }
    HomogeneousPolynomial scaled(const FieldElement& c) const {
        return HomogeneousPolynomial(poly_.scaled(c), degree_);
    }
    HomogeneousPolynomial conjugated() const {
        return HomogeneousPolynomial(poly_.conjugated(), degree_);
    }

    friend HomogeneousPolynomial operator+(const HomogeneousPolynomial& a,
                                           const HomogeneousPolynomial& b) {
        if (a.degree_ != b.degree_) {
            throw DegreeMismatch("adding forms of degrees " + std::to_string(a.degree_) +
                                 " and " + std::to_string(b.degree_));
        }
        return HomogeneousPolynomial(a.poly_ + b.poly_, a.degree_);
    }
    friend HomogeneousPolynomial operator-(const HomogeneousPolynomial& a,
                                           const HomogeneousPolynomial& b) {
        return a + (-b);
    }
    friend HomogeneousPolynomial operator*(const HomogeneousPolynomial& a,
                                           const HomogeneousPolynomial& b) {
        return HomogeneousPolynomial(a.poly_ * b.poly_, a.degree_ + b.degree_);
    }

    friend bool operator==(const HomogeneousPolynomial& a, const HomogeneousPolynomial& b) {
        return a.degree_ == b.degree_ && a.poly_ == b.poly_;
    }
    friend bool operator!=(const HomogeneousPolynomial& a, const HomogeneousPolynomial& b) {
        return !(a == b);
    }

    FieldElement evaluate(const std::vector<FieldElement>& x) const {
        return poly_.evaluate(x);
    }

private:
    Poly poly_;
    unsigned degree_;
};

// Coefficients of f against monomial_basis(num_vars, degree), descending
// grlex; length binomial(n + d, n) on P^n.
inline std::vector<FieldElement> coefficient_vector(const HomogeneousPolynomial& f) {
    const std::vector<Exp> basis = monomial_basis(f.num_vars(), f.degree());
    std::vector<FieldElement> out(basis.size());
    const auto& terms = f.terms();
    for (std::size_t k = 0; k < basis.size(); ++k) {
        auto it = terms.find(basis[k]);
        if (it != terms.end()) out[k] = it->second;
    }
    return out;
}

/*
 * Invertible linear change of coordinates x_i -> sum_j T[i][j] x_j.
 * Singularity is rejected at construction, so apply() always has an inverse.
 */
class LinearChange {
public:
    explicit LinearChange(std::vector<std::vector<FieldElement>> m) : m_(std::move(m)) {
        const std::size_t n = m_.size();
        Matrix mat(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            if (m_[i].size() != n) throw std::invalid_argument("LinearChange: not square");
            for (std::size_t j = 0; j < n; ++j) mat.at(i, j) = m_[i][j];
        }
        if (rank(mat) != n) throw std::invalid_argument("LinearChange: singular matrix");
    }

    static LinearChange identity(std::size_t n) {
        std::vector<std::vector<FieldElement>> m(n, std::vector<FieldElement>(n));
        for (std::size_t i = 0; i < n; ++i) m[i][i] = FieldElement(1);
        return LinearChange(std::move(m));
    }
    static LinearChange swap_vars(std::size_t n, std::size_t a, std::size_t b) {
        auto m = identity(n).m_;
        std::swap(m[a], m[b]);
        return LinearChange(std::move(m));
    }

    std::size_t size() const { return m_.size(); }
    const FieldElement& at(std::size_t i, std::size_t j) const { return m_[i][j]; }

    HomogeneousPolynomial apply(const HomogeneousPolynomial& f) const {
        if (f.num_vars() != m_.size()) {
            throw std::invalid_argument("LinearChange: dimension mismatch");
        }
        std::vector<Poly> images;
        images.reserve(m_.size());
        for (std::size_t i = 0; i < m_.size(); ++i) {
            Poly row(m_.size());
            for (std::size_t j = 0; j < m_.size(); ++j) {
                Exp e(m_.size(), 0);
                e[j] = 1;
                row.add_term(std::move(e), m_[i][j]);
            }
            images.push_back(std::move(row));
        }
        return HomogeneousPolynomial(f.poly().substitute(images), f.degree());
    }

    LinearChange inverse() const {
        const std::size_t n = m_.size();
        Matrix aug(n, 2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m_[i][j];
            aug.at(i, n + i) = FieldElement(1);
        }
        rref(aug);
        std::vector<std::vector<FieldElement>> inv(n, std::vector<FieldElement>(n));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug.at(i, n + j);
        }
        return LinearChange(std::move(inv));
    }

private:
    std::vector<std::vector<FieldElement>> m_;
};

} // namespace strengthlab

#endif // STRENGTHLAB_POLY_HPP

#ifndef STRENGTHLAB_IDEAL_HPP
#define STRENGTHLAB_IDEAL_HPP

#include "strengthlab/groebner.hpp"
#include "strengthlab/numeric.hpp"
#include "strengthlab/poly.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace strengthlab {

/*
 * Homogeneous ideal with a cached reduced Groebner basis. The cache is
 * filled once on first use; callers must not share an instance across
 * threads until after that first call (single-writer discipline).
 */
class GradedIdeal {
public:
    explicit GradedIdeal(std::vector<HomogeneousPolynomial> gens) : gens_(std::move(gens)) {
        if (gens_.empty()) throw std::invalid_argument("GradedIdeal: no generators");
        for (const auto& g : gens_) {
            if (g.is_zero()) throw ZeroSectionError("GradedIdeal: zero generator");
            if (g.num_vars() != gens_[0].num_vars()) {
                throw std::invalid_argument("GradedIdeal: mixed variable counts");
            }
        }
    }

    const std::vector<HomogeneousPolynomial>& generators() const { return gens_; }
    std::size_t num_vars() const { return gens_[0].num_vars(); }

    const GroebnerBasis& basis() const {
        if (!cache_) {
            std::vector<Poly> raw;
            raw.reserve(gens_.size());
            for (const auto& g : gens_) raw.push_back(g.poly());
            cache_ = groebner(raw);
        }
        return *cache_;
    }

private:
    std::vector<HomogeneousPolynomial> gens_;
    mutable std::optional<GroebnerBasis> cache_;
};

// Outcome of a graded membership query; cofactors satisfy
// f = sum factors[h] * cofactors[h] exactly whenever member is true.
struct MembershipWitness {
    bool member = false;
    std::optional<std::vector<HomogeneousPolynomial>> cofactors;
};

namespace detail {

// Extracts the degree-d graded part of p. Dropping off-degree terms of a
// valid graded identity keeps it valid, so cofactors may be projected.
inline HomogeneousPolynomial graded_part(const Poly& p, unsigned d) {
    Poly out(p.num_vars());
    for (const auto& [e, c] : p.terms()) {
        if (total_degree(e) == d) out.add_term(e, c);
    }
    return HomogeneousPolynomial(std::move(out), d);
}

} // namespace detail

/*
 * Decides whether f lies in the degree-d graded piece of the ideal spanned
 * by fixed_factors, and if so returns explicit cofactors obtained from
 * division tracking through the Groebner representation. The cofactors are
 * the first solution that tracking produces; they are deterministic but not
 * otherwise canonical.
 */
inline MembershipWitness graded_membership(const HomogeneousPolynomial& f,
                                           const std::vector<HomogeneousPolynomial>& factors) {
    if (f.is_zero()) throw ZeroSectionError("graded_membership: zero section");
    if (factors.empty()) throw std::invalid_argument("graded_membership: no factors");
    const unsigned d = f.degree();
    for (const auto& g : factors) {
        if (g.is_zero()) throw ZeroSectionError("graded_membership: zero factor");
        if (g.num_vars() != f.num_vars()) {
            throw std::invalid_argument("graded_membership: mixed variable counts");
        }
        if (g.degree() > d) {
            throw DegreeMismatch("graded_membership: factor degree exceeds target degree");
        }
    }

    std::vector<Poly> raw;
    raw.reserve(factors.size());
    for (const auto& g : factors) raw.push_back(g.poly());
    const GroebnerBasis gb = groebner(raw);
    const NormalFormResult nf = normal_form(f.poly(), gb.elements);

    MembershipWitness out;
    out.member = nf.remainder.is_zero();
    if (!out.member) return out;

    std::vector<HomogeneousPolynomial> cof;
    for (std::size_t j = 0; j < factors.size(); ++j) {
        Poly c(f.num_vars());
        for (std::size_t k = 0; k < gb.elements.size(); ++k) {
            if (nf.quotients[k].is_zero()) continue;
            c += nf.quotients[k] * gb.reps[k][j];
        }
        cof.push_back(detail::graded_part(c, d - factors[j].degree()));
    }
    // Invariant of the witness type: the decomposition expands exactly.
    Poly check(f.num_vars());
    for (std::size_t j = 0; j < factors.size(); ++j) {
        check += factors[j].poly() * cof[j].poly();
    }
    if (!(check == f.poly())) {
        throw std::logic_error("graded_membership: cofactor expansion mismatch");
    }
    out.cofactors = std::move(cof);
    return out;
}

/*
 * Dense linear-algebra membership oracle: solves for cofactors directly in
 * the monomial basis. Shares no code with the Groebner route; the two are
 * cross-checked against each other in the test suite.
 */
inline MembershipWitness membership_by_linear_algebra(
    const HomogeneousPolynomial& f, const std::vector<HomogeneousPolynomial>& factors) {
    if (f.is_zero()) throw ZeroSectionError("membership oracle: zero section");
    const unsigned d = f.degree();
    const std::size_t nv = f.num_vars();
    const std::vector<Exp> target = monomial_basis(nv, d);

    std::vector<std::vector<FieldElement>> cols;
    std::vector<std::pair<std::size_t, Exp>> col_src; // (factor index, cofactor monomial)
    for (std::size_t j = 0; j < factors.size(); ++j) {
        if (factors[j].degree() > d) {
            throw DegreeMismatch("membership oracle: factor degree exceeds target degree");
        }
        for (const Exp& m : monomial_basis(nv, d - factors[j].degree())) {
            HomogeneousPolynomial prod =
                HomogeneousPolynomial(Poly::monomial(nv, m, FieldElement(1)),
                                      d - factors[j].degree()) *
                factors[j];
            cols.push_back(coefficient_vector(prod));
            col_src.emplace_back(j, m);
        }
    }
    Matrix a(target.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        for (std::size_t r = 0; r < target.size(); ++r) a.at(r, c) = cols[c][r];
    }
    const std::optional<std::vector<FieldElement>> x = solve(a, coefficient_vector(f));

    MembershipWitness out;
    out.member = x.has_value();
    if (!out.member) return out;
    std::vector<Poly> cof(factors.size(), Poly(nv));
    for (std::size_t c = 0; c < cols.size(); ++c) {
        cof[col_src[c].first].add_term(col_src[c].second, (*x)[c]);
    }
    std::vector<HomogeneousPolynomial> wrapped;
    for (std::size_t j = 0; j < factors.size(); ++j) {
        wrapped.emplace_back(std::move(cof[j]), d - factors[j].degree());
    }
    out.cofactors = std::move(wrapped);
    return out;
}

// Dimension of the degree-d graded piece of the ideal, counted from the
// Groebner staircase: a degree-d monomial lies in the lead-term ideal iff
// some basis lead monomial divides it.
inline std::size_t hilbert_function(const GradedIdeal& ideal, unsigned d) {
    const GroebnerBasis& gb = ideal.basis();
    std::size_t count = 0;
    for (const Exp& m : monomial_basis(ideal.num_vars(), d)) {
        for (const Poly& g : gb.elements) {
            if (exp_divides(g.leading().first, m)) {
                ++count;
                break;
            }
        }
    }
    return count;
}

// Same quantity by an independent route: the rank of the degree-d
// multiplication matrix assembled from the generators.
inline std::size_t hilbert_function_by_rank(const GradedIdeal& ideal, unsigned d) {
    const std::size_t nv = ideal.num_vars();
    const std::vector<Exp> target = monomial_basis(nv, d);
    std::vector<std::vector<FieldElement>> cols;
    for (const auto& g : ideal.generators()) {
        if (g.degree() > d) continue;
        for (const Exp& m : monomial_basis(nv, d - g.degree())) {
            HomogeneousPolynomial prod =
                HomogeneousPolynomial(Poly::monomial(nv, m, FieldElement(1)), d - g.degree()) * g;
            cols.push_back(coefficient_vector(prod));
        }
    }
    if (cols.empty()) return 0;
    Matrix a(target.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        for (std::size_t r = 0; r < target.size(); ++r) a.at(r, c) = cols[c][r];
    }
    return rank(a);
}

// Dimension of the degree-d piece of the quotient ring.
inline Integer quotient_dimension(const GradedIdeal& ideal, unsigned d) {
    const long long n = static_cast<long long>(ideal.num_vars()) - 1;
    return binomial(n + d, n) - Integer(hilbert_function(ideal, d));
}

struct RegularSequenceReport {
    bool is_regular = false;
    long long codimension = 0;
    long long expected_codimension = 0;
};

/*
 * Regular-sequence test via the combinatorial dimension of the staircase:
 * the affine cone of R/I has dimension equal to the largest cardinality of
 * a variable subset S such that no leading monomial of the basis is
 * supported entirely inside S (dimension of R/I equals that of R/lt(I)).
 */
inline RegularSequenceReport is_regular_sequence(const std::vector<HomogeneousPolynomial>& forms) {
    if (forms.empty()) throw std::invalid_argument("is_regular_sequence: no forms");
    const std::size_t nv = forms[0].num_vars();
    if (forms.size() > nv) {
        throw TooManyForms("is_regular_sequence: " + std::to_string(forms.size()) +
                           " forms in " + std::to_string(nv) + " variables");
    }
    for (const auto& g : forms) {
        if (g.is_zero()) throw ZeroSectionError("is_regular_sequence: zero form");
    }
    const GradedIdeal ideal{forms};
    const GroebnerBasis& gb = ideal.basis();

    long long dim_cone = -1;
    for (std::size_t mask = 0; mask < (std::size_t(1) << nv); ++mask) {
        bool ok = true;
        for (const Poly& g : gb.elements) {
            const Exp& lead = g.leading().first;
            bool supported = true;
            for (std::size_t v = 0; v < nv; ++v) {
                if (lead[v] > 0 && !(mask & (std::size_t(1) << v))) {
                    supported = false;
                    break;
                }
            }
            if (supported) {
                ok = false;
                break;
            }
        }
        if (ok) {
            long long card = 0;
            for (std::size_t v = 0; v < nv; ++v) {
                if (mask & (std::size_t(1) << v)) ++card;
            }
            if (card > dim_cone) dim_cone = card;
        }
    }

    RegularSequenceReport rep;
    rep.expected_codimension = static_cast<long long>(forms.size());
    rep.codimension = static_cast<long long>(nv) - dim_cone;
    rep.is_regular = (rep.codimension == rep.expected_codimension);
    return rep;
}

// Coefficient of t^d in prod_h (1 - t^{deg_h}) / (1 - t)^{nvars}: the
// Hilbert function a complete intersection of those degrees must have.
inline Integer complete_intersection_series(const std::vector<unsigned>& degrees,
                                            std::size_t nvars, unsigned d) {
    std::vector<Integer> num(1, Integer(1));
    for (unsigned deg : degrees) {
        std::vector<Integer> next(num.size() + deg, Integer(0));
        for (std::size_t k = 0; k < num.size(); ++k) {
            next[k] += num[k];
            next[k + deg] -= num[k];
        }
        num = std::move(next);
    }
    Integer acc = 0;
    for (std::size_t k = 0; k < num.size() && k <= d; ++k) {
        // 1/(1-t)^m has series coefficients binomial(j + m - 1, m - 1).
        acc += num[k] * binomial(static_cast<long long>(d - k) + nvars - 1,
                                 static_cast<long long>(nvars) - 1);
    }
    return acc;
}

} // namespace strengthlab

#endif // STRENGTHLAB_IDEAL_HPP

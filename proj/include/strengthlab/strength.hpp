#ifndef STRENGTHLAB_STRENGTH_HPP
#define STRENGTHLAB_STRENGTH_HPP

#include "strengthlab/groebner.hpp"
#include "strengthlab/ideal.hpp"
#include "strengthlab/linalg.hpp"
#include "strengthlab/numeric.hpp"
#include "strengthlab/poly.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace strengthlab {

/*
 * A decomposition target = sum_h f_h * g_h with deg f_h <= deg g_h. The
 * type vector records the smaller degree of each pair, so entries lie in
 * [1, floor(d/2)]. Certificates verify by exact expansion; verification is
 * deliberately a separate code path from every producer.
 */
struct StrengthCertificate {
    HomogeneousPolynomial target;
    std::vector<std::pair<HomogeneousPolynomial, HomogeneousPolynomial>> pairs;
    std::vector<unsigned> type_vector;
};

// Normalizes raw factor pairs into a certificate: smaller degree first in
// each pair, type vector rebuilt. Zero factors are a producer bug.
inline StrengthCertificate make_certificate(
    HomogeneousPolynomial target,
    std::vector<std::pair<HomogeneousPolynomial, HomogeneousPolynomial>> pairs) {
    StrengthCertificate cert{std::move(target), {}, {}};
    for (auto& [a, b] : pairs) {
        if (a.is_zero() || b.is_zero()) {
            throw std::logic_error("make_certificate: zero factor in a pair");
        }
        if (a.degree() + b.degree() != cert.target.degree()) {
            throw std::logic_error("make_certificate: pair degrees do not split the target");
        }
        if (a.degree() > b.degree()) std::swap(a, b);
        cert.type_vector.push_back(a.degree());
        cert.pairs.emplace_back(std::move(a), std::move(b));
    }
    return cert;
}

// Independent verifier: checks every structural invariant and re-expands
// the sum with plain ring arithmetic. No solver code is involved.
inline bool verify_certificate(const StrengthCertificate& cert) {
    if (cert.target.is_zero()) return false;
    if (cert.pairs.empty()) return false;
    if (cert.type_vector.size() != cert.pairs.size()) return false;
    const unsigned d = cert.target.degree();
    Poly acc(cert.target.num_vars());
    for (std::size_t h = 0; h < cert.pairs.size(); ++h) {
        const auto& [a, b] = cert.pairs[h];
        if (a.is_zero() || b.is_zero()) return false;
        if (a.num_vars() != cert.target.num_vars() || b.num_vars() != cert.target.num_vars()) {
            return false;
        }
        if (a.degree() + b.degree() != d) return false;
        if (a.degree() > b.degree()) return false;
        if (cert.type_vector[h] != a.degree()) return false;
        if (cert.type_vector[h] < 1 || 2 * cert.type_vector[h] > d) return false;
        acc += a.poly() * b.poly();
    }
    return acc == cert.target.poly();
}

namespace detail {

// All size-r subsets of {0..n-1} in lexicographic order.
inline std::vector<std::vector<std::size_t>> subsets_lex(std::size_t n, std::size_t r) {
    std::vector<std::vector<std::size_t>> out;
    if (r > n) return out;
    std::vector<std::size_t> cur(r);
    for (std::size_t k = 0; k < r; ++k) cur[k] = k;
    while (true) {
        out.push_back(cur);
        std::size_t k = r;
        while (k > 0 && cur[k - 1] == n - r + (k - 1)) --k;
        if (k == 0) break;
        ++cur[k - 1];
        for (std::size_t j = k; j < r; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

/*
 * Chart system for "V(f) contains an m-plane". The plane is the column
 * span of the (n+1) x (m+1) matrix P whose rows at pivot_rows form an
 * identity and whose other rows are unknowns; f(P t) must vanish
 * identically in t. Returns the coefficient equations, polynomials in the
 * (n - m)(m + 1) plane unknowns.
 */
inline std::vector<Poly> fano_system(const HomogeneousPolynomial& f,
                                     const std::vector<std::size_t>& pivot_rows) {
    const std::size_t nv = f.num_vars();
    const std::size_t mp1 = pivot_rows.size();
    const std::size_t nunk = (nv - mp1) * mp1;
    const std::size_t total = nunk + mp1; // unknowns first, then the t's

    std::vector<long long> pivot_of(nv, -1);
    for (std::size_t a = 0; a < mp1; ++a) pivot_of[pivot_rows[a]] = static_cast<long long>(a);

    std::vector<Poly> images;
    images.reserve(nv);
    std::size_t free_row = 0;
    for (std::size_t r = 0; r < nv; ++r) {
        Poly row(total);
        if (pivot_of[r] >= 0) {
            Exp e(total, 0);
            e[nunk + static_cast<std::size_t>(pivot_of[r])] = 1;
            row.add_term(std::move(e), FieldElement(1));
        } else {
            for (std::size_t a = 0; a < mp1; ++a) {
                Exp e(total, 0);
                e[free_row * mp1 + a] = 1;
                e[nunk + a] = 1;
                row.add_term(std::move(e), FieldElement(1));
            }
            ++free_row;
        }
        images.push_back(std::move(row));
    }

    const Poly big = f.poly().substitute(images);
    std::map<Exp, Poly, GrlexGreater> groups;
    for (const auto& [e, c] : big.terms()) {
        Exp tpart(e.begin() + static_cast<long>(nunk), e.end());
        Exp upart(e.begin(), e.begin() + static_cast<long>(nunk));
        auto it = groups.try_emplace(std::move(tpart), Poly(nunk)).first;
        it->second.add_term(std::move(upart), c);
    }
    std::vector<Poly> eqs;
    eqs.reserve(groups.size());
    for (auto& [t, p] : groups) eqs.push_back(std::move(p));
    return eqs;
}

/*
 * Bounded search for a rational (Q(i)) common zero: the origin, then an
 * exact solve when the system is linear, then a small deterministic grid.
 * Exhaustion means "no witness found", never "no solution exists".
 */
inline std::optional<std::vector<FieldElement>> small_solution(const std::vector<Poly>& eqs,
                                                               std::size_t nunknowns) {
    auto satisfies = [&](const std::vector<FieldElement>& x) {
        for (const Poly& e : eqs) {
            if (!e.evaluate(x).is_zero()) return false;
        }
        return true;
    };
    std::vector<FieldElement> x(nunknowns);
    if (satisfies(x)) return x;

    bool linear = true;
    for (const Poly& e : eqs) {
        if (e.degree() > 1) linear = false;
    }
    if (linear) {
        Matrix a(eqs.size(), nunknowns);
        std::vector<FieldElement> rhs(eqs.size());
        for (std::size_t r = 0; r < eqs.size(); ++r) {
            for (const auto& [e, c] : eqs[r].terms()) {
                if (total_degree(e) == 0) {
                    rhs[r] -= c;
                    continue;
                }
                for (std::size_t v = 0; v < nunknowns; ++v) {
                    if (e[v] == 1) a.at(r, v) = c;
                }
            }
        }
        return solve(a, rhs);
    }

    std::vector<FieldElement> values;
    if (nunknowns <= 4) {
        values = {FieldElement(0), FieldElement(1), FieldElement(-1), FieldElement::i(),
                  -FieldElement::i()};
    } else if (nunknowns <= 6) {
        values = {FieldElement(0), FieldElement(1), FieldElement(-1)};
    } else {
        return std::nullopt;
    }
    std::vector<std::size_t> idx(nunknowns, 0);
    while (true) {
        for (std::size_t v = 0; v < nunknowns; ++v) x[v] = values[idx[v]];
        if (satisfies(x)) return x;
        std::size_t v = nunknowns;
        while (v > 0) {
            --v;
            if (++idx[v] < values.size()) break;
            idx[v] = 0;
            if (v == 0) return std::nullopt;
        }
    }
}

// Linear forms cutting out the plane of a chart solution: the left kernel
// of the plane's parametrization matrix.
inline std::vector<HomogeneousPolynomial> plane_cut_forms(
    std::size_t nv, const std::vector<std::size_t>& pivot_rows,
    const std::vector<FieldElement>& solution) {
    const std::size_t mp1 = pivot_rows.size();
    std::vector<long long> pivot_of(nv, -1);
    for (std::size_t a = 0; a < mp1; ++a) pivot_of[pivot_rows[a]] = static_cast<long long>(a);
    Matrix pt(mp1, nv); // transpose of the parametrization
    std::size_t free_row = 0;
    for (std::size_t r = 0; r < nv; ++r) {
        if (pivot_of[r] >= 0) {
            pt.at(static_cast<std::size_t>(pivot_of[r]), r) = FieldElement(1);
        } else {
            for (std::size_t a = 0; a < mp1; ++a) pt.at(a, r) = solution[free_row * mp1 + a];
            ++free_row;
        }
    }
    std::vector<HomogeneousPolynomial> forms;
    for (const std::vector<FieldElement>& v : kernel_basis(pt)) {
        Poly l(nv);
        for (std::size_t r = 0; r < nv; ++r) {
            Exp e(nv, 0);
            e[r] = 1;
            l.add_term(std::move(e), v[r]);
        }
        forms.emplace_back(std::move(l), 1);
    }
    return forms;
}

} // namespace detail

// True iff V(f) contains an m-dimensional linear subspace over the
// algebraic closure: logical OR of the chart systems.
inline bool fano_solvable(const HomogeneousPolynomial& f, unsigned m) {
    const std::size_t nv = f.num_vars();
    for (const auto& chart : detail::subsets_lex(nv, m + 1)) {
        if (solvable_over_closure(detail::fano_system(f, chart))) return true;
    }
    return false;
}

struct SliceRankResult {
    unsigned value = 0;
    // Projective dimension e of the largest linear subspace inside V(f);
    // value = n - e on P^n. -1 when even points are missing (P^0 only).
    long long witness_subspace_dim = -1;
    std::optional<std::vector<HomogeneousPolynomial>> witness;
};

/*
 * Exact slice rank over the algebraic closure. For every nonzero form,
 * f lies in an ideal of r independent linear forms iff V(f) contains the
 * codimension-r linear space they cut out, so the slice rank equals
 * n - max{m : V(f) contains an m-plane}. Charts are scanned top-down; the
 * first solvable level fixes the value, and a rational witness is attached
 * when the bounded search finds one on some chart of that level.
 */
inline SliceRankResult slice_rank(const HomogeneousPolynomial& f) {
    if (f.is_zero()) throw ZeroSectionError("slice_rank: zero section");
    if (f.degree() < 1) throw std::invalid_argument("slice_rank: degree must be >= 1");
    const std::size_t nv = f.num_vars();
    const long long n = static_cast<long long>(nv) - 1;

    for (long long m = n - 1; m >= 0; --m) {
        const auto charts = detail::subsets_lex(nv, static_cast<std::size_t>(m) + 1);
        bool solvable = false;
        std::optional<std::vector<HomogeneousPolynomial>> witness;
        for (const auto& chart : charts) {
            const std::vector<Poly> sys = detail::fano_system(f, chart);
            if (!solvable_over_closure(sys)) continue;
            solvable = true;
            const std::size_t nunk = (nv - chart.size()) * chart.size();
            if (auto sol = detail::small_solution(sys, nunk)) {
                std::vector<HomogeneousPolynomial> forms =
                    detail::plane_cut_forms(nv, chart, *sol);
                if (!graded_membership(f, forms).member) {
                    throw std::logic_error("slice_rank: witness plane fails membership");
                }
                witness = std::move(forms);
                break;
            }
        }
        if (solvable) {
            SliceRankResult out;
            out.value = static_cast<unsigned>(n - m);
            out.witness_subspace_dim = m;
            out.witness = std::move(witness);
            return out;
        }
    }
    // Only P^0 reaches this point: V(f) is empty, no subspace at all.
    SliceRankResult out;
    out.value = static_cast<unsigned>(n + 1);
    out.witness_subspace_dim = -1;
    return out;
}

// Slice-rank lower bound from an unsolvable plane level: no m-plane on
// V(f) forces slice rank >= n - m + 1.
inline std::optional<unsigned> strength_lower_from_fano(const HomogeneousPolynomial& f,
                                                        unsigned m) {
    if (f.is_zero()) throw ZeroSectionError("strength_lower_from_fano: zero section");
    const long long n = static_cast<long long>(f.num_vars()) - 1;
    if (m < 1 || static_cast<long long>(m) >= n) {
        throw std::invalid_argument("strength_lower_from_fano: need 1 <= m < n");
    }
    if (fano_solvable(f, m)) return std::nullopt;
    return static_cast<unsigned>(n - m + 1);
}

struct StrengthOneResult {
    bool reducible = false;
    bool infinite_strength = false; // degree <= 1: no product decomposition at all
    std::optional<std::pair<HomogeneousPolynomial, HomogeneousPolynomial>> factors;
};

namespace detail {

// Polynomials in `nunk` unknowns attached to x-monomials: the symbolic
// coefficients of a product of forms with unknown coefficients.
using SymbolicForm = std::vector<Poly>; // indexed like monomial_basis(nv, deg)

// Equations stating sum_h f_h g_h = target, where each symbolic form lists
// one coefficient polynomial per monomial of its degree.
inline std::vector<Poly> product_match_equations(
    const HomogeneousPolynomial& target,
    const std::vector<std::pair<unsigned, SymbolicForm>>& fs,
    const std::vector<std::pair<unsigned, SymbolicForm>>& gs, std::size_t nunk) {
    const std::size_t nv = target.num_vars();
    std::map<Exp, Poly, GrlexGreater> acc;
    for (const Exp& e : monomial_basis(nv, target.degree())) acc.emplace(e, Poly(nunk));
    for (std::size_t h = 0; h < fs.size(); ++h) {
        const auto& [di, fcoeffs] = fs[h];
        const auto& [dj, gcoeffs] = gs[h];
        const std::vector<Exp> bi = monomial_basis(nv, di);
        const std::vector<Exp> bj = monomial_basis(nv, dj);
        for (std::size_t a = 0; a < bi.size(); ++a) {
            if (fcoeffs[a].is_zero()) continue;
            for (std::size_t b = 0; b < bj.size(); ++b) {
                if (gcoeffs[b].is_zero()) continue;
                acc.at(exp_add(bi[a], bj[b])) += fcoeffs[a] * gcoeffs[b];
            }
        }
    }
    const auto& tgt = target.terms();
    std::vector<Poly> eqs;
    for (auto& [e, p] : acc) {
        auto it = tgt.find(e);
        if (it != tgt.end()) p -= Poly::constant(nunk, it->second);
        eqs.push_back(std::move(p));
    }
    return eqs;
}

// Grid values for the factor-side witness search, sized by unknown count.
inline std::vector<FieldElement> witness_grid_values(std::size_t free_count) {
    if (free_count <= 4) {
        return {FieldElement(0), FieldElement(1), FieldElement(-1), FieldElement::i(),
                -FieldElement::i()};
    }
    if (free_count <= 6) return {FieldElement(0), FieldElement(1), FieldElement(-1)};
    return {};
}

} // namespace detail

/*
 * Strength-one test: f is a product of two lower-degree forms over the
 * closure iff one of the split bilinear systems is solvable. Scaling
 * redundancy is broken by designating the first nonzero coefficient of the
 * lower factor. Rational factors are attached when the grid search, with
 * the cofactor side solved linearly, finds them.
 */
inline StrengthOneResult strength_one_test(const HomogeneousPolynomial& f) {
    if (f.is_zero()) throw ZeroSectionError("strength_one_test: zero section");
    StrengthOneResult out;
    const unsigned d = f.degree();
    if (d <= 1) {
        out.infinite_strength = true;
        return out;
    }
    const std::size_t nv = f.num_vars();

    for (unsigned i = 1; 2 * i <= d; ++i) {
        const std::vector<Exp> bi = monomial_basis(nv, i);
        const std::vector<Exp> bj = monomial_basis(nv, d - i);
        for (std::size_t p = 0; p < bi.size(); ++p) {
            // Unknown layout: f-side free coefficients after position p,
            // then the full g side.
            const std::size_t ffree = bi.size() - p - 1;
            const std::size_t nunk = ffree + bj.size();
            detail::SymbolicForm fc(bi.size(), Poly(nunk));
            for (std::size_t a = 0; a < bi.size(); ++a) {
                if (a < p) continue;
                fc[a] = (a == p) ? Poly::constant(nunk, FieldElement(1))
                                 : Poly::variable(nunk, a - p - 1);
            }
            detail::SymbolicForm gc(bj.size(), Poly(nunk));
            for (std::size_t b = 0; b < bj.size(); ++b) {
                gc[b] = Poly::variable(nunk, ffree + b);
            }
            const std::vector<Poly> eqs = detail::product_match_equations(
                f, {{i, fc}}, {{d - i, gc}}, nunk);
            if (!solvable_over_closure(eqs)) continue;

            out.reducible = true;
            // Witness: grid the f side, solve the g side exactly.
            const std::vector<FieldElement> values = detail::witness_grid_values(ffree);
            std::vector<std::size_t> idx(ffree, 0);
            const bool grid_usable = !values.empty() || ffree == 0;
            while (grid_usable) {
                Poly fpoly(nv);
                fpoly.add_term(bi[p], FieldElement(1));
                for (std::size_t a = p + 1; a < bi.size(); ++a) {
                    fpoly.add_term(bi[a], values.empty() ? FieldElement(0)
                                                         : values[idx[a - p - 1]]);
                }
                HomogeneousPolynomial fh(fpoly, i);
                const MembershipWitness w = membership_by_linear_algebra(f, {fh});
                if (w.member && !(*w.cofactors)[0].is_zero()) {
                    out.factors = std::make_pair(fh, (*w.cofactors)[0]);
                    break;
                }
                std::size_t v = ffree;
                bool done = true;
                while (v > 0) {
                    --v;
                    if (++idx[v] < values.size()) {
                        done = false;
                        break;
                    }
                    idx[v] = 0;
                }
                if (done) break;
            }
            return out;
        }
    }
    return out;
}

struct DecideOptions {
    std::size_t unknown_budget = 24;
};

struct DecideResult {
    bool value = false;
    std::optional<StrengthCertificate> certificate;
};

namespace detail {

// Certificate for f = sum_j l_j u_j from plane-cutting linear forms, via
// membership cofactors; zero cofactors are dropped.
inline std::optional<StrengthCertificate> certificate_from_forms(
    const HomogeneousPolynomial& f, const std::vector<HomogeneousPolynomial>& forms) {
    const MembershipWitness w = graded_membership(f, forms);
    if (!w.member) return std::nullopt;
    std::vector<std::pair<HomogeneousPolynomial, HomogeneousPolynomial>> pairs;
    for (std::size_t j = 0; j < forms.size(); ++j) {
        if ((*w.cofactors)[j].is_zero()) continue;
        pairs.emplace_back(forms[j], (*w.cofactors)[j]);
    }
    return make_certificate(f, std::move(pairs));
}

// Every monomial of a form in n+1 variables is divisible by some variable;
// assigning each to its smallest divisor yields f = sum_v x_v h_v with at
// most n+1 pairs.
inline StrengthCertificate variable_split_certificate(const HomogeneousPolynomial& f) {
    const std::size_t nv = f.num_vars();
    std::vector<Poly> cof(nv, Poly(nv));
    for (const auto& [e, c] : f.terms()) {
        for (std::size_t v = 0; v < nv; ++v) {
            if (e[v] > 0) {
                Exp r = e;
                r[v] -= 1;
                cof[v].add_term(std::move(r), c);
                break;
            }
        }
    }
    std::vector<std::pair<HomogeneousPolynomial, HomogeneousPolynomial>> pairs;
    for (std::size_t v = 0; v < nv; ++v) {
        if (cof[v].is_zero()) continue;
        Poly xv(nv);
        Exp e(nv, 0);
        e[v] = 1;
        xv.add_term(std::move(e), FieldElement(1));
        pairs.emplace_back(HomogeneousPolynomial(std::move(xv), 1),
                           HomogeneousPolynomial(std::move(cof[v]), f.degree() - 1));
    }
    return make_certificate(f, std::move(pairs));
}

// Nondecreasing k-tuples over [1, hi], lexicographic.
inline std::vector<std::vector<unsigned>> nondecreasing_tuples(unsigned hi, unsigned k) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> cur(k, 1);
    if (hi < 1 || k < 1) return out;
    while (true) {
        out.push_back(cur);
        std::size_t pos = k;
        while (pos > 0) {
            --pos;
            if (cur[pos] < hi) {
                ++cur[pos];
                for (std::size_t q = pos + 1; q < k; ++q) cur[q] = cur[pos];
                break;
            }
            if (pos == 0) return out;
        }
    }
}

struct TypeAttempt {
    bool value = false;
    bool skipped = false; // over budget
    std::optional<StrengthCertificate> certificate;
};

// Decision for one all-ones type via plane containment: f = sum of k
// products with linear first factors iff V(f) contains a codimension-k
// linear space.
inline TypeAttempt decide_all_ones(const HomogeneousPolynomial& f, unsigned k,
                                   const DecideOptions& opts) {
    TypeAttempt out;
    const std::size_t nv = f.num_vars();
    const long long n = static_cast<long long>(nv) - 1;
    if (static_cast<long long>(k) >= n + 1) {
        out.value = true;
        out.certificate = variable_split_certificate(f);
        return out;
    }
    const long long m = n - static_cast<long long>(k);
    const std::size_t nunk = (nv - (static_cast<std::size_t>(m) + 1)) *
                             (static_cast<std::size_t>(m) + 1);
    if (nunk > opts.unknown_budget) {
        out.skipped = true;
        return out;
    }
    const auto charts = subsets_lex(nv, static_cast<std::size_t>(m) + 1);
    for (const auto& chart : charts) {
        const std::vector<Poly> sys = fano_system(f, chart);
        if (!solvable_over_closure(sys)) continue;
        out.value = true;
        if (!out.certificate) {
            if (auto sol = small_solution(sys, nunk)) {
                out.certificate =
                    certificate_from_forms(f, plane_cut_forms(nv, chart, *sol));
            }
        }
        if (out.certificate) break;
    }
    return out;
}

// Decision for a general type: unknown coefficients on both sides of every
// pair, leading-coefficient charts on the low side, solvability over the
// closure; the witness pass grids the low side and solves the high side
// linearly through the membership oracle.
inline TypeAttempt decide_general_type(const HomogeneousPolynomial& f,
                                       const std::vector<unsigned>& type,
                                       const DecideOptions& opts) {
    TypeAttempt out;
    const std::size_t nv = f.num_vars();
    const unsigned d = f.degree();
    const std::size_t k = type.size();
    std::vector<std::vector<Exp>> bi(k), bj(k);
    for (std::size_t h = 0; h < k; ++h) {
        bi[h] = monomial_basis(nv, type[h]);
        bj[h] = monomial_basis(nv, d - type[h]);
    }

    // Chart odometer over leading positions, lexicographic.
    std::vector<std::size_t> lead(k, 0);
    auto advance = [&]() {
        std::size_t h = k;
        while (h > 0) {
            --h;
            if (++lead[h] < bi[h].size()) return true;
            lead[h] = 0;
        }
        return false;
    };

    struct Chart {
        std::vector<std::size_t> lead;
        std::size_t nunk;
    };
    std::vector<Chart> charts;
    bool any_within_budget = false;
    do {
        std::size_t nunk = 0;
        for (std::size_t h = 0; h < k; ++h) {
            nunk += (bi[h].size() - lead[h] - 1) + bj[h].size();
        }
        if (nunk <= opts.unknown_budget) {
            charts.push_back({lead, nunk});
            any_within_budget = true;
        }
    } while (advance());
    if (!any_within_budget) {
        out.skipped = true;
        return out;
    }

    // Witness pass first: cheap, bounded, and it settles solvable charts
    // without a Groebner run.
    for (const Chart& chart : charts) {
        std::size_t ffree_total = 0;
        for (std::size_t h = 0; h < k; ++h) ffree_total += bi[h].size() - chart.lead[h] - 1;
        const std::vector<FieldElement> values = witness_grid_values(ffree_total);
        if (values.empty() && ffree_total > 0) continue;
        std::vector<std::size_t> idx(ffree_total, 0);
        while (true) {
            std::vector<HomogeneousPolynomial> lows;
            std::size_t off = 0;
            for (std::size_t h = 0; h < k; ++h) {
                Poly p(nv);
                p.add_term(bi[h][chart.lead[h]], FieldElement(1));
                for (std::size_t a = chart.lead[h] + 1; a < bi[h].size(); ++a) {
                    p.add_term(bi[h][a], values[idx[off + a - chart.lead[h] - 1]]);
                }
                off += bi[h].size() - chart.lead[h] - 1;
                lows.emplace_back(std::move(p), type[h]);
            }
            const MembershipWitness w = membership_by_linear_algebra(f, lows);
            if (w.member) {
                std::vector<std::pair<HomogeneousPolynomial, HomogeneousPolynomial>> pairs;
                for (std::size_t h = 0; h < k; ++h) {
                    if ((*w.cofactors)[h].is_zero()) continue;
                    pairs.emplace_back(lows[h], (*w.cofactors)[h]);
                }
                if (!pairs.empty()) {
                    out.value = true;
                    out.certificate = make_certificate(f, std::move(pairs));
                    return out;
                }
            }
            std::size_t v = ffree_total;
            bool done = true;
            while (v > 0) {
                --v;
                if (++idx[v] < values.size()) {
                    done = false;
                    break;
                }
                idx[v] = 0;
            }
            if (done) break;
        }
    }

    // Solvability pass: exact decision per chart over the closure.
    for (const Chart& chart : charts) {
        std::vector<std::pair<unsigned, SymbolicForm>> fs, gs;
        std::size_t next = 0;
        for (std::size_t h = 0; h < k; ++h) {
            SymbolicForm fc(bi[h].size(), Poly(chart.nunk));
            for (std::size_t a = chart.lead[h]; a < bi[h].size(); ++a) {
                fc[a] = (a == chart.lead[h]) ? Poly::constant(chart.nunk, FieldElement(1))
                                             : Poly::variable(chart.nunk, next++);
            }
            fs.emplace_back(type[h], std::move(fc));
        }
        for (std::size_t h = 0; h < k; ++h) {
            SymbolicForm gc(bj[h].size(), Poly(chart.nunk));
            for (std::size_t b = 0; b < bj[h].size(); ++b) {
                gc[b] = Poly::variable(chart.nunk, next++);
            }
            gs.emplace_back(d - type[h], std::move(gc));
        }
        const std::vector<Poly> eqs = product_match_equations(f, fs, gs, chart.nunk);
        if (solvable_over_closure(eqs)) {
            out.value = true;
            return out;
        }
    }
    return out;
}

} // namespace detail

/*
 * Decides strength <= k, optionally restricted to one decomposition type.
 * Types are normalized to their smaller split side; with the type omitted,
 * all nondecreasing k-tuples over [1, floor(d/2)] are tried. All-ones
 * types reduce to plane containment; other types run the coefficientwise
 * bilinear systems under leading-coefficient charts. A type whose systems
 * would exceed the unknown budget is skipped; if nothing affirms and some
 * type was skipped, BudgetExceeded is thrown (unknown, distinct from
 * false).
 */
inline DecideResult decide_strength_leq(const HomogeneousPolynomial& f, unsigned k,
                                        const std::optional<std::vector<unsigned>>& type_vector =
                                            std::nullopt,
                                        const DecideOptions& opts = {}) {
    if (f.is_zero()) throw ZeroSectionError("decide_strength_leq: zero section");
    if (k < 1) throw std::invalid_argument("decide_strength_leq: k must be positive");
    const unsigned d = f.degree();
    if (d < 2) return {};

    std::vector<std::vector<unsigned>> types;
    if (type_vector) {
        if (type_vector->size() != k) {
            throw std::invalid_argument("decide_strength_leq: type vector length != k");
        }
        std::vector<unsigned> t;
        for (unsigned i : *type_vector) {
            if (i < 1 || i >= d) {
                throw std::invalid_argument("decide_strength_leq: type entry outside [1, d-1]");
            }
            t.push_back(std::min(i, d - i));
        }
        std::sort(t.begin(), t.end());
        types.push_back(std::move(t));
    } else {
        types = detail::nondecreasing_tuples(d / 2, k);
    }

    bool any_skipped = false;
    for (const auto& type : types) {
        const bool all_ones = std::all_of(type.begin(), type.end(),
                                          [](unsigned i) { return i == 1; });
        detail::TypeAttempt attempt =
            all_ones ? detail::decide_all_ones(f, k, opts)
                     : detail::decide_general_type(f, type, opts);
        if (attempt.value) return {true, std::move(attempt.certificate)};
        if (attempt.skipped) any_skipped = true;
    }
    if (any_skipped) {
        throw BudgetExceeded("decide_strength_leq: size budget exceeded before a decision");
    }
    return {};
}

/*
 * Quadratic form over the real subfield, carried by its symmetric Gram
 * matrix; rank and signature are read off an exact rational congruence
 * diagonalization fixed at construction.
 */
class QuadraticForm {
public:
    explicit QuadraticForm(std::vector<std::vector<Rational>> gram) : gram_(std::move(gram)) {
        const std::size_t n = gram_.size();
        for (const auto& row : gram_) {
            if (row.size() != n) throw std::invalid_argument("QuadraticForm: not square");
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (gram_[i][j] != gram_[j][i]) {
                    throw std::invalid_argument("QuadraticForm: not symmetric");
                }
            }
        }
        diag_ = diagonalize_symmetric(gram_);
        for (const Rational& dv : diag_.diag) {
            if (dv > 0) ++p_;
            if (dv < 0) ++q_;
        }
    }

    // Gram matrix of a degree-2 form with real coefficients.
    static QuadraticForm from_form(const HomogeneousPolynomial& f) {
        if (f.degree() != 2) throw std::invalid_argument("QuadraticForm: degree must be 2");
        const std::size_t n = f.num_vars();
        std::vector<std::vector<Rational>> g(n, std::vector<Rational>(n, Rational(0)));
        for (const auto& [e, c] : f.terms()) {
            if (!c.is_real()) {
                throw std::invalid_argument("QuadraticForm: form has nonreal coefficients");
            }
            std::vector<std::size_t> vars;
            for (std::size_t v = 0; v < n; ++v) {
                for (unsigned t = 0; t < e[v]; ++t) vars.push_back(v);
            }
            if (vars[0] == vars[1]) {
                g[vars[0]][vars[0]] = c.real_part();
            } else {
                g[vars[0]][vars[1]] = c.real_part() / 2;
                g[vars[1]][vars[0]] = c.real_part() / 2;
            }
        }
        return QuadraticForm(std::move(g));
    }

    std::size_t size() const { return gram_.size(); }
    const std::vector<std::vector<Rational>>& gram() const { return gram_; }
    const SymmetricDiagonalization& diagonalization() const { return diag_; }
    unsigned rank() const { return p_ + q_; }
    unsigned positives() const { return p_; }
    unsigned negatives() const { return q_; }
    bool is_zero() const { return rank() == 0; }

    HomogeneousPolynomial to_form() const {
        const std::size_t n = gram_.size();
        Poly p(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i; j < n; ++j) {
                const Rational c = (i == j) ? gram_[i][j] : gram_[i][j] * 2;
                if (c.is_zero()) continue;
                Exp e(n, 0);
                e[i] += 1;
                e[j] += 1;
                p.add_term(std::move(e), FieldElement(c));
            }
        }
        return HomogeneousPolynomial(std::move(p), 2);
    }

private:
    std::vector<std::vector<Rational>> gram_;
    SymmetricDiagonalization diag_;
    unsigned p_ = 0, q_ = 0;
};

// Complex strength of a quadratic: ceil(rank / 2).
inline unsigned quadratic_strength(const QuadraticForm& q) {
    if (q.is_zero()) throw ZeroSectionError("quadratic_strength: zero form");
    return (q.rank() + 1) / 2;
}

struct RealStrengthBounds {
    unsigned lower = 0;
    unsigned upper = 0;
    // Real certificate built from the diagonalization: hyperbolic pairings
    // where the discriminant allows a rational split, squares elsewhere.
    StrengthCertificate certificate;
    unsigned achieved_length = 0;
    bool upper_achieved = false;   // achieved_length == upper
    // Whether q = l * m is solvable with real linear forms: rank <= 1 or
    // signature (1,1). A definite rank-2 form (the x^2 + y^2 pattern) fails.
    bool one_term_real_possible = false;
};

namespace detail {

inline bool rational_is_square(const Rational& r, Rational& root) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    using boost::multiprecision::sqrt;
    if (r < 0) return false;
    const Integer num = numerator(r), den = denominator(r);
    const Integer sn = sqrt(num), sd = sqrt(den);
    if (sn * sn != num || sd * sd != den) return false;
    root = Rational(sn, sd);
    return true;
}

} // namespace detail

/*
 * Real strength bounds of a quadratic: ceil(r/2) from the closure value,
 * max(p, q) from the hyperbolic-pairing construction over the reals. The
 * attached certificate is rational, hence may need more than max(p, q)
 * terms: a pairing d*l^2 - e*m^2 splits rationally only when d*e is a
 * square. The achieved length is reported alongside the true bound.
 */
inline RealStrengthBounds quadratic_real_strength_bounds(const QuadraticForm& q) {
    if (q.is_zero()) throw ZeroSectionError("quadratic_real_strength_bounds: zero form");
    const SymmetricDiagonalization& diag = q.diagonalization();
    const std::size_t n = q.size();

    auto linear_form = [&](std::size_t k, const Rational& scale) {
        Poly p(n);
        for (std::size_t j = 0; j < n; ++j) {
            if (diag.forms[k][j].is_zero()) continue;
            Exp e(n, 0);
            e[j] = 1;
            p.add_term(std::move(e), FieldElement(diag.forms[k][j] * scale));
        }
        return HomogeneousPolynomial(std::move(p), 1);
    };

    std::vector<std::size_t> pos, neg;
    for (std::size_t k = 0; k < n; ++k) {
        if (diag.diag[k] > 0) pos.push_back(k);
        if (diag.diag[k] < 0) neg.push_back(k);
    }

    std::vector<std::pair<HomogeneousPolynomial, HomogeneousPolynomial>> pairs;
    std::vector<bool> neg_used(neg.size(), false);
    std::vector<bool> pos_paired(pos.size(), false);
    for (std::size_t a = 0; a < pos.size(); ++a) {
        const Rational dp = diag.diag[pos[a]];
        for (std::size_t b = 0; b < neg.size(); ++b) {
            if (neg_used[b]) continue;
            const Rational e = -diag.diag[neg[b]];
            Rational root;
            if (!detail::rational_is_square(e / dp, root)) continue;
            // dp*l^2 - e*m^2 = (l - root*m) * dp*(l + root*m)
            HomogeneousPolynomial l = linear_form(pos[a], Rational(1));
            HomogeneousPolynomial ms = linear_form(neg[b], root);
            pairs.emplace_back(l - ms, (l + ms).scaled(FieldElement(dp)));
            neg_used[b] = true;
            pos_paired[a] = true;
            break;
        }
    }
    for (std::size_t a = 0; a < pos.size(); ++a) {
        if (pos_paired[a]) continue;
        pairs.emplace_back(linear_form(pos[a], Rational(1)),
                           linear_form(pos[a], diag.diag[pos[a]]));
    }
    for (std::size_t b = 0; b < neg.size(); ++b) {
        if (neg_used[b]) continue;
        pairs.emplace_back(linear_form(neg[b], Rational(1)),
                           linear_form(neg[b], diag.diag[neg[b]]));
    }

    StrengthCertificate cert = make_certificate(q.to_form(), std::move(pairs));
    const unsigned achieved = static_cast<unsigned>(cert.pairs.size());
    const unsigned upper = std::max(q.positives(), q.negatives());
    RealStrengthBounds out{
        quadratic_strength(q),
        upper,
        std::move(cert),
        achieved,
        achieved == upper,
        q.rank() <= 1 || (q.rank() == 2 && q.positives() == 1 && q.negatives() == 1)};
    if (!verify_certificate(out.certificate)) {
        throw std::logic_error("quadratic_real_strength_bounds: certificate failed to verify");
    }
    return out;
}

struct D14Options {
    long long height_bound = 50;
};

namespace detail {

struct IntegerTermList {
    std::vector<std::pair<Exp, Integer>> re, im;
    unsigned degree = 0;
};

// Clears denominators so curve points can be tested in pure integer
// arithmetic; scaling does not change the zero set.
inline IntegerTermList integer_terms(const HomogeneousPolynomial& f) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::gcd;
    using boost::multiprecision::numerator;
    Integer l = 1;
    for (const auto& [e, c] : f.terms()) {
        for (const Integer& d : {Integer(denominator(c.real_part())),
                                 Integer(denominator(c.imag_part()))}) {
            l = l / gcd(l, d) * d;
        }
    }
    IntegerTermList out;
    out.degree = f.degree();
    for (const auto& [e, c] : f.terms()) {
        const Rational re = c.real_part() * l, im = c.imag_part() * l;
        if (!re.is_zero()) out.re.emplace_back(e, Integer(numerator(re)));
        if (!im.is_zero()) out.im.emplace_back(e, Integer(numerator(im)));
    }
    return out;
}

inline bool vanishes_at_integer_point(const IntegerTermList& f, long long x0, long long x1,
                                      long long x2) {
    const long long coords[3] = {x0, x1, x2};
    std::vector<std::vector<Integer>> pw(3, std::vector<Integer>(f.degree + 1));
    for (int v = 0; v < 3; ++v) {
        pw[v][0] = 1;
        for (unsigned k = 1; k <= f.degree; ++k) pw[v][k] = pw[v][k - 1] * coords[v];
    }
    auto eval = [&](const std::vector<std::pair<Exp, Integer>>& terms) {
        Integer acc = 0;
        for (const auto& [e, c] : terms) acc += c * pw[0][e[0]] * pw[1][e[1]] * pw[2][e[2]];
        return acc;
    };
    return eval(f.re).is_zero() && eval(f.im).is_zero();
}

} // namespace detail

/*
 * Plane-curve slicing through a point: choose a rational point p on the
 * curve (searched by increasing height unless supplied), take the two
 * independent linear forms vanishing at p, and split f through membership
 * cofactors: f(p) = 0 forces f into the ideal of those forms in every
 * degree. The certificate has at most two linear slices.
 */
inline StrengthCertificate d14_decompose(
    const HomogeneousPolynomial& f,
    const std::optional<std::vector<FieldElement>>& point = std::nullopt,
    const D14Options& opts = {}) {
    if (f.is_zero()) throw ZeroSectionError("d14_decompose: zero section");
    if (f.num_vars() != 3) {
        throw std::invalid_argument("d14_decompose: expects a plane curve (3 variables)");
    }
    if (f.degree() < 2) throw std::invalid_argument("d14_decompose: degree must be >= 2");

    std::vector<FieldElement> p;
    if (point) {
        p = *point;
        if (p.size() != 3) throw std::invalid_argument("d14_decompose: point needs 3 coordinates");
        bool all_zero = true;
        for (const auto& c : p) {
            if (!c.is_zero()) all_zero = false;
        }
        if (all_zero) throw std::invalid_argument("d14_decompose: zero vector is not a point");
        if (!f.evaluate(p).is_zero()) {
            throw std::invalid_argument("d14_decompose: supplied point is not on the curve");
        }
    } else {
        const detail::IntegerTermList terms = detail::integer_terms(f);
        bool found = false;
        for (long long h = 1; h <= opts.height_bound && !found; ++h) {
            for (long long a = -h; a <= h && !found; ++a) {
                for (long long b = -h; b <= h && !found; ++b) {
                    for (long long c = -h; c <= h && !found; ++c) {
                        if (std::max({std::abs(a), std::abs(b), std::abs(c)}) != h) continue;
                        const long long g =
                            std::gcd(std::gcd(std::abs(a), std::abs(b)), std::abs(c));
                        if (g != 1) continue;
                        const long long first = (a != 0) ? a : (b != 0) ? b : c;
                        if (first < 0) continue;
                        if (!detail::vanishes_at_integer_point(terms, a, b, c)) continue;
                        p = {FieldElement(Integer(a)), FieldElement(Integer(b)),
                             FieldElement(Integer(c))};
                        found = true;
                    }
                }
            }
        }
        if (!found) {
            throw NoRationalPoint("no rational point of height <= " +
                                  std::to_string(opts.height_bound) + " on the curve");
        }
    }

    Matrix row(1, 3);
    for (std::size_t j = 0; j < 3; ++j) row.at(0, j) = p[j];
    std::vector<HomogeneousPolynomial> forms;
    for (const std::vector<FieldElement>& v : kernel_basis(row)) {
        Poly l(3);
        for (std::size_t j = 0; j < 3; ++j) {
            if (v[j].is_zero()) continue;
            Exp e(3, 0);
            e[j] = 1;
            l.add_term(std::move(e), v[j]);
        }
        forms.emplace_back(std::move(l), 1);
    }

    const MembershipWitness w = graded_membership(f, forms);
    if (!w.member) {
        throw std::logic_error("d14_decompose: point on curve but membership failed");
    }
    std::vector<std::pair<HomogeneousPolynomial, HomogeneousPolynomial>> pairs;
    for (std::size_t j = 0; j < forms.size(); ++j) {
        if ((*w.cofactors)[j].is_zero()) continue;
        pairs.emplace_back(forms[j], (*w.cofactors)[j]);
    }
    return make_certificate(f, std::move(pairs));
}

namespace detail {

inline HomogeneousPolynomial coefficientwise_real(const HomogeneousPolynomial& f) {
    Poly out(f.num_vars());
    for (const auto& [e, c] : f.terms()) out.add_term(e, FieldElement(c.real_part()));
    return HomogeneousPolynomial(std::move(out), f.degree());
}

inline HomogeneousPolynomial coefficientwise_imag(const HomogeneousPolynomial& f) {
    Poly out(f.num_vars());
    for (const auto& [e, c] : f.terms()) out.add_term(e, FieldElement(c.imag_part()));
    return HomogeneousPolynomial(std::move(out), f.degree());
}

} // namespace detail

/*
 * Realification: a complex certificate of a real target converts to a real
 * one via Re(fg) = Re(f)Re(g) - Im(f)Im(g), at most doubling the length.
 * Pairs with an identically zero factor are dropped.
 */
inline StrengthCertificate realify(const StrengthCertificate& cert) {
    for (const auto& [e, c] : cert.target.terms()) {
        if (!c.is_real()) throw NotRealTarget("realify: target has nonreal coefficients");
    }
    std::vector<std::pair<HomogeneousPolynomial, HomogeneousPolynomial>> pairs;
    for (const auto& [a, b] : cert.pairs) {
        const HomogeneousPolynomial ra = detail::coefficientwise_real(a);
        const HomogeneousPolynomial ia = detail::coefficientwise_imag(a);
        const HomogeneousPolynomial rb = detail::coefficientwise_real(b);
        const HomogeneousPolynomial ib = detail::coefficientwise_imag(b);
        if (!ra.is_zero() && !rb.is_zero()) pairs.emplace_back(ra, rb);
        if (!ia.is_zero() && !ib.is_zero()) pairs.emplace_back(ia, -ib);
    }
    StrengthCertificate out = make_certificate(cert.target, std::move(pairs));
    if (!verify_certificate(out)) {
        throw std::logic_error("realify: realified certificate failed to verify");
    }
    return out;
}

} // namespace strengthlab

#endif // STRENGTHLAB_STRENGTH_HPP

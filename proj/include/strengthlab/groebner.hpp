#ifndef STRENGTHLAB_GROEBNER_HPP
#define STRENGTHLAB_GROEBNER_HPP

#include "strengthlab/poly.hpp"

#include <cstddef>
#include <set>
#include <utility>
#include <vector>

namespace strengthlab {

// Remainder and quotients of the multivariate division f = sum q_k b_k + r.
struct NormalFormResult {
    Poly remainder;
    std::vector<Poly> quotients;
};

/*
 * Full division of f by an ordered list of polynomials under the global
 * order. Divisors are tried first-match in list order, so the result is
 * deterministic for a fixed basis; no term of the remainder is divisible
 * by any divisor's leading monomial.
 */
inline NormalFormResult normal_form(const Poly& f, const std::vector<Poly>& basis) {
    const std::size_t nv = f.num_vars();
    NormalFormResult out{Poly(nv), std::vector<Poly>(basis.size(), Poly(nv))};
    Poly w = f;
    while (!w.is_zero()) {
        const auto& [le, lc] = w.leading();
        bool reduced = false;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (basis[k].is_zero()) continue;
            const auto& [be, bc] = basis[k].leading();
            if (!exp_divides(be, le)) continue;
            const FieldElement q = lc / bc;
            const Exp shift = exp_sub(le, be);
            Poly qmono = Poly::monomial(nv, shift, q);
            out.quotients[k] += qmono;
            w -= qmono * basis[k];
            reduced = true;
            break;
        }
        if (!reduced) {
            out.remainder.add_term(le, lc);
            Poly lead = Poly::monomial(nv, le, lc);
            w -= lead;
        }
    }
    return out;
}

/*
 * Reduced Groebner basis under the global grlex order, with an explicit
 * representation of every basis element over the original generators:
 *   elements[k] = sum_j reps[k][j] * gens[j].
 * Elements are monic, mutually reduced, and sorted by descending leading
 * monomial, so the basis is canonical for the ideal.
 */
struct GroebnerBasis {
    std::vector<Poly> elements;
    std::vector<std::vector<Poly>> reps;

    bool contains_unit() const {
        return elements.size() == 1 && !elements[0].is_zero() &&
               total_degree(elements[0].leading().first) == 0;
    }
};

namespace detail {

struct TrackedPoly {
    Poly p;
    std::vector<Poly> rep;
};

// Normal form against tracked divisors, with the remainder's representation
// maintained: rem = f - sum q_k b_k, rep(rem) = rep(f) - sum q_k rep(b_k).
inline TrackedPoly tracked_reduce(TrackedPoly f, const std::vector<TrackedPoly>& basis) {
    std::vector<Poly> bare;
    bare.reserve(basis.size());
    for (const auto& b : basis) bare.push_back(b.p);
    NormalFormResult nf = normal_form(f.p, bare);
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (nf.quotients[k].is_zero()) continue;
        for (std::size_t j = 0; j < f.rep.size(); ++j) {
            f.rep[j] -= nf.quotients[k] * basis[k].rep[j];
        }
    }
    f.p = std::move(nf.remainder);
    return f;
}

} // namespace detail

/*
 * Buchberger's algorithm, normal pair-selection strategy (smallest lcm in
 * the global order), with both classical skip criteria: coprime leading
 * monomials, and the chain criterion against already-treated pairs. Desk
 * scale only; determinism is valued over speed, so no F4-style batching.
 *
 * When the ideal contains a unit the computation stops early and returns
 * the basis {1}: every solvability query needs exactly that bit.
 */
inline GroebnerBasis groebner(const std::vector<Poly>& gens) {
    const std::size_t ngens = gens.size();
    std::size_t nv = 0;
    for (const auto& g : gens) nv = g.num_vars();

    std::vector<detail::TrackedPoly> basis;
    for (std::size_t j = 0; j < ngens; ++j) {
        if (gens[j].is_zero()) continue;
        detail::TrackedPoly t{gens[j], std::vector<Poly>(ngens, Poly(nv))};
        t.rep[j] = Poly::constant(nv, FieldElement(1));
        basis.push_back(std::move(t));
    }

    auto unit_basis = [&](detail::TrackedPoly unit) {
        const FieldElement inv = FieldElement(1) / unit.p.leading().second;
        GroebnerBasis out;
        out.elements.push_back(unit.p.scaled(inv));
        std::vector<Poly> rep;
        for (auto& r : unit.rep) rep.push_back(r.scaled(inv));
        out.reps.push_back(std::move(rep));
        return out;
    };
    for (const auto& b : basis) {
        if (total_degree(b.p.leading().first) == 0) return unit_basis(b);
    }

    struct Pair {
        std::size_t i, j;
        Exp lcm;
    };
    std::vector<Pair> pending;
    std::set<std::pair<std::size_t, std::size_t>> pending_keys;
    auto push_pair = [&](std::size_t i, std::size_t j) {
        pending.push_back({i, j, exp_lcm(basis[i].p.leading().first,
                                         basis[j].p.leading().first)});
        pending_keys.insert({i, j});
    };
    for (std::size_t j = 1; j < basis.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) push_pair(i, j);
    }

    const GrlexGreater greater;
    while (!pending.empty()) {
        std::size_t sel = 0;
        for (std::size_t k = 1; k < pending.size(); ++k) {
            if (greater(pending[sel].lcm, pending[k].lcm)) sel = k;
        }
        Pair pr = pending[sel];
        pending[sel] = pending.back();
        pending.pop_back();
        pending_keys.erase({pr.i, pr.j});

        const Exp& ei = basis[pr.i].p.leading().first;
        const Exp& ej = basis[pr.j].p.leading().first;
        if (pr.lcm == exp_add(ei, ej)) continue; // coprime leads
        bool chained = false;
        for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!exp_divides(basis[k].p.leading().first, pr.lcm)) continue;
            auto key = [](std::size_t a, std::size_t b) {
                return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
            };
            if (pending_keys.count(key(pr.i, k)) == 0 &&
                pending_keys.count(key(pr.j, k)) == 0) {
                chained = true;
            }
        }
        if (chained) continue;

        detail::TrackedPoly s{Poly(nv), std::vector<Poly>(ngens, Poly(nv))};
        auto accumulate = [&](const detail::TrackedPoly& g, const Exp& lead,
                              const FieldElement& sign) {
            const FieldElement c = sign / g.p.leading().second;
            Poly mono = Poly::monomial(nv, exp_sub(pr.lcm, lead), c);
            s.p += mono * g.p;
            for (std::size_t j2 = 0; j2 < ngens; ++j2) s.rep[j2] += mono * g.rep[j2];
        };
        accumulate(basis[pr.i], ei, FieldElement(1));
        accumulate(basis[pr.j], ej, FieldElement(-1));

        detail::TrackedPoly r = detail::tracked_reduce(std::move(s), basis);
        if (r.p.is_zero()) continue;
        if (total_degree(r.p.leading().first) == 0) return unit_basis(std::move(r));
        basis.push_back(std::move(r));
        for (std::size_t i = 0; i + 1 < basis.size(); ++i) push_pair(i, basis.size() - 1);
    }

    // Minimalize: drop elements whose leading monomial another one divides.
    std::vector<bool> keep(basis.size(), true);
    for (std::size_t a = 0; a < basis.size(); ++a) {
        if (!keep[a]) continue;
        for (std::size_t b = 0; b < basis.size(); ++b) {
            if (a == b || !keep[a]) continue;
            if (!keep[b]) continue;
            if (exp_divides(basis[b].p.leading().first, basis[a].p.leading().first) &&
                !(basis[a].p.leading().first == basis[b].p.leading().first && b > a)) {
                keep[a] = false;
            }
        }
    }
    std::vector<detail::TrackedPoly> minimal;
    for (std::size_t a = 0; a < basis.size(); ++a) {
        if (keep[a]) minimal.push_back(std::move(basis[a]));
    }

    // Tail-reduce each element against the others; leading monomials are
    // pairwise non-divisible at this point, so one pass reaches the reduced
    // basis. Then scale monic and sort for canonical output.
    for (std::size_t a = 0; a < minimal.size(); ++a) {
        std::vector<detail::TrackedPoly> others;
        for (std::size_t b = 0; b < minimal.size(); ++b) {
            if (b != a) others.push_back(minimal[b]);
        }
        minimal[a] = detail::tracked_reduce(std::move(minimal[a]), others);
    }
    for (auto& t : minimal) {
        const FieldElement inv = FieldElement(1) / t.p.leading().second;
        t.p = t.p.scaled(inv);
        for (auto& r : t.rep) r = r.scaled(inv);
    }
    std::sort(minimal.begin(), minimal.end(),
              [&](const detail::TrackedPoly& a, const detail::TrackedPoly& b) {
                  return greater(a.p.leading().first, b.p.leading().first);
              });

    GroebnerBasis out;
    for (auto& t : minimal) {
        out.elements.push_back(std::move(t.p));
        out.reps.push_back(std::move(t.rep));
    }
    return out;
}

/*
 * Weak Nullstellensatz test on an affine system: a common zero exists over
 * the algebraic closure iff the reduced Groebner basis is not {1}. The
 * verdict is stable under enlarging Q(i) to the closure, so deciding over
 * Q(i) is exact.
 */
inline bool solvable_over_closure(const std::vector<Poly>& system) {
    bool all_zero = true;
    for (const auto& p : system) {
        if (!p.is_zero()) all_zero = false;
    }
    if (all_zero) return true;
    return !groebner(system).contains_unit();
}

} // namespace strengthlab

#endif // STRENGTHLAB_GROEBNER_HPP

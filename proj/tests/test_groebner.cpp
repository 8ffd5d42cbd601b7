#include <catch2/catch_amalgamated.hpp>

#include "strengthlab/groebner.hpp"
#include "strengthlab/numeric.hpp"
#include "strengthlab/parse.hpp"

using namespace strengthlab;

namespace {

Poly pp(const std::string& text, std::size_t nv) { return parse_poly(text, nv).poly(); }

// S-polynomial of two nonzero polynomials, as in the completion loop.
Poly s_poly(const Poly& a, const Poly& b) {
    const auto& [ea, ca] = a.leading();
    const auto& [eb, cb] = b.leading();
    const Exp l = exp_lcm(ea, eb);
    const Poly ma = Poly::monomial(a.num_vars(), exp_sub(l, ea), FieldElement(1) / ca);
    const Poly mb = Poly::monomial(b.num_vars(), exp_sub(l, eb), FieldElement(1) / cb);
    return ma * a - mb * b;
}

} // namespace

TEST_CASE("normal form is a division with certificate") {
    const Poly f = pp("x0^2*x1 + x0*x1^2", 2) + pp("x1^2", 2);
    const std::vector<Poly> basis = {pp("x0*x1 - x1^2", 2), pp("x1^2 - x0^2", 2)};
    const NormalFormResult nf = normal_form(f, basis);
    // Remainder is in normal form: no term divisible by a basis lead.
    for (const auto& [e, c] : nf.remainder.terms()) {
        for (const Poly& b : basis) {
            REQUIRE_FALSE(exp_divides(b.leading().first, e));
        }
    }
    // f = sum q_k b_k + r exactly.
    Poly acc = nf.remainder;
    for (std::size_t k = 0; k < basis.size(); ++k) acc += nf.quotients[k] * basis[k];
    REQUIRE(acc == f);
}

TEST_CASE("a classical basis completion adds the expected element") {
    const std::vector<Poly> gens = {pp("x0^2", 2), pp("x0*x1 + x1^2", 2)};
    const GroebnerBasis gb = groebner(gens);
    REQUIRE_FALSE(gb.contains_unit());
    // x1^3 = x1*(x0*x1 + x1^2) - x0*(x0*x1 + x1^2) + x1*x0^2 lies in the
    // ideal and its lead is divisible by no generator lead, so the
    // completed basis must cover it.
    const Poly target = pp("x1^3", 2);
    REQUIRE(normal_form(target, gb.elements).remainder.is_zero());
    bool covered = false;
    for (const Poly& g : gb.elements) {
        if (exp_divides(g.leading().first, target.leading().first)) covered = true;
    }
    REQUIRE(covered);
}

TEST_CASE("groebner output is reduced, monic, and sorted") {
    const GroebnerBasis gb =
        groebner({pp("x0^2 - x1^2", 3), pp("x1^2 - x2^2", 3), pp("x0*x1*x2", 3)});
    const GrlexGreater gt;
    for (std::size_t k = 0; k < gb.elements.size(); ++k) {
        const auto& [lead, lc] = gb.elements[k].leading();
        REQUIRE(lc.is_one());
        if (k > 0) REQUIRE(gt(gb.elements[k - 1].leading().first, lead));
        // No term of any element is divisible by another element's lead.
        for (std::size_t j = 0; j < gb.elements.size(); ++j) {
            if (j == k) continue;
            for (const auto& [e, c] : gb.elements[k].terms()) {
                REQUIRE_FALSE(exp_divides(gb.elements[j].leading().first, e));
            }
        }
    }
}

TEST_CASE("representations expand to the basis elements") {
    const std::vector<Poly> gens = {pp("x0^2", 2), pp("x0*x1 + x1^2", 2)};
    const GroebnerBasis gb = groebner(gens);
    REQUIRE(gb.reps.size() == gb.elements.size());
    for (std::size_t k = 0; k < gb.elements.size(); ++k) {
        Poly acc(2);
        for (std::size_t j = 0; j < gens.size(); ++j) acc += gb.reps[k][j] * gens[j];
        REQUIRE(acc == gb.elements[k]);
    }
}

TEST_CASE("every S-polynomial of the completed basis reduces to zero") {
    Rng rng(8);
    for (int t = 0; t < 25; ++t) {
        std::vector<Poly> gens;
        const std::size_t ngens = 2 + static_cast<std::size_t>(rng.uniform_int(0, 1));
        for (std::size_t g = 0; g < ngens; ++g) {
            Poly p(3);
            for (const Exp& e : monomial_basis(3, 2)) {
                if (rng.uniform_int(0, 2) == 0) {
                    p.add_term(e, FieldElement(rng.uniform_int(-2, 2)));
                }
            }
            if (!p.is_zero()) gens.push_back(std::move(p));
        }
        if (gens.empty()) continue;
        const GroebnerBasis gb = groebner(gens);
        if (gb.contains_unit()) continue;
        for (std::size_t a = 0; a < gb.elements.size(); ++a) {
            for (std::size_t b = a + 1; b < gb.elements.size(); ++b) {
                const Poly s = s_poly(gb.elements[a], gb.elements[b]);
                REQUIRE(normal_form(s, gb.elements).remainder.is_zero());
            }
        }
        // Random ideal combinations reduce to zero as well.
        Poly comb(3);
        for (const Poly& g : gens) {
            Exp e(3, 0);
            e[static_cast<std::size_t>(rng.uniform_int(0, 2))] = 1;
            comb += Poly::monomial(3, e, FieldElement(rng.uniform_int(-2, 2))) * g;
        }
        REQUIRE(normal_form(comb, gb.elements).remainder.is_zero());
    }
}

namespace {

// Inhomogeneous polynomial from (exponent, coefficient) pairs; the parser
// only accepts forms, so affine test inputs are assembled directly.
Poly affine(std::size_t nv, const std::vector<std::pair<Exp, long long>>& terms) {
    Poly p(nv);
    for (const auto& [e, c] : terms) p.add_term(e, FieldElement(c));
    return p;
}

} // namespace

TEST_CASE("unit ideals are recognized") {
    const GroebnerBasis gb =
        groebner({affine(1, {{{1}, 1}}), affine(1, {{{1}, 1}, {{0}, -1}})});
    REQUIRE(gb.contains_unit());
    REQUIRE(gb.elements.size() == 1);
}

TEST_CASE("solvability over the closure") {
    // A point on x0^2 + x1^2 exists over the closure (e.g. (1, i)).
    REQUIRE(solvable_over_closure({pp("x0^2 + x1^2", 2)}));
    REQUIRE(solvable_over_closure({})); // empty system: everything solves it
    REQUIRE(solvable_over_closure({Poly(2)}));
    REQUIRE_FALSE(solvable_over_closure(
        {pp("x0", 2), pp("x1", 2), affine(2, {{{1, 0}, 1}, {{0, 0}, 1}})}));
    // Inhomogeneous but consistent: x0^2 = 1, x0 = x1.
    REQUIRE(solvable_over_closure(
        {affine(2, {{{2, 0}, 1}, {{0, 0}, -1}}), pp("x0 - x1", 2)}));
}

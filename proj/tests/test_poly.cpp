#include <catch2/catch_amalgamated.hpp>

#include "strengthlab/numeric.hpp"
#include "strengthlab/poly.hpp"

using namespace strengthlab;

namespace {

Poly random_poly(Rng& rng, std::size_t nvars, unsigned maxdeg, int terms) {
    Poly p(nvars);
    for (int t = 0; t < terms; ++t) {
        Exp e(nvars, 0);
        unsigned budget = maxdeg;
        for (std::size_t v = 0; v < nvars; ++v) {
            const unsigned k = static_cast<unsigned>(rng.uniform_int(0, budget));
            e[v] = k;
            budget -= k;
        }
        p.add_term(std::move(e),
                   FieldElement(rng.small_rational(4), rng.small_rational(4)));
    }
    return p;
}

} // namespace

TEST_CASE("grlex order: degree first, then the earlier variable wins") {
    const GrlexGreater gt;
    const Exp x0x0 = {2, 0, 0}, x0x1 = {1, 1, 0}, x0x2 = {1, 0, 1};
    const Exp x1x1 = {0, 2, 0}, x1x2 = {0, 1, 1}, x2x2 = {0, 0, 2};
    REQUIRE(gt(x0x0, x0x1));
    REQUIRE(gt(x0x1, x0x2));
    REQUIRE(gt(x0x2, x1x1));
    REQUIRE(gt(x1x1, x1x2));
    REQUIRE(gt(x1x2, x2x2));
    REQUIRE(gt(Exp{0, 0, 3}, x0x0)); // degree dominates everything else
    REQUIRE_FALSE(gt(x0x1, x0x1));
}

TEST_CASE("monomial bases have binomial size, no repeats, descending order") {
    const GrlexGreater gt;
    for (std::size_t nv = 1; nv <= 4; ++nv) {
        for (unsigned d = 0; d <= 5; ++d) {
            const std::vector<Exp> basis = monomial_basis(nv, d);
            REQUIRE(Integer(basis.size()) == binomial(nv - 1 + d, nv - 1));
            for (std::size_t k = 0; k < basis.size(); ++k) {
                REQUIRE(total_degree(basis[k]) == d);
                if (k > 0) REQUIRE(gt(basis[k - 1], basis[k]));
            }
        }
    }
}

TEST_CASE("known products expand correctly") {
    const Poly x0 = Poly::variable(2, 0), x1 = Poly::variable(2, 1);
    const Poly diff = (x0 + x1) * (x0 - x1);
    Poly expect(2);
    expect.add_term({2, 0}, FieldElement(1));
    expect.add_term({0, 2}, FieldElement(-1));
    REQUIRE(diff == expect);

    // (x0 + i*x1)(x0 - i*x1) = x0^2 + x1^2
    const Poly gauss = (x0 + x1.scaled(FieldElement::i())) *
                       (x0 - x1.scaled(FieldElement::i()));
    Poly sum(2);
    sum.add_term({2, 0}, FieldElement(1));
    sum.add_term({0, 2}, FieldElement(1));
    REQUIRE(gauss == sum);
}

TEST_CASE("ring identities hold on random polynomials") {
    Rng rng(31337);
    for (int t = 0; t < 250; ++t) {
        const std::size_t nv = 1 + static_cast<std::size_t>(rng.uniform_int(0, 3));
        const Poly a = random_poly(rng, nv, 3, 3);
        const Poly b = random_poly(rng, nv, 3, 3);
        const Poly c = random_poly(rng, nv, 2, 3);
        REQUIRE((a + b) == (b + a));
        REQUIRE((a * b) == (b * a));
        REQUIRE(((a * b) * c) == (a * (b * c)));
        REQUIRE((a * (b + c)) == (a * b + a * c));
        REQUIRE((a - a).is_zero());
    }
}

TEST_CASE("conjugation distributes over the ring operations") {
    Rng rng(99);
    for (int t = 0; t < 100; ++t) {
        const Poly a = random_poly(rng, 3, 3, 3);
        const Poly b = random_poly(rng, 3, 3, 3);
        REQUIRE((a + b).conjugated() == a.conjugated() + b.conjugated());
        REQUIRE((a * b).conjugated() == a.conjugated() * b.conjugated());
        REQUIRE(a.conjugated().conjugated() == a);
    }
}

TEST_CASE("evaluation agrees with substitution by constants") {
    Rng rng(555);
    for (int t = 0; t < 60; ++t) {
        const Poly p = random_poly(rng, 3, 4, 4);
        std::vector<FieldElement> x;
        std::vector<Poly> consts;
        for (int v = 0; v < 3; ++v) {
            x.emplace_back(rng.small_rational(3), rng.small_rational(3));
            consts.push_back(Poly::constant(1, x.back()));
        }
        const Poly image = p.substitute(consts);
        REQUIRE(image.degree() <= 0);
        const FieldElement direct = p.evaluate(x);
        if (direct.is_zero()) {
            REQUIRE(image.is_zero());
        } else {
            REQUIRE(image == Poly::constant(1, direct));
        }
    }
}

TEST_CASE("substitution is multiplicative") {
    Rng rng(7);
    const std::vector<Poly> images = {random_poly(rng, 2, 2, 2), random_poly(rng, 2, 2, 2),
                                      random_poly(rng, 2, 2, 2)};
    for (int t = 0; t < 40; ++t) {
        const Poly a = random_poly(rng, 3, 3, 3);
        const Poly b = random_poly(rng, 3, 3, 3);
        REQUIRE((a * b).substitute(images) == a.substitute(images) * b.substitute(images));
    }
}

TEST_CASE("homogeneous wrapper validates degrees") {
    Poly mixed(2);
    mixed.add_term({2, 0}, FieldElement(1));
    mixed.add_term({1, 0}, FieldElement(1));
    REQUIRE_THROWS_AS(HomogeneousPolynomial(mixed, 2), DegreeMismatch);

    const HomogeneousPolynomial z = HomogeneousPolynomial::zero(3, 4);
    REQUIRE(z.is_zero());
    REQUIRE(z.degree() == 4);

    Poly q(2);
    q.add_term({2, 0}, FieldElement(1));
    const HomogeneousPolynomial f(q, 2);
    REQUIRE_THROWS_AS(f + HomogeneousPolynomial::zero(2, 3), DegreeMismatch);
    REQUIRE((f * f).degree() == 4);
}

TEST_CASE("coefficient vectors are linear and indexed by the monomial basis") {
    Rng rng(2024);
    for (int t = 0; t < 60; ++t) {
        Poly pa = random_poly(rng, 3, 3, 4), pb = random_poly(rng, 3, 3, 4);
        // Restrict to the degree-3 graded pieces to stay homogeneous.
        auto graded = [](const Poly& p) {
            Poly out(3);
            for (const auto& [e, c] : p.terms()) {
                if (total_degree(e) == 3) out.add_term(e, c);
            }
            return HomogeneousPolynomial(out, 3);
        };
        const HomogeneousPolynomial a = graded(pa), b = graded(pb);
        const auto va = coefficient_vector(a), vb = coefficient_vector(b),
                   vs = coefficient_vector(a + b);
        REQUIRE(va.size() == monomial_basis(3, 3).size());
        for (std::size_t k = 0; k < va.size(); ++k) REQUIRE(vs[k] == va[k] + vb[k]);
    }
}

TEST_CASE("linear changes of coordinates") {
    Poly p(2);
    p.add_term({3, 0}, FieldElement(1));
    const HomogeneousPolynomial cube(p, 3);

    SECTION("identity and swaps") {
        REQUIRE(LinearChange::identity(2).apply(cube) == cube);
        Poly q(2);
        q.add_term({0, 3}, FieldElement(1));
        REQUIRE(LinearChange::swap_vars(2, 0, 1).apply(cube) == HomogeneousPolynomial(q, 3));
    }
    SECTION("singular matrices are rejected") {
        std::vector<std::vector<FieldElement>> m = {{FieldElement(1), FieldElement(2)},
                                                    {FieldElement(2), FieldElement(4)}};
        REQUIRE_THROWS_AS(LinearChange(std::move(m)), std::invalid_argument);
    }
    SECTION("inverse undoes apply on random forms") {
        Rng rng(404);
        int done = 0;
        while (done < 30) {
            std::vector<std::vector<FieldElement>> m(3, std::vector<FieldElement>(3));
            for (auto& row : m) {
                for (auto& v : row) v = FieldElement(rng.uniform_int(-2, 2));
            }
            std::optional<LinearChange> change;
            try {
                change.emplace(std::move(m));
            } catch (const std::invalid_argument&) {
                continue; // singular draw
            }
            Poly raw(3);
            for (const Exp& e : monomial_basis(3, 2)) {
                raw.add_term(e, FieldElement(rng.uniform_int(-3, 3)));
            }
            const HomogeneousPolynomial f(raw, 2);
            REQUIRE(change->inverse().apply(change->apply(f)) == f);
            ++done;
        }
    }
}

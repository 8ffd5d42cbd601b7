// Acceptance gate: one criterion per section, one [PASS]/[FAIL] line each,
// nonzero exit if anything fails. Everything is exact arithmetic; the only
// randomness is seeded sampling, so reruns are reproducible.

#include "strengthlab/cohomology.hpp"
#include "strengthlab/ideal.hpp"
#include "strengthlab/loci.hpp"
#include "strengthlab/multmap.hpp"
#include "strengthlab/numeric.hpp"
#include "strengthlab/parse.hpp"
#include "strengthlab/strength.hpp"
#include "strengthlab/surface.hpp"

#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace strengthlab;

namespace {

int g_failures = 0;
std::vector<StrengthCertificate> g_certificates; // re-verified in criterion 10

void criterion(int number, const std::string& label, const std::function<bool(std::ostream&)>& body) {
    std::ostringstream detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail << "  unexpected exception: " << e.what() << "\n";
        ok = false;
    }
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << label
              << "\n";
    if (!ok) {
        std::cout << detail.str();
        ++g_failures;
    }
}

HomogeneousPolynomial random_form(Rng& rng, std::size_t nv, unsigned d, long long height) {
    Poly p(nv);
    for (const Exp& e : monomial_basis(nv, d)) {
        const long long c = rng.uniform_int(-height, height);
        if (c != 0) p.add_term(e, FieldElement(c));
    }
    return HomogeneousPolynomial(std::move(p), d);
}

std::vector<HomogeneousPolynomial> random_linear_space(Rng& rng, std::size_t nv, unsigned m) {
    while (true) {
        std::vector<HomogeneousPolynomial> w;
        Matrix coeffs(m, nv);
        for (unsigned r = 0; r < m; ++r) {
            const HomogeneousPolynomial f = random_form(rng, nv, 1, 10);
            if (f.is_zero()) break;
            const std::vector<FieldElement> row = coefficient_vector(f);
            for (std::size_t c = 0; c < nv; ++c) coeffs.at(r, c) = row[c];
            w.push_back(f);
        }
        if (w.size() == m && rank(coeffs) == m) return w;
    }
}

// ---- criterion bodies ---------------------------------------------------

bool koszul_formula_matches_rank(std::ostream& out) {
    Rng rng(101);
    std::size_t instances = 0, mismatches = 0, resamples = 0;
    for (unsigned n = 1; n <= 3; ++n) {
        const SpaceDescriptor pn{{n}};
        for (unsigned m = 1; m <= n + 1; ++m) {
            for (unsigned d = 2; d <= 6; ++d) {
                // Hypothesis gate through the cohomology module: the twist
                // cohomology below the top row has to vanish.
                bool vanishings = true;
                std::vector<Integer> h_values;
                for (unsigned k = 1; k <= m; ++k) {
                    const long long tw = static_cast<long long>(d) - k;
                    if (k + 1 <= m &&
                        (!h_twist(pn, {{tw}}, k).is_zero() ||
                         !h_twist(pn, {{tw - 1}}, k).is_zero())) {
                        vanishings = false;
                    }
                    if (k == m && !h_twist(pn, {{tw}}, m).is_zero()) vanishings = false;
                    h_values.push_back(h_twist(pn, {{tw}}, 0));
                }
                if (!vanishings) continue;
                const Integer formula = koszul_formula_dim(m, h_values);
                for (int sample = 0; sample < 2; ++sample) {
                    ++instances;
                    bool matched = false;
                    for (int attempt = 0; attempt <= 5; ++attempt) {
                        const auto w = random_linear_space(rng, n + 1, m);
                        const std::size_t rank_value = image_dim(build_mult_map(w, d));
                        if (Integer(rank_value) == formula) {
                            matched = true;
                            break;
                        }
                        ++resamples; // non-generic draw, logged and retried
                    }
                    if (!matched) {
                        ++mismatches;
                        out << "  mismatch at n=" << n << " m=" << m << " d=" << d << "\n";
                    }
                }
            }
        }
    }
    out << "  instances=" << instances << " resamples=" << resamples << "\n";
    return mismatches == 0 && instances >= 60;
}

bool plane_curves_slice_in_two(std::ostream& out) {
    Rng rng(202);
    std::size_t done = 0;
    while (done < 20) {
        const unsigned d = static_cast<unsigned>(rng.uniform_int(4, 6));
        Poly p(3);
        for (const Exp& e : monomial_basis(3, d)) {
            const long long c = rng.uniform_int(-5, 5);
            if (c != 0) p.add_term(e, FieldElement(c));
        }
        // Plant the rational point (a, b, 1).
        const FieldElement a(rng.uniform_int(-3, 3)), b(rng.uniform_int(-3, 3));
        Exp corner(3, 0);
        corner[2] = d;
        p.add_term(corner, FieldElement(0) - p.evaluate({a, b, FieldElement(1)}));
        const HomogeneousPolynomial f(p, d);
        if (f.is_zero()) continue;

        const StrengthCertificate cert = d14_decompose(f);
        if (!verify_certificate(cert) || cert.pairs.size() > 2) {
            out << "  bad certificate for a degree-" << d << " curve\n";
            return false;
        }
        for (unsigned t : cert.type_vector) {
            if (t != 1) {
                out << "  non-linear slice in a plane-curve certificate\n";
                return false;
            }
        }
        if (slice_rank(f).value > 2) {
            out << "  slice rank above two for a plane curve\n";
            return false;
        }
        g_certificates.push_back(cert);
        ++done;
    }
    return true;
}

bool quadratic_strength_formula(std::ostream& out) {
    Rng rng(303);
    std::size_t cases = 0;
    while (cases < 200) {
        const std::size_t n = 2 + static_cast<std::size_t>(rng.uniform_int(0, 3));
        std::vector<std::vector<Rational>> g(n, std::vector<Rational>(n, Rational(0)));
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = r; c < n; ++c) {
                const Rational v(rng.uniform_int(-2, 2));
                g[r][c] = v;
                g[c][r] = v;
            }
        }
        const QuadraticForm q(g);
        if (q.rank() == 0) continue;
        const unsigned expected = (q.rank() + 1) / 2;
        const HomogeneousPolynomial f = q.to_form();

        const DecideResult upper = decide_strength_leq(f, expected);
        if (!upper.value) {
            out << "  rank " << q.rank() << " form not confirmed at k=" << expected << "\n";
            return false;
        }
        if (upper.certificate) {
            if (!verify_certificate(*upper.certificate)) {
                out << "  unverifiable certificate at rank " << q.rank() << "\n";
                return false;
            }
            g_certificates.push_back(*upper.certificate);
        }
        if (q.rank() >= 3 && q.rank() <= 4) {
            if (decide_strength_leq(f, expected - 1).value) {
                out << "  rank " << q.rank() << " form accepted at k=" << expected - 1
                    << "\n";
                return false;
            }
        }
        ++cases;
    }
    return true;
}

bool real_example_round_trip(std::ostream& out) {
    const HomogeneousPolynomial f = parse_poly("x0^2 + x1^2", 2);
    const StrengthOneResult split = strength_one_test(f);
    if (!split.reducible || !split.factors) {
        out << "  complex split of the sum of squares not found\n";
        return false;
    }
    const StrengthCertificate complex_cert =
        make_certificate(f, {{split.factors->first, split.factors->second}});
    if (!verify_certificate(complex_cert) || complex_cert.pairs.size() != 1) {
        out << "  one-term complex certificate is wrong\n";
        return false;
    }
    const StrengthCertificate real_cert = realify(complex_cert);
    if (!verify_certificate(real_cert) || real_cert.pairs.size() != 2) {
        out << "  realification is not the expected two-term certificate\n";
        return false;
    }
    for (const auto& [u, v] : real_cert.pairs) {
        for (const auto& [e, c] : u.terms()) {
            if (!c.is_real()) return false;
        }
        for (const auto& [e, c] : v.terms()) {
            if (!c.is_real()) return false;
        }
    }
    // One real term is impossible: a product of real linear forms has an
    // isotropic real zero set, while this form vanishes only at the origin;
    // the signature criterion encodes exactly that.
    const RealStrengthBounds bounds =
        quadratic_real_strength_bounds(QuadraticForm::from_form(f));
    if (bounds.one_term_real_possible || bounds.upper != 2 || !bounds.upper_achieved) {
        out << "  real bounds disagree with the two-term answer\n";
        return false;
    }
    g_certificates.push_back(complex_cert);
    g_certificates.push_back(real_cert);
    g_certificates.push_back(bounds.certificate);
    return true;
}

bool hilbert_identity_for_quadric_pairs(std::ostream& out) {
    Rng rng(505);
    std::size_t pairs_done = 0;
    while (pairs_done < 10) {
        const HomogeneousPolynomial f = random_form(rng, 4, 2, 3);
        const HomogeneousPolynomial g = random_form(rng, 4, 2, 3);
        if (f.is_zero() || g.is_zero()) continue;
        if (!is_regular_sequence({f, g}).is_regular) continue;
        const GradedIdeal ideal({f, g});
        for (unsigned d = 2; d <= 8; ++d) {
            const Integer expected = binomial(d + 3, 3) - Integer(4) * d;
            if (Integer(hilbert_function(ideal, d)) != expected) {
                out << "  ideal dimension off at degree " << d << "\n";
                return false;
            }
        }
        ++pairs_done;
    }
    return true;
}

bool loci_formulas_agree(std::ostream& out) {
    for (unsigned i = 1; i <= 3; ++i) {
        for (unsigned j = i; j <= 3; ++j) {
            if (fiber_dim_oracle(i, j) != dim_Z(i, j)) {
                out << "  oracle disagrees with dim_Z at (" << i << ", " << j << ")\n";
                return false;
            }
        }
    }
    const bool hand_values = dim_Gamma(1, 1, 4).value == 15 && dim_Gamma(2, 2, 4).value == 18 &&
                             dim_Gamma(1, 2, 5).value == 23 && dim_decomposition_set(1, 1) == 1 &&
                             dim_decomposition_set(2, 2) == 4 && dim_decomposition_set(1, 2) == 3;
    if (!hand_values) {
        out << "  hand values for dim_Gamma / dim_S missed\n";
        return false;
    }
    for (unsigned d = 2; d <= 20; ++d) {
        for (unsigned k = 1; k <= 6; ++k) {
            if (count_types(d, k) != Integer(enumerate_types(d, k).size())) {
                out << "  type count off at d=" << d << " k=" << k << "\n";
                return false;
            }
        }
    }
    return true;
}

bool line_obstruction_sweep(std::ostream& out) {
    for (long long d = 4; d <= 200; ++d) {
        const SurfaceInvariants inv = surface_invariants(d); // throws on route mismatch
        if (inv.E_sq != 2 - d) {
            out << "  E^2 off at d=" << d << "\n";
            return false;
        }
        if (!line_obstruction(d).infeasible) {
            out << "  line class not excluded at d=" << d << "\n";
            return false;
        }
    }
    return true;
}

bool vanishing_checker_bounds(std::ostream& out) {
    std::size_t product_instances = 0;
    for (unsigned n2 = 1; n2 <= 3; ++n2) {
        const SpaceDescriptor space{{1, n2}};
        for (long long d1 = 1; d1 <= 4; ++d1) {
            for (long long d2 = 1; d2 <= 4; ++d2) {
                const auto bound = x3_bound(space, {{1, 0}}, {{d1, d2}});
                if (bound != 2u) {
                    out << "  product bound wrong at n2=" << n2 << " (" << d1 << ", " << d2
                        << ")\n";
                    return false;
                }
                ++product_instances;
            }
        }
    }
    if (product_instances != 48) {
        out << "  expected 48 product instances, saw " << product_instances << "\n";
        return false;
    }
    for (unsigned n = 1; n <= 3; ++n) {
        for (long long d = 2; d <= 6; ++d) {
            const auto bound = x3_bound({{n}}, {{1}}, {{d}});
            if (bound != n + 1) {
                out << "  projective-space bound wrong at n=" << n << " d=" << d << "\n";
                return false;
            }
        }
    }
    return true;
}

bool slice_rank_identities(std::ostream& out) {
    struct Case {
        std::string text;
        std::size_t nv;
        unsigned value;
    };
    const std::vector<Case> cases = {{"x0^3", 4, 1},
                                     {"x0*x1 + x2*x3", 4, 2},
                                     {"x0^3 + x1^3 + x2^3", 3, 2}};
    for (const Case& c : cases) {
        const HomogeneousPolynomial f = parse_poly(c.text, c.nv);
        const SliceRankResult r = slice_rank(f);
        if (r.value != c.value) {
            out << "  slice rank of " << c.text << " is " << r.value << ", expected "
                << c.value << "\n";
            return false;
        }
        if (!r.witness || r.witness->size() != c.value ||
            !graded_membership(f, *r.witness).member) {
            out << "  witness for " << c.text << " missing or not a certificate\n";
            return false;
        }
        const long long n = static_cast<long long>(c.nv) - 1;
        const long long e = n - static_cast<long long>(c.value); // witness level
        if (e + 1 <= n && fano_solvable(f, static_cast<unsigned>(e + 1))) {
            out << "  " << c.text << " admits a subspace one level higher\n";
            return false;
        }
    }
    return true;
}

bool certificates_all_verify(std::ostream& out) {
    if (g_certificates.empty()) {
        out << "  no certificates were collected\n";
        return false;
    }
    std::size_t realified = 0;
    for (const StrengthCertificate& cert : g_certificates) {
        if (!verify_certificate(cert)) {
            out << "  a collected certificate fails re-verification\n";
            return false;
        }
        bool real_target = true;
        for (const auto& [e, c] : cert.target.terms()) {
            if (!c.is_real()) real_target = false;
        }
        if (!real_target) continue;
        const StrengthCertificate real = realify(cert);
        if (!verify_certificate(real) || real.pairs.size() > 2 * cert.pairs.size()) {
            out << "  realification breaks verification or the length bound\n";
            return false;
        }
        ++realified;
    }
    out << "  certificates=" << g_certificates.size() << " realified=" << realified << "\n";
    return realified > 0;
}

} // namespace

int main() {
    criterion(1, "alternating-sum formula equals multiplication-map rank (>= 60 instances)",
              koszul_formula_matches_rank);
    criterion(2, "random plane curves through a rational point slice in two linear terms",
              plane_curves_slice_in_two);
    criterion(3, "quadratic strength is ceil(rank/2) on 200 sampled Gram matrices",
              quadratic_strength_formula);
    criterion(4, "x^2 + y^2: one complex term, two real terms, one real term impossible",
              real_example_round_trip);
    criterion(5, "two-quadric ideals in four variables have dimension C(d+3,3) - 4d",
              hilbert_identity_for_quadric_pairs);
    criterion(6, "pencil-locus formulas match the sampling oracle and hand values",
              loci_formulas_agree);
    criterion(7, "no line class on the conic-bearing surfaces, degrees 4 through 200",
              line_obstruction_sweep);
    criterion(8, "vanishing checker yields bound 2 on 48 product instances and n+1 on P^n",
              vanishing_checker_bounds);
    criterion(9, "slice-rank identities with membership witnesses and level gaps",
              slice_rank_identities);
    criterion(10, "every collected certificate re-verifies; realifications stay within 2x",
              certificates_all_verify);

    std::cout << (g_failures == 0 ? "all criteria passed"
                                  : std::to_string(g_failures) + " criterion(s) failed")
              << "\n";
    return g_failures == 0 ? 0 : 1;
}

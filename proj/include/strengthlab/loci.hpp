#ifndef STRENGTHLAB_LOCI_HPP
#define STRENGTHLAB_LOCI_HPP

#include "strengthlab/ideal.hpp"
#include "strengthlab/linalg.hpp"
#include "strengthlab/numeric.hpp"
#include "strengthlab/poly.hpp"
#include "strengthlab/strength.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace strengthlab {

// A dimension/counting query over the plane: ambient P^n, form degree d,
// and a decomposition type vector.
struct LociQuery {
    unsigned n = 2;
    unsigned d = 2;
    std::vector<unsigned> type_vector;

    void validate() const {
        if (type_vector.empty()) throw std::invalid_argument("LociQuery: empty type vector");
        if (d < 2) throw std::invalid_argument("LociQuery: degree must be >= 2");
        for (unsigned i : type_vector) {
            if (i < 1 || 2 * i > d) {
                throw std::invalid_argument("LociQuery: type entry outside [1, floor(d/2)]");
            }
        }
    }
};

/*
 * Dimension of the pencil locus Z_{i,j} over the plane: spans of a
 * degree-i and a degree-j curve. Equal degrees give i^2 + 3i - 2; for
 * i < j the count is binom(i+2,2) + binom(j+2,2) - binom(j-i+2,2) - 1.
 */
inline long long dim_Z(unsigned i, unsigned j) {
    if (i < 1 || i > j) throw std::invalid_argument("dim_Z: need 1 <= i <= j");
    if (i == j) {
        const long long ii = static_cast<long long>(i);
        return ii * ii + 3 * ii - 2;
    }
    return static_cast<long long>(binomial(i + 2, 2) + binomial(j + 2, 2) -
                                  binomial(j - i + 2, 2) - 1);
}

struct DimGammaResult {
    long long value = 0;
    // Whether the incidence dimension exceeds the ambient projective space
    // of degree-d curves; this is what makes the locus dominate.
    bool exceeds_ambient = false;
};

// Dimension of the incidence variety over Z_{i,j}: pairs (pencil, curve
// of degree d through it).
inline DimGammaResult dim_Gamma(unsigned i, unsigned j, unsigned d) {
    if (i < 1 || i > j) throw std::invalid_argument("dim_Gamma: need 1 <= i <= j");
    if (2 * j > d) throw std::invalid_argument("dim_Gamma: need j <= floor(d/2)");
    const long long ambient = static_cast<long long>(binomial(d + 2, 2)) - 1;
    const long long value =
        ambient - static_cast<long long>(i) * static_cast<long long>(j) + dim_Z(i, j);
    return {value, value > ambient};
}

// Dimension of the set of decompositions of a fixed generic form with
// split degrees (i, j): dim Z_{i,j} - i*j.
inline long long dim_decomposition_set(unsigned i, unsigned j) {
    if (i < 1 || i > j) throw std::invalid_argument("dim_decomposition_set: need 1 <= i <= j");
    return dim_Z(i, j) - static_cast<long long>(i) * static_cast<long long>(j);
}

// All decomposition types for degree d and length k: nondecreasing
// k-tuples over [1, floor(d/2)].
inline std::vector<std::vector<unsigned>> enumerate_types(unsigned d, unsigned k) {
    if (d < 2) throw std::invalid_argument("enumerate_types: degree must be >= 2");
    if (k < 1) throw std::invalid_argument("enumerate_types: k must be positive");
    return detail::nondecreasing_tuples(d / 2, k);
}

// Number of decomposition types: binom(floor(d/2) + k - 1, k), checked
// against the explicit enumeration.
inline Integer count_types(unsigned d, unsigned k) {
    if (d < 2) throw std::invalid_argument("count_types: degree must be >= 2");
    if (k < 1) throw std::invalid_argument("count_types: k must be positive");
    const Integer formula = binomial(d / 2 + k - 1, k);
    if (formula != Integer(enumerate_types(d, k).size())) {
        throw std::logic_error("count_types: formula disagrees with enumeration");
    }
    return formula;
}

// Generic slice-rank lower bound from a parameter count: when the plane
// unknowns (n - m)(m + 1) are fewer than the binom(m + d, m) equations,
// a general form carries no m-plane and its slice rank is >= n - m + 1.
inline std::optional<unsigned> d10i_generic_bound(unsigned n, unsigned m, unsigned d) {
    if (m < 1 || m >= n) throw std::invalid_argument("d10i_generic_bound: need 1 <= m < n");
    if (d < 4) throw std::invalid_argument("d10i_generic_bound: need d >= 4");
    const Integer unknowns = Integer(n - m) * Integer(m + 1);
    if (unknowns < binomial(m + d, m)) return n - m + 1;
    return std::nullopt;
}

struct FiberOracleOptions {
    unsigned samples = 5;
    std::uint64_t seed = 20260822;
    long long coeff_height = 7;
    unsigned max_resamples = 60;
};

namespace detail {

// Coefficient row of h inside the product space (degree-i side, degree-j
// side); `slot` selects which side h lands in, the other side is zero.
inline std::vector<FieldElement> pair_space_row(const HomogeneousPolynomial& h, unsigned i,
                                                unsigned j, int slot) {
    const std::size_t bi = monomial_basis(3, i).size();
    const std::size_t bj = monomial_basis(3, j).size();
    std::vector<FieldElement> row(bi + bj);
    const std::vector<FieldElement> coeffs = coefficient_vector(h);
    const std::size_t off = (slot == 0) ? 0 : bi;
    for (std::size_t t = 0; t < coeffs.size(); ++t) row[off + t] = coeffs[t];
    return row;
}

} // namespace detail

/*
 * Randomized confirmation of dim_Z over the plane. A random pair (f, g)
 * of degrees (i, j) is a smooth point of the parameter space; the fiber
 * of the pair through its locus point is the orbit of the gauge group:
 * for i = j the full GL_2 mixing of (f, g), for i < j the rescaling of f
 * together with g -> g + (degree j-i form) * f. The oracle returns
 * (parameter dimension) - (rank of the orbit tangent rows) and takes a
 * majority over samples; non-regular pairs are resampled.
 */
inline long long fiber_dim_oracle(unsigned i, unsigned j,
                                  const FiberOracleOptions& opts = {}) {
    if (i < 1 || i > j) throw std::invalid_argument("fiber_dim_oracle: need 1 <= i <= j");
    Rng rng(opts.seed);
    const std::vector<Exp> bi = monomial_basis(3, i);
    const std::vector<Exp> bj = monomial_basis(3, j);

    auto random_form = [&](unsigned deg, const std::vector<Exp>& basis) {
        Poly p(3);
        for (const Exp& e : basis) {
            const long long c = rng.uniform_int(-opts.coeff_height, opts.coeff_height);
            if (c != 0) p.add_term(e, FieldElement(c));
        }
        return HomogeneousPolynomial(std::move(p), deg);
    };

    unsigned resamples = 0;
    std::map<long long, unsigned> votes;
    for (unsigned s = 0; s < opts.samples; ++s) {
        while (true) {
            const HomogeneousPolynomial f = random_form(i, bi);
            const HomogeneousPolynomial g = random_form(j, bj);
            bool regular = false;
            if (!f.is_zero() && !g.is_zero()) {
                regular = is_regular_sequence({f, g}).is_regular;
            }
            if (!regular) {
                if (++resamples > opts.max_resamples) {
                    throw DegenerateSamples("fiber_dim_oracle: resample budget exhausted");
                }
                continue;
            }
            std::vector<std::vector<FieldElement>> rows;
            if (i == j) {
                rows.push_back(detail::pair_space_row(f, i, j, 0));
                rows.push_back(detail::pair_space_row(g, i, j, 0));
                rows.push_back(detail::pair_space_row(f, i, j, 1));
                rows.push_back(detail::pair_space_row(g, i, j, 1));
            } else {
                rows.push_back(detail::pair_space_row(f, i, j, 0));
                for (const Exp& e : monomial_basis(3, j - i)) {
                    Poly m(3);
                    m.add_term(e, FieldElement(1));
                    const HomogeneousPolynomial mf =
                        HomogeneousPolynomial(std::move(m), j - i) * f;
                    rows.push_back(detail::pair_space_row(mf, i, j, 1));
                }
            }
            Matrix a(rows.size(), bi.size() + bj.size());
            for (std::size_t r = 0; r < rows.size(); ++r) {
                for (std::size_t c = 0; c < rows[r].size(); ++c) a.at(r, c) = rows[r][c];
            }
            const long long value = static_cast<long long>(bi.size() + bj.size()) -
                                    static_cast<long long>(rank(a));
            ++votes[value];
            break;
        }
    }
    long long best = 0;
    unsigned best_count = 0;
    for (const auto& [value, count] : votes) {
        if (count > best_count) { // ties resolve to the smaller value
            best = value;
            best_count = count;
        }
    }
    return best;
}

} // namespace strengthlab

#endif // STRENGTHLAB_LOCI_HPP

#ifndef STRENGTHLAB_MULTMAP_HPP
#define STRENGTHLAB_MULTMAP_HPP

#include "strengthlab/linalg.hpp"
#include "strengthlab/numeric.hpp"
#include "strengthlab/poly.hpp"

#include <cstddef>
#include <vector>

namespace strengthlab {

/*
 * The multiplication map from (degree d-e cofactors) tensor W into degree-d
 * forms, as an explicit matrix over Q(i). Rows are indexed by the degree-d
 * monomial basis; columns by (cofactor monomial, W element) pairs, cofactor
 * index outer. Its column span is the degree-d piece of the ideal spanned
 * by W when W consists of forms of equal degree.
 */
struct MultiplicationMap {
    std::vector<HomogeneousPolynomial> w_basis;
    unsigned target_degree = 0;
    Matrix matrix;
};

inline MultiplicationMap build_mult_map(const std::vector<HomogeneousPolynomial>& w_basis,
                                        unsigned d) {
    if (w_basis.empty()) throw std::invalid_argument("build_mult_map: empty W basis");
    const unsigned e = w_basis[0].degree();
    const std::size_t nv = w_basis[0].num_vars();
    for (const auto& w : w_basis) {
        if (w.is_zero()) throw ZeroSectionError("build_mult_map: zero W element");
        if (w.degree() != e || w.num_vars() != nv) {
            throw DegreeMismatch("build_mult_map: W elements of mixed degree");
        }
    }
    if (e < 1 || e + 1 > d) {
        throw DegreeMismatch("build_mult_map: need 1 <= deg W <= d - 1");
    }

    const std::vector<Exp> target = monomial_basis(nv, d);
    const std::vector<Exp> cofactor = monomial_basis(nv, d - e);
    MultiplicationMap map;
    map.w_basis = w_basis;
    map.target_degree = d;
    map.matrix = Matrix(target.size(), cofactor.size() * w_basis.size());
    std::size_t col = 0;
    for (const Exp& m : cofactor) {
        for (const auto& w : w_basis) {
            const HomogeneousPolynomial prod =
                HomogeneousPolynomial(Poly::monomial(nv, m, FieldElement(1)), d - e) * w;
            const std::vector<FieldElement> cv = coefficient_vector(prod);
            for (std::size_t r = 0; r < cv.size(); ++r) map.matrix.at(r, col) = cv[r];
            ++col;
        }
    }
    return map;
}

// Exact dimension of the image, by fraction-free elimination.
inline std::size_t image_dim(const MultiplicationMap& map) {
    return rank(map.matrix);
}

// The Koszul alternating sum sum_{k=1..m} (-1)^{k-1} C(m,k) h_values[k-1],
// where h_values[k-1] = h^0 of the (-k)-twist of the target bundle.
inline Integer koszul_formula_dim(unsigned m, const std::vector<Integer>& h_values) {
    if (h_values.size() != m) {
        throw std::invalid_argument("koszul_formula_dim: need exactly m h-values");
    }
    Integer acc = 0;
    for (unsigned k = 1; k <= m; ++k) {
        const Integer term = binomial(m, k) * h_values[k - 1];
        if (k % 2 == 1) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    return acc;
}

} // namespace strengthlab

#endif // STRENGTHLAB_MULTMAP_HPP

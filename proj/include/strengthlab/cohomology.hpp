#ifndef STRENGTHLAB_COHOMOLOGY_HPP
#define STRENGTHLAB_COHOMOLOGY_HPP

#include "strengthlab/errors.hpp"
#include "strengthlab/numeric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace strengthlab {

// P^{n_1} x ... x P^{n_s}.
struct SpaceDescriptor {
    std::vector<unsigned> factor_dims;

    unsigned total_dim() const {
        unsigned t = 0;
        for (unsigned n : factor_dims) t += n;
        return t;
    }
};

// O(d_1, ..., d_s), one entry per factor.
struct LineBundleClass {
    std::vector<long long> multidegree;

    LineBundleClass twist(const LineBundleClass& m, long long times) const {
        LineBundleClass out = *this;
        for (std::size_t k = 0; k < out.multidegree.size(); ++k) {
            out.multidegree[k] += times * m.multidegree[k];
        }
        return out;
    }
    bool is_trivial() const {
        for (long long d : multidegree) {
            if (d != 0) return false;
        }
        return true;
    }
};

namespace detail {

// h^i(P^n, O(k)): sections for k >= 0, top cohomology for k <= -n-1,
// nothing in between or in intermediate degrees.
inline Integer h_single_factor(unsigned n, long long k, unsigned i) {
    if (i == 0) return k >= 0 ? binomial(static_cast<long long>(n) + k, n) : Integer(0);
    if (i == n) {
        return k <= -static_cast<long long>(n) - 1 ? binomial(-k - 1, n) : Integer(0);
    }
    return Integer(0);
}

} // namespace detail

// Exact h^i of a multidegree twist; factors combine by the Kuenneth
// convolution h^i = sum over i_1 + ... + i_s = i of the factor products.
inline Integer h_twist(const SpaceDescriptor& space, const LineBundleClass& bundle, unsigned i) {
    const std::size_t s = space.factor_dims.size();
    if (bundle.multidegree.size() != s) {
        throw std::invalid_argument("h_twist: bundle/space factor count mismatch");
    }
    for (unsigned n : space.factor_dims) {
        if (n < 1) throw std::invalid_argument("h_twist: factor dimension must be >= 1");
    }
    std::vector<Integer> acc(i + 1, Integer(0));
    acc[0] = 1;
    for (std::size_t f = 0; f < s; ++f) {
        std::vector<Integer> next(i + 1, Integer(0));
        for (unsigned a = 0; a <= i; ++a) {
            if (acc[a].is_zero()) continue;
            for (unsigned b = 0; a + b <= i; ++b) {
                const Integer h = detail::h_single_factor(space.factor_dims[f],
                                                          bundle.multidegree[f], b);
                if (!h.is_zero()) next[a + b] += acc[a] * h;
            }
        }
        acc = std::move(next);
    }
    return acc[i];
}

inline Integer h0(const SpaceDescriptor& space, const LineBundleClass& bundle) {
    return h_twist(space, bundle, 0);
}

/*
 * Hypothesis report for the Koszul strength bound. `m` is the candidate
 * bound min(dim X + 1, h^0(M)); `holds` requires every listed cohomology
 * vanishing plus nontriviality of L - M. The last condition is what a
 * strength decomposition itself needs: with L = M every candidate summand
 * has a degree-zero cofactor, and no bound on strength follows (linear
 * forms on P^n are the standard counterexample).
 */
struct X3Report {
    unsigned m = 0;
    bool holds = false;
    std::vector<std::string> failures;
};

inline X3Report x3_report(const SpaceDescriptor& space, const LineBundleClass& m_bundle,
                          const LineBundleClass& l_bundle) {
    if (m_bundle.multidegree.size() != space.factor_dims.size() ||
        l_bundle.multidegree.size() != space.factor_dims.size()) {
        throw std::invalid_argument("x3_report: factor count mismatch");
    }
    if (m_bundle.is_trivial()) throw InvalidM("auxiliary bundle is trivial");
    for (long long dk : m_bundle.multidegree) {
        if (dk < 0) throw InvalidM("auxiliary bundle has no sections (negative multidegree)");
    }
    const Integer h0m = h0(space, m_bundle);
    if (h0m.is_zero()) throw InvalidM("auxiliary bundle has no sections");

    X3Report rep;
    unsigned m = space.total_dim() + 1;
    if (h0m < m) m = static_cast<unsigned>(h0m);
    rep.m = m;

    auto check_vanishing = [&](unsigned i, long long twist_times) {
        const Integer h = h_twist(space, l_bundle.twist(m_bundle, twist_times), i);
        if (!h.is_zero()) {
            rep.failures.push_back("h^" + std::to_string(i) + " of the (" +
                                   std::to_string(twist_times) +
                                   ")-twist is " + h.str() + ", not 0");
        }
    };
    for (unsigned k = 1; k + 1 <= m; ++k) {
        check_vanishing(k, -static_cast<long long>(k));
        check_vanishing(k, -static_cast<long long>(k) - 1);
    }
    check_vanishing(m, -static_cast<long long>(m));

    if (l_bundle.twist(m_bundle, -1).is_trivial()) {
        rep.failures.push_back("L - M is the trivial class; factor bundles of a "
                               "strength summand must be nontrivial");
    }
    rep.holds = rep.failures.empty();
    return rep;
}

// The bound itself: m when every hypothesis holds, absent otherwise.
inline std::optional<unsigned> x3_bound(const SpaceDescriptor& space,
                                        const LineBundleClass& m_bundle,
                                        const LineBundleClass& l_bundle) {
    const X3Report rep = x3_report(space, m_bundle, l_bundle);
    if (!rep.holds) return std::nullopt;
    return rep.m;
}

} // namespace strengthlab

#endif // STRENGTHLAB_COHOMOLOGY_HPP

#ifndef STRENGTHLAB_SURFACE_HPP
#define STRENGTHLAB_SURFACE_HPP

#include "strengthlab/errors.hpp"
#include "strengthlab/field.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace strengthlab {

/*
 * Rank-2 lattice data: intersection numbers in a basis ([A],[B]) plus,
 * optionally, the coordinates (w, z) of a negative curve class [E] =
 * w[A] + z[B]. All cone statements below are relative to this data; the
 * geometric inputs behind it (irreducibility of E, Picard rank 2) are
 * assumptions of the model, not verified here.
 */
struct PicardLattice2 {
    std::array<std::array<long long, 2>, 2> gram{};
    std::optional<std::pair<Rational, Rational>> e_coords;

    void validate() const {
        if (gram[0][1] != gram[1][0]) {
            throw std::invalid_argument("PicardLattice2: Gram matrix not symmetric");
        }
        if (e_coords && e_coords->second.is_zero()) {
            throw InvalidConeData("PicardLattice2: z = 0 contradicts the cone derivation");
        }
    }
};

/*
 * Effective-cone membership for a[A] + b[B]: b >= 0 and a*z - b*w >= 0.
 * The boundary rays are [A] and [E].
 */
struct ConeInequalities {
    Rational w, z;

    bool contains(const Rational& a, const Rational& b) const {
        return b >= 0 && a * z - b * w >= 0;
    }

    // Coordinates of alpha[A] + beta[E] in the ([A],[B]) basis.
    std::pair<Rational, Rational> from_A_E(const Rational& alpha, const Rational& beta) const {
        return {alpha + beta * w, beta * z};
    }
};

inline ConeInequalities effective_cone(const PicardLattice2& lattice) {
    lattice.validate();
    if (!lattice.e_coords) {
        throw InvalidConeData("effective_cone: lattice carries no negative-curve class");
    }
    const auto& [w, z] = *lattice.e_coords;
    if (z <= 0) {
        throw InvalidConeData("effective_cone: z <= 0 contradicts the cone derivation");
    }
    return {w, z};
}

/*
 * Intersection numbers on a degree-d surface in P^3 carrying a fixed
 * conic: D the conic class, H the hyperplane class, E = H - D.
 */
struct SurfaceInvariants {
    long long d = 0;
    long long D_sq = 0;
    long long D_H = 0;
    long long H_sq = 0;
    long long E_sq = 0;
};

/*
 * D^2 = 6 - 2d by adjunction on the conic, D.H = deg D = 2, H^2 = d.
 * E^2 is computed two independent ways: lattice expansion (H - D)^2 and
 * adjunction on E via deg(omega_E) = (d-2)(d-5) = (d-4)(d-2) + E^2.
 * Disagreement would be an arithmetic bug, so it throws.
 */
inline SurfaceInvariants surface_invariants(long long d) {
    if (d < 4) throw OutOfRange("surface_invariants: need d >= 4 (D^2 < 0 is required)");
    SurfaceInvariants inv;
    inv.d = d;
    inv.D_sq = 6 - 2 * d;
    inv.D_H = 2;
    inv.H_sq = d;
    const long long lattice_route = inv.H_sq - 2 * inv.D_H + inv.D_sq; // (H - D)^2
    const long long adjunction_route = (d - 2) * (d - 5) - (d - 4) * (d - 2);
    if (lattice_route != adjunction_route) {
        throw std::logic_error("surface_invariants: E^2 routes disagree");
    }
    inv.E_sq = lattice_route;
    return inv;
}

// The lattice of the obstruction argument: basis ([D],[H]) with [E] =
// -[D] + [H], i.e. (w, z) = (-1, 1).
inline PicardLattice2 d31_lattice(long long d) {
    const SurfaceInvariants inv = surface_invariants(d);
    PicardLattice2 lat;
    lat.gram = {{{inv.D_sq, inv.D_H}, {inv.D_H, inv.H_sq}}};
    lat.e_coords = std::make_pair(Rational(-1), Rational(1));
    lat.validate();
    return lat;
}

struct LineCandidate {
    long long b = 0;
    bool a_integral = false;
    std::optional<long long> a;
    std::string violation;
};

/*
 * Infeasibility transcript for a line class on the surface: an integer
 * solution of b*d + 2a = 1 inside the effective cone (b >= 0, a + b >= 0)
 * would have to exist, and the transcript shows none does. Candidates
 * b = 0 and b = 1 are checked directly; b >= 2 is closed off by the bound
 * b(d - 2) <= 1.
 */
struct LineObstructionCertificate {
    long long d = 0;
    std::string assumption;
    std::vector<LineCandidate> candidates;
    std::string tail_argument;
    std::optional<std::string> parity_note;
    std::size_t candidates_checked = 0;
    bool infeasible = false;
};

inline LineObstructionCertificate line_obstruction(long long d) {
    if (d < 4) throw OutOfRange("line_obstruction: need d >= 4");
    LineObstructionCertificate cert;
    cert.d = d;
    cert.assumption =
        "assumes the surface is generic in the family: its divisor classes are "
        "integer combinations of the conic class and the hyperplane class";

    bool feasible = false;
    for (long long b = 0; b <= 1; ++b) {
        LineCandidate cand;
        cand.b = b;
        const long long two_a = 1 - b * d;
        if (two_a % 2 != 0) {
            cand.a_integral = false;
            cand.violation = "a = (1 - " + std::to_string(b) + "*d)/2 = " +
                             std::to_string(two_a) + "/2 is not an integer";
        } else {
            cand.a_integral = true;
            cand.a = two_a / 2;
            if (*cand.a + b < 0) {
                cand.violation = "a + b = " + std::to_string(*cand.a + b) +
                                 " < 0 violates the cone inequality";
            } else {
                feasible = true; // cannot happen for d >= 4; kept as a hard check
            }
        }
        cert.candidates.push_back(std::move(cand));
    }
    cert.tail_argument =
        "for b >= 2: a + b >= 0 forces b(d - 2) <= 1, but b(d - 2) >= " +
        std::to_string(2 * (d - 2)) + " > 1";
    if (d % 2 == 0) {
        cert.parity_note = "b*d + 2a is even for every integer pair when d is even, never 1";
    }
    cert.candidates_checked = cert.candidates.size();
    cert.infeasible = !feasible;
    return cert;
}

} // namespace strengthlab

#endif // STRENGTHLAB_SURFACE_HPP

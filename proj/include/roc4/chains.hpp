#pragma once

#include <string>
#include <vector>

#include "roc4/mackey.hpp"

namespace roc4 {

enum class Orbit { e, C2, C4 };  // the cell orbit C4/H

std::string orbit_name(Orbit o);
std::size_t orbit_size(Orbit o);

// Double coset decomposition of C4/H x C4/K.
std::vector<Orbit> orbit_product(Orbit h, Orbit k);

// The free Mackey module on one orbit, as an explicit Mackey functor.
MackeyF2 free_module(Orbit o);

struct FreeMackeyModule {
    std::vector<Orbit> cells;
    MackeyF2 realize() const;
};

// A bounded complex of free Mackey modules on orbits, stored through its
// bottom level: each degree carries an F2 basis with a C4 action given as a
// basis permutation (the image of the group generator), and boundaries are
// equivariant bit matrices on those bases. The three Mackey levels are the
// fixed-point subspaces of 1, g^2, g.
struct MackeyChainComplex {
    int lo = 0;
    std::vector<std::vector<int>> gperm;  // per degree, size = dim
    std::vector<GF2Matrix> bnd;          // bnd[i]: C_{lo+i} -> C_{lo+i-1}; bnd[0] has 0 rows
    RODegree offset{};                   // bookkeeping: which S^V this models

    int hi() const { return lo + int(gperm.size()) - 1; }
    bool empty() const { return gperm.empty(); }
    std::size_t dim(int d) const {
        return d < lo || d > hi() ? 0 : gperm[std::size_t(d - lo)].size();
    }
    // Orbit decomposition of the basis at degree d (cycles of the permutation).
    std::vector<std::vector<int>> basis_orbits(int d) const;

    void validate() const;  // equivariance and dd = 0 at the bottom level
};

// Reduced cellular complexes of representation spheres; homology at degree d
// is the Mackey functor k_d(S^V), V = a + n sigma + m lambda (virtual allowed).
MackeyChainComplex sphere_complex(RODegree v);

MackeyChainComplex smash(const MackeyChainComplex& a, const MackeyChainComplex& b);
// As above but only materializing degrees in [dmin, dmax].
MackeyChainComplex smash_window(const MackeyChainComplex& a, const MackeyChainComplex& b,
                                int dmin, int dmax);

// Spanier-Whitehead dual: negated degrees, transposed boundaries.
MackeyChainComplex dualize(const MackeyChainComplex& c);

// Keep degrees [dmin-1, dmax+1] so homology in [dmin, dmax] is unchanged.
MackeyChainComplex truncate(const MackeyChainComplex& c, int dmin, int dmax);

// Homology at degree d as a validated Mackey functor, with induced res/tr/Weyl.
MackeyF2 homology(const MackeyChainComplex& c, int d);

// Gaussian cancellation of invertible boundary blocks between basis orbits.
// Preserves equivariant chain homotopy type; never creates cells.
void morse_reduce(MackeyChainComplex& c);

// Same cancellation for a complex carrying several commuting basis
// permutations (the E-space stage uses the C4 x Sigma2 action). Pairs whose
// lower degree is below min_degree are never cancelled.
void morse_reduce_multi(int lo, std::vector<std::vector<std::vector<int>>>& perms,
                        std::vector<GF2Matrix>& bnd, int min_degree);

std::size_t total_dim(const MackeyChainComplex& c);

}  // namespace roc4

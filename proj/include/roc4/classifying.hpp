#pragma once

#include <array>
#include <map>
#include <memory>

#include "roc4/chains.hpp"
#include "roc4/mackey.hpp"

namespace roc4 {

// One type I cell of the filtration: gr_s = (C4/H)_+ smash S^rep.
struct FiltrationCell {
    int filtration = 0;
    Orbit orbit = Orbit::C4;
    RODegree rep{};
};

std::vector<FiltrationCell> cell_spec(int fmax);

struct CohomologyResult {
    MackeyF2 h;
    bool stable = false;
    std::array<std::size_t, 3> dims() const { return {h.top_dim, h.mid_dim, h.bot_dim}; }
};

// Chain-level model of the infinite projective space with the rotation action,
// built skeleton by skeleton from the sphere of the ambient representation and
// its free double cover, then reduced.
class ClassifyingSpace {
public:
    explicit ClassifyingSpace(int fmax);

    int fmax() const { return fmax_; }
    const MackeyChainComplex& skeleton(int f) const;

    // k^star of the f-skeleton computed directly from the chains; stable
    // compares against the (f-4)-skeleton.
    CohomologyResult cohomology_at(RODegree star, int f);

    // f such that degrees in the window are safely below the truncation.
    static int guard_fmax(RODegree star);

private:
    int fmax_;
    std::vector<MackeyChainComplex> skeletons_;
    std::map<int, MackeyChainComplex> duals_;
    std::map<std::pair<int, int>, MackeyChainComplex> spheres_;

    const MackeyChainComplex& dual(int f);
    const MackeyChainComplex& sphere(int n, int m);
    MackeyF2 compute(RODegree star, int f);
};

// The chain complex of the F-skeleton (standalone convenience).
MackeyChainComplex build_complex(int fmax);

}  // namespace roc4

#pragma once

#include "tfwave/grid.hpp"
#include "tfwave/rng.hpp"

namespace tfwave {

/// One Gabor atom c . M_xi T_x g with gaussian g.
struct GaborAtom {
    cplx coeff;
    Point x{0.0, 0.0};
    Point xi{0.0, 0.0};
};

struct GaborSample {
    std::vector<GaborAtom> atoms;
};

/// Random test function: 10 atoms by default, coefficients complex standard
/// normal, centers uniform over the inner half of the box and band.
GaborSample draw_gabor(const GridSpec& spec, CounterRng& rng, int atoms = 10);

/// Perturbs atom centers/frequencies (normal, scale relative to box and
/// band) and coefficients; used by the greedy operator-norm refinement.
GaborSample jitter_gabor(const GaborSample& sample, const GridSpec& spec, double rel_scale,
                         CounterRng& rng);

/// Evaluates sum c e^{2 pi i xi . y} e^{-pi |y - x|^2} on the grid.
GridFunction synthesize(const GaborSample& sample, const GridSpec& spec);

}  // namespace tfwave

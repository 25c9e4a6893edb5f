#pragma once

#include <utility>
#include <vector>

#include "tfwave/norms.hpp"

namespace tfwave {

struct RatioReport {
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;
};

enum class ProductSpace { modulation, amalgam };

/// Product estimate check with the N-fold numerology N/q = N - 1 + 1/r.
/// lhs: norm of prod(us) in M^{p,r}_s (or W(FL^r_s, L^p_gamma));
/// rhs: product of the individual M^{Np,q}_s (or W(FL^q_s, L^{Np}_{gamma/N})) norms.
RatioReport check_product_estimate(const std::vector<GridFunction>& us, double p, double r,
                                   double q, double s, const Window& g, ProductSpace space,
                                   double gamma = 0.0);

/// Embedding W(FL^r_s, L^p_gamma) -> W(FL^q_{s-1}, L^p_gamma), valid when
/// d/q - d/r < 1. Returns (lhs, rhs) = (target norm, source norm).
std::pair<double, double> check_embedding(const GridFunction& f, double r, double q, double s,
                                          double gamma, double p, const Window& g);

struct L3Report {
    double lhs = 0.0;  // ||f||_{FL^p}
    double rhs = 0.0;  // sup_{|alpha| <= 2k} ||d^alpha f||_inf
    double ratio = 0.0;
};

/// ||f||_{FL^p} against the sup of spectral derivatives up to order 2k, for f
/// supported (up to relative mass 1e-10) in a ball of radius R.
L3Report lemma_l3_bound(const GridFunction& f, double p, double R, int k);

/// Spectral derivative d^alpha f = F^{-1}((2 pi i xi)^alpha f_hat).
GridFunction spectral_derivative(const GridFunction& f, int a0, int a1 = 0);

}  // namespace tfwave

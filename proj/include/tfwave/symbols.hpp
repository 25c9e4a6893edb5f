#pragma once

#include <memory>
#include <string>
#include <variant>

#include "tfwave/grid.hpp"

namespace tfwave {

struct SinPowParams {
    double alpha = 1.0;
    double delta = 1.0;
};
struct CosParams {};
struct WaveCosParams {
    double t = 0.0;
};
struct WaveSincParams {
    double t = 0.0;
};

/// Frequency-domain symbol sigma(xi). Closed-form kinds evaluate exactly,
/// with removable singularities filled by their limits; Custom carries grid
/// samples and evaluates by nearest sample.
class Symbol {
public:
    /// sin(|xi|^alpha) / |xi|^delta, with the side condition
    /// 0 < alpha <= 1, delta <= alpha. Value at 0: 0 if delta < alpha, 1 if
    /// delta = alpha.
    static Symbol sin_pow(double alpha, double delta);
    /// cos|xi|.
    static Symbol cosine();
    /// cos(2 pi t |xi|), the wave propagator K'(t).
    static Symbol wave_cos(double t);
    /// sin(2 pi t |xi|) / (2 pi |xi|), the wave propagator K(t); value t at 0.
    static Symbol wave_sinc(double t);
    static Symbol custom(GridFunction samples);

    cplx eval(const Point& xi) const;
    GridFunction sample(const GridSpec& spec) const;
    std::string name() const;
    bool is_custom() const { return std::holds_alternative<GridFunction>(kind_); }

    const std::variant<SinPowParams, CosParams, WaveCosParams, WaveSincParams, GridFunction>& kind() const {
        return kind_;
    }

private:
    template <class K>
    explicit Symbol(K&& kind) : kind_(std::forward<K>(kind)) {}

    std::variant<SinPowParams, CosParams, WaveCosParams, WaveSincParams, GridFunction> kind_;
};

/// H_sigma f = F^{-1}(sigma . F f); linear, exact on grid plane waves.
GridFunction apply_multiplier(const Symbol& sym, const GridFunction& f);

/// Smooth radial cutoff: 1 on |xi| <= 1, 0 on |xi| >= 2, monotone in between.
/// Transition profile: step(u) = psi(1-u) / (psi(1-u) + psi(u)) with
/// psi(u) = e^{-1/u} on u > 0 (the standard C-infinity step).
class Cutoff {
public:
    double operator()(double rho) const {
        if (rho <= 1.0) return 1.0;
        if (rho >= 2.0) return 0.0;
        return step(2.0 - rho) / (step(2.0 - rho) + step(rho - 1.0));
    }

private:
    static double step(double u) { return u > 0.0 ? std::exp(-1.0 / u) : 0.0; }
};

/// Splits sigma = chi sigma + (1 - chi) sigma into a singular part supported
/// in |xi| <= 2 and an oscillatory part vanishing on |xi| <= 1, sampled on
/// the given grid.
std::pair<Symbol, Symbol> split_symbol(const Symbol& sym, const Cutoff& chi, const GridSpec& spec);

}  // namespace tfwave

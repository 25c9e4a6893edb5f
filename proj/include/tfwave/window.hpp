#pragma once

#include "tfwave/grid.hpp"

namespace tfwave {

enum class WindowKind { gaussian, bump };

/// e^{-pi r^2} with r^2 = |x|^2.
inline double gaussian_value(double r_sq) { return std::exp(-std::numbers::pi * r_sq); }

/// C0-infinity bump: exp(1 - 1/(1 - r^2)) on r < 1, zero outside; value 1 at 0.
inline double bump_value(double r_sq) {
    if (r_sq >= 1.0) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - r_sq));
}

/// STFT/amalgam window: grid samples plus a cached L2 norm. The gaussian is
/// the default for modulation norms; amalgam norms require the bump.
class Window {
public:
    static Window gaussian(const GridSpec& spec) {
        GridFunction g = GridFunction::sample(spec, Domain::spatial,
                                              [](const Point& x) { return cplx{gaussian_value(norm_sq(x)), 0.0}; });
        return Window(WindowKind::gaussian, std::move(g), 1.0);
    }

    /// Gaussian rescaled so the grid L2 norm is exactly 1.
    static Window unit_gaussian(const GridSpec& spec) { return gaussian(spec).normalized(); }

    static Window bump(const GridSpec& spec, double radius = 1.0) {
        if (!(radius > 0.0)) throw ConfigError("Window::bump: radius must be positive");
        GridFunction g = GridFunction::sample(spec, Domain::spatial, [radius](const Point& x) {
            return cplx{bump_value(norm_sq(x) / (radius * radius)), 0.0};
        });
        return Window(WindowKind::bump, std::move(g), radius);
    }

    WindowKind kind() const { return kind_; }
    const GridFunction& g() const { return g_; }
    double l2_norm() const { return l2_norm_; }
    double radius() const { return radius_; }

    Window normalized() const {
        Window w = *this;
        double c = 1.0 / l2_norm_;
        for (auto& v : w.g_.values()) v *= c;
        w.l2_norm_ = 1.0;
        return w;
    }

private:
    Window(WindowKind kind, GridFunction g, double radius)
        : kind_(kind), g_(std::move(g)), radius_(radius), l2_norm_(weighted_lp_norm(g_, 2.0)) {
        if (l2_norm_ == 0.0) throw ConfigError("Window: zero window");
    }

    WindowKind kind_;
    GridFunction g_;
    double radius_;
    double l2_norm_;
};

}  // namespace tfwave

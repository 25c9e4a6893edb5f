#pragma once

#include <string>
#include <variant>

#include "tfwave/stft.hpp"

namespace tfwave {

/// Exponent/weight bundle naming the modulation norm M^{p,q}_s.
struct ModulationSpec {
    double p = 2.0;
    double q = 2.0;
    double s = 0.0;

    void validate() const {
        require_banach_exponent(p, "ModulationSpec: p");
        require_banach_exponent(q, "ModulationSpec: q");
    }
};

/// Exponent/weight bundle naming the amalgam norm W(FL^q_s, L^p_gamma).
struct AmalgamSpec {
    double q = 2.0;
    double s = 0.0;
    double p = 2.0;
    double gamma = 0.0;

    void validate() const {
        require_banach_exponent(q, "AmalgamSpec: q");
        require_banach_exponent(p, "AmalgamSpec: p");
    }
};

using MonitorSpec = std::variant<ModulationSpec, AmalgamSpec>;

/// Mixed Riemann sum for ||f||_{M^{p,q}_s}: inner L^p over lattice x-nodes
/// (cell a^d), outer weighted L^q over xi-nodes (cell b^d, weight <xi>^s);
/// inf-exponents become maxima.
double modulation_norm(const GridFunction& f, const Window& g, const ModulationSpec& spec,
                       const Lattice& lat);

/// Same on the finest lattice (a = dx, b = 1/l).
double modulation_norm(const GridFunction& f, const Window& g, const ModulationSpec& spec);

/// ||f||_{W(FL^q_s, L^p_gamma)}: per x-node the FL^q_s norm of f T_x g, then
/// a global weighted L^p_gamma over x. Requires a bump window (outer
/// exponent read as 1/p).
double amalgam_norm(const GridFunction& f, const Window& g, const AmalgamSpec& spec);

/// ||<.>^s f_hat||_q.
double fl_norm(const GridFunction& f, double q, double s);

/// Monitor-norm dispatch with the default window per space (unit gaussian
/// for modulation, bump for amalgam).
double monitor_norm(const GridFunction& f, const MonitorSpec& spec);

std::string monitor_name(const MonitorSpec& spec);

/// Weight string for an exponent, "inf" for infinity.
std::string exponent_str(double p);

}  // namespace tfwave

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "tfwave/errors.hpp"

namespace tfwave {

using cplx = std::complex<double>;

/// Distinguished value for the exponent p = infinity.
inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Point in R^d, d <= 2; the second component is zero when d == 1.
using Point = std::array<double, 2>;

inline double norm_sq(const Point& p) { return p[0] * p[0] + p[1] * p[1]; }

enum class Domain { spatial, frequency };

/// Uniform periodic discretization of the box [-l/2, l/2)^d with n samples
/// per axis. Spatial nodes are x_j = (j - n/2) dx, dx = l/n; the dual grid
/// is xi_k = k/l, k in {-n/2, ..., n/2 - 1}, so dx * n = l and dxi = 1/l.
class GridSpec {
public:
    GridSpec() = default;

    static GridSpec make(int d, int n, double l) {
        if (d != 1 && d != 2) throw ConfigError("GridSpec: d must be 1 or 2");
        if (n < 4 || n % 2 != 0) throw ConfigError("GridSpec: n must be even and >= 4");
        if (!(l > 0.0)) throw ConfigError("GridSpec: l must be positive");
        GridSpec s;
        s.d_ = d;
        s.n_ = n;
        s.l_ = l;
        return s;
    }

    int d() const { return d_; }
    int n() const { return n_; }
    double l() const { return l_; }
    double dx() const { return l_ / n_; }
    double dxi() const { return 1.0 / l_; }
    std::size_t size() const {
        std::size_t s = std::size_t(n_);
        return d_ == 1 ? s : s * s;
    }

    /// Coordinate of axis index i on the spatial grid.
    double x_coord(int i) const { return (i - n_ / 2) * dx(); }
    /// Coordinate of axis index i on the frequency grid.
    double xi_coord(int i) const { return (i - n_ / 2) * dxi(); }

    std::size_t flat(int i0, int i1 = 0) const {
        return d_ == 1 ? std::size_t(i0) : std::size_t(i0) * n_ + i1;
    }

    Point x_point(std::size_t flat) const {
        if (d_ == 1) return {x_coord(int(flat)), 0.0};
        return {x_coord(int(flat / n_)), x_coord(int(flat % n_))};
    }

    Point xi_point(std::size_t flat) const {
        if (d_ == 1) return {xi_coord(int(flat)), 0.0};
        return {xi_coord(int(flat / n_)), xi_coord(int(flat % n_))};
    }

    bool operator==(const GridSpec&) const = default;

private:
    int d_ = 1;
    int n_ = 4;
    double l_ = 1.0;
};

/// Desk-scale defaults: d=1 -> n=512, l=32; d=2 -> n=128, l=16.
inline GridSpec default_grid(int d) {
    return d == 1 ? GridSpec::make(1, 512, 32.0) : GridSpec::make(2, 128, 16.0);
}

/// Complex samples on a GridSpec, tagged spatial or frequency.
class GridFunction {
public:
    GridFunction(GridSpec spec, Domain domain)
        : spec_(spec), domain_(domain), values_(spec.size(), cplx{0.0, 0.0}) {}

    GridFunction(GridSpec spec, Domain domain, std::vector<cplx> values)
        : spec_(spec), domain_(domain), values_(std::move(values)) {
        if (values_.size() != spec_.size()) throw SpecMismatch("GridFunction: values length != n^d");
    }

    /// Sample f(point) over the grid of the given domain.
    template <class F>
    static GridFunction sample(const GridSpec& spec, Domain domain, F&& f) {
        GridFunction g(spec, domain);
        for (std::size_t i = 0; i < g.size(); ++i) {
            Point p = domain == Domain::spatial ? spec.x_point(i) : spec.xi_point(i);
            g.values_[i] = f(p);
        }
        return g;
    }

    const GridSpec& spec() const { return spec_; }
    Domain domain() const { return domain_; }

    std::size_t size() const { return values_.size(); }
    const std::vector<cplx>& values() const { return values_; }
    std::vector<cplx>& values() { return values_; }
    const cplx* data() const { return values_.data(); }
    cplx* data() { return values_.data(); }
    cplx operator[](std::size_t i) const { return values_[i]; }
    cplx& operator[](std::size_t i) { return values_[i]; }

    double max_abs() const {
        double m = 0.0;
        for (const cplx& v : values_) m = std::max(m, std::abs(v));
        return m;
    }

private:
    GridSpec spec_;
    Domain domain_;
    std::vector<cplx> values_;
};

/// Polynomial weight <x>^s = (1 + |x|^2)^{s/2}; strictly positive.
struct Weight {
    double s = 0.0;
    double operator()(const Point& p) const { return std::pow(1.0 + norm_sq(p), 0.5 * s); }
};

namespace detail {
inline void require_compatible(const GridFunction& a, const GridFunction& b, const char* op) {
    if (a.spec() != b.spec()) throw SpecMismatch(std::string(op) + ": grid specs differ");
    if (a.domain() != b.domain()) throw SpecMismatch(std::string(op) + ": domain tags differ");
}
}  // namespace detail

GridFunction add(const GridFunction& a, const GridFunction& b);
GridFunction sub(const GridFunction& a, const GridFunction& b);
GridFunction mul(const GridFunction& a, const GridFunction& b);
GridFunction scale(const GridFunction& a, cplx c);
GridFunction conjugate(const GridFunction& a);
/// |u|^{2k} u, elementwise; k = 0 returns u.
GridFunction abs_power(const GridFunction& a, int k);

inline GridFunction operator+(const GridFunction& a, const GridFunction& b) { return add(a, b); }
inline GridFunction operator-(const GridFunction& a, const GridFunction& b) { return sub(a, b); }
inline GridFunction operator*(const GridFunction& a, const GridFunction& b) { return mul(a, b); }
inline GridFunction operator*(cplx c, const GridFunction& a) { return scale(a, c); }
inline GridFunction operator*(double c, const GridFunction& a) { return scale(a, cplx{c, 0.0}); }

/// Discretized f_hat(xi) = integral e^{-2 pi i x xi} f(x) dx (scale dx^d).
GridFunction forward_fourier(const GridFunction& f);
/// Discretized f(x) = integral e^{+2 pi i x xi} f_hat(xi) dxi (scale dxi^d);
/// exact inverse of forward_fourier up to roundoff.
GridFunction inverse_fourier(const GridFunction& f);

/// Riemann-sum weighted norm (sum |<x>^s f|^p cell)^{1/p}; grid max for p = inf.
/// The cell volume is dx^d for spatial functions and dxi^d for frequency ones.
double weighted_lp_norm(const GridFunction& f, double p, Weight w = {});

/// Circular translation by j0 (and j1) grid steps: result[j] = f[j - j0 mod n].
GridFunction circshift(const GridFunction& f, int j0, int j1 = 0);

inline bool is_inf(double p) { return std::isinf(p); }

/// Exponent validation for the Banach range [1, inf]; quasi-Banach rejected.
inline void require_banach_exponent(double p, const char* name) {
    if (std::isnan(p) || p < 1.0)
        throw UnsupportedExponent(std::string(name) + " outside the Banach range [1, inf]");
}

/// lhs == 0 -> 0; rhs == 0 -> inf; else lhs/rhs.
inline double safe_ratio(double lhs, double rhs) {
    if (lhs == 0.0) return 0.0;
    if (rhs == 0.0) return kInf;
    return lhs / rhs;
}

}  // namespace tfwave

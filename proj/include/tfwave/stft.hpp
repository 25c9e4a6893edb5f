#pragma once

#include <functional>

#include "tfwave/grid.hpp"
#include "tfwave/window.hpp"

namespace tfwave {

/// Time-frequency lattice over a GridSpec: x-step a = a_mult * dx, xi-step
/// b = b_mult * dxi. The default a_mult = b_mult = 1 reuses every grid node,
/// so mixed-norm Riemann sums consume FFT output with no interpolation.
class Lattice {
public:
    static Lattice finest(const GridSpec& spec) { return make(spec, 1, 1); }

    static Lattice make(const GridSpec& spec, int a_mult, int b_mult) {
        if (a_mult < 1 || b_mult < 1 || spec.n() % a_mult != 0 || spec.n() % b_mult != 0)
            throw IncompatibleLattice("Lattice: steps must divide n");
        Lattice lat;
        lat.spec_ = spec;
        lat.a_mult_ = a_mult;
        lat.b_mult_ = b_mult;
        return lat;
    }

    const GridSpec& spec() const { return spec_; }
    int a_mult() const { return a_mult_; }
    int b_mult() const { return b_mult_; }
    double a() const { return a_mult_ * spec_.dx(); }
    double b() const { return b_mult_ * spec_.dxi(); }

    int nx() const { return spec_.n() / a_mult_; }
    int nxi() const { return spec_.n() / b_mult_; }
    std::size_t x_count() const { return spec_.d() == 1 ? std::size_t(nx()) : std::size_t(nx()) * nx(); }
    std::size_t xi_count() const { return spec_.d() == 1 ? std::size_t(nxi()) : std::size_t(nxi()) * nxi(); }

    /// Underlying grid index of x-node `flat` along `axis`.
    int x_grid_index(std::size_t flat, int axis) const {
        int i = spec_.d() == 1 ? int(flat) : (axis == 0 ? int(flat) / nx() : int(flat) % nx());
        return i * a_mult_;
    }

    int xi_grid_index(std::size_t flat, int axis) const {
        int i = spec_.d() == 1 ? int(flat) : (axis == 0 ? int(flat) / nxi() : int(flat) % nxi());
        return i * b_mult_;
    }

    Point x_node(std::size_t flat) const {
        return {spec_.x_coord(x_grid_index(flat, 0)),
                spec_.d() == 1 ? 0.0 : spec_.x_coord(x_grid_index(flat, 1))};
    }

    Point xi_node(std::size_t flat) const {
        return {spec_.xi_coord(xi_grid_index(flat, 0)),
                spec_.d() == 1 ? 0.0 : spec_.xi_coord(xi_grid_index(flat, 1))};
    }

    bool operator==(const Lattice&) const = default;

private:
    GridSpec spec_;
    int a_mult_ = 1;
    int b_mult_ = 1;
};

/// V_g f sampled on a lattice; x-node major, xi fastest.
struct StftCoefficients {
    Lattice lattice;
    WindowKind window = WindowKind::gaussian;
    std::vector<cplx> coeffs;

    cplx at(std::size_t x_flat, std::size_t xi_flat) const {
        return coeffs[x_flat * lattice.xi_count() + xi_flat];
    }
};

/// Short-time Fourier transform V_g f(x, xi) = F(f . conj(T_x g))(xi),
/// computed with one FFT per lattice x-node.
StftCoefficients stft(const GridFunction& f, const Window& g, const Lattice& lat);

namespace detail {
/// Streams STFT rows (fixed x-node, all lattice xi-nodes) without storing
/// the full coefficient array; backbone of stft() and the mixed norms.
void stft_rows(const GridFunction& f, const Window& g, const Lattice& lat,
               const std::function<void(std::size_t, const std::vector<cplx>&)>& row);
}  // namespace detail

}  // namespace tfwave

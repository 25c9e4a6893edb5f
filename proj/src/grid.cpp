#include "tfwave/grid.hpp"

#include <algorithm>

namespace tfwave {

namespace detail {
void dft(int d, int n, int sign, const cplx* in, cplx* out);  // fft.cpp
}

GridFunction add(const GridFunction& a, const GridFunction& b) {
    detail::require_compatible(a, b, "add");
    GridFunction r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

GridFunction sub(const GridFunction& a, const GridFunction& b) {
    detail::require_compatible(a, b, "sub");
    GridFunction r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

GridFunction mul(const GridFunction& a, const GridFunction& b) {
    detail::require_compatible(a, b, "mul");
    GridFunction r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] *= b[i];
    return r;
}

GridFunction scale(const GridFunction& a, cplx c) {
    GridFunction r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] *= c;
    return r;
}

GridFunction conjugate(const GridFunction& a) {
    GridFunction r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::conj(r[i]);
    return r;
}

GridFunction abs_power(const GridFunction& a, int k) {
    if (k < 0) throw ConfigError("abs_power: k must be nonnegative");
    GridFunction r = a;
    if (k == 0) return r;
    for (std::size_t i = 0; i < r.size(); ++i) {
        double m2 = std::norm(r[i]);
        r[i] *= std::pow(m2, k);
    }
    return r;
}

namespace {

// Map DFT output (index m, frequencies mod n) to the centered grid
// (index i, k = i - n/2) with the alternating sign e^{pi i k} that shifts
// the spatial origin to the box center.
void center_forward(const GridSpec& s, const std::vector<cplx>& dft_out, GridFunction& out) {
    const int n = s.n();
    const double scale = s.d() == 1 ? s.dx() : s.dx() * s.dx();
    if (s.d() == 1) {
        for (int i = 0; i < n; ++i) {
            int k = i - n / 2;
            int m = (i + n / 2) % n;
            double sgn = (k & 1) ? -1.0 : 1.0;
            out[std::size_t(i)] = scale * sgn * dft_out[std::size_t(m)];
        }
    } else {
        for (int i0 = 0; i0 < n; ++i0) {
            int k0 = i0 - n / 2;
            int m0 = (i0 + n / 2) % n;
            for (int i1 = 0; i1 < n; ++i1) {
                int k1 = i1 - n / 2;
                int m1 = (i1 + n / 2) % n;
                double sgn = ((k0 + k1) & 1) ? -1.0 : 1.0;
                out[s.flat(i0, i1)] = scale * sgn * dft_out[std::size_t(m0) * n + m1];
            }
        }
    }
}

// Inverse ordering: fill the DFT input (index m) from centered samples with
// the same alternating sign.
void center_backward(const GridSpec& s, const GridFunction& in, std::vector<cplx>& dft_in) {
    const int n = s.n();
    if (s.d() == 1) {
        for (int m = 0; m < n; ++m) {
            int k = m < n / 2 ? m : m - n;
            double sgn = (k & 1) ? -1.0 : 1.0;
            dft_in[std::size_t(m)] = sgn * in[std::size_t(k + n / 2)];
        }
    } else {
        for (int m0 = 0; m0 < n; ++m0) {
            int k0 = m0 < n / 2 ? m0 : m0 - n;
            for (int m1 = 0; m1 < n; ++m1) {
                int k1 = m1 < n / 2 ? m1 : m1 - n;
                double sgn = ((k0 + k1) & 1) ? -1.0 : 1.0;
                dft_in[std::size_t(m0) * n + m1] = sgn * in[s.flat(k0 + n / 2, k1 + n / 2)];
            }
        }
    }
}

}  // namespace

GridFunction forward_fourier(const GridFunction& f) {
    if (f.domain() != Domain::spatial)
        throw DomainMismatch("forward_fourier expects a spatial function");
    const GridSpec& s = f.spec();
    std::vector<cplx> tmp(s.size());
    detail::dft(s.d(), s.n(), -1, f.data(), tmp.data());
    GridFunction out(s, Domain::frequency);
    center_forward(s, tmp, out);
    return out;
}

GridFunction inverse_fourier(const GridFunction& f) {
    if (f.domain() != Domain::frequency)
        throw DomainMismatch("inverse_fourier expects a frequency function");
    const GridSpec& s = f.spec();
    std::vector<cplx> tmp(s.size());
    center_backward(s, f, tmp);
    GridFunction out(s, Domain::spatial);
    detail::dft(s.d(), s.n(), +1, tmp.data(), out.data());
    const double scale = s.d() == 1 ? s.dxi() : s.dxi() * s.dxi();
    for (std::size_t i = 0; i < out.size(); ++i) out[i] *= scale;
    return out;
}

double weighted_lp_norm(const GridFunction& f, double p, Weight w) {
    require_banach_exponent(p, "weighted_lp_norm: p");
    const GridSpec& s = f.spec();
    const bool spatial = f.domain() == Domain::spatial;
    const double step = spatial ? s.dx() : s.dxi();
    const double cell = s.d() == 1 ? step : step * step;

    if (is_inf(p)) {
        double m = 0.0;
        for (std::size_t i = 0; i < f.size(); ++i) {
            Point pt = spatial ? s.x_point(i) : s.xi_point(i);
            m = std::max(m, w(pt) * std::abs(f[i]));
        }
        return m;
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        Point pt = spatial ? s.x_point(i) : s.xi_point(i);
        double v = w(pt) * std::abs(f[i]);
        if (p == 1.0)
            acc += v;
        else if (p == 2.0)
            acc += v * v;
        else
            acc += std::pow(v, p);
    }
    return std::pow(cell * acc, 1.0 / p);
}

GridFunction circshift(const GridFunction& f, int j0, int j1) {
    const GridSpec& s = f.spec();
    const int n = s.n();
    auto wrap = [n](int j) {
        int m = j % n;
        return m < 0 ? m + n : m;
    };
    GridFunction r(s, f.domain());
    if (s.d() == 1) {
        for (int j = 0; j < n; ++j) r[std::size_t(j)] = f[std::size_t(wrap(j - j0))];
    } else {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) r[s.flat(a, b)] = f[s.flat(wrap(a - j0), wrap(b - j1))];
    }
    return r;
}

}  // namespace tfwave

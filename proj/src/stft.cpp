#include "tfwave/stft.hpp"

namespace tfwave {

namespace detail {

void dft(int d, int n, int sign, const cplx* in, cplx* out);  // fft.cpp

namespace {

// Forward transform of raw spatial samples into centered frequency order,
// same math as forward_fourier but on preallocated buffers.
void forward_into(const GridSpec& s, const std::vector<cplx>& in, std::vector<cplx>& scratch,
                  std::vector<cplx>& out) {
    const int n = s.n();
    dft(s.d(), n, -1, in.data(), scratch.data());
    const double scale = s.d() == 1 ? s.dx() : s.dx() * s.dx();
    if (s.d() == 1) {
        for (int i = 0; i < n; ++i) {
            int k = i - n / 2;
            int m = (i + n / 2) % n;
            out[std::size_t(i)] = ((k & 1) ? -scale : scale) * scratch[std::size_t(m)];
        }
    } else {
        for (int i0 = 0; i0 < n; ++i0) {
            int m0 = (i0 + n / 2) % n;
            for (int i1 = 0; i1 < n; ++i1) {
                int m1 = (i1 + n / 2) % n;
                int k = (i0 - n / 2) + (i1 - n / 2);
                out[s.flat(i0, i1)] = ((k & 1) ? -scale : scale) * scratch[std::size_t(m0) * n + m1];
            }
        }
    }
}

}  // namespace

void stft_rows(const GridFunction& f, const Window& g, const Lattice& lat,
               const std::function<void(std::size_t, const std::vector<cplx>&)>& row) {
    if (f.domain() != Domain::spatial) throw DomainMismatch("stft expects a spatial function");
    if (lat.spec() != f.spec()) throw IncompatibleLattice("stft: lattice grid differs from f");
    if (g.g().spec() != f.spec()) throw SpecMismatch("stft: window grid differs from f");

    const GridSpec& s = f.spec();
    const int n = s.n();
    const std::vector<cplx>& gv = g.g().values();

    std::vector<cplx> prod(s.size());
    std::vector<cplx> scratch(s.size());
    std::vector<cplx> freq(s.size());
    std::vector<cplx> rowbuf(lat.xi_count());

    auto wrap = [n](int j) {
        int m = j % n;
        return m < 0 ? m + n : m;
    };

    for (std::size_t xf = 0; xf < lat.x_count(); ++xf) {
        const int j0 = lat.x_grid_index(xf, 0);
        if (s.d() == 1) {
            for (int j = 0; j < n; ++j)
                prod[std::size_t(j)] = f[std::size_t(j)] * std::conj(gv[std::size_t(wrap(j - j0))]);
        } else {
            const int j1 = lat.x_grid_index(xf, 1);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    prod[s.flat(a, b)] = f[s.flat(a, b)] * std::conj(gv[s.flat(wrap(a - j0), wrap(b - j1))]);
        }
        forward_into(s, prod, scratch, freq);

        if (lat.b_mult() == 1) {
            row(xf, freq);
        } else {
            for (std::size_t q = 0; q < lat.xi_count(); ++q) {
                int i0 = lat.xi_grid_index(q, 0);
                rowbuf[q] = s.d() == 1 ? freq[std::size_t(i0)] : freq[s.flat(i0, lat.xi_grid_index(q, 1))];
            }
            row(xf, rowbuf);
        }
    }
}

}  // namespace detail

StftCoefficients stft(const GridFunction& f, const Window& g, const Lattice& lat) {
    StftCoefficients c;
    c.lattice = lat;
    c.window = g.kind();
    c.coeffs.resize(lat.x_count() * lat.xi_count());
    detail::stft_rows(f, g, lat, [&](std::size_t xf, const std::vector<cplx>& row) {
        std::copy(row.begin(), row.end(), c.coeffs.begin() + std::ptrdiff_t(xf * lat.xi_count()));
    });
    return c;
}

}  // namespace tfwave

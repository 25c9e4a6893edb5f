#include <fftw3.h>

#include <complex>
#include <cstring>
#include <mutex>
#include <unordered_map>

#include "tfwave/grid.hpp"

namespace tfwave::detail {

namespace {

struct PlanEntry {
    fftw_plan plan = nullptr;
    fftw_complex* in = nullptr;
    fftw_complex* out = nullptr;
    std::size_t total = 0;
};

// One cached plan (with its own aligned buffers) per (d, n, direction).
// The mutex serializes planner access and buffer reuse; FFT calls are short
// relative to everything built on top of them.
class FftCache {
public:
    static FftCache& instance() {
        static FftCache cache;
        return cache;
    }

    void execute(int d, int n, int sign, const cplx* src, cplx* dst) {
        std::lock_guard<std::mutex> lock(mu_);
        const std::uint64_t key =
            (std::uint64_t(d) << 40) | (std::uint64_t(n) << 8) | std::uint64_t(sign > 0 ? 1 : 0);
        PlanEntry& e = plans_[key];
        if (!e.plan) {
            e.total = d == 1 ? std::size_t(n) : std::size_t(n) * n;
            e.in = fftw_alloc_complex(e.total);
            e.out = fftw_alloc_complex(e.total);
            const int dir = sign > 0 ? FFTW_BACKWARD : FFTW_FORWARD;
            e.plan = d == 1 ? fftw_plan_dft_1d(n, e.in, e.out, dir, FFTW_ESTIMATE)
                            : fftw_plan_dft_2d(n, n, e.in, e.out, dir, FFTW_ESTIMATE);
        }
        std::memcpy(e.in, src, e.total * sizeof(cplx));
        fftw_execute(e.plan);
        std::memcpy(dst, e.out, e.total * sizeof(cplx));
    }

private:
    FftCache() = default;
    ~FftCache() {
        for (auto& [key, e] : plans_) {
            if (e.plan) fftw_destroy_plan(e.plan);
            if (e.in) fftw_free(e.in);
            if (e.out) fftw_free(e.out);
        }
    }
    std::mutex mu_;
    std::unordered_map<std::uint64_t, PlanEntry> plans_;
};

}  // namespace

/// Unnormalized DFT in FFTW index order; sign < 0 is e^{-2 pi i jk/n}.
void dft(int d, int n, int sign, const cplx* in, cplx* out) {
    FftCache::instance().execute(d, n, sign, in, out);
}

}  // namespace tfwave::detail

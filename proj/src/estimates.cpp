#include "tfwave/estimates.hpp"

namespace tfwave {

namespace {

double inv(double p) { return is_inf(p) ? 0.0 : 1.0 / p; }

double scaled_exponent(double p, int n) { return is_inf(p) ? kInf : p * n; }

}  // namespace

RatioReport check_product_estimate(const std::vector<GridFunction>& us, double p, double r,
                                   double q, double s, const Window& g, ProductSpace space,
                                   double gamma) {
    if (us.empty()) throw ConfigError("check_product_estimate: empty factor list");
    const int N = int(us.size());
    require_banach_exponent(p, "product estimate: p");
    require_banach_exponent(r, "product estimate: r");
    require_banach_exponent(q, "product estimate: q");
    if (s < 0.0) throw ExponentMismatch("product estimate requires s >= 0");
    if (space == ProductSpace::amalgam && gamma < 0.0)
        throw ExponentMismatch("amalgam product estimate requires gamma >= 0");
    if (std::abs(N * inv(q) - (N - 1 + inv(r))) > 1e-9)
        throw ExponentMismatch("product estimate numerology N/q = N-1+1/r violated");

    GridFunction prod = us[0];
    for (int i = 1; i < N; ++i) prod = mul(prod, us[i]);

    RatioReport rep;
    const double np = scaled_exponent(p, N);
    if (space == ProductSpace::modulation) {
        rep.lhs = modulation_norm(prod, g, ModulationSpec{p, r, s});
        rep.rhs = 1.0;
        for (const GridFunction& u : us) rep.rhs *= modulation_norm(u, g, ModulationSpec{np, q, s});
    } else {
        rep.lhs = amalgam_norm(prod, g, AmalgamSpec{r, s, p, gamma});
        rep.rhs = 1.0;
        for (const GridFunction& u : us)
            rep.rhs *= amalgam_norm(u, g, AmalgamSpec{q, s, np, gamma / N});
    }
    rep.ratio = safe_ratio(rep.lhs, rep.rhs);
    return rep;
}

std::pair<double, double> check_embedding(const GridFunction& f, double r, double q, double s,
                                          double gamma, double p, const Window& g) {
    const int d = f.spec().d();
    if (!(d * inv(q) - d * inv(r) < 1.0))
        throw EmbeddingConditionFailed("embedding requires d/q - d/r < 1");
    double lhs = amalgam_norm(f, g, AmalgamSpec{q, s - 1.0, p, gamma});
    double rhs = amalgam_norm(f, g, AmalgamSpec{r, s, p, gamma});
    return {lhs, rhs};
}

GridFunction spectral_derivative(const GridFunction& f, int a0, int a1) {
    if (f.domain() != Domain::spatial)
        throw DomainMismatch("spectral_derivative expects a spatial function");
    GridFunction fh = forward_fourier(f);
    const GridSpec& s = f.spec();
    const cplx two_pi_i{0.0, 2.0 * std::numbers::pi};
    for (std::size_t i = 0; i < fh.size(); ++i) {
        Point xi = s.xi_point(i);
        cplx factor{1.0, 0.0};
        for (int j = 0; j < a0; ++j) factor *= two_pi_i * xi[0];
        for (int j = 0; j < a1; ++j) factor *= two_pi_i * xi[1];
        fh[i] *= factor;
    }
    return inverse_fourier(fh);
}

L3Report lemma_l3_bound(const GridFunction& f, double p, double R, int k) {
    require_banach_exponent(p, "lemma_l3_bound: p");
    if (f.domain() != Domain::spatial) throw DomainMismatch("lemma_l3_bound expects a spatial function");
    if (k < 0) throw ConfigError("lemma_l3_bound: k must be nonnegative");

    const GridSpec& s = f.spec();
    double total = 0.0;
    Point center{0.0, 0.0};
    for (std::size_t i = 0; i < f.size(); ++i) {
        double m = std::abs(f[i]);
        Point x = s.x_point(i);
        total += m;
        center[0] += m * x[0];
        center[1] += m * x[1];
    }
    if (total == 0.0) return {};
    center[0] /= total;
    center[1] /= total;

    double outside = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        Point x = s.x_point(i);
        double dx0 = x[0] - center[0];
        double dx1 = x[1] - center[1];
        if (dx0 * dx0 + dx1 * dx1 > R * R) outside += std::abs(f[i]);
    }
    if (outside / total > 1e-10)
        throw SupportTooLarge("lemma_l3_bound: relative mass outside B(y,R) exceeds 1e-10");

    L3Report rep;
    rep.lhs = fl_norm(f, p, 0.0);
    for (int a0 = 0; a0 <= 2 * k; ++a0) {
        if (s.d() == 1) {
            rep.rhs = std::max(rep.rhs, spectral_derivative(f, a0).max_abs());
        } else {
            for (int a1 = 0; a0 + a1 <= 2 * k; ++a1)
                rep.rhs = std::max(rep.rhs, spectral_derivative(f, a0, a1).max_abs());
        }
    }
    rep.ratio = safe_ratio(rep.lhs, rep.rhs);
    return rep;
}

}  // namespace tfwave

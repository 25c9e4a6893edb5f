#include "tfwave/symbols.hpp"

namespace tfwave {

Symbol Symbol::sin_pow(double alpha, double delta) {
    if (!(alpha > 0.0) || alpha > 1.0 || delta > alpha)
        throw InvalidSymbolParams("sin_pow requires 0 < alpha <= 1 and delta <= alpha");
    return Symbol(SinPowParams{alpha, delta});
}

Symbol Symbol::cosine() { return Symbol(CosParams{}); }

Symbol Symbol::wave_cos(double t) { return Symbol(WaveCosParams{t}); }

Symbol Symbol::wave_sinc(double t) { return Symbol(WaveSincParams{t}); }

Symbol Symbol::custom(GridFunction samples) {
    if (samples.domain() != Domain::frequency)
        throw DomainMismatch("Symbol::custom expects frequency samples");
    return Symbol(std::move(samples));
}

cplx Symbol::eval(const Point& xi) const {
    const double rho = std::sqrt(norm_sq(xi));
    if (const auto* sp = std::get_if<SinPowParams>(&kind_)) {
        if (rho == 0.0) return {sp->delta < sp->alpha ? 0.0 : 1.0, 0.0};
        return {std::sin(std::pow(rho, sp->alpha)) / std::pow(rho, sp->delta), 0.0};
    }
    if (std::holds_alternative<CosParams>(kind_)) return {std::cos(rho), 0.0};
    if (const auto* wc = std::get_if<WaveCosParams>(&kind_))
        return {std::cos(2.0 * std::numbers::pi * wc->t * rho), 0.0};
    if (const auto* ws = std::get_if<WaveSincParams>(&kind_)) {
        if (rho == 0.0) return {ws->t, 0.0};
        const double w = 2.0 * std::numbers::pi * rho;
        return {std::sin(w * ws->t) / w, 0.0};
    }
    // Custom: nearest grid sample, zero outside the band.
    const GridFunction& g = std::get<GridFunction>(kind_);
    const GridSpec& s = g.spec();
    auto index = [&s](double c) { return int(std::lround(c * s.l())) + s.n() / 2; };
    int i0 = index(xi[0]);
    if (i0 < 0 || i0 >= s.n()) return {0.0, 0.0};
    if (s.d() == 1) return g[std::size_t(i0)];
    int i1 = index(xi[1]);
    if (i1 < 0 || i1 >= s.n()) return {0.0, 0.0};
    return g[s.flat(i0, i1)];
}

GridFunction Symbol::sample(const GridSpec& spec) const {
    if (const auto* g = std::get_if<GridFunction>(&kind_)) {
        if (g->spec() == spec) return *g;
    }
    return GridFunction::sample(spec, Domain::frequency, [this](const Point& xi) { return eval(xi); });
}

std::string Symbol::name() const {
    if (const auto* sp = std::get_if<SinPowParams>(&kind_)) {
        return "sinpow:" + std::to_string(sp->alpha) + ":" + std::to_string(sp->delta);
    }
    if (std::holds_alternative<CosParams>(kind_)) return "cos";
    if (const auto* wc = std::get_if<WaveCosParams>(&kind_)) return "wavecos:" + std::to_string(wc->t);
    if (const auto* ws = std::get_if<WaveSincParams>(&kind_)) return "wavesinc:" + std::to_string(ws->t);
    return "custom";
}

GridFunction apply_multiplier(const Symbol& sym, const GridFunction& f) {
    if (f.domain() != Domain::spatial)
        throw DomainMismatch("apply_multiplier expects a spatial function");
    GridFunction fh = forward_fourier(f);
    GridFunction sig = sym.sample(f.spec());
    for (std::size_t i = 0; i < fh.size(); ++i) fh[i] *= sig[i];
    return inverse_fourier(fh);
}

std::pair<Symbol, Symbol> split_symbol(const Symbol& sym, const Cutoff& chi, const GridSpec& spec) {
    GridFunction sig = sym.sample(spec);
    GridFunction sing(spec, Domain::frequency);
    GridFunction osc(spec, Domain::frequency);
    for (std::size_t i = 0; i < sig.size(); ++i) {
        double c = chi(std::sqrt(norm_sq(spec.xi_point(i))));
        sing[i] = c * sig[i];
        osc[i] = (1.0 - c) * sig[i];
    }
    return {Symbol::custom(std::move(sing)), Symbol::custom(std::move(osc))};
}

}  // namespace tfwave

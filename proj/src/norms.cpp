#include "tfwave/norms.hpp"

#include <sstream>

namespace tfwave {

namespace {

// Running reduction for (sum v^p cell)^{1/p}, max for p = inf.
class LpAcc {
public:
    LpAcc(double p, double cell) : p_(p), cell_(cell), max_mode_(is_inf(p)) {}

    void add(double v) {
        if (max_mode_) {
            acc_ = std::max(acc_, v);
        } else if (p_ == 1.0) {
            acc_ += v;
        } else if (p_ == 2.0) {
            acc_ += v * v;
        } else {
            acc_ += std::pow(v, p_);
        }
    }

    double value() const { return max_mode_ ? acc_ : std::pow(cell_ * acc_, 1.0 / p_); }

private:
    double p_;
    double cell_;
    bool max_mode_;
    double acc_ = 0.0;
};

double cell_volume(double step, int d) { return d == 1 ? step : step * step; }

}  // namespace

double modulation_norm(const GridFunction& f, const Window& g, const ModulationSpec& spec,
                       const Lattice& lat) {
    spec.validate();
    const int d = f.spec().d();
    const double a_cell = cell_volume(lat.a(), d);
    const double b_cell = cell_volume(lat.b(), d);
    const bool p_max = is_inf(spec.p);

    // inner accumulators, one per xi-node (sum of |V|^p over x, or running max)
    std::vector<double> inner(lat.xi_count(), 0.0);
    detail::stft_rows(f, g, lat, [&](std::size_t, const std::vector<cplx>& row) {
        for (std::size_t q = 0; q < row.size(); ++q) {
            double v = std::abs(row[q]);
            if (p_max)
                inner[q] = std::max(inner[q], v);
            else if (spec.p == 1.0)
                inner[q] += v;
            else if (spec.p == 2.0)
                inner[q] += v * v;
            else
                inner[q] += std::pow(v, spec.p);
        }
    });

    Weight w{spec.s};
    LpAcc outer(spec.q, b_cell);
    for (std::size_t q = 0; q < inner.size(); ++q) {
        double inner_norm = p_max ? inner[q] : std::pow(a_cell * inner[q], 1.0 / spec.p);
        outer.add(w(lat.xi_node(q)) * inner_norm);
    }
    return outer.value();
}

double modulation_norm(const GridFunction& f, const Window& g, const ModulationSpec& spec) {
    return modulation_norm(f, g, spec, Lattice::finest(f.spec()));
}

double amalgam_norm(const GridFunction& f, const Window& g, const AmalgamSpec& spec) {
    spec.validate();
    if (g.kind() != WindowKind::bump)
        throw WindowNotCompactlySupported("amalgam_norm requires a bump window");

    const GridSpec& s = f.spec();
    const Lattice lat = Lattice::finest(s);
    const Weight local{spec.s};
    const Weight global{spec.gamma};
    const double xi_cell = cell_volume(s.dxi(), s.d());
    const double x_cell = cell_volume(s.dx(), s.d());

    LpAcc outer(spec.p, x_cell);
    detail::stft_rows(f, g, lat, [&](std::size_t xf, const std::vector<cplx>& row) {
        // row is F(f conj(T_x g)); the bump is real, so this equals F(f T_x g)
        LpAcc fl(spec.q, xi_cell);
        for (std::size_t q = 0; q < row.size(); ++q) fl.add(local(s.xi_point(q)) * std::abs(row[q]));
        outer.add(global(lat.x_node(xf)) * fl.value());
    });
    return outer.value();
}

double fl_norm(const GridFunction& f, double q, double s) {
    if (f.domain() != Domain::spatial) throw DomainMismatch("fl_norm expects a spatial function");
    return weighted_lp_norm(forward_fourier(f), q, Weight{s});
}

double monitor_norm(const GridFunction& f, const MonitorSpec& spec) {
    if (const auto* m = std::get_if<ModulationSpec>(&spec)) {
        Window g = Window::unit_gaussian(f.spec());
        return modulation_norm(f, g, *m);
    }
    const auto& a = std::get<AmalgamSpec>(spec);
    Window g = Window::bump(f.spec());
    return amalgam_norm(f, g, a);
}

std::string exponent_str(double p) {
    if (is_inf(p)) return "inf";
    std::ostringstream os;
    os << p;
    return os.str();
}

std::string monitor_name(const MonitorSpec& spec) {
    std::ostringstream os;
    if (const auto* m = std::get_if<ModulationSpec>(&spec)) {
        os << "M^{" << exponent_str(m->p) << "," << exponent_str(m->q) << "}_" << m->s;
    } else {
        const auto& a = std::get<AmalgamSpec>(spec);
        os << "W(FL^" << exponent_str(a.q) << "_" << a.s << ", L^" << exponent_str(a.p) << "_"
           << a.gamma << ")";
    }
    return os.str();
}

}  // namespace tfwave

#include "mopquad/integrate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace mopquad {

namespace {

constexpr double xgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr double wgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr double wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct Panel {
    double a, b;
    dd value;
    double err;
    bool operator<(const Panel& o) const { return err < o.err; }
};

Panel gk15(const std::function<double(double)>& f, double a, double b)
{
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fv1[7], fv2[7];
    const double fc = f(c);
    dd kron = ddx::two_prod(fc, wgk[7]);
    double gauss = fc * wg[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = h * xgk[j];
        const double f1 = f(c - dx);
        const double f2 = f(c + dx);
        fv1[j] = f1;
        fv2[j] = f2;
        kron += ddx::two_prod(f1 + f2, wgk[j]);
        if (j % 2 == 1)
            gauss += wg[j / 2] * (f1 + f2);
    }
    const double mean = 0.5 * to_double(kron);
    double resasc = wgk[7] * std::abs(fc - mean);
    for (int j = 0; j < 7; ++j)
        resasc += wgk[j] * (std::abs(fv1[j] - mean) + std::abs(fv2[j] - mean));

    const double ah = std::abs(h);
    double err = std::abs((to_double(kron) - gauss) * h);
    resasc *= ah;
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    return {a, b, kron * dd(h), err};
}

} // namespace

IntegralResult integrate_gk(const std::function<double(double)>& f, double a, double b,
                            const IntegrateOptions& opt)
{
    IntegralResult out;
    if (a == b)
        return out;

    std::priority_queue<Panel> heap;
    Panel first = gk15(f, a, b);
    dd total = first.value;
    double err = first.err;
    double frozen = 0.0; // error of panels too narrow to split
    dd frozen_value(0.0);
    heap.push(first);
    int panels = 1;

    auto done = [&] {
        double tol = std::max(opt.abs_tol, opt.rel_tol * std::abs(to_double(total)));
        return err + frozen <= tol;
    };

    while (!heap.empty() && !done() && panels < opt.max_panels) {
        Panel p = heap.top();
        heap.pop();
        const double mid = 0.5 * (p.a + p.b);
        const double scale = std::max({std::abs(p.a), std::abs(p.b), std::numeric_limits<double>::min()});
        if (std::abs(p.b - p.a) < 64 * std::numeric_limits<double>::epsilon() * scale) {
            err -= p.err;
            frozen += p.err;
            frozen_value += p.value;
            continue;
        }
        Panel l = gk15(f, p.a, mid);
        Panel r = gk15(f, mid, p.b);
        total = total - p.value + l.value + r.value;
        err += l.err + r.err - p.err;
        heap.push(l);
        heap.push(r);
        ++panels;
    }

    // Recompute the sums from the surviving panels to shed cancellation drift.
    dd sum = frozen_value;
    double esum = frozen;
    while (!heap.empty()) {
        sum += heap.top().value;
        esum += heap.top().err;
        heap.pop();
    }
    out.value = sum;
    out.err = esum;
    out.panels = panels;
    out.converged = esum <= std::max(opt.abs_tol, opt.rel_tol * std::abs(to_double(sum)));
    return out;
}

} // namespace mopquad

#include "kglab/oscillatory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "kglab/bessel.hpp"

namespace kg {

namespace {

constexpr int gl_order = 12;
constexpr double gl_node[6] = {0.1252334085114689, 0.3678314989981802,
                               0.5873179542866175, 0.7699026741943047,
                               0.9041172563704749, 0.9815606342467192};
constexpr double gl_weight[6] = {0.2491470458134028, 0.2334925365383548,
                                 0.2031674267230659, 0.1600783285433462,
                                 0.1069393259953184, 0.0471753363865118};

struct Domain {
    double a = 0.0, b = 0.0;
};

Domain kernel_domain(int shell, const CutoffFamily& cut) {
    if (shell < -1) throw ContractViolation("eval_kernel: shell must be >= -1");
    Domain d;
    if (shell == -1) {
        d.a = 0.0;
        d.b = cut.support_end / 2.0;
    } else {
        d.a = cut.plateau_end * std::ldexp(1.0, shell - 1);
        d.b = cut.support_end * std::ldexp(1.0, shell);
    }
    return d;
}

double cutoff_value(int shell, double r, const CutoffFamily& cut) {
    return shell == -1 ? cut.bump(2.0 * r) : cut.shell(shell, r);
}

// GL nodes over [a,b] split into m panels; weight folds in 2 pi r psi(r) and
// the oscillatory factor, leaving only J0(r x) per target radius.
void build_level(const KernelQuery& q, const CutoffFamily& cut, double a,
                 double b, int m, std::vector<double>& nodes,
                 std::vector<cplx>& base) {
    nodes.clear();
    base.clear();
    nodes.reserve(static_cast<size_t>(m) * gl_order);
    base.reserve(static_cast<size_t>(m) * gl_order);
    double h = (b - a) / m;
    double n2 = static_cast<double>(q.n) * q.n;
    for (int p = 0; p < m; ++p) {
        double c = a + (p + 0.5) * h;
        for (int j = 0; j < gl_order / 2; ++j)
            for (int s : {-1, 1}) {
                double r = c + s * 0.5 * h * gl_node[j];
                double psi = cutoff_value(q.shell, r, cut);
                if (psi == 0.0 && r != 0.0) {
                    // keep the node so levels stay comparable
                    nodes.push_back(r);
                    base.push_back(cplx(0.0, 0.0));
                    continue;
                }
                double phase = q.sign * q.t * std::sqrt(1.0 + r * r + n2);
                cplx f = std::polar(2.0 * pi * r * psi * 0.5 * h * gl_weight[j],
                                    phase);
                nodes.push_back(r);
                base.push_back(f);
            }
    }
}

void accumulate(const std::vector<double>& nodes, const std::vector<cplx>& base,
                const std::vector<double>& radii, std::vector<cplx>& out) {
    out.assign(radii.size(), cplx(0.0, 0.0));
    for (size_t ix = 0; ix < radii.size(); ++ix) {
        double x = radii[ix];
        cplx acc(0.0, 0.0);
        for (size_t i = 0; i < nodes.size(); ++i)
            acc += base[i] * bessel_j0(nodes[i] * x);
        out[ix] = acc;
    }
}

} // namespace

KernelResult eval_kernel(const KernelQuery& q, double tol,
                         const CutoffFamily& cut) {
    if (!(tol > 0.0) || tol > 1e-4)
        throw ContractViolation("eval_kernel: tol must lie in (0, 1e-4]");
    if (q.sign != 1 && q.sign != -1)
        throw ContractViolation("eval_kernel: sign must be +1 or -1");
    if (!(q.t >= 0.0) || !std::isfinite(q.t))
        throw ContractViolation("eval_kernel: t must be finite and >= 0");
    if (q.radii.empty())
        throw ContractViolation("eval_kernel: no target radii");
    for (double x : q.radii)
        if (!(x >= 0.0) || !std::isfinite(x))
            throw ContractViolation("eval_kernel: radii must be finite and >= 0");

    Domain d = kernel_domain(q.shell, cut);
    double xmax = *std::max_element(q.radii.begin(), q.radii.end());
    double lam_max = std::sqrt(1.0 + d.b * d.b + double(q.n) * q.n);
    double freq = q.t * (d.b / lam_max) + xmax;
    double m0 = std::ceil((d.b - d.a) * freq / pi);
    if (m0 > double(1 << 21))
        throw NumericalFailure(
            "eval_kernel: oscillation rate exceeds the panel budget");
    int m = std::max(8, static_cast<int>(m0));

    std::vector<double> nodes;
    std::vector<cplx> base, prev, cur;
    build_level(q, cut, d.a, d.b, m, nodes, base);
    accumulate(nodes, base, q.radii, prev);
    for (int level = 0; level < 7; ++level) {
        m *= 2;
        build_level(q, cut, d.a, d.b, m, nodes, base);
        accumulate(nodes, base, q.radii, cur);
        double err = 0.0;
        for (size_t i = 0; i < cur.size(); ++i)
            err = std::max(err, std::abs(cur[i] - prev[i]));
        if (err <= tol) {
            KernelResult res;
            res.values = std::move(cur);
            res.certified_error = err;
            res.panels = m;
            return res;
        }
        prev = cur;
    }

    // Budget exhausted: report the dominant panel for the worst radius.
    size_t worst_ix = 0;
    double worst_mag = -1.0;
    for (size_t i = 0; i < prev.size(); ++i)
        if (std::abs(prev[i]) > worst_mag) {
            worst_mag = std::abs(prev[i]);
            worst_ix = i;
        }
    double h = (d.b - d.a) / m;
    double worst_contrib = -1.0;
    int worst_panel = 0;
    for (int p = 0; p < m; ++p) {
        cplx acc(0.0, 0.0);
        for (int j = 0; j < gl_order; ++j)
            acc += base[static_cast<size_t>(p) * gl_order + j] *
                   bessel_j0(nodes[static_cast<size_t>(p) * gl_order + j] *
                             q.radii[worst_ix]);
        if (std::abs(acc) > worst_contrib) {
            worst_contrib = std::abs(acc);
            worst_panel = p;
        }
    }
    std::ostringstream os;
    os << "eval_kernel: no convergence to tol " << tol << " within " << m
       << " panels; worst panel [" << d.a + worst_panel * h << ", "
       << d.a + (worst_panel + 1) * h << "] at |x| = " << q.radii[worst_ix];
    throw NumericalFailure(os.str());
}

double kernel_sup(int shell, int n, double t, double tol, double* arg_radius,
                  const CutoffFamily& cut) {
    Domain d = kernel_domain(shell, cut);
    double lam_max = std::sqrt(1.0 + d.b * d.b + double(n) * n);
    double xmax = 1.15 * t * (d.b / lam_max) + 10.0;
    double dx = pi / (4.0 * d.b);

    KernelQuery q;
    q.shell = shell;
    q.n = n;
    q.t = t;
    q.radii.reserve(static_cast<size_t>(xmax / dx) + 2);
    for (double x = 0.0; x <= xmax; x += dx) q.radii.push_back(x);
    KernelResult scan = eval_kernel(q, tol, cut);

    size_t best = 0;
    for (size_t i = 1; i < scan.values.size(); ++i)
        if (std::abs(scan.values[i]) > std::abs(scan.values[best])) best = i;
    double sup = std::abs(scan.values[best]);
    double arg = q.radii[best];
    double lo = q.radii[best > 0 ? best - 1 : 0];
    double hi = q.radii[std::min(best + 1, q.radii.size() - 1)];

    for (int round = 0; round < 3 && hi > lo; ++round) {
        KernelQuery fine = q;
        fine.radii.clear();
        int pts = 17;
        for (int i = 0; i < pts; ++i)
            fine.radii.push_back(lo + (hi - lo) * i / (pts - 1.0));
        KernelResult res = eval_kernel(fine, tol, cut);
        size_t b2 = 0;
        for (size_t i = 1; i < res.values.size(); ++i)
            if (std::abs(res.values[i]) > std::abs(res.values[b2])) b2 = i;
        if (std::abs(res.values[b2]) > sup) {
            sup = std::abs(res.values[b2]);
            arg = fine.radii[b2];
        }
        double step = (hi - lo) / (pts - 1.0);
        lo = std::max(lo, fine.radii[b2] - step);
        hi = std::min(hi, fine.radii[b2] + step);
    }
    if (arg_radius) *arg_radius = arg;
    return sup;
}

namespace {

void check_decade_stability(const std::vector<BoundRow>& rows,
                            const char* what) {
    double lower = 0.0, upper = 0.0;
    for (const auto& r : rows) {
        if (!std::isfinite(r.ratio)) {
            std::ostringstream os;
            os << what << ": non-finite ratio at k=" << r.k << " n=" << r.n
               << " t=" << r.t;
            throw NumericalFailure(os.str());
        }
        if (r.t >= 1.0 && r.t <= 10.0) lower = std::max(lower, r.ratio);
        if (r.t > 10.0 && r.t <= 100.0) upper = std::max(upper, r.ratio);
    }
    if (lower > 0.0 && upper > 3.0 * lower) {
        std::ostringstream os;
        os << what << ": ratio drift across decades, [1,10] max " << lower
           << " vs (10,100] max " << upper;
        throw NumericalFailure(os.str());
    }
}

} // namespace

std::vector<BoundRow> certify_ring_kernel(const std::vector<int>& n_values,
                                          const std::vector<double>& t_values,
                                          double tol) {
    std::vector<BoundRow> rows;
    for (int n : n_values)
        for (double t : t_values) {
            if (t < 0.0)
                throw ContractViolation("certify_ring_kernel: t must be >= 0");
            BoundRow row;
            row.k = -1;
            row.n = n;
            row.t = t;
            row.sup_abs = kernel_sup(-1, n, t, tol, &row.arg_radius);
            row.bound = (1.0 + std::abs(n)) / (1.0 + t);
            row.ratio = row.sup_abs / row.bound;
            rows.push_back(row);
        }
    check_decade_stability(rows, "certify_ring_kernel");
    return rows;
}

std::vector<BoundRow> certify_shell_kernel(const std::vector<int>& k_values,
                                           const std::vector<int>& n_values,
                                           const std::vector<double>& t_values,
                                           double tol) {
    std::vector<BoundRow> rows;
    for (int k : k_values) {
        if (k < 0)
            throw ContractViolation("certify_shell_kernel: k must be >= 0");
        for (int n : n_values)
            for (double t : t_values) {
                if (!(t > 0.0))
                    throw ContractViolation("certify_shell_kernel: t must be > 0");
                BoundRow row;
                row.k = k;
                row.n = n;
                row.t = t;
                row.sup_abs = kernel_sup(k, n, t, tol, &row.arg_radius);
                row.bound = (std::ldexp(1.0, 2 * k) + double(n) * n) /
                            (std::sqrt(1.0 + double(n) * n) * t);
                row.ratio = row.sup_abs / row.bound;
                rows.push_back(row);
            }
    }
    check_decade_stability(rows, "certify_shell_kernel");
    return rows;
}

} // namespace kg

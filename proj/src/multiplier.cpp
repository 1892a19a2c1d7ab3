#include "kglab/multiplier.hpp"

#include <cmath>

#include "kglab/spectral.hpp"
#include "kglab/transform.hpp"

namespace kg {

cplx SlotSymbol::eval(double z1, double z2, double z3, int sign) const {
    cplx c = sign > 0 ? c_plus : c_minus;
    double v = 1.0;
    for (int i = 0; i < e1; ++i) v *= z1;
    for (int i = 0; i < e2; ++i) v *= z2;
    for (int i = 0; i < e3; ++i) v *= z3;
    if (lam_pow == -1) v /= std::sqrt(1.0 + z1 * z1 + z2 * z2 + z3 * z3);
    return c * v;
}

cplx MultiplierSymbol::eval_channel(double xi1, double xi2, double eta1,
                                    double eta2, int n, int m, int mu,
                                    int nu) const {
    cplx acc(0.0, 0.0);
    for (const auto& t : terms)
        acc += t.a.eval(xi1 - eta1, xi2 - eta2, n - m, mu) *
               t.b.eval(eta1, eta2, m, nu);
    return acc;
}

namespace {

// Dictionary for (u, du/dt, d1 u, d2 u, d3 u) occupying one product slot.
SlotSymbol first_order_slot(int v) {
    SlotSymbol s;
    if (v == 0) { // u -> mu i / (2 Lam)
        s.lam_pow = -1;
        s.c_plus = cplx(0.0, 0.5);
        s.c_minus = cplx(0.0, -0.5);
    } else if (v == 1) { // du/dt -> 1/2
        s.c_plus = s.c_minus = cplx(0.5, 0.0);
    } else { // d_a u -> -mu zeta_a / (2 Lam)
        s.lam_pow = -1;
        (v == 2 ? s.e1 : v == 3 ? s.e2 : s.e3) = 1;
        s.c_plus = cplx(-0.5, 0.0);
        s.c_minus = cplx(0.5, 0.0);
    }
    return s;
}

// Dictionary for the second derivative dd_{jk} u, 0 <= j <= k, (0,0) absent.
SlotSymbol second_order_slot(int j, int k) {
    SlotSymbol s;
    if (j == 0) { // d_k (du/dt) -> i zeta_k / 2, sign-independent
        (k == 1 ? s.e1 : k == 2 ? s.e2 : s.e3) = 1;
        s.c_plus = s.c_minus = cplx(0.0, 0.5);
    } else { // -nu i zeta_j zeta_k / (2 Lam)
        (j == 1 ? s.e1 : j == 2 ? s.e2 : s.e3) += 1;
        (k == 1 ? s.e1 : k == 2 ? s.e2 : s.e3) += 1;
        s.lam_pow = -1;
        s.c_plus = cplx(0.0, -0.5);
        s.c_minus = cplx(0.0, 0.5);
    }
    return s;
}

void scale(SlotSymbol& s, double w) {
    s.c_plus *= w;
    s.c_minus *= w;
}

} // namespace

MultiplierSymbol multiplier_symbols(const NonlinearityCoeffs& coeffs) {
    coeffs.validate();
    MultiplierSymbol M;
    for (int j = 0; j <= 3; ++j)
        for (int k = j; k <= 3; ++k) {
            if (j == 0 && k == 0) continue;
            double w = (j == k) ? 1.0 : 2.0;
            for (int l = 0; l <= 3; ++l) {
                double g = coeffs.g[j][k][l];
                if (g == 0.0) continue;
                // d_l u occupies slot A; l = 0 is the time derivative
                BilinearTerm t{first_order_slot(l == 0 ? 1 : l + 1),
                               second_order_slot(j, k)};
                scale(t.a, w * g);
                M.terms.push_back(t);
            }
            double h = coeffs.h[j][k];
            if (h != 0.0) {
                BilinearTerm t{first_order_slot(0), second_order_slot(j, k)};
                scale(t.a, w * h);
                M.terms.push_back(t);
            }
        }
    for (int a = 0; a <= 4; ++a)
        for (int b = a; b <= 4; ++b) {
            double q = coeffs.q[a][b];
            if (q == 0.0) continue;
            BilinearTerm t{first_order_slot(a), first_order_slot(b)};
            scale(t.a, (a == b ? 1.0 : 2.0) * q);
            M.terms.push_back(t);
        }
    return M;
}

bool symbols_in_family(const MultiplierSymbol& M) {
    auto slot_a_ok = [](const SlotSymbol& s) {
        if (s.lam_pow == 0) return s.degree() == 0;
        return s.lam_pow == -1 && s.degree() <= 1;
    };
    auto slot_b_ok = [&](const SlotSymbol& s) {
        if (slot_a_ok(s)) return true;
        if (s.lam_pow == -1 && s.degree() <= 2) return true;
        return s.lam_pow == 0 && s.degree() <= 1;
    };
    for (const auto& t : M.terms)
        if (!slot_a_ok(t.a) || !slot_b_ok(t.b)) return false;
    return true;
}

Field bilinear_rhs(const MultiplierSymbol& M, const Field& U) {
    const GridSpec& g = U.grid;
    Field Uplus = U;
    dealias_inplace(Uplus);
    Field Uminus = conj_reflect(Uplus);

    std::vector<cplx> acc(g.size(), cplx(0.0, 0.0));
    for (const auto& term : M.terms) {
        std::vector<cplx> a_phys[2], b_phys[2];
        for (int s : {0, 1}) {
            int sign = s == 0 ? 1 : -1;
            const Field& src = s == 0 ? Uplus : Uminus;
            Field fa = apply_multiplier(src, [&](double z1, double z2, double z3) {
                return term.a.eval(z1, z2, z3, sign);
            });
            Field fb = apply_multiplier(src, [&](double z1, double z2, double z3) {
                return term.b.eval(z1, z2, z3, sign);
            });
            a_phys[s] = inverse_transform(fa);
            b_phys[s] = inverse_transform(fb);
        }
        for (int sa : {0, 1})
            for (int sb : {0, 1})
                for (size_t i = 0; i < acc.size(); ++i)
                    acc[i] += a_phys[sa][i] * b_phys[sb][i];
    }
    Field out = forward_transform(g, acc);
    dealias_inplace(out);
    return out;
}

} // namespace kg

#include "ncgeo/roots.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace ncgeo {

namespace {

mpfr_prec_t bits_for(unsigned digits) {
    double b = (digits + 25) * 3.3220;
    return std::max<mpfr_prec_t>(128, static_cast<mpfr_prec_t>(b) + 8);
}

struct Real {
    mpfr_t t;
    explicit Real(mpfr_prec_t p) {
        mpfr_init2(t, p);
        mpfr_set_zero(t, 1);
    }
    Real(const Real& o) {
        mpfr_init2(t, mpfr_get_prec(o.t));
        mpfr_set(t, o.t, MPFR_RNDN);
    }
    Real& operator=(const Real& o) {
        if (this != &o) mpfr_set(t, o.t, MPFR_RNDN);
        return *this;
    }
    ~Real() { mpfr_clear(t); }
};

struct Cplx {
    Real re, im;
    explicit Cplx(mpfr_prec_t p) : re(p), im(p) {}
};

void cadd(Cplx& out, const Cplx& a, const Cplx& b) {
    mpfr_add(out.re.t, a.re.t, b.re.t, MPFR_RNDN);
    mpfr_add(out.im.t, a.im.t, b.im.t, MPFR_RNDN);
}

void csub(Cplx& out, const Cplx& a, const Cplx& b) {
    mpfr_sub(out.re.t, a.re.t, b.re.t, MPFR_RNDN);
    mpfr_sub(out.im.t, a.im.t, b.im.t, MPFR_RNDN);
}

void cmul(Cplx& out, const Cplx& a, const Cplx& b, Real& t1, Real& t2) {
    // out may not alias a or b
    mpfr_mul(t1.t, a.re.t, b.re.t, MPFR_RNDN);
    mpfr_mul(t2.t, a.im.t, b.im.t, MPFR_RNDN);
    mpfr_sub(out.re.t, t1.t, t2.t, MPFR_RNDN);
    mpfr_mul(t1.t, a.re.t, b.im.t, MPFR_RNDN);
    mpfr_mul(t2.t, a.im.t, b.re.t, MPFR_RNDN);
    mpfr_add(out.im.t, t1.t, t2.t, MPFR_RNDN);
}

void cdiv(Cplx& out, const Cplx& a, const Cplx& b, Real& t1, Real& t2, Real& den) {
    mpfr_mul(t1.t, b.re.t, b.re.t, MPFR_RNDN);
    mpfr_mul(t2.t, b.im.t, b.im.t, MPFR_RNDN);
    mpfr_add(den.t, t1.t, t2.t, MPFR_RNDN);
    mpfr_mul(t1.t, a.re.t, b.re.t, MPFR_RNDN);
    mpfr_mul(t2.t, a.im.t, b.im.t, MPFR_RNDN);
    mpfr_add(t1.t, t1.t, t2.t, MPFR_RNDN);
    mpfr_div(t1.t, t1.t, den.t, MPFR_RNDN);
    mpfr_mul(t2.t, a.im.t, b.re.t, MPFR_RNDN);
    mpfr_fms(t2.t, a.re.t, b.im.t, t2.t, MPFR_RNDN);  // a.re*b.im - a.im*b.re
    mpfr_neg(t2.t, t2.t, MPFR_RNDN);
    mpfr_div(out.im.t, t2.t, den.t, MPFR_RNDN);
    mpfr_set(out.re.t, t1.t, MPFR_RNDN);
}

void cabs(Real& out, const Cplx& a, Real& t1, Real& t2) {
    mpfr_mul(t1.t, a.re.t, a.re.t, MPFR_RNDN);
    mpfr_mul(t2.t, a.im.t, a.im.t, MPFR_RNDN);
    mpfr_add(out.t, t1.t, t2.t, MPFR_RNDN);
    mpfr_sqrt(out.t, out.t, MPFR_RNDN);
}

// complex Horner over real coefficients
void horner(Cplx& out, const std::vector<Real>& coeffs, const Cplx& z, mpfr_prec_t prec) {
    Real t1(prec), t2(prec);
    Cplx acc(prec), tmp(prec);
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        cmul(tmp, acc, z, t1, t2);
        mpfr_add(tmp.re.t, tmp.re.t, coeffs[i].t, MPFR_RNDN);
        acc = tmp;
    }
    out = acc;
}

std::vector<Cplx> aberth(const Poly& f, mpfr_prec_t prec) {
    const std::size_t n = static_cast<std::size_t>(f.degree());
    std::vector<Real> c, dc;
    for (int i = 0; i <= f.degree(); ++i) {
        Real r(prec);
        mpfr_set_q(r.t, f.coeff(i).get_mpq_t(), MPFR_RNDN);
        c.push_back(r);
    }
    Poly fd = f.derivative();
    for (int i = 0; i <= fd.degree(); ++i) {
        Real r(prec);
        mpfr_set_q(r.t, fd.coeff(i).get_mpq_t(), MPFR_RNDN);
        dc.push_back(r);
    }

    // Cauchy-style radius, double precision is plenty for starting points
    double an = std::abs(f.leading().get_d());
    double radius = 0.0;
    for (int i = 0; i < f.degree(); ++i)
        radius = std::max(radius, std::abs(f.coeff(i).get_d()) / an);
    radius += 1.0;

    std::vector<Cplx> z;
    z.reserve(n);
    Real angle(prec), pi(prec), s(prec), co(prec);
    mpfr_const_pi(pi.t, MPFR_RNDN);
    for (std::size_t k = 0; k < n; ++k) {
        Cplx zk(prec);
        // 2*pi*(k + 0.3777)/n, offset breaks root symmetry in the start set
        mpfr_set_d(angle.t, (static_cast<double>(k) + 0.3777) * 2.0 / static_cast<double>(n),
                   MPFR_RNDN);
        mpfr_mul(angle.t, angle.t, pi.t, MPFR_RNDN);
        mpfr_sin_cos(s.t, co.t, angle.t, MPFR_RNDN);
        mpfr_mul_d(zk.re.t, co.t, radius, MPFR_RNDN);
        mpfr_mul_d(zk.im.t, s.t, radius, MPFR_RNDN);
        z.push_back(zk);
    }

    Real t1(prec), t2(prec), den(prec), corr_abs(prec), zmag(prec), tol(prec);
    mpfr_set_ui_2exp(tol.t, 1, -(prec - 10), MPFR_RNDN);
    Cplx pv(prec), dv(prec), w(prec), sum(prec), diff(prec), invd(prec), one(prec), tmp(prec),
        corr(prec);
    mpfr_set_ui(one.re.t, 1, MPFR_RNDN);

    for (int iter = 0; iter < 500; ++iter) {
        bool done = true;
        for (std::size_t k = 0; k < n; ++k) {
            horner(pv, c, z[k], prec);
            if (mpfr_zero_p(pv.re.t) && mpfr_zero_p(pv.im.t)) continue;
            horner(dv, dc, z[k], prec);
            cdiv(w, pv, dv, t1, t2, den);
            mpfr_set_zero(sum.re.t, 1);
            mpfr_set_zero(sum.im.t, 1);
            for (std::size_t j = 0; j < n; ++j) {
                if (j == k) continue;
                csub(diff, z[k], z[j]);
                cdiv(invd, one, diff, t1, t2, den);
                cadd(sum, sum, invd);
            }
            cmul(tmp, w, sum, t1, t2);
            csub(tmp, one, tmp);
            cdiv(corr, w, tmp, t1, t2, den);
            csub(z[k], z[k], corr);
            cabs(corr_abs, corr, t1, t2);
            cabs(zmag, z[k], t1, t2);
            mpfr_add_ui(zmag.t, zmag.t, 1, MPFR_RNDN);
            mpfr_mul(zmag.t, zmag.t, tol.t, MPFR_RNDN);
            if (mpfr_cmp(corr_abs.t, zmag.t) > 0) done = false;
        }
        if (done) break;
    }
    return z;
}

std::string format_real(const mpfr_t v, unsigned digits) {
    char buf[256];
    mpfr_snprintf(buf, sizeof buf, "%.*Re", static_cast<int>(digits) - 1, v);
    return buf;
}

}  // namespace

std::vector<RootReport> find_roots(const Poly& p, unsigned digits) {
    std::vector<RootReport> out;
    if (p.degree() < 1) return out;
    const mpfr_prec_t prec = bits_for(digits);
    const Poly monic = p.monic();

    std::vector<Real> mc;
    for (int i = 0; i <= monic.degree(); ++i) {
        Real r(prec);
        mpfr_set_q(r.t, monic.coeff(i).get_mpq_t(), MPFR_RNDN);
        mc.push_back(r);
    }

    Real t1(prec), t2(prec), resid(prec), snap(prec);
    // roots with |im| below 10^-(digits/2) are treated as real
    mpfr_set_ui(snap.t, 10, MPFR_RNDN);
    mpfr_pow_si(snap.t, snap.t, -static_cast<long>(digits / 2), MPFR_RNDN);

    auto factors = monic.squarefree_factors();
    std::vector<std::pair<Cplx, int>> all;
    for (std::size_t k = 0; k < factors.size(); ++k) {
        const Poly& f = factors[k];
        if (f.degree() < 1) continue;
        int mult = static_cast<int>(k) + 1;
        if (f.degree() == 1) {
            Cplx z(prec);
            Rational root = -f.coeff(0) / f.coeff(1);
            mpfr_set_q(z.re.t, root.get_mpq_t(), MPFR_RNDN);
            all.emplace_back(z, mult);
        } else {
            for (auto& z : aberth(f, prec)) all.emplace_back(z, mult);
        }
    }

    for (auto& entry : all) {
        mpfr_abs(t1.t, entry.first.im.t, MPFR_RNDN);
        if (mpfr_cmp(t1.t, snap.t) < 0) mpfr_set_zero(entry.first.im.t, 1);
    }
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
        int c = mpfr_cmp(a.first.re.t, b.first.re.t);
        if (c != 0) return c < 0;
        return mpfr_cmp(a.first.im.t, b.first.im.t) < 0;
    });

    for (auto& [z, mult] : all) {
        RootReport r;
        r.multiplicity = mult;
        r.re = mpfr_get_d(z.re.t, MPFR_RNDN);
        r.im = mpfr_get_d(z.im.t, MPFR_RNDN);
        if (mpfr_zero_p(z.im.t)) {
            r.value = format_real(z.re.t, digits);
        } else {
            char buf[512];
            mpfr_snprintf(buf, sizeof buf, "%.*Re%+.*Rei", static_cast<int>(digits) - 1, z.re.t,
                          static_cast<int>(digits) - 1, z.im.t);
            r.value = buf;
        }
        Cplx pv(prec);
        horner(pv, mc, z, prec);
        cabs(resid, pv, t1, t2);
        r.residual = mpfr_get_d(resid.t, MPFR_RNDN);
        r.residual_str = format_real(resid.t, 3);
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace ncgeo

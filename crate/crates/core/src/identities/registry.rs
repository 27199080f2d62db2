//! The identity catalogue. Each record states its relation in ASCII (A, P,
//! Q, L are the triangles; Y the complete Bell polynomials; D, I, M, B the
//! derangement / involution / fixed-point-free involution / Bell sequences;
//! B_j(y) the Bell polynomials; lam and y ring indeterminates) and builds
//! its two sides through independent public APIs.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{
    IdentityRecord, Mode, Param, Params, PointPair, Registry, Sides, SuiteContext, WeightsKind,
};
use crate::combinatorics::charlier;
use crate::egf::fibonacci_extraction;
use crate::error::Result;
use crate::ring::{
    binomial, cayley_power, double_factorial_odd, factorial, int_pow, poly_binomial, rat, rat_big,
    Poly, Rat, Var,
};
use crate::singleton::{l_explicit, q_formulas, QRoute};

const fn p_sym(name: &'static str) -> Param {
    Param {
        name,
        default_max: 6,
        hard_max: 8,
    }
}

const fn p_num(name: &'static str) -> Param {
    Param {
        name,
        default_max: 10,
        hard_max: 40,
    }
}

const fn p_pts(name: &'static str) -> Param {
    Param {
        name,
        default_max: 6,
        hard_max: 40,
    }
}

const SYM_NM: &[Param] = &[p_sym("n"), p_sym("m")];
const SYM_NMK: &[Param] = &[p_sym("n"), p_sym("m"), p_sym("k")];
const NUM_N: &[Param] = &[p_num("n")];
const NUM_NM: &[Param] = &[p_num("n"), p_num("m")];
const NUM_NK: &[Param] = &[p_num("n"), p_num("k")];
const NUM_NMK: &[Param] = &[p_num("n"), p_num("m"), p_num("k")];
const PTS_NM: &[Param] = &[p_pts("n"), p_pts("m")];

fn crat(n: usize, k: usize) -> Rat {
    rat_big(binomial(n, k))
}

fn fct(n: usize) -> Rat {
    rat_big(factorial(n))
}

fn cay(base: usize, exp: i64) -> Rat {
    rat_big(cayley_power(base, exp))
}

fn upow(base: usize, exp: usize) -> Rat {
    rat_big(int_pow(&BigInt::from(base), exp))
}

fn rpow(r: &Rat, exp: usize) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..exp {
        acc *= r;
    }
    acc
}

/// C(lam + shift, k) as a polynomial in lam.
fn c_lam(shift: i64, k: usize) -> Poly {
    poly_binomial(&(&Poly::lambda() + &Poly::from_int(shift)), k)
}

/// C(y + shift, k) as a polynomial in y.
fn c_y(shift: i64, k: usize) -> Poly {
    poly_binomial(&(&Poly::y() + &Poly::from_int(shift)), k)
}

fn signed_add(acc: Poly, term: Poly, negative: bool) -> Poly {
    if negative {
        &acc - &term
    } else {
        &acc + &term
    }
}

fn num_sides(lhs: Rat, rhs: Rat) -> Sides {
    Sides::Polys {
        lhs: Poly::constant(lhs),
        rhs: Poly::constant(rhs),
    }
}

// ---- weighted-triangle identities (symbolic t) ----

fn lhs_lambda_row(ctx: &SuiteContext, n: usize, m: usize) -> Poly {
    let mut lhs = Poly::zero();
    for k in 0..=n {
        lhs = &lhs + &(&c_lam(k as i64 - 1, k) * ctx.a(n + m, m + k));
    }
    lhs
}

fn s_2_2a(ctx: &SuiteContext, p: &Params) -> Sides {
    let (n, m) = (p.n, p.m);
    let t1 = Poly::t(1);
    let lhs = lhs_lambda_row(ctx, n, m);
    let mut rhs = Poly::zero();
    for k in 0..=n {
        let b = &c_lam(n as i64, k) * &c_lam(n as i64 - k as i64 - 1, n - k);
        rhs = &rhs + &(&b * &(ctx.a(m + k, m) * &t1.pow(n - k)));
    }
    debug_assert!(lhs.degree_in(Var::Lambda) as usize <= n);
    debug_assert!(rhs.degree_in(Var::Lambda) as usize <= n);
    Sides::Polys { lhs, rhs }
}

fn s_2_2b(ctx: &SuiteContext, p: &Params) -> Sides {
    let (n, m) = (p.n, p.m);
    let t1 = Poly::t(1);
    let lhs = lhs_lambda_row(ctx, n, m);
    let mut rhs = Poly::zero();
    for k in 0..=n {
        let term = &(&c_lam(n as i64, k) * ctx.y(m + k)) * &t1.pow(n - k + 1);
        rhs = signed_add(rhs, term, (n - k) % 2 == 1);
    }
    debug_assert!(rhs.degree_in(Var::Lambda) as usize <= n);
    Sides::Polys { lhs, rhs }
}

fn s_2_3a(ctx: &SuiteContext, p: &Params) -> Sides {
    let (n, m) = (p.n, p.m);
    let t1 = Poly::t(1);
    let lhs = ctx.a(n + m, m).clone();
    let mut rhs = Poly::zero();
    for k in 0..=n {
        let term = &ctx.y(m + k).scale(&crat(n, k)) * &t1.pow(n - k + 1);
        rhs = signed_add(rhs, term, (n - k) % 2 == 1);
    }
    Sides::Polys { lhs, rhs }
}

fn s_2_3b(ctx: &SuiteContext, p: &Params) -> Sides {
    // cleared of the 1/t1 factor
    let (n, m) = (p.n, p.m);
    let t1 = Poly::t(1);
    let mut row = Poly::zero();
    for k in 0..=n {
        row = &row + ctx.a(n + m, m + k);
    }
    let lhs = &t1 * &row;
    let rhs = &(&t1 * ctx.y(n + m + 1)) - ctx.a(n + m + 1, m);
    Sides::Polys { lhs, rhs }
}

fn s_2_3c(ctx: &SuiteContext, p: &Params) -> Sides {
    // cleared of the 1/t1^2 factor
    let (n, m) = (p.n, p.m);
    let t1 = Poly::t(1);
    let mut row = Poly::zero();
    for k in 0..=n {
        row = &row + &ctx.a(n + m, m + k).scale(&rat(k as i64 + 1));
    }
    let lhs = &t1.pow(2) * &row;
    let rhs = &(ctx.a(n + m + 2, m) - &(&t1 * ctx.y(n + m + 2)))
        + &(&t1.pow(2) * &ctx.y(n + m + 1).scale(&rat(n as i64 + 2)));
    Sides::Polys { lhs, rhs }
}

fn s_2_3d(ctx: &SuiteContext, p: &Params) -> Sides {
    // cleared of the 1/t1^2 factor
    let (n, m) = (p.n, p.m);
    let t1 = Poly::t(1);
    let mut row = Poly::zero();
    for k in 0..=n {
        row = &row + &ctx.a(n + m, m + k).scale(&rat((n - k) as i64 + 1));
    }
    let lhs = &t1.pow(2) * &row;
    let rhs = &(&(&t1 * ctx.y(n + m + 2)) - ctx.a(n + m + 2, m))
        - &(&t1 * &ctx.a(n + m + 1, m).scale(&rat(n as i64 + 2)));
    Sides::Polys { lhs, rhs }
}

fn s_2_4(ctx: &SuiteContext, p: &Params) -> Sides {
    let (n, m, k) = (p.n, p.m, p.k);
    let t1 = Poly::t(1);
    let lhs = ctx.a(n + m + k, m + k).clone();
    let mut rhs = Poly::zero();
    for j in 0..=m {
        let term = &ctx.a(n + k + j, k).scale(&crat(m, j)) * &t1.pow(m - j);
        rhs = &rhs + &term;
    }
    Sides::Polys { lhs, rhs }
}

fn s_2_5(ctx: &SuiteContext, p: &Params) -> Sides {
    let (n, m) = (p.n, p.m);
    let t1 = Poly::t(1);
    let y = Poly::y();
    let yp1 = &y + &Poly::one();
    let mut lhs = Poly::zero();
    for k in 0..=n {
        lhs = &lhs + &(&ctx.a(n + m, m + k).scale(&crat(n, k)) * &y.pow(k));
    }
    let mut rhs = Poly::zero();
    for k in 0..=n {
        let term = &(&ctx.y(m + k).scale(&crat(n, k)) * &yp1.pow(k)) * &t1.pow(n - k + 1);
        rhs = signed_add(rhs, term, (n - k) % 2 == 1);
    }
    Sides::Polys { lhs, rhs }
}

fn s_2_6(ctx: &SuiteContext, p: &Params) -> Sides {
    let (n, m) = (p.n, p.m);
    let t1 = Poly::t(1);
    let y = Poly::y();
    let ymt1 = &y - &t1;
    let mut lhs = Poly::zero();
    for k in 0..=n {
        lhs = &lhs + &(&ctx.a(m + k, m).scale(&crat(n, k)) * &y.pow(n - k));
    }
    let mut rhs = Poly::zero();
    for k in 0..=n {
        rhs = &rhs + &(&ctx.y(m + k).scale(&crat(n, k)) * &ymt1.pow(n - k));
    }
    rhs = &t1 * &rhs;
    Sides::Polys { lhs, rhs }
}

fn s_2_7a(ctx: &SuiteContext, p: &Params) -> Sides {
    let (n, m) = (p.n, p.m);
    let t1 = Poly::t(1);
    let mut lhs = Poly::zero();
    for k in 0..=n {
        let term = ctx.a(n + m, m + k).scale(&crat(n, k));
        lhs = signed_add(lhs, term, (n - k) % 2 == 1);
    }
    let rhs = ctx.y(m) * &t1.pow(n + 1);
    Sides::Polys { lhs, rhs }
}

fn s_2_7b(ctx: &SuiteContext, p: &Params) -> Sides {
    // both sides multiplied by t1 to stay polynomial
    let (n, m) = (p.n, p.m);
    let t1 = Poly::t(1);
    let mut lhs = Poly::zero();
    for k in 0..=n {
        lhs = &lhs + &(&ctx.a(m + k, m).scale(&crat(n, k)) * &t1.pow(n - k));
    }
    let rhs = &t1 * ctx.y(m + n);
    Sides::Polys { lhs, rhs }
}

fn s_2_7(ctx: &SuiteContext, p: &Params) -> Sides {
    let (n, m) = (p.n, p.m);
    let t1 = Poly::t(1);
    let y = Poly::y();
    let yp1 = &y + &Poly::one();
    let yt1 = &y * &t1;
    let mut lhs = Poly::zero();
    for k in 0..=n {
        let term = &(&ctx.a(m + k, m).scale(&crat(n, k)) * &yp1.pow(k)) * &yt1.pow(n - k);
        lhs = &lhs + &term;
    }
    let mut rhs = Poly::zero();
    for k in 0..=n {
        rhs = &rhs + &(&ctx.a(n + m, m + k).scale(&crat(n, k)) * &y.pow(k));
    }
    Sides::Polys { lhs, rhs }
}

// ---- permutation specialization ----

fn s_3_1(ctx: &SuiteContext, p: &Params) -> Sides {
    let (n, m) = (p.n, p.m);
    let y = Poly::y();
    let yp1 = &y + &Poly::one();
    let mut lhs = Poly::zero();
    for k in 0..=n {
        lhs = &lhs + &y.pow(k).scale(&(crat(n, k) * ctx.p(n + m, m + k)));
    }
    let mut rhs = Poly::zero();
    for k in 0..=n {
        let term = yp1.pow(k).scale(&(crat(n, k) * fct(m + k)));
        rhs = signed_add(rhs, term, (n - k) % 2 == 1);
    }
    Sides::Polys { lhs, rhs }
}

fn s_3_2(ctx: &SuiteContext, p: &Params) -> Sides {
    let (n, m) = (p.n, p.m);
    let y = Poly::y();
    let ym1 = &y - &Poly::one();
    let mut lhs = Poly::zero();
    for k in 0..=n {
        lhs = &lhs + &y.pow(n - k).scale(&(crat(n, k) * ctx.p(m + k, m)));
    }
    let mut rhs = Poly::zero();
    for k in 0..=n {
        rhs = &rhs + &ym1.pow(n - k).scale(&(crat(n, k) * fct(m + k)));
    }
    Sides::Polys { lhs, rhs }
}

fn s_3_charlier1(_ctx: &SuiteContext, p: &Params) -> Sides {
    // rational in y: check at y = 0..n+2, all clear of the pole at -1
    let (n, m) = (p.n, p.m);
    let mut pairs = Vec::with_capacity(n + 3);
    for y0 in 0..=(n + 2) {
        let at = rat(y0 as i64);
        let yp1 = &at + &rat(1);
        let mut lhs = Rat::zero();
        for k in 0..=n {
            let term = crat(n, k) * fct(m + k) * rpow(&yp1, k);
            lhs = if (n - k) % 2 == 1 { lhs - term } else { lhs + term };
        }
        let v = -(Rat::one() / &yp1);
        let ch = charlier(n, &Poly::from_int(m as i64 + 1), &Poly::constant(v))
            .as_rational()
            .expect("constant arguments give a constant");
        let rhs = fct(m) * rpow(&yp1, n) * ch;
        pairs.push(PointPair { at, lhs, rhs });
    }
    Sides::Points { pairs }
}

fn s_3_charlier2(ctx: &SuiteContext, p: &Params) -> Sides {
    let (n, m) = (p.n, p.m);
    let y = Poly::y();
    let mut lhs = Poly::zero();
    for k in 0..=n {
        lhs = &lhs + &y.pow(n - k).scale(&(crat(n, k) * ctx.p(m + k, m)));
    }
    let rhs = charlier(n, &Poly::from_int(m as i64 + 1), &(&y - &Poly::one())).scale(&fct(m));
    Sides::Polys { lhs, rhs }
}

fn s_3_d1(ctx: &SuiteContext, p: &Params) -> Sides {
    let (n, m) = (p.n, p.m);
    let mut lhs = Rat::zero();
    for k in 0..=n {
        lhs += crat(n, k) * ctx.p(n + m, m + k) * ctx.d(k);
    }
    let mut rhs = Rat::zero();
    for k in 0..=n {
        let term = crat(n, k) * fct(m + k) * fct(k);
        rhs = if (n - k) % 2 == 1 { rhs - term } else { rhs + term };
    }
    num_sides(lhs, rhs)
}

fn s_3_d2(ctx: &SuiteContext, p: &Params) -> Sides {
    let (n, m) = (p.n, p.m);
    let mut lhs = Rat::zero();
    let mut rhs = Rat::zero();
    for k in 0..=n {
        lhs += crat(n, k) * ctx.p(m + k, m) * fct(n - k);
        rhs += crat(n, k) * fct(m + k) * ctx.d(n - k);
    }
    num_sides(lhs, rhs)
}

fn s_3_b1(ctx: &SuiteContext, p: &Params) -> Sides {
    let (n, m) = (p.n, p.m);
    let mut lhs = Rat::zero();
    for k in 0..=n {
        lhs += crat(n, k) * ctx.p(n + m, m + k) * ctx.b(k);
    }
    let mut rhs = Rat::zero();
    for k in 0..=n {
        let term = crat(n, k) * fct(m + k) * ctx.b(k + 1);
        rhs = if (n - k) % 2 == 1 { rhs - term } else { rhs + term };
    }
    num_sides(lhs, rhs)
}

fn s_3_b2(ctx: &SuiteContext, p: &Params) -> Sides {
    let (n, m) = (p.n, p.m);
    let mut lhs = Rat::zero();
    let mut rhs = Rat::zero();
    for k in 0..=n {
        lhs += crat(n, k) * ctx.p(m + k, m) * ctx.b(n - k + 1);
        rhs += crat(n, k) * fct(m + k) * ctx.b(n - k);
    }
    num_sides(lhs, rhs)
}

fn s_3_riordan(_ctx: &SuiteContext, p: &Params) -> Sides {
    let n = p.n;
    let mut lhs = Rat::zero();
    for k in 0..=n {
        lhs += crat(n, k) * fct(k + 1) * upow(n + 1, n - k);
    }
    num_sides(lhs, upow(n + 1, n + 1))
}

fn s_3_3pre(ctx: &SuiteContext, p: &Params) -> Sides {
    let n = p.n;
    let mut lhs = Rat::zero();
    for k in 0..=n {
        let term = crat(n, k) * ctx.p(n + 1, k + 1) * upow(n + 2, k) * upow(n + 1, n - k);
        lhs = if (n - k) % 2 == 1 { lhs - term } else { lhs + term };
    }
    num_sides(lhs, upow(n + 1, n + 1))
}

fn s_3_3(ctx: &SuiteContext, p: &Params) -> Sides {
    let n = p.n;
    let mut lhs = Rat::zero();
    for k in 0..=n {
        lhs += crat(n, k) * (ctx.d(k) + ctx.d(k + 1)) * upow(n + 2, n - k);
    }
    num_sides(lhs, upow(n + 1, n + 1))
}

fn s_3_4(ctx: &SuiteContext, p: &Params) -> Sides {
    let n = p.n;
    let mut lhs = Rat::zero();
    for k in 0..=n {
        lhs += crat(n, k) * ctx.d(k + 1) * upow(n + 1, n - k);
    }
    num_sides(lhs, upow(n, n + 1))
}

fn s_3_fib(_ctx: &SuiteContext, p: &Params) -> Sides {
    let (lhs, rhs) = fibonacci_extraction(p.n);
    num_sides(lhs, rhs)
}

fn s_3_de(ctx: &SuiteContext, p: &Params) -> Sides {
    let n = p.n;
    let mut lhs = Rat::zero();
    for k in 0..=n {
        lhs += rat(k as i64 + 1) * ctx.p(n, k);
    }
    num_sides(lhs, ctx.d(n + 2))
}

// ---- involution specialization ----

fn s_4_2_1(ctx: &SuiteContext, p: &Params) -> Sides {
    num_sides(ctx.q(p.n + p.k, p.k), q_formulas(p.n, p.k, QRoute::InvolutionSum))
}

fn s_4_2_2(ctx: &SuiteContext, p: &Params) -> Sides {
    num_sides(ctx.q(p.n + p.k, p.k), q_formulas(p.n, p.k, QRoute::FpfSum))
}

fn s_4_2_3(ctx: &SuiteContext, p: &Params) -> Sides {
    let (n, m, k) = (p.n, p.m, p.k);
    let lhs = ctx.q(n + m + k, m + k);
    let mut rhs = Rat::zero();
    for j in 0..=m {
        rhs += crat(m, j) * ctx.q(n + k + j, k);
    }
    num_sides(lhs, rhs)
}

fn s_4_2_4(ctx: &SuiteContext, p: &Params) -> Sides {
    num_sides(ctx.q(p.n + p.k, p.k), q_formulas(p.n, p.k, QRoute::ProductSum))
}

fn s_4_2_5(ctx: &SuiteContext, p: &Params) -> Sides {
    num_sides(ctx.q(p.n + p.k, p.k), q_formulas(p.n, p.k, QRoute::BesselSum))
}

fn s_4_3(ctx: &SuiteContext, p: &Params) -> Sides {
    let n = p.n;
    let y = Poly::y();
    let yp1 = &y + &Poly::one();
    let mut lhs = Poly::zero();
    for k in 0..=n {
        let term = yp1.pow(k).scale(&(crat(n, k) * ctx.q(n, k)));
        lhs = signed_add(lhs, term, (n - k) % 2 == 1);
    }
    let mut rhs = Poly::zero();
    for k in 0..=n {
        rhs = &rhs + &y.pow(k).scale(&(crat(n, k) * ctx.i(k)));
    }
    Sides::Polys { lhs, rhs }
}

fn s_4_4(ctx: &SuiteContext, p: &Params) -> Sides {
    let n = p.n;
    let y = Poly::y();
    let yp1 = &y + &Poly::one();
    let mut lhs = Poly::zero();
    for k in 0..=n {
        lhs = &lhs + &y.pow(k).scale(&(crat(n, k) * ctx.q(n, k)));
    }
    let mut rhs = Poly::zero();
    for k in 0..=n {
        let term = yp1.pow(k).scale(&(crat(n, k) * ctx.i(k)));
        rhs = signed_add(rhs, term, (n - k) % 2 == 1);
    }
    Sides::Polys { lhs, rhs }
}

fn s_4_5(ctx: &SuiteContext, p: &Params) -> Sides {
    let n = p.n;
    let y = Poly::y();
    let yp1 = &y + &Poly::one();
    let mut lhs = Poly::zero();
    for k in 0..=n {
        lhs = &lhs + &y.pow(k).scale(&(crat(n, k) * ctx.q(n, k)));
    }
    let mut rhs = Poly::zero();
    for k in 0..=(n / 2) {
        let coeff = crat(n, 2 * k) * rat_big(double_factorial_odd(k));
        rhs = &rhs + &(&y.pow(n - 2 * k).scale(&coeff) * &yp1.pow(2 * k));
    }
    Sides::Polys { lhs, rhs }
}

fn s_4_7(ctx: &SuiteContext, p: &Params) -> Sides {
    let (n, m) = (p.n, p.m);
    let y = Poly::y();
    let yp1 = &y + &Poly::one();
    let mut lhs = Poly::zero();
    let mut rhs = Poly::zero();
    for k in 0..=n {
        lhs = &lhs + &yp1.pow(n - k).scale(&(crat(n, k) * ctx.q(m + k, m)));
        rhs = &rhs + &y.pow(n - k).scale(&(crat(n, k) * ctx.i(m + k)));
    }
    Sides::Polys { lhs, rhs }
}

fn s_4_8(ctx: &SuiteContext, p: &Params) -> Sides {
    let (n, m) = (p.n, p.m);
    let mut lhs = Poly::zero();
    let mut rhs = Poly::zero();
    for k in 0..=n {
        lhs = &lhs + &ctx.bell_poly(n - k + 1).scale(&(crat(n, k) * ctx.q(m + k, m)));
        rhs = &rhs + &ctx.bell_poly(n - k).scale(&(crat(n, k) * ctx.i(m + k)));
    }
    rhs = &Poly::y() * &rhs;
    Sides::Polys { lhs, rhs }
}

fn s_4_9(ctx: &SuiteContext, p: &Params) -> Sides {
    let (n, m) = (p.n, p.m);
    let mut lhs = Poly::zero();
    let mut rhs = Poly::zero();
    for k in 0..=n {
        lhs = &lhs + &c_y((n - k) as i64, n - k).scale(&(crat(n, k) * ctx.q(m + k, m)));
        rhs = &rhs + &c_y(0, n - k).scale(&(crat(n, k) * ctx.i(m + k)));
    }
    Sides::Polys { lhs, rhs }
}

fn s_4_10(ctx: &SuiteContext, p: &Params) -> Sides {
    let (n, m) = (p.n, p.m);
    let mut lhs = Rat::zero();
    let mut rhs = Rat::zero();
    for k in 0..=n {
        lhs += crat(n, k) * ctx.q(m + k, m) * fct(n - k);
        rhs += crat(n, k) * ctx.i(m + k) * ctx.d(n - k);
    }
    num_sides(lhs, rhs)
}

fn s_4_11(ctx: &SuiteContext, p: &Params) -> Sides {
    let (n, m) = (p.n, p.m);
    let mut lhs = Rat::zero();
    let mut rhs = Rat::zero();
    for k in 0..=n {
        lhs += crat(n, k) * ctx.q(m + k, m) * ctx.i(n - k);
        rhs += crat(n, k) * ctx.i(m + k) * ctx.m(n - k);
    }
    num_sides(lhs, rhs)
}

fn s_4_12(ctx: &SuiteContext, p: &Params) -> Sides {
    let (n, m) = (p.n, p.m);
    let mut lhs = Rat::zero();
    let mut rhs = Rat::zero();
    for k in 0..=n {
        lhs += crat(n, k) * ctx.q(m + k, m) * ctx.b(n - k + 1);
        rhs += crat(n, k) * ctx.i(m + k) * ctx.b(n - k);
    }
    num_sides(lhs, rhs)
}

fn s_4_t5a(ctx: &SuiteContext, p: &Params) -> Sides {
    let n = p.n;
    let mut lhs = Rat::zero();
    for k in 0..=n {
        lhs += rat(k as i64 + 1) * ctx.q(n, k);
    }
    let rhs = ctx.m(n + 2) - ctx.i(n + 2) + rat(n as i64 + 2) * ctx.i(n + 1);
    num_sides(lhs, rhs)
}

fn s_4_t5b(ctx: &SuiteContext, p: &Params) -> Sides {
    let n = p.n;
    let mut lhs = Rat::zero();
    for k in 0..=n {
        lhs += rat((n - k) as i64 + 1) * ctx.q(n, k);
    }
    let rhs = ctx.i(n + 2) - rat(n as i64 + 2) * ctx.m(n + 1) - ctx.m(n + 2);
    num_sides(lhs, rhs)
}

// ---- labeled forest specialization ----

fn s_5_2_1(ctx: &SuiteContext, p: &Params) -> Sides {
    num_sides(ctx.l(p.n + p.k, p.k), l_explicit(p.n, p.k))
}

fn s_5_2_3(ctx: &SuiteContext, p: &Params) -> Sides {
    let (n, m, k) = (p.n, p.m, p.k);
    let lhs = ctx.l(n + m + k, m + k);
    let mut rhs = Rat::zero();
    for j in 0..=m {
        rhs += crat(m, j) * ctx.l(n + k + j, k);
    }
    num_sides(lhs, rhs)
}

fn s_5_2_lam(ctx: &SuiteContext, p: &Params) -> Sides {
    let (n, m) = (p.n, p.m);
    let mut lhs = Poly::zero();
    for j in 0..=n {
        lhs = &lhs + &c_lam(j as i64 - 1, j).scale(&ctx.l(n + m, m + j));
    }
    let mut rhs = Poly::zero();
    for j in 0..=n {
        let term = c_lam(n as i64, j).scale(&cay(m + j + 1, (m + j) as i64 - 1));
        rhs = signed_add(rhs, term, (n - j) % 2 == 1);
    }
    Sides::Polys { lhs, rhs }
}

fn s_5_t3a(ctx: &SuiteContext, p: &Params) -> Sides {
    let n = p.n;
    let y = Poly::y();
    let yp1 = &y + &Poly::one();
    let mut lhs = Poly::zero();
    for k in 0..=n {
        let term = yp1.pow(k).scale(&(crat(n, k) * ctx.l(n, k)));
        lhs = signed_add(lhs, term, (n - k) % 2 == 1);
    }
    let mut rhs = Poly::zero();
    for k in 0..=n {
        rhs = &rhs + &y.pow(k).scale(&(crat(n, k) * cay(k + 1, k as i64 - 1)));
    }
    Sides::Polys { lhs, rhs }
}

fn s_5_t3b(ctx: &SuiteContext, p: &Params) -> Sides {
    let n = p.n;
    let y = Poly::y();
    let yp1 = &y + &Poly::one();
    let mut lhs = Poly::zero();
    for k in 0..=n {
        lhs = &lhs + &y.pow(k).scale(&(crat(n, k) * ctx.l(n, k)));
    }
    let mut rhs = Poly::zero();
    for k in 0..=n {
        let term = yp1.pow(k).scale(&(crat(n, k) * cay(k + 1, k as i64 - 1)));
        rhs = signed_add(rhs, term, (n - k) % 2 == 1);
    }
    Sides::Polys { lhs, rhs }
}

fn s_5_t4a(ctx: &SuiteContext, p: &Params) -> Sides {
    let (n, m) = (p.n, p.m);
    let y = Poly::y();
    let yp1 = &y + &Poly::one();
    let mut lhs = Poly::zero();
    let mut rhs = Poly::zero();
    for k in 0..=n {
        lhs = &lhs + &yp1.pow(n - k).scale(&(crat(n, k) * ctx.l(m + k, m)));
        rhs = &rhs
            + &y.pow(n - k)
                .scale(&(crat(n, k) * cay(m + k + 1, (m + k) as i64 - 1)));
    }
    Sides::Polys { lhs, rhs }
}

fn s_5_t4b(ctx: &SuiteContext, p: &Params) -> Sides {
    let (n, m) = (p.n, p.m);
    let mut lhs = Poly::zero();
    let mut rhs = Poly::zero();
    for k in 0..=n {
        lhs = &lhs + &ctx.bell_poly(n - k + 1).scale(&(crat(n, k) * ctx.l(m + k, m)));
        rhs = &rhs
            + &ctx
                .bell_poly(n - k)
                .scale(&(crat(n, k) * cay(m + k + 1, (m + k) as i64 - 1)));
    }
    rhs = &Poly::y() * &rhs;
    Sides::Polys { lhs, rhs }
}

fn s_5_t4c(ctx: &SuiteContext, p: &Params) -> Sides {
    let (n, m) = (p.n, p.m);
    let mut lhs = Poly::zero();
    let mut rhs = Poly::zero();
    for k in 0..=n {
        lhs = &lhs + &c_y((n - k) as i64, n - k).scale(&(crat(n, k) * ctx.l(m + k, m)));
        rhs = &rhs
            + &c_y(0, n - k).scale(&(crat(n, k) * cay(m + k + 1, (m + k) as i64 - 1)));
    }
    Sides::Polys { lhs, rhs }
}

fn s_5_c5a(ctx: &SuiteContext, p: &Params) -> Sides {
    let (n, m) = (p.n, p.m);
    let mut lhs = Rat::zero();
    let mut rhs = Rat::zero();
    for k in 0..=n {
        lhs += crat(n, k) * ctx.l(m + k, m) * fct(n - k);
        rhs += crat(n, k) * cay(m + k + 1, (m + k) as i64 - 1) * ctx.d(n - k);
    }
    num_sides(lhs, rhs)
}

fn s_5_c5b(ctx: &SuiteContext, p: &Params) -> Sides {
    let (n, m) = (p.n, p.m);
    let mut lhs = Rat::zero();
    let mut rhs = Rat::zero();
    for k in 0..=n {
        lhs += crat(n, k) * ctx.l(m + k, m) * ctx.b(n - k + 1);
        rhs += crat(n, k) * cay(m + k + 1, (m + k) as i64 - 1) * ctx.b(n - k);
    }
    num_sides(lhs, rhs)
}

/// Build the full registry. Errors only on a duplicate id.
pub fn register_all() -> Result<Registry> {
    use Mode::{RationalPoints, SymbolicPoly};
    use WeightsKind::{Numeric, Symbolic};

    let rec = |id, reference, params, mode, weights, sides| IdentityRecord {
        id,
        reference,
        params,
        mode,
        weights,
        sides,
    };

    Registry::from_records(vec![
        rec(
            "2.2A",
            "sum_k C(k+lam-1,k) A(n+m,m+k) = sum_k C(n+lam,k) C(n+lam-k-1,n-k) A(m+k,m) t1^(n-k)",
            SYM_NM,
            SymbolicPoly,
            Symbolic,
            s_2_2a,
        ),
        rec(
            "2.2B",
            "sum_k C(k+lam-1,k) A(n+m,m+k) = sum_k (-1)^(n-k) C(n+lam,k) Y(m+k) t1^(n-k+1)",
            SYM_NM,
            SymbolicPoly,
            Symbolic,
            s_2_2b,
        ),
        rec(
            "2.3A",
            "A(n+m,m) = sum_k (-1)^(n-k) C(n,k) t1^(n-k+1) Y(m+k)",
            SYM_NM,
            SymbolicPoly,
            Symbolic,
            s_2_3a,
        ),
        rec(
            "2.3B",
            "t1 sum_k A(n+m,m+k) = t1 Y(n+m+1) - A(n+m+1,m)",
            SYM_NM,
            SymbolicPoly,
            Symbolic,
            s_2_3b,
        ),
        rec(
            "2.3C",
            "t1^2 sum_k (k+1) A(n+m,m+k) = A(n+m+2,m) - t1 Y(n+m+2) + (n+2) t1^2 Y(n+m+1)",
            SYM_NM,
            SymbolicPoly,
            Symbolic,
            s_2_3c,
        ),
        rec(
            "2.3D",
            "t1^2 sum_k (n-k+1) A(n+m,m+k) = t1 Y(n+m+2) - A(n+m+2,m) - (n+2) t1 A(n+m+1,m)",
            SYM_NM,
            SymbolicPoly,
            Symbolic,
            s_2_3d,
        ),
        rec(
            "2.4",
            "A(n+m+k,m+k) = sum_j C(m,j) t1^(m-j) A(n+k+j,k)",
            SYM_NMK,
            SymbolicPoly,
            Symbolic,
            s_2_4,
        ),
        rec(
            "2.5",
            "sum_k C(n,k) A(n+m,m+k) y^k = sum_k (-1)^(n-k) C(n,k) Y(m+k) (y+1)^k t1^(n-k+1)",
            SYM_NM,
            SymbolicPoly,
            Symbolic,
            s_2_5,
        ),
        rec(
            "2.6",
            "sum_k C(n,k) A(m+k,m) y^(n-k) = t1 sum_k C(n,k) Y(m+k) (y-t1)^(n-k)",
            SYM_NM,
            SymbolicPoly,
            Symbolic,
            s_2_6,
        ),
        rec(
            "2.7a",
            "sum_k (-1)^(n-k) C(n,k) A(n+m,m+k) = Y(m) t1^(n+1)",
            SYM_NM,
            SymbolicPoly,
            Symbolic,
            s_2_7a,
        ),
        rec(
            "2.7b",
            "sum_k C(n,k) A(m+k,m) t1^(n-k) = t1 Y(m+n)",
            SYM_NM,
            SymbolicPoly,
            Symbolic,
            s_2_7b,
        ),
        rec(
            "2.7",
            "sum_k C(n,k) A(m+k,m) (y+1)^k (y t1)^(n-k) = sum_k C(n,k) A(n+m,m+k) y^k",
            SYM_NM,
            SymbolicPoly,
            Symbolic,
            s_2_7,
        ),
        rec(
            "3.1",
            "sum_k C(n,k) P(n+m,m+k) y^k = sum_k (-1)^(n-k) C(n,k) (m+k)! (y+1)^k",
            NUM_NM,
            SymbolicPoly,
            Numeric,
            s_3_1,
        ),
        rec(
            "3.2",
            "sum_k C(n,k) P(m+k,m) y^(n-k) = sum_k C(n,k) (m+k)! (y-1)^(n-k)",
            NUM_NM,
            SymbolicPoly,
            Numeric,
            s_3_2,
        ),
        rec(
            "3.charlier1",
            "sum_k (-1)^(n-k) C(n,k) (m+k)! (y+1)^k = m! (y+1)^n C_n(m+1, -1/(y+1)) at y = 0..n+2",
            PTS_NM,
            RationalPoints,
            Numeric,
            s_3_charlier1,
        ),
        rec(
            "3.charlier2",
            "sum_k C(n,k) P(m+k,m) y^(n-k) = m! C_n(m+1, y-1)",
            NUM_NM,
            SymbolicPoly,
            Numeric,
            s_3_charlier2,
        ),
        rec(
            "3.D1",
            "sum_k C(n,k) P(n+m,m+k) D(k) = sum_k (-1)^(n-k) C(n,k) (m+k)! k!",
            NUM_NM,
            SymbolicPoly,
            Numeric,
            s_3_d1,
        ),
        rec(
            "3.D2",
            "sum_k C(n,k) P(m+k,m) (n-k)! = sum_k C(n,k) (m+k)! D(n-k)",
            NUM_NM,
            SymbolicPoly,
            Numeric,
            s_3_d2,
        ),
        rec(
            "3.B1",
            "sum_k C(n,k) P(n+m,m+k) B(k) = sum_k (-1)^(n-k) C(n,k) (m+k)! B(k+1)",
            NUM_NM,
            SymbolicPoly,
            Numeric,
            s_3_b1,
        ),
        rec(
            "3.B2",
            "sum_k C(n,k) P(m+k,m) B(n-k+1) = sum_k C(n,k) (m+k)! B(n-k)",
            NUM_NM,
            SymbolicPoly,
            Numeric,
            s_3_b2,
        ),
        rec(
            "3.riordan",
            "sum_k C(n,k) (k+1)! (n+1)^(n-k) = (n+1)^(n+1)",
            NUM_N,
            SymbolicPoly,
            Numeric,
            s_3_riordan,
        ),
        rec(
            "3.3pre",
            "sum_k (-1)^(n-k) C(n,k) P(n+1,k+1) (n+2)^k (n+1)^(n-k) = (n+1)^(n+1)",
            NUM_N,
            SymbolicPoly,
            Numeric,
            s_3_3pre,
        ),
        rec(
            "3.3",
            "sum_k C(n,k) (D(k)+D(k+1)) (n+2)^(n-k) = (n+1)^(n+1)",
            NUM_N,
            SymbolicPoly,
            Numeric,
            s_3_3,
        ),
        rec(
            "3.4",
            "sum_k C(n,k) D(k+1) (n+1)^(n-k) = n^(n+1)",
            NUM_N,
            SymbolicPoly,
            Numeric,
            s_3_4,
        ),
        rec(
            "3.fib",
            "sum_k C(n,2k) C(2k,k) k! P(n-k,k) = sum_k (-1)^(n-k) C(n,k) k! F(k)",
            NUM_N,
            SymbolicPoly,
            Numeric,
            s_3_fib,
        ),
        rec(
            "3.DE",
            "sum_k (k+1) P(n,k) = D(n+2)",
            NUM_N,
            SymbolicPoly,
            Numeric,
            s_3_de,
        ),
        rec(
            "4.2.1",
            "Q(n+k,k) = sum_j (-1)^(n-j) C(n,j) I(k+j)",
            NUM_NK,
            SymbolicPoly,
            Numeric,
            s_4_2_1,
        ),
        rec(
            "4.2.2",
            "Q(n+k,k) = sum_j C(k,j) M(n+j)",
            NUM_NK,
            SymbolicPoly,
            Numeric,
            s_4_2_2,
        ),
        rec(
            "4.2.3",
            "Q(n+m+k,m+k) = sum_j C(m,j) Q(n+k+j,k)",
            NUM_NMK,
            SymbolicPoly,
            Numeric,
            s_4_2_3,
        ),
        rec(
            "4.2.4",
            "Q(n+k,k) = sum_j C(k,j) C(n,j) j! I(k-j) M(n-j)",
            NUM_NK,
            SymbolicPoly,
            Numeric,
            s_4_2_4,
        ),
        rec(
            "4.2.5",
            "Q(n+k,k) = sum_j k!/(n+k-2j)! I(n+k-2j) Bessel(n,j)",
            NUM_NK,
            SymbolicPoly,
            Numeric,
            s_4_2_5,
        ),
        rec(
            "4.3",
            "sum_k (-1)^(n-k) C(n,k) Q(n,k) (y+1)^k = sum_k C(n,k) y^k I(k)",
            NUM_N,
            SymbolicPoly,
            Numeric,
            s_4_3,
        ),
        rec(
            "4.4",
            "sum_k C(n,k) Q(n,k) y^k = sum_k (-1)^(n-k) C(n,k) (y+1)^k I(k)",
            NUM_N,
            SymbolicPoly,
            Numeric,
            s_4_4,
        ),
        rec(
            "4.5",
            "sum_k C(n,k) Q(n,k) y^k = sum_k C(n,2k) (2k-1)!! y^(n-2k) (y+1)^(2k)",
            NUM_N,
            SymbolicPoly,
            Numeric,
            s_4_5,
        ),
        rec(
            "4.7",
            "sum_k C(n,k) Q(m+k,m) (y+1)^(n-k) = sum_k C(n,k) I(m+k) y^(n-k)",
            NUM_NM,
            SymbolicPoly,
            Numeric,
            s_4_7,
        ),
        rec(
            "4.8",
            "sum_k C(n,k) Q(m+k,m) B_(n-k+1)(y) = y sum_k C(n,k) I(m+k) B_(n-k)(y)",
            NUM_NM,
            SymbolicPoly,
            Numeric,
            s_4_8,
        ),
        rec(
            "4.9",
            "sum_k C(n,k) C(y+n-k,n-k) Q(m+k,m) = sum_k C(n,k) C(y,n-k) I(m+k)",
            NUM_NM,
            SymbolicPoly,
            Numeric,
            s_4_9,
        ),
        rec(
            "4.10",
            "sum_k C(n,k) Q(m+k,m) (n-k)! = sum_k C(n,k) I(m+k) D(n-k)",
            NUM_NM,
            SymbolicPoly,
            Numeric,
            s_4_10,
        ),
        rec(
            "4.11",
            "sum_k C(n,k) Q(m+k,m) I(n-k) = sum_k C(n,k) I(m+k) M(n-k)",
            NUM_NM,
            SymbolicPoly,
            Numeric,
            s_4_11,
        ),
        rec(
            "4.12",
            "sum_k C(n,k) Q(m+k,m) B(n-k+1) = sum_k C(n,k) I(m+k) B(n-k)",
            NUM_NM,
            SymbolicPoly,
            Numeric,
            s_4_12,
        ),
        rec(
            "4.T5a",
            "sum_k (k+1) Q(n,k) = M(n+2) - I(n+2) + (n+2) I(n+1)",
            NUM_N,
            SymbolicPoly,
            Numeric,
            s_4_t5a,
        ),
        rec(
            "4.T5b",
            "sum_k (n-k+1) Q(n,k) = I(n+2) - (n+2) M(n+1) - M(n+2)",
            NUM_N,
            SymbolicPoly,
            Numeric,
            s_4_t5b,
        ),
        rec(
            "5.2.1",
            "L(n+k,k) = sum_j (-1)^(n-j) C(n,j) (k+j+1)^(k+j-1)",
            NUM_NK,
            SymbolicPoly,
            Numeric,
            s_5_2_1,
        ),
        rec(
            "5.2.3",
            "L(n+m+k,m+k) = sum_j C(m,j) L(n+k+j,k)",
            NUM_NMK,
            SymbolicPoly,
            Numeric,
            s_5_2_3,
        ),
        rec(
            "5.2.lam",
            "sum_j C(j+lam-1,j) L(n+m,m+j) = sum_j (-1)^(n-j) C(n+lam,j) (m+j+1)^(m+j-1)",
            NUM_NM,
            SymbolicPoly,
            Numeric,
            s_5_2_lam,
        ),
        rec(
            "5.T3a",
            "sum_k (-1)^(n-k) C(n,k) L(n,k) (y+1)^k = sum_k C(n,k) (k+1)^(k-1) y^k",
            NUM_N,
            SymbolicPoly,
            Numeric,
            s_5_t3a,
        ),
        rec(
            "5.T3b",
            "sum_k C(n,k) L(n,k) y^k = sum_k (-1)^(n-k) C(n,k) (k+1)^(k-1) (y+1)^k",
            NUM_N,
            SymbolicPoly,
            Numeric,
            s_5_t3b,
        ),
        rec(
            "5.T4a",
            "sum_k C(n,k) L(m+k,m) (y+1)^(n-k) = sum_k C(n,k) (m+k+1)^(m+k-1) y^(n-k)",
            NUM_NM,
            SymbolicPoly,
            Numeric,
            s_5_t4a,
        ),
        rec(
            "5.T4b",
            "sum_k C(n,k) L(m+k,m) B_(n-k+1)(y) = y sum_k C(n,k) (m+k+1)^(m+k-1) B_(n-k)(y)",
            NUM_NM,
            SymbolicPoly,
            Numeric,
            s_5_t4b,
        ),
        rec(
            "5.T4c",
            "sum_k C(n,k) C(y+n-k,n-k) L(m+k,m) = sum_k C(n,k) C(y,n-k) (m+k+1)^(m+k-1)",
            NUM_NM,
            SymbolicPoly,
            Numeric,
            s_5_t4c,
        ),
        rec(
            "5.C5a",
            "sum_k C(n,k) L(m+k,m) (n-k)! = sum_k C(n,k) (m+k+1)^(m+k-1) D(n-k)",
            NUM_NM,
            SymbolicPoly,
            Numeric,
            s_5_c5a,
        ),
        rec(
            "5.C5b",
            "sum_k C(n,k) L(m+k,m) B(n-k+1) = sum_k C(n,k) (m+k+1)^(m+k-1) B(n-k)",
            NUM_NM,
            SymbolicPoly,
            Numeric,
            s_5_c5b,
        ),
    ])
}

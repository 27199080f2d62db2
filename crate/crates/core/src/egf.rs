//! Truncated bivariate exponential generating functions and the machine
//! checks of the closed-form generating functions.
//!
//! An `Egf2` stores the factorial-normalized coefficients a(n, k) of
//! sum a(n, k) x^n y^k / (n! k!) for n + k <= order. Products are then
//! double binomial convolutions and stay integral for integral inputs.

use num_traits::Zero;
use serde::Serialize;

use crate::combinatorics::{complete_bell_sequence, sequence_values, Sequence, WeightFamily};
use crate::error::{Error, Result};
use crate::ring::{binomial, cayley_power, factorial, rat_big, Poly, Rat};
use crate::singleton::{build_triangle, Triangle};

/// Truncated bivariate EGF with polynomial coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Egf2 {
    order: usize,
    /// coeffs[n][k] for n + k <= order; row n has order - n + 1 entries.
    coeffs: Vec<Vec<Poly>>,
}

impl Egf2 {
    pub fn zero(order: usize) -> Self {
        let coeffs = (0..=order)
            .map(|n| vec![Poly::zero(); order - n + 1])
            .collect();
        Egf2 { order, coeffs }
    }

    pub fn one(order: usize) -> Self {
        let mut f = Egf2::zero(order);
        f.coeffs[0][0] = Poly::one();
        f
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, n: usize, k: usize) -> &Poly {
        &self.coeffs[n][k]
    }

    pub fn set_coeff(&mut self, n: usize, k: usize, p: Poly) {
        self.coeffs[n][k] = p;
    }

    /// e^(c*x): a(n, 0) = c^n.
    pub fn exp_x(c: &Poly, order: usize) -> Egf2 {
        let mut f = Egf2::zero(order);
        for n in 0..=order {
            f.coeffs[n][0] = c.pow(n);
        }
        f
    }

    pub fn scale(&self, c: &Poly) -> Egf2 {
        let mut out = self.clone();
        for row in &mut out.coeffs {
            for cell in row {
                *cell = &*cell * c;
            }
        }
        out
    }

    pub fn add(&self, other: &Egf2) -> Result<Egf2> {
        if self.order != other.order {
            return Err(Error::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        let mut out = self.clone();
        for n in 0..=self.order {
            for k in 0..=(self.order - n) {
                out.coeffs[n][k] = &out.coeffs[n][k] + &other.coeffs[n][k];
            }
        }
        Ok(out)
    }

    /// Exact product: c(n, k) = sum_{i, j} C(n, i) C(k, j) a(i, j) b(n-i, k-j).
    pub fn mul(&self, other: &Egf2) -> Result<Egf2> {
        if self.order != other.order {
            return Err(Error::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        let mut out = Egf2::zero(self.order);
        for n in 0..=self.order {
            for k in 0..=(self.order - n) {
                let mut acc = Poly::zero();
                for i in 0..=n {
                    let cn = binomial(n, i);
                    for j in 0..=k {
                        let a = &self.coeffs[i][j];
                        let b = &other.coeffs[n - i][k - j];
                        if a.is_zero() || b.is_zero() {
                            continue;
                        }
                        let c = rat_big(&cn * binomial(k, j));
                        acc = &acc + &(a * b).scale(&c);
                    }
                }
                out.coeffs[n][k] = acc;
            }
        }
        Ok(out)
    }

    /// exp of a series with zero constant term, by the differential
    /// recurrence: column n = 0 first via d/dy, then each row via d/dx
    /// (coefficients of df/dx = (dg/dx) f).
    pub fn exp(&self) -> Result<Egf2> {
        if !self.coeffs[0][0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let g = &self.coeffs;
        let order = self.order;
        let mut f = Egf2::zero(order);
        f.coeffs[0][0] = Poly::one();
        // f(0, k+1) = sum_j C(k, j) g(0, j+1) f(0, k-j)
        for k in 0..order {
            let mut acc = Poly::zero();
            for j in 0..=k {
                let gj = &g[0][j + 1];
                if gj.is_zero() {
                    continue;
                }
                let fk = f.coeffs[0][k - j].clone();
                acc = &acc + &(gj * &fk).scale(&rat_big(binomial(k, j)));
            }
            f.coeffs[0][k + 1] = acc;
        }
        // f(n+1, k) = sum_{i, j} C(n, i) C(k, j) g(i+1, j) f(n-i, k-j)
        for n in 0..order {
            for k in 0..=(order - n - 1) {
                let mut acc = Poly::zero();
                for i in 0..=n {
                    let cn = binomial(n, i);
                    for j in 0..=k {
                        if i + 1 + j > order {
                            continue;
                        }
                        let gij = &g[i + 1][j];
                        if gij.is_zero() {
                            continue;
                        }
                        let fij = f.coeffs[n - i][k - j].clone();
                        let c = rat_big(&cn * binomial(k, j));
                        acc = &acc + &(gij * &fij).scale(&c);
                    }
                }
                f.coeffs[n + 1][k] = acc;
            }
        }
        Ok(f)
    }
}

/// Lift a univariate EGF in (x+y) to two variables: a series
/// sum c_j z^j / j! becomes b(n, k) = c(n+k), by the binomial expansion of
/// (x+y)^j.
pub fn diagonal_lift(c: &[Poly], order: usize) -> Result<Egf2> {
    if c.len() < order + 1 {
        return Err(Error::ShortSequence {
            need: order + 1,
            have: c.len(),
        });
    }
    let mut out = Egf2::zero(order);
    for n in 0..=order {
        out.coeffs[n].clone_from_slice(&c[n..=order]);
    }
    Ok(out)
}

/// Pass/fail report for one generating-function check.
#[derive(Clone, Debug, Serialize)]
pub struct EgfReport {
    pub which: String,
    pub order: usize,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mismatch: Option<EgfMismatch>,
}

/// First offending coefficient of a failed check, in canonical text.
#[derive(Clone, Debug, Serialize)]
pub struct EgfMismatch {
    pub n: usize,
    pub k: usize,
    pub lhs: String,
    pub rhs: String,
}

fn compare_with_triangle(which: &str, order: usize, series: &Egf2, tri: &Triangle) -> EgfReport {
    for n in 0..=order {
        for k in 0..=(order - n) {
            let lhs = series.coeff(n, k);
            let rhs = tri.entry(n + k, k).expect("triangle sized to order");
            if lhs != rhs {
                return EgfReport {
                    which: which.into(),
                    order,
                    pass: false,
                    mismatch: Some(EgfMismatch {
                        n,
                        k,
                        lhs: lhs.to_string(),
                        rhs: rhs.to_string(),
                    }),
                };
            }
        }
    }
    EgfReport {
        which: which.into(),
        order,
        pass: true,
        mismatch: None,
    }
}

/// Verify that w(1) e^(-x w(1)) Y(w; x+y) reproduces the whole triangle:
/// its (n, k) coefficient must equal A(n+k, k) from the recurrence.
pub fn check_lemma21(order: usize, w: &WeightFamily) -> Result<EgfReport> {
    let w1 = w.weight(1)?;
    let ys = complete_bell_sequence(order, w, false)?;
    let lifted = diagonal_lift(&ys, order)?;
    let series = Egf2::exp_x(&-&w1, order).mul(&lifted)?.scale(&w1);
    let tri = build_triangle(w, order)?;
    Ok(compare_with_triangle(
        &format!("lemma21-{}", w.label()),
        order,
        &series,
        &tri,
    ))
}

/// P(x, y) = e^(-x) / (1 - x - y), built as e^(-x) times the diagonal lift
/// of j! (no series division), against the permutation triangle.
pub fn check_permutation_gf(order: usize) -> Result<EgfReport> {
    let facts: Vec<Poly> = (0..=order).map(|j| Poly::from_big(factorial(j))).collect();
    let series = Egf2::exp_x(&Poly::from_int(-1), order).mul(&diagonal_lift(&facts, order)?)?;
    let tri = build_triangle(&WeightFamily::Permutation, order)?;
    Ok(compare_with_triangle("permutation", order, &series, &tri))
}

/// Q(x, y) = exp(y + (x+y)^2/2) against the involution triangle.
pub fn check_involution_gf(order: usize) -> Result<EgfReport> {
    let mut g = Egf2::zero(order);
    if order >= 1 {
        g.set_coeff(0, 1, Poly::one());
    }
    if order >= 2 {
        g.set_coeff(2, 0, Poly::one());
        g.set_coeff(1, 1, Poly::one());
        g.set_coeff(0, 2, Poly::one());
    }
    let series = g.exp()?;
    let tri = build_triangle(&WeightFamily::Involution, order)?;
    Ok(compare_with_triangle("involution", order, &series, &tri))
}

/// L(x, y) = e^(-x) sum (j+1)^(j-1) (x+y)^j / j! against the forest
/// triangle.
pub fn check_forest_gf(order: usize) -> Result<EgfReport> {
    let trees: Vec<Poly> = (0..=order)
        .map(|j| Poly::from_big(cayley_power(j + 1, j as i64 - 1)))
        .collect();
    let series = Egf2::exp_x(&Poly::from_int(-1), order).mul(&diagonal_lift(&trees, order)?)?;
    let tri = build_triangle(&WeightFamily::Forest, order)?;
    Ok(compare_with_triangle("forest", order, &series, &tri))
}

/// The tree-function identity exp(sum j^(j-1) z^j / j!) =
/// sum (j+1)^(j-1) z^j / j!, checked coefficientwise to the given order.
pub fn check_tree_identity(order: usize) -> Result<EgfReport> {
    let mut g = Egf2::zero(order);
    for j in 1..=order {
        g.set_coeff(j, 0, Poly::from_big(cayley_power(j, j as i64 - 1)));
    }
    let f = g.exp()?;
    for j in 0..=order {
        let expect = Poly::from_big(cayley_power(j + 1, j as i64 - 1));
        if f.coeff(j, 0) != &expect {
            return Ok(EgfReport {
                which: "tree".into(),
                order,
                pass: false,
                mismatch: Some(EgfMismatch {
                    n: j,
                    k: 0,
                    lhs: f.coeff(j, 0).to_string(),
                    rhs: expect.to_string(),
                }),
            });
        }
    }
    Ok(EgfReport {
        which: "tree".into(),
        order,
        pass: true,
        mismatch: None,
    })
}

/// Both sides of the Fibonacci coefficient extraction from P(x, x^2):
/// sum_k C(n, 2k) C(2k, k) k! P(n-k, k) and
/// sum_k (-1)^(n-k) C(n, k) k! F(k), computed independently.
pub fn fibonacci_extraction(n: usize) -> (Rat, Rat) {
    let tri = build_triangle(&WeightFamily::Permutation, n).expect("numeric family");
    let mut lhs = Rat::zero();
    for k in 0..=(n / 2) {
        let c = binomial(n, 2 * k) * binomial(2 * k, k) * factorial(k);
        let p = tri
            .entry(n - k, k)
            .expect("k <= n - k")
            .as_rational()
            .expect("numeric entry");
        lhs += rat_big(c) * p;
    }
    let fibs = sequence_values(Sequence::Fibonacci, n);
    let mut rhs = Rat::zero();
    for (k, f) in fibs.iter().enumerate() {
        let term = rat_big(binomial(n, k) * factorial(k)) * f;
        rhs = if (n - k) % 2 == 1 { rhs - term } else { rhs + term };
    }
    (lhs, rhs)
}

/// Fibonacci extraction as a pass/fail report over n = 0..=order.
pub fn check_fibonacci(order: usize) -> Result<EgfReport> {
    for n in 0..=order {
        let (lhs, rhs) = fibonacci_extraction(n);
        if lhs != rhs {
            return Ok(EgfReport {
                which: "fibonacci".into(),
                order,
                pass: false,
                mismatch: Some(EgfMismatch {
                    n,
                    k: 0,
                    lhs: lhs.to_string(),
                    rhs: rhs.to_string(),
                }),
            });
        }
    }
    Ok(EgfReport {
        which: "fibonacci".into(),
        order,
        pass: true,
        mismatch: None,
    })
}

/// The closed-form checks for all three specializations plus the tree
/// identity, at one order.
pub fn check_family_gfs(order: usize) -> Result<Vec<EgfReport>> {
    Ok(vec![
        check_permutation_gf(order)?,
        check_involution_gf(order)?,
        check_forest_gf(order)?,
        check_tree_identity(order)?,
    ])
}

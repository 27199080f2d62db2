//! The largest-singleton triangle A(n, k) computed three independent ways
//! (recurrence, alternating explicit sum, umbral evaluation), plus the
//! closed-form routes for the permutation (P), involution (Q), and labeled
//! forest (L) specializations.

use num_traits::Zero;

use crate::combinatorics::{
    bessel_number, complete_bell_sequence, sequence_values, Sequence, WeightFamily,
};
use crate::error::{Error, Result};
use crate::ring::{binomial, cayley_power, factorial, rat_big, Poly, Rat};
use crate::umbral::{umbra_from_family, umbral_eval, UmbralExpr};

/// The triangular array e[n][k] = A(n, k) for 0 <= k <= n <= n_max.
///
/// Column 0 is the weight of partitions whose only singleton is the element
/// 1 (w(1) times the singleton-free complete Bell polynomial); the diagonal
/// is w(1) times the full complete Bell polynomial.
#[derive(Clone, Debug)]
pub struct Triangle {
    family: WeightFamily,
    rows: Vec<Vec<Poly>>,
}

impl Triangle {
    pub fn family(&self) -> &WeightFamily {
        &self.family
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn rows(&self) -> &[Vec<Poly>] {
        &self.rows
    }

    pub fn entry(&self, n: usize, k: usize) -> Result<&Poly> {
        if k > n || n > self.n_max() {
            return Err(Error::TriangleDomain { n, k });
        }
        Ok(&self.rows[n][k])
    }
}

/// Build the full triangle up to row n_max by the recurrence
/// A(n, k) = A(n, k-1) + w(1) A(n-1, k-1), with column 0 computed from the
/// singleton-free complete Bell polynomials. O(n^2) polynomial additions.
pub fn build_triangle(family: &WeightFamily, n_max: usize) -> Result<Triangle> {
    let w1 = family.weight(1)?;
    let no_singles = complete_bell_sequence(n_max, family, true)?;
    let mut rows: Vec<Vec<Poly>> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut row = Vec::with_capacity(n + 1);
        row.push(&w1 * &no_singles[n]);
        for k in 1..=n {
            let prev = &row[k - 1];
            let diag = &rows[n - 1][k - 1];
            row.push(prev + &(&w1 * diag));
        }
        rows.push(row);
    }
    Ok(Triangle {
        family: family.clone(),
        rows,
    })
}

/// A(n, k) via the production recurrence.
pub fn a_recurrence(n: usize, k: usize, w: &WeightFamily) -> Result<Poly> {
    if k > n {
        return Err(Error::TriangleDomain { n, k });
    }
    Ok(build_triangle(w, n)?.entry(n, k)?.clone())
}

/// A(n+m, m) by the alternating explicit sum
/// sum_k (-1)^(n-k) C(n, k) w(1)^(n-k+1) Y(m+k).
pub fn a_explicit(n: usize, m: usize, w: &WeightFamily) -> Result<Poly> {
    let w1 = w.weight(1)?;
    let ys = complete_bell_sequence(n + m, w, false)?;
    let mut acc = Poly::zero();
    for k in 0..=n {
        let mut term = ys[m + k].scale(&rat_big(binomial(n, k)));
        term = &term * &w1.pow(n - k + 1);
        if (n - k) % 2 == 1 {
            term = -term;
        }
        acc = &acc + &term;
    }
    Ok(acc)
}

/// A(n+k, k) by umbral evaluation of w(1) S^k (S - w(1))^n against the
/// umbra with moments Y_j(w).
pub fn a_umbral(n: usize, k: usize, w: &WeightFamily) -> Result<Poly> {
    let w1 = w.weight(1)?;
    let u = umbra_from_family(w, n + k, "Y")?;
    let shifted = &UmbralExpr::symbol() - &UmbralExpr::constant(w1.clone());
    let expr = (&UmbralExpr::symbol_pow(k) * &shifted.pow(n)).scale(&w1);
    umbral_eval(&expr, &u)
}

/// Route selector for the permutation numbers P(n+k, k).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PRoute {
    /// sum_j (-1)^(n-j) C(n, j) (k+j)!
    Alternating,
    /// sum_j C(k, j) D(n+j)
    Derangement,
}

/// P(n+k, k): permutations of an (n+k+1)-set whose largest fixed point is
/// k+1. Both routes return the same integer.
pub fn p_explicit(n: usize, k: usize, route: PRoute) -> Rat {
    match route {
        PRoute::Alternating => {
            let mut acc = Rat::zero();
            for j in 0..=n {
                let term = rat_big(binomial(n, j) * factorial(k + j));
                acc = if (n - j) % 2 == 1 { acc - term } else { acc + term };
            }
            acc
        }
        PRoute::Derangement => {
            let ds = sequence_values(Sequence::Derangement, n + k);
            let mut acc = Rat::zero();
            for j in 0..=k {
                acc += rat_big(binomial(k, j)) * &ds[n + j];
            }
            acc
        }
    }
}

/// Route selector for the involution numbers Q(n+k, k).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QRoute {
    /// sum_j (-1)^(n-j) C(n, j) I(k+j)
    InvolutionSum,
    /// sum_j C(k, j) M(n+j)
    FpfSum,
    /// sum_j C(k, j) C(n, j) j! I(k-j) M(n-j)
    ProductSum,
    /// sum_j k!/(n+k-2j)! I(n+k-2j) B(n, j) over floor((n+1)/2) <= j <=
    /// floor((n+k+1)/2), where B is the Bessel number; terms whose
    /// factorial argument would be negative are zero.
    BesselSum,
}

/// Q(n+k, k): involutions of an (n+k+1)-set whose largest fixed point is
/// k+1. All four routes return the same integer.
pub fn q_formulas(n: usize, k: usize, route: QRoute) -> Rat {
    let inv = |j: usize| crate::combinatorics::sequence(Sequence::InvolutionCount, j);
    let fpf = |j: usize| crate::combinatorics::sequence(Sequence::FpfInvolution, j);
    match route {
        QRoute::InvolutionSum => {
            let is = sequence_values(Sequence::InvolutionCount, n + k);
            let mut acc = Rat::zero();
            for j in 0..=n {
                let term = rat_big(binomial(n, j)) * &is[k + j];
                acc = if (n - j) % 2 == 1 { acc - term } else { acc + term };
            }
            acc
        }
        QRoute::FpfSum => {
            let ms = sequence_values(Sequence::FpfInvolution, n + k);
            let mut acc = Rat::zero();
            for j in 0..=k {
                acc += rat_big(binomial(k, j)) * &ms[n + j];
            }
            acc
        }
        QRoute::ProductSum => {
            let mut acc = Rat::zero();
            for j in 0..=n.min(k) {
                let c = binomial(k, j) * binomial(n, j) * factorial(j);
                acc += rat_big(c) * inv(k - j) * fpf(n - j);
            }
            acc
        }
        QRoute::BesselSum => {
            let mut acc = Rat::zero();
            for j in n.div_ceil(2)..=(n + k).div_ceil(2) {
                if 2 * j > n + k {
                    continue; // factorial argument would be negative
                }
                let rest = n + k - 2 * j;
                let coeff = Rat::new(factorial(k), factorial(rest));
                acc += coeff * inv(rest) * bessel_number(n, j);
            }
            acc
        }
    }
}

/// L(n+k, k): labeled forests on an (n+k+1)-set whose largest singleton
/// tree is k+1, by the alternating sum
/// sum_j (-1)^(n-j) C(n, j) (k+j+1)^(k+j-1).
pub fn l_explicit(n: usize, k: usize) -> Rat {
    let mut acc = Rat::zero();
    for j in 0..=n {
        let term = rat_big(binomial(n, j) * cayley_power(k + j + 1, (k + j) as i64 - 1));
        acc = if (n - j) % 2 == 1 { acc - term } else { acc + term };
    }
    acc
}

/// Frozen reference triangle for the permutation specialization
/// (Euler's difference table), n, k <= 6.
pub const P_TABLE: [&[i64]; 7] = [
    &[1],
    &[0, 1],
    &[1, 1, 2],
    &[2, 3, 4, 6],
    &[9, 11, 14, 18, 24],
    &[44, 53, 64, 78, 96, 120],
    &[265, 309, 362, 426, 504, 600, 720],
];

/// Frozen reference triangle for the involution specialization, n, k <= 8.
pub const Q_TABLE: [&[i64]; 9] = [
    &[1],
    &[0, 1],
    &[1, 1, 2],
    &[0, 1, 2, 4],
    &[3, 3, 4, 6, 10],
    &[0, 3, 6, 10, 16, 26],
    &[15, 15, 18, 24, 34, 50, 76],
    &[0, 15, 30, 48, 72, 106, 156, 232],
    &[105, 105, 120, 150, 198, 270, 376, 532, 764],
];

/// Frozen reference triangle for the labeled forest specialization, n, k <= 6.
pub const L_TABLE: [&[i64]; 7] = [
    &[1],
    &[0, 1],
    &[2, 2, 3],
    &[9, 11, 13, 16],
    &[76, 85, 96, 109, 125],
    &[805, 881, 966, 1062, 1171, 1296],
    &[10626, 11431, 12312, 13278, 14340, 15511, 16807],
];

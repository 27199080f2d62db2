//! Weight families, partial and complete Bell polynomials, and the classical
//! integer sequences the specializations consume (derangements, involution
//! counts, Bessel numbers, Bell numbers and polynomials, Charlier
//! polynomials, Fibonacci numbers, tree counts).

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ring::{binomial, cayley_power, double_factorial_odd, factorial, rat_big, Poly, Rat};

/// Default cap on the symbolic variable index; weights t_j with j beyond the
/// budget are a hard error, never a silent zero.
pub const DEFAULT_BUDGET: usize = 16;

/// The rule assigning a weight to each block size j >= 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeightFamily {
    /// Block of size j weighs the ring variable t_j.
    Symbolic { budget: usize },
    /// (j-1)!: a cycle structure on each block, so weighted partitions of
    /// a set are exactly its permutations.
    Permutation,
    /// 1 for j in {1, 2}, else 0: partitions into blocks of size at most 2,
    /// i.e. involutions.
    Involution,
    /// j^(j-1): a rooted labeled tree on each block, so weighted partitions
    /// are labeled forests.
    Forest,
    /// Explicit finite weight list; indexing past the end is an error.
    Custom(Vec<Rat>),
}

impl WeightFamily {
    pub fn symbolic() -> Self {
        WeightFamily::Symbolic {
            budget: DEFAULT_BUDGET,
        }
    }

    pub fn symbolic_with_budget(budget: usize) -> Self {
        WeightFamily::Symbolic { budget }
    }

    /// All-ones weights of the given length (plain set partitions).
    pub fn ones(len: usize) -> Self {
        WeightFamily::Custom(vec![Rat::one(); len])
    }

    /// Weight of a block of size j >= 1.
    pub fn weight(&self, j: usize) -> Result<Poly> {
        debug_assert!(j >= 1);
        match self {
            WeightFamily::Symbolic { budget } => {
                if j > *budget {
                    Err(Error::Budget {
                        index: j,
                        budget: *budget,
                    })
                } else {
                    Ok(Poly::t(j))
                }
            }
            WeightFamily::Permutation => Ok(Poly::from_big(factorial(j - 1))),
            WeightFamily::Involution => {
                Ok(if j <= 2 { Poly::one() } else { Poly::zero() })
            }
            WeightFamily::Forest => Ok(Poly::from_big(cayley_power(j, j as i64 - 1))),
            WeightFamily::Custom(list) => list.get(j - 1).map(|r| Poly::constant(r.clone())).ok_or(
                Error::CustomWeight {
                    index: j,
                    len: list.len(),
                },
            ),
        }
    }

    /// True when every weight is a concrete rational (no symbolic t_j).
    pub fn is_numeric(&self) -> bool {
        !matches!(self, WeightFamily::Symbolic { .. })
    }

    pub fn label(&self) -> &'static str {
        match self {
            WeightFamily::Symbolic { .. } => "symbolic",
            WeightFamily::Permutation => "permutation",
            WeightFamily::Involution => "involution",
            WeightFamily::Forest => "forest",
            WeightFamily::Custom(_) => "custom",
        }
    }
}

fn effective_weight(w: &WeightFamily, j: usize, suppress_singletons: bool) -> Result<Poly> {
    if suppress_singletons && j == 1 {
        Ok(Poly::zero())
    } else {
        w.weight(j)
    }
}

/// Partial Bell polynomial: the total weight of partitions of an n-set into
/// exactly r blocks, by the convolution recurrence
/// B(n, r) = sum_j C(n-1, j-1) w(j) B(n-j, r-1) with B(0, 0) = 1.
/// Returns zero (not an error) when r > n.
pub fn partial_bell(n: usize, r: usize, w: &WeightFamily) -> Result<Poly> {
    if r > n {
        return Ok(Poly::zero());
    }
    // rows[m] holds B(m, r') for the current block count r'.
    let mut rows = vec![Poly::zero(); n + 1];
    rows[0] = Poly::one();
    for rp in 1..=r {
        let mut next = vec![Poly::zero(); n + 1];
        for m in rp..=n {
            let mut acc = Poly::zero();
            for j in 1..=(m - rp + 1) {
                let wj = w.weight(j)?;
                if wj.is_zero() {
                    continue;
                }
                let c = rat_big(binomial(m - 1, j - 1));
                acc = &acc + &(&wj.scale(&c) * &rows[m - j]);
            }
            next[m] = acc;
        }
        rows = next;
    }
    Ok(rows[n].clone())
}

/// Complete Bell polynomial: the total weight of all partitions of an n-set,
/// via Y(n+1) = sum_j C(n, j) w(j+1) Y(n-j), Y(0) = 1. With
/// `suppress_singletons` the weight of 1-blocks is replaced by zero, giving
/// the weight of partitions with no singleton block.
pub fn complete_bell(n: usize, w: &WeightFamily, suppress_singletons: bool) -> Result<Poly> {
    Ok(complete_bell_sequence(n, w, suppress_singletons)?
        .pop()
        .unwrap())
}

/// Y(0), Y(1), ..., Y(n_max) in one pass.
pub fn complete_bell_sequence(
    n_max: usize,
    w: &WeightFamily,
    suppress_singletons: bool,
) -> Result<Vec<Poly>> {
    let mut ys = Vec::with_capacity(n_max + 1);
    ys.push(Poly::one());
    for n in 0..n_max {
        let mut acc = Poly::zero();
        for j in 0..=n {
            let wj = effective_weight(w, j + 1, suppress_singletons)?;
            if wj.is_zero() {
                continue;
            }
            let c = rat_big(binomial(n, j));
            acc = &acc + &(&wj.scale(&c) * &ys[n - j]);
        }
        ys.push(acc);
    }
    Ok(ys)
}

/// The classical sequences used by the specializations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sequence {
    /// D(n): permutations of an n-set with no fixed point.
    /// D(0) = 1, D(1) = 0, D(k+2) = (k+1)(D(k) + D(k+1)).
    Derangement,
    /// I(n): involutions of an n-set.
    InvolutionCount,
    /// M(n): fixed-point-free involutions; (2k-1)!! when n = 2k, else 0.
    FpfInvolution,
    /// B(n): set partitions of an n-set.
    BellNumber,
    /// F(n) with F(0) = F(1) = 1: coefficients of 1/(1 - x - x^2).
    Fibonacci,
    /// (n+1)^(n-1): rooted labeled forests on an n-set, equivalently trees
    /// on n+1 nodes.
    TreeCount,
}

/// n-th element of the named sequence, as an exact rational (always a
/// nonnegative integer).
pub fn sequence(which: Sequence, n: usize) -> Rat {
    sequence_values(which, n).pop().unwrap()
}

/// Elements 0..=n_max of the named sequence.
pub fn sequence_values(which: Sequence, n_max: usize) -> Vec<Rat> {
    match which {
        Sequence::Derangement => {
            let mut d = vec![BigInt::one(), BigInt::zero()];
            for k in 0..n_max {
                let next = BigInt::from(k + 1) * (&d[k] + &d[k + 1]);
                d.push(next);
            }
            d.truncate(n_max + 1);
            d.into_iter().map(rat_big).collect()
        }
        Sequence::InvolutionCount => (0..=n_max)
            .map(|n| {
                let mut acc = BigInt::zero();
                for k in 0..=(n / 2) {
                    acc += binomial(n, 2 * k) * double_factorial_odd(k);
                }
                rat_big(acc)
            })
            .collect(),
        Sequence::FpfInvolution => (0..=n_max)
            .map(|n| {
                if n % 2 == 0 {
                    rat_big(double_factorial_odd(n / 2))
                } else {
                    Rat::zero()
                }
            })
            .collect(),
        Sequence::BellNumber => {
            let w = WeightFamily::ones(n_max.max(1));
            complete_bell_sequence(n_max, &w, false)
                .expect("all-ones weights never overflow")
                .into_iter()
                .map(|p| p.as_rational().expect("numeric family yields constants"))
                .collect()
        }
        Sequence::Fibonacci => {
            let mut f = vec![BigInt::one(), BigInt::one()];
            for k in 2..=n_max.max(1) {
                let next = &f[k - 1] + &f[k - 2];
                f.push(next);
            }
            f.truncate(n_max + 1);
            f.into_iter().map(rat_big).collect()
        }
        Sequence::TreeCount => (0..=n_max)
            .map(|n| rat_big(cayley_power(n + 1, n as i64 - 1)))
            .collect(),
    }
}

/// Bessel number: partitions of an n-set into j blocks of size at most 2,
/// n! / (2^(n-j) (n-j)! (2j-n)!); zero outside ceil(n/2) <= j <= n.
pub fn bessel_number(n: usize, j: usize) -> Rat {
    if j > n || 2 * j < n {
        return Rat::zero();
    }
    let denom = int_pow2(n - j) * factorial(n - j) * factorial(2 * j - n);
    rat_big(factorial(n) / denom)
}

fn int_pow2(e: usize) -> BigInt {
    BigInt::one() << e
}

/// Single-variable Bell polynomial B_k(y) = sum_r S(k, r) y^r where S is
/// the Stirling partition number; B_0 = 1.
pub fn bell_polynomial(k: usize) -> Poly {
    let ones = WeightFamily::ones(k.max(1));
    let mut acc = Poly::zero();
    for r in 0..=k {
        let stirling = partial_bell(k, r, &ones)
            .expect("all-ones weights never overflow")
            .as_rational()
            .expect("numeric family yields constants");
        acc = &acc + &Poly::y().pow(r).scale(&stirling);
    }
    acc
}

/// Re-normalized Charlier polynomial C_n(u, v) = sum_k C(n, k) (u)_k v^(n-k)
/// with the rising factorial (u)_k = u (u+1) ... (u+k-1).
pub fn charlier(n: usize, u: &Poly, v: &Poly) -> Poly {
    let mut acc = Poly::zero();
    let mut rising = Poly::one();
    for k in 0..=n {
        if k > 0 {
            rising = &rising * &(u + &Poly::from_int(k as i64 - 1));
        }
        let c = rat_big(binomial(n, k));
        acc = &acc + &(&rising * &v.pow(n - k)).scale(&c);
    }
    acc
}

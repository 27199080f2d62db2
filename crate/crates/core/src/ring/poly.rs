//! Sparse multivariate polynomials over the variables t1, t2, ..., lambda, y
//! with exact rational coefficients.
//!
//! The term map is a `BTreeMap` keyed by monomial in graded lexicographic
//! order (t1 < t2 < ... < lambda < y), with zero coefficients never stored,
//! so a `Poly` is always in canonical form and structural equality is
//! mathematical equality.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::{factorial, rat, rat_big, Rat};

/// A ring variable. The derived order is the canonical variable order:
/// t1 < t2 < ... < lambda < y.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Var {
    /// Weight variable t_j, 1-based.
    T(u32),
    Lambda,
    Y,
}

impl std::fmt::Display for Var {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Var::T(j) => write!(f, "t{j}"),
            Var::Lambda => write!(f, "lambda"),
            Var::Y => write!(f, "y"),
        }
    }
}

/// A power product of variables; pairs are sorted by variable and exponents
/// are strictly positive. The empty monomial is 1.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn unit() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var, exp: u32) -> Self {
        if exp == 0 {
            Monomial::unit()
        } else {
            Monomial(vec![(v, exp)])
        }
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&(_, e)| e as u64).sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0
            .iter()
            .find(|&&(w, _)| w == v)
            .map(|&(_, e)| e)
            .unwrap_or(0)
    }

    pub fn factors(&self) -> &[(Var, u32)] {
        &self.0
    }

    /// Product of two monomials (exponents add).
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            let (va, ea) = self.0[i];
            let (vb, eb) = other.0[j];
            match va.cmp(&vb) {
                Ordering::Less => {
                    out.push((va, ea));
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((vb, eb));
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((va, ea + eb));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }
}

impl Ord for Monomial {
    /// Graded lex: compare total degree first, then lexicographically by
    /// exponent of the smallest variable where the monomials differ.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let (mut i, mut j) = (0, 0);
            loop {
                match (self.0.get(i), other.0.get(j)) {
                    (None, None) => return Ordering::Equal,
                    (Some(_), None) => return Ordering::Greater,
                    (None, Some(_)) => return Ordering::Less,
                    (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                        Ordering::Equal => {
                            if ea != eb {
                                return ea.cmp(&eb);
                            }
                            i += 1;
                            j += 1;
                        }
                    },
                }
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial in canonical form.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Rat>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::unit(), c);
        }
        Poly { terms }
    }

    pub fn from_int(v: i64) -> Self {
        Poly::constant(rat(v))
    }

    pub fn from_big(v: num_bigint::BigInt) -> Self {
        Poly::constant(rat_big(v))
    }

    pub fn var(v: Var) -> Self {
        Poly::monomial(Monomial::var(v, 1), Rat::one())
    }

    /// t_j (1-based).
    pub fn t(j: usize) -> Self {
        Poly::var(Var::T(j as u32))
    }

    pub fn lambda() -> Self {
        Poly::var(Var::Lambda)
    }

    pub fn y() -> Self {
        Poly::var(Var::Y)
    }

    pub fn monomial(m: Monomial, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    /// The value of a constant polynomial, if it is one.
    pub fn as_rational(&self) -> Option<Rat> {
        match self.terms.len() {
            0 => Some(Rat::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_unit().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn total_degree(&self) -> u64 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Highest exponent of `v` across all terms.
    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms
            .keys()
            .map(|m| m.exponent(v))
            .max()
            .unwrap_or(0)
    }

    fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.clone(), v * c))
                .collect(),
        }
    }

    /// Self multiplied by itself `e` times; `pow(_, 0)` is 1.
    pub fn pow(&self, e: usize) -> Poly {
        let mut result = Poly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Simultaneous substitution of variables by polynomials. Unbound
    /// variables persist; the result is re-canonicalized.
    pub fn substitute(&self, bindings: &BTreeMap<Var, Poly>) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut term = Poly::constant(c.clone());
            let mut kept = Monomial::unit();
            for &(v, e) in m.factors() {
                match bindings.get(&v) {
                    Some(p) => term = &term * &p.pow(e as usize),
                    None => kept = kept.mul(&Monomial::var(v, e)),
                }
            }
            if !kept.is_unit() {
                term = &term * &Poly::monomial(kept, Rat::one());
            }
            out = &out + &term;
        }
        out
    }

    /// Substitute a single variable by an exact rational value.
    pub fn eval_at(&self, v: Var, value: &Rat) -> Poly {
        let mut b = BTreeMap::new();
        b.insert(v, Poly::constant(value.clone()));
        self.substitute(&b)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
        impl $trait<Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

/// Generalized binomial coefficient C(a, k) = a(a-1)...(a-k+1) / k! for a
/// polynomial top argument, e.g. C(k + lambda - 1, k).
pub fn poly_binomial(a: &Poly, k: usize) -> Poly {
    let mut num = Poly::one();
    for i in 0..k {
        num = &num * &(a - &Poly::from_int(i as i64));
    }
    num.scale(&Rat::new(1.into(), factorial(k)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn additive_inverse_cancels() {
        let p = Poly::t(1);
        assert!((&p + &(-&p)).is_zero());
    }

    #[test]
    fn difference_of_squares() {
        let sum = &Poly::t(1) + &Poly::t(2);
        let diff = &Poly::t(1) - &Poly::t(2);
        let expect = &Poly::t(1).pow(2) - &Poly::t(2).pow(2);
        assert_eq!(&sum * &diff, expect);
    }

    #[test]
    fn mixed_product_reduces_to_t1_t2() {
        // (t1^2 + t2)*t1 - t1*t1^2 = t1*t2
        let lhs = &(&(&Poly::t(1).pow(2) + &Poly::t(2)) * &Poly::t(1))
            - &(&Poly::t(1) * &Poly::t(1).pow(2));
        assert_eq!(lhs, &Poly::t(1) * &Poly::t(2));
    }

    #[test]
    fn pow_edge_cases() {
        assert_eq!(Poly::t(1).pow(0), Poly::one());
        let sq = (&Poly::t(1) + &Poly::one()).pow(2);
        let expect = &(&Poly::t(1).pow(2) + &Poly::t(1).scale(&rat(2))) + &Poly::one();
        assert_eq!(sq, expect);
        // (y+1)^3 = y^3 + 3y^2 + 3y + 1
        let cube = (&Poly::y() + &Poly::one()).pow(3);
        let expect = &(&(&Poly::y().pow(3) + &Poly::y().pow(2).scale(&rat(3)))
            + &Poly::y().scale(&rat(3)))
            + &Poly::one();
        assert_eq!(cube, expect);
    }

    #[test]
    fn substitute_examples() {
        let p = &Poly::t(1) * &Poly::t(2);
        let mut b = BTreeMap::new();
        b.insert(Var::T(1), Poly::one());
        b.insert(Var::T(2), Poly::one());
        assert_eq!(p.substitute(&b), Poly::one());

        let mut b = BTreeMap::new();
        b.insert(Var::T(2), Poly::one());
        assert_eq!(p.substitute(&b), Poly::t(1));

        // Y_3 at all-ones weights is the third Bell number 5.
        let y3 = &(&Poly::t(1).pow(3) + &(&Poly::t(1) * &Poly::t(2)).scale(&rat(3))) + &Poly::t(3);
        let mut b = BTreeMap::new();
        for j in 1..=3 {
            b.insert(Var::T(j), Poly::one());
        }
        assert_eq!(y3.substitute(&b), Poly::from_int(5));
    }

    #[test]
    fn poly_binomial_examples() {
        assert_eq!(poly_binomial(&Poly::lambda(), 0), Poly::one());
        // C(lambda, 2) = (lambda^2 - lambda)/2
        let expect = (&Poly::lambda().pow(2) - &Poly::lambda()).scale(&Rat::new(1.into(), 2.into()));
        assert_eq!(poly_binomial(&Poly::lambda(), 2), expect);
        let lp1 = &Poly::lambda() + &Poly::one();
        assert_eq!(poly_binomial(&lp1, 1), lp1);
    }

    #[test]
    fn graded_lex_order() {
        // Degree decides first; ties go to the earlier variable, so within
        // one degree t1-heavy monomials sort highest and y-terms lowest.
        let m = |pairs: &[(Var, u32)]| Monomial(pairs.to_vec());
        let t1sq = m(&[(Var::T(1), 2)]);
        let t1t2 = m(&[(Var::T(1), 1), (Var::T(2), 1)]);
        let t2sq = m(&[(Var::T(2), 2)]);
        let t1 = m(&[(Var::T(1), 1)]);
        assert!(t1sq > t1t2);
        assert!(t1t2 > t2sq);
        assert!(t2sq > t1);
        assert!(Monomial::unit() < t1);
        let y = m(&[(Var::Y, 1)]);
        let lam = m(&[(Var::Lambda, 1)]);
        let t99 = m(&[(Var::T(99), 1)]);
        assert!(t1 > t99);
        assert!(t99 > lam);
        assert!(lam > y);
    }
}

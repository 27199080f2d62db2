//! Umbrae as finite moment sequences and linear umbral evaluation.
//!
//! An umbra is a formal symbol S whose powers evaluate linearly against a
//! prescribed moment sequence: S^j maps to M_j. The moment sequences here
//! are complete Bell polynomials of a weight family and the classical
//! specializations (factorials, involution counts, fixed-point-free
//! involution counts, Bell numbers, derangement numbers, forest counts).
//!
//! Umbrae are truncated at a declared order J; evaluating an expression of
//! higher degree is a hard error rather than a silent zero.

use std::ops::{Add, Mul, Sub};

use num_traits::One;

use crate::combinatorics::{complete_bell_sequence, sequence_values, Sequence, WeightFamily};
use crate::error::{Error, Result};
use crate::ring::{binomial, rat_big, Poly, Rat};

/// A moment sequence M_0 = 1, M_1, ..., M_J with a display label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Umbra {
    moments: Vec<Poly>,
    label: String,
}

impl Umbra {
    /// Moments must start with M_0 = 1.
    pub fn new(label: impl Into<String>, moments: Vec<Poly>) -> Result<Self> {
        if moments.first() != Some(&Poly::one()) {
            return Err(Error::Parse("umbra moments must start with M_0 = 1".into()));
        }
        Ok(Umbra {
            moments,
            label: label.into(),
        })
    }

    /// Highest evaluable power J.
    pub fn order(&self) -> usize {
        self.moments.len() - 1
    }

    pub fn moment(&self, j: usize) -> &Poly {
        &self.moments[j]
    }

    pub fn moments(&self) -> &[Poly] {
        &self.moments
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Derangement-number moments D_0, ..., D_J.
    pub fn derangement(j_max: usize) -> Umbra {
        let moments = sequence_values(Sequence::Derangement, j_max)
            .into_iter()
            .map(Poly::constant)
            .collect();
        Umbra {
            moments,
            label: "D".into(),
        }
    }

    /// Bell-number moments B_0, ..., B_J.
    pub fn bell(j_max: usize) -> Umbra {
        let moments = sequence_values(Sequence::BellNumber, j_max)
            .into_iter()
            .map(Poly::constant)
            .collect();
        Umbra {
            moments,
            label: "B".into(),
        }
    }
}

/// Moments M_j = Y_j(w), the complete Bell polynomials of the family.
/// Covers the symbolic umbra and its permutation / involution / forest
/// specializations.
pub fn umbra_from_family(w: &WeightFamily, j_max: usize, label: &str) -> Result<Umbra> {
    let moments = complete_bell_sequence(j_max, w, false)?;
    Umbra::new(label, moments)
}

/// Moments M_j = Y_j with singleton weight zero; for the involution family
/// this is the fixed-point-free involution umbra.
pub fn umbra_from_family_no_singletons(
    w: &WeightFamily,
    j_max: usize,
    label: &str,
) -> Result<Umbra> {
    let moments = complete_bell_sequence(j_max, w, true)?;
    Umbra::new(label, moments)
}

/// Binomial transform of the moments: the umbra of S + c, with
/// M'_n = sum_j C(n, j) c^(n-j) M_j.
pub fn shifted_umbra(u: &Umbra, c: &Rat) -> Umbra {
    let mut moments = Vec::with_capacity(u.moments.len());
    for n in 0..u.moments.len() {
        let mut acc = Poly::zero();
        let mut c_pow = Rat::one();
        // walk j = n down to 0 so the power of c grows incrementally
        for j in (0..=n).rev() {
            let coeff = rat_big(binomial(n, j)) * &c_pow;
            acc = &acc + &u.moments[j].scale(&coeff);
            c_pow *= c;
        }
        moments.push(acc);
    }
    Umbra {
        moments,
        label: format!("{}+{}", u.label, c),
    }
}

/// A polynomial in one umbra symbol with `Poly` coefficients:
/// coeffs[j] * S^j summed over j.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UmbralExpr {
    coeffs: Vec<Poly>,
}

impl UmbralExpr {
    pub fn zero() -> Self {
        UmbralExpr::default()
    }

    pub fn constant(p: Poly) -> Self {
        let mut e = UmbralExpr { coeffs: vec![p] };
        e.trim();
        e
    }

    /// The bare symbol S.
    pub fn symbol() -> Self {
        UmbralExpr {
            coeffs: vec![Poly::zero(), Poly::one()],
        }
    }

    pub fn symbol_pow(e: usize) -> Self {
        let mut coeffs = vec![Poly::zero(); e + 1];
        coeffs[e] = Poly::one();
        UmbralExpr { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, j: usize) -> Poly {
        self.coeffs.get(j).cloned().unwrap_or_else(Poly::zero)
    }

    pub fn scale(&self, p: &Poly) -> UmbralExpr {
        let mut e = UmbralExpr {
            coeffs: self.coeffs.iter().map(|c| c * p).collect(),
        };
        e.trim();
        e
    }

    pub fn pow(&self, e: usize) -> UmbralExpr {
        let mut acc = UmbralExpr::constant(Poly::one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Poly::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl Add for &UmbralExpr {
    type Output = UmbralExpr;
    fn add(self, rhs: &UmbralExpr) -> UmbralExpr {
        let mut coeffs = vec![Poly::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (j, c) in coeffs.iter_mut().enumerate() {
            *c = &self.coeff(j) + &rhs.coeff(j);
        }
        let mut e = UmbralExpr { coeffs };
        e.trim();
        e
    }
}

impl Sub for &UmbralExpr {
    type Output = UmbralExpr;
    fn sub(self, rhs: &UmbralExpr) -> UmbralExpr {
        let mut coeffs = vec![Poly::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (j, c) in coeffs.iter_mut().enumerate() {
            *c = &self.coeff(j) - &rhs.coeff(j);
        }
        let mut e = UmbralExpr { coeffs };
        e.trim();
        e
    }
}

impl Mul for &UmbralExpr {
    type Output = UmbralExpr;
    fn mul(self, rhs: &UmbralExpr) -> UmbralExpr {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return UmbralExpr::zero();
        }
        let mut coeffs = vec![Poly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        let mut e = UmbralExpr { coeffs };
        e.trim();
        e
    }
}

/// Linear umbral evaluation: replace S^j by the j-th moment.
/// Errors when the expression degree exceeds the umbra order.
pub fn umbral_eval(e: &UmbralExpr, u: &Umbra) -> Result<Poly> {
    if e.coeffs.len() > u.moments.len() {
        return Err(Error::UmbraDegree {
            degree: e.degree(),
            order: u.order(),
        });
    }
    let mut acc = Poly::zero();
    for (j, c) in e.coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        acc = &acc + &(c * u.moment(j));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;

    #[test]
    fn family_umbra_moments() {
        let p = umbra_from_family(&WeightFamily::Permutation, 4, "P").unwrap();
        let expect: Vec<Poly> = [1, 1, 2, 6, 24].map(Poly::from_int).into();
        assert_eq!(p.moments(), expect);

        let i = umbra_from_family(&WeightFamily::Involution, 4, "I").unwrap();
        let expect: Vec<Poly> = [1, 1, 2, 4, 10].map(Poly::from_int).into();
        assert_eq!(i.moments(), expect);

        let b = umbra_from_family(&WeightFamily::ones(4), 4, "B").unwrap();
        let expect: Vec<Poly> = [1, 1, 2, 5, 15].map(Poly::from_int).into();
        assert_eq!(b.moments(), expect);
    }

    #[test]
    fn eval_examples() {
        // t1 * S * (S - t1) against the symbolic umbra gives t1*t2.
        let sym = umbra_from_family(&WeightFamily::symbolic(), 2, "Y").unwrap();
        let s = UmbralExpr::symbol();
        let expr = (&s * &(&s - &UmbralExpr::constant(Poly::t(1)))).scale(&Poly::t(1));
        assert_eq!(
            umbral_eval(&expr, &sym).unwrap(),
            &Poly::t(1) * &Poly::t(2)
        );

        // (S - 1)^n against the factorial umbra gives derangement numbers.
        let p = umbra_from_family(&WeightFamily::Permutation, 8, "P").unwrap();
        for n in 0..=8 {
            let expr = (&UmbralExpr::symbol() - &UmbralExpr::constant(Poly::one())).pow(n);
            assert_eq!(
                umbral_eval(&expr, &p).unwrap().as_rational().unwrap(),
                crate::combinatorics::sequence(Sequence::Derangement, n),
                "n={n}"
            );
        }

        // S^0 evaluates to M_0 = 1 against any umbra.
        assert_eq!(
            umbral_eval(&UmbralExpr::symbol_pow(0), &p).unwrap(),
            Poly::one()
        );
    }

    #[test]
    fn degree_overflow_is_error() {
        let p = umbra_from_family(&WeightFamily::Permutation, 3, "P").unwrap();
        let e = UmbralExpr::symbol_pow(4);
        assert!(matches!(
            umbral_eval(&e, &p),
            Err(Error::UmbraDegree { degree: 4, order: 3 })
        ));
    }

    #[test]
    fn shifted_umbra_examples() {
        // Shifting the fixed-point-free involution umbra by 1 gives the
        // involution umbra.
        let m = umbra_from_family_no_singletons(&WeightFamily::Involution, 8, "M").unwrap();
        let i = umbra_from_family(&WeightFamily::Involution, 8, "I").unwrap();
        assert_eq!(shifted_umbra(&m, &rat(1)).moments(), i.moments());

        // Shift by zero is the identity.
        assert_eq!(shifted_umbra(&m, &rat(0)).moments(), m.moments());

        // Bell umbra: shifting by 1 advances the moment index by one.
        let b = Umbra::bell(8);
        let shifted = shifted_umbra(&b, &rat(1));
        for n in 0..=7 {
            assert_eq!(shifted.moment(n), b.moment(n + 1), "n={n}");
        }
    }

    #[test]
    fn eval_is_linear() {
        let u = umbra_from_family(&WeightFamily::symbolic(), 5, "Y").unwrap();
        let p = (&UmbralExpr::symbol() - &UmbralExpr::constant(Poly::t(1))).pow(3);
        let q = UmbralExpr::symbol_pow(2).scale(&Poly::t(2));
        let sum = &p + &q;
        assert_eq!(
            umbral_eval(&sum, &u).unwrap(),
            &umbral_eval(&p, &u).unwrap() + &umbral_eval(&q, &u).unwrap()
        );
    }

    #[test]
    fn bad_moment_head_rejected() {
        assert!(Umbra::new("bad", vec![Poly::from_int(2)]).is_err());
        assert!(Umbra::new("ok", vec![Poly::one(), Poly::t(1)]).is_ok());
    }

    #[test]
    fn involution_triangle_has_two_umbral_routes() {
        // S^k (S-1)^(n-k) against the involution umbra and
        // (S+1)^k S^(n-k) against the fixed-point-free umbra both give
        // Q(n, k).
        let i = umbra_from_family(&WeightFamily::Involution, 10, "I").unwrap();
        let m = umbra_from_family_no_singletons(&WeightFamily::Involution, 10, "M").unwrap();
        let tri = crate::singleton::build_triangle(&WeightFamily::Involution, 10).unwrap();
        let one = UmbralExpr::constant(Poly::one());
        for n in 0..=10usize {
            for k in 0..=n {
                let s = UmbralExpr::symbol();
                let via_i = &UmbralExpr::symbol_pow(k) * &(&s - &one).pow(n - k);
                let via_m = &(&s + &one).pow(k) * &UmbralExpr::symbol_pow(n - k);
                let a = umbral_eval(&via_i, &i).unwrap();
                let b = umbral_eval(&via_m, &m).unwrap();
                assert_eq!(a, b, "routes disagree at ({n}, {k})");
                assert_eq!(&a, tri.entry(n, k).unwrap(), "triangle mismatch at ({n}, {k})");
            }
        }
    }

    #[test]
    fn forest_triangle_matches_umbral_route() {
        // S^k (S-1)^(n-k) against the forest umbra gives L(n, k).
        let l = umbra_from_family(&WeightFamily::Forest, 9, "L").unwrap();
        let one = UmbralExpr::constant(Poly::one());
        for n in 0..=9usize {
            for k in 0..=n {
                let s = UmbralExpr::symbol();
                let expr = &UmbralExpr::symbol_pow(k) * &(&s - &one).pow(n - k);
                let value = umbral_eval(&expr, &l).unwrap().as_rational().unwrap();
                assert_eq!(
                    value,
                    crate::singleton::l_explicit(n - k, k),
                    "mismatch at ({n}, {k})"
                );
            }
        }
    }
}

//! The exact coefficient ring: arbitrary-precision rationals and sparse
//! multivariate polynomials over t1, t2, ..., lambda, y.

mod poly;
mod rational;
mod text;

pub use poly::{poly_binomial, Monomial, Poly, Var};
pub use rational::{
    binomial, cayley_power, double_factorial_odd, factorial, int_pow, is_integer,
    is_nonnegative_integer, rat, rat_big, rat_to_i64, Rat,
};

//! Exact coefficient representations of functions on one edge or on a pair of edges.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::Scalar;

/// `a2·x² + a1·x + a0` on `[0, L_edge]`.
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeFunction<S> {
    pub edge: usize,
    pub a2: S,
    pub a1: S,
    pub a0: S,
}

impl<S: Scalar> EdgeFunction<S> {
    pub fn zero(edge: usize) -> Self {
        EdgeFunction { edge, a2: S::zero(), a1: S::zero(), a0: S::zero() }
    }

    pub fn new(edge: usize, a2: S, a1: S, a0: S) -> Self {
        EdgeFunction { edge, a2, a1, a0 }
    }

    pub fn evaluate(&self, x: &S) -> S {
        (self.a2.clone() * x.clone() + self.a1.clone()) * x.clone() + self.a0.clone()
    }

    pub fn scale(&self, k: &S) -> Self {
        EdgeFunction::new(
            self.edge,
            self.a2.clone() * k.clone(),
            self.a1.clone() * k.clone(),
            self.a0.clone() * k.clone(),
        )
    }

    /// The same polynomial read as a function of the first variable of `e_i × e_j`.
    pub fn in_x(&self, j: usize) -> EdgePairFunction<S> {
        EdgePairFunction {
            c0: self.a0.clone(),
            cx: self.a1.clone(),
            cxx: self.a2.clone(),
            ..EdgePairFunction::zero(self.edge, j)
        }
    }

    /// The same polynomial read as a function of the second variable of `e_i × e_j`.
    pub fn in_y(&self, i: usize) -> EdgePairFunction<S> {
        EdgePairFunction {
            c0: self.a0.clone(),
            cy: self.a1.clone(),
            cyy: self.a2.clone(),
            ..EdgePairFunction::zero(i, self.edge)
        }
    }
}

impl<S: Scalar> Add for EdgeFunction<S> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        debug_assert_eq!(self.edge, rhs.edge);
        EdgeFunction::new(self.edge, self.a2 + rhs.a2, self.a1 + rhs.a1, self.a0 + rhs.a0)
    }
}

/// `c0 + cx·x + cy·y + cxx·x² + cyy·y² + cxy·xy + cabs·|x−y|` on `e_i × e_j`.
#[derive(Debug, Clone, PartialEq)]
pub struct EdgePairFunction<S> {
    pub i: usize,
    pub j: usize,
    pub c0: S,
    pub cx: S,
    pub cy: S,
    pub cxx: S,
    pub cyy: S,
    pub cxy: S,
    pub cabs: S,
}

impl<S: Scalar> EdgePairFunction<S> {
    pub fn zero(i: usize, j: usize) -> Self {
        let z = S::zero();
        EdgePairFunction {
            i,
            j,
            c0: z.clone(),
            cx: z.clone(),
            cy: z.clone(),
            cxx: z.clone(),
            cyy: z.clone(),
            cxy: z.clone(),
            cabs: z,
        }
    }

    pub fn constant(i: usize, j: usize, c: S) -> Self {
        EdgePairFunction { c0: c, ..Self::zero(i, j) }
    }

    pub fn evaluate(&self, x: &S, y: &S) -> S {
        let (x, y) = (x.clone(), y.clone());
        self.c0.clone()
            + self.cx.clone() * x.clone()
            + self.cy.clone() * y.clone()
            + self.cxx.clone() * x.clone() * x.clone()
            + self.cyy.clone() * y.clone() * y.clone()
            + self.cxy.clone() * x.clone() * y.clone()
            + self.cabs.clone() * (x - y).abs()
    }

    /// `(y, x) ↦ self(x, y)` as a function on `e_j × e_i`.
    pub fn swapped(&self) -> Self {
        EdgePairFunction {
            i: self.j,
            j: self.i,
            c0: self.c0.clone(),
            cx: self.cy.clone(),
            cy: self.cx.clone(),
            cxx: self.cyy.clone(),
            cyy: self.cxx.clone(),
            cxy: self.cxy.clone(),
            cabs: self.cabs.clone(),
        }
    }

    pub fn coefficients(&self) -> [&S; 7] {
        [&self.c0, &self.cx, &self.cy, &self.cxx, &self.cyy, &self.cxy, &self.cabs]
    }

    fn coefficients_mut(&mut self) -> [&mut S; 7] {
        [
            &mut self.c0,
            &mut self.cx,
            &mut self.cy,
            &mut self.cxx,
            &mut self.cyy,
            &mut self.cxy,
            &mut self.cabs,
        ]
    }

    pub fn approx_eq(&self, other: &Self) -> bool {
        self.i == other.i
            && self.j == other.j
            && self.coefficients().iter().zip(other.coefficients()).all(|(a, b)| a.approx_eq(b))
    }

    fn zip_with(mut self, rhs: &Self, f: impl Fn(S, &S) -> S) -> Self {
        debug_assert_eq!((self.i, self.j), (rhs.i, rhs.j));
        for (a, b) in self.coefficients_mut().into_iter().zip(rhs.coefficients()) {
            *a = f(a.clone(), b);
        }
        self
    }
}

impl<S: Scalar> Add for EdgePairFunction<S> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        self.zip_with(&rhs, |a, b| a + b.clone())
    }
}

impl<S: Scalar> Sub for EdgePairFunction<S> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self.zip_with(&rhs, |a, b| a - b.clone())
    }
}

impl<S: Scalar> Mul<S> for EdgePairFunction<S> {
    type Output = Self;

    fn mul(mut self, k: S) -> Self {
        for a in self.coefficients_mut() {
            *a = a.clone() * k.clone();
        }
        self
    }
}

impl<S: Scalar> Neg for EdgePairFunction<S> {
    type Output = Self;

    fn neg(self) -> Self {
        self * (-S::one())
    }
}

/// `1/6 + 1/4*x^2 - 1/2*|x-y|`; zero terms are omitted, `0` if all vanish.
impl<S: Scalar> fmt::Display for EdgePairFunction<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const NAMES: [&str; 7] = ["", "x", "y", "x^2", "y^2", "x*y", "|x-y|"];
        let mut first = true;
        for (c, name) in self.coefficients().into_iter().zip(NAMES) {
            if c.is_zero() {
                continue;
            }
            let body = if name.is_empty() {
                c.abs().to_string()
            } else {
                format!("{}*{name}", c.abs())
            };
            match (first, c.is_negative()) {
                (true, false) => write!(f, "{body}")?,
                (true, true) => write!(f, "-{body}")?,
                (false, false) => write!(f, " + {body}")?,
                (false, true) => write!(f, " - {body}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

use std::ops::Add;

use super::MetrizedGraph;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Integer combination of vertices, stored as one coefficient per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Divisor(Vec<i64>);

impl Divisor {
    pub fn new(coefficients: Vec<i64>) -> Self {
        Divisor(coefficients)
    }

    pub fn zero(n: usize) -> Self {
        Divisor(vec![0; n])
    }

    /// `coefficient · p_vertex` on a graph with `n` vertices.
    pub fn point(n: usize, vertex: usize, coefficient: i64) -> Self {
        let mut c = vec![0; n];
        c[vertex] = coefficient;
        Divisor(c)
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_effective(&self) -> bool {
        self.0.iter().all(|&a| a >= 0)
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&k| self.0[k] != 0).collect()
    }

    /// Nonzero coefficients with their vertex index.
    pub fn terms(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.0.iter().copied().enumerate().filter(|&(_, a)| a != 0)
    }

    /// Same divisor on a refinement with `n >= len` vertices (new vertices get 0).
    pub fn extended(&self, n: usize) -> Self {
        let mut c = self.0.clone();
        c.resize(n.max(c.len()), 0);
        Divisor(c)
    }

    pub fn check_for<S: Scalar>(&self, g: &MetrizedGraph<S>) -> Result<()> {
        if self.0.len() != g.vertex_count() {
            return Err(Error::DivisorLength { expected: g.vertex_count(), got: self.0.len() });
        }
        Ok(())
    }

    /// Fails with `BadDegree` when `deg(D) = -2`.
    pub fn check_admissible(&self) -> Result<()> {
        if self.degree() == -2 {
            return Err(Error::BadDegree { degree: -2 });
        }
        Ok(())
    }
}

impl Add for &Divisor {
    type Output = Divisor;

    fn add(self, rhs: &Divisor) -> Divisor {
        assert_eq!(self.len(), rhs.len(), "divisors live on different vertex sets");
        Divisor(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalDivisor {
    pub divisor: Divisor,
    /// `q >= 0` and `K` effective.
    pub polarized: bool,
}

impl<S: Scalar> MetrizedGraph<S> {
    /// `K = Σ (v(s) − 2 + 2q(s)) s` for a genus function `q` on the vertices.
    pub fn canonical_divisor(&self, q: &[i64]) -> Result<CanonicalDivisor> {
        if q.len() != self.vertex_count() {
            return Err(Error::DivisorLength { expected: self.vertex_count(), got: q.len() });
        }
        let divisor = Divisor::new(
            (0..self.vertex_count()).map(|v| self.valence(v) as i64 - 2 + 2 * q[v]).collect(),
        );
        let polarized = q.iter().all(|&x| x >= 0) && divisor.is_effective();
        Ok(CanonicalDivisor { divisor, polarized })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::{Rational, Scalar};

    #[test]
    fn canonical_divisor_examples() {
        let one = Rational::from_i64(1);
        let banana = catalog::banana(one.clone(), one.clone() * Rational::from_i64(2), one.clone());
        let k = banana.canonical_divisor(&[0, 0, 0, 0]).unwrap();
        assert_eq!(k.divisor.coefficients(), &[1, 1, 0, 0]);
        assert!(k.polarized);

        let circle = catalog::circle::<Rational>();
        let k = circle.canonical_divisor(&[0, 0, 0]).unwrap();
        assert_eq!(k.divisor, Divisor::zero(3));
        assert!(k.polarized);

        let cl = catalog::circle_line_adequate(one.clone(), one.clone(), one.clone());
        let k = cl.canonical_divisor(&[0, 0, 1, 1]).unwrap();
        assert_eq!(k.divisor.coefficients(), &[0, 0, 3, 1]);
        assert!(k.polarized);

        let k = cl.canonical_divisor(&[0, 0, -1, 0]).unwrap();
        assert!(!k.polarized);
        assert!(cl.canonical_divisor(&[0]).is_err());
    }

    #[test]
    fn degree_and_admissibility() {
        let d = Divisor::new(vec![-1, -1, 0]);
        assert_eq!(d.degree(), -2);
        assert_eq!(d.check_admissible(), Err(Error::BadDegree { degree: -2 }));
        assert_eq!(d.support(), vec![0, 1]);
        let e = &d + &Divisor::point(3, 2, 5);
        assert_eq!(e.coefficients(), &[-1, -1, 5]);
        assert!(e.check_admissible().is_ok());
        assert_eq!(e.extended(5).coefficients(), &[-1, -1, 5, 0, 0]);
    }
}

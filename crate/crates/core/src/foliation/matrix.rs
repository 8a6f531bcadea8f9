use std::fmt;

use num_traits::{One, Zero};

use crate::{ExactField, GaussianRational as G};

/// 2×2 matrix over Q(i), row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix2 {
    pub m: [[G; 2]; 2],
}

impl Matrix2 {
    pub fn new(m: [[G; 2]; 2]) -> Self {
        Self { m }
    }

    pub fn diag(a: G, d: G) -> Self {
        Self::new([[a, G::zero()], [G::zero(), d]])
    }

    pub fn identity() -> Self {
        Self::diag(G::one(), G::one())
    }

    pub fn trace(&self) -> G {
        self.m[0][0].clone() + self.m[1][1].clone()
    }

    pub fn det(&self) -> G {
        self.m[0][0].clone() * self.m[1][1].clone() - self.m[0][1].clone() * self.m[1][0].clone()
    }

    pub fn is_zero(&self) -> bool {
        self.m.iter().flatten().all(|v| v.is_zero())
    }

    /// True iff the matrix is a multiple of the identity.
    pub fn is_scalar(&self) -> bool {
        self.m[0][1].is_zero() && self.m[1][0].is_zero() && self.m[0][0] == self.m[1][1]
    }

    pub fn mul(&self, o: &Self) -> Self {
        let e = |i: usize, j: usize| {
            self.m[i][0].clone() * o.m[0][j].clone() + self.m[i][1].clone() * o.m[1][j].clone()
        };
        Self::new([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    pub fn inverse(&self) -> Option<Self> {
        let d = self.det().inverse()?;
        let [[a, b], [c, dd]] = self.m.clone();
        Some(Self::new([[dd * d.clone(), -b * d.clone()], [-c * d.clone(), a * d]]))
    }
}

impl fmt::Display for Matrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.m[0][0], self.m[0][1], self.m[1][0], self.m[1][1])
    }
}

impl fmt::Debug for Matrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

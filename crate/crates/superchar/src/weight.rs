//! Weights: exact rational coordinate vectors over a labeled ε/δ basis of t*.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::rat::{fmt_rat, rat, Rat};

/// A point of t* with coordinates in the ε-block followed by the δ-block.
/// For the q and p families the δ-block is empty.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Weight {
    pub eps: Vec<Rat>,
    pub delta: Vec<Rat>,
}

impl Weight {
    pub fn zero(m: usize, n: usize) -> Self {
        Weight {
            eps: vec![Rat::zero(); m],
            delta: vec![Rat::zero(); n],
        }
    }

    /// Basis vector ε_{i+1} (0-indexed argument).
    pub fn eps_basis(m: usize, n: usize, i: usize) -> Self {
        let mut w = Weight::zero(m, n);
        w.eps[i] = rat(1);
        w
    }

    /// Basis vector δ_{j+1} (0-indexed argument).
    pub fn delta_basis(m: usize, n: usize, j: usize) -> Self {
        let mut w = Weight::zero(m, n);
        w.delta[j] = rat(1);
        w
    }

    /// Build from integer coordinates, eps block then delta block.
    pub fn from_ints(eps: &[i64], delta: &[i64]) -> Self {
        Weight {
            eps: eps.iter().map(|&k| rat(k)).collect(),
            delta: delta.iter().map(|&k| rat(k)).collect(),
        }
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.eps.len(), self.delta.len())
    }

    pub fn dim(&self) -> usize {
        self.eps.len() + self.delta.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords().all(|c| c.is_zero())
    }

    /// All coordinates, eps block then delta block.
    pub fn coords(&self) -> impl Iterator<Item = &Rat> {
        self.eps.iter().chain(self.delta.iter())
    }

    pub fn coord(&self, k: usize) -> &Rat {
        if k < self.eps.len() {
            &self.eps[k]
        } else {
            &self.delta[k - self.eps.len()]
        }
    }

    pub fn as_vec(&self) -> Vec<Rat> {
        self.coords().cloned().collect()
    }

    pub fn from_vec(m: usize, n: usize, v: Vec<Rat>) -> Self {
        assert_eq!(v.len(), m + n);
        let mut it = v.into_iter();
        Weight {
            eps: (&mut it).take(m).collect(),
            delta: it.collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Weight {
            eps: self.eps.iter().map(|x| x * c).collect(),
            delta: self.delta.iter().map(|x| x * c).collect(),
        }
    }

    /// Coordinates all integral.
    pub fn is_integral(&self) -> bool {
        self.coords().all(crate::rat::is_integer)
    }

    /// First index with a nonzero coordinate, if any.
    pub fn first_support(&self) -> Option<usize> {
        self.coords().position(|c| !c.is_zero())
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.dims(), rhs.dims(), "weight dimension mismatch");
        Weight {
            eps: self.eps.iter().zip(&rhs.eps).map(|(a, b)| a + b).collect(),
            delta: self
                .delta
                .iter()
                .zip(&rhs.delta)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        assert_eq!(self.dims(), rhs.dims(), "weight dimension mismatch");
        Weight {
            eps: self.eps.iter().zip(&rhs.eps).map(|(a, b)| a - b).collect(),
            delta: self
                .delta
                .iter()
                .zip(&rhs.delta)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight {
            eps: self.eps.iter().map(|x| -x).collect(),
            delta: self.delta.iter().map(|x| -x).collect(),
        }
    }
}

impl Mul<&Weight> for i64 {
    type Output = Weight;
    fn mul(self, rhs: &Weight) -> Weight {
        rhs.scale(&rat(self))
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let eps: Vec<String> = self.eps.iter().map(fmt_rat).collect();
        let delta: Vec<String> = self.delta.iter().map(fmt_rat).collect();
        if delta.is_empty() {
            write!(f, "({})", eps.join(","))
        } else {
            write!(f, "({}|{})", eps.join(","), delta.join(","))
        }
    }
}

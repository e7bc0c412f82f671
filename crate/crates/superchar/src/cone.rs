//! Exact Fourier–Motzkin elimination for rational polyhedra given as
//! systems of inequalities `Σ aᵢxᵢ ≥ rhs`. Used for the (Pr1) cone test and
//! for bounding the dominant polytope behind Y_λ enumeration.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rat::Rat;

/// One inequality: `coeffs · x >= rhs`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Ineq {
    pub coeffs: Vec<Rat>,
    pub rhs: Rat,
}

impl Ineq {
    /// Scale by the positive factor making all entries a primitive integer
    /// vector; this is the canonical form used for deduplication.
    fn normalize(&self) -> Ineq {
        let mut lcm = BigInt::one();
        for c in self.coeffs.iter().chain(std::iter::once(&self.rhs)) {
            lcm = lcm.lcm(c.denom());
        }
        let scaled: Vec<BigInt> = self
            .coeffs
            .iter()
            .chain(std::iter::once(&self.rhs))
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let mut gcd = BigInt::zero();
        for v in &scaled {
            gcd = gcd.gcd(v);
        }
        if gcd.is_zero() {
            gcd = BigInt::one();
        }
        let mut out: Vec<Rat> = scaled
            .into_iter()
            .map(|v| Rat::from_integer(v / &gcd))
            .collect();
        let rhs = out.pop().unwrap();
        Ineq { coeffs: out, rhs }
    }

    fn is_trivial(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero()) && !self.rhs.is_positive()
    }

    fn is_contradiction(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero()) && self.rhs.is_positive()
    }
}

/// A conjunction of inequalities over a fixed number of variables.
#[derive(Clone, Debug)]
pub struct System {
    pub nvars: usize,
    rows: BTreeSet<Ineq>,
}

impl System {
    pub fn new(nvars: usize) -> Self {
        System {
            nvars,
            rows: BTreeSet::new(),
        }
    }

    pub fn add(&mut self, coeffs: Vec<Rat>, rhs: Rat) {
        assert_eq!(coeffs.len(), self.nvars);
        let row = Ineq { coeffs, rhs }.normalize();
        if !row.is_trivial() {
            self.rows.insert(row);
        }
    }

    /// x_k >= 0 for every variable.
    pub fn add_nonnegativity(&mut self) {
        for k in 0..self.nvars {
            let mut c = vec![Rat::zero(); self.nvars];
            c[k] = Rat::one();
            self.add(c, Rat::zero());
        }
    }

    /// Eliminate variable `k`, keeping the projection onto the rest.
    /// Variable count is unchanged; column k becomes identically zero.
    pub fn eliminate(&self, k: usize) -> System {
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        let mut out = System::new(self.nvars);
        for row in &self.rows {
            match row.coeffs[k].cmp(&Rat::zero()) {
                std::cmp::Ordering::Greater => pos.push(row),
                std::cmp::Ordering::Less => neg.push(row),
                std::cmp::Ordering::Equal => {
                    out.rows.insert(row.clone());
                }
            }
        }
        for p in &pos {
            for n in &neg {
                // (-n_k)·p + p_k·n has zero k-coefficient; both factors > 0,
                // so the inequality direction is preserved.
                let a = -&n.coeffs[k];
                let b = p.coeffs[k].clone();
                let coeffs: Vec<Rat> = p
                    .coeffs
                    .iter()
                    .zip(&n.coeffs)
                    .map(|(pc, nc)| &(pc * &a) + &(nc * &b))
                    .collect();
                let rhs = &(&p.rhs * &a) + &(&n.rhs * &b);
                out.add(coeffs, rhs);
            }
        }
        out
    }

    /// Decide nonemptiness by eliminating every variable.
    pub fn is_feasible(&self) -> bool {
        let mut sys = self.clone();
        if sys.rows.iter().any(Ineq::is_contradiction) {
            return false;
        }
        for k in 0..self.nvars {
            sys = sys.eliminate(k);
            if sys.rows.iter().any(Ineq::is_contradiction) {
                return false;
            }
        }
        true
    }

    /// Project onto variable `k`: returns (max lower bound, min upper bound).
    /// `None` on a side means unbounded there. Returns `Err(())` when the
    /// system is infeasible (detected as a constant contradiction).
    #[allow(clippy::result_unit_err)]
    pub fn bounds(&self, k: usize) -> Result<(Option<Rat>, Option<Rat>), ()> {
        let mut sys = self.clone();
        for j in 0..self.nvars {
            if j != k {
                sys = sys.eliminate(j);
            }
        }
        let mut lower: Option<Rat> = None;
        let mut upper: Option<Rat> = None;
        for row in &sys.rows {
            let c = &row.coeffs[k];
            if c.is_zero() {
                if row.is_contradiction() {
                    return Err(());
                }
                continue;
            }
            let bound = &row.rhs / c;
            if c.is_positive() {
                if lower.as_ref().is_none_or(|l| bound > *l) {
                    lower = Some(bound);
                }
            } else if upper.as_ref().is_none_or(|u| bound < *u) {
                upper = Some(bound);
            }
        }
        if let (Some(l), Some(u)) = (&lower, &upper) {
            if l > u {
                return Err(());
            }
        }
        Ok((lower, upper))
    }
}

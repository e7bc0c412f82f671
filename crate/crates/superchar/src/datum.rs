//! Root data for the supported families of classical Lie superalgebras:
//! gl(m|n), sl(m|n) with m≠n, osp(2m+1|2n), osp(2m|2n), q_n and p_n.
//!
//! Root sets, the invariant form and the h_β pairings are generated from the
//! defining matrix realizations (supertrace form; brackets of root vectors)
//! and frozen here as closed formulas with unit tests. Weights are exact
//! rational coordinate vectors; no floating point is used anywhere.
//!
//! The exceptional families are not instantiable: the parameter of D(2|1;a)
//! need not be rational, and the classical families exercise every
//! algorithm. For reference, their mixed simplified diagrams are: D(2|1;a),
//! a triangle of three isotropic nodes; F(4), one even node attached to a
//! three-node isotropic cycle; G(3), the chain o--(x)--*.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::rat::{is_integer, is_natural, rat, Rat};
use crate::weight::Weight;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "gl")]
    Gl,
    #[serde(rename = "sl")]
    Sl,
    #[serde(rename = "q")]
    Q,
    #[serde(rename = "p")]
    P,
    /// osp(2m+1|2n), the B(m|n) series.
    #[serde(rename = "ospB")]
    OspB,
    /// osp(2m|2n), the D(m|n) series (C(n+1) when m = 1).
    #[serde(rename = "ospD")]
    OspD,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Gl => "gl",
            Family::Sl => "sl",
            Family::Q => "q",
            Family::P => "p",
            Family::OspB => "ospB",
            Family::OspD => "ospD",
        }
    }

    /// Families with a non-degenerate invariant bilinear form (Kac–Moody).
    pub fn is_kac_moody(self) -> bool {
        matches!(self, Family::Gl | Family::Sl | Family::OspB | Family::OspD)
    }
}

/// Instance descriptor: family plus the size parameters. For q and p the
/// parameter is `n` and `m` must be zero.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct AlgebraDesc {
    pub family: Family,
    #[serde(default)]
    pub m: usize,
    pub n: usize,
}

impl AlgebraDesc {
    pub fn new(family: Family, m: usize, n: usize) -> Self {
        AlgebraDesc { family, m, n }
    }

    /// Parse either a JSON descriptor or a shorthand like `gl(2|1)`,
    /// `osp(3|2)`, `q(2)`, `p(3)`.
    pub fn parse(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.starts_with('{') {
            return serde_json::from_str(s).map_err(Error::from);
        }
        let (name, rest) = s
            .split_once('(')
            .ok_or_else(|| Error::BadDescriptor(s.to_string()))?;
        let args = rest
            .strip_suffix(')')
            .ok_or_else(|| Error::BadDescriptor(s.to_string()))?;
        let parse_num = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::BadDescriptor(s.to_string()))
        };
        match name.trim() {
            "q" => Ok(AlgebraDesc::new(Family::Q, 0, parse_num(args)?)),
            "p" => Ok(AlgebraDesc::new(Family::P, 0, parse_num(args)?)),
            "gl" | "sl" | "ospB" | "ospD" | "osp" => {
                let (a, b) = args
                    .split_once('|')
                    .ok_or_else(|| Error::BadDescriptor(s.to_string()))?;
                let (a, b) = (parse_num(a)?, parse_num(b)?);
                match name.trim() {
                    "gl" => Ok(AlgebraDesc::new(Family::Gl, a, b)),
                    "sl" => Ok(AlgebraDesc::new(Family::Sl, a, b)),
                    "ospB" => Ok(AlgebraDesc::new(Family::OspB, a, b)),
                    "ospD" => Ok(AlgebraDesc::new(Family::OspD, a, b)),
                    // osp(a|b) with the matrix sizes: a odd -> B((a-1)/2, b/2),
                    // a even -> D(a/2, b/2).
                    "osp" => {
                        if b % 2 != 0 {
                            return Err(Error::BadDescriptor(s.to_string()));
                        }
                        if a % 2 == 1 {
                            Ok(AlgebraDesc::new(Family::OspB, (a - 1) / 2, b / 2))
                        } else {
                            Ok(AlgebraDesc::new(Family::OspD, a / 2, b / 2))
                        }
                    }
                    _ => unreachable!(),
                }
            }
            _ => Err(Error::BadDescriptor(s.to_string())),
        }
    }
}

impl fmt::Display for AlgebraDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::Q | Family::P => write!(f, "{}({})", self.family.name(), self.n),
            _ => write!(f, "{}({}|{})", self.family.name(), self.m, self.n),
        }
    }
}

/// A root together with its parity and isotropy. For the q family every root
/// carries both an even and an odd root vector.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Root {
    pub weight: Weight,
    pub even: bool,
    pub odd: bool,
    pub isotropic: bool,
}

/// Immutable root-system data for one algebra instance. All operations are
/// pure; the struct is safe to share across threads read-only.
#[derive(Clone, Debug)]
pub struct RootDatum {
    desc: AlgebraDesc,
    eps_len: usize,
    delta_len: usize,
    roots: Vec<Root>,
    root_set: BTreeSet<Weight>,
    iso_set: BTreeSet<Weight>,
    even_set: BTreeSet<Weight>,
    /// Simple roots of the fixed Δ₀⁺.
    pi: Vec<Weight>,
    delta0_plus: Vec<Weight>,
}

impl RootDatum {
    pub fn build(desc: AlgebraDesc) -> Result<RootDatum, Error> {
        let AlgebraDesc { family, m, n } = desc;
        let bad = |why: &str| Error::UnsupportedAlgebra(format!("{desc}: {why}"));
        match family {
            Family::Gl => {
                if m + n == 0 {
                    return Err(bad("m + n must be positive"));
                }
            }
            Family::Sl => {
                if m == n {
                    return Err(bad("sl(n|n) is excluded; use gl(n|n)"));
                }
                if m + n == 0 {
                    return Err(bad("m + n must be positive"));
                }
            }
            Family::Q | Family::P => {
                if m != 0 {
                    return Err(bad("q and p take a single parameter n (set m = 0)"));
                }
                if n == 0 {
                    return Err(bad("n must be positive"));
                }
            }
            Family::OspB => {
                if m + n == 0 {
                    return Err(bad("m + n must be positive"));
                }
            }
            Family::OspD => {
                if m == 0 {
                    return Err(bad("osp(2m|2n) needs m >= 1"));
                }
            }
        }

        let (eps_len, delta_len) = match family {
            Family::Q | Family::P => (n, 0),
            _ => (m, n),
        };
        let e = |i: usize| Weight::eps_basis(eps_len, delta_len, i);
        let d = |j: usize| Weight::delta_basis(eps_len, delta_len, j);

        let mut roots: Vec<Root> = Vec::new();
        let mut pi: Vec<Weight> = Vec::new();
        let mut delta0_plus: Vec<Weight> = Vec::new();

        let even_root = |w: Weight| Root {
            weight: w,
            even: true,
            odd: false,
            isotropic: false,
        };
        let iso_root = |w: Weight| Root {
            weight: w,
            even: false,
            odd: true,
            isotropic: true,
        };
        let odd_aniso = |w: Weight| Root {
            weight: w,
            even: false,
            odd: true,
            isotropic: false,
        };

        match family {
            Family::Gl | Family::Sl => {
                for i in 0..m {
                    for j in 0..m {
                        if i != j {
                            let w = &e(i) - &e(j);
                            if i < j {
                                delta0_plus.push(w.clone());
                            }
                            roots.push(even_root(w));
                        }
                    }
                }
                for i in 0..n {
                    for j in 0..n {
                        if i != j {
                            let w = &d(i) - &d(j);
                            if i < j {
                                delta0_plus.push(w.clone());
                            }
                            roots.push(even_root(w));
                        }
                    }
                }
                for i in 0..m {
                    for j in 0..n {
                        roots.push(iso_root(&e(i) - &d(j)));
                        roots.push(iso_root(&d(j) - &e(i)));
                    }
                }
                for i in 0..m.saturating_sub(1) {
                    pi.push(&e(i) - &e(i + 1));
                }
                for j in 0..n.saturating_sub(1) {
                    pi.push(&d(j) - &d(j + 1));
                }
            }
            Family::OspB | Family::OspD => {
                // so(2m+1) resp. so(2m) on the ε block.
                for i in 0..m {
                    for j in (i + 1)..m {
                        for (si, sj) in [(1, -1), (-1, 1), (1, 1), (-1, -1)] {
                            let w = &(si * &e(i)) + &(sj * &e(j));
                            if si == 1 {
                                delta0_plus.push(w.clone());
                            }
                            roots.push(even_root(w));
                        }
                    }
                }
                if family == Family::OspB {
                    for i in 0..m {
                        delta0_plus.push(e(i));
                        roots.push(even_root(e(i)));
                        roots.push(even_root(-&e(i)));
                    }
                }
                // sp(2n) on the δ block.
                for i in 0..n {
                    for j in (i + 1)..n {
                        for (si, sj) in [(1, -1), (-1, 1), (1, 1), (-1, -1)] {
                            let w = &(si * &d(i)) + &(sj * &d(j));
                            if si == 1 {
                                delta0_plus.push(w.clone());
                            }
                            roots.push(even_root(w));
                        }
                    }
                }
                for i in 0..n {
                    delta0_plus.push(2 * &d(i));
                    roots.push(even_root(2 * &d(i)));
                    roots.push(even_root(-2 * &d(i)));
                }
                // Odd roots.
                for i in 0..m {
                    for j in 0..n {
                        for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                            roots.push(iso_root(&(si * &e(i)) + &(sj * &d(j))));
                        }
                    }
                }
                if family == Family::OspB {
                    for j in 0..n {
                        roots.push(odd_aniso(d(j)));
                        roots.push(odd_aniso(-&d(j)));
                    }
                }
                // Simple even roots.
                for i in 0..m.saturating_sub(1) {
                    pi.push(&e(i) - &e(i + 1));
                }
                if family == Family::OspB {
                    if m >= 1 {
                        pi.push(e(m - 1));
                    }
                } else if m >= 2 {
                    pi.push(&e(m - 2) + &e(m - 1));
                }
                for j in 0..n.saturating_sub(1) {
                    pi.push(&d(j) - &d(j + 1));
                }
                if n >= 1 {
                    pi.push(2 * &d(n - 1));
                }
            }
            Family::Q => {
                // Δ = Δ₀ = Δ₁ = Δ_iso = {ε_i - ε_j}.
                for i in 0..n {
                    for j in 0..n {
                        if i != j {
                            let w = &e(i) - &e(j);
                            if i < j {
                                delta0_plus.push(w.clone());
                            }
                            roots.push(Root {
                                weight: w,
                                even: true,
                                odd: true,
                                isotropic: true,
                            });
                        }
                    }
                }
                for i in 0..n.saturating_sub(1) {
                    pi.push(&e(i) - &e(i + 1));
                }
            }
            Family::P => {
                for i in 0..n {
                    for j in 0..n {
                        if i != j {
                            let w = &e(i) - &e(j);
                            if i < j {
                                delta0_plus.push(w.clone());
                            }
                            roots.push(even_root(w));
                        }
                    }
                }
                for i in 0..n {
                    roots.push(odd_aniso(2 * &e(i)));
                }
                for i in 0..n {
                    for j in (i + 1)..n {
                        roots.push(iso_root(&e(i) + &e(j)));
                        roots.push(iso_root(-&(&e(i) + &e(j))));
                    }
                }
                for i in 0..n.saturating_sub(1) {
                    pi.push(&e(i) - &e(i + 1));
                }
            }
        }

        roots.sort();
        roots.dedup();
        let root_set = roots.iter().map(|r| r.weight.clone()).collect();
        let iso_set = roots
            .iter()
            .filter(|r| r.isotropic)
            .map(|r| r.weight.clone())
            .collect();
        let even_set = roots
            .iter()
            .filter(|r| r.even)
            .map(|r| r.weight.clone())
            .collect();
        delta0_plus.sort();

        let datum = RootDatum {
            desc,
            eps_len,
            delta_len,
            roots,
            root_set,
            iso_set,
            even_set,
            pi,
            delta0_plus,
        };
        datum.validate()?;
        Ok(datum)
    }

    /// Structural invariants checked once at construction time.
    fn validate(&self) -> Result<(), Error> {
        // Δ_iso = -Δ_iso.
        for b in &self.iso_set {
            if !self.iso_set.contains(&-b) {
                return Err(Error::Internal(format!("Δ_iso not symmetric at {b}")));
            }
        }
        if self.desc.family.is_kac_moody() {
            // Isotropy matches vanishing self-pairing; Δ₀ ∩ Δ_iso = ∅.
            for r in &self.roots {
                let q = self.form(&r.weight, &r.weight)?;
                if r.isotropic != q.is_zero() {
                    return Err(Error::Internal(format!(
                        "isotropy/form mismatch at {}",
                        r.weight
                    )));
                }
                if r.even && r.isotropic {
                    return Err(Error::Internal(format!("even isotropic root {}", r.weight)));
                }
            }
        }
        Ok(())
    }

    pub fn descriptor(&self) -> AlgebraDesc {
        self.desc
    }

    pub fn family(&self) -> Family {
        self.desc.family
    }

    /// Whether the Cartan subalgebra h = g^t strictly contains t (the
    /// q family); everywhere else h = t and simple h-modules are lines.
    pub fn cartan_extended(&self) -> bool {
        self.desc.family == Family::Q
    }

    /// Coordinate block sizes of weights (ε length, δ length).
    pub fn weight_dims(&self) -> (usize, usize) {
        (self.eps_len, self.delta_len)
    }

    pub fn zero_weight(&self) -> Weight {
        Weight::zero(self.eps_len, self.delta_len)
    }

    pub fn eps(&self, i: usize) -> Weight {
        Weight::eps_basis(self.eps_len, self.delta_len, i)
    }

    pub fn delta(&self, j: usize) -> Weight {
        Weight::delta_basis(self.eps_len, self.delta_len, j)
    }

    pub fn check_weight(&self, w: &Weight) -> Result<(), Error> {
        if w.dims() != (self.eps_len, self.delta_len) {
            return Err(Error::DatumMismatch(format!(
                "weight {w} has wrong dimensions for {}",
                self.desc
            )));
        }
        Ok(())
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn is_root(&self, w: &Weight) -> bool {
        self.root_set.contains(w)
    }

    pub fn is_isotropic_root(&self, w: &Weight) -> bool {
        self.iso_set.contains(w)
    }

    pub fn is_even_root(&self, w: &Weight) -> bool {
        self.even_set.contains(w)
    }

    pub fn delta_iso(&self) -> impl Iterator<Item = &Weight> {
        self.iso_set.iter()
    }

    pub fn pi(&self) -> &[Weight] {
        &self.pi
    }

    /// The fixed positive system of Δ₀ every base must be compatible with.
    pub fn delta0_plus(&self) -> &[Weight] {
        &self.delta0_plus
    }

    /// The invariant bilinear form, available for the Kac–Moody families:
    /// (ε_i|ε_j) = δ_ij, (δ_i|δ_j) = -δ_ij, (ε_i|δ_j) = 0.
    pub fn form(&self, a: &Weight, b: &Weight) -> Result<Rat, Error> {
        if !self.desc.family.is_kac_moody() {
            return Err(Error::FormUnavailable(self.desc.to_string()));
        }
        self.check_weight(a)?;
        self.check_weight(b)?;
        let mut s: Rat = a.eps.iter().zip(&b.eps).map(|(x, y)| x * y).sum();
        let t: Rat = a.delta.iter().zip(&b.delta).map(|(x, y)| x * y).sum();
        s -= t;
        Ok(s)
    }

    /// ⟨ν, h_β⟩ for β ∈ Δ_iso, up to the fixed nonzero normalization: the
    /// invariant form for Kac–Moody families, ν_i + ν_j for β = ±(ε_i - ε_j)
    /// in q_n, ν_i - ν_j for β = ±(ε_i + ε_j) in p_n. Only the vanishing
    /// locus carries meaning and it is normalization-independent.
    pub fn pair_hbeta(&self, nu: &Weight, beta: &Weight) -> Result<Rat, Error> {
        self.check_weight(nu)?;
        if !self.is_isotropic_root(beta) {
            return Err(Error::NotIsotropic(beta.to_string()));
        }
        match self.desc.family {
            Family::Q => {
                let (i, j) = self.q_pair_indices(beta)?;
                Ok(&nu.eps[i] + &nu.eps[j])
            }
            Family::P => {
                let (i, j) = self.p_pair_indices(beta)?;
                Ok(&nu.eps[i] - &nu.eps[j])
            }
            _ => self.form(nu, beta),
        }
    }

    fn q_pair_indices(&self, beta: &Weight) -> Result<(usize, usize), Error> {
        let mut pos = None;
        let mut neg = None;
        for (k, c) in beta.eps.iter().enumerate() {
            if *c == rat(1) {
                pos = Some(k);
            } else if *c == rat(-1) {
                neg = Some(k);
            } else if !c.is_zero() {
                return Err(Error::NotIsotropic(beta.to_string()));
            }
        }
        match (pos, neg) {
            (Some(i), Some(j)) => Ok((i.min(j), i.max(j))),
            _ => Err(Error::NotIsotropic(beta.to_string())),
        }
    }

    fn p_pair_indices(&self, beta: &Weight) -> Result<(usize, usize), Error> {
        let mut idx = Vec::new();
        let mut sign = None;
        for (k, c) in beta.eps.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if *c == rat(1) || *c == rat(-1) {
                if let Some(s) = &sign {
                    if s != c {
                        return Err(Error::NotIsotropic(beta.to_string()));
                    }
                } else {
                    sign = Some(c.clone());
                }
                idx.push(k);
            } else {
                return Err(Error::NotIsotropic(beta.to_string()));
            }
        }
        if idx.len() != 2 {
            return Err(Error::NotIsotropic(beta.to_string()));
        }
        Ok((idx[0], idx[1]))
    }

    /// ⟨λ, α^∨⟩ for a simple even root α ∈ π.
    pub fn coroot_pairing(&self, lam: &Weight, alpha: &Weight) -> Result<Rat, Error> {
        self.check_weight(lam)?;
        if !self.pi.contains(alpha) {
            return Err(Error::NotSimple(alpha.to_string()));
        }
        match self.desc.family {
            Family::Q | Family::P => {
                // α = ε_i - ε_{i+1}, α^∨ = E_ii - E_jj.
                let i = alpha.eps.iter().position(|c| *c == rat(1)).unwrap();
                let j = alpha.eps.iter().position(|c| *c == rat(-1)).unwrap();
                Ok(&lam.eps[i] - &lam.eps[j])
            }
            _ => {
                let num = self.form(lam, alpha)?;
                let den = self.form(alpha, alpha)?;
                Ok(&(&num * &rat(2)) / &den)
            }
        }
    }

    /// s_α λ = λ - ⟨λ, α^∨⟩ α for α ∈ π.
    pub fn simple_reflection(&self, alpha: &Weight, lam: &Weight) -> Result<Weight, Error> {
        let k = self.coroot_pairing(lam, alpha)?;
        Ok(lam - &alpha.scale(&k))
    }

    /// Closure of λ under the simple reflections; canonically sorted.
    pub fn weyl_orbit(&self, lam: &Weight) -> Result<BTreeSet<Weight>, Error> {
        self.check_weight(lam)?;
        let mut orbit = BTreeSet::new();
        let mut queue = vec![lam.clone()];
        orbit.insert(lam.clone());
        while let Some(w) = queue.pop() {
            for alpha in &self.pi {
                let s = self.simple_reflection(alpha, &w)?;
                if orbit.insert(s.clone()) {
                    queue.push(s);
                }
            }
        }
        Ok(orbit)
    }

    /// Image of λ under the longest Weyl group element w₀ (blockwise).
    pub fn w0_apply(&self, lam: &Weight) -> Weight {
        let mut out = lam.clone();
        match self.desc.family {
            Family::Gl | Family::Sl | Family::Q | Family::P => {
                out.eps.reverse();
                out.delta.reverse();
            }
            Family::OspB => {
                for c in out.eps.iter_mut().chain(out.delta.iter_mut()) {
                    *c = -&*c;
                }
            }
            Family::OspD => {
                let m = self.eps_len;
                for (i, c) in out.eps.iter_mut().enumerate() {
                    // -Id lies in W(D_m) only for even m; for odd m the
                    // longest element fixes the last coordinate.
                    if m.is_multiple_of(2) || i + 1 < m {
                        *c = -&*c;
                    }
                }
                for c in out.delta.iter_mut() {
                    *c = -&*c;
                }
            }
        }
        out
    }

    /// Membership in P₀, the ℤ-span of the g₀-dominant weights: all
    /// coroot pairings against π are integers.
    pub fn in_p0(&self, lam: &Weight) -> Result<bool, Error> {
        for alpha in &self.pi {
            if !is_integer(&self.coroot_pairing(lam, alpha)?) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// λ ∈ P⁺(π): every coroot pairing is a nonnegative integer.
    pub fn is_dominant_pi(&self, lam: &Weight) -> Result<bool, Error> {
        for alpha in &self.pi {
            if !is_natural(&self.coroot_pairing(lam, alpha)?) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// One isotropic root per orbit of Δ_iso under W and -Id, canonically
    /// the minimal element of each orbit. The shortcut of checking the
    /// string condition on a transversal only is licensed exactly when the
    /// induced action is transitive, which in_A verifies by construction.
    pub fn iso_transversal(&self) -> Result<Vec<Weight>, Error> {
        let mut remaining: BTreeSet<Weight> = self.iso_set.clone();
        let mut reps = Vec::new();
        while let Some(b) = remaining.iter().next().cloned() {
            let mut orbit = self.weyl_orbit(&b)?;
            let neg: Vec<Weight> = orbit.iter().map(|w| -w).collect();
            orbit.extend(neg);
            reps.push(b);
            remaining.retain(|w| !orbit.contains(w));
        }
        Ok(reps)
    }

    /// Parity homomorphism p: P_int → ℤ/2 with p(Δ_ī) = ī, for the
    /// families with h = t and all coordinates integral: the δ-coordinate
    /// sum mod 2 (gl/sl/osp). Unavailable for q (h ≠ t) and p (no such
    /// homomorphism extends to P_int).
    pub fn parity(&self, nu: &Weight) -> Result<u8, Error> {
        if !self.desc.family.is_kac_moody() {
            return Err(Error::Unsupported(format!(
                "parity homomorphism unavailable for {}",
                self.desc
            )));
        }
        if !nu.is_integral() {
            return Err(Error::NonIntegralSupport(nu.to_string()));
        }
        let s: Rat = nu.delta.iter().sum();
        let v = crate::rat::to_i64(&s).ok_or_else(|| Error::NonIntegralSupport(nu.to_string()))?;
        Ok((v.rem_euclid(2)) as u8)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat_frac;

    fn gl21() -> RootDatum {
        RootDatum::build(AlgebraDesc::parse("gl(2|1)").unwrap()).unwrap()
    }

    #[test]
    fn descriptors() {
        assert_eq!(
            AlgebraDesc::parse("{\"family\":\"gl\",\"m\":1,\"n\":1}").unwrap(),
            AlgebraDesc::new(Family::Gl, 1, 1)
        );
        assert_eq!(
            AlgebraDesc::parse("osp(3|2)").unwrap(),
            AlgebraDesc::new(Family::OspB, 1, 1)
        );
        assert_eq!(
            AlgebraDesc::parse("osp(4|2)").unwrap(),
            AlgebraDesc::new(Family::OspD, 2, 1)
        );
        assert_eq!(AlgebraDesc::parse("q(2)").unwrap().to_string(), "q(2)");
        assert!(AlgebraDesc::parse("sl(2|2)")
            .and_then(RootDatum::build)
            .is_err());
        assert!(AlgebraDesc::parse("e8").is_err());
    }

    #[test]
    fn gl11_roots() {
        let d = RootDatum::build(AlgebraDesc::parse("gl(1|1)").unwrap()).unwrap();
        let beta = &d.eps(0) - &d.delta(0);
        assert_eq!(d.roots().len(), 2);
        assert!(d.is_isotropic_root(&beta));
        assert!(d.is_isotropic_root(&-&beta));
        assert!(d.pi().is_empty());
    }

    #[test]
    fn p2_roots() {
        let d = RootDatum::build(AlgebraDesc::parse("p(2)").unwrap()).unwrap();
        let e0 = d.eps(0);
        let e1 = d.eps(1);
        let odd: Vec<&Root> = d.roots().iter().filter(|r| r.odd).collect();
        let odd_w: BTreeSet<&Weight> = odd.iter().map(|r| &r.weight).collect();
        let expect = [2 * &e0, 2 * &e1, &e0 + &e1, -&(&e0 + &e1)];
        assert_eq!(odd.len(), 4);
        for w in &expect {
            assert!(odd_w.contains(w), "missing odd root {w}");
        }
        assert!(d.is_isotropic_root(&(&e0 + &e1)));
        assert!(!d.is_isotropic_root(&(2 * &e0)));
        let even: Vec<&Root> = d.roots().iter().filter(|r| r.even).collect();
        assert_eq!(even.len(), 2);
    }

    #[test]
    fn q1_empty() {
        let d = RootDatum::build(AlgebraDesc::parse("q(1)").unwrap()).unwrap();
        assert!(d.roots().is_empty());
    }

    #[test]
    fn q_roots_carry_both_parities() {
        // Δ = Δ₀ = Δ₁ = Δ_iso for the q family.
        let d = RootDatum::build(AlgebraDesc::parse("q(3)").unwrap()).unwrap();
        assert_eq!(d.roots().len(), 6);
        for r in d.roots() {
            assert!(r.even && r.odd && r.isotropic, "{}", r.weight);
        }
    }

    #[test]
    fn form_values() {
        let d = gl21();
        let b = &d.eps(0) - &d.delta(0);
        assert_eq!(d.form(&b, &b).unwrap(), rat(0));
        let a = &d.delta(0) - &d.eps(1);
        assert_eq!(d.form(&a, &b).unwrap(), rat(1));
        assert_eq!(d.form(&d.eps(0), &d.eps(1)).unwrap(), rat(0));
        let q = RootDatum::build(AlgebraDesc::parse("q(2)").unwrap()).unwrap();
        assert!(q.form(&q.eps(0), &q.eps(0)).is_err());
    }

    #[test]
    fn hbeta_values() {
        let d = gl21();
        let b = &d.eps(0) - &d.delta(0);
        assert_eq!(d.pair_hbeta(&d.eps(0), &b).unwrap(), rat(1));
        assert_eq!(d.pair_hbeta(&d.eps(1), &b).unwrap(), rat(0));
        assert!(d.pair_hbeta(&d.eps(0), &d.eps(0)).is_err());

        let q = RootDatum::build(AlgebraDesc::parse("q(2)").unwrap()).unwrap();
        let bq = &q.eps(0) - &q.eps(1);
        assert_eq!(
            q.pair_hbeta(&Weight::from_ints(&[1, 1], &[]), &bq).unwrap(),
            rat(2)
        );
        // ⟨β, h_β⟩ = 0 in all families.
        assert_eq!(q.pair_hbeta(&bq, &bq).unwrap(), rat(0));

        let p = RootDatum::build(AlgebraDesc::parse("p(2)").unwrap()).unwrap();
        let bp = &p.eps(0) + &p.eps(1);
        assert_eq!(p.pair_hbeta(&bp, &bp).unwrap(), rat(0));
        assert_eq!(
            p.pair_hbeta(&Weight::from_ints(&[3, 1], &[]), &bp).unwrap(),
            rat(2)
        );
    }

    #[test]
    fn reflections_and_orbits() {
        let d = gl21();
        let alpha = &d.eps(0) - &d.eps(1);
        assert_eq!(d.simple_reflection(&alpha, &d.eps(0)).unwrap(), d.eps(1));
        assert_eq!(
            d.simple_reflection(&alpha, &d.delta(0)).unwrap(),
            d.delta(0)
        );
        assert!(d.simple_reflection(&d.delta(0), &d.eps(0)).is_err());

        let orbit = d.weyl_orbit(&d.eps(0)).unwrap();
        assert_eq!(orbit, BTreeSet::from([d.eps(0), d.eps(1)]));
        assert_eq!(d.weyl_orbit(&d.delta(0)).unwrap().len(), 1);

        let b = RootDatum::build(AlgebraDesc::parse("osp(3|2)").unwrap()).unwrap();
        let a = 2 * &b.delta(0);
        assert_eq!(b.simple_reflection(&a, &b.delta(0)).unwrap(), -&b.delta(0));

        let q = RootDatum::build(AlgebraDesc::parse("q(2)").unwrap()).unwrap();
        let orbit = q.weyl_orbit(&Weight::from_ints(&[2, 1], &[])).unwrap();
        assert_eq!(orbit.len(), 2);
    }

    #[test]
    fn involutive_on_grid() {
        for name in ["gl(2|1)", "osp(3|2)", "q(2)"] {
            let d = RootDatum::build(AlgebraDesc::parse(name).unwrap()).unwrap();
            let (m, n) = d.weight_dims();
            let dim = m + n;
            for idx in 0..3usize.pow(dim as u32) {
                let mut v = Vec::new();
                let mut t = idx;
                for _ in 0..dim {
                    v.push(rat((t % 3) as i64 - 1));
                    t /= 3;
                }
                let w = Weight::from_vec(m, n, v);
                for alpha in d.pi() {
                    let s = d.simple_reflection(alpha, &w).unwrap();
                    assert_eq!(d.simple_reflection(alpha, &s).unwrap(), w);
                }
            }
        }
    }

    #[test]
    fn orbit_sizes_divide_weyl_order() {
        // |W| per family instance: product of symmetric / hyperoctahedral
        // group orders.
        let cases: [(&str, usize); 3] = [
            ("gl(2|1)", 2),
            ("osp(3|2)", 4), // 2^1·1! · 2^1·1!
            ("osp(4|2)", 8), // 2^{2-1}·2! · 2^1·1!
        ];
        for (name, order) in cases {
            let d = RootDatum::build(AlgebraDesc::parse(name).unwrap()).unwrap();
            let (m, n) = d.weight_dims();
            for k in 0..(m + n) {
                let w = if k < m { d.eps(k) } else { d.delta(k - m) };
                let len = d.weyl_orbit(&w).unwrap().len();
                assert_eq!(order % len, 0, "{name}: orbit {len} vs |W| {order}");
            }
        }
    }

    #[test]
    fn w0_maps_positive_even_roots_to_negative() {
        for name in [
            "gl(2|1)", "gl(2|2)", "osp(3|2)", "osp(4|2)", "osp(6|2)", "q(3)", "p(2)",
        ] {
            let d = RootDatum::build(AlgebraDesc::parse(name).unwrap()).unwrap();
            for g in d.delta0_plus() {
                let img = d.w0_apply(g);
                let neg = -&img;
                assert!(
                    d.delta0_plus().contains(&neg),
                    "{name}: w0({g}) = {img} not antidominant"
                );
            }
        }
    }

    #[test]
    fn p0_membership() {
        let d = gl21();
        assert!(d.in_p0(&Weight::from_ints(&[1, 0], &[7])).unwrap());
        let half = Weight {
            eps: vec![rat_frac(1, 2), rat_frac(1, 2)],
            delta: vec![rat_frac(1, 3)],
        };
        // Blockwise-congruent coordinates are in P₀ even when fractional.
        assert!(d.in_p0(&half).unwrap());
        let bad = Weight {
            eps: vec![rat_frac(1, 2), rat(0)],
            delta: vec![rat(0)],
        };
        assert!(!d.in_p0(&bad).unwrap());

        let b = RootDatum::build(AlgebraDesc::parse("osp(3|2)").unwrap()).unwrap();
        // ε pairing for B uses the short coroot: 2λ_ε must be integral.
        let spin = Weight {
            eps: vec![rat_frac(1, 2)],
            delta: vec![rat(0)],
        };
        assert!(b.in_p0(&spin).unwrap());
        let third = Weight {
            eps: vec![rat_frac(1, 3)],
            delta: vec![rat(0)],
        };
        assert!(!b.in_p0(&third).unwrap());
    }

    #[test]
    fn transversal_is_single_orbit() {
        for name in ["gl(2|1)", "gl(2|2)", "osp(3|2)", "osp(4|2)", "q(2)", "p(2)"] {
            let d = RootDatum::build(AlgebraDesc::parse(name).unwrap()).unwrap();
            let t = d.iso_transversal().unwrap();
            assert!(t.len() <= 1, "{name}: transversal {t:?}");
        }
    }

    #[test]
    fn parity_values() {
        let d = gl21();
        assert_eq!(d.parity(&d.delta(0)).unwrap(), 1);
        assert_eq!(d.parity(&d.eps(0)).unwrap(), 0);
        for r in d.roots() {
            let expect = if r.odd { 1 } else { 0 };
            assert_eq!(d.parity(&r.weight).unwrap(), expect);
        }
    }
}

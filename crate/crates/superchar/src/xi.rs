//! Sparse exact arithmetic in ℤ[P₀;ξ] with ξ² = 1, the subrings R(P), and
//! the membership conditions cutting out A(g): W-invariance, the alternating
//! β-string condition, the differential (Sergeev–Veselov) form, the
//! evaluation form, the p-family str-factorization, and the parity twist ι.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::datum::{Family, RootDatum};
use crate::error::Error;
use crate::rat::{is_integer, rat, to_i64, Rat};
use crate::weight::Weight;

/// An element a + bξ of ℤ[ξ]/(ξ²-1).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct XiCoeff {
    pub a: i64,
    pub b: i64,
}

pub const XI: XiCoeff = XiCoeff { a: 0, b: 1 };

impl XiCoeff {
    pub fn new(a: i64, b: i64) -> Self {
        XiCoeff { a, b }
    }

    pub fn int(a: i64) -> Self {
        XiCoeff { a, b: 0 }
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// Evaluation ξ ↦ ±1.
    pub fn psi(&self, sign: Sign) -> i64 {
        match sign {
            Sign::Plus => self.a + self.b,
            Sign::Minus => self.a - self.b,
        }
    }

    /// Multiplication by the unit (-ξ)^i; the square of -ξ is 1.
    pub fn times_neg_xi_pow(&self, i: i64) -> XiCoeff {
        if i.rem_euclid(2) == 0 {
            *self
        } else {
            XiCoeff {
                a: -self.b,
                b: -self.a,
            }
        }
    }
}

impl Add for XiCoeff {
    type Output = XiCoeff;
    fn add(self, o: XiCoeff) -> XiCoeff {
        XiCoeff::new(self.a + o.a, self.b + o.b)
    }
}
impl Sub for XiCoeff {
    type Output = XiCoeff;
    fn sub(self, o: XiCoeff) -> XiCoeff {
        XiCoeff::new(self.a - o.a, self.b - o.b)
    }
}
impl Neg for XiCoeff {
    type Output = XiCoeff;
    fn neg(self) -> XiCoeff {
        XiCoeff::new(-self.a, -self.b)
    }
}
impl Mul for XiCoeff {
    type Output = XiCoeff;
    fn mul(self, o: XiCoeff) -> XiCoeff {
        XiCoeff::new(self.a * o.a + self.b * o.b, self.a * o.b + self.b * o.a)
    }
}

impl fmt::Display for XiCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, b) => write!(f, "{b}ξ"),
            (a, b) if b < 0 => write!(f, "{a}{b}ξ"),
            (a, b) => write!(f, "{a}+{b}ξ"),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Sign {
    Plus,
    Minus,
}

/// Sublattices of P₀ selectable for R(P) and A(P) membership.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Lattice {
    /// All of P₀ (integral coroot pairings against π).
    Full,
    /// The lattice of the standard representation (integer coordinates).
    Integral,
    /// Coordinates in ℤ + 1/2 (q family only).
    HalfIntegral,
}

/// A finitely supported map Weight → ℤ[ξ], kept in canonical form (sorted
/// support, no zero coefficients).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RingElement {
    algebra: crate::datum::AlgebraDesc,
    terms: BTreeMap<Weight, XiCoeff>,
}

impl RingElement {
    pub fn zero(datum: &RootDatum) -> Self {
        RingElement {
            algebra: datum.descriptor(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(datum: &RootDatum) -> Self {
        Self::monomial(datum, datum.zero_weight(), XiCoeff::int(1))
    }

    pub fn monomial(datum: &RootDatum, w: Weight, c: XiCoeff) -> Self {
        let mut e = Self::zero(datum);
        e.add_term(w, c);
        e
    }

    pub fn algebra(&self) -> crate::datum::AlgebraDesc {
        self.algebra
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, &XiCoeff)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Weight> {
        self.terms.keys()
    }

    pub fn coeff(&self, w: &Weight) -> XiCoeff {
        self.terms.get(w).copied().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: Weight, c: XiCoeff) {
        if c.is_zero() && !self.terms.contains_key(&w) {
            return;
        }
        let v = self.terms.entry(w.clone()).or_default();
        *v = *v + c;
        if v.is_zero() {
            self.terms.remove(&w);
        }
    }

    fn assert_same(&self, other: &RingElement) {
        assert_eq!(
            self.algebra, other.algebra,
            "ring elements over different algebras"
        );
    }

    pub fn scale(&self, c: XiCoeff) -> RingElement {
        let mut out = RingElement {
            algebra: self.algebra,
            terms: BTreeMap::new(),
        };
        for (w, x) in &self.terms {
            let v = *x * c;
            if !v.is_zero() {
                out.terms.insert(w.clone(), v);
            }
        }
        out
    }

    /// Evaluation ξ ↦ ±1 termwise; the result is ξ-free.
    pub fn psi(&self, sign: Sign) -> RingElement {
        let mut out = RingElement {
            algebra: self.algebra,
            terms: BTreeMap::new(),
        };
        for (w, c) in &self.terms {
            let v = c.psi(sign);
            if v != 0 {
                out.terms.insert(w.clone(), XiCoeff::int(v));
            }
        }
        out
    }

    pub fn is_xi_free(&self) -> bool {
        self.terms.values().all(|c| c.b == 0)
    }

    /// All support weights have integer coordinates.
    pub fn has_integral_support(&self) -> bool {
        self.terms.keys().all(Weight::is_integral)
    }
}

impl Add for &RingElement {
    type Output = RingElement;
    fn add(self, o: &RingElement) -> RingElement {
        self.assert_same(o);
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w.clone(), *c);
        }
        out
    }
}

impl Sub for &RingElement {
    type Output = RingElement;
    fn sub(self, o: &RingElement) -> RingElement {
        self.assert_same(o);
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w.clone(), -*c);
        }
        out
    }
}

impl Mul for &RingElement {
    type Output = RingElement;
    fn mul(self, o: &RingElement) -> RingElement {
        self.assert_same(o);
        let mut out = RingElement {
            algebra: self.algebra,
            terms: BTreeMap::new(),
        };
        for (w1, c1) in &self.terms {
            for (w2, c2) in &o.terms {
                out.add_term(w1 + w2, *c1 * *c2);
            }
        }
        out
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| format!("({c})e^{w}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Recombine ψ± images into the unique preimage, if one exists: the
/// fibre-product structure requires matching parities termwise.
pub fn recombine_psi(plus: &RingElement, minus: &RingElement) -> Result<RingElement, Error> {
    plus.assert_same(minus);
    let mut out = RingElement {
        algebra: plus.algebra,
        terms: BTreeMap::new(),
    };
    let keys: BTreeSet<&Weight> = plus.terms.keys().chain(minus.terms.keys()).collect();
    for w in keys {
        let p = plus.coeff(w).a;
        let m = minus.coeff(w).a;
        if (p - m).rem_euclid(2) != 0 {
            return Err(Error::Internal(format!(
                "parity mismatch at {w}: ψ+ = {p}, ψ- = {m}"
            )));
        }
        out.add_term(w.clone(), XiCoeff::new((p + m) / 2, (p - m) / 2));
    }
    Ok(out)
}

/// Number of nonzero coordinates; controls the Clifford module over the
/// odd Cartan of q_n.
pub fn z_count(nu: &Weight) -> usize {
    nu.coords().filter(|c| !c.is_zero()).count()
}

/// dim C_ν: 1 for the families with h = t; 2^⌈z/2⌉ for q.
pub fn dim_c(datum: &RootDatum, nu: &Weight) -> u64 {
    match datum.family() {
        Family::Q => {
            let z = z_count(nu) as u32;
            1u64 << z.div_ceil(2)
        }
        _ => 1,
    }
}

/// sdim C_ν: equals dim C_ν unless the Clifford module is nontrivial.
pub fn sdim_c(datum: &RootDatum, nu: &Weight) -> u64 {
    match datum.family() {
        Family::Q if z_count(nu) > 0 => 0,
        _ => 1,
    }
}

/// The ξ-coefficient of ch_ξ C_ν: 1 when h = t; d(1+ξ) with d = 2^{⌈z/2⌉-1}
/// for q with z ≥ 1.
pub fn c_coeff(datum: &RootDatum, nu: &Weight) -> XiCoeff {
    match datum.family() {
        Family::Q => {
            let z = z_count(nu) as u32;
            if z == 0 {
                XiCoeff::int(1)
            } else {
                let d = 1i64 << (z.div_ceil(2) - 1);
                XiCoeff::new(d, d)
            }
        }
        _ => XiCoeff::int(1),
    }
}

/// ch_ξ C_ν as a ring element.
pub fn ch_xi_c(datum: &RootDatum, nu: &Weight) -> Result<RingElement, Error> {
    datum.check_weight(nu)?;
    Ok(RingElement::monomial(datum, nu.clone(), c_coeff(datum, nu)))
}

/// Membership of a single weight in the chosen lattice.
pub fn lattice_contains(datum: &RootDatum, lattice: Lattice, nu: &Weight) -> Result<bool, Error> {
    match lattice {
        Lattice::Full => datum.in_p0(nu),
        Lattice::Integral => Ok(nu.is_integral()),
        Lattice::HalfIntegral => {
            if datum.family() != Family::Q {
                return Err(Error::Unsupported(
                    "half-integral lattice applies to the q family".to_string(),
                ));
            }
            Ok(nu
                .coords()
                .all(|c| is_integer(&(c + &crate::rat::rat_frac(1, 2)))))
        }
    }
}

/// x ∈ R(P): support inside P and every coefficient a ℤ[ξ]-multiple of the
/// ch_ξ C_ν coefficient (a real constraint only when h ≠ t).
pub fn in_r(datum: &RootDatum, x: &RingElement, lattice: Lattice) -> Result<bool, Error> {
    for (nu, c) in x.terms() {
        if !lattice_contains(datum, lattice, nu)? {
            return Ok(false);
        }
        if datum.family() == Family::Q {
            let pat = c_coeff(datum, nu);
            if pat.b != 0 {
                // ℤ[ξ]·d(1+ξ) = dℤ·(1+ξ).
                if c.a != c.b || c.a % pat.a != 0 {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// W-invariance: coefficients constant along simple reflections of the
/// support.
pub fn is_w_invariant(datum: &RootDatum, x: &RingElement) -> Result<bool, Error> {
    for (nu, c) in x.terms() {
        for alpha in datum.pi() {
            let s = datum.simple_reflection(alpha, nu)?;
            if x.coeff(&s) != *c {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A charged β-string whose alternating sum fails to vanish.
#[derive(Clone, Debug)]
pub struct StringViolation {
    pub beta: Weight,
    pub base_point: Weight,
    pub sum: XiCoeff,
}

/// Group labeled weights into lines ν + ℤβ. Returns, per line, the lexico-
/// graphically smallest point and the labels at their offsets from it.
pub fn group_lines<T: Clone>(
    items: impl Iterator<Item = (Weight, T)>,
    beta: &Weight,
) -> Vec<(Weight, Vec<(i64, T)>)> {
    let k = beta.first_support().expect("β ≠ 0");
    let bk = beta.coord(k).clone();
    let mut groups: BTreeMap<Weight, Vec<(i64, T)>> = BTreeMap::new();
    let mut anchors: BTreeMap<Weight, Weight> = BTreeMap::new();
    for (nu, c) in items {
        let t = nu.coord(k) / &bk;
        let steps_i = to_i64(&t.floor()).expect("desk-scale line offset");
        let rep = &nu - &beta.scale(&rat(steps_i));
        groups.entry(rep.clone()).or_default().push((steps_i, c));
        let anchor = anchors.entry(rep).or_insert_with(|| nu.clone());
        if nu < *anchor {
            *anchor = nu;
        }
    }
    groups
        .into_iter()
        .map(|(rep, mut pts)| {
            pts.sort_by_key(|(i, _)| *i);
            let base = anchors.remove(&rep).expect("anchor recorded");
            let base_off = pts.iter().map(|(i, _)| *i).min().expect("nonempty line");
            // Offsets relative to the smallest point on the line.
            let pts = pts.into_iter().map(|(i, c)| (i - base_off, c)).collect();
            (base, pts)
        })
        .collect()
}

/// Lines through the support of a ring element.
fn lines_along(x: &RingElement, beta: &Weight) -> Vec<(Weight, Vec<(i64, XiCoeff)>)> {
    group_lines(x.terms().map(|(w, c)| (w.clone(), *c)), beta)
}

/// The string condition of the defining intersection for one β ∈ Δ_iso:
/// on every line ν + ℤβ with ⟨ν, h_β⟩ ≠ 0 the sum Σ (-ξ)^i m_{ν+iβ}
/// vanishes. Base-point independent since -ξ is a unit.
pub fn string_violation(
    datum: &RootDatum,
    x: &RingElement,
    beta: &Weight,
) -> Result<Option<StringViolation>, Error> {
    if !datum.is_isotropic_root(beta) {
        return Err(Error::NotIsotropic(beta.to_string()));
    }
    for (base_point, pts) in lines_along(x, beta) {
        // The charge is constant along the line because ⟨β, h_β⟩ = 0.
        if datum.pair_hbeta(&base_point, beta)?.is_zero() {
            continue;
        }
        let mut sum = XiCoeff::default();
        for (i, c) in &pts {
            sum = sum + c.times_neg_xi_pow(*i);
        }
        if !sum.is_zero() {
            return Ok(Some(StringViolation {
                beta: beta.clone(),
                base_point,
                sum,
            }));
        }
    }
    Ok(None)
}

pub fn string_condition(datum: &RootDatum, x: &RingElement, beta: &Weight) -> Result<bool, Error> {
    Ok(string_violation(datum, x, beta)?.is_none())
}

/// ψ±-level string condition: Σ (∓1)^i m_{ν+iβ} = 0 on charged lines.
pub fn string_condition_psi(
    datum: &RootDatum,
    x: &RingElement,
    beta: &Weight,
    sign: Sign,
) -> Result<bool, Error> {
    if !datum.is_isotropic_root(beta) {
        return Err(Error::NotIsotropic(beta.to_string()));
    }
    for (base_point, pts) in lines_along(x, beta) {
        if datum.pair_hbeta(&base_point, beta)?.is_zero() {
            continue;
        }
        let mut sum = 0i64;
        for (i, c) in &pts {
            let s = match sign {
                Sign::Minus => 1,
                Sign::Plus => {
                    if i.rem_euclid(2) == 0 {
                        1
                    } else {
                        -1
                    }
                }
            };
            sum += s * c.a;
        }
        if sum != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Membership in A(g) ∩ R(P): R(P) structure, W-invariance, and the string
/// condition over one β per orbit of Δ_iso under W×{±1} (all β with
/// `all_beta`; equivalent whenever the orbit action is transitive, but the
/// exhaustive loop is available as a safety switch).
pub fn in_a(
    datum: &RootDatum,
    x: &RingElement,
    lattice: Lattice,
    all_beta: bool,
) -> Result<bool, Error> {
    if !in_r(datum, x, lattice)? {
        return Ok(false);
    }
    if !is_w_invariant(datum, x)? {
        return Ok(false);
    }
    let betas: Vec<Weight> = if all_beta {
        datum.delta_iso().cloned().collect()
    } else {
        datum.iso_transversal()?
    };
    for beta in &betas {
        if string_violation(datum, x, beta)?.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// ψ±-level membership in A_±(P) for a ξ-free element.
pub fn in_a_psi(
    datum: &RootDatum,
    x: &RingElement,
    sign: Sign,
    lattice: Lattice,
) -> Result<bool, Error> {
    if !x.is_xi_free() {
        return Err(Error::Unsupported(
            "ψ-level membership expects a ξ-free element".to_string(),
        ));
    }
    for (nu, c) in x.terms() {
        if !lattice_contains(datum, lattice, nu)? {
            return Ok(false);
        }
        // R_±(P₀) structure for q: at ψ₋ coefficients vanish off the
        // sdim-carrying weights; at ψ₊ they are divisible by dim C_ν.
        if datum.family() == Family::Q && z_count(nu) > 0 {
            match sign {
                Sign::Minus => return Ok(false),
                Sign::Plus => {
                    if c.a % (dim_c(datum, nu) as i64) != 0 {
                        return Ok(false);
                    }
                }
            }
        }
    }
    if !is_w_invariant(datum, x)? {
        return Ok(false);
    }
    for beta in datum.iso_transversal()? {
        if !string_condition_psi(datum, x, &beta, sign)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The differential form of the membership condition: write x = Σ f_{a,b}
/// x^a y^b with x = e^ω, y = e^β; the condition is that ∂f/∂x lands in the
/// ideal (y ± 1), i.e. per x-degree a ≠ 0 and per line, the string sums
/// with signs (∓1)^i vanish. Coincides with the ψ-level string condition.
pub fn sv_condition(
    datum: &RootDatum,
    x: &RingElement,
    beta: &Weight,
    omega: &Weight,
    sign: Sign,
) -> Result<bool, Error> {
    if !x.is_xi_free() {
        return Err(Error::Unsupported(
            "the differential form applies at ψ-level (ξ-free elements)".to_string(),
        ));
    }
    if !datum.is_isotropic_root(beta) {
        return Err(Error::NotIsotropic(beta.to_string()));
    }
    let charge_omega = datum.pair_hbeta(omega, beta)?;
    if charge_omega.is_zero() {
        return Err(Error::SupportViolation(format!(
            "⟨ω, h_β⟩ = 0 for ω = {omega}"
        )));
    }
    for (base_point, pts) in lines_along(x, beta) {
        // x-degree of the whole line.
        let a = datum.pair_hbeta(&base_point, beta)? / &charge_omega;
        if a.is_zero() {
            continue;
        }
        let mut sum = 0i64;
        for (i, c) in &pts {
            let s = match sign {
                // (y - 1): plain sums; (y + 1): alternating sums.
                Sign::Minus => 1,
                Sign::Plus => {
                    if i.rem_euclid(2) == 0 {
                        1
                    } else {
                        -1
                    }
                }
            };
            sum += s * c.a;
        }
        if sum != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The evaluation form: substituting e^ω ↦ c on a ξ-free element must give
/// a result independent of c, i.e. every line with nonzero x-degree j has
/// vanishing coefficient sum. Requires integral x-degrees on the support.
pub fn ev_condition(
    datum: &RootDatum,
    x: &RingElement,
    beta: &Weight,
    omega: &Weight,
) -> Result<bool, Error> {
    if !x.is_xi_free() {
        return Err(Error::Unsupported(
            "the evaluation form applies at ψ-level (ξ-free elements)".to_string(),
        ));
    }
    if !datum.is_isotropic_root(beta) {
        return Err(Error::NotIsotropic(beta.to_string()));
    }
    let charge_omega = datum.pair_hbeta(omega, beta)?;
    if charge_omega.is_zero() {
        return Err(Error::SupportViolation(format!(
            "⟨ω, h_β⟩ = 0 for ω = {omega}"
        )));
    }
    // Support must lie in (t')* + ℤβ + ℤω.
    for nu in x.support() {
        let j = datum.pair_hbeta(nu, beta)? / &charge_omega;
        if !is_integer(&j) {
            return Err(Error::SupportViolation(format!(
                "x-degree of {nu} is not an integer"
            )));
        }
    }
    for (base_point, pts) in lines_along(x, beta) {
        let j = datum.pair_hbeta(&base_point, beta)? / &charge_omega;
        if j.is_zero() {
            continue;
        }
        // Coefficient of c^j e^{ν'}: the plain sum along the line.
        let sum: i64 = pts.iter().map(|(_, c)| c.a).sum();
        if sum != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// p-family factorization: partition the support by the coset of ℚ·str
/// modulo the integral lattice. Components are returned unshifted, keyed by
/// the fractional part of the first coordinate.
pub fn str_split(datum: &RootDatum, x: &RingElement) -> Result<BTreeMap<Rat, RingElement>, Error> {
    if datum.family() != Family::P {
        return Err(Error::Unsupported(format!(
            "str factorization applies to the p family, not {}",
            datum.descriptor()
        )));
    }
    let mut out: BTreeMap<Rat, RingElement> = BTreeMap::new();
    for (nu, c) in x.terms() {
        // All coordinates must agree modulo 1 (membership in P₀).
        let first = nu.coord(0);
        let frac = first - &first.floor();
        for k in 1..nu.dim() {
            let f = nu.coord(k) - &nu.coord(k).floor();
            if f != frac {
                return Err(Error::SupportViolation(format!(
                    "{nu} is not in ℚ·str + P_int"
                )));
            }
        }
        out.entry(frac)
            .or_insert_with(|| RingElement::zero(datum))
            .add_term(nu.clone(), *c);
    }
    Ok(out)
}

/// The parity twist ι: e^ν ↦ (-1)^{p(ν)} e^ν with p the δ-coordinate sum
/// mod 2. An involution exchanging the ψ∓ string conditions.
pub fn iota(datum: &RootDatum, x: &RingElement) -> Result<RingElement, Error> {
    let mut out = RingElement::zero(datum);
    for (nu, c) in x.terms() {
        let p = datum.parity(nu)?;
        let c = if p == 1 { -*c } else { *c };
        out.add_term(nu.clone(), c);
    }
    Ok(out)
}

/// Closed-form simple characters of gl(1|1): e^λ when λ ∈ ℚβ (the
/// one-dimensional case), otherwise e^λ (1 + ξ e^{-β}).
pub fn gl11_character(datum: &RootDatum, lam: &Weight) -> Result<RingElement, Error> {
    let desc = datum.descriptor();
    if !(matches!(desc.family, Family::Gl) && desc.m == 1 && desc.n == 1) {
        return Err(Error::Unsupported(format!(
            "closed-form characters are provided for gl(1|1), not {desc}"
        )));
    }
    datum.check_weight(lam)?;
    let beta = &datum.eps(0) - &datum.delta(0);
    if datum.pair_hbeta(lam, &beta)?.is_zero() {
        Ok(RingElement::monomial(datum, lam.clone(), XiCoeff::int(1)))
    } else {
        let mut e = RingElement::monomial(datum, lam.clone(), XiCoeff::int(1));
        e.add_term(lam - &beta, XI);
        Ok(e)
    }
}

/// Symmetrize over W: sum each orbit's total coefficient across the orbit.
pub fn symmetrize(datum: &RootDatum, x: &RingElement) -> Result<RingElement, Error> {
    let mut out = RingElement::zero(datum);
    let mut seen: BTreeSet<Weight> = BTreeSet::new();
    for (nu, _) in x.terms() {
        if seen.contains(nu) {
            continue;
        }
        let orbit = datum.weyl_orbit(nu)?;
        let mut total = XiCoeff::default();
        for w in &orbit {
            total = total + x.coeff(w);
        }
        for w in &orbit {
            if !total.is_zero() {
                out.add_term(w.clone(), total);
            }
            seen.insert(w.clone());
        }
    }
    Ok(out)
}

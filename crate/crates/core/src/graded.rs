//! Exact arithmetic for the Z2-graded polynomial algebra on extended phase
//! space.
//!
//! For `n` degrees of freedom the algebra is generated by the even variables
//! `phi[1..=2n]`, `lam[1..=2n]` and the odd (Grassmann) generators
//! `c[1..=2n]`, `cb[1..=2n]`. Odd generators anticommute and square to zero;
//! all canonical forms and permutation signs are taken relative to the fixed
//! global order `c[1] < ... < c[2n] < cb[1] < ... < cb[2n]`.
//!
//! Values are immutable after canonicalization and all operations are pure,
//! so they can be shared freely across threads.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::{fmt_scalar_factor, sc_i64, sc_is_zero, sc_to_f64, ScalarC};
use num::Zero;

/// Ghost masks are stored in a `u64`, which bounds the number of odd
/// generators `4n` by 64.
pub const MAX_DOF: u32 = 16;

/// Grassmann parity of a homogeneous quantity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    pub fn of_count(count: u32) -> Parity {
        if count % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// An even (commuting) variable, 1-based: `phi[a]` or `lam[a]`, `a <= 2n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EvenVar {
    Phi(u32),
    Lam(u32),
}

impl EvenVar {
    pub fn index(self) -> u32 {
        match self {
            EvenVar::Phi(a) | EvenVar::Lam(a) => a,
        }
    }
}

impl fmt::Display for EvenVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvenVar::Phi(a) => write!(f, "phi[{}]", a),
            EvenVar::Lam(a) => write!(f, "lam[{}]", a),
        }
    }
}

/// An odd (anticommuting) generator, 1-based: `c[a]` or `cb[a]`, `a <= 2n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OddGen {
    C(u32),
    CBar(u32),
}

impl OddGen {
    pub fn index(self) -> u32 {
        match self {
            OddGen::C(a) | OddGen::CBar(a) => a,
        }
    }

    /// Position in the global generator order for a given `2n`.
    pub fn slot(self, two_n: u32) -> u32 {
        match self {
            OddGen::C(a) => a - 1,
            OddGen::CBar(a) => two_n + a - 1,
        }
    }

    pub fn from_slot(slot: u32, two_n: u32) -> OddGen {
        if slot < two_n {
            OddGen::C(slot + 1)
        } else {
            OddGen::CBar(slot - two_n + 1)
        }
    }
}

impl fmt::Display for OddGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OddGen::C(a) => write!(f, "c[{}]", a),
            OddGen::CBar(a) => write!(f, "cb[{}]", a),
        }
    }
}

/// Ordered monomial in the odd generators, encoded as a bitmask over slots.
/// Each generator appears at most once; products that would repeat a
/// generator vanish.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct GhostMonomial(pub u64);

impl GhostMonomial {
    pub const ONE: GhostMonomial = GhostMonomial(0);

    pub fn single(g: OddGen, two_n: u32) -> GhostMonomial {
        GhostMonomial(1u64 << g.slot(two_n))
    }

    pub fn is_one(self) -> bool {
        self.0 == 0
    }

    pub fn degree(self) -> u32 {
        self.0.count_ones()
    }

    pub fn contains(self, g: OddGen, two_n: u32) -> bool {
        self.0 & (1u64 << g.slot(two_n)) != 0
    }

    pub fn c_count(self, two_n: u32) -> u32 {
        (self.0 & low_mask(two_n)).count_ones()
    }

    pub fn cbar_count(self, two_n: u32) -> u32 {
        (self.0 >> two_n).count_ones()
    }

    /// Multiplies two ordered monomials. Returns `None` when a generator
    /// repeats; otherwise the merged monomial and whether the permutation
    /// bringing the concatenation into global order is odd.
    pub fn merge(self, other: GhostMonomial) -> Option<(GhostMonomial, bool)> {
        if self.0 & other.0 != 0 {
            return None;
        }
        let mut negative = false;
        let mut rest = other.0;
        while rest != 0 {
            let j = rest.trailing_zeros();
            // Generators of `self` strictly above slot j must be crossed.
            let above = if j >= 63 { 0 } else { self.0 >> (j + 1) };
            if above.count_ones() % 2 == 1 {
                negative = !negative;
            }
            rest &= rest - 1;
        }
        Some((GhostMonomial(self.0 | other.0), negative))
    }

    /// Left Grassmann derivative data: if the generator is present, returns
    /// the monomial with it struck out and whether anticommuting it to the
    /// leftmost position produces a sign flip.
    pub fn strip_left(self, g: OddGen, two_n: u32) -> Option<(GhostMonomial, bool)> {
        let slot = g.slot(two_n);
        let bit = 1u64 << slot;
        if self.0 & bit == 0 {
            return None;
        }
        let below = self.0 & (bit - 1);
        Some((GhostMonomial(self.0 & !bit), below.count_ones() % 2 == 1))
    }

    pub fn slots(self) -> impl Iterator<Item = u32> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let j = rest.trailing_zeros();
                rest &= rest - 1;
                Some(j)
            }
        })
    }
}

fn low_mask(bits: u32) -> u64 {
    if bits >= 64 {
        u64::MAX
    } else {
        (1u64 << bits) - 1
    }
}

/// Monomial in the even variables: a sparse exponent map with no zero
/// entries.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct EvenMonomial(BTreeMap<EvenVar, u32>);

impl EvenMonomial {
    pub const fn one() -> EvenMonomial {
        EvenMonomial(BTreeMap::new())
    }

    pub fn var(v: EvenVar) -> EvenMonomial {
        let mut m = BTreeMap::new();
        m.insert(v, 1);
        EvenMonomial(m)
    }

    pub fn from_exponents(exps: impl IntoIterator<Item = (EvenVar, u32)>) -> EvenMonomial {
        let mut m = BTreeMap::new();
        for (v, e) in exps {
            if e > 0 {
                *m.entry(v).or_insert(0) += e;
            }
        }
        EvenMonomial(m)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, v: EvenVar) -> u32 {
        self.0.get(&v).copied().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (EvenVar, u32)> + '_ {
        self.0.iter().map(|(v, e)| (*v, *e))
    }

    pub fn mul(&self, other: &EvenMonomial) -> EvenMonomial {
        let mut m = self.0.clone();
        for (v, e) in &other.0 {
            *m.entry(*v).or_insert(0) += e;
        }
        EvenMonomial(m)
    }

    /// Derivative data: exponent of `v` and the monomial with it lowered.
    pub fn lower(&self, v: EvenVar) -> Option<(u32, EvenMonomial)> {
        let e = self.exponent(v);
        if e == 0 {
            return None;
        }
        let mut m = self.0.clone();
        if e == 1 {
            m.remove(&v);
        } else {
            m.insert(v, e - 1);
        }
        Some((e, EvenMonomial(m)))
    }

    pub fn max_index(&self) -> u32 {
        self.0.keys().map(|v| v.index()).max().unwrap_or(0)
    }

    pub fn contains_lambda(&self) -> bool {
        self.0.keys().any(|v| matches!(v, EvenVar::Lam(_)))
    }
}

/// A single canonical term: even monomial times ordered ghost monomial.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Term {
    pub even: EvenMonomial,
    pub ghost: GhostMonomial,
}

impl Term {
    pub fn one() -> Term {
        Term {
            even: EvenMonomial::one(),
            ghost: GhostMonomial::ONE,
        }
    }
}

/// Sparse graded polynomial over complex rationals.
///
/// The value type of the symbolic layer. `n` is the number of degrees of
/// freedom; binary operations panic if the operands disagree on it (that is
/// a programming error, not an input error).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedPolynomial {
    n: u32,
    terms: BTreeMap<Term, ScalarC>,
}

impl GradedPolynomial {
    pub fn zero(n: u32) -> GradedPolynomial {
        assert!(n >= 1 && n <= MAX_DOF, "n must be in 1..={}", MAX_DOF);
        GradedPolynomial {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: u32, c: ScalarC) -> GradedPolynomial {
        let mut p = GradedPolynomial::zero(n);
        p.accumulate(Term::one(), c);
        p
    }

    pub fn one(n: u32) -> GradedPolynomial {
        GradedPolynomial::constant(n, sc_i64(1))
    }

    pub fn var(n: u32, v: EvenVar) -> Result<GradedPolynomial> {
        check_index(n, v.index(), "even variable")?;
        let mut p = GradedPolynomial::zero(n);
        p.accumulate(
            Term {
                even: EvenMonomial::var(v),
                ghost: GhostMonomial::ONE,
            },
            sc_i64(1),
        );
        Ok(p)
    }

    pub fn gen(n: u32, g: OddGen) -> Result<GradedPolynomial> {
        check_index(n, g.index(), "odd generator")?;
        let mut p = GradedPolynomial::zero(n);
        p.accumulate(
            Term {
                even: EvenMonomial::one(),
                ghost: GhostMonomial::single(g, 2 * n),
            },
            sc_i64(1),
        );
        Ok(p)
    }

    pub fn monomial(n: u32, even: EvenMonomial, ghost: GhostMonomial, coeff: ScalarC) -> GradedPolynomial {
        let mut p = GradedPolynomial::zero(n);
        p.accumulate(Term { even, ghost }, coeff);
        p
    }

    pub fn from_terms(n: u32, terms: impl IntoIterator<Item = (Term, ScalarC)>) -> GradedPolynomial {
        let mut p = GradedPolynomial::zero(n);
        for (t, c) in terms {
            p.accumulate(t, c);
        }
        p
    }

    pub fn dof(&self) -> u32 {
        self.n
    }

    pub fn two_n(&self) -> u32 {
        2 * self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Term, &ScalarC)> {
        self.terms.iter()
    }

    pub fn coeff(&self, t: &Term) -> ScalarC {
        self.terms.get(t).cloned().unwrap_or_else(crate::scalar::sc_zero)
    }

    fn accumulate(&mut self, t: Term, c: ScalarC) {
        if sc_is_zero(&c) {
            return;
        }
        match self.terms.entry(t) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sc_is_zero(&sum) {
                    e.remove();
                } else {
                    e.insert(sum);
                }
            }
        }
    }

    pub fn scale(&self, s: &ScalarC) -> GradedPolynomial {
        if sc_is_zero(s) {
            return GradedPolynomial::zero(self.n);
        }
        GradedPolynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(t, c)| (t.clone(), c.clone() * s.clone()))
                .collect(),
        }
    }

    /// Multiplication by the imaginary unit.
    pub fn times_i(&self) -> GradedPolynomial {
        self.scale(&crate::scalar::sc_i())
    }

    pub fn pow(&self, k: u32) -> GradedPolynomial {
        let mut acc = GradedPolynomial::one(self.n);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Partial derivative in an even variable; a linear derivation that
    /// commutes with ghost monomials.
    pub fn partial_even(&self, v: EvenVar) -> Result<GradedPolynomial> {
        check_index(self.n, v.index(), "even variable")?;
        let mut out = GradedPolynomial::zero(self.n);
        for (t, c) in &self.terms {
            if let Some((e, lowered)) = t.even.lower(v) {
                out.accumulate(
                    Term {
                        even: lowered,
                        ghost: t.ghost,
                    },
                    c.clone() * sc_i64(e as i64),
                );
            }
        }
        Ok(out)
    }

    /// Left Grassmann derivative: anticommute the generator to the leftmost
    /// position (collecting signs), then strike it. Terms without the
    /// generator map to zero.
    pub fn partial_odd(&self, g: OddGen) -> Result<GradedPolynomial> {
        check_index(self.n, g.index(), "odd generator")?;
        let two_n = self.two_n();
        let mut out = GradedPolynomial::zero(self.n);
        for (t, c) in &self.terms {
            if let Some((stripped, neg)) = t.ghost.strip_left(g, two_n) {
                let coeff = if neg { -c.clone() } else { c.clone() };
                out.accumulate(
                    Term {
                        even: t.even.clone(),
                        ghost: stripped,
                    },
                    coeff,
                );
            }
        }
        Ok(out)
    }

    /// Grassmann parity, requiring all terms to share ghost-count parity.
    /// The zero polynomial counts as even.
    pub fn parity(&self) -> Result<Parity> {
        let mut seen: Option<(Parity, &Term)> = None;
        for (t, _) in &self.terms {
            let p = Parity::of_count(t.ghost.degree());
            match seen {
                None => seen = Some((p, t)),
                Some((q, t0)) if q != p => {
                    let (even_term, odd_term) = if q == Parity::Even { (t0, t) } else { (t, t0) };
                    return Err(Error::MixedParity {
                        even_term: self.term_string(even_term),
                        odd_term: self.term_string(odd_term),
                    });
                }
                _ => {}
            }
        }
        Ok(seen.map(|(p, _)| p).unwrap_or(Parity::Even))
    }

    /// Ghost number (#c minus #cb per term) and parity of a homogeneous
    /// polynomial. Errors list an offending term pair.
    pub fn grade(&self) -> Result<(i64, Parity)> {
        let two_n = self.two_n();
        let mut seen: Option<((i64, Parity), &Term)> = None;
        for (t, _) in &self.terms {
            let gn = t.ghost.c_count(two_n) as i64 - t.ghost.cbar_count(two_n) as i64;
            let p = Parity::of_count(t.ghost.degree());
            match seen {
                None => seen = Some(((gn, p), t)),
                Some((g0, t0)) if g0 != (gn, p) => {
                    return Err(Error::NonHomogeneous {
                        left: self.term_string(t0),
                        right: self.term_string(t),
                    })
                }
                _ => {}
            }
        }
        Ok(seen.map(|(g, _)| g).unwrap_or((0, Parity::Even)))
    }

    /// The parity automorphism: negates terms of odd ghost count.
    pub fn parity_involution(&self) -> GradedPolynomial {
        GradedPolynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(t, c)| {
                    let c = if t.ghost.degree() % 2 == 1 {
                        -c.clone()
                    } else {
                        c.clone()
                    };
                    (t.clone(), c)
                })
                .collect(),
        }
    }

    pub fn is_ghost_free(&self) -> bool {
        self.terms.keys().all(|t| t.ghost.is_one())
    }

    pub fn is_lambda_free(&self) -> bool {
        self.terms.keys().all(|t| !t.even.contains_lambda())
    }

    /// Maximum total degree in the even variables, zero for the zero
    /// polynomial.
    pub fn max_even_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|t| t.even.total_degree())
            .max()
            .unwrap_or(0)
    }

    /// Evaluates a polynomial in `phi` alone at a real point. Errors if the
    /// polynomial carries ghosts, `lam`, or imaginary coefficients.
    pub fn eval_phi_f64(&self, phi: &[f64]) -> Result<f64> {
        if phi.len() != self.two_n() as usize {
            return Err(Error::Dimension {
                detail: format!(
                    "expected {} phi values, got {}",
                    self.two_n(),
                    phi.len()
                ),
            });
        }
        let mut sum = 0.0;
        for (t, c) in &self.terms {
            if !t.ghost.is_one() || t.even.contains_lambda() {
                return Err(Error::NotPhiPolynomial {
                    found: self.term_string(t),
                });
            }
            let coeff = sc_to_f64(c).ok_or_else(|| Error::Unsupported {
                detail: format!("imaginary coefficient in `{}`", self.term_string(t)),
            })?;
            let mut prod = coeff;
            for (v, e) in t.even.iter() {
                let EvenVar::Phi(a) = v else { unreachable!() };
                prod *= phi[(a - 1) as usize].powi(e as i32);
            }
            sum += prod;
        }
        Ok(sum)
    }

    fn term_string(&self, t: &Term) -> String {
        let c = self.coeff(t);
        format_term(self.two_n(), t, &c)
    }
}

fn check_index(n: u32, index: u32, kind: &'static str) -> Result<()> {
    if index == 0 || index > 2 * n {
        Err(Error::IndexOutOfRange { kind, index, n })
    } else {
        Ok(())
    }
}

fn format_monomial(two_n: u32, t: &Term) -> String {
    let mut parts: Vec<String> = Vec::new();
    for (v, e) in t.even.iter() {
        if e == 1 {
            parts.push(format!("{}", v));
        } else {
            parts.push(format!("{}^{}", v, e));
        }
    }
    for slot in t.ghost.slots() {
        parts.push(format!("{}", OddGen::from_slot(slot, two_n)));
    }
    parts.join("*")
}

fn format_term(two_n: u32, t: &Term, c: &ScalarC) -> String {
    let (neg, factor) = fmt_scalar_factor(c);
    let mono = format_monomial(two_n, t);
    let body = match (factor.is_empty(), mono.is_empty()) {
        (true, true) => "1".to_string(),
        (true, false) => mono,
        (false, true) => factor,
        (false, false) => format!("{}*{}", factor, mono),
    };
    if neg {
        format!("-{}", body)
    } else {
        body
    }
}

impl fmt::Display for GradedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (t, c) in &self.terms {
            let s = format_term(self.two_n(), t, c);
            if first {
                write!(f, "{}", s)?;
                first = false;
            } else if let Some(mag) = s.strip_prefix('-') {
                write!(f, " - {}", mag)?;
            } else {
                write!(f, " + {}", s)?;
            }
        }
        Ok(())
    }
}

impl<'a, 'b> Add<&'b GradedPolynomial> for &'a GradedPolynomial {
    type Output = GradedPolynomial;

    fn add(self, rhs: &'b GradedPolynomial) -> GradedPolynomial {
        assert_eq!(self.n, rhs.n, "mixed degrees of freedom");
        let mut out = self.clone();
        for (t, c) in &rhs.terms {
            out.accumulate(t.clone(), c.clone());
        }
        out
    }
}

impl<'a, 'b> Sub<&'b GradedPolynomial> for &'a GradedPolynomial {
    type Output = GradedPolynomial;

    fn sub(self, rhs: &'b GradedPolynomial) -> GradedPolynomial {
        assert_eq!(self.n, rhs.n, "mixed degrees of freedom");
        let mut out = self.clone();
        for (t, c) in &rhs.terms {
            out.accumulate(t.clone(), -c.clone());
        }
        out
    }
}

impl<'a, 'b> Mul<&'b GradedPolynomial> for &'a GradedPolynomial {
    type Output = GradedPolynomial;

    fn mul(self, rhs: &'b GradedPolynomial) -> GradedPolynomial {
        assert_eq!(self.n, rhs.n, "mixed degrees of freedom");
        let mut out = GradedPolynomial::zero(self.n);
        for (ta, ca) in &self.terms {
            for (tb, cb) in &rhs.terms {
                if let Some((ghost, neg)) = ta.ghost.merge(tb.ghost) {
                    let mut coeff = ca.clone() * cb.clone();
                    if neg {
                        coeff = -coeff;
                    }
                    out.accumulate(
                        Term {
                            even: ta.even.mul(&tb.even),
                            ghost,
                        },
                        coeff,
                    );
                }
            }
        }
        out
    }
}

impl<'a> Neg for &'a GradedPolynomial {
    type Output = GradedPolynomial;

    fn neg(self) -> GradedPolynomial {
        GradedPolynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(t, c)| (t.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Add for GradedPolynomial {
    type Output = GradedPolynomial;
    fn add(self, rhs: GradedPolynomial) -> GradedPolynomial {
        &self + &rhs
    }
}

impl Sub for GradedPolynomial {
    type Output = GradedPolynomial;
    fn sub(self, rhs: GradedPolynomial) -> GradedPolynomial {
        &self - &rhs
    }
}

impl Mul for GradedPolynomial {
    type Output = GradedPolynomial;
    fn mul(self, rhs: GradedPolynomial) -> GradedPolynomial {
        &self * &rhs
    }
}

impl Neg for GradedPolynomial {
    type Output = GradedPolynomial;
    fn neg(self) -> GradedPolynomial {
        -&self
    }
}

impl Zero for GradedPolynomial {
    fn zero() -> Self {
        // `num::Zero` needs a default dof; only used via `is_zero` in
        // generic code, so pick the smallest algebra.
        GradedPolynomial::zero(1)
    }

    fn is_zero(&self) -> bool {
        GradedPolynomial::is_zero(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{sc_i, sc_one};

    fn c(n: u32, a: u32) -> GradedPolynomial {
        GradedPolynomial::gen(n, OddGen::C(a)).unwrap()
    }

    fn cb(n: u32, a: u32) -> GradedPolynomial {
        GradedPolynomial::gen(n, OddGen::CBar(a)).unwrap()
    }

    fn phi(n: u32, a: u32) -> GradedPolynomial {
        GradedPolynomial::var(n, EvenVar::Phi(a)).unwrap()
    }

    fn lam(n: u32, a: u32) -> GradedPolynomial {
        GradedPolynomial::var(n, EvenVar::Lam(a)).unwrap()
    }

    #[test]
    fn ghost_nilpotency() {
        let p = &c(1, 1) * &c(1, 1);
        assert!(p.is_zero());
    }

    #[test]
    fn ghost_anticommutation() {
        // c[2]*c[1] = -(c[1]*c[2])
        let left = &c(1, 2) * &c(1, 1);
        let right = -&(&c(1, 1) * &c(1, 2));
        assert_eq!(left, right);
    }

    #[test]
    fn mixed_sector_product_sign() {
        // (phi[1]*c[1]) * (lam[1]*cb[1]) carries c[1]*cb[1] in global order
        // with no extra sign (c slots precede cb slots).
        let a = &phi(1, 1) * &c(1, 1);
        let b = &lam(1, 1) * &cb(1, 1);
        let prod = &a * &b;
        let expected = GradedPolynomial::monomial(
            1,
            EvenMonomial::from_exponents([(EvenVar::Phi(1), 1), (EvenVar::Lam(1), 1)]),
            GhostMonomial::single(OddGen::C(1), 2)
                .merge(GhostMonomial::single(OddGen::CBar(1), 2))
                .unwrap()
                .0,
            sc_one(),
        );
        assert_eq!(prod, expected);
        // and the reversed even factors commute
        let prod2 = &b * &a;
        // cb[1]*c[1] = -c[1]*cb[1]
        assert_eq!(prod2, -&expected);
    }

    #[test]
    fn add_cancels_to_canonical_form() {
        let p = &c(1, 1) + &(-&c(1, 1));
        assert!(p.is_zero());
        let q = &(&phi(1, 1) + &lam(1, 2).times_i()) + &phi(1, 1);
        assert_eq!(q.num_terms(), 2);
        assert_eq!(
            q.coeff(&Term {
                even: EvenMonomial::var(EvenVar::Phi(1)),
                ghost: GhostMonomial::ONE
            }),
            sc_i64(2)
        );
    }

    #[test]
    fn partial_even_basics() {
        // d/dphi[1] ((phi[1])^2 c[1]) = 2 phi[1] c[1]
        let p = &(&phi(1, 1) * &phi(1, 1)) * &c(1, 1);
        let d = p.partial_even(EvenVar::Phi(1)).unwrap();
        let expected = (&phi(1, 1) * &c(1, 1)).scale(&sc_i64(2));
        assert_eq!(d, expected);
        // d/dphi[1] phi[2] = 0
        assert!(phi(1, 2).partial_even(EvenVar::Phi(1)).unwrap().is_zero());
        // unknown index errors
        assert!(phi(1, 1).partial_even(EvenVar::Phi(3)).is_err());
    }

    #[test]
    fn partial_odd_left_convention() {
        // d/dc[1] (c[1]c[2]) = c[2]
        let p = &c(1, 1) * &c(1, 2);
        assert_eq!(p.partial_odd(OddGen::C(1)).unwrap(), c(1, 2));
        // d/dc[2] (c[1]c[2]) = -c[1]
        assert_eq!(p.partial_odd(OddGen::C(2)).unwrap(), -&c(1, 1));
        // d/dcb[1] (c[1] cb[1] c[2]): cb[1] sits after c[1] in global order,
        // so c[1]*cb[1]*c[2] = -c[1]*c[2]*cb[1]; stripping cb[1] from the
        // canonical form crosses c[1] and c[2].
        let q = &(&c(1, 1) * &cb(1, 1)) * &c(1, 2);
        let d = q.partial_odd(OddGen::CBar(1)).unwrap();
        assert_eq!(d, -&(&c(1, 1) * &c(1, 2)));
        // terms without the generator vanish
        assert!(phi(1, 1).partial_odd(OddGen::C(1)).unwrap().is_zero());
    }

    #[test]
    fn double_odd_derivative_annihilates() {
        let p = &(&c(1, 1) * &cb(1, 2)) * &phi(1, 1);
        let d2 = p
            .partial_odd(OddGen::C(1))
            .unwrap()
            .partial_odd(OddGen::C(1))
            .unwrap();
        assert!(d2.is_zero());
    }

    #[test]
    fn grade_and_parity() {
        let p = &c(2, 1) * &c(2, 2);
        assert_eq!(p.grade().unwrap(), (2, Parity::Even));
        assert_eq!(cb(1, 1).grade().unwrap(), (-1, Parity::Odd));
        let q = &(&lam(1, 1) * &c(1, 1)) * &cb(1, 2);
        assert_eq!(q.grade().unwrap(), (0, Parity::Even));
        // mixed grade errors
        let mixed = &c(1, 1).scale(&sc_i()) + &(&c(1, 1) * &c(1, 2));
        assert!(mixed.grade().is_err());
        assert!(mixed.parity().is_err());
        // zero polynomial is trivially homogeneous
        assert_eq!(GradedPolynomial::zero(1).grade().unwrap(), (0, Parity::Even));
    }

    #[test]
    fn display_round_trip_samples() {
        let p = &(&phi(1, 1) * &phi(1, 1)).scale(&sc_ratio_helper(1, 2)) + &(&c(1, 1) * &cb(1, 2)).times_i();
        let s = format!("{}", p);
        let back = crate::parse::parse_polynomial(1, &s).unwrap();
        assert_eq!(back, p);
    }

    fn sc_ratio_helper(p: i64, q: i64) -> ScalarC {
        crate::scalar::sc_ratio(p, q)
    }

    #[test]
    fn eval_phi() {
        // H = (phi1^2 + phi2^2)/2 at (3, 4) = 12.5
        let h = (&(&phi(1, 1) * &phi(1, 1)) + &(&phi(1, 2) * &phi(1, 2))).scale(&sc_ratio_helper(1, 2));
        assert_eq!(h.eval_phi_f64(&[3.0, 4.0]).unwrap(), 12.5);
        // ghosts are rejected
        assert!(c(1, 1).eval_phi_f64(&[0.0, 0.0]).is_err());
        // lambda is rejected
        assert!(lam(1, 1).eval_phi_f64(&[0.0, 0.0]).is_err());
    }
}

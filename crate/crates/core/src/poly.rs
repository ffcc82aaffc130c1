//! Sparse multivariate polynomials over F_p.
//!
//! Terms are stored in descending grevlex order with nonzero coefficients;
//! that canonical form makes equality, hashing and display well defined.
//! Computations that need another term order re-sort internally.

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::monomial::{Monomial, MonomialOrder};
use std::collections::HashMap;
use std::fmt;

/// Degree of a homogeneous polynomial; the zero polynomial is homogeneous
/// by convention with no degree to report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Homogeneity {
    Zero,
    Degree(u64),
    Inhomogeneous,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    p: u64,
    nvars: usize,
    /// Sorted descending in grevlex; coefficients in `1..p`.
    terms: Vec<(Monomial, u64)>,
}

impl Polynomial {
    pub fn zero(field: FieldSpec, nvars: usize) -> Self {
        Polynomial {
            p: field.p(),
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn constant(field: FieldSpec, nvars: usize, c: i64) -> Self {
        let c = field.reduce(c);
        let mut f = Self::zero(field, nvars);
        if c != 0 {
            f.terms.push((Monomial::one(nvars), c));
        }
        f
    }

    pub fn one(field: FieldSpec, nvars: usize) -> Self {
        Self::constant(field, nvars, 1)
    }

    pub fn variable(field: FieldSpec, nvars: usize, i: usize) -> Self {
        let mut f = Self::zero(field, nvars);
        f.terms.push((Monomial::var(nvars, i), 1));
        f
    }

    pub fn from_term(field: FieldSpec, nvars: usize, m: Monomial, c: i64) -> Self {
        debug_assert_eq!(m.nvars(), nvars);
        let c = field.reduce(c);
        let mut f = Self::zero(field, nvars);
        if c != 0 {
            f.terms.push((m, c));
        }
        f
    }

    /// Builds the canonical form from arbitrary (monomial, coefficient) pairs.
    pub fn from_terms(
        field: FieldSpec,
        nvars: usize,
        terms: impl IntoIterator<Item = (Monomial, i64)>,
    ) -> Self {
        let mut map: HashMap<Monomial, u64> = HashMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), nvars);
            let c = field.reduce(c);
            let entry = map.entry(m).or_insert(0);
            *entry = field.add(*entry, c);
        }
        let mut terms: Vec<(Monomial, u64)> =
            map.into_iter().filter(|&(_, c)| c != 0).collect();
        sort_terms(&mut terms);
        Polynomial {
            p: field.p(),
            nvars,
            terms,
        }
    }

    pub fn field(&self) -> FieldSpec {
        FieldSpec::new(self.p).expect("characteristic was validated at construction")
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn terms(&self) -> &[(Monomial, u64)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; zero polynomial reports 0.
    pub fn total_degree(&self) -> u64 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.p != other.p || self.nvars != other.nvars {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let field = self.field();
        Ok(merge(self, other, |c| c, &field))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let field = self.field();
        Ok(merge(self, other, |c| field.neg(c), &field))
    }

    pub fn neg(&self) -> Polynomial {
        let field = self.field();
        let mut out = self.clone();
        for (_, c) in &mut out.terms {
            *c = field.neg(*c);
        }
        out
    }

    pub fn scale(&self, c: i64) -> Polynomial {
        let field = self.field();
        let c = field.reduce(c);
        if c == 0 {
            return Self::zero(field, self.nvars);
        }
        let mut out = self.clone();
        for (_, k) in &mut out.terms {
            *k = field.mul(*k, c);
        }
        out
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let field = self.field();
        let mut map: HashMap<Monomial, u64> = HashMap::with_capacity(self.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.checked_mul(mb)?;
                let c = field.mul(*ca, *cb);
                let entry = map.entry(m).or_insert(0);
                *entry = field.add(*entry, c);
            }
        }
        let mut terms: Vec<(Monomial, u64)> =
            map.into_iter().filter(|&(_, c)| c != 0).collect();
        sort_terms(&mut terms);
        Ok(Polynomial {
            p: self.p,
            nvars: self.nvars,
            terms,
        })
    }

    /// Multiplies by a single term without building an intermediate map.
    pub fn mul_term(&self, m: &Monomial, c: u64) -> Result<Polynomial> {
        let field = self.field();
        let c = c % self.p;
        if c == 0 {
            return Ok(Self::zero(field, self.nvars));
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (mm, cc) in &self.terms {
            terms.push((mm.checked_mul(m)?, field.mul(*cc, c)));
        }
        // multiplying by a fixed monomial preserves the grevlex sort
        Ok(Polynomial {
            p: self.p,
            nvars: self.nvars,
            terms,
        })
    }

    pub fn pow(&self, mut e: u32) -> Result<Polynomial> {
        let field = self.field();
        let mut acc = Self::one(field, self.nvars);
        let mut base = self.clone();
        loop {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e == 0 {
                return Ok(acc);
            }
            base = base.mul(&base)?;
        }
    }

    /// `f^{p^e}` by scaling every exponent vector by `p^e`; coefficients are
    /// fixed because `c^p = c` in F_p.
    pub fn frobenius_power(&self, e: u32) -> Result<Polynomial> {
        let mut q: u64 = 1;
        for _ in 0..e {
            q = q.checked_mul(self.p).ok_or(Error::ExponentOverflow)?;
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            terms.push((m.checked_pow_scale(q)?, *c));
        }
        // scaling all exponents by q preserves the grevlex sort
        Ok(Polynomial {
            p: self.p,
            nvars: self.nvars,
            terms,
        })
    }

    pub fn homogeneity(&self) -> Homogeneity {
        match self.terms.first() {
            None => Homogeneity::Zero,
            Some((m0, _)) => {
                let d = m0.degree();
                if self.terms.iter().all(|(m, _)| m.degree() == d) {
                    Homogeneity::Degree(d)
                } else {
                    Homogeneity::Inhomogeneous
                }
            }
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        !matches!(self.homogeneity(), Homogeneity::Inhomogeneous)
    }

    /// Leading term with respect to an arbitrary order.
    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Monomial, u64)> {
        match order {
            MonomialOrder::GrevLex => self.terms.first().map(|(m, c)| (m, *c)),
            _ => self
                .terms
                .iter()
                .max_by(|(a, _), (b, _)| a.cmp_order(b, order))
                .map(|(m, c)| (m, *c)),
        }
    }

    /// Exact division by `g`; `None` when `g` does not divide `self`.
    pub fn exact_div(&self, g: &Polynomial) -> Result<Option<Polynomial>> {
        self.check_ring(g)?;
        if g.is_zero() {
            return Err(Error::DivisionByZeroGenerator);
        }
        let field = self.field();
        let (glm, glc) = (&g.terms[0].0, g.terms[0].1);
        let glc_inv = field.inv(glc)?;
        let mut rem = self.clone();
        let mut quot: Vec<(Monomial, u64)> = Vec::new();
        while let Some((lm, lc)) = rem.terms.first().cloned() {
            if !glm.divides(&lm) {
                return Ok(None);
            }
            let qm = glm.quotient(&lm);
            let qc = field.mul(lc, glc_inv);
            quot.push((qm.clone(), qc));
            let sub = g.mul_term(&qm, qc)?;
            rem = rem.sub(&sub)?;
        }
        sort_terms(&mut quot);
        Ok(Some(Polynomial {
            p: self.p,
            nvars: self.nvars,
            terms: quot,
        }))
    }

    /// Re-embeds into a ring with `extra` fresh variables inserted at `at`.
    pub fn extend_vars(&self, at: usize, extra: usize) -> Polynomial {
        let nvars = self.nvars + extra;
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps: Vec<u32> = Vec::with_capacity(nvars);
                exps.extend_from_slice(&m.exps()[..at]);
                exps.extend(std::iter::repeat(0).take(extra));
                exps.extend_from_slice(&m.exps()[at..]);
                (Monomial::new(exps), *c as i64)
            })
            .collect::<Vec<_>>();
        Polynomial::from_terms(self.field(), nvars, terms.into_iter().map(|(m, c)| (m, c)))
    }

    /// Drops `extra` variables at position `at`; every term must have
    /// exponent zero there.
    pub fn shrink_vars(&self, at: usize, extra: usize) -> Polynomial {
        let nvars = self.nvars - extra;
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                debug_assert!(m.exps()[at..at + extra].iter().all(|&e| e == 0));
                let mut exps: Vec<u32> = Vec::with_capacity(nvars);
                exps.extend_from_slice(&m.exps()[..at]);
                exps.extend_from_slice(&m.exps()[at + extra..]);
                (Monomial::new(exps), *c as i64)
            })
            .collect::<Vec<_>>();
        Polynomial::from_terms(self.field(), nvars, terms)
    }

    /// Renders with the given variable names.
    pub fn display<'a>(&'a self, names: &'a [String]) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, names }
    }
}

fn sort_terms(terms: &mut [(Monomial, u64)]) {
    terms.sort_unstable_by(|(a, _), (b, _)| b.cmp_order(a, MonomialOrder::GrevLex));
}

fn merge(
    a: &Polynomial,
    b: &Polynomial,
    map_b: impl Fn(u64) -> u64,
    field: &FieldSpec,
) -> Polynomial {
    let mut terms = Vec::with_capacity(a.terms.len() + b.terms.len());
    let (mut i, mut j) = (0, 0);
    while i < a.terms.len() && j < b.terms.len() {
        let (ma, ca) = &a.terms[i];
        let (mb, cb) = &b.terms[j];
        match ma.cmp_order(mb, MonomialOrder::GrevLex) {
            std::cmp::Ordering::Greater => {
                terms.push((ma.clone(), *ca));
                i += 1;
            }
            std::cmp::Ordering::Less => {
                terms.push((mb.clone(), map_b(*cb)));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let c = field.add(*ca, map_b(*cb));
                if c != 0 {
                    terms.push((ma.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    terms.extend(a.terms[i..].iter().cloned());
    terms.extend(b.terms[j..].iter().map(|(m, c)| (m.clone(), map_b(*c))));
    Polynomial {
        p: a.p,
        nvars: a.nvars,
        terms,
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a Polynomial,
    names: &'a [String],
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.poly.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let mut wrote = false;
            if *c != 1 || m.is_one() {
                write!(f, "{c}")?;
                wrote = true;
            }
            for (v, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if wrote {
                    write!(f, "*")?;
                }
                write!(f, "{}", self.names[v])?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
                wrote = true;
            }
        }
        Ok(())
    }
}

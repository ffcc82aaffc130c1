//! Exponent vectors and the monomial orders the engine understands.

use crate::error::{Error, Result};
use smallvec::SmallVec;
use std::cmp::Ordering;

type Exps = SmallVec<[u32; 8]>;

/// A monomial: an exponent vector with its total degree cached.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Exps,
    degree: u64,
}

impl Monomial {
    pub fn new(exps: impl IntoIterator<Item = u32>) -> Self {
        let exps: Exps = exps.into_iter().collect();
        let degree = exps.iter().map(|&e| e as u64).sum();
        Monomial { exps, degree }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: std::iter::repeat(0).take(nvars).collect(),
            degree: 0,
        }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = 1;
        m.degree = 1;
        m
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree
            && self
                .exps
                .iter()
                .zip(other.exps.iter())
                .all(|(a, b)| a <= b)
    }

    /// `other / self`; caller guarantees divisibility.
    pub fn quotient(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial {
            exps: other
                .exps
                .iter()
                .zip(self.exps.iter())
                .map(|(b, a)| b - a)
                .collect(),
            degree: other.degree - self.degree,
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(&a, &b)| a.max(b)),
        )
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(&a, &b)| a.min(b)),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        let mut exps = Exps::with_capacity(self.exps.len());
        for (&a, &b) in self.exps.iter().zip(other.exps.iter()) {
            exps.push(a.checked_add(b).ok_or(Error::ExponentOverflow)?);
        }
        Ok(Monomial {
            exps,
            degree: self
                .degree
                .checked_add(other.degree)
                .ok_or(Error::ExponentOverflow)?,
        })
    }

    /// Scales every exponent by `k`; the fast path behind Frobenius powers.
    pub fn checked_pow_scale(&self, k: u64) -> Result<Monomial> {
        let mut exps = Exps::with_capacity(self.exps.len());
        for &a in &self.exps {
            let scaled = (a as u64).checked_mul(k).ok_or(Error::ExponentOverflow)?;
            exps.push(u32::try_from(scaled).map_err(|_| Error::ExponentOverflow)?);
        }
        Ok(Monomial {
            exps,
            degree: self
                .degree
                .checked_mul(k)
                .ok_or(Error::ExponentOverflow)?,
        })
    }

    pub fn cmp_order(&self, other: &Monomial, order: MonomialOrder) -> Ordering {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        match order {
            MonomialOrder::GrevLex => grevlex(&self.exps, self.degree, &other.exps, other.degree),
            MonomialOrder::Lex => lex(&self.exps, &other.exps),
            MonomialOrder::Elim { block } => {
                let da: u64 = self.exps[..block].iter().map(|&e| e as u64).sum();
                let db: u64 = other.exps[..block].iter().map(|&e| e as u64).sum();
                grevlex(&self.exps[..block], da, &other.exps[..block], db).then_with(|| {
                    grevlex(
                        &self.exps[block..],
                        self.degree - da,
                        &other.exps[block..],
                        other.degree - db,
                    )
                })
            }
        }
    }
}

fn grevlex(a: &[u32], da: u64, b: &[u32], db: u64) -> Ordering {
    match da.cmp(&db) {
        Ordering::Equal => {
            for (x, y) in a.iter().rev().zip(b.iter().rev()) {
                match x.cmp(y) {
                    Ordering::Equal => continue,
                    // last nonzero entry of a-b negative => a > b
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                }
            }
            Ordering::Equal
        }
        ord => ord,
    }
}

fn lex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b.iter()) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            ord => return ord,
        }
    }
    Ordering::Equal
}

/// Term orders: grevlex is the workhorse, lex and block-elimination orders
/// exist for elimination-based colon/intersection/radical computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    GrevLex,
    Lex,
    /// Eliminates the first `block` variables.
    Elim { block: usize },
}

//! Degree-by-degree linear algebra over F_p: a slow reference path for
//! membership, containment, nu values, colengths and socle degrees.
//!
//! This module deliberately avoids the Groebner engine (it touches only
//! `field`, `monomial`, `poly`), so its answers cross-check the fast path.
//! Everything here is dense and only meant for small rings.

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use std::collections::HashMap;

/// All monomials of total degree `d` in `nvars` variables, in a fixed order.
pub fn monomials_of_degree(nvars: usize, d: u64) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = vec![0u32; nvars];
    fill(nvars, d, 0, &mut current, &mut out);
    out
}

fn fill(nvars: usize, left: u64, var: usize, current: &mut Vec<u32>, out: &mut Vec<Monomial>) {
    if var + 1 == nvars {
        current[var] = left as u32;
        out.push(Monomial::new(current.iter().copied()));
        current[var] = 0;
        return;
    }
    for e in 0..=left {
        current[var] = e as u32;
        fill(nvars, left - e, var + 1, current, out);
    }
    current[var] = 0;
}

/// Row-echelon span of a set of vectors over F_p.
struct Echelon {
    field: FieldSpec,
    /// rows[i] is normalized with pivot 1 at `pivots[i]`.
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Echelon {
    fn new(field: FieldSpec) -> Self {
        Echelon {
            field,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    /// Reduces `v` against the span; returns the remainder.
    fn reduce(&self, mut v: Vec<u64>) -> Vec<u64> {
        for (row, &piv) in self.rows.iter().zip(self.pivots.iter()) {
            let c = v[piv];
            if c != 0 {
                for (x, &r) in v.iter_mut().zip(row.iter()) {
                    *x = self.field.sub(*x, self.field.mul(c, r));
                }
            }
        }
        v
    }

    /// Inserts `v` if independent; reports whether it was already in the span.
    fn insert(&mut self, v: Vec<u64>) -> bool {
        let mut v = self.reduce(v);
        match v.iter().position(|&c| c != 0) {
            None => true,
            Some(piv) => {
                let inv = self.field.inv(v[piv]).expect("pivot nonzero");
                for x in v.iter_mut() {
                    *x = self.field.mul(*x, inv);
                }
                self.rows.push(v);
                self.pivots.push(piv);
                false
            }
        }
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }
}

/// Coefficient vector of the degree-`d` part of `f` in the basis
/// `monomials_of_degree(nvars, d)`.
fn degree_slice(f: &Polynomial, d: u64, index: &HashMap<Monomial, usize>, len: usize) -> Vec<u64> {
    let mut v = vec![0u64; len];
    for (m, c) in f.terms() {
        if m.degree() == d {
            v[index[m]] = *c;
        }
    }
    v
}

/// Span of the degree-`d` graded piece of the homogeneous ideal generated by
/// `gens`.
fn ideal_degree_span(
    gens: &[Polynomial],
    d: u64,
    field: FieldSpec,
    nvars: usize,
    basis: &[Monomial],
    index: &HashMap<Monomial, usize>,
) -> Result<Echelon> {
    let mut ech = Echelon::new(field);
    for g in gens {
        let gd = g.total_degree();
        if g.is_zero() || gd > d || !g.is_homogeneous() {
            if !g.is_zero() && !g.is_homogeneous() {
                return Err(Error::NotHomogeneous);
            }
            continue;
        }
        for m in monomials_of_degree(nvars, d - gd) {
            let shifted = g.mul_term(&m, 1)?;
            ech.insert(degree_slice(&shifted, d, index, basis.len()));
        }
    }
    Ok(ech)
}

/// Membership of a homogeneous `f` in the homogeneous ideal `gens`,
/// decided degree by degree with dense row reduction.
pub fn membership(f: &Polynomial, gens: &[Polynomial]) -> Result<bool> {
    if f.is_zero() {
        return Ok(true);
    }
    let field = f.field();
    let nvars = f.nvars();
    let d = match f.homogeneity() {
        crate::poly::Homogeneity::Degree(d) => d,
        crate::poly::Homogeneity::Zero => return Ok(true),
        crate::poly::Homogeneity::Inhomogeneous => return Err(Error::NotHomogeneous),
    };
    let basis = monomials_of_degree(nvars, d);
    let index: HashMap<Monomial, usize> = basis
        .iter()
        .enumerate()
        .map(|(i, m)| (m.clone(), i))
        .collect();
    let ech = ideal_degree_span(gens, d, field, nvars, &basis, &index)?;
    let v = degree_slice(f, d, &index, basis.len());
    Ok(ech.reduce(v).iter().all(|&c| c == 0))
}

/// Containment of every product of `t` generators of `a` in the target.
pub fn power_containment(
    a_gens: &[Polynomial],
    t: u64,
    target: &[Polynomial],
) -> Result<bool> {
    let field = a_gens[0].field();
    let nvars = a_gens[0].nvars();
    let mut products = vec![Polynomial::one(field, nvars)];
    for _ in 0..t {
        let mut seen: std::collections::HashSet<Polynomial> = std::collections::HashSet::new();
        let mut next = Vec::new();
        for f in &products {
            for g in a_gens {
                let prod = f.mul(g)?;
                if !prod.is_zero() && seen.insert(prod.clone()) {
                    next.push(prod);
                }
            }
        }
        products = next;
    }
    for f in &products {
        if !membership(f, target)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// max { t : a^t not contained in target }, by upward scan.
pub fn nu(a_gens: &[Polynomial], target: &[Polynomial], t_cap: u64) -> Result<u64> {
    let mut t = 0;
    loop {
        if t + 1 > t_cap {
            return Err(Error::SearchBudgetExceeded {
                what: "dense nu scan",
                limit: t_cap,
            });
        }
        if power_containment(a_gens, t + 1, target)? {
            return Ok(t);
        }
        t += 1;
    }
}

/// Graded Hilbert function of S/(gens) computed densely, up to the first
/// degree where the quotient vanishes; errors if it has not vanished by
/// `degree_cap`.
pub fn hilbert_function(
    gens: &[Polynomial],
    field: FieldSpec,
    nvars: usize,
    degree_cap: u64,
) -> Result<Vec<u64>> {
    let mut hf = Vec::new();
    for d in 0..=degree_cap {
        let basis = monomials_of_degree(nvars, d);
        let index: HashMap<Monomial, usize> = basis
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        let ech = ideal_degree_span(gens, d, field, nvars, &basis, &index)?;
        let codim = basis.len() - ech.rank();
        if codim == 0 {
            // standard graded: once a graded piece vanishes all later ones do
            return Ok(hf);
        }
        hf.push(codim as u64);
    }
    Err(Error::SearchBudgetExceeded {
        what: "dense hilbert function scan",
        limit: degree_cap,
    })
}

/// Colength of an m-primary homogeneous ideal.
pub fn colength(
    gens: &[Polynomial],
    field: FieldSpec,
    nvars: usize,
    degree_cap: u64,
) -> Result<u64> {
    Ok(hilbert_function(gens, field, nvars, degree_cap)?.iter().sum())
}

/// Socle degree a_0 of the artinian quotient.
pub fn socle_degree(
    gens: &[Polynomial],
    field: FieldSpec,
    nvars: usize,
    degree_cap: u64,
) -> Result<Option<u64>> {
    let hf = hilbert_function(gens, field, nvars, degree_cap)?;
    Ok(if hf.is_empty() {
        None
    } else {
        Some((hf.len() - 1) as u64)
    })
}

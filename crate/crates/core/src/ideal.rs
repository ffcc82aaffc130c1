//! Ideals with cached Groebner bases and the elimination-based ideal
//! operations: membership, containment, colon, intersection, and radical
//! membership via the Rabinowitsch trick.

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::groebner::{buchberger, GbLimits, GroebnerBasis};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// A finitely generated ideal. Generators are kept as given (zero generators
/// dropped); reduced Groebner bases are cached per order and shared by
/// clones, since the nu searches re-test containments against the same
/// bracket powers many times.
#[derive(Debug, Clone)]
pub struct Ideal {
    field: FieldSpec,
    nvars: usize,
    gens: Vec<Polynomial>,
    gb_cache: Arc<Mutex<HashMap<MonomialOrder, Arc<GroebnerBasis>>>>,
    min_cache: Arc<OnceLock<(usize, u64)>>,
}

impl Ideal {
    pub fn new(field: FieldSpec, nvars: usize, gens: Vec<Polynomial>) -> Result<Self> {
        for g in &gens {
            if g.p() != field.p() || g.nvars() != nvars {
                return Err(Error::RingMismatch);
            }
        }
        let gens: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal {
            field,
            nvars,
            gens,
            gb_cache: Arc::new(Mutex::new(HashMap::new())),
            min_cache: Arc::new(OnceLock::new()),
        })
    }

    pub fn zero(field: FieldSpec, nvars: usize) -> Self {
        Ideal::new(field, nvars, vec![]).expect("no generators to mismatch")
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    /// True when some generator is a nonzero constant.
    pub fn has_unit_generator(&self) -> bool {
        self.gens.iter().any(|g| g.is_constant())
    }

    /// Ideal sum: concatenated generators, fresh cache.
    pub fn plus(&self, other: &Ideal) -> Result<Ideal> {
        if self.field != other.field || self.nvars != other.nvars {
            return Err(Error::RingMismatch);
        }
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(self.field, self.nvars, gens)
    }

    pub fn groebner(&self, order: MonomialOrder, limits: GbLimits) -> Result<Arc<GroebnerBasis>> {
        {
            let cache = self.gb_cache.lock().expect("gb cache poisoned");
            if let Some(gb) = cache.get(&order) {
                return Ok(gb.clone());
            }
        }
        let gb = Arc::new(buchberger(
            &self.gens,
            order,
            self.field,
            self.nvars,
            limits,
        )?);
        let mut cache = self.gb_cache.lock().expect("gb cache poisoned");
        Ok(cache.entry(order).or_insert(gb).clone())
    }

    pub fn cached_min_data(&self) -> &Arc<OnceLock<(usize, u64)>> {
        &self.min_cache
    }

    pub fn is_proper(&self, limits: GbLimits) -> Result<bool> {
        if self.has_unit_generator() {
            return Ok(false);
        }
        Ok(!self.groebner(MonomialOrder::GrevLex, limits)?.contains_one())
    }
}

/// `f` lies in `I`.
pub fn ideal_membership(f: &Polynomial, ideal: &Ideal, limits: GbLimits) -> Result<bool> {
    let gb = ideal.groebner(MonomialOrder::GrevLex, limits)?;
    gb.reduces_to_zero(f)
}

/// Every generator of `inner` lies in `outer`.
pub fn ideal_contains(outer: &Ideal, inner: &Ideal, limits: GbLimits) -> Result<bool> {
    if outer.field() != inner.field() || outer.nvars() != inner.nvars() {
        return Err(Error::RingMismatch);
    }
    let gb = outer.groebner(MonomialOrder::GrevLex, limits)?;
    for g in inner.gens() {
        if !gb.reduces_to_zero(g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn ideal_eq(a: &Ideal, b: &Ideal, limits: GbLimits) -> Result<bool> {
    // reduced bases are canonical per (ideal, order)
    let ga = a.groebner(MonomialOrder::GrevLex, limits)?;
    let gb = b.groebner(MonomialOrder::GrevLex, limits)?;
    Ok(ga.polys() == gb.polys())
}

/// Intersection via the tag-variable trick: eliminate t from t I + (1-t) J.
pub fn intersect(a: &Ideal, b: &Ideal, limits: GbLimits) -> Result<Ideal> {
    if a.field() != b.field() || a.nvars() != b.nvars() {
        return Err(Error::RingMismatch);
    }
    let field = a.field();
    let nvars = a.nvars();
    if a.is_zero() || b.is_zero() {
        return Ok(Ideal::zero(field, nvars));
    }
    let t = Polynomial::variable(field, nvars + 1, 0);
    let one = Polynomial::one(field, nvars + 1);
    let one_minus_t = one.sub(&t)?;
    let mut gens = Vec::with_capacity(a.gens().len() + b.gens().len());
    for f in a.gens() {
        gens.push(f.extend_vars(0, 1).mul(&t)?);
    }
    for g in b.gens() {
        gens.push(g.extend_vars(0, 1).mul(&one_minus_t)?);
    }
    let gb = buchberger(
        &gens,
        MonomialOrder::Elim { block: 1 },
        field,
        nvars + 1,
        limits,
    )?;
    let kept: Vec<Polynomial> = gb
        .polys()
        .iter()
        .filter(|f| f.terms().iter().all(|(m, _)| m.exp(0) == 0))
        .map(|f| f.shrink_vars(0, 1))
        .collect();
    Ideal::new(field, nvars, kept)
}

/// `(I : g)` for a single nonzero `g`, via `(I \cap (g)) / g`.
pub fn colon_poly(ideal: &Ideal, g: &Polynomial, limits: GbLimits) -> Result<Ideal> {
    if g.is_zero() {
        return Err(Error::DivisionByZeroGenerator);
    }
    let principal = Ideal::new(ideal.field(), ideal.nvars(), vec![g.clone()])?;
    let inter = intersect(ideal, &principal, limits)?;
    let mut gens = Vec::with_capacity(inter.gens().len());
    for h in inter.gens() {
        let q = h
            .exact_div(g)?
            .expect("members of I \u{2229} (g) are multiples of g");
        gens.push(q);
    }
    Ideal::new(ideal.field(), ideal.nvars(), gens)
}

/// `(I : J) = {f : f J \subseteq I}`, intersecting per-generator colons.
pub fn colon_ideal(ideal: &Ideal, j: &Ideal, limits: GbLimits) -> Result<Ideal> {
    if ideal.field() != j.field() || ideal.nvars() != j.nvars() {
        return Err(Error::RingMismatch);
    }
    if j.gens().is_empty() {
        return Err(Error::DivisionByZeroGenerator);
    }
    let mut acc: Option<Ideal> = None;
    for g in j.gens() {
        let c = colon_poly(ideal, g, limits)?;
        acc = Some(match acc {
            None => c,
            Some(prev) => intersect(&prev, &c, limits)?,
        });
    }
    Ok(acc.expect("at least one generator"))
}

/// `f` lies in the radical of `I`: adjoin t and test 1 in I + (1 - t f).
pub fn radical_membership(f: &Polynomial, ideal: &Ideal, limits: GbLimits) -> Result<bool> {
    if f.is_zero() {
        return Ok(true);
    }
    let field = ideal.field();
    let nvars = ideal.nvars();
    let t = Polynomial::variable(field, nvars + 1, nvars);
    let one = Polynomial::one(field, nvars + 1);
    let mut gens: Vec<Polynomial> = ideal
        .gens()
        .iter()
        .map(|g| g.extend_vars(nvars, 1))
        .collect();
    gens.push(one.sub(&t.mul(&f.extend_vars(nvars, 1))?)?);
    let gb = buchberger(&gens, MonomialOrder::GrevLex, field, nvars + 1, limits)?;
    Ok(gb.contains_one())
}

/// Monomial generators of the initial ideal (minimal, since the basis is
/// reduced).
pub fn initial_ideal(ideal: &Ideal, limits: GbLimits) -> Result<Vec<Monomial>> {
    let gb = ideal.groebner(MonomialOrder::GrevLex, limits)?;
    Ok(gb.initial_monomials())
}

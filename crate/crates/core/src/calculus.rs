//! Ideal-level constructors: ordinary powers a^t, Frobenius bracket powers
//! J^{[p^e]}, and minimal homogeneous generators.

use crate::error::{Error, Result};
use crate::groebner::GbLimits;
use crate::ideal::{ideal_membership, Ideal};
use crate::poly::Polynomial;
use std::collections::HashSet;

/// Incremental generator ladder for the powers of a fixed ideal. powers[t]
/// holds generators of a^t (products of t generators, exact duplicates
/// pruned, no ideal-theoretic minimalization).
#[derive(Debug)]
pub struct PowerCache {
    base: Vec<Polynomial>,
    field: crate::field::FieldSpec,
    nvars: usize,
    powers: Vec<Vec<Polynomial>>,
    max_t: u64,
}

impl PowerCache {
    pub fn new(base: &Ideal, max_t: u64) -> Self {
        PowerCache {
            base: base.gens().to_vec(),
            field: base.field(),
            nvars: base.nvars(),
            powers: vec![vec![Polynomial::one(base.field(), base.nvars())]],
            max_t,
        }
    }

    pub fn max_t(&self) -> u64 {
        self.max_t
    }

    /// Generators of a^t, extending the ladder as needed.
    pub fn power(&mut self, t: u64) -> Result<&[Polynomial]> {
        if t > self.max_t {
            return Err(Error::SearchBudgetExceeded {
                what: "ideal power ladder",
                limit: self.max_t,
            });
        }
        while (self.powers.len() as u64) <= t {
            let prev = self.powers.last().expect("ladder starts at a^0");
            let mut seen: HashSet<Polynomial> = HashSet::new();
            let mut next = Vec::new();
            for f in prev {
                for g in &self.base {
                    let prod = f.mul(g)?;
                    if prod.is_zero() {
                        continue;
                    }
                    if seen.insert(prod.clone()) {
                        next.push(prod);
                    }
                }
            }
            self.powers.push(next);
        }
        Ok(&self.powers[t as usize])
    }

    pub fn power_ideal(&mut self, t: u64) -> Result<Ideal> {
        let gens = self.power(t)?.to_vec();
        if t == 0 {
            return Ideal::new(self.field, self.nvars, vec![Polynomial::one(self.field, self.nvars)]);
        }
        Ideal::new(self.field, self.nvars, gens)
    }
}

/// a^t with a^0 = (1).
pub fn ideal_power(a: &Ideal, t: u64, max_t: u64) -> Result<Ideal> {
    PowerCache::new(a, max_t.max(t)).power_ideal(t)
}

/// J^{[p^e]}: Frobenius powers of the generators. Correct because bracket
/// powers of a generating set generate the bracket power.
pub fn bracket_power(j: &Ideal, e: u32) -> Result<Ideal> {
    let gens = j
        .gens()
        .iter()
        .map(|g| g.frobenius_power(e))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(j.field(), j.nvars(), gens)
}

/// Minimal homogeneous generator data `(mu, D - 1)`: the minimal generator
/// count and the largest degree of a minimal generator. Redundant generators
/// are dropped highest degree first, which is legitimate by graded Nakayama.
pub fn minimal_generators(a: &Ideal, limits: GbLimits) -> Result<(usize, u64)> {
    if let Some(&v) = a.cached_min_data().get() {
        return Ok(v);
    }
    if !a.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    if a.has_unit_generator() {
        return Err(Error::UnitIdeal);
    }
    let mut kept: Vec<Polynomial> = a.gens().to_vec();
    // candidates ordered by descending degree, ties by later position first
    let mut order: Vec<usize> = (0..kept.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse((kept[i].total_degree(), i)));
    for idx in order {
        let candidate = kept[idx].clone();
        if candidate.is_zero() {
            continue;
        }
        let others: Vec<Polynomial> = kept
            .iter()
            .enumerate()
            .filter(|(q, g)| *q != idx && !g.is_zero())
            .map(|(_, g)| g.clone())
            .collect();
        let rest = Ideal::new(a.field(), a.nvars(), others)?;
        if ideal_membership(&candidate, &rest, limits)? {
            kept[idx] = Polynomial::zero(a.field(), a.nvars());
        }
    }
    let survivors: Vec<&Polynomial> = kept.iter().filter(|g| !g.is_zero()).collect();
    let mu = survivors.len();
    let d_minus_1 = survivors
        .iter()
        .map(|g| g.total_degree())
        .max()
        .unwrap_or(0);
    let v = (mu, d_minus_1);
    let _ = a.cached_min_data().set(v);
    Ok(v)
}

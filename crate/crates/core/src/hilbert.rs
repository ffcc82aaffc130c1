//! Staircase combinatorics for monomial ideals: Hilbert-series numerators,
//! Krull dimension, multiplicity, colengths, socle degrees, and standard
//! monomial enumeration.
//!
//! The numerator N(t) with HS(S/I) = N(t)/(1-t)^n is computed by the usual
//! pivot recursion N(I) = N(I + (q)) + t^{deg q} N(I : q), splitting on a
//! variable power q that properly divides some generator.

use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// Summary of the quotient by a monomial ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSummary {
    /// Krull dimension of S/I.
    pub dim: usize,
    /// Hilbert-Samuel multiplicity e(S/I); the colength when `dim == 0`.
    pub multiplicity: i128,
    /// Hilbert function of S/I as a coefficient vector, present iff
    /// `dim == 0`.
    pub hilbert_function: Option<Vec<i128>>,
}

impl HilbertSummary {
    /// Total length for an artinian quotient.
    pub fn colength(&self) -> Option<u64> {
        self.hilbert_function
            .as_ref()
            .map(|hf| hf.iter().map(|&c| c as u64).sum())
    }

    /// Top degree with nonzero Hilbert function (the socle degree a_0 of an
    /// artinian graded quotient). `None` for the zero ring or positive
    /// dimension.
    pub fn socle_degree(&self) -> Option<u64> {
        let hf = self.hilbert_function.as_ref()?;
        if hf.is_empty() {
            None
        } else {
            Some((hf.len() - 1) as u64)
        }
    }
}

/// Drops generators divisible by another generator; result sorted for
/// determinism.
pub fn minimalize(gens: &[Monomial]) -> Vec<Monomial> {
    let mut sorted: Vec<Monomial> = gens.to_vec();
    sorted.sort_by_key(|m| (m.degree(), m.exps().to_vec()));
    sorted.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for m in sorted {
        if !out.iter().any(|k| k.divides(&m)) {
            out.push(m);
        }
    }
    out
}

fn shift_add(dst: &mut Vec<i128>, src: &[i128], shift: usize, sign: i128) {
    if dst.len() < src.len() + shift {
        dst.resize(src.len() + shift, 0);
    }
    for (k, &c) in src.iter().enumerate() {
        dst[k + shift] += sign * c;
    }
}

fn trim(v: &mut Vec<i128>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// Numerator N(t) of the Hilbert series N(t)/(1-t)^n of S/I for the monomial
/// ideal generated by `gens` (need not be minimal).
pub fn numerator(gens: &[Monomial], nvars: usize) -> Vec<i128> {
    let min = minimalize(gens);
    numerator_minimal(&min, nvars)
}

fn numerator_minimal(gens: &[Monomial], nvars: usize) -> Vec<i128> {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|m| m.is_one()) {
        return vec![];
    }
    if pairwise_coprime(gens) {
        // complete intersection of monomials: N = prod (1 - t^{deg})
        let mut acc = vec![1i128];
        for g in gens {
            let d = g.degree() as usize;
            let mut next = vec![0i128; acc.len() + d];
            for (k, &c) in acc.iter().enumerate() {
                next[k] += c;
                next[k + d] -= c;
            }
            acc = next;
        }
        trim(&mut acc);
        return acc;
    }

    let (var, exp) = pick_pivot(gens, nvars);
    let pivot = {
        let mut e = vec![0u32; nvars];
        e[var] = exp;
        Monomial::new(e)
    };

    // I + (pivot)
    let mut plus: Vec<Monomial> = gens
        .iter()
        .filter(|g| !pivot.divides(g))
        .cloned()
        .collect();
    plus.push(pivot.clone());
    let plus = minimalize(&plus);

    // I : pivot
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            let exps: Vec<u32> = g
                .exps()
                .iter()
                .enumerate()
                .map(|(i, &e)| if i == var { e.saturating_sub(exp) } else { e })
                .collect();
            Monomial::new(exps)
        })
        .collect();
    let colon = minimalize(&colon);

    let mut n = numerator_minimal(&plus, nvars);
    let n_colon = numerator_minimal(&colon, nvars);
    shift_add(&mut n, &n_colon, exp as usize, 1);
    trim(&mut n);
    n
}

fn pairwise_coprime(gens: &[Monomial]) -> bool {
    let nvars = gens[0].nvars();
    let mut seen = vec![false; nvars];
    for g in gens {
        for (i, &e) in g.exps().iter().enumerate() {
            if e > 0 {
                if seen[i] {
                    return false;
                }
                seen[i] = true;
            }
        }
    }
    true
}

/// Most frequent variable and the median positive exponent among generators
/// that are not pure powers of it. Minimality of `gens` guarantees the pivot
/// properly divides a generator and lies outside the ideal.
fn pick_pivot(gens: &[Monomial], nvars: usize) -> (usize, u32) {
    let mut counts = vec![0usize; nvars];
    for g in gens {
        for (i, &e) in g.exps().iter().enumerate() {
            if e > 0 {
                counts[i] += 1;
            }
        }
    }
    let var = (0..nvars).max_by_key(|&i| counts[i]).expect("nonempty ring");
    let mut exps: Vec<u32> = gens
        .iter()
        .filter(|g| g.exp(var) > 0 && g.degree() > g.exp(var) as u64)
        .map(|g| g.exp(var))
        .collect();
    debug_assert!(
        !exps.is_empty(),
        "pivot variable occurs only in a pure power: input not minimal or coprime"
    );
    exps.sort_unstable();
    (var, exps[exps.len() / 2])
}

/// Divides out (1-t)^k and reads off dimension, multiplicity, and (when
/// artinian) the Hilbert function.
pub fn summarize(numer: &[i128], nvars: usize) -> HilbertSummary {
    let mut q: Vec<i128> = numer.to_vec();
    trim(&mut q);
    if q.is_empty() {
        // unit ideal: the zero ring
        return HilbertSummary {
            dim: 0,
            multiplicity: 0,
            hilbert_function: Some(vec![]),
        };
    }
    let mut cancelled = 0usize;
    while cancelled < nvars {
        // divide by (1 - t): exact iff q(1) == 0
        let total: i128 = q.iter().sum();
        if total != 0 {
            break;
        }
        // synthetic division: if q = (1-t) r then r_k = sum_{j<=k} q_j
        let mut r = Vec::with_capacity(q.len().saturating_sub(1));
        let mut acc = 0i128;
        for &c in &q[..q.len() - 1] {
            acc += c;
            r.push(acc);
        }
        trim(&mut r);
        q = r;
        cancelled += 1;
    }
    let dim = nvars - cancelled;
    let multiplicity: i128 = q.iter().sum();
    let hilbert_function = if dim == 0 { Some(q) } else { None };
    HilbertSummary {
        dim,
        multiplicity,
        hilbert_function,
    }
}

/// Pure-power bound per variable, erroring on a variable with no pure power
/// among the generators (which witnesses positive dimension).
pub fn pure_power_bounds(gens: &[Monomial], nvars: usize) -> Result<Vec<u32>> {
    let mut bounds = vec![0u32; nvars];
    for g in gens {
        let mut support = g.exps().iter().enumerate().filter(|(_, &e)| e > 0);
        if let (Some((i, &e)), None) = (support.next(), support.next()) {
            if bounds[i] == 0 || e < bounds[i] {
                bounds[i] = e;
            }
        }
    }
    for (i, &b) in bounds.iter().enumerate() {
        if b == 0 {
            return Err(Error::NotZeroDimensional(i));
        }
    }
    Ok(bounds)
}

/// All monomials outside the monomial ideal generated by `gens`; errors when
/// the quotient is not finite.
pub fn standard_monomials(gens: &[Monomial], nvars: usize) -> Result<Vec<Monomial>> {
    let min = minimalize(gens);
    if min.iter().any(|m| m.is_one()) {
        return Ok(vec![]);
    }
    let bounds = pure_power_bounds(&min, nvars)?;
    let mut out = Vec::new();
    let mut current = vec![0u32; nvars];
    enumerate(&min, &bounds, 0, &mut current, &mut out);
    out.sort_by_key(|m: &Monomial| (m.degree(), m.exps().to_vec()));
    Ok(out)
}

fn enumerate(
    active: &[Monomial],
    bounds: &[u32],
    var: usize,
    current: &mut Vec<u32>,
    out: &mut Vec<Monomial>,
) {
    if var == bounds.len() {
        out.push(Monomial::new(current.iter().copied()));
        return;
    }
    for e in 0..bounds[var] {
        current[var] = e;
        // generators still compatible with the chosen prefix
        let next: Vec<Monomial> = active
            .iter()
            .filter(|g| g.exp(var) <= e)
            .cloned()
            .collect();
        if next
            .iter()
            .any(|g| g.exps()[var + 1..].iter().all(|&x| x == 0))
        {
            // some generator already divides every extension of the prefix
            continue;
        }
        enumerate(&next, bounds, var + 1, current, out);
    }
    current[var] = 0;
}

//! Buchberger's algorithm with the Gebauer-Moller pair criteria, plus normal
//! forms against a fixed basis.
//!
//! Polynomials are re-sorted into the active term order on entry; the
//! returned basis is the reduced Groebner basis, which is canonical for the
//! pair (ideal, order).

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;
use std::collections::BTreeSet;

/// Caps runaway computations; converted into structured errors.
#[derive(Debug, Clone, Copy)]
pub struct GbLimits {
    pub max_pairs: u64,
}

impl Default for GbLimits {
    fn default() -> Self {
        GbLimits { max_pairs: 4_000_000 }
    }
}

/// Terms sorted ascending in the active order; the leading term is last.
type Terms = Vec<(Monomial, u64)>;

#[derive(Debug, Clone)]
struct BasisElem {
    terms: Terms,
    lm: Monomial,
    mask: u64,
    deg: u64,
}

impl BasisElem {
    fn new(terms: Terms) -> Self {
        let lm = terms.last().expect("nonzero").0.clone();
        let mask = var_mask(&lm);
        let deg = lm.degree();
        BasisElem { terms, lm, mask, deg }
    }
}

fn var_mask(m: &Monomial) -> u64 {
    let mut mask = 0u64;
    for (i, &e) in m.exps().iter().enumerate() {
        if e > 0 && i < 64 {
            mask |= 1 << i;
        }
    }
    mask
}

fn to_sorted(f: &Polynomial, order: MonomialOrder) -> Terms {
    let mut terms: Terms = f.terms().to_vec();
    terms.sort_by(|(a, _), (b, _)| a.cmp_order(b, order));
    terms
}

fn to_poly(terms: &Terms, field: FieldSpec, nvars: usize) -> Polynomial {
    Polynomial::from_terms(field, nvars, terms.iter().map(|(m, c)| (m.clone(), *c as i64)))
}

/// `h - c * m * g`, merging two sorted term lists.
fn sub_mul(
    h: &Terms,
    g: &Terms,
    m: &Monomial,
    c: u64,
    field: &FieldSpec,
    order: MonomialOrder,
) -> Result<Terms> {
    let mut shifted: Terms = Vec::with_capacity(g.len());
    for (gm, gc) in g {
        shifted.push((gm.checked_mul(m)?, field.mul(*gc, c)));
    }
    let mut out: Terms = Vec::with_capacity(h.len() + shifted.len());
    let (mut i, mut j) = (0usize, 0usize);
    while i < h.len() && j < shifted.len() {
        match h[i].0.cmp_order(&shifted[j].0, order) {
            std::cmp::Ordering::Less => {
                out.push(h[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push((shifted[j].0.clone(), field.neg(shifted[j].1)));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let cc = field.sub(h[i].1, shifted[j].1);
                if cc != 0 {
                    out.push((h[i].0.clone(), cc));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&h[i..]);
    out.extend(shifted[j..].iter().map(|(m, c)| (m.clone(), field.neg(*c))));
    Ok(out)
}

/// Full normal form of `work` against `basis` (which must be monic).
fn normal_form_terms(
    work: Terms,
    basis: &[BasisElem],
    field: &FieldSpec,
    order: MonomialOrder,
) -> Result<Terms> {
    normal_form_skip(work, basis, None, field, order)
}

fn normal_form_skip(
    mut work: Terms,
    basis: &[BasisElem],
    skip: Option<usize>,
    field: &FieldSpec,
    order: MonomialOrder,
) -> Result<Terms> {
    let mut rem: Terms = Vec::new();
    'outer: while let Some((lm, lc)) = work.last().cloned() {
        let mask = var_mask(&lm);
        let deg = lm.degree();
        for (bi, b) in basis.iter().enumerate() {
            if Some(bi) == skip {
                continue;
            }
            if b.deg <= deg && b.mask & !mask == 0 && b.lm.divides(&lm) {
                let qm = b.lm.quotient(&lm);
                work = sub_mul(&work, &b.terms, &qm, lc, field, order)?;
                continue 'outer;
            }
        }
        work.pop();
        rem.push((lm, lc));
    }
    rem.reverse();
    Ok(rem)
}

/// Top-reduction only; bails out early once an irreducible lead appears.
fn reduces_to_zero_terms(
    mut work: Terms,
    basis: &[BasisElem],
    field: &FieldSpec,
    order: MonomialOrder,
) -> Result<bool> {
    'outer: while let Some((lm, lc)) = work.last().cloned() {
        let mask = var_mask(&lm);
        let deg = lm.degree();
        for b in basis {
            if b.deg <= deg && b.mask & !mask == 0 && b.lm.divides(&lm) {
                let qm = b.lm.quotient(&lm);
                work = sub_mul(&work, &b.terms, &qm, lc, field, order)?;
                continue 'outer;
            }
        }
        return Ok(false);
    }
    Ok(true)
}

fn make_monic(terms: &mut Terms, field: &FieldSpec) -> Result<()> {
    let lc = terms.last().expect("nonzero").1;
    if lc != 1 {
        let inv = field.inv(lc)?;
        for (_, c) in terms.iter_mut() {
            *c = field.mul(*c, inv);
        }
    }
    Ok(())
}

/// Pair key: (lcm degree, lcm exponents, i, j) gives the normal selection
/// strategy with a deterministic tie-break.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct PairKey {
    deg: u64,
    lcm: Vec<u32>,
    i: u32,
    j: u32,
}

impl PairKey {
    fn new(i: usize, j: usize, lcm: &Monomial) -> Self {
        PairKey {
            deg: lcm.degree(),
            lcm: lcm.exps().to_vec(),
            i: i as u32,
            j: j as u32,
        }
    }

    fn lcm_monomial(&self) -> Monomial {
        Monomial::new(self.lcm.iter().copied())
    }
}

/// A reduced Groebner basis together with the data needed for fast
/// normal-form computations.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    field: FieldSpec,
    nvars: usize,
    polys: Vec<Polynomial>,
    elems: Vec<BasisElem>,
}

impl GroebnerBasis {
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Canonical generators, monic and sorted by ascending leading monomial.
    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn contains_one(&self) -> bool {
        self.polys.len() == 1 && self.polys[0].is_constant()
    }

    /// Leading monomials; for a reduced basis these minimally generate the
    /// initial ideal.
    pub fn initial_monomials(&self) -> Vec<Monomial> {
        self.elems.iter().map(|b| b.lm.clone()).collect()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if f.p() != self.field.p() || f.nvars() != self.nvars {
            return Err(Error::RingMismatch);
        }
        let work = to_sorted(f, self.order);
        let rem = normal_form_terms(work, &self.elems, &self.field, self.order)?;
        Ok(to_poly(&rem, self.field, self.nvars))
    }

    pub fn reduces_to_zero(&self, f: &Polynomial) -> Result<bool> {
        if f.p() != self.field.p() || f.nvars() != self.nvars {
            return Err(Error::RingMismatch);
        }
        let work = to_sorted(f, self.order);
        reduces_to_zero_terms(work, &self.elems, &self.field, self.order)
    }
}

/// Computes the reduced Groebner basis of the ideal generated by `gens`.
pub fn buchberger(
    gens: &[Polynomial],
    order: MonomialOrder,
    field: FieldSpec,
    nvars: usize,
    limits: GbLimits,
) -> Result<GroebnerBasis> {
    for g in gens {
        if g.p() != field.p() || g.nvars() != nvars {
            return Err(Error::RingMismatch);
        }
    }
    let mut basis: Vec<BasisElem> = Vec::new();
    let mut seed: Vec<Terms> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| to_sorted(g, order))
        .collect();
    // process shorter generators first so the interreduction below bites
    seed.sort_by_key(|t| (t.last().unwrap().0.degree(), t.len()));
    for mut t in seed {
        t = normal_form_terms(t, &basis, &field, order)?;
        if t.is_empty() {
            continue;
        }
        make_monic(&mut t, &field)?;
        basis.push(BasisElem::new(t));
    }

    let mut pairs: BTreeSet<PairKey> = BTreeSet::new();
    for t in 1..basis.len() {
        gm_update(&basis, t, &mut pairs);
    }

    let mut processed: u64 = 0;
    while let Some(key) = pairs.iter().next().cloned() {
        pairs.remove(&key);
        processed += 1;
        if processed > limits.max_pairs {
            return Err(Error::SearchBudgetExceeded {
                what: "groebner S-pairs",
                limit: limits.max_pairs,
            });
        }
        let (i, j) = (key.i as usize, key.j as usize);
        let lcm = key.lcm_monomial();
        let ui = basis[i].lm.quotient(&lcm);
        let uj = basis[j].lm.quotient(&lcm);
        let mut shifted: Terms = Vec::with_capacity(basis[i].terms.len());
        for (m, c) in &basis[i].terms {
            shifted.push((m.checked_mul(&ui)?, *c));
        }
        let spoly = sub_mul(&shifted, &basis[j].terms, &uj, 1, &field, order)?;
        let mut nf = normal_form_terms(spoly, &basis, &field, order)?;
        if nf.is_empty() {
            continue;
        }
        make_monic(&mut nf, &field)?;
        basis.push(BasisElem::new(nf));
        gm_update(&basis, basis.len() - 1, &mut pairs);
    }

    finalize(basis, order, field, nvars)
}

/// Gebauer-Moller update: prune the pair set after appending element `t`.
fn gm_update(basis: &[BasisElem], t: usize, pairs: &mut BTreeSet<PairKey>) {
    let lt = &basis[t].lm;

    // B-criterion on old pairs: lm_t divides lcm(i,j) strictly finer than
    // either of the new lcms.
    let stale: Vec<PairKey> = pairs
        .iter()
        .filter(|k| {
            let lcm_ij = k.lcm_monomial();
            if !lt.divides(&lcm_ij) {
                return false;
            }
            let li = &basis[k.i as usize].lm;
            let lj = &basis[k.j as usize].lm;
            li.lcm(lt) != lcm_ij && lj.lcm(lt) != lcm_ij
        })
        .cloned()
        .collect();
    for k in stale {
        pairs.remove(&k);
    }

    // Candidate pairs (i, t), pruned by the M and F criteria.
    let mut cands: Vec<(usize, Monomial)> = (0..t)
        .map(|i| (i, basis[i].lm.lcm(lt)))
        .collect();
    cands.sort_by_key(|(i, l)| (l.degree(), l.exps().to_vec(), *i));
    let mut kept: Vec<(usize, Monomial)> = Vec::new();
    'cand: for (i, l) in cands {
        for (_, kl) in &kept {
            if kl.divides(&l) {
                // equal lcms are handled below; proper divisors kill here
                if *kl != l {
                    continue 'cand;
                }
            }
        }
        kept.push((i, l));
    }
    // group equal lcms; a coprime member kills its whole class
    let mut idx = 0;
    while idx < kept.len() {
        let mut end = idx + 1;
        while end < kept.len() && kept[end].1 == kept[idx].1 {
            end += 1;
        }
        let class = &kept[idx..end];
        let coprime = class
            .iter()
            .any(|(i, _)| basis[*i].lm.is_coprime(lt));
        if !coprime {
            let (i, l) = &class[0];
            pairs.insert(PairKey::new(*i, t, l));
        }
        idx = end;
    }
}

fn finalize(
    basis: Vec<BasisElem>,
    order: MonomialOrder,
    field: FieldSpec,
    nvars: usize,
) -> Result<GroebnerBasis> {
    // minimal generators of the initial ideal
    let mut order_idx: Vec<usize> = (0..basis.len()).collect();
    order_idx.sort_by(|&a, &b| {
        basis[a]
            .lm
            .cmp_order(&basis[b].lm, order)
            .then(a.cmp(&b))
    });
    let mut keep: Vec<usize> = Vec::new();
    for &i in &order_idx {
        if !keep.iter().any(|&k| basis[k].lm.divides(&basis[i].lm)) {
            keep.push(i);
        }
    }
    // full tail reduction against the other kept elements
    let kept: Vec<BasisElem> = keep.iter().map(|&i| basis[i].clone()).collect();
    let mut final_elems: Vec<BasisElem> = Vec::with_capacity(kept.len());
    for pos in 0..kept.len() {
        let mut t =
            normal_form_skip(kept[pos].terms.clone(), &kept, Some(pos), &field, order)?;
        debug_assert!(!t.is_empty());
        make_monic(&mut t, &field)?;
        final_elems.push(BasisElem::new(t));
    }
    final_elems.sort_by(|a, b| a.lm.cmp_order(&b.lm, order));
    let polys = final_elems
        .iter()
        .map(|b| to_poly(&b.terms, field, nvars))
        .collect();
    Ok(GroebnerBasis {
        order,
        field,
        nvars,
        polys,
        elems: final_elems,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(p: u64) -> FieldSpec {
        FieldSpec::new(p).unwrap()
    }

    fn var(p: u64, n: usize, i: usize) -> Polynomial {
        Polynomial::variable(fp(p), n, i)
    }

    #[test]
    fn single_monomial() {
        let x = var(3, 2, 0);
        let gb = buchberger(&[x.clone()], MonomialOrder::GrevLex, fp(3), 2, GbLimits::default())
            .unwrap();
        assert_eq!(gb.polys(), &[x]);
    }

    #[test]
    fn binomial_plus_variable() {
        // ({xy - zw, x}) over F_3 reduces to {x, zw}
        let f = Polynomial::from_terms(
            fp(3),
            4,
            vec![
                (Monomial::new([1, 1, 0, 0]), 1),
                (Monomial::new([0, 0, 1, 1]), -1),
            ],
        );
        let x = var(3, 4, 0);
        let gb = buchberger(
            &[f, x.clone()],
            MonomialOrder::GrevLex,
            fp(3),
            4,
            GbLimits::default(),
        )
        .unwrap();
        let zw = Polynomial::from_term(fp(3), 4, Monomial::new([0, 0, 1, 1]), 1);
        assert!(gb.polys().contains(&x));
        assert!(gb.polys().contains(&zw));
        assert_eq!(gb.polys().len(), 2);
    }

    #[test]
    fn linear_span() {
        // ({x+y, x-y}) over F_5 has reduced basis {x, y}
        let x = var(5, 2, 0);
        let y = var(5, 2, 1);
        let gb = buchberger(
            &[x.add(&y).unwrap(), x.sub(&y).unwrap()],
            MonomialOrder::GrevLex,
            fp(5),
            2,
            GbLimits::default(),
        )
        .unwrap();
        assert_eq!(gb.polys(), &[y.clone(), x.clone()]);
    }

    #[test]
    fn unit_ideal_detected() {
        let one = Polynomial::one(fp(5), 2);
        let x = var(5, 2, 0);
        let gb = buchberger(
            &[x, one],
            MonomialOrder::GrevLex,
            fp(5),
            2,
            GbLimits::default(),
        )
        .unwrap();
        assert!(gb.contains_one());
    }

    #[test]
    fn zero_ideal() {
        let gb =
            buchberger(&[], MonomialOrder::GrevLex, fp(5), 2, GbLimits::default()).unwrap();
        assert!(gb.is_zero_ideal());
        let x = var(5, 2, 0);
        assert_eq!(gb.normal_form(&x).unwrap(), x);
    }

    #[test]
    fn normal_form_is_remainder() {
        // classic CLO example sanity: NF leaves nothing divisible by lms
        let fld = fp(7);
        let x = var(7, 2, 0);
        let y = var(7, 2, 1);
        let g1 = x.mul(&x).unwrap().add(&y).unwrap(); // x^2 + y
        let g2 = x.mul(&y).unwrap().sub(&x).unwrap(); // xy - x
        let gb = buchberger(
            &[g1, g2],
            MonomialOrder::GrevLex,
            fld,
            2,
            GbLimits::default(),
        )
        .unwrap();
        let f = x.pow(3).unwrap().add(&y.pow(2).unwrap()).unwrap();
        let nf = gb.normal_form(&f).unwrap();
        let diff = f.sub(&nf).unwrap();
        assert!(gb.reduces_to_zero(&diff).unwrap());
        for (m, _) in nf.terms() {
            for lm in gb.initial_monomials() {
                assert!(!lm.divides(m));
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        let fld = fp(7);
        let x = var(7, 3, 0);
        let y = var(7, 3, 1);
        let z = var(7, 3, 2);
        // a small but non-trivial system; one allowed pair is not enough
        let g1 = x.pow(2).unwrap().add(&y.mul(&z).unwrap()).unwrap();
        let g2 = y.pow(2).unwrap().add(&x.mul(&z).unwrap()).unwrap();
        let g3 = z.pow(2).unwrap().add(&x.mul(&y).unwrap()).unwrap();
        let err = buchberger(
            &[g1, g2, g3],
            MonomialOrder::GrevLex,
            fld,
            3,
            GbLimits { max_pairs: 1 },
        )
        .unwrap_err();
        assert!(matches!(err, Error::SearchBudgetExceeded { .. }));
    }
}

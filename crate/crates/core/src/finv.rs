//! Frobenius invariants: nu sequences, certified F-threshold intervals,
//! Fedder's F-purity test, splitting ideals, b invariants, F-pure-threshold
//! estimates, and the fpt = c^m consistency checker.
//!
//! All certified bounds are exact rationals. Upper bounds for c^J(a) come
//! from the subadditivity nu(p^{e+s})/p^{e+s} <= nu(p^e)/p^e + mu(a)/p^e;
//! lower bounds use monotonicity of the nu ratios, which holds once the ring
//! passes Fedder's test, and are flagged heuristic otherwise.

use crate::calculus::{bracket_power, minimal_generators};
use crate::error::{Error, Result};
use crate::groebner::GroebnerBasis;
use crate::hilbert::{numerator, pure_power_bounds, summarize};
use crate::ideal::{colon_ideal, ideal_contains, ideal_eq, ideal_membership, radical_membership, Ideal};
use crate::monomial::MonomialOrder;
use crate::poly::Polynomial;
use crate::quotient::QuotientContext;
use crate::pow_big;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;
use std::collections::HashSet;
use std::sync::Arc;

/// One exact value nu_a^J(p^e) together with its normalized ratio.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NuRecord {
    pub e: u32,
    pub nu: u64,
    pub ratio: BigRational,
}

impl NuRecord {
    fn new(e: u32, nu: u64, p: u64) -> Self {
        NuRecord {
            e,
            nu,
            ratio: BigRational::new(BigInt::from(nu), pow_big(p, e)),
        }
    }
}

/// Certified interval for an F-threshold or F-pure threshold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThresholdEstimate {
    pub records: Vec<NuRecord>,
    pub lower: BigRational,
    pub lower_certified: bool,
    pub upper: BigRational,
    pub upper_certified: bool,
    pub width: BigRational,
}

/// Outcome of an interval-based relation check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Verified,
    Consistent,
    Violated,
    Inconclusive,
}

fn validate_proper_homogeneous(a: &Ideal, what: &str) -> Result<()> {
    if a.is_zero() {
        return Err(Error::EmptyIdeal);
    }
    if !a.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    if a.has_unit_generator() {
        return Err(Error::UnitIdeal);
    }
    let _ = what;
    Ok(())
}

/// True when the proper homogeneous ideal `a` is the irrelevant maximal
/// ideal (every variable reduces to zero against it).
fn is_maximal_ideal(a: &Ideal, ctx: &QuotientContext) -> Result<bool> {
    let gb = a.groebner(MonomialOrder::GrevLex, ctx.gb_limits())?;
    for i in 0..ctx.nvars() {
        let x = Polynomial::variable(ctx.field(), ctx.nvars(), i);
        if !gb.reduces_to_zero(&x)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Socle degree of the artinian quotient cut out by a Groebner basis, i.e.
/// the top degree of a standard monomial of its initial ideal.
fn staircase_socle(gb: &GroebnerBasis, nvars: usize) -> Result<u64> {
    let staircase = gb.initial_monomials();
    pure_power_bounds(&staircase, nvars)?;
    let summary = summarize(&numerator(&staircase, nvars), nvars);
    summary
        .socle_degree()
        .ok_or(Error::UnitIdeal)
}

/// Checks a subset of sqrt(target) generator by generator; the cheap
/// zero-dimensionality witness is tried first.
fn check_radical_precondition(
    a: &Ideal,
    target: &Ideal,
    target_gb: &GroebnerBasis,
    ctx: &QuotientContext,
) -> Result<()> {
    let staircase = target_gb.initial_monomials();
    if pure_power_bounds(&staircase, ctx.nvars()).is_ok() {
        // target is m-primary and a is proper homogeneous, so a lies in
        // sqrt(target) = m
        return Ok(());
    }
    for (i, g) in a.gens().iter().enumerate() {
        if !radical_membership(g, target, ctx.gb_limits())? {
            return Err(Error::NotInRadical(i));
        }
    }
    Ok(())
}

fn nu_budget(a: &Ideal, e: u32, ctx: &QuotientContext) -> Result<u64> {
    if let Some(cap) = ctx.limits().max_power {
        return Ok(cap);
    }
    let (mu, _) = minimal_generators(a, ctx.gb_limits())?;
    let mut q: u64 = 1;
    for _ in 0..e {
        q = q.checked_mul(ctx.p()).ok_or(Error::ExponentOverflow)?;
    }
    q.checked_mul(10 * mu.max(1) as u64)
        .ok_or(Error::ExponentOverflow)
}

/// max { t : a^t not contained in target }, by a monotone ladder of normal
/// forms: residues of the t-fold generator products modulo target. The
/// ladder is exact because NF(u g) = NF(NF(u) g) and containment of a^t is
/// containment of all t-fold products of generators.
fn nu_ladder(a: &Ideal, target_gb: &GroebnerBasis, budget: u64) -> Result<u64> {
    let field = a.field();
    let nvars = a.nvars();
    let mut residues: Vec<Polynomial> = vec![Polynomial::one(field, nvars)];
    let mut t: u64 = 0;
    loop {
        let mut seen: HashSet<Polynomial> = HashSet::new();
        let mut next: Vec<Polynomial> = Vec::new();
        for r in &residues {
            for g in a.gens() {
                let nf = target_gb.normal_form(&r.mul(g)?)?;
                if !nf.is_zero() && seen.insert(nf.clone()) {
                    next.push(nf);
                }
            }
        }
        if next.is_empty() {
            return Ok(t);
        }
        t += 1;
        if t > budget {
            return Err(Error::SearchBudgetExceeded {
                what: "nu search ladder",
                limit: budget,
            });
        }
        if next.len() > 500_000 {
            return Err(Error::SearchBudgetExceeded {
                what: "nu ladder width",
                limit: 500_000,
            });
        }
        residues = next;
    }
}

fn target_basis(j: &Ideal, e: u32, ctx: &QuotientContext) -> Result<(Ideal, Arc<GroebnerBasis>)> {
    let target = ctx.in_quotient(&bracket_power(j, e)?)?;
    let gb = target.groebner(MonomialOrder::GrevLex, ctx.gb_limits())?;
    if gb.contains_one() {
        return Err(Error::UnitIdeal);
    }
    Ok((target, gb))
}

/// nu_a^J(p^e) = max { t : a^t not contained in J^{[p^e]} } in R.
///
/// For a = m the value is read off the staircase of the target: m^t lies in
/// an m-primary homogeneous ideal exactly when t exceeds its socle degree.
/// Otherwise a monotone ladder of normal forms finds the exact cutoff.
pub fn nu(a: &Ideal, j: &Ideal, e: u32, ctx: &QuotientContext) -> Result<NuRecord> {
    validate_proper_homogeneous(a, "a")?;
    validate_proper_homogeneous(j, "J")?;
    let (_target, gb) = target_basis(j, e, ctx)?;
    let a_is_m = is_maximal_ideal(a, ctx)?;
    if a_is_m {
        // requires the target to be m-primary, which here is the radical
        // precondition itself
        match staircase_socle(&gb, ctx.nvars()) {
            Ok(socle) => return Ok(NuRecord::new(e, socle, ctx.p())),
            Err(Error::NotZeroDimensional(i)) => return Err(Error::NotInRadical(i)),
            Err(other) => return Err(other),
        }
    }
    let target = ctx.in_quotient(&bracket_power(j, e)?)?;
    check_radical_precondition(a, &target, &gb, ctx)?;
    let budget = nu_budget(a, e, ctx)?;
    let value = nu_ladder(a, &gb, budget)?;
    Ok(NuRecord::new(e, value, ctx.p()))
}

/// Re-verifies the defining property of a nu value by direct containment
/// tests (used by the property suites).
pub fn verify_nu_record(
    a: &Ideal,
    j: &Ideal,
    rec: &NuRecord,
    ctx: &QuotientContext,
) -> Result<bool> {
    let (_, gb) = target_basis(j, rec.e, ctx)?;
    let below = power_products_outside(a, rec.nu, &gb)?;
    let above = !power_products_outside(a, rec.nu + 1, &gb)?;
    Ok(below && above)
}

/// Some t-fold product of generators of `a` stays nonzero modulo the basis.
fn power_products_outside(a: &Ideal, t: u64, gb: &GroebnerBasis) -> Result<bool> {
    let field = a.field();
    let nvars = a.nvars();
    let mut products: Vec<Polynomial> = vec![Polynomial::one(field, nvars)];
    for _ in 0..t {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for f in &products {
            for g in a.gens() {
                let prod = f.mul(g)?;
                if !prod.is_zero() && seen.insert(prod.clone()) {
                    next.push(prod);
                }
            }
        }
        products = next;
    }
    for f in &products {
        if !gb.reduces_to_zero(f)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Certified interval for the F-threshold c^J(a), from nu records at
/// e = 1..e_max.
pub fn f_threshold(
    a: &Ideal,
    j: &Ideal,
    e_max: u32,
    ctx: &QuotientContext,
) -> Result<ThresholdEstimate> {
    if e_max < 1 {
        return Err(Error::InvalidParameter("e_max must be at least 1".into()));
    }
    let records: Vec<NuRecord> = (1..=e_max)
        .map(|e| nu(a, j, e, ctx))
        .collect::<Result<_>>()?;
    let (mu, _) = minimal_generators(a, ctx.gb_limits())?;
    estimate_from_records(records, mu as u64, fedder_is_f_pure(ctx)?, ctx.p())
}

/// Assembles a certified interval from already-computed nu records (the
/// per-e records may have been produced concurrently).
pub fn estimate_from_nu_records(
    records: Vec<NuRecord>,
    mu: u64,
    lower_certified: bool,
    p: u64,
) -> Result<ThresholdEstimate> {
    estimate_from_records(records, mu, lower_certified, p)
}

fn estimate_from_records(
    records: Vec<NuRecord>,
    mu: u64,
    lower_certified: bool,
    p: u64,
) -> Result<ThresholdEstimate> {
    let mut lower = BigRational::zero();
    let mut upper: Option<BigRational> = None;
    for rec in &records {
        if rec.ratio > lower {
            lower = rec.ratio.clone();
        }
        let bound = &rec.ratio + BigRational::new(BigInt::from(mu), pow_big(p, rec.e));
        if upper.as_ref().map_or(true, |u| bound < *u) {
            upper = Some(bound);
        }
    }
    let upper = upper.ok_or_else(|| Error::InvalidParameter("no nu records".into()))?;
    // a heuristic lower bound may overshoot a certified upper bound in a
    // non-F-pure ring; keep the interval well formed
    if !lower_certified && lower > upper {
        lower = upper.clone();
    }
    let width = &upper - &lower;
    Ok(ThresholdEstimate {
        records,
        lower,
        lower_certified,
        upper,
        upper_certified: true,
        width,
    })
}

/// `f^{p^e - 1}` via the factorization p^e - 1 = (p-1)(1 + p + ... +
/// p^{e-1}), keeping intermediate products small.
pub(crate) fn pow_frobenius_minus_one(f: &Polynomial, e: u32) -> Result<Polynomial> {
    let p = f.p();
    let base = f.pow(u32::try_from(p - 1).map_err(|_| Error::ExponentOverflow)?)?;
    let mut acc = Polynomial::one(f.field(), f.nvars());
    for k in 0..e {
        acc = acc.mul(&base.frobenius_power(k)?)?;
    }
    Ok(acc)
}

/// Fedder's criterion: R = S/I is F-pure iff (I^{[p]} : I) is not contained
/// in m^{[p]}. The result is cached on the context.
pub fn fedder_is_f_pure(ctx: &QuotientContext) -> Result<bool> {
    if let Some(&v) = ctx.f_pure_cache().get() {
        return Ok(v);
    }
    let defining = ctx.defining_ideal();
    let value = if defining.is_zero() {
        true
    } else {
        let colon = fedder_colon(ctx, 1)?;
        let m_bracket = bracket_power(&ctx.maximal_ideal(), 1)?;
        !ideal_contains(&m_bracket, &colon, ctx.gb_limits())?
    };
    let _ = ctx.f_pure_cache().set(value);
    Ok(value)
}

/// `(I^{[p^e]} : I)`; for principal I = (f) this is (f^{p^e - 1}) because S
/// is a domain.
fn fedder_colon(ctx: &QuotientContext, e: u32) -> Result<Ideal> {
    let defining = ctx.defining_ideal();
    if let [f] = defining.gens() {
        let gen = pow_frobenius_minus_one(f, e)?;
        return Ideal::new(ctx.field(), ctx.nvars(), vec![gen]);
    }
    colon_ideal(
        &bracket_power(defining, e)?,
        defining,
        ctx.gb_limits(),
    )
}

/// The splitting ideal I_e = (m^{[p^e]} :_S (I^{[p^e]} :_S I)) in the
/// ambient ring; elements whose Frobenius image no map can split away from
/// m. For I = 0 this is m^{[p^e]}. Requires a positive Fedder test.
pub fn splitting_ideal(ctx: &QuotientContext, e: u32) -> Result<Ideal> {
    if e < 1 {
        return Err(Error::InvalidParameter("splitting ideal needs e >= 1".into()));
    }
    if !fedder_is_f_pure(ctx)? {
        return Err(Error::NotFPure);
    }
    {
        let cache = ctx.splitting_cache().lock().expect("splitting cache");
        if let Some(i) = cache.get(&e) {
            return Ok(i.clone());
        }
    }
    let m_bracket = bracket_power(&ctx.maximal_ideal(), e)?;
    let ideal = if ctx.defining_ideal().is_zero() {
        m_bracket
    } else {
        let colon = fedder_colon(ctx, e)?;
        colon_ideal(&m_bracket, &colon, ctx.gb_limits())?
    };
    let mut cache = ctx.splitting_cache().lock().expect("splitting cache");
    Ok(cache.entry(e).or_insert(ideal).clone())
}

/// b_a(p^e) = max { t : a^t not contained in I_e }.
///
/// For a = m over a principal defining ideal the value is computed without
/// forming I_e, through the graded exact sequence
/// 0 -> (S/(m^{[q]} : f^{q-1}))(-deg f^{q-1}) -> S/m^{[q]} -> S/(m^{[q]} + f^{q-1}) -> 0,
/// whose outer Hilbert functions are staircase data.
pub fn b_invariant(a: &Ideal, e: u32, ctx: &QuotientContext) -> Result<u64> {
    validate_proper_homogeneous(a, "a")?;
    if !fedder_is_f_pure(ctx)? {
        return Err(Error::NotFPure);
    }
    let a_is_m = is_maximal_ideal(a, ctx)?;
    if a_is_m {
        if ctx.is_polynomial_ring() {
            // I_e = m^{[p^e]}: top standard monomial has degree n(p^e - 1)
            let mut q: u64 = 1;
            for _ in 0..e {
                q = q.checked_mul(ctx.p()).ok_or(Error::ExponentOverflow)?;
            }
            return Ok(ctx.nvars() as u64 * (q - 1));
        }
        if let [f] = ctx.defining_ideal().gens() {
            return b_via_hilbert_difference(f, e, ctx);
        }
        let i_e = splitting_ideal(ctx, e)?;
        let gb = i_e.groebner(MonomialOrder::GrevLex, ctx.gb_limits())?;
        return staircase_socle(&gb, ctx.nvars());
    }
    let i_e = splitting_ideal(ctx, e)?;
    let gb = i_e.groebner(MonomialOrder::GrevLex, ctx.gb_limits())?;
    let budget = nu_budget(a, e, ctx)?;
    nu_ladder(a, &gb, budget)
}

fn b_via_hilbert_difference(f: &Polynomial, e: u32, ctx: &QuotientContext) -> Result<u64> {
    let n = ctx.nvars();
    let p = ctx.p();
    let mut q: u64 = 1;
    for _ in 0..e {
        q = q.checked_mul(p).ok_or(Error::ExponentOverflow)?;
    }
    let shift = (q - 1)
        .checked_mul(f.total_degree())
        .ok_or(Error::ExponentOverflow)?;
    // Hilbert function of S/m^{[q]}
    let pure: Vec<crate::monomial::Monomial> = (0..n)
        .map(|i| {
            let mut exps = vec![0u32; n];
            exps[i] = u32::try_from(q).map_err(|_| Error::ExponentOverflow)?;
            Ok(crate::monomial::Monomial::new(exps))
        })
        .collect::<Result<_>>()?;
    let hf_bracket = summarize(&numerator(&pure, n), n)
        .hilbert_function
        .expect("pure powers are artinian");
    // Hilbert function of S/(m^{[q]} + f^{q-1})
    let fq = pow_frobenius_minus_one(f, e)?;
    let mut gens: Vec<Polynomial> = (0..n)
        .map(|i| Polynomial::variable(ctx.field(), n, i).pow(q as u32))
        .collect::<Result<_>>()?;
    gens.push(fq);
    let cok = Ideal::new(ctx.field(), n, gens)?;
    let gb = cok.groebner(MonomialOrder::GrevLex, ctx.gb_limits())?;
    let hf_cok = summarize(&numerator(&gb.initial_monomials(), n), n)
        .hilbert_function
        .ok_or(Error::NotZeroDimensional(0))?;
    // b = max { u : HF(S/m^[q]})(u) != HF(cok)(u) } - shift
    let top = hf_bracket.len().max(hf_cok.len());
    for u in (0..top).rev() {
        let lhs = hf_bracket.get(u).copied().unwrap_or(0);
        let rhs = hf_cok.get(u).copied().unwrap_or(0);
        if lhs != rhs {
            return Ok(u as u64 - shift);
        }
    }
    // no difference would mean I_e is the unit ideal, impossible when F-pure
    Err(Error::NotFPure)
}

/// Certified interval for fpt(a) from b invariants (lower, monotone under
/// F-purity) and F-thresholds of the splitting ideals (upper).
pub fn fpt_estimate(
    a: &Ideal,
    e_max: u32,
    s_max: u32,
    ctx: &QuotientContext,
) -> Result<ThresholdEstimate> {
    if e_max < 1 || s_max < 1 {
        return Err(Error::InvalidParameter(
            "fpt estimate needs e_max >= 1 and s_max >= 1".into(),
        ));
    }
    if !fedder_is_f_pure(ctx)? {
        return Err(Error::NotFPure);
    }
    let p = ctx.p();
    let records: Vec<NuRecord> = (1..=e_max)
        .map(|e| Ok(NuRecord::new(e, b_invariant(a, e, ctx)?, p)))
        .collect::<Result<_>>()?;
    let (mu, _) = minimal_generators(a, ctx.gb_limits())?;
    let mut lower = BigRational::zero();
    for rec in &records {
        if rec.ratio > lower {
            lower = rec.ratio.clone();
        }
    }
    let mut upper: Option<BigRational> = None;
    for e in 1..=e_max {
        let i_e = splitting_ideal(ctx, e)?;
        for s in 1..=s_max {
            let rec = nu(a, &i_e, s, ctx)?;
            let bound = (&rec.ratio + BigRational::new(BigInt::from(mu), pow_big(p, s)))
                / BigRational::from(pow_big(p, e));
            if upper.as_ref().map_or(true, |u| bound < *u) {
                upper = Some(bound);
            }
        }
    }
    let upper = upper.expect("e_max >= 1");
    let width = &upper - &lower;
    Ok(ThresholdEstimate {
        records,
        lower,
        lower_certified: true,
        upper,
        upper_certified: true,
        width,
    })
}

/// Evidence for one level of the fpt = c^m check.
#[derive(Debug, Clone)]
pub struct FptCmLevel {
    pub e: u32,
    /// I_e literally equals m^{[p^e]} (in R), which pins the level exactly.
    pub exact_equal: bool,
    pub cie_interval: Option<(BigRational, BigRational)>,
    pub scaled_cm_interval: Option<(BigRational, BigRational)>,
    pub verdict: Verdict,
}

#[derive(Debug, Clone)]
pub struct FptCmCheck {
    pub verdict: Verdict,
    pub levels: Vec<FptCmLevel>,
}

/// Tests the characterization fpt(a) = c^m(a) iff c^{I_e}(a) =
/// c^{m^{[p^e]}}(a) = p^e c^m(a) for all e, on certified intervals at
/// e = 1..e_max.
pub fn check_fpt_equals_cm(a: &Ideal, e_max: u32, ctx: &QuotientContext) -> Result<FptCmCheck> {
    if !fedder_is_f_pure(ctx)? {
        return Err(Error::NotFPure);
    }
    let m = ctx.maximal_ideal();
    let cm = f_threshold(a, &m, e_max, ctx)?;
    let mut levels = Vec::new();
    for e in 1..=e_max {
        let i_e = splitting_ideal(ctx, e)?;
        let m_bracket_lifted = ctx.in_quotient(&bracket_power(&m, e)?)?;
        if ideal_eq(&i_e, &m_bracket_lifted, ctx.gb_limits())? {
            levels.push(FptCmLevel {
                e,
                exact_equal: true,
                cie_interval: None,
                scaled_cm_interval: None,
                verdict: Verdict::Consistent,
            });
            continue;
        }
        let cie = f_threshold(a, &i_e, 1, ctx)?;
        let scale = BigRational::from(pow_big(ctx.p(), e));
        let scaled = (&cm.lower * &scale, &cm.upper * &scale);
        let verdict = if cie.upper < scaled.0 || scaled.1 < cie.lower {
            Verdict::Violated
        } else if cie.lower == cie.upper && scaled.0 == scaled.1 && cie.lower == scaled.0 {
            Verdict::Consistent
        } else {
            Verdict::Inconclusive
        };
        levels.push(FptCmLevel {
            e,
            exact_equal: false,
            cie_interval: Some((cie.lower.clone(), cie.upper.clone())),
            scaled_cm_interval: Some(scaled),
            verdict,
        });
    }
    let verdict = if levels.iter().any(|l| l.verdict == Verdict::Violated) {
        Verdict::Violated
    } else if levels.iter().all(|l| l.verdict == Verdict::Consistent) {
        Verdict::Consistent
    } else {
        Verdict::Inconclusive
    };
    Ok(FptCmCheck { verdict, levels })
}

/// Smallest e <= e_max with c outside I_e; a finite witness search for
/// strong F-regularity (a `None` disproves nothing).
pub fn strong_f_regularity_witness(
    c: &Polynomial,
    e_max: u32,
    ctx: &QuotientContext,
) -> Result<Option<u32>> {
    if !c.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let def_gb = ctx
        .defining_ideal()
        .groebner(MonomialOrder::GrevLex, ctx.gb_limits())?;
    if def_gb.reduces_to_zero(c)? {
        return Err(Error::ZeroInQuotient);
    }
    if !fedder_is_f_pure(ctx)? {
        return Err(Error::NotFPure);
    }
    for e in 1..=e_max {
        let i_e = splitting_ideal(ctx, e)?;
        if !ideal_membership(c, &i_e, ctx.gb_limits())? {
            return Ok(Some(e));
        }
    }
    Ok(None)
}

/// Reported upper bound D (c^J(J) + 1) with D - 1 the top degree of a
/// minimal generator of J; only the certified upper bound of the threshold
/// interval enters.
pub fn thm_tminus1_bound(j: &Ideal, e_max: u32, ctx: &QuotientContext) -> Result<BigRational> {
    let (_, d_minus_1) = minimal_generators(j, ctx.gb_limits())?;
    let d = BigRational::from(BigInt::from(d_minus_1 + 1));
    let est = f_threshold(j, j, e_max, ctx)?;
    Ok(&d * (&est.upper + BigRational::one()))
}

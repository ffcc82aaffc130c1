//! Colength-based asymptotics: Hilbert-Kunz sequences, F-signature
//! estimates (direct and through the Gorenstein socle shortcut),
//! zero-dimensional a-invariants, top a-invariants of complete
//! intersections, and the relation verifier.

use crate::calculus::bracket_power;
use crate::error::{Error, Result};
use crate::finv::{
    f_threshold, fedder_is_f_pure, fpt_estimate, nu, splitting_ideal, NuRecord,
    ThresholdEstimate, Verdict,
};
use crate::hilbert::{numerator, pure_power_bounds, standard_monomials, summarize};
use crate::ideal::{colon_ideal, Ideal};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;
use crate::quotient::QuotientContext;
use crate::{format_rational, pow_big};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

/// lambda(R/J R) as a standard-monomial count; zero for the unit ideal.
pub fn colength(j: &Ideal, ctx: &QuotientContext) -> Result<u64> {
    let target = ctx.in_quotient(j)?;
    let gb = target.groebner(MonomialOrder::GrevLex, ctx.gb_limits())?;
    if gb.contains_one() {
        return Ok(0);
    }
    let staircase = gb.initial_monomials();
    pure_power_bounds(&staircase, ctx.nvars())?;
    let summary = summarize(&numerator(&staircase, ctx.nvars()), ctx.nvars());
    Ok(summary.colength().expect("artinian by the pure-power check"))
}

/// The monomials spanning R/(J R) over the field, against the grevlex
/// initial ideal of J lifted to the ambient ring.
pub fn standard_monomial_basis(j: &Ideal, ctx: &QuotientContext) -> Result<Vec<Monomial>> {
    let target = ctx.in_quotient(j)?;
    let gb = target.groebner(MonomialOrder::GrevLex, ctx.gb_limits())?;
    standard_monomials(&gb.initial_monomials(), ctx.nvars())
}

/// Socle degree a_0(R/J) of an m-primary J: the top degree with a standard
/// monomial.
pub fn a0_socle_degree(j: &Ideal, ctx: &QuotientContext) -> Result<u64> {
    let target = ctx.in_quotient(j)?;
    let gb = target.groebner(MonomialOrder::GrevLex, ctx.gb_limits())?;
    if gb.contains_one() {
        return Err(Error::UnitIdeal);
    }
    let staircase = gb.initial_monomials();
    pure_power_bounds(&staircase, ctx.nvars())?;
    let summary = summarize(&numerator(&staircase, ctx.nvars()), ctx.nvars());
    summary.socle_degree().ok_or(Error::UnitIdeal)
}

#[derive(Debug, Clone)]
pub struct HKRow {
    pub e: u32,
    pub colength: u64,
    /// lambda / p^{e d}, exact.
    pub ratio: BigRational,
}

/// Normalized colengths of Frobenius powers; finite data only, no limit is
/// claimed.
#[derive(Debug, Clone)]
pub struct HKSequence {
    pub dim: usize,
    pub rows: Vec<HKRow>,
}

pub fn hilbert_kunz_sequence(
    j: &Ideal,
    e_max: u32,
    ctx: &QuotientContext,
) -> Result<HKSequence> {
    if e_max < 1 {
        return Err(Error::InvalidParameter("e_max must be at least 1".into()));
    }
    // m-primariness check up front, so failures carry the right error
    let _ = colength(j, ctx)?;
    let (dim, _) = ctx.dim_and_multiplicity()?;
    let mut rows = Vec::with_capacity(e_max as usize);
    for e in 1..=e_max {
        let lam = colength(&bracket_power(j, e)?, ctx)?;
        rows.push(HKRow {
            e,
            colength: lam,
            ratio: BigRational::new(BigInt::from(lam), pow_big(ctx.p(), e * dim as u32)),
        });
    }
    Ok(HKSequence { dim, rows })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FSigMethod {
    Direct,
    Gorenstein,
}

#[derive(Debug, Clone)]
pub struct FSigRow {
    pub e: u32,
    /// lambda(R/I_e) for the direct method; the colength difference
    /// lambda(R/J^{[p^e]}) - lambda(R/a^{[p^e]}) for the Gorenstein shortcut.
    pub colength: u64,
    pub s: BigRational,
}

#[derive(Debug, Clone)]
pub struct FSignatureEstimate {
    pub method: FSigMethod,
    pub rows: Vec<FSigRow>,
    /// e(R)/d!, the proven asymptotic lower bound for strongly F-regular
    /// Gorenstein rings with fpt = c^m.
    pub lower_bound_target: BigRational,
}

/// lambda(R/I_e) without forming I_e when the defining ideal is principal:
/// the multiplication map by f^{q-1} embeds S/(m^{[q]} : f^{q-1}) into
/// S/m^{[q]} with cokernel S/(m^{[q]} + f^{q-1}).
fn splitting_colength(e: u32, ctx: &QuotientContext) -> Result<u64> {
    let n = ctx.nvars();
    let q = checked_pow(ctx.p(), e)?;
    if ctx.is_polynomial_ring() {
        let mut acc: u64 = 1;
        for _ in 0..n {
            acc = acc.checked_mul(q).ok_or(Error::ExponentOverflow)?;
        }
        return Ok(acc);
    }
    if let [f] = ctx.defining_ideal().gens() {
        let mut qn: u64 = 1;
        for _ in 0..n {
            qn = qn.checked_mul(q).ok_or(Error::ExponentOverflow)?;
        }
        let fq = crate::finv::pow_frobenius_minus_one(f, e)?;
        let mut gens: Vec<Polynomial> = (0..n)
            .map(|i| {
                Polynomial::variable(ctx.field(), n, i)
                    .pow(u32::try_from(q).map_err(|_| Error::ExponentOverflow)?)
            })
            .collect::<Result<_>>()?;
        gens.push(fq);
        // ambient colength: the cokernel lives over S, not over R
        let cok = Ideal::new(ctx.field(), n, gens)?;
        let lam_cok = ambient_colength(&cok, ctx)?;
        return Ok(qn - lam_cok);
    }
    let i_e = splitting_ideal(ctx, e)?;
    // I_e contains the defining ideal, so lambda over R and over S agree
    ambient_colength(&i_e, ctx)
}

/// lambda(S/J) in the ambient polynomial ring (no lift by the defining
/// ideal).
fn ambient_colength(j: &Ideal, ctx: &QuotientContext) -> Result<u64> {
    let gb = j.groebner(MonomialOrder::GrevLex, ctx.gb_limits())?;
    if gb.contains_one() {
        return Ok(0);
    }
    let staircase = gb.initial_monomials();
    pure_power_bounds(&staircase, ctx.nvars())?;
    let summary = summarize(&numerator(&staircase, ctx.nvars()), ctx.nvars());
    Ok(summary.colength().expect("artinian by the pure-power check"))
}

fn checked_pow(p: u64, e: u32) -> Result<u64> {
    let mut q: u64 = 1;
    for _ in 0..e {
        q = q.checked_mul(p).ok_or(Error::ExponentOverflow)?;
    }
    Ok(q)
}

fn factorial_big(d: usize) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=d {
        acc *= BigInt::from(k);
    }
    acc
}

/// Normalized splitting numbers s_e.
///
/// `direct` measures lambda(R/I_e)/p^{ed}. `gorenstein` takes a homogeneous
/// system of parameters J and measures
/// (lambda(R/J^{[p^e]}) - lambda(R/a^{[p^e]}))/p^{ed} with a = (J + I : m);
/// the two share a limit but need not agree at finite e, so both are
/// reported as computed.
pub fn f_signature_sequence(
    e_max: u32,
    ctx: &QuotientContext,
    method: FSigMethod,
    j_sop: Option<&Ideal>,
) -> Result<FSignatureEstimate> {
    if e_max < 1 {
        return Err(Error::InvalidParameter("e_max must be at least 1".into()));
    }
    if !fedder_is_f_pure(ctx)? {
        return Err(Error::NotFPure);
    }
    let (dim, mult) = ctx.dim_and_multiplicity()?;
    let lower_bound_target =
        BigRational::new(BigInt::from(mult), factorial_big(dim));
    let p = ctx.p();
    let mut rows = Vec::with_capacity(e_max as usize);
    match method {
        FSigMethod::Direct => {
            for e in 1..=e_max {
                let lam = splitting_colength(e, ctx)?;
                rows.push(FSigRow {
                    e,
                    colength: lam,
                    s: BigRational::new(BigInt::from(lam), pow_big(p, e * dim as u32)),
                });
            }
        }
        FSigMethod::Gorenstein => {
            let j = j_sop.ok_or_else(|| {
                Error::NotSystemOfParameters("gorenstein method needs a J".into())
            })?;
            if j.gens().len() != dim {
                return Err(Error::NotSystemOfParameters(format!(
                    "{} generators, dimension {}",
                    j.gens().len(),
                    dim
                )));
            }
            if !j.is_homogeneous() {
                return Err(Error::NotSystemOfParameters(
                    "generators are not homogeneous".into(),
                ));
            }
            // m-primariness in R
            colength(j, ctx).map_err(|e| match e {
                Error::NotZeroDimensional(_) => {
                    Error::NotSystemOfParameters("J is not m-primary in R".into())
                }
                other => other,
            })?;
            let lifted = ctx.in_quotient(j)?;
            let socle = colon_ideal(&lifted, &ctx.maximal_ideal(), ctx.gb_limits())?;
            for e in 1..=e_max {
                let lam_j = colength(&bracket_power(j, e)?, ctx)?;
                let lam_a = colength(&bracket_power(&socle, e)?, ctx)?;
                let diff = lam_j
                    .checked_sub(lam_a)
                    .expect("J lies inside (J + I : m)");
                rows.push(FSigRow {
                    e,
                    colength: diff,
                    s: BigRational::new(BigInt::from(diff), pow_big(p, e * dim as u32)),
                });
            }
        }
    }
    Ok(FSignatureEstimate {
        method,
        rows,
        lower_bound_target,
    })
}

/// a_d(R) for a complete intersection: sum of the generator degrees minus
/// the variable count. The hypothesis is checked through dim R = n - c.
pub fn a_top_complete_intersection(ctx: &QuotientContext) -> Result<i64> {
    let gens = ctx.defining_ideal().gens();
    let c = gens.len();
    let n = ctx.nvars();
    let (dim, _) = ctx.dim_and_multiplicity()?;
    if dim != n - c {
        return Err(Error::NotCompleteIntersection {
            gens: c,
            codim: n - dim,
        });
    }
    let total: i64 = gens.iter().map(|g| g.total_degree() as i64).sum();
    Ok(total - n as i64)
}

#[derive(Debug, Clone)]
pub struct RelationCheck {
    pub name: &'static str,
    pub verdict: Verdict,
    pub evidence: String,
}

/// Everything the relation verifier computed, with exact rationals.
#[derive(Debug, Clone)]
pub struct InvariantReport {
    pub dim: usize,
    pub multiplicity: u64,
    pub f_pure: bool,
    pub a_d: i64,
    pub a_d_user_asserted: bool,
    pub fpt: ThresholdEstimate,
    pub cm: ThresholdEstimate,
    pub nu_rows: Vec<NuRecord>,
    pub a0_of_j: Option<u64>,
    pub fsig: Option<FSignatureEstimate>,
    pub relations: Vec<RelationCheck>,
    pub footnotes: Vec<String>,
}

#[derive(Debug, Clone, Default)]
pub struct VerifyOptions {
    /// m-primary ideal for the nu-formula check; defaults to m.
    pub j: Option<Ideal>,
    /// Homogeneous system of parameters enabling the Gorenstein F-signature
    /// shortcut.
    pub j_sop: Option<Ideal>,
    /// Overrides the computed a_d when the defining ideal is not a complete
    /// intersection.
    pub a_d: Option<i64>,
}

fn interval_str(est: &ThresholdEstimate) -> String {
    format!(
        "[{}, {}]",
        format_rational(&est.lower),
        format_rational(&est.upper)
    )
}

/// Checks the relation chain fpt <= -a_d <= c^m on certified intervals, the
/// exact nu formula nu_m^J(p^e) = (a_0(R/J) - a_d) p^e + a_d when the
/// intervals allow the equality scenario, and the bound s_e >= e(R)/d!.
pub fn verify_paper_relations(
    ctx: &QuotientContext,
    e_max: u32,
    options: &VerifyOptions,
) -> Result<InvariantReport> {
    if e_max < 1 {
        return Err(Error::InvalidParameter("e_max must be at least 1".into()));
    }
    if !fedder_is_f_pure(ctx)? {
        return Err(Error::NotFPure);
    }
    let (dim, multiplicity) = ctx.dim_and_multiplicity()?;
    let mut footnotes = Vec::new();
    let (a_d, a_d_user_asserted) = match options.a_d {
        Some(v) => {
            footnotes.push("a_d supplied by the user, not verified".to_string());
            (v, true)
        }
        None => (a_top_complete_intersection(ctx)?, false),
    };
    let minus_ad = BigRational::from(BigInt::from(-a_d));

    let m = ctx.maximal_ideal();
    let fpt = fpt_estimate(&m, e_max, 1, ctx)?;
    let cm = f_threshold(&m, &m, e_max, ctx)?;

    let mut relations = Vec::new();

    // fpt(m) <= -a_d
    let verdict = if fpt.upper <= minus_ad {
        Verdict::Verified
    } else if fpt.lower > minus_ad {
        Verdict::Violated
    } else {
        Verdict::Consistent
    };
    relations.push(RelationCheck {
        name: "fpt_le_minus_ad",
        verdict,
        evidence: format!(
            "fpt in {}, -a_d = {}",
            interval_str(&fpt),
            -a_d
        ),
    });

    // -a_d <= c^m(m)
    let verdict = if minus_ad <= cm.lower {
        Verdict::Verified
    } else if minus_ad > cm.upper {
        Verdict::Violated
    } else {
        Verdict::Consistent
    };
    relations.push(RelationCheck {
        name: "minus_ad_le_cm",
        verdict,
        evidence: format!("-a_d = {}, c^m in {}", -a_d, interval_str(&cm)),
    });

    // nu formula, meaningful in the equality scenario fpt = -a_d = c^m
    let j = options.j.clone().unwrap_or_else(|| m.clone());
    let equality_possible = fpt.lower <= minus_ad
        && minus_ad <= fpt.upper
        && cm.lower <= minus_ad
        && minus_ad <= cm.upper;
    let mut nu_rows = Vec::new();
    let mut a0_of_j = None;
    if equality_possible {
        let a0 = a0_socle_degree(&j, ctx)?;
        a0_of_j = Some(a0);
        let mut all_match = true;
        let mut evidence = Vec::new();
        for e in 1..=e_max {
            let rec = nu(&m, &j, e, ctx)?;
            let q = checked_pow(ctx.p(), e)? as i64;
            let expected = (a0 as i64 - a_d) * q + a_d;
            let got = rec.nu as i64;
            evidence.push(format!("e={e}: nu={got}, formula={expected}"));
            if got != expected {
                all_match = false;
            }
            nu_rows.push(rec);
        }
        relations.push(RelationCheck {
            name: "nu_formula",
            verdict: if all_match {
                Verdict::Verified
            } else {
                Verdict::Violated
            },
            evidence: format!("a_0(R/J) = {a0}; {}", evidence.join("; ")),
        });
    } else {
        relations.push(RelationCheck {
            name: "nu_formula",
            verdict: Verdict::Inconclusive,
            evidence: "intervals exclude the equality scenario".to_string(),
        });
    }

    // s_e >= e(R)/d!
    let (method, j_sop) = match &options.j_sop {
        Some(j) => (FSigMethod::Gorenstein, Some(j)),
        None => (FSigMethod::Direct, None),
    };
    let fsig = f_signature_sequence(e_max, ctx, method, j_sop)?;
    let mut all_ge = true;
    let mut evidence = Vec::new();
    for row in &fsig.rows {
        evidence.push(format!(
            "e={}: s_e = {}",
            row.e,
            format_rational(&row.s)
        ));
        if row.s < fsig.lower_bound_target {
            all_ge = false;
        }
    }
    relations.push(RelationCheck {
        name: "fsig_lower_bound",
        verdict: if all_ge {
            Verdict::Verified
        } else {
            Verdict::Violated
        },
        evidence: format!(
            "target e(R)/d! = {}; {}",
            format_rational(&fsig.lower_bound_target),
            evidence.join("; ")
        ),
    });

    footnotes.push(
        "F-signature differences use the non-negative orientation e_HK(J) - e_HK(J : m)"
            .to_string(),
    );
    if matches!(fsig.method, FSigMethod::Gorenstein) {
        footnotes.push(
            "J was checked to be a homogeneous system of parameters; whether its integral \
             closure is m is not verified"
                .to_string(),
        );
    }

    Ok(InvariantReport {
        dim,
        multiplicity,
        f_pure: true,
        a_d,
        a_d_user_asserted,
        fpt,
        cm,
        nu_rows,
        a0_of_j,
        fsig: Some(fsig),
        relations,
        footnotes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::quotient::Limits;
    use crate::ratio;

    fn fp(p: u64) -> FieldSpec {
        FieldSpec::new(p).unwrap()
    }

    fn poly_ring(p: u64, n: usize) -> QuotientContext {
        QuotientContext::polynomial_ring(fp(p), n)
    }

    fn quadric_cone() -> QuotientContext {
        let field = fp(3);
        let f = Polynomial::from_terms(
            field,
            4,
            vec![
                (Monomial::new([1, 1, 0, 0]), 1),
                (Monomial::new([0, 0, 1, 1]), -1),
            ],
        );
        QuotientContext::new(
            field,
            ["x", "y", "z", "w"].iter().map(|s| s.to_string()).collect(),
            vec![f],
            Limits::default(),
        )
        .unwrap()
    }

    fn quadric_jsop(ctx: &QuotientContext) -> Ideal {
        let x = Polynomial::variable(ctx.field(), 4, 0);
        let y = Polynomial::variable(ctx.field(), 4, 1);
        let z = Polynomial::variable(ctx.field(), 4, 2);
        let w = Polynomial::variable(ctx.field(), 4, 3);
        Ideal::new(ctx.field(), 4, vec![x, y, z.add(&w).unwrap()]).unwrap()
    }

    #[test]
    fn colength_examples() {
        let ctx = poly_ring(2, 2);
        let m = ctx.maximal_ideal();
        assert_eq!(colength(&bracket_power(&m, 1).unwrap(), &ctx).unwrap(), 4);

        let ctx3 = poly_ring(3, 2);
        let x = Polynomial::variable(ctx3.field(), 2, 0);
        let y = Polynomial::variable(ctx3.field(), 2, 1);
        let j = Ideal::new(
            ctx3.field(),
            2,
            vec![x.pow(2).unwrap(), x.mul(&y).unwrap(), y.pow(3).unwrap()],
        )
        .unwrap();
        assert_eq!(colength(&j, &ctx3).unwrap(), 4);
        let basis = standard_monomial_basis(&j, &ctx3).unwrap();
        assert_eq!(basis.len(), 4);

        // frozen oracle value for the quadric cone
        let ctx = quadric_cone();
        let m = ctx.maximal_ideal();
        let lam = colength(&bracket_power(&m, 1).unwrap(), &ctx).unwrap();
        assert_eq!(lam, 35);
        assert!(27 <= lam && lam < 81);
    }

    #[test]
    fn colength_requires_zero_dimensional() {
        let ctx = poly_ring(5, 2);
        let x = Polynomial::variable(ctx.field(), 2, 0);
        let j = Ideal::new(ctx.field(), 2, vec![x]).unwrap();
        assert!(matches!(
            colength(&j, &ctx),
            Err(Error::NotZeroDimensional(_))
        ));
    }

    #[test]
    fn hk_sequence_regular() {
        let ctx = poly_ring(2, 2);
        let m = ctx.maximal_ideal();
        let hk = hilbert_kunz_sequence(&m, 2, &ctx).unwrap();
        assert_eq!(hk.dim, 2);
        for row in &hk.rows {
            assert_eq!(row.ratio, ratio(1, 1));
        }
    }

    #[test]
    fn hk_sequence_quadric() {
        let ctx = quadric_cone();
        let m = ctx.maximal_ideal();
        let hk = hilbert_kunz_sequence(&m, 2, &ctx).unwrap();
        assert_eq!(hk.rows[0].colength, 35);
        assert_eq!(hk.rows[1].colength, 969);
        assert_eq!(hk.rows[0].ratio, ratio(35, 27));
        assert_eq!(hk.rows[1].ratio, ratio(969, 729));
        for row in &hk.rows {
            assert!(row.ratio > ratio(1, 1), "singular ring has ratio > 1");
        }
    }

    #[test]
    fn hk_of_parameter_ideal() {
        let ctx = quadric_cone();
        let j = quadric_jsop(&ctx);
        let hk = hilbert_kunz_sequence(&j, 1, &ctx).unwrap();
        assert_eq!(hk.rows[0].colength, 54); // frozen oracle value
        assert_eq!(hk.rows[0].ratio, ratio(54, 27));
    }

    #[test]
    fn a0_examples() {
        let ctx = poly_ring(2, 2);
        let m = ctx.maximal_ideal();
        assert_eq!(a0_socle_degree(&bracket_power(&m, 1).unwrap(), &ctx).unwrap(), 2);
        assert_eq!(a0_socle_degree(&m, &ctx).unwrap(), 0);

        let ctx3 = poly_ring(3, 2);
        let x = Polynomial::variable(ctx3.field(), 2, 0);
        let y = Polynomial::variable(ctx3.field(), 2, 1);
        let j = Ideal::new(
            ctx3.field(),
            2,
            vec![x.pow(2).unwrap(), x.mul(&y).unwrap(), y.pow(3).unwrap()],
        )
        .unwrap();
        assert_eq!(a0_socle_degree(&j, &ctx3).unwrap(), 2);
    }

    #[test]
    fn a0_equals_nu_for_bracket_powers() {
        // two independently computed integers must agree exactly
        let ctx = quadric_cone();
        let m = ctx.maximal_ideal();
        for e in 1..=2u32 {
            let socle = a0_socle_degree(&bracket_power(&m, e).unwrap(), &ctx).unwrap();
            let rec = nu(&m, &m, e, &ctx).unwrap();
            assert_eq!(socle, rec.nu);
        }
    }

    #[test]
    fn fsig_direct_regular() {
        let ctx = poly_ring(5, 2);
        let est = f_signature_sequence(2, &ctx, FSigMethod::Direct, None).unwrap();
        for row in &est.rows {
            assert_eq!(row.s, ratio(1, 1));
        }
        assert_eq!(est.lower_bound_target, ratio(1, 2));
    }

    #[test]
    fn fsig_gorenstein_regular_with_full_sop() {
        let ctx = poly_ring(5, 2);
        let m = ctx.maximal_ideal();
        let est = f_signature_sequence(2, &ctx, FSigMethod::Gorenstein, Some(&m)).unwrap();
        for row in &est.rows {
            assert_eq!(row.s, ratio(1, 1), "socle colon degenerates to the unit ideal");
        }
    }

    #[test]
    fn fsig_quadric_both_methods() {
        let ctx = quadric_cone();
        let direct = f_signature_sequence(2, &ctx, FSigMethod::Direct, None).unwrap();
        assert_eq!(direct.rows[0].colength, 19); // frozen oracle values
        assert_eq!(direct.rows[1].colength, 489);
        assert_eq!(direct.rows[0].s, ratio(19, 27));
        assert_eq!(direct.rows[1].s, ratio(489, 729));

        let j = quadric_jsop(&ctx);
        let gor = f_signature_sequence(2, &ctx, FSigMethod::Gorenstein, Some(&j)).unwrap();
        assert_eq!(gor.rows[0].colength, 54 - 35);
        assert_eq!(gor.rows[1].colength, 1458 - 969);
        // target e(R)/d! = 2/6 = 1/3
        assert_eq!(gor.lower_bound_target, ratio(1, 3));
        for row in gor.rows.iter().chain(direct.rows.iter()) {
            assert!(row.s >= ratio(1, 3));
        }
        // the two estimates happen to agree here; the shared limit is 2/3
        assert_eq!(direct.rows[0].s, gor.rows[0].s);
        assert_eq!(direct.rows[1].s, gor.rows[1].s);
    }

    #[test]
    fn fsig_rejects_bad_sop() {
        let ctx = quadric_cone();
        let x = Polynomial::variable(ctx.field(), 4, 0);
        let too_few = Ideal::new(ctx.field(), 4, vec![x.clone()]).unwrap();
        assert!(matches!(
            f_signature_sequence(1, &ctx, FSigMethod::Gorenstein, Some(&too_few)),
            Err(Error::NotSystemOfParameters(_))
        ));
        let y = Polynomial::variable(ctx.field(), 4, 1);
        let z = Polynomial::variable(ctx.field(), 4, 2);
        let not_primary =
            Ideal::new(ctx.field(), 4, vec![x.clone(), y.clone(), x.add(&y).unwrap()]).unwrap();
        assert!(matches!(
            f_signature_sequence(1, &ctx, FSigMethod::Gorenstein, Some(&not_primary)),
            Err(Error::NotSystemOfParameters(_))
        ));
        let _ = z;
    }

    #[test]
    fn a_top_examples() {
        assert_eq!(a_top_complete_intersection(&poly_ring(5, 2)).unwrap(), -2);
        assert_eq!(a_top_complete_intersection(&quadric_cone()).unwrap(), -2);
        let field = fp(7);
        let n = 8;
        let f = Polynomial::from_terms(
            field,
            n,
            (0..n).map(|i| {
                let mut e = vec![0u32; n];
                e[i] = 2;
                (Monomial::new(e), 1)
            }),
        );
        let ctx = QuotientContext::new(
            field,
            (1..=n).map(|i| format!("x{i}")).collect(),
            vec![f],
            Limits::default(),
        )
        .unwrap();
        assert_eq!(a_top_complete_intersection(&ctx).unwrap(), -6);
    }

    #[test]
    fn a_top_rejects_non_ci() {
        // (xy, xz): two generators but codimension 1
        let field = fp(3);
        let x = Polynomial::variable(field, 3, 0);
        let y = Polynomial::variable(field, 3, 1);
        let z = Polynomial::variable(field, 3, 2);
        let ctx = QuotientContext::new(
            field,
            vec!["x".into(), "y".into(), "z".into()],
            vec![x.mul(&y).unwrap(), x.mul(&z).unwrap()],
            Limits::default(),
        )
        .unwrap();
        assert!(matches!(
            a_top_complete_intersection(&ctx),
            Err(Error::NotCompleteIntersection { .. })
        ));
    }

    #[test]
    fn verify_regular_ring() {
        let ctx = poly_ring(5, 2);
        let report = verify_paper_relations(&ctx, 1, &VerifyOptions::default()).unwrap();
        assert_eq!(report.a_d, -2);
        assert_eq!(report.multiplicity, 1);
        let by_name = |n: &str| {
            report
                .relations
                .iter()
                .find(|r| r.name == n)
                .unwrap()
                .verdict
        };
        assert_eq!(by_name("fpt_le_minus_ad"), Verdict::Verified);
        assert_ne!(by_name("minus_ad_le_cm"), Verdict::Violated);
        assert_eq!(by_name("nu_formula"), Verdict::Verified);
        assert_eq!(by_name("fsig_lower_bound"), Verdict::Verified);
    }

    #[test]
    fn verify_quadric() {
        let ctx = quadric_cone();
        let report = verify_paper_relations(&ctx, 1, &VerifyOptions::default()).unwrap();
        assert_eq!(report.a_d, -2);
        // nu rows pinned by the formula: nu(3) = 2*3 - 2 = 4
        assert_eq!(report.nu_rows[0].nu, 4);
        for rel in &report.relations {
            assert_ne!(rel.verdict, Verdict::Violated, "{}", rel.name);
        }
        let nu_rel = report
            .relations
            .iter()
            .find(|r| r.name == "nu_formula")
            .unwrap();
        assert_eq!(nu_rel.verdict, Verdict::Verified);
    }
}

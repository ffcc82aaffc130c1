//! Command dispatch: every subcommand maps onto one or two library calls
//! and fills the report document.

use crate::problem::ProblemFile;
use crate::report::{verdict_str, IntervalOut, OpResult, RelationOut};
use fthresh_core::calculus::bracket_power;
use fthresh_core::finv::{
    self, estimate_from_nu_records, fedder_is_f_pure, NuRecord, ThresholdEstimate,
};
use fthresh_core::mult::{self, FSigMethod, VerifyOptions};
use fthresh_core::{format_rational, Ideal, QuotientContext, Result};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::sync::atomic::{AtomicU32, Ordering};
use std::sync::Mutex;

#[derive(Debug, Clone)]
pub enum Command {
    Fedder,
    Nu {
        a: String,
        j: String,
        e: u32,
    },
    Threshold {
        a: String,
        j: String,
        emax: u32,
    },
    Fpt {
        a: String,
        emax: u32,
        smax: u32,
    },
    Splitting {
        a: String,
        emax: u32,
    },
    Hk {
        j: String,
        emax: u32,
    },
    Fsig {
        emax: u32,
        method: FSigMethod,
        jsop: Option<String>,
    },
    Ainv0 {
        j: String,
    },
    Atop,
    Verify {
        emax: u32,
        j: Option<String>,
        jsop: Option<String>,
        ad: Option<i64>,
        check_fpt_cm: bool,
    },
    Sweep {
        op: SweepOp,
        a: String,
        j: String,
        emax: u32,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepOp {
    Nu,
    Hk,
    Splitting,
}

pub struct Outcome {
    pub results: Vec<OpResult>,
    pub relations: Vec<RelationOut>,
    pub footnotes: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            results: Vec::new(),
            relations: Vec::new(),
            footnotes: Vec::new(),
        }
    }
}

fn params(pairs: &[(&str, String)]) -> BTreeMap<String, String> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn nu_row(rec: &NuRecord) -> Value {
    json!({
        "e": rec.e,
        "nu": rec.nu,
        "ratio": format_rational(&rec.ratio),
    })
}

/// Runs `f(e)` for e = 1..e_max, possibly on a small worker pool; results
/// are reassembled in e order, so the output is deterministic.
fn map_e<T: Send>(
    e_max: u32,
    workers: usize,
    f: impl Fn(u32) -> Result<T> + Sync,
) -> Result<Vec<T>> {
    if workers <= 1 || e_max <= 1 {
        return (1..=e_max).map(f).collect();
    }
    let next = AtomicU32::new(1);
    let slots: Mutex<Vec<(u32, Result<T>)>> = Mutex::new(Vec::new());
    std::thread::scope(|scope| {
        for _ in 0..workers.min(e_max as usize) {
            scope.spawn(|| loop {
                let e = next.fetch_add(1, Ordering::SeqCst);
                if e > e_max {
                    break;
                }
                let r = f(e);
                slots.lock().expect("worker slots").push((e, r));
            });
        }
    });
    let mut slots = slots.into_inner().expect("worker slots");
    slots.sort_by_key(|(e, _)| *e);
    slots.into_iter().map(|(_, r)| r).collect()
}

fn threshold_records(
    a: &Ideal,
    j: &Ideal,
    emax: u32,
    ctx: &QuotientContext,
    workers: usize,
) -> Result<ThresholdEstimate> {
    let records = map_e(emax, workers, |e| finv::nu(a, j, e, ctx))?;
    let (mu, _) = fthresh_core::calculus::minimal_generators(a, ctx.gb_limits())?;
    estimate_from_nu_records(records, mu as u64, fedder_is_f_pure(ctx)?, ctx.p())
}

pub fn execute(
    cmd: &Command,
    pf: &ProblemFile,
    ctx: &QuotientContext,
    workers: usize,
) -> Result<Outcome> {
    let mut out = Outcome::new();
    match cmd {
        Command::Fedder => {
            let f_pure = fedder_is_f_pure(ctx)?;
            out.results.push(OpResult {
                op: "fedder".into(),
                params: BTreeMap::new(),
                value: Some(json!({ "f_pure": f_pure })),
                interval: None,
                rows: None,
                certified: Some(true),
                provenance: "fedder-colon-criterion".into(),
            });
        }
        Command::Nu { a, j, e } => {
            let a_ideal = pf.ideal(a, ctx)?;
            let j_ideal = pf.ideal(j, ctx)?;
            let rec = finv::nu(&a_ideal, &j_ideal, *e, ctx)?;
            out.results.push(OpResult {
                op: "nu".into(),
                params: params(&[("a", a.clone()), ("J", j.clone()), ("e", e.to_string())]),
                value: Some(nu_row(&rec)),
                interval: None,
                rows: None,
                certified: Some(true),
                provenance: "groebner-exact".into(),
            });
        }
        Command::Threshold { a, j, emax } => {
            let a_ideal = pf.ideal(a, ctx)?;
            let j_ideal = pf.ideal(j, ctx)?;
            let est = threshold_records(&a_ideal, &j_ideal, *emax, ctx, workers)?;
            out.results.push(OpResult {
                op: "threshold".into(),
                params: params(&[
                    ("a", a.clone()),
                    ("J", j.clone()),
                    ("emax", emax.to_string()),
                ]),
                value: None,
                interval: Some(IntervalOut::from_estimate(&est)),
                rows: Some(est.records.iter().map(nu_row).collect()),
                certified: Some(est.lower_certified),
                provenance: "certified-interval".into(),
            });
            if !est.lower_certified {
                out.footnotes.push(
                    "lower bound is heuristic: the quotient did not pass Fedder's test".into(),
                );
            }
        }
        Command::Fpt { a, emax, smax } => {
            let a_ideal = pf.ideal(a, ctx)?;
            let est = finv::fpt_estimate(&a_ideal, *emax, *smax, ctx)?;
            out.results.push(OpResult {
                op: "fpt".into(),
                params: params(&[
                    ("a", a.clone()),
                    ("emax", emax.to_string()),
                    ("smax", smax.to_string()),
                ]),
                value: None,
                interval: Some(IntervalOut::from_estimate(&est)),
                rows: Some(est.records.iter().map(nu_row).collect()),
                certified: Some(true),
                provenance: "certified-interval".into(),
            });
        }
        Command::Splitting { a, emax } => {
            let a_ideal = pf.ideal(a, ctx)?;
            let rows = map_e(*emax, workers, |e| {
                let i_e = finv::splitting_ideal(ctx, e)?;
                let b = finv::b_invariant(&a_ideal, e, ctx)?;
                let lam = mult::colength(&i_e, ctx)?;
                let gens: Vec<String> = i_e
                    .gens()
                    .iter()
                    .map(|g| g.display(ctx.var_names()).to_string())
                    .collect();
                Ok(json!({
                    "e": e,
                    "b": b,
                    "colength": lam,
                    "generators": gens,
                }))
            })?;
            out.results.push(OpResult {
                op: "splitting".into(),
                params: params(&[("a", a.clone()), ("emax", emax.to_string())]),
                value: None,
                interval: None,
                rows: Some(rows),
                certified: Some(true),
                provenance: "groebner-exact".into(),
            });
        }
        Command::Hk { j, emax } => {
            let j_ideal = pf.ideal(j, ctx)?;
            let _ = mult::colength(&j_ideal, ctx)?; // m-primariness up front
            let (dim, _) = ctx.dim_and_multiplicity()?;
            let p = ctx.p();
            let rows = map_e(*emax, workers, |e| {
                let lam = mult::colength(&bracket_power(&j_ideal, e)?, ctx)?;
                let ratio = num_rational::BigRational::new(
                    lam.into(),
                    fthresh_core::pow_big(p, e * dim as u32),
                );
                Ok(json!({
                    "e": e,
                    "colength": lam,
                    "ratio": format_rational(&ratio),
                }))
            })?;
            out.results.push(OpResult {
                op: "hk".into(),
                params: params(&[("J", j.clone()), ("emax", emax.to_string())]),
                value: Some(json!({ "dim": dim })),
                interval: None,
                rows: Some(rows),
                certified: Some(true),
                provenance: "groebner-exact".into(),
            });
        }
        Command::Fsig { emax, method, jsop } => {
            let jsop_ideal = match jsop {
                Some(name) => Some(pf.ideal(name, ctx)?),
                None => None,
            };
            let est = mult::f_signature_sequence(*emax, ctx, *method, jsop_ideal.as_ref())?;
            let rows: Vec<Value> = est
                .rows
                .iter()
                .map(|r| {
                    json!({
                        "e": r.e,
                        "colength": r.colength,
                        "s": format_rational(&r.s),
                    })
                })
                .collect();
            out.results.push(OpResult {
                op: "fsig".into(),
                params: params(&[
                    ("emax", emax.to_string()),
                    (
                        "method",
                        match est.method {
                            FSigMethod::Direct => "direct".to_string(),
                            FSigMethod::Gorenstein => "gorenstein".to_string(),
                        },
                    ),
                ]),
                value: Some(json!({
                    "lower_bound_target": format_rational(&est.lower_bound_target),
                })),
                interval: None,
                rows: Some(rows),
                certified: Some(true),
                provenance: "groebner-exact".into(),
            });
        }
        Command::Ainv0 { j } => {
            let j_ideal = pf.ideal(j, ctx)?;
            let a0 = mult::a0_socle_degree(&j_ideal, ctx)?;
            out.results.push(OpResult {
                op: "ainv0".into(),
                params: params(&[("J", j.clone())]),
                value: Some(json!({ "a0": a0 })),
                interval: None,
                rows: None,
                certified: Some(true),
                provenance: "groebner-exact".into(),
            });
        }
        Command::Atop => {
            let a_top = mult::a_top_complete_intersection(ctx)?;
            out.results.push(OpResult {
                op: "atop".into(),
                params: BTreeMap::new(),
                value: Some(json!({ "a_top": a_top })),
                interval: None,
                rows: None,
                certified: Some(true),
                provenance: "complete-intersection-degrees".into(),
            });
        }
        Command::Verify {
            emax,
            j,
            jsop,
            ad,
            check_fpt_cm,
        } => {
            let options = VerifyOptions {
                j: match j {
                    Some(name) => Some(pf.ideal(name, ctx)?),
                    None => None,
                },
                j_sop: match jsop {
                    Some(name) => Some(pf.ideal(name, ctx)?),
                    None => None,
                },
                a_d: *ad,
            };
            let report = mult::verify_paper_relations(ctx, *emax, &options)?;
            out.results.push(OpResult {
                op: "verify".into(),
                params: params(&[("emax", emax.to_string())]),
                value: Some(json!({
                    "a_d": report.a_d,
                    "a_d_user_asserted": report.a_d_user_asserted,
                    "a0_of_j": report.a0_of_j,
                })),
                interval: None,
                rows: Some(report.nu_rows.iter().map(nu_row).collect()),
                certified: Some(true),
                provenance: "certified-interval+exact".into(),
            });
            out.results.push(OpResult {
                op: "fpt".into(),
                params: params(&[("a", "m".into()), ("emax", emax.to_string())]),
                value: None,
                interval: Some(IntervalOut::from_estimate(&report.fpt)),
                rows: None,
                certified: Some(true),
                provenance: "certified-interval".into(),
            });
            out.results.push(OpResult {
                op: "threshold".into(),
                params: params(&[
                    ("a", "m".into()),
                    ("J", "m".into()),
                    ("emax", emax.to_string()),
                ]),
                value: None,
                interval: Some(IntervalOut::from_estimate(&report.cm)),
                rows: None,
                certified: Some(true),
                provenance: "certified-interval".into(),
            });
            if let Some(fsig) = &report.fsig {
                let rows: Vec<Value> = fsig
                    .rows
                    .iter()
                    .map(|r| {
                        json!({
                            "e": r.e,
                            "colength": r.colength,
                            "s": format_rational(&r.s),
                        })
                    })
                    .collect();
                out.results.push(OpResult {
                    op: "fsig".into(),
                    params: params(&[("emax", emax.to_string())]),
                    value: Some(json!({
                        "lower_bound_target": format_rational(&fsig.lower_bound_target),
                    })),
                    interval: None,
                    rows: Some(rows),
                    certified: Some(true),
                    provenance: "groebner-exact".into(),
                });
            }
            for rel in &report.relations {
                out.relations.push(RelationOut {
                    name: rel.name.to_string(),
                    verdict: verdict_str(rel.verdict).to_string(),
                    evidence: rel.evidence.clone(),
                });
            }
            out.footnotes.extend(report.footnotes.iter().cloned());
            if *check_fpt_cm {
                let m = ctx.maximal_ideal();
                let check = finv::check_fpt_equals_cm(&m, *emax, ctx)?;
                let evidence: Vec<String> = check
                    .levels
                    .iter()
                    .map(|l| {
                        if l.exact_equal {
                            format!("e={}: splitting ideal equals the bracket power", l.e)
                        } else {
                            let (cl, cu) = l.cie_interval.as_ref().expect("interval");
                            let (sl, su) = l.scaled_cm_interval.as_ref().expect("interval");
                            format!(
                                "e={}: c^(I_e) in [{}, {}] vs p^e c^m in [{}, {}]",
                                l.e,
                                format_rational(cl),
                                format_rational(cu),
                                format_rational(sl),
                                format_rational(su)
                            )
                        }
                    })
                    .collect();
                out.relations.push(RelationOut {
                    name: "fpt_equals_cm".into(),
                    verdict: verdict_str(check.verdict).to_string(),
                    evidence: evidence.join("; "),
                });
            }
        }
        Command::Sweep { op, a, j, emax } => {
            match op {
                SweepOp::Nu => {
                    let a_ideal = pf.ideal(a, ctx)?;
                    let j_ideal = pf.ideal(j, ctx)?;
                    let rows = map_e(*emax, workers, |e| {
                        let rec = finv::nu(&a_ideal, &j_ideal, e, ctx)?;
                        eprintln!("sweep nu: e={} nu={}", rec.e, rec.nu);
                        Ok(nu_row(&rec))
                    })?;
                    out.results.push(OpResult {
                        op: "sweep".into(),
                        params: params(&[
                            ("op", "nu".into()),
                            ("a", a.clone()),
                            ("J", j.clone()),
                            ("emax", emax.to_string()),
                        ]),
                        value: None,
                        interval: None,
                        rows: Some(rows),
                        certified: Some(true),
                        provenance: "groebner-exact".into(),
                    });
                }
                SweepOp::Hk => {
                    let j_ideal = pf.ideal(j, ctx)?;
                    let _ = mult::colength(&j_ideal, ctx)?;
                    let (dim, _) = ctx.dim_and_multiplicity()?;
                    let p = ctx.p();
                    let rows = map_e(*emax, workers, |e| {
                        let lam = mult::colength(&bracket_power(&j_ideal, e)?, ctx)?;
                        eprintln!("sweep hk: e={e} colength={lam}");
                        let ratio = num_rational::BigRational::new(
                            lam.into(),
                            fthresh_core::pow_big(p, e * dim as u32),
                        );
                        Ok(json!({
                            "e": e,
                            "colength": lam,
                            "ratio": format_rational(&ratio),
                        }))
                    })?;
                    out.results.push(OpResult {
                        op: "sweep".into(),
                        params: params(&[
                            ("op", "hk".into()),
                            ("J", j.clone()),
                            ("emax", emax.to_string()),
                        ]),
                        value: Some(json!({ "dim": dim })),
                        interval: None,
                        rows: Some(rows),
                        certified: Some(true),
                        provenance: "groebner-exact".into(),
                    });
                }
                SweepOp::Splitting => {
                    let a_ideal = pf.ideal(a, ctx)?;
                    let rows = map_e(*emax, workers, |e| {
                        let b = finv::b_invariant(&a_ideal, e, ctx)?;
                        eprintln!("sweep splitting: e={e} b={b}");
                        Ok(json!({ "e": e, "b": b }))
                    })?;
                    out.results.push(OpResult {
                        op: "sweep".into(),
                        params: params(&[
                            ("op", "splitting".into()),
                            ("a", a.clone()),
                            ("emax", emax.to_string()),
                        ]),
                        value: None,
                        interval: None,
                        rows: Some(rows),
                        certified: Some(true),
                        provenance: "groebner-exact".into(),
                    });
                }
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Ok = 0,
    Error = 1,
    RelationViolated = 2,
}

pub fn exit_status(relations: &[RelationOut], had_error: bool) -> ExitStatus {
    if had_error {
        ExitStatus::Error
    } else if relations.iter().any(|r| r.verdict == "violated") {
        ExitStatus::RelationViolated
    } else {
        ExitStatus::Ok
    }
}

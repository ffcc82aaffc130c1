//! Graded quotient contexts R = S/I with cached dimension data and budgets.

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::groebner::GbLimits;
use crate::hilbert::{numerator, summarize};
use crate::ideal::Ideal;
use crate::monomial::MonomialOrder;
use crate::poly::Polynomial;
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

/// Budgets threaded through every search; runaway computations turn into
/// structured `SearchBudgetExceeded` errors instead of thrashing.
#[derive(Debug, Clone, Copy)]
pub struct Limits {
    pub gb: GbLimits,
    /// Cap on power ladders; `None` derives `10 * p^e * mu(a)` at the use
    /// site.
    pub max_power: Option<u64>,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            gb: GbLimits::default(),
            max_power: None,
        }
    }
}

/// The ambient data every computation runs against: a standard graded
/// polynomial ring over F_p together with a homogeneous defining ideal
/// (possibly zero) presenting R = S/I.
#[derive(Debug)]
pub struct QuotientContext {
    field: FieldSpec,
    vars: Vec<String>,
    defining: Ideal,
    limits: Limits,
    dim_mult: OnceLock<(usize, u64)>,
    f_pure: OnceLock<bool>,
    splitting: Mutex<HashMap<u32, Ideal>>,
}

impl QuotientContext {
    pub fn new(
        field: FieldSpec,
        vars: Vec<String>,
        defining_gens: Vec<Polynomial>,
        limits: Limits,
    ) -> Result<Self> {
        let nvars = vars.len();
        for g in &defining_gens {
            if g.p() != field.p() || g.nvars() != nvars {
                return Err(Error::RingMismatch);
            }
            if !g.is_homogeneous() {
                return Err(Error::NotHomogeneousInput(format!(
                    "quotient generator {}",
                    g.display(&vars)
                )));
            }
            if g.is_constant() {
                return Err(Error::UnitIdeal);
            }
        }
        let defining = Ideal::new(field, nvars, defining_gens)?;
        Ok(QuotientContext {
            field,
            vars,
            defining,
            limits,
            dim_mult: OnceLock::new(),
            f_pure: OnceLock::new(),
            splitting: Mutex::new(HashMap::new()),
        })
    }

    /// A polynomial ring with default budgets and variable names x1..xn.
    pub fn polynomial_ring(field: FieldSpec, nvars: usize) -> Self {
        let vars = (1..=nvars).map(|i| format!("x{i}")).collect();
        QuotientContext::new(field, vars, vec![], Limits::default())
            .expect("no generators to validate")
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn p(&self) -> u64 {
        self.field.p()
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn defining_ideal(&self) -> &Ideal {
        &self.defining
    }

    pub fn is_polynomial_ring(&self) -> bool {
        self.defining.is_zero()
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn gb_limits(&self) -> GbLimits {
        self.limits.gb
    }

    /// The irrelevant maximal ideal m = (x_1, ..., x_n).
    pub fn maximal_ideal(&self) -> Ideal {
        let gens = (0..self.nvars())
            .map(|i| Polynomial::variable(self.field, self.nvars(), i))
            .collect();
        Ideal::new(self.field, self.nvars(), gens).expect("variables are in the ring")
    }

    /// Lifts an ideal of R to the ambient ring: generators plus the defining
    /// ideal.
    pub fn in_quotient(&self, ideal: &Ideal) -> Result<Ideal> {
        ideal.plus(&self.defining)
    }

    /// Krull dimension and Hilbert-Samuel multiplicity of R, from the
    /// Hilbert series of the initial ideal of the defining ideal.
    pub fn dim_and_multiplicity(&self) -> Result<(usize, u64)> {
        if let Some(&v) = self.dim_mult.get() {
            return Ok(v);
        }
        let gb = self.defining.groebner(MonomialOrder::GrevLex, self.limits.gb)?;
        if gb.contains_one() {
            return Err(Error::UnitIdeal);
        }
        let staircase = gb.initial_monomials();
        let summary = summarize(&numerator(&staircase, self.nvars()), self.nvars());
        let v = (summary.dim, summary.multiplicity as u64);
        let _ = self.dim_mult.set(v);
        Ok(v)
    }

    pub fn dim(&self) -> Result<usize> {
        Ok(self.dim_and_multiplicity()?.0)
    }

    pub(crate) fn f_pure_cache(&self) -> &OnceLock<bool> {
        &self.f_pure
    }

    /// F-purity, if some earlier computation already ran Fedder's test.
    pub fn f_purity_if_computed(&self) -> Option<bool> {
        self.f_pure.get().copied()
    }

    pub(crate) fn splitting_cache(&self) -> &Mutex<HashMap<u32, Ideal>> {
        &self.splitting
    }
}

/// Dimension and multiplicity of R; `(n, 1)` for a polynomial ring.
pub fn hilbert_dimension_degree(ctx: &QuotientContext) -> Result<(usize, u64)> {
    ctx.dim_and_multiplicity()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::Monomial;

    fn fp(p: u64) -> FieldSpec {
        FieldSpec::new(p).unwrap()
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

    #[test]
    fn polynomial_ring_dimension() {
        for n in 1..=6usize {
            for p in [2u64, 3, 5, 7] {
                let ctx = QuotientContext::polynomial_ring(fp(p), n);
                assert_eq!(ctx.dim_and_multiplicity().unwrap(), (n, 1));
            }
        }
    }

    #[test]
    fn quadric_cone_dimension_and_degree() {
        assert_eq!(quadric_cone().dim_and_multiplicity().unwrap(), (3, 2));
    }

    #[test]
    fn diagonal_hypersurface_dimension_and_degree() {
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
        assert_eq!(ctx.dim_and_multiplicity().unwrap(), (7, 2));
    }

    #[test]
    fn rejects_inhomogeneous_quotient() {
        let field = fp(5);
        let x = Polynomial::variable(field, 2, 0);
        let bad = x.pow(2).unwrap().add(&x).unwrap();
        let err = QuotientContext::new(
            field,
            vec!["x".into(), "y".into()],
            vec![bad],
            Limits::default(),
        )
        .unwrap_err();
        assert!(matches!(err, Error::NotHomogeneousInput(_)));
    }

    #[test]
    fn lift_to_ambient_ring() {
        let ctx = quadric_cone();
        let m = ctx.maximal_ideal();
        let lifted = ctx.in_quotient(&m).unwrap();
        assert_eq!(lifted.gens().len(), 5);
    }
}

//! Shared fixtures for the benchmark targets.

use fthresh_core::{FieldSpec, Limits, Monomial, Polynomial, QuotientContext};

/// F_3[x, y, z, w] / (xy - zw).
pub fn quadric_cone() -> QuotientContext {
    let field = FieldSpec::new(3).expect("3 is prime");
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
    .expect("homogeneous quadric")
}

/// F_7[x1..x5] / (x1^2 + ... + x5^2), a mid-size diagonal hypersurface.
pub fn diagonal_f7_5vars() -> QuotientContext {
    let field = FieldSpec::new(7).expect("7 is prime");
    let n = 5;
    let f = Polynomial::from_terms(
        field,
        n,
        (0..n).map(|i| {
            let mut e = vec![0u32; n];
            e[i] = 2;
            (Monomial::new(e), 1)
        }),
    );
    QuotientContext::new(
        field,
        (1..=n).map(|i| format!("x{i}")).collect(),
        vec![f],
        Limits::default(),
    )
    .expect("homogeneous diagonal")
}

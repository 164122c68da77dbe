//! Classical knot invariants used as inputs and cross-checks: torus-knot
//! signatures via the Gordon–Litherland–Murasugi recursion, lens-space
//! d-invariants, lens-case real Frøyshov values, and the concordance
//! bookkeeping for cables of the figure-eight knot.
//!
//! Sign convention: positive torus knots have negative signature, and
//! σ(T_{p,−q}) = −σ(T_{p,q}).

use num_integer::Integer;
use thiserror::Error;

use crate::matrix::{self, Rat};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum KnotError {
    #[error("parameters ({0}, {1}) are not coprime")]
    NotCoprime(i64, i64),
    #[error("torus knot parameter must be nonzero")]
    ZeroParameter,
    #[error("spin-c index {i} out of range for L({p},1)")]
    IndexOutOfRange { p: i64, i: i64 },
    #[error("T({0},{1}) is not a two-bridge torus knot (neither parameter is ±2)")]
    NotTwoBridge(i64, i64),
}

/// The torus knot T_{p,q}, gcd(|p|, |q|) = 1, both parameters nonzero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TorusKnot {
    p: i64,
    q: i64,
}

impl TorusKnot {
    pub fn new(p: i64, q: i64) -> Result<Self, KnotError> {
        if p == 0 || q == 0 {
            return Err(KnotError::ZeroParameter);
        }
        if p.abs().gcd(&q.abs()) != 1 {
            return Err(KnotError::NotCoprime(p, q));
        }
        Ok(TorusKnot { p, q })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn mirror(&self) -> TorusKnot {
        TorusKnot { p: self.p, q: -self.q }
    }
}

/// σ(T_{p,q}) by the two-branch recursion, with σ(T_{1,q}) = 0,
/// σ(T_{q,p}) = σ(T_{p,q}), and σ(mirror) = −σ. Each step makes exactly one
/// recursive call, so the recursion unrolls into a loop carrying a sign and
/// an additive accumulator.
pub fn torus_signature(k: &TorusKnot) -> i64 {
    let (mut p, mut q) = (k.p, k.q);
    let mut sign = 1i64;
    let mut acc = 0i64;
    loop {
        // Normalize signs: T_{−p,−q} = T_{p,q}; T_{p,−q} is the mirror.
        if p < 0 && q < 0 {
            p = -p;
            q = -q;
        }
        if p < 0 {
            p = -p;
            sign = -sign;
        }
        if q < 0 {
            q = -q;
            sign = -sign;
        }
        if p == 1 || q == 1 {
            return acc;
        }
        // Arrange q < n (coprimality forbids q = n).
        let (a, n) = if p < q { (p, q) } else { (q, p) };
        if 2 * a < n {
            // σ(T_{a,n}) = σ(T_{a,n−2a}) − a² (+1 when a odd).
            acc += sign * (-a * a + if a % 2 == 1 { 1 } else { 0 });
            p = a;
            q = n - 2 * a;
        } else {
            // a < n < 2a: σ(T_{a,n}) = −σ(T_{a,2a−n}) − a² + (1 or 2).
            acc += sign * (-a * a + if a % 2 == 1 { 1 } else { 2 });
            sign = -sign;
            p = a;
            q = 2 * a - n;
        }
    }
}

/// Convenience wrapper validating coprimality.
pub fn torus_signature_pq(p: i64, q: i64) -> Result<i64, KnotError> {
    Ok(torus_signature(&TorusKnot::new(p, q)?))
}

/// Heegaard Floer d-invariant of the lens space L(p,1) in the spin-c
/// structure [i]: d = −1/4 + (2i−p)²/(4p).
pub fn lens_d_invariant(p: i64, i: i64) -> Result<Rat, KnotError> {
    if p <= 0 || i < 0 || i >= p {
        return Err(KnotError::IndexOutOfRange { p, i });
    }
    let num = 2 * i - p;
    Ok(matrix::rat(-1, 4) + matrix::rat(num * num, 4 * p))
}

/// Common value δ_R = δ̲_R = δ̄_R = −σ(K)/16 for two-bridge torus knots
/// (|p| = 2 or |q| = 2), whose double branched cover is a lens space.
pub fn lens_delta_r(k: &TorusKnot) -> Result<Rat, KnotError> {
    if k.p.abs() != 2 && k.q.abs() != 2 {
        return Err(KnotError::NotTwoBridge(k.p, k.q));
    }
    Ok(matrix::rat(-torus_signature(k), 16))
}

/// A concordance between knots inside a 4-manifold cobordism, with the data
/// entering the branched-cover signature and b₂⁺ formulas.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConcordanceMove {
    /// σ(X) of the ambient cobordism.
    pub ambient_sig: i64,
    /// b₂⁺(X).
    pub ambient_b2plus: i64,
    /// The class [S] ∈ H₂(X, ∂X) of the annulus in the natural basis.
    pub surface_class: Vec<i64>,
    /// σ of the source knot.
    pub sig_source: i64,
    /// σ of the target knot.
    pub sig_target: i64,
}

impl ConcordanceMove {
    /// [S]² = Σ sᵢ² (the ambient pieces are ℂP² summands, [S]² diagonal).
    pub fn surface_square(&self) -> i64 {
        self.surface_class.iter().map(|s| s * s).sum()
    }
}

/// The concordance from the (2n,1)-cable of the figure-eight knot to
/// T_{2n,1−20n} inside a twice-punctured 2ℂP², of class (2n, 6n).
/// The source signature is an input (0 for figure-eight cables); the target
/// signature σ(T_{2n,1−20n}) = 20n² − 2 is computed.
pub fn cable_concordance(n: i64, sig_source: i64) -> ConcordanceMove {
    assert!(n >= 1, "cable parameter must be positive");
    let target = TorusKnot::new(2 * n, 1 - 20 * n).expect("2n and 1-20n are coprime");
    ConcordanceMove {
        ambient_sig: 2,
        ambient_b2plus: 2,
        surface_class: vec![2 * n, 6 * n],
        sig_source,
        sig_target: torus_signature(&target),
    }
}

//! Real Frøyshov invariants in the regimes where they are pinned down
//! combinatorially (two-bridge/lens and even torus knots), the mirror
//! duality, the branched-cover b₂⁺/σ arithmetic of a concordance, and the
//! end-to-end sliceness obstruction for the (2n,1)-cables of the
//! figure-eight knot.
//!
//! Unknown values propagate as `None` and any step consuming an unknown
//! aborts; bounds are reported as bounds, never as claimed values.

use thiserror::Error;

use crate::equivariant::EquivariantError;
use crate::knots::{self, ConcordanceMove, KnotError, TorusKnot};
use crate::lattice::LatticeError;
use crate::matrix::{self, Rat};
use crate::plumbing::{self, PlumbingError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ObstructionError {
    #[error(transparent)]
    Plumbing(#[from] PlumbingError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Knot(#[from] KnotError),
    #[error(transparent)]
    Equivariant(#[from] EquivariantError),
    #[error("surface class has an odd coefficient; the branched-cover formulas need an even class")]
    OddClass,
    #[error("inequality hypothesis failed: {0}")]
    HypothesisFailed(String),
    #[error("the negative-clasp corollary needs vanishing knot signature, got {0}")]
    SignatureNonzero(i64),
    #[error("T({0},{1}) is not an even torus knot (need even positive p, coprime positive q)")]
    NotEvenTorus(i64, i64),
    #[error("the cable obstruction is stated for odd n, got {0}")]
    EvenInput(i64),
}

/// Where a Frøyshov triple came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Lens,
    EvenTorus,
    MirrorDual,
    User,
}

/// The real Frøyshov triple δ̲_R ≤ δ_R ≤ δ̄_R; `None` marks an unknown value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealFroyshov {
    pub delta: Option<Rat>,
    pub delta_under: Option<Rat>,
    pub delta_bar: Option<Rat>,
    pub provenance: Provenance,
}

impl RealFroyshov {
    /// δ̲ ≤ δ ≤ δ̄ whenever all three are known.
    pub fn is_consistent(&self) -> bool {
        match (&self.delta_under, &self.delta, &self.delta_bar) {
            (Some(u), Some(d), Some(b)) => u <= d && d <= b,
            _ => true,
        }
    }
}

/// Which case of the branched-cover inequality applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InequalityUsed {
    /// b₂⁺ difference 0: δ̲(K) ≤ δ̲(K′) + σ(Σ₂S)/16.
    Strong,
    /// b₂⁺ difference 1: δ̲(K) ≤ δ̄(K′) + σ(Σ₂S)/16.
    Weak,
    None,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// The knot bounds no normally immersed disk in B⁴ with only negative
    /// double points; in particular it is not smoothly slice.
    Obstructed,
    NoConclusion,
}

/// The full ledger of one obstruction run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionReport {
    pub b2plus_diff: i64,
    pub sigma_branched: i64,
    pub inequality_used: InequalityUsed,
    pub bound_on_delta_under: Rat,
    pub verdict: Verdict,
    pub trace: Vec<String>,
}

/// b₂⁺(Σ₂S) − b₂⁺(X) and σ(Σ₂S) of the double cover of the cobordism X
/// branched along the concordance annulus S:
/// diff = b₂⁺(X) − ¼[S]² − ½σ(K) + ½σ(K′), σ = 2σ(X) − ½[S]² − σ(K) + σ(K′).
pub fn branched_cover_arithmetic(m: &ConcordanceMove) -> Result<(i64, i64), ObstructionError> {
    if m.surface_class.iter().any(|s| s % 2 != 0) {
        return Err(ObstructionError::OddClass);
    }
    let s2 = m.surface_square();
    debug_assert_eq!(s2 % 4, 0);
    debug_assert_eq!(m.sig_source % 2, 0);
    debug_assert_eq!(m.sig_target % 2, 0);
    let diff = m.ambient_b2plus - s2 / 4 - m.sig_source / 2 + m.sig_target / 2;
    let sigma = 2 * m.ambient_sig - s2 / 2 - m.sig_source + m.sig_target;
    Ok((diff, sigma))
}

/// Apply the branched-cover Frøyshov inequality to bound δ̲_R of the source
/// knot by the target's triple. The verdict is left at `NoConclusion`;
/// finish with [`negative_clasp_check`].
pub fn theorem_b_bound(
    m: &ConcordanceMove,
    target: &RealFroyshov,
) -> Result<ObstructionReport, ObstructionError> {
    let (diff, sigma) = branched_cover_arithmetic(m)?;
    let correction = matrix::rat(sigma, 16);
    let mut trace = Vec::new();
    trace.push(format!(
        "b2+(Sigma_2 S) - b2+(X) = {} - {} - {} + {} = {}",
        m.ambient_b2plus,
        m.surface_square() / 4,
        m.sig_source / 2,
        m.sig_target / 2,
        diff
    ));
    trace.push(format!(
        "sigma(Sigma_2 S) = 2*{} - {} - {} + {} = {}",
        m.ambient_sig,
        m.surface_square() / 2,
        m.sig_source,
        m.sig_target,
        sigma
    ));
    trace.push(format!("correction on the left-hand side: -(1/16)*sigma(Sigma_2 S) = {}", -correction.clone()));
    let (used, target_val, target_name) = match diff {
        0 => (
            InequalityUsed::Strong,
            target.delta_under.clone(),
            "underline delta_R(K')",
        ),
        1 => (InequalityUsed::Weak, target.delta_bar.clone(), "bar delta_R(K')"),
        d => {
            return Err(ObstructionError::HypothesisFailed(format!(
                "b2+ difference is {d}, the inequality needs 0 or 1"
            )))
        }
    };
    let tv = target_val.ok_or_else(|| {
        ObstructionError::HypothesisFailed(format!("{target_name} is unknown"))
    })?;
    let bound = &tv + &correction;
    trace.push(format!(
        "underline delta_R(K) <= {} + {} = {}",
        tv,
        correction,
        bound
    ));
    Ok(ObstructionReport {
        b2plus_diff: diff,
        sigma_branched: sigma,
        inequality_used: used,
        bound_on_delta_under: bound,
        verdict: Verdict::NoConclusion,
        trace,
    })
}

/// The negative-clasp corollary: a knot with σ = 0 bounding a normally
/// immersed disk with only negative double points has 0 ≤ δ̲_R, so a strictly
/// negative bound on δ̲_R obstructs such disks (hence sliceness).
pub fn negative_clasp_check(
    bound_on_delta_under: &Rat,
    sigma_k: i64,
) -> Result<Verdict, ObstructionError> {
    if sigma_k != 0 {
        return Err(ObstructionError::SignatureNonzero(sigma_k));
    }
    if bound_on_delta_under < &matrix::rat_int(0) {
        Ok(Verdict::Obstructed)
    } else {
        Ok(Verdict::NoConclusion)
    }
}

/// δ_R = δ̲_R = δ̄_R = −½·μ̄(Σ(2,p,q)) for an even torus knot T_{p,q}
/// (p even, q odd, both positive and coprime).
pub fn even_torus_froyshov(p: i64, q: i64) -> Result<RealFroyshov, ObstructionError> {
    if p <= 0 || q <= 0 || p % 2 != 0 || q % 2 == 0 || gcd(p, q) != 1 {
        return Err(ObstructionError::NotEvenTorus(p, q));
    }
    let seifert = plumbing::branched_cover_seifert(p, q)?;
    let g = plumbing::seifert_to_plumbing(&seifert)?;
    let mu = plumbing::mubar(&g)?;
    let v = -mu / matrix::rat_int(2);
    Ok(RealFroyshov {
        delta: Some(v.clone()),
        delta_under: Some(v.clone()),
        delta_bar: Some(v),
        provenance: Provenance::EvenTorus,
    })
}

/// The triple of a two-bridge torus knot via the lens-space formula,
/// δ = δ̲ = δ̄ = −σ(K)/16.
pub fn lens_froyshov(k: &TorusKnot) -> Result<RealFroyshov, ObstructionError> {
    let v = knots::lens_delta_r(k)?;
    Ok(RealFroyshov {
        delta: Some(v.clone()),
        delta_under: Some(v.clone()),
        delta_bar: Some(v),
        provenance: Provenance::Lens,
    })
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 { a.abs() } else { gcd(b, a % b) }
}

/// Mirror duality: δ̄(−K) = −δ̲(K), δ̲(−K) = −δ̄(K), δ(−K) = −δ(K).
pub fn mirror_dual(f: &RealFroyshov) -> RealFroyshov {
    RealFroyshov {
        delta: f.delta.clone().map(|v| -v),
        delta_under: f.delta_bar.clone().map(|v| -v),
        delta_bar: f.delta_under.clone().map(|v| -v),
        provenance: Provenance::MirrorDual,
    }
}

/// End-to-end obstruction for E_{2n,1}, the (2n,1)-cable of the figure-eight
/// knot, n odd: the cable concordance into T_{2n,1−20n}, the even-torus
/// Frøyshov triple of T_{2n,20n−1}, mirror duality, the branched-cover
/// inequality, and the negative-clasp corollary.
pub fn e2n1_pipeline(n: i64) -> Result<ObstructionReport, ObstructionError> {
    if n <= 0 || n % 2 == 0 {
        return Err(ObstructionError::EvenInput(n));
    }
    let mut trace = Vec::new();
    trace.push(format!(
        "E_{{{p},1}}: concordance to T_{{{p},{m}}} in a twice-punctured 2CP^2, class (2n, 6n) = ({}, {})",
        2 * n,
        6 * n,
        p = 2 * n,
        m = 1 - 20 * n,
    ));
    let mv = knots::cable_concordance(n, 0);
    trace.push(format!(
        "sigma(T_{{{},{}}}) = 20n^2 - 2 = {}",
        2 * n,
        1 - 20 * n,
        mv.sig_target
    ));
    let torus = even_torus_froyshov(2 * n, 20 * n - 1)?;
    let tv = torus.delta_bar.clone().expect("even-torus triple is known");
    trace.push(format!(
        "delta_R(T_{{{},{}}}) = -mubar(Sigma(2,{},{}))/2 = {}",
        2 * n,
        20 * n - 1,
        2 * n,
        20 * n - 1,
        tv
    ));
    let mirrored = mirror_dual(&torus);
    trace.push(format!(
        "bar delta_R(T_{{{},{}}}) = -underline delta_R(T_{{{},{}}}) = {}",
        2 * n,
        1 - 20 * n,
        2 * n,
        20 * n - 1,
        mirrored.delta_bar.clone().expect("mirror of known value")
    ));
    let mut report = theorem_b_bound(&mv, &mirrored)?;
    trace.append(&mut report.trace);
    let verdict = negative_clasp_check(&report.bound_on_delta_under, mv.sig_source)?;
    match verdict {
        Verdict::Obstructed => trace.push(format!(
            "underline delta_R <= {} < 0: E_{{{},1}} bounds no normally immersed disk with only negative double points; NOT SLICE",
            report.bound_on_delta_under,
            2 * n
        )),
        Verdict::NoConclusion => trace.push("bound is nonnegative: no conclusion".into()),
    }
    report.trace = trace;
    report.verdict = verdict;
    Ok(report)
}

//! Closed-form upper bounds on the Q-index and the adjacency index in
//! terms of order `n`, size `m`, minimum degree `delta`, and maximum
//! degree `Delta`, together with structural certificates for when each
//! bound is attained.
//!
//! The central quantity is the envelope
//!
//! ```text
//! f(x, y) = y + 2x - 1 + sqrt((y + 2x - 1)^2 + 16m - 8(n - 1 + y) x)
//! g(x, y) = min{2y, f(x, y) / 2}
//! ```
//!
//! evaluated at `(x, y) = (delta, Delta)` for the main Q-index bound, at
//! `(delta, n-1)` and `(0, Delta)` for its two corollary forms, plus two
//! older bounds it dominates and a minimum-degree bound on the adjacency
//! index. For every graph the radicands are provably nonnegative; the
//! domain errors below can only fire on synthetic degree profiles that no
//! graph realizes.

use crate::graph::{DegreeProfile, Graph};
use crate::spectral::{self, SpectralError};
use serde::Serialize;
use thiserror::Error;

/// Absolute tolerance used when a test compares a bound against an exact
/// eigenvalue to decide "attained" vs "strict". Safe because across the
/// full enumeration of small graphs the smallest nonzero gap observed is
/// larger than 1e-5 (asserted by the calibration tests).
pub const EQUALITY_TOL: f64 = 1e-7;

/// Radicands computed from floating-point parameters may dip this far
/// below zero from rounding alone; anything lower is a real domain error.
const RADICAND_CLAMP: f64 = -1e-12;

#[derive(Debug, Error, PartialEq)]
pub enum BoundError {
    #[error("negative radicand {radicand:e} in {formula}")]
    NegativeRadicand { formula: &'static str, radicand: f64 },
    #[error("parameter domain violated: {what}")]
    Domain { what: String },
    #[error("clique size {k} out of range for order {n} (need 1 <= k <= n)")]
    SnkRange { k: usize, n: usize },
    #[error(transparent)]
    Spectral(#[from] SpectralError),
}

/// Square root with the documented domain policy: tiny negatives from
/// rounding clamp to zero (logged), real negatives are errors.
fn sqrt_radicand(formula: &'static str, radicand: f64) -> Result<f64, BoundError> {
    if radicand >= 0.0 {
        Ok(radicand.sqrt())
    } else if radicand >= RADICAND_CLAMP {
        log::debug!("clamping rounding-level negative radicand {radicand:e} in {formula}");
        Ok(0.0)
    } else {
        Err(BoundError::NegativeRadicand { formula, radicand })
    }
}

fn parts(p: &DegreeProfile) -> (f64, f64, f64, f64) {
    (p.n as f64, p.m as f64, p.min_degree as f64, p.max_degree as f64)
}

/// Main Q-index bound:
/// `min{2 Delta, (1/2)(Delta + 2 delta - 1 + sqrt((Delta + 2 delta - 1)^2 +
/// 16m - 8(n - 1 + Delta) delta))}`.
///
/// Sound for every graph; attained exactly on the certificate set of
/// [`equality_certificate_main`].
pub fn bound_main(p: &DegreeProfile) -> Result<f64, BoundError> {
    let (n, m, dmin, dmax) = parts(p);
    let s = dmax + 2.0 * dmin - 1.0;
    let root = sqrt_radicand("bound_main", s * s + 16.0 * m - 8.0 * (n - 1.0 + dmax) * dmin)?;
    Ok((2.0 * dmax).min(0.5 * (s + root)))
}

/// Whether `2m >= Delta^2 + Delta + (n - 1 - Delta) delta`, the exact
/// condition for the square-root term of [`bound_main`] to reach `2 Delta`
/// (so that the bound degenerates to `2 Delta`).
pub fn threshold_reaches_2delta(p: &DegreeProfile) -> bool {
    let (n, m, dmin, dmax) = (p.n as i128, p.m as i128, p.min_degree as i128, p.max_degree as i128);
    let reaches = 2 * m >= dmax * dmax + dmax + (n - 1 - dmax) * dmin;
    // Cross-check the algebra: the unclipped formula term sits on the same
    // side of 2*Delta as the integer inequality.
    #[cfg(debug_assertions)]
    {
        let (nf, mf, lo, hi) = parts(p);
        let s = hi + 2.0 * lo - 1.0;
        let rad = s * s + 16.0 * mf - 8.0 * (nf - 1.0 + hi) * lo;
        if rad >= 0.0 {
            let unclipped = 0.5 * (s + rad.sqrt());
            if reaches {
                debug_assert!(unclipped >= 2.0 * hi - 1e-9);
            } else {
                debug_assert!(unclipped < 2.0 * hi + 1e-9);
            }
        }
    }
    reaches
}

/// Corollary form with `Delta` relaxed to `n - 1`:
/// `(1/2)(n + 2 delta - 2 + sqrt((n + 2 delta - 2)^2 + 16m - 16(n-1) delta))`.
pub fn bound_cor1(p: &DegreeProfile) -> Result<f64, BoundError> {
    let (n, m, dmin, _) = parts(p);
    let s = n + 2.0 * dmin - 2.0;
    let root = sqrt_radicand("bound_cor1", s * s + 16.0 * m - 16.0 * (n - 1.0) * dmin)?;
    Ok(0.5 * (s + root))
}

/// Corollary form with `delta` relaxed to 0:
/// `min{2 Delta, (1/2)(Delta - 1 + sqrt((Delta - 1)^2 + 16m))}`.
pub fn bound_cor2(p: &DegreeProfile) -> Result<f64, BoundError> {
    let (_, m, _, dmax) = parts(p);
    let s = dmax - 1.0;
    let root = sqrt_radicand("bound_cor2", s * s + 16.0 * m)?;
    Ok((2.0 * dmax).min(0.5 * (s + root)))
}

/// Minimum-degree bound on the adjacency index:
/// `(delta - 1)/2 + sqrt(2m - n delta + (delta + 1)^2 / 4)`.
///
/// Two readings of this inequality circulate, differing in the target
/// (adjacency index vs Q-index) and in the constant term of the radicand
/// (`(delta+1)^2/4` vs `(delta+1)/4`); only the form implemented here
/// makes the extremal chain for k-degenerate graphs reproduce the closed
/// adjacency value of `S(n, k)`, so it is the one used throughout.
pub fn bound_thm_a_mu(p: &DegreeProfile) -> Result<f64, BoundError> {
    let (n, m, dmin, _) = parts(p);
    let half = 0.5 * (dmin + 1.0);
    let root = sqrt_radicand("bound_thm_a_mu", 2.0 * m - n * dmin + half * half)?;
    Ok(0.5 * (dmin - 1.0) + root)
}

/// Older minimum/maximum-degree Q-index bound dominated by [`bound_main`]:
/// `(1/2)(delta - 1 + sqrt((delta - 1)^2 + 16m + 8 Delta^2 - 8(n-1) delta))`.
pub fn bound_lipa(p: &DegreeProfile) -> Result<f64, BoundError> {
    let (n, m, dmin, dmax) = parts(p);
    let s = dmin - 1.0;
    let root = sqrt_radicand(
        "bound_lipa",
        s * s + 16.0 * m + 8.0 * dmax * dmax - 8.0 * (n - 1.0) * dmin,
    )?;
    Ok(0.5 * (s + root))
}

/// Older extreme-degree Q-index bound dominated by [`bound_main`]:
/// `(1/2)(Delta + delta - 1 + sqrt((Delta + delta - 1)^2 + 16m - 8(n-1) delta))`.
pub fn bound_llt(p: &DegreeProfile) -> Result<f64, BoundError> {
    let (n, m, dmin, dmax) = parts(p);
    let s = dmax + dmin - 1.0;
    let root = sqrt_radicand("bound_llt", s * s + 16.0 * m - 8.0 * (n - 1.0) * dmin)?;
    Ok(0.5 * (s + root))
}

/// The envelope `f(x, y)` over real parameters, with its domain checks:
/// `0 <= x <= 2m/n <= y` and `0 <= m <= n(n-1)/2`.
///
/// `f` is non-strictly decreasing in `x` and non-strictly increasing in
/// `y` on that domain (non-strict: at `n = 5, m = 5, x = 2`, both `y = 2`
/// and `y = 3` give `f = 8`).
pub fn prop1_f(x: f64, y: f64, n: usize, m: usize) -> Result<f64, BoundError> {
    if n == 0 {
        return Err(BoundError::Domain { what: "n must be >= 1".into() });
    }
    if m > n * (n - 1) / 2 {
        return Err(BoundError::Domain { what: format!("m = {m} exceeds n(n-1)/2") });
    }
    let avg = 2.0 * m as f64 / n as f64;
    if !x.is_finite() || x < 0.0 || x > avg + 1e-9 {
        return Err(BoundError::Domain { what: format!("x = {x} outside [0, 2m/n = {avg}]") });
    }
    if !y.is_finite() || y < avg - 1e-9 {
        return Err(BoundError::Domain { what: format!("y = {y} below 2m/n = {avg}") });
    }
    let s = y + 2.0 * x - 1.0;
    let root = sqrt_radicand(
        "prop1_f",
        s * s + 16.0 * m as f64 - 8.0 * (n as f64 - 1.0 + y) * x,
    )?;
    Ok(s + root)
}

/// The clipped envelope `g(x, y) = min{2y, f(x, y) / 2}`, monotone in the
/// same directions as `f`.
pub fn prop1_g(x: f64, y: f64, n: usize, m: usize) -> Result<f64, BoundError> {
    Ok((2.0 * y).min(0.5 * prop1_f(x, y, n, m)?))
}

/// Closed adjacency index of `S(n, k)`:
/// `(k-1)/2 + sqrt(kn - (3k^2 + 2k - 1)/4)`, for `1 <= k <= n`, `n >= 2`.
pub fn closed_mu_snk(n: usize, k: usize) -> Result<f64, BoundError> {
    if k == 0 || k > n {
        return Err(BoundError::SnkRange { k, n });
    }
    let (nf, kf) = (n as f64, k as f64);
    let root = sqrt_radicand(
        "closed_mu_snk",
        kf * nf - (3.0 * kf * kf + 2.0 * kf - 1.0) / 4.0,
    )?;
    Ok(0.5 * (kf - 1.0) + root)
}

/// Closed Q-index of `S(n, k)`:
/// `(1/2)(n + 2k - 2 + sqrt((n + 2k - 2)^2 - 8(k^2 - k)))`, for
/// `1 <= k <= n`, `n >= 2` (the one-vertex graph is below the formula's
/// range).
pub fn closed_q_snk(n: usize, k: usize) -> Result<f64, BoundError> {
    if k == 0 || k > n {
        return Err(BoundError::SnkRange { k, n });
    }
    let (nf, kf) = (n as f64, k as f64);
    let s = nf + 2.0 * kf - 2.0;
    let root = sqrt_radicand("closed_q_snk", s * s - 8.0 * (kf * kf - kf))?;
    Ok(0.5 * (s + root))
}

/// Structural witness that a bound is attained. Each kind is checkable in
/// polynomial time from the graph alone; the correspondence with numeric
/// equality is validated exhaustively over all graphs of order <= 7.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EqualityCertificate {
    /// Every vertex has the same degree.
    Regular,
    /// A component of order `Delta + 1` in which every degree is `delta`
    /// or `Delta`, while all other components are `delta`-regular. Pins
    /// the Q-index at the square-root term of the bound.
    SpecialComponent { component: Vec<usize> },
    /// A component that is `Delta`-regular (in a graph that is not itself
    /// regular). Pins the Q-index at `2 Delta`, the clamp branch of
    /// [`bound_main`], a case the square-root analysis alone misses:
    /// e.g. a 4-cycle plus an isolated vertex has q = 4 = bound.
    MaxRegularComponent { component: Vec<usize> },
    /// Every degree is `delta` or `n - 1`, and additionally some vertex is
    /// dominating (`Delta = n - 1`) or the graph is `delta`-regular with
    /// `2 delta >= n - 2`. The extra clause is what makes the condition
    /// exact: a disjoint union of triangles, say, has every degree in
    /// `{delta, n-1}` vacuously yet sits strictly below [`bound_cor1`].
    DegreeSet,
    /// No equality structure; the bound is strict.
    None,
}

impl EqualityCertificate {
    /// True when the certificate asserts equality.
    pub fn holds(&self) -> bool {
        !matches!(self, EqualityCertificate::None)
    }
}

fn component_regular(g: &Graph, comp: &[usize], degree: usize) -> bool {
    comp.iter().all(|&v| g.degree(v) == degree)
}

fn special_component(g: &Graph, p: &DegreeProfile) -> Option<Vec<usize>> {
    let comps = g.connected_components();
    'outer: for (i, c) in comps.iter().enumerate() {
        if c.len() != p.max_degree + 1 {
            continue;
        }
        for &v in c {
            let d = g.degree(v);
            if d != p.min_degree && d != p.max_degree {
                continue 'outer;
            }
        }
        for (j, other) in comps.iter().enumerate() {
            if j != i && !component_regular(g, other, p.min_degree) {
                continue 'outer;
            }
        }
        return Some(c.clone());
    }
    None
}

/// Certificate for equality in [`bound_main`]. Equality holds if and only
/// if the result is not `None`: regular graphs and the special
/// `Delta + 1`-order decomposition attain the square-root branch, and a
/// `Delta`-regular component forces `q = 2 Delta`, the clamp branch.
pub fn equality_certificate_main(g: &Graph) -> EqualityCertificate {
    let p = g.degree_profile();
    if p.min_degree == p.max_degree {
        return EqualityCertificate::Regular;
    }
    for c in g.connected_components() {
        if component_regular(g, &c, p.max_degree) {
            return EqualityCertificate::MaxRegularComponent { component: c };
        }
    }
    match special_component(g, &p) {
        Some(component) => EqualityCertificate::SpecialComponent { component },
        Option::None => EqualityCertificate::None,
    }
}

/// Certificate for equality in [`bound_cor1`]: every degree in
/// `{delta, n-1}` plus the dominating-vertex or dense-regular clause
/// spelled out on [`EqualityCertificate::DegreeSet`].
pub fn equality_certificate_cor1(g: &Graph) -> EqualityCertificate {
    let p = g.degree_profile();
    let degrees_ok =
        p.degrees.iter().all(|&d| d == p.min_degree || d == p.n - 1);
    if degrees_ok && (p.max_degree == p.n - 1 || 2 * p.min_degree >= p.n.saturating_sub(2)) {
        EqualityCertificate::DegreeSet
    } else {
        EqualityCertificate::None
    }
}

/// Certificate for equality in [`bound_thm_a_mu`]: regular graphs, or the
/// same `Delta + 1`-order special decomposition as the main bound (no
/// clamp branch exists for the adjacency form).
pub fn equality_certificate_thm_a(g: &Graph) -> EqualityCertificate {
    let p = g.degree_profile();
    if p.min_degree == p.max_degree {
        return EqualityCertificate::Regular;
    }
    match special_component(g, &p) {
        Some(component) => EqualityCertificate::SpecialComponent { component },
        Option::None => EqualityCertificate::None,
    }
}

/// The quadratic whose nonpositivity at `q` underlies [`bound_main`]:
/// `q^2 - (Delta + 2 delta - 1) q - 4m + 2(n - 1 + Delta) delta`.
/// Evaluating it at the exact Q-index always yields a value <= 0 (up to
/// eigensolver tolerance).
pub fn qin_quadratic(q: f64, p: &DegreeProfile) -> f64 {
    let (n, m, dmin, dmax) = parts(p);
    q * q - (dmax + 2.0 * dmin - 1.0) * q - 4.0 * m + 2.0 * (n - 1.0 + dmax) * dmin
}

/// Signed slack of every bound against its exact index (`bound - exact`;
/// nonnegative up to 1e-9 by soundness).
#[derive(Debug, Clone, Serialize)]
pub struct Gaps {
    pub main: f64,
    pub cor1: f64,
    pub cor2: f64,
    pub thm_a_mu: f64,
    pub lipa: f64,
    pub llt: f64,
}

/// Everything the bound family says about one graph: exact indices, all
/// six bounds, certificate verdicts, and gaps.
#[derive(Debug, Clone, Serialize)]
pub struct BoundReport {
    pub profile: DegreeProfile,
    pub q_exact: f64,
    pub mu_exact: f64,
    pub bound_main: f64,
    pub bound_cor1: f64,
    pub bound_cor2: f64,
    pub bound_thm_a_mu: f64,
    pub bound_lipa: f64,
    pub bound_llt: f64,
    pub equality_main: bool,
    pub equality_cor1: bool,
    pub equality_thm_a: bool,
    pub gaps: Gaps,
}

/// Evaluate the full bound family on one graph.
pub fn bound_report(g: &Graph) -> Result<BoundReport, BoundError> {
    let profile = g.degree_profile();
    let q_exact = spectral::q_index(g)?;
    let mu_exact = spectral::mu_index(g)?;
    let main = bound_main(&profile)?;
    let cor1 = bound_cor1(&profile)?;
    let cor2 = bound_cor2(&profile)?;
    let thm_a = bound_thm_a_mu(&profile)?;
    let lipa = bound_lipa(&profile)?;
    let llt = bound_llt(&profile)?;
    Ok(BoundReport {
        profile,
        q_exact,
        mu_exact,
        bound_main: main,
        bound_cor1: cor1,
        bound_cor2: cor2,
        bound_thm_a_mu: thm_a,
        bound_lipa: lipa,
        bound_llt: llt,
        equality_main: equality_certificate_main(g).holds(),
        equality_cor1: equality_certificate_cor1(g).holds(),
        equality_thm_a: equality_certificate_thm_a(g).holds(),
        gaps: Gaps {
            main: main - q_exact,
            cor1: cor1 - q_exact,
            cor2: cor2 - q_exact,
            thm_a_mu: thm_a - mu_exact,
            lipa: lipa - q_exact,
            llt: llt - q_exact,
        },
    })
}

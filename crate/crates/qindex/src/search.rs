//! Exhaustive and randomized verification sweeps: extremality of the
//! split-clique graphs among k-degenerate graphs, soundness and equality
//! structure of the degree bounds, the k-degenerate edge bound, and
//! bound-tightness statistics.
//!
//! Enumeration walks the upper-triangle edge-mask counter from `0` to
//! `2^(n(n-1)/2) - 1`, so every sweep is a pure fold over a mask range.
//! Ranges are cut into fixed-size segments handed to worker threads; the
//! per-segment partial results are merged in segment order, which makes
//! the final report byte-identical for every worker count. The sweeps are
//! evidence at small orders, not proofs: every report records the scope it
//! actually covered.

use crate::bounds::{
    self, equality_certificate_cor1, equality_certificate_main, qin_quadratic, EQUALITY_TOL,
};
use crate::canon;
use crate::graph::{max_degenerate_edges, Graph, GraphError};
use crate::graph6::encode_graph6;
use crate::spectral::{self, m_rowsum_limit, m_rowsums};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::{BTreeMap, HashSet};
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::Mutex;
use thiserror::Error;

/// Largest order any sweep will enumerate (2^28 graphs).
pub const MAX_SWEEP_VERTICES: usize = 8;

/// Largest order enumerated without the explicit opt-in flag.
pub const MANDATORY_SWEEP_VERTICES: usize = 7;

/// Residual demanded of every eigensolve performed inside a sweep.
const RESIDUAL_TOL: f64 = 1e-8;

/// Soundness slack: a bound may undershoot its exact value by at most this.
const SOUNDNESS_TOL: f64 = 1e-9;

/// Violations reported verbatim; beyond this only the count grows.
const VIOLATION_CAP: usize = 100;

/// Near-extremal candidates kept for the isomorphism post-pass. Far above
/// the largest possible number of labelings of a single graph on 8
/// vertices (8! = 40320), so the cap cannot hide a legitimate co-maximizer.
const CANDIDATE_CAP: usize = 65_536;

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("order {n} exceeds the sweep limit {max}")]
    ScopeTooLarge { n: usize, max: usize },
    #[error("order-8 sweeps enumerate 2^28 graphs; set allow_order_8 to opt in")]
    NeedsOptIn,
    #[error("degeneracy bound k = {k} out of range for order n = {n}")]
    BadDegeneracyScope { k: usize, n: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Spectral(#[from] spectral::SpectralError),
    #[error(transparent)]
    Bound(#[from] bounds::BoundError),
    #[error("checkpoint write failed: {0}")]
    Io(#[from] std::io::Error),
}

/// Knobs shared by all sweeps.
#[derive(Debug, Clone, Default)]
pub struct SweepOptions {
    /// Worker threads; `None` falls back to the `QINDEX_WORKERS`
    /// environment variable and then to available parallelism.
    pub workers: Option<usize>,
    /// Permit order-8 sweeps (minutes of work, 2^28 graphs).
    pub allow_order_8: bool,
    /// Progress file, rewritten as `last_completed_mask <integer>\n` after
    /// each completed segment prefix (for order 8: every 2^20 masks). A
    /// partial report cannot be reconstructed from the offset alone, so
    /// resuming means re-running the sweep; the file lets operators watch
    /// long scans and decide whether a rerun is worth it.
    pub checkpoint: Option<PathBuf>,
}

/// Number of worker threads a sweep will actually use.
pub fn resolve_workers(opts: &SweepOptions) -> usize {
    let from_env = || {
        std::env::var("QINDEX_WORKERS")
            .ok()
            .and_then(|s| s.trim().parse::<usize>().ok())
            .filter(|&w| w >= 1)
    };
    opts.workers
        .filter(|&w| w >= 1)
        .or_else(from_env)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |p| p.get()))
        .min(64)
}

/// What a sweep covered.
#[derive(Debug, Clone, Serialize)]
pub struct SearchScope {
    /// One of `q`, `mu`, `bound`, `edges`.
    pub target: String,
    pub n: usize,
    pub k: Option<usize>,
    /// Enumeration mode; verification sweeps are always `labeled`.
    pub mode: String,
    /// True when `k >= n - 1`, where every graph of order n qualifies and
    /// the split-clique reference degenerates to the complete graph.
    pub degenerate_k: bool,
}

/// One counterexample (or internal inconsistency) found by a sweep.
#[derive(Debug, Clone, Serialize)]
pub struct Violation {
    pub graph6: String,
    pub detail: String,
}

/// Histogram of bound-minus-exact gaps in powers of two. Gaps at or below
/// the equality tolerance land in `zero`; a positive gap `g` lands in bin
/// `floor(log2(g))`.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct GapHistogram {
    pub zero: u64,
    pub bins: BTreeMap<i32, u64>,
}

impl GapHistogram {
    fn record(&mut self, gap: f64) {
        if gap <= EQUALITY_TOL {
            self.zero += 1;
        } else {
            let bin = (gap.log2().floor() as i32).clamp(-60, 60);
            *self.bins.entry(bin).or_insert(0) += 1;
        }
    }

    fn absorb(&mut self, other: GapHistogram) {
        self.zero += other.zero;
        for (bin, count) in other.bins {
            *self.bins.entry(bin).or_insert(0) += count;
        }
    }

    /// CSV rendering: header `log2_bin,count`, one row per bucket, the
    /// equality bucket labeled `zero`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("log2_bin,count\n");
        out.push_str(&format!("zero,{}\n", self.zero));
        for (bin, count) in &self.bins {
            out.push_str(&format!("{bin},{count}\n"));
        }
        out
    }
}

/// Outcome of one verification sweep.
#[derive(Debug, Clone, Serialize)]
pub struct SearchReport {
    pub scope: SearchScope,
    /// Graphs inside the scope (for k-restricted sweeps, the k-degenerate
    /// ones among all labeled graphs of order n).
    pub graphs_scanned: u64,
    pub violation_count: u64,
    /// First violations in mask order, capped at 100.
    pub violations: Vec<Violation>,
    /// graph6 of the first maximizer in mask order, if any graph was seen.
    pub extremal_graph6: Option<String>,
    pub extremal_value: Option<f64>,
    /// Labeled graphs attaining the maximum.
    pub extremal_count: u64,
    /// Whether all maximizers form a single isomorphism class matching the
    /// split-clique reference; only theorem sweeps make the claim.
    pub unique_up_to_iso: Option<bool>,
    pub tightness: GapHistogram,
    /// Smallest gap beyond the equality tolerance; calibrates that the
    /// tolerance sits far away from any true nonzero gap.
    pub min_nonzero_gap: Option<f64>,
}

impl SearchReport {
    /// True when the sweep found nothing wrong.
    pub fn clean(&self) -> bool {
        self.violation_count == 0
    }
}

// ---------------------------------------------------------------------------
// Enumeration and generation
// ---------------------------------------------------------------------------

/// Every labeled graph of order `n` in mask order, or one representative
/// per isomorphism class (the first in mask order) when `iso_reduce`.
pub fn enumerate_graphs(
    n: usize,
    iso_reduce: bool,
) -> Result<impl Iterator<Item = Graph>, SearchError> {
    if n == 0 || n > MAX_SWEEP_VERTICES {
        return Err(SearchError::ScopeTooLarge { n, max: MAX_SWEEP_VERTICES });
    }
    let total = 1u64 << (n * (n - 1) / 2);
    let mut seen: HashSet<u64> = HashSet::new();
    Ok((0..total).filter_map(move |mask| {
        let g = Graph::from_edge_mask(n, mask).expect("mask within range");
        if iso_reduce {
            let c = canon::canonical_mask(&g).expect("order within canon range");
            if !seen.insert(c) {
                return None;
            }
        }
        Some(g)
    }))
}

/// Random k-degenerate graph: vertices are created in order and vertex `j`
/// joins a uniformly chosen earlier subset whose size is uniform on
/// `[0, min(k, j)]`. The insertion order itself witnesses k-degeneracy.
/// Deterministic for a fixed seed.
pub fn random_k_degenerate(n: usize, k: usize, seed: u64) -> Result<Graph, GraphError> {
    let mut g = Graph::empty(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for j in 1..n {
        let cap = k.min(j);
        let size = rng.random_range(0..=cap);
        for i in rand::seq::index::sample(&mut rng, j, size) {
            g.set_edge(i, j, true);
        }
    }
    Ok(g)
}

// ---------------------------------------------------------------------------
// Sharded sweep driver
// ---------------------------------------------------------------------------

/// Fixed segment size for a mask space of `bits` bits: small enough to
/// balance load across workers, capped at 2^20 masks so that order-8
/// checkpoints land at the promised stride. Depends only on `bits`, never
/// on the worker count, so segment boundaries (and therefore merge order)
/// are invariant.
fn segment_size(bits: u32) -> u64 {
    1u64 << bits.saturating_sub(5).min(20)
}

struct Progress {
    done: Vec<bool>,
    prefix: usize,
}

/// Run `scan` over `[0, total)` in fixed segments on `workers` threads and
/// fold the per-segment results in segment order with `merge`. The fold
/// order makes the result independent of scheduling, hence of the worker
/// count. Optionally rewrites `checkpoint` whenever the completed prefix
/// of segments grows.
fn run_segments<T, S, M>(
    total: u64,
    seg_size: u64,
    workers: usize,
    checkpoint: Option<&Path>,
    scan: S,
    merge: M,
) -> Result<T, SearchError>
where
    T: Send,
    S: Fn(u64, u64) -> Result<T, SearchError> + Sync,
    M: Fn(T, T) -> T,
{
    let segments = total.div_ceil(seg_size).max(1) as usize;
    let results: Mutex<Vec<Option<T>>> = Mutex::new((0..segments).map(|_| None).collect());
    let next = AtomicU64::new(0);
    let stop = AtomicBool::new(false);
    let failure: Mutex<Option<SearchError>> = Mutex::new(None);
    let progress = Mutex::new(Progress { done: vec![false; segments], prefix: 0 });

    let fail = |e: SearchError| {
        let mut slot = failure.lock().unwrap();
        if slot.is_none() {
            *slot = Some(e);
        }
        stop.store(true, Ordering::Relaxed);
    };

    std::thread::scope(|scope| {
        for _ in 0..workers.min(segments) {
            scope.spawn(|| loop {
                if stop.load(Ordering::Relaxed) {
                    break;
                }
                let idx = next.fetch_add(1, Ordering::Relaxed) as usize;
                if idx >= segments {
                    break;
                }
                let lo = idx as u64 * seg_size;
                let hi = (lo + seg_size).min(total);
                match scan(lo, hi) {
                    Ok(part) => {
                        results.lock().unwrap()[idx] = Some(part);
                        let advanced = {
                            let mut st = progress.lock().unwrap();
                            st.done[idx] = true;
                            let before = st.prefix;
                            while st.prefix < segments && st.done[st.prefix] {
                                st.prefix += 1;
                            }
                            (st.prefix > before).then_some(st.prefix)
                        };
                        if let (Some(prefix), Some(path)) = (advanced, checkpoint) {
                            let last = (prefix as u64 * seg_size).min(total) - 1;
                            let line = format!("last_completed_mask {last}\n");
                            if let Err(e) = std::fs::write(path, line) {
                                fail(e.into());
                            }
                        }
                    }
                    Err(e) => fail(e),
                }
            });
        }
    });

    if let Some(e) = failure.into_inner().unwrap() {
        return Err(e);
    }
    Ok(results
        .into_inner()
        .unwrap()
        .into_iter()
        .map(|p| p.expect("every segment completed"))
        .reduce(merge)
        .expect("at least one segment"))
}

fn check_scope(n: usize, opts: &SweepOptions) -> Result<(), SearchError> {
    if n == 0 || n > MAX_SWEEP_VERTICES {
        return Err(SearchError::ScopeTooLarge { n, max: MAX_SWEEP_VERTICES });
    }
    if n > MANDATORY_SWEEP_VERTICES && !opts.allow_order_8 {
        return Err(SearchError::NeedsOptIn);
    }
    Ok(())
}

fn push_violation(
    violations: &mut Vec<Violation>,
    count: &mut u64,
    g: &Graph,
    detail: String,
) {
    *count += 1;
    if violations.len() < VIOLATION_CAP {
        violations.push(Violation {
            graph6: encode_graph6(g).expect("sweep orders fit graph6"),
            detail,
        });
    }
}

fn merge_violations(a: &mut Vec<Violation>, b: Vec<Violation>) {
    a.extend(b);
    a.truncate(VIOLATION_CAP);
}

// ---------------------------------------------------------------------------
// Extremality sweeps (the two spectral theorems)
// ---------------------------------------------------------------------------

#[derive(Clone, Copy)]
enum SpectralTarget {
    Q,
    Mu,
}

impl SpectralTarget {
    fn name(self) -> &'static str {
        match self {
            SpectralTarget::Q => "q",
            SpectralTarget::Mu => "mu",
        }
    }

    fn value(self, g: &Graph) -> Result<f64, spectral::SpectralError> {
        match self {
            SpectralTarget::Q => spectral::q_index(g),
            SpectralTarget::Mu => spectral::mu_index(g),
        }
    }

    fn closed_snk(self, n: usize, k: usize) -> Result<f64, bounds::BoundError> {
        match self {
            SpectralTarget::Q => bounds::closed_q_snk(n, k),
            SpectralTarget::Mu => bounds::closed_mu_snk(n, k),
        }
    }
}

struct TheoremPartial {
    scanned: u64,
    violation_count: u64,
    violations: Vec<Violation>,
    /// Masks whose value is within the equality tolerance of the closed
    /// form, with their values; mask order is preserved through merging.
    candidates: Vec<(u64, f64)>,
    tightness: GapHistogram,
    min_nonzero_gap: f64,
}

/// Scan every k-degenerate labeled graph of order `n` and check that its
/// Q-index stays more than the equality tolerance below the closed
/// split-clique value unless the graph is the split-clique itself, which
/// must attain it. Violations, the maximizer set, and shortfall statistics
/// are reported.
pub fn verify_theorem_q(n: usize, k: usize, opts: &SweepOptions) -> Result<SearchReport, SearchError> {
    verify_theorem(SpectralTarget::Q, n, k, opts)
}

/// Same sweep as [`verify_theorem_q`] for the adjacency index.
pub fn verify_theorem_mu(n: usize, k: usize, opts: &SweepOptions) -> Result<SearchReport, SearchError> {
    verify_theorem(SpectralTarget::Mu, n, k, opts)
}

fn verify_theorem(
    target: SpectralTarget,
    n: usize,
    k: usize,
    opts: &SweepOptions,
) -> Result<SearchReport, SearchError> {
    check_scope(n, opts)?;
    if k == 0 || k >= n {
        return Err(SearchError::BadDegeneracyScope { k, n });
    }
    let closed = target.closed_snk(n, k)?;
    let bits = (n * (n - 1) / 2) as u32;
    let total = 1u64 << bits;

    let scan = |lo: u64, hi: u64| -> Result<TheoremPartial, SearchError> {
        let mut part = TheoremPartial {
            scanned: 0,
            violation_count: 0,
            violations: Vec::new(),
            candidates: Vec::new(),
            tightness: GapHistogram::default(),
            min_nonzero_gap: f64::INFINITY,
        };
        for mask in lo..hi {
            let g = Graph::from_edge_mask(n, mask)?;
            if !g.is_k_degenerate(k) {
                continue;
            }
            part.scanned += 1;
            let value = target.value(&g)?;
            let shortfall = closed - value;
            part.tightness.record(shortfall.max(0.0));
            if shortfall > EQUALITY_TOL {
                part.min_nonzero_gap = part.min_nonzero_gap.min(shortfall);
            } else {
                part.candidates.push((mask, value));
            }
            if value > closed + 1e-8 {
                push_violation(
                    &mut part.violations,
                    &mut part.violation_count,
                    &g,
                    format!("{} = {value} exceeds closed-form maximum {closed}", target.name()),
                );
            }
        }
        Ok(part)
    };

    let merge = |mut a: TheoremPartial, b: TheoremPartial| {
        a.scanned += b.scanned;
        a.violation_count += b.violation_count;
        merge_violations(&mut a.violations, b.violations);
        a.candidates.extend(b.candidates);
        a.tightness.absorb(b.tightness);
        a.min_nonzero_gap = a.min_nonzero_gap.min(b.min_nonzero_gap);
        a
    };

    let mut part = run_segments(
        total,
        segment_size(bits),
        resolve_workers(opts),
        opts.checkpoint.as_deref(),
        scan,
        merge,
    )?;

    // Post-pass: every near-extremal graph must be the split-clique up to
    // isomorphism, and the best value must match the closed form.
    let snk = Graph::split_clique(n, k)?;
    let snk_canon = canon::canonical_mask(&snk)?;
    if part.candidates.len() > CANDIDATE_CAP {
        push_violation(
            &mut part.violations,
            &mut part.violation_count,
            &snk,
            format!(
                "{} near-extremal graphs exceed the candidate cap {CANDIDATE_CAP}; truncated",
                part.candidates.len()
            ),
        );
        part.candidates.truncate(CANDIDATE_CAP);
    }

    let best = part
        .candidates
        .iter()
        .map(|&(_, v)| v)
        .fold(f64::NEG_INFINITY, f64::max);
    let mut extremal_count = 0u64;
    let mut extremal_mask = None;
    let mut all_iso = true;
    for &(mask, _) in &part.candidates {
        let g = Graph::from_edge_mask(n, mask)?;
        if canon::canonical_mask(&g)? == snk_canon {
            extremal_count += 1;
            if extremal_mask.is_none() {
                extremal_mask = Some(mask);
            }
        } else {
            all_iso = false;
            push_violation(
                &mut part.violations,
                &mut part.violation_count,
                &g,
                format!(
                    "non-extremal graph within {EQUALITY_TOL:e} of the closed-form maximum {closed}"
                ),
            );
        }
    }
    if part.candidates.is_empty() || (best - closed).abs() > 1e-8 {
        push_violation(
            &mut part.violations,
            &mut part.violation_count,
            &snk,
            format!("closed-form value {closed} not attained; best within tolerance: {best}"),
        );
    }

    let extremal_graph6 = match extremal_mask {
        Some(mask) => Some(encode_graph6(&Graph::from_edge_mask(n, mask)?).expect("n <= 8")),
        None => None,
    };
    Ok(SearchReport {
        scope: SearchScope {
            target: target.name().to_string(),
            n,
            k: Some(k),
            mode: "labeled".to_string(),
            degenerate_k: k >= n - 1,
        },
        graphs_scanned: part.scanned,
        violation_count: part.violation_count,
        violations: part.violations,
        extremal_graph6,
        extremal_value: part.candidates.first().map(|_| best),
        extremal_count,
        unique_up_to_iso: Some(all_iso && extremal_count > 0),
        tightness: part.tightness,
        min_nonzero_gap: (part.min_nonzero_gap.is_finite()).then_some(part.min_nonzero_gap),
    })
}

// ---------------------------------------------------------------------------
// Universal bound sweep
// ---------------------------------------------------------------------------

struct BoundPartial {
    scanned: u64,
    violation_count: u64,
    violations: Vec<Violation>,
    best: f64,
    best_mask: u64,
    best_count: u64,
    tightness: GapHistogram,
    min_nonzero_gap: f64,
}

/// One pass over every labeled graph of order `n` checking the entire
/// per-graph theory: soundness of all six bounds, exactness of the main
/// and relaxed equality certificates, domination of the older bounds by
/// the main bound, the row-sum lemma and the quadratic it implies,
/// eigensolver residuals, and the graph6 round-trip. The histogram tracks
/// the main bound's gap; the extremal fields track the largest Q-index.
pub fn verify_bound_universal(n: usize, opts: &SweepOptions) -> Result<SearchReport, SearchError> {
    check_scope(n, opts)?;
    let bits = (n * (n - 1) / 2) as u32;
    let total = 1u64 << bits;

    let scan = |lo: u64, hi: u64| -> Result<BoundPartial, SearchError> {
        let mut part = BoundPartial {
            scanned: 0,
            violation_count: 0,
            violations: Vec::new(),
            best: f64::NEG_INFINITY,
            best_mask: 0,
            best_count: 0,
            tightness: GapHistogram::default(),
            min_nonzero_gap: f64::INFINITY,
        };
        for mask in lo..hi {
            let g = Graph::from_edge_mask(n, mask)?;
            part.scanned += 1;
            let p = g.degree_profile();

            let q_res = spectral::largest_eigenvalue(&spectral::signless_laplacian(&g), 1e-10)?;
            let mu_res = spectral::largest_eigenvalue(&spectral::adjacency(&g), 1e-10)?;
            let (q, mu) = (q_res.value, mu_res.value);
            let flag = |ok: bool, part: &mut BoundPartial, detail: &dyn Fn() -> String| {
                if !ok {
                    push_violation(&mut part.violations, &mut part.violation_count, &g, detail());
                }
            };

            flag(q_res.residual <= RESIDUAL_TOL, &mut part, &|| {
                format!("signless Laplacian residual {} above {RESIDUAL_TOL:e}", q_res.residual)
            });
            flag(mu_res.residual <= RESIDUAL_TOL, &mut part, &|| {
                format!("adjacency residual {} above {RESIDUAL_TOL:e}", mu_res.residual)
            });

            let b_main = bounds::bound_main(&p)?;
            let b_cor1 = bounds::bound_cor1(&p)?;
            let b_cor2 = bounds::bound_cor2(&p)?;
            let b_thm_a = bounds::bound_thm_a_mu(&p)?;
            let b_lipa = bounds::bound_lipa(&p)?;
            let b_llt = bounds::bound_llt(&p)?;

            for (name, bound, exact) in [
                ("main", b_main, q),
                ("cor1", b_cor1, q),
                ("cor2", b_cor2, q),
                ("lipa", b_lipa, q),
                ("llt", b_llt, q),
                ("thm_a_mu", b_thm_a, mu),
            ] {
                flag(bound >= exact - SOUNDNESS_TOL, &mut part, &|| {
                    format!("bound_{name} = {bound} below exact value {exact}")
                });
            }
            for (name, other) in
                [("cor1", b_cor1), ("cor2", b_cor2), ("lipa", b_lipa), ("llt", b_llt)]
            {
                flag(b_main <= other + SOUNDNESS_TOL, &mut part, &|| {
                    format!("bound_main = {b_main} exceeds bound_{name} = {other}")
                });
            }

            // Equality certificates characterize equality exactly.
            let gap_main = b_main - q;
            let gap_cor1 = b_cor1 - q;
            flag(
                equality_certificate_main(&g).holds() == (gap_main.abs() <= EQUALITY_TOL),
                &mut part,
                &|| format!("main equality certificate disagrees with gap {gap_main}"),
            );
            flag(
                equality_certificate_cor1(&g).holds() == (gap_cor1.abs() <= EQUALITY_TOL),
                &mut part,
                &|| format!("relaxed equality certificate disagrees with gap {gap_cor1}"),
            );

            // Row-sum lemma and the quadratic derived from it.
            let limit = m_rowsum_limit(&p);
            let worst_row =
                m_rowsums(&g).into_iter().fold(f64::NEG_INFINITY, f64::max);
            flag(worst_row <= limit + SOUNDNESS_TOL, &mut part, &|| {
                format!("row sum {worst_row} exceeds limit {limit}")
            });
            flag(qin_quadratic(q, &p) <= EQUALITY_TOL, &mut part, &|| {
                format!("quadratic at q positive: {}", qin_quadratic(q, &p))
            });
            // Exercise the threshold predicate's internal cross-check.
            let _ = bounds::threshold_reaches_2delta(&p);

            // Codec round-trip.
            let recoded = crate::graph6::decode_graph6(&encode_graph6(&g).expect("n <= 8"));
            flag(recoded.ok().as_ref() == Some(&g), &mut part, &|| {
                "graph6 round-trip mismatch".to_string()
            });

            part.tightness.record(gap_main.max(0.0));
            for gap in [gap_main, gap_cor1] {
                if gap.abs() > EQUALITY_TOL {
                    part.min_nonzero_gap = part.min_nonzero_gap.min(gap.abs());
                }
            }
            if q > part.best {
                part.best = q;
                part.best_mask = mask;
                part.best_count = 1;
            } else if q == part.best {
                part.best_count += 1;
            }
        }
        Ok(part)
    };

    let merge = |mut a: BoundPartial, b: BoundPartial| {
        a.scanned += b.scanned;
        a.violation_count += b.violation_count;
        merge_violations(&mut a.violations, b.violations);
        a.tightness.absorb(b.tightness);
        a.min_nonzero_gap = a.min_nonzero_gap.min(b.min_nonzero_gap);
        if b.best > a.best {
            a.best = b.best;
            a.best_mask = b.best_mask;
            a.best_count = b.best_count;
        } else if b.best == a.best {
            a.best_count += b.best_count;
        }
        a
    };

    let part = run_segments(
        total,
        segment_size(bits),
        resolve_workers(opts),
        opts.checkpoint.as_deref(),
        scan,
        merge,
    )?;

    let extremal = Graph::from_edge_mask(n, part.best_mask)?;
    Ok(SearchReport {
        scope: SearchScope {
            target: "bound".to_string(),
            n,
            k: None,
            mode: "labeled".to_string(),
            degenerate_k: false,
        },
        graphs_scanned: part.scanned,
        violation_count: part.violation_count,
        violations: part.violations,
        extremal_graph6: Some(encode_graph6(&extremal).expect("n <= 8")),
        extremal_value: Some(part.best),
        extremal_count: part.best_count,
        unique_up_to_iso: None,
        tightness: part.tightness,
        min_nonzero_gap: (part.min_nonzero_gap.is_finite()).then_some(part.min_nonzero_gap),
    })
}

// ---------------------------------------------------------------------------
// Edge bound sweep
// ---------------------------------------------------------------------------

struct EdgePartial {
    scanned: u64,
    violation_count: u64,
    violations: Vec<Violation>,
    best: usize,
    best_mask: u64,
    best_count: u64,
    tightness: GapHistogram,
}

/// Check that every k-degenerate labeled graph of order `n` has at most
/// `kn - (k^2 + k)/2` edges, and that greedily completing each one to an
/// edge-maximal k-degenerate supergraph reaches exactly that count with
/// minimum degree k (for n >= k + 1).
pub fn verify_edge_bound(n: usize, k: usize, opts: &SweepOptions) -> Result<SearchReport, SearchError> {
    check_scope(n, opts)?;
    if k >= n {
        return Err(SearchError::BadDegeneracyScope { k, n });
    }
    let cap = max_degenerate_edges(n, k)?;
    let bits = (n * (n - 1) / 2) as u32;
    let total = 1u64 << bits;

    let scan = |lo: u64, hi: u64| -> Result<EdgePartial, SearchError> {
        let mut part = EdgePartial {
            scanned: 0,
            violation_count: 0,
            violations: Vec::new(),
            best: 0,
            best_mask: 0,
            best_count: 0,
            tightness: GapHistogram::default(),
        };
        for mask in lo..hi {
            let g = Graph::from_edge_mask(n, mask)?;
            if !g.is_k_degenerate(k) {
                continue;
            }
            part.scanned += 1;
            let m = g.edge_count();
            if m > cap {
                push_violation(
                    &mut part.violations,
                    &mut part.violation_count,
                    &g,
                    format!("{m} edges exceed the k-degenerate cap {cap}"),
                );
            }
            let completed = g.complete_to_maximal(k)?;
            if completed.edge_count() != cap {
                push_violation(
                    &mut part.violations,
                    &mut part.violation_count,
                    &g,
                    format!(
                        "completion reached {} edges instead of {cap}",
                        completed.edge_count()
                    ),
                );
            }
            if completed.degree_profile().min_degree != k {
                push_violation(
                    &mut part.violations,
                    &mut part.violation_count,
                    &g,
                    format!(
                        "completion has minimum degree {} instead of {k}",
                        completed.degree_profile().min_degree
                    ),
                );
            }
            part.tightness.record((cap - m.min(cap)) as f64);
            if part.best_count == 0 || m > part.best {
                part.best = m;
                part.best_mask = mask;
                part.best_count = 1;
            } else if m == part.best {
                part.best_count += 1;
            }
        }
        Ok(part)
    };

    let merge = |mut a: EdgePartial, b: EdgePartial| {
        a.scanned += b.scanned;
        a.violation_count += b.violation_count;
        merge_violations(&mut a.violations, b.violations);
        a.tightness.absorb(b.tightness);
        if b.best_count > 0 && (a.best_count == 0 || b.best > a.best) {
            a.best = b.best;
            a.best_mask = b.best_mask;
            a.best_count = b.best_count;
        } else if b.best_count > 0 && b.best == a.best {
            a.best_count += b.best_count;
        }
        a
    };

    let mut part = run_segments(
        total,
        segment_size(bits),
        resolve_workers(opts),
        opts.checkpoint.as_deref(),
        scan,
        merge,
    )?;

    if part.best != cap {
        let snk = Graph::split_clique(n, k.max(1))?;
        push_violation(
            &mut part.violations,
            &mut part.violation_count,
            &snk,
            format!("edge maximum {} never attained the cap {cap}", part.best),
        );
    }

    let extremal = Graph::from_edge_mask(n, part.best_mask)?;
    Ok(SearchReport {
        scope: SearchScope {
            target: "edges".to_string(),
            n,
            k: Some(k),
            mode: "labeled".to_string(),
            degenerate_k: k >= n - 1,
        },
        graphs_scanned: part.scanned,
        violation_count: part.violation_count,
        violations: part.violations,
        extremal_graph6: Some(encode_graph6(&extremal).expect("n <= 8")),
        extremal_value: Some(part.best as f64),
        extremal_count: part.best_count,
        unique_up_to_iso: None,
        tightness: part.tightness,
        min_nonzero_gap: None,
    })
}

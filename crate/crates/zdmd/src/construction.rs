//! Canonical labelled construction of `BS(Γ(Z_pq))` for distinct primes
//! `p < q`, together with the closed-form resolving sets, coordinate
//! formulas, and dimension values known for this family, and a verification
//! harness that checks all of them against BFS ground truth.
//!
//! The vertex set splits into four classes. Writing `h = (p-1)/2` for odd
//! `p`:
//!
//! - `a_i` (`1 <= i <= q-1`): the residue `i * p`, degree `p - 1`;
//! - `q_j` (`1 <= j <= p-1`): the residue `j * q`, degree `q - 1`;
//! - `c^nu_i` (`1 <= nu <= h`): the subdivision vertex of edge
//!   `(a_i, q_nu)`;
//! - `b^mu_i` (`1 <= mu <= h`): the subdivision vertex of edge
//!   `(a_i, q_{h+mu})`.
//!
//! For `p = 2` a single subdivision family `s_i` replaces `b`/`c`. The
//! `c`-versus-`b` attachment (low hubs get `c`, high hubs get `b`) is fixed
//! so that the coordinate formulas below reproduce the published worked
//! example bit-exact.
//!
//! Distances in this graph take only a handful of values: two `a`-vertices
//! are at distance 4, an `a` and a hub at 2, two hubs at 4, and a
//! subdivision vertex sits at distance 1 from its own endpoints, 2 from
//! vertices sharing an endpoint, and 3 or 4 otherwise. The displayed
//! coordinate formulas are case splits over these values.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, VertexId};
use crate::resolving::{
    self, equidistant_family_bound, metric_code, min_resolving_exhaustive, unresolved_pair,
    MetricCode, DEFAULT_BUDGET,
};
use crate::ring::{is_prime, zero_divisor_graph, zero_divisors, Modulus};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("p = {p} and q = {q} must be distinct primes with p < q")]
    NotDistinctPrimes { p: u64, q: u64 },
    #[error("no closed-form construction covers (p, q) = ({p}, {q})")]
    RegimeNotCovered { p: u64, q: u64 },
    #[error("vertex {0} does not exist in this partition")]
    InvalidVertex(String),
}

/// A vertex of `BS(Γ(Z_pq))` named by partition class. All indices are
/// 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum BsVertex {
    A { i: usize },
    Q { j: usize },
    C { nu: usize, i: usize },
    B { mu: usize, i: usize },
    /// Subdivision vertex of `(a_i, q_1)` when `p = 2`.
    S { i: usize },
}

impl fmt::Display for BsVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BsVertex::A { i } => write!(f, "a_{i}"),
            BsVertex::Q { j } => write!(f, "q_{j}"),
            BsVertex::C { nu, i } => write!(f, "c^{nu}_{i}"),
            BsVertex::B { mu, i } => write!(f, "b^{mu}_{i}"),
            BsVertex::S { i } => write!(f, "s_{i}"),
        }
    }
}

/// The named partition of `BS(Γ(Z_pq))` plus the id maps in both
/// directions.
#[derive(Debug, Clone)]
pub struct BsPartition {
    p: usize,
    q: usize,
    classes: Vec<BsVertex>,
    ids: BTreeMap<BsVertex, VertexId>,
}

impl BsPartition {
    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    /// `(p - 1) / 2`, the number of `c` (and of `b`) families for odd `p`.
    pub fn half(&self) -> usize {
        (self.p - 1) / 2
    }

    pub fn id(&self, v: BsVertex) -> Result<VertexId, ConstructionError> {
        self.ids
            .get(&v)
            .copied()
            .ok_or_else(|| ConstructionError::InvalidVertex(v.to_string()))
    }

    pub fn class(&self, id: VertexId) -> BsVertex {
        self.classes[id]
    }

    pub fn vertex_count(&self) -> usize {
        self.classes.len()
    }

    /// Ids of `a_1 .. a_{q-1}` in order.
    pub fn a_side(&self) -> Vec<VertexId> {
        (1..self.q).map(|i| self.ids[&BsVertex::A { i }]).collect()
    }

    /// Ids of `q_1 .. q_{p-1}` in order.
    pub fn q_side(&self) -> Vec<VertexId> {
        (1..self.p).map(|j| self.ids[&BsVertex::Q { j }]).collect()
    }

    /// Hub index (the `j` of `q_j`) a subdivision vertex attaches to.
    fn hub(&self, v: BsVertex) -> Option<usize> {
        match v {
            BsVertex::C { nu, .. } => Some(nu),
            BsVertex::B { mu, .. } => Some(self.half() + mu),
            BsVertex::S { .. } => Some(1),
            _ => None,
        }
    }
}

fn check_primes(p: u64, q: u64) -> Result<(usize, usize), ConstructionError> {
    if p < q && is_prime(p) && is_prime(q) {
        Ok((p as usize, q as usize))
    } else {
        Err(ConstructionError::NotDistinctPrimes { p, q })
    }
}

/// Builds `BS(Γ(Z_pq))` with the canonical labelling. The underlying graph
/// is the barycentric subdivision of the zero-divisor graph; the labelling
/// assigns `a_i` to residue `i*p`, `q_j` to residue `j*q`, and names each
/// subdivision vertex after its endpoints.
pub fn build_labeled_bs(p: u64, q: u64) -> Result<(Graph, BsPartition), ConstructionError> {
    let (pu, qu) = check_primes(p, q)?;
    let modulus = Modulus::new(p * q).expect("pq >= 6");
    let zdg = zero_divisor_graph(modulus);
    let residues = zero_divisors(modulus);
    let id_of_residue: BTreeMap<u64, VertexId> = residues
        .iter()
        .enumerate()
        .map(|(id, &r)| (r, id))
        .collect();

    let (mut bs, edge_to_new) = zdg.barycentric_subdivision();
    let mut classes = vec![BsVertex::A { i: 0 }; bs.vertex_count()];
    let mut ids = BTreeMap::new();
    let half = (pu - 1) / 2;

    let mut assign = |v: BsVertex, id: VertexId, bs: &mut Graph| {
        classes[id] = v;
        ids.insert(v, id);
        bs.set_label(id, v.to_string()).expect("id in range");
    };

    let mut a_ids = vec![0; qu];
    let mut q_ids = vec![0; pu];
    for i in 1..qu {
        a_ids[i] = id_of_residue[&(i as u64 * p)];
        assign(BsVertex::A { i }, a_ids[i], &mut bs);
    }
    for j in 1..pu {
        q_ids[j] = id_of_residue[&(j as u64 * q)];
        assign(BsVertex::Q { j }, q_ids[j], &mut bs);
    }
    for i in 1..qu {
        for j in 1..pu {
            let key = (a_ids[i].min(q_ids[j]), a_ids[i].max(q_ids[j]));
            let w = edge_to_new[&key];
            let class = if pu == 2 {
                BsVertex::S { i }
            } else if j <= half {
                BsVertex::C { nu: j, i }
            } else {
                BsVertex::B { mu: j - half, i }
            };
            assign(class, w, &mut bs);
        }
    }

    Ok((
        bs,
        BsPartition {
            p: pu,
            q: qu,
            classes,
            ids,
        },
    ))
}

/// `BS(Γ(Z_n))` for any `n >= 2`, with the canonical partition labels
/// attached when `n` is a product of two distinct primes.
pub fn bs_of_zdg(m: Modulus) -> (Graph, Option<BsPartition>) {
    if let Some((p, q)) = crate::ring::semiprime_factors(m.get()) {
        let (g, part) = build_labeled_bs(p, q).expect("factors are distinct primes");
        (g, Some(part))
    } else {
        let (g, _) = zero_divisor_graph(m).barycentric_subdivision();
        (g, None)
    }
}

/// Parameter regimes with distinct dimension behaviour.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// `p = 2`: the subdivision is a spider tree.
    Tree,
    /// `p = 3`.
    PEqualsThree,
    /// `p >= 5`, `q >= 2p - 1`.
    Wide,
    /// `p >= 5`, `q = 2p - 3`.
    Boundary,
    /// `p >= 5`, `p + 1 < q <= 2p - 5`: only the strict lower bound is
    /// known; the exact value is open.
    StrictWindow,
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Regime::Tree => "p=2 (tree)",
            Regime::PEqualsThree => "p=3",
            Regime::Wide => "p>=5, q>=2p-1",
            Regime::Boundary => "p>=5, q=2p-3",
            Regime::StrictWindow => "p>=5, p+1<q<2p-1",
        })
    }
}

impl Regime {
    pub fn classify(p: u64, q: u64) -> Result<Regime, ConstructionError> {
        let (pu, qu) = check_primes(p, q)?;
        Ok(if pu == 2 {
            Regime::Tree
        } else if pu == 3 {
            Regime::PEqualsThree
        } else if qu >= 2 * pu - 1 {
            Regime::Wide
        } else if qu == 2 * pu - 3 {
            Regime::Boundary
        } else {
            Regime::StrictWindow
        })
    }

    /// True when a closed-form resolving set and coordinate table exist.
    pub fn has_construction(self) -> bool {
        matches!(
            self,
            Regime::PEqualsThree | Regime::Wide | Regime::Boundary
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PredictionKind {
    Exact(usize),
    StrictlyGreaterThan(usize),
    /// Not constructed for any valid `p < q`; kept for API completeness.
    Open,
}

/// Piecewise dimension value for `BS(Γ(Z_pq))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DimensionPrediction {
    pub kind: PredictionKind,
    pub regime: Regime,
}

pub fn predicted_dimension(p: u64, q: u64) -> Result<DimensionPrediction, ConstructionError> {
    let regime = Regime::classify(p, q)?;
    let qu = q as usize;
    let kind = match regime {
        Regime::Tree | Regime::PEqualsThree | Regime::Wide => PredictionKind::Exact(qu - 2),
        Regime::Boundary => PredictionKind::Exact(qu - 1),
        Regime::StrictWindow => PredictionKind::StrictlyGreaterThan(qu - 2),
    };
    Ok(DimensionPrediction { kind, regime })
}

/// The ordered landmark classes of the closed-form resolving set `E`.
///
/// - `p = 3`: `a_1, b^1_2, ..., b^1_{q-2}` (size `q - 2`);
/// - `p >= 5, q >= 2p-1`: `a_1`, the pairs `c^nu_{2nu}, c^nu_{2nu+1}` for
///   `nu = 1..h`, the pairs `b^mu_{p+2mu-1}, b^mu_{p+2mu}` for
///   `mu = 1..(p-5)/2`, and the run `b^{(p-3)/2}_i` for `i = 2p-4..q-2`
///   (size `q - 2`);
/// - `p >= 5, q = 2p-3`: the same with the final run extended to `q - 1`
///   (size `q - 1`).
///
/// Every landmark after `a_1` is a subdivision vertex whose subscript
/// equals its position in `E`.
pub fn landmark_classes(p: u64, q: u64) -> Result<Vec<BsVertex>, ConstructionError> {
    let regime = Regime::classify(p, q)?;
    let (pu, qu) = (p as usize, q as usize);
    let mut out = vec![BsVertex::A { i: 1 }];
    match regime {
        Regime::PEqualsThree => {
            out.extend((2..=qu - 2).map(|i| BsVertex::B { mu: 1, i }));
        }
        Regime::Wide | Regime::Boundary => {
            let half = (pu - 1) / 2;
            for nu in 1..=half {
                out.push(BsVertex::C { nu, i: 2 * nu });
                out.push(BsVertex::C { nu, i: 2 * nu + 1 });
            }
            for mu in 1..=(pu - 5) / 2 {
                out.push(BsVertex::B {
                    mu,
                    i: pu + 2 * mu - 1,
                });
                out.push(BsVertex::B { mu, i: pu + 2 * mu });
            }
            let tail_mu = (pu - 3) / 2;
            let tail_end = match regime {
                Regime::Wide => qu - 2,
                _ => qu - 1,
            };
            out.extend((2 * pu - 4..=tail_end).map(|i| BsVertex::B { mu: tail_mu, i }));
        }
        _ => return Err(ConstructionError::RegimeNotCovered { p, q }),
    }
    Ok(out)
}

/// The resolving set `E` as vertex ids of `part`'s graph.
pub fn canonical_resolving_set(
    p: u64,
    q: u64,
    part: &BsPartition,
) -> Result<Vec<VertexId>, ConstructionError> {
    landmark_classes(p, q)?
        .into_iter()
        .map(|v| part.id(v))
        .collect()
}

/// Where a predicted code comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CodeProvenance {
    /// One of the displayed per-family coordinate cases.
    DisplayedCase,
    /// Landmark vertex: 0 at its own position, the family pattern
    /// elsewhere, as in the worked `Z_77` tables.
    LandmarkPattern,
}

/// Formula-predicted metric code, independent of any BFS computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PredictedCode {
    pub code: MetricCode,
    pub provenance: CodeProvenance,
    /// Set where the displayed case carries a typographical index; the
    /// reading below follows the surrounding pattern, and verification
    /// reports such entries as flagged rather than silently corrected.
    pub note: Option<&'static str>,
}

/// 1-based code assembly.
struct CodeVec(Vec<u32>);

impl CodeVec {
    fn filled(len: usize, fill: u32) -> Self {
        CodeVec(vec![fill; len])
    }

    fn set(mut self, pos: usize, val: u32) -> Self {
        debug_assert!(pos >= 1 && pos <= self.0.len());
        self.0[pos - 1] = val;
        self
    }

    /// Sets positions `lo..=hi`; no-op when `lo > hi`.
    fn set_run(mut self, lo: usize, hi: usize, val: u32) -> Self {
        for pos in lo..=hi.min(self.0.len()) {
            if pos >= lo {
                self.0[pos - 1] = val;
            }
        }
        self
    }
}

const NOTE_P3_C1: &str =
    "displayed case c^1_1 (p=3) repeats its final index; read as one terminal 4";
const NOTE_BOUNDARY_TAIL: &str = "displayed tail cases for b^{(p-3)/2} (q=2p-3) list degenerate \
     index ranges; they collapse to a single 2 at the last position";
const NOTE_BOUNDARY_PAIRED: &str = "displayed case rho=2mu+p-2 for paired b-families (q=2p-3) \
     truncates its 4-run index; read as running up to the same-hub pair";

fn validate_class(part_p: usize, part_q: usize, v: BsVertex) -> Result<(), ConstructionError> {
    let half = (part_p - 1) / 2;
    let ok = match v {
        BsVertex::A { i } => (1..part_q).contains(&i),
        BsVertex::Q { j } => (1..part_p).contains(&j),
        BsVertex::C { nu, i } => part_p > 2 && (1..=half).contains(&nu) && (1..part_q).contains(&i),
        BsVertex::B { mu, i } => part_p > 2 && (1..=half).contains(&mu) && (1..part_q).contains(&i),
        BsVertex::S { i } => part_p == 2 && (1..part_q).contains(&i),
    };
    if ok {
        Ok(())
    } else {
        Err(ConstructionError::InvalidVertex(v.to_string()))
    }
}

/// The coordinate vector the displayed formulas assign to `v`, in the order
/// of [`landmark_classes`]. Landmarks get the 0-at-own-position pattern of
/// the worked example tables; every other vertex gets its family case.
pub fn predicted_code(p: u64, q: u64, v: BsVertex) -> Result<PredictedCode, ConstructionError> {
    let regime = Regime::classify(p, q)?;
    let (pu, qu) = (p as usize, q as usize);
    validate_class(pu, qu, v)?;
    if !regime.has_construction() {
        return Err(ConstructionError::RegimeNotCovered { p, q });
    }
    let landmarks = landmark_classes(p, q)?;
    let len = landmarks.len();
    let half = (pu - 1) / 2;
    let hub_of = |l: &BsVertex| -> Option<usize> {
        match *l {
            BsVertex::C { nu, .. } => Some(nu),
            BsVertex::B { mu, .. } => Some(half + mu),
            _ => None,
        }
    };

    // landmark: 0 at its own position, 2 at same-hub landmark positions
    if let Some(pos) = landmarks.iter().position(|&l| l == v) {
        let code = if pos == 0 {
            CodeVec::filled(len, 3).set(1, 0)
        } else {
            let hub = hub_of(&v);
            let mut c = CodeVec::filled(len, 4).set(1, 3).set(pos + 1, 0);
            for (k, l) in landmarks.iter().enumerate() {
                if k != pos && hub_of(l) == hub {
                    c = c.set(k + 1, 2);
                }
            }
            c
        };
        return Ok(PredictedCode {
            code: MetricCode(code.0),
            provenance: CodeProvenance::LandmarkPattern,
            note: None,
        });
    }

    let lead = |i: usize| if i == 1 { 1 } else { 3 };
    let (code, note): (CodeVec, Option<&'static str>) = match (regime, v) {
        // a_rho, 2 <= rho <= q-1: distance 4 to a_1, 3 to every subdivision
        // landmark except its own subscript (distance 1), which exists for
        // rho <= final landmark subscript
        (_, BsVertex::A { i }) => {
            let tail_end = if regime == Regime::Boundary { qu - 1 } else { qu - 2 };
            let mut c = CodeVec::filled(len, 3).set(1, 4);
            if (2..=tail_end).contains(&i) {
                c = c.set(i, 1);
            }
            (c, None)
        }
        // q_j: distance 2 to a_1, 1 at the positions of its own subdivision
        // landmarks, 3 elsewhere
        (_, BsVertex::Q { j }) => {
            let mut c = CodeVec::filled(len, 3).set(1, 2);
            for (k, l) in landmarks.iter().enumerate() {
                if hub_of(l) == Some(j) {
                    c = c.set(k + 1, 1);
                }
            }
            (c, None)
        }
        // p=3, b^1_rho for rho in {1, q-1}: same hub as every non-a_1
        // landmark, so 2 everywhere after the first coordinate
        (Regime::PEqualsThree, BsVertex::B { mu: 1, i }) => {
            (CodeVec::filled(len, 2).set(1, lead(i)), None)
        }
        // p=3, c^1_rho: cases rho = 1, 2, 3..q-3, q-2, q-1; 4s with the own
        // subscript at 2 when a landmark with that subscript exists
        (Regime::PEqualsThree, BsVertex::C { nu: 1, i }) => {
            let mut c = CodeVec::filled(len, 4).set(1, lead(i));
            if (2..=qu - 2).contains(&i) {
                c = c.set(i, 2);
            }
            let note = if i == 1 { Some(NOTE_P3_C1) } else { None };
            (c, note)
        }
        // c^nu_rho: cases rho = 1, 2, 3..2nu-2, 2nu-1, 2nu+2, 2nu+3..q-3,
        // q-2, q-1 (and q-1 carries an extra 2 when the tail reaches it):
        // 2 at the positions of the same-hub pair and at the own subscript
        (Regime::Wide | Regime::Boundary, BsVertex::C { nu, i }) => {
            let tail_end = if regime == Regime::Boundary { qu - 1 } else { qu - 2 };
            let mut c = CodeVec::filled(len, 4)
                .set(1, lead(i))
                .set(2 * nu, 2)
                .set(2 * nu + 1, 2);
            if (2..=tail_end).contains(&i) {
                c = c.set(i, 2);
            }
            (c, None)
        }
        (Regime::Wide | Regime::Boundary, BsVertex::B { mu, i }) => {
            let tail_end = if regime == Regime::Boundary { qu - 1 } else { qu - 2 };
            let tail_mu = (pu - 3) / 2;
            let last_mu = half;
            if mu == last_mu {
                // b^{(p-1)/2}: its hub carries no landmarks; cases rho = 1,
                // 2, 3..q-3, q-2, q-1
                let mut c = CodeVec::filled(len, 4).set(1, lead(i));
                if (2..=tail_end).contains(&i) {
                    c = c.set(i, 2);
                }
                (c, None)
            } else if mu == tail_mu {
                // b^{(p-3)/2}: hub of the tail run of landmarks
                let mut c = CodeVec::filled(len, 4)
                    .set(1, lead(i))
                    .set_run(2 * pu - 4, tail_end, 2);
                if (2..=2 * pu - 5).contains(&i) {
                    c = c.set(i, 2);
                }
                let note = (regime == Regime::Boundary).then_some(NOTE_BOUNDARY_TAIL);
                (c, note)
            } else {
                // paired b-families: same-hub landmark pair at positions
                // p+2mu-1, p+2mu; cases rho = 1, 2, 3..2mu+p-3, 2mu+p-2,
                // p+2mu+1, p+2mu+2..q-3, q-2, q-1
                let mut c = CodeVec::filled(len, 4)
                    .set(1, lead(i))
                    .set(pu + 2 * mu - 1, 2)
                    .set(pu + 2 * mu, 2);
                if (2..=tail_end).contains(&i) {
                    c = c.set(i, 2);
                }
                let note = (regime == Regime::Boundary && i == 2 * mu + pu - 2)
                    .then_some(NOTE_BOUNDARY_PAIRED);
                (c, note)
            }
        }
        _ => unreachable!("class validated against the regime"),
    };
    Ok(PredictedCode {
        code: MetricCode(code.0),
        provenance: CodeProvenance::DisplayedCase,
        note,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Skipped => "skipped",
        })
    }
}

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub status: CheckStatus,
    pub detail: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyMode {
    /// Construction, code tables, and certificate bounds only.
    Fast,
    /// Additionally confirm exact dimensions by exhaustive search where
    /// that is feasible at desk scale.
    Full,
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub p: u64,
    pub q: u64,
    pub regime: Regime,
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    fn push(&mut self, name: &'static str, ok: bool, detail: String) {
        self.checks.push(CheckResult {
            name,
            status: if ok { CheckStatus::Pass } else { CheckStatus::Fail },
            detail,
        });
    }

    fn skip(&mut self, name: &'static str, detail: String) {
        self.checks.push(CheckResult {
            name,
            status: CheckStatus::Skipped,
            detail,
        });
    }
}

/// Audits the labelled graph against the intended shape: class sizes,
/// degrees, and the exact endpoint wiring of every subdivision vertex.
fn audit_partition(g: &Graph, part: &BsPartition) -> Result<(), String> {
    let (p, q) = (part.p, part.q);
    if g.vertex_count() != p * q - 1 {
        return Err(format!(
            "expected {} vertices, found {}",
            p * q - 1,
            g.vertex_count()
        ));
    }
    if g.edge_count() != 2 * (p - 1) * (q - 1) {
        return Err(format!(
            "expected {} edges, found {}",
            2 * (p - 1) * (q - 1),
            g.edge_count()
        ));
    }
    if !g.is_connected() || !g.is_bipartite() {
        return Err("graph must be connected and bipartite".into());
    }
    for id in g.vertices() {
        let class = part.class(id);
        match class {
            BsVertex::A { i } => {
                if g.degree(id) != p - 1 {
                    return Err(format!("a_{i} has degree {}", g.degree(id)));
                }
            }
            BsVertex::Q { j } => {
                if g.degree(id) != q - 1 {
                    return Err(format!("q_{j} has degree {}", g.degree(id)));
                }
            }
            _ => {
                let i = match class {
                    BsVertex::C { i, .. } | BsVertex::B { i, .. } | BsVertex::S { i } => i,
                    _ => unreachable!(),
                };
                let hub = part.hub(class).expect("subdivision class");
                let expected = [
                    part.id(BsVertex::A { i }).map_err(|e| e.to_string())?,
                    part.id(BsVertex::Q { j: hub }).map_err(|e| e.to_string())?,
                ];
                let actual: Vec<VertexId> = g.neighbors(id).iter().copied().collect();
                let mut want = expected.to_vec();
                want.sort_unstable();
                if actual != want {
                    return Err(format!("{class} is not wired to a_{i} and q_{hub}"));
                }
            }
        }
    }
    Ok(())
}

/// Largest subset-scan workload (sum of `C(n, j)` for `j <= k`) the full
/// verification mode will attempt.
const EXHAUSTIVE_FEASIBLE_SETS: u64 = 2_000_000;

/// `sum_{j=1..=k} C(n, j)`, or `None` once it exceeds `cap`.
fn scan_workload(n: usize, k: usize, cap: u64) -> Option<u64> {
    let mut total: u64 = 0;
    let mut binom: u64 = 1;
    for j in 1..=k.min(n) {
        binom = binom.checked_mul((n - j + 1) as u64)? / j as u64;
        total = total.checked_add(binom)?;
        if total > cap {
            return None;
        }
    }
    Some(total)
}

/// Runs every applicable check for the pair `(p, q)` and reports one row
/// per check. Failures carry a witness in the detail column.
pub fn run_verification(
    p: u64,
    q: u64,
    mode: VerifyMode,
) -> Result<VerificationReport, ConstructionError> {
    let regime = Regime::classify(p, q)?;
    let (pu, qu) = (p as usize, q as usize);
    let (g, part) = build_labeled_bs(p, q)?;
    let dm = g.distances();
    let mut report = VerificationReport {
        p,
        q,
        regime,
        checks: Vec::new(),
    };

    match audit_partition(&g, &part) {
        Ok(()) => report.push(
            "vertex_edge_counts",
            true,
            format!(
                "{} vertices, {} edges, bipartite, wiring audited",
                g.vertex_count(),
                g.edge_count()
            ),
        ),
        Err(e) => report.push("vertex_edge_counts", false, e),
    }

    // lower-bound families: members with pairwise disjoint closed
    // neighborhoods, equidistant from everything outside them
    let a_side = part.a_side();
    match equidistant_family_bound(&g, &a_side) {
        Ok(bound) => report.push(
            "family_a_lower_bound",
            bound == qu - 2,
            format!("equidistant a-family gives dim >= {bound}"),
        ),
        Err(e) => report.push("family_a_lower_bound", false, e.to_string()),
    }
    if pu >= 3 {
        let q_side = part.q_side();
        match equidistant_family_bound(&g, &q_side) {
            Ok(bound) => report.push(
                "family_q_lower_bound",
                bound == pu - 2,
                format!("equidistant q-family gives dim >= {bound}"),
            ),
            Err(e) => report.push("family_q_lower_bound", false, e.to_string()),
        }

        // of the p-1 hubs, exactly (p-1)/2 attach only to c-vertices and
        // exactly (p-1)/2 only to b-vertices
        let mut pure_c = 0;
        let mut pure_b = 0;
        let mut mixed = 0;
        for &qv in &part.q_side() {
            let mut has_c = false;
            let mut has_b = false;
            for &w in g.neighbors(qv) {
                match part.class(w) {
                    BsVertex::C { .. } => has_c = true,
                    BsVertex::B { .. } => has_b = true,
                    _ => mixed += 1,
                }
            }
            match (has_c, has_b) {
                (true, false) => pure_c += 1,
                (false, true) => pure_b += 1,
                _ => mixed += 1,
            }
        }
        let half = (pu - 1) / 2;
        report.push(
            "q_split",
            pure_c == half && pure_b == half && mixed == 0,
            format!("{pure_c} hubs see only c-vertices, {pure_b} only b-vertices"),
        );
    }

    if regime == Regime::Tree {
        let tree_dim = if g.is_path_graph() {
            Some(1)
        } else {
            g.tree_metric_dimension().ok()
        };
        report.push(
            "tree_structure",
            g.is_tree() && tree_dim == Some(qu - 2),
            format!("is_tree = {}, leg-formula dimension = {tree_dim:?}", g.is_tree()),
        );
    }

    if regime.has_construction() {
        let landmarks = canonical_resolving_set(p, q, &part)?;
        let expected_size = match regime {
            Regime::Boundary => qu - 1,
            _ => qu - 2,
        };
        match unresolved_pair(&dm, &landmarks) {
            Ok(None) => report.push(
                "resolving_set",
                landmarks.len() == expected_size,
                format!("E resolves with |E| = {}", landmarks.len()),
            ),
            Ok(Some((x, y))) => report.push(
                "resolving_set",
                false,
                format!(
                    "E leaves {} and {} unresolved",
                    g.display_name(x),
                    g.display_name(y)
                ),
            ),
            Err(e) => report.push("resolving_set", false, e.to_string()),
        }

        let independent = g.is_independent_set(&landmarks).expect("ids valid");
        report.push(
            "independent_set",
            independent,
            if independent {
                "E induces no edges".into()
            } else {
                "E contains adjacent landmarks".into()
            },
        );

        let mut mismatches = Vec::new();
        let mut displayed = 0usize;
        let mut landmark_pattern = 0usize;
        let mut notes = 0usize;
        for id in g.vertices() {
            let class = part.class(id);
            let predicted = predicted_code(p, q, class)?;
            match predicted.provenance {
                CodeProvenance::DisplayedCase => displayed += 1,
                CodeProvenance::LandmarkPattern => landmark_pattern += 1,
            }
            if predicted.note.is_some() {
                notes += 1;
            }
            let actual = metric_code(&dm, id, &landmarks).expect("ids valid");
            if predicted.code != actual {
                mismatches.push(format!("{class}: predicted {} vs {actual}", predicted.code));
            }
        }
        if mismatches.is_empty() {
            report.push(
                "code_tables",
                true,
                format!(
                    "all {} codes match ({displayed} displayed cases, {landmark_pattern} \
                     landmark patterns, {notes} flagged readings)",
                    g.vertex_count()
                ),
            );
        } else {
            report.push("code_tables", false, mismatches.join("; "));
        }
    }

    let prediction = predicted_dimension(p, q)?;
    match prediction.kind {
        PredictionKind::Exact(d) => {
            // certificate route first: matching lower bound and construction
            let lower = equidistant_family_bound(&g, &part.a_side()).ok();
            let upper = match regime {
                Regime::Tree => {
                    if g.is_path_graph() {
                        Some(1)
                    } else {
                        g.tree_metric_dimension().ok()
                    }
                }
                _ => canonical_resolving_set(p, q, &part).ok().map(|e| e.len()),
            };
            let certified = match regime {
                // the tree formula is exact on its own; the a-family bound
                // corroborates it
                Regime::Tree => upper == Some(d),
                Regime::Boundary => false,
                _ => lower == Some(d) && upper == Some(d),
            };
            let feasible = scan_workload(g.vertex_count(), d, EXHAUSTIVE_FEASIBLE_SETS).is_some();
            if mode == VerifyMode::Full && feasible {
                let r = min_resolving_exhaustive(&g, d, DEFAULT_BUDGET)
                    .expect("graph is connected");
                let confirmed = r.exact && r.upper == d && !r.budget_exhausted;
                report.push(
                    "exact_dimension",
                    confirmed && (certified || regime == Regime::Boundary),
                    format!(
                        "exhaustive search over {} candidate sets confirms dim = {d}",
                        r.tested
                    ),
                );
            } else if certified {
                report.push(
                    "exact_dimension",
                    true,
                    match regime {
                        Regime::Tree => format!("leg formula and a-family certificate give dim = {d}"),
                        _ => format!("a-family certificate meets |E|: dim = {d}, no search needed"),
                    },
                );
            } else {
                // boundary regime without a feasible refutation scan
                report.skip(
                    "exact_dimension",
                    format!(
                        "certificate gives dim >= {}, construction gives dim <= {d}; \
                         refuting size {} is infeasible at desk scale and rests on the \
                         published case analysis",
                        qu - 2,
                        d - 1
                    ),
                );
            }
        }
        PredictionKind::StrictlyGreaterThan(d) => {
            let feasible = scan_workload(g.vertex_count(), d, EXHAUSTIVE_FEASIBLE_SETS).is_some();
            if mode == VerifyMode::Full && feasible {
                let r = min_resolving_exhaustive(&g, d, DEFAULT_BUDGET)
                    .expect("graph is connected");
                let strict = r.witness.as_ref().map(|w| w.len() > d).unwrap_or(true)
                    && r.lower > d
                    && !r.budget_exhausted;
                report.push(
                    "exact_dimension",
                    strict,
                    format!("no resolving set of size <= {d} exists (dim > {d})"),
                );
            } else {
                report.skip(
                    "exact_dimension",
                    format!(
                        "certificate gives dim >= {d}; the strict inequality dim > {d} \
                         is not machine-checked at this size"
                    ),
                );
            }
        }
        PredictionKind::Open => {
            report.skip("exact_dimension", "no predicted value in this regime".into());
        }
    }

    // idim: where E exists it is independent and matches the exact
    // dimension, so the independent variant needs no separate search
    if regime.has_construction() && mode == VerifyMode::Full {
        let landmarks = canonical_resolving_set(p, q, &part)?;
        let d = landmarks.len();
        let feasible = scan_workload(g.vertex_count(), d, 200_000).is_some();
        if feasible {
            match resolving::independent_min_resolving(&g, d, DEFAULT_BUDGET) {
                Ok(r) => report.push(
                    "independent_dimension",
                    r.exact && r.upper == d,
                    format!("independent search confirms idim = {}", r.upper),
                ),
                Err(e) => report.push("independent_dimension", false, e.to_string()),
            }
        } else {
            report.skip(
                "independent_dimension",
                format!(
                    "independent E of size {d} and dim = {d} give idim = {d}; \
                     direct search skipped at this size"
                ),
            );
        }
    }

    Ok(report)
}

//! Resolving sets and exact metric dimension.
//!
//! A landmark set resolves a graph when every vertex gets a distinct vector
//! of distances to the landmarks. The solvers here reduce minimisation to a
//! set-cover problem over vertex pairs: vertex `a` covers the pair `{x, y}`
//! iff `d(a, x) != d(a, y)`. Cover sets are precomputed as bitsets once per
//! graph, so subset scans are a handful of word ORs per candidate.
//!
//! Disconnected input is rejected up front; with unreachable sentinels in
//! the codes the notion of metric dimension used here is not defined.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::graph::{DistanceMatrix, Graph, GraphError, VertexId};

/// Default search budget: candidate sets tested (exhaustive) or nodes
/// expanded (branch and bound).
pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolveError {
    #[error("graph is disconnected; metric dimension is not defined here")]
    Disconnected,
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("landmark set is empty")]
    EmptyLandmarkSet,
    #[error("expected two distinct vertices, got {v} twice")]
    IdenticalPair { v: VertexId },
    #[error("set {{{x}, {y}}} does not resolve the graph")]
    NotResolving { x: VertexId, y: VertexId },
    #[error("family members {a} and {b} have intersecting closed neighborhoods (share {shared})")]
    FamilyNotDisjoint {
        a: VertexId,
        b: VertexId,
        shared: VertexId,
    },
    #[error("family members {a} and {b} are not equidistant from {witness}")]
    FamilyNotEquidistant {
        a: VertexId,
        b: VertexId,
        witness: VertexId,
    },
    #[error("family is empty")]
    EmptyFamily,
    #[error("search budget exhausted; all sets of size < {refuted_below} are refuted")]
    BudgetExhausted { refuted_below: usize },
    #[error("no independent resolving set exists (no independent set of size {at_size})")]
    NoIndependentResolvingSet { at_size: usize },
    #[error("no independent resolving set of size <= {k_max} found")]
    NotFoundWithinLimit { k_max: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Distance vector of one vertex to an ordered landmark list.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MetricCode(pub Vec<u32>);

impl fmt::Display for MetricCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

/// The distance vector of `v` in landmark order.
pub fn metric_code(
    dm: &DistanceMatrix,
    v: VertexId,
    landmarks: &[VertexId],
) -> Result<MetricCode, SolveError> {
    dm.check_vertex(v)?;
    for &a in landmarks {
        dm.check_vertex(a)?;
    }
    Ok(MetricCode(landmarks.iter().map(|&a| dm.get(v, a)).collect()))
}

/// True iff `a` distinguishes `x` from `y` by distance.
pub fn resolves(
    dm: &DistanceMatrix,
    a: VertexId,
    x: VertexId,
    y: VertexId,
) -> Result<bool, SolveError> {
    dm.check_vertex(a)?;
    dm.check_vertex(x)?;
    dm.check_vertex(y)?;
    if x == y {
        return Err(SolveError::IdenticalPair { v: x });
    }
    Ok(dm.get(a, x) != dm.get(a, y))
}

/// Some pair of vertices with equal codes w.r.t. `set`, or `None` when `set`
/// is resolving.
pub fn unresolved_pair(
    dm: &DistanceMatrix,
    set: &[VertexId],
) -> Result<Option<(VertexId, VertexId)>, SolveError> {
    if set.is_empty() {
        return Err(SolveError::EmptyLandmarkSet);
    }
    for &a in set {
        dm.check_vertex(a)?;
    }
    let n = dm.vertex_count();
    let mut order: Vec<VertexId> = (0..n).collect();
    let code = |v: VertexId| -> Vec<u32> { set.iter().map(|&a| dm.get(v, a)).collect() };
    order.sort_by_key(|&v| code(v));
    for w in order.windows(2) {
        if code(w[0]) == code(w[1]) {
            let (x, y) = (w[0].min(w[1]), w[0].max(w[1]));
            return Ok(Some((x, y)));
        }
    }
    Ok(None)
}

pub fn is_resolving(dm: &DistanceMatrix, set: &[VertexId]) -> Result<bool, SolveError> {
    Ok(unresolved_pair(dm, set)?.is_none())
}

/// An ordered landmark set together with the full code table that proves the
/// codes pairwise distinct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolvingCertificate {
    landmarks: Vec<VertexId>,
    codes: BTreeMap<VertexId, MetricCode>,
}

impl ResolvingCertificate {
    pub fn new(dm: &DistanceMatrix, landmarks: Vec<VertexId>) -> Result<Self, SolveError> {
        if let Some((x, y)) = unresolved_pair(dm, &landmarks)? {
            return Err(SolveError::NotResolving { x, y });
        }
        let codes = (0..dm.vertex_count())
            .map(|v| (v, metric_code(dm, v, &landmarks).expect("ids valid")))
            .collect();
        Ok(ResolvingCertificate { landmarks, codes })
    }

    pub fn landmarks(&self) -> &[VertexId] {
        &self.landmarks
    }

    pub fn codes(&self) -> &BTreeMap<VertexId, MetricCode> {
        &self.codes
    }

    /// `{"landmarks": [ids], "codes": {"id": [d1, ..., dk]}}`
    pub fn to_json(&self) -> serde_json::Value {
        let codes: serde_json::Map<String, serde_json::Value> = self
            .codes
            .iter()
            .map(|(v, c)| (v.to_string(), serde_json::json!(c.0)))
            .collect();
        serde_json::json!({ "landmarks": self.landmarks, "codes": codes })
    }
}

/// How a [`DimensionReport`] was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Exhaustive,
    BranchAndBound,
    CertificateConstruction,
    TreeFormula,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Exhaustive => "exhaustive",
            Method::BranchAndBound => "bnb",
            Method::CertificateConstruction => "certificate+construction",
            Method::TreeFormula => "tree-formula",
        })
    }
}

/// Bounds on the metric dimension, with a witness when one is known.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionReport {
    pub lower: usize,
    pub upper: usize,
    pub exact: bool,
    pub witness: Option<Vec<VertexId>>,
    pub method: Method,
    /// Candidate sets tested or nodes expanded.
    pub tested: u64,
    pub budget_exhausted: bool,
}

impl DimensionReport {
    fn exact_with(
        value: usize,
        witness: Vec<VertexId>,
        method: Method,
        tested: u64,
    ) -> Self {
        DimensionReport {
            lower: value,
            upper: value,
            exact: true,
            witness: Some(witness),
            method,
            tested,
            budget_exhausted: false,
        }
    }
}

/// Bitsets of covered vertex pairs, one row per vertex.
struct PairCovers {
    n: usize,
    words: usize,
    pair_count: usize,
    masks: Vec<u64>,
    full: Vec<u64>,
    offsets: Vec<usize>,
}

impl PairCovers {
    fn new(dm: &DistanceMatrix) -> Self {
        let n = dm.vertex_count();
        let pair_count = n * (n - 1) / 2;
        let words = pair_count.div_ceil(64).max(1);
        let mut offsets = vec![0usize; n];
        for x in 1..n {
            offsets[x] = offsets[x - 1] + (n - x);
        }
        let mut masks = vec![0u64; n * words];
        for a in 0..n {
            let row = a * words;
            let mut idx = 0;
            for x in 0..n {
                for y in x + 1..n {
                    if dm.get(a, x) != dm.get(a, y) {
                        masks[row + idx / 64] |= 1 << (idx % 64);
                    }
                    idx += 1;
                }
            }
        }
        let mut full = vec![0u64; words];
        for idx in 0..pair_count {
            full[idx / 64] |= 1 << (idx % 64);
        }
        PairCovers {
            n,
            words,
            pair_count,
            masks,
            full,
            offsets,
        }
    }

    fn mask(&self, v: VertexId) -> &[u64] {
        &self.masks[v * self.words..(v + 1) * self.words]
    }

    fn pair_of_index(&self, idx: usize) -> (VertexId, VertexId) {
        let x = self.offsets.partition_point(|&o| o <= idx) - 1;
        (x, x + 1 + (idx - self.offsets[x]))
    }

    fn covered_count(uncovered: &[u64]) -> usize {
        uncovered.iter().map(|w| w.count_ones() as usize).sum()
    }
}

fn or_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d |= s;
    }
}

fn prepare(g: &Graph) -> Result<(DistanceMatrix, PairCovers), SolveError> {
    if g.vertex_count() == 0 {
        return Err(SolveError::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(SolveError::Disconnected);
    }
    let dm = g.distances();
    let covers = PairCovers::new(&dm);
    Ok((dm, covers))
}

/// Resolving set built by repeatedly adding the vertex that covers the most
/// still-uncovered pairs (ties broken toward the lowest id).
pub fn greedy_upper_bound(g: &Graph) -> Result<Vec<VertexId>, SolveError> {
    let (_, covers) = prepare(g)?;
    let mut covered = vec![0u64; covers.words];
    let mut chosen = Vec::new();
    while PairCovers::covered_count(&covered) < covers.pair_count {
        let mut best = usize::MAX;
        let mut best_gain = 0usize;
        for v in 0..covers.n {
            let gain = covers
                .mask(v)
                .iter()
                .zip(&covered)
                .map(|(m, c)| (m & !c).count_ones() as usize)
                .sum();
            if gain > best_gain {
                best_gain = gain;
                best = v;
            }
        }
        debug_assert!(best != usize::MAX, "full vertex set always covers");
        chosen.push(best);
        let mask = covers.masks[best * covers.words..(best + 1) * covers.words].to_vec();
        or_into(&mut covered, &mask);
    }
    if chosen.is_empty() {
        // single-vertex graph: no pairs to cover, but a resolving set is nonempty
        chosen.push(0);
    }
    Ok(chosen)
}

/// Cheap dimension lower bound: no vertex covers more pairs than the best
/// single vertex, so at least `ceil(pairs / max_cover)` landmarks are
/// needed.
pub fn coverage_lower_bound(g: &Graph) -> Result<usize, SolveError> {
    let (_, covers) = prepare(g)?;
    if covers.pair_count == 0 {
        return Ok(1);
    }
    let max_cover = (0..covers.n)
        .map(|v| covers.mask(v).iter().map(|w| w.count_ones() as usize).sum::<usize>())
        .max()
        .unwrap_or(1);
    Ok(covers.pair_count.div_ceil(max_cover.max(1)))
}

/// Outcome of scanning every `k`-subset in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SizeScan {
    /// Lexicographically first resolving `k`-subset, if any.
    pub witness: Option<Vec<VertexId>>,
    /// Complete candidate sets tested.
    pub sets_tested: u64,
    /// False when the budget ran out before the layer finished.
    pub complete: bool,
}

fn scan_layer(
    covers: &PairCovers,
    k: usize,
    budget_left: &mut u64,
    tested: &mut u64,
) -> SizeScan {
    let n = covers.n;
    if k == 0 || k > n {
        return SizeScan {
            witness: None,
            sets_tested: 0,
            complete: true,
        };
    }
    let layer_start = *tested;
    let mut chosen: Vec<VertexId> = Vec::with_capacity(k);
    let mut prefix: Vec<Vec<u64>> = vec![vec![0; covers.words]; k + 1];

    fn rec(
        covers: &PairCovers,
        k: usize,
        start: usize,
        chosen: &mut Vec<VertexId>,
        prefix: &mut Vec<Vec<u64>>,
        budget_left: &mut u64,
        tested: &mut u64,
    ) -> Result<Option<Vec<VertexId>>, ()> {
        let depth = chosen.len();
        for v in start..=covers.n - (k - depth) {
            let (head, tail) = prefix.split_at_mut(depth + 1);
            tail[0].copy_from_slice(&head[depth]);
            or_into(&mut tail[0], covers.mask(v));
            chosen.push(v);
            if depth + 1 == k {
                if *budget_left == 0 {
                    chosen.pop();
                    return Err(());
                }
                *budget_left -= 1;
                *tested += 1;
                if prefix[depth + 1] == covers.full {
                    return Ok(Some(chosen.clone()));
                }
            } else {
                match rec(covers, k, v + 1, chosen, prefix, budget_left, tested) {
                    Ok(Some(w)) => return Ok(Some(w)),
                    Ok(None) => {}
                    Err(()) => {
                        chosen.pop();
                        return Err(());
                    }
                }
            }
            chosen.pop();
        }
        Ok(None)
    }

    match rec(covers, k, 0, &mut chosen, &mut prefix, budget_left, tested) {
        Ok(witness) => SizeScan {
            witness,
            sets_tested: *tested - layer_start,
            complete: true,
        },
        Err(()) => SizeScan {
            witness: None,
            sets_tested: *tested - layer_start,
            complete: false,
        },
    }
}

/// Scans every `k`-subset of vertices in lexicographic order, stopping at
/// the first resolving one. With no witness and `complete = true`, the count
/// equals `C(n, k)` and size `k` is refuted.
pub fn scan_subsets_of_size(g: &Graph, k: usize, budget: u64) -> Result<SizeScan, SolveError> {
    let (_, covers) = prepare(g)?;
    let mut budget_left = budget;
    let mut tested = 0;
    Ok(scan_layer(&covers, k, &mut budget_left, &mut tested))
}

/// Exact metric dimension by scanning subset sizes `1..=k_max` in order.
/// Returns the lexicographically smallest witness of minimum size. When the
/// budget runs out, bounds so far are reported with `exact = false` and a
/// greedy witness as the upper bound.
pub fn min_resolving_exhaustive(
    g: &Graph,
    k_max: usize,
    budget: u64,
) -> Result<DimensionReport, SolveError> {
    let (_, covers) = prepare(g)?;
    let mut budget_left = budget;
    let mut tested = 0u64;
    for k in 1..=k_max.min(covers.n) {
        let scan = scan_layer(&covers, k, &mut budget_left, &mut tested);
        if let Some(witness) = scan.witness {
            return Ok(DimensionReport::exact_with(
                k,
                witness,
                Method::Exhaustive,
                tested,
            ));
        }
        if !scan.complete {
            let witness = greedy_upper_bound(g)?;
            let upper = witness.len();
            return Ok(DimensionReport {
                lower: k,
                upper,
                exact: k == upper,
                witness: Some(witness),
                method: Method::Exhaustive,
                tested,
                budget_exhausted: true,
            });
        }
    }
    // every size up to k_max refuted
    let witness = greedy_upper_bound(g)?;
    let lower = k_max.min(covers.n) + 1;
    let upper = witness.len();
    Ok(DimensionReport {
        lower,
        upper,
        exact: lower == upper,
        witness: Some(witness),
        method: Method::Exhaustive,
        tested,
        budget_exhausted: false,
    })
}

/// Tuning knobs for [`min_resolving_bnb_with`].
#[derive(Debug, Clone)]
pub struct BnbOptions {
    pub budget: u64,
    /// Externally proven lower bound on the dimension (e.g. from
    /// [`equidistant_family_bound`]); the search stops as soon as the
    /// incumbent matches it.
    pub lower_bound_hint: usize,
    /// Known resolving set used as the initial incumbent instead of greedy.
    pub initial_incumbent: Option<Vec<VertexId>>,
}

impl Default for BnbOptions {
    fn default() -> Self {
        BnbOptions {
            budget: DEFAULT_BUDGET,
            lower_bound_hint: 1,
            initial_incumbent: None,
        }
    }
}

struct BnbSearch<'a> {
    covers: &'a PairCovers,
    /// Pair indices ordered by static coverer count, fewest first.
    pair_order: Vec<usize>,
    pair_coverers: Vec<Vec<VertexId>>,
    best: Vec<VertexId>,
    target_lower: usize,
    nodes: u64,
    budget: u64,
    exhausted: bool,
    done: bool,
}

impl BnbSearch<'_> {
    fn search(&mut self, chosen: &mut Vec<VertexId>, forbidden: &mut [bool], uncovered: &[u64]) {
        if self.done || self.exhausted {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
            return;
        }
        let remaining = PairCovers::covered_count(uncovered);
        if remaining == 0 {
            if chosen.len() < self.best.len() {
                self.best = chosen.clone();
                if self.best.len() <= self.target_lower {
                    self.done = true;
                }
            }
            return;
        }
        let mut max_gain = 0usize;
        for v in 0..self.covers.n {
            if forbidden[v] {
                continue;
            }
            let gain = self
                .covers
                .mask(v)
                .iter()
                .zip(uncovered)
                .map(|(m, u)| (m & u).count_ones() as usize)
                .sum();
            max_gain = max_gain.max(gain);
        }
        if max_gain == 0 {
            return;
        }
        if chosen.len() + remaining.div_ceil(max_gain) >= self.best.len() {
            return;
        }
        // branch on the uncovered pair with the fewest coverers (static order)
        let pair_idx = self
            .pair_order
            .iter()
            .copied()
            .find(|&idx| uncovered[idx / 64] >> (idx % 64) & 1 == 1)
            .expect("remaining > 0");
        let coverers = self.pair_coverers[pair_idx].clone();
        let mut newly_forbidden = Vec::new();
        for &v in &coverers {
            if forbidden[v] {
                continue;
            }
            let mut next_uncovered = uncovered.to_vec();
            for (u, m) in next_uncovered.iter_mut().zip(self.covers.mask(v)) {
                *u &= !m;
            }
            chosen.push(v);
            self.search(chosen, forbidden, &next_uncovered);
            chosen.pop();
            if self.done || self.exhausted {
                break;
            }
            // later branches assume v is excluded
            forbidden[v] = true;
            newly_forbidden.push(v);
        }
        for v in newly_forbidden {
            forbidden[v] = false;
        }
    }
}

/// Exact metric dimension by branch and bound over the pair-cover
/// formulation, with a greedy initial incumbent.
pub fn min_resolving_bnb(g: &Graph) -> Result<DimensionReport, SolveError> {
    min_resolving_bnb_with(g, &BnbOptions::default())
}

pub fn min_resolving_bnb_with(
    g: &Graph,
    opts: &BnbOptions,
) -> Result<DimensionReport, SolveError> {
    let (dm, covers) = prepare(g)?;
    let incumbent = match &opts.initial_incumbent {
        Some(set) => {
            if let Some((x, y)) = unresolved_pair(&dm, set)? {
                return Err(SolveError::NotResolving { x, y });
            }
            set.clone()
        }
        None => greedy_upper_bound(g)?,
    };

    let mut pair_coverers: Vec<Vec<VertexId>> = vec![Vec::new(); covers.pair_count];
    for (idx, coverers) in pair_coverers.iter_mut().enumerate() {
        let (x, y) = covers.pair_of_index(idx);
        for a in 0..covers.n {
            if dm.get(a, x) != dm.get(a, y) {
                coverers.push(a);
            }
        }
    }
    let mut pair_order: Vec<usize> = (0..covers.pair_count).collect();
    pair_order.sort_by_key(|&idx| (pair_coverers[idx].len(), idx));

    let max_static_gain = (0..covers.n)
        .map(|v| covers.mask(v).iter().map(|w| w.count_ones() as usize).sum())
        .max()
        .unwrap_or(0);
    let root_lower = if covers.pair_count == 0 {
        1
    } else {
        covers.pair_count.div_ceil(max_static_gain.max(1))
    };
    let target_lower = opts.lower_bound_hint.max(root_lower).max(1);

    let mut search = BnbSearch {
        covers: &covers,
        pair_order,
        pair_coverers,
        best: incumbent,
        target_lower,
        nodes: 0,
        budget: opts.budget,
        exhausted: false,
        done: false,
    };
    let mut chosen = Vec::new();
    let mut forbidden = vec![false; covers.n];
    if search.best.len() > target_lower {
        search.search(&mut chosen, &mut forbidden, &covers.full.clone());
    }

    let upper = search.best.len();
    if search.exhausted {
        let lower = target_lower.min(upper);
        Ok(DimensionReport {
            lower,
            upper,
            exact: lower == upper,
            witness: Some(search.best),
            method: Method::BranchAndBound,
            tested: search.nodes,
            budget_exhausted: true,
        })
    } else {
        Ok(DimensionReport::exact_with(
            upper,
            search.best,
            Method::BranchAndBound,
            search.nodes,
        ))
    }
}

/// Verifies that `family` members have pairwise disjoint closed
/// neighborhoods and that every vertex outside two members' closed
/// neighborhoods is equidistant from both; on success `|family| - 1` is a
/// valid lower bound on the metric dimension.
///
/// Any resolving set must intersect `N[u_i] ∪ N[u_j]` for each pair, since
/// every vertex outside both sees the pair at equal distances, and the
/// disjointness means one landmark can serve at most one member.
pub fn equidistant_family_bound(g: &Graph, family: &[VertexId]) -> Result<usize, SolveError> {
    if family.is_empty() {
        return Err(SolveError::EmptyFamily);
    }
    for &v in family {
        g.check_vertex(v)?;
    }
    for (i, &a) in family.iter().enumerate() {
        for &b in &family[i + 1..] {
            if a == b {
                return Err(SolveError::IdenticalPair { v: a });
            }
        }
    }
    let closed: Vec<Vec<VertexId>> = family
        .iter()
        .map(|&v| {
            let mut nb: Vec<VertexId> = g.neighbors(v).iter().copied().collect();
            nb.push(v);
            nb
        })
        .collect();
    for (i, &a) in family.iter().enumerate() {
        for (j, &b) in family.iter().enumerate().skip(i + 1) {
            if let Some(&shared) = closed[i].iter().find(|v| closed[j].contains(v)) {
                return Err(SolveError::FamilyNotDisjoint { a, b, shared });
            }
        }
    }
    let dm = g.distances();
    for (i, &a) in family.iter().enumerate() {
        for (j, &b) in family.iter().enumerate().skip(i + 1) {
            for x in 0..g.vertex_count() {
                if closed[i].contains(&x) || closed[j].contains(&x) {
                    continue;
                }
                if dm.get(a, x) != dm.get(b, x) {
                    return Err(SolveError::FamilyNotEquidistant { a, b, witness: x });
                }
            }
        }
    }
    Ok(family.len() - 1)
}

/// Minimum-size set that is simultaneously independent and resolving, by a
/// lexicographic scan restricted to independent subsets.
pub fn independent_min_resolving(
    g: &Graph,
    k_max: usize,
    budget: u64,
) -> Result<DimensionReport, SolveError> {
    let (_, covers) = prepare(g)?;
    let n = covers.n;
    let vertex_words = n.div_ceil(64).max(1);
    let mut adj_masks = vec![0u64; n * vertex_words];
    for v in 0..n {
        for &u in g.neighbors(v) {
            adj_masks[v * vertex_words + u / 64] |= 1 << (u % 64);
        }
    }
    let compatible = |v: VertexId, chosen_mask: &[u64]| -> bool {
        adj_masks[v * vertex_words..(v + 1) * vertex_words]
            .iter()
            .zip(chosen_mask)
            .all(|(a, c)| a & c == 0)
    };

    let mut budget_left = budget;
    let mut tested = 0u64;
    for k in 1..=k_max.min(n) {
        let mut chosen: Vec<VertexId> = Vec::with_capacity(k);
        let mut chosen_mask = vec![0u64; vertex_words];
        let mut prefix: Vec<Vec<u64>> = vec![vec![0; covers.words]; k + 1];
        let mut any_candidate = false;

        #[allow(clippy::too_many_arguments)]
        fn rec(
            covers: &PairCovers,
            compatible: &dyn Fn(VertexId, &[u64]) -> bool,
            k: usize,
            start: usize,
            chosen: &mut Vec<VertexId>,
            chosen_mask: &mut Vec<u64>,
            prefix: &mut Vec<Vec<u64>>,
            budget_left: &mut u64,
            tested: &mut u64,
            any_candidate: &mut bool,
        ) -> Result<Option<Vec<VertexId>>, SolveError> {
            let depth = chosen.len();
            for v in start..covers.n {
                if !compatible(v, chosen_mask) {
                    continue;
                }
                let (head, tail) = prefix.split_at_mut(depth + 1);
                tail[0].copy_from_slice(&head[depth]);
                or_into(&mut tail[0], covers.mask(v));
                chosen.push(v);
                chosen_mask[v / 64] |= 1 << (v % 64);
                let result = if depth + 1 == k {
                    *any_candidate = true;
                    if *budget_left == 0 {
                        chosen_mask[v / 64] &= !(1 << (v % 64));
                        chosen.pop();
                        return Err(SolveError::BudgetExhausted { refuted_below: k });
                    }
                    *budget_left -= 1;
                    *tested += 1;
                    if prefix[depth + 1] == covers.full {
                        Some(chosen.clone())
                    } else {
                        None
                    }
                } else {
                    rec(
                        covers,
                        compatible,
                        k,
                        v + 1,
                        chosen,
                        chosen_mask,
                        prefix,
                        budget_left,
                        tested,
                        any_candidate,
                    )
                    .map_err(|e| {
                        // unwind state before propagating
                        e
                    })?
                };
                chosen_mask[v / 64] &= !(1 << (v % 64));
                chosen.pop();
                if let Some(w) = result {
                    return Ok(Some(w));
                }
            }
            Ok(None)
        }

        match rec(
            &covers,
            &compatible,
            k,
            0,
            &mut chosen,
            &mut chosen_mask,
            &mut prefix,
            &mut budget_left,
            &mut tested,
            &mut any_candidate,
        ) {
            Ok(Some(witness)) => {
                return Ok(DimensionReport::exact_with(
                    k,
                    witness,
                    Method::Exhaustive,
                    tested,
                ));
            }
            Ok(None) => {
                if !any_candidate {
                    // no independent set of this size exists at all
                    return Err(SolveError::NoIndependentResolvingSet { at_size: k });
                }
            }
            Err(e) => return Err(e),
        }
    }
    Err(SolveError::NotFoundWithinLimit {
        k_max: k_max.min(n),
    })
}

/// Structural facts that hold for any 2-element metric basis: a unique
/// shortest path between the landmarks, landmark degrees at most 3, and
/// degree at most 5 for the path's internal vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Md2Diagnostics {
    pub unique_shortest_path: bool,
    pub endpoint_degrees_le_3: bool,
    /// `None` when the shortest path is not unique.
    pub internal_degrees_le_5: Option<bool>,
}

impl Md2Diagnostics {
    pub fn all_pass(&self) -> bool {
        self.unique_shortest_path
            && self.endpoint_degrees_le_3
            && self.internal_degrees_le_5 == Some(true)
    }
}

pub fn md2_diagnostics(
    g: &Graph,
    a: VertexId,
    b: VertexId,
) -> Result<Md2Diagnostics, SolveError> {
    if a == b {
        return Err(SolveError::IdenticalPair { v: a });
    }
    let dm = g.distances();
    if let Some((x, y)) = unresolved_pair(&dm, &[a, b])? {
        return Err(SolveError::NotResolving { x, y });
    }
    let n = g.vertex_count();

    // shortest-path multiplicity from a, over the BFS layer DAG
    let mut counts = vec![0u64; n];
    counts[a] = 1;
    let mut order: Vec<VertexId> = (0..n).collect();
    order.sort_by_key(|&v| dm.get(a, v));
    for &v in &order {
        if v == a || dm.is_unreachable(a, v) {
            continue;
        }
        let dv = dm.get(a, v);
        counts[v] = g
            .neighbors(v)
            .iter()
            .filter(|&&u| dm.get(a, u) + 1 == dv)
            .map(|&u| counts[u])
            .fold(0u64, u64::saturating_add);
    }
    let unique = counts[b] == 1;
    let endpoint_ok = g.degree(a) <= 3 && g.degree(b) <= 3;
    let internal_ok = if unique {
        let dab = dm.get(a, b);
        Some((0..n).all(|v| {
            v == a || v == b || dm.get(a, v) + dm.get(v, b) != dab || g.degree(v) <= 5
        }))
    } else {
        None
    };
    Ok(Md2Diagnostics {
        unique_shortest_path: unique,
        endpoint_degrees_le_3: endpoint_ok,
        internal_degrees_le_5: internal_ok,
    })
}

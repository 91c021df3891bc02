//! Random and exhaustive graph corpora, and a brute-force verifier that
//! checks the extended bound, the rigidity biconditional and the Steklov
//! operator invariants on every instance.

use std::collections::HashSet;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::boundary_quantities;
use crate::error::{Error, Result};
use crate::graph::BoundaryGraph;
use crate::json::serialize_ext;
use crate::rigidity::{assess, Checks, RigidityOptions};
use crate::spectral::{
    differential, dirichlet_energy, harmonic_extension, spectrum_of, steklov_system, BoundaryFunction,
};

/// Largest vertex count accepted by exhaustive enumeration.
pub const EXHAUSTIVE_MAX: usize = 7;

const RETRY_BUDGET: usize = 10_000;
const CHUNK: usize = 1 << 15;

/// Relative slack for `σ₂ ≥ bound`.
pub const BOUND_SLACK: f64 = 1e-9;
pub const GREEN_SLACK: f64 = 1e-9;
pub const KERNEL_SLACK: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Random,
    Exhaustive,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CorpusSpec {
    pub mode: Mode,
    pub n_max: usize,
    /// Number of graphs in random mode; ignored when exhaustive.
    pub samples: usize,
    pub weight_range: (f64, f64),
    pub measure_range: (f64, f64),
    pub seed: u64,
    pub unit_only: bool,
    /// Skip graphs isomorphic (respecting the boundary) to one already seen.
    /// Exhaustive mode only.
    pub dedup: bool,
    pub rigidity: RigidityOptions,
}

impl CorpusSpec {
    pub fn random(samples: usize, n_max: usize, seed: u64) -> Self {
        Self {
            mode: Mode::Random,
            n_max,
            samples,
            weight_range: (0.5, 2.0),
            measure_range: (0.5, 2.0),
            seed,
            unit_only: false,
            dedup: false,
            rigidity: RigidityOptions::default(),
        }
    }

    pub fn exhaustive(n_max: usize, unit_only: bool) -> Self {
        Self {
            mode: Mode::Exhaustive,
            samples: 0,
            unit_only,
            ..Self::random(0, n_max, 0)
        }
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidCorpus(msg));
        match self.mode {
            Mode::Exhaustive if !(2..=EXHAUSTIVE_MAX).contains(&self.n_max) => {
                return bad(format!(
                    "exhaustive mode needs 2 <= n_max <= {EXHAUSTIVE_MAX}, got {}",
                    self.n_max
                ))
            }
            Mode::Random if self.n_max < 2 => return bad(format!("n_max must be at least 2, got {}", self.n_max)),
            _ => {}
        }
        for (name, (lo, hi)) in [("weight", self.weight_range), ("measure", self.measure_range)] {
            if !(lo > 0.0 && hi >= lo && hi.is_finite()) {
                return bad(format!("{name} range [{lo}, {hi}] must be positive and ordered"));
            }
        }
        Ok(())
    }

    fn ranges(&self) -> ((f64, f64), (f64, f64)) {
        if self.unit_only {
            ((1.0, 1.0), (1.0, 1.0))
        } else {
            (self.weight_range, self.measure_range)
        }
    }
}

fn draw(rng: &mut impl Rng, (lo, hi): (f64, f64)) -> f64 {
    if lo == hi {
        lo
    } else {
        rng.gen_range(lo..=hi)
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// A connected random graph: edges present independently with
/// probability `edge_prob`, resampled until connected.
pub fn random_graph(
    n: usize,
    edge_prob: f64,
    weight_range: (f64, f64),
    measure_range: (f64, f64),
    boundary_size: usize,
    seed: u64,
) -> Result<BoundaryGraph> {
    if n < 2 || boundary_size < 1 || boundary_size > n {
        return Err(Error::InvalidCorpus(format!(
            "need n >= 2 and 1 <= boundary_size <= n, got n={n}, boundary_size={boundary_size}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RETRY_BUDGET {
        let mut parent: Vec<usize> = (0..n).collect();
        let mut pairs = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(edge_prob) {
                    pairs.push((u, v));
                    let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
                    parent[ru] = rv;
                }
            }
        }
        let root = find(&mut parent, 0);
        if (1..n).any(|x| find(&mut parent, x) != root) {
            continue;
        }
        let edges: Vec<_> = pairs
            .into_iter()
            .map(|(u, v)| (u, v, draw(&mut rng, weight_range)))
            .collect();
        let measures: Vec<f64> = (0..n).map(|_| draw(&mut rng, measure_range)).collect();
        let mut boundary = vec![false; n];
        for x in sample(&mut rng, n, boundary_size) {
            boundary[x] = true;
        }
        return BoundaryGraph::from_indexed(&measures, &boundary, &edges);
    }
    Err(Error::RetryBudgetExhausted {
        attempts: RETRY_BUDGET,
        edge_prob,
    })
}

/// A labelled graph on `n ≤ 7` vertices: bit `k` of `edges` is the `k`-th
/// pair `(i, j)`, `i < j`, in lexicographic order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Shape {
    pub n: usize,
    pub edges: u32,
    pub boundary: u8,
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
}

fn pair_count(n: usize) -> usize {
    n * (n - 1) / 2
}

fn mask_connected(n: usize, edges: u32) -> bool {
    let mut adj = [0u8; EXHAUSTIVE_MAX];
    for (k, (i, j)) in pairs(n).enumerate() {
        if edges >> k & 1 == 1 {
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
        }
    }
    let all = ((1u16 << n) - 1) as u8;
    let mut seen = 1u8;
    let mut frontier = 1u8;
    while frontier != 0 {
        let mut next = 0u8;
        for (x, &row) in adj.iter().enumerate().take(n) {
            if frontier >> x & 1 == 1 {
                next |= row;
            }
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen == all
}

impl Shape {
    pub fn graph(&self, weight_range: (f64, f64), measure_range: (f64, f64), rng: &mut impl Rng) -> BoundaryGraph {
        let edges: Vec<_> = pairs(self.n)
            .enumerate()
            .filter(|(k, _)| self.edges >> k & 1 == 1)
            .map(|(_, (i, j))| (i, j, draw(rng, weight_range)))
            .collect();
        let measures: Vec<f64> = (0..self.n).map(|_| draw(rng, measure_range)).collect();
        let boundary: Vec<bool> = (0..self.n).map(|x| self.boundary >> x & 1 == 1).collect();
        BoundaryGraph::from_indexed(&measures, &boundary, &edges).expect("enumerated shapes are valid")
    }

    /// Relabels the boundary onto `0..k` and the interior onto `k..n` in
    /// every possible way and keeps the smallest edge mask. Two shapes are
    /// isomorphic as graphs with boundary iff their keys agree.
    fn canonical(&self) -> (usize, u32, u32) {
        let n = self.n;
        let (bnd, int): (Vec<usize>, Vec<usize>) = (0..n).partition(|&x| self.boundary >> x & 1 == 1);
        let k = bnd.len();
        let index = |i: usize, j: usize| {
            let (i, j) = (i.min(j), i.max(j));
            i * (2 * n - i - 1) / 2 + (j - i - 1)
        };
        let edge_list: Vec<(usize, usize)> = pairs(n)
            .enumerate()
            .filter(|(e, _)| self.edges >> e & 1 == 1)
            .map(|(_, p)| p)
            .collect();
        let targets_b: Vec<usize> = (0..k).collect();
        let targets_i: Vec<usize> = (k..n).collect();
        let mut best = u32::MAX;
        let mut perm = vec![0usize; n];
        for pb in permutations(&targets_b) {
            for pi in permutations(&targets_i) {
                for (from, to) in bnd.iter().zip(&pb).chain(int.iter().zip(&pi)) {
                    perm[*from] = *to;
                }
                let mask = edge_list
                    .iter()
                    .fold(0u32, |m, &(i, j)| m | 1 << index(perm[i], perm[j]));
                best = best.min(mask);
            }
        }
        (n, k as u32, best)
    }
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

/// Every connected labelled graph on `2..=n_max` vertices crossed with every
/// boundary subset of size at least two, in deterministic order.
pub fn shapes(n_max: usize) -> Result<impl Iterator<Item = Shape>> {
    if !(2..=EXHAUSTIVE_MAX).contains(&n_max) {
        return Err(Error::InvalidCorpus(format!(
            "n_max must be in 2..={EXHAUSTIVE_MAX}, got {n_max}"
        )));
    }
    Ok((2..=n_max).flat_map(|n| {
        (0..1u32 << pair_count(n))
            .filter(move |&edges| mask_connected(n, edges))
            .flat_map(move |edges| {
                (0..1u16 << n).filter(|b| b.count_ones() >= 2).map(move |b| Shape {
                    n,
                    edges,
                    boundary: b as u8,
                })
            })
    }))
}

/// Stream of small graphs; see [`shapes`] for the order.
pub struct SmallGraphs {
    inner: Box<dyn Iterator<Item = Shape> + Send>,
    seen: Option<HashSet<(usize, u32, u32)>>,
    weight_range: (f64, f64),
    measure_range: (f64, f64),
    rng: ChaCha8Rng,
}

impl SmallGraphs {
    /// Keep only one representative per boundary-respecting isomorphism
    /// class.
    pub fn dedup(mut self) -> Self {
        self.seen = Some(HashSet::new());
        self
    }

    /// Random weights and measures instead of unit ones.
    pub fn weighted(mut self, weight_range: (f64, f64), measure_range: (f64, f64), seed: u64) -> Self {
        self.weight_range = weight_range;
        self.measure_range = measure_range;
        self.rng = ChaCha8Rng::seed_from_u64(seed);
        self
    }

    fn next_shape(&mut self) -> Option<Shape> {
        loop {
            let shape = self.inner.next()?;
            match &mut self.seen {
                None => return Some(shape),
                Some(seen) => {
                    if seen.insert(shape.canonical()) {
                        return Some(shape);
                    }
                }
            }
        }
    }
}

impl Iterator for SmallGraphs {
    type Item = BoundaryGraph;

    fn next(&mut self) -> Option<BoundaryGraph> {
        let shape = self.next_shape()?;
        Some(shape.graph(self.weight_range, self.measure_range, &mut self.rng))
    }
}

/// Unit-weighted when `unit_only`; otherwise weights and measures are drawn
/// from `[0.5, 2]` with seed 0 (override with [`SmallGraphs::weighted`]).
pub fn enumerate_small(n_max: usize, unit_only: bool) -> Result<SmallGraphs> {
    let inner = Box::new(shapes(n_max)?);
    let graphs = SmallGraphs {
        inner,
        seen: None,
        weight_range: (1.0, 1.0),
        measure_range: (1.0, 1.0),
        rng: ChaCha8Rng::seed_from_u64(0),
    };
    Ok(if unit_only {
        graphs
    } else {
        graphs.weighted((0.5, 2.0), (0.5, 2.0), 0)
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ViolationRecord {
    pub index: u64,
    pub seed: u64,
    pub assertion: String,
    pub detail: String,
    #[serde(serialize_with = "serialize_ext")]
    pub sigma2: f64,
    #[serde(serialize_with = "serialize_ext")]
    pub bound_extended: f64,
    #[serde(serialize_with = "serialize_ext")]
    pub bound_general: f64,
    pub equality: Option<bool>,
    pub certified_equality: Option<bool>,
    pub graph: serde_json::Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CorpusReport {
    pub mode: Mode,
    pub seed: u64,
    pub checked: u64,
    pub violations: Vec<ViolationRecord>,
}

impl CorpusReport {
    /// One violation per line.
    pub fn to_json_lines(&self) -> String {
        self.violations
            .iter()
            .map(|v| serde_json::to_string(v).expect("violation serializes") + "\n")
            .collect()
    }

    pub fn summary(&self) -> serde_json::Value {
        serde_json::json!({
            "mode": self.mode,
            "seed": self.seed,
            "checked": self.checked,
            "violations": self.violations.len(),
        })
    }
}

pub fn verify_corpus(spec: &CorpusSpec) -> Result<CorpusReport> {
    verify_corpus_with(spec, &Checks::default())
}

pub fn verify_corpus_with(spec: &CorpusSpec, checks: &Checks) -> Result<CorpusReport> {
    let mut violations = Vec::new();
    let checked = verify_corpus_streaming(spec, checks, |v| violations.push(v))?;
    Ok(CorpusReport {
        mode: spec.mode,
        seed: spec.seed,
        checked,
        violations,
    })
}

/// Like [`verify_corpus_with`], but hands each violation to `sink` as soon
/// as its chunk finishes instead of collecting them. Returns the number of
/// instances checked. Violations arrive in index order.
pub fn verify_corpus_streaming(
    spec: &CorpusSpec,
    checks: &Checks,
    mut sink: impl FnMut(ViolationRecord),
) -> Result<u64> {
    spec.validate()?;
    let (weights, measures) = spec.ranges();
    let mut checked = 0u64;
    match spec.mode {
        Mode::Random => {
            let samples = spec.samples as u64;
            while checked < samples {
                let end = (checked + CHUNK as u64).min(samples);
                let found: Vec<ViolationRecord> = (checked..end)
                    .into_par_iter()
                    .flat_map_iter(|index| {
                        let mut rng = instance_rng(spec.seed, index);
                        let n = rng.gen_range(2..=spec.n_max);
                        let boundary_size = rng.gen_range(2..=n);
                        let lo = ((n as f64).ln() / n as f64).min(0.7);
                        let edge_prob = rng.gen_range(lo..=0.7);
                        let graph_seed = rng.gen();
                        match random_graph(n, edge_prob, weights, measures, boundary_size, graph_seed) {
                            Ok(g) => verify_instance(index, spec, &g, checks, &mut rng),
                            Err(e) => vec![error_record(index, spec.seed, "generation", e, serde_json::Value::Null)],
                        }
                    })
                    .collect();
                found.into_iter().for_each(&mut sink);
                checked = end;
            }
        }
        Mode::Exhaustive => {
            let mut stream = shapes(spec.n_max)?;
            let mut seen = HashSet::new();
            let mut index = 0u64;
            loop {
                let mut batch = Vec::with_capacity(CHUNK);
                for shape in stream.by_ref() {
                    if spec.dedup && !seen.insert(shape.canonical()) {
                        continue;
                    }
                    batch.push((index, shape));
                    index += 1;
                    if batch.len() == CHUNK {
                        break;
                    }
                }
                if batch.is_empty() {
                    break;
                }
                checked += batch.len() as u64;
                let found: Vec<ViolationRecord> = batch
                    .into_par_iter()
                    .flat_map_iter(|(index, shape)| {
                        let mut rng = instance_rng(spec.seed, index);
                        let g = shape.graph(weights, measures, &mut rng);
                        verify_instance(index, spec, &g, checks, &mut rng)
                    })
                    .collect();
                found.into_iter().for_each(&mut sink);
            }
        }
    }
    Ok(checked)
}

fn instance_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn error_record(index: u64, seed: u64, stage: &str, e: Error, graph: serde_json::Value) -> ViolationRecord {
    ViolationRecord {
        index,
        seed,
        assertion: "analysis_error".into(),
        detail: format!("{stage}: {e}"),
        sigma2: f64::NAN,
        bound_extended: f64::NAN,
        bound_general: f64::NAN,
        equality: None,
        certified_equality: None,
        graph,
    }
}

/// All assertions for one graph; an empty result means it passed.
pub fn verify_instance(
    index: u64,
    spec: &CorpusSpec,
    g: &BoundaryGraph,
    checks: &Checks,
    rng: &mut impl Rng,
) -> Vec<ViolationRecord> {
    let analysis = (|| {
        let system = steklov_system(g)?;
        let spectrum = spectrum_of(&system, false);
        let q = boundary_quantities(g)?;
        let sigma2 = spectrum.sigma2();
        let rigidity = assess(g, &q, sigma2, &spec.rigidity, checks)?;
        Ok::<_, Error>((system, spectrum, q, rigidity))
    })();
    let (system, spectrum, q, rigidity) = match analysis {
        Ok(a) => a,
        Err(e) => return vec![error_record(index, spec.seed, "analysis", e, g.to_json_value())],
    };
    let sigma2 = spectrum.sigma2();
    let bound_extended = (checks.bound)(&q);
    let bound_general = q.general();

    let mut failures: Vec<(&str, String)> = Vec::new();
    if sigma2 < bound_extended - BOUND_SLACK * sigma2.max(1.0) {
        failures.push(("bound_extended", format!("sigma2 {sigma2} < bound {bound_extended}")));
    }
    if rigidity.equality != rigidity.certified_equality {
        failures.push((
            "rigidity_biconditional",
            format!(
                "equality {} but certified {} (boundary {}, path {}, comb {})",
                rigidity.equality,
                rigidity.certified_equality,
                rigidity.cond_boundary,
                rigidity.cond_path,
                rigidity.cond_comb
            ),
        ));
    }
    if rigidity.certified_equality && q.vb != 2.0 * q.m0 {
        failures.push(("certified_volume", format!("VB {} != 2 m0 {}", q.vb, q.m0)));
    }
    if bound_extended < bound_general - 1e-15 * bound_general {
        failures.push((
            "bound_dominance",
            format!("extended {bound_extended} < general {bound_general}"),
        ));
    }
    if g.is_unit_weighted() && (bound_extended - q.unit()).abs() > 1e-15 {
        failures.push((
            "unit_specialization",
            format!("extended {bound_extended} != unit {}", q.unit()),
        ));
    }

    let scale = system.scale();
    let top = spectrum.eigenvalues.last().copied().unwrap_or(0.0).max(1.0);
    if system.constant_residual() > KERNEL_SLACK * scale {
        failures.push(("kernel_constants", format!("|S 1| = {}", system.constant_residual())));
    }
    if spectrum.eigenvalues[0].abs() > KERNEL_SLACK * top {
        failures.push(("sigma1_zero", format!("sigma1 = {}", spectrum.eigenvalues[0])));
    }
    if spectrum.eigenvalues.len() >= 2 && (sigma2.is_nan() || sigma2 <= 0.0) {
        failures.push(("sigma2_positive", format!("sigma2 = {sigma2}")));
    }

    let b = g.boundary().len();
    let f = BoundaryFunction::new(g, (0..b).map(|_| rng.gen_range(-1.0..1.0)).collect()).expect("length");
    let h = BoundaryFunction::new(g, (0..b).map(|_| rng.gen_range(-1.0..1.0)).collect()).expect("length");
    match green_residual(g, &system, &f, &h) {
        Ok((residual, tolerance)) if residual <= tolerance => {}
        Ok((residual, tolerance)) => failures.push(("green_symmetry", format!("residual {residual} > {tolerance}"))),
        Err(e) => failures.push(("green_symmetry", e.to_string())),
    }

    if failures.is_empty() {
        return Vec::new();
    }
    let graph = g.to_json_value();
    failures
        .into_iter()
        .map(|(assertion, detail)| ViolationRecord {
            index,
            seed: spec.seed,
            assertion: assertion.into(),
            detail,
            sigma2,
            bound_extended,
            bound_general,
            equality: Some(rigidity.equality),
            certified_equality: Some(rigidity.certified_equality),
            graph: graph.clone(),
        })
        .collect()
}

/// `|⟨Λf, h⟩_B - ⟨du_f, du_h⟩|` and the tolerance it is held to.
pub fn green_residual(
    g: &BoundaryGraph,
    system: &crate::spectral::SteklovSystem,
    f: &BoundaryFunction,
    h: &BoundaryFunction,
) -> Result<(f64, f64)> {
    let flux = system.inner(&system.apply(f), h);
    let du = differential(g, &harmonic_extension(g, f)?)?;
    let dh = differential(g, &harmonic_extension(g, h)?)?;
    let energy = dirichlet_energy(g, &du, &dh);
    let norm = |v: &BoundaryFunction| v.values().iter().map(|x| x * x).sum::<f64>().sqrt();
    let tolerance = GREEN_SLACK * system.scale().max(1.0) * norm(f).max(1.0) * norm(h).max(1.0);
    Ok(((flux - energy).abs(), tolerance))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_connected;

    #[test]
    fn k2_from_random_graph() {
        let g = random_graph(2, 1.0, (0.5, 2.0), (0.5, 2.0), 2, 7).unwrap();
        assert_eq!(g.edges().len(), 1);
        assert_eq!(g.boundary().len(), 2);
    }

    #[test]
    fn random_graph_is_deterministic() {
        let a = random_graph(12, 0.3, (0.5, 2.0), (0.5, 2.0), 4, 99).unwrap();
        let b = random_graph(12, 0.3, (0.5, 2.0), (0.5, 2.0), 4, 99).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, random_graph(12, 0.3, (0.5, 2.0), (0.5, 2.0), 4, 100).unwrap());
    }

    #[test]
    fn random_graph_invariants() {
        for seed in 0..200 {
            let g = random_graph(30, 0.2, (0.5, 2.0), (0.5, 2.0), 5, seed).unwrap();
            assert!(is_connected(&g));
            assert_eq!(g.boundary().len(), 5);
            assert!(g.edges().iter().all(|e| (0.5..=2.0).contains(&e.w)));
            assert!(g.measures().iter().all(|m| (0.5..=2.0).contains(m)));
        }
    }

    #[test]
    fn random_graph_errors() {
        assert!(matches!(
            random_graph(5, 0.0, (1.0, 1.0), (1.0, 1.0), 2, 0),
            Err(Error::RetryBudgetExhausted { .. })
        ));
        assert!(matches!(
            random_graph(1, 1.0, (1.0, 1.0), (1.0, 1.0), 1, 0),
            Err(Error::InvalidCorpus(_))
        ));
        assert!(matches!(
            random_graph(3, 1.0, (1.0, 1.0), (1.0, 1.0), 4, 0),
            Err(Error::InvalidCorpus(_))
        ));
    }

    #[test]
    fn enumerates_k2_only_for_two_vertices() {
        let all: Vec<_> = enumerate_small(2, true).unwrap().collect();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].edges().len(), 1);
        assert_eq!(all[0].boundary().len(), 2);
    }

    #[test]
    fn three_vertex_enumeration() {
        let graphs: Vec<_> = enumerate_small(3, true)
            .unwrap()
            .filter(|g| g.vertex_count() == 3)
            .collect();
        // 4 connected labelled graphs, 4 boundary subsets of size >= 2 each
        assert_eq!(graphs.len(), 16);
        let triangles = graphs.iter().filter(|g| g.edges().len() == 3).count();
        assert_eq!(triangles, 4);
    }

    #[test]
    fn rejects_out_of_range_n_max() {
        assert!(enumerate_small(1, true).is_err());
        assert!(enumerate_small(8, true).is_err());
        assert!(verify_corpus(&CorpusSpec::exhaustive(8, true)).is_err());
    }

    #[test]
    fn dedup_keeps_one_per_class() {
        // n = 3: path with boundary = both ends, path with boundary = end + middle,
        // path with all boundary, triangle with 2 or 3 boundary vertices.
        let n3 = enumerate_small(3, true)
            .unwrap()
            .dedup()
            .filter(|g| g.vertex_count() == 3)
            .count();
        assert_eq!(n3, 5);
    }

    #[test]
    fn weighted_enumeration_draws_from_ranges() {
        let graphs: Vec<_> = enumerate_small(3, false).unwrap().collect();
        assert!(graphs.iter().any(|g| !g.is_unit_weighted()));
        assert!(graphs
            .iter()
            .flat_map(|g| g.edges())
            .all(|e| (0.5..=2.0).contains(&e.w)));
    }

    #[test]
    fn small_exhaustive_run_is_clean() {
        let report = verify_corpus(&CorpusSpec::exhaustive(4, true)).unwrap();
        assert!(report.violations.is_empty(), "{}", report.to_json_lines());
        assert_eq!(report.checked, 1 + 16 + 38 * 11);
    }

    #[test]
    fn random_run_is_deterministic() {
        let spec = CorpusSpec::random(50, 10, 3);
        let a = verify_corpus(&spec).unwrap();
        assert_eq!(a, verify_corpus(&spec).unwrap());
        assert!(a.violations.is_empty(), "{}", a.to_json_lines());
        assert_eq!(a.checked, 50);
    }

    #[test]
    fn mutated_bound_is_caught() {
        let checks = Checks {
            bound: |q| {
                let mut q = *q;
                q.db += 1;
                q.extended()
            },
            ..Checks::default()
        };
        let report = verify_corpus_with(&CorpusSpec::exhaustive(3, true), &checks).unwrap();
        assert!(report
            .violations
            .iter()
            .any(|v| v.assertion == "rigidity_biconditional"));
        let line = report.to_json_lines();
        let first: serde_json::Value = serde_json::from_str(line.lines().next().unwrap()).unwrap();
        assert!(first["graph"]["vertices"].is_array());
    }
}

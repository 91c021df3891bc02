//! Equality in the extended bound and its structural certificate.
//!
//! `σ₂ = w₀ V_B / ((V_B - m₀)² d_B)` holds exactly when
//!
//! 1. `|B| = 2` and both boundary vertices carry measure `m₀`;
//! 2. the two boundary vertices are joined by a unique geodesic, whose
//!    edges all have weight `w₀`;
//! 3. the graph is a comb over that geodesic.
//!
//! Floating point cannot prove the equality, so a [`RigidityReport`] keeps
//! the numeric verdict and the structural certificate side by side.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bounds::{boundary_quantities, BoundaryQuantities};
use crate::error::{Error, Result};
use crate::graph::{all_geodesics, BoundaryGraph, GraphBuilder, VertexId, DEFAULT_GEODESIC_LIMIT};
use crate::spectral::{spectrum_of, steklov_system};

/// A simple path `v₀ ∼ v₁ ∼ … ∼ v_l` in a graph.
#[derive(Clone, Debug, PartialEq)]
pub struct PathWitness {
    pub vertices: Vec<VertexId>,
    pub edge_weights: Vec<f64>,
}

impl PathWitness {
    pub fn new(g: &BoundaryGraph, vertices: Vec<VertexId>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidPath("empty".into()));
        }
        let mut seen = vec![false; g.vertex_count()];
        for &x in &vertices {
            if x >= g.vertex_count() {
                return Err(Error::InvalidPath(format!("vertex {x} out of range")));
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidPath(format!("vertex '{}' repeats", g.label(x))));
            }
        }
        let edge_weights = vertices
            .windows(2)
            .map(|pair| {
                g.weight(pair[0], pair[1]).ok_or_else(|| {
                    Error::InvalidPath(format!(
                        "'{}' and '{}' are not adjacent",
                        g.label(pair[0]),
                        g.label(pair[1])
                    ))
                })
            })
            .collect::<Result<_>>()?;
        Ok(Self { vertices, edge_weights })
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.edge_weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edge_weights.is_empty()
    }
}

/// For each path vertex `v_i`, the vertex set of the component of
/// `G - E(P)` containing it.
#[derive(Clone, Debug, PartialEq)]
pub struct CombDecomposition {
    pub components: Vec<Vec<VertexId>>,
    pub is_comb: bool,
}

/// Removes the path edges and checks that no remaining component contains
/// two path vertices.
pub fn is_comb_over(g: &BoundaryGraph, path: &PathWitness) -> CombDecomposition {
    let n = g.vertex_count();
    let on_path = |x: VertexId, y: VertexId| {
        path.vertices
            .windows(2)
            .any(|p| (p[0] == x && p[1] == y) || (p[0] == y && p[1] == x))
    };
    let mut component = vec![usize::MAX; n];
    let mut components: Vec<Vec<VertexId>> = Vec::with_capacity(path.vertices.len());
    let mut is_comb = true;
    for (i, &start) in path.vertices.iter().enumerate() {
        if component[start] != usize::MAX {
            // Already reached from an earlier path vertex.
            is_comb = false;
            components.push(components[component[start]].clone());
            continue;
        }
        let mut members = vec![start];
        component[start] = i;
        let mut head = 0;
        while head < members.len() {
            let x = members[head];
            head += 1;
            for &(y, _) in g.neighbors(x) {
                if component[y] == usize::MAX && !on_path(x, y) {
                    component[y] = i;
                    members.push(y);
                }
            }
        }
        members.sort_unstable();
        components.push(members);
    }
    CombDecomposition { components, is_comb }
}

/// Swappable formulas used by [`check_rigidity_with`]; the defaults are the
/// real ones. Replacing either lets a verification run prove it can fail.
#[derive(Clone, Copy)]
pub struct Checks {
    pub bound: fn(&BoundaryQuantities) -> f64,
    pub comb: fn(&BoundaryGraph, &PathWitness) -> CombDecomposition,
}

impl Default for Checks {
    fn default() -> Self {
        Self {
            bound: BoundaryQuantities::extended,
            comb: is_comb_over,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RigidityOptions {
    /// Relative tolerance for the numeric equality verdict.
    pub tol: f64,
    /// Relative tolerance when comparing stored weights and measures;
    /// `None` compares them exactly.
    pub weight_tol: Option<f64>,
    pub geodesic_limit: usize,
}

impl Default for RigidityOptions {
    fn default() -> Self {
        Self {
            tol: 1e-8,
            weight_tol: None,
            geodesic_limit: DEFAULT_GEODESIC_LIMIT,
        }
    }
}

impl RigidityOptions {
    fn same(&self, a: f64, b: f64) -> bool {
        match self.weight_tol {
            None => a == b,
            Some(t) => (a - b).abs() <= t * a.abs().max(b.abs()),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RigidityReport {
    pub sigma2: f64,
    pub bound_extended: f64,
    pub equality: bool,
    pub cond_boundary: bool,
    pub cond_path: bool,
    pub cond_comb: bool,
    pub certified_equality: bool,
    pub witness: Option<PathWitness>,
    pub comb: Option<CombDecomposition>,
}

impl RigidityReport {
    pub fn to_json(&self, g: &BoundaryGraph) -> serde_json::Value {
        #[derive(Serialize)]
        struct Witness<'a> {
            vertices: Vec<&'a str>,
            edge_weights: &'a [f64],
        }
        #[derive(Serialize)]
        struct Comb<'a> {
            components: Vec<Vec<&'a str>>,
            is_comb: bool,
        }
        #[derive(Serialize)]
        struct Doc<'a> {
            sigma2: f64,
            bound_extended: f64,
            equality: bool,
            cond_boundary: bool,
            cond_path: bool,
            cond_comb: bool,
            certified_equality: bool,
            witness: Option<Witness<'a>>,
            comb: Option<Comb<'a>>,
        }
        let labels = |xs: &[VertexId]| xs.iter().map(|&x| g.label(x)).collect::<Vec<_>>();
        let doc = Doc {
            sigma2: self.sigma2,
            bound_extended: self.bound_extended,
            equality: self.equality,
            cond_boundary: self.cond_boundary,
            cond_path: self.cond_path,
            cond_comb: self.cond_comb,
            certified_equality: self.certified_equality,
            witness: self.witness.as_ref().map(|w| Witness {
                vertices: labels(&w.vertices),
                edge_weights: &w.edge_weights,
            }),
            comb: self.comb.as_ref().map(|c| Comb {
                components: c.components.iter().map(|comp| labels(comp)).collect(),
                is_comb: c.is_comb,
            }),
        };
        serde_json::to_value(doc).expect("report serializes")
    }
}

pub fn check_rigidity(g: &BoundaryGraph, opts: &RigidityOptions) -> Result<RigidityReport> {
    check_rigidity_with(g, opts, &Checks::default())
}

pub fn check_rigidity_with(g: &BoundaryGraph, opts: &RigidityOptions, checks: &Checks) -> Result<RigidityReport> {
    let q = boundary_quantities(g)?;
    let sigma2 = spectrum_of(&steklov_system(g)?, false).sigma2();
    assess(g, &q, sigma2, opts, checks)
}

/// Rigidity verdicts from precomputed boundary quantities and `σ₂`.
pub(crate) fn assess(
    g: &BoundaryGraph,
    q: &BoundaryQuantities,
    sigma2: f64,
    opts: &RigidityOptions,
    checks: &Checks,
) -> Result<RigidityReport> {
    let boundary = g.boundary();
    let bound_extended = (checks.bound)(q);
    let equality = (sigma2 - bound_extended).abs() <= opts.tol * sigma2.max(1.0);
    let cond_boundary = boundary.len() == 2 && boundary.iter().all(|&x| opts.same(g.measure(x), q.m0));

    let mut witness = None;
    let mut comb = None;
    let mut cond_path = false;
    let mut cond_comb = false;
    if boundary.len() == 2 {
        let mut geodesics = all_geodesics(g, boundary[0], boundary[1], opts.geodesic_limit)?;
        if geodesics.len() == 1 {
            let path = PathWitness::new(g, geodesics.pop().unwrap())?;
            cond_path = path.len() == q.db && path.edge_weights.iter().all(|&w| opts.same(w, q.w0));
            let decomposition = (checks.comb)(g, &path);
            cond_comb = decomposition.is_comb;
            witness = Some(path);
            comb = Some(decomposition);
        }
    }
    Ok(RigidityReport {
        sigma2,
        bound_extended,
        equality,
        cond_boundary,
        cond_path,
        cond_comb,
        certified_equality: cond_boundary && cond_path && cond_comb,
        witness,
        comb,
    })
}

/// A vertex of a tooth attached to path vertex `at` by an edge of weight `w`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Attachment {
    pub vertex: usize,
    pub at: usize,
    pub w: f64,
}

/// A connected weighted graph hung from a single path vertex.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Tooth {
    /// Measure of each tooth vertex.
    pub vertices: Vec<f64>,
    /// `(a, b, w)` between tooth vertices.
    #[serde(default)]
    pub edges: Vec<(usize, usize, f64)>,
    pub attach: Vec<Attachment>,
}

/// Recipe for random trees hung from every interior path vertex.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RandomTeeth {
    pub max_vertices: usize,
    /// Tooth weights are drawn from `[w_p, weight_factor·w_p]`.
    pub weight_factor: f64,
    pub measure_min: f64,
    pub measure_max: f64,
}

impl Default for RandomTeeth {
    fn default() -> Self {
        Self {
            max_vertices: 6,
            weight_factor: 10.0,
            measure_min: 0.1,
            measure_max: 10.0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum Teeth {
    Explicit(Vec<Tooth>),
    Random(RandomTeeth),
}

#[derive(Clone, Debug, PartialEq)]
pub struct CombSpec {
    pub path_len: usize,
    pub path_weight: f64,
    pub endpoint_mass: f64,
    pub teeth: Option<Teeth>,
}

/// Builds a comb over a path of `path_len` edges of weight `path_weight`
/// whose endpoints form the boundary. Interior path vertices have measure 1,
/// or random measures when the teeth are random.
pub fn generate_comb(spec: &CombSpec, seed: u64) -> Result<BoundaryGraph> {
    let wp = spec.path_weight;
    if spec.path_len < 1 {
        return Err(Error::InvalidComb("path length must be at least 1".into()));
    }
    if !(wp.is_finite() && wp > 0.0) {
        return Err(Error::InvalidComb("path weight must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let len = spec.path_len;
    let mut path_mass = vec![1.0; len + 1];
    let teeth = match &spec.teeth {
        None => Vec::new(),
        Some(Teeth::Explicit(teeth)) => teeth.clone(),
        Some(Teeth::Random(recipe)) => {
            if recipe.max_vertices < 1
                || recipe.weight_factor.is_nan()
                || recipe.weight_factor < 1.0
                || !(recipe.measure_min > 0.0 && recipe.measure_max >= recipe.measure_min)
            {
                return Err(Error::InvalidComb(format!("bad random teeth recipe {recipe:?}")));
            }
            let mut teeth = Vec::new();
            for (at, mass) in path_mass.iter_mut().enumerate().take(len).skip(1) {
                *mass = rng.gen_range(recipe.measure_min..=recipe.measure_max);
                teeth.push(random_tree(&mut rng, recipe, wp, at));
            }
            teeth
        }
    };
    path_mass[0] = spec.endpoint_mass;
    path_mass[len] = spec.endpoint_mass;

    let path_width = len.to_string().len();
    let path_label = |i: usize| format!("p{i:0path_width$}");
    let mut builder = GraphBuilder::new();
    for (i, &m) in path_mass.iter().enumerate() {
        builder.vertex(path_label(i), m, i == 0 || i == len);
    }
    for i in 1..=len {
        builder.edge(path_label(i - 1), path_label(i), wp);
    }

    let tooth_width = teeth.len().saturating_sub(1).to_string().len();
    for (t, tooth) in teeth.iter().enumerate() {
        validate_tooth(tooth, t, len, wp)?;
        let vertex_width = tooth.vertices.len().saturating_sub(1).to_string().len();
        let label = |k: usize| format!("t{t:0tooth_width$}_{k:0vertex_width$}");
        for (k, &m) in tooth.vertices.iter().enumerate() {
            builder.vertex(label(k), m, false);
        }
        for &(a, b, w) in &tooth.edges {
            builder.edge(label(a), label(b), w);
        }
        for a in &tooth.attach {
            builder.edge(label(a.vertex), path_label(a.at), a.w);
        }
    }
    builder.build()
}

fn validate_tooth(tooth: &Tooth, t: usize, len: usize, wp: f64) -> Result<()> {
    let fail = |msg: String| Err(Error::InvalidComb(format!("tooth {t}: {msg}")));
    let k = tooth.vertices.len();
    if k == 0 {
        return fail("no vertices".into());
    }
    let Some(first) = tooth.attach.first() else {
        return fail("not attached to the path".into());
    };
    if first.at > len {
        return fail(format!("path index {} out of range", first.at));
    }
    if tooth.attach.iter().any(|a| a.at != first.at) {
        return fail("touches two path vertices".into());
    }
    let weights = tooth.edges.iter().map(|e| e.2).chain(tooth.attach.iter().map(|a| a.w));
    for w in weights {
        if w < wp {
            return fail(format!("edge weight {w} below path weight {wp}"));
        }
    }
    let mut parent: Vec<usize> = (0..k).collect();
    fn root(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for &(a, b, _) in &tooth.edges {
        if a >= k || b >= k {
            return fail(format!("edge ({a}, {b}) out of range"));
        }
        let (ra, rb) = (root(&mut parent, a), root(&mut parent, b));
        parent[ra] = rb;
    }
    if tooth.attach.iter().any(|a| a.vertex >= k) {
        return fail("attachment vertex out of range".into());
    }
    let r0 = root(&mut parent, 0);
    if (1..k).any(|x| root(&mut parent, x) != r0) {
        return fail("not connected".into());
    }
    Ok(())
}

fn random_tree(rng: &mut ChaCha8Rng, recipe: &RandomTeeth, wp: f64, at: usize) -> Tooth {
    let k = rng.gen_range(1..=recipe.max_vertices);
    let weight = |rng: &mut ChaCha8Rng| rng.gen_range(wp..=recipe.weight_factor * wp);
    let vertices = (0..k)
        .map(|_| rng.gen_range(recipe.measure_min..=recipe.measure_max))
        .collect();
    let edges = (1..k).map(|b| (rng.gen_range(0..b), b, weight(rng))).collect();
    let attach = vec![Attachment {
        vertex: 0,
        at,
        w: weight(rng),
    }];
    Tooth {
        vertices,
        edges,
        attach,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star() -> BoundaryGraph {
        BoundaryGraph::unit(4, &[1, 2], &[(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    fn c4() -> BoundaryGraph {
        BoundaryGraph::unit(4, &[0, 2], &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    fn path(n: usize) -> BoundaryGraph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        BoundaryGraph::unit(n, &[0, n - 1], &edges).unwrap()
    }

    #[test]
    fn path_witness_validation() {
        let g = c4();
        assert!(PathWitness::new(&g, vec![0, 1, 2]).is_ok());
        assert!(matches!(PathWitness::new(&g, vec![0, 2]), Err(Error::InvalidPath(_))));
        assert!(matches!(
            PathWitness::new(&g, vec![0, 1, 0]),
            Err(Error::InvalidPath(_))
        ));
        assert!(matches!(PathWitness::new(&g, vec![]), Err(Error::InvalidPath(_))));
        assert!(matches!(PathWitness::new(&g, vec![9]), Err(Error::InvalidPath(_))));
    }

    #[test]
    fn comb_over_star() {
        let g = star();
        let p = PathWitness::new(&g, vec![1, 0, 2]).unwrap();
        let c = is_comb_over(&g, &p);
        assert!(c.is_comb);
        assert_eq!(c.components, vec![vec![1], vec![0, 3], vec![2]]);
    }

    #[test]
    fn c4_is_not_a_comb() {
        let g = c4();
        let c = is_comb_over(&g, &PathWitness::new(&g, vec![0, 1, 2]).unwrap());
        assert!(!c.is_comb);
        assert_eq!(c.components[0], c.components[2]);
    }

    #[test]
    fn path_is_a_comb_over_itself() {
        let g = path(5);
        let c = is_comb_over(&g, &PathWitness::new(&g, (0..5).collect()).unwrap());
        assert!(c.is_comb);
        assert!(c.components.iter().all(|comp| comp.len() == 1));
    }

    #[test]
    fn rigidity_on_paths() {
        for n in 2..8 {
            let r = check_rigidity(&path(n), &RigidityOptions::default()).unwrap();
            assert!(
                r.equality && r.cond_boundary && r.cond_path && r.cond_comb && r.certified_equality,
                "n={n}"
            );
        }
    }

    #[test]
    fn rigidity_on_c4() {
        let r = check_rigidity(&c4(), &RigidityOptions::default()).unwrap();
        assert!(!r.equality);
        assert!(!r.cond_path);
        assert!(r.cond_boundary);
        assert!(!r.certified_equality);
        assert!(r.witness.is_none());
    }

    #[test]
    fn rigidity_on_star() {
        let g = star();
        let r = check_rigidity(&g, &RigidityOptions::default()).unwrap();
        assert!(r.equality && r.certified_equality);
        assert_eq!(r.witness.as_ref().unwrap().vertices, vec![1, 0, 2]);
        let json = r.to_json(&g);
        assert_eq!(json["witness"]["vertices"], serde_json::json!(["1", "0", "2"]));
        assert_eq!(json["certified_equality"], true);
    }

    #[test]
    fn unequal_boundary_measures_fail_condition_one() {
        let g =
            BoundaryGraph::from_indexed(&[1.0, 1.0, 2.0], &[true, false, true], &[(0, 1, 1.0), (1, 2, 1.0)]).unwrap();
        let r = check_rigidity(&g, &RigidityOptions::default()).unwrap();
        assert!(!r.cond_boundary && r.cond_path && r.cond_comb);
        assert!(!r.equality);
    }

    #[test]
    fn heavy_path_edge_fails_condition_two() {
        // path 0-1-2 with a lighter tooth edge, so the path is not minimal
        let g = BoundaryGraph::from_indexed(
            &[1.0; 4],
            &[true, false, true, false],
            &[(0, 1, 1.0), (1, 2, 1.0), (1, 3, 0.5)],
        )
        .unwrap();
        let r = check_rigidity(&g, &RigidityOptions::default()).unwrap();
        assert!(r.cond_boundary && !r.cond_path && r.cond_comb);
        assert!(!r.equality);
    }

    #[test]
    fn weight_tolerance_relaxes_comparison() {
        let g = BoundaryGraph::from_indexed(
            &[1.0, 1.0, 1.0 + 1e-13],
            &[true, false, true],
            &[(0, 1, 1.0), (1, 2, 1.0)],
        )
        .unwrap();
        assert!(!check_rigidity(&g, &RigidityOptions::default()).unwrap().cond_boundary);
        let opts = RigidityOptions {
            weight_tol: Some(1e-12),
            ..Default::default()
        };
        assert!(check_rigidity(&g, &opts).unwrap().certified_equality);
    }

    #[test]
    fn three_boundary_vertices_never_certify() {
        let g = BoundaryGraph::unit(4, &[1, 2, 3], &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let r = check_rigidity(&g, &RigidityOptions::default()).unwrap();
        assert!(!r.cond_boundary && !r.certified_equality && !r.equality);
    }

    #[test]
    fn needs_two_boundary_vertices() {
        let g = BoundaryGraph::unit(2, &[0], &[(0, 1)]).unwrap();
        assert!(matches!(
            check_rigidity(&g, &RigidityOptions::default()),
            Err(Error::BoundaryTooSmall { size: 1 })
        ));
    }

    #[test]
    fn geodesic_limit_propagates() {
        let opts = RigidityOptions {
            geodesic_limit: 1,
            ..Default::default()
        };
        assert!(matches!(
            check_rigidity(&c4(), &opts),
            Err(Error::GeodesicLimitExceeded { .. })
        ));
    }

    #[test]
    fn generates_bare_path_and_star() {
        let spec = CombSpec {
            path_len: 2,
            path_weight: 1.0,
            endpoint_mass: 1.0,
            teeth: None,
        };
        let g = generate_comb(&spec, 0).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert!(g.is_unit_weighted());
        assert_eq!(g.boundary(), &[0, 2]);

        let tooth = Tooth {
            vertices: vec![1.0],
            edges: vec![],
            attach: vec![Attachment {
                vertex: 0,
                at: 1,
                w: 1.0,
            }],
        };
        let g = generate_comb(
            &CombSpec {
                teeth: Some(Teeth::Explicit(vec![tooth])),
                ..spec
            },
            0,
        )
        .unwrap();
        assert_eq!(g.edges().len(), 3);
        assert_eq!(g.neighbors(g.find("p1").unwrap()).len(), 3);
        assert!(
            check_rigidity(&g, &RigidityOptions::default())
                .unwrap()
                .certified_equality
        );
    }

    #[test]
    fn rejects_bad_teeth() {
        let spec = |tooth: Tooth| CombSpec {
            path_len: 3,
            path_weight: 2.0,
            endpoint_mass: 1.0,
            teeth: Some(Teeth::Explicit(vec![tooth])),
        };
        let light = Tooth {
            vertices: vec![1.0],
            edges: vec![],
            attach: vec![Attachment {
                vertex: 0,
                at: 1,
                w: 1.0,
            }],
        };
        let two_feet = Tooth {
            vertices: vec![1.0, 1.0],
            edges: vec![(0, 1, 3.0)],
            attach: vec![
                Attachment {
                    vertex: 0,
                    at: 1,
                    w: 2.0,
                },
                Attachment {
                    vertex: 1,
                    at: 2,
                    w: 2.0,
                },
            ],
        };
        let split = Tooth {
            vertices: vec![1.0, 1.0],
            edges: vec![],
            attach: vec![
                Attachment {
                    vertex: 0,
                    at: 1,
                    w: 2.0,
                },
                Attachment {
                    vertex: 1,
                    at: 1,
                    w: 2.0,
                },
            ],
        };
        for (tooth, needle) in [
            (light, "below path weight"),
            (two_feet, "two path vertices"),
            (split, "not connected"),
        ] {
            let msg = generate_comb(&spec(tooth), 0).unwrap_err().to_string();
            assert!(msg.contains(needle), "{msg}");
        }
    }

    #[test]
    fn random_comb_is_deterministic_and_certified() {
        let spec = CombSpec {
            path_len: 5,
            path_weight: 0.7,
            endpoint_mass: 2.5,
            teeth: Some(Teeth::Random(RandomTeeth::default())),
        };
        let a = generate_comb(&spec, 42).unwrap();
        assert_eq!(a, generate_comb(&spec, 42).unwrap());
        assert!(a.vertex_count() > 6);
        let r = check_rigidity(&a, &RigidityOptions::default()).unwrap();
        assert!(r.certified_equality && r.equality);
        let target = 2.0 * 0.7 / (2.5 * 5.0);
        assert!((r.sigma2 - target).abs() <= 1e-9 * target);
    }

    #[test]
    fn teeth_json_shapes() {
        let explicit: Teeth =
            serde_json::from_str(r#"{"explicit":[{"vertices":[1.0],"attach":[{"vertex":0,"at":1,"w":1.0}]}]}"#)
                .unwrap();
        assert!(matches!(explicit, Teeth::Explicit(ref t) if t.len() == 1));
        let random: Teeth =
            serde_json::from_str(r#"{"random":{"max_vertices":3,"weight_factor":2,"measure_min":1,"measure_max":2}}"#)
                .unwrap();
        assert!(matches!(random, Teeth::Random(RandomTeeth { max_vertices: 3, .. })));
    }
}

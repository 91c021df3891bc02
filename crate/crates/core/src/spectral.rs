//! Weighted Laplacian, harmonic extension and the Steklov
//! (Dirichlet-to-Neumann) operator.
//!
//! With `L` the unnormalized Laplacian (`L_xy = -w_xy`, zero row sums) and
//! vertices split into boundary `B` and interior `Ω`, the harmonic
//! extension of `f` solves `L_ΩΩ u_Ω = -L_ΩB f`, and the flux `m·Λf` is the
//! Schur complement `S f = (L_BB - L_BΩ L_ΩΩ⁻¹ L_ΩB) f`. Steklov eigenvalues
//! solve `S v = σ M_B v`, computed from the symmetric matrix
//! `M_B^{-1/2} S M_B^{-1/2}`.

use nalgebra::{Cholesky, DMatrix, DVector, Dyn, SymmetricEigen};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{is_connected, BoundaryGraph, VertexId};

/// Unnormalized Laplacian matrix plus vertex measures; `Δ = -M⁻¹L`.
#[derive(Clone, Debug)]
pub struct Laplacian {
    pub matrix: DMatrix<f64>,
    pub measure: DVector<f64>,
}

impl Laplacian {
    /// `Δu(x) = (1/m_x) Σ_y (u(y) - u(x)) w_xy`.
    pub fn apply_delta(&self, u: &VertexFunction) -> VertexFunction {
        let lu = &self.matrix * DVector::from_column_slice(&u.0);
        VertexFunction(lu.iter().zip(self.measure.iter()).map(|(l, m)| -l / m).collect())
    }
}

pub fn laplacian(g: &BoundaryGraph) -> Laplacian {
    let n = g.vertex_count();
    let mut matrix = DMatrix::zeros(n, n);
    for e in g.edges() {
        matrix[(e.u, e.v)] -= e.w;
        matrix[(e.v, e.u)] -= e.w;
        matrix[(e.u, e.u)] += e.w;
        matrix[(e.v, e.v)] += e.w;
    }
    Laplacian {
        matrix,
        measure: DVector::from_column_slice(g.measures()),
    }
}

/// A function on all vertices, indexed by [`VertexId`].
#[derive(Clone, Debug, PartialEq)]
pub struct VertexFunction(pub Vec<f64>);

/// A function on the boundary, stored in ascending boundary order.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundaryFunction {
    values: Vec<f64>,
}

impl BoundaryFunction {
    pub fn new(g: &BoundaryGraph, values: Vec<f64>) -> Result<Self> {
        if values.len() != g.boundary().len() {
            return Err(Error::BoundaryFunctionLength {
                expected: g.boundary().len(),
                got: values.len(),
            });
        }
        Ok(Self { values })
    }

    /// Builds from `(label, value)` pairs; the labels must be exactly `B`.
    pub fn from_labels<'a>(g: &BoundaryGraph, pairs: impl IntoIterator<Item = (&'a str, f64)>) -> Result<Self> {
        let mut values = vec![None; g.boundary().len()];
        for (label, value) in pairs {
            let x = g
                .find(label)
                .filter(|&x| g.is_boundary(x))
                .ok_or_else(|| Error::NotBoundary { label: label.into() })?;
            let slot = g.boundary().binary_search(&x).expect("boundary vertex");
            values[slot] = Some(value);
        }
        let values = values
            .iter()
            .zip(g.boundary())
            .map(|(v, &x)| {
                v.ok_or_else(|| Error::MissingBoundaryValue {
                    label: g.label(x).into(),
                })
            })
            .collect::<Result<_>>()?;
        Ok(Self { values })
    }

    pub fn constant(g: &BoundaryGraph, c: f64) -> Self {
        Self {
            values: vec![c; g.boundary().len()],
        }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }
}

/// Skew-symmetric edge function, stored as `α(u, v)` for each canonical
/// edge `u < v` in [`BoundaryGraph::edges`] order.
#[derive(Clone, Debug, PartialEq)]
pub struct EdgeDifferential {
    values: Vec<f64>,
}

impl EdgeDifferential {
    pub fn from_edge_values(g: &BoundaryGraph, values: Vec<f64>) -> Self {
        assert_eq!(values.len(), g.edges().len());
        Self { values }
    }

    /// `α(x, y)`; zero when `x` and `y` are not adjacent.
    pub fn get(&self, g: &BoundaryGraph, x: VertexId, y: VertexId) -> f64 {
        let (u, v, sign) = if x < y { (x, y, 1.0) } else { (y, x, -1.0) };
        match g.edges().binary_search_by_key(&(u, v), |e| (e.u, e.v)) {
            Ok(i) => sign * self.values[i],
            Err(_) => 0.0,
        }
    }

    pub fn edge_values(&self) -> &[f64] {
        &self.values
    }
}

/// `du(x, y) = u(y) - u(x)` on edges.
pub fn differential(g: &BoundaryGraph, u: &VertexFunction) -> Result<EdgeDifferential> {
    if u.0.len() != g.vertex_count() {
        return Err(Error::VertexFunctionLength {
            expected: g.vertex_count(),
            got: u.0.len(),
        });
    }
    Ok(EdgeDifferential {
        values: g.edges().iter().map(|e| u.0[e.v] - u.0[e.u]).collect(),
    })
}

/// Weighted edge inner product `Σ_{e} α(e) β(e) w_e`.
pub fn dirichlet_energy(g: &BoundaryGraph, alpha: &EdgeDifferential, beta: &EdgeDifferential) -> f64 {
    g.edges()
        .iter()
        .zip(alpha.values.iter().zip(&beta.values))
        .map(|(e, (a, b))| a * b * e.w)
        .sum()
}

fn check_steklov_preconditions(g: &BoundaryGraph) -> Result<()> {
    if g.boundary().is_empty() {
        return Err(Error::EmptyBoundary);
    }
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Factorized interior block `L_ΩΩ` together with the coupling `L_ΩB`.
struct InteriorSolver {
    factor: Option<Cholesky<f64, Dyn>>,
    coupling: DMatrix<f64>,
}

impl InteriorSolver {
    fn new(g: &BoundaryGraph, lap: &Laplacian) -> Result<Self> {
        let (interior, boundary) = (g.interior(), g.boundary());
        let coupling = lap.matrix.select_rows(interior).select_columns(boundary);
        let factor = if interior.is_empty() {
            None
        } else {
            let block = lap.matrix.select_rows(interior).select_columns(interior);
            Some(Cholesky::new(block).ok_or(Error::Factorization)?)
        };
        Ok(Self { factor, coupling })
    }

    /// Interior values `-L_ΩΩ⁻¹ L_ΩB F` for each column of `F`.
    fn solve(&self, boundary_values: &DMatrix<f64>) -> DMatrix<f64> {
        match &self.factor {
            Some(factor) => -factor.solve(&(&self.coupling * boundary_values)),
            None => DMatrix::zeros(0, boundary_values.ncols()),
        }
    }
}

/// The unique `u` with `u = f` on `B` and `Δu = 0` on `Ω`.
pub fn harmonic_extension(g: &BoundaryGraph, f: &BoundaryFunction) -> Result<VertexFunction> {
    check_steklov_preconditions(g)?;
    if f.values.len() != g.boundary().len() {
        return Err(Error::BoundaryFunctionLength {
            expected: g.boundary().len(),
            got: f.values.len(),
        });
    }
    let solver = InteriorSolver::new(g, &laplacian(g))?;
    let interior = solver.solve(&DMatrix::from_column_slice(f.values.len(), 1, &f.values));
    let mut u = vec![0.0; g.vertex_count()];
    for (&x, &value) in g.boundary().iter().zip(&f.values) {
        u[x] = value;
    }
    for (&x, &value) in g.interior().iter().zip(interior.iter()) {
        u[x] = value;
    }
    Ok(VertexFunction(u))
}

/// Matrix realization of the Steklov operator: `Λ = M_B⁻¹ S`.
#[derive(Clone, Debug)]
pub struct SteklovSystem {
    pub schur: DMatrix<f64>,
    pub boundary_mass: DVector<f64>,
    pub boundary_order: Vec<VertexId>,
    /// Largest absolute entry of the boundary block `L_BB`.
    pub boundary_block_scale: f64,
}

impl SteklovSystem {
    pub fn size(&self) -> usize {
        self.boundary_order.len()
    }

    /// `Λf`, the outward normal derivative of the harmonic extension of `f`.
    pub fn apply(&self, f: &BoundaryFunction) -> BoundaryFunction {
        let flux = &self.schur * DVector::from_column_slice(f.values());
        BoundaryFunction {
            values: flux.iter().zip(self.boundary_mass.iter()).map(|(s, m)| s / m).collect(),
        }
    }

    /// `⟨f, g⟩_B = Σ_{x∈B} f(x) g(x) m_x`.
    pub fn inner(&self, f: &BoundaryFunction, g: &BoundaryFunction) -> f64 {
        f.values()
            .iter()
            .zip(g.values())
            .zip(self.boundary_mass.iter())
            .map(|((a, b), m)| a * b * m)
            .sum()
    }

    /// Reference magnitude for tolerances: the largest absolute entry of
    /// `S` or of `L_BB`. `S` alone vanishes when `|B| = 1`.
    pub fn scale(&self) -> f64 {
        self.schur.amax().max(self.boundary_block_scale)
    }

    /// Largest absolute entry of `S·1`.
    pub fn constant_residual(&self) -> f64 {
        (&self.schur * DVector::from_element(self.size(), 1.0)).amax()
    }

    pub fn to_json(&self, g: &BoundaryGraph) -> serde_json::Value {
        #[derive(Serialize)]
        struct Doc<'a> {
            boundary_order: Vec<&'a str>,
            boundary_mass: Vec<f64>,
            schur: Vec<Vec<f64>>,
        }
        let doc = Doc {
            boundary_order: self.boundary_order.iter().map(|&x| g.label(x)).collect(),
            boundary_mass: self.boundary_mass.iter().copied().collect(),
            schur: self.schur.row_iter().map(|r| r.iter().copied().collect()).collect(),
        };
        serde_json::to_value(doc).expect("system serializes")
    }
}

pub fn steklov_system(g: &BoundaryGraph) -> Result<SteklovSystem> {
    check_steklov_preconditions(g)?;
    let lap = laplacian(g);
    let boundary = g.boundary();
    let mut schur = lap.matrix.select_rows(boundary).select_columns(boundary);
    let boundary_block_scale = schur.amax();
    if !g.interior().is_empty() {
        let solver = InteriorSolver::new(g, &lap)?;
        // S = L_BB + L_BΩ X with X = -L_ΩΩ⁻¹ L_ΩB
        let x = solver.solve(&DMatrix::identity(boundary.len(), boundary.len()));
        schur += solver.coupling.transpose() * x;
    }
    let symmetric = (&schur + schur.transpose()) * 0.5;
    Ok(SteklovSystem {
        schur: symmetric,
        boundary_mass: DVector::from_iterator(boundary.len(), boundary.iter().map(|&x| g.measure(x))),
        boundary_order: boundary.to_vec(),
        boundary_block_scale,
    })
}

/// Ascending Steklov eigenvalues, with eigenvectors orthonormal in the
/// boundary inner product `⟨·,·⟩_B`.
#[derive(Clone, Debug)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
    /// `eigenvectors[k]` belongs to `eigenvalues[k]`, in boundary order.
    pub eigenvectors: Option<Vec<Vec<f64>>>,
    pub boundary_order: Vec<VertexId>,
}

impl Spectrum {
    /// `σ_k` for `k ≥ 1`; `+∞` beyond `|B|`.
    pub fn sigma(&self, k: usize) -> f64 {
        assert!(k >= 1, "Steklov eigenvalues are numbered from 1");
        self.eigenvalues.get(k - 1).copied().unwrap_or(f64::INFINITY)
    }

    pub fn sigma2(&self) -> f64 {
        self.sigma(2)
    }

    pub fn to_json(&self, g: &BoundaryGraph) -> serde_json::Value {
        #[derive(Serialize)]
        struct Doc<'a> {
            boundary_order: Vec<&'a str>,
            eigenvalues: &'a [f64],
            #[serde(skip_serializing_if = "Option::is_none")]
            eigenvectors: Option<&'a Vec<Vec<f64>>>,
        }
        let doc = Doc {
            boundary_order: self.boundary_order.iter().map(|&x| g.label(x)).collect(),
            eigenvalues: &self.eigenvalues,
            eigenvectors: self.eigenvectors.as_ref(),
        };
        serde_json::to_value(doc).expect("spectrum serializes")
    }
}

/// Solves `S v = σ M_B v` through the symmetric reduction.
pub fn spectrum_of(system: &SteklovSystem, with_vectors: bool) -> Spectrum {
    let inv_sqrt: DVector<f64> = system.boundary_mass.map(|m| 1.0 / m.sqrt());
    let n = system.size();
    let reduced = DMatrix::from_fn(n, n, |i, j| system.schur[(i, j)] * inv_sqrt[i] * inv_sqrt[j]);
    let boundary_order = system.boundary_order.clone();
    let eig = refined_eigen(reduced);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let eigenvalues = order.iter().map(|&k| eig.eigenvalues[k] + 0.0).collect();
    if !with_vectors {
        return Spectrum {
            eigenvalues,
            eigenvectors: None,
            boundary_order,
        };
    }
    let eigenvectors = order
        .iter()
        .map(|&k| {
            eig.eigenvectors
                .column(k)
                .iter()
                .zip(inv_sqrt.iter())
                .map(|(y, s)| y * s)
                .collect()
        })
        .collect();
    Spectrum {
        eigenvalues,
        eigenvectors: Some(eigenvectors),
        boundary_order,
    }
}

/// Symmetric eigendecomposition: nalgebra's QR result, polished by cyclic
/// Jacobi rotations on the nearly diagonal `QᵀAQ` down to roundoff-level
/// residuals.
fn refined_eigen(a: DMatrix<f64>) -> SymmetricEigen<f64, Dyn> {
    let first = SymmetricEigen::new(a.clone());
    let mut q = first.eigenvectors;
    let mut d = q.transpose() * &a * &q;
    let n = d.nrows();
    let tiny = 1e-3 * f64::EPSILON * d.amax();
    for _ in 0..16 {
        let mut rotated = false;
        for p in 0..n {
            for r in p + 1..n {
                let apr = 0.5 * (d[(p, r)] + d[(r, p)]);
                if apr.abs() <= tiny {
                    continue;
                }
                rotated = true;
                let theta = (d[(r, r)] - d[(p, p)]) / (2.0 * apr);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (dkp, dkr) = (d[(k, p)], d[(k, r)]);
                    d[(k, p)] = c * dkp - s * dkr;
                    d[(k, r)] = s * dkp + c * dkr;
                }
                for k in 0..n {
                    let (dpk, drk) = (d[(p, k)], d[(r, k)]);
                    d[(p, k)] = c * dpk - s * drk;
                    d[(r, k)] = s * dpk + c * drk;
                }
                for k in 0..n {
                    let (qkp, qkr) = (q[(k, p)], q[(k, r)]);
                    q[(k, p)] = c * qkp - s * qkr;
                    q[(k, r)] = s * qkp + c * qkr;
                }
            }
        }
        if !rotated {
            break;
        }
    }
    SymmetricEigen {
        eigenvalues: d.diagonal(),
        eigenvectors: q,
    }
}

pub fn steklov_spectrum(g: &BoundaryGraph) -> Result<Spectrum> {
    Ok(spectrum_of(&steklov_system(g)?, true))
}

/// `⟨du_f, du_f⟩ / ⟨f, f⟩_B`.
pub fn rayleigh_quotient(g: &BoundaryGraph, f: &BoundaryFunction) -> Result<f64> {
    let norm: f64 = f
        .values()
        .iter()
        .zip(g.boundary())
        .map(|(v, &x)| v * v * g.measure(x))
        .sum();
    if norm == 0.0 {
        return Err(Error::ZeroBoundaryFunction);
    }
    let u = harmonic_extension(g, f)?;
    let du = differential(g, &u)?;
    Ok(dirichlet_energy(g, &du, &du) / norm)
}

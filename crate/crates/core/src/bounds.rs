//! Lower bounds for the first nonzero Steklov eigenvalue `σ₂`.
//!
//! All three bounds are built from four boundary quantities: the minimum
//! edge weight `w₀`, the minimum boundary measure `m₀`, the boundary volume
//! `V_B` and the boundary hop-diameter `d_B`.
//!
//! | bound      | value                          | hypothesis                         |
//! |------------|--------------------------------|------------------------------------|
//! | unit       | `|B| / ((|B|-1)² d_B)`         | unit weights, no boundary-boundary edge |
//! | general    | `w₀ / (d_B V_B)`               | none                               |
//! | extended   | `w₀ V_B / ((V_B - m₀)² d_B)`   | none                               |
//!
//! With fewer than two boundary vertices `σ₂ = +∞` and every bound is
//! vacuous; the bound functions then return `f64::INFINITY`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{hop_distance_matrix, is_connected, BoundaryGraph};
use crate::json::{serialize_ext, serialize_ext_opt};
use crate::spectral::{spectrum_of, steklov_system};

/// `(w₀, m₀, V_B, d_B)` together with `|B|`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct BoundaryQuantities {
    pub w0: f64,
    pub m0: f64,
    #[serde(rename = "VB")]
    pub vb: f64,
    #[serde(rename = "dB")]
    pub db: usize,
    pub boundary_size: usize,
}

impl BoundaryQuantities {
    pub fn extended(&self) -> f64 {
        let excess = self.vb - self.m0;
        self.w0 * self.vb / (excess * excess * self.db as f64)
    }

    pub fn general(&self) -> f64 {
        self.w0 / (self.db as f64 * self.vb)
    }

    pub fn unit(&self) -> f64 {
        let b = self.boundary_size as f64;
        b / ((b - 1.0) * (b - 1.0) * self.db as f64)
    }
}

pub fn boundary_quantities(g: &BoundaryGraph) -> Result<BoundaryQuantities> {
    let boundary = g.boundary();
    if boundary.len() < 2 {
        return Err(Error::BoundaryTooSmall { size: boundary.len() });
    }
    let hops = hop_distance_matrix(g)?;
    let db = boundary
        .iter()
        .flat_map(|&x| boundary.iter().map(move |&y| (x, y)))
        .map(|(x, y)| hops.get(x, y))
        .max()
        .unwrap_or(0);
    let measures = boundary.iter().map(|&x| g.measure(x));
    Ok(BoundaryQuantities {
        w0: g.edges().iter().map(|e| e.w).fold(f64::INFINITY, f64::min),
        m0: measures.clone().fold(f64::INFINITY, f64::min),
        vb: measures.sum(),
        db,
        boundary_size: boundary.len(),
    })
}

fn vacuous_or<F: Fn(&BoundaryQuantities) -> f64>(g: &BoundaryGraph, formula: F) -> Result<f64> {
    if g.boundary().len() < 2 {
        if !is_connected(g) {
            return Err(Error::Disconnected);
        }
        return Ok(f64::INFINITY);
    }
    Ok(formula(&boundary_quantities(g)?))
}

/// `w₀ V_B / ((V_B - m₀)² d_B)`.
pub fn bound_extended(g: &BoundaryGraph) -> Result<f64> {
    vacuous_or(g, BoundaryQuantities::extended)
}

/// `w₀ / (d_B V_B)`.
pub fn bound_general(g: &BoundaryGraph) -> Result<f64> {
    vacuous_or(g, BoundaryQuantities::general)
}

/// The unit-weight bound and whether its hypotheses hold for `g`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct UnitBound {
    #[serde(serialize_with = "serialize_ext")]
    pub value: f64,
    pub applicable: bool,
}

/// `|B| / ((|B|-1)² d_B)`, applicable only to unit-weighted graphs without
/// boundary-boundary edges.
pub fn bound_unit(g: &BoundaryGraph) -> Result<UnitBound> {
    let value = vacuous_or(g, BoundaryQuantities::unit)?;
    Ok(UnitBound {
        value,
        applicable: value.is_finite() && g.is_unit_weighted() && !g.has_boundary_edge(),
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    #[serde(serialize_with = "serialize_ext_opt")]
    pub w0: Option<f64>,
    pub m0: f64,
    #[serde(rename = "VB")]
    pub vb: f64,
    #[serde(rename = "dB")]
    pub db: usize,
    pub boundary_size: usize,
    pub bound_unit: UnitBound,
    #[serde(serialize_with = "serialize_ext")]
    pub bound_general: f64,
    #[serde(serialize_with = "serialize_ext")]
    pub bound_extended: f64,
    #[serde(serialize_with = "serialize_ext")]
    pub sigma2: f64,
    /// `σ₂ - bound_extended`; `+∞` when `|B| < 2`.
    #[serde(serialize_with = "serialize_ext")]
    pub gap_extended: f64,
}

impl BoundReport {
    /// True when `σ₂ ≥ bound_extended` up to `rel · max(1, σ₂)`.
    pub fn holds(&self, rel: f64) -> bool {
        !self.sigma2.is_finite() || self.gap_extended >= -rel * self.sigma2.max(1.0)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

pub fn bound_report(g: &BoundaryGraph) -> Result<BoundReport> {
    let sigma2 = spectrum_of(&steklov_system(g)?, false).sigma2();
    let boundary = g.boundary();
    let w0 = g.edges().iter().map(|e| e.w).reduce(f64::min);
    let m0 = boundary.iter().map(|&x| g.measure(x)).fold(f64::INFINITY, f64::min);
    let vb = boundary.iter().map(|&x| g.measure(x)).sum();
    if boundary.len() < 2 {
        return Ok(BoundReport {
            w0,
            m0,
            vb,
            db: 0,
            boundary_size: boundary.len(),
            bound_unit: UnitBound {
                value: f64::INFINITY,
                applicable: false,
            },
            bound_general: f64::INFINITY,
            bound_extended: f64::INFINITY,
            sigma2,
            gap_extended: f64::INFINITY,
        });
    }
    let q = boundary_quantities(g)?;
    Ok(report_from(g, &q, sigma2))
}

pub(crate) fn report_from(g: &BoundaryGraph, q: &BoundaryQuantities, sigma2: f64) -> BoundReport {
    let bound_extended = q.extended();
    BoundReport {
        w0: Some(q.w0),
        m0: q.m0,
        vb: q.vb,
        db: q.db,
        boundary_size: q.boundary_size,
        bound_unit: UnitBound {
            value: q.unit(),
            applicable: g.is_unit_weighted() && !g.has_boundary_edge(),
        },
        bound_general: q.general(),
        bound_extended,
        sigma2,
        gap_extended: sigma2 - bound_extended,
    }
}

//! Polygon and catalog JSON.
//!
//! Polygons are `{"vertices": [[x, y], ...]}`. The writer emits canonical
//! vertex order with 17 significant digits, so a written polygon reads back
//! to the same doubles.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::catalog::{CatalogEntry, Reference};
use crate::error::{Error, Result};
use crate::geom::{ConvexPolygon, Point};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolygonJson {
    pub vertices: Vec<[f64; 2]>,
}

/// The `meta` block of a serialized catalog entry.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CatalogMeta {
    pub name: String,
    pub params: BTreeMap<String, f64>,
    pub approx_error_area: f64,
    pub reference_values: BTreeMap<String, Reference>,
    pub landmarks: Vec<Point>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CatalogJson {
    pub vertices: Vec<[f64; 2]>,
    pub meta: CatalogMeta,
}

fn num(x: f64) -> String {
    format!("{x:.16e}")
}

fn vertices_json(poly: &ConvexPolygon) -> String {
    let mut out = String::from("[");
    for (i, v) in poly.vertices().iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        let _ = write!(out, "[{}, {}]", num(v.x), num(v.y));
    }
    out.push(']');
    out
}

/// Parses polygon JSON and canonicalizes it (convex hull, CCW, duplicate
/// and collinear points dropped).
pub fn read_polygon(text: &str) -> Result<ConvexPolygon> {
    let raw: PolygonJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let pts: Vec<Point> = raw.vertices.iter().map(|&[x, y]| Point::new(x, y)).collect();
    ConvexPolygon::from_points(&pts)
}

pub fn write_polygon(poly: &ConvexPolygon) -> String {
    format!("{{\"vertices\": {}}}\n", vertices_json(poly))
}

pub fn catalog_meta(entry: &CatalogEntry) -> CatalogMeta {
    CatalogMeta {
        name: entry.name.clone(),
        params: entry.params.clone(),
        approx_error_area: entry.approx_error_area,
        reference_values: entry.reference_values.clone(),
        landmarks: entry.landmarks.clone(),
    }
}

/// Polygon JSON with an extra `meta` block; readable by [`read_polygon`].
pub fn write_catalog_entry(entry: &CatalogEntry) -> String {
    let meta = serde_json::to_string_pretty(&catalog_meta(entry)).expect("meta serializes");
    let meta = meta.replace('\n', "\n  ");
    format!(
        "{{\n  \"vertices\": {},\n  \"meta\": {}\n}}\n",
        vertices_json(&entry.polygon),
        meta
    )
}

pub fn read_catalog_entry(text: &str) -> Result<(ConvexPolygon, CatalogMeta)> {
    let raw: CatalogJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let pts: Vec<Point> = raw.vertices.iter().map(|&[x, y]| Point::new(x, y)).collect();
    Ok((ConvexPolygon::from_points(&pts)?, raw.meta))
}

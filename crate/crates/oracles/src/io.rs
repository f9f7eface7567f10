//! Interchange formats. Polytopes, pairs, and indexes travel as JSON;
//! 2D polytopes can also be rendered as SVG for inspection. Serialization
//! is lossless for finite doubles (shortest round-trip float formatting).

use crate::gen::PairCertificate;
use polyapprox::geom::{HalfspacePolytope, Hyperplane, PointPolytope};
use polyapprox::minkowski::Representation;
use polyapprox::width_index::WidthIndex;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("parse error: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("schema error: {0}")]
    Schema(String),
    #[error("geometry error: {0}")]
    Geometry(#[from] polyapprox::Error),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HalfspaceJson {
    pub normal: Vec<f64>,
    pub offset: f64,
}

/// `{"dim": d, "points": [[...], ...]}` or
/// `{"dim": d, "halfspaces": [{"normal": [...], "offset": b}, ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolytopeJson {
    pub dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<Vec<f64>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub halfspaces: Option<Vec<HalfspaceJson>>,
}

impl PolytopeJson {
    pub fn from_points(p: &PointPolytope) -> Self {
        PolytopeJson {
            dim: p.dim(),
            points: Some(p.iter_points().map(|x| x.to_vec()).collect()),
            halfspaces: None,
        }
    }

    pub fn from_halfspaces(h: &HalfspacePolytope) -> Self {
        PolytopeJson {
            dim: h.dim,
            points: None,
            halfspaces: Some(
                h.halfspaces
                    .iter()
                    .map(|p| HalfspaceJson {
                        normal: p.normal.clone(),
                        offset: p.offset,
                    })
                    .collect(),
            ),
        }
    }

    pub fn from_representation(rep: &Representation) -> Self {
        match rep {
            Representation::Points(p) => Self::from_points(p),
            Representation::Halfspaces(h) => Self::from_halfspaces(h),
        }
    }

    pub fn into_representation(self) -> Result<Representation, IoError> {
        match (self.points, self.halfspaces) {
            (Some(pts), None) => Ok(Representation::Points(
                PointPolytope::from_points(&pts).map_err(IoError::Geometry)?,
            )),
            (None, Some(hs)) => {
                let halfspaces = hs
                    .into_iter()
                    .map(|h| Hyperplane::new(h.normal, h.offset))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(Representation::Halfspaces(HalfspacePolytope::new(
                    self.dim, halfspaces,
                )?))
            }
            (Some(_), Some(_)) => Err(IoError::Schema(
                "polytope file carries both 'points' and 'halfspaces'".into(),
            )),
            (None, None) => Err(IoError::Schema(
                "polytope file needs 'points' or 'halfspaces'".into(),
            )),
        }
    }

    pub fn into_points(self) -> Result<PointPolytope, IoError> {
        match self.into_representation()? {
            Representation::Points(p) => Ok(p),
            Representation::Halfspaces(_) => Err(IoError::Schema(
                "expected a point-representation polytope".into(),
            )),
        }
    }
}

/// Pair file for intersection instances, certificate included.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PairJson {
    pub a: PolytopeJson,
    pub b: PolytopeJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<PairCertificate>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BodyJson {
    pub center: Vec<f64>,
    pub generators: Vec<Vec<f64>>,
    pub lambda: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MapJson {
    pub matrix: Vec<Vec<f64>>,
    pub translation: Vec<f64>,
}

/// `{"eps", "kernel": [indices], "body": {...}, "map": {...}}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IndexJson {
    pub eps: f64,
    pub kernel: Vec<u32>,
    pub body: BodyJson,
    pub map: MapJson,
}

impl IndexJson {
    pub fn from_index(idx: &WidthIndex) -> Self {
        let d = idx.dim();
        let body = idx.body();
        let map = idx.own_map();
        IndexJson {
            eps: idx.eps(),
            kernel: idx.kernel_indices().to_vec(),
            body: BodyJson {
                center: body.center().to_vec(),
                generators: body.generators().map(|g| g.to_vec()).collect(),
                lambda: body.lambda(),
            },
            map: MapJson {
                matrix: (0..d)
                    .map(|i| map.matrix()[i * d..(i + 1) * d].to_vec())
                    .collect(),
                translation: map.translation().to_vec(),
            },
        }
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

pub fn parse_polytope(text: &str) -> Result<PolytopeJson, IoError> {
    Ok(serde_json::from_str(text)?)
}

pub fn parse_pair(text: &str) -> Result<PairJson, IoError> {
    Ok(serde_json::from_str(text)?)
}

/// SVG rendering of a 2D polytope: the hull polygon for point inputs, the
/// clipped cell for halfspace inputs.
pub fn svg_render_2d(rep: &Representation) -> Result<String, IoError> {
    let poly: Vec<(f64, f64)> = match rep {
        Representation::Points(p) => {
            if p.dim() != 2 {
                return Err(IoError::Schema("svg output is 2D only".into()));
            }
            let pts: Vec<(f64, f64)> =
                (0..p.len()).map(|i| (p.point(i)[0], p.point(i)[1])).collect();
            crate::minkexact::hull2d(&pts)
        }
        Representation::Halfspaces(h) => {
            if h.dim != 2 {
                return Err(IoError::Schema("svg output is 2D only".into()));
            }
            clip_halfplanes(&h.halfspaces)
        }
    };
    if poly.len() < 3 {
        return Err(IoError::Schema("degenerate 2D region".into()));
    }
    let (mut x0, mut y0, mut x1, mut y1) = (f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY);
    for &(x, y) in &poly {
        x0 = x0.min(x);
        y0 = y0.min(y);
        x1 = x1.max(x);
        y1 = y1.max(y);
    }
    let pad = 0.05 * ((x1 - x0).max(y1 - y0)).max(1e-9);
    let path: Vec<String> = poly
        .iter()
        .map(|&(x, y)| format!("{:.6},{:.6}", x, -y))
        .collect();
    Ok(format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{:.6} {:.6} {:.6} {:.6}\">\n  <polygon points=\"{}\" fill=\"#9ecae1\" stroke=\"#3182bd\" stroke-width=\"{:.6}\"/>\n</svg>\n",
        x0 - pad,
        -(y1 + pad),
        (x1 - x0) + 2.0 * pad,
        (y1 - y0) + 2.0 * pad,
        path.join(" "),
        pad * 0.2
    ))
}

/// Sutherland-Hodgman clip of a large box by each halfplane.
fn clip_halfplanes(halfspaces: &[Hyperplane]) -> Vec<(f64, f64)> {
    let big = 1e6;
    let mut poly: Vec<(f64, f64)> = vec![(-big, -big), (big, -big), (big, big), (-big, big)];
    for h in halfspaces {
        let inside = |p: (f64, f64)| h.normal[0] * p.0 + h.normal[1] * p.1 <= h.offset;
        let mut next: Vec<(f64, f64)> = Vec::with_capacity(poly.len() + 1);
        for i in 0..poly.len() {
            let cur = poly[i];
            let prev = poly[(i + poly.len() - 1) % poly.len()];
            let (ci, pi) = (inside(cur), inside(prev));
            if ci != pi {
                // edge crossing
                let f = |p: (f64, f64)| h.normal[0] * p.0 + h.normal[1] * p.1 - h.offset;
                let (fa, fb) = (f(prev), f(cur));
                let t = fa / (fa - fb);
                next.push((prev.0 + t * (cur.0 - prev.0), prev.1 + t * (cur.1 - prev.1)));
            }
            if ci {
                next.push(cur);
            }
        }
        poly = next;
        if poly.is_empty() {
            break;
        }
    }
    poly
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polytope_json_roundtrip_is_lossless() {
        let p = PointPolytope::from_points(&[
            vec![0.1 + 0.2, -1.0 / 3.0],
            vec![1e-15, 2.5e17],
        ])
        .unwrap();
        let json = to_json(&PolytopeJson::from_points(&p));
        let back = parse_polytope(&json).unwrap().into_points().unwrap();
        assert_eq!(back.coords(), p.coords());
    }

    #[test]
    fn parse_reports_line_and_column() {
        let bad = "{\"dim\": 2,\n \"points\": [[0.0, oops]]}";
        match parse_polytope(bad) {
            Err(IoError::Parse(e)) => {
                assert_eq!(e.line(), 2);
                assert!(e.column() > 0);
            }
            other => panic!("expected parse error, got {:?}", other),
        }
    }

    #[test]
    fn svg_contains_hull_polygon() {
        let p = PointPolytope::from_points(&[
            vec![0.0, 0.0],
            vec![1.0, 0.0],
            vec![0.5, 0.5],
            vec![1.0, 1.0],
            vec![0.0, 1.0],
        ])
        .unwrap();
        let svg = svg_render_2d(&Representation::Points(p)).unwrap();
        assert!(svg.starts_with("<svg"));
        assert!(svg.contains("<polygon"));
    }

    #[test]
    fn svg_from_halfspaces_clips() {
        let h = HalfspacePolytope::new(
            2,
            vec![
                Hyperplane::new(vec![1.0, 0.0], 1.0).unwrap(),
                Hyperplane::new(vec![-1.0, 0.0], 1.0).unwrap(),
                Hyperplane::new(vec![0.0, 1.0], 1.0).unwrap(),
                Hyperplane::new(vec![0.0, -1.0], 1.0).unwrap(),
            ],
        )
        .unwrap();
        let svg = svg_render_2d(&Representation::Halfspaces(h)).unwrap();
        assert!(svg.contains("polygon"));
    }
}

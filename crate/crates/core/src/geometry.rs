//! The Desarguesian plane PG(2,8), the conic x₁² = x₀x₂ and its nucleus.
//!
//! Points and lines are normalized triples (first nonzero coordinate 1),
//! indexed in lexicographic order of their coordinates. A point lies on a line
//! when the dot product of the two triples vanishes.

use std::fmt::Write as _;

use thiserror::Error;

use crate::field::{gf8, FieldElement};

pub type Triple = [FieldElement; 3];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("a secant needs two distinct conic points, got {0} twice")]
    SamePoint(usize),
    #[error("point {0} is not on the conic")]
    NotOnConic(usize),
    #[error("point {0} does not exist")]
    NoSuchPoint(usize),
    #[error("the zero vector is not a projective point")]
    ZeroVector,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjPoint {
    pub index: usize,
    pub coords: Triple,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjLine {
    pub index: usize,
    pub coeffs: Triple,
    /// Sorted indices of the 9 points on the line.
    pub points: Vec<usize>,
}

/// Scales a nonzero triple so its first nonzero entry is 1.
pub fn normalize(t: Triple) -> Result<Triple, GeometryError> {
    let f = gf8();
    let lead = t.iter().copied().find(|c| !c.is_zero()).ok_or(GeometryError::ZeroVector)?;
    let s = f.inv(lead).expect("lead is nonzero");
    Ok(t.map(|c| f.mul(c, s)))
}

fn dot(a: &Triple, b: &Triple) -> FieldElement {
    let f = gf8();
    (0..3).fold(FieldElement::ZERO, |acc, i| f.add(acc, f.mul(a[i], b[i])))
}

fn triple_key(t: &Triple) -> usize {
    t[0].bits() as usize * 64 + t[1].bits() as usize * 8 + t[2].bits() as usize
}

/// The 73 normalized triples in lexicographic order.
fn normalized_triples() -> Vec<Triple> {
    let f = gf8();
    let mut out = Vec::with_capacity(73);
    for a in f.elements() {
        for b in f.elements() {
            for c in f.elements() {
                let t = [a, b, c];
                if normalize(t).ok() == Some(t) {
                    out.push(t);
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone)]
pub struct Plane {
    pub points: Vec<ProjPoint>,
    pub lines: Vec<ProjLine>,
    /// `lines_through[p]`: sorted indices of lines incident with point `p`.
    pub lines_through: Vec<Vec<usize>>,
    /// Normalized triple key -> point index.
    point_lookup: Vec<Option<usize>>,
}

impl Plane {
    pub fn build() -> Plane {
        let triples = normalized_triples();
        let mut point_lookup = vec![None; 512];
        let points: Vec<ProjPoint> = triples
            .iter()
            .enumerate()
            .map(|(index, &coords)| {
                point_lookup[triple_key(&coords)] = Some(index);
                ProjPoint { index, coords }
            })
            .collect();
        let mut lines_through = vec![Vec::new(); points.len()];
        let lines = triples
            .iter()
            .enumerate()
            .map(|(index, &coeffs)| {
                let on: Vec<usize> = points
                    .iter()
                    .filter(|p| dot(&p.coords, &coeffs).is_zero())
                    .map(|p| p.index)
                    .collect();
                for &p in &on {
                    lines_through[p].push(index);
                }
                ProjLine { index, coeffs, points: on }
            })
            .collect();
        Plane { points, lines, lines_through, point_lookup }
    }

    pub fn point_index(&self, coords: Triple) -> Result<usize, GeometryError> {
        let n = normalize(coords)?;
        Ok(self.point_lookup[triple_key(&n)].expect("every normalized triple is a point"))
    }

    pub fn is_incident(&self, point: usize, line: usize) -> bool {
        self.lines[line].points.binary_search(&point).is_ok()
    }

    /// The unique line through two distinct points.
    pub fn join(&self, p: usize, q: usize) -> Option<usize> {
        if p == q {
            return None;
        }
        let (a, b) = (&self.lines_through[p], &self.lines_through[q]);
        a.iter().copied().find(|l| b.binary_search(l).is_ok())
    }

    /// The unique common point of two distinct lines.
    pub fn meet(&self, l: usize, m: usize) -> Option<usize> {
        if l == m {
            return None;
        }
        let (a, b) = (&self.lines[l].points, &self.lines[m].points);
        a.iter().copied().find(|p| b.binary_search(p).is_ok())
    }

    /// Plain-text incidence dump: one row per line, the line index followed by
    /// its 9 point indices, all space separated.
    pub fn incidence_dump(&self) -> String {
        let mut out = String::new();
        for line in &self.lines {
            write!(out, "{}", line.index).unwrap();
            for p in &line.points {
                write!(out, " {p}").unwrap();
            }
            out.push('\n');
        }
        out
    }
}

/// A point of the projective line GF(8) ∪ {∞}, used to parametrize the conic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LinePoint {
    Finite(FieldElement),
    Infinity,
}

impl LinePoint {
    pub fn all() -> impl Iterator<Item = LinePoint> {
        gf8().elements().map(LinePoint::Finite).chain(std::iter::once(LinePoint::Infinity))
    }
}

/// Coordinates of the conic point with parameter `t`: (1, t, t²), or (0, 0, 1) at ∞.
pub fn conic_coords(t: LinePoint) -> Triple {
    match t {
        LinePoint::Finite(t) => [FieldElement::ONE, t, gf8().mul(t, t)],
        LinePoint::Infinity => [FieldElement::ZERO, FieldElement::ZERO, FieldElement::ONE],
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LineKind {
    Secant,
    Tangent,
    External,
}

/// The conic, its nucleus and the secant/tangent/external classification.
#[derive(Debug, Clone)]
pub struct ConicModel {
    pub plane: Plane,
    /// Sorted plane indices of the 9 conic points.
    pub conic_points: Vec<usize>,
    pub nucleus: usize,
    /// Sorted line indices of the 36 secants. A secant's position in this list
    /// is its label as a design point.
    pub secants: Vec<usize>,
    pub tangents: Vec<usize>,
    pub externals: Vec<usize>,
    /// `secant_pairs[s]`: the two conic points (plane indices, ascending) on
    /// `secants[s]`.
    pub secant_pairs: Vec<(usize, usize)>,
    /// Conic parameter of each entry of `conic_points`.
    pub params: Vec<LinePoint>,
    line_kinds: Vec<LineKind>,
}

impl ConicModel {
    pub fn build(plane: Plane) -> ConicModel {
        let mut with_params: Vec<(usize, LinePoint)> = LinePoint::all()
            .map(|t| (plane.point_index(conic_coords(t)).expect("nonzero"), t))
            .collect();
        with_params.sort();
        let conic_points: Vec<usize> = with_params.iter().map(|&(p, _)| p).collect();
        let params = with_params.iter().map(|&(_, t)| t).collect();
        let nucleus = plane
            .point_index([FieldElement::ZERO, FieldElement::ONE, FieldElement::ZERO])
            .expect("nonzero");

        let mut secants = Vec::new();
        let mut tangents = Vec::new();
        let mut externals = Vec::new();
        let mut secant_pairs = Vec::new();
        let mut line_kinds = Vec::with_capacity(plane.lines.len());
        for line in &plane.lines {
            let on: Vec<usize> = line
                .points
                .iter()
                .copied()
                .filter(|p| conic_points.binary_search(p).is_ok())
                .collect();
            let kind = match on.len() {
                0 => LineKind::External,
                1 => LineKind::Tangent,
                2 => LineKind::Secant,
                n => panic!("line {} meets the conic in {n} points", line.index),
            };
            match kind {
                LineKind::Secant => {
                    secants.push(line.index);
                    secant_pairs.push((on[0], on[1]));
                }
                LineKind::Tangent => tangents.push(line.index),
                LineKind::External => externals.push(line.index),
            }
            line_kinds.push(kind);
        }
        ConicModel {
            plane,
            conic_points,
            nucleus,
            secants,
            tangents,
            externals,
            secant_pairs,
            params,
            line_kinds,
        }
    }

    pub fn line_kind(&self, line: usize) -> LineKind {
        self.line_kinds[line]
    }

    pub fn is_conic_point(&self, p: usize) -> bool {
        self.conic_points.binary_search(&p).is_ok()
    }

    /// Position of a conic point in `conic_points`.
    pub fn conic_position(&self, p: usize) -> Option<usize> {
        self.conic_points.binary_search(&p).ok()
    }

    /// Position of a line in `secants`.
    pub fn secant_position(&self, line: usize) -> Option<usize> {
        self.secants.binary_search(&line).ok()
    }

    /// Plane index of the conic point with parameter `t`.
    pub fn point_of_param(&self, t: LinePoint) -> usize {
        let i = self.params.iter().position(|&s| s == t).expect("every parameter is on the conic");
        self.conic_points[i]
    }

    /// The secant line through two distinct conic points.
    pub fn secant_through(&self, p: usize, q: usize) -> Result<usize, GeometryError> {
        if p >= self.plane.points.len() {
            return Err(GeometryError::NoSuchPoint(p));
        }
        if q >= self.plane.points.len() {
            return Err(GeometryError::NoSuchPoint(q));
        }
        if p == q {
            return Err(GeometryError::SamePoint(p));
        }
        for x in [p, q] {
            if !self.is_conic_point(x) {
                return Err(GeometryError::NotOnConic(x));
            }
        }
        Ok(self.plane.join(p, q).expect("distinct points span a line"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn conic() -> ConicModel {
        ConicModel::build(Plane::build())
    }

    #[test]
    fn plane_counts() {
        let plane = Plane::build();
        assert_eq!(plane.points.len(), 73);
        assert_eq!(plane.lines.len(), 73);
        assert!(plane.lines.iter().all(|l| l.points.len() == 9));
        assert!(plane.lines_through.iter().all(|ls| ls.len() == 9));
    }

    #[test]
    fn projective_plane_axioms() {
        let plane = Plane::build();
        for p in 0..73 {
            for q in (p + 1)..73 {
                let common = plane.lines_through[p]
                    .iter()
                    .filter(|l| plane.lines_through[q].contains(l))
                    .count();
                assert_eq!(common, 1, "points {p},{q}");
                let shared = plane.lines[p]
                    .points
                    .iter()
                    .filter(|x| plane.lines[q].points.contains(x))
                    .count();
                assert_eq!(shared, 1, "lines {p},{q}");
            }
        }
    }

    #[test]
    fn normalization_is_canonical() {
        let f = gf8();
        let plane = Plane::build();
        for p in &plane.points {
            for s in f.elements().skip(1) {
                let scaled = p.coords.map(|c| f.mul(c, s));
                assert_eq!(plane.point_index(scaled), Ok(p.index));
            }
        }
        assert_eq!(normalize([FieldElement::ZERO; 3]), Err(GeometryError::ZeroVector));
    }

    #[test]
    fn conic_classification() {
        let c = conic();
        assert_eq!(c.conic_points.len(), 9);
        assert_eq!(c.secants.len(), 36);
        assert_eq!(c.tangents.len(), 9);
        assert_eq!(c.externals.len(), 28);
        assert_eq!(c.secants.len() + c.tangents.len() + c.externals.len(), 73);
        for &t in &c.tangents {
            assert!(c.plane.is_incident(c.nucleus, t));
        }
        assert!(!c.is_conic_point(c.nucleus));
    }

    #[test]
    fn conic_is_an_arc() {
        let c = conic();
        let pts = &c.conic_points;
        let mut triples = 0;
        for i in 0..9 {
            for j in (i + 1)..9 {
                for k in (j + 1)..9 {
                    triples += 1;
                    let l = c.plane.join(pts[i], pts[j]).unwrap();
                    assert!(!c.plane.is_incident(pts[k], l));
                }
            }
        }
        assert_eq!(triples, 84);
    }

    #[test]
    fn secant_through_is_inverse_of_pairs() {
        let c = conic();
        for (s, &(p, q)) in c.secant_pairs.iter().enumerate() {
            assert_eq!(c.secant_through(p, q), Ok(c.secants[s]));
            assert_eq!(c.secant_through(q, p), Ok(c.secants[s]));
            let on: Vec<usize> = c.plane.lines[c.secants[s]]
                .points
                .iter()
                .copied()
                .filter(|&x| c.is_conic_point(x))
                .collect();
            assert_eq!(on, vec![p, q]);
        }
        let mut pairs = c.secant_pairs.clone();
        pairs.sort();
        pairs.dedup();
        assert_eq!(pairs.len(), 36);
    }

    #[test]
    fn secant_through_errors() {
        let c = conic();
        let p = c.conic_points[0];
        assert_eq!(c.secant_through(p, p), Err(GeometryError::SamePoint(p)));
        assert_eq!(c.secant_through(p, c.nucleus), Err(GeometryError::NotOnConic(c.nucleus)));
        assert_eq!(c.secant_through(p, 100), Err(GeometryError::NoSuchPoint(100)));
    }

    #[test]
    fn incidence_dump_shape() {
        let plane = Plane::build();
        let dump = plane.incidence_dump();
        let rows: Vec<&str> = dump.lines().collect();
        assert_eq!(rows.len(), 73);
        assert!(rows.iter().all(|r| r.split(' ').count() == 10));
        assert!(rows[0].starts_with("0 "));
    }
}

//! Projective-plane primitives over any scalar field: points, lines,
//! join/meet, collinearity, and the full incidence census of a line
//! arrangement.
//!
//! Coordinate triples are kept in a canonical form (first nonzero entry
//! scaled to 1), so equality and hashing are exact over every field kind.

use crate::exec;
use crate::scalar::{FieldElement, FieldRef, ScalarError};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeomError {
    #[error("coordinates belong to different fields")]
    DescriptorMismatch,
    #[error("all three coordinates are zero")]
    ZeroVector,
    #[error("the two points coincide")]
    CoincidentPoints,
    #[error("the two lines coincide")]
    CoincidentLines,
    #[error("duplicate lines in arrangement (indices {0} and {1})")]
    DuplicateLines(usize, usize),
    #[error("triangles are not perspective from both given centers")]
    NotDoublyPerspective,
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

fn canonical_triple(mut coords: [FieldElement; 3]) -> Result<[FieldElement; 3], GeomError> {
    let desc = coords[0].descriptor().clone();
    if coords.iter().any(|c| c.descriptor() != &desc) {
        return Err(GeomError::DescriptorMismatch);
    }
    let Some(first) = coords.iter().position(|c| !c.is_zero()) else {
        return Err(GeomError::ZeroVector);
    };
    let inv = coords[first].inv()?;
    for c in coords.iter_mut() {
        *c = &*c * &inv;
    }
    Ok(coords)
}

/// Cross product of two coordinate triples.
fn cross(u: &[FieldElement; 3], v: &[FieldElement; 3]) -> [FieldElement; 3] {
    [
        &(&u[1] * &v[2]) - &(&u[2] * &v[1]),
        &(&u[2] * &v[0]) - &(&u[0] * &v[2]),
        &(&u[0] * &v[1]) - &(&u[1] * &v[0]),
    ]
}

fn dot(u: &[FieldElement; 3], v: &[FieldElement; 3]) -> FieldElement {
    &(&(&u[0] * &v[0]) + &(&u[1] * &v[1])) + &(&u[2] * &v[2])
}

fn det3(rows: [&[FieldElement; 3]; 3]) -> FieldElement {
    let [a, b, c] = rows;
    dot(a, &cross(b, c))
}

/// A point of the projective plane in canonical homogeneous coordinates.
/// The optional label is reporting metadata and never affects equality.
#[derive(Debug, Clone)]
pub struct ProjPoint {
    coords: [FieldElement; 3],
    pub label: Option<String>,
}

impl PartialEq for ProjPoint {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords
    }
}
impl Eq for ProjPoint {}
impl std::hash::Hash for ProjPoint {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.coords.hash(state);
    }
}

/// A line `ax + by + cz = 0` in canonical coefficients.
#[derive(Debug, Clone)]
pub struct ProjLine {
    coeffs: [FieldElement; 3],
    pub label: Option<String>,
}

impl PartialEq for ProjLine {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}
impl Eq for ProjLine {}
impl std::hash::Hash for ProjLine {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl ProjPoint {
    pub fn new(coords: [FieldElement; 3]) -> Result<Self, GeomError> {
        Ok(ProjPoint {
            coords: canonical_triple(coords)?,
            label: None,
        })
    }

    pub fn with_label(mut self, label: &str) -> Self {
        self.label = Some(label.to_string());
        self
    }

    pub fn coords(&self) -> &[FieldElement; 3] {
        &self.coords
    }

    pub fn descriptor(&self) -> &FieldRef {
        self.coords[0].descriptor()
    }

    /// Does the point lie on the line?
    pub fn on(&self, line: &ProjLine) -> bool {
        dot(&self.coords, &line.coeffs).is_zero()
    }
}

impl ProjLine {
    pub fn new(coeffs: [FieldElement; 3]) -> Result<Self, GeomError> {
        Ok(ProjLine {
            coeffs: canonical_triple(coeffs)?,
            label: None,
        })
    }

    pub fn with_label(mut self, label: &str) -> Self {
        self.label = Some(label.to_string());
        self
    }

    pub fn coeffs(&self) -> &[FieldElement; 3] {
        &self.coeffs
    }

    pub fn descriptor(&self) -> &FieldRef {
        self.coeffs[0].descriptor()
    }
}

/// Line through two distinct points.
pub fn join(p: &ProjPoint, q: &ProjPoint) -> Result<ProjLine, GeomError> {
    if p.descriptor() != q.descriptor() {
        return Err(GeomError::DescriptorMismatch);
    }
    if p == q {
        return Err(GeomError::CoincidentPoints);
    }
    ProjLine::new(cross(&p.coords, &q.coords))
}

/// Intersection point of two distinct lines.
pub fn meet(l: &ProjLine, m: &ProjLine) -> Result<ProjPoint, GeomError> {
    if l.descriptor() != m.descriptor() {
        return Err(GeomError::DescriptorMismatch);
    }
    if l == m {
        return Err(GeomError::CoincidentLines);
    }
    ProjPoint::new(cross(&l.coeffs, &m.coeffs))
}

/// Vanishing of the 3x3 coordinate determinant; scale invariant.
pub fn collinear(p: &ProjPoint, q: &ProjPoint, r: &ProjPoint) -> Result<bool, GeomError> {
    if p.descriptor() != q.descriptor() || q.descriptor() != r.descriptor() {
        return Err(GeomError::DescriptorMismatch);
    }
    Ok(det3([&p.coords, &q.coords, &r.coords]).is_zero())
}

/// Dual of [`collinear`].
pub fn concurrent(l: &ProjLine, m: &ProjLine, n: &ProjLine) -> Result<bool, GeomError> {
    if l.descriptor() != m.descriptor() || m.descriptor() != n.descriptor() {
        return Err(GeomError::DescriptorMismatch);
    }
    Ok(det3([&l.coeffs, &m.coeffs, &n.coeffs]).is_zero())
}

/// One intersection point of an arrangement, with the lines through it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigPoint {
    pub point: ProjPoint,
    /// Number of arrangement lines through the point.
    pub multiplicity: usize,
    /// Indices of those lines, ascending.
    pub lines: Vec<usize>,
}

/// An arrangement of distinct lines with its full intersection census.
#[derive(Debug, Clone)]
pub struct Configuration {
    pub field: FieldRef,
    pub lines: Vec<ProjLine>,
    pub points: Vec<ConfigPoint>,
    /// multiplicity -> number of points of that multiplicity
    pub census: BTreeMap<usize, usize>,
}

/// Compute all pairwise intersection points of a set of pairwise distinct
/// lines, deduplicate them by canonical form, and record multiplicities.
///
/// The pair loop runs in parallel; results are merged in deterministic pair
/// order, so the output does not depend on the schedule.
pub fn census(lines: &[ProjLine]) -> Result<Configuration, GeomError> {
    for i in 0..lines.len() {
        for j in (i + 1)..lines.len() {
            if lines[i] == lines[j] {
                return Err(GeomError::DuplicateLines(i, j));
            }
        }
    }
    let field = if lines.is_empty() {
        crate::scalar::FieldDescriptor::rationals()
    } else {
        lines[0].descriptor().clone()
    };
    let mut pairs = Vec::with_capacity(lines.len() * (lines.len().saturating_sub(1)) / 2);
    for i in 0..lines.len() {
        for j in (i + 1)..lines.len() {
            pairs.push((i, j));
        }
    }
    let meets = exec::map_collect(pairs, |(i, j)| {
        let p = meet(&lines[i], &lines[j]).expect("lines are pairwise distinct");
        (i, j, p)
    });
    let mut order: Vec<ProjPoint> = Vec::new();
    let mut incidences: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut index: std::collections::HashMap<ProjPoint, usize> = std::collections::HashMap::new();
    for (i, j, p) in meets {
        let idx = *index.entry(p.clone()).or_insert_with(|| {
            order.push(p);
            order.len() - 1
        });
        let inc = incidences.entry(idx).or_default();
        for k in [i, j] {
            if !inc.contains(&k) {
                inc.push(k);
            }
        }
    }
    let mut points = Vec::with_capacity(order.len());
    let mut censusmap: BTreeMap<usize, usize> = BTreeMap::new();
    for (idx, point) in order.into_iter().enumerate() {
        let mut linds = incidences.remove(&idx).unwrap();
        linds.sort_unstable();
        let mult = linds.len();
        *censusmap.entry(mult).or_insert(0) += 1;
        points.push(ConfigPoint {
            point,
            multiplicity: mult,
            lines: linds,
        });
    }
    let cfg = Configuration {
        field,
        lines: lines.to_vec(),
        points,
        census: censusmap,
    };
    debug_assert!(cfg.pair_count_identity());
    Ok(cfg)
}

impl Configuration {
    /// Sum over points of C(mult, 2) equals C(#lines, 2).
    pub fn pair_count_identity(&self) -> bool {
        let choose2 = |n: usize| n * n.saturating_sub(1) / 2;
        let lhs: usize = self.points.iter().map(|p| choose2(p.multiplicity)).sum();
        lhs == choose2(self.lines.len())
    }

    /// Points with multiplicity >= 3.
    pub fn non_ordinary_points(&self) -> Vec<&ConfigPoint> {
        self.points.iter().filter(|p| p.multiplicity >= 3).collect()
    }

    pub fn to_json(&self) -> Value {
        let lines: Vec<Value> = self
            .lines
            .iter()
            .map(|l| {
                Value::Array(
                    l.coeffs()
                        .iter()
                        .map(|c| Value::String(c.to_string()))
                        .collect(),
                )
            })
            .collect();
        let points: Vec<Value> = self
            .points
            .iter()
            .map(|p| {
                let mut obj = serde_json::Map::new();
                obj.insert(
                    "coords".into(),
                    Value::Array(
                        p.point
                            .coords()
                            .iter()
                            .map(|c| Value::String(c.to_string()))
                            .collect(),
                    ),
                );
                obj.insert("mult".into(), json!(p.multiplicity));
                obj.insert(
                    "lines".into(),
                    Value::Array(p.lines.iter().map(|i| json!(i)).collect()),
                );
                if let Some(label) = &p.point.label {
                    obj.insert("label".into(), Value::String(label.clone()));
                }
                Value::Object(obj)
            })
            .collect();
        let census: serde_json::Map<String, Value> = self
            .census
            .iter()
            .map(|(k, v)| (k.to_string(), json!(v)))
            .collect();
        json!({
            "field": self.field.to_string(),
            "lines": lines,
            "points": points,
            "census": census,
        })
    }
}

/// Third perspective center of two triangles already perspective from `p`
/// and from `q` under cyclic correspondences.
///
/// The triangles are `(a1,a2,a3)` and `(b1,b2,b3)`. A cyclic rotation `r`
/// pairs `a_i` with `b_{i+r}`. The rotations realizing `p` and `q` are
/// identified (errors when either is missing), and the meet of two
/// cross-joins of the remaining rotation is returned after checking the
/// third join passes through it.
pub fn pappus_third_center(
    tri_a: [&ProjPoint; 3],
    tri_b: [&ProjPoint; 3],
    p: &ProjPoint,
    q: &ProjPoint,
) -> Result<ProjPoint, GeomError> {
    let center_of = |rot: usize| -> Result<Option<ProjPoint>, GeomError> {
        let l0 = join(tri_a[0], tri_b[rot])?;
        let l1 = join(tri_a[1], tri_b[(1 + rot) % 3])?;
        let l2 = join(tri_a[2], tri_b[(2 + rot) % 3])?;
        if l0 == l1 || l1 == l2 || l0 == l2 {
            return Ok(None);
        }
        let c = meet(&l0, &l1)?;
        Ok(if c.on(&l2) { Some(c) } else { None })
    };
    let mut rot_p = None;
    let mut rot_q = None;
    for rot in 0..3 {
        if let Some(c) = center_of(rot)? {
            if &c == p {
                rot_p = Some(rot);
            }
            if &c == q {
                rot_q = Some(rot);
            }
        }
    }
    let (Some(rp), Some(rq)) = (rot_p, rot_q) else {
        return Err(GeomError::NotDoublyPerspective);
    };
    if rp == rq {
        return Err(GeomError::NotDoublyPerspective);
    }
    let rr = 3 - rp - rq; // the remaining rotation
    center_of(rr)?.ok_or(GeomError::NotDoublyPerspective)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::FieldDescriptor;
    use crate::testutil::random_rational;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn qq() -> FieldRef {
        FieldDescriptor::rationals()
    }

    fn pt(x: i64, y: i64, z: i64) -> ProjPoint {
        let q = qq();
        ProjPoint::new([
            FieldElement::from_i64(&q, x),
            FieldElement::from_i64(&q, y),
            FieldElement::from_i64(&q, z),
        ])
        .unwrap()
    }

    fn ln(a: i64, b: i64, c: i64) -> ProjLine {
        let q = qq();
        ProjLine::new([
            FieldElement::from_i64(&q, a),
            FieldElement::from_i64(&q, b),
            FieldElement::from_i64(&q, c),
        ])
        .unwrap()
    }

    #[test]
    fn join_fundamental_points() {
        // A=(1:0:0), B=(0:1:0) -> z = 0
        let l = join(&pt(1, 0, 0), &pt(0, 1, 0)).unwrap();
        assert_eq!(l, ln(0, 0, 1));
        assert!(matches!(
            join(&pt(1, 0, 0), &pt(2, 0, 0)),
            Err(GeomError::CoincidentPoints)
        ));
    }

    #[test]
    fn meet_axes() {
        let p = meet(&ln(1, 0, 0), &ln(0, 1, 0)).unwrap();
        assert_eq!(p, pt(0, 0, 1));
        assert!(matches!(
            meet(&ln(1, 0, 0), &ln(2, 0, 0)),
            Err(GeomError::CoincidentLines)
        ));
    }

    #[test]
    fn collinear_and_concurrent() {
        assert!(!collinear(&pt(1, 0, 0), &pt(0, 1, 0), &pt(0, 0, 1)).unwrap());
        assert!(collinear(&pt(1, 0, 0), &pt(0, 1, 0), &pt(1, -12, 0)).unwrap());
        assert!(concurrent(&ln(1, 0, 0), &ln(0, 1, 0), &ln(1, 1, 0)).unwrap());
        assert!(!concurrent(&ln(1, 0, 0), &ln(0, 1, 0), &ln(0, 0, 1)).unwrap());
    }

    #[test]
    fn census_triangle_and_pencil() {
        let triangle = vec![ln(1, 0, 0), ln(0, 1, 0), ln(0, 0, 1)];
        let cfg = census(&triangle).unwrap();
        assert_eq!(cfg.census, BTreeMap::from([(2, 3)]));
        let pencil = vec![ln(1, 0, 0), ln(0, 1, 0), ln(1, 1, 0)];
        let cfg = census(&pencil).unwrap();
        assert_eq!(cfg.census, BTreeMap::from([(3, 1)]));
        assert!(matches!(
            census(&[ln(1, 0, 0), ln(2, 0, 0)]),
            Err(GeomError::DuplicateLines(0, 1))
        ));
    }

    #[test]
    fn canonical_scale_invariance() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let q = qq();
        for _ in 0..50 {
            let coords: Vec<FieldElement> = (0..3)
                .map(|_| FieldElement::from_rational(&q, random_rational(&mut rng, 10)).unwrap())
                .collect();
            if coords.iter().all(|c| c.is_zero()) {
                continue;
            }
            let p1 =
                ProjPoint::new([coords[0].clone(), coords[1].clone(), coords[2].clone()]).unwrap();
            let mut s = FieldElement::from_rational(&q, random_rational(&mut rng, 10)).unwrap();
            if s.is_zero() {
                s = FieldElement::one(&q);
            }
            let p2 = ProjPoint::new([&coords[0] * &s, &coords[1] * &s, &coords[2] * &s]).unwrap();
            assert_eq!(p1, p2);
        }
    }

    /// Two triangles perspective from two planted centers have a third center.
    #[test]
    fn pappus_double_perspectivity() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        let q = qq();
        let mut done = 0;
        'outer: while done < 20 {
            let mut rnd_pt = |rng: &mut ChaCha8Rng| {
                ProjPoint::new([
                    FieldElement::from_rational(&q, random_rational(rng, 8)).unwrap(),
                    FieldElement::from_rational(&q, random_rational(rng, 8)).unwrap(),
                    FieldElement::one(&q),
                ])
                .unwrap()
            };
            let a1 = rnd_pt(&mut rng);
            let a2 = rnd_pt(&mut rng);
            let a3 = rnd_pt(&mut rng);
            let p = rnd_pt(&mut rng);
            let q_pt = rnd_pt(&mut rng);
            // b_i determined so that rotation 0 has center p and rotation 1
            // center q: b1 on a1p and a3q, b2 on a2p and a1q, b3 on a3p and a2q
            let joins = [
                (join(&a1, &p), join(&a3, &q_pt)),
                (join(&a2, &p), join(&a1, &q_pt)),
                (join(&a3, &p), join(&a2, &q_pt)),
            ];
            let mut bs = Vec::new();
            for (l1, l2) in joins {
                let (Ok(l1), Ok(l2)) = (l1, l2) else {
                    continue 'outer;
                };
                if l1 == l2 {
                    continue 'outer;
                }
                bs.push(meet(&l1, &l2).unwrap());
            }
            let distinct = |pts: &[&ProjPoint]| {
                pts.iter()
                    .enumerate()
                    .all(|(i, x)| pts.iter().skip(i + 1).all(|y| *x != **y))
            };
            if !distinct(&[&a1, &a2, &a3, &bs[0], &bs[1], &bs[2], &p, &q_pt]) {
                continue;
            }
            let r = match pappus_third_center([&a1, &a2, &a3], [&bs[0], &bs[1], &bs[2]], &p, &q_pt)
            {
                Ok(r) => r,
                Err(GeomError::NotDoublyPerspective) => continue,
                Err(e) => panic!("{e}"),
            };
            // the center realizes rotation 2: a1-b3, a2-b1, a3-b2
            assert!(r.on(&join(&a1, &bs[2]).unwrap()));
            assert!(r.on(&join(&a2, &bs[0]).unwrap()));
            assert!(r.on(&join(&a3, &bs[1]).unwrap()));
            done += 1;
        }
    }

    #[test]
    fn pappus_rejects_non_perspective() {
        let a = [pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)];
        let b = [pt(1, 1, 1), pt(1, 2, 3), pt(2, 3, 1)];
        let p = pt(5, 7, 11);
        let q = pt(3, 1, 4);
        assert!(matches!(
            pappus_third_center([&a[0], &a[1], &a[2]], [&b[0], &b[1], &b[2]], &p, &q),
            Err(GeomError::NotDoublyPerspective)
        ));
    }
}

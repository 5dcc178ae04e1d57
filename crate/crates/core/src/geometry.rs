//! Domains and the geometric functionals the bounds consume.
//!
//! Widths are support-function differences: `width(Ω, v) = sup v·(x − y)` over
//! `x, y ∈ Ω`. For polygons the supremum is attained at vertices, so only the
//! vertex list is consulted. Hull and mean-width queries are 2D only.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A planar point.
pub type Point2 = [f64; 2];

const UNIT_NORM_TOL: f64 = 1e-12;

/// Unit direction in R^d.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitVector(Vec<f64>);

impl UnitVector {
    /// Accepts components whose Euclidean norm is 1 within 1e-12.
    pub fn new(components: Vec<f64>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::arg("unit vector needs at least one component"));
        }
        let norm = components.iter().map(|c| c * c).sum::<f64>().sqrt();
        if !norm.is_finite() || (norm - 1.0).abs() > UNIT_NORM_TOL {
            return Err(Error::arg(format!("vector norm {norm} is not 1")));
        }
        Ok(UnitVector(components))
    }

    /// Normalizes an arbitrary nonzero vector.
    pub fn normalized(components: Vec<f64>) -> Result<Self> {
        let norm = components.iter().map(|c| c * c).sum::<f64>().sqrt();
        if !(norm > 0.0) || !norm.is_finite() {
            return Err(Error::arg("cannot normalize a zero or non-finite vector"));
        }
        Ok(UnitVector(components.into_iter().map(|c| c / norm).collect()))
    }

    /// The `axis`-th standard basis vector of R^d.
    pub fn axis(d: usize, axis: usize) -> Result<Self> {
        if axis >= d {
            return Err(Error::arg(format!("axis {axis} out of range for dimension {d}")));
        }
        let mut v = vec![0.0; d];
        v[axis] = 1.0;
        Ok(UnitVector(v))
    }

    /// (cos θ, sin θ).
    pub fn from_angle(theta: f64) -> Self {
        UnitVector(vec![theta.cos(), theta.sin()])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn components(&self) -> &[f64] {
        &self.0
    }

    pub fn negated(&self) -> Self {
        UnitVector(self.0.iter().map(|c| -c).collect())
    }
}

/// A simple planar polygon given by its ordered vertex list.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Point2>", into = "Vec<Point2>")]
pub struct Polygon {
    vertices: Vec<Point2>,
}

impl TryFrom<Vec<Point2>> for Polygon {
    type Error = Error;

    fn try_from(vertices: Vec<Point2>) -> Result<Self> {
        Polygon::new(vertices)
    }
}

impl From<Polygon> for Vec<Point2> {
    fn from(p: Polygon) -> Self {
        p.vertices
    }
}

fn cross(o: Point2, a: Point2, b: Point2) -> f64 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

fn dist(a: Point2, b: Point2) -> f64 {
    (a[0] - b[0]).hypot(a[1] - b[1])
}

fn on_segment(p: Point2, a: Point2, b: Point2, tol: f64) -> bool {
    p[0] >= a[0].min(b[0]) - tol
        && p[0] <= a[0].max(b[0]) + tol
        && p[1] >= a[1].min(b[1]) - tol
        && p[1] <= a[1].max(b[1]) + tol
}

fn segments_intersect(p1: Point2, p2: Point2, q1: Point2, q2: Point2, tol: f64) -> bool {
    let d1 = cross(q1, q2, p1);
    let d2 = cross(q1, q2, p2);
    let d3 = cross(p1, p2, q1);
    let d4 = cross(p1, p2, q2);
    if ((d1 > tol && d2 < -tol) || (d1 < -tol && d2 > tol))
        && ((d3 > tol && d4 < -tol) || (d3 < -tol && d4 > tol))
    {
        return true;
    }
    (d1.abs() <= tol && on_segment(p1, q1, q2, tol))
        || (d2.abs() <= tol && on_segment(p2, q1, q2, tol))
        || (d3.abs() <= tol && on_segment(q1, p1, p2, tol))
        || (d4.abs() <= tol && on_segment(q2, p1, p2, tol))
}

/// Distance from `p` to the segment `[a, b]`.
pub fn point_segment_distance(p: Point2, a: Point2, b: Point2) -> f64 {
    let ab = [b[0] - a[0], b[1] - a[1]];
    let len2 = ab[0] * ab[0] + ab[1] * ab[1];
    if len2 == 0.0 {
        return dist(p, a);
    }
    let t = (((p[0] - a[0]) * ab[0] + (p[1] - a[1]) * ab[1]) / len2).clamp(0.0, 1.0);
    dist(p, [a[0] + t * ab[0], a[1] + t * ab[1]])
}

/// Convex hull by Andrew's monotone chain, counter-clockwise, interior
/// collinear points dropped.
pub fn convex_hull(points: &[Point2]) -> Result<Vec<Point2>> {
    let scale = points
        .iter()
        .flat_map(|p| p.iter())
        .fold(1.0f64, |m, c| m.max(c.abs()));
    let tol = 1e-12 * scale * scale;
    let mut pts: Vec<Point2> = points.to_vec();
    pts.sort_by(|a, b| a[0].total_cmp(&b[0]).then(a[1].total_cmp(&b[1])));
    pts.dedup();
    if pts.len() < 3 {
        return Err(Error::Geometry("hull needs at least three distinct points".into()));
    }
    let mut lower: Vec<Point2> = Vec::with_capacity(pts.len());
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= tol {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<Point2> = Vec::with_capacity(pts.len());
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= tol {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.len() < 3 {
        return Err(Error::Geometry("points are collinear; hull is degenerate".into()));
    }
    Ok(lower)
}

impl Polygon {
    /// Validates a simple polygon: at least three vertices, finite
    /// coordinates, nonzero area and no self-intersections.
    pub fn new(vertices: Vec<Point2>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::Geometry(format!(
                "polygon needs at least 3 vertices, got {}",
                vertices.len()
            )));
        }
        if vertices.iter().flatten().any(|c| !c.is_finite()) {
            return Err(Error::Geometry("polygon has non-finite coordinates".into()));
        }
        let poly = Polygon { vertices };
        let tol = poly.tolerance();
        if poly.signed_area().abs() <= tol {
            return Err(Error::Geometry("polygon has zero area".into()));
        }
        let n = poly.vertices.len();
        for i in 0..n {
            let (a1, a2) = (poly.vertices[i], poly.vertices[(i + 1) % n]);
            if dist(a1, a2) <= tol {
                return Err(Error::Geometry(format!("repeated vertex at index {i}")));
            }
            for j in (i + 1)..n {
                // adjacent edges share a vertex by construction
                if j == i + 1 || (i == 0 && j == n - 1) {
                    continue;
                }
                let (b1, b2) = (poly.vertices[j], poly.vertices[(j + 1) % n]);
                if segments_intersect(a1, a2, b1, b2, tol) {
                    return Err(Error::Geometry(format!(
                        "polygon self-intersects between edges {i} and {j}"
                    )));
                }
            }
        }
        Ok(poly)
    }

    /// Regular `n`-gon with the given circumradius, centred at `center`.
    pub fn regular(n: usize, circumradius: f64, center: Point2) -> Result<Self> {
        let verts = (0..n)
            .map(|k| {
                let t = 2.0 * PI * k as f64 / n as f64;
                [center[0] + circumradius * t.cos(), center[1] + circumradius * t.sin()]
            })
            .collect();
        Polygon::new(verts)
    }

    /// Axis-aligned rectangle `[x0, x0 + w] × [y0, y0 + h]`.
    pub fn rectangle(origin: Point2, w: f64, h: f64) -> Result<Self> {
        let [x, y] = origin;
        Polygon::new(vec![[x, y], [x + w, y], [x + w, y + h], [x, y + h]])
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    fn scale(&self) -> f64 {
        self.vertices
            .iter()
            .flat_map(|p| p.iter())
            .fold(1.0f64, |m, c| m.max(c.abs()))
    }

    fn tolerance(&self) -> f64 {
        1e-12 * self.scale()
    }

    fn signed_area(&self) -> f64 {
        let n = self.vertices.len();
        (0..n)
            .map(|i| {
                let (a, b) = (self.vertices[i], self.vertices[(i + 1) % n]);
                a[0] * b[1] - b[0] * a[1]
            })
            .sum::<f64>()
            / 2.0
    }

    /// Shoelace area.
    pub fn area(&self) -> f64 {
        self.signed_area().abs()
    }

    pub fn perimeter(&self) -> f64 {
        let n = self.vertices.len();
        (0..n)
            .map(|i| dist(self.vertices[i], self.vertices[(i + 1) % n]))
            .sum()
    }

    /// Max minus min of `u · vertex`; `u` need not be normalized.
    fn support_width(&self, u: &[f64]) -> f64 {
        let (lo, hi) = self
            .vertices
            .iter()
            .map(|p| u[0] * p[0] + u[1] * p[1])
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), s| (lo.min(s), hi.max(s)));
        hi - lo
    }

    pub fn convex_hull(&self) -> Result<Vec<Point2>> {
        convex_hull(&self.vertices)
    }

    pub fn hull_perimeter(&self) -> Result<f64> {
        let hull = self.convex_hull()?;
        let n = hull.len();
        Ok((0..n).map(|i| dist(hull[i], hull[(i + 1) % n])).sum())
    }

    /// Mean width of the convex hull, `|∂ hull| / π` in the plane.
    pub fn mean_width(&self) -> Result<f64> {
        Ok(self.hull_perimeter()? / PI)
    }

    pub fn is_convex(&self) -> bool {
        let n = self.vertices.len();
        let tol = self.tolerance() * self.scale();
        let mut sign = 0.0;
        for i in 0..n {
            let c = cross(self.vertices[i], self.vertices[(i + 1) % n], self.vertices[(i + 2) % n]);
            if c.abs() <= tol {
                continue;
            }
            if sign == 0.0 {
                sign = c.signum();
            } else if c.signum() != sign {
                return false;
            }
        }
        true
    }

    pub fn diameter(&self) -> f64 {
        let mut best = 0.0f64;
        for (i, &a) in self.vertices.iter().enumerate() {
            for &b in &self.vertices[i + 1..] {
                best = best.max(dist(a, b));
            }
        }
        best
    }

    /// Even-odd point-in-polygon test.
    pub fn contains(&self, p: Point2) -> bool {
        let n = self.vertices.len();
        let mut inside = false;
        let mut j = n - 1;
        for i in 0..n {
            let (a, b) = (self.vertices[i], self.vertices[j]);
            if (a[1] > p[1]) != (b[1] > p[1]) {
                let x = a[0] + (p[1] - a[1]) * (b[0] - a[0]) / (b[1] - a[1]);
                if p[0] < x {
                    inside = !inside;
                }
            }
            j = i;
        }
        inside
    }

    pub fn boundary_distance(&self, p: Point2) -> f64 {
        let n = self.vertices.len();
        (0..n)
            .map(|i| point_segment_distance(p, self.vertices[i], self.vertices[(i + 1) % n]))
            .fold(f64::INFINITY, f64::min)
    }

    /// `(min corner, max corner)`.
    pub fn bounding_box(&self) -> (Point2, Point2) {
        self.vertices.iter().fold(
            ([f64::INFINITY; 2], [f64::NEG_INFINITY; 2]),
            |(lo, hi), p| ([lo[0].min(p[0]), lo[1].min(p[1])], [hi[0].max(p[0]), hi[1].max(p[1])]),
        )
    }

    /// Inradius estimate: grid search for the deepest interior point, then
    /// a shrinking pattern search around it. Accurate to roughly 1e-6 of
    /// the bounding box size.
    pub fn inradius(&self) -> f64 {
        let (lo, hi) = self.bounding_box();
        let span = (hi[0] - lo[0]).max(hi[1] - lo[1]);
        let samples = 96;
        let mut best = (0.0f64, [0.0, 0.0]);
        for i in 0..=samples {
            for j in 0..=samples {
                let p = [
                    lo[0] + (hi[0] - lo[0]) * i as f64 / samples as f64,
                    lo[1] + (hi[1] - lo[1]) * j as f64 / samples as f64,
                ];
                if self.contains(p) {
                    let d = self.boundary_distance(p);
                    if d > best.0 {
                        best = (d, p);
                    }
                }
            }
        }
        let mut step = span / samples as f64;
        while step > 1e-7 * span {
            let mut improved = false;
            for (dx, dy) in [(1.0, 0.0), (-1.0, 0.0), (0.0, 1.0), (0.0, -1.0), (1.0, 1.0), (-1.0, -1.0), (1.0, -1.0), (-1.0, 1.0)] {
                let p = [best.1[0] + dx * step, best.1[1] + dy * step];
                if self.contains(p) {
                    let d = self.boundary_distance(p);
                    if d > best.0 {
                        best = (d, p);
                        improved = true;
                    }
                }
            }
            if !improved {
                step /= 2.0;
            }
        }
        best.0
    }

    /// Smallest positive parameter `t ≤ t_max` at which `p + t·dir` meets
    /// the boundary, if any.
    pub fn ray_exit(&self, p: Point2, dir: Point2, t_max: f64) -> Option<f64> {
        let n = self.vertices.len();
        let mut best: Option<f64> = None;
        for i in 0..n {
            let (a, b) = (self.vertices[i], self.vertices[(i + 1) % n]);
            let e = [b[0] - a[0], b[1] - a[1]];
            let denom = dir[0] * e[1] - dir[1] * e[0];
            if denom == 0.0 {
                continue;
            }
            let w = [a[0] - p[0], a[1] - p[1]];
            let t = (w[0] * e[1] - w[1] * e[0]) / denom;
            let s = (w[0] * dir[1] - w[1] * dir[0]) / denom;
            if t > 0.0 && t <= t_max && (-1e-14..=1.0 + 1e-14).contains(&s) {
                best = Some(best.map_or(t, |bt: f64| bt.min(t)));
            }
        }
        best
    }
}

/// A Euclidean domain.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "DomainSpec", into = "DomainSpec")]
pub enum Domain {
    Interval(f64),
    Box(Vec<f64>),
    Polygon(Polygon),
    Product(Box<Domain>, Box<Domain>),
}

/// JSON wire form of a [`Domain`].
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum DomainSpec {
    Interval { length: f64 },
    Box { lengths: Vec<f64> },
    Polygon { vertices: Vec<Point2> },
    Product { left: Box<DomainSpec>, right: Box<DomainSpec> },
}

impl TryFrom<DomainSpec> for Domain {
    type Error = Error;

    fn try_from(spec: DomainSpec) -> Result<Self> {
        match spec {
            DomainSpec::Interval { length } => Domain::interval(length),
            DomainSpec::Box { lengths } => Domain::new_box(lengths),
            DomainSpec::Polygon { vertices } => Ok(Domain::Polygon(Polygon::new(vertices)?)),
            DomainSpec::Product { left, right } => {
                Ok(Domain::product(Domain::try_from(*left)?, Domain::try_from(*right)?))
            }
        }
    }
}

impl From<Domain> for DomainSpec {
    fn from(d: Domain) -> Self {
        match d {
            Domain::Interval(length) => DomainSpec::Interval { length },
            Domain::Box(lengths) => DomainSpec::Box { lengths },
            Domain::Polygon(p) => DomainSpec::Polygon { vertices: p.vertices },
            Domain::Product(a, b) => DomainSpec::Product {
                left: Box::new((*a).into()),
                right: Box::new((*b).into()),
            },
        }
    }
}

fn check_length(l: f64) -> Result<()> {
    if l.is_finite() && l > 0.0 {
        Ok(())
    } else {
        Err(Error::Geometry(format!("lengths must be positive and finite, got {l}")))
    }
}

impl Domain {
    pub fn interval(length: f64) -> Result<Self> {
        check_length(length)?;
        Ok(Domain::Interval(length))
    }

    pub fn new_box(lengths: Vec<f64>) -> Result<Self> {
        if lengths.is_empty() {
            return Err(Error::Geometry("box needs at least one side".into()));
        }
        for &l in &lengths {
            check_length(l)?;
        }
        Ok(Domain::Box(lengths))
    }

    pub fn polygon(vertices: Vec<Point2>) -> Result<Self> {
        Ok(Domain::Polygon(Polygon::new(vertices)?))
    }

    pub fn product(left: Domain, right: Domain) -> Self {
        Domain::Product(Box::new(left), Box::new(right))
    }

    /// Parses and validates the JSON description.
    pub fn from_json(text: &str) -> Result<Self> {
        let spec: DomainSpec = serde_json::from_str(text)?;
        Domain::try_from(spec)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&DomainSpec::from(self.clone())).expect("domain spec serializes")
    }

    pub fn dimension(&self) -> usize {
        match self {
            Domain::Interval(_) => 1,
            Domain::Box(l) => l.len(),
            Domain::Polygon(_) => 2,
            Domain::Product(a, b) => a.dimension() + b.dimension(),
        }
    }

    /// Lebesgue measure.
    pub fn volume(&self) -> f64 {
        match self {
            Domain::Interval(l) => *l,
            Domain::Box(l) => l.iter().product(),
            Domain::Polygon(p) => p.area(),
            Domain::Product(a, b) => a.volume() * b.volume(),
        }
    }

    /// (d−1)-dimensional boundary measure; 2 for an interval (two endpoints).
    pub fn boundary_measure(&self) -> f64 {
        match self {
            Domain::Interval(_) => 2.0,
            Domain::Box(l) => {
                let vol: f64 = l.iter().product();
                l.iter().map(|li| 2.0 * vol / li).sum()
            }
            Domain::Polygon(p) => p.perimeter(),
            Domain::Product(a, b) => a.boundary_measure() * b.volume() + a.volume() * b.boundary_measure(),
        }
    }

    fn support_width(&self, u: &[f64]) -> f64 {
        match self {
            Domain::Interval(l) => l * u[0].abs(),
            Domain::Box(l) => l.iter().zip(u).map(|(li, ui)| li * ui.abs()).sum(),
            Domain::Polygon(p) => p.support_width(u),
            Domain::Product(a, b) => {
                let da = a.dimension();
                a.support_width(&u[..da]) + b.support_width(&u[da..])
            }
        }
    }

    /// Width in direction `v`: `sup v·(x − y)` over the domain.
    pub fn width(&self, v: &UnitVector) -> Result<f64> {
        if v.dim() != self.dimension() {
            return Err(Error::arg(format!(
                "direction has dimension {} but the domain has dimension {}",
                v.dim(),
                self.dimension()
            )));
        }
        Ok(self.support_width(v.components()))
    }

    /// Widths along each coordinate axis.
    pub fn axis_widths(&self) -> Vec<f64> {
        let d = self.dimension();
        (0..d)
            .map(|i| {
                let mut e = vec![0.0; d];
                e[i] = 1.0;
                self.support_width(&e)
            })
            .collect()
    }

    /// Side lengths when the domain is a box up to reordering of factors
    /// (intervals, boxes and products of those).
    pub fn box_lengths(&self) -> Option<Vec<f64>> {
        match self {
            Domain::Interval(l) => Some(vec![*l]),
            Domain::Box(l) => Some(l.clone()),
            Domain::Polygon(_) => None,
            Domain::Product(a, b) => {
                let mut l = a.box_lengths()?;
                l.extend(b.box_lengths()?);
                Some(l)
            }
        }
    }

    pub fn as_polygon(&self) -> Option<&Polygon> {
        match self {
            Domain::Polygon(p) => Some(p),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_square() -> Polygon {
        Polygon::rectangle([0.0, 0.0], 1.0, 1.0).unwrap()
    }

    fn triangle() -> Polygon {
        Polygon::new(vec![[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]]).unwrap()
    }

    #[test]
    fn box_widths() {
        let b = Domain::new_box(vec![1.0, 1.0]).unwrap();
        assert_eq!(b.width(&UnitVector::axis(2, 0).unwrap()).unwrap(), 1.0);
        let diag = UnitVector::normalized(vec![1.0, 1.0]).unwrap();
        // brute force over the four corner pairs
        let corners = [[0.0, 0.0], [1.0, 0.0], [0.0, 1.0], [1.0, 1.0]];
        let mut brute = f64::NEG_INFINITY;
        for x in corners {
            for y in corners {
                let c = diag.components();
                brute = brute.max(c[0] * (x[0] - y[0]) + c[1] * (x[1] - y[1]));
            }
        }
        let w = b.width(&diag).unwrap();
        assert!((w - brute).abs() < 1e-15);
        assert!((w - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn triangle_width_and_mismatch() {
        let t = Domain::Polygon(triangle());
        assert_eq!(t.width(&UnitVector::axis(2, 0).unwrap()).unwrap(), 1.0);
        let v3 = UnitVector::axis(3, 0).unwrap();
        assert!(matches!(t.width(&v3), Err(Error::Argument(_))));
    }

    #[test]
    fn volumes() {
        assert_eq!(Domain::new_box(vec![1.0, 2.0, 3.0]).unwrap().volume(), 6.0);
        assert_eq!(Domain::Polygon(unit_square()).volume(), 1.0);
        let p = Domain::product(Domain::new_box(vec![1.0, 1.0]).unwrap(), Domain::interval(0.5).unwrap());
        assert_eq!(p.volume(), 0.5);
        assert_eq!(p.dimension(), 3);
    }

    #[test]
    fn hull_perimeters() {
        assert!((unit_square().hull_perimeter().unwrap() - 4.0).abs() < 1e-14);
        let l_shape = Polygon::new(vec![
            [0.0, 0.0],
            [2.0, 0.0],
            [2.0, 1.0],
            [1.0, 1.0],
            [1.0, 2.0],
            [0.0, 2.0],
        ])
        .unwrap();
        // hull (0,0),(2,0),(2,1),(1,2),(0,2): 2 + 1 + √2 + 1 + 2
        assert!((l_shape.hull_perimeter().unwrap() - (6.0 + 2f64.sqrt())).abs() < 1e-14);
        assert_eq!(l_shape.convex_hull().unwrap().len(), 5);
        assert!((triangle().hull_perimeter().unwrap() - (2.0 + 2f64.sqrt())).abs() < 1e-14);
    }

    #[test]
    fn collinear_points_have_no_hull() {
        assert!(matches!(
            convex_hull(&[[0.0, 0.0], [1.0, 1.0], [2.0, 2.0]]),
            Err(Error::Geometry(_))
        ));
        // interior collinear vertex is dropped without changing the perimeter
        let p = Polygon::new(vec![[0.0, 0.0], [0.5, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]]).unwrap();
        assert_eq!(p.convex_hull().unwrap().len(), 4);
        assert!((p.hull_perimeter().unwrap() - 4.0).abs() < 1e-14);
    }

    fn angular_average_width(p: &Polygon, samples: usize) -> f64 {
        let d = Domain::Polygon(p.clone());
        (0..samples)
            .map(|i| {
                let t = 2.0 * PI * (i as f64 + 0.5) / samples as f64;
                d.width(&UnitVector::from_angle(t)).unwrap()
            })
            .sum::<f64>()
            / samples as f64
    }

    #[test]
    fn mean_width_matches_angular_average() {
        for p in [unit_square(), triangle()] {
            let avg = angular_average_width(&p, 10_000);
            assert!((p.mean_width().unwrap() - avg).abs() < 1e-6, "{avg}");
        }
        assert!((unit_square().mean_width().unwrap() - 4.0 / PI).abs() < 1e-12);
        let disk = Polygon::regular(64, 1.0, [0.0, 0.0]).unwrap();
        assert!((disk.mean_width().unwrap() - 2.0).abs() / 2.0 < 2e-3);
    }

    #[test]
    fn polygon_validation() {
        assert!(Polygon::new(vec![[0.0, 0.0], [1.0, 0.0]]).is_err());
        // bow tie
        assert!(Polygon::new(vec![[0.0, 0.0], [1.0, 1.0], [1.0, 0.0], [0.0, 1.0]]).is_err());
        assert!(Polygon::new(vec![[0.0, 0.0], [1.0, 0.0], [2.0, 0.0]]).is_err());
        assert!(Domain::new_box(vec![1.0, 0.0]).is_err());
        assert!(Domain::interval(-1.0).is_err());
    }

    #[test]
    fn json_round_trip() {
        let text = r#"{"type":"product","left":{"type":"box","lengths":[1,2]},"right":{"type":"interval","length":0.5}}"#;
        let d = Domain::from_json(text).unwrap();
        assert_eq!(d.dimension(), 3);
        assert_eq!(Domain::from_json(&d.to_json()).unwrap(), d);
        let poly = Domain::from_json(r#"{"type":"polygon","vertices":[[0,0],[1,0],[0,1]]}"#).unwrap();
        assert!((poly.volume() - 0.5).abs() < 1e-15);
        assert!(Domain::from_json(r#"{"type":"box","lengths":[1,-1]}"#).is_err());
        assert!(Domain::from_json(r#"{"type":"disk"}"#).is_err());
        assert!(Domain::from_json("not json").is_err());
    }

    #[test]
    fn boundary_measures() {
        assert_eq!(Domain::new_box(vec![1.0, 1.0]).unwrap().boundary_measure(), 4.0);
        assert_eq!(Domain::new_box(vec![1.0, 1.0, 1.0]).unwrap().boundary_measure(), 6.0);
        let p = Domain::product(Domain::new_box(vec![1.0, 1.0]).unwrap(), Domain::interval(0.5).unwrap());
        assert!((p.boundary_measure() - (4.0 * 0.5 + 2.0)).abs() < 1e-15);
    }

    #[test]
    fn inradius_of_simple_shapes() {
        assert!((unit_square().inradius() - 0.5).abs() < 1e-5);
        // right isosceles triangle with legs 1: r = (a + b − c)/2
        assert!((triangle().inradius() - (2.0 - 2f64.sqrt()) / 2.0).abs() < 1e-5);
    }

    #[test]
    fn ray_exit_hits_nearest_edge() {
        let sq = unit_square();
        let t = sq.ray_exit([0.25, 0.5], [1.0, 0.0], 10.0).unwrap();
        assert!((t - 0.75).abs() < 1e-15);
        assert!(sq.ray_exit([0.25, 0.5], [1.0, 0.0], 0.5).is_none());
    }
}

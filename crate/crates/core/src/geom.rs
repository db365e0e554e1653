//! Plane geometry helpers: points, straight segments, and exact-enough
//! intersection tests for embedding validation.
//!
//! Fixtures use coordinates far from degeneracy, so plain f64 orientation
//! predicates are adequate here.

use std::ops::{Add, Sub};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub fn new(x: f64, y: f64) -> Point {
        Point { x, y }
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn translated(self, dx: i64, dy: i64) -> Point {
        Point::new(self.x + dx as f64, self.y + dy as f64)
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Segment {
    pub a: Point,
    pub b: Point,
}

impl Segment {
    pub fn new(a: Point, b: Point) -> Segment {
        Segment { a, b }
    }

    pub fn length(&self) -> f64 {
        (self.b - self.a).norm()
    }

    pub fn translated(&self, dx: i64, dy: i64) -> Segment {
        Segment::new(self.a.translated(dx, dy), self.b.translated(dx, dy))
    }
}

const EPS: f64 = 1e-9;

/// Sign of the cross product (b - a) x (c - a): >0 left turn, <0 right turn.
pub fn orient(a: Point, b: Point, c: Point) -> f64 {
    (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
}

fn approx_eq(p: Point, q: Point) -> bool {
    (p.x - q.x).abs() < EPS && (p.y - q.y).abs() < EPS
}

fn on_segment_closed(s: &Segment, p: Point) -> bool {
    if orient(s.a, s.b, p).abs() > EPS {
        return false;
    }
    let (lo_x, hi_x) = if s.a.x <= s.b.x { (s.a.x, s.b.x) } else { (s.b.x, s.a.x) };
    let (lo_y, hi_y) = if s.a.y <= s.b.y { (s.a.y, s.b.y) } else { (s.b.y, s.a.y) };
    p.x >= lo_x - EPS && p.x <= hi_x + EPS && p.y >= lo_y - EPS && p.y <= hi_y + EPS
}

/// True iff `p` lies on `s` strictly between its endpoints.
pub fn point_in_segment_interior(s: &Segment, p: Point) -> bool {
    on_segment_closed(s, p) && !approx_eq(p, s.a) && !approx_eq(p, s.b)
}

/// True iff the two segments share any point that is not a shared endpoint.
///
/// Touching at a common endpoint is allowed; every other contact (proper
/// crossing, T-contact, overlap) counts as an intersection.
pub fn segments_conflict(s: &Segment, t: &Segment) -> bool {
    let shared_a = approx_eq(s.a, t.a) || approx_eq(s.a, t.b);
    let shared_b = approx_eq(s.b, t.a) || approx_eq(s.b, t.b);
    if shared_a && shared_b {
        // identical (or reversed) segment: overlap unless degenerate
        return s.length() > EPS;
    }

    let d1 = orient(t.a, t.b, s.a);
    let d2 = orient(t.a, t.b, s.b);
    let d3 = orient(s.a, s.b, t.a);
    let d4 = orient(s.a, s.b, t.b);

    // proper crossing
    if ((d1 > EPS && d2 < -EPS) || (d1 < -EPS && d2 > EPS))
        && ((d3 > EPS && d4 < -EPS) || (d3 < -EPS && d4 > EPS))
    {
        return true;
    }

    // endpoint-on-interior and collinear overlaps
    for (seg, p, shared) in [
        (t, s.a, shared_a),
        (t, s.b, shared_b),
        (s, t.a, approx_eq(t.a, s.a) || approx_eq(t.a, s.b)),
        (s, t.b, approx_eq(t.b, s.a) || approx_eq(t.b, s.b)),
    ] {
        if !shared && on_segment_closed(seg, p) {
            return true;
        }
    }

    false
}

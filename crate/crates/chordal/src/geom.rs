//! Exact rational plane geometry.
//!
//! Every predicate in this module is decided with `BigRational` arithmetic;
//! nothing here ever rounds. Directions are compared through cross-product
//! signs, so no angles (and no floating point) appear anywhere in the
//! geometric core.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

pub type Rat = BigRational;

/// Shorthand for a rational from two machine integers.
pub fn rat(num: i64, den: i64) -> Rat {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(num: i64) -> Rat {
    BigRational::from(BigInt::from(num))
}

/// Renders a rational as `p/q` in lowest terms with a positive denominator.
pub fn rat_to_string(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `p/q` or a bare integer `p`.
pub fn rat_from_str(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().ok()?;
            Some(BigRational::from(n))
        }
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub x: Rat,
    pub y: Rat,
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl Point {
    pub fn new(x: Rat, y: Rat) -> Self {
        Point { x, y }
    }

    pub fn sub(&self, other: &Point) -> Dir {
        Dir {
            x: &self.x - &other.x,
            y: &self.y - &other.y,
        }
    }
}

/// A direction (nonzero vector). Never normalized: all comparisons are sign
/// tests on cross products.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Dir {
    pub x: Rat,
    pub y: Rat,
}

impl fmt::Debug for Dir {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "dir({}, {})", self.x, self.y)
    }
}

impl Dir {
    pub fn new(x: Rat, y: Rat) -> Self {
        Dir { x, y }
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn neg(&self) -> Dir {
        Dir {
            x: -self.x.clone(),
            y: -self.y.clone(),
        }
    }

    /// Counterclockwise quarter turn.
    pub fn rot90(&self) -> Dir {
        Dir {
            x: -self.y.clone(),
            y: self.x.clone(),
        }
    }

    pub fn add(&self, other: &Dir) -> Dir {
        Dir {
            x: &self.x + &other.x,
            y: &self.y + &other.y,
        }
    }

    /// True when `other` is a positive multiple of `self`.
    pub fn same_ray(&self, other: &Dir) -> bool {
        cross(self, other).is_zero() && dot(self, other).is_positive()
    }
}

pub fn cross(a: &Dir, b: &Dir) -> Rat {
    &a.x * &b.y - &a.y * &b.x
}

pub fn dot(a: &Dir, b: &Dir) -> Rat {
    &a.x * &b.x + &a.y * &b.y
}

/// Sign of the signed area of the triangle `o`, `a`, `b`: positive for a
/// counterclockwise turn, zero for collinear points.
pub fn orient(o: &Point, a: &Point, b: &Point) -> i8 {
    let v = cross(&a.sub(o), &b.sub(o));
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

/// Quadrant index used to order directions counterclockwise starting just
/// above the positive x-axis: (+,0) and (+,+) come first.
fn quadrant(d: &Dir) -> u8 {
    let xs = d.x.is_positive() as i8 - d.x.is_negative() as i8;
    let ys = d.y.is_positive() as i8 - d.y.is_negative() as i8;
    match (xs, ys) {
        (1, 0) => 0,
        (1, 1) => 0,
        (0, 1) => 1,
        (-1, 1) => 1,
        (-1, 0) => 2,
        (-1, -1) => 2,
        (0, -1) => 3,
        (1, -1) => 3,
        _ => panic!("zero direction has no quadrant"),
    }
}

/// Total counterclockwise order on directions with `(1, 0)` first.
/// Directions that are positive multiples of each other compare equal.
pub fn cmp_dir(a: &Dir, b: &Dir) -> Ordering {
    let (qa, qb) = (quadrant(a), quadrant(b));
    if qa != qb {
        return qa.cmp(&qb);
    }
    let c = cross(a, b);
    if c.is_positive() {
        Ordering::Less
    } else if c.is_negative() {
        Ordering::Greater
    } else {
        // Same quadrant and collinear implies the same ray.
        Ordering::Equal
    }
}

/// Is `d` strictly inside the open counterclockwise cone from `a` to `b`?
/// Requires the cone to span less than a half turn (`cross(a, b) > 0`).
pub fn dir_in_open_cone(d: &Dir, a: &Dir, b: &Dir) -> bool {
    debug_assert!(cross(a, b).is_positive());
    cross(a, d).is_positive() && cross(d, b).is_positive()
}

/// Is `d` inside the closed counterclockwise cone from `a` to `b`
/// (spanning less than a half turn)?
pub fn dir_in_closed_cone(d: &Dir, a: &Dir, b: &Dir) -> bool {
    debug_assert!(cross(a, b).is_positive());
    !cross(a, d).is_negative() && !cross(d, b).is_negative()
}

/// Point on the unit circle with parameter `t`: `((1-t^2)/(1+t^2), 2t/(1+t^2))`.
/// Strictly increasing `t` walks counterclockwise through the arc that
/// excludes `(-1, 0)`.
pub fn circle_point(t: &Rat) -> Point {
    let t2 = t * t;
    let den = &t2 + Rat::one();
    let x = (Rat::one() - &t2) / den.clone();
    let y = (rat_int(2) * t) / den;
    Point::new(x, y)
}

/// Is `p` strictly inside the open segment `ab`?
pub fn on_open_segment(p: &Point, a: &Point, b: &Point) -> bool {
    if orient(a, b, p) != 0 {
        return false;
    }
    let ap = p.sub(a);
    let ab = b.sub(a);
    let t = dot(&ap, &ab);
    t.is_positive() && t < dot(&ab, &ab)
}

/// Result of intersecting two closed segments that are not collinear-overlapping.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SegmentMeet {
    /// Disjoint, or touching only at shared endpoints.
    None,
    /// The open interiors cross in exactly one point.
    Proper(Point),
    /// Degenerate contact (collinear overlap or an endpoint interior to the
    /// other segment); valid drawings never produce this.
    Degenerate,
}

/// Classifies the intersection of segments `ab` and `cd`. Segments sharing an
/// endpoint do not cross. An endpoint lying in the interior of the other
/// segment, or a collinear overlap, is reported as `Degenerate`.
pub fn segments_meet(a: &Point, b: &Point, c: &Point, d: &Point) -> SegmentMeet {
    let o1 = orient(a, b, c);
    let o2 = orient(a, b, d);
    let o3 = orient(c, d, a);
    let o4 = orient(c, d, b);

    if o1 == 0 && o2 == 0 {
        // Collinear: overlap iff the 1-d extents overlap in more than a point.
        let ab = b.sub(a);
        let proj = |p: &Point| dot(&p.sub(a), &ab);
        let (mut lo, mut hi) = (proj(a), proj(b));
        if lo > hi {
            std::mem::swap(&mut lo, &mut hi);
        }
        let (mut lo2, mut hi2) = (proj(c), proj(d));
        if lo2 > hi2 {
            std::mem::swap(&mut lo2, &mut hi2);
        }
        let start = lo.max(lo2);
        let end = hi.min(hi2);
        return match start.cmp(&end) {
            Ordering::Less => SegmentMeet::Degenerate,
            Ordering::Equal => SegmentMeet::None, // single shared endpoint
            Ordering::Greater => SegmentMeet::None,
        };
    }

    if o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0 {
        // Proper crossing: solve a + s(b-a) with s = cross(c-a, d-c) / cross(b-a, d-c).
        let r = b.sub(a);
        let s_dir = d.sub(c);
        let denom = cross(&r, &s_dir);
        debug_assert!(!denom.is_zero());
        let s = cross(&c.sub(a), &s_dir) / denom;
        let x = &a.x + &s * &r.x;
        let y = &a.y + &s * &r.y;
        return SegmentMeet::Proper(Point::new(x, y));
    }

    // Some orientation vanished: a shared endpoint is fine, an endpoint in the
    // interior of the other segment is not.
    if (a == c || a == d || b == c || b == d)
        && !on_open_segment(a, c, d)
        && !on_open_segment(b, c, d)
        && !on_open_segment(c, a, b)
        && !on_open_segment(d, a, b)
    {
        return SegmentMeet::None;
    }
    if on_open_segment(a, c, d)
        || on_open_segment(b, c, d)
        || on_open_segment(c, a, b)
        || on_open_segment(d, a, b)
    {
        return SegmentMeet::Degenerate;
    }
    SegmentMeet::None
}

/// Even-odd test: is `p` inside the closed polygonal walk `walk`?
/// The walk may repeat vertices; `p` must not lie on the walk itself.
/// Uses the "strictly above" crossing convention for the ray `+x` from `p`,
/// which is robust against the ray passing through walk vertices.
pub fn point_in_walk(p: &Point, walk: &[Point]) -> bool {
    let n = walk.len();
    let mut inside = false;
    for i in 0..n {
        let a = &walk[i];
        let b = &walk[(i + 1) % n];
        let a_above = a.y > p.y;
        let b_above = b.y > p.y;
        if a_above != b_above {
            // x-coordinate of the edge at height p.y
            let t = (&p.y - &a.y) / (&b.y - &a.y);
            let x = &a.x + t * (&b.x - &a.x);
            if x > p.x {
                inside = !inside;
            }
        }
    }
    inside
}

/// Twice the signed area of the closed walk (shoelace formula).
pub fn walk_signed_area2(walk: &[Point]) -> Rat {
    let n = walk.len();
    let mut acc = Rat::zero();
    for i in 0..n {
        let a = &walk[i];
        let b = &walk[(i + 1) % n];
        acc += &a.x * &b.y - &b.x * &a.y;
    }
    acc
}

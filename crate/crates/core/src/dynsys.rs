//! The `Z^3` action on `R^3` generated by the maps `F21`, `F12`, `F22`.
//!
//! A point `(x1, x2, x3)` stands for a joint eigenvalue of the commuting
//! positive operators `z21 z21*`, `z12 z12*`, `z22 z22*`. Applying a
//! generator moves an eigenvector to the eigenspace labelled by the image
//! point, so joint spectra of irreducible representations are orbits.
//!
//! Orbit identity is always decided through integer exponents `(m, l, k)`
//! recovered by logarithm-and-round, never by raw float comparison.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Real};

/// A real triple; candidate joint eigenvalue.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Point3<T>(pub [T; 3]);

impl<T: Real> Point3<T> {
    pub fn new(x1: T, x2: T, x3: T) -> Self {
        Point3([x1, x2, x3])
    }

    pub fn distance(&self, other: &Self) -> T {
        self.0
            .iter()
            .zip(other.0)
            .map(|(a, b)| (*a - b) * (*a - b))
            .fold(T::zero(), |acc, x| acc + x)
            .sqrt()
    }

    pub fn norm(&self) -> T {
        self.0.iter().fold(T::zero(), |acc, x| acc.max(x.abs()))
    }

    /// All coordinates in `[0, 1]`.
    pub fn in_unit_cube(&self) -> bool {
        self.0.iter().all(|x| *x >= T::zero() && *x <= T::one())
    }

    pub fn cast<U: Real>(&self) -> Point3<U> {
        Point3(self.0.map(|x| U::lit(x.as_f64())))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MapTag {
    F21,
    F12,
    F22,
}

impl MapTag {
    pub const ALL: [MapTag; 3] = [MapTag::F21, MapTag::F12, MapTag::F22];
}

/// Base points of the five orbits that carry bounded irreducible
/// representations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum OrbitTag {
    #[serde(rename = "0,0,1")]
    Fixed001,
    #[serde(rename = "1,1,0")]
    Base110,
    #[serde(rename = "1,0,0")]
    Base100,
    #[serde(rename = "0,1,0")]
    Base010,
    #[serde(rename = "0,0,0")]
    Base000,
}

impl OrbitTag {
    pub const ALL: [OrbitTag; 5] = [
        OrbitTag::Fixed001,
        OrbitTag::Base110,
        OrbitTag::Base100,
        OrbitTag::Base010,
        OrbitTag::Base000,
    ];

    pub fn coordinates(self) -> [u8; 3] {
        match self {
            OrbitTag::Fixed001 => [0, 0, 1],
            OrbitTag::Base110 => [1, 1, 0],
            OrbitTag::Base100 => [1, 0, 0],
            OrbitTag::Base010 => [0, 1, 0],
            OrbitTag::Base000 => [0, 0, 0],
        }
    }

    pub fn base<T: Real>(self) -> Point3<T> {
        Point3(self.coordinates().map(|c| T::lit(f64::from(c))))
    }
}

impl fmt::Display for OrbitTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.coordinates();
        write!(f, "{a},{b},{c}")
    }
}

impl FromStr for OrbitTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let compact = compact.trim_start_matches('(').trim_end_matches(')');
        OrbitTag::ALL
            .into_iter()
            .find(|t| t.to_string() == compact)
            .ok_or_else(|| Error::UnknownOrbit(s.to_string()))
    }
}

fn step<T: Real>(tag: MapTag, p: Point3<T>, q: T) -> Point3<T> {
    let [x1, x2, x3] = p.0;
    let q2 = q * q;
    let one = T::one();
    match tag {
        MapTag::F21 => Point3([q2 * x1 - (one - q2) * (x3 - one), x2, x3]),
        MapTag::F12 => Point3([x1, q2 * x2 - (one - q2) * (x3 - one), x3]),
        MapTag::F22 => Point3([q2 * x1, q2 * x2, q2 * (x3 - one) + one]),
    }
}

fn step_inverse<T: Real>(tag: MapTag, p: Point3<T>, q: T) -> Point3<T> {
    let [x1, x2, x3] = p.0;
    let q2 = q * q;
    let one = T::one();
    match tag {
        MapTag::F21 => Point3([(x1 + (one - q2) * (x3 - one)) / q2, x2, x3]),
        MapTag::F12 => Point3([x1, (x2 + (one - q2) * (x3 - one)) / q2, x3]),
        MapTag::F22 => Point3([x1 / q2, x2 / q2, (x3 - one) / q2 + one]),
    }
}

/// `power`-fold iterate of one generator, by repeated application of the
/// map (or its inverse for negative powers).
pub fn apply_map<T: Real>(tag: MapTag, power: i32, p: Point3<T>, q: T) -> Point3<T> {
    let mut out = p;
    for _ in 0..power.unsigned_abs() {
        out = if power > 0 {
            step(tag, out, q)
        } else {
            step_inverse(tag, out, q)
        };
    }
    out
}

/// Closed-form orbit point `F21^(m) F12^(l) F22^(k) (base)`.
pub fn orbit_value<T: Real>(base: Point3<T>, exponents: [i32; 3], q: T) -> Point3<T> {
    let [b1, b2, b3] = base.0;
    let [m, l, k] = exponents;
    let q2 = q * q;
    let (qm, ql, qk) = (q2.powi(m), q2.powi(l), q2.powi(k));
    let one = T::one();
    Point3([
        qk * (qm * b1 - (one - qm) * (b3 - one)),
        qk * (ql * b2 - (one - ql) * (b3 - one)),
        qk * (b3 - one) + one,
    ])
}

/// A point of an orbit with its integer coordinates relative to the base.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OrbitPoint<T> {
    pub base: Point3<T>,
    pub m: i32,
    pub l: i32,
    pub k: i32,
    pub value: Point3<T>,
}

impl<T: Real> OrbitPoint<T> {
    pub fn exponents(&self) -> [i32; 3] {
        [self.m, self.l, self.k]
    }

    /// The same point computed by iterating the maps one step at a time.
    pub fn iterated(&self, q: T) -> Point3<T> {
        let p = apply_map(MapTag::F22, self.k, self.base, q);
        let p = apply_map(MapTag::F12, self.l, p, q);
        apply_map(MapTag::F21, self.m, p, q)
    }
}

/// One orbit point per `(m, l, k)` in the box, `m` outermost, `k` fastest.
pub fn orbit_patch<T: Real>(
    base: Point3<T>,
    range_m: RangeInclusive<i32>,
    range_l: RangeInclusive<i32>,
    range_k: RangeInclusive<i32>,
    q: T,
) -> Vec<OrbitPoint<T>> {
    let mut out = Vec::new();
    for m in range_m {
        for l in range_l.clone() {
            for k in range_k.clone() {
                out.push(OrbitPoint { base, m, l, k, value: orbit_value(base, [m, l, k], q) });
            }
        }
    }
    out
}

/// Which exponent axes actually move the orbit point for this base.
///
/// `m` is inert when `b1 + b3 = 1`, `l` when `b2 + b3 = 1`, and `k` when the
/// base is the fixed point `(0, 0, 1)`.
pub fn effective_axes<T: Real>(base: Point3<T>) -> [bool; 3] {
    let [b1, b2, b3] = base.0;
    let one = T::one();
    let m = b1 + b3 - one != T::zero();
    let l = b2 + b3 - one != T::zero();
    let k = b3 != one || b1 != T::zero() || b2 != T::zero();
    [m, l, k]
}

/// Canonical exponents for a point: inert axes set to zero.
pub fn canonical_exponents<T: Real>(base: Point3<T>, exponents: [i32; 3]) -> [i32; 3] {
    let axes = effective_axes(base);
    [0, 1, 2].map(|i| if axes[i] { exponents[i] } else { 0 })
}

/// Drops points whose canonical exponents repeat an earlier point's.
pub fn distinct_points<T: Real>(points: &[OrbitPoint<T>]) -> Vec<OrbitPoint<T>> {
    let mut seen = std::collections::HashSet::new();
    points
        .iter()
        .filter(|p| seen.insert(canonical_exponents(p.base, p.exponents())))
        .map(|p| {
            let [m, l, k] = canonical_exponents(p.base, p.exponents());
            OrbitPoint { m, l, k, ..*p }
        })
        .collect()
}

/// Exponent search box for [`orbit_membership`]: each of `m, l, k` in
/// `[-bound, bound]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBox {
    pub bound: i32,
}

impl Default for SearchBox {
    fn default() -> Self {
        SearchBox { bound: 40 }
    }
}

fn log_q2<T: Real>(ratio: T, q: T) -> Option<i32> {
    if ratio <= T::zero() || !ratio.is_finite() {
        return None;
    }
    let e = (ratio.ln() / (q * q).ln()).round();
    e.to_i32()
}

/// Recovers `(m, l, k)` with `|orbit_value(base, (m, l, k)) - p| < tol`.
///
/// `k` comes from `x3` or, when an axis is inert, from the matching
/// coordinate (which then equals `q^2k (1 - b3)` without cancellation).
/// `m` and `l` are then solved coordinate-wise. Inert axes report zero, the
/// smallest nonnegative choice. Candidates are verified against the closed
/// form before being returned.
pub fn orbit_membership<T: Real>(
    p: Point3<T>,
    base: Point3<T>,
    q: T,
    tol: T,
    search: SearchBox,
) -> Option<[i32; 3]> {
    let [x1, x2, x3] = p.0;
    let [b1, b2, b3] = base.0;
    let one = T::one();
    let [axis_m, axis_l, _] = effective_axes(base);

    let exponents = if b3 == one {
        // x = (q^2(k+m) b1, q^2(k+l) b2, 1): fold k into m and l.
        let m = if b1 != T::zero() { log_q2(x1 / b1, q)? } else { 0 };
        let l = if b2 != T::zero() { log_q2(x2 / b2, q)? } else { 0 };
        [m, l, 0]
    } else {
        let scale = one - b3;
        let k = if !axis_m {
            log_q2(x1 / scale, q)?
        } else if !axis_l {
            log_q2(x2 / scale, q)?
        } else {
            log_q2((one - x3) / scale, q)?
        };
        let qk = (q * q).powi(k);
        let solve = |x: T, b: T, active: bool| -> Option<i32> {
            if !active {
                return Some(0);
            }
            log_q2((x / qk + b3 - one) / (b + b3 - one), q)
        };
        [solve(x1, b1, axis_m)?, solve(x2, b2, axis_l)?, k]
    };

    if exponents.iter().any(|e| e.abs() > search.bound) {
        return None;
    }
    (orbit_value(base, exponents, q).distance(&p) < tol).then_some(exponents)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Boundedness {
    /// Every `F22` iterate equals the base point.
    Constant,
    /// `0 <= x3 <= 1`: forward iterates stay bounded.
    Bounded,
    /// `x3 > 1`: the two-sided `F22` orbit is forced and grows like `q^-2k`.
    Unbounded,
    /// `x3 < 0`: not a joint eigenvalue of positive operators.
    Inadmissible,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct BoundednessReport {
    pub horizon: u32,
    /// Max coordinate norm over `k` in `[-horizon, horizon]`.
    pub max_norm: f64,
    /// Max coordinate norm over `k` in `[0, horizon]`.
    pub forward_max_norm: f64,
    /// `|F22^(-horizon)(p)| / max(|p|, 1)`.
    pub growth: f64,
    pub verdict: Boundedness,
}

/// Scans `F22` iterates of `base` over `k` in `[-horizon, horizon]`.
pub fn boundedness_probe<T: Real>(base: Point3<T>, q: T, horizon: u32) -> BoundednessReport {
    let h = horizon.max(1) as i32;
    let mut max_norm = T::zero();
    let mut forward = T::zero();
    let mut constant = true;
    let mut p = apply_map(MapTag::F22, -h, base, q);
    let far_back = p.norm();
    for k in -h..=h {
        if k > -h {
            p = apply_map(MapTag::F22, 1, p, q);
        }
        let n = p.norm();
        max_norm = max_norm.max(n);
        if k >= 0 {
            forward = forward.max(n);
        }
        constant &= p.distance(&base) <= T::lit(1e-12) * (T::one() + base.norm());
    }
    let x3 = base.0[2];
    let verdict = if constant {
        Boundedness::Constant
    } else if x3 > T::one() {
        Boundedness::Unbounded
    } else if x3 < T::zero() {
        Boundedness::Inadmissible
    } else {
        Boundedness::Bounded
    };
    BoundednessReport {
        horizon: h as u32,
        max_norm: max_norm.as_f64(),
        forward_max_norm: forward.as_f64(),
        growth: (far_back / base.norm().max(T::one())).as_f64(),
        verdict,
    }
}

//! The projective plane over a field.
//!
//! Points are one-dimensional subspaces of `F^3` and lines are
//! two-dimensional subspaces, but neither subspace is ever materialized:
//! a point is stored as a canonical homogeneous coordinate vector, and a
//! line as the canonical coordinate vector perpendicular to it. Join and
//! meet are both cross products, incidence is a vanishing inner product,
//! and collinearity/concurrency are vanishing determinants.
//!
//! The canonical representative scales a coordinate vector so its first
//! nonzero component is 1, which turns projective equality into plain
//! value comparison.

use std::fmt;

use crate::fields::Field;
use crate::vec3::{det3, Vec3};
use crate::{Error, Result};

/// A projective point, held as its canonical coordinate vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ProjPoint<F: Field>(Vec3<F>);

/// A projective line, held as the canonical form of its perpendicular
/// coordinate vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ProjLine<F: Field>(Vec3<F>);

/// Scale a nonzero vector so its first nonzero component becomes 1.
pub fn canonical_rep<F: Field>(v: &Vec3<F>) -> Result<Vec3<F>> {
    let lead = v
        .components()
        .iter()
        .find(|c| !crate::fields::Ring::is_zero(*c))
        .ok_or(Error::ZeroVector)?;
    v.scale(&lead.inv()?)
}

impl<F: Field> ProjPoint<F> {
    /// The point spanned by `v`.
    pub fn from_vec(v: &Vec3<F>) -> Result<Self> {
        Ok(ProjPoint(canonical_rep(v)?))
    }

    pub fn rep(&self) -> &Vec3<F> {
        &self.0
    }
}

impl<F: Field> ProjLine<F> {
    /// The line whose coordinate vector is `v`.
    pub fn from_vec(v: &Vec3<F>) -> Result<Self> {
        Ok(ProjLine(canonical_rep(v)?))
    }

    pub fn rep(&self) -> &Vec3<F> {
        &self.0
    }
}

impl<F: Field> fmt::Display for ProjPoint<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.0.components();
        write!(f, "point({}, {}, {})", c[0], c[1], c[2])
    }
}

impl<F: Field> fmt::Display for ProjLine<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.0.components();
        write!(f, "line({}, {}, {})", c[0], c[1], c[2])
    }
}

/// The unique line through two distinct points: coordinates are the cross
/// product of the points' coordinates.
pub fn join<F: Field>(p: &ProjPoint<F>, q: &ProjPoint<F>) -> Result<ProjLine<F>> {
    let cross = p.0.cross(&q.0)?;
    if cross.is_zero() {
        // canonical representatives are proportional exactly when equal
        return Err(Error::CoincidentPoints);
    }
    ProjLine::from_vec(&cross)
}

/// The unique point on two distinct lines, dually a cross product.
pub fn meet<F: Field>(l: &ProjLine<F>, m: &ProjLine<F>) -> Result<ProjPoint<F>> {
    let cross = l.0.cross(&m.0)?;
    if cross.is_zero() {
        return Err(Error::CoincidentLines);
    }
    ProjPoint::from_vec(&cross)
}

/// A point is on a line iff their coordinate vectors are perpendicular.
pub fn incident<F: Field>(p: &ProjPoint<F>, l: &ProjLine<F>) -> Result<bool> {
    Ok(crate::fields::Ring::is_zero(&p.0.dot(&l.0)?))
}

/// Three points are collinear iff their coordinates have determinant zero.
pub fn collinear<F: Field>(p: &ProjPoint<F>, q: &ProjPoint<F>, r: &ProjPoint<F>) -> Result<bool> {
    Ok(crate::fields::Ring::is_zero(&det3(&p.0, &q.0, &r.0)?))
}

/// Three lines are concurrent iff their coordinates have determinant zero.
pub fn concurrent<F: Field>(l: &ProjLine<F>, m: &ProjLine<F>, n: &ProjLine<F>) -> Result<bool> {
    Ok(crate::fields::Ring::is_zero(&det3(&l.0, &m.0, &n.0)?))
}

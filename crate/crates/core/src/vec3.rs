//! Vectors in `F^3`: inner product, cross product, determinant, and the
//! triple/quadruple product formulas.
//!
//! `Vec3` is a plain value type with component-wise equality. The zero
//! vector is legal here; projective identification (nonzero vectors up to
//! scale) lives strictly in [`crate::projective`].

use std::fmt;

use rand::Rng;

use crate::fields::{Field, FieldCtx, Ring};
use crate::{Error, Result};

/// A triple of field elements, all from the same field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Vec3<F: Field> {
    c: [F; 3],
}

impl<F: Field + Copy> Copy for Vec3<F> {}

impl<F: Field> Vec3<F> {
    /// Build a vector, rejecting components from different fields.
    pub fn new(c1: F, c2: F, c3: F) -> Result<Self> {
        if !c1.same_field(&c2) || !c1.same_field(&c3) {
            return Err(mismatch(&c1, if c1.same_field(&c2) { &c3 } else { &c2 }));
        }
        Ok(Vec3 { c: [c1, c2, c3] })
    }

    pub fn from_i64s(ctx: &F::Ctx, c: [i64; 3]) -> Self {
        Vec3 {
            c: [ctx.from_i64(c[0]), ctx.from_i64(c[1]), ctx.from_i64(c[2])],
        }
    }

    pub fn zero(ctx: &F::Ctx) -> Self {
        Vec3 {
            c: [ctx.zero(), ctx.zero(), ctx.zero()],
        }
    }

    /// Components uniform over the field; may be the zero vector.
    pub fn sample<R: Rng + ?Sized>(ctx: &F::Ctx, rng: &mut R) -> Self {
        Vec3 {
            c: [ctx.sample(rng), ctx.sample(rng), ctx.sample(rng)],
        }
    }

    /// Rejection-samples until some component is nonzero.
    pub fn sample_nonzero<R: Rng + ?Sized>(ctx: &F::Ctx, rng: &mut R) -> Self {
        loop {
            let v = Self::sample(ctx, rng);
            if !v.is_zero() {
                return v;
            }
        }
    }

    /// Parse the textual form "(a, b, c)".
    pub fn parse(ctx: &F::Ctx, s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| Error::ParseError(format!("expected \"(a, b, c)\", got {s:?}")))?;
        let parts: Vec<&str> = inner.split(',').collect();
        if parts.len() != 3 {
            return Err(Error::ParseError(format!(
                "expected 3 components, got {} in {s:?}",
                parts.len()
            )));
        }
        Ok(Vec3 {
            c: [
                ctx.parse_elem(parts[0])?,
                ctx.parse_elem(parts[1])?,
                ctx.parse_elem(parts[2])?,
            ],
        })
    }

    pub fn components(&self) -> &[F; 3] {
        &self.c
    }

    pub fn ctx(&self) -> F::Ctx {
        self.c[0].ctx()
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Ring::is_zero)
    }

    pub fn same_field(&self, rhs: &Self) -> bool {
        self.c[0].same_field(&rhs.c[0])
    }

    fn require_same_field(&self, rhs: &Self) -> Result<()> {
        if self.same_field(rhs) {
            Ok(())
        } else {
            Err(mismatch(&self.c[0], &rhs.c[0]))
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.require_same_field(rhs)?;
        Ok(Vec3 {
            c: [
                self.c[0].add(&rhs.c[0]),
                self.c[1].add(&rhs.c[1]),
                self.c[2].add(&rhs.c[2]),
            ],
        })
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.require_same_field(rhs)?;
        Ok(Vec3 {
            c: [
                self.c[0].sub(&rhs.c[0]),
                self.c[1].sub(&rhs.c[1]),
                self.c[2].sub(&rhs.c[2]),
            ],
        })
    }

    pub fn neg(&self) -> Self {
        Vec3 {
            c: [self.c[0].neg(), self.c[1].neg(), self.c[2].neg()],
        }
    }

    pub fn scale(&self, r: &F) -> Result<Self> {
        if !r.same_field(&self.c[0]) {
            return Err(mismatch(r, &self.c[0]));
        }
        Ok(Vec3 {
            c: [r.mul(&self.c[0]), r.mul(&self.c[1]), r.mul(&self.c[2])],
        })
    }

    /// Inner product `x1*y1 + x2*y2 + x3*y3`.
    pub fn dot(&self, rhs: &Self) -> Result<F> {
        self.require_same_field(rhs)?;
        Ok(self.c[0]
            .mul(&rhs.c[0])
            .add(&self.c[1].mul(&rhs.c[1]))
            .add(&self.c[2].mul(&rhs.c[2])))
    }

    /// Cross product `(x2*y3 - x3*y2, x3*y1 - x1*y3, x1*y2 - x2*y1)`.
    pub fn cross(&self, rhs: &Self) -> Result<Self> {
        self.require_same_field(rhs)?;
        let (x, y) = (&self.c, &rhs.c);
        Ok(Vec3 {
            c: [
                x[1].mul(&y[2]).sub(&x[2].mul(&y[1])),
                x[2].mul(&y[0]).sub(&x[0].mul(&y[2])),
                x[0].mul(&y[1]).sub(&x[1].mul(&y[0])),
            ],
        })
    }
}

impl<F: Field> fmt::Display for Vec3<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.c[0], self.c[1], self.c[2])
    }
}

impl<F: Field> fmt::Debug for Vec3<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?}, {:?})", self.c[0], self.c[1], self.c[2])
    }
}

fn mismatch<F: Field>(left: &F, right: &F) -> Error {
    Error::FieldMismatch {
        left: left.ctx().to_string(),
        right: right.ctx().to_string(),
    }
}

/// Six-term determinant kernel over arbitrary ring entries, `m[row][column]`.
///
/// This is the one expansion everything else reduces to: [`det3`] feeds it
/// vector components arranged in columns, the Gram identity feeds it inner
/// products, and the symbolic module feeds it polynomials.
pub fn det3x3<R: Ring>(m: &[[R; 3]; 3]) -> R {
    m[0][0]
        .mul(&m[1][1])
        .mul(&m[2][2])
        .add(&m[2][0].mul(&m[0][1]).mul(&m[1][2]))
        .add(&m[1][0].mul(&m[2][1]).mul(&m[0][2]))
        .sub(&m[0][0].mul(&m[2][1]).mul(&m[1][2]))
        .sub(&m[2][0].mul(&m[1][1]).mul(&m[0][2]))
        .sub(&m[1][0].mul(&m[0][1]).mul(&m[2][2]))
}

/// Determinant of the matrix with columns `x`, `y`, `z`.
pub fn det3<F: Field>(x: &Vec3<F>, y: &Vec3<F>, z: &Vec3<F>) -> Result<F> {
    x.require_same_field(y)?;
    x.require_same_field(z)?;
    let (x, y, z) = (&x.c, &y.c, &z.c);
    Ok(det3x3(&[
        [x[0].clone(), y[0].clone(), z[0].clone()],
        [x[1].clone(), y[1].clone(), z[1].clone()],
        [x[2].clone(), y[2].clone(), z[2].clone()],
    ]))
}

/// Box product `<cross(x,y), z>`, computed cross-then-dot.
///
/// Deliberately a different code path from [`det3`]; their agreement is one
/// of the identity checks.
pub fn scalar_triple<F: Field>(x: &Vec3<F>, y: &Vec3<F>, z: &Vec3<F>) -> Result<F> {
    x.cross(y)?.dot(z)
}

/// `cross(cross(x,y), z)`, computed by the expansion `<x,z>y - <y,z>x`.
pub fn vector_triple<F: Field>(x: &Vec3<F>, y: &Vec3<F>, z: &Vec3<F>) -> Result<Vec3<F>> {
    let xz = x.dot(z)?;
    let yz = y.dot(z)?;
    y.scale(&xz)?.sub(&x.scale(&yz)?)
}

/// `cross(cross(w,x), cross(y,z))`, computed by the expansion `det(z,w,y)x + det(y,x,z)w`.
pub fn quadruple_product<F: Field>(
    w: &Vec3<F>,
    x: &Vec3<F>,
    y: &Vec3<F>,
    z: &Vec3<F>,
) -> Result<Vec3<F>> {
    let a = det3(z, w, y)?;
    let b = det3(y, x, z)?;
    x.scale(&a)?.add(&w.scale(&b)?)
}

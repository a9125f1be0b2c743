//! Numeric evaluation of the two generalized Pappus/Desargues formulas,
//! the six-point configuration engine, and the four-triples corollary.
//!
//! A configuration is six nonzero vectors u,v,w,x,y,z over one field,
//! read as homogeneous coordinates of six points. Intersecting pairs of
//! joins yields six more coordinate vectors as cross products of cross
//! products:
//!
//! ```text
//! o = (v x z) x (y x w)      r = (v x w) x (y x z)
//! p = (w x x) x (z x u)      s = (w x u) x (z x x)
//! q = (u x y) x (x x v)      t = (u x v) x (x x y)
//! ```
//!
//! Formula (P) equates `det(q, p, o)` with a sum of two products of four
//! determinants; formula (D) factors `det(s, t, r)` as
//! `det(x,y,z) * det(u x x, v x y, w x z) * det(u,v,w)`. Both hold for
//! every input, degenerate or not. The classical theorems are the cases
//! where some right-hand factors vanish.
//!
//! Evaluation always uses the raw configuration vectors, never
//! canonicalized projective representatives: the formulas are vector
//! identities, and a fixed evaluation order keeps reports reproducible.

use rand::Rng;

use crate::fields::{Field, FieldCtx, Ring};
use crate::symbolic::IdentityId;
use crate::vec3::{det3, det3x3, quadruple_product, scalar_triple, vector_triple, Vec3};
use crate::{Error, Result};

/// Six labeled nonzero vectors over one shared field.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Configuration<F: Field> {
    u: Vec3<F>,
    v: Vec3<F>,
    w: Vec3<F>,
    x: Vec3<F>,
    y: Vec3<F>,
    z: Vec3<F>,
}

/// Vector labels in configuration order.
pub const VECTOR_LABELS: [&str; 6] = ["u", "v", "w", "x", "y", "z"];

impl<F: Field> Configuration<F> {
    pub fn new(
        u: Vec3<F>,
        v: Vec3<F>,
        w: Vec3<F>,
        x: Vec3<F>,
        y: Vec3<F>,
        z: Vec3<F>,
    ) -> Result<Self> {
        let all = [&u, &v, &w, &x, &y, &z];
        for vec in all {
            if vec.is_zero() {
                return Err(Error::ZeroVector);
            }
        }
        for vec in &all[1..] {
            if !all[0].same_field(vec) {
                return Err(Error::FieldMismatch {
                    left: all[0].ctx().to_string(),
                    right: vec.ctx().to_string(),
                });
            }
        }
        Ok(Configuration { u, v, w, x, y, z })
    }

    pub fn from_i64s(ctx: &F::Ctx, vecs: [[i64; 3]; 6]) -> Result<Self> {
        let [u, v, w, x, y, z] = vecs.map(|c| Vec3::from_i64s(ctx, c));
        Configuration::new(u, v, w, x, y, z)
    }

    /// Six nonzero vectors with components uniform over the field.
    pub fn sample<R: Rng + ?Sized>(ctx: &F::Ctx, rng: &mut R) -> Self {
        Configuration {
            u: Vec3::sample_nonzero(ctx, rng),
            v: Vec3::sample_nonzero(ctx, rng),
            w: Vec3::sample_nonzero(ctx, rng),
            x: Vec3::sample_nonzero(ctx, rng),
            y: Vec3::sample_nonzero(ctx, rng),
            z: Vec3::sample_nonzero(ctx, rng),
        }
    }

    pub fn u(&self) -> &Vec3<F> {
        &self.u
    }
    pub fn v(&self) -> &Vec3<F> {
        &self.v
    }
    pub fn w(&self) -> &Vec3<F> {
        &self.w
    }
    pub fn x(&self) -> &Vec3<F> {
        &self.x
    }
    pub fn y(&self) -> &Vec3<F> {
        &self.y
    }
    pub fn z(&self) -> &Vec3<F> {
        &self.z
    }

    /// The vectors in label order u,v,w,x,y,z.
    pub fn vectors(&self) -> [&Vec3<F>; 6] {
        [&self.u, &self.v, &self.w, &self.x, &self.y, &self.z]
    }

    pub fn ctx(&self) -> F::Ctx {
        self.u.ctx()
    }
}

// Same-field is guaranteed by Configuration construction, so the fallible
// vec3 operations cannot actually fail below.
fn cx<F: Field>(a: &Vec3<F>, b: &Vec3<F>) -> Vec3<F> {
    a.cross(b).expect("configuration vectors share one field")
}

fn dt<F: Field>(a: &Vec3<F>, b: &Vec3<F>, c: &Vec3<F>) -> F {
    det3(a, b, c).expect("configuration vectors share one field")
}

/// `(a x b) x (c x d)`: coordinates of the meet of join(a,b) and join(c,d).
fn meet_of_joins<F: Field>(a: &Vec3<F>, b: &Vec3<F>, c: &Vec3<F>, d: &Vec3<F>) -> Vec3<F> {
    cx(&cx(a, b), &cx(c, d))
}

/// The six derived coordinate vectors. Zero vectors are legal and
/// meaningful: they flag configurations whose intersection points are
/// projectively undefined, while the formulas keep holding.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DerivedPoints<F: Field> {
    pub o: Vec3<F>,
    pub p: Vec3<F>,
    pub q: Vec3<F>,
    pub r: Vec3<F>,
    pub s: Vec3<F>,
    pub t: Vec3<F>,
}

impl<F: Field> DerivedPoints<F> {
    /// Labels of derived vectors that came out zero.
    pub fn zero_labels(&self) -> Vec<&'static str> {
        [
            ("O", &self.o),
            ("P", &self.p),
            ("Q", &self.q),
            ("R", &self.r),
            ("S", &self.s),
            ("T", &self.t),
        ]
        .into_iter()
        .filter(|(_, v)| v.is_zero())
        .map(|(l, _)| l)
        .collect()
    }

    /// True when one of o, p, q (the Pappus triple) is the zero vector.
    pub fn pappus_degenerate(&self) -> bool {
        self.o.is_zero() || self.p.is_zero() || self.q.is_zero()
    }

    /// True when one of r, s, t (the Desargues triple) is the zero vector.
    pub fn desargues_degenerate(&self) -> bool {
        self.r.is_zero() || self.s.is_zero() || self.t.is_zero()
    }
}

/// Compute all six derived vectors, raw and in fixed order.
pub fn derive_points<F: Field>(c: &Configuration<F>) -> DerivedPoints<F> {
    DerivedPoints {
        o: meet_of_joins(&c.v, &c.z, &c.y, &c.w),
        p: meet_of_joins(&c.w, &c.x, &c.z, &c.u),
        q: meet_of_joins(&c.u, &c.y, &c.x, &c.v),
        r: meet_of_joins(&c.v, &c.w, &c.y, &c.z),
        s: meet_of_joins(&c.w, &c.u, &c.z, &c.x),
        t: meet_of_joins(&c.u, &c.v, &c.x, &c.y),
    }
}

/// Both sides of one identity, evaluated independently.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IdentityReport<F: Field> {
    pub lhs: F,
    pub rhs: F,
    pub holds: bool,
}

impl<F: Field> IdentityReport<F> {
    fn new(lhs: F, rhs: F) -> Self {
        let holds = lhs == rhs;
        IdentityReport { lhs, rhs, holds }
    }
}

fn eval_p_raw<F: Field>(
    u: &Vec3<F>,
    v: &Vec3<F>,
    w: &Vec3<F>,
    x: &Vec3<F>,
    y: &Vec3<F>,
    z: &Vec3<F>,
) -> IdentityReport<F> {
    let q = meet_of_joins(u, y, x, v);
    let p = meet_of_joins(w, x, z, u);
    let o = meet_of_joins(v, z, y, w);
    let lhs = dt(&q, &p, &o);
    let rhs = dt(v, u, x)
        .mul(&dt(u, w, z))
        .mul(&dt(w, v, y))
        .mul(&dt(y, x, z))
        .add(
            &dt(x, y, v)
                .mul(&dt(z, x, u))
                .mul(&dt(y, z, w))
                .mul(&dt(u, w, v)),
        );
    IdentityReport::new(lhs, rhs)
}

fn eval_d_raw<F: Field>(
    u: &Vec3<F>,
    v: &Vec3<F>,
    w: &Vec3<F>,
    x: &Vec3<F>,
    y: &Vec3<F>,
    z: &Vec3<F>,
) -> IdentityReport<F> {
    let s = meet_of_joins(w, u, z, x);
    let t = meet_of_joins(u, v, x, y);
    let r = meet_of_joins(v, w, y, z);
    let lhs = dt(&s, &t, &r);
    let rhs = dt(x, y, z)
        .mul(&dt(&cx(u, x), &cx(v, y), &cx(w, z)))
        .mul(&dt(u, v, w));
    IdentityReport::new(lhs, rhs)
}

/// Evaluate formula (P): `det(q,p,o)` against its eight-determinant
/// expansion. `holds` must come back true on every input.
pub fn eval_p<F: Field>(c: &Configuration<F>) -> IdentityReport<F> {
    eval_p_raw(&c.u, &c.v, &c.w, &c.x, &c.y, &c.z)
}

/// Evaluate formula (D): `det(s,t,r)` against its three-determinant
/// factorization. `holds` must come back true on every input.
pub fn eval_d<F: Field>(c: &Configuration<F>) -> IdentityReport<F> {
    eval_d_raw(&c.u, &c.v, &c.w, &c.x, &c.y, &c.z)
}

/// Outcome of the Pappus check on one configuration.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PappusVerdict {
    /// u,v,w collinear and x,y,z collinear.
    pub hypothesis_holds: bool,
    /// det(q,p,o) = 0.
    pub conclusion_holds: bool,
    /// Some of o,p,q is the zero vector: the conclusion determinant still
    /// vanishes, but the three intersection points are not all defined.
    pub degenerate: bool,
}

/// Check the Pappus clause: collinear hypothesis triples force
/// `det(q,p,o) = 0`.
pub fn check_pappus<F: Field>(c: &Configuration<F>) -> PappusVerdict {
    let d = derive_points(c);
    PappusVerdict {
        hypothesis_holds: dt(&c.u, &c.v, &c.w).is_zero() && dt(&c.x, &c.y, &c.z).is_zero(),
        conclusion_holds: dt(&d.q, &d.p, &d.o).is_zero(),
        degenerate: d.pappus_degenerate(),
    }
}

/// Outcome of the Desargues check on one configuration.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DesarguesVerdict {
    /// Both hypothesis triples are non-collinear (honest triangles).
    pub triangles_ok: bool,
    /// The lines joining u-x, v-y, w-z are concurrent:
    /// det(u x x, v x y, w x z) = 0.
    pub concurrent_1st: bool,
    /// det(s,t,r) = 0.
    pub collinear_2nd: bool,
}

impl DesarguesVerdict {
    /// Concurrency implies the collinearity determinant unconditionally.
    pub fn forward_implication_holds(&self) -> bool {
        !self.concurrent_1st || self.collinear_2nd
    }

    /// Under honest triangles the two statements are equivalent.
    pub fn biconditional_holds(&self) -> bool {
        !self.triangles_ok || (self.concurrent_1st == self.collinear_2nd)
    }
}

/// Check the Desargues clause on one configuration.
pub fn check_desargues<F: Field>(c: &Configuration<F>) -> DesarguesVerdict {
    let d = derive_points(c);
    DesarguesVerdict {
        triangles_ok: !dt(&c.u, &c.v, &c.w).is_zero() && !dt(&c.x, &c.y, &c.z).is_zero(),
        concurrent_1st: dt(&cx(&c.u, &c.x), &cx(&c.v, &c.y), &cx(&c.w, &c.z)).is_zero(),
        collinear_2nd: dt(&d.s, &d.t, &d.r).is_zero(),
    }
}

/// The four collinearity determinants of the four-triples corollary:
/// `det(q,p,o)` plus the three alternate intersection triples. All four
/// values are equal on every input, so either all four triples are
/// collinear or none are.
pub fn four_triples<F: Field>(c: &Configuration<F>) -> [F; 4] {
    let d = derive_points(c);
    let (u, v, w, x, y, z) = (&c.u, &c.v, &c.w, &c.x, &c.y, &c.z);
    [
        dt(&d.q, &d.p, &d.o),
        dt(
            &meet_of_joins(z, v, u, w),
            &meet_of_joins(y, u, x, z),
            &meet_of_joins(w, x, v, y),
        ),
        dt(
            &meet_of_joins(y, u, w, v),
            &meet_of_joins(x, w, z, y),
            &meet_of_joins(v, z, u, x),
        ),
        dt(
            &meet_of_joins(z, w, v, x),
            &meet_of_joins(u, v, y, z),
            &meet_of_joins(x, y, w, u),
        ),
    ]
}

/// The fifteen pairwise joins of the six configuration points, as raw
/// cross products in a fixed label order.
pub fn pairwise_joins<F: Field>(c: &Configuration<F>) -> Vec<(String, Vec3<F>)> {
    let vecs = c.vectors();
    let mut joins = Vec::with_capacity(15);
    for i in 0..6 {
        for j in (i + 1)..6 {
            joins.push((
                format!("{}x{}", VECTOR_LABELS[i], VECTOR_LABELS[j]),
                cx(vecs[i], vecs[j]),
            ));
        }
    }
    joins
}

/// Numerically check one catalogued identity on fresh random inputs
/// (vectors may be zero; the identities hold regardless). This is the
/// numeric counterpart of the symbolic proof of the same catalog.
pub fn numeric_identity_holds<C: FieldCtx>(
    id: IdentityId,
    ctx: &C,
    rng: &mut (impl Rng + ?Sized),
) -> bool {
    let v6: [Vec3<C::Elem>; 6] = std::array::from_fn(|_| Vec3::sample(ctx, rng));
    let [u, v, w, x, y, z] = &v6;
    let r = ctx.sample(rng);
    let d = det3(x, y, z).unwrap();
    match id {
        IdentityId::P => eval_p_raw(u, v, w, x, y, z).holds,
        IdentityId::D => eval_d_raw(u, v, w, x, y, z).holds,
        IdentityId::Perp3 => {
            let c = cx(x, y);
            c.dot(x).unwrap().is_zero() && c.dot(y).unwrap().is_zero()
        }
        IdentityId::Box5 => {
            scalar_triple(x, y, z).unwrap() == d && x.dot(&cx(y, z)).unwrap() == d
        }
        IdentityId::Prop6 => dt(x, y, &x.scale(&r).unwrap()).is_zero(),
        IdentityId::Cyclic7 => dt(y, z, x) == d && dt(z, x, y) == d,
        IdentityId::Swap8 => {
            dt(y, x, z) == d.neg() && dt(x, z, y) == d.neg() && dt(z, y, x) == d.neg()
        }
        IdentityId::Transpose9 => {
            let (xs, ys, zs) = (x.components(), y.components(), z.components());
            let row =
                |i: usize| Vec3::new(xs[i].clone(), ys[i].clone(), zs[i].clone()).unwrap();
            dt(&row(0), &row(1), &row(2)) == d
        }
        IdentityId::Scalar10 => {
            let rd = r.mul(&d);
            dt(&x.scale(&r).unwrap(), y, z) == rd
                && dt(x, &y.scale(&r).unwrap(), z) == rd
                && dt(x, y, &z.scale(&r).unwrap()) == rd
        }
        IdentityId::Additive11 => {
            dt(&w.add(x).unwrap(), y, z) == dt(w, y, z).add(&dt(x, y, z))
        }
        IdentityId::Gram12 => {
            let e = |a: &Vec3<C::Elem>, b: &Vec3<C::Elem>| a.dot(b).unwrap();
            det3x3(&[
                [e(u, x), e(u, y), e(u, z)],
                [e(v, x), e(v, y), e(v, z)],
                [e(w, x), e(w, y), e(w, z)],
            ]) == dt(u, v, w).mul(&d)
        }
        IdentityId::Triple13 => {
            vector_triple(x, y, z).unwrap() == cx(&cx(x, y), z)
        }
        IdentityId::Quadruple15 => {
            quadruple_product(w, x, y, z).unwrap() == cx(&cx(w, x), &cx(y, z))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::{FieldCtx, Fp, PrimeField, Rational, Rationals};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn cfg(vecs: [[i64; 3]; 6]) -> Configuration<Rational> {
        Configuration::from_i64s(&Rationals, vecs).unwrap()
    }

    fn rv(c: [i64; 3]) -> Vec3<Rational> {
        Vec3::from_i64s(&Rationals, c)
    }

    #[test]
    fn construction_rejects_zero_vectors_and_mixed_fields() {
        assert_eq!(
            Configuration::<Rational>::from_i64s(
                &Rationals,
                [[1, 0, 0], [0, 0, 0], [1, 1, 0], [0, 0, 1], [1, 0, 1], [0, 1, 1]],
            ),
            Err(Error::ZeroVector)
        );
        let gf7 = PrimeField::new(7).unwrap();
        let gf11 = PrimeField::new(11).unwrap();
        let a = || Vec3::<Fp>::from_i64s(&gf7, [1, 2, 3]);
        let b = Vec3::<Fp>::from_i64s(&gf11, [1, 2, 3]);
        assert!(matches!(
            Configuration::new(a(), a(), a(), a(), a(), b),
            Err(Error::FieldMismatch { .. })
        ));
    }

    #[test]
    fn derived_points_hexagon() {
        // u=e1, v=e2, w=e1+e2, x=e3, y=e1+e3, z=e2+e3, by hand:
        let c = cfg([
            [1, 0, 0],
            [0, 1, 0],
            [1, 1, 0],
            [0, 0, 1],
            [1, 0, 1],
            [0, 1, 1],
        ]);
        let d = derive_points(&c);
        assert_eq!(d.o, rv([0, -1, 1]));
        assert_eq!(d.p, rv([1, 1, 1]));
        assert_eq!(d.q, rv([0, 0, -1]));
        assert_eq!(d.r, rv([-1, 1, 0]));
        assert_eq!(d.s, rv([0, -1, 0]));
        assert_eq!(d.t, rv([-1, 0, 0]));
        assert!(d.zero_labels().is_empty());
    }

    #[test]
    fn coincident_vectors_zero_out_derived_points() {
        // u = y forces q = (u x y) x (x x v) = 0
        let c = cfg([
            [1, 2, 3],
            [0, 1, 0],
            [1, 1, 0],
            [0, 0, 1],
            [1, 2, 3],
            [0, 1, 1],
        ]);
        let d = derive_points(&c);
        assert!(d.q.is_zero());
        assert_eq!(d.zero_labels(), vec!["Q"]);
        assert!(d.pappus_degenerate());
        // the identity is indifferent to the degeneracy
        assert!(eval_p(&c).holds);
    }

    #[test]
    fn eval_p_fully_degenerate_input() {
        let c = cfg([[1, 0, 0]; 6]);
        let rep = eval_p(&c);
        assert!(rep.holds);
        assert!(rep.lhs.is_zero());
        assert!(rep.rhs.is_zero());
    }

    #[test]
    fn eval_p_pappus_hypothesis_zeroes_rhs() {
        // u,v,w on one line and x,y,z on another
        let c = cfg([
            [1, 0, 1],
            [2, 0, 1],
            [3, 0, 1],
            [1, 1, 1],
            [2, 1, 1],
            [3, 1, 1],
        ]);
        let rep = eval_p(&c);
        assert!(rep.holds);
        assert!(rep.lhs.is_zero());
        assert!(rep.rhs.is_zero());
        let verdict = check_pappus(&c);
        assert!(verdict.hypothesis_holds);
        assert!(verdict.conclusion_holds);
        assert!(!verdict.degenerate);
        // frozen derived values for this configuration
        let d = derive_points(&c);
        assert_eq!(d.o, rv([-5, -1, -2]));
        assert_eq!(d.p, rv([8, 2, 4]));
        assert_eq!(d.q, rv([-3, -1, -2]));
    }

    #[test]
    fn eval_d_coincident_u_x() {
        // u = x kills the middle column of the rhs; the lhs must follow
        let c = cfg([
            [1, 2, 3],
            [0, 1, 0],
            [1, 1, 0],
            [1, 2, 3],
            [1, 0, 1],
            [0, 1, 1],
        ]);
        let rep = eval_d(&c);
        assert!(rep.holds);
        assert!(rep.lhs.is_zero());
        assert!(rep.rhs.is_zero());
    }

    #[test]
    fn eval_d_collinear_xyz_leaves_lines_free() {
        // x,y,z collinear: R,S,T land on that same line, but the joining
        // lines do not concur
        let c = cfg([
            [1, 2, 3],
            [2, 1, 1],
            [3, 1, 2],
            [1, 0, 0],
            [0, 1, 0],
            [1, 1, 0],
        ]);
        let rep = eval_d(&c);
        assert!(rep.holds);
        assert!(rep.lhs.is_zero());
        let verdict = check_desargues(&c);
        assert!(!verdict.triangles_ok);
        assert!(verdict.collinear_2nd);
        assert!(!verdict.concurrent_1st);
        assert!(verdict.forward_implication_holds());
        let d = derive_points(&c);
        assert_eq!(d.r, rv([1, 1, 0]));
        assert_eq!(d.s, rv([7, -1, 0]));
        assert_eq!(d.t, rv([5, 1, 0]));
    }

    #[test]
    fn perspective_triangles_satisfy_desargues_both_ways() {
        let c = cfg([
            [1, 0, 0],
            [0, 1, 0],
            [0, 0, 1],
            [2, 1, 1],
            [1, 2, 1],
            [1, 1, 2],
        ]);
        let verdict = check_desargues(&c);
        assert!(verdict.triangles_ok);
        assert!(verdict.concurrent_1st);
        assert!(verdict.collinear_2nd);
        let d = derive_points(&c);
        assert_eq!(d.r, rv([0, 1, -1]));
        assert_eq!(d.s, rv([-1, 0, 1]));
        assert_eq!(d.t, rv([1, -1, 0]));
        // non-collinear hypothesis triples: the Pappus clause claims nothing
        assert!(!check_pappus(&c).hypothesis_holds);
    }

    #[test]
    fn random_perspective_triangles_concur_and_align() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..200 {
            let u = Vec3::<Rational>::sample_nonzero(&Rationals, &mut rng);
            let v = Vec3::sample_nonzero(&Rationals, &mut rng);
            let w = Vec3::sample_nonzero(&Rationals, &mut rng);
            let e = Vec3::sample_nonzero(&Rationals, &mut rng);
            let x = u.add(&e).unwrap();
            let y = v.add(&e).unwrap();
            let z = w.add(&e).unwrap();
            if x.is_zero() || y.is_zero() || z.is_zero() {
                continue;
            }
            let c = Configuration::new(u, v, w, x, y, z).unwrap();
            let verdict = check_desargues(&c);
            assert!(verdict.concurrent_1st);
            assert!(verdict.collinear_2nd);
            assert!(verdict.forward_implication_holds());
            assert!(verdict.biconditional_holds());
        }
    }

    #[test]
    fn random_triangles_rarely_concur_but_never_disagree() {
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        let mut both_false = 0;
        for _ in 0..300 {
            let c = Configuration::<Rational>::sample(&Rationals, &mut rng);
            let v = check_desargues(&c);
            assert!(v.forward_implication_holds());
            assert!(v.biconditional_holds());
            if v.triangles_ok && !v.concurrent_1st {
                assert!(!v.collinear_2nd);
                both_false += 1;
            }
        }
        // generic configurations land in the both-false cell nearly always
        assert!(both_false > 250, "only {both_false} generic cases");
    }

    fn identity_fuzz<C: FieldCtx>(ctx: &C, seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..1000 {
            let c = Configuration::<C::Elem>::sample(ctx, &mut rng);
            let p = eval_p(&c);
            assert!(p.holds, "formula (P) failed on {c:?}");
            let d = eval_d(&c);
            assert!(d.holds, "formula (D) failed on {c:?}");
            let quads = four_triples(&c);
            assert!(
                quads.iter().all(|t| *t == quads[0]),
                "four-triples mismatch on {c:?}"
            );
        }
    }

    #[test]
    fn formulas_hold_on_random_configurations() {
        identity_fuzz(&Rationals, 13);
        for p in [2u64, 3, 7, 101] {
            identity_fuzz(&PrimeField::new(p).unwrap(), 7000 + p);
        }
    }

    #[test]
    fn formulas_hold_exhaustively_over_gf2() {
        // every 6-tuple of nonzero vectors in GF(2)^3
        let gf2 = PrimeField::new(2).unwrap();
        let vecs: Vec<Vec3<Fp>> = (1..8u32)
            .map(|bits| {
                Vec3::from_i64s(
                    &gf2,
                    [(bits & 1) as i64, (bits >> 1 & 1) as i64, (bits >> 2 & 1) as i64],
                )
            })
            .collect();
        let mut checked = 0u64;
        for u in &vecs {
            for v in &vecs {
                for w in &vecs {
                    for x in &vecs {
                        for y in &vecs {
                            for z in &vecs {
                                let rep = eval_p_raw(u, v, w, x, y, z);
                                assert!(rep.holds);
                                let rep = eval_d_raw(u, v, w, x, y, z);
                                assert!(rep.holds);
                                checked += 1;
                            }
                        }
                    }
                }
            }
        }
        assert_eq!(checked, 7u64.pow(6));
    }

    #[test]
    fn rescaling_preserves_identities_and_scales_both_sides() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..200 {
            let c = Configuration::<Rational>::sample(&Rationals, &mut rng);
            let k = loop {
                let k = Rationals.sample(&mut rng);
                if !k.is_zero() {
                    break k;
                }
            };
            // rescale one of the six vectors, chosen by the rng
            let which = rng.gen_range(0..6usize);
            let mut vecs: Vec<Vec3<Rational>> =
                c.vectors().into_iter().cloned().collect();
            vecs[which] = vecs[which].scale(&k).unwrap();
            let scaled = Configuration::new(
                vecs[0].clone(),
                vecs[1].clone(),
                vecs[2].clone(),
                vecs[3].clone(),
                vecs[4].clone(),
                vecs[5].clone(),
            )
            .unwrap();

            // each vector appears in exactly two of the three determinant
            // columns on each side, so both sides pick up k^2
            let k2 = k.mul(&k);
            let before = eval_p(&c);
            let after = eval_p(&scaled);
            assert!(after.holds);
            assert_eq!(after.lhs, before.lhs.mul(&k2));
            assert_eq!(after.rhs, before.rhs.mul(&k2));

            let before = eval_d(&c);
            let after = eval_d(&scaled);
            assert!(after.holds);
            assert_eq!(after.lhs, before.lhs.mul(&k2));
            assert_eq!(after.rhs, before.rhs.mul(&k2));
        }
    }

    #[test]
    fn four_triples_under_pappus_hypothesis_all_vanish() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..200 {
            // span two random collinear triples
            let g1 = Vec3::<Rational>::sample_nonzero(&Rationals, &mut rng);
            let g2 = Vec3::sample_nonzero(&Rationals, &mut rng);
            let h1 = Vec3::sample_nonzero(&Rationals, &mut rng);
            let h2 = Vec3::sample_nonzero(&Rationals, &mut rng);
            let mut combo = |a: &Vec3<Rational>, b: &Vec3<Rational>| loop {
                let s = Rationals.sample(&mut rng);
                let t = Rationals.sample(&mut rng);
                let v = a.scale(&s).unwrap().add(&b.scale(&t).unwrap()).unwrap();
                if !v.is_zero() {
                    break v;
                }
            };
            let c = Configuration::new(
                combo(&g1, &g2),
                combo(&g1, &g2),
                combo(&g1, &g2),
                combo(&h1, &h2),
                combo(&h1, &h2),
                combo(&h1, &h2),
            )
            .unwrap();
            let verdict = check_pappus(&c);
            assert!(verdict.hypothesis_holds);
            assert!(verdict.conclusion_holds);
            for t in four_triples(&c) {
                assert!(t.is_zero());
            }
        }
    }

    #[test]
    fn four_triples_all_equal_vectors() {
        let c = cfg([[2, 3, 4]; 6]);
        for t in four_triples(&c) {
            assert!(t.is_zero());
        }
    }

    #[test]
    fn pairwise_joins_enumerates_fifteen_lines() {
        let c = cfg([
            [1, 0, 0],
            [0, 1, 0],
            [1, 1, 0],
            [0, 0, 1],
            [1, 0, 1],
            [0, 1, 1],
        ]);
        let joins = pairwise_joins(&c);
        assert_eq!(joins.len(), 15);
        assert_eq!(joins[0].0, "uxv");
        assert_eq!(joins[0].1, rv([0, 0, 1]));
        assert_eq!(joins[14].0, "yxz");
        assert_eq!(joins[14].1, rv([1, 0, 1]).cross(&rv([0, 1, 1])).unwrap());
    }

    #[test]
    fn numeric_catalog_spot_checks() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for id in IdentityId::ALL {
            for _ in 0..50 {
                assert!(
                    numeric_identity_holds(id, &Rationals, &mut rng),
                    "identity {id} failed numerically"
                );
                assert!(numeric_identity_holds(
                    id,
                    &PrimeField::new(7).unwrap(),
                    &mut rng
                ));
            }
        }
    }
}

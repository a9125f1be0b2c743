//! Enumeration of the finite projective planes PG(2,q) for small primes
//! q, and exhaustive or sampled verification sweeps over them.
//!
//! The catalog lists every point and line by canonical representative
//! ((1,a,b), (0,1,c), (0,0,1)) and carries the full incidence matrix.
//! The counting facts (q^2+q+1 points and lines, q+1 incidences each
//! way, unique joins and meets) are verified, never assumed.
//!
//! Sweeps feed plane configurations through the identity evaluators and
//! theorem checks. Degenerate configurations are counted and skipped for
//! the theorem statements but still identity-checked: the formulas hold
//! all the time, only the projective reading of the conclusion fails.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::fields::{Fp, PrimeField, Ring};
use crate::identities::{check_desargues, check_pappus, eval_d, eval_p, Configuration};
use crate::projective::{ProjLine, ProjPoint};
use crate::vec3::{det3, Vec3};
use crate::{Error, Result};

/// Largest plane the default constructor will enumerate.
pub const DEFAULT_CAP: u32 = 13;

/// Exhaustive sweeps iterate (q^2+q+1)^6-ish spaces; beyond this they
/// are refused in favor of sampling.
pub const EXHAUSTIVE_CAP: u32 = 3;

/// The projective plane over GF(q), fully enumerated.
pub struct PlaneCatalog {
    field: PrimeField,
    points: Vec<ProjPoint<Fp>>,
    lines: Vec<ProjLine<Fp>>,
    /// Row-major over (point, line).
    incidence: Vec<bool>,
    points_on_line: Vec<Vec<usize>>,
    lines_on_point: Vec<Vec<usize>>,
    point_index: HashMap<ProjPoint<Fp>, usize>,
    line_index: HashMap<ProjLine<Fp>, usize>,
}

/// Enumerate PG(2,q) with the default cap.
pub fn enumerate_plane(q: u64) -> Result<PlaneCatalog> {
    enumerate_plane_capped(q, DEFAULT_CAP)
}

/// Enumerate PG(2,q), refusing q above `cap`.
pub fn enumerate_plane_capped(q: u64, cap: u32) -> Result<PlaneCatalog> {
    let field = PrimeField::new(q)?;
    if field.modulus() > cap {
        return Err(Error::CapExceeded { q, cap });
    }
    let q = field.modulus() as i64;

    let mut reps: Vec<Vec3<Fp>> = Vec::with_capacity((q * q + q + 1) as usize);
    for a in 0..q {
        for b in 0..q {
            reps.push(Vec3::from_i64s(&field, [1, a, b]));
        }
    }
    for c in 0..q {
        reps.push(Vec3::from_i64s(&field, [0, 1, c]));
    }
    reps.push(Vec3::from_i64s(&field, [0, 0, 1]));

    let points: Vec<ProjPoint<Fp>> = reps
        .iter()
        .map(|v| ProjPoint::from_vec(v).expect("enumerated representatives are nonzero"))
        .collect();
    let lines: Vec<ProjLine<Fp>> = reps
        .iter()
        .map(|v| ProjLine::from_vec(v).expect("enumerated representatives are nonzero"))
        .collect();

    let n = points.len();
    let mut incidence = vec![false; n * n];
    let mut points_on_line = vec![Vec::with_capacity(q as usize + 1); n];
    let mut lines_on_point = vec![Vec::with_capacity(q as usize + 1); n];
    for (pi, point) in points.iter().enumerate() {
        for (li, line) in lines.iter().enumerate() {
            if crate::projective::incident(point, line)? {
                incidence[pi * n + li] = true;
                points_on_line[li].push(pi);
                lines_on_point[pi].push(li);
            }
        }
    }

    let point_index = points.iter().cloned().zip(0..).collect();
    let line_index = lines.iter().cloned().zip(0..).collect();

    Ok(PlaneCatalog {
        field,
        points,
        lines,
        incidence,
        points_on_line,
        lines_on_point,
        point_index,
        line_index,
    })
}

impl std::fmt::Debug for PlaneCatalog {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "PlaneCatalog(q={}, {} points, {} lines)",
            self.q(),
            self.points.len(),
            self.lines.len()
        )
    }
}

impl PlaneCatalog {
    pub fn q(&self) -> u32 {
        self.field.modulus()
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn points(&self) -> &[ProjPoint<Fp>] {
        &self.points
    }

    pub fn lines(&self) -> &[ProjLine<Fp>] {
        &self.lines
    }

    pub fn incident(&self, point: usize, line: usize) -> bool {
        self.incidence[point * self.lines.len() + line]
    }

    pub fn points_on_line(&self, line: usize) -> &[usize] {
        &self.points_on_line[line]
    }

    pub fn lines_on_point(&self, point: usize) -> &[usize] {
        &self.lines_on_point[point]
    }

    pub fn point_index(&self, p: &ProjPoint<Fp>) -> Option<usize> {
        self.point_index.get(p).copied()
    }

    pub fn line_index(&self, l: &ProjLine<Fp>) -> Option<usize> {
        self.line_index.get(l).copied()
    }

    /// Check every catalog invariant; the error text names the first
    /// violation found.
    pub fn verify_invariants(&self) -> std::result::Result<(), String> {
        let q = self.q() as usize;
        let expected = q * q + q + 1;
        if self.points.len() != expected || self.lines.len() != expected {
            return Err(format!(
                "size mismatch: {} points, {} lines, expected {expected}",
                self.points.len(),
                self.lines.len()
            ));
        }
        if self.point_index.len() != expected || self.line_index.len() != expected {
            return Err("duplicate canonical representatives".to_string());
        }
        for li in 0..expected {
            if self.points_on_line[li].len() != q + 1 {
                return Err(format!(
                    "line {li} carries {} points, expected {}",
                    self.points_on_line[li].len(),
                    q + 1
                ));
            }
        }
        for pi in 0..expected {
            if self.lines_on_point[pi].len() != q + 1 {
                return Err(format!(
                    "point {pi} lies on {} lines, expected {}",
                    self.lines_on_point[pi].len(),
                    q + 1
                ));
            }
        }
        // two distinct points share exactly one line, and dually
        for a in 0..expected {
            for b in (a + 1)..expected {
                let common = (0..expected)
                    .filter(|&li| self.incident(a, li) && self.incident(b, li))
                    .count();
                if common != 1 {
                    return Err(format!("points {a},{b} share {common} lines"));
                }
                let common = (0..expected)
                    .filter(|&pi| self.incident(pi, a) && self.incident(pi, b))
                    .count();
                if common != 1 {
                    return Err(format!("lines {a},{b} share {common} points"));
                }
            }
        }
        Ok(())
    }

    fn point_vec(&self, i: usize) -> &Vec3<Fp> {
        self.points[i].rep()
    }

    fn config(&self, idx: [usize; 6]) -> Configuration<Fp> {
        Configuration::new(
            *self.point_vec(idx[0]),
            *self.point_vec(idx[1]),
            *self.point_vec(idx[2]),
            *self.point_vec(idx[3]),
            *self.point_vec(idx[4]),
            *self.point_vec(idx[5]),
        )
        .expect("catalog points are nonzero vectors over one field")
    }

    /// All ordered point-index triples with vanishing determinant.
    fn collinear_triples(&self) -> Vec<[usize; 3]> {
        let n = self.points.len();
        let mut triples = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let d = det3(self.point_vec(i), self.point_vec(j), self.point_vec(k))
                        .expect("one field");
                    if d.is_zero() {
                        triples.push([i, j, k]);
                    }
                }
            }
        }
        triples
    }
}

/// How much of the configuration space a sweep covers.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Budget {
    /// Every configuration; only allowed for q <= [`EXHAUSTIVE_CAP`].
    Exhaustive,
    /// Seeded uniform sampling of this many configurations.
    Samples(u64),
}

/// Counters from a Pappus sweep.
#[derive(Clone, Copy, Default, PartialEq, Eq, Debug, Serialize)]
pub struct PappusSweep {
    /// Configurations examined (both hypothesis triples collinear).
    pub tested: u64,
    /// Skipped for the theorem statement: some of o,p,q was the zero vector.
    pub degenerate: u64,
    /// Nondegenerate with det(q,p,o) = 0.
    pub passed: u64,
    /// Nondegenerate with det(q,p,o) != 0. Must stay zero.
    pub conclusion_failures: u64,
    /// Configurations where formula (P) itself failed. Must stay zero.
    pub identity_failures: u64,
}

impl PappusSweep {
    pub fn ok(&self) -> bool {
        self.conclusion_failures == 0
            && self.identity_failures == 0
            && self.degenerate + self.passed == self.tested
    }

    fn absorb(mut self, other: PappusSweep) -> PappusSweep {
        self.tested += other.tested;
        self.degenerate += other.degenerate;
        self.passed += other.passed;
        self.conclusion_failures += other.conclusion_failures;
        self.identity_failures += other.identity_failures;
        self
    }

    fn record(&mut self, c: &Configuration<Fp>) {
        self.tested += 1;
        if !eval_p(c).holds {
            self.identity_failures += 1;
        }
        let verdict = check_pappus(c);
        debug_assert!(verdict.hypothesis_holds);
        if verdict.degenerate {
            self.degenerate += 1;
        } else if verdict.conclusion_holds {
            self.passed += 1;
        } else {
            self.conclusion_failures += 1;
        }
    }
}

/// Sweep configurations whose hypothesis triples u,v,w and x,y,z are both
/// collinear, asserting the Pappus conclusion on every nondegenerate one
/// and formula (P) on all of them.
pub fn sweep_pappus(catalog: &PlaneCatalog, budget: Budget, seed: u64) -> Result<PappusSweep> {
    match budget {
        Budget::Exhaustive => {
            if catalog.q() > EXHAUSTIVE_CAP {
                return Err(Error::ExhaustiveTooLarge(catalog.q()));
            }
            let triples = catalog.collinear_triples();
            Ok(triples
                .par_iter()
                .map(|first| {
                    let mut stats = PappusSweep::default();
                    for second in &triples {
                        let c = catalog.config([
                            first[0], first[1], first[2], second[0], second[1], second[2],
                        ]);
                        stats.record(&c);
                    }
                    stats
                })
                .reduce(PappusSweep::default, PappusSweep::absorb))
        }
        Budget::Samples(n) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut stats = PappusSweep::default();
            let lines = catalog.lines().len();
            for _ in 0..n {
                // a collinear triple is three (not necessarily distinct)
                // points on a common line
                let pick = |rng: &mut ChaCha8Rng| {
                    let on = catalog.points_on_line(rng.gen_range(0..lines));
                    [
                        on[rng.gen_range(0..on.len())],
                        on[rng.gen_range(0..on.len())],
                        on[rng.gen_range(0..on.len())],
                    ]
                };
                let first = pick(&mut rng);
                let second = pick(&mut rng);
                let c = catalog.config([
                    first[0], first[1], first[2], second[0], second[1], second[2],
                ]);
                stats.record(&c);
            }
            Ok(stats)
        }
    }
}

/// Counters from a Desargues sweep. The four-way partition of
/// (concurrent, collinear) outcomes covers every tested configuration.
#[derive(Clone, Copy, Default, PartialEq, Eq, Debug, Serialize)]
pub struct DesarguesSweep {
    pub tested: u64,
    /// Lines concurrent and r,s,t collinear.
    pub both_true: u64,
    /// Neither holds.
    pub both_false: u64,
    /// Collinear without concurrency; possible only for collapsed
    /// triangles ("free to not concur").
    pub forward_only: u64,
    /// Configurations with both triangles honest.
    pub triangles_ok: u64,
    /// Concurrent but not collinear: violates the unconditional
    /// implication. Must stay zero.
    pub forward_violations: u64,
    /// Honest triangles where the two statements disagree. Must stay zero.
    pub biconditional_violations: u64,
    /// Configurations where formula (P) or (D) failed. Must stay zero.
    pub identity_failures: u64,
}

impl DesarguesSweep {
    pub fn ok(&self) -> bool {
        self.forward_violations == 0
            && self.biconditional_violations == 0
            && self.identity_failures == 0
            && self.both_true + self.both_false + self.forward_only + self.forward_violations
                == self.tested
    }

    fn absorb(mut self, other: DesarguesSweep) -> DesarguesSweep {
        self.tested += other.tested;
        self.both_true += other.both_true;
        self.both_false += other.both_false;
        self.forward_only += other.forward_only;
        self.triangles_ok += other.triangles_ok;
        self.forward_violations += other.forward_violations;
        self.biconditional_violations += other.biconditional_violations;
        self.identity_failures += other.identity_failures;
        self
    }

    fn record(&mut self, c: &Configuration<Fp>) {
        self.tested += 1;
        if !eval_d(c).holds || !eval_p(c).holds {
            self.identity_failures += 1;
        }
        let v = check_desargues(c);
        if v.triangles_ok {
            self.triangles_ok += 1;
            if !v.biconditional_holds() {
                self.biconditional_violations += 1;
            }
        }
        match (v.concurrent_1st, v.collinear_2nd) {
            (true, true) => self.both_true += 1,
            (false, false) => self.both_false += 1,
            (false, true) => self.forward_only += 1,
            (true, false) => self.forward_violations += 1,
        }
    }
}

/// Sweep arbitrary six-point configurations, asserting the Desargues
/// biconditional for honest triangles, the unconditional forward
/// implication, and formula (D) everywhere.
pub fn sweep_desargues(
    catalog: &PlaneCatalog,
    budget: Budget,
    seed: u64,
) -> Result<DesarguesSweep> {
    let n = catalog.points().len();
    match budget {
        Budget::Exhaustive => {
            if catalog.q() > EXHAUSTIVE_CAP {
                return Err(Error::ExhaustiveTooLarge(catalog.q()));
            }
            Ok((0..n * n)
                .into_par_iter()
                .map(|uv| {
                    let (iu, iv) = (uv / n, uv % n);
                    let mut stats = DesarguesSweep::default();
                    for iw in 0..n {
                        for ix in 0..n {
                            for iy in 0..n {
                                for iz in 0..n {
                                    let c = catalog.config([iu, iv, iw, ix, iy, iz]);
                                    stats.record(&c);
                                }
                            }
                        }
                    }
                    stats
                })
                .reduce(DesarguesSweep::default, DesarguesSweep::absorb))
        }
        Budget::Samples(count) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut stats = DesarguesSweep::default();
            for _ in 0..count {
                let idx: [usize; 6] = std::array::from_fn(|_| rng.gen_range(0..n));
                stats.record(&catalog.config(idx));
            }
            Ok(stats)
        }
    }
}

//! Report documents for every subcommand, with two renderings: stable
//! structured JSON (no timings, byte-identical across reruns) and a
//! human text form (which may carry wall-clock times).

use std::fmt::Write as _;

use serde::Serialize;

use crossdet::fields::{Field, FieldCtx};
use crossdet::identities::{
    check_desargues, check_pappus, derive_points, eval_d, eval_p, four_triples, pairwise_joins,
    Configuration, VECTOR_LABELS,
};
use crossdet::plane::{Budget, DesarguesSweep, PappusSweep, PlaneCatalog};
use crossdet::projective::{ProjLine, ProjPoint};
use crossdet::symbolic::ProofReport;
use crossdet::vec3::Vec3;

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

#[derive(Serialize)]
pub struct EquationDoc {
    pub label: String,
    pub lhs_terms: usize,
    pub rhs_terms: usize,
    pub difference_terms: usize,
}

#[derive(Serialize)]
pub struct IdentityDoc {
    pub id: String,
    pub description: String,
    pub equations: Vec<EquationDoc>,
    pub proved: bool,
}

#[derive(Serialize)]
pub struct VerifyDoc {
    pub command: &'static str,
    pub identities: Vec<IdentityDoc>,
    pub proved: usize,
    pub total: usize,
    pub all_proved: bool,
}

pub fn verify_doc(reports: &[ProofReport]) -> VerifyDoc {
    let identities: Vec<IdentityDoc> = reports
        .iter()
        .map(|r| IdentityDoc {
            id: r.id.name().to_string(),
            description: r.id.description().to_string(),
            equations: r
                .equations
                .iter()
                .map(|e| EquationDoc {
                    label: e.label.clone(),
                    lhs_terms: e.lhs_terms,
                    rhs_terms: e.rhs_terms,
                    difference_terms: e.difference_terms,
                })
                .collect(),
            proved: r.is_zero,
        })
        .collect();
    let proved = identities.iter().filter(|i| i.proved).count();
    VerifyDoc {
        command: "verify",
        total: identities.len(),
        all_proved: proved == identities.len(),
        identities,
        proved,
    }
}

pub fn verify_text(reports: &[ProofReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let _ = writeln!(out, "identity {} — {}", r.id.name(), r.id.description());
        for e in &r.equations {
            let _ = writeln!(
                out,
                "  {}: lhs {} terms, rhs {} terms, difference {} terms",
                e.label, e.lhs_terms, e.rhs_terms, e.difference_terms
            );
        }
        let _ = writeln!(
            out,
            "  {} in {:.3} ms",
            if r.is_zero { "proved" } else { "NOT PROVED" },
            r.elapsed.as_secs_f64() * 1e3
        );
    }
    let proved = reports.iter().filter(|r| r.is_zero).count();
    let _ = writeln!(out, "{proved}/{} identities proved", reports.len());
    out
}

// ---------------------------------------------------------------------------
// fuzz
// ---------------------------------------------------------------------------

#[derive(Serialize)]
pub struct ConfigDoc {
    pub u: String,
    pub v: String,
    pub w: String,
    pub x: String,
    pub y: String,
    pub z: String,
}

fn config_doc<F: Field>(c: &Configuration<F>) -> ConfigDoc {
    let [u, v, w, x, y, z] = c.vectors().map(|v| v.to_string());
    ConfigDoc { u, v, w, x, y, z }
}

#[derive(Serialize)]
pub struct FuzzFailure {
    pub index: u64,
    pub config: ConfigDoc,
    pub p_holds: bool,
    pub d_holds: bool,
}

#[derive(Serialize)]
pub struct FuzzDoc {
    pub command: &'static str,
    pub field: String,
    pub seed: u64,
    pub samples: u64,
    pub p_failures: u64,
    pub d_failures: u64,
    /// First few offending configurations, verbatim.
    pub failures: Vec<FuzzFailure>,
    pub ok: bool,
}

const MAX_REPORTED_FAILURES: usize = 5;

pub fn run_fuzz<C: FieldCtx>(ctx: &C, seed: u64, samples: u64) -> FuzzDoc {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut doc = FuzzDoc {
        command: "fuzz",
        field: ctx.name(),
        seed,
        samples,
        p_failures: 0,
        d_failures: 0,
        failures: Vec::new(),
        ok: true,
    };
    for index in 0..samples {
        let c = Configuration::<C::Elem>::sample(ctx, &mut rng);
        let p = eval_p(&c);
        let d = eval_d(&c);
        if !p.holds {
            doc.p_failures += 1;
        }
        if !d.holds {
            doc.d_failures += 1;
        }
        if (!p.holds || !d.holds) && doc.failures.len() < MAX_REPORTED_FAILURES {
            doc.failures.push(FuzzFailure {
                index,
                config: config_doc(&c),
                p_holds: p.holds,
                d_holds: d.holds,
            });
        }
    }
    doc.ok = doc.p_failures == 0 && doc.d_failures == 0;
    doc
}

pub fn fuzz_text(doc: &FuzzDoc) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "fuzz: field {}, seed {}, {} configurations",
        doc.field, doc.seed, doc.samples
    );
    let _ = writeln!(out, "formula (P): {} failures", doc.p_failures);
    let _ = writeln!(out, "formula (D): {} failures", doc.d_failures);
    for f in &doc.failures {
        let _ = writeln!(out, "failing configuration #{}:", f.index);
        let c = &f.config;
        for (label, vec) in VECTOR_LABELS.iter().zip([&c.u, &c.v, &c.w, &c.x, &c.y, &c.z]) {
            let _ = writeln!(out, "  {label}: {vec}");
        }
        let _ = writeln!(out, "  (P) holds: {}, (D) holds: {}", f.p_holds, f.d_holds);
    }
    let _ = writeln!(
        out,
        "{}",
        if doc.ok {
            "all reports hold"
        } else {
            "FAILURES FOUND"
        }
    );
    out
}

// ---------------------------------------------------------------------------
// check
// ---------------------------------------------------------------------------

#[derive(Serialize)]
pub struct VecDoc {
    pub label: String,
    pub coords: String,
    /// Canonical projective form, or null for the zero vector.
    pub canonical: Option<String>,
}

#[derive(Serialize)]
pub struct FormulaDoc {
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
}

#[derive(Serialize)]
pub struct PappusDoc {
    pub hypothesis_holds: bool,
    pub conclusion_holds: bool,
    pub degenerate: bool,
}

#[derive(Serialize)]
pub struct DesarguesDoc {
    pub triangles_ok: bool,
    pub concurrent_1st: bool,
    pub collinear_2nd: bool,
    pub forward_implication_holds: bool,
    pub biconditional_holds: bool,
}

#[derive(Serialize)]
pub struct FourTriplesDoc {
    pub determinants: [String; 4],
    pub all_equal: bool,
}

#[derive(Serialize)]
pub struct CheckDoc {
    pub command: &'static str,
    pub field: String,
    pub points: Vec<VecDoc>,
    pub joins: Vec<VecDoc>,
    pub derived: Vec<VecDoc>,
    pub formula_p: FormulaDoc,
    pub formula_d: FormulaDoc,
    pub pappus: PappusDoc,
    pub desargues: DesarguesDoc,
    pub four_triples: FourTriplesDoc,
    pub ok: bool,
}

fn point_doc<F: Field>(label: &str, v: &Vec3<F>) -> VecDoc {
    VecDoc {
        label: label.to_string(),
        coords: v.to_string(),
        canonical: ProjPoint::from_vec(v).ok().map(|p| p.to_string()),
    }
}

fn line_doc<F: Field>(label: &str, v: &Vec3<F>) -> VecDoc {
    VecDoc {
        label: label.to_string(),
        coords: v.to_string(),
        canonical: ProjLine::from_vec(v).ok().map(|l| l.to_string()),
    }
}

pub fn run_check<C: FieldCtx>(ctx: &C, c: &Configuration<C::Elem>) -> CheckDoc {
    let d = derive_points(c);
    let p = eval_p(c);
    let dd = eval_d(c);
    let pappus = check_pappus(c);
    let desargues = check_desargues(c);
    let quads = four_triples(c);
    let all_equal = quads.iter().all(|t| *t == quads[0]);

    let points = VECTOR_LABELS
        .iter()
        .zip(c.vectors())
        .map(|(l, v)| point_doc(l, v))
        .collect();
    let joins = pairwise_joins(c)
        .iter()
        .map(|(l, v)| line_doc(l, v))
        .collect();
    let derived = [
        ("O", &d.o),
        ("P", &d.p),
        ("Q", &d.q),
        ("R", &d.r),
        ("S", &d.s),
        ("T", &d.t),
    ]
    .into_iter()
    .map(|(l, v)| point_doc(l, v))
    .collect();

    let ok = p.holds && dd.holds && all_equal && desargues.forward_implication_holds()
        && desargues.biconditional_holds()
        && (!pappus.hypothesis_holds || pappus.conclusion_holds);
    CheckDoc {
        command: "check",
        field: ctx.name(),
        points,
        joins,
        derived,
        formula_p: FormulaDoc {
            lhs: p.lhs.to_string(),
            rhs: p.rhs.to_string(),
            holds: p.holds,
        },
        formula_d: FormulaDoc {
            lhs: dd.lhs.to_string(),
            rhs: dd.rhs.to_string(),
            holds: dd.holds,
        },
        pappus: PappusDoc {
            hypothesis_holds: pappus.hypothesis_holds,
            conclusion_holds: pappus.conclusion_holds,
            degenerate: pappus.degenerate,
        },
        desargues: DesarguesDoc {
            triangles_ok: desargues.triangles_ok,
            concurrent_1st: desargues.concurrent_1st,
            collinear_2nd: desargues.collinear_2nd,
            forward_implication_holds: desargues.forward_implication_holds(),
            biconditional_holds: desargues.biconditional_holds(),
        },
        four_triples: FourTriplesDoc {
            determinants: quads.map(|t| t.to_string()),
            all_equal,
        },
        ok,
    }
}

fn vec_doc_line(out: &mut String, d: &VecDoc) {
    match &d.canonical {
        Some(c) => {
            let _ = writeln!(out, "  {}: {}   [{}]", d.label, d.coords, c);
        }
        None => {
            let _ = writeln!(out, "  {}: {}   [zero vector]", d.label, d.coords);
        }
    }
}

pub fn check_text(doc: &CheckDoc) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "field: {}", doc.field);
    let _ = writeln!(out, "six points:");
    for d in &doc.points {
        vec_doc_line(&mut out, d);
    }
    let _ = writeln!(out, "fifteen joining lines:");
    for d in &doc.joins {
        vec_doc_line(&mut out, d);
    }
    let _ = writeln!(out, "derived intersection points:");
    for d in &doc.derived {
        vec_doc_line(&mut out, d);
    }
    let _ = writeln!(
        out,
        "formula (P): lhs = {}, rhs = {} — {}",
        doc.formula_p.lhs,
        doc.formula_p.rhs,
        if doc.formula_p.holds { "holds" } else { "VIOLATED" }
    );
    let _ = writeln!(
        out,
        "formula (D): lhs = {}, rhs = {} — {}",
        doc.formula_d.lhs,
        doc.formula_d.rhs,
        if doc.formula_d.holds { "holds" } else { "VIOLATED" }
    );
    let _ = writeln!(
        out,
        "Pappus: hypothesis (u,v,w and x,y,z collinear): {}; conclusion det(q,p,o)=0: {}{}",
        doc.pappus.hypothesis_holds,
        doc.pappus.conclusion_holds,
        if doc.pappus.degenerate {
            " (degenerate: some of o,p,q is the zero vector)"
        } else {
            ""
        }
    );
    let _ = writeln!(
        out,
        "Desargues: triangles ok: {}; lines u-x, v-y, w-z concurrent: {}; R,S,T collinear: {}",
        doc.desargues.triangles_ok, doc.desargues.concurrent_1st, doc.desargues.collinear_2nd
    );
    let _ = writeln!(
        out,
        "four triples: determinants {} — {}",
        doc.four_triples.determinants.join(", "),
        if doc.four_triples.all_equal {
            "all equal"
        } else {
            "NOT EQUAL"
        }
    );
    let _ = writeln!(out, "{}", if doc.ok { "all checks pass" } else { "CHECKS FAILED" });
    out
}

// ---------------------------------------------------------------------------
// enumerate
// ---------------------------------------------------------------------------

#[derive(Serialize)]
pub struct EnumerateDoc {
    pub command: &'static str,
    pub q: u32,
    pub points: usize,
    pub lines: usize,
    pub expected: usize,
    pub points_per_line: usize,
    pub lines_per_point: usize,
    pub invariants_ok: bool,
    pub invariant_error: Option<String>,
    pub mode: &'static str,
    pub seed: u64,
    pub samples: Option<u64>,
    pub pappus: PappusSweep,
    pub desargues: DesarguesSweep,
    pub ok: bool,
}

pub fn run_enumerate(
    catalog: &PlaneCatalog,
    budget: Budget,
    seed: u64,
) -> Result<EnumerateDoc, crossdet::Error> {
    let q = catalog.q() as usize;
    let invariants = catalog.verify_invariants();
    let pappus = crossdet::plane::sweep_pappus(catalog, budget, seed)?;
    let desargues = crossdet::plane::sweep_desargues(catalog, budget, seed)?;
    let (mode, samples) = match budget {
        Budget::Exhaustive => ("exhaustive", None),
        Budget::Samples(n) => ("sampled", Some(n)),
    };
    let invariants_ok = invariants.is_ok();
    let ok = invariants_ok && pappus.ok() && desargues.ok();
    Ok(EnumerateDoc {
        command: "enumerate",
        q: catalog.q(),
        points: catalog.points().len(),
        lines: catalog.lines().len(),
        expected: q * q + q + 1,
        points_per_line: q + 1,
        lines_per_point: q + 1,
        invariants_ok,
        invariant_error: invariants.err(),
        mode,
        seed,
        samples,
        pappus,
        desargues,
        ok,
    })
}

pub fn enumerate_text(doc: &EnumerateDoc) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "PG(2,{}): {} points, {} lines (expected {}); {} points per line, {} lines per point",
        doc.q, doc.points, doc.lines, doc.expected, doc.points_per_line, doc.lines_per_point
    );
    let _ = writeln!(
        out,
        "invariants: {}",
        match &doc.invariant_error {
            None => "ok".to_string(),
            Some(e) => format!("VIOLATED — {e}"),
        }
    );
    let p = &doc.pappus;
    let _ = writeln!(
        out,
        "pappus sweep ({}): tested {}, degenerate {}, passed {}, conclusion failures {}, identity failures {}",
        doc.mode, p.tested, p.degenerate, p.passed, p.conclusion_failures, p.identity_failures
    );
    let d = &doc.desargues;
    let _ = writeln!(
        out,
        "desargues sweep ({}): tested {}, both-true {}, both-false {}, forward-only {}, \
         triangles-ok {}, forward violations {}, biconditional violations {}, identity failures {}",
        doc.mode,
        d.tested,
        d.both_true,
        d.both_false,
        d.forward_only,
        d.triangles_ok,
        d.forward_violations,
        d.biconditional_violations,
        d.identity_failures
    );
    let _ = writeln!(
        out,
        "{}",
        if doc.ok { "all sweeps pass" } else { "SWEEPS FAILED" }
    );
    out
}

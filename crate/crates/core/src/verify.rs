//! Identity sweeps: every algebraic identity of the library evaluated on
//! seeded random samples or on every vector tuple over a small prime field.
//!
//! A sample is four vectors. Each identity reads the first two, three or four
//! of them according to its arity. Samples that violate an identity's
//! preconditions are counted as skipped, never resampled.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::affine::{analyze_triangle, spread_unchecked, Check, VectorTriangle};
use crate::codec::{encode_mat, encode_vec, MatJson, VecJson};
use crate::error::Error;
use crate::field::{FieldElement, FieldKind, FieldSpec};
use crate::linalg::{det3, Mat3, Vec3};
use crate::metric::{closed, reciprocal_basis, BilinearForm};
use crate::projective::{analyze_tripod, projective_triple_quad, ProjectivePoint, Tripod};
use crate::rng::Lcg64;

/// Integer range for random rational components.
pub const RATIONAL_RANGE: (i64, i64) = (-20, 20);
/// Largest number of triples an exhaustive sweep may enumerate.
pub const EXHAUSTIVE_TRIPLE_LIMIT: u64 = 2_000_000;
/// Quadruples are enumerated only when there are at most this many.
pub const EXHAUSTIVE_QUADRUPLE_LIMIT: u64 = 1_000_000;

macro_rules! identities {
    ($($id:ident = $name:literal, $arity:literal;)*) => {
        #[derive(Debug, Clone, Copy, PartialEq, Eq)]
        #[repr(usize)]
        pub enum Identity { $($id),* }

        impl Identity {
            pub const ALL: &'static [Identity] = &[$(Identity::$id),*];

            pub fn name(self) -> &'static str {
                match self { $(Identity::$id => $name),* }
            }

            /// Number of sample vectors the identity reads.
            pub fn arity(self) -> usize {
                match self { $(Identity::$id => $arity),* }
            }
        }
    };
}

identities! {
    AdjugateProduct = "adjugate_product", 3;
    AdjugateCofactor = "adjugate_cofactor", 3;
    AdjugateInvolution = "adjugate_involution", 3;
    AdjugateVectorProduct = "adjugate_vector_product", 3;
    ScalarTripleProduct = "scalar_triple_product", 3;
    PermutationLaw = "permutation_law", 3;
    LagrangeFormula = "lagrange_formula", 3;
    VectorTripleAntisymmetry = "vector_triple_antisymmetry", 3;
    Jacobi = "jacobi", 3;
    BPerpendicularity = "b_perpendicularity", 2;
    BinetCauchy = "binet_cauchy", 4;
    LagrangeIdentity = "lagrange_identity", 2;
    QuadrupleCyclicSum = "quadruple_cyclic_sum", 4;
    VectorQuadrupleFirstForm = "vector_quadruple_first_form", 4;
    VectorQuadrupleSecondForm = "vector_quadruple_second_form", 4;
    FourVectorRelation = "four_vector_relation", 4;
    CommonVector = "common_vector", 3;
    PlaneMeet = "plane_meet", 4;
    TripleScalarOfProducts = "triple_scalar_of_products", 3;
    ReciprocalCrossSum = "reciprocal_cross_sum", 3;
    ReciprocalDotSum = "reciprocal_dot_sum", 3;
    ReciprocalTripleProduct = "reciprocal_triple_product", 3;
    ReciprocalRecovery = "reciprocal_recovery", 3;
    Polarisation = "polarisation", 2;
    QuadranceScaling = "quadrance_scaling", 2;
    QuadreaTheorem = "quadrea_theorem", 2;
    CrossLaw = "cross_law", 2;
    QuadreaSpread = "quadrea_spread", 2;
    SpreadLaw = "spread_law", 2;
    TripleSpread = "triple_spread", 2;
    TripleQuad = "triple_quad", 2;
    Pythagoras = "pythagoras", 2;
    SpreadScaleInvariance = "spread_scale_invariance", 2;
    ProjectiveClassInvariance = "projective_class_invariance", 3;
    DualityInvolution = "duality_involution", 3;
    DualityExchange = "duality_exchange", 3;
    ProjectiveSpreadLaw = "projective_spread_law", 3;
    ProjectiveSpreadClosedForm = "projective_spread_closed_form", 3;
    ProjectiveCrossLaw = "projective_cross_law", 3;
    ProjectiveCrossLawAsymmetric1 = "projective_cross_law_asymmetric_1", 3;
    ProjectiveCrossLawAsymmetric2 = "projective_cross_law_asymmetric_2", 3;
    ProjectiveCrossLawAsymmetric3 = "projective_cross_law_asymmetric_3", 3;
    QuadreaQuadrealProduct = "quadrea_quadreal_product", 3;
    ProjectivePythagoras = "projective_pythagoras", 2;
    ProjectiveTripleQuad = "projective_triple_quad", 2;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Random {
        seed: u64,
        cases: u64,
    },
    /// Every tuple over the form's prime field.
    Exhaustive {
        prime: u64,
    },
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Counts {
    pub tested: u64,
    pub passed: u64,
    pub skipped: u64,
    pub failed: u64,
    /// The failing tuple with the smallest case index.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub first_failure: Option<Vec<VecJson>>,
    #[serde(skip)]
    first_failure_index: Option<u64>,
}

impl Counts {
    fn record(&mut self, check: Check, index: u64, sample: &[&Vec3]) {
        self.tested += 1;
        match check {
            Check::Pass => self.passed += 1,
            Check::Skipped => self.skipped += 1,
            Check::Fail => {
                self.failed += 1;
                if self.first_failure_index.is_none_or(|i| index < i) {
                    self.first_failure_index = Some(index);
                    self.first_failure = Some(sample.iter().map(|v| encode_vec(v)).collect());
                }
            }
        }
    }

    fn merge(&mut self, other: Counts) {
        self.tested += other.tested;
        self.passed += other.passed;
        self.skipped += other.skipped;
        self.failed += other.failed;
        if let Some(j) = other.first_failure_index {
            if self.first_failure_index.is_none_or(|i| j < i) {
                self.first_failure_index = Some(j);
                self.first_failure = other.first_failure;
            }
        }
    }
}

/// Per-identity counts, indexed like [`Identity::ALL`].
#[derive(Debug, Clone)]
struct Tally(Vec<Counts>);

impl Tally {
    fn new() -> Self {
        Tally(vec![Counts::default(); Identity::ALL.len()])
    }

    fn merge(mut self, other: Tally) -> Tally {
        for (a, b) in self.0.iter_mut().zip(other.0) {
            a.merge(b);
        }
        self
    }
}

struct Recorder<'a> {
    tally: &'a mut Tally,
    index: u64,
    sample: &'a [&'a Vec3],
}

impl Recorder<'_> {
    fn record(&mut self, id: Identity, check: Check) {
        self.tally.0[id as usize].record(check, self.index, self.sample);
    }

    fn ok(&mut self, id: Identity, ok: bool) {
        self.record(id, Check::from_bool(ok));
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Summary {
    pub field: String,
    pub form: MatJson,
    pub mode: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub cases: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub exhaustive_prime: Option<u64>,
    pub identities: BTreeMap<String, Counts>,
    pub failures: u64,
}

impl Summary {
    pub fn counts(&self, id: Identity) -> &Counts {
        &self.identities[id.name()]
    }
}

/// The `[lo, hi]` integer range or the residues of `F_p`, as components.
fn random_vec(rng: &mut Lcg64, spec: FieldSpec) -> Vec3 {
    let mut c = [0i64; 3];
    for x in &mut c {
        *x = match spec.kind() {
            FieldKind::Rational => rng.range_i64(RATIONAL_RANGE.0, RATIONAL_RANGE.1),
            FieldKind::Prime(p) => rng.below(p) as i64,
        };
    }
    Vec3::from_i64(spec, c)
}

/// `cases` samples of four vectors each, drawn in order from one stream.
pub fn random_samples(spec: FieldSpec, seed: u64, cases: u64) -> Vec<[Vec3; 4]> {
    let mut rng = Lcg64::new(seed);
    (0..cases)
        .map(|_| std::array::from_fn(|_| random_vec(&mut rng, spec)))
        .collect()
}

/// The `index`-th tuple of `n` vectors over `F_p`, components in base-`p` digit order.
fn tuple_at<const N: usize>(spec: FieldSpec, p: u64, mut index: u64) -> [Vec3; N] {
    std::array::from_fn(|_| {
        let mut c = [0i64; 3];
        for x in &mut c {
            *x = (index % p) as i64;
            index /= p;
        }
        Vec3::from_i64(spec, c)
    })
}

pub fn run(b: &BilinearForm, mode: Mode) -> Result<Summary, Error> {
    let spec = b.spec();
    let tally = match mode {
        Mode::Random { cases: 0, .. } => {
            return Err(Error::InvalidConfig("cases must be at least 1".into()))
        }
        Mode::Random { seed, cases } => {
            let samples = random_samples(spec, seed, cases);
            samples
                .par_iter()
                .enumerate()
                .fold(Tally::new, |mut t, (i, [v1, v2, v3, v4])| {
                    let i = i as u64;
                    eval2(
                        b,
                        v1,
                        v2,
                        &mut Recorder {
                            tally: &mut t,
                            index: i,
                            sample: &[v1, v2],
                        },
                    );
                    eval3(
                        b,
                        v1,
                        v2,
                        v3,
                        &mut Recorder {
                            tally: &mut t,
                            index: i,
                            sample: &[v1, v2, v3],
                        },
                    );
                    eval4(
                        b,
                        v1,
                        v2,
                        v3,
                        v4,
                        &mut Recorder {
                            tally: &mut t,
                            index: i,
                            sample: &[v1, v2, v3, v4],
                        },
                    );
                    t
                })
                .reduce(Tally::new, Tally::merge)
        }
        Mode::Exhaustive { prime } => {
            if spec.modulus() != Some(prime) {
                return Err(Error::InvalidConfig(format!(
                    "exhaustive sweep over F_{prime} needs field prime:{prime}, got {spec}"
                )));
            }
            let p3 = prime.pow(3);
            let triples = p3
                .checked_pow(3)
                .filter(|&n| n <= EXHAUSTIVE_TRIPLE_LIMIT)
                .ok_or_else(|| {
                    Error::InvalidConfig(format!(
                        "F_{prime} has too many vector triples for an exhaustive sweep"
                    ))
                })?;
            let pairs = p3 * p3;
            let quadruples = triples * p3;

            let t2 = (0..pairs)
                .into_par_iter()
                .fold(Tally::new, |mut t, i| {
                    let [v1, v2] = tuple_at::<2>(spec, prime, i);
                    eval2(
                        b,
                        &v1,
                        &v2,
                        &mut Recorder {
                            tally: &mut t,
                            index: i,
                            sample: &[&v1, &v2],
                        },
                    );
                    t
                })
                .reduce(Tally::new, Tally::merge);
            let t3 = (0..triples)
                .into_par_iter()
                .fold(Tally::new, |mut t, i| {
                    let [v1, v2, v3] = tuple_at::<3>(spec, prime, i);
                    eval3(
                        b,
                        &v1,
                        &v2,
                        &v3,
                        &mut Recorder {
                            tally: &mut t,
                            index: i,
                            sample: &[&v1, &v2, &v3],
                        },
                    );
                    t
                })
                .reduce(Tally::new, Tally::merge);
            let t4 = if quadruples <= EXHAUSTIVE_QUADRUPLE_LIMIT {
                (0..quadruples)
                    .into_par_iter()
                    .fold(Tally::new, |mut t, i| {
                        let [v1, v2, v3, v4] = tuple_at::<4>(spec, prime, i);
                        let sample = [&v1, &v2, &v3, &v4];
                        eval4(
                            b,
                            &v1,
                            &v2,
                            &v3,
                            &v4,
                            &mut Recorder {
                                tally: &mut t,
                                index: i,
                                sample: &sample,
                            },
                        );
                        t
                    })
                    .reduce(Tally::new, Tally::merge)
            } else {
                Tally::new()
            };
            t2.merge(t3).merge(t4)
        }
    };

    let failures = tally.0.iter().map(|c| c.failed).sum();
    let identities = Identity::ALL
        .iter()
        .zip(tally.0)
        .map(|(id, c)| (id.name().to_string(), c))
        .collect();
    let (mode_name, seed, cases, exhaustive_prime) = match mode {
        Mode::Random { seed, cases } => ("random", Some(seed), Some(cases), None),
        Mode::Exhaustive { prime } => ("exhaustive", None, None, Some(prime)),
    };
    Ok(Summary {
        field: spec.to_string(),
        form: encode_mat(b.matrix()),
        mode: mode_name.into(),
        seed,
        cases,
        exhaustive_prime,
        identities,
        failures,
    })
}

/// `x` if nonzero, otherwise `fallback`.
fn nonzero_or(x: FieldElement, fallback: i64) -> FieldElement {
    if x.is_zero() {
        x.spec().from_i64(fallback)
    } else {
        x
    }
}

/// Fail wins over pass, pass over skipped.
fn combine(a: Check, b: Check) -> Check {
    match (a, b) {
        (Check::Fail, _) | (_, Check::Fail) => Check::Fail,
        (Check::Pass, _) | (_, Check::Pass) => Check::Pass,
        _ => Check::Skipped,
    }
}

fn rows(a: Vec3, b: Vec3, c: Vec3) -> Mat3 {
    Mat3::from_rows(a, b, c).expect("sample vectors share a field")
}

fn eval2(b: &BilinearForm, v: &Vec3, w: &Vec3, r: &mut Recorder) {
    let spec = b.spec();
    let two = spec.from_i64(2);
    let c = b.cross(v, w);

    r.ok(
        Identity::BPerpendicularity,
        b.dot(v, &c).is_zero() && b.dot(w, &c).is_zero(),
    );
    r.ok(
        Identity::LagrangeIdentity,
        b.quadrance(&c) == closed::lagrange_identity(b, v, w),
    );

    let (qv, qw, d) = (b.quadrance(v), b.quadrance(w), b.dot(v, w));
    r.ok(
        Identity::Polarisation,
        d == (b.quadrance(&(v + w)) - &qv - &qw) / &two
            && d == (&qv + &qw - b.quadrance(&(v - w))) / &two,
    );
    let lam = w.x().clone();
    r.ok(
        Identity::QuadranceScaling,
        b.quadrance(&v.scale(&lam)) == lam.square() * &qv,
    );

    let t = VectorTriangle::from_two(v.clone(), w.clone()).expect("two vectors close a triangle");
    let report = analyze_triangle(b, &t).expect("sample vectors share a field");
    for (id, key) in [
        (Identity::QuadreaTheorem, "quadrea_theorem"),
        (Identity::CrossLaw, "cross_law"),
        (Identity::QuadreaSpread, "quadrea_spread"),
        (Identity::SpreadLaw, "spread_law"),
        (Identity::TripleSpread, "triple_spread"),
    ] {
        r.record(id, report.checks[key]);
    }

    // A right angle at vertex 3 by construction: v ⊥_B v ×_B w.
    let right =
        VectorTriangle::from_two(v.clone(), c.clone()).expect("two vectors close a triangle");
    let right_report = analyze_triangle(b, &right).expect("sample vectors share a field");
    r.record(
        Identity::Pythagoras,
        combine(
            report.checks["pythagoras"],
            right_report.checks["pythagoras"],
        ),
    );

    let flat =
        VectorTriangle::from_two(v.clone(), v.scale(&lam)).expect("two vectors close a triangle");
    let flat_report = analyze_triangle(b, &flat).expect("sample vectors share a field");
    r.record(Identity::TripleQuad, flat_report.checks["triple_quad"]);

    let (l, m) = (two.clone(), nonzero_or(spec.from_i64(-3), -1));
    r.record(
        Identity::SpreadScaleInvariance,
        match spread_unchecked(b, v, w) {
            Ok(s) => Check::from_bool(spread_unchecked(b, &v.scale(&l), &w.scale(&m)) == Ok(s)),
            Err(_) => Check::Skipped,
        },
    );

    // S₁ = 1 by construction: the dual points r₂, r₃ are B-perpendicular.
    r.record(
        Identity::ProjectivePythagoras,
        match Tripod::from_vectors(v, w, &(v + &c)) {
            Ok(t) if !t.is_degenerate() => {
                let rep = analyze_tripod(b, &t).expect("non-degenerate tripod");
                match &rep.spreads[0] {
                    Some(s1) if !s1.is_one() => Check::Fail,
                    Some(_) => rep.checks["projective_pythagoras"],
                    None => Check::Skipped,
                }
            }
            _ => Check::Skipped,
        },
    );

    r.record(
        Identity::ProjectiveTripleQuad,
        match Tripod::from_vectors(v, w, &(v + w)) {
            Ok(t) => projective_triple_quad(b, &t).expect("sample vectors share a field"),
            Err(_) => Check::Skipped,
        },
    );
}

fn eval3(b: &BilinearForm, v1: &Vec3, v2: &Vec3, v3: &Vec3, r: &mut Recorder) {
    let spec = b.spec();
    let m = rows(v1.clone(), v2.clone(), v3.clone());
    let n = rows(v2.clone(), v3.clone(), v1.clone()).transpose();
    let det = m.det();
    let adj = m.adjugate();
    let det_id = Mat3::identity(spec).scale(&det);

    r.ok(
        Identity::AdjugateProduct,
        m.mul(&n).adjugate() == n.adjugate().mul(&adj),
    );
    r.ok(
        Identity::AdjugateCofactor,
        m.mul(&adj) == det_id && adj.mul(&m) == det_id,
    );
    r.ok(
        Identity::AdjugateInvolution,
        adj.adjugate() == m.scale(&det),
    );

    let (c23, c31, c12) = (b.cross(v2, v3), b.cross(v3, v1), b.cross(v1, v2));
    r.ok(
        Identity::AdjugateVectorProduct,
        m.mul(b.matrix()).adjugate() == rows(c23.clone(), c31.clone(), c12.clone()).transpose(),
    );

    let t = b.triple(v1, v2, v3);
    r.ok(
        Identity::ScalarTripleProduct,
        t == closed::scalar_triple(b, v1, v2, v3),
    );
    r.ok(
        Identity::PermutationLaw,
        b.triple(v2, v3, v1) == t
            && b.triple(v3, v1, v2) == t
            && -b.triple(v1, v3, v2) == t
            && -b.triple(v2, v1, v3) == t
            && -b.triple(v3, v2, v1) == t,
    );

    let vt = b.vector_triple(v1, v2, v3);
    r.ok(
        Identity::LagrangeFormula,
        vt == closed::vector_triple(b, v1, v2, v3),
    );
    r.ok(
        Identity::VectorTripleAntisymmetry,
        vt == -b.vector_triple(v1, v3, v2),
    );
    r.ok(
        Identity::Jacobi,
        (&(&vt + &b.vector_triple(v2, v3, v1)) + &b.vector_triple(v3, v1, v2)).is_zero(),
    );
    r.ok(
        Identity::CommonVector,
        b.vector_quadruple(v1, v2, v1, v3) == v1.scale(&(b.det() * &t)),
    );
    r.ok(
        Identity::TripleScalarOfProducts,
        b.triple(&c23, &c31, &c12) == b.det() * t.square(),
    );

    match reciprocal_basis(b, v1, v2, v3) {
        Ok([w1, w2, w3]) => {
            let cross_sum = &(&b.cross(v1, &w1) + &b.cross(v2, &w2)) + &b.cross(v3, &w3);
            r.ok(Identity::ReciprocalCrossSum, cross_sum.is_zero());
            r.ok(
                Identity::ReciprocalDotSum,
                b.dot(v1, &w1) + b.dot(v2, &w2) + b.dot(v3, &w3) == spec.from_i64(3),
            );
            let tw = b.triple(&w1, &w2, &w3);
            r.ok(Identity::ReciprocalTripleProduct, &t * &tw == *b.det());
            let inv = tw.inv().expect("reciprocal triple is nonzero");
            r.ok(
                Identity::ReciprocalRecovery,
                b.cross(&w2, &w3).scale(&inv) == *v1
                    && b.cross(&w3, &w1).scale(&inv) == *v2
                    && b.cross(&w1, &w2).scale(&inv) == *v3,
            );
        }
        Err(_) => {
            for id in [
                Identity::ReciprocalCrossSum,
                Identity::ReciprocalDotSum,
                Identity::ReciprocalTripleProduct,
                Identity::ReciprocalRecovery,
            ] {
                r.record(id, Check::Skipped);
            }
        }
    }

    r.record(
        Identity::ProjectiveClassInvariance,
        class_invariance(b, v1, v2, v3),
    );

    const TRIPOD_LAWS: [(Identity, &str); 8] = [
        (Identity::DualityInvolution, "duality_involution"),
        (Identity::DualityExchange, "duality_exchange"),
        (Identity::ProjectiveSpreadLaw, "projective_spread_law"),
        (Identity::ProjectiveCrossLaw, "projective_cross_law"),
        (
            Identity::ProjectiveCrossLawAsymmetric1,
            "projective_cross_law_asymmetric_1",
        ),
        (
            Identity::ProjectiveCrossLawAsymmetric2,
            "projective_cross_law_asymmetric_2",
        ),
        (
            Identity::ProjectiveCrossLawAsymmetric3,
            "projective_cross_law_asymmetric_3",
        ),
        (Identity::QuadreaQuadrealProduct, "quadrea_quadreal_product"),
    ];
    let tripod = Tripod::from_vectors(v1, v2, v3)
        .ok()
        .filter(|t| !t.is_degenerate());
    match tripod {
        Some(tp) => {
            let rep = analyze_tripod(b, &tp).expect("non-degenerate tripod");
            for (id, key) in TRIPOD_LAWS {
                r.record(id, rep.checks[key]);
            }
            r.record(
                Identity::ProjectiveSpreadClosedForm,
                projective_spread_closed_form(
                    b,
                    [v1, v2, v3],
                    &c12,
                    &c31,
                    &c23,
                    &t,
                    &rep.quadrances[0],
                    &rep.spreads[0],
                ),
            );
        }
        None => {
            for (id, _) in TRIPOD_LAWS {
                r.record(id, Check::Skipped);
            }
            r.record(Identity::ProjectiveSpreadClosedForm, Check::Skipped);
        }
    }
}

/// `S₁/q₁ = (det B)²[v₁,v₂,v₃]² Q₁Q₂Q₃ / (Q(v₁×v₂)Q(v₁×v₃)Q(v₂×v₃))`.
#[allow(clippy::too_many_arguments)]
fn projective_spread_closed_form(
    b: &BilinearForm,
    v: [&Vec3; 3],
    c12: &Vec3,
    c31: &Vec3,
    c23: &Vec3,
    t: &FieldElement,
    q1: &Option<FieldElement>,
    s1: &Option<FieldElement>,
) -> Check {
    let (Some(q1), Some(s1)) = (q1, s1) else {
        return Check::Skipped;
    };
    let den = b.quadrance(c12) * b.quadrance(c31) * b.quadrance(c23);
    if q1.is_zero() || den.is_zero() {
        return Check::Skipped;
    }
    let num =
        b.det().square() * t.square() * b.quadrance(v[0]) * b.quadrance(v[1]) * b.quadrance(v[2]);
    Check::from_bool(s1 / q1 == num / den)
}

/// Points, spreads and B-normals computed from rescaled representatives
/// agree with those from the originals.
fn class_invariance(b: &BilinearForm, v1: &Vec3, v2: &Vec3, v3: &Vec3) -> Check {
    if v1.is_zero() || v2.is_zero() || v3.is_zero() {
        return Check::Skipped;
    }
    let spec = b.spec();
    let k = [
        spec.from_i64(2),
        nonzero_or(spec.from_i64(-3), -1),
        nonzero_or(v3.x().clone() + spec.from_i64(2), 3),
    ];
    let k = k.map(|x| nonzero_or(x, 1));
    let (u1, u2, u3) = (v1.scale(&k[0]), v2.scale(&k[1]), v3.scale(&k[2]));
    let pp = |v: &Vec3| ProjectivePoint::new(v).expect("nonzero vector");

    let points = pp(v1) == pp(&u1) && pp(v2) == pp(&u2) && pp(v3) == pp(&u3);
    let spreads = spread_unchecked(b, v1, v2) == spread_unchecked(b, &u1, &u2);
    let n = b.cross(v1, v2);
    let normals = n.is_zero() == b.cross(&u1, &u2).is_zero()
        && (n.is_zero() || pp(&n) == pp(&b.cross(&u1, &u2)));
    Check::from_bool(points && spreads && normals)
}

fn eval4(b: &BilinearForm, v1: &Vec3, v2: &Vec3, v3: &Vec3, v4: &Vec3, r: &mut Recorder) {
    r.ok(
        Identity::BinetCauchy,
        b.quadruple(v1, v2, v3, v4) == closed::scalar_quadruple(b, v1, v2, v3, v4),
    );
    r.ok(
        Identity::QuadrupleCyclicSum,
        (b.quadruple(v1, v2, v3, v4) + b.quadruple(v2, v3, v1, v4) + b.quadruple(v3, v1, v2, v4))
            .is_zero(),
    );
    let vq = b.vector_quadruple(v1, v2, v3, v4);
    r.ok(
        Identity::VectorQuadrupleFirstForm,
        vq == closed::vector_quadruple_first(b, v1, v2, v3, v4),
    );
    r.ok(
        Identity::VectorQuadrupleSecondForm,
        vq == closed::vector_quadruple_second(b, v1, v2, v3, v4),
    );

    let relation = &(&(&v1.scale(&b.triple(v2, v3, v4)) - &v2.scale(&b.triple(v1, v3, v4)))
        + &v3.scale(&b.triple(v1, v2, v4)))
        - &v4.scale(&b.triple(v1, v2, v3));
    r.ok(Identity::FourVectorRelation, relation.is_zero());

    // Two distinct planes through the origin meet in a line spanned by ⟨v₁,v₂;v₃,v₄⟩.
    let (n1, n2) = (v1.cross(v2), v3.cross(v4));
    r.record(
        Identity::PlaneMeet,
        if n1.is_zero() || n2.is_zero() || n1.cross(&n2).is_zero() {
            Check::Skipped
        } else {
            Check::from_bool(
                !vq.is_zero() && det3(v1, v2, &vq).is_zero() && det3(v3, v4, &vq).is_zero(),
            )
        },
    );
}

/// For `l_count` random invertible `L` over ℚ and `pairs` random `(v, w)`
/// each, whether `(vL)·(wL) = v·_{LLᵀ} w`. Singular draws are redrawn.
pub fn induced_form_sweep(seed: u64, l_count: usize, pairs: usize) -> Counts {
    let spec = FieldSpec::rational();
    let euclid = BilinearForm::euclidean(spec);
    let mut rng = Lcg64::new(seed);
    let mut counts = Counts::default();
    let mut done = 0;
    let mut index = 0u64;
    while done < l_count {
        let l = rows(
            random_vec(&mut rng, spec),
            random_vec(&mut rng, spec),
            random_vec(&mut rng, spec),
        );
        let Ok(b) = BilinearForm::induced(&l) else {
            continue;
        };
        done += 1;
        for _ in 0..pairs {
            let (v, w) = (random_vec(&mut rng, spec), random_vec(&mut rng, spec));
            let ok = euclid.dot(&v.mul_mat(&l), &w.mul_mat(&l)) == b.dot(&v, &w);
            counts.record(Check::from_bool(ok), index, &[&v, &w]);
            index += 1;
        }
    }
    counts
}

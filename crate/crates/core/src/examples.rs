//! Canned worked examples with pinned values. Each run recomputes every value
//! from its inputs and lists any value that differs from the pinned one.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::affine::{analyze_triangle, archimedes, spread, VectorTriangle};
use crate::codec::{encode_scalar, TriangleReportJson, TripodReportJson};
use crate::error::Error;
use crate::field::{FieldElement, FieldSpec};
use crate::linalg::Vec3;
use crate::metric::BilinearForm;
use crate::projective::{analyze_tripod, cross_law_sides, Tripod};

const Q: FieldSpec = FieldSpec::rational();

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExampleName {
    Methane,
    MinkowskiAffine,
    MinkowskiProjective,
}

impl ExampleName {
    pub const ALL: [ExampleName; 3] = [
        ExampleName::Methane,
        ExampleName::MinkowskiAffine,
        ExampleName::MinkowskiProjective,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ExampleName::Methane => "methane",
            ExampleName::MinkowskiAffine => "minkowski-affine",
            ExampleName::MinkowskiProjective => "minkowski-projective",
        }
    }
}

impl fmt::Display for ExampleName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ExampleName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        ExampleName::ALL
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| Error::UnknownExample(s.to_string()))
    }
}

/// Regular tetrahedron with rational vertices; every edge has quadrance 8.
pub const TETRAHEDRON: [[i64; 3]; 4] = [[1, 1, 1], [1, -1, -1], [-1, 1, -1], [-1, -1, 1]];

pub const MINKOWSKI_TRIANGLE: [[i64; 3]; 2] = [[-1, 3, -2], [2, -5, 4]];
pub const MINKOWSKI_TRIPOD: [[i64; 3]; 3] = [[2, -1, 3], [-2, 5, 0], [3, 0, 4]];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MethaneReport {
    pub example: String,
    /// Common quadrance of the six edges.
    #[serde(rename = "Q")]
    pub q_edge: String,
    /// Face quadrea `A(Q,Q,Q)`.
    pub quadrea: String,
    /// `3Q²`.
    pub quadrea_closed_form: String,
    #[serde(rename = "quadrea_at_Q1")]
    pub quadrea_at_q1: String,
    /// Face spread.
    pub s: String,
    /// Projective quadrance of two concurrent edges.
    pub q: String,
    /// Projective quadrea of three concurrent edges.
    pub a: String,
    /// Projective spread between two faces.
    #[serde(rename = "S")]
    pub spread_faces: String,
    /// Spread between two centre-to-vertex lines.
    pub central_spread: String,
    pub deviations: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AffineExampleReport {
    pub example: String,
    pub report: TriangleReportJson,
    /// `(s₁+s₂+s₃)² − 2(s₁²+s₂²+s₃²)` and `4s₁s₂s₃`.
    pub triple_spread_sides: [String; 2],
    pub deviations: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProjectiveExampleReport {
    pub example: String,
    pub report: TripodReportJson,
    pub dual_report: TripodReportJson,
    /// Both sides of the projective cross law.
    pub cross_law_sides: [String; 2],
    pub deviations: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
#[allow(clippy::large_enum_variant)]
pub enum ExampleOutput {
    Methane(MethaneReport),
    Affine(AffineExampleReport),
    Projective(ProjectiveExampleReport),
}

impl ExampleOutput {
    pub fn deviations(&self) -> &[String] {
        match self {
            ExampleOutput::Methane(r) => &r.deviations,
            ExampleOutput::Affine(r) => &r.deviations,
            ExampleOutput::Projective(r) => &r.deviations,
        }
    }

    pub fn any_failed(&self) -> bool {
        use crate::affine::Check;
        let failed = |c: &crate::affine::LawChecks| c.values().any(|x| *x == Check::Fail);
        !self.deviations().is_empty()
            || match self {
                ExampleOutput::Methane(_) => false,
                ExampleOutput::Affine(r) => failed(&r.report.checks),
                ExampleOutput::Projective(r) => {
                    failed(&r.report.checks) || failed(&r.dual_report.checks)
                }
            }
    }
}

/// Runs an example. `q_edge` sets the methane edge quadrance (default 1)
/// and is rejected by the other examples.
pub fn run(name: ExampleName, q_edge: Option<&FieldElement>) -> Result<ExampleOutput, Error> {
    match (name, q_edge) {
        (ExampleName::Methane, q) => {
            methane(q.cloned().unwrap_or_else(|| Q.one())).map(ExampleOutput::Methane)
        }
        (_, Some(_)) => Err(Error::InvalidConfig(format!("example `{name}` takes no Q"))),
        (ExampleName::MinkowskiAffine, None) => Ok(ExampleOutput::Affine(minkowski_affine())),
        (ExampleName::MinkowskiProjective, None) => {
            Ok(ExampleOutput::Projective(minkowski_projective()))
        }
    }
}

struct Pins(Vec<String>);

impl Pins {
    fn check(&mut self, name: &str, got: &str, want: &str) {
        if got != want {
            self.0.push(format!("{name}: got {got}, expected {want}"));
        }
    }

    fn check_opt(&mut self, name: &str, got: &Option<String>, want: &str) {
        self.check(name, got.as_deref().unwrap_or("undefined"), want);
    }
}

fn v(c: [i64; 3]) -> Vec3 {
    Vec3::from_i64(Q, c)
}

pub fn methane(q_edge: FieldElement) -> Result<MethaneReport, Error> {
    if q_edge.spec() != Q {
        return Err(Error::FieldMismatch {
            left: Q,
            right: q_edge.spec(),
        });
    }
    if q_edge.is_zero() {
        return Err(Error::InvalidConfig("Q must be nonzero".into()));
    }
    let mut pins = Pins(Vec::new());
    let (one, three, four) = (Q.one(), Q.from_i64(3), Q.from_i64(4));

    // From Q alone: the cross law (Q+Q−Q)² = 4Q²(1−s) fixes s.
    let quadrea = archimedes(&q_edge, &q_edge, &q_edge);
    let closed = &three * q_edge.square();
    let s = &one - q_edge.square() / (&four * q_edge.square());
    let q = s.clone();
    // (a − 3q + 2)² = 4(1−q)³ has roots summing to 2(3q−2); one root is 0.
    let shift = &three * &q - Q.from_i64(2);
    let cube = (&one - &q).pow(3);
    if shift.square() != &four * &cube {
        pins.0
            .push("projective cross law: a = 0 is not a root".into());
    }
    let a = Q.from_i64(2) * shift;
    let big_s = &a / q.square();

    // The same quantities from rational coordinates.
    let id = BilinearForm::euclidean(Q);
    let [p0, p1, p2, p3] = TETRAHEDRON.map(v);
    let face = VectorTriangle::new(&p1 - &p0, &p2 - &p1, &p0 - &p2)?;
    let face_report = analyze_triangle(&id, &face)?;
    for (i, si) in face_report.spreads.iter().enumerate() {
        pins.check_opt(
            &format!("face spread s{}", i + 1),
            &si.as_ref().map(encode_scalar),
            &s.to_string(),
        );
    }
    let tripod = Tripod::from_vectors(&(&p1 - &p0), &(&p2 - &p0), &(&p3 - &p0))?;
    let tripod_report = analyze_tripod(&id, &tripod)?;
    for i in 0..3 {
        pins.check_opt(
            &format!("q{}", i + 1),
            &tripod_report.quadrances[i].as_ref().map(encode_scalar),
            &q.to_string(),
        );
        pins.check_opt(
            &format!("S{}", i + 1),
            &tripod_report.spreads[i].as_ref().map(encode_scalar),
            &big_s.to_string(),
        );
    }
    pins.check_opt(
        "a",
        &tripod_report.quadrea.as_ref().map(encode_scalar),
        &a.to_string(),
    );
    let central = spread(&id, &p0, &p1)?;

    let report = MethaneReport {
        example: ExampleName::Methane.to_string(),
        q_edge: q_edge.to_string(),
        quadrea: quadrea.to_string(),
        quadrea_closed_form: closed.to_string(),
        quadrea_at_q1: archimedes(&one, &one, &one).to_string(),
        s: s.to_string(),
        q: q.to_string(),
        a: a.to_string(),
        spread_faces: big_s.to_string(),
        central_spread: central.to_string(),
        deviations: Vec::new(),
    };
    pins.check("quadrea", &report.quadrea, &report.quadrea_closed_form);
    pins.check("quadrea_at_Q1", &report.quadrea_at_q1, "3");
    pins.check("s", &report.s, "3/4");
    pins.check("q", &report.q, "3/4");
    pins.check("a", &report.a, "1/2");
    pins.check("S", &report.spread_faces, "8/9");
    pins.check("central_spread", &report.central_spread, "8/9");
    Ok(MethaneReport {
        deviations: pins.0,
        ..report
    })
}

pub fn minkowski_affine() -> AffineExampleReport {
    let b = BilinearForm::minkowski(Q);
    let [v1, v2] = MINKOWSKI_TRIANGLE.map(v);
    let t = VectorTriangle::from_two(v1, v2).expect("pinned triangle");
    let r = analyze_triangle(&b, &t).expect("pinned triangle");
    let json = TriangleReportJson::new(&b, &t, &r);

    let mut pins = Pins(Vec::new());
    for (i, want) in ["6", "13", "1"].iter().enumerate() {
        pins.check(&format!("Q{}", i + 1), &json.quadrances[i], want);
    }
    for (i, want) in ["-3/13", "-1/2", "-1/26"].iter().enumerate() {
        pins.check_opt(&format!("s{}", i + 1), &json.spreads[i], want);
    }
    pins.check("quadrea", &json.quadrea, "-12");
    pins.check_opt("spread_ratio", &json.spread_ratio, "-1/26");

    let sides = match &r.spreads {
        [Some(s1), Some(s2), Some(s3)] => [
            (s1 + s2 + s3).square() - Q.from_i64(2) * (s1.square() + s2.square() + s3.square()),
            Q.from_i64(4) * s1 * s2 * s3,
        ]
        .map(|x| x.to_string()),
        _ => ["undefined".to_string(), "undefined".to_string()],
    };
    pins.check("triple spread lhs", &sides[0], "-3/169");
    pins.check("triple spread rhs", &sides[1], "-3/169");

    AffineExampleReport {
        example: ExampleName::MinkowskiAffine.to_string(),
        report: json,
        triple_spread_sides: sides,
        deviations: pins.0,
    }
}

pub fn minkowski_projective() -> ProjectiveExampleReport {
    let b = BilinearForm::minkowski(Q);
    let [v1, v2, v3] = MINKOWSKI_TRIPOD.map(v);
    let t = Tripod::from_vectors(&v1, &v2, &v3).expect("pinned tripod");
    let r = analyze_tripod(&b, &t).expect("pinned tripod");
    let dual_r = analyze_tripod(&b, &r.dual).expect("pinned tripod");
    let json = TripodReportJson::new(&b, &t, &r);
    let dual_json = TripodReportJson::new(&b, &r.dual, &dual_r);

    let mut pins = Pins(Vec::new());
    let q = ["239/203", "-2/7", "197/116"];
    let s = ["169/394", "-4901/47083", "1183/1912"];
    for i in 0..3 {
        pins.check_opt(&format!("q{}", i + 1), &json.quadrances[i], q[i]);
        pins.check_opt(&format!("S{}", i + 1), &json.spreads[i], s[i]);
        pins.check_opt(&format!("dual q{}", i + 1), &dual_json.quadrances[i], s[i]);
        pins.check_opt(&format!("dual S{}", i + 1), &dual_json.spreads[i], q[i]);
    }
    let duals = [
        ["1", "2/5", "3/4"],
        ["1", "-1/4", "3/4"],
        ["1", "2/5", "8/15"],
    ];
    for (i, want) in duals.iter().enumerate() {
        pins.check(
            &format!("dual point {}", i + 1),
            &json.dual[i].join(":"),
            &want.join(":"),
        );
    }
    pins.check_opt("spread_ratio", &json.spread_ratio, "34307/94166");
    pins.check_opt("quadrea", &json.quadrea, "-169/812");
    pins.check_opt("quadreal", &json.quadreal, "-28561/376664");
    pins.check_opt("dual quadrea", &dual_json.quadrea, "-28561/376664");
    pins.check_opt("dual quadreal", &dual_json.quadreal, "-169/812");

    let sides = match (&r.quadrances, &r.quadrea) {
        ([Some(q1), Some(q2), Some(q3)], Some(a)) => {
            let (l, rr) = cross_law_sides(a, [q1, q2, q3]);
            [l.to_string(), rr.to_string()]
        }
        _ => ["undefined".to_string(), "undefined".to_string()],
    };
    pins.check("projective cross law lhs", &sides[0], "26244/41209");
    pins.check("projective cross law rhs", &sides[1], "26244/41209");

    ProjectiveExampleReport {
        example: ExampleName::MinkowskiProjective.to_string(),
        report: json,
        dual_report: dual_json,
        cross_law_sides: sides,
        deviations: pins.0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_parse() {
        for n in ExampleName::ALL {
            assert_eq!(n.as_str().parse::<ExampleName>().unwrap(), n);
        }
        assert_eq!(
            "ethane".parse::<ExampleName>(),
            Err(Error::UnknownExample("ethane".into()))
        );
    }

    #[test]
    fn all_examples_match_their_pins() {
        for n in ExampleName::ALL {
            let out = run(n, None).unwrap();
            assert!(out.deviations().is_empty(), "{n}: {:?}", out.deviations());
            assert!(!out.any_failed());
        }
    }

    #[test]
    fn methane_scales_with_q() {
        for (q, want) in [("1", "3"), ("2", "12"), ("7/3", "49/3")] {
            let r = methane(Q.parse(q).unwrap()).unwrap();
            assert_eq!(r.quadrea, want);
            assert_eq!(r.quadrea_at_q1, "3");
            assert!(r.deviations.is_empty());
        }
        assert!(matches!(methane(Q.zero()), Err(Error::InvalidConfig(_))));
        assert!(matches!(
            run(ExampleName::MinkowskiAffine, Some(&Q.one())),
            Err(Error::InvalidConfig(_))
        ));
    }
}

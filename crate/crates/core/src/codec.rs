//! JSON encoding. Scalars are strings in the text grammar of their field,
//! vectors are arrays of three scalars, matrices arrays of three vectors.
//! Every report carries its field, form and inputs, so it parses back into
//! the domain values it was computed from.

use serde::{Deserialize, Serialize};

use crate::affine::{LawChecks, TriangleReport, VectorTriangle};
use crate::error::Error;
use crate::field::{FieldElement, FieldSpec};
use crate::linalg::{Mat3, Vec3};
use crate::metric::BilinearForm;
use crate::projective::{ProjectivePoint, Tripod, TripodReport};

pub type VecJson = [String; 3];
pub type MatJson = [VecJson; 3];

/// A form on input: a named shorthand or an explicit symmetric matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FormJson {
    Named(String),
    Matrix(MatJson),
}

pub fn encode_scalar(x: &FieldElement) -> String {
    x.to_string()
}

pub fn encode_opt(x: &Option<FieldElement>) -> Option<String> {
    x.as_ref().map(encode_scalar)
}

pub fn encode_vec(v: &Vec3) -> VecJson {
    v.components().each_ref().map(encode_scalar)
}

pub fn encode_mat(m: &Mat3) -> MatJson {
    m.rows().each_ref().map(encode_vec)
}

pub fn decode_opt(spec: FieldSpec, x: &Option<String>) -> Result<Option<FieldElement>, Error> {
    x.as_deref().map(|s| spec.parse(s)).transpose()
}

pub fn decode_vec(spec: FieldSpec, v: &VecJson) -> Result<Vec3, Error> {
    let [x, y, z] = v;
    Vec3::new(spec.parse(x)?, spec.parse(y)?, spec.parse(z)?)
}

pub fn decode_mat(spec: FieldSpec, m: &MatJson) -> Result<Mat3, Error> {
    let [a, b, c] = m;
    Mat3::from_rows(
        decode_vec(spec, a)?,
        decode_vec(spec, b)?,
        decode_vec(spec, c)?,
    )
}

fn decode_vecs(spec: FieldSpec, vs: &[VecJson; 3]) -> Result<[Vec3; 3], Error> {
    let [a, b, c] = vs;
    Ok([
        decode_vec(spec, a)?,
        decode_vec(spec, b)?,
        decode_vec(spec, c)?,
    ])
}

pub fn decode_form(spec: FieldSpec, f: &FormJson) -> Result<BilinearForm, Error> {
    match f {
        FormJson::Named(name) => BilinearForm::named(name, spec)
            .ok_or_else(|| Error::InvalidConfig(format!("unknown form `{name}`"))),
        FormJson::Matrix(m) => BilinearForm::new(decode_mat(spec, m)?),
    }
}

fn from_json<T: serde::de::DeserializeOwned>(what: &str, text: &str) -> Result<T, Error> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("{what}: {e}")))
}

/// A vector given as JSON text, e.g. `["-1","3","-2"]`.
pub fn parse_vec(spec: FieldSpec, text: &str) -> Result<Vec3, Error> {
    decode_vec(spec, &from_json("vector", text)?)
}

/// Three vectors given as JSON text.
pub fn parse_vecs(spec: FieldSpec, text: &str) -> Result<[Vec3; 3], Error> {
    decode_vecs(spec, &from_json("points", text)?)
}

/// A bare form name, or JSON text for a name or a matrix.
pub fn parse_form(spec: FieldSpec, text: &str) -> Result<BilinearForm, Error> {
    let t = text.trim();
    if let Some(b) = BilinearForm::named(t, spec) {
        return Ok(b);
    }
    decode_form(spec, &from_json("form", t)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TriangleReportJson {
    pub field: String,
    pub form: MatJson,
    pub vectors: [VecJson; 3],
    pub quadrances: [String; 3],
    pub spreads: [Option<String>; 3],
    pub quadrea: String,
    pub spread_ratio: Option<String>,
    pub checks: LawChecks,
}

impl TriangleReportJson {
    pub fn new(b: &BilinearForm, t: &VectorTriangle, r: &TriangleReport) -> Self {
        TriangleReportJson {
            field: b.spec().to_string(),
            form: encode_mat(b.matrix()),
            vectors: t.vectors().each_ref().map(encode_vec),
            quadrances: r.quadrances.each_ref().map(encode_scalar),
            spreads: r.spreads.each_ref().map(encode_opt),
            quadrea: encode_scalar(&r.quadrea),
            spread_ratio: encode_opt(&r.spread_ratio()),
            checks: r.checks.clone(),
        }
    }

    pub fn decode(&self) -> Result<(BilinearForm, VectorTriangle, TriangleReport), Error> {
        let spec: FieldSpec = self.field.parse()?;
        let b = BilinearForm::new(decode_mat(spec, &self.form)?)?;
        let [v1, v2, v3] = decode_vecs(spec, &self.vectors)?;
        let t = VectorTriangle::new(v1, v2, v3)?;
        let [q1, q2, q3] = &self.quadrances;
        let [s1, s2, s3] = &self.spreads;
        let r = TriangleReport {
            quadrances: [spec.parse(q1)?, spec.parse(q2)?, spec.parse(q3)?],
            spreads: [
                decode_opt(spec, s1)?,
                decode_opt(spec, s2)?,
                decode_opt(spec, s3)?,
            ],
            quadrea: spec.parse(&self.quadrea)?,
            checks: self.checks.clone(),
        };
        Ok((b, t, r))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TripodReportJson {
    pub field: String,
    pub form: MatJson,
    /// Canonical representatives.
    pub points: [VecJson; 3],
    pub quadrances: [Option<String>; 3],
    pub spreads: [Option<String>; 3],
    pub quadrea: Option<String>,
    pub quadreal: Option<String>,
    pub spread_ratio: Option<String>,
    pub dual: [VecJson; 3],
    pub checks: LawChecks,
}

fn encode_points(t: &Tripod) -> [VecJson; 3] {
    t.points().each_ref().map(|p| encode_vec(p.rep()))
}

fn decode_tripod(spec: FieldSpec, ps: &[VecJson; 3]) -> Result<Tripod, Error> {
    let [a, b, c] = decode_vecs(spec, ps)?;
    Tripod::new(
        ProjectivePoint::new(&a)?,
        ProjectivePoint::new(&b)?,
        ProjectivePoint::new(&c)?,
    )
}

impl TripodReportJson {
    pub fn new(b: &BilinearForm, t: &Tripod, r: &TripodReport) -> Self {
        TripodReportJson {
            field: b.spec().to_string(),
            form: encode_mat(b.matrix()),
            points: encode_points(t),
            quadrances: r.quadrances.each_ref().map(encode_opt),
            spreads: r.spreads.each_ref().map(encode_opt),
            quadrea: encode_opt(&r.quadrea),
            quadreal: encode_opt(&r.quadreal),
            spread_ratio: encode_opt(&r.spread_ratio()),
            dual: encode_points(&r.dual),
            checks: r.checks.clone(),
        }
    }

    pub fn decode(&self) -> Result<(BilinearForm, Tripod, TripodReport), Error> {
        let spec: FieldSpec = self.field.parse()?;
        let b = BilinearForm::new(decode_mat(spec, &self.form)?)?;
        let t = decode_tripod(spec, &self.points)?;
        let opts = |xs: &[Option<String>; 3]| -> Result<[Option<FieldElement>; 3], Error> {
            let [a, b, c] = xs;
            Ok([
                decode_opt(spec, a)?,
                decode_opt(spec, b)?,
                decode_opt(spec, c)?,
            ])
        };
        let r = TripodReport {
            quadrances: opts(&self.quadrances)?,
            spreads: opts(&self.spreads)?,
            quadrea: decode_opt(spec, &self.quadrea)?,
            quadreal: decode_opt(spec, &self.quadreal)?,
            dual: decode_tripod(spec, &self.dual)?,
            checks: self.checks.clone(),
        };
        Ok((b, t, r))
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize infallibly");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::analyze_triangle;
    use crate::projective::analyze_tripod;

    const Q: FieldSpec = FieldSpec::rational();

    #[test]
    fn vector_and_form_parsing() {
        let v = parse_vec(Q, r#"["-1","3/2","0"]"#).unwrap();
        assert_eq!(encode_vec(&v), ["-1", "3/2", "0"].map(String::from));
        assert!(matches!(parse_vec(Q, "[1,2,3]"), Err(Error::Parse(_))));
        assert!(matches!(parse_vec(Q, r#"["1","2"]"#), Err(Error::Parse(_))));
        assert_eq!(
            parse_vec(Q, r#"["1","2","3/0"]"#),
            Err(Error::DenominatorZero)
        );

        assert_eq!(
            parse_form(Q, "minkowski").unwrap(),
            BilinearForm::minkowski(Q)
        );
        assert_eq!(
            parse_form(Q, r#""euclidean""#).unwrap(),
            BilinearForm::euclidean(Q)
        );
        let m = parse_form(Q, r#"[["2","1","0"],["1","2","0"],["0","0","1"]]"#).unwrap();
        assert_eq!(m.det(), &Q.from_i64(3));
        assert!(matches!(parse_form(Q, "lorentz"), Err(Error::Parse(_))));
        assert!(matches!(
            parse_form(Q, r#""lorentz""#),
            Err(Error::InvalidConfig(_))
        ));
        assert_eq!(
            parse_form(Q, r#"[["1","1","0"],["0","1","0"],["0","0","1"]]"#),
            Err(Error::NotSymmetric)
        );
    }

    #[test]
    fn triangle_report_round_trips() {
        let b = BilinearForm::minkowski(Q);
        let t = VectorTriangle::from_two(
            Vec3::from_i64(Q, [-1, 3, -2]),
            Vec3::from_i64(Q, [2, -5, 4]),
        )
        .unwrap();
        let r = analyze_triangle(&b, &t).unwrap();
        let j = TriangleReportJson::new(&b, &t, &r);
        assert_eq!(j.quadrea, "-12");
        let back: TriangleReportJson = serde_json::from_str(&to_json(&j)).unwrap();
        assert_eq!(back, j);
        assert_eq!(back.decode().unwrap(), (b, t, r));
    }

    #[test]
    fn tripod_report_round_trips() {
        let spec = FieldSpec::prime(13).unwrap();
        let b = BilinearForm::minkowski(spec);
        let t = Tripod::from_vectors(
            &Vec3::from_i64(spec, [1, 2, 3]),
            &Vec3::from_i64(spec, [0, 1, 5]),
            &Vec3::from_i64(spec, [4, 0, 1]),
        )
        .unwrap();
        let r = analyze_tripod(&b, &t).unwrap();
        let j = TripodReportJson::new(&b, &t, &r);
        assert_eq!(j.field, "prime:13");
        let back: TripodReportJson = serde_json::from_str(&to_json(&j)).unwrap();
        assert_eq!(back.decode().unwrap(), (b, t, r));
    }
}

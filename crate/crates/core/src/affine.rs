//! Rational trigonometry of vector triangles: three vectors summing to zero,
//! with quadrances `Qᵢ = Q(vᵢ)`, spreads `s₁ = s(v₂,v₃)`, `s₂ = s(v₁,v₃)`,
//! `s₃ = s(v₁,v₂)` and quadrea `A(Q₁,Q₂,Q₃)`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Arg, Error};
use crate::field::FieldElement;
use crate::linalg::Vec3;
use crate::metric::BilinearForm;

/// Outcome of one law check in a report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Check {
    Pass,
    Fail,
    /// A precondition of the law (defined spread, degeneracy, ...) does not hold.
    Skipped,
}

impl Check {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Check::Pass
        } else {
            Check::Fail
        }
    }

    /// Fold a list of applicable sub-checks; no applicable sub-check means skipped.
    pub fn all(results: impl IntoIterator<Item = bool>) -> Self {
        let mut seen = false;
        for ok in results {
            if !ok {
                return Check::Fail;
            }
            seen = true;
        }
        if seen {
            Check::Pass
        } else {
            Check::Skipped
        }
    }
}

pub type LawChecks = BTreeMap<String, Check>;

/// Archimedes' function `(a+b+c)² − 2(a²+b²+c²)`.
pub fn archimedes(a: &FieldElement, b: &FieldElement, c: &FieldElement) -> FieldElement {
    let two = a.spec().from_i64(2);
    (a + b + c).square() - two * (a.square() + b.square() + c.square())
}

/// `1 − (v·w)² / (Q(v)Q(w))`; undefined when either vector is null.
pub fn spread(b: &BilinearForm, v: &Vec3, w: &Vec3) -> Result<FieldElement, Error> {
    b.check(&[v, w])?;
    spread_unchecked(b, v, w)
}

pub(crate) fn spread_unchecked(
    b: &BilinearForm,
    v: &Vec3,
    w: &Vec3,
) -> Result<FieldElement, Error> {
    let qv = b.quadrance(v);
    if qv.is_zero() {
        return Err(Error::NullVector(Arg::First));
    }
    let qw = b.quadrance(w);
    if qw.is_zero() {
        return Err(Error::NullVector(Arg::Second));
    }
    Ok(b.det().spec().one() - b.dot(v, w).square() / (qv * qw))
}

/// `Q(v×w) / ((det B) Q(v) Q(w))`, the spread via Lagrange's identity.
pub fn spread_via_cross(b: &BilinearForm, v: &Vec3, w: &Vec3) -> Result<FieldElement, Error> {
    b.check(&[v, w])?;
    let denom = b.det() * b.quadrance(v) * b.quadrance(w);
    if denom.is_zero() {
        let which = if b.quadrance(v).is_zero() {
            Arg::First
        } else {
            Arg::Second
        };
        return Err(Error::NullVector(which));
    }
    Ok(b.quadrance(&b.cross(v, w)) / denom)
}

/// Three vectors in one field whose sum is zero. Stored in the order given.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorTriangle {
    v: [Vec3; 3],
}

impl VectorTriangle {
    pub fn new(v1: Vec3, v2: Vec3, v3: Vec3) -> Result<Self, Error> {
        v1.same_field(&v2)?;
        v1.same_field(&v3)?;
        if !(&(&v1 + &v2) + &v3).is_zero() {
            return Err(Error::NotATriangle);
        }
        Ok(VectorTriangle { v: [v1, v2, v3] })
    }

    /// The triangle `v₁, v₂, −v₁−v₂`.
    pub fn from_two(v1: Vec3, v2: Vec3) -> Result<Self, Error> {
        v1.same_field(&v2)?;
        let v3 = -(&v1 + &v2);
        Ok(VectorTriangle { v: [v1, v2, v3] })
    }

    pub fn vectors(&self) -> &[Vec3; 3] {
        &self.v
    }

    /// Collinear: every pair of sides is linearly dependent.
    pub fn is_degenerate(&self) -> bool {
        let [a, b, c] = &self.v;
        a.is_parallel(b) && b.is_parallel(c) && a.is_parallel(c)
    }
}

pub fn quadrances(b: &BilinearForm, t: &VectorTriangle) -> [FieldElement; 3] {
    t.v.each_ref().map(|v| b.quadrance(v))
}

/// `A(Q₁,Q₂,Q₃)`.
pub fn quadrea(b: &BilinearForm, t: &VectorTriangle) -> Result<FieldElement, Error> {
    b.check(&[&t.v[0]])?;
    let [q1, q2, q3] = quadrances(b, t);
    Ok(archimedes(&q1, &q2, &q3))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleReport {
    pub quadrances: [FieldElement; 3],
    /// `None` where a flanking vector is null.
    pub spreads: [Option<FieldElement>; 3],
    pub quadrea: FieldElement,
    pub checks: LawChecks,
}

impl TriangleReport {
    pub fn any_failed(&self) -> bool {
        self.checks.values().any(|c| *c == Check::Fail)
    }

    /// The common value of `sᵢ/Qᵢ` when all quadrances are nonzero.
    pub fn spread_ratio(&self) -> Option<FieldElement> {
        let [q1, q2, q3] = &self.quadrances;
        let prod = q1 * q2 * q3;
        if prod.is_zero() {
            return None;
        }
        Some(&self.quadrea / (prod.spec().from_i64(4) * prod))
    }
}

/// Triangle spreads, indexed by the opposite vertex.
pub fn spreads(b: &BilinearForm, t: &VectorTriangle) -> [Option<FieldElement>; 3] {
    let [v1, v2, v3] = &t.v;
    [
        spread_unchecked(b, v2, v3).ok(),
        spread_unchecked(b, v1, v3).ok(),
        spread_unchecked(b, v1, v2).ok(),
    ]
}

/// Quadrances, spreads, quadrea and the affine law checks for `t`.
pub fn analyze_triangle(b: &BilinearForm, t: &VectorTriangle) -> Result<TriangleReport, Error> {
    b.check(&[&t.v[0]])?;
    let spec = b.spec();
    let (one, two, four) = (spec.one(), spec.from_i64(2), spec.from_i64(4));
    let qs = quadrances(b, t);
    let ss = spreads(b, t);
    let area = archimedes(&qs[0], &qs[1], &qs[2]);
    let [v1, v2, v3] = &t.v;

    // Index triples (i, j, k): sᵢ sits opposite vᵢ, between vⱼ and vₖ.
    const ROT: [(usize, usize, usize); 3] = [(0, 1, 2), (1, 0, 2), (2, 0, 1)];

    let mut checks = LawChecks::new();

    let target = b.det() * &area / &four;
    let crosses = [b.cross(v1, v2), b.cross(v2, v3), b.cross(v3, v1)];
    checks.insert(
        "quadrea_theorem".into(),
        Check::from_bool(crosses.iter().all(|c| b.quadrance(c) == target)),
    );

    checks.insert(
        "cross_law".into(),
        Check::all(ROT.iter().filter_map(|&(i, j, k)| {
            let s = ss[i].as_ref()?;
            let lhs = (&qs[j] + &qs[k] - &qs[i]).square();
            Some(lhs == &four * &qs[j] * &qs[k] * (&one - s))
        })),
    );

    checks.insert(
        "quadrea_spread".into(),
        Check::all(ROT.iter().filter_map(|&(i, j, k)| {
            let s = ss[i].as_ref()?;
            Some(area == &four * &qs[j] * &qs[k] * s)
        })),
    );

    let all_spreads: Option<[&FieldElement; 3]> = match &ss {
        [Some(a), Some(b), Some(c)] => Some([a, b, c]),
        _ => None,
    };

    checks.insert(
        "spread_law".into(),
        match all_spreads {
            Some(s) => {
                let ratio = &area / (&four * &qs[0] * &qs[1] * &qs[2]);
                Check::from_bool((0..3).all(|i| s[i] / &qs[i] == ratio))
            }
            None => Check::Skipped,
        },
    );

    checks.insert(
        "triple_spread".into(),
        match all_spreads {
            Some([s1, s2, s3]) => {
                let lhs = (s1 + s2 + s3).square();
                let rhs = &two * (s1.square() + s2.square() + s3.square()) + &four * s1 * s2 * s3;
                Check::from_bool(lhs == rhs)
            }
            None => Check::Skipped,
        },
    );

    checks.insert(
        "triple_quad".into(),
        if t.is_degenerate() {
            let [q1, q2, q3] = &qs;
            Check::from_bool(
                (q1 + q2 + q3).square() == &two * (q1.square() + q2.square() + q3.square()),
            )
        } else {
            Check::Skipped
        },
    );

    checks.insert(
        "pythagoras".into(),
        Check::all(ROT.iter().filter_map(|&(k, i, j)| {
            if qs[i].is_zero() || qs[j].is_zero() {
                return None;
            }
            let right = ss[k].as_ref().is_some_and(FieldElement::is_one);
            Some(right == (&qs[i] + &qs[j] == qs[k]))
        })),
    );

    Ok(TriangleReport {
        quadrances: qs,
        spreads: ss,
        quadrea: area,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    const Q: FieldSpec = FieldSpec::rational();

    fn v(c: [i64; 3]) -> Vec3 {
        Vec3::from_i64(Q, c)
    }

    fn q(s: &str) -> FieldElement {
        Q.parse(s).unwrap()
    }

    #[test]
    fn archimedes_values() {
        assert_eq!(archimedes(&q("1"), &q("1"), &q("1")), q("3"));
        assert_eq!(archimedes(&q("6"), &q("13"), &q("1")), q("-12"));
        assert_eq!(archimedes(&q("1"), &q("1"), &q("4")), q("0"));
    }

    #[test]
    fn spread_values() {
        let id = BilinearForm::euclidean(Q);
        let mk = BilinearForm::minkowski(Q);
        // Edges from one vertex of the tetrahedron (1,1,1),(1,-1,-1),(-1,1,-1),(-1,-1,1).
        assert_eq!(
            spread(&id, &v([0, -2, -2]), &v([-2, 0, -2])).unwrap(),
            q("3/4")
        );
        assert_eq!(spread(&id, &v([1, 0, 0]), &v([0, 1, 0])).unwrap(), q("1"));
        assert_eq!(
            spread(&mk, &v([-1, 3, -2]), &v([-1, 2, -2])).unwrap(),
            q("-1/2")
        );
        assert_eq!(
            spread_via_cross(&mk, &v([-1, 3, -2]), &v([-1, 2, -2])).unwrap(),
            q("-1/2")
        );
    }

    #[test]
    fn spread_of_null_vector_is_undefined() {
        let mk = BilinearForm::minkowski(Q);
        assert_eq!(
            spread(&mk, &v([1, 0, 1]), &v([1, 2, 0])),
            Err(Error::NullVector(Arg::First))
        );
        assert_eq!(
            spread(&mk, &v([1, 2, 0]), &v([0, 0, 0])),
            Err(Error::NullVector(Arg::Second))
        );
    }

    #[test]
    fn triangle_requires_zero_sum() {
        assert_eq!(
            VectorTriangle::new(v([1, 0, 0]), v([0, 1, 0]), v([0, 0, 1])),
            Err(Error::NotATriangle)
        );
        assert!(VectorTriangle::new(v([1, 0, 0]), v([0, 1, 0]), v([-1, -1, 0])).is_ok());
    }

    #[test]
    fn minkowski_triangle() {
        let mk = BilinearForm::minkowski(Q);
        let t = VectorTriangle::from_two(v([-1, 3, -2]), v([2, -5, 4])).unwrap();
        assert_eq!(t.vectors()[2], v([-1, 2, -2]));
        let r = analyze_triangle(&mk, &t).unwrap();
        assert_eq!(r.quadrances, [q("6"), q("13"), q("1")]);
        assert_eq!(r.quadrea, q("-12"));
        assert_eq!(
            r.spreads,
            [Some(q("-3/13")), Some(q("-1/2")), Some(q("-1/26"))]
        );
        assert_eq!(r.spread_ratio(), Some(q("-1/26")));
        assert!(!r.any_failed());
        assert_eq!(r.checks["triple_quad"], Check::Skipped);
        assert_eq!(r.checks["spread_law"], Check::Pass);
        assert_eq!(r.checks["triple_spread"], Check::Pass);
    }

    #[test]
    fn right_triangle() {
        let id = BilinearForm::euclidean(Q);
        let t = VectorTriangle::from_two(v([1, 0, 0]), v([0, 1, 0])).unwrap();
        let r = analyze_triangle(&id, &t).unwrap();
        assert_eq!(r.quadrances, [q("1"), q("1"), q("2")]);
        assert_eq!(r.spreads[2], Some(q("1")));
        assert_eq!(r.checks["pythagoras"], Check::Pass);
        assert!(!r.any_failed());
    }

    #[test]
    fn degenerate_triangle() {
        let id = BilinearForm::euclidean(Q);
        let t = VectorTriangle::from_two(v([1, 0, 0]), v([1, 0, 0])).unwrap();
        assert!(t.is_degenerate());
        let r = analyze_triangle(&id, &t).unwrap();
        assert_eq!(r.quadrances, [q("1"), q("1"), q("4")]);
        assert_eq!(r.quadrea, q("0"));
        assert_eq!(r.spreads, [Some(q("0")), Some(q("0")), Some(q("0"))]);
        assert_eq!(r.checks["triple_quad"], Check::Pass);
        assert!(!r.any_failed());
    }

    #[test]
    fn null_sides_skip_spread_laws() {
        let mk = BilinearForm::minkowski(Q);
        let t = VectorTriangle::from_two(v([1, 0, 1]), v([0, 1, 0])).unwrap();
        let r = analyze_triangle(&mk, &t).unwrap();
        assert_eq!(r.quadrances[0], q("0"));
        assert_eq!(r.spreads[1], None);
        assert_eq!(r.spreads[2], None);
        assert!(r.spreads[0].is_some());
        assert_eq!(r.checks["spread_law"], Check::Skipped);
        assert_eq!(r.checks["triple_spread"], Check::Skipped);
        assert_eq!(r.checks["cross_law"], Check::Pass);
        assert!(!r.any_failed());
    }

    #[test]
    fn equilateral_quadrea() {
        let id = BilinearForm::euclidean(Q);
        // Face of the tetrahedron with vertices (1,1,1),(1,-1,-1),(-1,1,-1): Q = 8.
        let t = VectorTriangle::new(v([0, -2, -2]), v([-2, 2, 0]), v([2, 0, 2])).unwrap();
        let r = analyze_triangle(&id, &t).unwrap();
        assert_eq!(r.quadrea, q("192"));
        assert!(r.spreads.iter().all(|s| s.as_ref() == Some(&q("3/4"))));
    }
}

//! Projective rational trigonometry: projective points, tripods and their
//! B-duals, projective quadrances `qᵢ` and spreads `Sᵢ`, the projective
//! quadrea `a_B` and quadreal `l_B`.
//!
//! Indexing: `q₁ = q(p₂,p₃)`, `q₂ = q(p₁,p₃)`, `q₃ = q(p₁,p₂)`, and the dual
//! tripod is `r₁ = p₂×p₃`, `r₂ = p₁×p₃`, `r₃ = p₁×p₂`. Projective spreads are
//! the projective quadrances of the dual.

use std::fmt;

use crate::affine::{spread_unchecked, Check, LawChecks};
use crate::error::Error;
use crate::field::FieldElement;
use crate::linalg::{det3, Vec3};
use crate::metric::BilinearForm;

/// A one-dimensional subspace, stored by the representative whose first
/// nonzero coordinate is 1. Equality of points is structural equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ProjectivePoint(Vec3);

impl ProjectivePoint {
    pub fn new(v: &Vec3) -> Result<Self, Error> {
        let lead = v.leading().ok_or(Error::ZeroVector)?;
        Ok(ProjectivePoint(v.scale(&lead.inv()?)))
    }

    pub fn rep(&self) -> &Vec3 {
        &self.0
    }
}

impl fmt::Debug for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.0.components();
        write!(f, "[{a}:{b}:{c}]")
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

pub fn pp_new(v: &Vec3) -> Result<ProjectivePoint, Error> {
    ProjectivePoint::new(v)
}

/// The B-normal `[v₁ ×_B v₂]` of two distinct points.
pub fn b_normal(
    b: &BilinearForm,
    p1: &ProjectivePoint,
    p2: &ProjectivePoint,
) -> Result<ProjectivePoint, Error> {
    b.check(&[&p1.0, &p2.0])?;
    if p1 == p2 {
        return Err(Error::IdenticalPoints);
    }
    ProjectivePoint::new(&b.cross(&p1.0, &p2.0))
}

/// `q(p₁,p₂) = s(v₁,v₂)`.
pub fn proj_quadrance(
    b: &BilinearForm,
    p1: &ProjectivePoint,
    p2: &ProjectivePoint,
) -> Result<FieldElement, Error> {
    b.check(&[&p1.0, &p2.0])?;
    spread_unchecked(b, &p1.0, &p2.0).map_err(|e| match e {
        Error::NullVector(a) => Error::NullPoint(a),
        e => e,
    })
}

/// Three pairwise distinct projective points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tripod {
    p: [ProjectivePoint; 3],
}

impl Tripod {
    pub fn new(
        p1: ProjectivePoint,
        p2: ProjectivePoint,
        p3: ProjectivePoint,
    ) -> Result<Self, Error> {
        p1.0.same_field(&p2.0)?;
        p1.0.same_field(&p3.0)?;
        if p1 == p2 || p1 == p3 || p2 == p3 {
            return Err(Error::IdenticalPoints);
        }
        Ok(Tripod { p: [p1, p2, p3] })
    }

    pub fn from_vectors(v1: &Vec3, v2: &Vec3, v3: &Vec3) -> Result<Self, Error> {
        Tripod::new(
            ProjectivePoint::new(v1)?,
            ProjectivePoint::new(v2)?,
            ProjectivePoint::new(v3)?,
        )
    }

    pub fn points(&self) -> &[ProjectivePoint; 3] {
        &self.p
    }

    /// The representatives are linearly dependent.
    pub fn is_degenerate(&self) -> bool {
        det3(&self.p[0].0, &self.p[1].0, &self.p[2].0).is_zero()
    }
}

/// The B-dual `(p₂×p₃, p₁×p₃, p₁×p₂)` of a non-degenerate tripod.
pub fn dual_tripod(b: &BilinearForm, t: &Tripod) -> Result<Tripod, Error> {
    b.check(&[&t.p[0].0])?;
    if t.is_degenerate() {
        return Err(Error::DegenerateTripod);
    }
    let [p1, p2, p3] = &t.p;
    Tripod::new(
        b_normal(b, p2, p3)?,
        b_normal(b, p1, p3)?,
        b_normal(b, p1, p2)?,
    )
}

/// `[q(p₂,p₃), q(p₁,p₃), q(p₁,p₂)]`, `None` where a point is null.
pub fn quadrances(b: &BilinearForm, t: &Tripod) -> [Option<FieldElement>; 3] {
    let [p1, p2, p3] = &t.p;
    [
        spread_unchecked(b, &p2.0, &p3.0).ok(),
        spread_unchecked(b, &p1.0, &p3.0).ok(),
        spread_unchecked(b, &p1.0, &p2.0).ok(),
    ]
}

fn first_product(
    terms: [(
        &Option<FieldElement>,
        &Option<FieldElement>,
        &Option<FieldElement>,
    ); 3],
) -> Option<FieldElement> {
    terms
        .into_iter()
        .find_map(|(a, b, c)| Some(a.as_ref()? * b.as_ref()? * c.as_ref()?))
}

/// `a_B = S₁q₂q₃` (or whichever symmetric form has all factors defined).
pub fn projective_quadrea(
    q: &[Option<FieldElement>; 3],
    s: &[Option<FieldElement>; 3],
) -> Option<FieldElement> {
    first_product([
        (&s[0], &q[1], &q[2]),
        (&s[1], &q[0], &q[2]),
        (&s[2], &q[0], &q[1]),
    ])
}

/// `l_B = q₁S₂S₃` (or whichever symmetric form has all factors defined).
pub fn quadreal(
    q: &[Option<FieldElement>; 3],
    s: &[Option<FieldElement>; 3],
) -> Option<FieldElement> {
    first_product([
        (&q[0], &s[1], &s[2]),
        (&q[1], &s[0], &s[2]),
        (&q[2], &s[0], &s[1]),
    ])
}

/// Both sides of `(a − q₁ − q₂ − q₃ + 2)² = 4(1−q₁)(1−q₂)(1−q₃)`.
pub fn cross_law_sides(a: &FieldElement, q: [&FieldElement; 3]) -> (FieldElement, FieldElement) {
    let spec = a.spec();
    let one = spec.one();
    let lhs = (a - q[0] - q[1] - q[2] + spec.from_i64(2)).square();
    let rhs = spec.from_i64(4) * (&one - q[0]) * (&one - q[1]) * (&one - q[2]);
    (lhs, rhs)
}

/// Both sides of the asymmetric cross law for vertex `i`:
/// `(Sᵢqⱼqₖ + qᵢ − qⱼ − qₖ)² = 4qⱼqₖ(1−qᵢ)(1−Sᵢ)`.
pub fn asymmetric_cross_law_sides(
    qi: &FieldElement,
    qj: &FieldElement,
    qk: &FieldElement,
    si: &FieldElement,
) -> (FieldElement, FieldElement) {
    let spec = qi.spec();
    let one = spec.one();
    let lhs = (si * qj * qk + qi - qj - qk).square();
    let rhs = spec.from_i64(4) * qj * qk * (&one - qi) * (&one - si);
    (lhs, rhs)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripodReport {
    pub quadrances: [Option<FieldElement>; 3],
    pub spreads: [Option<FieldElement>; 3],
    pub quadrea: Option<FieldElement>,
    pub quadreal: Option<FieldElement>,
    pub dual: Tripod,
    pub checks: LawChecks,
}

impl TripodReport {
    pub fn any_failed(&self) -> bool {
        self.checks.values().any(|c| *c == Check::Fail)
    }

    /// The common value of `Sᵢ/qᵢ`, when every term is defined and nonzero.
    pub fn spread_ratio(&self) -> Option<FieldElement> {
        let q = self.quadrances[0].as_ref()?;
        let s = self.spreads[0].as_ref()?;
        (!q.is_zero()).then(|| s / q)
    }
}

struct Measures {
    q: [Option<FieldElement>; 3],
    s: [Option<FieldElement>; 3],
    a: Option<FieldElement>,
    l: Option<FieldElement>,
    dual: Tripod,
}

fn measure(b: &BilinearForm, t: &Tripod) -> Result<Measures, Error> {
    let dual = dual_tripod(b, t)?;
    let q = quadrances(b, t);
    let s = quadrances(b, &dual);
    let a = projective_quadrea(&q, &s);
    let l = quadreal(&q, &s);
    Ok(Measures { q, s, a, l, dual })
}

/// Projective quadrances, spreads, quadrea, quadreal, the dual tripod and
/// the projective law checks. Null points leave the affected values absent
/// and their checks skipped; a degenerate tripod is an error.
pub fn analyze_tripod(b: &BilinearForm, t: &Tripod) -> Result<TripodReport, Error> {
    b.check(&[&t.p[0].0])?;
    let m = measure(b, t)?;
    let spec = b.spec();
    let one = spec.one();
    let mut checks = LawChecks::new();

    let all = |xs: &[Option<FieldElement>; 3]| match xs {
        [Some(a), Some(b), Some(c)] => Some([a.clone(), b.clone(), c.clone()]),
        _ => None,
    };
    let q = all(&m.q);
    let s = all(&m.s);

    checks.insert(
        "projective_spread_law".into(),
        match (&q, &s) {
            (Some(q), Some(s)) if q.iter().all(|x| !x.is_zero()) => {
                let r = &s[0] / &q[0];
                Check::from_bool(&s[1] / &q[1] == r && &s[2] / &q[2] == r)
            }
            (Some(q), Some(s)) => {
                let a = &s[0] * &q[1] * &q[2];
                Check::from_bool(a == &s[1] * &q[0] * &q[2] && a == &s[2] * &q[0] * &q[1])
            }
            _ => Check::Skipped,
        },
    );

    checks.insert(
        "projective_cross_law".into(),
        match (&q, &m.a) {
            (Some(q), Some(a)) => {
                let (lhs, rhs) = cross_law_sides(a, [&q[0], &q[1], &q[2]]);
                Check::from_bool(lhs == rhs)
            }
            _ => Check::Skipped,
        },
    );

    for (n, (i, j, k)) in [(0usize, 1usize, 2usize), (1, 0, 2), (2, 0, 1)]
        .into_iter()
        .enumerate()
    {
        checks.insert(
            format!("projective_cross_law_asymmetric_{}", n + 1),
            match (&q, &s) {
                (Some(q), Some(s)) => {
                    let (lhs, rhs) = asymmetric_cross_law_sides(&q[i], &q[j], &q[k], &s[i]);
                    Check::from_bool(lhs == rhs)
                }
                _ => Check::Skipped,
            },
        );
    }

    checks.insert(
        "quadrea_quadreal_product".into(),
        match (&q, &s, &m.a, &m.l) {
            (Some(q), Some(s), Some(a), Some(l)) => {
                let prod = q.iter().chain(s.iter()).fold(one.clone(), |acc, x| acc * x);
                Check::from_bool(a * l == prod)
            }
            _ => Check::Skipped,
        },
    );

    checks.insert(
        "projective_pythagoras".into(),
        match (&q, &s) {
            (Some(q), Some(s)) => Check::all(
                [(0usize, 1usize, 2usize), (1, 0, 2), (2, 0, 1)]
                    .into_iter()
                    .filter(|&(i, _, _)| s[i].is_one())
                    .map(|(i, j, k)| &one - &q[i] == (&one - &q[j]) * (&one - &q[k])),
            ),
            _ => Check::Skipped,
        },
    );

    let back = dual_tripod(b, &m.dual)?;
    checks.insert("duality_involution".into(), Check::from_bool(back == *t));

    let dm = measure(b, &m.dual)?;
    checks.insert(
        "duality_exchange".into(),
        Check::from_bool(dm.q == m.s && dm.s == m.q && dm.a == m.l && dm.l == m.a),
    );

    Ok(TripodReport {
        quadrances: m.q,
        spreads: m.s,
        quadrea: m.a,
        quadreal: m.l,
        dual: m.dual,
        checks,
    })
}

/// For a degenerate tripod with all quadrances defined, whether
/// `(q₁+q₂+q₃)² = 2(q₁²+q₂²+q₃²) + 4q₁q₂q₃`. Skipped otherwise.
pub fn projective_triple_quad(b: &BilinearForm, t: &Tripod) -> Result<Check, Error> {
    b.check(&[&t.p[0].0])?;
    if !t.is_degenerate() {
        return Ok(Check::Skipped);
    }
    Ok(match quadrances(b, t) {
        [Some(q1), Some(q2), Some(q3)] => {
            let spec = b.spec();
            let lhs = (&q1 + &q2 + &q3).square();
            let rhs = spec.from_i64(2) * (q1.square() + q2.square() + q3.square())
                + spec.from_i64(4) * &q1 * &q2 * &q3;
            Check::from_bool(lhs == rhs)
        }
        _ => Check::Skipped,
    })
}

/// Values of `S₁` satisfying the asymmetric cross law when
/// `q₁ = q₂ + q₃ − q₂q₃`: `1` and `4(q₂+q₃−1)/(q₂q₃) − 3`, deduplicated.
pub fn pythagoras_spread_solutions(
    q2: &FieldElement,
    q3: &FieldElement,
    q1: &FieldElement,
) -> Result<Vec<FieldElement>, Error> {
    q2.same_field(q3)?;
    q2.same_field(q1)?;
    let prod = q2 * q3;
    if prod.is_zero() {
        return Err(Error::PreconditionViolated("q2*q3 must be nonzero".into()));
    }
    if *q1 != q2 + q3 - &prod {
        return Err(Error::PreconditionViolated(
            "q1 must equal q2 + q3 - q2*q3".into(),
        ));
    }
    let spec = q1.spec();
    let one = spec.one();
    let other = spec.from_i64(4) * (q2 + q3 - &one) / prod - spec.from_i64(3);
    Ok(if other == one {
        vec![one]
    } else {
        vec![one, other]
    })
}

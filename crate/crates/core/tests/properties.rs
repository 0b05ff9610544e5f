use proptest::prelude::*;

use ratrig::affine::{analyze_triangle, spread, Check, VectorTriangle};
use ratrig::codec::{TriangleReportJson, TripodReportJson};
use ratrig::field::{FieldElement, FieldSpec};
use ratrig::linalg::{Mat3, Vec3};
use ratrig::metric::{b_cross, b_dot, b_quadrance, BilinearForm};
use ratrig::projective::{analyze_tripod, dual_tripod, Tripod};
use ratrig::verify::{self, Mode};

const PRIMES: [u64; 6] = [3, 5, 7, 13, 101, 4_294_967_291];

fn field() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![
        Just(FieldSpec::rational()),
        prop::sample::select(PRIMES.to_vec()).prop_map(|p| FieldSpec::prime(p).unwrap()),
    ]
}

fn element(spec: FieldSpec) -> impl Strategy<Value = FieldElement> {
    (-50i64..=50, 1i64..=12).prop_map(move |(n, d)| match spec.modulus() {
        Some(_) => spec.from_i64(n),
        None => spec.from_ratio(n, d).unwrap(),
    })
}

fn vec3(spec: FieldSpec) -> impl Strategy<Value = Vec3> {
    [element(spec), element(spec), element(spec)].prop_map(|[x, y, z]| Vec3::new(x, y, z).unwrap())
}

fn mat3(spec: FieldSpec) -> impl Strategy<Value = Mat3> {
    [vec3(spec), vec3(spec), vec3(spec)].prop_map(|[a, b, c]| Mat3::from_rows(a, b, c).unwrap())
}

/// Symmetric with nonzero determinant.
fn form(spec: FieldSpec) -> impl Strategy<Value = BilinearForm> {
    [
        element(spec),
        element(spec),
        element(spec),
        element(spec),
        element(spec),
        element(spec),
    ]
    .prop_filter_map("degenerate form", |[a1, a2, a3, b1, b2, b3]| {
        let m = Mat3::from_rows(
            Vec3::new(a1, b3.clone(), b2.clone()).unwrap(),
            Vec3::new(b3, a2, b1.clone()).unwrap(),
            Vec3::new(b2, b1, a3).unwrap(),
        )
        .unwrap();
        BilinearForm::new(m).ok()
    })
}

fn field_and<T: std::fmt::Debug, S: Strategy<Value = T>>(
    f: impl Fn(FieldSpec) -> S + Clone,
) -> impl Strategy<Value = (FieldSpec, T)> {
    field().prop_flat_map(move |spec| (Just(spec), f(spec)))
}

proptest! {
    #[test]
    fn field_axioms((spec, (a, b, c)) in field_and(|s| (element(s), element(s), element(s)))) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
        prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        prop_assert_eq!(&a - &a, spec.zero());
        prop_assert_eq!(&a + spec.zero(), a.clone());
        prop_assert_eq!(&a * spec.one(), a.clone());
        if !a.is_zero() {
            prop_assert_eq!(&a * a.inv().unwrap(), spec.one());
            prop_assert_eq!(&b / &a * &a, b.clone());
        } else {
            prop_assert!(a.inv().is_err());
        }
    }

    #[test]
    fn parse_format_round_trip((spec, a) in field_and(element)) {
        prop_assert_eq!(spec.parse(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn rational_text_is_canonical(n in -10_000i64..10_000, d in 1i64..10_000) {
        let q = FieldSpec::rational();
        let a = q.from_ratio(n, d).unwrap();
        let scaled = q.parse(&format!("{}/{}", 3 * n, 3 * d)).unwrap();
        prop_assert_eq!(scaled.to_string(), a.to_string());
    }

    #[test]
    fn adjugate_identities((spec, (m, n)) in field_and(|s| (mat3(s), mat3(s)))) {
        let det = m.det();
        let di = Mat3::identity(spec).scale(&det);
        prop_assert_eq!(m.mul(&m.adjugate()), di.clone());
        prop_assert_eq!(m.adjugate().mul(&m), di);
        prop_assert_eq!(m.mul(&n).adjugate(), n.adjugate().mul(&m.adjugate()));
        prop_assert_eq!(m.adjugate().adjugate(), m.scale(&det));
        prop_assert_eq!(m.mul(&n).det(), det * n.det());
        prop_assert_eq!(m.transpose().det(), m.det());
    }

    #[test]
    fn metric_identities((_spec, (b, v, w)) in field_and(|s| (form(s), vec3(s), vec3(s)))) {
        let c = b_cross(&b, &v, &w).unwrap();
        prop_assert!(b_dot(&b, &v, &c).unwrap().is_zero());
        prop_assert!(b_dot(&b, &w, &c).unwrap().is_zero());
        prop_assert_eq!(b_dot(&b, &v, &w).unwrap(), b_dot(&b, &w, &v).unwrap());
        prop_assert_eq!(b_cross(&b, &w, &v).unwrap(), -&c);
        let lagrange = b.det()
            * (b_quadrance(&b, &v).unwrap() * b_quadrance(&b, &w).unwrap() - b_dot(&b, &v, &w).unwrap().square());
        prop_assert_eq!(b_quadrance(&b, &c).unwrap(), lagrange);
        // B = I over the same field is the Euclidean special case.
        let id = BilinearForm::euclidean(b.spec());
        prop_assert_eq!(b_cross(&id, &v, &w).unwrap(), v.cross(&w));
    }

    #[test]
    fn affine_laws_hold((spec, (b, v, w)) in field_and(|s| (form(s), vec3(s), vec3(s)))) {
        let t = VectorTriangle::from_two(v.clone(), w.clone()).unwrap();
        let r = analyze_triangle(&b, &t).unwrap();
        prop_assert!(!r.any_failed(), "{:?}", r.checks);
        if let Ok(s) = spread(&b, &v, &w) {
            let k = spec.from_i64(7);
            if !k.is_zero() {
                prop_assert_eq!(spread(&b, &v.scale(&k), &w).unwrap(), s);
            }
        }
        let json = TriangleReportJson::new(&b, &t, &r);
        let text = serde_json::to_string(&json).unwrap();
        let back: TriangleReportJson = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back.decode().unwrap(), (b, t, r));
    }

    #[test]
    fn projective_laws_hold((_spec, (b, u, v, w)) in field_and(|s| (form(s), vec3(s), vec3(s), vec3(s)))) {
        let Ok(t) = Tripod::from_vectors(&u, &v, &w) else { return Ok(()) };
        if t.is_degenerate() {
            prop_assert!(analyze_tripod(&b, &t).is_err());
            return Ok(());
        }
        let r = analyze_tripod(&b, &t).unwrap();
        prop_assert!(!r.any_failed(), "{:?}", r.checks);
        prop_assert_eq!(r.checks["duality_involution"], Check::Pass);
        prop_assert_eq!(dual_tripod(&b, &r.dual).unwrap(), t.clone());
        let json = TripodReportJson::new(&b, &t, &r);
        let back: TripodReportJson = serde_json::from_str(&serde_json::to_string(&json).unwrap()).unwrap();
        prop_assert_eq!(back.decode().unwrap(), (b, t, r));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn sweeps_are_deterministic(seed in any::<u64>(), p in prop::sample::select(vec![7u64, 101])) {
        let b = BilinearForm::minkowski(FieldSpec::prime(p).unwrap());
        let a = verify::run(&b, Mode::Random { seed, cases: 20 }).unwrap();
        let c = verify::run(&b, Mode::Random { seed, cases: 20 }).unwrap();
        prop_assert_eq!(a.failures, 0);
        prop_assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&c).unwrap());
    }
}

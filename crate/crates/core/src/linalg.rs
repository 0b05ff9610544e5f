//! Row vectors and 3×3 matrices over a [`FieldSpec`].
//!
//! Vectors are rows: they multiply matrices from the left (`v · M`), and a
//! bilinear form is evaluated as `v B wᵀ`. There is no column-vector API.
//!
//! Methods such as [`Vec3::cross`] and [`Mat3::mul`] assume both operands are
//! in the same field and panic otherwise; the free functions
//! ([`euclid_cross`], [`mat_mul`], [`vec_mat`]) check and return
//! [`Error::FieldMismatch`].

use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::Error;
use crate::field::{FieldElement, FieldSpec};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Vec3([FieldElement; 3]);

impl Vec3 {
    pub fn new(x: FieldElement, y: FieldElement, z: FieldElement) -> Result<Self, Error> {
        x.same_field(&y)?;
        x.same_field(&z)?;
        Ok(Vec3([x, y, z]))
    }

    pub fn from_i64(spec: FieldSpec, c: [i64; 3]) -> Self {
        Vec3(c.map(|n| spec.from_i64(n)))
    }

    pub fn zero(spec: FieldSpec) -> Self {
        Vec3::from_i64(spec, [0, 0, 0])
    }

    /// Standard basis vector `e_{i+1}`.
    pub fn basis(spec: FieldSpec, i: usize) -> Self {
        let mut c = [0; 3];
        c[i] = 1;
        Vec3::from_i64(spec, c)
    }

    pub fn spec(&self) -> FieldSpec {
        self.0[0].spec()
    }

    pub fn components(&self) -> &[FieldElement; 3] {
        &self.0
    }

    pub fn x(&self) -> &FieldElement {
        &self.0[0]
    }

    pub fn y(&self) -> &FieldElement {
        &self.0[1]
    }

    pub fn z(&self) -> &FieldElement {
        &self.0[2]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(FieldElement::is_zero)
    }

    pub fn same_field(&self, other: &Vec3) -> Result<(), Error> {
        self.0[0].same_field(&other.0[0])
    }

    pub fn scale(&self, k: &FieldElement) -> Vec3 {
        Vec3(std::array::from_fn(|i| &self.0[i] * k))
    }

    /// Euclidean dot product `x₁x₂ + y₁y₂ + z₁z₂`.
    pub fn dot(&self, w: &Vec3) -> FieldElement {
        let [a, b, c] = &self.0;
        let [d, e, f] = &w.0;
        a * d + b * e + c * f
    }

    /// Euclidean vector product `(y₁z₂−y₂z₁, x₂z₁−x₁z₂, x₁y₂−x₂y₁)`.
    pub fn cross(&self, w: &Vec3) -> Vec3 {
        let [x1, y1, z1] = &self.0;
        let [x2, y2, z2] = &w.0;
        Vec3([y1 * z2 - y2 * z1, x2 * z1 - x1 * z2, x1 * y2 - x2 * y1])
    }

    /// Row vector times matrix.
    pub fn mul_mat(&self, m: &Mat3) -> Vec3 {
        Vec3(std::array::from_fn(|j| {
            &self.0[0] * m.entry(0, j) + &self.0[1] * m.entry(1, j) + &self.0[2] * m.entry(2, j)
        }))
    }

    /// True when `self` and `w` span at most a line.
    pub fn is_parallel(&self, w: &Vec3) -> bool {
        self.cross(w).is_zero()
    }

    /// The first nonzero coordinate, if any.
    pub fn leading(&self) -> Option<&FieldElement> {
        self.0.iter().find(|c| !c.is_zero())
    }
}

impl fmt::Debug for Vec3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.0[0], self.0[1], self.0[2])
    }
}

impl fmt::Display for Vec3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Add for &Vec3 {
    type Output = Vec3;
    fn add(self, rhs: &Vec3) -> Vec3 {
        Vec3(std::array::from_fn(|i| &self.0[i] + &rhs.0[i]))
    }
}

impl Sub for &Vec3 {
    type Output = Vec3;
    fn sub(self, rhs: &Vec3) -> Vec3 {
        Vec3(std::array::from_fn(|i| &self.0[i] - &rhs.0[i]))
    }
}

impl Add for Vec3 {
    type Output = Vec3;
    fn add(self, rhs: Vec3) -> Vec3 {
        &self + &rhs
    }
}

impl Sub for Vec3 {
    type Output = Vec3;
    fn sub(self, rhs: Vec3) -> Vec3 {
        &self - &rhs
    }
}

impl Neg for &Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        Vec3(std::array::from_fn(|i| -&self.0[i]))
    }
}

impl Neg for Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        -&self
    }
}

/// A 3×3 matrix stored as three row vectors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat3([Vec3; 3]);

impl Mat3 {
    pub fn from_rows(r1: Vec3, r2: Vec3, r3: Vec3) -> Result<Self, Error> {
        r1.same_field(&r2)?;
        r1.same_field(&r3)?;
        Ok(Mat3([r1, r2, r3]))
    }

    pub fn from_i64(spec: FieldSpec, rows: [[i64; 3]; 3]) -> Self {
        Mat3(rows.map(|r| Vec3::from_i64(spec, r)))
    }

    pub fn identity(spec: FieldSpec) -> Self {
        Mat3::diag(spec.one(), spec.one(), spec.one())
    }

    pub fn diag(a: FieldElement, b: FieldElement, c: FieldElement) -> Self {
        let z = a.spec().zero();
        Mat3([
            Vec3([a, z.clone(), z.clone()]),
            Vec3([z.clone(), b, z.clone()]),
            Vec3([z.clone(), z, c]),
        ])
    }

    pub fn spec(&self) -> FieldSpec {
        self.0[0].spec()
    }

    pub fn rows(&self) -> &[Vec3; 3] {
        &self.0
    }

    pub fn row(&self, i: usize) -> &Vec3 {
        &self.0[i]
    }

    pub fn entry(&self, i: usize, j: usize) -> &FieldElement {
        &self.0[i].0[j]
    }

    pub fn transpose(&self) -> Mat3 {
        Mat3(std::array::from_fn(|i| {
            Vec3(std::array::from_fn(|j| self.entry(j, i).clone()))
        }))
    }

    pub fn is_symmetric(&self) -> bool {
        (0..3).all(|i| (0..i).all(|j| self.entry(i, j) == self.entry(j, i)))
    }

    pub fn mul(&self, n: &Mat3) -> Mat3 {
        Mat3(std::array::from_fn(|i| self.0[i].mul_mat(n)))
    }

    pub fn scale(&self, k: &FieldElement) -> Mat3 {
        Mat3(std::array::from_fn(|i| self.0[i].scale(k)))
    }

    /// Determinant, as the scalar triple product of the rows.
    pub fn det(&self) -> FieldElement {
        self.0[0].dot(&self.0[1].cross(&self.0[2]))
    }

    /// Adjugate: the transpose of the matrix whose rows are
    /// `r₂×r₃, r₃×r₁, r₁×r₂`. Defined for singular matrices too.
    pub fn adjugate(&self) -> Mat3 {
        let [r1, r2, r3] = &self.0;
        Mat3([r2.cross(r3), r3.cross(r1), r1.cross(r2)]).transpose()
    }
}

impl fmt::Debug for Mat3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?}, {:?}, {:?}]", self.0[0], self.0[1], self.0[2])
    }
}

impl Add for &Mat3 {
    type Output = Mat3;
    fn add(self, rhs: &Mat3) -> Mat3 {
        Mat3(std::array::from_fn(|i| &self.0[i] + &rhs.0[i]))
    }
}

pub fn euclid_cross(v: &Vec3, w: &Vec3) -> Result<Vec3, Error> {
    v.same_field(w)?;
    Ok(v.cross(w))
}

pub fn mat_mul(m: &Mat3, n: &Mat3) -> Result<Mat3, Error> {
    m.row(0).same_field(n.row(0))?;
    Ok(m.mul(n))
}

pub fn vec_mat(v: &Vec3, m: &Mat3) -> Result<Vec3, Error> {
    v.same_field(m.row(0))?;
    Ok(v.mul_mat(m))
}

/// Determinant of the matrix with rows `a`, `b`, `c`.
pub fn det3(a: &Vec3, b: &Vec3, c: &Vec3) -> FieldElement {
    a.dot(&b.cross(c))
}

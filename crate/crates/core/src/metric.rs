//! The B-metrical layer: scalar and vector products relative to an invertible
//! symmetric matrix `B`, the triple and quadruple products built from them,
//! their closed forms, reciprocal bases and the form induced by a change of
//! coordinates.
//!
//! Notation in comments follows the usual conventions: `v·w` is `v B wᵀ`,
//! `v×w` is `(v × w) adj B`, `[u,v,w]` is `u·(v×w)`, `⟨u,v,w⟩` is `u×(v×w)`,
//! `[a,b;c,d]` is `(a×b)·(c×d)` and `⟨a,b;c,d⟩` is `(a×b)×(c×d)`.

use crate::error::Error;
use crate::field::{FieldElement, FieldSpec};
use crate::linalg::{Mat3, Vec3};

/// A non-degenerate symmetric bilinear form on three-space.
///
/// `det B` and `adj B` are computed once at construction and every product
/// reads them from here.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    matrix: Mat3,
    det: FieldElement,
    adjugate: Mat3,
}

impl BilinearForm {
    pub fn new(matrix: Mat3) -> Result<Self, Error> {
        if !matrix.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        let det = matrix.det();
        if det.is_zero() {
            return Err(Error::DegenerateForm);
        }
        let adjugate = matrix.adjugate();
        Ok(BilinearForm {
            matrix,
            det,
            adjugate,
        })
    }

    pub fn euclidean(spec: FieldSpec) -> Self {
        BilinearForm::new(Mat3::identity(spec)).expect("identity is non-degenerate")
    }

    /// The relativistic form `diag(1, 1, -1)`.
    pub fn minkowski(spec: FieldSpec) -> Self {
        BilinearForm::new(Mat3::diag(spec.one(), spec.one(), -spec.one()))
            .expect("diag(1,1,-1) is non-degenerate")
    }

    /// `euclidean`, `minkowski`, or `None` for anything else.
    pub fn named(name: &str, spec: FieldSpec) -> Option<Self> {
        match name {
            "euclidean" => Some(BilinearForm::euclidean(spec)),
            "minkowski" => Some(BilinearForm::minkowski(spec)),
            _ => None,
        }
    }

    /// The induced form `L Lᵀ`, for which `(vL)·(wL)` under the Euclidean
    /// product equals `v·w`.
    pub fn induced(l: &Mat3) -> Result<Self, Error> {
        if l.det().is_zero() {
            return Err(Error::SingularTransform);
        }
        BilinearForm::new(l.mul(&l.transpose()))
    }

    pub fn spec(&self) -> FieldSpec {
        self.det.spec()
    }

    pub fn matrix(&self) -> &Mat3 {
        &self.matrix
    }

    pub fn det(&self) -> &FieldElement {
        &self.det
    }

    pub fn adjugate(&self) -> &Mat3 {
        &self.adjugate
    }

    /// Fails with `FieldMismatch` unless every vector lives in this form's field.
    pub fn check(&self, vs: &[&Vec3]) -> Result<(), Error> {
        vs.iter().try_for_each(|v| self.det.same_field(v.x()))
    }

    // The unchecked products below assume `check` has passed.

    pub fn dot(&self, v: &Vec3, w: &Vec3) -> FieldElement {
        v.mul_mat(&self.matrix).dot(w)
    }

    pub fn quadrance(&self, v: &Vec3) -> FieldElement {
        self.dot(v, v)
    }

    pub fn cross(&self, v: &Vec3, w: &Vec3) -> Vec3 {
        v.cross(w).mul_mat(&self.adjugate)
    }

    pub fn triple(&self, v1: &Vec3, v2: &Vec3, v3: &Vec3) -> FieldElement {
        self.dot(v1, &self.cross(v2, v3))
    }

    pub fn vector_triple(&self, v1: &Vec3, v2: &Vec3, v3: &Vec3) -> Vec3 {
        self.cross(v1, &self.cross(v2, v3))
    }

    pub fn quadruple(&self, v1: &Vec3, v2: &Vec3, v3: &Vec3, v4: &Vec3) -> FieldElement {
        self.dot(&self.cross(v1, v2), &self.cross(v3, v4))
    }

    pub fn vector_quadruple(&self, v1: &Vec3, v2: &Vec3, v3: &Vec3, v4: &Vec3) -> Vec3 {
        self.cross(&self.cross(v1, v2), &self.cross(v3, v4))
    }
}

pub fn b_dot(b: &BilinearForm, v: &Vec3, w: &Vec3) -> Result<FieldElement, Error> {
    b.check(&[v, w])?;
    Ok(b.dot(v, w))
}

pub fn b_quadrance(b: &BilinearForm, v: &Vec3) -> Result<FieldElement, Error> {
    b.check(&[v])?;
    Ok(b.quadrance(v))
}

pub fn is_b_null(b: &BilinearForm, v: &Vec3) -> Result<bool, Error> {
    Ok(b_quadrance(b, v)?.is_zero())
}

pub fn is_b_perp(b: &BilinearForm, v: &Vec3, w: &Vec3) -> Result<bool, Error> {
    Ok(b_dot(b, v, w)?.is_zero())
}

/// `(v × w) adj B`. Linearly dependent inputs give the zero vector.
pub fn b_cross(b: &BilinearForm, v: &Vec3, w: &Vec3) -> Result<Vec3, Error> {
    b.check(&[v, w])?;
    Ok(b.cross(v, w))
}

pub fn scalar_triple(
    b: &BilinearForm,
    v1: &Vec3,
    v2: &Vec3,
    v3: &Vec3,
) -> Result<FieldElement, Error> {
    b.check(&[v1, v2, v3])?;
    Ok(b.triple(v1, v2, v3))
}

pub fn vector_triple(b: &BilinearForm, v1: &Vec3, v2: &Vec3, v3: &Vec3) -> Result<Vec3, Error> {
    b.check(&[v1, v2, v3])?;
    Ok(b.vector_triple(v1, v2, v3))
}

pub fn scalar_quadruple(
    b: &BilinearForm,
    v1: &Vec3,
    v2: &Vec3,
    v3: &Vec3,
    v4: &Vec3,
) -> Result<FieldElement, Error> {
    b.check(&[v1, v2, v3, v4])?;
    Ok(b.quadruple(v1, v2, v3, v4))
}

pub fn vector_quadruple(
    b: &BilinearForm,
    v1: &Vec3,
    v2: &Vec3,
    v3: &Vec3,
    v4: &Vec3,
) -> Result<Vec3, Error> {
    b.check(&[v1, v2, v3, v4])?;
    Ok(b.vector_quadruple(v1, v2, v3, v4))
}

/// The reciprocal basis `wᵢ = (vⱼ × vₖ) / [v₁,v₂,v₃]` for `(i,j,k)` cyclic.
pub fn reciprocal_basis(
    b: &BilinearForm,
    v1: &Vec3,
    v2: &Vec3,
    v3: &Vec3,
) -> Result<[Vec3; 3], Error> {
    b.check(&[v1, v2, v3])?;
    let t = b.triple(v1, v2, v3);
    let inv = t.inv().map_err(|_| Error::DegenerateBasis)?;
    Ok([
        b.cross(v2, v3).scale(&inv),
        b.cross(v3, v1).scale(&inv),
        b.cross(v1, v2).scale(&inv),
    ])
}

pub fn induced_form(l: &Mat3) -> Result<BilinearForm, Error> {
    BilinearForm::induced(l)
}

/// Closed forms of the products, used to cross-check the definitions.
pub mod closed {
    use super::*;
    use crate::linalg::det3;

    /// `(det B)(det M)` with `M` stacking the three vectors as rows.
    pub fn scalar_triple(b: &BilinearForm, v1: &Vec3, v2: &Vec3, v3: &Vec3) -> FieldElement {
        b.det() * det3(v1, v2, v3)
    }

    /// `(det B)[(v₁·v₃)v₂ − (v₁·v₂)v₃]`.
    pub fn vector_triple(b: &BilinearForm, v1: &Vec3, v2: &Vec3, v3: &Vec3) -> Vec3 {
        (&v2.scale(&b.dot(v1, v3)) - &v3.scale(&b.dot(v1, v2))).scale(b.det())
    }

    /// `(det B)[(v₁·v₃)(v₂·v₄) − (v₁·v₄)(v₂·v₃)]`.
    pub fn scalar_quadruple(
        b: &BilinearForm,
        v1: &Vec3,
        v2: &Vec3,
        v3: &Vec3,
        v4: &Vec3,
    ) -> FieldElement {
        b.det() * (b.dot(v1, v3) * b.dot(v2, v4) - b.dot(v1, v4) * b.dot(v2, v3))
    }

    /// `(det B)([v₁,v₂,v₄]v₃ − [v₁,v₂,v₃]v₄)`.
    pub fn vector_quadruple_first(
        b: &BilinearForm,
        v1: &Vec3,
        v2: &Vec3,
        v3: &Vec3,
        v4: &Vec3,
    ) -> Vec3 {
        (&v3.scale(&b.triple(v1, v2, v4)) - &v4.scale(&b.triple(v1, v2, v3))).scale(b.det())
    }

    /// `(det B)([v₁,v₃,v₄]v₂ − [v₂,v₃,v₄]v₁)`.
    pub fn vector_quadruple_second(
        b: &BilinearForm,
        v1: &Vec3,
        v2: &Vec3,
        v3: &Vec3,
        v4: &Vec3,
    ) -> Vec3 {
        (&v2.scale(&b.triple(v1, v3, v4)) - &v1.scale(&b.triple(v2, v3, v4))).scale(b.det())
    }

    /// `(det B)[Q(v₁)Q(v₂) − (v₁·v₂)²]`.
    pub fn lagrange_identity(b: &BilinearForm, v1: &Vec3, v2: &Vec3) -> FieldElement {
        b.det() * (b.quadrance(v1) * b.quadrance(v2) - b.dot(v1, v2).square())
    }
}

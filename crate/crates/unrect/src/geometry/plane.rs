//! Orthogonal projections onto m-planes through the origin.

use serde::{Deserialize, Serialize};

use crate::error::GeometryError;
use crate::geometry::linalg::{Mat, Vector};
use crate::geometry::rotation::Rotation;

/// Orthonormality tolerance for plane bases.
pub const PLANE_TOL: f64 = 1e-12;

/// An m-dimensional linear subspace of R^n given by an orthonormal basis.
#[derive(Clone, Debug)]
pub struct Plane {
    basis: Vec<Vector>,
}

impl Plane {
    pub fn new(basis: Vec<Vector>) -> Result<Self, GeometryError> {
        if basis.is_empty() {
            return Err(GeometryError::BadPlaneDim { m: 0, n: 0 });
        }
        let n = basis[0].dim();
        let m = basis.len();
        if m >= n {
            return Err(GeometryError::BadPlaneDim { m, n });
        }
        let mut defect: f64 = 0.0;
        for (i, bi) in basis.iter().enumerate() {
            if bi.dim() != n {
                return Err(GeometryError::BadDimension { dim: bi.dim() });
            }
            for (j, bj) in basis.iter().enumerate() {
                let expect = if i == j { 1.0 } else { 0.0 };
                defect = defect.max((bi.dot(bj) - expect).abs());
            }
        }
        if defect > PLANE_TOL {
            return Err(GeometryError::NotOrthonormal { defect });
        }
        Ok(Plane { basis })
    }

    /// Orthonormalise a spanning set (modified Gram-Schmidt), then validate.
    pub fn from_spanning(vectors: &[Vector]) -> Result<Self, GeometryError> {
        let mut basis: Vec<Vector> = Vec::with_capacity(vectors.len());
        for v in vectors {
            let mut w = *v;
            for b in &basis {
                w = w - b.scale(b.dot(&w));
            }
            // repeat once for numerical orthogonality
            for b in &basis {
                w = w - b.scale(b.dot(&w));
            }
            basis.push(w.normalized()?);
        }
        Plane::new(basis)
    }

    /// The line in R^2 spanned by (cos angle, sin angle).
    pub fn line2(angle: f64) -> Self {
        Plane { basis: vec![Vector::new2(angle.cos(), angle.sin())] }
    }

    /// Coordinate plane spanned by axes `axes` of R^dim.
    pub fn coordinate(dim: usize, axes: &[usize]) -> Result<Self, GeometryError> {
        Plane::new(axes.iter().map(|&k| Vector::basis(dim, k)).collect())
    }

    pub fn m(&self) -> usize {
        self.basis.len()
    }

    pub fn dim(&self) -> usize {
        self.basis[0].dim()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    /// P_V(p) = sum_i <p, b_i> b_i; idempotent.
    pub fn project(&self, p: &Vector) -> Vector {
        let mut out = Vector::zeros(self.dim());
        for b in &self.basis {
            out = out + b.scale(b.dot(p));
        }
        out
    }

    pub fn projection_matrix(&self) -> Mat {
        let mut m = Mat::zeros(self.dim());
        for b in &self.basis {
            m = m.add_mat(&Mat::outer(b, b));
        }
        m
    }

    /// The rotated plane theta(V).
    pub fn rotate(&self, theta: &Rotation) -> Plane {
        Plane { basis: self.basis.iter().map(|b| theta.apply(b)).collect() }
    }
}

impl Serialize for Plane {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        self.basis.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Plane {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let basis = Vec::<Vector>::deserialize(de)?;
        Plane::new(basis).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn axis_projection() {
        let v = Plane::line2(0.0);
        let p = v.project(&Vector::new2(3.0, 4.0));
        assert_eq!(p, Vector::new2(3.0, 0.0));
    }

    #[test]
    fn idempotent() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let v = Plane::line2(rng.gen_range(0.0..std::f64::consts::PI));
            let p = Vector::new2(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0));
            let once = v.project(&p);
            let twice = v.project(&once);
            assert!(once.dist(&twice) < 1e-15);
        }
    }

    #[test]
    fn rejects_oblique_basis() {
        let r = Plane::new(vec![Vector::new2(1.0, 0.5)]);
        assert!(r.is_err());
    }

    #[test]
    fn rejects_full_dimension() {
        let r = Plane::coordinate(2, &[0, 1]);
        assert!(r.is_err());
    }

    /// P_V(theta(p)) = theta(P_{theta^{-1}(V)}(p)), evaluated directly on
    /// both sides. This is the commutation identity used throughout.
    #[test]
    fn projection_commutes_with_rotation() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..1000 {
            let dim = if rng.gen::<bool>() { 2 } else { 3 };
            let theta = Rotation::sample(dim, std::f64::consts::PI, &mut rng);
            let v = random_plane(dim, &mut rng);
            let p = random_point(dim, &mut rng);
            let lhs = v.project(&theta.apply(&p));
            let rhs = theta.apply(&v.rotate(&theta.inverse()).project(&p));
            assert!(lhs.dist(&rhs) < 1e-12, "defect {}", lhs.dist(&rhs));
        }
    }

    pub(crate) fn random_plane<R: Rng>(dim: usize, rng: &mut R) -> Plane {
        let m = if dim == 2 { 1 } else { rng.gen_range(1..=2) };
        let spin = Rotation::sample(dim, std::f64::consts::PI, rng);
        Plane::coordinate(dim, &(0..m).collect::<Vec<_>>())
            .unwrap()
            .rotate(&spin)
    }

    pub(crate) fn random_point<R: Rng>(dim: usize, rng: &mut R) -> Vector {
        let mut v = Vector::zeros(dim);
        for i in 0..dim {
            v[i] = rng.gen_range(-3.0..3.0);
        }
        v
    }
}

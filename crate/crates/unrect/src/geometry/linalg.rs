//! Small fixed-capacity linear algebra over R^2 and R^3.
//!
//! Everything in the crate runs in ambient dimension 2 or 3, so vectors and
//! matrices are stored inline with an explicit runtime dimension. Singular
//! values are obtained from a cyclic Jacobi eigensolver on A^T A, which is
//! exact to machine precision at this size.

use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::GeometryError;

/// Largest ambient dimension supported by the crate.
pub const MAX_DIM: usize = 3;

/// A point or displacement in R^n, n in {2, 3}.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Vector {
    dim: usize,
    data: [f64; MAX_DIM],
}

impl Vector {
    pub fn new2(x: f64, y: f64) -> Self {
        Vector { dim: 2, data: [x, y, 0.0] }
    }

    pub fn new3(x: f64, y: f64, z: f64) -> Self {
        Vector { dim: 3, data: [x, y, z] }
    }

    pub fn zeros(dim: usize) -> Self {
        assert!(dim == 2 || dim == 3, "ambient dimension must be 2 or 3");
        Vector { dim, data: [0.0; MAX_DIM] }
    }

    pub fn from_slice(coords: &[f64]) -> Result<Self, GeometryError> {
        if coords.len() != 2 && coords.len() != 3 {
            return Err(GeometryError::BadDimension { dim: coords.len() });
        }
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(GeometryError::NonFinite);
        }
        let mut data = [0.0; MAX_DIM];
        data[..coords.len()].copy_from_slice(coords);
        Ok(Vector { dim: coords.len(), data })
    }

    /// Standard basis vector e_k.
    pub fn basis(dim: usize, k: usize) -> Self {
        let mut v = Vector::zeros(dim);
        v.data[k] = 1.0;
        v
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data[..self.dim]
    }

    pub fn dot(&self, other: &Vector) -> f64 {
        debug_assert_eq!(self.dim, other.dim);
        let mut acc = 0.0;
        for i in 0..self.dim {
            acc += self.data[i] * other.data[i];
        }
        acc
    }

    pub fn norm_sq(&self) -> f64 {
        self.dot(self)
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn dist(&self, other: &Vector) -> f64 {
        (*self - *other).norm()
    }

    pub fn scale(&self, c: f64) -> Vector {
        let mut out = *self;
        for i in 0..self.dim {
            out.data[i] *= c;
        }
        out
    }

    /// Unit vector in the same direction; error on (near-)zero input.
    pub fn normalized(&self) -> Result<Vector, GeometryError> {
        let n = self.norm();
        if n < 1e-300 {
            return Err(GeometryError::ZeroVector);
        }
        Ok(self.scale(1.0 / n))
    }

    pub fn is_finite(&self) -> bool {
        self.as_slice().iter().all(|c| c.is_finite())
    }
}

impl Index<usize> for Vector {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        debug_assert!(i < self.dim);
        &self.data[i]
    }
}

impl IndexMut<usize> for Vector {
    fn index_mut(&mut self, i: usize) -> &mut f64 {
        debug_assert!(i < self.dim);
        &mut self.data[i]
    }
}

impl Add for Vector {
    type Output = Vector;
    fn add(self, rhs: Vector) -> Vector {
        debug_assert_eq!(self.dim, rhs.dim);
        let mut out = self;
        for i in 0..self.dim {
            out.data[i] += rhs.data[i];
        }
        out
    }
}

impl Sub for Vector {
    type Output = Vector;
    fn sub(self, rhs: Vector) -> Vector {
        debug_assert_eq!(self.dim, rhs.dim);
        let mut out = self;
        for i in 0..self.dim {
            out.data[i] -= rhs.data[i];
        }
        out
    }
}

impl Neg for Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        self.scale(-1.0)
    }
}

impl Mul<f64> for Vector {
    type Output = Vector;
    fn mul(self, c: f64) -> Vector {
        self.scale(c)
    }
}

impl Serialize for Vector {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        self.as_slice().serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Vector {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let coords = Vec::<f64>::deserialize(de)?;
        Vector::from_slice(&coords).map_err(serde::de::Error::custom)
    }
}

/// A square n x n matrix, n in {2, 3}, stored row-major.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat {
    dim: usize,
    data: [[f64; MAX_DIM]; MAX_DIM],
}

impl Mat {
    pub fn zeros(dim: usize) -> Self {
        assert!(dim == 2 || dim == 3);
        Mat { dim, data: [[0.0; MAX_DIM]; MAX_DIM] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Mat::zeros(dim);
        for i in 0..dim {
            m.data[i][i] = 1.0;
        }
        m
    }

    pub fn from_rows(rows: &[&[f64]]) -> Result<Self, GeometryError> {
        let dim = rows.len();
        if dim != 2 && dim != 3 {
            return Err(GeometryError::BadDimension { dim });
        }
        let mut m = Mat::zeros(dim);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != dim {
                return Err(GeometryError::BadDimension { dim: row.len() });
            }
            for (j, &v) in row.iter().enumerate() {
                if !v.is_finite() {
                    return Err(GeometryError::NonFinite);
                }
                m.data[i][j] = v;
            }
        }
        Ok(m)
    }

    /// The 2D skew generator [[0, -a], [a, 0]]; exp of it rotates by angle a.
    pub fn skew2(a: f64) -> Self {
        let mut m = Mat::zeros(2);
        m.data[0][1] = -a;
        m.data[1][0] = a;
        m
    }

    /// The 3D skew generator with axis vector omega (rotation by |omega| around it).
    pub fn skew3(omega: &Vector) -> Self {
        assert_eq!(omega.dim(), 3);
        let (a, b, c) = (omega[0], omega[1], omega[2]);
        let mut m = Mat::zeros(3);
        m.data[0][1] = -c;
        m.data[0][2] = b;
        m.data[1][0] = c;
        m.data[1][2] = -a;
        m.data[2][0] = -b;
        m.data[2][1] = a;
        m
    }

    /// Axis vector of a 3D skew matrix (inverse of `skew3`).
    pub fn axis3(&self) -> Vector {
        debug_assert_eq!(self.dim, 3);
        Vector::new3(self.data[2][1], self.data[0][2], self.data[1][0])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        debug_assert!(i < self.dim && j < self.dim);
        self.data[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        debug_assert!(i < self.dim && j < self.dim);
        self.data[i][j] = v;
    }

    pub fn transpose(&self) -> Mat {
        let mut m = Mat::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                m.data[i][j] = self.data[j][i];
            }
        }
        m
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        debug_assert_eq!(self.dim, v.dim());
        let mut out = Vector::zeros(self.dim);
        for i in 0..self.dim {
            let mut acc = 0.0;
            for j in 0..self.dim {
                acc += self.data[i][j] * v[j];
            }
            out[i] = acc;
        }
        out
    }

    pub fn matmul(&self, rhs: &Mat) -> Mat {
        debug_assert_eq!(self.dim, rhs.dim);
        let mut m = Mat::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let mut acc = 0.0;
                for k in 0..self.dim {
                    acc += self.data[i][k] * rhs.data[k][j];
                }
                m.data[i][j] = acc;
            }
        }
        m
    }

    pub fn add_mat(&self, rhs: &Mat) -> Mat {
        debug_assert_eq!(self.dim, rhs.dim);
        let mut m = *self;
        for i in 0..self.dim {
            for j in 0..self.dim {
                m.data[i][j] += rhs.data[i][j];
            }
        }
        m
    }

    pub fn sub_mat(&self, rhs: &Mat) -> Mat {
        debug_assert_eq!(self.dim, rhs.dim);
        let mut m = *self;
        for i in 0..self.dim {
            for j in 0..self.dim {
                m.data[i][j] -= rhs.data[i][j];
            }
        }
        m
    }

    pub fn scale(&self, c: f64) -> Mat {
        let mut m = *self;
        for i in 0..self.dim {
            for j in 0..self.dim {
                m.data[i][j] *= c;
            }
        }
        m
    }

    /// Rank-one outer product u v^T.
    pub fn outer(u: &Vector, v: &Vector) -> Mat {
        debug_assert_eq!(u.dim(), v.dim());
        let mut m = Mat::zeros(u.dim());
        for i in 0..u.dim() {
            for j in 0..v.dim() {
                m.data[i][j] = u[i] * v[j];
            }
        }
        m
    }

    pub fn det(&self) -> f64 {
        let d = &self.data;
        match self.dim {
            2 => d[0][0] * d[1][1] - d[0][1] * d[1][0],
            3 => {
                d[0][0] * (d[1][1] * d[2][2] - d[1][2] * d[2][1])
                    - d[0][1] * (d[1][0] * d[2][2] - d[1][2] * d[2][0])
                    + d[0][2] * (d[1][0] * d[2][1] - d[1][1] * d[2][0])
            }
            _ => unreachable!(),
        }
    }

    /// Inverse via the adjugate; errors when the determinant is tiny.
    pub fn inverse(&self) -> Result<Mat, GeometryError> {
        let det = self.det();
        if det.abs() < 1e-14 * self.frobenius().max(1.0) {
            return Err(GeometryError::SingularMatrix { det });
        }
        let d = &self.data;
        let inv_det = 1.0 / det;
        let mut m = Mat::zeros(self.dim);
        match self.dim {
            2 => {
                m.data[0][0] = d[1][1] * inv_det;
                m.data[0][1] = -d[0][1] * inv_det;
                m.data[1][0] = -d[1][0] * inv_det;
                m.data[1][1] = d[0][0] * inv_det;
            }
            3 => {
                for i in 0..3 {
                    for j in 0..3 {
                        let (a, b) = ((i + 1) % 3, (i + 2) % 3);
                        let (c, e) = ((j + 1) % 3, (j + 2) % 3);
                        // adjugate: transposed cofactor
                        m.data[j][i] = (d[a][c] * d[b][e] - d[a][e] * d[b][c]) * inv_det;
                    }
                }
            }
            _ => unreachable!(),
        }
        Ok(m)
    }

    pub fn frobenius(&self) -> f64 {
        let mut acc = 0.0;
        for i in 0..self.dim {
            for j in 0..self.dim {
                acc += self.data[i][j] * self.data[i][j];
            }
        }
        acc.sqrt()
    }

    /// Maximum absolute deviation from skew symmetry.
    pub fn skew_defect(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..self.dim {
            for j in 0..self.dim {
                worst = worst.max((self.data[i][j] + self.data[j][i]).abs());
            }
        }
        worst
    }

    pub fn is_skew(&self, tol: f64) -> bool {
        self.skew_defect() <= tol
    }

    /// Eigenvalues of a symmetric matrix by cyclic Jacobi sweeps, descending.
    fn sym_eigenvalues(&self) -> [f64; MAX_DIM] {
        let n = self.dim;
        let mut a = self.data;
        for _ in 0..64 {
            let mut off = 0.0;
            for i in 0..n {
                for j in (i + 1)..n {
                    off += a[i][j] * a[i][j];
                }
            }
            if off < 1e-32 * (1.0 + self.frobenius()).powi(2) {
                break;
            }
            for p in 0..n {
                for q in (p + 1)..n {
                    if a[p][q].abs() < 1e-300 {
                        continue;
                    }
                    let tau = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                    let t = tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt());
                    let c = 1.0 / (1.0 + t * t).sqrt();
                    let s = t * c;
                    for k in 0..n {
                        let (akp, akq) = (a[k][p], a[k][q]);
                        a[k][p] = c * akp - s * akq;
                        a[k][q] = s * akp + c * akq;
                    }
                    for k in 0..n {
                        let (apk, aqk) = (a[p][k], a[q][k]);
                        a[p][k] = c * apk - s * aqk;
                        a[q][k] = s * apk + c * aqk;
                    }
                }
            }
        }
        let mut eig = [0.0; MAX_DIM];
        for i in 0..n {
            eig[i] = a[i][i];
        }
        eig[..n].sort_by(|x, y| y.partial_cmp(x).unwrap());
        eig
    }

    /// Singular values in descending order (trailing entries zero for dim 2).
    pub fn singular_values(&self) -> [f64; MAX_DIM] {
        let ata = self.transpose().matmul(self);
        let mut eig = ata.sym_eigenvalues();
        for e in eig.iter_mut() {
            *e = e.max(0.0).sqrt();
        }
        eig
    }

    /// Operator (spectral) norm.
    pub fn op_norm(&self) -> f64 {
        self.singular_values()[0]
    }
}

impl Serialize for Mat {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<f64>> = (0..self.dim)
            .map(|i| self.data[i][..self.dim].to_vec())
            .collect();
        rows.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Mat {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let rows = Vec::<Vec<f64>>::deserialize(de)?;
        let refs: Vec<&[f64]> = rows.iter().map(|r| r.as_slice()).collect();
        Mat::from_rows(&refs).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_roundtrip() {
        let m = Mat::from_rows(&[&[2.0, 1.0, 0.0], &[0.5, 3.0, -1.0], &[0.0, 0.2, 1.5]]).unwrap();
        let inv = m.inverse().unwrap();
        let id = m.matmul(&inv);
        for i in 0..3 {
            for j in 0..3 {
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!((id.get(i, j) - expect).abs() < 1e-13);
            }
        }
    }

    #[test]
    fn singular_values_of_diagonal() {
        let m = Mat::from_rows(&[&[3.0, 0.0], &[0.0, -0.5]]).unwrap();
        let sv = m.singular_values();
        assert!((sv[0] - 3.0).abs() < 1e-12);
        assert!((sv[1] - 0.5).abs() < 1e-12);
    }

    #[test]
    fn op_norm_of_rank_one() {
        let u = Vector::new3(1.0, 2.0, 2.0);
        let m = Mat::outer(&u, &u);
        // |u|^2 = 9 is the only nonzero singular value
        assert!((m.op_norm() - 9.0).abs() < 1e-10);
        let sv = m.singular_values();
        assert!(sv[1].abs() < 1e-10 && sv[2].abs() < 1e-10);
    }

    #[test]
    fn skew_detection() {
        let s = Mat::skew3(&Vector::new3(0.3, -0.2, 0.9));
        assert!(s.is_skew(0.0));
        let mut not_skew = s;
        not_skew.set(0, 0, 1e-6);
        assert!(!not_skew.is_skew(1e-9));
    }
}

//! Rotations of R^2 and R^3 stored as a skew generator plus its exponential.
//!
//! The exponential is closed form (planar rotation formula in 2D, Rodrigues
//! in 3D), so orthogonality and unit determinant hold to roundoff by
//! construction. The path t -> exp(t X) is the geodesic from the identity.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::GeometryError;
use crate::geometry::linalg::{Mat, Vector};

/// Skewness tolerance for generator validation.
pub const SKEW_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug)]
pub struct Rotation {
    generator: Mat,
    matrix: Mat,
}

impl Rotation {
    pub fn identity(dim: usize) -> Self {
        Rotation { generator: Mat::zeros(dim), matrix: Mat::identity(dim) }
    }

    /// exp(t X) for a skew-symmetric X; the stored generator is t X.
    pub fn from_generator(x: &Mat, t: f64) -> Result<Self, GeometryError> {
        if !t.is_finite() {
            return Err(GeometryError::NonFinite);
        }
        let defect = x.skew_defect();
        if defect > SKEW_TOL {
            return Err(GeometryError::NotSkew { defect });
        }
        let gen = x.scale(t);
        Ok(Rotation { matrix: exp_skew(&gen), generator: gen })
    }

    /// Planar rotation by `angle`.
    pub fn planar(angle: f64) -> Self {
        Rotation::from_generator(&Mat::skew2(angle), 1.0).unwrap()
    }

    /// 3D rotation by |axis| radians around axis.
    pub fn axis_angle(axis: &Vector) -> Self {
        Rotation::from_generator(&Mat::skew3(axis), 1.0).unwrap()
    }

    /// Point on the geodesic from the identity: exp(t X).
    pub fn power(&self, t: f64) -> Rotation {
        Rotation { matrix: exp_skew(&self.generator.scale(t)), generator: self.generator.scale(t) }
    }

    pub fn inverse(&self) -> Rotation {
        Rotation { matrix: self.matrix.transpose(), generator: self.generator.scale(-1.0) }
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        self.matrix.apply(v)
    }

    pub fn matrix(&self) -> &Mat {
        &self.matrix
    }

    pub fn generator(&self) -> &Mat {
        &self.generator
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    /// Rotation angle: operator norm of the generator.
    pub fn angle(&self) -> f64 {
        match self.dim() {
            2 => self.generator.get(1, 0).abs(),
            _ => self.generator.axis3().norm(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.angle() == 0.0
    }

    /// Operator-norm distance of the matrix from the identity.
    pub fn distance_from_identity(&self) -> f64 {
        self.matrix.sub_mat(&Mat::identity(self.dim())).op_norm()
    }

    /// Max deviation of R R^T from I; zero-ish by construction.
    pub fn orthogonality_defect(&self) -> f64 {
        let p = self.matrix.matmul(&self.matrix.transpose());
        let mut worst: f64 = 0.0;
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                let expect = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((p.get(i, j) - expect).abs());
            }
        }
        worst
    }

    /// Uniformly random rotation with angle in (0, max_angle): uniform
    /// direction on the unit sphere of the skew algebra, uniform magnitude.
    pub fn sample<R: Rng>(dim: usize, max_angle: f64, rng: &mut R) -> Rotation {
        let mut angle = 0.0;
        while angle == 0.0 {
            angle = rng.gen_range(0.0..max_angle);
        }
        match dim {
            2 => {
                let sign = if rng.gen::<bool>() { 1.0 } else { -1.0 };
                Rotation::planar(sign * angle)
            }
            _ => {
                // direction: normalised gaussian triple
                loop {
                    let g = Vector::new3(
                        gaussian(rng),
                        gaussian(rng),
                        gaussian(rng),
                    );
                    if let Ok(u) = g.normalized() {
                        return Rotation::axis_angle(&u.scale(angle));
                    }
                }
            }
        }
    }
}

fn gaussian<R: Rng>(rng: &mut R) -> f64 {
    // Box-Muller; fine for sampling directions.
    let u1: f64 = rng.gen_range(f64::MIN_POSITIVE..1.0);
    let u2: f64 = rng.gen_range(0.0..1.0);
    (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
}

/// Closed-form exponential of a skew matrix.
fn exp_skew(x: &Mat) -> Mat {
    match x.dim() {
        2 => {
            let a = x.get(1, 0);
            let (s, c) = a.sin_cos();
            let mut m = Mat::zeros(2);
            m.set(0, 0, c);
            m.set(0, 1, -s);
            m.set(1, 0, s);
            m.set(1, 1, c);
            m
        }
        3 => {
            let omega = x.axis3();
            let theta = omega.norm();
            if theta < 1e-300 {
                return Mat::identity(3);
            }
            // Rodrigues: I + sin(t)/t X + (1-cos(t))/t^2 X^2
            let a = theta.sin() / theta;
            let b = (1.0 - theta.cos()) / (theta * theta);
            let x2 = x.matmul(x);
            Mat::identity(3).add_mat(&x.scale(a)).add_mat(&x2.scale(b))
        }
        _ => unreachable!(),
    }
}

#[derive(Serialize, Deserialize)]
struct RotationRepr {
    dim: usize,
    // 2D: [angle]; 3D: axis scaled by angle
    generator: Vec<f64>,
}

impl Serialize for Rotation {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let generator = match self.dim() {
            2 => vec![self.generator.get(1, 0)],
            _ => self.generator.axis3().as_slice().to_vec(),
        };
        RotationRepr { dim: self.dim(), generator }.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Rotation {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let repr = RotationRepr::deserialize(de)?;
        match (repr.dim, repr.generator.as_slice()) {
            (2, [a]) => Ok(Rotation::planar(*a)),
            (3, [x, y, z]) => Ok(Rotation::axis_angle(&Vector::new3(*x, *y, *z))),
            _ => Err(serde::de::Error::custom("bad rotation descriptor")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::PI;

    #[test]
    fn exp_of_zero_is_identity() {
        let x = Mat::skew2(1.7);
        let r = Rotation::from_generator(&x, 0.0).unwrap();
        assert_eq!(r.matrix(), &Mat::identity(2));
    }

    #[test]
    fn quarter_turn_closed_form() {
        // X = [[0, -pi/2], [pi/2, 0]], t = 1 maps (x, y) to (-y, x)
        let r = Rotation::from_generator(&Mat::skew2(PI / 2.0), 1.0).unwrap();
        let p = r.apply(&Vector::new2(3.0, 4.0));
        assert!((p[0] + 4.0).abs() < 1e-15);
        assert!((p[1] - 3.0).abs() < 1e-15);
    }

    #[test]
    fn rejects_non_skew_generator() {
        let m = Mat::from_rows(&[&[0.1, -1.0], &[1.0, 0.0]]).unwrap();
        assert!(Rotation::from_generator(&m, 1.0).is_err());
    }

    #[test]
    fn one_parameter_group_law() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for dim in [2usize, 3] {
            for _ in 0..200 {
                let r = Rotation::sample(dim, 2.0, &mut rng);
                let (s, t) = (rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
                let joint = r.power(s + t).matrix().clone();
                let split = r.power(s).matrix().matmul(r.power(t).matrix());
                assert!(joint.sub_mat(&split).op_norm() < 1e-12);
            }
        }
    }

    #[test]
    fn orthogonality_and_determinant_for_random_generators() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..1000 {
            let dim = if rng.gen::<bool>() { 2 } else { 3 };
            let r = Rotation::sample(dim, PI, &mut rng);
            assert!(r.orthogonality_defect() < 1e-12);
            assert!((r.matrix().det() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn geodesic_endpoint_and_inverse() {
        let r = Rotation::axis_angle(&Vector::new3(0.2, -0.5, 0.4));
        assert!(r.power(1.0).matrix().sub_mat(r.matrix()).op_norm() < 1e-15);
        assert!(r.power(0.0).matrix().sub_mat(&Mat::identity(3)).op_norm() < 1e-15);
        let prod = r.matrix().matmul(r.inverse().matrix());
        assert!(prod.sub_mat(&Mat::identity(3)).op_norm() < 1e-14);
    }
}

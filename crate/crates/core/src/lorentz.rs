//! 4×4 lifts of the 2×2 generators acting on `(x, y, z, t)` with metric
//! `diag(1, 1, 1, −1)`.
//!
//! Unlike the 2×2 builders, the 4×4 matrices take full angles and rapidities.
//! `rot4_y`, `boost4_x` and `boost4_z` lift `rotation`, `squeeze_offdiag` and
//! `squeeze_diag`; `rot4_z` completes the little group of a particle moving along z.

use std::ops::Mul;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// `(x, y, z, t)`, natural units.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Vec4<T = f64> {
    pub x: T,
    pub y: T,
    pub z: T,
    pub t: T,
}

impl<T: Scalar> Vec4<T> {
    pub const fn new(x: T, y: T, z: T, t: T) -> Self {
        Self { x, y, z, t }
    }

    pub fn to_array(self) -> [T; 4] {
        [self.x, self.y, self.z, self.t]
    }

    pub fn from_array(a: [T; 4]) -> Self {
        Self::new(a[0], a[1], a[2], a[3])
    }

    /// `x² + y² + z² − t²`.
    pub fn minkowski_norm(&self) -> T {
        self.x * self.x + self.y * self.y + self.z * self.z - self.t * self.t
    }

    /// Euclidean length of the component tuple.
    pub fn euclid_norm(&self) -> T {
        self.to_array()
            .iter()
            .fold(T::zero(), |s, v| s + *v * *v)
            .sqrt()
    }

    pub fn distance(&self, other: &Self) -> T {
        Vec4::new(
            self.x - other.x,
            self.y - other.y,
            self.z - other.z,
            self.t - other.t,
        )
        .euclid_norm()
    }
}

/// Real 4×4 matrix acting on [`Vec4`].
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Mat4<T = f64> {
    pub rows: [[T; 4]; 4],
}

impl<T: Scalar> Mat4<T> {
    pub fn from_rows(rows: [[T; 4]; 4]) -> Self {
        Self { rows }
    }

    pub fn identity() -> Self {
        let mut rows = [[T::zero(); 4]; 4];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = T::one();
        }
        Self { rows }
    }

    pub fn metric() -> Self {
        let mut g = Self::identity();
        g.rows[3][3] = -T::one();
        g
    }

    pub fn transpose(&self) -> Self {
        let mut rows = [[T::zero(); 4]; 4];
        for (i, row) in rows.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = self.rows[j][i];
            }
        }
        Self { rows }
    }

    pub fn apply(&self, v: &Vec4<T>) -> Vec4<T> {
        let a = v.to_array();
        let mut out = [T::zero(); 4];
        for (o, row) in out.iter_mut().zip(self.rows.iter()) {
            *o = row
                .iter()
                .zip(a.iter())
                .fold(T::zero(), |s, (m, x)| s + *m * *x);
        }
        Vec4::from_array(out)
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        let mut d = T::zero();
        for (r1, r2) in self.rows.iter().zip(other.rows.iter()) {
            for (a, b) in r1.iter().zip(r2.iter()) {
                d = d.max((*a - *b).abs());
            }
        }
        d
    }

    /// `max |Mᵀ g M − g|`.
    pub fn metric_defect(&self) -> T {
        let g = Self::metric();
        (self.transpose() * g * *self).max_abs_diff(&g)
    }

    pub fn preserves_metric(&self, tol: T) -> bool {
        self.metric_defect() <= tol
    }
}

impl<T: Scalar> Mul for Mat4<T> {
    type Output = Self;

    fn mul(self, r: Self) -> Self {
        let mut rows = [[T::zero(); 4]; 4];
        for (i, row) in rows.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = (0..4).fold(T::zero(), |s, k| s + self.rows[i][k] * r.rows[k][j]);
            }
        }
        Self { rows }
    }
}

/// Rotation about the y axis by `theta`.
pub fn rot4_y<T: Scalar>(theta: T) -> Mat4<T> {
    let (s, c) = theta.sin_cos();
    let (o, l) = (T::zero(), T::one());
    Mat4::from_rows([[c, o, s, o], [o, l, o, o], [-s, o, c, o], [o, o, o, l]])
}

/// Rotation about the z axis by `phi`.
pub fn rot4_z<T: Scalar>(phi: T) -> Mat4<T> {
    let (s, c) = phi.sin_cos();
    let (o, l) = (T::zero(), T::one());
    Mat4::from_rows([[c, -s, o, o], [s, c, o, o], [o, o, l, o], [o, o, o, l]])
}

/// Boost along x with rapidity `lambda`.
pub fn boost4_x<T: Scalar>(lambda: T) -> Mat4<T> {
    let (s, c) = (lambda.sinh(), lambda.cosh());
    let (o, l) = (T::zero(), T::one());
    Mat4::from_rows([[c, o, o, s], [o, l, o, o], [o, o, l, o], [s, o, o, c]])
}

/// Boost along z with rapidity `eta`.
pub fn boost4_z<T: Scalar>(eta: T) -> Mat4<T> {
    let (s, c) = (eta.sinh(), eta.cosh());
    let (o, l) = (T::zero(), T::one());
    Mat4::from_rows([[l, o, o, o], [o, l, o, o], [o, o, c, s], [o, o, s, c]])
}

/// `W(η, θ) = boost4_z(η)·rot4_y(θ)·boost4_z(−η)`: boost to rest, rotate, boost back.
pub fn lift_wigner4<T: Scalar>(eta: T, theta: T) -> Mat4<T> {
    boost4_z(eta) * rot4_y(theta) * boost4_z(-eta)
}

/// Four-momentum `(0, 0, m sinh η, m cosh η)` of a particle of mass `m` moving along z.
pub fn four_momentum_massive<T: Scalar>(m: T, eta: T) -> Result<Vec4<T>> {
    if !(m > T::zero()) {
        return Err(Error::NonPositiveMass { m: m.as_f64() });
    }
    Ok(Vec4::new(
        T::zero(),
        T::zero(),
        m * eta.sinh(),
        m * eta.cosh(),
    ))
}

/// Infinite-rapidity limit of the lifted Wigner rotation:
///
/// ```text
/// [[1, 0, −γ,       γ      ],
///  [0, 1,  0,       0      ],
///  [γ, 0,  1 − γ²/2, γ²/2   ],
///  [γ, 0, −γ²/2,    1 + γ²/2]]
/// ```
///
/// It fixes the light-like `(0, 0, p, p)` and shifts transverse vectors along it.
pub fn gauge_limit_matrix<T: Scalar>(gamma: T) -> Mat4<T> {
    let (o, l) = (T::zero(), T::one());
    let h = gamma * gamma * T::half();
    Mat4::from_rows([
        [l, o, -gamma, gamma],
        [o, l, o, o],
        [gamma, o, l - h, h],
        [gamma, o, -h, l + h],
    ])
}

/// `(0, 0, p, p)`.
pub fn four_momentum_massless<T: Scalar>(p: T) -> Vec4<T> {
    Vec4::new(T::zero(), T::zero(), p, p)
}

/// `|M·p − p| ≤ tol·|p|`.
pub fn is_little_group_element<T: Scalar>(m: &Mat4<T>, p: &Vec4<T>, tol: T) -> bool {
    m.apply(p).distance(p) <= tol * p.euclid_norm()
}

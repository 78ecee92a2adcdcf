//! Block representation `M ↦ X_n M X_n` and the parity-dependent sub-block layout.
//!
//! For `n = 2ν` the conjugate is viewed as
//!
//! ```text
//! [ Y  Vᵀ ]
//! [ W  Z  ]
//! ```
//!
//! and for `n = 2ν + 1` as
//!
//! ```text
//! [ Y   v  Vᵀ ]
//! [ yᵀ  α  zᵀ ]
//! [ W   x  Z  ]
//! ```
//!
//! with all named blocks `ν×ν` and `v, y, z, x` vectors of length `ν`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{Matrix, Vector};
use crate::scalar::Scalar;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(n: usize) -> Parity {
        if n.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// The sign written `±` in the block formulas: `+1` when `ν` is even, `−1` when odd.
/// `∓` is its negative. Every constructor takes its sign from here.
pub fn upper_sign(nu: usize) -> Scalar {
    Scalar::from_int(upper_sign_i64(nu))
}

pub fn upper_sign_i64(nu: usize) -> i64 {
    if nu.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Named sub-blocks of a conjugate.
#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BlockViews {
    Even {
        y: Matrix,
        vt: Matrix,
        w: Matrix,
        z: Matrix,
    },
    Odd {
        y: Matrix,
        v: Vector,
        vt: Matrix,
        yt: Vector,
        alpha: Scalar,
        zt: Vector,
        w: Matrix,
        x: Vector,
        z: Matrix,
    },
}

/// A matrix in block representation. Only the full conjugate is stored; the
/// named views are index ranges into it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockForm {
    conjugate: Matrix,
}

impl BlockForm {
    pub fn from_conjugate(conjugate: Matrix) -> Result<Self> {
        conjugate.require_square()?;
        Ok(BlockForm { conjugate })
    }

    /// Reassembles a conjugate from its views; block sizes must agree.
    pub fn from_views(views: &BlockViews) -> Result<Self> {
        let conjugate = match views {
            BlockViews::Even { y, vt, w, z } => {
                Matrix::from_blocks(&[vec![y.clone(), vt.clone()], vec![w.clone(), z.clone()]])?
            }
            BlockViews::Odd { y, v, vt, yt, alpha, zt, w, x, z } => Matrix::from_blocks(&[
                vec![y.clone(), Matrix::column(v), vt.clone()],
                vec![Matrix::row(yt), Matrix::scalar(alpha.clone()), Matrix::row(zt)],
                vec![w.clone(), Matrix::column(x), z.clone()],
            ])?,
        };
        if views_parity(views) != Parity::of(conjugate.rows()) {
            return Err(Error::DimensionMismatch("block views do not match parity".into()));
        }
        BlockForm::from_conjugate(conjugate)
    }

    pub fn n(&self) -> usize {
        self.conjugate.n()
    }

    pub fn nu(&self) -> usize {
        self.n() / 2
    }

    pub fn parity(&self) -> Parity {
        Parity::of(self.n())
    }

    pub fn conjugate(&self) -> &Matrix {
        &self.conjugate
    }

    pub fn into_conjugate(self) -> Matrix {
        self.conjugate
    }

    pub fn views(&self) -> BlockViews {
        let nu = self.nu();
        let c = &self.conjugate;
        match self.parity() {
            Parity::Even => BlockViews::Even {
                y: c.submatrix(0, 0, nu, nu),
                vt: c.submatrix(0, nu, nu, nu),
                w: c.submatrix(nu, 0, nu, nu),
                z: c.submatrix(nu, nu, nu, nu),
            },
            Parity::Odd => BlockViews::Odd {
                y: c.submatrix(0, 0, nu, nu),
                v: (0..nu).map(|i| c.get(i, nu).clone()).collect(),
                vt: c.submatrix(0, nu + 1, nu, nu),
                yt: (0..nu).map(|j| c.get(nu, j).clone()).collect(),
                alpha: c.get(nu, nu).clone(),
                zt: (0..nu).map(|j| c.get(nu, nu + 1 + j).clone()).collect(),
                w: c.submatrix(nu + 1, 0, nu, nu),
                x: (0..nu).map(|i| c.get(nu + 1 + i, nu).clone()).collect(),
                z: c.submatrix(nu + 1, nu + 1, nu, nu),
            },
        }
    }

    /// The leading `(n−ν)×(n−ν)` block (`Y`, bordered by `v, yᵀ, α` when `n` is odd).
    pub fn leading(&self) -> Matrix {
        let k = self.n() - self.nu();
        self.conjugate.submatrix(0, 0, k, k)
    }

    /// The trailing `ν×ν` block `Z`.
    pub fn trailing(&self) -> Matrix {
        let (n, nu) = (self.n(), self.nu());
        self.conjugate.submatrix(n - nu, n - nu, nu, nu)
    }
}

fn views_parity(views: &BlockViews) -> Parity {
    match views {
        BlockViews::Even { .. } => Parity::Even,
        BlockViews::Odd { .. } => Parity::Odd,
    }
}

/// `X_n M X_n` for any square `M`.
pub fn conjugate_x(m: &Matrix) -> Result<Matrix> {
    let n = m.require_square()?;
    let x = Matrix::involution(n);
    Ok(&(&x * m) * &x)
}

pub fn to_block(m: &Matrix) -> Result<BlockForm> {
    BlockForm::from_conjugate(conjugate_x(m)?)
}

/// Inverse of [`to_block`], since `X_n² = I_n`.
pub fn from_block(b: &BlockForm) -> Matrix {
    conjugate_x(b.conjugate()).expect("block form is square")
}

/// Builds `X_n C X_n` straight from a conjugate `C`.
pub fn from_conjugate(c: &Matrix) -> Result<Matrix> {
    conjugate_x(c)
}

/// `J_n M J_n`, the half-turn rotation.
pub fn conjugate_j(m: &Matrix) -> Result<Matrix> {
    let n = m.require_square()?;
    Ok(Matrix::from_fn(n, n, |i, j| m.get(n - 1 - i, n - 1 - j).clone()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(rows: &[&[i64]]) -> Matrix {
        Matrix::from_int_rows(rows)
    }

    #[test]
    fn block_of_e2() {
        assert_eq!(to_block(&Matrix::ones(2, 2)).unwrap().into_conjugate(), ints(&[&[2, 0], &[0, 0]]));
    }

    #[test]
    fn block_of_e3() {
        let r2 = Scalar::sqrt2();
        let (z, one, two) = (Scalar::zero(), Scalar::one(), Scalar::from_int(2));
        let want = Matrix::new(3, 3, vec![two, r2.clone(), z.clone(), r2, one, z.clone(), z.clone(), z.clone(), z])
            .unwrap();
        assert_eq!(to_block(&Matrix::ones(3, 3)).unwrap().into_conjugate(), want);
    }

    #[test]
    fn block_of_small_matrix() {
        // Hand conjugation: X₂ [[1,2],[3,4]] X₂ = ½[[10,−2],[−4,0]].
        let b = to_block(&ints(&[&[1, 2], &[3, 4]])).unwrap();
        assert_eq!(b.into_conjugate(), ints(&[&[5, -1], &[-2, 0]]));
    }

    #[test]
    fn round_trips() {
        let e4 = Matrix::ones(4, 4);
        assert_eq!(from_block(&to_block(&e4).unwrap()), e4);
        let zero = BlockForm::from_conjugate(Matrix::zero(5)).unwrap();
        assert_eq!(from_block(&zero), Matrix::zero(5));
    }

    #[test]
    fn views_reassemble() {
        for n in 2..=7 {
            let m = Matrix::from_fn(n, n, |i, j| Scalar::from_int((i * 7 + j * j) as i64 - 5));
            let b = to_block(&m).unwrap();
            assert_eq!(BlockForm::from_views(&b.views()).unwrap(), b, "n={n}");
        }
    }

    #[test]
    fn half_turn() {
        let id = Matrix::identity(3);
        assert_eq!(conjugate_j(&id).unwrap(), id);
        assert_eq!(conjugate_j(&ints(&[&[1, 2], &[3, 4]])).unwrap(), ints(&[&[4, 3], &[2, 1]]));
        // X J X is diag(I, −I) at ν = 1.
        let xjx = conjugate_x(&Matrix::exchange(2)).unwrap();
        assert_eq!(xjx, ints(&[&[1, 0], &[0, -1]]));
    }

    #[test]
    fn images_of_ones_and_sigma() {
        for n in 2..=9 {
            let nu = n / 2;
            let x = Matrix::involution(n);
            let r2 = Scalar::sqrt2();
            let x1 = x.mul_vec(&Vector::ones(n));
            let xs = x.mul_vec(&Vector::sigma(n));
            let sign = upper_sign(nu);
            if n % 2 == 0 {
                let want1 = Vector::ones(nu).scale(&r2).stack(&Vector::zeros(nu));
                // X Σ = ∓√2 (0, Σ_ν)
                let want_s = Vector::zeros(nu).stack(&Vector::sigma(nu).scale(&-(&sign * &r2)));
                assert_eq!(x1, want1, "n={n}");
                assert_eq!(xs, want_s, "n={n}");
            } else {
                let want1 = Vector::ones(nu).scale(&r2).stack(&Vector::ones(1)).stack(&Vector::zeros(nu));
                // X Σ = (√2 Σ_ν, ±1, 0)
                let want_s = Vector::sigma(nu).scale(&r2).stack(&Vector::new(vec![sign])).stack(&Vector::zeros(nu));
                assert_eq!(x1, want1, "n={n}");
                assert_eq!(xs, want_s, "n={n}");
            }
        }
    }
}

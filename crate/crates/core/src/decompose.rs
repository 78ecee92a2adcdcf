//! Splitting a square matrix along the four direct sums
//! `B ⊕ A`, `S ⊕ V`, `N ⊕ M` and (even `n`) `Q ⊕ P`.

use serde::{Deserialize, Serialize};

use crate::block::conjugate_j;
use crate::error::{Error, Result};
use crate::matrix::{Matrix, Vector};
use crate::predicates::{projector, Space};
use crate::scalar::Scalar;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SplitKind {
    Ba,
    Sv,
    Nm,
    Qp,
}

impl SplitKind {
    pub const ALL: [SplitKind; 4] = [SplitKind::Ba, SplitKind::Sv, SplitKind::Nm, SplitKind::Qp];

    /// (even space, odd space).
    pub fn spaces(self) -> (Space, Space) {
        match self {
            SplitKind::Ba => (Space::B, Space::A),
            SplitKind::Sv => (Space::S, Space::V),
            SplitKind::Nm => (Space::N, Space::M),
            SplitKind::Qp => (Space::Q, Space::P),
        }
    }
}

impl std::str::FromStr for SplitKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "ba" => Ok(SplitKind::Ba),
            "sv" => Ok(SplitKind::Sv),
            "nm" => Ok(SplitKind::Nm),
            "qp" => Ok(SplitKind::Qp),
            _ => Err(Error::Parse(format!("unknown split `{s}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedPair {
    pub kind: SplitKind,
    pub even_part: Matrix,
    pub odd_part: Matrix,
}

impl GradedPair {
    pub fn recombine(&self) -> Matrix {
        &self.even_part + &self.odd_part
    }
}

/// `½(M + JMJ) ∈ B_n`, `½(M − JMJ) ∈ A_n`.
pub fn split_ba(m: &Matrix) -> Result<GradedPair> {
    let rotated = conjugate_j(m)?;
    let half = Scalar::from_ratio(1, 2);
    Ok(GradedPair {
        kind: SplitKind::Ba,
        even_part: (m + &rotated).scale(&half),
        odd_part: (m - &rotated).scale(&half),
    })
}

fn projector_split(m: &Matrix, y: &Vector, kind: SplitKind) -> GradedPair {
    let n = m.rows();
    let p = projector(y);
    let q = &Matrix::identity(n) - &p;
    let pm = &p * m;
    let qm = &q * m;
    GradedPair {
        kind,
        even_part: &(&pm * &p) + &(&qm * &q),
        odd_part: &(&pm * &q) + &(&qm * &p),
    }
}

/// Projector split with `P = 1 1ᵀ / n`: `PMP + (I−P)M(I−P) ∈ S_n`, the cross terms in `V_n`.
pub fn split_sv(m: &Matrix) -> Result<GradedPair> {
    let n = m.require_square()?;
    Ok(projector_split(m, &Vector::ones(n), SplitKind::Sv))
}

/// Weight `w = 1ᵀM1 / n²` of the semimagic part, so callers can peel off `w·E_n`.
pub fn semimagic_weight(m: &Matrix) -> Result<Scalar> {
    let n = m.require_square()?;
    Ok(&m.sum() / &Scalar::from_int((n * n) as i64))
}

/// Projector split with `P = Σ Σᵀ / n`: even part in `N_n`, odd part in `M_n`.
pub fn split_nm(m: &Matrix) -> Result<GradedPair> {
    let n = m.require_square()?;
    Ok(projector_split(m, &Vector::sigma(n), SplitKind::Nm))
}

/// Quarter-block halves: `½[[A+D, B+C], [B+C, A+D]] ∈ Q_n` and
/// `½[[A−D, B−C], [−(B−C), −(A−D)]] ∈ P_n`.
pub fn split_qp(m: &Matrix) -> Result<GradedPair> {
    let n = m.require_square()?;
    if n % 2 == 1 {
        return Err(Error::OddDimension { what: "Q/P split", n });
    }
    let nu = n / 2;
    let (a, b) = (m.submatrix(0, 0, nu, nu), m.submatrix(0, nu, nu, nu));
    let (c, d) = (m.submatrix(nu, 0, nu, nu), m.submatrix(nu, nu, nu, nu));
    let half = Scalar::from_ratio(1, 2);
    let apd = (&a + &d).scale(&half);
    let bpc = (&b + &c).scale(&half);
    let amd = (&a - &d).scale(&half);
    let bmc = (&b - &c).scale(&half);
    Ok(GradedPair {
        kind: SplitKind::Qp,
        even_part: Matrix::from_blocks(&[vec![apd.clone(), bpc.clone()], vec![bpc, apd]])?,
        odd_part: Matrix::from_blocks(&[vec![amd.clone(), bmc.clone()], vec![-&bmc, -&amd]])?,
    })
}

pub fn split(m: &Matrix, kind: SplitKind) -> Result<GradedPair> {
    match kind {
        SplitKind::Ba => split_ba(m),
        SplitKind::Sv => split_sv(m),
        SplitKind::Nm => split_nm(m),
        SplitKind::Qp => split_qp(m),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(rows: &[&[i64]]) -> Matrix {
        Matrix::from_int_rows(rows)
    }

    fn halves(rows: &[&[i64]]) -> Matrix {
        ints(rows).scale(&Scalar::from_ratio(1, 2))
    }

    #[test]
    fn ba_of_small_matrix() {
        let p = split_ba(&ints(&[&[1, 2], &[3, 4]])).unwrap();
        assert_eq!(p.even_part, halves(&[&[5, 5], &[5, 5]]));
        assert_eq!(p.odd_part, halves(&[&[-3, -1], &[1, 3]]));
    }

    #[test]
    fn qp_matches_ba_at_n2() {
        let m = ints(&[&[1, 2], &[3, 4]]);
        let p = split_qp(&m).unwrap();
        assert_eq!(p.even_part, halves(&[&[5, 5], &[5, 5]]));
        assert_eq!(p.odd_part, halves(&[&[-3, -1], &[1, 3]]));
    }

    #[test]
    fn e_lies_in_every_even_space() {
        for kind in SplitKind::ALL {
            let e = Matrix::ones(4, 4);
            let p = split(&e, kind).unwrap();
            assert_eq!(p.even_part, e, "{kind:?}");
            assert!(p.odd_part.is_zero(), "{kind:?}");
        }
    }

    #[test]
    fn sigma_outer_is_semimagic() {
        let m = ints(&[&[1, -1], &[-1, 1]]);
        let p = split_sv(&m).unwrap();
        assert_eq!(p.even_part, m);
        assert!(p.odd_part.is_zero());
    }

    #[test]
    fn e2_under_nm() {
        let e = Matrix::ones(2, 2);
        let p = split_nm(&e).unwrap();
        assert_eq!(p.even_part, e);
        assert!(p.odd_part.is_zero());
    }

    #[test]
    fn odd_space_members_are_fixed() {
        let a = ints(&[&[1, 0, 2], &[3, 0, -3], &[-2, 0, -1]]);
        assert!(Space::A.contains(&a).unwrap());
        let p = split_ba(&a).unwrap();
        assert!(p.even_part.is_zero());
        assert_eq!(p.odd_part, a);

        let pm = ints(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, -1, 0], &[0, 0, 0, -1]]);
        let p = split_qp(&pm).unwrap();
        assert!(p.even_part.is_zero());
        assert_eq!(p.odd_part, pm);
    }

    #[test]
    fn parts_land_in_their_spaces() {
        for n in 2..=6 {
            let m = Matrix::from_fn(n, n, |i, j| Scalar::from_int(((i * 3 + j * j * 5) % 7) as i64 - 3));
            for kind in SplitKind::ALL {
                if kind == SplitKind::Qp && n % 2 == 1 {
                    assert!(split(&m, kind).is_err());
                    continue;
                }
                let p = split(&m, kind).unwrap();
                let (even, odd) = kind.spaces();
                assert_eq!(p.recombine(), m);
                assert!(even.contains(&p.even_part).unwrap(), "{kind:?} even n={n}");
                assert!(odd.contains(&p.odd_part).unwrap(), "{kind:?} odd n={n}");
            }
        }
    }

    #[test]
    fn weight_of_semimagic_part() {
        let e = Matrix::ones(3, 3).scale(&Scalar::from_int(2));
        assert_eq!(semimagic_weight(&e).unwrap(), Scalar::from_int(2));
    }
}

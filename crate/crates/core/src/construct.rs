//! Generators for every symmetry space from its block representation, plus
//! random admissible parameters for each.
//!
//! All block formulas are written for the conjugate `C` and the result is
//! `X_n C X_n`. `±` is [`upper_sign`]`(ν)`.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::block::{from_conjugate, upper_sign};
use crate::decompose::{split_nm, split_sv};
use crate::error::{Error, Result};
use crate::matrix::{Matrix, Vector};
use crate::predicates::{projector, Space};
use crate::scalar::Scalar;

/// Constructor type tags as used on the command line.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    A,
    B,
    S,
    V,
    N,
    M,
    R,
    P,
    Q,
    Mps,
    Nqs,
    Rv,
}

impl Kind {
    pub const ALL: [Kind; 12] = [
        Kind::A,
        Kind::B,
        Kind::S,
        Kind::V,
        Kind::N,
        Kind::M,
        Kind::R,
        Kind::P,
        Kind::Q,
        Kind::Mps,
        Kind::Nqs,
        Kind::Rv,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Kind::A => "a",
            Kind::B => "b",
            Kind::S => "s",
            Kind::V => "v",
            Kind::N => "n",
            Kind::M => "m",
            Kind::R => "r",
            Kind::P => "p",
            Kind::Q => "q",
            Kind::Mps => "mps",
            Kind::Nqs => "nqs",
            Kind::Rv => "rv",
        }
    }

    /// The space every weightless output lies in.
    pub fn space(self) -> Space {
        match self {
            Kind::A => Space::A,
            Kind::B => Space::B,
            Kind::S => Space::S,
            Kind::V => Space::V,
            Kind::N => Space::N,
            Kind::M => Space::M,
            Kind::R => Space::R,
            Kind::P => Space::P,
            Kind::Q => Space::Q,
            Kind::Mps => Space::Mps,
            Kind::Nqs => Space::Nqs,
            Kind::Rv => Space::Rv,
        }
    }

    pub fn requires_even(self) -> bool {
        matches!(self, Kind::P | Kind::Q | Kind::Mps | Kind::Nqs)
    }
}

impl std::fmt::Display for Kind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.tag())
    }
}

impl std::str::FromStr for Kind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Kind::ALL
            .into_iter()
            .find(|k| k.tag().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown construction type `{s}`")))
    }
}

/// Serializes a matrix as a list of rows of exact scalar strings.
mod grid {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(m: &Matrix, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<Scalar>> = (0..m.rows()).map(|i| m.row_vector(i).into_entries()).collect();
        rows.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Matrix, D::Error> {
        let rows = Vec::<Vec<Scalar>>::deserialize(d)?;
        Matrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}

/// Free parameters of one block representation. Matrices are written as
/// arrays of rows, scalars and vector entries as exact strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "form", rename_all = "snake_case")]
pub enum Params {
    A {
        #[serde(with = "grid")]
        phi: Matrix,
        #[serde(with = "grid")]
        psi: Matrix,
    },
    B {
        #[serde(with = "grid")]
        upsilon: Matrix,
        #[serde(with = "grid")]
        omega: Matrix,
    },
    SEven {
        #[serde(with = "grid")]
        y: Matrix,
        #[serde(with = "grid")]
        v: Matrix,
        #[serde(with = "grid")]
        w: Matrix,
        #[serde(with = "grid")]
        z: Matrix,
    },
    SOdd {
        #[serde(with = "grid")]
        y: Matrix,
        #[serde(with = "grid")]
        v: Matrix,
        #[serde(with = "grid")]
        w: Matrix,
        #[serde(with = "grid")]
        z: Matrix,
        weight: Scalar,
    },
    VEven {
        #[serde(with = "grid")]
        y: Matrix,
        a: Vector,
        b: Vector,
    },
    VOdd {
        v: Vector,
        x: Vector,
        y: Vector,
        z: Vector,
    },
    NEven {
        #[serde(with = "grid")]
        y: Matrix,
        #[serde(with = "grid")]
        v: Matrix,
        #[serde(with = "grid")]
        w: Matrix,
        #[serde(with = "grid")]
        z: Matrix,
    },
    NOdd {
        #[serde(with = "grid")]
        y: Matrix,
        #[serde(with = "grid")]
        v: Matrix,
        #[serde(with = "grid")]
        w: Matrix,
        #[serde(with = "grid")]
        z: Matrix,
        lambda: Scalar,
    },
    MEven {
        a: Vector,
        b: Vector,
        #[serde(with = "grid")]
        z: Matrix,
    },
    MOdd {
        v: Vector,
        x: Vector,
        y: Vector,
        z: Vector,
    },
    R {
        gamma: Scalar,
        x: Vector,
        z: Vector,
        #[serde(with = "grid")]
        block: Matrix,
    },
    P {
        #[serde(with = "grid")]
        a: Matrix,
        #[serde(with = "grid")]
        b: Matrix,
    },
    Q {
        #[serde(with = "grid")]
        a: Matrix,
        #[serde(with = "grid")]
        b: Matrix,
    },
    MpsBlock {
        a: Vector,
        b: Vector,
        #[serde(with = "grid")]
        z: Matrix,
    },
    MpsVectors {
        gamma: Vector,
        delta: Vector,
    },
    Nqs {
        #[serde(with = "grid")]
        y: Matrix,
        #[serde(with = "grid")]
        z: Matrix,
        #[serde(with = "grid")]
        v: Matrix,
        #[serde(with = "grid")]
        w: Matrix,
    },
    Rv {
        a: Vector,
        b: Vector,
        #[serde(default)]
        weight: Scalar,
    },
}

impl Params {
    pub fn kind(&self) -> Kind {
        match self {
            Params::A { .. } => Kind::A,
            Params::B { .. } => Kind::B,
            Params::SEven { .. } | Params::SOdd { .. } => Kind::S,
            Params::VEven { .. } | Params::VOdd { .. } => Kind::V,
            Params::NEven { .. } | Params::NOdd { .. } => Kind::N,
            Params::MEven { .. } | Params::MOdd { .. } => Kind::M,
            Params::R { .. } => Kind::R,
            Params::P { .. } => Kind::P,
            Params::Q { .. } => Kind::Q,
            Params::MpsBlock { .. } | Params::MpsVectors { .. } => Kind::Mps,
            Params::Nqs { .. } => Kind::Nqs,
            Params::Rv { .. } => Kind::Rv,
        }
    }
}

/// Builds the matrix described by `params` at dimension `n`.
pub fn build(params: &Params, n: usize) -> Result<Matrix> {
    match params {
        Params::A { phi, psi } => make_a(phi, psi, n),
        Params::B { upsilon, omega } => make_b(upsilon, omega, n),
        Params::SEven { y, v, w, z } => require_parity(n, 0, "s_even").and_then(|_| make_s_even(y, v, w, z)),
        Params::SOdd { y, v, w, z, weight } => {
            require_parity(n, 1, "s_odd").and_then(|_| make_s_odd(y, v, w, z, weight))
        }
        Params::VEven { y, a, b } => require_parity(n, 0, "v_even").and_then(|_| make_v_even(y, a, b)),
        Params::VOdd { v, x, y, z } => require_parity(n, 1, "v_odd").and_then(|_| make_v_odd(v, x, y, z)),
        Params::NEven { y, v, w, z } => require_parity(n, 0, "n_even").and_then(|_| make_n_even(y, v, w, z)),
        Params::NOdd { y, v, w, z, lambda } => {
            require_parity(n, 1, "n_odd").and_then(|_| make_n_odd(y, v, w, z, lambda))
        }
        Params::MEven { a, b, z } => require_parity(n, 0, "m_even").and_then(|_| make_m_even(a, b, z)),
        Params::MOdd { v, x, y, z } => require_parity(n, 1, "m_odd").and_then(|_| make_m_odd(v, x, y, z)),
        Params::R { gamma, x, z, block } => make_r(gamma, x, z, block, n),
        Params::P { a, b } => same_n(make_p(a, b)?, n),
        Params::Q { a, b } => same_n(make_q(a, b)?, n),
        Params::MpsBlock { a, b, z } => same_n(make_mps_block(a, b, z)?, n),
        Params::MpsVectors { gamma, delta } => same_n(make_mps_vectors(gamma, delta)?, n),
        Params::Nqs { y, z, v, w } => same_n(make_nqs(y, z, v, w)?, n),
        Params::Rv { a, b, weight } => make_rv(a, b, n, weight),
    }
}

fn require_parity(n: usize, parity: usize, form: &str) -> Result<()> {
    if n % 2 != parity || n == 0 {
        return Err(Error::Precondition(format!("parameter form `{form}` does not fit n = {n}")));
    }
    Ok(())
}

fn same_n(m: Matrix, n: usize) -> Result<Matrix> {
    if m.rows() != n {
        return Err(Error::DimensionMismatch(format!("parameters give n = {}, asked for {n}", m.rows())));
    }
    Ok(m)
}

fn check_shape(m: &Matrix, rows: usize, cols: usize, name: &str) -> Result<()> {
    if m.rows() != rows || m.cols() != cols {
        return Err(Error::DimensionMismatch(format!(
            "{name} is {}x{}, expected {rows}x{cols}",
            m.rows(),
            m.cols()
        )));
    }
    Ok(())
}

fn check_len(v: &Vector, len: usize, name: &str) -> Result<()> {
    if v.len() != len {
        return Err(Error::DimensionMismatch(format!("{name} has length {}, expected {len}", v.len())));
    }
    Ok(())
}

fn precondition(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Precondition(what.to_string()))
    }
}

fn require_member(m: &Matrix, space: Space, name: &str) -> Result<()> {
    precondition(space.contains(m)?, &format!("{name} must lie in {space}_{}", m.rows()))
}

/// A square `ν×ν` block size from a parameter matrix, rejecting `ν = 0`.
fn nu_of(m: &Matrix, name: &str) -> Result<usize> {
    let nu = m.require_square()?;
    if nu == 0 {
        return Err(Error::InvalidDimension(0));
    }
    check_shape(m, nu, nu, name)?;
    Ok(nu)
}

fn two_by_two(y: Matrix, vt: Matrix, w: Matrix, z: Matrix) -> Result<Matrix> {
    from_conjugate(&Matrix::from_blocks(&[vec![y, vt], vec![w, z]])?)
}

#[allow(clippy::too_many_arguments)]
fn three_by_three(
    y: Matrix,
    v: Vector,
    vt: Matrix,
    yt: Vector,
    alpha: Scalar,
    zt: Vector,
    w: Matrix,
    x: Vector,
    z: Matrix,
) -> Result<Matrix> {
    from_conjugate(&Matrix::from_blocks(&[
        vec![y, Matrix::column(&v), vt],
        vec![Matrix::row(&yt), Matrix::scalar(alpha), Matrix::row(&zt)],
        vec![w, Matrix::column(&x), z],
    ])?)
}

fn int(v: i64) -> Scalar {
    Scalar::from_int(v)
}

/// `X [[O, Ψ], [Φ, O]] X`, an element of `A_n`. For odd `n`, `Φ` is `ν×(ν+1)`
/// and `Ψ` is `(ν+1)×ν`.
pub fn make_a(phi: &Matrix, psi: &Matrix, n: usize) -> Result<Matrix> {
    if n == 0 {
        return Err(Error::InvalidDimension(0));
    }
    let nu = n / 2;
    let lead = n - nu;
    check_shape(phi, nu, lead, "Φ")?;
    check_shape(psi, lead, nu, "Ψ")?;
    let c = Matrix::from_blocks(&[
        vec![Matrix::zero(lead), psi.clone()],
        vec![phi.clone(), Matrix::zero(nu)],
    ])?;
    from_conjugate(&c)
}

/// `X diag(Υ, Ω) X`, an element of `B_n`.
pub fn make_b(upsilon: &Matrix, omega: &Matrix, n: usize) -> Result<Matrix> {
    if n == 0 {
        return Err(Error::InvalidDimension(0));
    }
    let nu = n / 2;
    let lead = n - nu;
    check_shape(upsilon, lead, lead, "Υ")?;
    check_shape(omega, nu, nu, "Ω")?;
    let c = Matrix::from_blocks(&[
        vec![upsilon.clone(), Matrix::zeros(lead, nu)],
        vec![Matrix::zeros(nu, lead), omega.clone()],
    ])?;
    from_conjugate(&c)
}

/// `n = 2ν`: `X [[Y, Vᵀ], [W, Z]] X` with `Y ∈ S_ν`, `V 1 = W 1 = 0`.
/// The weight of the result is half the weight of `Y`.
pub fn make_s_even(y: &Matrix, v: &Matrix, w: &Matrix, z: &Matrix) -> Result<Matrix> {
    let nu = nu_of(y, "Y")?;
    for (m, name) in [(v, "V"), (w, "W"), (z, "Z")] {
        check_shape(m, nu, nu, name)?;
    }
    require_member(y, Space::S, "Y")?;
    let ones = Vector::ones(nu);
    precondition(v.mul_vec(&ones).is_zero(), "V must have zero row sums")?;
    precondition(w.mul_vec(&ones).is_zero(), "W must have zero row sums")?;
    two_by_two(y.clone(), v.transpose(), w.clone(), z.clone())
}

/// `n = 2ν+1` with free `V, W, Y, Z` and weight `w`.
pub fn make_s_odd(y: &Matrix, v: &Matrix, w: &Matrix, z: &Matrix, weight: &Scalar) -> Result<Matrix> {
    let nu = y.require_square()?;
    for (m, name) in [(v, "V"), (w, "W"), (z, "Z")] {
        check_shape(m, nu, nu, name)?;
    }
    let r2 = Scalar::sqrt2();
    let ones = Vector::ones(nu);
    let y1 = y.mul_vec(&ones);
    let yt1 = y.transpose().mul_vec(&ones);
    let w1 = ones.scale(weight);
    three_by_three(
        y + &Matrix::ones(nu, nu).scale(&(weight * &int(2))),
        (&w1 - &y1).scale(&r2),
        v.transpose(),
        (&w1 - &yt1).scale(&r2),
        weight + &(&int(2) * &ones.dot(&y1)),
        v.mul_vec(&ones).scale(&-&r2),
        w.clone(),
        w.mul_vec(&ones).scale(&-&r2),
        z.clone(),
    )
}

/// `n = 2ν`: `X [[Y, 1aᵀ], [b1ᵀ, O]] X` with `Y ∈ V_ν`.
pub fn make_v_even(y: &Matrix, a: &Vector, b: &Vector) -> Result<Matrix> {
    let nu = nu_of(y, "Y")?;
    check_len(a, nu, "a")?;
    check_len(b, nu, "b")?;
    require_member(y, Space::V, "Y")?;
    let ones = Vector::ones(nu);
    two_by_two(y.clone(), Matrix::outer(&ones, a), Matrix::outer(b, &ones), Matrix::zero(nu))
}

/// `n = 2ν+1 ≥ 3` with free `v, x, y, z`; the top-left block and the centre
/// entry are determined by `v + y`.
pub fn make_v_odd(v: &Vector, x: &Vector, y: &Vector, z: &Vector) -> Result<Matrix> {
    let nu = v.len();
    if nu == 0 {
        return Err(Error::Precondition("V_1 = {0} has no block parameters".into()));
    }
    for (u, name) in [(x, "x"), (y, "y"), (z, "z")] {
        check_len(u, nu, name)?;
    }
    let r2 = Scalar::sqrt2();
    let ones = Vector::ones(nu);
    let t = ones.dot(&(v + y));
    let scale = Scalar::from_ratio(1, 2 * nu as i64 - 1);
    let top_left = &(&Matrix::outer(v, &ones) + &Matrix::outer(&ones, y)).scale(&r2)
        - &Matrix::ones(nu, nu).scale(&(&(&int(2) * &r2) * &(&scale * &t)));
    three_by_three(
        top_left,
        v.clone(),
        Matrix::outer(&ones, z).scale(&r2),
        y.clone(),
        &(&r2 * &scale) * &t,
        z.clone(),
        Matrix::outer(x, &ones).scale(&r2),
        x.clone(),
        Matrix::zero(nu),
    )
}

/// `n = 2ν`: `X [[Y, Vᵀ], [W, Z]] X` with `VᵀΣ = WᵀΣ = 0` and `Z ∈ N_ν`.
pub fn make_n_even(y: &Matrix, v: &Matrix, w: &Matrix, z: &Matrix) -> Result<Matrix> {
    let nu = nu_of(y, "Y")?;
    for (m, name) in [(v, "V"), (w, "W"), (z, "Z")] {
        check_shape(m, nu, nu, name)?;
    }
    let sigma = Vector::sigma(nu);
    precondition(v.transpose().mul_vec(&sigma).is_zero(), "VᵀΣ must vanish")?;
    precondition(w.transpose().mul_vec(&sigma).is_zero(), "WᵀΣ must vanish")?;
    require_member(z, Space::N, "Z")?;
    two_by_two(y.clone(), v.transpose(), w.clone(), z.clone())
}

/// `n = 2ν+1` with free `V, W, Y, Z` and `λ`. The result satisfies
/// `M Σ = Mᵀ Σ = nλ Σ`; at `λ = 1`, zero blocks give `Σ Σᵀ`.
pub fn make_n_odd(y: &Matrix, v: &Matrix, w: &Matrix, z: &Matrix, lambda: &Scalar) -> Result<Matrix> {
    let nu = y.require_square()?;
    for (m, name) in [(v, "V"), (w, "W"), (z, "Z")] {
        check_shape(m, nu, nu, name)?;
    }
    let r2 = Scalar::sqrt2();
    let pm = &upper_sign(nu) * &r2;
    let sigma = Vector::sigma(nu);
    let ys = y.mul_vec(&sigma);
    let yts = y.transpose().mul_vec(&sigma);
    let ls = sigma.scale(lambda);
    three_by_three(
        y + &Matrix::outer(&sigma, &sigma).scale(&(lambda * &int(2))),
        (&ls - &ys).scale(&pm),
        v.transpose(),
        (&ls - &yts).scale(&pm),
        lambda + &(&int(2) * &sigma.dot(&ys)),
        v.mul_vec(&sigma).scale(&-&pm),
        w.clone(),
        w.mul_vec(&sigma).scale(&-&pm),
        z.clone(),
    )
}

/// `n = 2ν`: `X [[O, aΣᵀ], [Σbᵀ, Z]] X` with `Z ∈ M_ν`.
pub fn make_m_even(a: &Vector, b: &Vector, z: &Matrix) -> Result<Matrix> {
    let nu = nu_of(z, "Z")?;
    check_len(a, nu, "a")?;
    check_len(b, nu, "b")?;
    require_member(z, Space::M, "Z")?;
    let sigma = Vector::sigma(nu);
    two_by_two(Matrix::zero(nu), Matrix::outer(a, &sigma), Matrix::outer(&sigma, b), z.clone())
}

/// `n = 2ν+1 ≥ 3` with free `v, x, y, z`.
pub fn make_m_odd(v: &Vector, x: &Vector, y: &Vector, z: &Vector) -> Result<Matrix> {
    let nu = v.len();
    if nu == 0 {
        return Err(Error::Precondition("M_1 = {0} has no block parameters".into()));
    }
    for (u, name) in [(x, "x"), (y, "y"), (z, "z")] {
        check_len(u, nu, name)?;
    }
    let pm = &upper_sign(nu) * &Scalar::sqrt2();
    let sigma = Vector::sigma(nu);
    let t = &sigma.dot(&(v + y)) * &Scalar::from_ratio(1, 2 * nu as i64 - 1);
    let ss = Matrix::outer(&sigma, &sigma);
    let top_left = &(&Matrix::outer(v, &sigma) + &Matrix::outer(&sigma, y)).scale(&pm)
        - &ss.scale(&(&(&int(2) * &pm) * &t));
    three_by_three(
        top_left,
        v.clone(),
        Matrix::outer(&sigma, z).scale(&pm),
        y.clone(),
        &pm * &t,
        z.clone(),
        Matrix::outer(x, &sigma).scale(&pm),
        x.clone(),
        Matrix::zero(nu),
    )
}

/// Elements of `R_n` from `γ`, `x`, `z` and a free `ν×ν` block `Z`.
pub fn make_r(gamma: &Scalar, x: &Vector, z: &Vector, block: &Matrix, n: usize) -> Result<Matrix> {
    if n == 0 {
        return Err(Error::InvalidDimension(0));
    }
    let nu = n / 2;
    check_len(x, nu, "x")?;
    check_len(z, nu, "z")?;
    check_shape(block, nu, nu, "Z")?;
    let ones = Vector::ones(nu);
    let e = Matrix::ones(nu, nu);
    if n.is_multiple_of(2) {
        return two_by_two(e.scale(gamma), Matrix::outer(&ones, z), Matrix::outer(x, &ones), block.clone());
    }
    let r2 = Scalar::sqrt2();
    three_by_three(
        e.scale(&(&r2 * gamma)),
        ones.scale(gamma),
        Matrix::outer(&ones, z).scale(&r2),
        ones.scale(gamma),
        gamma * &Scalar::frac_1_sqrt2(),
        z.clone(),
        Matrix::outer(x, &ones).scale(&r2),
        x.clone(),
        block.clone(),
    )
}

/// `[[A, B], [−B, −A]]`, weightless (P).
pub fn make_p(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    let nu = nu_of(a, "A")?;
    check_shape(b, nu, nu, "B")?;
    Matrix::from_blocks(&[vec![a.clone(), b.clone()], vec![-b, -a]])
}

/// `[[A, B], [B, A]]`, property (Q).
pub fn make_q(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    let nu = nu_of(a, "A")?;
    check_shape(b, nu, nu, "B")?;
    Matrix::from_blocks(&[vec![a.clone(), b.clone()], vec![b.clone(), a.clone()]])
}

/// Vectors allowed in the off-diagonal blocks of a most perfect square:
/// orthogonal to `1_ν` with `J a = ∓a`.
fn check_mps_vector(a: &Vector, name: &str) -> Result<()> {
    let nu = a.len();
    precondition(a.sum().is_zero(), &format!("{name} must be orthogonal to 1"))?;
    let expected = a.scale(&-upper_sign(nu));
    precondition(
        a.reversed() == expected,
        &format!("{name} must satisfy J{name} = {}{name} for ν = {nu}", if nu.is_multiple_of(2) { "-" } else { "+" }),
    )
}

/// `X [[O, aΣᵀ], [Σbᵀ, Z]] X` with `a, b ⟂ 1`, `Ja = ∓a`, `Jb = ∓b` and
/// `Z ∈ A_ν ∩ M_ν`: a weightless most perfect square of order `2ν`.
pub fn make_mps_block(a: &Vector, b: &Vector, z: &Matrix) -> Result<Matrix> {
    let nu = nu_of(z, "Z")?;
    check_len(a, nu, "a")?;
    check_len(b, nu, "b")?;
    check_mps_vector(a, "a")?;
    check_mps_vector(b, "b")?;
    require_member(z, Space::A, "Z")?;
    require_member(z, Space::M, "Z")?;
    let sigma = Vector::sigma(nu);
    two_by_two(Matrix::zero(nu), Matrix::outer(a, &sigma), Matrix::outer(&sigma, b), z.clone())
}

/// Checks `γ = (g, ∓g)` (with `g ⟂ 1` when `ν` is odd) and returns `g`.
fn mps_half(v: &Vector, name: &str) -> Result<Vector> {
    let n = v.len();
    if n == 0 || n % 2 == 1 {
        return Err(Error::OddDimension { what: "most perfect vectors", n });
    }
    let nu = n / 2;
    let head = Vector::new(v.entries()[..nu].to_vec());
    let tail = Vector::new(v.entries()[nu..].to_vec());
    precondition(
        tail == head.scale(&-upper_sign(nu)),
        &format!("{name} must have the form (g, {}g)", if nu.is_multiple_of(2) { "-" } else { "+" }),
    )?;
    if nu % 2 == 1 {
        precondition(head.sum().is_zero(), &format!("the halves of {name} must be orthogonal to 1"))?;
    }
    Ok(head)
}

/// `M = γ Σᵀ + Σ δᵀ` for admissible `γ, δ` of length `n = 2ν`.
pub fn make_mps_vectors(gamma: &Vector, delta: &Vector) -> Result<Matrix> {
    check_len(delta, gamma.len(), "δ")?;
    mps_half(gamma, "γ")?;
    mps_half(delta, "δ")?;
    let sigma = Vector::sigma(gamma.len());
    Ok(&Matrix::outer(gamma, &sigma) + &Matrix::outer(&sigma, delta))
}

/// `γ = M Σ / n`, `δ = Mᵀ Σ / n`.
pub fn extract_mps_vectors(m: &Matrix) -> Result<(Vector, Vector)> {
    let n = m.require_square()?;
    let sigma = Vector::sigma(n);
    let inv = Scalar::from_ratio(1, n as i64);
    Ok((m.mul_vec(&sigma).scale(&inv), m.transpose().mul_vec(&sigma).scale(&inv)))
}

/// `X [[Y, Vᵀ], [W, Z]] X` with `Y ∈ B_ν ∩ S_ν`, `Z ∈ B_ν ∩ N_ν` and
/// `V, W ∈ A_ν` annihilating `1_ν` on the right and `Σ_ν` on the left.
pub fn make_nqs(y: &Matrix, z: &Matrix, v: &Matrix, w: &Matrix) -> Result<Matrix> {
    let nu = nu_of(y, "Y")?;
    for (m, name) in [(v, "V"), (w, "W"), (z, "Z")] {
        check_shape(m, nu, nu, name)?;
    }
    require_member(y, Space::Bs, "Y")?;
    require_member(z, Space::B, "Z")?;
    require_member(z, Space::N, "Z")?;
    let (ones, sigma) = (Vector::ones(nu), Vector::sigma(nu));
    for (m, name) in [(v, "V"), (w, "W")] {
        require_member(m, Space::A, name)?;
        precondition(m.mul_vec(&ones).is_zero(), &format!("{name} 1 must vanish"))?;
        precondition(m.transpose().mul_vec(&sigma).is_zero(), &format!("{name}ᵀ Σ must vanish"))?;
    }
    two_by_two(y.clone(), v.transpose(), w.clone(), z.clone())
}

/// Reversible square: the `R_n ∩ V_n` member built from `a, b`, plus `w E_n`.
pub fn make_rv(a: &Vector, b: &Vector, n: usize, weight: &Scalar) -> Result<Matrix> {
    if n == 0 {
        return Err(Error::InvalidDimension(0));
    }
    let nu = n / 2;
    check_len(a, nu, "a")?;
    check_len(b, nu, "b")?;
    let ones = Vector::ones(nu);
    let base = if n.is_multiple_of(2) {
        two_by_two(Matrix::zero(nu), Matrix::outer(&ones, a), Matrix::outer(b, &ones), Matrix::zero(nu))?
    } else {
        let r2 = Scalar::sqrt2();
        three_by_three(
            Matrix::zero(nu),
            Vector::zeros(nu),
            Matrix::outer(&ones, a).scale(&r2),
            Vector::zeros(nu),
            Scalar::zero(),
            a.clone(),
            Matrix::outer(b, &ones).scale(&r2),
            b.clone(),
            Matrix::zero(nu),
        )?
    };
    Ok(&base + &Matrix::ones(n, n).scale(weight))
}

// ---------------------------------------------------------------------------
// Random parameters.

fn small<R: Rng + ?Sized>(rng: &mut R) -> Scalar {
    int(rng.gen_range(-9..=9))
}

pub fn random_vector<R: Rng + ?Sized>(len: usize, rng: &mut R) -> Vector {
    (0..len).map(|_| small(rng)).collect()
}

pub fn random_matrix<R: Rng + ?Sized>(rows: usize, cols: usize, rng: &mut R) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| small(rng))
}

fn random_square<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Matrix {
    random_matrix(n, n, rng)
}

/// `M − M 1 1ᵀ / ν`: zero row sums.
fn zero_row_sums(m: &Matrix) -> Matrix {
    m - &(m * &projector(&Vector::ones(m.cols())))
}

/// `M − Σ Σᵀ M / ν`: `Mᵀ Σ = 0`.
fn sigma_free_columns(m: &Matrix) -> Matrix {
    m - &(&projector(&Vector::sigma(m.rows())) * m)
}

/// Random element of `S_k` (any weight).
pub fn random_s<R: Rng + ?Sized>(k: usize, rng: &mut R) -> Matrix {
    random_member(Kind::S, k, rng).expect("S is defined for every n ≥ 1")
}

pub fn random_v<R: Rng + ?Sized>(k: usize, rng: &mut R) -> Matrix {
    random_member(Kind::V, k, rng).expect("V is defined for every n ≥ 1")
}

pub fn random_n<R: Rng + ?Sized>(k: usize, rng: &mut R) -> Matrix {
    random_member(Kind::N, k, rng).expect("N is defined for every n ≥ 1")
}

pub fn random_m<R: Rng + ?Sized>(k: usize, rng: &mut R) -> Matrix {
    random_member(Kind::M, k, rng).expect("M is defined for every n ≥ 1")
}

/// Random element of `A_k`.
pub fn random_a<R: Rng + ?Sized>(k: usize, rng: &mut R) -> Matrix {
    random_member(Kind::A, k, rng).expect("A is defined for every n ≥ 1")
}

pub fn random_b<R: Rng + ?Sized>(k: usize, rng: &mut R) -> Matrix {
    random_member(Kind::B, k, rng).expect("B is defined for every n ≥ 1")
}

/// `A_k ∩ M_k`: the odd part under `N ⊕ M` of an `A_k` member.
pub fn random_a_cap_m<R: Rng + ?Sized>(k: usize, rng: &mut R) -> Matrix {
    split_nm(&random_a(k, rng)).expect("square").odd_part
}

/// `B_k ∩ S_k`: the even part under `S ⊕ V` of a `B_k` member.
pub fn random_b_cap_s<R: Rng + ?Sized>(k: usize, rng: &mut R) -> Matrix {
    split_sv(&random_b(k, rng)).expect("square").even_part
}

/// `B_k ∩ N_k`: the even part under `N ⊕ M` of a `B_k` member.
pub fn random_b_cap_n<R: Rng + ?Sized>(k: usize, rng: &mut R) -> Matrix {
    split_nm(&random_b(k, rng)).expect("square").even_part
}

/// A vector `⟂ 1_ν` with `J a = ∓a`.
fn random_mps_vector<R: Rng + ?Sized>(nu: usize, rng: &mut R) -> Vector {
    let a0 = random_vector(nu, rng);
    let flipped = a0.reversed().scale(&-upper_sign(nu));
    let a = (&a0 + &flipped).scale(&Scalar::from_ratio(1, 2));
    let mean = &a.sum() * &Scalar::from_ratio(1, nu as i64);
    &a - &Vector::ones(nu).scale(&mean)
}

/// Admissible `(γ, δ)` for [`make_mps_vectors`] at `n = 2ν`.
pub fn random_mps_pair<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<(Vector, Vector)> {
    if n == 0 || n % 2 == 1 {
        return Err(Error::OddDimension { what: "most perfect vectors", n });
    }
    let nu = n / 2;
    let mut half = || {
        let mut g = random_vector(nu, rng);
        if nu % 2 == 1 {
            let mean = &g.sum() * &Scalar::from_ratio(1, nu as i64);
            g = &g - &Vector::ones(nu).scale(&mean);
        }
        g
    };
    let (g, d) = (half(), half());
    Ok((mps_full(&g), mps_full(&d)))
}

/// `(g, −g)` for even `ν`, `(g, g)` for odd `ν`.
pub fn mps_full(g: &Vector) -> Vector {
    g.stack(&g.scale(&-upper_sign(g.len())))
}

/// Random parameters of the given kind at dimension `n`.
pub fn random_params<R: Rng + ?Sized>(kind: Kind, n: usize, rng: &mut R) -> Result<Params> {
    if n == 0 {
        return Err(Error::InvalidDimension(0));
    }
    if kind.requires_even() && n % 2 == 1 {
        return Err(Error::OddDimension { what: kind.tag(), n });
    }
    let nu = n / 2;
    let lead = n - nu;
    let even = n.is_multiple_of(2);
    Ok(match kind {
        Kind::A => Params::A { phi: random_matrix(nu, lead, rng), psi: random_matrix(lead, nu, rng) },
        Kind::B => Params::B { upsilon: random_square(lead, rng), omega: random_square(nu, rng) },
        Kind::S if even => Params::SEven {
            y: random_s(nu, rng),
            v: zero_row_sums(&random_square(nu, rng)),
            w: zero_row_sums(&random_square(nu, rng)),
            z: random_square(nu, rng),
        },
        Kind::S => Params::SOdd {
            y: random_square(nu, rng),
            v: random_square(nu, rng),
            w: random_square(nu, rng),
            z: random_square(nu, rng),
            weight: small(rng),
        },
        Kind::V if even => Params::VEven { y: random_v(nu, rng), a: random_vector(nu, rng), b: random_vector(nu, rng) },
        Kind::V => Params::VOdd {
            v: random_vector(nu, rng),
            x: random_vector(nu, rng),
            y: random_vector(nu, rng),
            z: random_vector(nu, rng),
        },
        Kind::N if even => Params::NEven {
            y: random_square(nu, rng),
            v: sigma_free_columns(&random_square(nu, rng)),
            w: sigma_free_columns(&random_square(nu, rng)),
            z: random_n(nu, rng),
        },
        Kind::N => Params::NOdd {
            y: random_square(nu, rng),
            v: random_square(nu, rng),
            w: random_square(nu, rng),
            z: random_square(nu, rng),
            lambda: small(rng),
        },
        Kind::M if even => Params::MEven { a: random_vector(nu, rng), b: random_vector(nu, rng), z: random_m(nu, rng) },
        Kind::M => Params::MOdd {
            v: random_vector(nu, rng),
            x: random_vector(nu, rng),
            y: random_vector(nu, rng),
            z: random_vector(nu, rng),
        },
        Kind::R => Params::R {
            gamma: small(rng),
            x: random_vector(nu, rng),
            z: random_vector(nu, rng),
            block: random_square(nu, rng),
        },
        Kind::P => Params::P { a: random_square(nu, rng), b: random_square(nu, rng) },
        Kind::Q => Params::Q { a: random_square(nu, rng), b: random_square(nu, rng) },
        Kind::Mps => Params::MpsBlock {
            a: random_mps_vector(nu, rng),
            b: random_mps_vector(nu, rng),
            z: random_a_cap_m(nu, rng),
        },
        Kind::Nqs => {
            let mut vw = || {
                let a = random_a(nu, rng);
                let p1 = projector(&Vector::ones(nu));
                let ps = projector(&Vector::sigma(nu));
                let id = Matrix::identity(nu);
                &(&(&id - &ps) * &a) * &(&id - &p1)
            };
            let (v, w) = (vw(), vw());
            Params::Nqs { y: random_b_cap_s(nu, rng), z: random_b_cap_n(nu, rng), v, w }
        }
        Kind::Rv => Params::Rv { a: random_vector(nu, rng), b: random_vector(nu, rng), weight: Scalar::zero() },
    })
}

/// Random element of the kind's space. At `n = 1` the spaces are computed
/// directly: `V_1 = M_1 = A_1 = {0}`, every other space is all of `R^{1×1}`.
pub fn random_member<R: Rng + ?Sized>(kind: Kind, n: usize, rng: &mut R) -> Result<Matrix> {
    if n == 1 {
        return Ok(match kind {
            Kind::V | Kind::M | Kind::A | Kind::Rv => Matrix::zero(1),
            Kind::P | Kind::Q | Kind::Mps | Kind::Nqs => return Err(Error::OddDimension { what: kind.tag(), n }),
            _ => Matrix::scalar(small(rng)),
        });
    }
    build(&random_params(kind, n, rng)?, n)
}

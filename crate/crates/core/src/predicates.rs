//! Membership in the nine symmetry types, decided two independent ways.
//!
//! The entrywise route reads the defining identities off the matrix entries
//! (indices cyclic mod `n`). The algebraic route uses matrix products with
//! `J_n`, the projectors onto `1_n` and `Σ_n`, and the half-period shift.
//! [`classify`] runs both and refuses to answer if they disagree.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::block::conjugate_j;
use crate::error::{Error, Result};
use crate::matrix::{Matrix, Vector};
use crate::scalar::Scalar;

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Property {
    /// Semimagic: row and column sums all `n·w`.
    S,
    /// Associated: `M[i,j] + M[n+1−i, n+1−j] = 2w`.
    A,
    /// Balanced: half-turn symmetric.
    B,
    /// Row and column reverse.
    R,
    /// Vertex cross sum.
    V,
    /// 2×2 array sum `4w` plus vanishing alternating sum.
    M,
    /// Consecutive row and column alternating sums cancel.
    N,
    /// Strong pandiagonal: `M[i,j] + M[i+ν, j+ν] = 2w`.
    P,
    /// Quartered: `M[i,j] = M[i+ν, j+ν]`.
    Q,
}

impl Property {
    pub const ALL: [Property; 9] = [
        Property::S,
        Property::A,
        Property::B,
        Property::R,
        Property::V,
        Property::M,
        Property::N,
        Property::P,
        Property::Q,
    ];

    pub fn is_weighted(self) -> bool {
        matches!(self, Property::S | Property::A | Property::M | Property::P)
    }

    /// P and Q only make sense for even `n`.
    pub fn requires_even(self) -> bool {
        matches!(self, Property::P | Property::Q)
    }

    /// Whether the entrywise and algebraic routes are both genuinely defined at `n`.
    pub fn has_dual_route(self, n: usize) -> bool {
        match self {
            Property::M | Property::N | Property::P | Property::Q => n.is_multiple_of(2),
            _ => true,
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl std::str::FromStr for Property {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Property::ALL
            .into_iter()
            .find(|p| p.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown property `{s}`")))
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    Entrywise,
    Algebraic,
    /// Odd `n` for M or N: the space is defined by the algebraic conditions,
    /// which do not imply the entrywise symmetry.
    AlgebraicDefinition,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub holds: bool,
    /// `w` for S, A, M, P when the property holds.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub weight: Option<Scalar>,
    /// The common eigenvalue `λ` with `MΣ = MᵀΣ = λΣ`, for N.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub eigenvalue: Option<Scalar>,
    pub route: Route,
}

impl Verdict {
    fn fails(route: Route) -> Self {
        Verdict { holds: false, weight: None, eigenvalue: None, route }
    }

    fn holds(route: Route) -> Self {
        Verdict { holds: true, weight: None, eigenvalue: None, route }
    }

    fn weighted(w: Scalar, route: Route) -> Self {
        Verdict { holds: true, weight: Some(w), eigenvalue: None, route }
    }

    fn from_bool(holds: bool, route: Route) -> Self {
        if holds {
            Verdict::holds(route)
        } else {
            Verdict::fails(route)
        }
    }

    /// Holds with weight zero (or holds, for unweighted properties).
    pub fn holds_weightless(&self) -> bool {
        self.holds && self.weight.as_ref().is_none_or(Scalar::is_zero)
    }

    /// Same decision and recovered quantities, ignoring the route tag.
    pub fn agrees_with(&self, other: &Verdict) -> bool {
        self.holds == other.holds && self.weight == other.weight && self.eigenvalue == other.eigenvalue
    }
}

fn int(v: i64) -> Scalar {
    Scalar::from_int(v)
}

fn alt(i: usize) -> Scalar {
    int(if i.is_multiple_of(2) { 1 } else { -1 })
}

fn require_even(n: usize, what: &'static str) -> Result<usize> {
    if n.is_multiple_of(2) {
        Ok(n / 2)
    } else {
        Err(Error::OddDimension { what, n })
    }
}

/// Entrywise test of one property. Weighted properties recover `w` from a
/// single probe and then confirm every identity.
pub fn check_entrywise(m: &Matrix, prop: Property) -> Result<Verdict> {
    let n = m.require_square()?;
    let route = Route::Entrywise;
    let at = |i: usize, j: usize| m.get_cyclic(i, j);
    let verdict = match prop {
        Property::S => {
            let target = m.row_vector(0).sum();
            let rows_ok = (0..n).all(|i| m.row_vector(i).sum() == target);
            let cols_ok = (0..n).all(|j| m.col_vector(j).sum() == target);
            if rows_ok && cols_ok {
                Verdict::weighted(&target / &int(n as i64), route)
            } else {
                Verdict::fails(route)
            }
        }
        Property::A => {
            let target = m.get(0, 0) + m.get(n - 1, n - 1);
            let ok = (0..n).all(|i| (0..n).all(|j| m.get(i, j) + m.get(n - 1 - i, n - 1 - j) == target));
            if ok {
                Verdict::weighted(&target / &int(2), route)
            } else {
                Verdict::fails(route)
            }
        }
        Property::B => Verdict::from_bool(
            (0..n).all(|i| (0..n).all(|j| m.get(i, j) == m.get(n - 1 - i, n - 1 - j))),
            route,
        ),
        Property::R => {
            // Mirror sums along each row equal the k = 1 pair, likewise for columns.
            let rows_ok = (0..n).all(|i| {
                let reference = m.get(i, 0) + m.get(i, n - 1);
                (0..n).all(|j| m.get(i, j) + m.get(i, n - 1 - j) == reference)
            });
            let cols_ok = (0..n).all(|j| {
                let reference = m.get(0, j) + m.get(n - 1, j);
                (0..n).all(|i| m.get(i, j) + m.get(n - 1 - i, j) == reference)
            });
            Verdict::from_bool(rows_ok && cols_ok, route)
        }
        Property::V => {
            // Adjacent 2×2 cross differences span all vertex quadruples.
            let ok = (0..n.saturating_sub(1)).all(|j| {
                (0..n - 1).all(|k| (m.get(j, k) + m.get(j + 1, k + 1) - m.get(j, k + 1) - m.get(j + 1, k)).is_zero())
            });
            Verdict::from_bool(ok, route)
        }
        Property::M if n % 2 == 1 => return algebraic_definition(m, prop),
        Property::N if n % 2 == 1 => return algebraic_definition(m, prop),
        Property::M => array_sum_property(m),
        Property::N => {
            let cols_ok = (0..n).all(|j| {
                (0..n).map(|i| &alt(i) * &(at(i, j) + at(i, j + 1))).sum::<Scalar>().is_zero()
            });
            let rows_ok = (0..n).all(|j| {
                (0..n).map(|i| &alt(i) * &(at(j, i) + at(j + 1, i))).sum::<Scalar>().is_zero()
            });
            if cols_ok && rows_ok {
                let lambda: Scalar = (0..n).map(|j| &alt(j) * m.get(0, j)).sum();
                Verdict { holds: true, weight: None, eigenvalue: Some(lambda), route }
            } else {
                Verdict::fails(route)
            }
        }
        Property::P => {
            let nu = require_even(n, "property (P)")?;
            let target = m.get(0, 0) + m.get(nu, nu);
            let ok = (0..n).all(|i| (0..n).all(|j| at(i, j) + at(i + nu, j + nu) == target));
            if ok {
                Verdict::weighted(&target / &int(2), route)
            } else {
                Verdict::fails(route)
            }
        }
        Property::Q => {
            let nu = require_even(n, "property (Q)")?;
            Verdict::from_bool((0..n).all(|i| (0..n).all(|j| at(i, j) == at(i + nu, j + nu))), route)
        }
    };
    Ok(verdict)
}

fn algebraic_definition(m: &Matrix, prop: Property) -> Result<Verdict> {
    let mut v = check_algebraic(m, prop)?;
    v.route = Route::AlgebraicDefinition;
    Ok(v)
}

/// The literal (M) identities for any `n`: every cyclic 2×2 block sums to
/// `4w` and `Σ (−1)^(i+j) M[i,j] = 0`. For odd `n` only `O_n` passes.
pub fn array_sum_property(m: &Matrix) -> Verdict {
    let n = m.rows();
    let route = Route::Entrywise;
    let block = |i: usize, j: usize| m.get_cyclic(i, j) + m.get_cyclic(i, j + 1) + m.get_cyclic(i + 1, j) + m.get_cyclic(i + 1, j + 1);
    let target = block(0, 0);
    let blocks_ok = (0..n).all(|i| (0..n).all(|j| block(i, j) == target));
    let alternating: Scalar = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| &alt(i + j) * m.get(i, j)).sum();
    if blocks_ok && alternating.is_zero() {
        Verdict::weighted(&target / &int(4), route)
    } else {
        Verdict::fails(route)
    }
}

/// Common eigenvalue `λ` with `M y = λ y` and `Mᵀ y = λ y`, if any.
pub fn common_eigenvalue(m: &Matrix, y: &Vector) -> Option<Scalar> {
    let my = m.mul_vec(y);
    let mty = m.transpose().mul_vec(y);
    let lambda = y.dot(&my).checked_div(&y.dot(y)).ok()?;
    let target = y.scale(&lambda);
    (my == target && mty == target).then_some(lambda)
}

/// Orthogonal projector `y yᵀ / (yᵀ y)`.
pub fn projector(y: &Vector) -> Matrix {
    let norm = y.dot(y);
    Matrix::outer(y, y).scale(&norm.inverse().expect("nonzero projector vector"))
}

/// `(I − P) M (I − P) = O` with `P` the projector onto `y`.
fn vanishes_on_complement(m: &Matrix, y: &Vector) -> bool {
    let n = m.rows();
    let q = &Matrix::identity(n) - &projector(y);
    (&(&q * m) * &q).is_zero()
}

/// Cyclic shift by `ν`: `(K M Kᵀ)[i,j] = M[i+ν, j+ν]`.
fn half_shift(n: usize) -> Matrix {
    let nu = n / 2;
    Matrix::from_fn(n, n, |i, j| if j == (i + nu) % n { Scalar::one() } else { Scalar::zero() })
}

/// Differences `e_k − e_{k+1}`, a basis of `{1_n}^⊥`, as columns.
fn difference_basis(n: usize) -> Matrix {
    Matrix::from_fn(n, n.saturating_sub(1), |i, k| {
        if i == k {
            Scalar::one()
        } else if i == k + 1 {
            int(-1)
        } else {
            Scalar::zero()
        }
    })
}

/// Matrix-algebra test of one property. P and Q use the half-period shift `K`:
/// `M + K M Kᵀ = 2w E_n` and `M = K M Kᵀ` respectively.
pub fn check_algebraic(m: &Matrix, prop: Property) -> Result<Verdict> {
    let n = m.require_square()?;
    let route = Route::Algebraic;
    let ones = Vector::ones(n);
    let sigma = Vector::sigma(n);
    let e = Matrix::ones(n, n);
    let verdict = match prop {
        Property::S => match common_eigenvalue(m, &ones) {
            Some(lambda) => Verdict::weighted(&lambda / &int(n as i64), route),
            None => Verdict::fails(route),
        },
        Property::A => {
            let sum = m + &conjugate_j(m)?;
            let w2 = sum.get(0, 0).clone();
            if sum == e.scale(&w2) {
                Verdict::weighted(&w2 / &int(2), route)
            } else {
                Verdict::fails(route)
            }
        }
        Property::B => Verdict::from_bool(*m == conjugate_j(m)?, route),
        Property::R => {
            let j = Matrix::exchange(n);
            let d = difference_basis(n);
            let mt = m.transpose();
            let rows = &(m + &(m * &j)) * &d;
            let cols = &(&mt + &(&mt * &j)) * &d;
            Verdict::from_bool(rows.is_zero() && cols.is_zero(), route)
        }
        Property::V => Verdict::from_bool(vanishes_on_complement(m, &ones), route),
        Property::M => {
            // Even n carries a weight along E_n; odd n has only the weightless space.
            let w = if n % 2 == 0 { &m.sum() / &int((n * n) as i64) } else { Scalar::zero() };
            let m0 = m - &e.scale(&w);
            let ok = vanishes_on_complement(&m0, &sigma) && m0.bilinear(&sigma, &sigma).is_zero();
            if ok {
                Verdict::weighted(w, route)
            } else {
                Verdict::fails(route)
            }
        }
        Property::N => match common_eigenvalue(m, &sigma) {
            Some(lambda) => Verdict { holds: true, weight: None, eigenvalue: Some(lambda), route },
            None => Verdict::fails(route),
        },
        Property::P => {
            require_even(n, "property (P)")?;
            let k = half_shift(n);
            let sum = m + &(&(&k * m) * &k.transpose());
            let w2 = sum.get(0, 0).clone();
            if sum == e.scale(&w2) {
                Verdict::weighted(&w2 / &int(2), route)
            } else {
                Verdict::fails(route)
            }
        }
        Property::Q => {
            require_even(n, "property (Q)")?;
            let k = half_shift(n);
            Verdict::from_bool(*m == &(&k * m) * &k.transpose(), route)
        }
    };
    Ok(verdict)
}

/// Symmetry type spaces and their intersections.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Space {
    /// Property (S), any weight.
    S,
    /// Property (A), weight 0.
    A,
    B,
    R,
    /// Property (V) with vanishing total sum.
    V,
    /// Property (V) alone.
    VRaw,
    /// Weightless (M); the algebraic definition when `n` is odd.
    M,
    /// The literal (M) identities with any weight, all `n`.
    MArraySum,
    /// (N); the algebraic definition when `n` is odd.
    N,
    /// Property (P), weight 0. Even `n`.
    P,
    /// Even `n`.
    Q,
    /// `M_n ∩ P_n ∩ S_n`, weightless most perfect squares.
    Mps,
    /// `N_n ∩ Q_n ∩ S_n`.
    Nqs,
    /// `R_n ∩ V_n`, weightless reversible squares.
    Rv,
    /// Properties (R) and (V) with no sum condition: all reversible squares.
    Reversible,
    As,
    Bs,
    Rs,
    Av,
    /// The complement of `R_n` given by `(1 + u)ᵀ M (1 + v) = 0` for `J u = −u`, `J v = −v`.
    RComplement,
}

impl Space {
    pub const ALL: [Space; 20] = [
        Space::S,
        Space::A,
        Space::B,
        Space::R,
        Space::V,
        Space::VRaw,
        Space::M,
        Space::MArraySum,
        Space::N,
        Space::P,
        Space::Q,
        Space::Mps,
        Space::Nqs,
        Space::Rv,
        Space::Reversible,
        Space::As,
        Space::Bs,
        Space::Rs,
        Space::Av,
        Space::RComplement,
    ];

    pub fn requires_even(self) -> bool {
        matches!(self, Space::P | Space::Q | Space::Mps | Space::Nqs)
    }

    pub fn name(self) -> &'static str {
        match self {
            Space::S => "S",
            Space::A => "A",
            Space::B => "B",
            Space::R => "R",
            Space::V => "V",
            Space::VRaw => "V-raw",
            Space::M => "M",
            Space::MArraySum => "M-array-sum",
            Space::N => "N",
            Space::P => "P",
            Space::Q => "Q",
            Space::Mps => "MPS",
            Space::Nqs => "NQS",
            Space::Rv => "RV",
            Space::Reversible => "reversible",
            Space::As => "AS",
            Space::Bs => "BS",
            Space::Rs => "RS",
            Space::Av => "AV",
            Space::RComplement => "R-complement",
        }
    }

    /// Membership, decided by the algebraic route.
    pub fn contains(self, m: &Matrix) -> Result<bool> {
        let n = m.require_square()?;
        if self.requires_even() && n % 2 == 1 {
            return Err(Error::OddDimension { what: self.name(), n });
        }
        let alg = |p: Property| check_algebraic(m, p);
        Ok(match self {
            Space::S => alg(Property::S)?.holds,
            Space::A => alg(Property::A)?.holds_weightless(),
            Space::B => alg(Property::B)?.holds,
            Space::R => alg(Property::R)?.holds,
            Space::V => alg(Property::V)?.holds && m.sum().is_zero(),
            Space::VRaw => alg(Property::V)?.holds,
            Space::M => alg(Property::M)?.holds_weightless(),
            Space::MArraySum => array_sum_property(m).holds,
            Space::N => alg(Property::N)?.holds,
            Space::P => alg(Property::P)?.holds_weightless(),
            Space::Q => alg(Property::Q)?.holds,
            Space::Mps => Space::M.contains(m)? && Space::P.contains(m)? && Space::S.contains(m)?,
            Space::Nqs => Space::N.contains(m)? && Space::Q.contains(m)? && Space::S.contains(m)?,
            Space::Rv => Space::R.contains(m)? && Space::V.contains(m)?,
            Space::Reversible => Space::R.contains(m)? && Space::VRaw.contains(m)?,
            Space::As => Space::A.contains(m)? && Space::S.contains(m)?,
            Space::Bs => Space::B.contains(m)? && Space::S.contains(m)?,
            Space::Rs => Space::R.contains(m)? && Space::S.contains(m)?,
            Space::Av => Space::A.contains(m)? && Space::V.contains(m)?,
            Space::RComplement => crate::verify::r_complement_membership(m)?,
        })
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Space {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Space::ALL
            .into_iter()
            .find(|sp| sp.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown space `{s}`")))
    }
}

/// Membership in the basic spaces. `None` where the space is undefined for this `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceFlags {
    pub s: bool,
    pub a: bool,
    pub b: bool,
    pub r: bool,
    pub v: bool,
    pub m: bool,
    pub n: bool,
    pub p: Option<bool>,
    pub q: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompositeFlags {
    /// `M_n ∩ P_n ∩ S_n` (weight 0).
    pub mps: Option<bool>,
    /// (M), (P), (S) with one common weight.
    pub most_perfect: Option<bool>,
    pub nqs: Option<bool>,
    /// `R_n ∩ V_n` (weight 0).
    pub rv: bool,
    /// (R) and (V), any total sum.
    pub reversible: bool,
    #[serde(rename = "as")]
    pub as_: bool,
    pub bs: bool,
    pub rs: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetryReport {
    pub n: usize,
    /// Entrywise verdicts (algebraic definition for odd-`n` M and N);
    /// `None` where the property is undefined.
    pub properties: BTreeMap<Property, Option<Verdict>>,
    pub total_sum: Scalar,
    pub spaces: SpaceFlags,
    pub composites: CompositeFlags,
}

impl SymmetryReport {
    pub fn verdict(&self, p: Property) -> Option<&Verdict> {
        self.properties.get(&p).and_then(Option::as_ref)
    }

    pub fn holds(&self, p: Property) -> bool {
        self.verdict(p).is_some_and(|v| v.holds)
    }

    pub fn weight(&self, p: Property) -> Option<&Scalar> {
        self.verdict(p).and_then(|v| v.weight.as_ref())
    }
}

/// Full report. Both predicate routes are evaluated wherever both are
/// defined; a disagreement is reported as [`Error::Inconsistent`].
pub fn classify(m: &Matrix) -> Result<SymmetryReport> {
    let n = m.require_square()?;
    let mut properties = BTreeMap::new();
    for p in Property::ALL {
        if p.requires_even() && n % 2 == 1 {
            properties.insert(p, None);
            continue;
        }
        let entrywise = check_entrywise(m, p)?;
        if p.has_dual_route(n) {
            let algebraic = check_algebraic(m, p)?;
            if !entrywise.agrees_with(&algebraic) {
                return Err(Error::Inconsistent(format!(
                    "property {p} at n = {n}: entrywise {entrywise:?} vs algebraic {algebraic:?}"
                )));
            }
        }
        properties.insert(p, Some(entrywise));
    }
    let get = |p: Property| properties[&p].as_ref();
    let holds = |p: Property| get(p).is_some_and(|v| v.holds);
    let weightless = |p: Property| get(p).is_some_and(Verdict::holds_weightless);
    let total_sum = m.sum();
    let even = n % 2 == 0;

    let spaces = SpaceFlags {
        s: holds(Property::S),
        a: weightless(Property::A),
        b: holds(Property::B),
        r: holds(Property::R),
        v: holds(Property::V) && total_sum.is_zero(),
        m: weightless(Property::M),
        n: holds(Property::N),
        p: even.then(|| weightless(Property::P)),
        q: even.then(|| holds(Property::Q)),
    };
    let most_perfect = even.then(|| {
        let w = |p: Property| get(p).and_then(|v| v.weight.clone());
        holds(Property::M)
            && holds(Property::P)
            && holds(Property::S)
            && w(Property::M) == w(Property::P)
            && w(Property::P) == w(Property::S)
    });
    let composites = CompositeFlags {
        mps: even.then(|| spaces.m && spaces.p == Some(true) && spaces.s),
        most_perfect,
        nqs: even.then(|| spaces.n && spaces.q == Some(true) && spaces.s),
        rv: spaces.r && spaces.v,
        reversible: spaces.r && holds(Property::V),
        as_: spaces.a && spaces.s,
        bs: spaces.b && spaces.s,
        rs: spaces.r && spaces.s,
    };
    Ok(SymmetryReport { n, properties, total_sum, spaces, composites })
}

/// Aligned plain-text table of a report.
pub fn render_report(r: &SymmetryReport) -> String {
    let mut out = format!("n = {}, total sum = {}\n", r.n, r.total_sum.pretty());
    for (p, v) in &r.properties {
        let status = match v {
            None => "undefined".to_string(),
            Some(v) if !v.holds => "no".to_string(),
            Some(v) => match (&v.weight, &v.eigenvalue) {
                (Some(w), _) => format!("yes  w = {}", w.pretty()),
                (None, Some(l)) => format!("yes  lambda = {}", l.pretty()),
                _ => "yes".to_string(),
            },
        };
        out.push_str(&format!("  ({p})  {status}\n"));
    }
    let flag = |b: bool| if b { "yes" } else { "no" };
    let opt = |b: Option<bool>| b.map_or("undefined", flag);
    let c = &r.composites;
    for (name, value) in [
        ("MPS", opt(c.mps)),
        ("most perfect", opt(c.most_perfect)),
        ("NQS", opt(c.nqs)),
        ("RV", flag(c.rv)),
        ("reversible", flag(c.reversible)),
        ("AS", flag(c.as_)),
        ("BS", flag(c.bs)),
        ("RS", flag(c.rs)),
    ] {
        out.push_str(&format!("  {name:<13} {value}\n"));
    }
    out
}

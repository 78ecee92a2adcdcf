//! Mechanical checks of the algebra: a brute-force linear constraint oracle
//! for every space, dimension probes, grading laws, rank bounds and the
//! structural identities of most perfect and reversible squares.

use std::collections::HashMap;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::construct::{self, Kind};
use crate::error::{Error, Result};
use crate::linalg::RowSpace;
use crate::matrix::{Matrix, Vector};
use crate::predicates::{check_entrywise, classify, Property, Space};
use crate::scalar::Scalar;

/// Random stream for one trial, independent of every other trial.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

fn int(v: i64) -> Scalar {
    Scalar::from_int(v)
}

fn sign(k: usize) -> Scalar {
    int(if k.is_multiple_of(2) { 1 } else { -1 })
}

// ---------------------------------------------------------------------------
// Constraint oracle.

/// The defining equations of a space as linear functionals on `vec(M)`
/// (row-major), with the exact nullspace.
#[derive(Clone, Debug)]
pub struct ConstraintSystem {
    pub space: Space,
    pub n: usize,
    /// Unknowns beyond the `n²` entries (the free weight of the literal (M) system).
    pub extra_unknowns: usize,
    pub rows: Vec<Vec<Scalar>>,
    /// Nullspace basis, truncated to the `n²` matrix entries.
    pub basis: Vec<Matrix>,
    nullity: usize,
}

impl ConstraintSystem {
    pub fn nullity(&self) -> usize {
        self.nullity
    }

    /// Row space of the basis, for span membership tests.
    pub fn span(&self) -> RowSpace {
        RowSpace::from_rows(self.n * self.n, self.basis.iter().map(Matrix::vectorize))
    }

    /// A random integer combination of the basis.
    pub fn random_member<R: Rng + ?Sized>(&self, rng: &mut R) -> Matrix {
        let mut m = Matrix::zero(self.n);
        for b in &self.basis {
            let c = int(rng.gen_range(-9..=9));
            if !c.is_zero() {
                m = &m + &b.scale(&c);
            }
        }
        m
    }
}

struct Rows {
    n: usize,
    width: usize,
    rows: Vec<Vec<Scalar>>,
}

impl Rows {
    fn new(n: usize, extra: usize) -> Self {
        Rows { n, width: n * n + extra, rows: Vec::new() }
    }

    fn idx(&self, i: usize, j: usize) -> usize {
        (i % self.n) * self.n + (j % self.n)
    }

    /// Adds `Σ c · M[i, j]` (indices taken mod `n`) as one equation.
    fn push(&mut self, terms: impl IntoIterator<Item = (usize, usize, Scalar)>) {
        let mut row = vec![Scalar::zero(); self.width];
        for (i, j, c) in terms {
            let k = self.idx(i, j);
            row[k] += c;
        }
        self.rows.push(row);
    }

    fn push_raw(&mut self, row: Vec<Scalar>) {
        self.rows.push(row);
    }

    /// `uᵀ M v = 0`.
    fn bilinear(&mut self, u: &Vector, v: &Vector) {
        let n = self.n;
        let terms: Vec<_> = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| !u[i].is_zero() && !v[j].is_zero())
            .map(|(i, j)| (i, j, &u[i] * &v[j]))
            .collect();
        self.push(terms);
    }
}

/// Basis `e_k + e_{k+1}` of `{Σ}^⊥`.
fn sigma_complement_basis(n: usize) -> Vec<Vector> {
    (0..n.saturating_sub(1)).map(|k| &Vector::unit(n, k) + &Vector::unit(n, k + 1)).collect()
}

/// Basis `e_k − e_{n−1−k}` of `{u : J u = −u}`.
fn antisymmetric_basis(n: usize) -> Vec<Vector> {
    (0..n / 2).map(|k| &Vector::unit(n, k) - &Vector::unit(n, n - 1 - k)).collect()
}

fn add_space_rows(space: Space, r: &mut Rows) -> Result<()> {
    let n = r.n;
    let nu = n / 2;
    let one = Scalar::one;
    let neg = || int(-1);
    match space {
        Space::S => {
            for i in 1..n {
                r.push((0..n).map(|j| (i, j, one())).chain((0..n).map(|j| (0, j, neg()))));
            }
            for j in 0..n {
                r.push((0..n).map(|i| (i, j, one())).chain((0..n).map(|k| (0, k, neg()))));
            }
        }
        Space::A => {
            for i in 0..n {
                for j in 0..n {
                    r.push([(i, j, one()), (n - 1 - i, n - 1 - j, one())]);
                }
            }
        }
        Space::B => {
            for i in 0..n {
                for j in 0..n {
                    r.push([(i, j, one()), (n - 1 - i, n - 1 - j, neg())]);
                }
            }
        }
        Space::R => {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        r.push([(i, j, one()), (i, n - 1 - j, one()), (i, k, neg()), (i, n - 1 - k, neg())]);
                        r.push([(j, i, one()), (n - 1 - j, i, one()), (k, i, neg()), (n - 1 - k, i, neg())]);
                    }
                }
            }
        }
        Space::VRaw => {
            for i in 0..n {
                for k in i + 1..n {
                    for j in 0..n {
                        for l in j + 1..n {
                            r.push([(i, j, one()), (k, l, one()), (i, l, neg()), (k, j, neg())]);
                        }
                    }
                }
            }
        }
        Space::V => {
            add_space_rows(Space::VRaw, r)?;
            r.push((0..n).flat_map(|i| (0..n).map(move |j| (i, j, Scalar::one()))));
        }
        Space::MArraySum => {
            // Unknown w sits in the last column.
            let w_col = n * n;
            for i in 0..n {
                for j in 0..n {
                    let mut row = vec![Scalar::zero(); r.width];
                    for (a, b) in [(i, j), (i, j + 1), (i + 1, j), (i + 1, j + 1)] {
                        row[r.idx(a, b)] += Scalar::one();
                    }
                    row[w_col] = int(-4);
                    r.push_raw(row);
                }
            }
            r.push((0..n).flat_map(|i| (0..n).map(move |j| (i, j, &sign(i) * &sign(j)))));
        }
        Space::M if n.is_multiple_of(2) => {
            for i in 0..n {
                for j in 0..n {
                    r.push([(i, j, one()), (i, j + 1, one()), (i + 1, j, one()), (i + 1, j + 1, one())]);
                }
            }
            r.push((0..n).flat_map(|i| (0..n).map(move |j| (i, j, &sign(i) * &sign(j)))));
        }
        Space::M => {
            // uᵀMv = 0 on {Σ}^⊥ and ΣᵀMΣ = 0.
            let basis = sigma_complement_basis(n);
            for u in &basis {
                for v in &basis {
                    r.bilinear(u, v);
                }
            }
            let s = Vector::sigma(n);
            r.bilinear(&s, &s);
        }
        Space::N if n.is_multiple_of(2) => {
            for j in 0..n {
                r.push((0..n).flat_map(|i| [(i, j, sign(i)), (i, j + 1, sign(i))]));
                r.push((0..n).flat_map(|i| [(j, i, sign(i)), (j + 1, i, sign(i))]));
            }
        }
        Space::N => {
            // MΣ and MᵀΣ are multiples of Σ, which forces a common eigenvalue.
            let s = Vector::sigma(n);
            for u in sigma_complement_basis(n) {
                r.bilinear(&u, &s);
                r.bilinear(&s, &u);
            }
        }
        Space::P | Space::Q => {
            if n % 2 == 1 {
                return Err(Error::OddDimension { what: space.name(), n });
            }
            let c = if space == Space::P { one() } else { neg() };
            for i in 0..n {
                for j in 0..n {
                    r.push([(i, j, one()), (i + nu, j + nu, c.clone())]);
                }
            }
        }
        Space::Mps => {
            for s in [Space::M, Space::P, Space::S] {
                add_space_rows(s, r)?;
            }
        }
        Space::Nqs => {
            for s in [Space::N, Space::Q, Space::S] {
                add_space_rows(s, r)?;
            }
        }
        Space::Rv => {
            add_space_rows(Space::R, r)?;
            add_space_rows(Space::V, r)?;
        }
        Space::Reversible => {
            add_space_rows(Space::R, r)?;
            add_space_rows(Space::VRaw, r)?;
        }
        Space::As | Space::Bs | Space::Rs | Space::Av => {
            let (first, second) = match space {
                Space::As => (Space::A, Space::S),
                Space::Bs => (Space::B, Space::S),
                Space::Rs => (Space::R, Space::S),
                _ => (Space::A, Space::V),
            };
            add_space_rows(first, r)?;
            add_space_rows(second, r)?;
        }
        Space::RComplement => {
            let ones = Vector::ones(n);
            let anti = antisymmetric_basis(n);
            r.bilinear(&ones, &ones);
            for u in &anti {
                r.bilinear(u, &ones);
                r.bilinear(&ones, u);
                for v in &anti {
                    r.bilinear(u, v);
                }
            }
        }
    }
    Ok(())
}

pub fn build_constraints(space: Space, n: usize) -> Result<ConstraintSystem> {
    if n == 0 {
        return Err(Error::InvalidDimension(0));
    }
    if space.requires_even() && n % 2 == 1 {
        return Err(Error::OddDimension { what: space.name(), n });
    }
    let extra = usize::from(space == Space::MArraySum);
    let mut r = Rows::new(n, extra);
    add_space_rows(space, &mut r)?;
    let echelon = RowSpace::from_rows(r.width, r.rows.iter().cloned());
    let raw = echelon.nullspace();
    let basis = raw
        .iter()
        .map(|x| Matrix::new(n, n, x[..n * n].to_vec()).expect("n² entries"))
        .collect();
    Ok(ConstraintSystem { space, n, extra_unknowns: extra, rows: r.rows, basis, nullity: raw.len() })
}

/// Memoizes constraint systems per `(space, n)`.
#[derive(Default)]
pub struct Oracle {
    cache: HashMap<(Space, usize), ConstraintSystem>,
}

impl Oracle {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, space: Space, n: usize) -> Result<&ConstraintSystem> {
        if let std::collections::hash_map::Entry::Vacant(e) = self.cache.entry((space, n)) {
            let system = build_constraints(space, n)?;
            e.insert(system);
        }
        Ok(&self.cache[&(space, n)])
    }
}

// ---------------------------------------------------------------------------
// Dimensions.

/// Closed-form dimensions where known.
pub fn expected_dimension(space: Space, n: usize) -> Option<usize> {
    match space {
        Space::S => Some(n * n - 2 * n + 2),
        Space::V => Some(2 * n - 2),
        _ => None,
    }
}

fn kind_for(space: Space) -> Option<Kind> {
    Kind::ALL.into_iter().find(|k| k.space() == space)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionProbe {
    pub space: Space,
    pub n: usize,
    pub nullity: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<usize>,
    /// Rank of vectorized constructor outputs, where the space has a constructor.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub constructor_rank: Option<usize>,
    /// Every constructor output lay in the oracle nullspace.
    pub constructor_inside: bool,
    pub passed: bool,
}

/// Nullity of the constraint system, compared with the closed form (if any)
/// and with the span of random constructor outputs. Outputs are drawn until
/// the span stops growing for a while, so the rank is a lower bound that is
/// exact with overwhelming probability.
pub fn dimension_probe(space: Space, n: usize, seed: u64) -> Result<DimensionProbe> {
    let system = build_constraints(space, n)?;
    let nullity = system.nullity();
    let expected = expected_dimension(space, n);
    let (constructor_rank, constructor_inside) = match kind_for(space) {
        Some(kind) => {
            let oracle = system.span();
            let mut span = RowSpace::new(n * n);
            let mut inside = true;
            let mut stale = 0;
            let mut trial = 0u64;
            while stale < 4 && span.rank() <= nullity {
                let m = construct::random_member(kind, n, &mut trial_rng(seed, trial))?;
                trial += 1;
                let v = m.vectorize();
                inside &= oracle.contains(&v);
                if span.insert(v) {
                    stale = 0;
                } else {
                    stale += 1;
                }
            }
            (Some(span.rank()), inside)
        }
        None => (None, true),
    };
    let passed = expected.is_none_or(|e| e == nullity) && constructor_rank.is_none_or(|r| r == nullity) && constructor_inside;
    Ok(DimensionProbe { space, n, nullity, expected, constructor_rank, constructor_inside, passed })
}

/// `dim(even) + dim(odd) = n²` for one direct sum.
pub fn direct_sum_dimensions(pair: (Space, Space), n: usize) -> Result<(usize, usize)> {
    Ok((build_constraints(pair.0, n)?.nullity(), build_constraints(pair.1, n)?.nullity()))
}

// ---------------------------------------------------------------------------
// Gradings.

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GradingPair {
    Ba,
    Qp,
    Sv,
    Nm,
    RClosure,
    NqsMps,
    BsRv,
}

impl GradingPair {
    pub const ALL: [GradingPair; 7] = [
        GradingPair::Ba,
        GradingPair::Qp,
        GradingPair::Sv,
        GradingPair::Nm,
        GradingPair::RClosure,
        GradingPair::NqsMps,
        GradingPair::BsRv,
    ];

    /// (even space, odd space); the R closure has no odd part.
    pub fn spaces(self) -> (Space, Option<Space>) {
        match self {
            GradingPair::Ba => (Space::B, Some(Space::A)),
            GradingPair::Qp => (Space::Q, Some(Space::P)),
            GradingPair::Sv => (Space::S, Some(Space::V)),
            GradingPair::Nm => (Space::N, Some(Space::M)),
            GradingPair::RClosure => (Space::R, None),
            GradingPair::NqsMps => (Space::Nqs, Some(Space::Mps)),
            GradingPair::BsRv => (Space::Bs, Some(Space::Rv)),
        }
    }

    pub fn requires_even(self) -> bool {
        matches!(self, GradingPair::Qp | GradingPair::NqsMps)
    }

    pub fn name(self) -> &'static str {
        match self {
            GradingPair::Ba => "BA",
            GradingPair::Qp => "QP",
            GradingPair::Sv => "SV",
            GradingPair::Nm => "NM",
            GradingPair::RClosure => "R-closure",
            GradingPair::NqsMps => "NQS-MPS",
            GradingPair::BsRv => "BS-RV",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradingFailure {
    pub law: String,
    pub trial: u64,
    pub left: Matrix,
    pub right: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradingCheckResult {
    pub pair: GradingPair,
    pub n: usize,
    pub trials: usize,
    /// Products checked per law.
    pub laws: Vec<String>,
    pub failure_count: usize,
    /// The first few failures.
    pub witnesses: Vec<GradingFailure>,
}

impl GradingCheckResult {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }
}

const MAX_WITNESSES: usize = 3;

/// Multiplies random members drawn from the oracle bases and checks that each
/// product lands where the grading says: even·even and odd·odd in the even
/// space, mixed products in the odd space.
pub fn grading_check_with(
    oracle: &mut Oracle,
    pair: GradingPair,
    n: usize,
    trials: usize,
    seed: u64,
) -> Result<GradingCheckResult> {
    if trials == 0 {
        return Err(Error::Precondition("at least one trial".into()));
    }
    if pair.requires_even() && n % 2 == 1 {
        return Err(Error::OddDimension { what: pair.name(), n });
    }
    let (even, odd) = pair.spaces();
    let even_sys = oracle.get(even, n)?.clone();
    let odd_sys = match odd {
        Some(s) => Some(oracle.get(s, n)?.clone()),
        None => None,
    };
    let mut laws = vec![format!("{even}·{even} ⊂ {even}")];
    if let Some(o) = odd {
        laws.push(format!("{o}·{o} ⊂ {even}"));
        laws.push(format!("{o}·{even} ⊂ {o}"));
        laws.push(format!("{even}·{o} ⊂ {o}"));
    }
    let mut failure_count = 0;
    let mut witnesses = Vec::new();
    for trial in 0..trials as u64 {
        let mut rng = trial_rng(seed, trial);
        let e1 = even_sys.random_member(&mut rng);
        let e2 = even_sys.random_member(&mut rng);
        let mut cases = vec![(laws[0].clone(), e1.clone(), e2.clone(), even)];
        if let (Some(sys), Some(o)) = (&odd_sys, odd) {
            let h1 = sys.random_member(&mut rng);
            let h2 = sys.random_member(&mut rng);
            cases.push((laws[1].clone(), h1.clone(), h2, even));
            cases.push((laws[2].clone(), h1.clone(), e2, o));
            cases.push((laws[3].clone(), e1, h1, o));
        }
        for (law, left, right, target) in cases {
            if !target.contains(&(&left * &right))? {
                failure_count += 1;
                if witnesses.len() < MAX_WITNESSES {
                    witnesses.push(GradingFailure { law, trial, left, right });
                }
            }
        }
    }
    Ok(GradingCheckResult { pair, n, trials, laws, failure_count, witnesses })
}

pub fn grading_check(pair: GradingPair, n: usize, trials: usize, seed: u64) -> Result<GradingCheckResult> {
    grading_check_with(&mut Oracle::new(), pair, n, trials, seed)
}

// ---------------------------------------------------------------------------
// Most perfect squares.

/// `(γ₁;δ₁)(γ₂;δ₂)(γ₃;δ₃) = n((δ₂ᵀγ₃)γ₁; (δ₁ᵀγ₂)δ₃)` where `(γ;δ) = γΣᵀ + Σδᵀ`.
pub fn mps_triple_product_check(pairs: &[(Vector, Vector); 3]) -> Result<bool> {
    let n = pairs[0].0.len();
    let ms: Vec<Matrix> = pairs.iter().map(|(g, d)| construct::make_mps_vectors(g, d)).collect::<Result<_>>()?;
    let lhs = &(&ms[0] * &ms[1]) * &ms[2];
    let nn = int(n as i64);
    let gamma = pairs[0].0.scale(&(&nn * &pairs[1].1.dot(&pairs[2].0)));
    let delta = pairs[2].1.scale(&(&nn * &pairs[0].1.dot(&pairs[1].0)));
    let sigma = Vector::sigma(n);
    let rhs = &Matrix::outer(&gamma, &sigma) + &Matrix::outer(&sigma, &delta);
    Ok(lhs == rhs)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParasymmetryResult {
    pub square_symmetric: bool,
    pub dependent: bool,
    /// `M² = n γδᵀ + (δᵀγ) ΣΣᵀ`.
    pub closed_form_holds: bool,
}

impl ParasymmetryResult {
    pub fn passed(&self) -> bool {
        self.square_symmetric == self.dependent && self.closed_form_holds
    }
}

/// `M²` is symmetric exactly when `γ, δ` are linearly dependent.
pub fn parasymmetry_check(gamma: &Vector, delta: &Vector) -> Result<ParasymmetryResult> {
    let n = gamma.len();
    let m = construct::make_mps_vectors(gamma, delta)?;
    let sq = &m * &m;
    let sigma = Vector::sigma(n);
    let closed = &Matrix::outer(gamma, delta).scale(&int(n as i64)) + &Matrix::outer(&sigma, &sigma).scale(&delta.dot(gamma));
    let dependent = RowSpace::from_rows(n, [gamma.entries().to_vec(), delta.entries().to_vec()]).rank() <= 1;
    Ok(ParasymmetryResult { square_symmetric: sq == sq.transpose(), dependent, closed_form_holds: sq == closed })
}

// ---------------------------------------------------------------------------
// Ranks.

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RankTarget {
    /// Weightless most perfect squares; bound 2, attained.
    MpsWeightless,
    /// `MPS_n ⊕ R E_n`; bound 3.
    MpsWeighted,
    /// `RV_n ⊕ R E_n`; bound 2.
    Reversible,
    /// `V_n`; bound 7.
    V,
}

impl RankTarget {
    pub const ALL: [RankTarget; 4] = [RankTarget::MpsWeightless, RankTarget::MpsWeighted, RankTarget::Reversible, RankTarget::V];

    pub fn bound(self) -> usize {
        match self {
            RankTarget::MpsWeightless | RankTarget::Reversible => 2,
            RankTarget::MpsWeighted => 3,
            RankTarget::V => 7,
        }
    }

    fn draw<R: Rng + ?Sized>(self, n: usize, rng: &mut R) -> Result<Matrix> {
        let w = int(rng.gen_range(-9..=9));
        let e = Matrix::ones(n, n);
        Ok(match self {
            RankTarget::MpsWeightless => construct::random_member(Kind::Mps, n, rng)?,
            RankTarget::MpsWeighted => &construct::random_member(Kind::Mps, n, rng)? + &e.scale(&w),
            RankTarget::Reversible => &construct::random_member(Kind::Rv, n, rng)? + &e.scale(&w),
            RankTarget::V => construct::random_member(Kind::V, n, rng)?,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankReport {
    pub target: RankTarget,
    pub n: usize,
    pub trials: usize,
    pub bound: usize,
    pub max_rank: usize,
    /// Some draw reached the bound (only required for weightless MPS).
    pub attained: bool,
}

impl RankReport {
    pub fn passed(&self) -> bool {
        self.max_rank <= self.bound && (self.target != RankTarget::MpsWeightless || self.attained)
    }
}

pub fn rank_bound_check(target: RankTarget, n: usize, trials: usize, seed: u64) -> Result<RankReport> {
    let mut max_rank = 0;
    for trial in 0..trials as u64 {
        let m = target.draw(n, &mut trial_rng(seed, trial))?;
        max_rank = max_rank.max(m.rank());
    }
    let bound = target.bound();
    Ok(RankReport { target, n, trials, bound, max_rank, attained: max_rank == bound })
}

// ---------------------------------------------------------------------------
// Reversible squares and the complement of R_n.

/// Every random member of the raw `R ∧ V` nullspace (no sum condition) has
/// property (A) with some weight.
pub fn reversible_implies_a_check(n: usize, trials: usize, seed: u64) -> Result<bool> {
    let system = build_constraints(Space::Reversible, n)?;
    for trial in 0..trials as u64 {
        let m = system.random_member(&mut trial_rng(seed, trial));
        if !check_entrywise(&m, Property::A)?.holds {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `RV_n = AV_n`: each reversible-square generator lies in `A_n ∩ V_n`, and
/// the generators span every oracle basis element of `A_n ∩ V_n`.
pub fn rv_equals_av(n: usize) -> Result<bool> {
    let nu = n / 2;
    let mut span = RowSpace::new(n * n);
    for k in 0..nu {
        let e = Vector::unit(nu, k);
        let z = Vector::zeros(nu);
        for (a, b) in [(&e, &z), (&z, &e)] {
            let m = construct::make_rv(a, b, n, &Scalar::zero())?;
            if !Space::Av.contains(&m)? {
                return Ok(false);
            }
            span.insert(m.vectorize());
        }
    }
    let av = build_constraints(Space::Av, n)?;
    Ok(av.nullity() == span.rank() && av.basis.iter().all(|b| span.contains(&b.vectorize())))
}

/// `(1 + u)ᵀ M (1 + v) = 0` for all `u, v` with `J u = −u`, `J v = −v`,
/// tested on a basis.
pub fn r_complement_membership(m: &Matrix) -> Result<bool> {
    let n = m.require_square()?;
    let ones = Vector::ones(n);
    let anti = antisymmetric_basis(n);
    if !m.bilinear(&ones, &ones).is_zero() {
        return Ok(false);
    }
    for u in &anti {
        if !m.bilinear(u, &ones).is_zero() || !m.bilinear(&ones, u).is_zero() {
            return Ok(false);
        }
        if anti.iter().any(|v| !m.bilinear(u, v).is_zero()) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplementDimensions {
    pub n: usize,
    pub dim_r: usize,
    pub dim_complement: usize,
    pub dim_intersection: usize,
}

impl ComplementDimensions {
    pub fn direct_sum(&self) -> bool {
        self.dim_intersection == 0 && self.dim_r + self.dim_complement == self.n * self.n
    }
}

pub fn r_complement_dimensions(n: usize) -> Result<ComplementDimensions> {
    let r = build_constraints(Space::R, n)?;
    let c = build_constraints(Space::RComplement, n)?;
    let both = RowSpace::from_rows(n * n, r.rows.iter().chain(&c.rows).cloned());
    Ok(ComplementDimensions { n, dim_r: r.nullity(), dim_complement: c.nullity(), dim_intersection: both.nullity() })
}

// ---------------------------------------------------------------------------
// Predicate cross-checks.

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AgreementReport {
    pub trials: usize,
    /// Entrywise and algebraic routes disagreed.
    pub route_disagreements: Vec<String>,
    /// Oracle basis element rejected by the predicate.
    pub basis_rejections: Vec<String>,
    /// Constructor output outside the oracle span.
    pub span_escapes: Vec<String>,
}

impl AgreementReport {
    pub fn passed(&self) -> bool {
        self.route_disagreements.is_empty() && self.basis_rejections.is_empty() && self.span_escapes.is_empty()
    }
}

/// Spaces with an oracle at `n`.
pub fn spaces_at(n: usize) -> impl Iterator<Item = Space> {
    Space::ALL.into_iter().filter(move |s| !(s.requires_even() && n % 2 == 1))
}

/// Every oracle basis element passes its predicate, for all spaces at each `n`.
pub fn oracle_basis_agreement(oracle: &mut Oracle, ns: impl IntoIterator<Item = usize>, report: &mut AgreementReport) -> Result<()> {
    for n in ns {
        for space in spaces_at(n) {
            let system = oracle.get(space, n)?;
            for (k, b) in system.basis.iter().enumerate() {
                let ok = if space == Space::MArraySum {
                    crate::predicates::array_sum_property(b).holds
                } else {
                    space.contains(b)?
                };
                if !ok {
                    report.basis_rejections.push(format!("{space} n={n} basis[{k}]"));
                }
            }
        }
    }
    Ok(())
}

/// Random trials over `n ∈ ns`: each draws a constructor output, checks it
/// lies in the oracle span of its space, and classifies it together with a
/// generic matrix and a mixed sum, which fails on any route disagreement.
pub fn random_agreement(oracle: &mut Oracle, ns: &[usize], trials: usize, seed: u64, report: &mut AgreementReport) -> Result<()> {
    let mut spans: HashMap<(Space, usize), RowSpace> = HashMap::new();
    for trial in 0..trials as u64 {
        let mut rng = trial_rng(seed, trial);
        let n = ns[trial as usize % ns.len()];
        let kinds: Vec<Kind> = Kind::ALL.into_iter().filter(|k| !(k.requires_even() && n % 2 == 1)).collect();
        let kind = kinds[rng.gen_range(0..kinds.len())];
        let member = construct::random_member(kind, n, &mut rng)?;
        let space = kind.space();
        if let std::collections::hash_map::Entry::Vacant(e) = spans.entry((space, n)) {
            e.insert(oracle.get(space, n)?.span());
        }
        if !spans[&(space, n)].contains(&member.vectorize()) {
            report.span_escapes.push(format!("{kind} n={n} trial {trial}"));
        }
        let generic = construct::random_matrix(n, n, &mut rng);
        let other = construct::random_member(kinds[rng.gen_range(0..kinds.len())], n, &mut rng)?;
        let mixed = &member + &other;
        for (label, m) in [("member", &member), ("generic", &generic), ("mixed", &mixed)] {
            if let Err(e) = classify(m) {
                report.route_disagreements.push(format!("{label} {kind} n={n} trial {trial}: {e}"));
            }
        }
        report.trials += 1;
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Reports.

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Gradings,
    Dimensions,
    Ranks,
    Lemmas,
    All,
}

impl std::str::FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gradings" => Ok(Suite::Gradings),
            "dimensions" => Ok(Suite::Dimensions),
            "ranks" => Ok(Suite::Ranks),
            "lemmas" => Ok(Suite::Lemmas),
            "all" => Ok(Suite::All),
            _ => Err(Error::Parse(format!("unknown suite `{s}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    pub passed: bool,
    pub detail: serde_json::Value,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub suite: Suite,
    pub n_max: usize,
    pub trials: usize,
    pub seed: u64,
    pub passed: bool,
    pub checks: Vec<CheckRecord>,
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub n_max: usize,
    pub trials: usize,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { n_max: 6, trials: 200, seed: 0 }
    }
}

fn record(name: impl Into<String>, n: Option<usize>, passed: bool, detail: impl Serialize) -> CheckRecord {
    CheckRecord { name: name.into(), n, passed, detail: serde_json::to_value(detail).expect("serializable detail") }
}

fn gradings(cfg: &SuiteConfig, oracle: &mut Oracle, out: &mut Vec<CheckRecord>) -> Result<()> {
    for pair in GradingPair::ALL {
        for n in 2..=cfg.n_max {
            if pair.requires_even() && n % 2 == 1 {
                continue;
            }
            let r = grading_check_with(oracle, pair, n, cfg.trials, cfg.seed)?;
            out.push(record(format!("grading {}", pair.name()), Some(n), r.passed(), &r));
        }
    }
    Ok(())
}

fn dimensions(cfg: &SuiteConfig, out: &mut Vec<CheckRecord>) -> Result<()> {
    for n in 2..=cfg.n_max {
        for space in [Space::S, Space::V] {
            let p = dimension_probe(space, n, cfg.seed)?;
            out.push(record(format!("dimension {space}"), Some(n), p.passed, &p));
        }
        for (even, odd) in crate::decompose::SplitKind::ALL.map(|k| k.spaces()) {
            if even.requires_even() && n % 2 == 1 {
                continue;
            }
            let (de, dodd) = direct_sum_dimensions((even, odd), n)?;
            let detail = serde_json::json!({ "even": de, "odd": dodd });
            out.push(record(format!("direct sum {even}+{odd}"), Some(n), de + dodd == n * n, detail));
        }
        for space in [Space::A, Space::B, Space::R, Space::M, Space::N, Space::P, Space::Q, Space::Mps, Space::Nqs, Space::Rv] {
            if space.requires_even() && n % 2 == 1 {
                continue;
            }
            let p = dimension_probe(space, n, cfg.seed)?;
            out.push(record(format!("constructor span {space}"), Some(n), p.passed, &p));
        }
        let c = r_complement_dimensions(n)?;
        out.push(record("R complement direct sum", Some(n), c.direct_sum(), &c));
    }
    for n in (3..=cfg.n_max.max(7)).step_by(2) {
        let system = build_constraints(Space::MArraySum, n)?;
        let detail = serde_json::json!({ "nullity": system.nullity() });
        out.push(record("odd array sum forces zero", Some(n), system.nullity() == 0, detail));
    }
    Ok(())
}

fn ranks(cfg: &SuiteConfig, out: &mut Vec<CheckRecord>) -> Result<()> {
    for target in RankTarget::ALL {
        let ns: Vec<usize> = match target {
            RankTarget::V => (2..=cfg.n_max.max(9)).collect(),
            _ => (2..=cfg.n_max).step_by(2).collect(),
        };
        for n in ns {
            if matches!(target, RankTarget::MpsWeightless) && n == 2 {
                // MPS_2 is one-dimensional, so rank 2 cannot be attained.
                let r = rank_bound_check(target, n, cfg.trials, cfg.seed)?;
                out.push(record(format!("rank {target:?}"), Some(n), r.max_rank <= r.bound, &r));
                continue;
            }
            let r = rank_bound_check(target, n, cfg.trials, cfg.seed)?;
            out.push(record(format!("rank {target:?}"), Some(n), r.passed(), &r));
        }
    }
    Ok(())
}

fn lemmas(cfg: &SuiteConfig, oracle: &mut Oracle, out: &mut Vec<CheckRecord>) -> Result<()> {
    for n in (4..=cfg.n_max.max(8)).step_by(2) {
        let mut ok = true;
        for trial in 0..100u64 {
            let mut rng = trial_rng(cfg.seed, trial);
            let triple = [
                construct::random_mps_pair(n, &mut rng)?,
                construct::random_mps_pair(n, &mut rng)?,
                construct::random_mps_pair(n, &mut rng)?,
            ];
            ok &= mps_triple_product_check(&triple)?;
        }
        out.push(record("MPS triple product", Some(n), ok, serde_json::json!({ "triples": 100 })));
    }
    for n in (2..=cfg.n_max).step_by(2) {
        let mut failures = 0;
        let mut dependent = 0;
        for trial in 0..100u64 {
            let mut rng = trial_rng(cfg.seed, trial);
            let (g, d) = construct::random_mps_pair(n, &mut rng)?;
            // Every fourth draw is made dependent on purpose.
            let d = if trial % 4 == 0 { g.scale(&int(rng.gen_range(-3..=3))) } else { d };
            let r = parasymmetry_check(&g, &d)?;
            dependent += usize::from(r.dependent);
            failures += usize::from(!r.passed());
        }
        let detail = serde_json::json!({ "draws": 100, "dependent_draws": dependent, "failures": failures });
        out.push(record("parasymmetry iff dependent", Some(n), failures == 0, detail));
    }
    for n in 2..=cfg.n_max {
        out.push(record("RV = AV", Some(n), rv_equals_av(n)?, serde_json::Value::Null));
        let ok = reversible_implies_a_check(n, cfg.trials, cfg.seed)?;
        out.push(record("reversible implies A", Some(n), ok, serde_json::Value::Null));
    }
    let mut agreement = AgreementReport::default();
    let ns: Vec<usize> = (2..=cfg.n_max.max(7)).collect();
    oracle_basis_agreement(oracle, ns.iter().copied(), &mut agreement)?;
    random_agreement(oracle, &ns, cfg.trials.max(1000), cfg.seed, &mut agreement)?;
    out.push(record("oracle and predicate agreement", None, agreement.passed(), &agreement));
    Ok(())
}

pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Result<Report> {
    let mut checks = Vec::new();
    let mut oracle = Oracle::new();
    let all = suite == Suite::All;
    if all || suite == Suite::Gradings {
        gradings(cfg, &mut oracle, &mut checks)?;
    }
    if all || suite == Suite::Dimensions {
        dimensions(cfg, &mut checks)?;
    }
    if all || suite == Suite::Ranks {
        ranks(cfg, &mut checks)?;
    }
    if all || suite == Suite::Lemmas {
        lemmas(cfg, &mut oracle, &mut checks)?;
    }
    let passed = checks.iter().all(|c| c.passed);
    Ok(Report { suite, n_max: cfg.n_max, trials: cfg.trials, seed: cfg.seed, passed, checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stated_dimensions() {
        assert_eq!(build_constraints(Space::V, 3).unwrap().nullity(), 4);
        assert_eq!(build_constraints(Space::S, 4).unwrap().nullity(), 10);
        assert_eq!(build_constraints(Space::MArraySum, 3).unwrap().nullity(), 0);
        assert_eq!(build_constraints(Space::Rv, 4).unwrap().nullity(), 4);
        assert_eq!(build_constraints(Space::Mps, 6).unwrap().nullity(), 4);
    }

    #[test]
    fn probes_agree_with_constructors() {
        for (space, n) in [(Space::V, 4), (Space::Rv, 4), (Space::Mps, 6), (Space::S, 5), (Space::M, 5), (Space::N, 3)] {
            let p = dimension_probe(space, n, 1).unwrap();
            assert!(p.passed, "{p:?}");
        }
        assert_eq!(dimension_probe(Space::V, 4, 1).unwrap().nullity, 6);
    }

    #[test]
    fn oracle_basis_passes_predicates() {
        let mut report = AgreementReport::default();
        oracle_basis_agreement(&mut Oracle::new(), 1..=5, &mut report).unwrap();
        assert!(report.passed(), "{report:?}");
    }

    #[test]
    fn small_grading_runs() {
        for pair in GradingPair::ALL {
            let r = grading_check(pair, 4, 20, 3).unwrap();
            assert!(r.passed(), "{:?}", r.witnesses);
        }
        assert!(grading_check(GradingPair::Qp, 3, 5, 0).is_err());
        assert!(grading_check(GradingPair::Sv, 5, 20, 0).unwrap().passed());
    }

    #[test]
    fn triple_product_on_zero_and_single_direction() {
        let z = (Vector::zeros(4), Vector::zeros(4));
        assert!(mps_triple_product_check(&[z.clone(), z.clone(), z]).unwrap());
        let g = construct::mps_full(&Vector::from_ints(&[1, 2]));
        let p = (g.clone(), g);
        assert!(mps_triple_product_check(&[p.clone(), p.clone(), p]).unwrap());
    }

    #[test]
    fn parasymmetry_cases() {
        let g = construct::mps_full(&Vector::from_ints(&[1, 2]));
        let d = construct::mps_full(&Vector::from_ints(&[0, 1]));
        let dep = parasymmetry_check(&g, &g.scale(&int(2))).unwrap();
        assert!(dep.square_symmetric && dep.dependent && dep.passed());
        let indep = parasymmetry_check(&g, &d).unwrap();
        assert!(!indep.square_symmetric && !indep.dependent && indep.passed());
        let zero = parasymmetry_check(&Vector::zeros(4), &d).unwrap();
        assert!(zero.square_symmetric && zero.passed());
    }

    #[test]
    fn doubled_square_formula_is_wrong() {
        // M² = n γδᵀ + (δᵀγ)ΣΣᵀ; with 2n in place of n the identity fails.
        let g = construct::mps_full(&Vector::from_ints(&[1, 2]));
        let d = construct::mps_full(&Vector::from_ints(&[0, 1]));
        let m = construct::make_mps_vectors(&g, &d).unwrap();
        let sigma = Vector::sigma(4);
        let doubled = &Matrix::outer(&g, &d).scale(&int(8)) + &Matrix::outer(&sigma, &sigma).scale(&d.dot(&g));
        assert_ne!(&m * &m, doubled);
    }

    #[test]
    fn r_complement_examples() {
        assert!(r_complement_membership(&Matrix::zero(4)).unwrap());
        assert!(!r_complement_membership(&Matrix::ones(4, 4)).unwrap());
        for n in 1..=7 {
            let c = r_complement_dimensions(n).unwrap();
            assert!(c.direct_sum(), "{c:?}");
        }
    }

    #[test]
    fn reversible_squares_are_associated() {
        assert!(check_entrywise(&Matrix::ones(4, 4), Property::A).unwrap().weight == Some(int(1)));
        for n in 2..=6 {
            assert!(reversible_implies_a_check(n, 20, 5).unwrap(), "n={n}");
            assert!(rv_equals_av(n).unwrap(), "n={n}");
        }
    }

    #[test]
    fn rank_bounds_small() {
        let r = rank_bound_check(RankTarget::MpsWeightless, 6, 30, 7).unwrap();
        assert!(r.passed(), "{r:?}");
        assert!(rank_bound_check(RankTarget::Reversible, 5, 30, 7).unwrap().passed());
        assert!(rank_bound_check(RankTarget::V, 7, 30, 7).unwrap().passed());
    }

    #[test]
    fn trial_streams_differ() {
        let a: u64 = trial_rng(1, 0).gen();
        let b: u64 = trial_rng(1, 1).gen();
        assert_ne!(a, b);
        assert_eq!(a, trial_rng(1, 0).gen::<u64>());
    }
}

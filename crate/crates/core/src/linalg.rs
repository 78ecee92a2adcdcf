//! Exact Gaussian elimination over Q(√2).

use crate::scalar::Scalar;

/// Incrementally built row echelon basis of a subspace of `Q(√2)^width`.
///
/// Stored rows are normalized to a leading one and reduced against every
/// earlier row, so reducing a candidate by the rows in insertion order clears
/// all pivot columns.
#[derive(Clone, Debug)]
pub struct RowSpace {
    width: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(width: usize) -> Self {
        RowSpace { width, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_rows<I>(width: usize, rows: I) -> Self
    where
        I: IntoIterator<Item = Vec<Scalar>>,
    {
        let mut space = RowSpace::new(width);
        for row in rows {
            space.insert(row);
        }
        space
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn nullity(&self) -> usize {
        self.width - self.rank()
    }

    /// Reduces `v` against the stored rows; the result is zero iff `v` lies in the span.
    pub fn reduce(&self, mut v: Vec<Scalar>) -> Vec<Scalar> {
        assert_eq!(v.len(), self.width, "row width mismatch");
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let c = v[p].clone();
            for j in p..self.width {
                if !row[j].is_zero() {
                    v[j] -= &c * &row[j];
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v.to_vec()).iter().all(Scalar::is_zero)
    }

    /// Adds `v` to the span; returns whether it was independent of the stored rows.
    pub fn insert(&mut self, v: Vec<Scalar>) -> bool {
        let mut v = self.reduce(v);
        // First nonzero entry is the pivot; exact arithmetic needs no magnitude pivoting.
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inverse().expect("pivot is nonzero");
        for x in v.iter_mut().skip(p) {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        self.rows.push(v);
        self.pivots.push(p);
        true
    }

    /// Basis of `{x : r·x = 0 for every stored row r}`, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        // Bring the echelon rows to reduced form, sorted by pivot.
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&k| self.pivots[k]);
        let mut rref: Vec<Vec<Scalar>> = order.iter().map(|&k| self.rows[k].clone()).collect();
        let pivots: Vec<usize> = order.iter().map(|&k| self.pivots[k]).collect();
        for k in (0..rref.len()).rev() {
            let p = pivots[k];
            let (upper, lower) = rref.split_at_mut(k);
            let pivot_row = &lower[0];
            for row in upper.iter_mut() {
                if row[p].is_zero() {
                    continue;
                }
                let c = row[p].clone();
                for j in p..self.width {
                    if !pivot_row[j].is_zero() {
                        row[j] -= &c * &pivot_row[j];
                    }
                }
            }
        }
        let mut is_pivot = vec![false; self.width];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.width)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut x = vec![Scalar::zero(); self.width];
                x[f] = Scalar::one();
                for (row, &p) in rref.iter().zip(&pivots) {
                    if !row[f].is_zero() {
                        x[p] = -&row[f];
                    }
                }
                x
            })
            .collect()
    }
}

/// Rank of a list of equal-width rows.
pub fn rank_of_rows(width: usize, rows: &[Vec<Scalar>]) -> usize {
    RowSpace::from_rows(width, rows.iter().cloned()).rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| Scalar::from_int(x)).collect()
    }

    fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
        a.iter().zip(b).map(|(x, y)| x * y).sum()
    }

    #[test]
    fn rank_and_nullspace_small() {
        let rows = vec![row(&[1, 2, 3, 4]), row(&[2, 4, 6, 8]), row(&[0, 1, 1, 0])];
        let space = RowSpace::from_rows(4, rows.clone());
        assert_eq!(space.rank(), 2);
        let null = space.nullspace();
        assert_eq!(null.len(), 2);
        for x in &null {
            for r in &rows {
                assert!(dot(r, x).is_zero());
            }
        }
        assert_eq!(rank_of_rows(4, &null), 2);
    }

    #[test]
    fn membership() {
        let space = RowSpace::from_rows(3, vec![row(&[1, 0, 1]), row(&[0, 1, 1])]);
        assert!(space.contains(&row(&[2, 3, 5])));
        assert!(!space.contains(&row(&[0, 0, 1])));
    }

    #[test]
    fn sqrt2_entries() {
        // (1, √2) and (√2, 2) are dependent over Q(√2).
        let r1 = vec![Scalar::one(), Scalar::sqrt2()];
        let r2 = vec![Scalar::sqrt2(), Scalar::from_int(2)];
        assert_eq!(rank_of_rows(2, &[r1, r2]), 1);
    }

    #[test]
    fn empty_system_has_full_nullspace() {
        let space = RowSpace::new(3);
        assert_eq!(space.nullspace().len(), 3);
    }
}

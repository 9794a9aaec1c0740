//! Dense exact linear algebra over a `FieldSpec`.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

/// A dense row-major matrix of exact scalars.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    data: Vec<Scalar>,
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|s| s.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl ExactMatrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            field,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds a matrix from rows; all rows must have equal length.
    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        if rows.iter().flatten().any(|s| s.field() != field) {
            return Err(Error::InvalidField("entry over a different field".into()));
        }
        Ok(ExactMatrix {
            rows: rows.len(),
            cols,
            field,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64(field: FieldSpec, rows: &[Vec<i64>]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
            .collect();
        Self::from_rows(field, rows).expect("integer rows")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.field, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let v = out.get(r, c) + &(a * b);
                        out.set(r, c, v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!(
                "vector of length {} for {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|r| dot(self.field, self.row(r), v))
            .collect())
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (ExactMatrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut lead = 0;
        for c in 0..self.cols {
            if lead == self.rows {
                break;
            }
            let Some(p) = (lead..self.rows).find(|&r| !self.get(r, c).is_zero()) else {
                continue;
            };
            self.swap_rows(p, lead);
            let inv = self.get(lead, c).inv().expect("nonzero pivot");
            for k in c..self.cols {
                let v = self.get(lead, k) * &inv;
                self.set(lead, k, v);
            }
            for r in 0..self.rows {
                if r == lead {
                    continue;
                }
                let f = self.get(r, c).clone();
                if f.is_zero() {
                    continue;
                }
                for k in c..self.cols {
                    let pv = self.get(lead, k);
                    if pv.is_zero() {
                        continue;
                    }
                    let v = self.get(r, k) - &(&f * pv);
                    self.set(r, k, v);
                }
            }
            pivots.push(c);
            lead += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        let mut rs = RowSpace::new(self.field, self.cols);
        for r in 0..self.rows {
            rs.insert(self.row(r).to_vec());
        }
        rs.dim()
    }

    /// Basis of the right null space, in reduced echelon form.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let (red, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let raw: Vec<Vec<Scalar>> = free
            .iter()
            .map(|&f| {
                let mut v = vec![self.field.zero(); self.cols];
                v[f] = self.field.one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -red.get(i, f);
                }
                v
            })
            .collect();
        if raw.is_empty() {
            return raw;
        }
        let (basis, _) = ExactMatrix::from_rows(self.field, raw)
            .expect("uniform rows")
            .rref();
        (0..basis.rows).map(|r| basis.row(r).to_vec()).collect()
    }

    /// The echelon particular solution (free variables zero), or `None` if inconsistent.
    pub fn solve_linear(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if b.len() != self.rows {
            return Err(Error::Dimension(format!(
                "right-hand side of length {} for {} rows",
                b.len(),
                self.rows
            )));
        }
        let mut aug = Self::zeros(self.field, self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, b[r].clone());
        }
        let pivots = aug.rref_in_place();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = aug.get(i, self.cols).clone();
        }
        Ok(Some(x))
    }

    /// Reduces a rational matrix modulo `p`; `None` if a denominator vanishes.
    pub fn reduce_mod(&self, p: FieldSpec) -> Option<ExactMatrix> {
        let data: Option<Vec<Scalar>> = self.data.iter().map(|s| p.convert(s).ok()).collect();
        Some(ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            field: p,
            data: data?,
        })
    }
}

pub fn dot(field: FieldSpec, a: &[Scalar], b: &[Scalar]) -> Scalar {
    let mut acc = field.zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc = &acc + &(x * y);
        }
    }
    acc
}

/// Incrementally maintained row space in reduced echelon form.
#[derive(Clone, Debug)]
pub struct RowSpace {
    field: FieldSpec,
    width: usize,
    // Each row is normalized with leading 1 at its pivot; rows are fully reduced against each other.
    rows: Vec<(usize, Vec<Scalar>)>,
}

impl RowSpace {
    pub fn new(field: FieldSpec, width: usize) -> Self {
        RowSpace {
            field,
            width,
            rows: Vec::new(),
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// Reduces `v` against the current basis.
    pub fn reduce(&self, mut v: Vec<Scalar>) -> Vec<Scalar> {
        for (p, row) in &self.rows {
            let f = v[*p].clone();
            if f.is_zero() {
                continue;
            }
            for (k, rv) in row.iter().enumerate().skip(*p) {
                if !rv.is_zero() {
                    v[k] = &v[k] - &(&f * rv);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v.to_vec()).iter().all(Scalar::is_zero)
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: Vec<Scalar>) -> bool {
        assert_eq!(v.len(), self.width, "row width mismatch");
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|s| !s.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().expect("nonzero");
        for s in v.iter_mut().skip(p) {
            *s = &*s * &inv;
        }
        for (_, row) in self.rows.iter_mut() {
            let f = row[p].clone();
            if f.is_zero() {
                continue;
            }
            for k in p..self.width {
                if !v[k].is_zero() {
                    row[k] = &row[k] - &(&f * &v[k]);
                }
            }
        }
        let pos = self.rows.partition_point(|(q, _)| *q < p);
        self.rows.insert(pos, (p, v));
        true
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|(p, _)| *p).collect()
    }

    /// Basis in reduced echelon form, ordered by pivot.
    pub fn basis(&self) -> Vec<Vec<Scalar>> {
        self.rows.iter().map(|(_, r)| r.clone()).collect()
    }

    pub fn to_matrix(&self) -> ExactMatrix {
        let mut m = ExactMatrix::zeros(self.field, self.rows.len(), self.width);
        for (i, (_, r)) in self.rows.iter().enumerate() {
            for (k, v) in r.iter().enumerate() {
                m.set(i, k, v.clone());
            }
        }
        m
    }

    /// Vectors `u` with `u·v = 0` for every `v` in the space (the annihilator).
    pub fn annihilator(&self) -> Vec<Vec<Scalar>> {
        if self.rows.is_empty() {
            return (0..self.width)
                .map(|i| {
                    let mut e = vec![self.field.zero(); self.width];
                    e[i] = self.field.one();
                    e
                })
                .collect();
        }
        self.to_matrix().kernel_basis()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    #[test]
    fn small_ranks() {
        assert_eq!(ExactMatrix::identity(q(), 3).rank(), 3);
        assert_eq!(ExactMatrix::from_i64(q(), &[vec![1, 2], vec![2, 4]]).rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        assert!(ExactMatrix::identity(q(), 3).kernel_basis().is_empty());
        let k = ExactMatrix::from_i64(q(), &[vec![1, 1]]).kernel_basis();
        assert_eq!(k, vec![vec![q().from_i64(1), q().from_i64(-1)]]);
    }

    #[test]
    fn solve_examples() {
        let id = ExactMatrix::identity(q(), 2);
        let b = vec![q().from_i64(3), q().from_i64(-5)];
        assert_eq!(id.solve_linear(&b).unwrap(), Some(b.clone()));
        let m = ExactMatrix::from_i64(q(), &[vec![1], vec![0]]);
        assert_eq!(
            m.solve_linear(&[q().from_i64(0), q().from_i64(1)]).unwrap(),
            None
        );
    }

    #[test]
    fn row_space_annihilator() {
        let mut rs = RowSpace::new(q(), 3);
        rs.insert(vec![q().from_i64(1), q().from_i64(1), q().from_i64(0)]);
        let ann = rs.annihilator();
        assert_eq!(ann.len(), 2);
        for a in ann {
            assert!(dot(q(), &a, &[q().from_i64(1), q().from_i64(1), q().from_i64(0)]).is_zero());
        }
    }

    fn arb_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1usize..6, 1usize..6).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::collection::vec(-3i64..4, c), r)
        })
    }

    proptest! {
        #[test]
        fn rank_transpose_and_nullity(rows in arb_matrix()) {
            let m = ExactMatrix::from_i64(q(), &rows);
            prop_assert_eq!(m.rank(), m.transpose().rank());
            prop_assert_eq!(m.rank() + m.kernel_basis().len(), m.cols());
            for k in m.kernel_basis() {
                prop_assert!(m.mul_vec(&k).unwrap().iter().all(Scalar::is_zero));
            }
        }

        #[test]
        fn solutions_satisfy_system(rows in arb_matrix(), seed in proptest::collection::vec(-3i64..4, 6)) {
            let m = ExactMatrix::from_i64(q(), &rows);
            let x: Vec<Scalar> = (0..m.cols()).map(|i| q().from_i64(seed[i])).collect();
            let b = m.mul_vec(&x).unwrap();
            let sol = m.solve_linear(&b).unwrap().expect("consistent by construction");
            prop_assert_eq!(m.mul_vec(&sol).unwrap(), b);
        }
    }
}

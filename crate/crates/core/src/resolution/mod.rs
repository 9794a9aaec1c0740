//! Graded free complexes and their verification.

mod fcomplex;
mod pfaffian;

pub use fcomplex::{
    build_f_complex, fitting_minor, fitting_minor_check, koszul_complex, FComplex, SignConvention,
};
pub use pfaffian::{lift_chain_map, pfaffians, ChainLift, PfaffianSystem};

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::graded::{graded_dim, monomial_basis, GradedPoly, Monomial, VariableFrame};
use crate::linalg::ExactMatrix;
use crate::macaulay::HilbertSequence;

/// Polynomial grid, rows first.
pub type PolyGrid = Vec<Vec<GradedPoly>>;

/// `⊕ R(−d)` over the listed generator degrees `d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GradedFreeModule {
    pub degrees: Vec<i64>,
}

impl GradedFreeModule {
    pub fn new(degrees: Vec<i64>) -> Self {
        GradedFreeModule { degrees }
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    /// `dim (⊕ R(−d))_e`.
    pub fn hilbert(&self, frame: VariableFrame, e: i64) -> i64 {
        self.degrees
            .iter()
            .map(|&d| graded_dim(frame, e - d) as i64)
            .sum()
    }
}

/// A degree-zero map `source → target`; entry `(i,k)` has degree `source_k − target_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMatrix {
    pub frame: VariableFrame,
    pub field: FieldSpec,
    pub source: GradedFreeModule,
    pub target: GradedFreeModule,
    pub entries: PolyGrid,
    pub row_blocks: Vec<usize>,
    pub col_blocks: Vec<usize>,
}

pub(crate) fn zero_poly(frame: VariableFrame, field: FieldSpec) -> GradedPoly {
    GradedPoly::zero(frame, field, 0)
}

impl GradedMatrix {
    pub fn new(
        frame: VariableFrame,
        field: FieldSpec,
        target: GradedFreeModule,
        source: GradedFreeModule,
        entries: PolyGrid,
    ) -> Result<Self> {
        if entries.len() != target.rank() || entries.iter().any(|r| r.len() != source.rank()) {
            return Err(Error::Dimension(format!(
                "entries are not {}×{}",
                target.rank(),
                source.rank()
            )));
        }
        let m = GradedMatrix {
            frame,
            field,
            row_blocks: vec![target.rank()],
            col_blocks: vec![source.rank()],
            source,
            target,
            entries,
        };
        if let Some((i, k)) = m.degree_violation() {
            return Err(Error::NotHomogeneous(format!(
                "entry ({i},{k}) = {} should have degree {}",
                m.entries[i][k],
                m.source.degrees[k] - m.target.degrees[i]
            )));
        }
        Ok(m)
    }

    /// Infers source degrees from the first nonzero entry of each column.
    pub fn infer(
        frame: VariableFrame,
        field: FieldSpec,
        target: GradedFreeModule,
        entries: PolyGrid,
    ) -> Result<Self> {
        let cols = entries.first().map_or(0, Vec::len);
        let mut degrees = Vec::with_capacity(cols);
        for k in 0..cols {
            let i = (0..entries.len())
                .find(|&i| !entries[i][k].is_zero())
                .ok_or_else(|| Error::Degenerate(format!("column {k} is zero; its degree is undetermined")))?;
            degrees.push(target.degrees[i] + entries[i][k].degree() as i64);
        }
        Self::new(frame, field, target, GradedFreeModule::new(degrees), entries)
    }

    pub fn with_blocks(mut self, rows: Vec<usize>, cols: Vec<usize>) -> Self {
        debug_assert_eq!(rows.iter().sum::<usize>(), self.target.rank());
        debug_assert_eq!(cols.iter().sum::<usize>(), self.source.rank());
        self.row_blocks = rows;
        self.col_blocks = cols;
        self
    }

    pub fn rows(&self) -> usize {
        self.target.rank()
    }

    pub fn cols(&self) -> usize {
        self.source.rank()
    }

    pub fn degree_violation(&self) -> Option<(usize, usize)> {
        for (i, row) in self.entries.iter().enumerate() {
            for (k, e) in row.iter().enumerate() {
                if !e.is_zero() && e.degree() as i64 != self.source.degrees[k] - self.target.degrees[i] {
                    return Some((i, k));
                }
            }
        }
        None
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GradedMatrix) -> Result<GradedMatrix> {
        if self.cols() != other.rows() {
            return Err(Error::Dimension(format!(
                "cannot compose {}×{} with {}×{}",
                self.rows(),
                self.cols(),
                other.rows(),
                other.cols()
            )));
        }
        let entries = grid_mul(&self.entries, &other.entries, self.frame, self.field)?;
        Ok(GradedMatrix {
            frame: self.frame,
            field: self.field,
            source: other.source.clone(),
            target: self.target.clone(),
            entries,
            row_blocks: self.row_blocks.clone(),
            col_blocks: other.col_blocks.clone(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(GradedPoly::is_zero)
    }

    /// Block indices containing entry `(i,k)`.
    pub fn block_of(&self, i: usize, k: usize) -> (usize, usize) {
        let find = |sizes: &[usize], mut x: usize| {
            for (b, &s) in sizes.iter().enumerate() {
                if x < s {
                    return b;
                }
                x -= s;
            }
            sizes.len()
        };
        (find(&self.row_blocks, i), find(&self.col_blocks, k))
    }
}

pub(crate) fn grid_mul(a: &PolyGrid, b: &PolyGrid, frame: VariableFrame, field: FieldSpec) -> Result<PolyGrid> {
    let n = b.first().map_or(0, Vec::len);
    let mut out = vec![vec![zero_poly(frame, field); n]; a.len()];
    for (i, row) in a.iter().enumerate() {
        for (k, aik) in row.iter().enumerate() {
            if aik.is_zero() {
                continue;
            }
            for (l, bkl) in b[k].iter().enumerate() {
                if !bkl.is_zero() {
                    out[i][l] = out[i][l].add(&aik.multiply(bkl)?)?;
                }
            }
        }
    }
    Ok(out)
}

pub(crate) fn grid_transpose(a: &PolyGrid) -> PolyGrid {
    let n = a.first().map_or(0, Vec::len);
    (0..n).map(|k| a.iter().map(|r| r[k].clone()).collect()).collect()
}

pub(crate) fn grid_scale(a: &PolyGrid, s: &Scalar) -> PolyGrid {
    a.iter().map(|r| r.iter().map(|p| p.scale(s)).collect()).collect()
}

/// Solves `A·u = b` over `R` in degree `e`: `u_k ∈ R_{e − source_k}`, `b_i ∈ R_{e − target_i}`.
pub(crate) fn solve_graded(
    frame: VariableFrame,
    field: FieldSpec,
    a: &PolyGrid,
    source: &[i64],
    target: &[i64],
    b: &[GradedPoly],
    e: i64,
) -> Result<Option<Vec<GradedPoly>>> {
    let mut unknowns: Vec<(usize, Monomial)> = Vec::new();
    for (k, &s) in source.iter().enumerate() {
        if e - s >= 0 {
            for m in monomial_basis(frame, (e - s) as u32) {
                unknowns.push((k, m));
            }
        }
    }
    // One row block per target coordinate, in the monomial basis of R_{e − target_i}.
    let mut offsets = Vec::with_capacity(target.len());
    let mut total = 0;
    for &t in target {
        offsets.push(total);
        total += graded_dim(frame, e - t) as usize;
    }
    let mut cols = Vec::with_capacity(unknowns.len());
    for (k, m) in &unknowns {
        let mono = GradedPoly::monomial(frame, field, m.clone());
        let mut col = vec![field.zero(); total];
        for (i, row) in a.iter().enumerate() {
            if row[*k].is_zero() {
                continue;
            }
            let p = row[*k].multiply(&mono)?;
            for (idx, c) in p.to_vector().into_iter().enumerate() {
                col[offsets[i] + idx] = c;
            }
        }
        cols.push(col);
    }
    let mut rhs = vec![field.zero(); total];
    for (i, bi) in b.iter().enumerate() {
        if bi.is_zero() {
            continue;
        }
        if bi.degree() as i64 != e - target[i] {
            return Err(Error::NotHomogeneous(format!(
                "right-hand side entry {i} has degree {}, expected {}",
                bi.degree(),
                e - target[i]
            )));
        }
        for (idx, c) in bi.to_vector().into_iter().enumerate() {
            rhs[offsets[i] + idx] = c;
        }
    }
    let mut u: Vec<GradedPoly> = source
        .iter()
        .map(|&s| GradedPoly::zero(frame, field, (e - s).max(0) as u32))
        .collect();
    if unknowns.is_empty() {
        return Ok(rhs.iter().all(Scalar::is_zero).then_some(u));
    }
    let mat = ExactMatrix::from_rows(field, cols)?.transpose();
    let Some(sol) = mat.solve_linear(&rhs)? else {
        return Ok(None);
    };
    for ((k, m), c) in unknowns.into_iter().zip(sol) {
        if !c.is_zero() {
            let t = GradedPoly::monomial(frame, field, m).scale(&c);
            u[k] = u[k].add(&t)?;
        }
    }
    Ok(Some(u))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ComplexLabel {
    Koszul,
    JResolution,
    FComplex,
}

/// `maps[i] : F_{i+1} → F_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionComplex {
    pub label: ComplexLabel,
    pub maps: Vec<GradedMatrix>,
}

impl ResolutionComplex {
    pub fn new(label: ComplexLabel, maps: Vec<GradedMatrix>) -> Result<Self> {
        for (i, w) in maps.windows(2).enumerate() {
            if w[0].source != w[1].target {
                return Err(Error::Dimension(format!(
                    "source of map {} does not match target of map {}",
                    i + 1,
                    i + 2
                )));
            }
        }
        Ok(ResolutionComplex { label, maps })
    }

    /// `F_0, F_1, …`.
    pub fn modules(&self) -> Vec<GradedFreeModule> {
        let mut out: Vec<GradedFreeModule> = self.maps.first().map(|m| m.target.clone()).into_iter().collect();
        out.extend(self.maps.iter().map(|m| m.source.clone()));
        out
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.modules().iter().map(GradedFreeModule::rank).collect()
    }

    pub fn betti_table(&self) -> BettiTable {
        let mut t = BTreeMap::new();
        for (i, m) in self.modules().iter().enumerate() {
            for &d in &m.degrees {
                *t.entry(i).or_insert_with(BTreeMap::new).entry(d).or_insert(0) += 1;
            }
        }
        BettiTable(t)
    }
}

/// `β_{i,d}`: number of generators of degree `d` in `F_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BettiTable(pub BTreeMap<usize, BTreeMap<i64, usize>>);

impl BettiTable {
    pub fn get(&self, i: usize, d: i64) -> usize {
        self.0.get(&i).and_then(|r| r.get(&d)).copied().unwrap_or(0)
    }

    /// `β_{i,d} = β_{n−i, s−d}` where `n` is the length and `s` the top degree.
    pub fn is_symmetric(&self) -> bool {
        let Some(&n) = self.0.keys().max() else {
            return true;
        };
        let Some(&s) = self.0.get(&n).and_then(|r| r.keys().max()) else {
            return true;
        };
        self.0
            .iter()
            .all(|(&i, row)| row.iter().all(|(&d, &b)| self.get(n - i, s - d) == b))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompositionFailure {
    /// Composition `maps[map] ∘ maps[map+1]` (0-based).
    pub map: usize,
    pub row: usize,
    pub col: usize,
    pub row_block: usize,
    pub col_block: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerRow {
    pub degree: i64,
    pub alternating_sum: i64,
    pub expected: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexReport {
    pub ranks: Vec<usize>,
    pub compositions_zero: bool,
    pub composition_failures: Vec<CompositionFailure>,
    pub degree_compatible: bool,
    pub minimal: bool,
    /// `(map, row, col)` of nonzero scalar entries.
    pub nonminimal_entries: Vec<(usize, usize, usize)>,
    pub euler_holds: bool,
    pub euler: Vec<EulerRow>,
    pub betti: BettiTable,
    pub betti_symmetric: bool,
}

impl ComplexReport {
    pub fn all_pass(&self) -> bool {
        self.compositions_zero && self.degree_compatible && self.minimal && self.euler_holds
    }
}

/// Necessary conditions for `C` to be the minimal resolution of an algebra with Hilbert function `h`.
pub fn verify_complex(c: &ResolutionComplex, h: &HilbertSequence, up_to: i64) -> Result<ComplexReport> {
    let mut composition_failures = Vec::new();
    for (k, w) in c.maps.windows(2).enumerate() {
        let p = w[0].compose(&w[1])?;
        if let Some((i, l)) = (0..p.rows())
            .flat_map(|i| (0..p.cols()).map(move |l| (i, l)))
            .find(|&(i, l)| !p.entries[i][l].is_zero())
        {
            let (row_block, _) = w[0].block_of(i, 0);
            let (_, col_block) = w[1].block_of(0, l);
            composition_failures.push(CompositionFailure {
                map: k,
                row: i,
                col: l,
                row_block,
                col_block,
            });
        }
    }
    let degree_compatible = c.maps.iter().all(|m| m.degree_violation().is_none());
    let mut nonminimal_entries = Vec::new();
    for (k, m) in c.maps.iter().enumerate() {
        for (i, row) in m.entries.iter().enumerate() {
            for (l, e) in row.iter().enumerate() {
                if !e.is_zero() && e.degree() == 0 {
                    nonminimal_entries.push((k, i, l));
                }
            }
        }
    }
    let frame = c.maps.first().map_or(VariableFrame::Wxyz, |m| m.frame);
    let modules = c.modules();
    let euler: Vec<EulerRow> = (0..=up_to)
        .map(|d| {
            let alternating_sum = modules
                .iter()
                .enumerate()
                .map(|(i, m)| if i % 2 == 0 { 1 } else { -1 } * m.hilbert(frame, d))
                .sum();
            EulerRow {
                degree: d,
                alternating_sum,
                expected: h.get(d as usize),
            }
        })
        .collect();
    let betti = c.betti_table();
    Ok(ComplexReport {
        ranks: c.ranks(),
        compositions_zero: composition_failures.is_empty(),
        composition_failures,
        degree_compatible,
        minimal: nonminimal_entries.is_empty(),
        nonminimal_entries,
        euler_holds: euler.iter().all(|r| r.alternating_sum == r.expected),
        euler,
        betti_symmetric: betti.is_symmetric(),
        betti,
    })
}

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::graded::{GradedPoly, VariableFrame};

use super::pfaffian::{lift_chain_map, ChainLift, PfaffianSystem};
use super::{
    grid_mul, grid_scale, grid_transpose, zero_poly, ComplexLabel, GradedFreeModule, GradedMatrix,
    PolyGrid, ResolutionComplex,
};

fn xyz(frame: VariableFrame, field: FieldSpec) -> [GradedPoly; 3] {
    let o = frame.r() - 3;
    [0, 1, 2].map(|i| GradedPoly::var(frame, field, o + i))
}

/// `δ₁ = [x,y,z]`, `δ₂` as displayed, `δ₃ = (z,−y,x)^t`.
pub(crate) fn koszul_maps(frame: VariableFrame, field: FieldSpec) -> [PolyGrid; 3] {
    let [x, y, z] = xyz(frame, field);
    let o = zero_poly(frame, field);
    [
        vec![vec![x.clone(), y.clone(), z.clone()]],
        vec![
            vec![y.clone(), z.clone(), o.clone()],
            vec![x.neg(), o.clone(), z.clone()],
            vec![o, x.neg(), y.neg()],
        ],
        vec![vec![z], vec![y.neg()], vec![x]],
    ]
}

/// The Koszul complex on the last three variables of `frame`.
pub fn koszul_complex(frame: VariableFrame, field: FieldSpec) -> Result<ResolutionComplex> {
    let [d1, d2, d3] = koszul_maps(frame, field);
    let m1 = GradedMatrix::infer(frame, field, GradedFreeModule::new(vec![0]), d1)?;
    let m2 = GradedMatrix::infer(frame, field, m1.source.clone(), d2)?;
    let m3 = GradedMatrix::infer(frame, field, m2.source.clone(), d3)?;
    ResolutionComplex::new(ComplexLabel::Koszul, vec![m1, m2, m3])
}

/// Signs fixed by the builder so that all compositions vanish.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignConvention {
    /// Anti-diagonal of the reversal matrix `E`, top row first.
    pub reversal: [i8; 3],
    /// `(block name, sign)` relative to the displayed layout.
    pub blocks: Vec<(String, i8)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FComplex {
    pub complex: ResolutionComplex,
    pub lift: ChainLift,
    pub signs: SignConvention,
    pub m: usize,
    pub j: u32,
}

struct Block {
    name: &'static str,
    row: usize,
    grid: PolyGrid,
    default: i8,
}

fn identity(n: usize, p: &GradedPoly, frame: VariableFrame, field: FieldSpec) -> PolyGrid {
    (0..n)
        .map(|i| (0..n).map(|k| if i == k { p.clone() } else { zero_poly(frame, field) }).collect())
        .collect()
}

fn reversal(e: [i8; 3], frame: VariableFrame, field: FieldSpec) -> PolyGrid {
    let mut g = vec![vec![zero_poly(frame, field); 3]; 3];
    for (i, &s) in e.iter().enumerate() {
        g[i][2 - i] = GradedPoly::one(frame, field).scale(&field.from_i64(s as i64));
    }
    g
}

fn assemble(rows: usize, width: usize, blocks: &[Block], signs: &[i8], frame: VariableFrame, field: FieldSpec) -> PolyGrid {
    let mut g = vec![vec![zero_poly(frame, field); width]; rows];
    for (b, &s) in blocks.iter().zip(signs) {
        let sc = field.from_i64(s as i64);
        for (i, r) in b.grid.iter().enumerate() {
            for (k, p) in r.iter().enumerate() {
                g[b.row + i][k] = p.scale(&sc);
            }
        }
    }
    g
}

/// Tries every sign flip of `blocks`, displayed signs first, until `left · column = 0`.
fn search_column(
    left: &PolyGrid,
    rows: usize,
    width: usize,
    blocks: &[Block],
    frame: VariableFrame,
    field: FieldSpec,
) -> Result<Option<(PolyGrid, Vec<i8>)>> {
    for mask in 0u32..(1 << blocks.len()) {
        let signs: Vec<i8> = blocks
            .iter()
            .enumerate()
            .map(|(k, b)| if mask >> k & 1 == 1 { -b.default } else { b.default })
            .collect();
        let col = assemble(rows, width, blocks, &signs, frame, field);
        if grid_mul(left, &col, frame, field)?.iter().flatten().all(GradedPoly::is_zero) {
            return Ok(Some((col, signs)));
        }
    }
    Ok(None)
}

fn hconcat(parts: Vec<PolyGrid>) -> PolyGrid {
    let rows = parts[0].len();
    (0..rows)
        .map(|i| parts.iter().flat_map(|p| p[i].iter().cloned()).collect())
        .collect()
}

fn record(out: &mut Vec<(String, i8)>, blocks: &[Block], signs: &[i8]) {
    out.extend(blocks.iter().zip(signs).map(|(b, &s)| (b.name.to_string(), s)));
}

/// The complex `R ← R^{m+4} ← R^{2m+6} ← R^{m+4} ← R` for `I = (wx,wy,wz, α, w^j − g)`.
pub fn build_f_complex(sys: &PfaffianSystem, g: &GradedPoly, j: u32) -> Result<FComplex> {
    if sys.socle_degree() != j as i64 {
        return Err(Error::InvalidArgument(format!(
            "the Pfaffian ideal has socle degree {}, not {j}",
            sys.socle_degree()
        )));
    }
    if g.degree() != j {
        return Err(Error::InvalidArgument(format!("g must have degree {j}")));
    }
    let lift = lift_chain_map(g, sys)?;
    let frame = VariableFrame::Wxyz;
    let field = sys.field();
    let m = sys.m;
    let emb = |a: &PolyGrid| -> PolyGrid { a.iter().map(|r| r.iter().map(GradedPoly::embed).collect()).collect() };
    let g = g.embed();
    let w = GradedPoly::var(frame, field, 0);
    let wj1 = w.pow(j - 1);
    let f = w.pow(j).sub(&g)?;
    let [d1, d2, _] = koszul_maps(frame, field);
    let phi = emb(&sys.phi.entries);
    let alpha: Vec<GradedPoly> = sys.alpha.iter().map(GradedPoly::embed).collect();
    let t1 = emb(&lift.t1);
    let t2 = emb(&lift.t2);
    let gamma = lift.gamma.clone();
    let inv_gamma = gamma.inv().expect("γ ≠ 0");
    let gphi = grid_scale(&phi, &gamma);
    let mut names = Vec::new();
    let fail = |what: &str| Error::Verification(format!("no sign choice makes {what} vanish"));

    let mut f1 = vec![d1[0].iter().map(|v| w.multiply(v).expect("same frame")).collect::<Vec<_>>()];
    f1[0].extend(alpha.iter().cloned());
    f1[0].push(f.clone());

    // F₂: rows (3, m, 1), columns (3, m, m, 3).
    let r2 = m + 4;
    let col_a = [Block { name: "F2.delta2", row: 0, grid: d2.clone(), default: 1 }];
    let col_b = [Block { name: "F2.phi", row: 3, grid: phi.clone(), default: 1 }];
    let (a, s) = search_column(&f1, r2, 3, &col_a, frame, field)?.ok_or_else(|| fail("F1·F2 (δ₂ block)"))?;
    record(&mut names, &col_a, &s);
    let (b, s) = search_column(&f1, r2, m, &col_b, frame, field)?.ok_or_else(|| fail("F1·F2 (φ block)"))?;
    record(&mut names, &col_b, &s);
    let mut found = None;
    for ebits in 0u32..8 {
        let e = [0, 1, 2].map(|k| if ebits >> k & 1 == 1 { -1i8 } else { 1 });
        let et2 = grid_scale(&grid_mul(&reversal(e, frame, field), &grid_transpose(&t2), frame, field)?, &inv_gamma);
        let col_c = [
            Block { name: "F2.E·T2^t/γ", row: 0, grid: et2, default: -1 },
            Block { name: "F2.w·I", row: 3, grid: identity(m, &w, frame, field), default: 1 },
        ];
        if let Some((c, s)) = search_column(&f1, r2, m, &col_c, frame, field)? {
            record(&mut names, &col_c, &s);
            found = Some((e, c));
            break;
        }
    }
    let (e, c) = found.ok_or_else(|| fail("F1·F2 (E·T₂^t block)"))?;
    let col_d = [
        Block { name: "F2.w^(j-1)·I", row: 0, grid: identity(3, &wj1, frame, field), default: 1 },
        Block { name: "F2.T1", row: 3, grid: t1.clone(), default: 1 },
        Block { name: "F2.delta1", row: 3 + m, grid: d1.clone(), default: -1 },
    ];
    let (d, s) = search_column(&f1, r2, 3, &col_d, frame, field)?.ok_or_else(|| fail("F1·F2 (T₁ block)"))?;
    record(&mut names, &col_d, &s);
    let f2 = hconcat(vec![a, b, c, d]);

    // F₃: rows (3, m, m, 3), columns (3, m, 1).
    let r3 = 2 * m + 6;
    let egrid = reversal(e, frame, field);
    let ed1t = grid_mul(&egrid, &grid_transpose(&d1), frame, field)?;
    let col0 = [
        Block { name: "F3.w^(j-1)·I", row: 0, grid: identity(3, &wj1, frame, field), default: 1 },
        Block { name: "F3.T2", row: 3, grid: t2.clone(), default: 1 },
        Block { name: "F3.delta2", row: 3 + 2 * m, grid: d2.clone(), default: -1 },
    ];
    let gw = w.scale(&gamma);
    let col1 = [
        Block { name: "F3.E·T1^t", row: 0, grid: grid_mul(&egrid, &grid_transpose(&t1), frame, field)?, default: 1 },
        Block { name: "F3.γw·I", row: 3, grid: identity(m, &gw, frame, field), default: -1 },
        Block { name: "F3.γφ", row: 3 + m, grid: gphi, default: 1 },
    ];
    let col2 = [Block { name: "F3.E·delta1^t", row: 0, grid: ed1t.clone(), default: -1 }];
    let mut parts = Vec::new();
    for (blocks, width, what) in [(&col0[..], 3, "F2·F3 (first column block)"), (&col1[..], m, "F2·F3 (second column block)"), (&col2[..], 1, "F2·F3 (last column)")] {
        let (p, s) = search_column(&f2, r3, width, blocks, frame, field)?.ok_or_else(|| fail(what))?;
        record(&mut names, blocks, &s);
        parts.push(p);
    }
    let f3 = hconcat(parts);

    // F₄: rows (3, m, 1).
    let col4 = [
        Block { name: "F4.w·E·delta1^t", row: 0, grid: grid_mul(&ed1t, &vec![vec![w.clone()]], frame, field)?, default: 1 },
        Block { name: "F4.alpha^t", row: 3, grid: alpha.iter().map(|a| vec![a.clone()]).collect(), default: 1 },
        Block { name: "F4.w^j-g", row: 3 + m, grid: vec![vec![f.clone()]], default: 1 },
    ];
    let (f4, s) = search_column(&f3, m + 4, 1, &col4, frame, field)?.ok_or_else(|| fail("F3·F4"))?;
    record(&mut names, &col4, &s);

    let m1 = GradedMatrix::infer(frame, field, GradedFreeModule::new(vec![0]), f1)?.with_blocks(vec![1], vec![3, m, 1]);
    let m2 = GradedMatrix::infer(frame, field, m1.source.clone(), f2)?.with_blocks(vec![3, m, 1], vec![3, m, m, 3]);
    let m3 = GradedMatrix::infer(frame, field, m2.source.clone(), f3)?.with_blocks(vec![3, m, m, 3], vec![3, m, 1]);
    let m4 = GradedMatrix::infer(frame, field, m3.source.clone(), f4)?.with_blocks(vec![3, m, 1], vec![1]);
    let complex = ResolutionComplex::new(ComplexLabel::FComplex, vec![m1, m2, m3, m4])?;
    Ok(FComplex {
        complex,
        lift,
        signs: SignConvention { reversal: e, blocks: names },
        m,
        j,
    })
}

fn determinant(a: &PolyGrid, frame: VariableFrame, field: FieldSpec) -> Result<GradedPoly> {
    let n = a.len();
    if n == 0 {
        return Ok(GradedPoly::one(frame, field));
    }
    let mut out = zero_poly(frame, field);
    for k in 0..n {
        if a[0][k].is_zero() {
            continue;
        }
        let minor: PolyGrid = a[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|&(c, _)| c != k).map(|(_, p)| p.clone()).collect())
            .collect();
        let t = a[0][k].multiply(&determinant(&minor, frame, field)?)?;
        out = if k % 2 == 0 { out.add(&t)? } else { out.sub(&t)? };
    }
    Ok(out)
}

/// The `(m+3)`-minor of `F₂` omitting the `i`-th row of the `φ` block and using columns
/// `δ₂` 1–2, the `φ` columns other than `i`, column `i` of the `E·T₂^t` block and the first `w^(j−1)` column.
pub fn fitting_minor(fc: &FComplex, i: usize) -> Result<GradedPoly> {
    let m = fc.m;
    if i >= m {
        return Err(Error::InvalidArgument(format!("index {i} out of range 0..{m}")));
    }
    let f2 = &fc.complex.maps[1];
    let rows: Vec<usize> = (0..m + 4).filter(|&r| r != 3 + i).collect();
    let mut cols = vec![0, 1];
    cols.extend((3..3 + m).filter(|&c| c != 3 + i));
    cols.push(3 + m + i);
    cols.push(3 + 2 * m);
    let sub: PolyGrid = rows
        .iter()
        .map(|&r| cols.iter().map(|&c| f2.entries[r][c].clone()).collect())
        .collect();
    determinant(&sub, f2.frame, f2.field)
}

/// Whether the minor equals `±x²·α_i³`, so that `x·α_i` lies in the radical of the Fitting ideal.
pub fn fitting_minor_check(fc: &FComplex, i: usize) -> Result<bool> {
    let f2 = &fc.complex.maps[1];
    let (frame, field) = (f2.frame, f2.field);
    let minor = fitting_minor(fc, i)?;
    let x = GradedPoly::var(frame, field, 1);
    let alpha = &fc.complex.maps[0].entries[0][3 + i];
    let target = x.pow(2).multiply(&alpha.pow(3))?;
    let neg: Scalar = -&field.one();
    Ok(minor.sub(&target)?.is_zero() || minor.sub(&target.scale(&neg))?.is_zero())
}

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::graded::{GradedPoly, VariableFrame};

use super::{grid_mul, solve_graded, zero_poly, GradedFreeModule, GradedMatrix, PolyGrid};

fn check_alternating(phi: &PolyGrid) -> Result<()> {
    let m = phi.len();
    if phi.iter().any(|r| r.len() != m) {
        return Err(Error::Dimension("phi is not square".into()));
    }
    for i in 0..m {
        if !phi[i][i].is_zero() {
            return Err(Error::InvalidArgument(format!("phi has nonzero diagonal entry {i}")));
        }
        for k in i + 1..m {
            if !phi[i][k].add(&phi[k][i])?.is_zero() {
                return Err(Error::InvalidArgument(format!("phi is not alternating at ({i},{k})")));
            }
        }
    }
    Ok(())
}

/// Pfaffian of the principal submatrix on `idx`, expanded along its first index.
fn pfaffian_of(phi: &PolyGrid, idx: &[usize], frame: VariableFrame, field: FieldSpec) -> Result<GradedPoly> {
    if idx.is_empty() {
        return Ok(GradedPoly::one(frame, field));
    }
    if idx.len() % 2 == 1 {
        return Ok(zero_poly(frame, field));
    }
    let a = idx[0];
    let mut out = zero_poly(frame, field);
    for (pos, &b) in idx.iter().enumerate().skip(1) {
        let e = &phi[a][b];
        if e.is_zero() {
            continue;
        }
        let rest: Vec<usize> = idx.iter().copied().filter(|&t| t != a && t != b).collect();
        let term = e.multiply(&pfaffian_of(phi, &rest, frame, field)?)?;
        out = if pos % 2 == 1 { out.add(&term)? } else { out.sub(&term)? };
    }
    Ok(out)
}

/// Signed maximal Pfaffians: entry `i` is `(−1)^i · Pf(phi without row and column i)`, 0-based.
pub fn pfaffians(phi: &PolyGrid, frame: VariableFrame, field: FieldSpec) -> Result<Vec<GradedPoly>> {
    check_alternating(phi)?;
    let m = phi.len();
    if m % 2 == 0 {
        return Err(Error::InvalidArgument(format!("phi has even size {m}")));
    }
    (0..m)
        .map(|i| {
            let idx: Vec<usize> = (0..m).filter(|&t| t != i).collect();
            let p = pfaffian_of(phi, &idx, frame, field)?;
            Ok(if i % 2 == 0 { p } else { p.neg() })
        })
        .collect()
}

/// `0 → R → R^m → R^m → R` with `alpha` the signed Pfaffians of the alternating `phi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PfaffianSystem {
    pub m: usize,
    pub phi: GradedMatrix,
    pub alpha: Vec<GradedPoly>,
}

impl PfaffianSystem {
    pub fn from_phi(phi: PolyGrid, frame: VariableFrame, field: FieldSpec) -> Result<Self> {
        let alpha = pfaffians(&phi, frame, field)?;
        if alpha.iter().any(GradedPoly::is_zero) {
            return Err(Error::Degenerate("phi has a zero maximal Pfaffian".into()));
        }
        let m = alpha.len();
        if m < 3 {
            return Err(Error::InvalidArgument("phi must have odd size at least 3".into()));
        }
        let target = GradedFreeModule::new(alpha.iter().map(|a| a.degree() as i64).collect());
        let phi = GradedMatrix::infer(frame, field, target, phi)?;
        let sys = PfaffianSystem { m, phi, alpha };
        let row = sys.alpha_row();
        if !grid_mul(&row, &sys.phi.entries, frame, field)?.iter().flatten().all(GradedPoly::is_zero) {
            return Err(Error::Verification("alpha·phi ≠ 0".into()));
        }
        Ok(sys)
    }

    pub fn frame(&self) -> VariableFrame {
        self.phi.frame
    }

    pub fn field(&self) -> FieldSpec {
        self.phi.field
    }

    pub fn alpha_row(&self) -> PolyGrid {
        vec![self.alpha.clone()]
    }

    /// Socle degree of `R'/(alpha)`: the degree of `R(−s)` at the end minus 3.
    pub fn socle_degree(&self) -> i64 {
        let s = self.phi.source.degrees[0] + self.alpha[0].degree() as i64;
        s - 3
    }

    /// The resolution `R ← R^m ← R^m ← R`.
    pub fn complex(&self) -> Result<super::ResolutionComplex> {
        let frame = self.frame();
        let field = self.field();
        let a = GradedMatrix::new(
            frame,
            field,
            GradedFreeModule::new(vec![0]),
            self.phi.target.clone(),
            self.alpha_row(),
        )?;
        let at = GradedMatrix::infer(
            frame,
            field,
            self.phi.source.clone(),
            self.alpha.iter().map(|p| vec![p.clone()]).collect(),
        )?;
        super::ResolutionComplex::new(super::ComplexLabel::JResolution, vec![a, self.phi.clone(), at])
    }
}

/// Chain map `T : 𝕂 → 𝕁` over multiplication by `g`: `αT₁ = gδ₁`, `φT₂ = T₁δ₂`, `T₂δ₃ = γα^t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainLift {
    pub t1: PolyGrid,
    pub t2: PolyGrid,
    pub gamma: Scalar,
}

pub fn lift_chain_map(g: &GradedPoly, j: &PfaffianSystem) -> Result<ChainLift> {
    let frame = j.frame();
    let field = j.field();
    if g.is_zero() {
        return Err(Error::Degenerate("g = 0".into()));
    }
    let g = match (g.frame(), frame) {
        (a, b) if a == b => g.clone(),
        (VariableFrame::Wxyz, VariableFrame::Xyz) => g.restrict()?,
        (VariableFrame::Xyz, VariableFrame::Wxyz) => g.embed(),
        _ => unreachable!(),
    };
    let k = super::fcomplex::koszul_maps(frame, field);
    let (d1, d2, d3) = (&k[0], &k[1], &k[2]);
    let m = j.m;
    let unsolvable = |what: &str| {
        Error::Verification(format!(
            "cannot solve {what}: the system is not a resolution of its Pfaffian ideal"
        ))
    };

    // T₁ column by column from α·t = g·x_k.
    let alpha_deg = &j.phi.target.degrees;
    let e1 = g.degree() as i64 + 1;
    let mut t1 = vec![vec![zero_poly(frame, field); 3]; m];
    for c in 0..3 {
        let rhs = vec![g.multiply(&d1[0][c])?];
        let u = solve_graded(frame, field, &j.alpha_row(), alpha_deg, &[0], &rhs, e1)?
            .ok_or_else(|| unsolvable("α·T₁ = g·δ₁"))?;
        for (i, p) in u.into_iter().enumerate() {
            t1[i][c] = p;
        }
    }

    // T₂ column by column from φ·t = (T₁δ₂)_{·,c}.
    let t1d2 = grid_mul(&t1, d2, frame, field)?;
    let e2 = e1 + 1;
    let mut t2 = vec![vec![zero_poly(frame, field); 3]; m];
    for c in 0..3 {
        let rhs: Vec<GradedPoly> = t1d2.iter().map(|r| r[c].clone()).collect();
        let u = solve_graded(frame, field, &j.phi.entries, &j.phi.source.degrees, alpha_deg, &rhs, e2)?
            .ok_or_else(|| unsolvable("φ·T₂ = T₁·δ₂"))?;
        for (i, p) in u.into_iter().enumerate() {
            t2[i][c] = p;
        }
    }

    // γ from T₂δ₃ = γα^t.
    let t2d3 = grid_mul(&t2, d3, frame, field)?;
    let (mono, c0) = j.alpha[0].terms().iter().next().expect("nonzero Pfaffian");
    let gamma = t2d3[0][0].coeff(mono) * c0.inv().expect("nonzero");
    if gamma.is_zero() {
        return Err(Error::Degenerate(
            "γ = 0: g lies in the Pfaffian ideal J".into(),
        ));
    }
    for (i, a) in j.alpha.iter().enumerate() {
        if !t2d3[i][0].sub(&a.scale(&gamma))?.is_zero() {
            return Err(Error::Verification("T₂δ₃ is not a multiple of α^t".into()));
        }
    }
    // Re-verify the two defining identities.
    let at1 = grid_mul(&j.alpha_row(), &t1, frame, field)?;
    for c in 0..3 {
        if !at1[0][c].sub(&g.multiply(&d1[0][c])?)?.is_zero() {
            return Err(Error::Verification("α·T₁ ≠ g·δ₁".into()));
        }
    }
    let pt2 = grid_mul(&j.phi.entries, &t2, frame, field)?;
    if !grids_equal(&pt2, &t1d2)? {
        return Err(Error::Verification("φ·T₂ ≠ T₁·δ₂".into()));
    }
    Ok(ChainLift { t1, t2, gamma })
}

pub(crate) fn grids_equal(a: &PolyGrid, b: &PolyGrid) -> Result<bool> {
    for (ra, rb) in a.iter().zip(b) {
        for (x, y) in ra.iter().zip(rb) {
            if !x.sub(y)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(a.len() == b.len())
}

//! Homogeneous polynomials in `K[w,x,y,z]` or `K[x,y,z]` and their divided-power duals.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::marker::PhantomData;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

/// The two supported variable sets. Variables are ordered `w > x > y > z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum VariableFrame {
    /// `w, x, y, z`
    Wxyz,
    /// `x, y, z`
    Xyz,
}

impl VariableFrame {
    pub fn r(&self) -> usize {
        match self {
            VariableFrame::Wxyz => 4,
            VariableFrame::Xyz => 3,
        }
    }

    pub fn names(&self) -> &'static [&'static str] {
        match self {
            VariableFrame::Wxyz => &["w", "x", "y", "z"],
            VariableFrame::Xyz => &["x", "y", "z"],
        }
    }

    pub fn dual_names(&self) -> &'static [&'static str] {
        match self {
            VariableFrame::Wxyz => &["W", "X", "Y", "Z"],
            VariableFrame::Xyz => &["X", "Y", "Z"],
        }
    }

    pub fn from_names<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_lowercase()).collect();
        match names.iter().map(String::as_str).collect::<Vec<_>>().as_slice() {
            ["w", "x", "y", "z"] => Ok(VariableFrame::Wxyz),
            ["x", "y", "z"] => Ok(VariableFrame::Xyz),
            other => Err(Error::FrameMismatch(format!(
                "unsupported variable list {other:?}; expected [w,x,y,z] or [x,y,z]"
            ))),
        }
    }

    fn index_of(&self, c: char) -> Option<usize> {
        let c = c.to_ascii_lowercase().to_string();
        self.names().iter().position(|n| *n == c)
    }
}

/// Exponent vector of a monomial. The derived order is lexicographic on exponents,
/// so within one degree `w^d` is the largest monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn one(frame: VariableFrame) -> Self {
        Monomial(vec![0; frame.r()])
    }

    pub fn var(frame: VariableFrame, i: usize) -> Self {
        let mut e = vec![0; frame.r()];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient(&self, other: &Monomial) -> Option<Monomial> {
        self.divides(other)
            .then(|| Monomial(self.0.iter().zip(&other.0).map(|(a, b)| b - a).collect()))
    }

    fn render(&self, names: &[&str], dual: bool) -> String {
        let mut parts = Vec::new();
        for (e, n) in self.0.iter().zip(names) {
            match (e, dual) {
                (0, _) => {}
                (1, _) => parts.push(n.to_string()),
                (e, false) => parts.push(format!("{n}^{e}")),
                (e, true) => parts.push(format!("{n}^[{e}]")),
            }
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

/// All degree-`d` monomials, largest first (`w^d, w^{d-1}x, …, z^d`).
pub fn monomial_basis(frame: VariableFrame, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let r = frame.r();
    let mut cur = vec![0u32; r];
    fill(&mut out, &mut cur, 0, d);
    out
}

fn fill(out: &mut Vec<Monomial>, cur: &mut Vec<u32>, i: usize, left: u32) {
    if i + 1 == cur.len() {
        cur[i] = left;
        out.push(Monomial(cur.clone()));
        return;
    }
    for e in (0..=left).rev() {
        cur[i] = e;
        fill(out, cur, i + 1, left - e);
    }
    cur[i] = 0;
}

pub fn monomial_index(frame: VariableFrame, d: u32) -> HashMap<Monomial, usize> {
    monomial_basis(frame, d)
        .into_iter()
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect()
}

/// `dim R_d = C(d+r-1, r-1)`.
pub fn graded_dim(frame: VariableFrame, d: i64) -> usize {
    if d < 0 {
        return 0;
    }
    binomial(d as u64 + frame.r() as u64 - 1, frame.r() as u64 - 1) as usize
}

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Basis marker for ordinary polynomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Ordinary;
/// Basis marker for divided-power forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DividedPower;

pub trait BasisKind: Clone + fmt::Debug + PartialEq + Eq {
    const DUAL: bool;
}
impl BasisKind for Ordinary {
    const DUAL: bool = false;
}
impl BasisKind for DividedPower {
    const DUAL: bool = true;
}

/// A homogeneous element with coefficients in a fixed monomial basis.
#[derive(Clone, PartialEq, Eq)]
pub struct Form<B: BasisKind> {
    frame: VariableFrame,
    field: FieldSpec,
    degree: u32,
    terms: BTreeMap<Monomial, Scalar>,
    _basis: PhantomData<B>,
}

pub type GradedPoly = Form<Ordinary>;
pub type DividedPowerForm = Form<DividedPower>;

impl<B: BasisKind> fmt::Debug for Form<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<B: BasisKind> fmt::Display for Form<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let names = if B::DUAL {
            self.frame.dual_names()
        } else {
            self.frame.names()
        };
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = if neg { -c } else { c.clone() };
            let mono = m.render(names, B::DUAL);
            let body = match (mag.is_one(), mono.as_str()) {
                (true, _) => mono.clone(),
                (false, "1") => mag.to_string(),
                (false, _) => format!("{mag}*{mono}"),
            };
            match (first, neg) {
                (true, true) => write!(f, "-{body}")?,
                (true, false) => write!(f, "{body}")?,
                (false, true) => write!(f, " - {body}")?,
                (false, false) => write!(f, " + {body}")?,
            }
            first = false;
        }
        Ok(())
    }
}

impl<B: BasisKind> Form<B> {
    pub fn zero(frame: VariableFrame, field: FieldSpec, degree: u32) -> Self {
        Form {
            frame,
            field,
            degree,
            terms: BTreeMap::new(),
            _basis: PhantomData,
        }
    }

    /// Builds a form from `(exponents, coefficient)` pairs; repeated monomials are summed.
    pub fn from_terms(
        frame: VariableFrame,
        field: FieldSpec,
        degree: u32,
        terms: impl IntoIterator<Item = (Monomial, Scalar)>,
    ) -> Result<Self> {
        let mut f = Self::zero(frame, field, degree);
        for (m, c) in terms {
            if m.0.len() != frame.r() {
                return Err(Error::FrameMismatch(format!(
                    "exponent vector {:?} has length {}, frame needs {}",
                    m.0,
                    m.0.len(),
                    frame.r()
                )));
            }
            if m.degree() != degree {
                return Err(Error::NotHomogeneous(format!(
                    "monomial {:?} has degree {}, expected {degree}",
                    m.0,
                    m.degree()
                )));
            }
            let c = field.convert(&c)?;
            f.add_term(m, c);
        }
        Ok(f)
    }

    pub fn monomial(frame: VariableFrame, field: FieldSpec, m: Monomial) -> Self {
        let d = m.degree();
        Self::from_terms(frame, field, d, [(m, field.one())]).expect("valid monomial")
    }

    pub fn frame(&self) -> VariableFrame {
        self.frame
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Scalar> {
        &self.terms
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(|| self.field.zero())
    }

    fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.frame != other.frame {
            return Err(Error::FrameMismatch(format!(
                "{:?} vs {:?}",
                self.frame, other.frame
            )));
        }
        if self.field != other.field {
            return Err(Error::InvalidField(format!(
                "{} vs {}",
                self.field, other.field
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        if self.degree != other.degree && !self.is_zero() && !other.is_zero() {
            return Err(Error::NotHomogeneous(format!(
                "adding degree {} to degree {}",
                self.degree, other.degree
            )));
        }
        let mut out = if self.is_zero() {
            other.clone()
        } else {
            self.clone()
        };
        if !self.is_zero() {
            for (m, c) in &other.terms {
                out.add_term(m.clone(), c.clone());
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-&self.field.one())
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        let mut out = Self::zero(self.frame, self.field, self.degree);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c * s);
        }
        out
    }

    /// Coordinates in the order of [`monomial_basis`].
    pub fn to_vector(&self) -> Vec<Scalar> {
        let idx = monomial_index(self.frame, self.degree);
        let mut v = vec![self.field.zero(); idx.len()];
        for (m, c) in &self.terms {
            v[idx[m]] = c.clone();
        }
        v
    }

    pub fn from_vector(frame: VariableFrame, field: FieldSpec, degree: u32, v: &[Scalar]) -> Self {
        let basis = monomial_basis(frame, degree);
        assert_eq!(basis.len(), v.len(), "vector length must match dim R_d");
        let mut f = Self::zero(frame, field, degree);
        for (m, c) in basis.into_iter().zip(v) {
            f.add_term(m, c.clone());
        }
        f
    }

    /// Views a ternary form as quaternary (no `w`).
    pub fn embed(&self) -> Self {
        match self.frame {
            VariableFrame::Wxyz => self.clone(),
            VariableFrame::Xyz => {
                let mut f = Self::zero(VariableFrame::Wxyz, self.field, self.degree);
                for (m, c) in &self.terms {
                    let mut e = vec![0];
                    e.extend_from_slice(&m.0);
                    f.add_term(Monomial(e), c.clone());
                }
                f
            }
        }
    }

    /// Drops the first variable; fails if any term involves it.
    pub fn restrict(&self) -> Result<Self> {
        match self.frame {
            VariableFrame::Xyz => Ok(self.clone()),
            VariableFrame::Wxyz => {
                let mut f = Self::zero(VariableFrame::Xyz, self.field, self.degree);
                for (m, c) in &self.terms {
                    if m.0[0] != 0 {
                        return Err(Error::FrameMismatch(format!(
                            "{self} involves the first variable"
                        )));
                    }
                    f.add_term(Monomial(m.0[1..].to_vec()), c.clone());
                }
                Ok(f)
            }
        }
    }

    /// Same coefficients in another field.
    pub fn to_field(&self, field: FieldSpec) -> Result<Self> {
        let mut f = Self::zero(self.frame, field, self.degree);
        for (m, c) in &self.terms {
            f.add_term(m.clone(), field.convert(c)?);
        }
        Ok(f)
    }

    /// Parses text such as `x^2*y - 3/2*w*z` or `X^[4]Z^[2] - X^[4]YZ + WZ^[5]`.
    /// `*` between factors is optional and exponents may be written `^n` or `^[n]`.
    pub fn parse(frame: VariableFrame, field: FieldSpec, text: &str) -> Result<Self> {
        let terms = parse_terms(frame, field, text)?;
        let degree = match terms.first() {
            Some((m, _)) => m.degree(),
            None => 0,
        };
        Self::from_terms(frame, field, degree, terms)
    }
}

impl GradedPoly {
    pub fn one(frame: VariableFrame, field: FieldSpec) -> Self {
        Self::monomial(frame, field, Monomial::one(frame))
    }

    pub fn var(frame: VariableFrame, field: FieldSpec, i: usize) -> Self {
        Self::monomial(frame, field, Monomial::var(frame, i))
    }

    pub fn multiply(&self, other: &GradedPoly) -> Result<GradedPoly> {
        self.check_compatible(other)?;
        let mut out = Self::zero(self.frame, self.field, self.degree + other.degree);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.mul(b), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> GradedPoly {
        let mut acc = Self::one(self.frame, self.field);
        for _ in 0..e {
            acc = acc.multiply(self).expect("same frame");
        }
        acc
    }

    /// Linear substitution `v_i ↦ Σ_k m[i][k] v_k`.
    pub fn substitute(&self, m: &[Vec<Scalar>]) -> Result<GradedPoly> {
        let r = self.frame.r();
        let images: Vec<GradedPoly> = (0..r)
            .map(|i| {
                let terms = (0..r).map(|k| (Monomial::var(self.frame, k), m[i][k].clone()));
                GradedPoly::from_terms(self.frame, self.field, 1, terms)
            })
            .collect::<Result<_>>()?;
        let mut out = Self::zero(self.frame, self.field, self.degree);
        for (mono, c) in &self.terms {
            let mut t = Self::one(self.frame, self.field).scale(c);
            for (i, &e) in mono.0.iter().enumerate() {
                t = t.multiply(&images[i].pow(e))?;
            }
            out = out.add(&t)?;
        }
        Ok(out)
    }

    /// Partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> GradedPoly {
        let mut out = Self::zero(self.frame, self.field, self.degree.saturating_sub(1));
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut n = m.0.clone();
            n[i] -= 1;
            out.add_term(Monomial(n), c * &self.field.from_i64(e as i64));
        }
        out
    }

    /// Exact quotient `self / divisor` when the divisor divides, computed by a linear solve.
    pub fn divide(&self, divisor: &GradedPoly) -> Result<Option<GradedPoly>> {
        self.check_compatible(divisor)?;
        if divisor.is_zero() {
            return Err(Error::Degenerate("division by zero polynomial".into()));
        }
        if self.is_zero() {
            return Ok(Some(Self::zero(self.frame, self.field, 0)));
        }
        if divisor.degree > self.degree {
            return Ok(None);
        }
        let qd = self.degree - divisor.degree;
        let qbasis = monomial_basis(self.frame, qd);
        let cols: Vec<Vec<Scalar>> = qbasis
            .iter()
            .map(|m| {
                Self::monomial(self.frame, self.field, m.clone())
                    .multiply(divisor)
                    .expect("same frame")
                    .to_vector()
            })
            .collect();
        let mat = crate::linalg::ExactMatrix::from_rows(self.field, cols)?.transpose();
        Ok(mat
            .solve_linear(&self.to_vector())?
            .map(|v| Self::from_vector(self.frame, self.field, qd, &v)))
    }
}

impl DividedPowerForm {
    /// `h ∘ F`: contraction, `x^i ∘ X^[j] = X^[j-i]` (zero when `i > j`).
    pub fn contract_by(&self, h: &GradedPoly) -> Result<DividedPowerForm> {
        contract(h, self)
    }

    /// Divided-power product, `X^[u]·X^[v] = C(u+v, v) X^[u+v]` in each variable.
    pub fn dp_multiply(&self, other: &DividedPowerForm) -> Result<DividedPowerForm> {
        self.check_compatible(other)?;
        let mut out = Self::zero(self.frame, self.field, self.degree + other.degree);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let mut coef = ca * cb;
                for (u, v) in a.0.iter().zip(&b.0) {
                    let bin = binomial((u + v) as u64, *v as u64);
                    coef = &coef * &self.field.from_bigint(&bin.into());
                }
                out.add_term(a.mul(b), coef);
            }
        }
        Ok(out)
    }

    /// `L^[u]` for the dual linear form `L = Σ a_i V_i`.
    pub fn linear_power(
        frame: VariableFrame,
        field: FieldSpec,
        coeffs: &[Scalar],
        u: u32,
    ) -> Result<DividedPowerForm> {
        if coeffs.len() != frame.r() {
            return Err(Error::FrameMismatch(format!(
                "{} coefficients for {} variables",
                coeffs.len(),
                frame.r()
            )));
        }
        let coeffs: Vec<Scalar> = coeffs
            .iter()
            .map(|c| field.convert(c))
            .collect::<Result<_>>()?;
        let terms = monomial_basis(frame, u).into_iter().map(|m| {
            let c = m
                .0
                .iter()
                .zip(&coeffs)
                .fold(field.one(), |acc, (e, a)| &acc * &a.pow(*e));
            (m, c)
        });
        Self::from_terms(frame, field, u, terms)
    }
}

/// `h ∘ F` for homogeneous `h` and `F`.
pub fn contract(h: &GradedPoly, f: &DividedPowerForm) -> Result<DividedPowerForm> {
    if h.frame != f.frame {
        return Err(Error::FrameMismatch(format!(
            "{:?} acting on {:?}",
            h.frame, f.frame
        )));
    }
    if h.field != f.field {
        return Err(Error::InvalidField(format!("{} vs {}", h.field, f.field)));
    }
    if h.degree > f.degree {
        return Ok(DividedPowerForm::zero(f.frame, f.field, 0));
    }
    let mut out = DividedPowerForm::zero(f.frame, f.field, f.degree - h.degree);
    for (m, c) in &h.terms {
        for (n, d) in &f.terms {
            if let Some(q) = m.quotient(n) {
                out.add_term(q, c * d);
            }
        }
    }
    Ok(out)
}

fn parse_terms(frame: VariableFrame, field: FieldSpec, text: &str) -> Result<Vec<(Monomial, Scalar)>> {
    let bad = |msg: &str| Error::Parse(format!("{msg} in {text:?}"));
    let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    if chars.is_empty() || chars == ['0'] {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let mut sign = 1i64;
        while i < chars.len() && (chars[i] == '+' || chars[i] == '-') {
            if chars[i] == '-' {
                sign = -sign;
            }
            i += 1;
        }
        let start = i;
        while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '/') {
            i += 1;
        }
        let mut coef = if i > start {
            field.parse(&chars[start..i].iter().collect::<String>())?
        } else {
            field.one()
        };
        if sign < 0 {
            coef = -coef;
        }
        let mut exps = vec![0u32; frame.r()];
        let mut saw_var = false;
        while i < chars.len() && chars[i] != '+' && chars[i] != '-' {
            if chars[i] == '*' {
                i += 1;
                continue;
            }
            let v = frame
                .index_of(chars[i])
                .ok_or_else(|| bad(&format!("unknown variable {:?}", chars[i])))?;
            i += 1;
            let mut e = 1;
            if i < chars.len() && chars[i] == '^' {
                i += 1;
                let bracket = i < chars.len() && chars[i] == '[';
                if bracket {
                    i += 1;
                }
                let s = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                e = chars[s..i]
                    .iter()
                    .collect::<String>()
                    .parse()
                    .map_err(|_| bad("missing exponent"))?;
                if bracket {
                    if i >= chars.len() || chars[i] != ']' {
                        return Err(bad("unclosed exponent bracket"));
                    }
                    i += 1;
                }
            }
            exps[v] += e;
            saw_var = true;
        }
        if !saw_var && i == start {
            return Err(bad("empty term"));
        }
        out.push((Monomial(exps), coef));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }
    const W: VariableFrame = VariableFrame::Wxyz;

    fn dp(s: &str) -> DividedPowerForm {
        DividedPowerForm::parse(W, q(), s).unwrap()
    }
    fn poly(s: &str) -> GradedPoly {
        GradedPoly::parse(W, q(), s).unwrap()
    }

    #[test]
    fn contraction_rules() {
        assert_eq!(contract(&poly("x^2"), &dp("X^[5]")).unwrap(), dp("X^[3]"));
        assert!(contract(&poly("y"), &dp("X^[2]")).unwrap().is_zero());
        let f = dp("X^[4]Z^[2] - X^[4]YZ + WZ^[5]");
        assert_eq!(contract(&poly("w"), &f).unwrap(), dp("Z^[5]"));
    }

    #[test]
    fn divided_power_products() {
        assert_eq!(dp("X^[2]").dp_multiply(&dp("X^[3]")).unwrap(), dp("10X^[5]"));
        assert_eq!(dp("X").dp_multiply(&dp("Y")).unwrap(), dp("XY"));
        assert_eq!(dp("X").dp_multiply(&dp("X")).unwrap(), dp("2X^[2]"));
    }

    #[test]
    fn linear_powers() {
        let f = VariableFrame::Xyz;
        let a = q().from_i64(3);
        let l = DividedPowerForm::linear_power(f, q(), &[a, q().one(), q().zero()], 2).unwrap();
        assert_eq!(l, DividedPowerForm::parse(f, q(), "9X^[2] + 3XY + Y^[2]").unwrap());
        let one = q().one();
        let l = DividedPowerForm::linear_power(W, q(), &[one.clone(), one, q().zero(), q().zero()], 2)
            .unwrap();
        assert_eq!(l, dp("W^[2] + WX + X^[2]"));
    }

    #[test]
    fn products_and_bases() {
        assert_eq!(poly("w").multiply(&poly("x")).unwrap(), poly("wx"));
        let t = VariableFrame::Xyz;
        let a = GradedPoly::parse(t, q(), "x").unwrap();
        let b = GradedPoly::parse(t, q(), "x^2y^2z^2").unwrap();
        assert_eq!(a.multiply(&b).unwrap(), GradedPoly::parse(t, q(), "x^3y^2z^2").unwrap());
        assert_eq!(monomial_basis(W, 2).len(), 10);
        assert_eq!(monomial_basis(t, 3).len(), 10);
        assert_eq!(monomial_basis(W, 6).len(), 84);
        assert_eq!(monomial_basis(W, 2)[0], Monomial(vec![2, 0, 0, 0]));
    }

    #[test]
    fn display_round_trip() {
        let f = dp("X^[4]Z^[2] - X^[4]YZ + 1/2WZ^[5]");
        let again = dp(&f.to_string());
        assert_eq!(f, again);
        let p = poly("w^2 - 3xz");
        assert_eq!(p.to_string(), "w^2 - 3*x*z");
    }

    #[test]
    fn exact_division() {
        let f = poly("wx + wy");
        assert_eq!(f.divide(&poly("w")).unwrap(), Some(poly("x + y")));
        assert_eq!(f.divide(&poly("x")).unwrap(), None);
    }

    fn arb_form(deg: u32) -> impl Strategy<Value = Vec<i64>> {
        proptest::collection::vec(-3i64..4, graded_dim(W, deg as i64))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn module_action_axiom(h in arb_form(1), k in arb_form(2), f in arb_form(5)) {
            let to = |v: &Vec<i64>| v.iter().map(|&x| q().from_i64(x)).collect::<Vec<_>>();
            let h = GradedPoly::from_vector(W, q(), 1, &to(&h));
            let k = GradedPoly::from_vector(W, q(), 2, &to(&k));
            let f = DividedPowerForm::from_vector(W, q(), 5, &to(&f));
            let lhs = contract(&h.multiply(&k).unwrap(), &f).unwrap();
            let rhs = contract(&h, &contract(&k, &f).unwrap()).unwrap();
            prop_assert_eq!(lhs.clone(), rhs);
            if !lhs.is_zero() {
                prop_assert_eq!(lhs.degree(), 2);
            }
        }

        #[test]
        fn apolarity_pairing_is_identity(i in 0usize..35, k in 0usize..35) {
            let b = monomial_basis(W, 4);
            let h = GradedPoly::monomial(W, q(), b[i].clone());
            let f = DividedPowerForm::monomial(W, q(), b[k].clone());
            let c = contract(&h, &f).unwrap();
            let expect = if i == k { q().one() } else { q().zero() };
            prop_assert_eq!(c.coeff(&Monomial::one(W)), expect);
        }

        #[test]
        fn linear_power_derivative(a in proptest::collection::vec(-4i64..5, 4), u in 1u32..9, i in 0usize..4) {
            let a: Vec<Scalar> = a.iter().map(|&x| q().from_i64(x)).collect();
            let lu = DividedPowerForm::linear_power(W, q(), &a, u).unwrap();
            let lu1 = DividedPowerForm::linear_power(W, q(), &a, u - 1).unwrap();
            let lhs = contract(&GradedPoly::var(W, q(), i), &lu).unwrap();
            prop_assert_eq!(lhs, lu1.scale(&a[i]));
        }
    }
}

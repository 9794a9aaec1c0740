//! Macaulay expansions, O-sequences, Gotzmann regularity and Hilbert-sequence utilities.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graded::{binomial, graded_dim, monomial_basis, Monomial, VariableFrame};

/// A finite integer sequence indexed from degree 0.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(transparent)]
pub struct HilbertSequence(pub Vec<i64>);

impl HilbertSequence {
    pub fn new(values: Vec<i64>) -> Self {
        HilbertSequence(values)
    }

    pub fn values(&self) -> &[i64] {
        &self.0
    }

    pub fn get(&self, i: usize) -> i64 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Trailing zeros removed.
    pub fn trimmed(&self) -> HilbertSequence {
        let mut v = self.0.clone();
        while v.last() == Some(&0) {
            v.pop();
        }
        HilbertSequence(v)
    }

    /// Last index with a nonzero value.
    pub fn socle_degree(&self) -> Option<usize> {
        self.0.iter().rposition(|&v| v != 0)
    }

    pub fn is_symmetric(&self) -> bool {
        is_symmetric(&self.0)
    }

    pub fn add(&self, other: &HilbertSequence) -> HilbertSequence {
        let n = self.0.len().max(other.0.len());
        HilbertSequence((0..n).map(|i| self.get(i) + other.get(i)).collect())
    }

    pub fn sub(&self, other: &HilbertSequence) -> HilbertSequence {
        let n = self.0.len().max(other.0.len());
        HilbertSequence((0..n).map(|i| self.get(i) - other.get(i)).collect())
    }

    /// Parses `1,4,7,8,7,4,1` (surrounding parentheses or brackets allowed).
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim().trim_matches(|c| matches!(c, '(' | ')' | '[' | ']'));
        if t.trim().is_empty() {
            return Ok(HilbertSequence(Vec::new()));
        }
        t.split(',')
            .map(|p| {
                p.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad sequence entry {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(HilbertSequence)
    }
}

impl From<Vec<i64>> for HilbertSequence {
    fn from(v: Vec<i64>) -> Self {
        HilbertSequence(v)
    }
}

impl fmt::Display for HilbertSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for HilbertSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `c = C(k(d), d) + C(k(d-1), d-1) + …`, greedy; only the nonzero terms are kept.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MacaulayExpansion {
    pub c: u64,
    pub d: u32,
    /// `ks[n]` is `k(d - n)`.
    pub ks: Vec<u64>,
}

impl MacaulayExpansion {
    /// `(k, i)` pairs of the expansion.
    pub fn terms(&self) -> impl Iterator<Item = (u64, u32)> + '_ {
        self.ks
            .iter()
            .enumerate()
            .map(move |(n, &k)| (k, self.d - n as u32))
    }

    /// `c^(d)`.
    pub fn growth(&self) -> u64 {
        self.terms()
            .map(|(k, i)| binomial(k + 1, i as u64 + 1) as u64)
            .sum()
    }

    /// Number of terms with `k(i) ≥ i`.
    pub fn length(&self) -> usize {
        self.terms().filter(|&(k, i)| k >= i as u64).count()
    }
}

pub fn macaulay_expand(c: i64, d: i64) -> Result<MacaulayExpansion> {
    if c <= 0 || d <= 0 {
        return Err(Error::InvalidArgument(format!(
            "Macaulay expansion needs c ≥ 1 and d ≥ 1, got c={c}, d={d}"
        )));
    }
    let mut rest = c as u64;
    let mut ks = Vec::new();
    let mut i = d as u64;
    while rest > 0 && i > 0 {
        let mut k = i;
        while binomial(k + 1, i) as u64 <= rest {
            k += 1;
        }
        rest -= binomial(k, i) as u64;
        ks.push(k);
        i -= 1;
    }
    Ok(MacaulayExpansion {
        c: c as u64,
        d: d as u32,
        ks,
    })
}

/// `c^(d)`, with `0^(d) = 0`.
pub fn macaulay_growth(c: i64, d: i64) -> Result<u64> {
    if d <= 0 {
        return Err(Error::InvalidArgument(format!("degree must be ≥ 1, got {d}")));
    }
    if c < 0 {
        return Err(Error::InvalidArgument(format!("c must be ≥ 0, got {c}")));
    }
    if c == 0 {
        return Ok(0);
    }
    Ok(macaulay_expand(c, d)?.growth())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OSequenceCheck {
    pub admissible: bool,
    /// First degree where the sequence fails.
    pub failing_degree: Option<usize>,
}

/// `h_0 ≤ 1` and `h_{d+1} ≤ h_d^(d)` for `d ≥ 1`; negative entries are inadmissible.
pub fn is_o_sequence(h: &[i64]) -> OSequenceCheck {
    let fail = |d| OSequenceCheck {
        admissible: false,
        failing_degree: Some(d),
    };
    if let Some(d) = h.iter().position(|&v| v < 0) {
        return fail(d);
    }
    if h.first().is_some_and(|&h0| h0 > 1) {
        return fail(0);
    }
    for d in 1..h.len().saturating_sub(1) {
        let bound = macaulay_growth(h[d], d as i64).expect("valid arguments");
        if h[d + 1] as u64 > bound {
            return fail(d + 1);
        }
    }
    OSequenceCheck {
        admissible: true,
        failing_degree: None,
    }
}

/// Univariate polynomial with rational coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPoly(pub Vec<BigRational>);

impl RationalPoly {
    pub fn from_integers(c: &[i64]) -> Self {
        let mut p = RationalPoly(c.iter().map(|&v| BigRational::from_integer(v.into())).collect());
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        (!self.0.is_empty()).then(|| self.0.len() - 1)
    }

    pub fn eval(&self, t: i64) -> BigRational {
        let t = BigRational::from_integer(t.into());
        self.0
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * &t + c)
    }

    fn add(&self, o: &RationalPoly) -> RationalPoly {
        let n = self.0.len().max(o.0.len());
        let z = BigRational::zero();
        let mut p = RationalPoly(
            (0..n)
                .map(|i| self.0.get(i).unwrap_or(&z) + o.0.get(i).unwrap_or(&z))
                .collect(),
        );
        p.normalize();
        p
    }

    fn neg(&self) -> RationalPoly {
        RationalPoly(self.0.iter().map(|c| -c).collect())
    }

    fn mul(&self, o: &RationalPoly) -> RationalPoly {
        if self.is_zero() || o.is_zero() {
            return RationalPoly(Vec::new());
        }
        let mut out = vec![BigRational::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (k, b) in o.0.iter().enumerate() {
                out[i + k] += a * b;
            }
        }
        let mut p = RationalPoly(out);
        p.normalize();
        p
    }

    /// `C(t + s, m)` as a polynomial in `t`.
    pub fn binomial_in_t(s: i64, m: u32) -> RationalPoly {
        let mut acc = RationalPoly::from_integers(&[1]);
        for l in 0..m as i64 {
            acc = acc.mul(&RationalPoly::from_integers(&[s - l, 1]));
        }
        let fact: BigInt = (1..=m as i64).map(BigInt::from).product();
        RationalPoly(acc.0.into_iter().map(|c| c / &fact).collect())
    }

    /// Parses text such as `3t+2`, `t^2 - 1/2t + 4` or `5`.
    pub fn parse(s: &str) -> Result<RationalPoly> {
        let bad = || Error::Parse(format!("invalid polynomial in t: {s:?}"));
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Err(bad());
        }
        let mut coeffs: Vec<BigRational> = Vec::new();
        let mut terms = Vec::new();
        let mut cur = String::new();
        for ch in text.chars() {
            if (ch == '+' || ch == '-') && !cur.is_empty() && !cur.ends_with('^') {
                terms.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
        }
        terms.push(cur);
        for term in terms {
            let (sign, body) = match term.strip_prefix('-') {
                Some(b) => (-1, b),
                None => (1, term.strip_prefix('+').unwrap_or(&term)),
            };
            let (coef_s, pow) = match body.split_once('t') {
                None => (body, 0usize),
                Some((c, rest)) => {
                    let pow = match rest.strip_prefix('^') {
                        Some(e) => e.parse().map_err(|_| bad())?,
                        None if rest.is_empty() => 1,
                        None => return Err(bad()),
                    };
                    (c.trim_end_matches('*'), pow)
                }
            };
            let coef = if coef_s.is_empty() {
                BigRational::one()
            } else if let Some((n, d)) = coef_s.split_once('/') {
                let n: BigInt = n.parse().map_err(|_| bad())?;
                let d: BigInt = d.parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                BigRational::new(n, d)
            } else {
                BigRational::from_integer(coef_s.parse().map_err(|_| bad())?)
            };
            if coeffs.len() <= pow {
                coeffs.resize(pow + 1, BigRational::zero());
            }
            coeffs[pow] += coef * BigRational::from_integer(sign.into());
        }
        let mut p = RationalPoly(coeffs);
        p.normalize();
        Ok(p)
    }
}

impl fmt::Display for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let cs = if mag.is_integer() {
                mag.numer().to_string()
            } else {
                format!("{}/{}", mag.numer(), mag.denom())
            };
            let body = match (e, mag.is_one()) {
                (0, _) => cs,
                (1, true) => "t".into(),
                (1, false) => format!("{cs}t"),
                (_, true) => format!("t^{e}"),
                (_, false) => format!("{cs}t^{e}"),
            };
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                write!(f, "{body}")?;
            } else {
                write!(f, " {sign} {body}")?;
            }
            first = false;
        }
        Ok(())
    }
}

/// `p_{c,d}(t) = Σ C(k(i) + t - d, k(i) - i)` with its defining expansion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertPolynomialForm {
    pub c: u64,
    pub d: u32,
    pub expansion: MacaulayExpansion,
    pub polynomial: RationalPoly,
}

impl HilbertPolynomialForm {
    pub fn eval(&self, t: i64) -> BigRational {
        self.polynomial.eval(t)
    }

    /// Number of expansion terms with `k(i) ≥ i`.
    pub fn gotzmann_length(&self) -> usize {
        self.expansion.length()
    }
}

pub fn hilbert_polynomial(c: i64, d: i64) -> Result<HilbertPolynomialForm> {
    let expansion = macaulay_expand(c, d)?;
    let mut p = RationalPoly(Vec::new());
    for (k, i) in expansion.terms() {
        p = p.add(&RationalPoly::binomial_in_t(k as i64 - d, (k - i as u64) as u32));
    }
    Ok(HilbertPolynomialForm {
        c: c as u64,
        d: d as u32,
        expansion,
        polynomial: p,
    })
}

pub fn gotzmann_regularity(p: &HilbertPolynomialForm) -> usize {
    p.gotzmann_length()
}

/// Gotzmann representation `p(t) = Σ_{i=1..s} C(t + a_i - i + 1, a_i)`, `a_1 ≥ … ≥ a_s ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GotzmannRepresentation {
    pub a: Vec<u32>,
}

impl GotzmannRepresentation {
    /// The regularity degree `s`.
    pub fn regularity(&self) -> usize {
        self.a.len()
    }
}

pub fn gotzmann_representation(p: &RationalPoly) -> Result<GotzmannRepresentation> {
    const MAX_TERMS: usize = 100_000;
    let mut rest = p.clone();
    let mut a = Vec::new();
    while let Some(deg) = rest.degree() {
        if rest.0[deg].is_negative() || a.len() >= MAX_TERMS {
            return Err(Error::InvalidArgument(format!(
                "{p} is not the Hilbert polynomial of a projective scheme"
            )));
        }
        let i = a.len() as i64 + 1;
        let term = RationalPoly::binomial_in_t(deg as i64 - i + 1, deg as u32);
        rest = rest.add(&term.neg());
        if rest.degree().is_some_and(|d2| d2 > deg) {
            return Err(Error::InvalidArgument(format!("{p} has no Gotzmann form")));
        }
        a.push(deg as u32);
    }
    Ok(GotzmannRepresentation { a })
}

/// `ΔH_i = h_i - h_{i-1}` with `h_{-1} = 0`.
pub fn first_difference(h: &[i64]) -> HilbertSequence {
    HilbertSequence(
        (0..h.len())
            .map(|i| h[i] - if i == 0 { 0 } else { h[i - 1] })
            .collect(),
    )
}

/// Mirrors the first half of `hz` about `j/2`, producing indices `0..=j`.
pub fn symmetrize(hz: &[i64], j: usize) -> HilbertSequence {
    let at = |i: usize| hz.get(i).copied().unwrap_or(0);
    HilbertSequence(
        (0..=j)
            .map(|i| if 2 * i <= j { at(i) } else { at(j - i) })
            .collect(),
    )
}

/// Symmetric about `j/2`, where `j` is the last nonzero index.
pub fn is_symmetric(h: &[i64]) -> bool {
    let Some(j) = h.iter().rposition(|&v| v != 0) else {
        return true;
    };
    (0..=j).all(|i| h[i] == h[j - i])
}

/// Symmetric, and `ΔH` restricted to degrees `≤ j/2` is an O-sequence.
pub fn si_condition(h: &[i64]) -> bool {
    let Some(j) = h.iter().rposition(|&v| v != 0) else {
        return false;
    };
    if !is_symmetric(h) {
        return false;
    }
    let delta = first_difference(&h[..=j / 2]);
    is_o_sequence(delta.values()).admissible
}

/// Maximum of `H(R/I)_{d+1}` given `H(R/I)_d = c`, by building the lex-segment ideal.
pub fn lex_growth_oracle(c: i64, d: u32, r: usize) -> Result<u64> {
    let frame = match r {
        3 => VariableFrame::Xyz,
        4 => VariableFrame::Wxyz,
        _ => return Err(Error::InvalidArgument(format!("r must be 3 or 4, got {r}"))),
    };
    let total = graded_dim(frame, d as i64) as i64;
    if c < 0 || c > total {
        return Err(Error::InvalidArgument(format!(
            "c={c} outside 0..={total} for degree {d}"
        )));
    }
    // monomial_basis is in descending lex order, so the ideal takes the first entries.
    let ideal: Vec<Monomial> = monomial_basis(frame, d)
        .into_iter()
        .take((total - c) as usize)
        .collect();
    let mut next: BTreeSet<Monomial> = BTreeSet::new();
    for m in &ideal {
        for v in 0..r {
            next.insert(m.mul(&Monomial::var(frame, v)));
        }
    }
    Ok((graded_dim(frame, d as i64 + 1) - next.len()) as u64)
}

/// Parses a rational polynomial's integer value at `t`, or fails when not integral.
pub fn integer_value(p: &RationalPoly, t: i64) -> Option<i64> {
    let v = p.eval(t);
    v.is_integer().then(|| v.numer().to_i64()).flatten()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn expansions() {
        assert_eq!(macaulay_expand(6, 3).unwrap().ks, vec![4, 2, 1]);
        assert_eq!(macaulay_expand(7, 3).unwrap().ks, vec![4, 3]);
        assert_eq!(macaulay_expand(1, 5).unwrap().ks, vec![5]);
        assert!(macaulay_expand(0, 3).is_err());
        assert!(macaulay_expand(3, 0).is_err());
    }

    #[test]
    fn growth_values() {
        assert_eq!(macaulay_growth(7, 2).unwrap(), 11);
        assert_eq!(macaulay_growth(8, 3).unwrap(), 10);
        assert_eq!(macaulay_growth(9, 4).unwrap(), 11);
        assert_eq!(macaulay_growth(6, 3).unwrap(), 7);
        assert_eq!(macaulay_growth(0, 3).unwrap(), 0);
    }

    #[test]
    fn o_sequences() {
        let c = is_o_sequence(&[1, 3, 3, 1, 2]);
        assert_eq!((c.admissible, c.failing_degree), (false, Some(4)));
        assert!(!is_o_sequence(&[1, 3, 3, 2, 3]).admissible);
        assert!(is_o_sequence(&[1, 4, 10, 20]).admissible);
        assert!(!is_o_sequence(&[2, 1]).admissible);
    }

    #[test]
    fn hilbert_polynomials() {
        let p = hilbert_polynomial(7, 2).unwrap();
        assert_eq!(p.eval(3), BigRational::from_integer(11.into()));
        assert_eq!(p.eval(2), BigRational::from_integer(7.into()));
        let p = hilbert_polynomial(2, 3).unwrap();
        for t in 3..10 {
            assert_eq!(p.eval(t), BigRational::from_integer(2.into()));
        }
    }

    #[test]
    fn gotzmann_closed_forms() {
        let two_t_two = RationalPoly::parse("2t+2").unwrap();
        assert_eq!(gotzmann_representation(&two_t_two).unwrap().regularity(), 3);
        for b in 0..=4 {
            let p = RationalPoly::from_integers(&[b, 3]);
            assert_eq!(gotzmann_representation(&p).unwrap().regularity(), 3 + b as usize);
        }
        for b in 1..=5 {
            let p = RationalPoly::from_integers(&[b]);
            assert_eq!(gotzmann_representation(&p).unwrap().regularity(), b as usize);
        }
        assert!(gotzmann_representation(&RationalPoly::from_integers(&[-1])).is_err());
    }

    #[test]
    fn expansion_length_matches_representation() {
        // p(d) expanded in a degree past the regularity reproduces the Gotzmann form.
        for (coeffs, d) in [(vec![2, 2], 6), (vec![0, 3], 6), (vec![4, 3], 9), (vec![5], 6)] {
            let p = RationalPoly::from_integers(&coeffs);
            let c = integer_value(&p, d).unwrap();
            let form = hilbert_polynomial(c, d).unwrap();
            assert_eq!(form.polynomial, p);
            assert_eq!(
                gotzmann_regularity(&form),
                gotzmann_representation(&p).unwrap().regularity()
            );
        }
    }

    #[test]
    fn polynomial_parse_display() {
        let p = RationalPoly::parse("t^2 - 1/2t + 4").unwrap();
        assert_eq!(p.to_string(), "t^2 - 1/2t + 4");
        assert_eq!(RationalPoly::parse("3t+2").unwrap(), RationalPoly::from_integers(&[2, 3]));
    }

    #[test]
    fn differences_and_symmetry() {
        assert_eq!(
            first_difference(&[1, 4, 7, 8, 7, 4, 1]).0,
            vec![1, 3, 3, 1, -1, -3, -3]
        );
        assert_eq!(
            symmetrize(&[1, 4, 7, 8, 8, 8, 8, 8], 6).0,
            vec![1, 4, 7, 8, 7, 4, 1]
        );
    }

    #[test]
    fn si_examples() {
        assert!(!si_condition(&[1, 4, 7, 6, 7, 4, 1]));
        assert!(si_condition(&[1, 4, 7, 7, 7, 4, 1]));
        assert!(si_condition(&[1, 4, 7, 11, 7, 4, 1]));
        assert!(!si_condition(&[1, 4, 7, 12, 7, 4, 1]));
    }

    #[test]
    fn lex_oracle_examples() {
        assert_eq!(lex_growth_oracle(7, 2, 4).unwrap(), 11);
        assert_eq!(lex_growth_oracle(10, 2, 4).unwrap(), 20);
        assert!(lex_growth_oracle(11, 2, 4).is_err());
    }

    #[test]
    fn growth_agrees_with_lex_oracle() {
        for r in [3usize, 4] {
            let frame = if r == 3 { VariableFrame::Xyz } else { VariableFrame::Wxyz };
            for d in 1..=5u32 {
                let top = (graded_dim(frame, d as i64) as i64).min(20);
                for c in 0..=top {
                    assert_eq!(
                        macaulay_growth(c, d as i64).unwrap(),
                        lex_growth_oracle(c, d, r).unwrap(),
                        "c={c} d={d} r={r}"
                    );
                }
            }
        }
    }

    proptest! {
        #[test]
        fn growth_monotone_and_nondecreasing(c in 1i64..60, c2 in 1i64..60, d in 1i64..7) {
            let (lo, hi) = if c <= c2 { (c, c2) } else { (c2, c) };
            prop_assert!(macaulay_growth(lo, d).unwrap() <= macaulay_growth(hi, d).unwrap());
            prop_assert!(macaulay_growth(c, d).unwrap() >= c as u64);
        }

        #[test]
        fn polynomial_has_extremal_growth(c in 1i64..21, d in 1i64..6) {
            let p = hilbert_polynomial(c, d).unwrap();
            for t in d..d + 6 {
                let here = integer_value(&p.polynomial, t).unwrap();
                let next = integer_value(&p.polynomial, t + 1).unwrap();
                prop_assert_eq!(next as u64, macaulay_growth(here, t).unwrap());
            }
        }

        #[test]
        fn symmetrize_is_symmetric(h in proptest::collection::vec(1i64..30, 1..12), j in 0usize..12) {
            let s = symmetrize(&h, j);
            for i in 0..=j {
                prop_assert_eq!(s.0[i], s.0[j - i]);
            }
        }
    }
}

//! Seeded draws for "generic" choices. Coefficients are integers in `[-10, 10]`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::{FieldSpec, Scalar};
use crate::graded::{monomial_basis, BasisKind, Form, VariableFrame};

/// Redraw budget for genericity predicates.
pub const MAX_REDRAWS: usize = 20;

pub struct SeededRng {
    rng: ChaCha8Rng,
    seed: u64,
}

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        SeededRng {
            rng: ChaCha8Rng::seed_from_u64(seed),
            seed,
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    pub fn scalar(&mut self, field: FieldSpec) -> Scalar {
        field.from_i64(self.int(-10, 10))
    }

    pub fn nonzero_scalar(&mut self, field: FieldSpec) -> Scalar {
        loop {
            let s = self.scalar(field);
            if !s.is_zero() {
                return s;
            }
        }
    }

    /// A dense form with every coefficient drawn independently.
    pub fn form<B: BasisKind>(&mut self, frame: VariableFrame, field: FieldSpec, degree: u32) -> Form<B> {
        let v: Vec<Scalar> = monomial_basis(frame, degree)
            .iter()
            .map(|_| self.scalar(field))
            .collect();
        Form::from_vector(frame, field, degree, &v)
    }

    /// A form with at most `terms` nonzero coefficients at random monomials.
    pub fn sparse_form<B: BasisKind>(
        &mut self,
        frame: VariableFrame,
        field: FieldSpec,
        degree: u32,
        terms: usize,
    ) -> Form<B> {
        let n = monomial_basis(frame, degree).len();
        let mut v = vec![field.zero(); n];
        for _ in 0..terms.max(1) {
            let k = self.int(0, n as i64 - 1) as usize;
            v[k] = self.nonzero_scalar(field);
        }
        Form::from_vector(frame, field, degree, &v)
    }

    pub fn vector(&mut self, field: FieldSpec, len: usize) -> Vec<Scalar> {
        (0..len).map(|_| self.scalar(field)).collect()
    }
}

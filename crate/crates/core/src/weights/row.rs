use rug::{Float, Integer, Rational};

use super::WeightSource;
use crate::mpnum::{BigReal, ExactRational, Precision};

/// One certified weight row, with the weights also held over a common
/// denominator so a weighted sum can be formed exactly and rounded once.
#[derive(Clone, Debug)]
pub struct WeightRow {
    order: usize,
    j: usize,
    source: WeightSource,
    weights: Vec<ExactRational>,
    numerators: Vec<Integer>,
    denominator: Integer,
}

impl WeightRow {
    pub(crate) fn new(order: usize, j: usize, source: WeightSource, weights: Vec<ExactRational>) -> Self {
        let mut denominator = Integer::from(1);
        for w in &weights {
            denominator.lcm_mut(w.denom_int());
        }
        let numerators = weights
            .iter()
            .map(|w| w.numer_int() * Integer::from(&denominator / w.denom_int()))
            .collect();
        WeightRow { order, j, source, weights, numerators, denominator }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn source(&self) -> WeightSource {
        self.source
    }

    pub fn weights(&self) -> &[ExactRational] {
        &self.weights
    }

    /// `Σ_i |w_i|`.
    pub fn condition(&self) -> ExactRational {
        let sum = self.numerators.iter().fold(Integer::new(), |acc, n| acc + n.clone().abs());
        ExactRational::from_parts(sum, self.denominator.clone())
    }

    /// `Σ_i w_i s_i` exactly.
    pub fn dot_exact(&self, s: &[ExactRational]) -> ExactRational {
        assert_eq!(s.len(), self.weights.len(), "input length must equal order + 1");
        let mut acc = Rational::new();
        for (n, x) in self.numerators.iter().zip(s) {
            acc += Rational::from(n * x.as_rug());
        }
        acc /= &self.denominator;
        ExactRational::from_rug(acc)
    }

    /// `Σ_i w_i s_i` computed exactly from the binary values of `s` and
    /// rounded once to `precision`.
    pub fn apply(&self, s: &[BigReal], precision: Precision) -> BigReal {
        assert_eq!(s.len(), self.weights.len(), "input length must equal order + 1");
        let mut acc = Rational::new();
        for (n, x) in self.numerators.iter().zip(s) {
            let exact = x.as_float().to_rational().expect("partial sums are finite");
            acc += exact * n;
        }
        acc /= &self.denominator;
        BigReal::from_float(Float::with_val(precision.bits(), &acc), precision)
    }
}

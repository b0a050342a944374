use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

/// Exact non-negative integer.
pub type Count = BigUint;

/// Fair domination polynomial: cardinality `i` maps to the number of fair
/// dominating sets of size `i`. Only nonzero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct FairDomPolynomial {
    order: usize,
    coeffs: BTreeMap<usize, Count>,
}

impl FairDomPolynomial {
    pub fn new(order: usize) -> Self {
        FairDomPolynomial {
            order,
            coeffs: BTreeMap::new(),
        }
    }

    /// Builds from dense coefficients `c[0], c[1], ...`, dropping zeros.
    pub fn from_dense(order: usize, dense: impl IntoIterator<Item = Count>) -> Self {
        let coeffs = dense
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        FairDomPolynomial { order, coeffs }
    }

    /// Order of the underlying graph.
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coefficient(&self, i: usize) -> Count {
        self.coeffs.get(&i).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, i: usize, c: Count) {
        if c.is_zero() {
            self.coeffs.remove(&i);
        } else {
            self.coeffs.insert(i, c);
        }
    }

    /// Smallest power with a nonzero coefficient; the multiplicity of zero as a root.
    pub fn lowest_degree(&self) -> Option<usize> {
        self.coeffs.keys().next().copied()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    /// Nonzero `(i, d_f(G, i))` pairs in increasing `i`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &Count)> {
        self.coeffs.iter().map(|(&i, c)| (i, c))
    }

    /// Coefficients `0..=order`, zero-filled.
    pub fn to_dense(&self) -> Vec<Count> {
        (0..=self.order).map(|i| self.coefficient(i)).collect()
    }

    /// Value at `x`.
    pub fn eval(&self, x: &Count) -> Count {
        self.coeffs
            .iter()
            .map(|(&i, c)| c * num_traits::pow(x.clone(), i))
            .sum()
    }
}

impl fmt::Debug for FairDomPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.coeffs.iter()).finish()
    }
}

impl fmt::Display for FairDomPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c == &Count::from(1u8)) {
                (0, _) => write!(f, "{c}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{c}x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{c}x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dense_round_trip_and_display() {
        let p = FairDomPolynomial::from_dense(4, [0u32, 4, 6, 4, 1].map(Count::from));
        assert_eq!(p.lowest_degree(), Some(1));
        assert_eq!(p.degree(), Some(4));
        assert_eq!(p.to_dense(), [0u32, 4, 6, 4, 1].map(Count::from).to_vec());
        assert_eq!(p.to_string(), "4x + 6x^2 + 4x^3 + x^4");
        // (1+x)^4 - 1 at x = 1
        assert_eq!(p.eval(&Count::from(1u8)), Count::from(15u8));
    }

    #[test]
    fn zero_coefficients_are_not_stored() {
        let mut p = FairDomPolynomial::new(3);
        p.set(2, Count::from(5u8));
        p.set(2, Count::zero());
        assert_eq!(p.lowest_degree(), None);
        assert_eq!(p.to_string(), "0");
    }
}

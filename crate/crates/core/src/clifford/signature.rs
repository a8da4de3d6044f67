use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Metric of a Clifford algebra: the square (+1 or -1) of each generator.
///
/// Generator `i` is bit `i` of a blade index. Labels shown to users start
/// at `first_label`, so the Lorentzian algebras can be written `e0, e1, ...`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Signature {
    squares: Vec<i8>,
    symbol: String,
    first_label: usize,
}

impl Signature {
    pub const MAX_GENERATORS: usize = 12;

    /// C(p,q): the first `p` generators square to +1, the next `q` to -1.
    pub fn new(p: usize, q: usize) -> Result<Self> {
        let mut squares = vec![1i8; p];
        squares.extend(std::iter::repeat_n(-1i8, q));
        Self::from_squares(&squares)
    }

    /// Arbitrary ordering of generator squares.
    pub fn from_squares(squares: &[i8]) -> Result<Self> {
        if squares.len() > Self::MAX_GENERATORS {
            return Err(Error::TooManyGenerators {
                got: squares.len(),
                max: Self::MAX_GENERATORS,
            });
        }
        if let Some(&s) = squares.iter().find(|&&s| s != 1 && s != -1) {
            return Err(Error::InvalidSquare(s as i32));
        }
        Ok(Signature {
            squares: squares.to_vec(),
            symbol: "e".into(),
            first_label: 1,
        })
    }

    pub fn with_labels(mut self, symbol: &str, first_label: usize) -> Self {
        self.symbol = symbol.into();
        self.first_label = first_label;
        self
    }

    /// C(0,1): a single generator with e^2 = -1 playing the role of i.
    pub fn schrodinger() -> Self {
        Self::from_squares(&[-1]).unwrap()
    }

    /// C(0,2), isomorphic to the quaternions.
    pub fn quaternion() -> Self {
        Self::from_squares(&[-1, -1]).unwrap()
    }

    /// C(1,1) with e0^2 = +1, e1^2 = -1.
    pub fn lightcone() -> Self {
        Self::from_squares(&[1, -1]).unwrap().with_labels("e", 0)
    }

    /// C(3,0), the Pauli algebra.
    pub fn pauli() -> Self {
        Self::from_squares(&[1, 1, 1]).unwrap()
    }

    /// C(1,3) with e0^2 = +1 and e1..e3 squaring to -1.
    pub fn dirac() -> Self {
        Self::from_squares(&[1, -1, -1, -1]).unwrap().with_labels("e", 0)
    }

    /// C(3,1) with e0^2 = -1 and e1..e3 squaring to +1: null vectors satisfy
    /// v1^2 + v2^2 + v3^2 = v0^2.
    pub fn null_lift() -> Self {
        Self::from_squares(&[-1, 1, 1, 1]).unwrap().with_labels("e", 0)
    }

    /// C(2,4) with beta0^2 = beta5^2 = +1 and beta1..beta4 squaring to -1.
    pub fn conformal() -> Self {
        Self::from_squares(&[1, -1, -1, -1, -1, 1])
            .unwrap()
            .with_labels("b", 0)
    }

    pub fn dim(&self) -> usize {
        self.squares.len()
    }

    pub fn p(&self) -> usize {
        self.squares.iter().filter(|&&s| s == 1).count()
    }

    pub fn q(&self) -> usize {
        self.squares.iter().filter(|&&s| s == -1).count()
    }

    pub fn blade_count(&self) -> usize {
        1 << self.dim()
    }

    pub fn square(&self, generator: usize) -> i8 {
        self.squares[generator]
    }

    pub fn squares(&self) -> &[i8] {
        &self.squares
    }

    pub fn first_label(&self) -> usize {
        self.first_label
    }

    /// N = 2^floor(n/2), the trace of the identity.
    pub fn trace_factor(&self) -> f64 {
        (1u64 << (self.dim() / 2)) as f64
    }

    /// Product of two basis blades: `e_a e_b = sign * e_(a xor b)`.
    #[inline]
    pub fn blade_product(&self, a: usize, b: usize) -> (i8, usize) {
        let mut swaps = 0u32;
        let mut x = a >> 1;
        while x != 0 {
            swaps += (x & b).count_ones();
            x >>= 1;
        }
        let mut sign: i8 = if swaps & 1 == 0 { 1 } else { -1 };
        let mut common = a & b;
        while common != 0 {
            let i = common.trailing_zeros() as usize;
            sign *= self.squares[i];
            common &= common - 1;
        }
        (sign, a ^ b)
    }

    pub fn grade(blade: usize) -> u32 {
        blade.count_ones()
    }

    /// Converts a user label (e.g. 3 in "e3") into a bit index.
    pub fn generator_index(&self, label: usize) -> Result<usize> {
        label
            .checked_sub(self.first_label)
            .filter(|&i| i < self.dim())
            .ok_or(Error::UnknownGenerator(label))
    }

    /// Product of the labelled generators in the given order, e.g. `[2, 1]`
    /// gives `(-1, e12)`.
    pub fn blade_from_labels(&self, labels: &[usize]) -> Result<(i8, usize)> {
        let mut sign = 1i8;
        let mut blade = 0usize;
        for &l in labels {
            let i = self.generator_index(l)?;
            let (s, b) = self.blade_product(blade, 1 << i);
            sign *= s;
            blade = b;
        }
        Ok((sign, blade))
    }

    pub fn blade_name(&self, blade: usize) -> String {
        if blade == 0 {
            return "1".into();
        }
        let labels: Vec<usize> = (0..self.dim())
            .filter(|i| blade & (1 << i) != 0)
            .map(|i| i + self.first_label)
            .collect();
        let wide = self.dim() + self.first_label > 10;
        let body: Vec<String> = labels.iter().map(|l| l.to_string()).collect();
        if wide {
            format!("{}{{{}}}", self.symbol, body.join(","))
        } else {
            format!("{}{}", self.symbol, body.join(""))
        }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C({},{})", self.p(), self.q())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reorder_sign() {
        let s = Signature::pauli();
        // e2 e1 = -e12
        assert_eq!(s.blade_product(0b10, 0b01), (-1, 0b11));
        assert_eq!(s.blade_product(0b01, 0b10), (1, 0b11));
        // e12 e12 = -1 in C(3,0)
        assert_eq!(s.blade_product(0b11, 0b11), (-1, 0));
    }

    #[test]
    fn metric_enters_squares() {
        let s = Signature::dirac();
        assert_eq!(s.blade_product(1, 1), (1, 0));
        assert_eq!(s.blade_product(2, 2), (-1, 0));
        // e0123^2 = -1 in C(1,3)
        assert_eq!(s.blade_product(0b1111, 0b1111).0, -1);
    }

    #[test]
    fn labels() {
        let s = Signature::lightcone();
        assert_eq!(s.blade_from_labels(&[1, 0]).unwrap(), (-1, 0b11));
        assert_eq!(s.blade_name(0b11), "e01");
        assert!(s.blade_from_labels(&[2]).is_err());
        assert_eq!(Signature::new(3, 0).unwrap().blade_name(0b101), "e13");
        assert_eq!(Signature::conformal().to_string(), "C(2,4)");
    }

    #[test]
    fn limits() {
        assert!(Signature::new(7, 6).is_err());
        assert!(Signature::from_squares(&[1, 0]).is_err());
        assert_eq!(Signature::new(6, 6).unwrap().trace_factor(), 64.0);
        assert_eq!(Signature::pauli().trace_factor(), 2.0);
    }
}

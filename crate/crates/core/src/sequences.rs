//! Integer sequences feeding the difference matrix.
//!
//! Sequences are 1-indexed: term `k` is `x_k`. Fibonacci and Lucas sequences
//! start at `F_1` and `L_1`; the zeroth terms only appear inside identity checks.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest index accepted by [`binet_residuals`].
pub const BINET_MAX_INDEX: usize = 70;

/// A named, nonempty, finite list of exact integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerSequence {
    label: String,
    terms: Vec<BigInt>,
}

impl IntegerSequence {
    pub fn new(label: impl Into<String>, terms: Vec<BigInt>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::InvalidSequence("sequence must have at least one term".into()));
        }
        Ok(Self { label: label.into(), terms })
    }

    /// Sequence with the default label `"literal"`.
    pub fn from_literal<T: Into<BigInt>>(values: impl IntoIterator<Item = T>) -> Result<Self> {
        Self::new("literal", values.into_iter().map(Into::into).collect())
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    // Always false; kept for the usual len/is_empty pairing.
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[BigInt] {
        &self.terms
    }

    /// Term `k`, 1-indexed.
    pub fn term(&self, k: usize) -> Option<&BigInt> {
        k.checked_sub(1).and_then(|i| self.terms.get(i))
    }

    pub fn is_constant(&self) -> bool {
        self.terms.windows(2).all(|w| w[0] == w[1])
    }

    /// Largest absolute value among the terms.
    pub fn max_abs(&self) -> BigInt {
        self.terms.iter().map(|t| t.magnitude().clone().into()).max().unwrap_or_else(BigInt::zero)
    }

    /// Comma-separated rendering accepted by [`parse_sequence_text`].
    pub fn render(&self) -> String {
        self.terms.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Display for IntegerSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.label, self.render())
    }
}

/// Parses integers separated by commas and/or whitespace (including newlines).
///
/// Empty fields and blank lines are skipped. Token positions in errors are
/// 1-based and count only nonempty tokens.
pub fn parse_sequence_text(text: &str) -> Result<IntegerSequence> {
    let terms = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|tok| !tok.is_empty())
        .enumerate()
        .map(|(i, tok)| {
            BigInt::from_str(tok).map_err(|_| Error::Parse { token: tok.to_string(), position: i + 1 })
        })
        .collect::<Result<Vec<_>>>()?;
    IntegerSequence::new("literal", terms)
}

/// The two named families with closed norm formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Fibonacci,
    Lucas,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Fibonacci => "fibonacci",
            Family::Lucas => "lucas",
        }
    }

    /// First `n` terms of the family, starting at index 1.
    pub fn generate(self, n: usize) -> Result<IntegerSequence> {
        match self {
            Family::Fibonacci => fibonacci(n),
            Family::Lucas => lucas(n),
        }
    }

    /// The `k`-th term, with `k = 0` allowed.
    pub fn number(self, k: usize) -> BigInt {
        match self {
            Family::Fibonacci => fibonacci_number(k),
            Family::Lucas => lucas_number(k),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "fibonacci" | "fib" => Ok(Family::Fibonacci),
            "lucas" => Ok(Family::Lucas),
            other => Err(Error::InvalidSequence(format!("unknown family {other:?}"))),
        }
    }
}

fn two_term(first: BigInt, second: BigInt, k: usize) -> BigInt {
    let (mut a, mut b) = (first, second);
    for _ in 0..k {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// `F_k` with `F_0 = 0`, `F_1 = 1`.
pub fn fibonacci_number(k: usize) -> BigInt {
    two_term(BigInt::zero(), BigInt::from(1), k)
}

/// `L_k` with `L_0 = 2`, `L_1 = 1`.
pub fn lucas_number(k: usize) -> BigInt {
    two_term(BigInt::from(2), BigInt::from(1), k)
}

fn two_term_sequence(label: &str, zeroth: i64, n: usize) -> Result<IntegerSequence> {
    if n == 0 {
        return Err(Error::InvalidSequence(format!("{label} sequence needs n >= 1")));
    }
    let mut terms = Vec::with_capacity(n);
    let (mut prev, mut cur) = (BigInt::from(zeroth), BigInt::from(1));
    for _ in 0..n {
        let next = &prev + &cur;
        terms.push(cur.clone());
        prev = std::mem::replace(&mut cur, next);
    }
    IntegerSequence::new(label, terms)
}

/// `F_1, ..., F_n`.
pub fn fibonacci(n: usize) -> Result<IntegerSequence> {
    two_term_sequence("fibonacci", 0, n)
}

/// `L_1, ..., L_n`.
pub fn lucas(n: usize) -> Result<IntegerSequence> {
    two_term_sequence("lucas", 2, n)
}

/// First `n` terms of `t_k = Σ_j coeffs[j] * t_{k-1-j}` seeded with `init`.
///
/// `coeffs[0]` multiplies the most recent term. When `n` is smaller than the
/// order, the sequence is the first `n` initial terms.
pub fn linear_recurrence(coeffs: &[BigInt], init: &[BigInt], n: usize) -> Result<IntegerSequence> {
    if coeffs.len() != init.len() || coeffs.is_empty() {
        return Err(Error::InvalidRecurrence { coeffs: coeffs.len(), init: init.len() });
    }
    if n == 0 {
        return Err(Error::InvalidSequence("recurrence needs n >= 1".into()));
    }
    let mut terms: Vec<BigInt> = init.iter().take(n).cloned().collect();
    while terms.len() < n {
        let k = terms.len();
        let next = coeffs.iter().enumerate().fold(BigInt::zero(), |acc, (j, c)| acc + c * &terms[k - 1 - j]);
        terms.push(next);
    }
    IntegerSequence::new("recurrence", terms)
}

/// Distance between the recurrence values and the double-precision closed forms
/// `F_n = (α^n − β^n)/(α − β)` and `L_n = α^n + β^n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BinetResidualReport {
    pub index: usize,
    pub fib_value: f64,
    pub lucas_value: f64,
    pub fib_residual: f64,
    pub lucas_residual: f64,
}

impl BinetResidualReport {
    pub fn fib_relative(&self) -> f64 {
        self.fib_residual / self.fib_value.abs()
    }

    pub fn lucas_relative(&self) -> f64 {
        self.lucas_residual / self.lucas_value.abs()
    }
}

pub fn binet_residuals(n: usize) -> Result<BinetResidualReport> {
    if !(1..=BINET_MAX_INDEX).contains(&n) {
        return Err(Error::Range { value: n, min: 1, max: BINET_MAX_INDEX });
    }
    let sqrt5 = 5f64.sqrt();
    let alpha = (1.0 + sqrt5) / 2.0;
    let beta = (1.0 - sqrt5) / 2.0;
    // n <= 70 fits in i32
    let (an, bn) = (alpha.powi(n as i32), beta.powi(n as i32));
    let fib_closed = (an - bn) / (alpha - beta);
    let lucas_closed = an + bn;

    let fib_value = fibonacci_number(n).to_f64().expect("F_70 is finite");
    let lucas_value = lucas_number(n).to_f64().expect("L_70 is finite");
    Ok(BinetResidualReport {
        index: n,
        fib_value,
        lucas_value,
        fib_residual: (fib_value - fib_closed).abs(),
        lucas_residual: (lucas_value - lucas_closed).abs(),
    })
}

/// Checks `L_n = F_{n−1} + F_{n+1}` exactly.
pub fn lucas_fib_identity_holds(n: usize) -> bool {
    if n == 0 {
        // F_{-1} = 1, so L_0 = 2 = 1 + 1 still holds
        return lucas_number(0) == BigInt::from(1) + fibonacci_number(1);
    }
    lucas_number(n) == fibonacci_number(n - 1) + fibonacci_number(n + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn literal_sequences() {
        let z = IntegerSequence::from_literal([0, 0, 0]).unwrap();
        assert_eq!(z.terms(), ints(&[0, 0, 0]).as_slice());
        assert_eq!(z.label(), "literal");
        let s = IntegerSequence::from_literal([1, 2, 3]).unwrap();
        assert_eq!(s.term(1), Some(&BigInt::from(1)));
        assert_eq!(s.term(3), Some(&BigInt::from(3)));
        assert_eq!(s.term(0), None);
        assert!(matches!(IntegerSequence::from_literal(Vec::<i64>::new()), Err(Error::InvalidSequence(_))));
    }

    #[test]
    fn fibonacci_and_lucas_prefixes() {
        assert_eq!(fibonacci(1).unwrap().terms(), ints(&[1]).as_slice());
        assert_eq!(fibonacci(7).unwrap().terms(), ints(&[1, 1, 2, 3, 5, 8, 13]).as_slice());
        assert_eq!(lucas(1).unwrap().terms(), ints(&[1]).as_slice());
        assert_eq!(lucas(5).unwrap().terms(), ints(&[1, 3, 4, 7, 11]).as_slice());
        assert!(matches!(fibonacci(0), Err(Error::InvalidSequence(_))));
        assert!(matches!(lucas(0), Err(Error::InvalidSequence(_))));
        assert_eq!(fibonacci_number(0), BigInt::from(0));
        assert_eq!(lucas_number(0), BigInt::from(2));
    }

    #[test]
    fn recurrence_reproduces_families() {
        let one_one = ints(&[1, 1]);
        assert_eq!(linear_recurrence(&one_one, &ints(&[1, 1]), 7).unwrap().terms(), fibonacci(7).unwrap().terms());
        assert_eq!(linear_recurrence(&one_one, &ints(&[1, 3]), 5).unwrap().terms(), lucas(5).unwrap().terms());
        assert_eq!(linear_recurrence(&ints(&[2]), &ints(&[1]), 4).unwrap().terms(), ints(&[1, 2, 4, 8]).as_slice());
        assert_eq!(linear_recurrence(&one_one, &ints(&[1, 3]), 1).unwrap().terms(), ints(&[1]).as_slice());
        assert_eq!(
            linear_recurrence(&one_one, &ints(&[1]), 4),
            Err(Error::InvalidRecurrence { coeffs: 2, init: 1 })
        );
    }

    #[test]
    fn binet_small_indices() {
        let r = binet_residuals(1).unwrap();
        assert!(r.fib_residual <= 1e-9 && r.lucas_residual <= 1e-9);
        let r = binet_residuals(10).unwrap();
        assert_eq!((r.fib_value, r.lucas_value), (55.0, 123.0));
        assert!(r.fib_residual <= 1e-6 && r.lucas_residual <= 1e-6);
        assert!(binet_residuals(70).is_ok());
        assert_eq!(binet_residuals(71), Err(Error::Range { value: 71, min: 1, max: 70 }));
        assert!(binet_residuals(0).is_err());
    }

    #[test]
    fn lucas_identity() {
        assert!(lucas_fib_identity_holds(0));
        assert!(lucas_fib_identity_holds(1));
        assert!(lucas_fib_identity_holds(5));
        assert!(lucas_fib_identity_holds(20));
    }

    #[test]
    fn parse_text_forms() {
        assert_eq!(parse_sequence_text("1,1,2,3").unwrap().terms(), ints(&[1, 1, 2, 3]).as_slice());
        assert_eq!(parse_sequence_text("5\n-3, 7").unwrap().terms(), ints(&[5, -3, 7]).as_slice());
        assert_eq!(parse_sequence_text("\n1\n\n2\n").unwrap().terms(), ints(&[1, 2]).as_slice());
        assert_eq!(
            parse_sequence_text("1,x,3"),
            Err(Error::Parse { token: "x".into(), position: 2 })
        );
        assert!(matches!(parse_sequence_text(" \n"), Err(Error::InvalidSequence(_))));
        let big = "123456789012345678901234567890";
        assert_eq!(parse_sequence_text(big).unwrap().render(), big);
    }

    #[test]
    fn family_parsing() {
        assert_eq!("Lucas".parse::<Family>().unwrap(), Family::Lucas);
        assert_eq!("fibonacci".parse::<Family>().unwrap(), Family::Fibonacci);
        assert!("primes".parse::<Family>().is_err());
    }
}

use std::fmt;

use super::PolyError;

/// Exponent storage. Products check for overflow instead of wrapping.
pub type Exponent = u32;

/// A power product `z1^e1 * ... * zk^ek` over a ring with `k` variables.
///
/// The number of variables is the length of the exponent vector; two
/// monomials are only comparable or combinable when their lengths agree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exponents: Vec<Exponent>,
    degree: u64,
}

impl Monomial {
    pub fn new(exponents: Vec<Exponent>) -> Self {
        let degree = exponents.iter().map(|&e| u64::from(e)).sum();
        Monomial { exponents, degree }
    }

    /// The constant monomial `1` in `nvars` variables.
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exponents: vec![0; nvars],
            degree: 0,
        }
    }

    /// The monomial `z_{index+1}` (variables are 0-based in the API).
    pub fn variable(nvars: usize, index: usize) -> Result<Self, PolyError> {
        if index >= nvars {
            return Err(PolyError::VariableOutOfRange { index, nvars });
        }
        let mut exponents = vec![0; nvars];
        exponents[index] = 1;
        Ok(Monomial {
            exponents,
            degree: 1,
        })
    }

    pub fn nvars(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[Exponent] {
        &self.exponents
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    fn check_dims(&self, other: &Monomial) -> Result<(), PolyError> {
        if self.nvars() != other.nvars() {
            return Err(PolyError::DimensionMismatch {
                left: self.nvars(),
                right: other.nvars(),
            });
        }
        Ok(())
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial, PolyError> {
        self.check_dims(other)?;
        let exponents = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(&a, &b)| a.checked_add(b).ok_or(PolyError::ExponentOverflow))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Monomial {
            exponents,
            degree: self.degree + other.degree,
        })
    }

    /// True when `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.nvars() == other.nvars()
            && self.degree <= other.degree
            && self
                .exponents
                .iter()
                .zip(&other.exponents)
                .all(|(a, b)| a <= b)
    }

    /// Exact quotient `self / divisor`, or `None` if `divisor` does not divide `self`.
    pub fn div(&self, divisor: &Monomial) -> Option<Monomial> {
        if !divisor.divides(self) {
            return None;
        }
        let exponents: Vec<Exponent> = self
            .exponents
            .iter()
            .zip(&divisor.exponents)
            .map(|(a, b)| a - b)
            .collect();
        Some(Monomial {
            exponents,
            degree: self.degree - divisor.degree,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial, PolyError> {
        self.check_dims(other)?;
        Ok(Monomial::new(
            self.exponents
                .iter()
                .zip(&other.exponents)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        ))
    }

    /// No variable occurs in both monomials.
    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(&a, &b)| a == 0 || b == 0)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Monomial({self})")
    }
}

/// Renders as `z1^2*z3`; the constant monomial renders as `1`.
impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "z{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

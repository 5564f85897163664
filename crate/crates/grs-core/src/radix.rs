//! Base-k digit machinery: representations, digit sums, carry lengths, and
//! fibres, in one and several dimensions.
//!
//! Digit vectors are stored least-significant-first, matching the indexing
//! `n = sum x_i k^i`. The representation of 0 is the empty vector, so the
//! most significant nonzero position is always well defined for `n > 0`.
//!
//! All operations support values up to `u64::MAX`; the carry/fibre helpers
//! panic if a shifted value or a fibre member would exceed that width.

use crate::error::{Error, Result};

/// LSB-first base-k digits of a non-negative integer, without trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digits {
    base: u32,
    digits: Vec<u32>,
}

impl Digits {
    /// Digits of `n` in base `k`.
    pub fn of(n: u64, base: u32) -> Result<Self> {
        if base < 2 {
            return Err(Error::InvalidBase(base));
        }
        let mut digits = Vec::new();
        let mut rest = n;
        while rest > 0 {
            digits.push((rest % base as u64) as u32);
            rest /= base as u64;
        }
        Ok(Self { base, digits })
    }

    /// Builds a digit vector from parts, validating range, the no-trailing-zero
    /// normal form, and that the value fits in a `u64`.
    pub fn from_parts(base: u32, digits: Vec<u32>) -> Result<Self> {
        if base < 2 {
            return Err(Error::InvalidBase(base));
        }
        if let Some(&d) = digits.iter().find(|&&d| d >= base) {
            return Err(Error::InvalidDigit { digit: d, base });
        }
        if digits.last() == Some(&0) {
            return Err(Error::TrailingZero);
        }
        let mut value: u64 = 0;
        for &d in digits.iter().rev() {
            value = value
                .checked_mul(base as u64)
                .and_then(|v| v.checked_add(d as u64))
                .ok_or(Error::WidthOverflow)?;
        }
        Ok(Self { base, digits })
    }

    /// The integer this vector represents.
    pub fn value(&self) -> u64 {
        let mut value: u64 = 0;
        for &d in self.digits.iter().rev() {
            value = value * self.base as u64 + d as u64;
        }
        value
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    /// Stored digits, least significant first.
    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    /// Digit at position `i`, zero beyond the stored length.
    pub fn digit(&self, i: usize) -> u32 {
        self.digits.get(i).copied().unwrap_or(0)
    }

    /// Number of stored digits (`l_n + 1` for `n > 0`, `0` for `n = 0`).
    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// Index of the most significant nonzero digit, `None` for 0.
    pub fn most_significant_index(&self) -> Option<usize> {
        self.len().checked_sub(1)
    }
}

/// Alias for [`Digits::of`].
pub fn to_digits(n: u64, base: u32) -> Result<Digits> {
    Digits::of(n, base)
}

/// Alias for [`Digits::value`].
pub fn from_digits(d: &Digits) -> u64 {
    d.value()
}

/// Base-k digit sum of `n`.
pub fn sum_of_digits(n: u64, base: u32) -> u64 {
    assert!(base >= 2, "base must be at least 2");
    let mut sum = 0u64;
    let mut rest = n;
    while rest > 0 {
        sum += rest % base as u64;
        rest /= base as u64;
    }
    sum
}

/// Highest digit position at which `n` and `n + shift` differ; all higher
/// positions agree. Measures how far the carry propagates.
pub fn carry_length(n: u64, shift: u64, base: u32) -> usize {
    assert!(shift >= 1, "shift must be positive");
    assert!(base >= 2, "base must be at least 2");
    let m = n.checked_add(shift).expect("n + shift exceeds the supported width");
    let k = base as u64;
    let (mut a, mut b) = (n, m);
    let mut last_diff = 0usize;
    let mut i = 0usize;
    while b > 0 {
        if a % k != b % k {
            last_diff = i;
        }
        a /= k;
        b /= k;
        i += 1;
    }
    last_diff
}

/// The k integers obtained from `n` by varying digit `c_n + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fibre {
    pub anchor: u64,
    pub shift: u64,
    pub carry_length: usize,
    /// Members in increasing order; `anchor` is among them.
    pub members: Vec<u64>,
}

/// Fibre of `n` for the shift `r`: vary digit `c_n + 1` over the alphabet.
pub fn fibre(n: u64, shift: u64, base: u32) -> Fibre {
    let c = carry_length(n, shift, base);
    let place = (base as u128).pow(c as u32 + 1);
    let current = ((n as u128) / place % base as u128) as i128;
    let members = (0..base as i128)
        .map(|alpha| {
            let m = n as i128 + (alpha - current) * place as i128;
            u64::try_from(m).expect("fibre member exceeds the supported width")
        })
        .collect();
    Fibre { anchor: n, shift, carry_length: c, members }
}

/// Carry length over digit columns of a vector of integers; the shift vector
/// must be nonzero and of the same length.
pub fn carry_length_ddim(n: &[u64], shift: &[u64], base: u32) -> usize {
    assert_eq!(n.len(), shift.len(), "anchor and shift must have the same length");
    assert!(shift.iter().any(|&r| r > 0), "shift vector must be nonzero");
    shift
        .iter()
        .zip(n)
        .filter(|(&r, _)| r > 0)
        .map(|(&r, &nt)| carry_length(nt, r, base))
        .max()
        .expect("at least one nonzero shift component")
}

/// d-dimensional fibre: vary the whole digit column `c_n + 1` over `Sigma_k^d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DdimFibre {
    pub anchor: Vec<u64>,
    pub shift: Vec<u64>,
    pub carry_length: usize,
    /// `k^d` members, ordered by column address (first component least
    /// significant).
    pub members: Vec<Vec<u64>>,
}

/// Fibre of a d-dimensional anchor.
pub fn fibre_ddim(n: &[u64], shift: &[u64], base: u32) -> DdimFibre {
    let c = carry_length_ddim(n, shift, base);
    let d = n.len();
    let place = (base as u128).pow(c as u32 + 1);
    let current: Vec<i128> =
        n.iter().map(|&nt| ((nt as u128) / place % base as u128) as i128).collect();
    let count = (base as u64).pow(d as u32);
    let members = (0..count)
        .map(|addr| {
            let mut rest = addr;
            (0..d)
                .map(|t| {
                    let alpha = (rest % base as u64) as i128;
                    rest /= base as u64;
                    let m = n[t] as i128 + (alpha - current[t]) * place as i128;
                    u64::try_from(m).expect("fibre member exceeds the supported width")
                })
                .collect()
        })
        .collect();
    DdimFibre { anchor: n.to_vec(), shift: shift.to_vec(), carry_length: c, members }
}

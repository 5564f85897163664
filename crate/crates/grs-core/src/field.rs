//! Arithmetic in GF(p^n) as polynomials over Z_p modulo a fixed monic
//! irreducible, and the difference-matrix construction it supports.
//!
//! Elements are coefficient vectors `b_0 + b_1 x + ... + b_{n-1} x^{n-1}`,
//! constant term first. The digit<->element bijection takes the base-p digits
//! of an index as the coefficients, least significant digit = constant term.

use crate::error::{Error, Result};
use crate::group::{GroupElement, GroupSpec};
use crate::weights::WeightFunction;

/// Table-size guard for [`build_field_difference_matrix`].
pub const FIELD_MATRIX_GUARD: u64 = 4096;

/// A field GF(p^n) with a fixed monic irreducible modulus polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldSpec {
    p: u32,
    degree: usize,
    /// Coefficients of the modulus, constant term first, length `degree + 1`.
    modulus: Vec<u32>,
}

/// An element of a [`FieldSpec`]: `degree` coefficients in `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldElement {
    coeffs: Vec<u32>,
}

impl FieldSpec {
    /// Builds a field, verifying that `p` is prime and that the modulus is a
    /// monic irreducible of the declared degree.
    pub fn new(p: u32, degree: usize, modulus: Vec<u32>) -> Result<Self> {
        check_prime(p)?;
        check_degree(degree)?;
        if modulus.len() != degree + 1 || modulus.last() != Some(&1) {
            return Err(Error::NotMonic);
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::NotMonic);
        }
        let poly: Vec<u64> = modulus.iter().map(|&c| c as u64).collect();
        if !is_irreducible(&poly, p as u64) {
            return Err(Error::Reducible);
        }
        Ok(Self { p, degree, modulus })
    }

    /// Builds GF(p^n) with the canonical modulus from [`find_irreducible`].
    pub fn with_default_modulus(p: u32, degree: usize) -> Result<Self> {
        let modulus = find_irreducible(p, degree)?;
        Ok(Self { p, degree, modulus })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Modulus coefficients, constant term first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Field order `p^degree`.
    pub fn order(&self) -> u64 {
        (self.p as u64).pow(self.degree as u32)
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { coeffs: vec![0; self.degree] }
    }

    pub fn one(&self) -> FieldElement {
        let mut coeffs = vec![0; self.degree];
        coeffs[0] = 1;
        FieldElement { coeffs }
    }

    /// Builds an element from coefficients, validating shape and range.
    pub fn element(&self, coeffs: Vec<u32>) -> Result<FieldElement> {
        if coeffs.len() != self.degree || coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::FieldMismatch);
        }
        Ok(FieldElement { coeffs })
    }

    /// Element whose coefficients are the base-p digits of `index`.
    pub fn element_from_index(&self, index: u64) -> Result<FieldElement> {
        if index >= self.order() {
            return Err(Error::IndexOutOfRange { index, order: self.order() });
        }
        let mut rest = index;
        let coeffs = (0..self.degree)
            .map(|_| {
                let c = (rest % self.p as u64) as u32;
                rest /= self.p as u64;
                c
            })
            .collect();
        Ok(FieldElement { coeffs })
    }

    /// Inverse of [`FieldSpec::element_from_index`].
    pub fn element_index(&self, a: &FieldElement) -> u64 {
        a.coeffs.iter().rev().fold(0u64, |acc, &c| acc * self.p as u64 + c as u64)
    }

    fn check(&self, a: &FieldElement) -> Result<()> {
        if a.coeffs.len() != self.degree || a.coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    /// Componentwise sum.
    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        self.check(b)?;
        let coeffs =
            a.coeffs.iter().zip(&b.coeffs).map(|(&x, &y)| (x + y) % self.p).collect();
        Ok(FieldElement { coeffs })
    }

    /// Additive inverse.
    pub fn neg(&self, a: &FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        let coeffs = a
            .coeffs
            .iter()
            .map(|&x| if x == 0 { 0 } else { self.p - x })
            .collect();
        Ok(FieldElement { coeffs })
    }

    /// Polynomial product reduced modulo the field modulus.
    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        self.check(b)?;
        let av: Vec<u64> = a.coeffs.iter().map(|&c| c as u64).collect();
        let bv: Vec<u64> = b.coeffs.iter().map(|&c| c as u64).collect();
        let mv: Vec<u64> = self.modulus.iter().map(|&c| c as u64).collect();
        let prod = poly_mul(&av, &bv, self.p as u64);
        let rem = poly_rem(prod, &mv, self.p as u64);
        let mut coeffs = vec![0u32; self.degree];
        for (i, &c) in rem.iter().enumerate() {
            coeffs[i] = c as u32;
        }
        Ok(FieldElement { coeffs })
    }

    /// Projection keeping the first `m` coefficients, as an element of
    /// `(Z_p)^m`. A surjective group homomorphism from the additive group.
    pub fn truncate(&self, a: &FieldElement, m: usize) -> Result<GroupElement> {
        self.check(a)?;
        if m < 1 || m > self.degree {
            return Err(Error::TruncationRange { width: m, degree: self.degree });
        }
        let group = self.truncation_group(m)?;
        group.element(&a.coeffs[..m])
    }

    /// The target group `(Z_p)^m` of [`FieldSpec::truncate`].
    pub fn truncation_group(&self, m: usize) -> Result<GroupSpec> {
        if m < 1 || m > self.degree {
            return Err(Error::TruncationRange { width: m, degree: self.degree });
        }
        GroupSpec::power(self.p, m)
    }
}

impl FieldElement {
    /// Coefficients, constant term first.
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

/// The lexicographically smallest monic irreducible of the given degree over
/// Z_p, coefficient vectors compared constant-term-first. Deterministic, so
/// constructions built on it reproduce bit-exactly.
pub fn find_irreducible(p: u32, degree: usize) -> Result<Vec<u32>> {
    check_prime(p)?;
    check_degree(degree)?;
    // Odometer over (c_0, ..., c_{degree-1}) in lexicographic order: the last
    // position varies fastest. A degree-d irreducible always exists, and the
    // density is about 1/d, so the scan stops quickly.
    let mut low = vec![0u32; degree];
    loop {
        let mut poly: Vec<u64> = low.iter().map(|&c| c as u64).collect();
        poly.push(1);
        if is_irreducible(&poly, p as u64) {
            let mut out = low.clone();
            out.push(1);
            return Ok(out);
        }
        let mut pos = degree;
        loop {
            assert!(pos > 0, "no irreducible of degree {degree} over Z_{p}");
            pos -= 1;
            low[pos] += 1;
            if low[pos] < p {
                break;
            }
            low[pos] = 0;
        }
    }
}

/// Rank-2, one-dimensional difference matrix on `Sigma_{p^n}` with values in
/// `(Z_p)^m`, built from field multiplication followed by coefficient
/// truncation: `d(i, j) = truncate(elem(i) * elem(j), m)`.
pub fn build_field_difference_matrix(p: u32, m: usize, n: usize) -> Result<WeightFunction> {
    check_prime(p)?;
    check_degree(n)?;
    if m < 1 || m > n {
        return Err(Error::TruncationRange { width: m, degree: n });
    }
    let k = (p as u64).pow(n as u32);
    if k > FIELD_MATRIX_GUARD {
        return Err(Error::TableGuard { size: k, guard: FIELD_MATRIX_GUARD });
    }
    let field = FieldSpec::with_default_modulus(p, n)?;
    let group = GroupSpec::power(p, m)?;
    let elems: Vec<FieldElement> =
        (0..k).map(|i| field.element_from_index(i).expect("index in range")).collect();
    let k = k as usize;
    let mut table = vec![0u16; k * k];
    for i in 0..k {
        for j in i..k {
            let prod = field.mul(&elems[i], &elems[j])?;
            // Index of the truncated element in (Z_p)^m: base-p digits of the
            // first m coefficients, first coordinate least significant.
            let idx = prod.coeffs[..m]
                .iter()
                .rev()
                .fold(0u64, |acc, &c| acc * p as u64 + c as u64);
            table[i * k + j] = idx as u16;
            table[j * k + i] = idx as u16;
        }
    }
    WeightFunction::from_indices(k as u32, 2, 1, group, table)
}

fn check_prime(p: u32) -> Result<()> {
    if is_prime(p as u64) {
        Ok(())
    } else {
        Err(Error::NotPrime(p as u64))
    }
}

fn check_degree(degree: usize) -> Result<()> {
    if (1..=8).contains(&degree) {
        Ok(())
    } else {
        Err(Error::InvalidDegree(degree))
    }
}

/// Trial-division primality, sufficient at these sizes.
pub(crate) fn is_prime(x: u64) -> bool {
    if x < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= x {
        if x % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

// --- dense polynomial arithmetic over Z_p (constant term first) ---

fn poly_trim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = ((out[i + j] as u128 + x as u128 * y as u128) % p as u128) as u64;
        }
    }
    poly_trim(&mut out);
    out
}

/// Remainder of `a` modulo the monic polynomial `m`.
fn poly_rem(mut a: Vec<u64>, m: &[u64], p: u64) -> Vec<u64> {
    let d = m.len() - 1;
    while a.len() > d {
        let lead = *a.last().unwrap();
        let shift = a.len() - 1 - d;
        if lead != 0 {
            for (j, &c) in m.iter().enumerate() {
                let sub = (lead as u128 * c as u128 % p as u128) as u64;
                let idx = shift + j;
                a[idx] = (a[idx] + p - sub) % p;
            }
        }
        a.pop();
        poly_trim(&mut a);
    }
    a
}

fn poly_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let len = a.len().max(b.len());
    let mut out = vec![0u64; len];
    for (i, item) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *item = (x + p - y) % p;
    }
    poly_trim(&mut out);
    out
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut out = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            out = (out as u128 * base as u128 % p as u128) as u64;
        }
        base = (base as u128 * base as u128 % p as u128) as u64;
        exp >>= 1;
    }
    out
}

fn poly_gcd(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    while !b.is_empty() {
        // Make b monic before reducing.
        let lead = *b.last().unwrap();
        if lead != 1 {
            let inv = mod_pow(lead, p - 2, p);
            for c in &mut b {
                *c = (*c as u128 * inv as u128 % p as u128) as u64;
            }
        }
        let r = poly_rem(a, &b, p);
        a = b;
        b = r;
    }
    a
}

fn poly_pow(a: &[u64], mut exp: u64, m: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![1u64];
    let mut base = poly_rem(a.to_vec(), m, p);
    while exp > 0 {
        if exp & 1 == 1 {
            out = poly_rem(poly_mul(&out, &base, p), m, p);
        }
        base = poly_rem(poly_mul(&base, &base, p), m, p);
        exp >>= 1;
    }
    out
}

/// Rabin irreducibility test: `f` of degree `d` is irreducible over Z_p iff
/// `x^(p^d) = x (mod f)` and `gcd(x^(p^(d/q)) - x, f) = 1` for every prime
/// `q` dividing `d`.
fn is_irreducible(poly: &[u64], p: u64) -> bool {
    let d = poly.len() - 1;
    if d == 0 {
        return false;
    }
    if d == 1 {
        return true;
    }
    let x = vec![0u64, 1];
    // frob[i] = x^(p^i) mod f, built by repeated p-th powers.
    let mut frob = Vec::with_capacity(d + 1);
    frob.push(x.clone());
    for _ in 0..d {
        let next = poly_pow(frob.last().unwrap(), p, poly, p);
        frob.push(next);
    }
    if frob[d] != x {
        return false;
    }
    for q in prime_divisors(d) {
        let diff = poly_sub(&frob[d / q], &x, p);
        let g = poly_gcd(poly.to_vec(), diff, p);
        if g.len() > 1 {
            return false;
        }
    }
    true
}

fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut q = 2;
    while q * q <= n {
        if n % q == 0 {
            out.push(q);
            while n % q == 0 {
                n /= q;
            }
        }
        q += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::validate_difference_condition;

    #[test]
    fn smallest_irreducibles() {
        assert_eq!(find_irreducible(2, 1).unwrap(), vec![0, 1]); // x
        assert_eq!(find_irreducible(2, 2).unwrap(), vec![1, 1, 1]); // x^2+x+1
        assert_eq!(find_irreducible(3, 2).unwrap(), vec![1, 0, 1]); // x^2+1
    }

    /// Oracle for quadratics: no root over Z_p means irreducible. Scans
    /// candidates in the same lexicographic order.
    fn brute_smallest_quadratic(p: u32) -> Vec<u32> {
        for c0 in 0..p {
            for c1 in 0..p {
                let has_root = (0..p).any(|x| {
                    let v = (x as u64 * x as u64 + c1 as u64 * x as u64 + c0 as u64)
                        % p as u64;
                    v == 0
                });
                if !has_root {
                    return vec![c0, c1, 1];
                }
            }
        }
        unreachable!("an irreducible quadratic exists over every prime field");
    }

    #[test]
    fn quadratics_match_brute_force() {
        for p in [2u32, 3, 5, 7, 11, 13] {
            assert_eq!(find_irreducible(p, 2).unwrap(), brute_smallest_quadratic(p));
        }
    }

    #[test]
    fn degree_and_prime_guards() {
        assert_eq!(find_irreducible(4, 2), Err(Error::NotPrime(4)));
        assert_eq!(find_irreducible(2, 0), Err(Error::InvalidDegree(0)));
        assert_eq!(find_irreducible(2, 9), Err(Error::InvalidDegree(9)));
    }

    #[test]
    fn spec_validates_modulus() {
        assert!(FieldSpec::new(2, 2, vec![1, 1, 1]).is_ok());
        // x^2 + 1 = (x+1)^2 over Z_2.
        assert_eq!(FieldSpec::new(2, 2, vec![1, 0, 1]), Err(Error::Reducible));
        assert_eq!(FieldSpec::new(2, 2, vec![1, 1]), Err(Error::NotMonic));
    }

    #[test]
    fn gf4_multiplication() {
        let f = FieldSpec::with_default_modulus(2, 2).unwrap();
        let x = f.element(vec![0, 1]).unwrap();
        let x_sq = f.mul(&x, &x).unwrap();
        assert_eq!(x_sq.coeffs(), &[1, 1]); // x^2 = x + 1
        for i in 0..f.order() {
            let a = f.element_from_index(i).unwrap();
            assert_eq!(f.mul(&a, &f.one()).unwrap(), a);
            assert!(f.mul(&a, &f.zero()).unwrap().is_zero());
        }
    }

    #[test]
    fn field_axioms_exhaustive_small_orders() {
        for (p, n) in [(2usize, 1usize), (3, 1), (5, 1), (2, 2), (3, 2), (2, 3), (2, 6), (7, 1)] {
            let f = FieldSpec::with_default_modulus(p as u32, n).unwrap();
            assert!(f.order() <= 64);
            let elems: Vec<_> =
                (0..f.order()).map(|i| f.element_from_index(i).unwrap()).collect();
            for a in &elems {
                // Nonzero elements have multiplicative inverses.
                if !a.is_zero() {
                    assert!(elems.iter().any(|b| f.mul(a, b).unwrap() == f.one()));
                }
                for b in &elems {
                    assert_eq!(f.mul(a, b).unwrap(), f.mul(b, a).unwrap());
                    for c in &elems {
                        let lhs = f.mul(a, &f.add(b, c).unwrap()).unwrap();
                        let rhs =
                            f.add(&f.mul(a, b).unwrap(), &f.mul(a, c).unwrap()).unwrap();
                        assert_eq!(lhs, rhs, "distributivity in GF({}^{})", p, n);
                    }
                }
            }
        }
    }

    #[test]
    fn truncation_examples() {
        let f = FieldSpec::with_default_modulus(2, 3).unwrap();
        let a = f.element(vec![1, 1, 1]).unwrap();
        assert_eq!(f.truncate(&a, 2).unwrap().residues(), &[1, 1]);
        assert_eq!(f.truncate(&a, 3).unwrap().residues(), &[1, 1, 1]);
        assert!(f.truncate(&f.zero(), 1).unwrap().is_zero());
        assert!(f.truncate(&a, 0).is_err());
        assert!(f.truncate(&a, 4).is_err());
    }

    #[test]
    fn truncation_is_additive_homomorphism() {
        for (p, n) in [(2u32, 3usize), (2, 6), (3, 2), (5, 1)] {
            let f = FieldSpec::with_default_modulus(p, n).unwrap();
            assert!(f.order() <= 64);
            for m in 1..=n {
                let g = f.truncation_group(m).unwrap();
                for i in 0..f.order() {
                    for j in 0..f.order() {
                        let a = f.element_from_index(i).unwrap();
                        let b = f.element_from_index(j).unwrap();
                        let sum = f.add(&a, &b).unwrap();
                        let lhs = f.truncate(&sum, m).unwrap();
                        let rhs = g
                            .add(&f.truncate(&a, m).unwrap(), &f.truncate(&b, m).unwrap())
                            .unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
                // Surjectivity: every element of (Z_p)^m is hit.
                let mut hit = vec![false; g.order() as usize];
                for i in 0..f.order() {
                    let a = f.element_from_index(i).unwrap();
                    let t = f.truncate(&a, m).unwrap();
                    hit[g.element_index(&t).unwrap() as usize] = true;
                }
                assert!(hit.into_iter().all(|h| h));
            }
        }
    }

    #[test]
    fn classical_matrices_from_fields() {
        let w = build_field_difference_matrix(2, 1, 1).unwrap();
        assert_eq!(w.table(), &[0, 0, 0, 1]);
        let w = build_field_difference_matrix(3, 1, 1).unwrap();
        assert_eq!(w.table(), &[0, 0, 0, 0, 1, 2, 0, 2, 1]);
    }

    #[test]
    fn gf4_matrix_passes_validator() {
        let w = build_field_difference_matrix(2, 1, 2).unwrap();
        assert_eq!(w.base(), 4);
        assert_eq!(w.group().order(), 2);
        assert_eq!(
            w.table(),
            &[0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 1, 1, 0, 1, 1, 0]
        );
        assert!(validate_difference_condition(&w).is_difference);
    }

    #[test]
    fn field_matrices_pass_validator_small() {
        for (p, n) in [(2u32, 1usize), (2, 2), (2, 3), (2, 4), (2, 5), (2, 6), (3, 1), (3, 2), (3, 3), (5, 1), (5, 2), (7, 1), (61, 1)] {
            for m in 1..=n {
                let w = build_field_difference_matrix(p, m, n).unwrap();
                let report = validate_difference_condition(&w);
                assert!(
                    report.is_difference,
                    "GF({p}^{n}) truncated to width {m}: {:?}",
                    report.first_violation
                );
            }
        }
    }

    #[test]
    fn field_matrix_guards() {
        assert!(matches!(
            build_field_difference_matrix(2, 3, 2),
            Err(Error::TruncationRange { .. })
        ));
        assert!(matches!(
            build_field_difference_matrix(2, 1, 13),
            Err(Error::InvalidDegree(13))
        ));
        assert!(matches!(
            build_field_difference_matrix(5, 1, 6),
            Err(Error::TableGuard { .. })
        ));
    }
}

//! Finite abelian groups presented as products of cyclic groups.
//!
//! A group is given by its list of cyclic moduli `Z_{m1} x ... x Z_{mt}`;
//! every finite abelian group has such a presentation. Elements are residue
//! vectors reduced componentwise. The element<->index bijection is mixed-radix
//! with the *first* modulus least significant; that convention is fixed
//! because file formats and weight tables address elements by index.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A finite abelian group `Z_{m1} x ... x Z_{mt}` with all `m_t >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    moduli: Vec<u32>,
}

/// An element of a [`GroupSpec`], stored as a reduced residue vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupElement {
    residues: Vec<u32>,
}

impl GroupSpec {
    /// Builds a group from its cyclic moduli. Requires at least one modulus,
    /// each at least 2.
    pub fn new(moduli: Vec<u32>) -> Result<Self> {
        if moduli.is_empty() {
            return Err(Error::EmptyGroup);
        }
        if let Some(&m) = moduli.iter().find(|&&m| m < 2) {
            return Err(Error::InvalidModulus(m));
        }
        Ok(Self { moduli })
    }

    /// The cyclic group `Z_m`.
    pub fn cyclic(m: u32) -> Result<Self> {
        Self::new(vec![m])
    }

    /// The elementary abelian group `(Z_p)^m`.
    pub fn power(p: u32, m: usize) -> Result<Self> {
        Self::new(vec![p; m])
    }

    /// Cyclic moduli, in order.
    pub fn moduli(&self) -> &[u32] {
        &self.moduli
    }

    /// Group order, the product of the moduli.
    pub fn order(&self) -> u64 {
        self.moduli.iter().map(|&m| m as u64).product()
    }

    /// The identity element.
    pub fn zero(&self) -> GroupElement {
        GroupElement { residues: vec![0; self.moduli.len()] }
    }

    /// Builds an element from residues, validating shape and range.
    pub fn element(&self, residues: &[u32]) -> Result<GroupElement> {
        let e = GroupElement { residues: residues.to_vec() };
        self.check(&e)?;
        Ok(e)
    }

    /// Whether `a` is a valid element of this group.
    pub fn contains(&self, a: &GroupElement) -> bool {
        a.residues.len() == self.moduli.len()
            && a.residues.iter().zip(&self.moduli).all(|(&r, &m)| r < m)
    }

    fn check(&self, a: &GroupElement) -> Result<()> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(Error::GroupMismatch(format!("{a} in {self}")))
        }
    }

    /// Componentwise sum modulo the moduli.
    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        self.check(b)?;
        let residues = a
            .residues
            .iter()
            .zip(&b.residues)
            .zip(&self.moduli)
            .map(|((&x, &y), &m)| (x + y) % m)
            .collect();
        Ok(GroupElement { residues })
    }

    /// Additive inverse.
    pub fn neg(&self, a: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        let residues = a
            .residues
            .iter()
            .zip(&self.moduli)
            .map(|(&x, &m)| if x == 0 { 0 } else { m - x })
            .collect();
        Ok(GroupElement { residues })
    }

    /// `a - b`.
    pub fn sub(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        let nb = self.neg(b)?;
        self.add(a, &nb)
    }

    /// Canonical index of an element: mixed radix, first modulus least
    /// significant.
    pub fn element_index(&self, a: &GroupElement) -> Result<u64> {
        self.check(a)?;
        let mut index = 0u64;
        for (&r, &m) in a.residues.iter().zip(&self.moduli).rev() {
            index = index * m as u64 + r as u64;
        }
        Ok(index)
    }

    /// Inverse of [`GroupSpec::element_index`].
    pub fn index_element(&self, index: u64) -> Result<GroupElement> {
        if index >= self.order() {
            return Err(Error::IndexOutOfRange { index, order: self.order() });
        }
        let mut rest = index;
        let residues = self
            .moduli
            .iter()
            .map(|&m| {
                let r = (rest % m as u64) as u32;
                rest /= m as u64;
                r
            })
            .collect();
        Ok(GroupElement { residues })
    }

    /// All elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order()).map(|i| self.index_element(i).expect("index in range"))
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (t, m) in self.moduli.iter().enumerate() {
            if t > 0 {
                write!(f, "x")?;
            }
            write!(f, "Z{m}")?;
        }
        Ok(())
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    /// Parses the `Z2`, `Z3`, `Z2xZ2` notation used in file headers.
    fn from_str(s: &str) -> Result<Self> {
        let mut moduli = Vec::new();
        for part in s.split('x') {
            let digits = part
                .strip_prefix('Z')
                .ok_or_else(|| Error::GroupMismatch(format!("bad group spec `{s}`")))?;
            let m: u32 = digits
                .parse()
                .map_err(|_| Error::GroupMismatch(format!("bad group spec `{s}`")))?;
            moduli.push(m);
        }
        Self::new(moduli)
    }
}

impl GroupElement {
    /// Residues, one per cyclic factor.
    pub fn residues(&self) -> &[u32] {
        &self.residues
    }

    /// Whether this is the identity.
    pub fn is_zero(&self) -> bool {
        self.residues.iter().all(|&r| r == 0)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.residues.len() == 1 {
            return write!(f, "{}", self.residues[0]);
        }
        write!(f, "(")?;
        for (t, r) in self.residues.iter().enumerate() {
            if t > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, ")")
    }
}

/// Largest group order for which index-level operations are supported.
/// Weight tables store element indices as `u16`.
pub(crate) const MAX_INDEXED_ORDER: u64 = 1 << 16;

/// Order threshold below which a full addition table is precomputed.
const ADD_TABLE_MAX: u64 = 2048;

/// Index-level group arithmetic used by the counting hot loops.
#[derive(Debug, Clone)]
pub(crate) struct GroupOps {
    moduli: Vec<u32>,
    order: usize,
    neg: Vec<u16>,
    add: Option<Vec<u16>>,
}

impl GroupOps {
    pub fn new(spec: &GroupSpec) -> Result<Self> {
        let order = spec.order();
        if order > MAX_INDEXED_ORDER {
            return Err(Error::OrderTooLarge { order });
        }
        let order = order as usize;
        let moduli = spec.moduli().to_vec();
        let mut neg = vec![0u16; order];
        for (i, item) in neg.iter_mut().enumerate() {
            *item = neg_decomposed(&moduli, i) as u16;
        }
        let add = if (order as u64) <= ADD_TABLE_MAX {
            let mut table = vec![0u16; order * order];
            for a in 0..order {
                for b in 0..order {
                    table[a * order + b] = add_decomposed(&moduli, a, b) as u16;
                }
            }
            Some(table)
        } else {
            None
        };
        Ok(Self { moduli, order, neg, add })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn add_idx(&self, a: u16, b: u16) -> u16 {
        match &self.add {
            Some(table) => table[a as usize * self.order + b as usize],
            None => add_decomposed(&self.moduli, a as usize, b as usize) as u16,
        }
    }

    #[inline]
    pub fn neg_idx(&self, a: u16) -> u16 {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub_idx(&self, a: u16, b: u16) -> u16 {
        self.add_idx(a, self.neg_idx(b))
    }
}

fn add_decomposed(moduli: &[u32], a: usize, b: usize) -> usize {
    let mut out = 0usize;
    let mut place = 1usize;
    let (mut ra, mut rb) = (a, b);
    for &m in moduli {
        let m = m as usize;
        out += ((ra % m + rb % m) % m) * place;
        ra /= m;
        rb /= m;
        place *= m;
    }
    out
}

fn neg_decomposed(moduli: &[u32], a: usize) -> usize {
    let mut out = 0usize;
    let mut place = 1usize;
    let mut ra = a;
    for &m in moduli {
        let m = m as usize;
        let r = ra % m;
        out += (if r == 0 { 0 } else { m - r }) * place;
        ra /= m;
        place *= m;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(moduli: &[u32]) -> GroupSpec {
        GroupSpec::new(moduli.to_vec()).unwrap()
    }

    #[test]
    fn construction_rejects_bad_moduli() {
        assert_eq!(GroupSpec::new(vec![]), Err(Error::EmptyGroup));
        assert_eq!(GroupSpec::new(vec![2, 1]), Err(Error::InvalidModulus(1)));
    }

    #[test]
    fn order_two_inverse() {
        let g = z(&[2]);
        let one = g.element(&[1]).unwrap();
        assert_eq!(g.add(&one, &one).unwrap(), g.zero());
    }

    #[test]
    fn componentwise_mod() {
        let g = z(&[3, 3]);
        let a = g.element(&[1, 2]).unwrap();
        let b = g.element(&[2, 2]).unwrap();
        assert_eq!(g.add(&a, &b).unwrap(), g.element(&[0, 1]).unwrap());
    }

    #[test]
    fn identity_law() {
        let g = z(&[4, 5]);
        for a in g.elements() {
            assert_eq!(g.add(&a, &g.zero()).unwrap(), a);
        }
    }

    #[test]
    fn negation_examples() {
        let g3 = z(&[3]);
        assert_eq!(g3.neg(&g3.element(&[1]).unwrap()).unwrap(), g3.element(&[2]).unwrap());
        let g22 = z(&[2, 2]);
        let a = g22.element(&[1, 0]).unwrap();
        assert_eq!(g22.neg(&a).unwrap(), a);
        assert_eq!(g22.neg(&g22.zero()).unwrap(), g22.zero());
    }

    #[test]
    fn mixed_radix_index() {
        // First modulus least significant: 5 = 1 + 2*2 in Z2 x Z3.
        let g = z(&[2, 3]);
        assert_eq!(g.index_element(5).unwrap(), g.element(&[1, 2]).unwrap());
        assert_eq!(g.index_element(0).unwrap(), g.zero());
        assert_eq!(g.index_element(6), Err(Error::IndexOutOfRange { index: 6, order: 6 }));
        // Matches the hand-enumerated table.
        let expect: Vec<&[u32]> =
            vec![&[0, 0], &[1, 0], &[0, 1], &[1, 1], &[0, 2], &[1, 2]];
        for (i, residues) in expect.into_iter().enumerate() {
            assert_eq!(g.index_element(i as u64).unwrap().residues(), residues);
        }
    }

    #[test]
    fn index_round_trip() {
        let g = z(&[2, 3]);
        for i in 0..g.order() {
            let e = g.index_element(i).unwrap();
            assert_eq!(g.element_index(&e).unwrap(), i);
        }
    }

    #[test]
    fn spec_mismatch_is_rejected() {
        let g = z(&[2, 3]);
        let other = z(&[3]).element(&[2]).unwrap();
        assert!(matches!(g.add(&g.zero(), &other), Err(Error::GroupMismatch(_))));
    }

    #[test]
    fn group_axioms_exhaustive_small_orders() {
        // Exhaustive associativity/commutativity/inverse check for |G| <= 64.
        for spec in [z(&[2]), z(&[3]), z(&[2, 2]), z(&[2, 3]), z(&[4, 9]), z(&[2, 2, 2, 2, 2, 2])] {
            assert!(spec.order() <= 64);
            let elems: Vec<_> = spec.elements().collect();
            for a in &elems {
                let na = spec.neg(a).unwrap();
                assert_eq!(spec.add(a, &na).unwrap(), spec.zero());
                for b in &elems {
                    assert_eq!(spec.add(a, b).unwrap(), spec.add(b, a).unwrap());
                    for c in &elems {
                        let lhs = spec.add(&spec.add(a, b).unwrap(), c).unwrap();
                        let rhs = spec.add(a, &spec.add(b, c).unwrap()).unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn display_and_parse() {
        let g = z(&[2, 2]);
        assert_eq!(g.to_string(), "Z2xZ2");
        assert_eq!("Z2xZ2".parse::<GroupSpec>().unwrap(), g);
        assert_eq!("Z6".parse::<GroupSpec>().unwrap(), z(&[6]));
        assert!("Q8".parse::<GroupSpec>().is_err());
        assert!("Z1".parse::<GroupSpec>().is_err());
    }

    #[test]
    fn index_ops_agree_with_element_ops() {
        for spec in [z(&[2]), z(&[3, 4]), z(&[2, 3, 5])] {
            let ops = GroupOps::new(&spec).unwrap();
            let order = spec.order();
            for a in 0..order {
                let ea = spec.index_element(a).unwrap();
                let eneg = spec.neg(&ea).unwrap();
                assert_eq!(
                    ops.neg_idx(a as u16) as u64,
                    spec.element_index(&eneg).unwrap()
                );
                for b in 0..order {
                    let eb = spec.index_element(b).unwrap();
                    let esum = spec.add(&ea, &eb).unwrap();
                    assert_eq!(
                        ops.add_idx(a as u16, b as u16) as u64,
                        spec.element_index(&esum).unwrap()
                    );
                }
            }
        }
    }
}

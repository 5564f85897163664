//! Evaluation of block-additive sequences: per-index, streaming prefixes, and
//! d-dimensional grids.
//!
//! The n-th term is the sum of the weights of the sliding length-`L` windows
//! over the base-k digit columns of `n`, padded with zeros. Since the weight
//! of the all-zero window is the identity, the infinite sum truncates at the
//! most significant nonzero column.

use crate::error::{Error, Result};
use crate::group::{GroupElement, GroupOps, GroupSpec};
use crate::guard;
use crate::weights::WeightFunction;

/// A block-additive sequence, fully determined by its weight function.
#[derive(Debug, Clone)]
pub struct SequenceSpec {
    weight: WeightFunction,
    ops: GroupOps,
}

impl SequenceSpec {
    pub fn new(weight: WeightFunction) -> Self {
        let ops = weight.ops();
        Self { weight, ops }
    }

    pub fn weight(&self) -> &WeightFunction {
        &self.weight
    }

    pub fn group(&self) -> &GroupSpec {
        self.weight.group()
    }

    pub(crate) fn ops(&self) -> &GroupOps {
        &self.ops
    }

    fn require_dim(&self, dim: u32) -> Result<()> {
        if self.weight.dim() != dim {
            return Err(Error::DimensionMismatch { expected: self.weight.dim(), found: dim });
        }
        Ok(())
    }

    /// Canonical index of `u_n` for a one-dimensional spec.
    pub fn eval_index(&self, n: u64) -> Result<u16> {
        self.require_dim(1)?;
        Ok(self.eval_point_index(&[n]))
    }

    /// `u_n` for a one-dimensional spec.
    pub fn eval(&self, n: u64) -> Result<GroupElement> {
        let idx = self.eval_index(n)?;
        self.group().index_element(idx as u64)
    }

    /// Canonical index of `u_n` for a d-dimensional point (`n.len() == d`).
    pub fn eval_vec_index(&self, n: &[u64]) -> Result<u16> {
        self.require_dim(n.len() as u32)?;
        Ok(self.eval_point_index(n))
    }

    /// `u_n` for a d-dimensional point.
    pub fn eval_vec(&self, n: &[u64]) -> Result<GroupElement> {
        let idx = self.eval_vec_index(n)?;
        self.group().index_element(idx as u64)
    }

    fn eval_point_index(&self, n: &[u64]) -> u16 {
        let k = self.weight.base() as u64;
        let rank = self.weight.rank() as usize;
        let windows = self.weight.window_count();
        // Column addresses of the digit columns, first coordinate least
        // significant; columns beyond every component length are zero.
        let mut cols: Vec<u64> = Vec::new();
        for (t, &component) in n.iter().enumerate() {
            let mut place = 1u64;
            for _ in 0..t {
                place *= k;
            }
            let mut rest = component;
            let mut i = 0usize;
            while rest > 0 {
                if i == cols.len() {
                    cols.push(0);
                }
                cols[i] += (rest % k) * place;
                rest /= k;
                i += 1;
            }
        }
        let len = cols.len();
        cols.resize(len + rank, 0);
        let mut acc: u16 = 0;
        for start in 0..len {
            let mut flat = 0u64;
            for s in 0..rank {
                flat = flat * windows + cols[start + s];
            }
            acc = self.ops.add_idx(acc, self.weight.table()[flat as usize]);
        }
        acc
    }

    /// Streaming evaluator starting at index `start` (one-dimensional).
    pub fn stream(&self, start: u64) -> Result<PrefixStream<'_>> {
        self.require_dim(1)?;
        Ok(PrefixStream::new(self, start))
    }

    /// Indices of the first `count` terms, computed incrementally in O(count).
    pub fn prefix_indices(&self, count: u64) -> Result<Vec<u16>> {
        self.require_dim(1)?;
        guard::check_sweep(count)?;
        Ok(self.stream(0)?.take(count as usize).collect())
    }

    /// The first `count` terms as group elements.
    pub fn prefix(&self, count: u64) -> Result<Vec<GroupElement>> {
        let group = self.group();
        self.prefix_indices(count)?
            .into_iter()
            .map(|i| group.index_element(i as u64))
            .collect()
    }

    /// Dense evaluation over the box `[0, extent_1) x ... x [0, extent_d)`.
    pub fn grid(&self, extent: &[u64]) -> Result<Grid> {
        self.require_dim(extent.len() as u32)?;
        if extent.iter().any(|&e| e == 0) {
            return Err(Error::EmptyRange);
        }
        let cells = extent
            .iter()
            .try_fold(1u64, |acc, &e| acc.checked_mul(e))
            .ok_or(Error::WidthOverflow)?;
        guard::check_sweep(cells)?;
        let mut values = Vec::with_capacity(cells as usize);
        let mut point = vec![0u64; extent.len()];
        loop {
            values.push(self.eval_point_index(&point));
            // Odometer, first coordinate fastest.
            let mut t = 0;
            loop {
                if t == extent.len() {
                    return Ok(Grid {
                        extent: extent.to_vec(),
                        group: self.group().clone(),
                        values,
                    });
                }
                point[t] += 1;
                if point[t] < extent[t] {
                    break;
                }
                point[t] = 0;
                t += 1;
            }
        }
    }
}

/// Dense array of term indices over a box, first coordinate fastest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grid {
    extent: Vec<u64>,
    group: GroupSpec,
    values: Vec<u16>,
}

impl Grid {
    pub fn extent(&self) -> &[u64] {
        &self.extent
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn values(&self) -> &[u16] {
        &self.values
    }

    /// Term index at a point of the box.
    pub fn at(&self, point: &[u64]) -> u16 {
        assert_eq!(point.len(), self.extent.len());
        let mut idx = 0u64;
        let mut place = 1u64;
        for (t, &coord) in point.iter().enumerate() {
            assert!(coord < self.extent[t], "point outside the grid");
            idx += coord * place;
            place *= self.extent[t];
        }
        self.values[idx as usize]
    }

    /// Term at a point, as a group element.
    pub fn element_at(&self, point: &[u64]) -> GroupElement {
        self.group
            .index_element(self.at(point) as u64)
            .expect("grid entries are valid element indices")
    }
}

/// Incremental evaluator for one-dimensional specs.
///
/// Keeps the digit counter of the current index and the current term value;
/// stepping updates only the windows that touch carried digit positions, so a
/// full prefix costs O(count) table lookups instead of O(count log count).
#[derive(Debug, Clone)]
pub struct PrefixStream<'a> {
    spec: &'a SequenceSpec,
    /// Digit buffer, LSB first, zero-padded beyond `len`.
    digits: Vec<u32>,
    len: usize,
    value: u16,
}

impl<'a> PrefixStream<'a> {
    fn new(spec: &'a SequenceSpec, start: u64) -> Self {
        let k = spec.weight.base() as u64;
        let rank = spec.weight.rank() as usize;
        // 64 digits cover u64::MAX in base 2; room for one carry overflow
        // position plus a full window of padding.
        let mut digits = vec![0u32; 66 + rank];
        let mut len = 0usize;
        let mut rest = start;
        while rest > 0 {
            digits[len] = (rest % k) as u32;
            rest /= k;
            len += 1;
        }
        let mut stream = Self { spec, digits, len, value: 0 };
        let mut acc: u16 = 0;
        for i in 0..len {
            acc = spec.ops.add_idx(acc, stream.window_value(i));
        }
        stream.value = acc;
        stream
    }

    /// Current term index; advanced by [`Iterator::next`].
    pub fn current(&self) -> u16 {
        self.value
    }

    #[inline]
    fn window_value(&self, start: usize) -> u16 {
        let w = &self.spec.weight;
        let windows = w.window_count();
        let rank = w.rank() as usize;
        let mut flat = 0u64;
        for s in 0..rank {
            flat = flat * windows + self.digits[start + s] as u64;
        }
        w.table()[flat as usize]
    }

    fn step(&mut self) {
        let k = self.spec.weight.base() as u32;
        let ops = &self.spec.ops;
        // Position t is the end of the carry run; digits 0..t roll over to 0
        // and digit t increments, so exactly the windows starting at or below
        // t change. Windows past the stored length are all-zero and weigh
        // the identity, so including them is harmless.
        let mut t = 0usize;
        while self.digits[t] == k - 1 {
            t += 1;
        }
        let mut removed: u16 = 0;
        for i in 0..=t {
            removed = ops.add_idx(removed, self.window_value(i));
        }
        for d in self.digits.iter_mut().take(t) {
            *d = 0;
        }
        self.digits[t] += 1;
        if t + 1 > self.len {
            self.len = t + 1;
        }
        let mut added: u16 = 0;
        for i in 0..=t {
            added = ops.add_idx(added, self.window_value(i));
        }
        self.value = ops.add_idx(ops.sub_idx(self.value, removed), added);
    }
}

impl Iterator for PrefixStream<'_> {
    type Item = u16;

    fn next(&mut self) -> Option<u16> {
        let out = self.value;
        self.step();
        Some(out)
    }
}

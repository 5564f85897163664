//! Exact counting of discrete correlations of order 2 (and exploratory order
//! l), fibre equidistribution checks, letter frequencies, and the
//! quantitative lower bounds they certify.
//!
//! All counts index `n` in `[0, N)` and evaluate `u_{n+r}` past `N` when
//! needed; there is no wraparound and no truncation. Sweeps fold over the
//! index range with pure per-range counters, so chunked results merge by
//! addition.
//!
//! Bounds compared against floating-point expressions are loosened by one
//! unit in the last place, in the direction that avoids false failures from
//! rounding.

use crate::error::{Error, Result};
use crate::group::{GroupElement, GroupSpec};
use crate::guard;
use crate::radix::{fibre, fibre_ddim, sum_of_digits};
use crate::sequence::SequenceSpec;

/// The order-2 difference bound `r k (1 + log_k N) / N`.
pub fn difference_bound(shift: u64, base: u32, len: u64) -> f64 {
    let n = len as f64;
    shift as f64 * base as f64 * (1.0 + n.log(base as f64)) / n
}

/// Exact counts of `u_{n+r} - u_n = g` over `n < N`.
#[derive(Debug, Clone, PartialEq)]
pub struct DiffReport {
    pub shift: u64,
    pub len: u64,
    pub base: u32,
    pub group: GroupSpec,
    /// Counts indexed by canonical element index; sums to `len`.
    pub counts: Vec<u64>,
    /// `r k (1 + log_k N) / N`.
    pub bound: f64,
    /// `max_g |counts[g]/N - 1/|G||`.
    pub max_deviation: f64,
}

impl DiffReport {
    /// Whether every deviation sits within the bound (with 1 ulp of slack).
    pub fn passes(&self) -> bool {
        self.max_deviation <= self.bound.next_up()
    }

    pub fn normalized(&self, index: usize) -> f64 {
        self.counts[index] as f64 / self.len as f64
    }

    pub fn count_of(&self, g: &GroupElement) -> Result<u64> {
        Ok(self.counts[self.group.element_index(g)? as usize])
    }

    /// `(element, count)` pairs in index order.
    pub fn entries(&self) -> impl Iterator<Item = (GroupElement, u64)> + '_ {
        self.group.elements().zip(self.counts.iter().copied())
    }
}

/// Exact counts of ordered pairs `(u_n, u_{n+r}) = (i, j)` over `n < N`.
#[derive(Debug, Clone, PartialEq)]
pub struct PairReport {
    pub shift: u64,
    pub len: u64,
    pub base: u32,
    pub group: GroupSpec,
    /// Counts indexed by `i_index * |G| + j_index`; sums to `len`.
    pub counts: Vec<u64>,
}

impl PairReport {
    pub fn count(&self, i_index: u64, j_index: u64) -> u64 {
        self.counts[(i_index * self.group.order() + j_index) as usize]
    }

    pub fn count_of(&self, i: &GroupElement, j: &GroupElement) -> Result<u64> {
        Ok(self.count(self.group.element_index(i)?, self.group.element_index(j)?))
    }

    pub fn normalized(&self, i_index: u64, j_index: u64) -> f64 {
        self.count(i_index, j_index) as f64 / self.len as f64
    }

    /// Largest `|C(i,j) - 1/|G|^2|` over the matrix.
    pub fn max_deviation_from_uniform(&self) -> f64 {
        let uniform = 1.0 / (self.group.order() as f64).powi(2);
        self.counts
            .iter()
            .map(|&c| (c as f64 / self.len as f64 - uniform).abs())
            .fold(0.0, f64::max)
    }
}

/// An exact ratio of counts; `denominator` is the sweep length.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rational {
    pub numerator: u64,
    pub denominator: u64,
}

impl Rational {
    pub fn value(&self) -> f64 {
        self.numerator as f64 / self.denominator as f64
    }
}

fn check_shift_len(shift: u64, len: u64) -> Result<()> {
    if shift == 0 {
        return Err(Error::ZeroShift);
    }
    if len == 0 {
        return Err(Error::EmptyRange);
    }
    guard::check_sweep(len)?;
    len.checked_add(shift).ok_or(Error::WidthOverflow)?;
    Ok(())
}

/// Counts `u_{n+r} - u_n = g` for `n < len` and compares the deviations
/// against the order-2 difference bound.
pub fn diff_correlation(s: &SequenceSpec, shift: u64, len: u64) -> Result<DiffReport> {
    check_shift_len(shift, len)?;
    let ops = s.ops();
    let order = s.group().order() as usize;
    let mut counts = vec![0u64; order];
    let mut low = s.stream(0)?;
    let mut high = s.stream(shift)?;
    for _ in 0..len {
        let a = low.next().expect("stream is infinite");
        let b = high.next().expect("stream is infinite");
        counts[ops.sub_idx(b, a) as usize] += 1;
    }
    let bound = difference_bound(shift, s.weight().base(), len);
    let uniform = 1.0 / order as f64;
    let max_deviation = counts
        .iter()
        .map(|&c| (c as f64 / len as f64 - uniform).abs())
        .fold(0.0, f64::max);
    Ok(DiffReport {
        shift,
        len,
        base: s.weight().base(),
        group: s.group().clone(),
        counts,
        bound,
        max_deviation,
    })
}

/// Counts ordered pairs `(u_n, u_{n+r})` for `n < len`.
pub fn pair_correlation(s: &SequenceSpec, shift: u64, len: u64) -> Result<PairReport> {
    check_shift_len(shift, len)?;
    let order = s.group().order() as usize;
    let mut counts = vec![0u64; order * order];
    let mut low = s.stream(0)?;
    let mut high = s.stream(shift)?;
    for _ in 0..len {
        let a = low.next().expect("stream is infinite") as usize;
        let b = high.next().expect("stream is infinite") as usize;
        counts[a * order + b] += 1;
    }
    Ok(PairReport {
        shift,
        len,
        base: s.weight().base(),
        group: s.group().clone(),
        counts,
    })
}

/// The shifted diagonal sum `sum_l C(i-l, j-l)` of a pair report, as an
/// exact ratio. Summing over a transversal of the diagonals gives exactly 1.
pub fn shifted_diagonal_sum(
    report: &PairReport,
    i: &GroupElement,
    j: &GroupElement,
) -> Result<Rational> {
    let group = &report.group;
    let mut numerator = 0u64;
    for ell in group.elements() {
        let a = group.sub(i, &ell)?;
        let b = group.sub(j, &ell)?;
        numerator += report.count_of(&a, &b)?;
    }
    Ok(Rational { numerator, denominator: report.len })
}

/// Lower bound for shifted diagonal sums of difference-matrix sequences:
/// `1/|G| - pi r k (1 + log_k N) / N`. `None` when the group order does not
/// divide the base.
pub fn diagonal_lower_bound(report: &PairReport) -> Option<f64> {
    let order = report.group.order();
    let pi = report.base as u64 / order;
    (report.base as u64 % order == 0).then(|| {
        1.0 / order as f64 - pi as f64 * difference_bound(report.shift, report.base, report.len)
    })
}

/// Distribution of `u_{m+r} - u_m` over a fibre.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FibreDistribution {
    pub group: GroupSpec,
    /// Counts indexed by canonical element index; sums to `k^d`.
    pub counts: Vec<u64>,
    /// Expected exact count `k^d / |G|`, when the order divides `k^d`.
    pub pi: Option<u64>,
}

impl FibreDistribution {
    /// Whether every element is hit exactly `pi` times.
    pub fn is_equidistributed(&self) -> bool {
        match self.pi {
            Some(pi) => self.counts.iter().all(|&c| c == pi),
            None => false,
        }
    }
}

/// Distribution of the order-2 difference over the fibre of `n` (d = 1).
pub fn fibre_equidistribution_check(
    s: &SequenceSpec,
    n: u64,
    shift: u64,
) -> Result<FibreDistribution> {
    if shift == 0 {
        return Err(Error::ZeroShift);
    }
    let ops = s.ops();
    let order = s.group().order();
    let mut counts = vec![0u64; order as usize];
    let f = fibre(n, shift, s.weight().base());
    for &m in &f.members {
        let a = s.eval_index(m)?;
        let b = s.eval_index(m + shift)?;
        counts[ops.sub_idx(b, a) as usize] += 1;
    }
    let windows = s.weight().window_count();
    Ok(FibreDistribution {
        group: s.group().clone(),
        counts,
        pi: (windows % order == 0).then(|| windows / order),
    })
}

/// Distribution of the order-2 difference over a d-dimensional fibre.
pub fn fibre_equidistribution_check_ddim(
    s: &SequenceSpec,
    n: &[u64],
    shift: &[u64],
) -> Result<FibreDistribution> {
    if shift.iter().all(|&r| r == 0) {
        return Err(Error::ZeroShiftVector);
    }
    if n.len() != shift.len() || n.len() != s.weight().dim() as usize {
        return Err(Error::DimensionMismatch {
            expected: s.weight().dim(),
            found: n.len() as u32,
        });
    }
    let ops = s.ops();
    let order = s.group().order();
    let mut counts = vec![0u64; order as usize];
    let f = fibre_ddim(n, shift, s.weight().base());
    for m in &f.members {
        let shifted: Vec<u64> = m
            .iter()
            .zip(shift)
            .map(|(&mt, &rt)| mt.checked_add(rt).expect("member + shift within width"))
            .collect();
        let a = s.eval_vec_index(m)?;
        let b = s.eval_vec_index(&shifted)?;
        counts[ops.sub_idx(b, a) as usize] += 1;
    }
    let windows = s.weight().window_count();
    Ok(FibreDistribution {
        group: s.group().clone(),
        counts,
        pi: (windows % order == 0).then(|| windows / order),
    })
}

/// Counts of `u_n = g` for `n < len`.
pub fn letter_frequencies(s: &SequenceSpec, len: u64) -> Result<Vec<u64>> {
    if len == 0 {
        return Err(Error::EmptyRange);
    }
    guard::check_sweep(len)?;
    let mut counts = vec![0u64; s.group().order() as usize];
    for idx in s.stream(0)?.take(len as usize) {
        counts[idx as usize] += 1;
    }
    Ok(counts)
}

/// Guard on the tuple space of [`order_l_correlation`].
pub const TUPLE_GUARD: u64 = 1_000_000;

/// Exact counts of value tuples `(u_n, u_{n+r_1}, ..., u_{n+r_{l-1}})`.
/// Exploratory: no limit theorem is certified for `l >= 3`.
#[derive(Debug, Clone, PartialEq)]
pub struct OrderLReport {
    pub shifts: Vec<u64>,
    pub len: u64,
    pub group: GroupSpec,
    /// Counts indexed mixed-radix by tuple, first component least
    /// significant; sums to `len`.
    pub counts: Vec<u64>,
}

impl OrderLReport {
    /// Tuple length `l`.
    pub fn order(&self) -> usize {
        self.shifts.len() + 1
    }

    /// Flat index of a tuple of canonical element indices.
    pub fn tuple_index(&self, tuple: &[u64]) -> usize {
        assert_eq!(tuple.len(), self.order());
        let order = self.group.order();
        tuple.iter().rev().fold(0u64, |acc, &t| acc * order + t) as usize
    }

    /// Inverse of [`OrderLReport::tuple_index`].
    pub fn tuple_of(&self, mut flat: u64) -> Vec<u64> {
        let order = self.group.order();
        (0..self.order())
            .map(|_| {
                let t = flat % order;
                flat /= order;
                t
            })
            .collect()
    }

    pub fn count(&self, tuple: &[GroupElement]) -> Result<u64> {
        let indices = tuple
            .iter()
            .map(|g| self.group.element_index(g))
            .collect::<Result<Vec<u64>>>()?;
        Ok(self.counts[self.tuple_index(&indices)])
    }

    /// Largest `|count/N - 1/|G|^l|` over all tuples.
    pub fn max_deviation_from_uniform(&self) -> f64 {
        let uniform = 1.0 / (self.group.order() as f64).powi(self.order() as i32);
        self.counts
            .iter()
            .map(|&c| (c as f64 / self.len as f64 - uniform).abs())
            .fold(0.0, f64::max)
    }
}

/// Counts value tuples along strictly increasing positive shifts.
pub fn order_l_correlation(
    s: &SequenceSpec,
    shifts: &[u64],
    len: u64,
) -> Result<OrderLReport> {
    if shifts.is_empty() || shifts[0] == 0 || shifts.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::ShiftOrder);
    }
    check_shift_len(*shifts.last().expect("nonempty"), len)?;
    let order = s.group().order();
    let tuple_len = shifts.len() + 1;
    let size = (0..tuple_len).try_fold(1u64, |acc, _| {
        acc.checked_mul(order).filter(|&v| v <= TUPLE_GUARD)
    });
    let Some(size) = size else {
        return Err(Error::TupleGuard {
            size: (order as u128).pow(tuple_len as u32).min(u64::MAX as u128) as u64,
            guard: TUPLE_GUARD,
        });
    };
    let mut counts = vec![0u64; size as usize];
    let mut streams = Vec::with_capacity(tuple_len);
    streams.push(s.stream(0)?);
    for &r in shifts {
        streams.push(s.stream(r)?);
    }
    // Tuple index accumulates most significant component last, so walk the
    // streams in reverse.
    for _ in 0..len {
        let mut flat = 0u64;
        for stream in streams.iter_mut().rev() {
            let v = stream.next().expect("stream is infinite");
            flat = flat * order + v as u64;
        }
        counts[flat as usize] += 1;
    }
    Ok(OrderLReport { shifts: shifts.to_vec(), len, group: s.group().clone(), counts })
}

/// Certified per-element lower bounds on difference counts.
#[derive(Debug, Clone, PartialEq)]
pub struct LowerBoundReport {
    pub shift: u64,
    pub len: u64,
    pub base: u32,
    pub group: GroupSpec,
    pub counts: Vec<u64>,
    /// `N/|G| - pi r k (1 + log_k N)`, in floating point.
    pub log_bound: f64,
    /// Numerator of the sharper bound `pi N - pi r k^2 - pi r k sigma_k(N)`
    /// over the denominator `k`, kept exact.
    pub sharp_numerator: i128,
    /// `sigma_k(N)`.
    pub digit_sum: u64,
}

impl LowerBoundReport {
    /// Derives the bounds from an existing difference sweep.
    pub fn from_diff(report: &DiffReport) -> Result<Self> {
        let order = report.group.order();
        let k = report.base as u64;
        if k % order != 0 {
            return Err(Error::DivisibilityRequired { base: k, order });
        }
        let pi = k / order;
        let digit_sum = sum_of_digits(report.len, report.base);
        let log_bound = report.len as f64 / order as f64
            - pi as f64 * report.shift as f64 * k as f64
                * (1.0 + (report.len as f64).log(k as f64));
        let pi = pi as i128;
        let (r, k, n, sigma) =
            (report.shift as i128, k as i128, report.len as i128, digit_sum as i128);
        let sharp_numerator = pi * n - pi * r * k * k - pi * r * k * sigma;
        Ok(Self {
            shift: report.shift,
            len: report.len,
            base: report.base,
            group: report.group.clone(),
            counts: report.counts.clone(),
            log_bound,
            sharp_numerator,
            digit_sum,
        })
    }

    /// Log-form bound for one element (1 ulp of slack toward acceptance).
    pub fn holds_log(&self, index: usize) -> bool {
        self.counts[index] as f64 >= self.log_bound.next_down()
    }

    /// Sharp-form bound for one element, exact integer comparison.
    pub fn holds_sharp(&self, index: usize) -> bool {
        self.counts[index] as i128 * self.base as i128 >= self.sharp_numerator
    }

    /// Errors with the first violating element, if any.
    pub fn validate(&self) -> Result<()> {
        for index in 0..self.counts.len() {
            if !self.holds_log(index) || !self.holds_sharp(index) {
                return Err(Error::LowerBoundViolated {
                    element: index as u64,
                    count: self.counts[index],
                    bound: self.log_bound,
                    shift: self.shift,
                    len: self.len,
                });
            }
        }
        Ok(())
    }
}

/// Runs a difference sweep and asserts both lower-bound forms for every
/// element; the error carries the violating element, shift, and length.
pub fn lower_bound_fibres(s: &SequenceSpec, shift: u64, len: u64) -> Result<LowerBoundReport> {
    let diff = diff_correlation(s, shift, len)?;
    let report = LowerBoundReport::from_diff(&diff)?;
    report.validate()?;
    Ok(report)
}

/// Difference counts over a d-dimensional box `n < extent`.
#[derive(Debug, Clone, PartialEq)]
pub struct BoxDiffReport {
    pub shift: Vec<u64>,
    pub extent: Vec<u64>,
    pub group: GroupSpec,
    /// Counts indexed by canonical element index; sums to the box volume.
    pub counts: Vec<u64>,
}

impl BoxDiffReport {
    pub fn cells(&self) -> u64 {
        self.extent.iter().product()
    }

    pub fn normalized(&self, index: usize) -> f64 {
        self.counts[index] as f64 / self.cells() as f64
    }

    /// Largest `|count/volume - 1/|G||`.
    pub fn max_deviation(&self) -> f64 {
        let uniform = 1.0 / self.group.order() as f64;
        let cells = self.cells() as f64;
        self.counts.iter().map(|&c| (c as f64 / cells - uniform).abs()).fold(0.0, f64::max)
    }
}

/// Ordered-pair counts over a d-dimensional box.
#[derive(Debug, Clone, PartialEq)]
pub struct BoxPairReport {
    pub shift: Vec<u64>,
    pub extent: Vec<u64>,
    pub group: GroupSpec,
    /// Counts indexed by `i_index * |G| + j_index`.
    pub counts: Vec<u64>,
}

impl BoxPairReport {
    pub fn cells(&self) -> u64 {
        self.extent.iter().product()
    }

    pub fn count(&self, i_index: u64, j_index: u64) -> u64 {
        self.counts[(i_index * self.group.order() + j_index) as usize]
    }

    pub fn normalized(&self, i_index: u64, j_index: u64) -> f64 {
        self.count(i_index, j_index) as f64 / self.cells() as f64
    }

    /// Largest `|C(i,j) - 1/|G|^2|`.
    pub fn max_deviation_from_uniform(&self) -> f64 {
        let uniform = 1.0 / (self.group.order() as f64).powi(2);
        let cells = self.cells() as f64;
        self.counts.iter().map(|&c| (c as f64 / cells - uniform).abs()).fold(0.0, f64::max)
    }
}

fn box_sweep(
    s: &SequenceSpec,
    shift: &[u64],
    extent: &[u64],
    mut visit: impl FnMut(u16, u16),
) -> Result<()> {
    let d = s.weight().dim() as usize;
    if shift.len() != d || extent.len() != d {
        return Err(Error::DimensionMismatch {
            expected: s.weight().dim(),
            found: shift.len().max(extent.len()) as u32,
        });
    }
    if shift.iter().all(|&r| r == 0) {
        return Err(Error::ZeroShiftVector);
    }
    if extent.iter().any(|&e| e == 0) {
        return Err(Error::EmptyRange);
    }
    let cells = extent
        .iter()
        .try_fold(1u64, |acc, &e| acc.checked_mul(e))
        .ok_or(Error::WidthOverflow)?;
    guard::check_sweep(cells)?;
    let mut point = vec![0u64; d];
    let mut shifted = vec![0u64; d];
    loop {
        for t in 0..d {
            shifted[t] = point[t].checked_add(shift[t]).ok_or(Error::WidthOverflow)?;
        }
        visit(s.eval_vec_index(&point)?, s.eval_vec_index(&shifted)?);
        let mut t = 0;
        loop {
            if t == d {
                return Ok(());
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

/// Difference counts over the box `n < extent` with a vector shift.
pub fn ddim_diff_correlation(
    s: &SequenceSpec,
    shift: &[u64],
    extent: &[u64],
) -> Result<BoxDiffReport> {
    let ops = s.ops();
    let mut counts = vec![0u64; s.group().order() as usize];
    box_sweep(s, shift, extent, |a, b| counts[ops.sub_idx(b, a) as usize] += 1)?;
    Ok(BoxDiffReport {
        shift: shift.to_vec(),
        extent: extent.to_vec(),
        group: s.group().clone(),
        counts,
    })
}

/// Ordered-pair counts over the box `n < extent` with a vector shift.
pub fn ddim_pair_correlation(
    s: &SequenceSpec,
    shift: &[u64],
    extent: &[u64],
) -> Result<BoxPairReport> {
    let order = s.group().order() as usize;
    let mut counts = vec![0u64; order * order];
    box_sweep(s, shift, extent, |a, b| counts[a as usize * order + b as usize] += 1)?;
    Ok(BoxPairReport {
        shift: shift.to_vec(),
        extent: extent.to_vec(),
        group: s.group().clone(),
        counts,
    })
}

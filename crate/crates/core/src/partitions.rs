//! Partition classes and brute-force hook statistics.
//!
//! This module is the ground truth of the crate: everything the series and
//! constants modules compute is ultimately checked against direct enumeration
//! of Ferrers–Young diagrams done here.
//!
//! Conventions: a partition is a non-increasing sequence of positive parts;
//! the cell in row `i`, column `j` (1-based) of the diagram has
//! `arm = λ_i − j`, `leg = λ′_j − i` and `hook = arm + leg + 1`.

use std::collections::BTreeMap;
use std::fmt;

/// An integer partition: a non-increasing sequence of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

/// Per-cell diagram statistics, 1-based row/column.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CellStats {
    pub row: usize,
    pub col: usize,
    /// Cells strictly to the right in the same row.
    pub arm: usize,
    /// Cells strictly below in the same column.
    pub leg: usize,
    /// Cells strictly to the left: `col − 1`.
    pub coarm: usize,
    /// Cells strictly above: `row − 1`.
    pub coleg: usize,
    /// `arm + leg + 1`.
    pub hook: usize,
}

/// The partition families this crate enumerates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartitionClass {
    /// Fixed points of diagram transposition.
    SelfConjugate,
    /// All parts odd and pairwise distinct.
    DistinctOdd,
    /// Every partition of `n`.
    All,
}

impl Partition {
    /// Creates a partition from `parts`.
    ///
    /// # Panics
    /// Panics if `parts` is not non-increasing or contains a zero part.
    pub fn new(parts: Vec<usize>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "parts must be non-increasing: {parts:?}"
        );
        assert!(
            parts.last().is_none_or(|&p| p >= 1),
            "parts must be positive: {parts:?}"
        );
        Partition { parts }
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The parts, largest first.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The partitioned integer: the sum of all parts.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts (rows of the diagram).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// `true` for the empty partition.
    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The conjugate partition: the transpose of the diagram.
    pub fn conjugate(&self) -> Partition {
        let Some(&width) = self.parts.first() else {
            return Partition::empty();
        };
        let mut conj = vec![0usize; width];
        for &p in &self.parts {
            for c in conj.iter_mut().take(p) {
                *c += 1;
            }
        }
        Partition { parts: conj }
    }

    /// `true` if the partition equals its conjugate.
    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    /// `true` if all parts are odd and pairwise distinct.
    pub fn has_distinct_odd_parts(&self) -> bool {
        self.parts.iter().all(|&p| p % 2 == 1)
            && self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// Arm/leg/hook statistics for every cell, row-major.
    pub fn cell_stats(&self) -> Vec<CellStats> {
        let conj = self.conjugate();
        let mut cells = Vec::with_capacity(self.size());
        for (i, &p) in self.parts.iter().enumerate() {
            for j in 0..p {
                let arm = p - j - 1;
                let leg = conj.parts[j] - i - 1;
                cells.push(CellStats {
                    row: i + 1,
                    col: j + 1,
                    arm,
                    leg,
                    coarm: j,
                    coleg: i,
                    hook: arm + leg + 1,
                });
            }
        }
        cells
    }

    /// `n_t(λ)`: the number of cells whose hook number equals `t`.
    ///
    /// # Panics
    /// Panics if `t = 0` (hook numbers are positive).
    pub fn count_hooks(&self, t: usize) -> usize {
        assert!(t >= 1, "hook numbers are positive");
        let conj = self.conjugate();
        let mut count = 0;
        for (i, &p) in self.parts.iter().enumerate() {
            for j in 0..p {
                if p - j + conj.parts[j] - i - 1 == t {
                    count += 1;
                }
            }
        }
        count
    }

    /// All hook numbers with multiplicities, keyed by hook length.
    pub fn hook_tally(&self) -> BTreeMap<usize, usize> {
        let mut tally = BTreeMap::new();
        for cell in self.cell_stats() {
            *tally.entry(cell.hook).or_insert(0) += 1;
        }
        tally
    }

    /// The hook numbers of the diagonal cells `(i, i)`, largest first.
    ///
    /// For a self-conjugate partition these are distinct odd numbers; the map
    /// is the classical bijection from self-conjugate partitions of `n` onto
    /// partitions of `n` into distinct odd parts.
    pub fn principal_hooks(&self) -> Partition {
        let conj = self.conjugate();
        let mut hooks = Vec::new();
        for (i, &p) in self.parts.iter().enumerate() {
            if p <= i {
                break;
            }
            hooks.push(p - i + conj.parts[i] - i - 1);
        }
        Partition::new(hooks)
    }

    /// Rebuilds the self-conjugate partition with the given principal hooks.
    ///
    /// Inverse of [`Partition::principal_hooks`] on self-conjugate
    /// partitions: hook `μ_i` becomes the L-shaped strip of arm and leg
    /// `(μ_i − 1)/2` around the diagonal cell `(i, i)`.
    ///
    /// # Panics
    /// Panics unless `hooks` has distinct odd parts.
    pub fn from_principal_hooks(hooks: &Partition) -> Partition {
        assert!(
            hooks.has_distinct_odd_parts(),
            "principal hooks must be distinct odd numbers"
        );
        if hooks.is_empty() {
            return Partition::empty();
        }
        let arms: Vec<usize> = hooks.parts.iter().map(|&p| (p - 1) / 2).collect();
        let mut parts = vec![0usize; arms[0] + 1];
        for (i, &a) in arms.iter().enumerate() {
            parts[i] = a + i + 1;
            for r in parts.iter_mut().take(i + a + 1).skip(i + 1) {
                *r = (*r).max(i + 1);
            }
        }
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    /// Parts separated by `+`, e.g. `4+2+1+1`; the empty partition is `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, "+")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

/// Calls `f` with every partition of `n`, parts as a non-increasing slice,
/// in lexicographically decreasing order.
pub fn for_each_partition(n: usize, mut f: impl FnMut(&[usize])) {
    fn go(remaining: usize, cap: usize, stack: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if remaining == 0 {
            f(stack);
            return;
        }
        let mut p = cap.min(remaining);
        while p >= 1 {
            stack.push(p);
            go(remaining - p, p, stack, f);
            stack.pop();
            p -= 1;
        }
    }
    let mut stack = Vec::new();
    go(n, n, &mut stack, &mut f);
}

/// Calls `f` with every partition of `n` into distinct odd parts, in
/// lexicographically decreasing order.
pub fn for_each_distinct_odd(n: usize, mut f: impl FnMut(&[usize])) {
    fn go(remaining: usize, cap: usize, stack: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if remaining == 0 {
            f(stack);
            return;
        }
        let mut p = cap.min(remaining);
        if p == 0 {
            return;
        }
        if p.is_multiple_of(2) {
            p -= 1;
        }
        loop {
            stack.push(p);
            go(remaining - p, p.saturating_sub(2), stack, f);
            stack.pop();
            if p < 3 {
                break;
            }
            p -= 2;
        }
    }
    let mut stack = Vec::new();
    go(n, n, &mut stack, &mut f);
}

/// All partitions of `n` in the given class, in lexicographically decreasing
/// part order (deterministic canonical ordering).
///
/// `n = 0` yields exactly the empty partition for every class. Self-conjugate
/// partitions are built through the principal-hook correspondence from the
/// distinct-odd enumeration; the test suite independently cross-checks this
/// against conjugate-filtering of all partitions.
pub fn enumerate(class: PartitionClass, n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    match class {
        PartitionClass::All => {
            for_each_partition(n, |parts| out.push(Partition::new(parts.to_vec())));
        }
        PartitionClass::DistinctOdd => {
            for_each_distinct_odd(n, |parts| out.push(Partition::new(parts.to_vec())));
        }
        PartitionClass::SelfConjugate => {
            for_each_distinct_odd(n, |parts| {
                let hooks = Partition::new(parts.to_vec());
                out.push(Partition::from_principal_hooks(&hooks));
            });
        }
    }
    out.sort_by(|a, b| b.parts.cmp(&a.parts));
    out
}

/// `a*_t(n)`: the total number of t-hooks over all self-conjugate partitions
/// of `n`, by direct enumeration.
pub fn a_star_brute(t: usize, n: usize) -> u64 {
    assert!(t >= 1);
    enumerate(PartitionClass::SelfConjugate, n)
        .iter()
        .map(|p| p.count_hooks(t) as u64)
        .sum()
}

/// `b*_t(n)`: the total number of t-hooks over all partitions of `n` into
/// distinct odd parts, by direct enumeration.
pub fn b_star_brute(t: usize, n: usize) -> u64 {
    assert!(t >= 1);
    enumerate(PartitionClass::DistinctOdd, n)
        .iter()
        .map(|p| p.count_hooks(t) as u64)
        .sum()
}

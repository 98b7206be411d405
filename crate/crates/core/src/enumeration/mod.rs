//! Every semigroup of a small order, up to isomorphism.
//!
//! Tables are filled cell by cell in row-major order. Each assignment checks
//! exactly the associativity equations it completes, so dead branches are cut
//! as soon as they are determined. Isomorphism classes are identified by the
//! canonical form: the lexicographically least table over all relabellings.
//! Anti-isomorphic tables are kept apart.

pub(crate) mod theorems;

use std::collections::HashSet;
use std::str::FromStr;

use crate::{Error, FiniteSemigroup, Result};

pub use theorems::{exhaustive_check, Theorem};

/// Orders above this need [`EnumerationTask::allow_long`].
pub const QUICK_MAX_ORDER: usize = 4;
pub const MAX_ORDER: usize = 5;

const UNKNOWN: u8 = u8::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ClassFilter {
    #[default]
    Any,
    Band,
    Inverse,
    Clifford,
    CompletelyRegular,
    CompletelySimple,
}

impl ClassFilter {
    pub fn accepts(self, s: &FiniteSemigroup) -> bool {
        match self {
            ClassFilter::Any => true,
            ClassFilter::Band => s.is_band(),
            ClassFilter::Inverse => s.is_inverse_semigroup(),
            ClassFilter::Clifford => s.is_clifford(),
            ClassFilter::CompletelyRegular => s.is_completely_regular(),
            ClassFilter::CompletelySimple => s.is_completely_simple(),
        }
    }
}

impl FromStr for ClassFilter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "any" => ClassFilter::Any,
            "band" => ClassFilter::Band,
            "inverse" => ClassFilter::Inverse,
            "clifford" => ClassFilter::Clifford,
            "completely-regular" | "cr" => ClassFilter::CompletelyRegular,
            "completely-simple" | "cs" => ClassFilter::CompletelySimple,
            other => return Err(Error::BadParams(format!("unknown class {other:?}"))),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationTask {
    pub order: usize,
    pub class: ClassFilter,
    /// Keep only non-commutative semigroups.
    pub non_commutative: bool,
    /// One representative per isomorphism class (its canonical table).
    pub dedup: bool,
    /// Permit order 5, which takes noticeably longer.
    pub allow_long: bool,
}

impl EnumerationTask {
    pub fn new(order: usize) -> Self {
        EnumerationTask {
            order,
            class: ClassFilter::Any,
            non_commutative: false,
            dedup: true,
            allow_long: false,
        }
    }

    pub fn class(mut self, class: ClassFilter) -> Self {
        self.class = class;
        self
    }

    pub fn non_commutative(mut self) -> Self {
        self.non_commutative = true;
        self
    }

    fn validate(&self) -> Result<()> {
        let limit = if self.allow_long {
            MAX_ORDER
        } else {
            QUICK_MAX_ORDER
        };
        if self.order == 0 || self.order > limit {
            return Err(Error::OrderUnsupported(self.order));
        }
        Ok(())
    }
}

/// Calls `visit` on every semigroup selected by `task` and returns how many
/// were visited. Visiting order is deterministic.
pub fn enumerate<F: FnMut(&FiniteSemigroup)>(
    task: &EnumerationTask,
    mut visit: F,
) -> Result<usize> {
    task.validate()?;
    let n = task.order;
    let perms = permutations(n);
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    let mut count = 0;
    let mut search = Search {
        n,
        table: vec![UNKNOWN; n * n],
    };
    search.run(0, &mut |table: &[u8]| {
        let table = if task.dedup {
            let canon = canonical_with(n, table, &perms);
            if !seen.insert(canon.clone()) {
                return;
            }
            canon
        } else {
            table.to_vec()
        };
        let s = FiniteSemigroup::from_trusted(n, table.iter().map(|&v| v as u32).collect());
        if task.non_commutative && s.is_commutative() {
            return;
        }
        if task.class.accepts(&s) {
            count += 1;
            visit(&s);
        }
    });
    Ok(count)
}

/// Collects the output of [`enumerate`].
pub fn collect(task: &EnumerationTask) -> Result<Vec<FiniteSemigroup>> {
    let mut out = Vec::new();
    enumerate(task, |s| out.push(s.clone()))?;
    Ok(out)
}

struct Search {
    n: usize,
    table: Vec<u8>,
}

impl Search {
    fn get(&self, a: usize, b: usize) -> Option<usize> {
        match self.table[a * self.n + b] {
            UNKNOWN => None,
            v => Some(v as usize),
        }
    }

    /// `false` only when `(xy)z` and `x(yz)` are both known and differ.
    fn consistent(&self, x: usize, y: usize, z: usize) -> bool {
        let lhs = self.get(x, y).and_then(|xy| self.get(xy, z));
        let rhs = self.get(y, z).and_then(|yz| self.get(x, yz));
        match (lhs, rhs) {
            (Some(l), Some(r)) => l == r,
            _ => true,
        }
    }

    /// Checks every equation in which cell `(a, b)` occurs.
    fn consistent_at(&self, a: usize, b: usize) -> bool {
        let n = self.n;
        for z in 0..n {
            // (a·b)·z = a·(b·z) and (x·a)·b = x·(a·b)
            if !self.consistent(a, b, z) || !self.consistent(z, a, b) {
                return false;
            }
        }
        for x in 0..n {
            for y in 0..n {
                // cell (a, b) as (x·y)·b with x·y = a
                if self.get(x, y) == Some(a) && !self.consistent(x, y, b) {
                    return false;
                }
                // cell (a, b) as a·(x·y) with x·y = b
                if self.get(x, y) == Some(b) && !self.consistent(a, x, y) {
                    return false;
                }
            }
        }
        true
    }

    fn run(&mut self, cell: usize, emit: &mut dyn FnMut(&[u8])) {
        if cell == self.table.len() {
            emit(&self.table);
            return;
        }
        let (a, b) = (cell / self.n, cell % self.n);
        for v in 0..self.n {
            self.table[cell] = v as u8;
            if self.consistent_at(a, b) {
                self.run(cell + 1, emit);
            }
        }
        self.table[cell] = UNKNOWN;
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn extend(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                extend(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

fn canonical_with(n: usize, table: &[u8], perms: &[Vec<usize>]) -> Vec<u8> {
    let mut best = table.to_vec();
    let mut inverse = vec![0; n];
    let mut candidate = vec![0u8; n * n];
    for sigma in perms {
        for (x, &y) in sigma.iter().enumerate() {
            inverse[y] = x;
        }
        // relabelled table: entry (i, j) = σ(T[σ⁻¹ i][σ⁻¹ j]); abandon once larger
        let mut smaller = false;
        let mut larger = false;
        for i in 0..n {
            for j in 0..n {
                let v = sigma[table[inverse[i] * n + inverse[j]] as usize] as u8;
                candidate[i * n + j] = v;
                if !smaller {
                    let cur = best[i * n + j];
                    if v > cur {
                        larger = true;
                        break;
                    }
                    if v < cur {
                        smaller = true;
                    }
                }
            }
            if larger {
                break;
            }
        }
        if smaller {
            best.copy_from_slice(&candidate);
        }
    }
    best
}

/// Lexicographically least table isomorphic to `s`.
pub fn canonical_form(s: &FiniteSemigroup) -> Result<FiniteSemigroup> {
    let n = s.order();
    if n > MAX_ORDER {
        return Err(Error::OrderUnsupported(n));
    }
    let table: Vec<u8> = s.table().into_iter().map(|v| v as u8).collect();
    let canon = canonical_with(n, &table, &permutations(n));
    Ok(FiniteSemigroup::from_trusted(
        n,
        canon.into_iter().map(u32::from).collect(),
    ))
}

//! Cayley-table semigroups and the element-level algebra on them.

mod elements;
mod format;
mod structure;

use std::borrow::Cow;
use std::ops::Range;

use crate::{Error, Result};

pub use elements::ElementSet;
pub use format::{
    parse_labels, parse_stream, parse_table, write_labels, write_stream, write_table,
};
pub use structure::{InverseKind, SemilatticeDecomposition, UnaryInverseMap};

/// A finite semigroup on the elements `0..order`, given by its multiplication
/// table. Entry `a * order + b` of the table is the product `a·b`.
///
/// Every value of this type is associative: [`make_semigroup`] checks it with
/// a full triple scan, and the builders in [`crate::constructions`] only
/// produce tables that are associative by construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteSemigroup {
    order: usize,
    table: Vec<u32>,
    name: Option<String>,
    labels: Option<Vec<String>>,
}

/// Validates a flat row-major table and wraps it as a semigroup.
pub fn make_semigroup(order: usize, table: Vec<usize>) -> Result<FiniteSemigroup> {
    if order == 0 {
        return Err(Error::EmptySemigroup);
    }
    if table.len() != order * order {
        return Err(Error::TableLength {
            expected: order * order,
            found: table.len(),
        });
    }
    if let Some(pos) = table.iter().position(|&v| v >= order) {
        return Err(Error::IndexOutOfRange {
            row: pos / order,
            col: pos % order,
            value: table[pos],
            order,
        });
    }
    let table: Vec<u32> = table.into_iter().map(|v| v as u32).collect();
    if let Some((a, b, c)) = first_non_associative(order, &table) {
        return Err(Error::NotAssociative { a, b, c });
    }
    Ok(FiniteSemigroup {
        order,
        table,
        name: None,
        labels: None,
    })
}

/// First triple `(a, b, c)` in lexicographic order with `(ab)c != a(bc)`.
fn first_non_associative(order: usize, table: &[u32]) -> Option<(usize, usize, usize)> {
    for a in 0..order {
        let row_a = &table[a * order..(a + 1) * order];
        for b in 0..order {
            let ab = row_a[b] as usize;
            let row_ab = &table[ab * order..(ab + 1) * order];
            let row_b = &table[b * order..(b + 1) * order];
            for c in 0..order {
                if row_ab[c] != row_a[row_b[c] as usize] {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

impl FiniteSemigroup {
    /// Wraps a table the caller knows to be associative and in range.
    pub(crate) fn from_trusted(order: usize, table: Vec<u32>) -> Self {
        debug_assert!(order > 0 && table.len() == order * order);
        debug_assert!(table.iter().all(|&v| (v as usize) < order));
        FiniteSemigroup {
            order,
            table,
            name: None,
            labels: None,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn elements(&self) -> Range<usize> {
        0..self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    /// Product of a non-empty sequence, left to right.
    pub fn product<I: IntoIterator<Item = usize>>(&self, elems: I) -> Option<usize> {
        elems.into_iter().reduce(|acc, x| self.mul(acc, x))
    }

    /// The row of `a`: the products `a·b` for `b = 0..order`.
    pub fn row(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        self.table[a * self.order..(a + 1) * self.order]
            .iter()
            .map(|&v| v as usize)
    }

    /// The flat table as plain indices.
    pub fn table(&self) -> Vec<usize> {
        self.table.iter().map(|&v| v as usize).collect()
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn set_name(&mut self, name: Option<String>) {
        self.name = name;
    }

    /// Attaches element names. There must be exactly one per element.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.order {
            return Err(Error::BadParams(format!(
                "expected {} labels, got {}",
                self.order,
                labels.len()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of an element, falling back to its index.
    pub fn label(&self, x: usize) -> Cow<'_, str> {
        match &self.labels {
            Some(labels) => Cow::Borrowed(labels[x].as_str()),
            None => Cow::Owned(x.to_string()),
        }
    }

    pub(crate) fn check_element(&self, x: usize) -> Result<()> {
        if x < self.order {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange(x))
        }
    }

    /// Elements commuting with every element.
    pub fn center(&self) -> ElementSet {
        let mut set = ElementSet::empty(self.order);
        for x in self.elements() {
            if self.elements().all(|y| self.mul(x, y) == self.mul(y, x)) {
                set.insert(x);
            }
        }
        set
    }

    pub fn idempotents(&self) -> ElementSet {
        let mut set = ElementSet::empty(self.order);
        for x in self.elements().filter(|&x| self.mul(x, x) == x) {
            set.insert(x);
        }
        set
    }

    pub fn is_commutative(&self) -> bool {
        self.elements()
            .all(|x| (x + 1..self.order).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    pub fn is_band(&self) -> bool {
        self.elements().all(|x| self.mul(x, x) == x)
    }

    /// The two-sided identity, if there is one.
    pub fn identity(&self) -> Option<usize> {
        self.elements().find(|&e| {
            self.elements()
                .all(|x| self.mul(e, x) == x && self.mul(x, e) == x)
        })
    }

    pub fn is_group(&self) -> bool {
        let Some(e) = self.identity() else {
            return false;
        };
        self.elements().all(|x| {
            self.elements()
                .any(|y| self.mul(x, y) == e && self.mul(y, x) == e)
        })
    }

    /// `x^k` for `k >= 1`.
    pub fn power(&self, x: usize, k: usize) -> usize {
        assert!(k >= 1, "power exponent must be positive");
        // square-and-multiply over the monogenic subsemigroup
        let mut result: Option<usize> = None;
        let mut base = x;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = Some(match result {
                    Some(r) => self.mul(r, base),
                    None => base,
                });
            }
            k >>= 1;
            if k > 0 {
                base = self.mul(base, base);
            }
        }
        result.expect("k >= 1")
    }

    /// Index and period of `x`: the least `i, p >= 1` with `x^(i+p) = x^i`.
    pub fn powers(&self, x: usize) -> (usize, usize) {
        let mut seen = vec![0usize; self.order];
        let mut current = x;
        let mut k = 1;
        loop {
            if seen[current] != 0 {
                let index = seen[current];
                return (index, k - index);
            }
            seen[current] = k;
            current = self.mul(current, x);
            k += 1;
        }
    }

    /// Every element is regular: `x y x = x` for some `y`.
    pub fn is_regular(&self) -> bool {
        self.elements().all(|x| self.is_regular_element(x))
    }

    pub fn is_regular_element(&self, x: usize) -> bool {
        self.elements().any(|y| self.mul(self.mul(x, y), x) == x)
    }

    /// All `y` with `x y x = x` and `y x y = y`.
    pub fn inverses_of(&self, x: usize) -> Result<ElementSet> {
        self.check_element(x)?;
        let mut set = ElementSet::empty(self.order);
        for y in self.elements() {
            if self.is_inverse_pair(x, y) {
                set.insert(y);
            }
        }
        Ok(set)
    }

    fn is_inverse_pair(&self, x: usize, y: usize) -> bool {
        let xy = self.mul(x, y);
        self.mul(xy, x) == x && self.mul(self.mul(y, x), y) == y
    }

    fn idempotents_commute(&self) -> bool {
        let idem: Vec<usize> = self.idempotents().iter().collect();
        idem.iter().enumerate().all(|(i, &e)| {
            idem[i + 1..]
                .iter()
                .all(|&f| self.mul(e, f) == self.mul(f, e))
        })
    }

    /// Regular with pairwise commuting idempotents.
    pub fn is_inverse_semigroup(&self) -> bool {
        self.is_regular() && self.idempotents_commute()
    }

    /// Regular with all idempotents central.
    pub fn is_clifford(&self) -> bool {
        if !self.is_regular() {
            return false;
        }
        self.idempotents()
            .iter()
            .all(|e| self.elements().all(|y| self.mul(e, y) == self.mul(y, e)))
    }

    /// Every element lies in a subgroup, i.e. has index 1.
    pub fn is_completely_regular(&self) -> bool {
        self.elements().all(|x| self.powers(x).0 == 1)
    }
}

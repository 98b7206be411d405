use std::collections::HashMap;
use std::collections::VecDeque;

use fixedbitset::FixedBitSet;

use super::{ElementSet, FiniteSemigroup};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InverseKind {
    /// The unique inverse of an inverse semigroup.
    InverseSemigroup,
    /// The group inverse inside the maximal subgroup containing `x`.
    CompletelyRegular,
}

/// A unary operation `x ↦ x⁻¹` on a semigroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnaryInverseMap {
    map: Vec<usize>,
    kind: InverseKind,
}

impl UnaryInverseMap {
    pub fn get(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn kind(&self) -> InverseKind {
        self.kind
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }

    /// Checks the defining identities of the map's kind against `s`.
    pub fn satisfies_axioms(&self, s: &FiniteSemigroup) -> bool {
        s.elements().all(|x| {
            let inv = self.map[x];
            let base = self.map[inv] == x
                && s.mul(s.mul(x, inv), x) == x
                && s.mul(s.mul(inv, x), inv) == inv;
            match self.kind {
                InverseKind::InverseSemigroup => base,
                InverseKind::CompletelyRegular => base && s.mul(x, inv) == s.mul(inv, x),
            }
        })
    }
}

/// Partition of a completely regular semigroup into its J-classes, which are
/// completely simple and multiply according to a meet semilattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemilatticeDecomposition {
    components: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    meet: Vec<usize>,
    completely_simple: Vec<bool>,
}

impl SemilatticeDecomposition {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn meet(&self, alpha: usize, beta: usize) -> usize {
        self.meet[alpha * self.components.len() + beta]
    }

    pub fn is_completely_simple(&self, alpha: usize) -> bool {
        self.completely_simple[alpha]
    }
}

impl FiniteSemigroup {
    /// The unique-inverse map of an inverse semigroup.
    pub fn inverse_map(&self) -> Result<UnaryInverseMap> {
        if !self.idempotents_commute() {
            return Err(Error::NotInverseSemigroup);
        }
        let mut map = Vec::with_capacity(self.order());
        for x in self.elements() {
            let mut found = None;
            for y in self.elements() {
                if self.is_inverse_pair(x, y) {
                    if found.is_some() {
                        return Err(Error::NotInverseSemigroup);
                    }
                    found = Some(y);
                }
            }
            map.push(found.ok_or(Error::NotInverseSemigroup)?);
        }
        Ok(UnaryInverseMap {
            map,
            kind: InverseKind::InverseSemigroup,
        })
    }

    /// The inverse of each element inside the cyclic group it generates.
    ///
    /// With period `p` the group is `{x, …, x^p}` with identity `x^p`, so the
    /// inverse is `x^(2p-1)`.
    pub fn completely_regular_inverse(&self) -> Result<UnaryInverseMap> {
        let mut map = Vec::with_capacity(self.order());
        for x in self.elements() {
            let (index, period) = self.powers(x);
            if index != 1 {
                return Err(Error::NotCompletelyRegular);
            }
            map.push(self.power(x, 2 * period - 1));
        }
        Ok(UnaryInverseMap {
            map,
            kind: InverseKind::CompletelyRegular,
        })
    }

    /// The principal two-sided ideal `S¹xS¹`.
    pub fn principal_ideal(&self, x: usize) -> Result<ElementSet> {
        self.check_element(x)?;
        Ok(ElementSet::from_elements(
            self.order(),
            self.ideal_bits(x).ones(),
        ))
    }

    fn ideal_bits(&self, x: usize) -> FixedBitSet {
        let n = self.order();
        let mut seen = FixedBitSet::with_capacity(n);
        let mut queue = VecDeque::from([x]);
        seen.insert(x);
        while let Some(y) = queue.pop_front() {
            for s in self.elements() {
                for z in [self.mul(s, y), self.mul(y, s)] {
                    if !seen.put(z) {
                        queue.push_back(z);
                    }
                }
            }
        }
        seen
    }

    /// The only ideal is the semigroup itself.
    pub fn is_simple(&self) -> bool {
        if self.is_group() {
            return true;
        }
        let n = self.order();
        self.elements()
            .all(|x| self.ideal_bits(x).count_ones(..) == n)
    }

    pub fn is_completely_simple(&self) -> bool {
        self.is_completely_regular() && self.is_simple()
    }

    /// J-classes ordered by their least element; each class is ascending.
    pub fn j_classes(&self) -> Vec<Vec<usize>> {
        let mut index: HashMap<FixedBitSet, usize> = HashMap::new();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for x in self.elements() {
            let ideal = self.ideal_bits(x);
            let next = classes.len();
            let c = *index.entry(ideal).or_insert(next);
            if c == next {
                classes.push(Vec::new());
            }
            classes[c].push(x);
        }
        classes
    }

    /// The subsemigroup on `elems`, relabelled `0..elems.len()` in the given order.
    pub fn subsemigroup(&self, elems: &[usize]) -> Result<FiniteSemigroup> {
        let mut position = vec![usize::MAX; self.order()];
        for (i, &x) in elems.iter().enumerate() {
            self.check_element(x)?;
            position[x] = i;
        }
        let k = elems.len();
        if k == 0 {
            return Err(Error::EmptySemigroup);
        }
        let mut table = Vec::with_capacity(k * k);
        for &a in elems {
            for &b in elems {
                let p = position[self.mul(a, b)];
                if p == usize::MAX {
                    return Err(Error::NotClosed);
                }
                table.push(p as u32);
            }
        }
        let sub = FiniteSemigroup::from_trusted(k, table);
        match self.labels() {
            Some(labels) => sub.with_labels(elems.iter().map(|&x| labels[x].clone()).collect()),
            None => Ok(sub),
        }
    }

    /// Decomposes a completely regular semigroup into its J-classes.
    pub fn semilattice_decomposition(&self) -> Result<SemilatticeDecomposition> {
        if !self.is_completely_regular() {
            return Err(Error::NotCompletelyRegular);
        }
        let components = self.j_classes();
        let mut class_of = vec![0; self.order()];
        for (c, members) in components.iter().enumerate() {
            for &x in members {
                class_of[x] = c;
            }
        }
        let k = components.len();
        let mut meet = Vec::with_capacity(k * k);
        for alpha in &components {
            for beta in &components {
                meet.push(class_of[self.mul(alpha[0], beta[0])]);
            }
        }
        let completely_simple = components
            .iter()
            .map(|members| {
                self.subsemigroup(members)
                    .map(|sub| sub.is_completely_simple())
                    .unwrap_or(false)
            })
            .collect();
        Ok(SemilatticeDecomposition {
            components,
            class_of,
            meet,
            completely_simple,
        })
    }
}

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// A partial map on the points `0..degree`, acting on the right: `x.then(y)`
/// applies `x` first.
///
/// Total maps model transformations, injective ones model the elements of a
/// symmetric inverse monoid. Literal form: `[2,0,1]`, with `-` for an
/// undefined image as in `[1,-,0]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialMap {
    images: Vec<Option<usize>>,
}

impl PartialMap {
    pub fn new(images: Vec<Option<usize>>) -> Result<Self> {
        let degree = images.len();
        if let Some(&Some(v)) = images.iter().find(|v| matches!(v, Some(v) if *v >= degree)) {
            return Err(Error::BadParams(format!(
                "image {v} out of range for degree {degree}"
            )));
        }
        Ok(PartialMap { images })
    }

    pub fn total(images: Vec<usize>) -> Result<Self> {
        Self::new(images.into_iter().map(Some).collect())
    }

    pub(crate) fn from_images_unchecked(images: Vec<Option<usize>>) -> Self {
        PartialMap { images }
    }

    pub fn identity(degree: usize) -> Self {
        PartialMap {
            images: (0..degree).map(Some).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn get(&self, point: usize) -> Option<usize> {
        self.images.get(point).copied().flatten()
    }

    pub fn images(&self) -> &[Option<usize>] {
        &self.images
    }

    pub fn is_total(&self) -> bool {
        self.images.iter().all(Option::is_some)
    }

    pub fn is_injective(&self) -> bool {
        let mut hit = vec![false; self.degree()];
        self.images
            .iter()
            .flatten()
            .all(|&v| !std::mem::replace(&mut hit[v], true))
    }

    pub fn domain(&self) -> Vec<usize> {
        (0..self.degree())
            .filter(|&p| self.images[p].is_some())
            .collect()
    }

    /// Image set, ascending.
    pub fn image(&self) -> Vec<usize> {
        let mut im: Vec<usize> = self.images.iter().flatten().copied().collect();
        im.sort_unstable();
        im.dedup();
        im
    }

    pub fn rank(&self) -> usize {
        self.image().len()
    }

    /// `self` followed by `other`. Panics on a degree mismatch.
    pub fn then(&self, other: &PartialMap) -> PartialMap {
        assert_eq!(
            self.degree(),
            other.degree(),
            "composing maps of different degree"
        );
        PartialMap {
            images: self
                .images
                .iter()
                .map(|v| v.and_then(|p| other.images[p]))
                .collect(),
        }
    }

    /// Inverse of an injective map.
    pub fn inverse(&self) -> Option<PartialMap> {
        if !self.is_injective() {
            return None;
        }
        let mut images = vec![None; self.degree()];
        for (p, v) in self.images.iter().enumerate() {
            if let Some(v) = v {
                images[*v] = Some(p);
            }
        }
        Some(PartialMap { images })
    }

    /// Parity of a permutation; `None` for non-bijections.
    pub fn is_even_permutation(&self) -> Option<bool> {
        if !self.is_total() || !self.is_injective() {
            return None;
        }
        let mut seen = vec![false; self.degree()];
        let mut transpositions = 0;
        for start in 0..self.degree() {
            let mut len = 0;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.images[p].unwrap();
                len += 1;
            }
            if len > 0 {
                transpositions += len - 1;
            }
        }
        Some(transpositions % 2 == 0)
    }

    /// Disjoint-cycle notation on the points `1..=degree`, `()` for the
    /// identity. `None` for non-bijections.
    pub fn cycle_notation(&self) -> Option<String> {
        self.is_even_permutation()?;
        let mut seen = vec![false; self.degree()];
        let mut out = String::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == Some(start) {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push((p + 1).to_string());
                p = self.images[p].unwrap();
            }
            out.push('(');
            out.push_str(&cycle.join(" "));
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        Some(out)
    }
}

impl fmt::Display for PartialMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            match v {
                Some(v) => write!(f, "{v}")?,
                None => f.write_str("-")?,
            }
        }
        f.write_str("]")
    }
}

impl FromStr for PartialMap {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadParams(format!("bad map literal {s:?}"));
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(bad)?;
        if inner.trim().is_empty() {
            return Ok(PartialMap { images: Vec::new() });
        }
        let images = inner
            .split(',')
            .map(|tok| match tok.trim() {
                "-" => Ok(None),
                t => t.parse::<usize>().map(Some).map_err(|_| bad()),
            })
            .collect::<Result<Vec<_>>>()?;
        PartialMap::new(images)
    }
}

//! Builders for the semigroup families: transformation and partial-injection
//! monoids, permutation and cyclic groups, Rees matrix semigroups,
//! zero-unions, direct products, the girth families, and the Vagner–Preston
//! representation.

mod combine;
mod girth;
mod maps;
mod partial_map;
mod rees;
mod vagner_preston;

use std::collections::HashMap;

use crate::{Error, FiniteSemigroup, Result};

pub use combine::{direct_product, zero_union};
pub use girth::{
    alpha as family_alpha, beta as family_beta, girth4_band, girth4_transformations,
    girth_2n_family, girth_2n_transformations,
};
pub use maps::{
    alternating_group, cyclic_group, full_transformation_monoid, symmetric_group,
    symmetric_inverse_monoid,
};
pub use partial_map::PartialMap;
pub use rees::{rees_matrix, ReesMatrixData};
pub use vagner_preston::vagner_preston;

/// Guardrails on the size of constructed semigroups.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SizeCaps {
    /// Largest `m` for the full transformation monoid `T_m`.
    pub transformation_points: usize,
    /// Largest `m` for the symmetric inverse monoid `I_m`.
    pub partial_injection_points: usize,
    /// Largest `m` for `Sym(m)` and `A_m`.
    pub permutation_points: usize,
    /// Largest order of a direct product.
    pub product_order: usize,
    /// When set, replaces all of the above with a single bound on the order.
    pub order_cap: Option<usize>,
}

impl Default for SizeCaps {
    fn default() -> Self {
        SizeCaps {
            transformation_points: 5,
            partial_injection_points: 4,
            permutation_points: 6,
            product_order: 5000,
            order_cap: None,
        }
    }
}

impl SizeCaps {
    pub fn with_order_cap(cap: usize) -> Self {
        SizeCaps {
            order_cap: Some(cap),
            ..Self::default()
        }
    }

    /// Reads `SGT_SIZE_CAP`; falls back to the defaults when unset or invalid.
    pub fn from_env() -> Self {
        std::env::var("SGT_SIZE_CAP")
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map_or_else(Self::default, Self::with_order_cap)
    }

    /// `points` is checked against `point_cap` unless an order cap is set, in
    /// which case the resulting `order` is checked instead.
    fn check_points(&self, what: &str, points: usize, point_cap: usize, order: u128) -> Result<()> {
        match self.order_cap {
            Some(cap) if order > cap as u128 => Err(Error::TooLarge {
                what: format!("{what} order"),
                requested: usize::try_from(order).unwrap_or(usize::MAX),
                cap,
            }),
            Some(_) => Ok(()),
            None if points > point_cap => Err(Error::TooLarge {
                what: format!("{what} points"),
                requested: points,
                cap: point_cap,
            }),
            None => Ok(()),
        }
    }

    fn check_order(&self, what: &str, order: u128) -> Result<()> {
        let cap = self.order_cap.unwrap_or(self.product_order);
        if order > cap as u128 {
            return Err(Error::TooLarge {
                what: format!("{what} order"),
                requested: usize::try_from(order).unwrap_or(usize::MAX),
                cap,
            });
        }
        Ok(())
    }
}

/// A semigroup of partial maps together with the map behind each element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapSemigroup {
    pub semigroup: FiniteSemigroup,
    pub maps: Vec<PartialMap>,
}

/// Multiplication table of a set of pairwise distinct maps of equal degree,
/// closed under composition. Element `k` is `maps[k]`.
pub(crate) fn table_of_maps(maps: &[PartialMap]) -> Result<FiniteSemigroup> {
    let n = maps.len();
    if n == 0 {
        return Err(Error::EmptySemigroup);
    }
    let degree = maps[0].degree();
    if maps.iter().any(|m| m.degree() != degree) {
        return Err(Error::BadParams("maps of different degree".into()));
    }
    let index = MapIndex::new(maps)?;
    let mut table = Vec::with_capacity(n * n);
    for a in maps {
        for b in maps {
            let product = index.find_composite(a, b).ok_or(Error::NotClosed)?;
            table.push(product as u32);
        }
    }
    Ok(FiniteSemigroup::from_trusted(n, table))
}

/// Map → element lookup. Small degrees use a dense code table.
enum MapIndex {
    Dense { degree: usize, slots: Vec<u32> },
    Hashed(HashMap<PartialMap, usize>),
}

const DENSE_LIMIT: u128 = 1 << 20;

impl MapIndex {
    fn new(maps: &[PartialMap]) -> Result<Self> {
        let degree = maps[0].degree();
        let space = (degree as u128 + 1)
            .checked_pow(degree as u32)
            .unwrap_or(u128::MAX);
        let duplicate = || Error::BadParams("duplicate map".into());
        if space <= DENSE_LIMIT {
            let mut slots = vec![u32::MAX; space as usize];
            for (k, m) in maps.iter().enumerate() {
                let slot = &mut slots[dense_code(m)];
                if *slot != u32::MAX {
                    return Err(duplicate());
                }
                *slot = k as u32;
            }
            Ok(MapIndex::Dense { degree, slots })
        } else {
            let mut map = HashMap::with_capacity(maps.len());
            for (k, m) in maps.iter().enumerate() {
                if map.insert(m.clone(), k).is_some() {
                    return Err(duplicate());
                }
            }
            Ok(MapIndex::Hashed(map))
        }
    }

    /// Element equal to `a.then(b)`.
    fn find_composite(&self, a: &PartialMap, b: &PartialMap) -> Option<usize> {
        match self {
            MapIndex::Dense { degree, slots } => {
                let base = degree + 1;
                let code = a.images().iter().rev().fold(0, |acc, v| {
                    let image = v.and_then(|p| b.images()[p]);
                    acc * base + image.unwrap_or(*degree)
                });
                let slot = slots[code];
                (slot != u32::MAX).then_some(slot as usize)
            }
            MapIndex::Hashed(map) => map.get(&a.then(b)).copied(),
        }
    }

    #[cfg(test)]
    fn find(&self, m: &PartialMap) -> Option<usize> {
        match self {
            MapIndex::Dense { slots, .. } => {
                let slot = slots[dense_code(m)];
                (slot != u32::MAX).then_some(slot as usize)
            }
            MapIndex::Hashed(map) => map.get(m).copied(),
        }
    }
}

/// Base-(degree+1) code, undefined images coded as `degree`.
fn dense_code(m: &PartialMap) -> usize {
    let base = m.degree() + 1;
    m.images()
        .iter()
        .rev()
        .fold(0, |acc, v| acc * base + v.unwrap_or(base - 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn caps_switch_to_order_bound() {
        let caps = SizeCaps::default();
        assert!(caps.check_points("T", 5, 5, 3125).is_ok());
        assert!(caps.check_points("T", 6, 5, 46656).is_err());
        let caps = SizeCaps::with_order_cap(100);
        assert!(caps.check_points("T", 3, 5, 27).is_ok());
        assert!(caps.check_points("T", 4, 5, 256).is_err());
        assert!(caps.check_order("product", 100).is_ok());
        assert!(caps.check_order("product", 101).is_err());
    }

    #[test]
    fn table_of_maps_rejects_open_sets() {
        let a: PartialMap = "[1,0]".parse().unwrap();
        assert_eq!(
            table_of_maps(std::slice::from_ref(&a)).unwrap_err(),
            Error::NotClosed
        );
        let dup = table_of_maps(&[a.clone(), a]).unwrap_err();
        assert!(matches!(dup, Error::BadParams(_)));
    }

    #[test]
    fn hashed_and_dense_indices_agree() {
        let maps: Vec<PartialMap> = ["[0,1]", "[1,0]"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        let dense = MapIndex::new(&maps).unwrap();
        assert!(matches!(dense, MapIndex::Dense { .. }));
        let hashed = MapIndex::Hashed(maps.iter().cloned().zip(0..).collect());
        for m in &maps {
            assert_eq!(dense.find(m), hashed.find(m));
        }
        assert_eq!(dense.find(&"[0,0]".parse().unwrap()), None);
    }
}

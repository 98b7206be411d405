//! The two constructions with long girth: the four-element band whose
//! commuting graph is a 4-cycle, and the family of `n²`-element bands whose
//! commuting graph has a unique cycle, of length `2n`.

use super::{table_of_maps, MapSemigroup, PartialMap};
use crate::{Error, FiniteSemigroup, Result};

const BAND_LABELS: [&str; 4] = ["a1", "a2", "b1", "b2"];

/// Rows and columns in the order α₁, α₂, β₁, β₂.
const BAND_TABLE: [u32; 16] = [
    0, 1, 0, 0, //
    0, 1, 1, 1, //
    0, 1, 2, 2, //
    0, 1, 3, 3, //
];

pub fn girth4_band() -> FiniteSemigroup {
    FiniteSemigroup::from_trusted(4, BAND_TABLE.to_vec())
        .with_name("girth4band")
        .with_labels(BAND_LABELS.iter().map(|s| s.to_string()).collect())
        .expect("four labels")
}

/// The band realised by the transformations
/// `α₁ = [1,1,1]`, `α₂ = [2,2,2]`, `β₁ = [1,2,1]`, `β₂ = [1,2,2]` of
/// `{1,2,3}` (0-based here).
pub fn girth4_transformations() -> MapSemigroup {
    let maps: Vec<PartialMap> = [[0, 0, 0], [1, 1, 1], [0, 1, 0], [0, 1, 1]]
        .into_iter()
        .map(|images| PartialMap::total(images.to_vec()).expect("points in range"))
        .collect();
    let semigroup = table_of_maps(&maps)
        .and_then(|s| s.with_labels(BAND_LABELS.iter().map(|s| s.to_string()).collect()))
        .expect("closed set of maps");
    MapSemigroup { semigroup, maps }
}

/// Element index of `α_i`.
pub fn alpha(i: usize) -> usize {
    i
}

/// Element index of `β_i^j` (`1 <= j < n`) in the family of size `n`.
pub fn beta(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < n && (1..n).contains(&j));
    n + i * (n - 1) + (j - 1)
}

fn family_labels(n: usize) -> Vec<String> {
    let mut labels: Vec<String> = (0..n).map(|i| format!("a{i}")).collect();
    for i in 0..n {
        for j in 1..n {
            labels.push(format!("b{i}^{j}"));
        }
    }
    labels
}

fn check_n(n: usize) -> Result<()> {
    if n < 3 {
        Err(Error::BadN(n))
    } else {
        Ok(())
    }
}

/// The `n²`-element band filled in from its product laws:
///
/// * `α_i α_k = α_k`, `β_i^j β_k^m = β_k^m`, `α_i β_k^m = β_k^m`;
/// * `β_k^m α_i = β_k^1` if `k = i`, otherwise `β_k^l` where `k ≡ i + l (mod n)`.
pub fn girth_2n_family(n: usize) -> Result<FiniteSemigroup> {
    check_n(n)?;
    let order = n * n;
    let mut table = vec![0u32; order * order];
    let mut set = |a: usize, b: usize, v: usize| table[a * order + b] = v as u32;
    for i in 0..n {
        for k in 0..n {
            set(alpha(i), alpha(k), alpha(k));
            for m in 1..n {
                set(alpha(i), beta(n, k, m), beta(n, k, m));
                let l = (k + n - i) % n;
                let product = if l == 0 { beta(n, k, 1) } else { beta(n, k, l) };
                set(beta(n, k, m), alpha(i), product);
                for j in 1..n {
                    set(beta(n, i, j), beta(n, k, m), beta(n, k, m));
                }
            }
        }
    }
    FiniteSemigroup::from_trusted(order, table)
        .with_name(format!("girth2n({n})"))
        .with_labels(family_labels(n))
}

/// The same family realised as transformations of `X = X_0 ∪ … ∪ X_{n-1}`,
/// `X_t = {x_t^1, …, x_t^{n-1}}`, with element order matching
/// [`girth_2n_family`]. The table is computed by composing the maps.
pub fn girth_2n_transformations(n: usize) -> Result<MapSemigroup> {
    check_n(n)?;
    let point = |t: usize, s: usize| t * (n - 1) + (s - 1);
    let degree = n * (n - 1);
    let mut maps = Vec::with_capacity(n * n);
    for i in 0..n {
        // X_i ↦ x_i^1 and X_{i+l} ↦ x_{i+l}^l for l = 1..n-1
        let images = (0..degree)
            .map(|x| {
                let t = x / (n - 1);
                let l = (t + n - i) % n;
                if l == 0 {
                    point(i, 1)
                } else {
                    point(t, l)
                }
            })
            .collect();
        maps.push(PartialMap::total(images)?);
    }
    for i in 0..n {
        for j in 1..n {
            maps.push(PartialMap::total(vec![point(i, j); degree])?);
        }
    }
    let semigroup = table_of_maps(&maps)?
        .with_name(format!("girth2n-maps({n})"))
        .with_labels(family_labels(n))?;
    Ok(MapSemigroup { semigroup, maps })
}

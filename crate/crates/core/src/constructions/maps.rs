use super::{table_of_maps, MapSemigroup, PartialMap, SizeCaps};
use crate::{Error, FiniteSemigroup, Result};

/// Every vector in `alphabet^degree`, first coordinate most significant.
fn all_words(degree: usize, alphabet: &[Option<usize>]) -> Vec<Vec<Option<usize>>> {
    let mut words: Vec<Vec<Option<usize>>> = vec![Vec::with_capacity(degree)];
    for _ in 0..degree {
        words = words
            .into_iter()
            .flat_map(|w| {
                alphabet.iter().map(move |&letter| {
                    let mut next = w.clone();
                    next.push(letter);
                    next
                })
            })
            .collect();
    }
    words
}

fn labelled(maps: Vec<PartialMap>, label: impl Fn(&PartialMap) -> String) -> Result<MapSemigroup> {
    let labels = maps.iter().map(label).collect();
    let semigroup = table_of_maps(&maps)?.with_labels(labels)?;
    Ok(MapSemigroup { semigroup, maps })
}

fn check_positive(m: usize) -> Result<()> {
    if m == 0 {
        Err(Error::BadParams("number of points must be positive".into()))
    } else {
        Ok(())
    }
}

/// The full transformation monoid `T_m`, maps in lexicographic order of their
/// image vectors.
pub fn full_transformation_monoid(m: usize, caps: &SizeCaps) -> Result<MapSemigroup> {
    check_positive(m)?;
    let order = (m as u128).checked_pow(m as u32).unwrap_or(u128::MAX);
    caps.check_points(
        "transformation monoid",
        m,
        caps.transformation_points,
        order,
    )?;
    let alphabet: Vec<Option<usize>> = (0..m).map(Some).collect();
    let maps = all_words(m, &alphabet)
        .into_iter()
        .map(PartialMap::from_images_unchecked)
        .collect();
    let mut out = labelled(maps, PartialMap::to_string)?;
    out.semigroup.set_name(Some(format!("T{m}")));
    Ok(out)
}

/// Number of partial injections on `m` points: `sum_k C(m,k)^2 k!`.
pub(crate) fn partial_injection_count(m: usize) -> u128 {
    let mut total = 1u128;
    let mut binom = 1u128;
    let mut fact = 1u128;
    for k in 1..=m as u128 {
        binom = binom * (m as u128 + 1 - k) / k;
        fact *= k;
        total += binom * binom * fact;
    }
    total
}

/// The symmetric inverse monoid `I_m`. The empty map is element 0.
pub fn symmetric_inverse_monoid(m: usize, caps: &SizeCaps) -> Result<MapSemigroup> {
    check_positive(m)?;
    caps.check_points(
        "symmetric inverse monoid",
        m,
        caps.partial_injection_points,
        partial_injection_count(m),
    )?;
    let alphabet: Vec<Option<usize>> = std::iter::once(None).chain((0..m).map(Some)).collect();
    let maps = all_words(m, &alphabet)
        .into_iter()
        .map(PartialMap::from_images_unchecked)
        .filter(PartialMap::is_injective)
        .collect();
    let mut out = labelled(maps, PartialMap::to_string)?;
    out.semigroup.set_name(Some(format!("I{m}")));
    Ok(out)
}

fn permutations(m: usize, caps: &SizeCaps, what: &str) -> Result<Vec<PartialMap>> {
    check_positive(m)?;
    let order = (1..=m as u128).product::<u128>();
    caps.check_points(what, m, caps.permutation_points, order)?;
    let alphabet: Vec<Option<usize>> = (0..m).map(Some).collect();
    Ok(all_words(m, &alphabet)
        .into_iter()
        .map(PartialMap::from_images_unchecked)
        .filter(PartialMap::is_injective)
        .collect())
}

/// `Sym(m)` on the points `1..=m`, identity first, labels in cycle notation.
pub fn symmetric_group(m: usize, caps: &SizeCaps) -> Result<MapSemigroup> {
    let maps = permutations(m, caps, "symmetric group")?;
    let mut out = labelled(maps, |p| p.cycle_notation().unwrap())?;
    out.semigroup.set_name(Some(format!("Sym{m}")));
    Ok(out)
}

/// The alternating group `A_m`.
pub fn alternating_group(m: usize, caps: &SizeCaps) -> Result<MapSemigroup> {
    let maps = permutations(m, caps, "alternating group")?
        .into_iter()
        .filter(|p| p.is_even_permutation() == Some(true))
        .collect();
    let mut out = labelled(maps, |p| p.cycle_notation().unwrap())?;
    out.semigroup.set_name(Some(format!("A{m}")));
    Ok(out)
}

/// The cyclic group `C_m` as addition mod `m`; element `k` is `g^k`.
pub fn cyclic_group(m: usize) -> Result<FiniteSemigroup> {
    check_positive(m)?;
    let table = (0..m)
        .flat_map(|a| (0..m).map(move |b| ((a + b) % m) as u32))
        .collect();
    let labels = (0..m)
        .map(|k| match k {
            0 => "e".to_string(),
            1 => "g".to_string(),
            k => format!("g^{k}"),
        })
        .collect();
    FiniteSemigroup::from_trusted(m, table)
        .with_name(format!("C{m}"))
        .with_labels(labels)
}

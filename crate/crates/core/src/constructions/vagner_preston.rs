use super::PartialMap;
use crate::{FiniteSemigroup, Result};

/// Right-translation representation of an inverse semigroup on its own
/// elements: `ρ_x` has domain `{s : s·x·x⁻¹ = s}` and sends `s` to `s·x`.
///
/// `x ↦ ρ_x` is an injective homomorphism into the symmetric inverse monoid on
/// `|S|` points, with `ρ_x` followed by `ρ_y` equal to `ρ_{xy}`.
pub fn vagner_preston(s: &FiniteSemigroup) -> Result<Vec<PartialMap>> {
    let inverse = s.inverse_map()?;
    Ok(s.elements()
        .map(|x| {
            let idem = s.mul(x, inverse.get(x));
            let images = s
                .elements()
                .map(|p| (s.mul(p, idem) == p).then(|| s.mul(p, x)))
                .collect();
            PartialMap::from_images_unchecked(images)
        })
        .collect())
}

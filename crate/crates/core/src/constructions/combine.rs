use super::SizeCaps;
use crate::{Error, FiniteSemigroup, Result};

/// `{0} ∪ S_1 ∪ … ∪ S_k` with a new zero; products across parts are 0.
///
/// Part `k` occupies a contiguous block after the zero, in the given order.
pub fn zero_union(parts: &[FiniteSemigroup]) -> Result<FiniteSemigroup> {
    if parts.len() < 2 {
        return Err(Error::TooFewParts(parts.len()));
    }
    let order = 1 + parts.iter().map(FiniteSemigroup::order).sum::<usize>();
    let mut table = vec![0u32; order * order];
    let mut labels = vec!["0".to_string()];
    let mut offset = 1;
    for (k, part) in parts.iter().enumerate() {
        for a in part.elements() {
            for b in part.elements() {
                table[(offset + a) * order + offset + b] = (offset + part.mul(a, b)) as u32;
            }
            labels.push(format!("s{}:{}", k + 1, part.label(a)));
        }
        offset += part.order();
    }
    let name = parts
        .iter()
        .map(|p| p.name().unwrap_or("S"))
        .collect::<Vec<_>>()
        .join(" ⊔ ");
    FiniteSemigroup::from_trusted(order, table)
        .with_name(format!("0 ∪ ({name})"))
        .with_labels(labels)
}

/// Componentwise product. The first factor is the most significant digit of
/// an element index.
pub fn direct_product(parts: &[FiniteSemigroup], caps: &SizeCaps) -> Result<FiniteSemigroup> {
    if parts.len() < 2 {
        return Err(Error::TooFewParts(parts.len()));
    }
    let order = parts
        .iter()
        .try_fold(1u128, |acc, p| acc.checked_mul(p.order() as u128))
        .unwrap_or(u128::MAX);
    caps.check_order("direct product", order)?;
    let order = order as usize;
    let decode = |mut x: usize| {
        let mut digits = vec![0; parts.len()];
        for (k, part) in parts.iter().enumerate().rev() {
            digits[k] = x % part.order();
            x /= part.order();
        }
        digits
    };
    let coords: Vec<Vec<usize>> = (0..order).map(decode).collect();
    let mut table = Vec::with_capacity(order * order);
    for a in &coords {
        for b in &coords {
            let code = parts.iter().enumerate().fold(0, |acc, (k, part)| {
                acc * part.order() + part.mul(a[k], b[k])
            });
            table.push(code as u32);
        }
    }
    let labels = coords
        .iter()
        .map(|c| {
            let inner: Vec<String> = c
                .iter()
                .zip(parts)
                .map(|(&x, p)| p.label(x).into_owned())
                .collect();
            format!("({})", inner.join(","))
        })
        .collect();
    let name = parts
        .iter()
        .map(|p| p.name().unwrap_or("S"))
        .collect::<Vec<_>>()
        .join("×");
    FiniteSemigroup::from_trusted(order, table)
        .with_name(name)
        .with_labels(labels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::cyclic_group;

    #[test]
    fn needs_two_parts() {
        let c = cyclic_group(2).unwrap();
        assert_eq!(
            zero_union(std::slice::from_ref(&c)).unwrap_err(),
            Error::TooFewParts(1)
        );
        assert_eq!(
            direct_product(&[], &SizeCaps::default()).unwrap_err(),
            Error::TooFewParts(0)
        );
    }

    #[test]
    fn product_cap() {
        let c = cyclic_group(10).unwrap();
        let caps = SizeCaps::default();
        assert!(direct_product(&[c.clone(), c.clone(), c.clone()], &caps).is_ok());
        let err = direct_product(&[c.clone(), c.clone(), c.clone(), c], &caps).unwrap_err();
        assert!(matches!(
            err,
            Error::TooLarge {
                requested: 10000,
                cap: 5000,
                ..
            }
        ));
    }

    #[test]
    fn zero_union_layout() {
        let c1 = cyclic_group(1).unwrap();
        let z = zero_union(&[c1.clone(), c1]).unwrap();
        assert_eq!(z.table(), vec![0, 0, 0, 0, 1, 0, 0, 0, 2]);
        assert_eq!(z.labels().unwrap(), ["0", "s1:e", "s2:e"]);
    }
}

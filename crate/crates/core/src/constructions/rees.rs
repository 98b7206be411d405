use crate::{Error, FiniteSemigroup, Result};

/// Input to the Rees matrix construction `M[G; I, Λ; P]`.
///
/// `sandwich[λ][i]` is the entry `p_{λi}` of the `Λ × I` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReesMatrixData {
    group: FiniteSemigroup,
    i_size: usize,
    lambda_size: usize,
    sandwich: Vec<Vec<usize>>,
}

impl ReesMatrixData {
    pub fn new(
        group: FiniteSemigroup,
        i_size: usize,
        lambda_size: usize,
        sandwich: Vec<Vec<usize>>,
    ) -> Result<Self> {
        if !group.is_group() {
            return Err(Error::NotAGroup);
        }
        if i_size == 0
            || lambda_size == 0
            || sandwich.len() != lambda_size
            || sandwich.iter().any(|row| row.len() != i_size)
        {
            return Err(Error::SandwichShape {
                rows: lambda_size,
                cols: i_size,
            });
        }
        for (lambda, row) in sandwich.iter().enumerate() {
            for (i, &value) in row.iter().enumerate() {
                if value >= group.order() {
                    return Err(Error::InvalidSandwichEntry { lambda, i, value });
                }
            }
        }
        Ok(ReesMatrixData {
            group,
            i_size,
            lambda_size,
            sandwich,
        })
    }

    pub fn group(&self) -> &FiniteSemigroup {
        &self.group
    }

    pub fn i_size(&self) -> usize {
        self.i_size
    }

    pub fn lambda_size(&self) -> usize {
        self.lambda_size
    }

    pub fn entry(&self, lambda: usize, i: usize) -> usize {
        self.sandwich[lambda][i]
    }

    /// Element index of the triple `(i, g, λ)`.
    pub fn element(&self, i: usize, g: usize, lambda: usize) -> usize {
        (i * self.group.order() + g) * self.lambda_size + lambda
    }

    /// Inverse of [`ReesMatrixData::element`].
    pub fn coordinates(&self, x: usize) -> (usize, usize, usize) {
        let lambda = x % self.lambda_size;
        let rest = x / self.lambda_size;
        (rest / self.group.order(), rest % self.group.order(), lambda)
    }
}

/// `(i, x, λ)(j, y, μ) = (i, x p_{λj} y, μ)`.
pub fn rees_matrix(data: &ReesMatrixData) -> FiniteSemigroup {
    let g = &data.group;
    let order = data.i_size * g.order() * data.lambda_size;
    let mut table = Vec::with_capacity(order * order);
    for a in 0..order {
        let (i, x, lambda) = data.coordinates(a);
        for b in 0..order {
            let (j, y, mu) = data.coordinates(b);
            let middle = g.mul(g.mul(x, data.sandwich[lambda][j]), y);
            table.push(data.element(i, middle, mu) as u32);
        }
    }
    let labels = (0..order)
        .map(|a| {
            let (i, x, lambda) = data.coordinates(a);
            format!("({i},{},{lambda})", g.label(x))
        })
        .collect();
    FiniteSemigroup::from_trusted(order, table)
        .with_name(format!(
            "M[{};{},{}]",
            g.name().unwrap_or("G"),
            data.i_size,
            data.lambda_size
        ))
        .with_labels(labels)
        .expect("one label per element")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::cyclic_group;

    #[test]
    fn validates_input() {
        let c2 = cyclic_group(2).unwrap();
        assert_eq!(
            ReesMatrixData::new(c2.clone(), 1, 1, vec![vec![2]]).unwrap_err(),
            Error::InvalidSandwichEntry {
                lambda: 0,
                i: 0,
                value: 2
            }
        );
        assert!(matches!(
            ReesMatrixData::new(c2.clone(), 2, 1, vec![vec![0]]),
            Err(Error::SandwichShape { .. })
        ));
        let band = crate::constructions::girth4_band();
        assert_eq!(
            ReesMatrixData::new(band, 1, 1, vec![vec![0]]).unwrap_err(),
            Error::NotAGroup
        );
    }

    #[test]
    fn coordinates_round_trip() {
        let data =
            ReesMatrixData::new(cyclic_group(3).unwrap(), 2, 4, vec![vec![0, 1]; 4]).unwrap();
        for x in 0..24 {
            let (i, g, l) = data.coordinates(x);
            assert_eq!(data.element(i, g, l), x);
        }
    }
}

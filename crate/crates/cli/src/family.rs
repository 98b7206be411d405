//! Semigroup families addressable from the command line.

use sgt_core::constructions::{
    alternating_group, cyclic_group, direct_product, full_transformation_monoid, girth4_band,
    girth_2n_family, rees_matrix, symmetric_group, symmetric_inverse_monoid, zero_union,
};
use sgt_core::{Error, FiniteSemigroup, ReesMatrixData, Result, SizeCaps};

pub const FAMILIES: &str = "tn, in, sym, alt, cyc, rees, zerounion, product, girth4band, girth2n";

fn bad(msg: impl Into<String>) -> Error {
    Error::BadParams(msg.into())
}

fn number(s: &str) -> Result<usize> {
    s.parse()
        .map_err(|_| bad(format!("expected a number, got {s:?}")))
}

fn one_number(family: &str, params: &[String]) -> Result<usize> {
    match params {
        [n] => number(n),
        _ => Err(bad(format!("{family} takes exactly one number"))),
    }
}

/// Builds `family` with the given parameters, e.g. `("sym", ["3"])` or
/// `("zerounion", ["alt4", "sym3"])`.
pub fn build(family: &str, params: &[String], caps: &SizeCaps) -> Result<FiniteSemigroup> {
    match family {
        "tn" => Ok(full_transformation_monoid(one_number(family, params)?, caps)?.semigroup),
        "in" => Ok(symmetric_inverse_monoid(one_number(family, params)?, caps)?.semigroup),
        "sym" => Ok(symmetric_group(one_number(family, params)?, caps)?.semigroup),
        "alt" => Ok(alternating_group(one_number(family, params)?, caps)?.semigroup),
        "cyc" => cyclic_group(one_number(family, params)?),
        "girth2n" => girth_2n_family(one_number(family, params)?),
        "girth4band" if params.is_empty() => Ok(girth4_band()),
        "girth4band" => Err(bad("girth4band takes no parameters")),
        "zerounion" | "product" => {
            let parts = params
                .iter()
                .map(|p| part(p, caps))
                .collect::<Result<Vec<_>>>()?;
            if family == "zerounion" {
                zero_union(&parts)
            } else {
                direct_product(&parts, caps)
            }
        }
        "rees" => rees(params, caps),
        other => Err(bad(format!(
            "unknown family {other:?} (expected one of {FAMILIES})"
        ))),
    }
}

/// `rees GROUP I LAMBDA [P]`, with the sandwich matrix `P` written as
/// `;`-separated rows of `,`-separated group elements (`LAMBDA` rows of `I`
/// entries). `P` defaults to the identity everywhere.
fn rees(params: &[String], caps: &SizeCaps) -> Result<FiniteSemigroup> {
    let (group, i, lambda, matrix) = match params {
        [g, i, l] => (g, i, l, None),
        [g, i, l, p] => (g, i, l, Some(p)),
        _ => return Err(bad("rees takes GROUP I LAMBDA [SANDWICH]")),
    };
    let group = part(group, caps)?;
    let (i, lambda) = (number(i)?, number(lambda)?);
    let identity = group.identity().ok_or(Error::NotAGroup)?;
    let sandwich = match matrix {
        None => vec![vec![identity; i]; lambda],
        Some(p) => p
            .split(';')
            .map(|row| row.split(',').map(|v| number(v.trim())).collect())
            .collect::<Result<_>>()?,
    };
    Ok(rees_matrix(&ReesMatrixData::new(
        group, i, lambda, sandwich,
    )?))
}

/// A compact spec such as `sym3`, `alt4`, `cyc2`, `tn3`, `in3`, `girth2n5`
/// or `girth4band`.
pub fn part(spec: &str, caps: &SizeCaps) -> Result<FiniteSemigroup> {
    if spec == "girth4band" {
        return Ok(girth4_band());
    }
    if let Some(n) = spec.strip_prefix("girth2n") {
        return build("girth2n", &[n.to_string()], caps);
    }
    let split = spec.find(|c: char| c.is_ascii_digit()).filter(|&i| i > 0);
    let Some(i) = split.filter(|&i| spec[i..].chars().all(|c| c.is_ascii_digit())) else {
        return Err(bad(format!("bad semigroup spec {spec:?}")));
    };
    let family = &spec[..i];
    if matches!(family, "zerounion" | "product" | "rees") {
        return Err(bad(format!("{family} cannot be used as a part")));
    }
    build(family, &[spec[i..].to_string()], caps)
}

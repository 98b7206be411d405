use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use super::{enumerate, ClassFilter, EnumerationTask, QUICK_MAX_ORDER};
use crate::commgraph::{chromatic_number, clique_number, commuting_graph, girth, knit_degree};
use crate::semigroup::write_table;
use crate::verify::{CheckEntry, Provenance, VerificationReport};
use crate::{Error, FiniteSemigroup, Result};

/// Statements checked over every enumerated semigroup of a class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Theorem {
    /// Non-commutative inverse semigroups have `ω ≥ 2` and `χ ≥ 2`.
    InverseCliqueGe2,
    /// Non-commutative Clifford semigroups have no left paths.
    CliffordNoLeftPaths,
    /// A commuting graph of a non-commutative inverse semigroup with a cycle has girth 3.
    InverseGirth3,
    /// Non-commutative completely regular semigroups never have knit degree 1.
    CrKnitNe1,
    /// In a Clifford semigroup `xy = yx ⇔ x⁻¹y = yx⁻¹`, and `xxy = xyx ⇒ xy = yx`.
    CliffordLemma,
}

impl Theorem {
    pub const ALL: [Theorem; 5] = [
        Theorem::InverseCliqueGe2,
        Theorem::CliffordNoLeftPaths,
        Theorem::InverseGirth3,
        Theorem::CrKnitNe1,
        Theorem::CliffordLemma,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Theorem::InverseCliqueGe2 => "inverse-clique-ge-2",
            Theorem::CliffordNoLeftPaths => "clifford-no-left-paths",
            Theorem::InverseGirth3 => "inverse-girth-3",
            Theorem::CrKnitNe1 => "cr-knit-ne-1",
            Theorem::CliffordLemma => "clifford-lemma",
        }
    }

    fn class(self) -> ClassFilter {
        match self {
            Theorem::InverseCliqueGe2 | Theorem::InverseGirth3 => ClassFilter::Inverse,
            Theorem::CliffordNoLeftPaths | Theorem::CliffordLemma => ClassFilter::Clifford,
            Theorem::CrKnitNe1 => ClassFilter::CompletelyRegular,
        }
    }

    /// Whether `s` belongs to the class the statement is about.
    pub fn applies_to(self, s: &FiniteSemigroup) -> bool {
        self.class().accepts(s)
    }

    fn needs_commuting_graph(self) -> bool {
        self != Theorem::CliffordLemma
    }

    /// `Ok(None)` when `s` satisfies the statement, otherwise a description
    /// of the violation. `s` must belong to the theorem's class.
    pub fn check(self, s: &FiniteSemigroup) -> Result<Option<String>> {
        Ok(match self {
            Theorem::InverseCliqueGe2 => {
                let g = commuting_graph(s)?;
                let (omega, chi) = (clique_number(&g), chromatic_number(&g));
                (omega < 2 || chi < 2)
                    .then(|| format!("clique number {omega}, chromatic number {chi}"))
            }
            Theorem::CliffordNoLeftPaths => {
                knit_degree(s)?.map(|w| format!("left path {:?}", w.vertices))
            }
            Theorem::InverseGirth3 => match girth(&commuting_graph(s)?) {
                Some(g) if g != 3 => Some(format!("girth {g}")),
                _ => None,
            },
            Theorem::CrKnitNe1 => knit_degree(s)?
                .filter(|w| w.length() == 1)
                .map(|w| format!("left path {:?} of length 1", w.vertices)),
            Theorem::CliffordLemma => clifford_lemma_violation(s)?,
        })
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.id() == s)
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

/// First pair breaking the Clifford commuting identities, or `x⁻¹x ≠ xx⁻¹`.
pub(crate) fn clifford_lemma_violation(s: &FiniteSemigroup) -> Result<Option<String>> {
    let inv = s.inverse_map()?;
    for x in s.elements() {
        let xi = inv.get(x);
        if s.mul(xi, x) != s.mul(x, xi) {
            return Ok(Some(format!("x⁻¹x ≠ xx⁻¹ for x = {x}")));
        }
        for y in s.elements() {
            let commute = s.mul(x, y) == s.mul(y, x);
            if commute != (s.mul(xi, y) == s.mul(y, xi)) {
                return Ok(Some(format!("xy = yx ⇎ x⁻¹y = yx⁻¹ at ({x}, {y})")));
            }
            if s.mul(s.mul(x, x), y) == s.mul(s.mul(x, y), x) && !commute {
                return Ok(Some(format!("xxy = xyx but xy ≠ yx at ({x}, {y})")));
            }
        }
    }
    Ok(None)
}

/// Runs one theorem over every semigroup of its class with order
/// `1..=max_order`. Orders above 4 are long-running.
pub fn exhaustive_check(theorem: &str, max_order: usize) -> Result<VerificationReport> {
    let theorem: Theorem = theorem.parse()?;
    let mut report = VerificationReport::new(format!("exhaustive:{theorem}"));
    report.push(run_exhaustive(theorem, max_order)?);
    Ok(report)
}

pub(crate) fn run_exhaustive(theorem: Theorem, max_order: usize) -> Result<CheckEntry> {
    let start = Instant::now();
    let mut counts = Vec::new();
    let mut failures = 0usize;
    let mut first_failure: Option<String> = None;
    let mut error = None;
    for order in 1..=max_order {
        let task = EnumerationTask {
            order,
            class: theorem.class(),
            non_commutative: theorem.needs_commuting_graph(),
            dedup: true,
            allow_long: max_order > QUICK_MAX_ORDER,
        };
        let count = enumerate(&task, |s| {
            if error.is_some() {
                return;
            }
            match theorem.check(s) {
                Ok(None) => {}
                Ok(Some(reason)) => {
                    failures += 1;
                    first_failure.get_or_insert_with(|| format!("{reason}\n{}", write_table(s)));
                }
                Err(e) => error = Some(e),
            }
        })?;
        if let Some(e) = error {
            return Err(e);
        }
        counts.push(count);
    }
    let instances: usize = counts.iter().sum();
    let per_order: Vec<String> = counts
        .iter()
        .enumerate()
        .map(|(i, c)| format!("{}:{c}", i + 1))
        .collect();
    Ok(CheckEntry {
        id: format!("exhaustive.{theorem}"),
        expected: "0 counterexamples".into(),
        actual: format!(
            "{failures} counterexamples in {instances} instances (by order {})",
            per_order.join(" ")
        ),
        pass: failures == 0,
        provenance: Provenance::Oracle,
        witness: first_failure,
        ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

//! Reruns the quantitative claims about commuting graphs and collects them in
//! a machine-readable report.

use std::fmt::Write;
use std::ops::RangeInclusive;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use crate::commgraph::{
    chromatic_number, clique_number, commuting_graph, girth, knit_degree, SimpleGraph,
};
use crate::constructions::{
    alternating_group, cyclic_group, direct_product, girth4_band, girth4_transformations,
    girth_2n_family, girth_2n_transformations, rees_matrix, symmetric_group,
    symmetric_inverse_monoid, vagner_preston, zero_union, ReesMatrixData, SizeCaps,
};
use crate::enumeration::theorems::{clifford_lemma_violation, run_exhaustive};
use crate::enumeration::Theorem;
use crate::{Error, FiniteSemigroup, Result};

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    /// Stated in the published result being reproduced.
    Published,
    /// Computed by an independent oracle (enumeration, brute force).
    Oracle,
    /// Follows directly from the definitions.
    Definition,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckEntry {
    pub id: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
    pub provenance: Provenance,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub ms: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub entries: Vec<CheckEntry>,
    pub overall: bool,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>) -> Self {
        VerificationReport {
            suite: suite.into(),
            entries: Vec::new(),
            overall: true,
        }
    }

    pub fn push(&mut self, entry: CheckEntry) {
        self.overall &= entry.pass;
        self.entries.push(entry);
    }

    pub fn entry(&self, id: &str) -> Option<&CheckEntry> {
        self.entries.iter().find(|e| e.id == id)
    }

    fn sort(&mut self) {
        self.entries.sort_by(|a, b| a.id.cmp(&b.id));
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let status = if e.pass { "PASS" } else { "FAIL" };
            writeln!(
                out,
                "{status} {:<38} expected: {} [{}]  actual: {}  ({:.1} ms)",
                e.id,
                e.expected,
                serde_json::to_value(e.provenance)
                    .unwrap()
                    .as_str()
                    .unwrap(),
                e.actual,
                e.ms
            )
            .unwrap();
            if let (false, Some(w)) = (e.pass, &e.witness) {
                for line in w.lines() {
                    writeln!(out, "    {line}").unwrap();
                }
            }
        }
        let passed = self.entries.iter().filter(|e| e.pass).count();
        writeln!(
            out,
            "{}: {passed}/{} checks passed ({})",
            if self.overall { "OK" } else { "FAILED" },
            self.entries.len(),
            self.suite
        )
        .unwrap();
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Tables,
    Girth,
    Groups,
    Clique,
    Chromatic,
    Knit,
    VagnerPreston,
    Lemmas,
    Exhaustive,
}

impl Suite {
    pub const NAMES: [&'static str; 10] = [
        "all",
        "tables",
        "girth",
        "groups",
        "clique",
        "chromatic",
        "knit",
        "vagner-preston",
        "lemmas",
        "exhaustive",
    ];

    pub fn name(self) -> &'static str {
        Self::NAMES[self as usize]
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        const ALL: [Suite; 10] = [
            Suite::All,
            Suite::Tables,
            Suite::Girth,
            Suite::Groups,
            Suite::Clique,
            Suite::Chromatic,
            Suite::Knit,
            Suite::VagnerPreston,
            Suite::Lemmas,
            Suite::Exhaustive,
        ];
        ALL.into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::BadParams(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Largest order for the exhaustive checks.
    pub max_order: usize,
    /// Overrides the `n` range of the girth family (default 3..=6) and of
    /// `Sym(3) × C_n` (default 1..=4).
    pub n_range: Option<RangeInclusive<usize>>,
    pub caps: SizeCaps,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_order: 4,
            n_range: None,
            caps: SizeCaps::default(),
        }
    }
}

/// Runs a suite; entries come out sorted by id.
pub fn run(suite: Suite, opts: &VerifyOptions) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(suite.name());
    let wanted = |s: Suite| suite == Suite::All || suite == s;
    if wanted(Suite::Tables) {
        tables(&mut report)?;
    }
    if wanted(Suite::Girth) {
        girth_family(&mut report, opts.n_range.clone().unwrap_or(3..=6))?;
    }
    if wanted(Suite::Groups) {
        group_figures(&mut report, &opts.caps)?;
    }
    let products = opts.n_range.clone().unwrap_or(1..=4);
    if wanted(Suite::Clique) {
        product_and_zero_union(&mut report, Invariant::Clique, products.clone(), &opts.caps)?;
    }
    if wanted(Suite::Chromatic) {
        product_and_zero_union(&mut report, Invariant::Chromatic, products, &opts.caps)?;
    }
    if wanted(Suite::Knit) {
        knit(&mut report, &opts.caps)?;
    }
    if wanted(Suite::VagnerPreston) {
        vagner_preston_checks(&mut report, &opts.caps)?;
    }
    if wanted(Suite::Lemmas) {
        lemmas(&mut report, opts)?;
    }
    if wanted(Suite::Exhaustive) {
        for theorem in Theorem::ALL
            .into_iter()
            .filter(|&t| t != Theorem::CliffordLemma)
        {
            report.push(run_exhaustive(theorem, opts.max_order)?);
            constructed_theorem_check(&mut report, theorem, &opts.caps)?;
        }
    }
    report.sort();
    Ok(report)
}

struct Outcome {
    actual: String,
    pass: bool,
    witness: Option<String>,
}

impl Outcome {
    fn compare(expected: &str, actual: String) -> Self {
        Outcome {
            pass: actual == expected,
            actual,
            witness: None,
        }
    }
}

fn check(
    report: &mut VerificationReport,
    id: impl Into<String>,
    expected: impl Into<String>,
    provenance: Provenance,
    body: impl FnOnce(&str) -> Result<Outcome>,
) -> Result<()> {
    let expected = expected.into();
    let start = Instant::now();
    let outcome = body(&expected)?;
    report.push(CheckEntry {
        id: id.into(),
        expected,
        actual: outcome.actual,
        pass: outcome.pass,
        provenance,
        witness: outcome.witness,
        ms: start.elapsed().as_secs_f64() * 1e3,
    });
    Ok(())
}

fn show(value: Option<usize>) -> String {
    value.map_or_else(|| "none".to_string(), |v| v.to_string())
}

fn tables(report: &mut VerificationReport) -> Result<()> {
    check(
        report,
        "girth4band.table",
        "16/16 entries",
        Provenance::Published,
        |expected| {
            let band = girth4_band();
            let maps = girth4_transformations().semigroup;
            let matching = band
                .table()
                .iter()
                .zip(maps.table())
                .filter(|(a, b)| **a == *b)
                .count();
            Ok(Outcome::compare(expected, format!("{matching}/16 entries")))
        },
    )?;
    check(
        report,
        "girth4band.graph",
        "4 vertices, 4 edges, girth 4",
        Provenance::Published,
        |expected| {
            let g = commuting_graph(&girth4_band())?;
            Ok(Outcome::compare(
                expected,
                format!(
                    "{} vertices, {} edges, girth {}",
                    g.vertex_count(),
                    g.edge_count(),
                    show(girth(&g))
                ),
            ))
        },
    )?;
    for n in [3, 4] {
        check(
            report,
            format!("girth2n.maps.n{n}"),
            "identical tables",
            Provenance::Published,
            |expected| {
                let laws = girth_2n_family(n)?;
                let maps = girth_2n_transformations(n)?.semigroup;
                let differing = laws
                    .table()
                    .iter()
                    .zip(maps.table())
                    .filter(|(a, b)| **a != *b)
                    .count();
                let actual = if differing == 0 {
                    "identical tables".to_string()
                } else {
                    format!("{differing} entries differ")
                };
                Ok(Outcome::compare(expected, actual))
            },
        )?;
    }
    Ok(())
}

fn girth_family(report: &mut VerificationReport, range: RangeInclusive<usize>) -> Result<()> {
    for n in range {
        let expected = format!("girth {}, cycle space 1", 2 * n);
        check(
            report,
            format!("girth2n.n{n}"),
            expected,
            Provenance::Published,
            |expected| {
                let s = girth_2n_family(n)?;
                let g = commuting_graph(&s)?;
                let mut out = Outcome::compare(
                    expected,
                    format!(
                        "girth {}, cycle space {}",
                        show(girth(&g)),
                        g.cycle_space_dimension()
                    ),
                );
                if !(s.is_band() && s.is_completely_regular()) {
                    out.pass = false;
                    out.actual.push_str(" (not a completely regular band)");
                }
                Ok(out)
            },
        )?;
    }
    Ok(())
}

fn graph_summary(g: &SimpleGraph) -> String {
    format!(
        "{} vertices, {} edges, ω {}, χ {}, girth {}",
        g.vertex_count(),
        g.edge_count(),
        clique_number(g),
        chromatic_number(g),
        show(girth(g))
    )
}

fn group_figures(report: &mut VerificationReport, caps: &SizeCaps) -> Result<()> {
    check(
        report,
        "group.sym3",
        "5 vertices, 1 edges, ω 2, χ 2, girth none",
        Provenance::Published,
        |expected| {
            let g = commuting_graph(&symmetric_group(3, caps)?.semigroup)?;
            Ok(Outcome::compare(expected, graph_summary(&g)))
        },
    )?;
    check(
        report,
        "group.a4",
        "11 vertices, 7 edges, ω 3, χ 3, girth 3",
        Provenance::Published,
        |expected| {
            let g = commuting_graph(&alternating_group(4, caps)?.semigroup)?;
            Ok(Outcome::compare(expected, graph_summary(&g)))
        },
    )
}

#[derive(Clone, Copy)]
enum Invariant {
    Clique,
    Chromatic,
}

impl Invariant {
    fn prefix(self) -> &'static str {
        match self {
            Invariant::Clique => "clique",
            Invariant::Chromatic => "chromatic",
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Invariant::Clique => "ω",
            Invariant::Chromatic => "χ",
        }
    }

    fn of(self, s: &FiniteSemigroup) -> Result<usize> {
        let g = commuting_graph(s)?;
        Ok(match self {
            Invariant::Clique => clique_number(&g),
            Invariant::Chromatic => chromatic_number(&g),
        })
    }
}

/// `A_4` followed by `k − 1` copies of `Sym(3)`, joined with a zero.
pub fn zero_union_family(k: usize, caps: &SizeCaps) -> Result<FiniteSemigroup> {
    let mut parts = vec![alternating_group(4, caps)?.semigroup];
    let sym3 = symmetric_group(3, caps)?.semigroup;
    parts.extend(std::iter::repeat_n(sym3, k.saturating_sub(1)));
    zero_union(&parts)
}

/// `Sym(3) × C_n`.
pub fn sym3_times_cyclic(n: usize, caps: &SizeCaps) -> Result<FiniteSemigroup> {
    direct_product(
        &[symmetric_group(3, caps)?.semigroup, cyclic_group(n)?],
        caps,
    )
}

fn product_and_zero_union(
    report: &mut VerificationReport,
    invariant: Invariant,
    range: RangeInclusive<usize>,
    caps: &SizeCaps,
) -> Result<()> {
    let (prefix, symbol) = (invariant.prefix(), invariant.symbol());
    for n in range {
        let expected = format!("{symbol} {}", 2 * n);
        check(
            report,
            format!("{prefix}.sym3xc{n}"),
            expected,
            Provenance::Published,
            |expected| {
                let value = invariant.of(&sym3_times_cyclic(n, caps)?)?;
                Ok(Outcome::compare(expected, format!("{symbol} {value}")))
            },
        )?;
    }
    for k in 2..=4 {
        let expected = format!("clifford, {symbol} {}", 2 * k + 1);
        check(
            report,
            format!("{prefix}.zerounion.k{k}"),
            expected,
            Provenance::Published,
            |expected| {
                let s = zero_union_family(k, caps)?;
                let kind = if s.is_clifford() {
                    "clifford"
                } else {
                    "not clifford"
                };
                Ok(Outcome::compare(
                    expected,
                    format!("{kind}, {symbol} {}", invariant.of(&s)?),
                ))
            },
        )?;
    }
    Ok(())
}

fn knit(report: &mut VerificationReport, caps: &SizeCaps) -> Result<()> {
    for (m, expected) in [(2, "none"), (3, "1"), (4, "1")] {
        check(
            report,
            format!("knit.in{m}"),
            expected,
            Provenance::Published,
            |expected| {
                let s = symmetric_inverse_monoid(m, caps)?.semigroup;
                let witness = knit_degree(&s)?;
                let valid = witness.as_ref().is_none_or(|w| w.is_valid(&s));
                let mut out =
                    Outcome::compare(expected, show(witness.as_ref().map(|w| w.length())));
                out.pass &= valid;
                out.witness = witness.map(|w| {
                    let labels: Vec<String> = w
                        .vertices
                        .iter()
                        .map(|&x| s.label(x).into_owned())
                        .collect();
                    labels.join(" - ")
                });
                Ok(out)
            },
        )?;
    }
    Ok(())
}

/// Whether the right-translation maps form a faithful representation by
/// partial injections.
pub fn vagner_preston_faithful(s: &FiniteSemigroup) -> Result<bool> {
    let maps = vagner_preston(s)?;
    let injective = maps.iter().all(|m| m.is_injective());
    let distinct = maps
        .iter()
        .enumerate()
        .all(|(i, m)| !maps[i + 1..].contains(m));
    let homomorphic = s.elements().all(|x| {
        s.elements()
            .all(|y| maps[x].then(&maps[y]) == maps[s.mul(x, y)])
    });
    Ok(injective && distinct && homomorphic)
}

fn vagner_preston_checks(report: &mut VerificationReport, caps: &SizeCaps) -> Result<()> {
    for m in [2, 3] {
        check(
            report,
            format!("vagner-preston.in{m}"),
            "faithful representation by partial injections",
            Provenance::Published,
            |expected| {
                let s = symmetric_inverse_monoid(m, caps)?.semigroup;
                let actual = if vagner_preston_faithful(&s)? {
                    expected.to_string()
                } else {
                    "representation is not faithful".to_string()
                };
                Ok(Outcome::compare(expected, actual))
            },
        )?;
    }
    Ok(())
}

/// The constructed Clifford semigroups used for the lemma checks.
pub fn constructed_clifford_suite(caps: &SizeCaps) -> Result<Vec<FiniteSemigroup>> {
    let mut suite = vec![
        symmetric_group(3, caps)?.semigroup,
        alternating_group(4, caps)?.semigroup,
        cyclic_group(5)?,
    ];
    for k in 2..=4 {
        suite.push(zero_union_family(k, caps)?);
    }
    for n in 1..=4 {
        suite.push(sym3_times_cyclic(n, caps)?);
    }
    suite.push(zero_union(&[
        cyclic_group(2)?,
        cyclic_group(3)?,
        symmetric_group(3, caps)?.semigroup,
    ])?);
    Ok(suite)
}

/// Constructed semigroups on which the theorems have content: inverse
/// semigroups with a non-commutative commuting graph, and completely regular
/// ones beyond the Clifford suite.
pub fn constructed_theorem_suite(caps: &SizeCaps) -> Result<Vec<FiniteSemigroup>> {
    let mut suite = constructed_clifford_suite(caps)?;
    let i2 = symmetric_inverse_monoid(2, caps)?;
    let rank_at_most_one: Vec<usize> = (0..i2.maps.len())
        .filter(|&x| i2.maps[x].rank() <= 1)
        .collect();
    suite.push(
        i2.semigroup
            .subsemigroup(&rank_at_most_one)?
            .with_name("B2"),
    );
    for m in 2..=4 {
        suite.push(symmetric_inverse_monoid(m, caps)?.semigroup);
    }
    suite.push(symmetric_group(4, caps)?.semigroup);
    suite.push(girth4_band());
    for n in 3..=6 {
        suite.push(girth_2n_family(n)?);
    }
    let sym3 = symmetric_group(3, caps)?.semigroup;
    let e = sym3.identity().ok_or(Error::NotAGroup)?;
    let rees = ReesMatrixData::new(sym3, 2, 2, vec![vec![e, e], vec![e, 1]])?;
    suite.push(rees_matrix(&rees).with_name("M[Sym3;2,2;P]"));
    Ok(suite)
}

fn constructed_theorem_check(
    report: &mut VerificationReport,
    theorem: Theorem,
    caps: &SizeCaps,
) -> Result<()> {
    check(
        report,
        format!("constructed.{theorem}"),
        "0 counterexamples",
        Provenance::Published,
        |_| {
            let mut instances = 0;
            let mut failures = Vec::new();
            for s in constructed_theorem_suite(caps)? {
                if s.is_commutative() || !theorem.applies_to(&s) {
                    continue;
                }
                instances += 1;
                if let Some(reason) = theorem.check(&s)? {
                    failures.push(format!("{}: {reason}", s.name().unwrap_or("?")));
                }
            }
            Ok(Outcome {
                actual: format!(
                    "{} counterexamples in {instances} instances",
                    failures.len()
                ),
                pass: failures.is_empty() && instances > 0,
                witness: (!failures.is_empty()).then(|| failures.join("\n")),
            })
        },
    )
}

/// Elements α of `I_3` with `dom α ≠ im α` where `αα⁻¹` or `α⁻¹α` fails to be
/// a distinct idempotent that does not commute with α.
fn partial_injection_lemma_failures(caps: &SizeCaps) -> Result<(usize, Vec<String>)> {
    let i3 = symmetric_inverse_monoid(3, caps)?;
    let s = &i3.semigroup;
    let inv = s.inverse_map()?;
    let mut tested = 0;
    let mut failures = Vec::new();
    for (a, map) in i3.maps.iter().enumerate() {
        if map.domain() == map.image() {
            continue;
        }
        tested += 1;
        let e = s.mul(a, inv.get(a));
        let f = s.mul(inv.get(a), a);
        let holds = e != f
            && s.mul(e, e) == e
            && s.mul(f, f) == f
            && s.mul(a, e) != s.mul(e, a)
            && s.mul(a, f) != s.mul(f, a);
        if !holds {
            failures.push(map.to_string());
        }
    }
    Ok((tested, failures))
}

fn lemmas(report: &mut VerificationReport, opts: &VerifyOptions) -> Result<()> {
    check(
        report,
        "lemma.clifford.constructed",
        "0 violations",
        Provenance::Published,
        |expected| {
            let suite = constructed_clifford_suite(&opts.caps)?;
            let mut violations = Vec::new();
            for s in &suite {
                if !s.is_clifford() {
                    violations.push(format!("{} is not clifford", s.name().unwrap_or("?")));
                } else if let Some(v) = clifford_lemma_violation(s)? {
                    violations.push(format!("{}: {v}", s.name().unwrap_or("?")));
                }
            }
            let mut out = Outcome::compare(
                expected,
                format!(
                    "{} violations in {} semigroups",
                    violations.len(),
                    suite.len()
                ),
            );
            out.pass = violations.is_empty();
            out.witness = (!violations.is_empty()).then(|| violations.join("\n"));
            Ok(out)
        },
    )?;
    let mut enumerated = run_exhaustive(Theorem::CliffordLemma, opts.max_order)?;
    enumerated.id = "lemma.clifford.enumerated".into();
    report.push(enumerated);
    check(
        report,
        "lemma.in3.dom-ne-im",
        "0 violations",
        Provenance::Published,
        |expected| {
            let (tested, failures) = partial_injection_lemma_failures(&opts.caps)?;
            let mut out = Outcome::compare(
                expected,
                format!("{} violations in {tested} elements", failures.len()),
            );
            out.pass = failures.is_empty() && tested > 0;
            out.witness = (!failures.is_empty()).then(|| failures.join(", "));
            Ok(out)
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for name in Suite::NAMES {
            assert_eq!(name.parse::<Suite>().unwrap().name(), name);
        }
        assert!("everything".parse::<Suite>().is_err());
    }

    #[test]
    fn report_overall_is_the_conjunction() {
        let mut report = VerificationReport::new("t");
        let entry = |id: &str, pass| CheckEntry {
            id: id.into(),
            expected: "x".into(),
            actual: "x".into(),
            pass,
            provenance: Provenance::Definition,
            witness: None,
            ms: 0.0,
        };
        report.push(entry("b", true));
        assert!(report.overall);
        report.push(entry("a", false));
        assert!(!report.overall);
        report.sort();
        assert_eq!(report.entries[0].id, "a");
        assert!(report.to_text().starts_with("FAIL a"));
        let json: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(json["entries"][0]["provenance"], "definition");
        assert_eq!(json["overall"], false);
    }
}

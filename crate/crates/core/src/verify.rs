//! Executable theorem checks: augmentations from separating sets to codes,
//! bounds between numbers, complement dualities and spider closed forms.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Family, Graph};
use crate::hypergraph::CoverResult;
use crate::kind::{CodeKind, DominationKind, Kind, SeparationKind};
use crate::separation::{is_s_set, is_x_code, number, separation_hypergraph};
use crate::vertex_set::{Vertex, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

/// One elementary check inside a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    /// Coarse grouping used for filtering, e.g. `"3"`, `"eq4"`, `"cor2"`.
    pub group: String,
    pub id: String,
    pub verdict: Verdict,
    pub detail: String,
}

impl Check {
    fn new(
        group: &str,
        id: impl Into<String>,
        verdict: Verdict,
        detail: impl Into<String>,
    ) -> Self {
        Self {
            group: group.into(),
            id: id.into(),
            verdict,
            detail: detail.into(),
        }
    }

    fn holds(group: &str, id: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        Self::new(
            group,
            id,
            if ok { Verdict::Pass } else { Verdict::Fail },
            detail,
        )
    }
}

/// The graph and the witnesses behind a failed check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub n: usize,
    pub edges: Vec<(Vertex, Vertex)>,
    pub witnesses: BTreeMap<String, Option<VertexSet>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub theorem: String,
    pub n: usize,
    pub edges: Vec<(Vertex, Vertex)>,
    pub quantities: BTreeMap<String, Option<usize>>,
    pub checks: Vec<Check>,
    pub verdict: Verdict,
    pub counterexample: Option<Counterexample>,
}

impl TheoremReport {
    fn assemble(
        theorem: &str,
        g: &Graph,
        quantities: BTreeMap<String, Option<usize>>,
        checks: Vec<Check>,
        witnesses: impl FnOnce() -> BTreeMap<String, Option<VertexSet>>,
    ) -> Self {
        let verdict = overall(&checks);
        let counterexample = (verdict == Verdict::Fail).then(|| Counterexample {
            n: g.n(),
            edges: g.edges(),
            witnesses: witnesses(),
        });
        Self {
            theorem: theorem.into(),
            n: g.n(),
            edges: g.edges(),
            quantities,
            checks,
            verdict,
            counterexample,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict != Verdict::Fail
    }

    /// Keeps only the checks whose group is listed, and recomputes the verdict.
    pub fn retain_groups(&mut self, groups: &[&str]) {
        self.checks.retain(|c| groups.contains(&c.group.as_str()));
        self.verdict = overall(&self.checks);
        if self.verdict != Verdict::Fail {
            self.counterexample = None;
        }
    }
}

fn overall(checks: &[Check]) -> Verdict {
    if checks.iter().any(|c| c.verdict == Verdict::Fail) {
        Verdict::Fail
    } else if checks.iter().all(|c| c.verdict == Verdict::Skipped) {
        Verdict::Skipped
    } else {
        Verdict::Pass
    }
}

/// Minimum sets for all fourteen kinds.
pub fn all_numbers(g: &Graph) -> BTreeMap<Kind, CoverResult> {
    Kind::all().map(|k| (k, number(g, k))).collect()
}

fn quantities_of(
    numbers: &BTreeMap<Kind, CoverResult>,
    prefix: &str,
) -> BTreeMap<String, Option<usize>> {
    numbers
        .iter()
        .map(|(k, r)| (format!("{prefix}{k}"), r.tau))
        .collect()
}

fn witnesses_of(
    numbers: &BTreeMap<Kind, CoverResult>,
    prefix: &str,
) -> BTreeMap<String, Option<VertexSet>> {
    numbers
        .iter()
        .map(|(k, r)| (format!("{prefix}{k}"), r.witness.clone()))
        .collect()
}

fn require_s_set(g: &Graph, s: SeparationKind, c: &VertexSet) -> Result<()> {
    g.check_set(c)?;
    if is_s_set(g, s, c) {
        Ok(())
    } else {
        Err(Error::Precondition(format!("the set is not an {s}-set")))
    }
}

fn require_no_isolated(g: &Graph) -> Result<()> {
    match g.isolated_vertices().first() {
        Some(v) => Err(Error::Precondition(format!("isolated vertex {v}"))),
        None => Ok(()),
    }
}

/// Adds the (unique, if any) vertex whose closed neighborhood misses `c`.
pub fn augment_to_sd_code(g: &Graph, s: SeparationKind, c: &VertexSet) -> Result<VertexSet> {
    require_s_set(g, s, c)?;
    let mut out = c.clone();
    if let Some(v0) = (0..g.n()).find(|&v| !g.closed_neighbors(v).intersects(c)) {
        out.insert(v0);
    }
    Ok(out)
}

/// For O and F: adds the lowest neighbor of the (unique, if any) vertex
/// whose open neighborhood misses `c`.
pub fn augment_to_std_code_of(g: &Graph, s: SeparationKind, c: &VertexSet) -> Result<VertexSet> {
    if !matches!(s, SeparationKind::O | SeparationKind::F) {
        return Err(Error::InvalidParameter(format!("expected O or F, got {s}")));
    }
    require_s_set(g, s, c)?;
    require_no_isolated(g)?;
    let mut out = c.clone();
    if let Some(v0) = (0..g.n()).find(|&v| !g.neighbors(v).intersects(c)) {
        out.insert(g.neighbors(v0).first().expect("no isolated vertices"));
    }
    Ok(out)
}

/// For L and I: gives every member of `c` without a neighbor in `c` an
/// outside neighbor, choosing greedily the outside vertex that serves the
/// most of them (lowest index on ties), then fixes the at most one outside
/// vertex still lacking a neighbor in the set.
pub fn augment_to_std_code_li(g: &Graph, s: SeparationKind, c: &VertexSet) -> Result<VertexSet> {
    if !matches!(s, SeparationKind::L | SeparationKind::I) {
        return Err(Error::InvalidParameter(format!("expected L or I, got {s}")));
    }
    require_s_set(g, s, c)?;
    require_no_isolated(g)?;
    let mut needy: VertexSet = c
        .iter()
        .filter(|&v| !g.neighbors(v).intersects(c))
        .collect();
    let mut out = c.clone();
    while !needy.is_empty() {
        let u = (0..g.n())
            .filter(|&u| !c.contains(u))
            .max_by_key(|&u| {
                (
                    g.neighbors(u).intersection(&needy).len(),
                    std::cmp::Reverse(u),
                )
            })
            .expect("a needy vertex has an outside neighbor");
        needy = needy.difference(g.neighbors(u));
        out.insert(u);
    }
    if let Some(v0) = (0..g.n()).find(|&v| !g.neighbors(v).intersects(&out)) {
        out.insert(g.neighbors(v0).first().expect("no isolated vertices"));
    }
    Ok(out)
}

/// Runs the applicable augmentations on the S-set `c` and checks that each
/// result is a code of the right kind within its size bound.
pub fn check_augmentations(g: &Graph, s: SeparationKind, c: &VertexSet) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let sd = CodeKind::new(Some(s), DominationKind::D);
    let a = augment_to_sd_code(g, s, c)?;
    checks.push(Check::holds(
        "aug",
        format!("{sd}<=|C|+1"),
        is_x_code(g, sd, &a) && a.len() <= c.len() + 1,
        format!("|C|={} -> {}", c.len(), a.len()),
    ));
    let std = CodeKind::new(Some(s), DominationKind::TD);
    if !g.isolated_vertices().is_empty() {
        checks.push(Check::new(
            "aug",
            format!("{std}"),
            Verdict::Skipped,
            "isolated vertex",
        ));
        return Ok(checks);
    }
    let (a, bound, label) = match s {
        SeparationKind::O | SeparationKind::F => {
            (augment_to_std_code_of(g, s, c)?, c.len() + 1, "|C|+1")
        }
        SeparationKind::L | SeparationKind::I => {
            (augment_to_std_code_li(g, s, c)?, 2 * c.len(), "2|C|")
        }
    };
    checks.push(Check::holds(
        "aug",
        format!("{std}<={label}"),
        is_x_code(g, std, &a) && a.len() <= bound,
        format!("|C|={} -> {}", c.len(), a.len()),
    ));
    Ok(checks)
}

fn fmt_tau(r: &CoverResult) -> String {
    r.tau.map_or_else(|| "none".to_string(), |t| t.to_string())
}

/// `lhs <= rhs` when both sides exist, skipped otherwise.
fn compare(group: &str, id: String, lhs: &CoverResult, rhs: &CoverResult, slack: usize) -> Check {
    let detail = format!("{} vs {}", fmt_tau(lhs), fmt_tau(rhs));
    match (lhs.tau, rhs.tau) {
        (Some(a), Some(b)) => Check::holds(group, id, a <= b + slack, detail),
        _ => Check::new(group, id, Verdict::Skipped, detail),
    }
}

/// The bound theorems and number orderings on a single graph, plus the
/// augmentation contracts on its minimum S-sets.
pub fn check_bound_theorems(g: &Graph) -> TheoremReport {
    let nums = all_numbers(g);
    let code = |x: CodeKind| &nums[&Kind::Code(x)];
    let sep = |s: SeparationKind| &nums[&Kind::Separation(s)];
    let sd = |s| CodeKind::new(Some(s), DominationKind::D);
    let std = |s| CodeKind::new(Some(s), DominationKind::TD);
    let mut checks = Vec::new();

    checks.push(compare(
        "eq1",
        "D<=TD".into(),
        code(CodeKind::D),
        code(CodeKind::TD),
        0,
    ));
    for x in CodeKind::CODES {
        let base = CodeKind::new(None, x.domination());
        checks.push(compare(
            "eq2",
            format!("{base}<={x}"),
            code(base),
            code(x),
            0,
        ));
    }
    for s in SeparationKind::ALL {
        checks.push(compare(
            "eq4",
            format!("{s}<={}", sd(s)),
            sep(s),
            code(sd(s)),
            0,
        ));
        checks.push(compare(
            "eq4",
            format!("{}<={}", sd(s), std(s)),
            code(sd(s)),
            code(std(s)),
            0,
        ));
    }
    for weak in CodeKind::CODES {
        for strong in CodeKind::CODES {
            if weak != strong && strong.implies(weak) {
                checks.push(compare(
                    "fig2",
                    format!("{weak}<={strong}"),
                    code(weak),
                    code(strong),
                    0,
                ));
            }
        }
    }
    for weak in SeparationKind::ALL {
        for strong in SeparationKind::ALL {
            if weak != strong && strong.implies(weak) {
                checks.push(compare(
                    "order",
                    format!("{weak}<={strong}"),
                    sep(weak),
                    sep(strong),
                    0,
                ));
            }
        }
    }
    for s in SeparationKind::ALL {
        checks.push(compare(
            "3",
            format!("{}<={s}+1", sd(s)),
            code(sd(s)),
            sep(s),
            1,
        ));
    }
    for s in [SeparationKind::O, SeparationKind::F] {
        checks.push(compare(
            "4",
            format!("{}<={s}+1", std(s)),
            code(std(s)),
            sep(s),
            1,
        ));
    }
    for s in [SeparationKind::L, SeparationKind::I] {
        let id = format!("{}<=2{s}", std(s));
        let (a, b) = (code(std(s)), sep(s));
        let detail = format!("{} vs 2*{}", fmt_tau(a), fmt_tau(b));
        checks.push(match (a.tau, b.tau) {
            (Some(x), Some(y)) => Check::holds("5", id, x <= 2 * y, detail),
            _ => Check::new("5", id, Verdict::Skipped, detail),
        });
    }
    for s in [SeparationKind::O, SeparationKind::F] {
        checks.push(compare(
            "gap",
            format!("{}<={}+1", std(s), sd(s)),
            code(std(s)),
            code(sd(s)),
            1,
        ));
    }
    for s in SeparationKind::ALL {
        if let Some(w) = &sep(s).witness {
            checks.extend(check_augmentations(g, s, w).expect("minimum witnesses are S-sets"));
        }
    }

    TheoremReport::assemble("bounds", g, quantities_of(&nums, ""), checks, || {
        witnesses_of(&nums, "")
    })
}

/// The four separation-number dualities (under their twin hypotheses) and
/// the four hypergraph identities as clutter equalities (unconditionally).
pub fn check_complement_duality(g: &Graph) -> TheoremReport {
    let gc = g.complement();
    let mut quantities = BTreeMap::new();
    let mut witnesses = BTreeMap::new();
    let mut results = BTreeMap::new();
    for s in SeparationKind::ALL {
        for (prefix, graph) in [("", g), ("co-", &gc)] {
            let r = number(graph, s.into());
            quantities.insert(format!("{prefix}{s}"), r.tau);
            witnesses.insert(format!("{prefix}{s}"), r.witness.clone());
            results.insert((prefix, s), r);
        }
    }
    let no_open = g.open_twins().is_empty();
    let no_closed = g.closed_twins().is_empty();
    use SeparationKind::*;
    let mut checks = Vec::new();
    for (s, t, hypothesis, why) in [
        (L, L, true, ""),
        (I, O, no_closed, "closed twins"),
        (O, I, no_open, "open twins"),
        (F, F, no_open && no_closed, "twins"),
    ] {
        let id = format!("{s}(G)={t}(co-G)");
        let (a, b) = (&results[&("", s)], &results[&("co-", t)]);
        let detail = format!("{} vs {}", fmt_tau(a), fmt_tau(b));
        checks.push(if hypothesis {
            Check::holds("7", id, a.tau.is_some() && a.tau == b.tau, detail)
        } else {
            Check::new("7", id, Verdict::Skipped, why)
        });
    }
    for (s, t) in [(L, L), (I, O), (O, I), (F, F)] {
        let a = separation_hypergraph(g, s).clutter();
        let b = separation_hypergraph(&gc, t).clutter();
        checks.push(Check::holds(
            "lemA",
            format!("H_{s}(G)=H_{t}(co-G)"),
            a == b,
            format!("{} vs {} clutter edges", a.edges().len(), b.edges().len()),
        ));
    }
    TheoremReport::assemble("complement-duality", g, quantities, checks, || witnesses)
}

/// The code-number gaps between a graph and its complement.
pub fn check_complement_gaps(g: &Graph) -> TheoremReport {
    let gc = g.complement();
    let no_open = g.open_twins().is_empty();
    let no_closed = g.closed_twins().is_empty();
    use CodeKind::*;
    let pairs = [
        (LD, LD, true, ""),
        (ID, OD, no_closed, "closed twins"),
        (OD, ID, no_open, "open twins"),
        (FD, FD, no_open && no_closed, "twins"),
        (FTD, FTD, no_open && no_closed, "twins"),
    ];
    let mut quantities = BTreeMap::new();
    let mut witnesses = BTreeMap::new();
    let mut checks = Vec::new();
    for (x, y, hypothesis, why) in pairs {
        let a = number(g, x.into());
        let b = number(&gc, y.into());
        quantities.insert(format!("{x}"), a.tau);
        quantities.insert(format!("co-{y}"), b.tau);
        witnesses.insert(format!("{x}"), a.witness.clone());
        witnesses.insert(format!("co-{y}"), b.witness.clone());
        let id = format!("|{x}(G)-{y}(co-G)|<=1");
        let detail = format!("{} vs {}", fmt_tau(&a), fmt_tau(&b));
        checks.push(match (hypothesis, a.tau, b.tau) {
            (false, _, _) => Check::new("cor2", id, Verdict::Skipped, why),
            (true, Some(p), Some(q)) => Check::holds("cor2", id, p.abs_diff(q) <= 1, detail),
            (true, _, _) => Check::new(
                "cor2",
                id,
                Verdict::Skipped,
                format!("infeasible side: {detail}"),
            ),
        });
    }
    TheoremReport::assemble("complement-gaps", g, quantities, checks, || witnesses)
}

/// Closed-form numbers of the thin and thick spiders of order `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpiderTable {
    pub k: usize,
    pub thin: BTreeMap<Kind, usize>,
    pub thick: BTreeMap<Kind, usize>,
}

pub fn spider_closed_forms(k: usize) -> Result<SpiderTable> {
    if k < 4 {
        return Err(Error::InvalidParameter(format!(
            "spider formulas need k >= 4, got {k}"
        )));
    }
    use CodeKind::*;
    use SeparationKind::*;
    let sep = |l, o, i, f| [(L, l), (O, o), (I, i), (F, f)].map(|(s, v)| (Kind::Separation(s), v));
    let codes = |vals: [usize; 8]| {
        [LD, OD, ID, FD, LTD, OTD, ITD, FTD]
            .into_iter()
            .zip(vals)
            .map(|(x, v)| (Kind::Code(x), v))
    };
    let thin = sep(k - 1, k - 1, k + 1, 2 * k - 2)
        .into_iter()
        .chain(codes([k, k, k + 1, 2 * k - 2, k, k, 2 * k - 1, 2 * k - 1]))
        .collect();
    let thick = sep(k - 1, k + 1, k - 1, 2 * k - 2)
        .into_iter()
        .chain(codes([
            k - 1,
            k + 1,
            k,
            2 * k - 2,
            k - 1,
            k + 1,
            k + 1,
            2 * k - 2,
        ]))
        .collect();
    Ok(SpiderTable { k, thin, thick })
}

/// Solver values against the closed forms for both spiders of order `k`.
pub fn check_spiders(k: usize) -> Result<TheoremReport> {
    let table = spider_closed_forms(k)?;
    let mut quantities = BTreeMap::new();
    let mut witnesses = BTreeMap::new();
    let mut checks = Vec::new();
    let mut graphs = Vec::new();
    for (name, family, expected) in [
        ("thin", Family::ThinSpider(k), &table.thin),
        ("thick", Family::ThickSpider(k), &table.thick),
    ] {
        let g = family.build()?;
        for (&kind, &want) in expected {
            let r = number(&g, kind);
            let key = format!("{name}-{kind}");
            checks.push(Check::holds(
                "spider",
                key.clone(),
                r.tau == Some(want),
                format!("expected {want}, got {}", fmt_tau(&r)),
            ));
            quantities.insert(key.clone(), r.tau);
            witnesses.insert(key, r.witness);
        }
        graphs.push(g);
    }
    Ok(TheoremReport::assemble(
        &format!("spiders-{k}"),
        &graphs[0],
        quantities,
        checks,
        || witnesses,
    ))
}

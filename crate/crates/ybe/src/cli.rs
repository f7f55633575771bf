//! Command-line front end. `run` returns the full stdout text or a
//! `CliError` carrying the process exit code:
//!
//! 0 success, 2 unknown group, 3 invalid map or family spec (with the
//! certificate witness), 4 verification failure, 5 search budget exceeded,
//! 1 anything else. `YBE_BUDGET` overrides the enumeration node budget.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};

use crate::brace::build_brace;
use crate::catalog;
use crate::export;
use crate::families::{self, FamilyError, FamilySpec};
use crate::group::{FiniteGroup, GroupError};
use crate::morphism::{
    self, classify_fpf_with_budget, enumerate_fpf_with_budget, is_fpf_abelian, GroupMap, MapError,
    SearchError,
};
use crate::perm::{count_fpf_subgroups_with_budget, regular_subgroup};
use crate::ybe::{closed_form_r, closed_form_r_prime, YbeMap};

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn new(code: i32, message: impl Into<String>) -> Self {
        CliError { code, message: message.into() }
    }
}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> Self {
        let code = match e {
            GroupError::UnknownGroup(_) => 2,
            _ => 1,
        };
        CliError::new(code, e.to_string())
    }
}

impl From<SearchError> for CliError {
    fn from(e: SearchError) -> Self {
        CliError::new(5, e.to_string())
    }
}

impl From<MapError> for CliError {
    fn from(e: MapError) -> Self {
        CliError::new(3, format!("invalid psi: {e}"))
    }
}

impl From<FamilyError> for CliError {
    fn from(e: FamilyError) -> Self {
        CliError::new(3, format!("invalid family spec: {e}"))
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "ybe",
    about = "Set-theoretic Yang-Baxter solutions from fixed-point-free abelian endomorphisms",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
    Matrix,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the group catalog or show one group as JSON
    Groups {
        #[command(subcommand)]
        action: GroupsAction,
    },
    /// Enumerate fixed-point-free abelian endomorphisms
    Fpf {
        group: String,
        /// Group the maps into brace-equivalence orbits and subgroup classes
        #[arg(long)]
        classify: bool,
        /// Emit JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Print the solution attached to a map
    Solve {
        group: String,
        /// trivial | alphaI/betaI/gammaI/deltaI | tau:<cycles> | m:i,j |
        /// orbit:K | images:csv | K (orbit index)
        psi: String,
        /// Print the inverse solution instead
        #[arg(long)]
        prime: bool,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Run every defining check for one map, all maps, or a solution file
    Verify {
        group: String,
        /// Same selectors as `solve`; omit (or pass --all) for every map
        psi: Option<String>,
        #[arg(long)]
        all: bool,
        /// Verify a solution JSON file instead of a map
        #[arg(long)]
        solution: Option<PathBuf>,
    },
    /// Build a map (and, where available, its closed-form solution) from the
    /// named families
    Families {
        /// dihedral-alpha | dihedral-beta | dihedral-gamma | dihedral-delta |
        /// symmetric-tau | metacyclic-ij | alternating-square | trivial
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        i: Option<usize>,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
        #[arg(long)]
        j: Option<usize>,
        /// Involution in cycle notation, e.g. "(01)(23)" or "e"
        #[arg(long)]
        tau: Option<String>,
        /// Carrier group for the trivial family
        #[arg(long)]
        group: Option<String>,
        #[arg(long)]
        prime: bool,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Map, orbit and regular-subgroup counts plus coverage arithmetic
    Counts { group: String },
}

#[derive(Debug, Subcommand)]
pub enum GroupsAction {
    List,
    Show { name: String },
}

fn budget() -> Result<u64, CliError> {
    match std::env::var("YBE_BUDGET") {
        Ok(text) => text
            .trim()
            .parse::<u64>()
            .map_err(|_| CliError::new(1, format!("YBE_BUDGET must be an integer, got {text:?}"))),
        Err(_) => Ok(morphism::DEFAULT_NODE_BUDGET),
    }
}

fn bad_psi(message: impl Into<String>) -> CliError {
    CliError::new(3, format!("invalid psi: {}", message.into()))
}

/// Family parameter n recovered from a catalog name like D8, S5, A4.
fn name_parameter(group: &FiniteGroup, prefix: char) -> Result<usize, CliError> {
    group
        .name()
        .strip_prefix(prefix)
        .and_then(|rest| rest.parse().ok())
        .ok_or_else(|| {
            bad_psi(format!(
                "selector needs a {prefix}<n> group, got {}",
                group.name()
            ))
        })
}

fn metacyclic_parameters(group: &FiniteGroup) -> Result<(usize, usize), CliError> {
    group
        .name()
        .strip_prefix('M')
        .and_then(|rest| rest.split_once('_'))
        .and_then(|(p, q)| Some((p.parse().ok()?, q.parse().ok()?)))
        .ok_or_else(|| bad_psi(format!("selector needs an Mp_q group, got {}", group.name())))
}

/// "(01)(23)" or "e" to one-line form on n points; cycles must be disjoint.
fn parse_cycles(text: &str, n: usize) -> Result<Vec<usize>, CliError> {
    let mut perm: Vec<usize> = (0..n).collect();
    if text == "e" {
        return Ok(perm);
    }
    let bad = || bad_psi(format!("cannot parse cycles {text:?}"));
    let mut chars = text.chars();
    let mut touched = vec![false; n];
    loop {
        match chars.next() {
            None => return Ok(perm),
            Some('(') => {}
            Some(_) => return Err(bad()),
        }
        let mut cycle = Vec::new();
        loop {
            match chars.next() {
                Some(')') => break,
                Some(d) if d.is_ascii_digit() => cycle.push(d as usize - '0' as usize),
                _ => return Err(bad()),
            }
        }
        if cycle.len() < 2 || cycle.iter().any(|&x| x >= n) {
            return Err(bad());
        }
        for w in 0..cycle.len() {
            let from = cycle[w];
            if touched[from] {
                return Err(bad_psi(format!("cycles in {text:?} are not disjoint")));
            }
            touched[from] = true;
            perm[from] = cycle[(w + 1) % cycle.len()];
        }
    }
}

fn family_index(selector: &str, stem: &str) -> Option<usize> {
    selector.strip_prefix(stem)?.parse().ok()
}

/// Resolve a selector to a certified map on the given carrier.
fn parse_psi(
    group: &Arc<FiniteGroup>,
    selector: &str,
    budget: u64,
) -> Result<GroupMap, CliError> {
    let images = if selector == "trivial" {
        return Ok(GroupMap::trivial(group));
    } else if let Some(rest) = selector.strip_prefix("images:") {
        rest.split(',')
            .map(|x| x.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| bad_psi(format!("cannot parse image vector {rest:?}")))?
    } else if let Some(rest) = selector.strip_prefix("orbit:").or_else(|| {
        selector.chars().all(|c| c.is_ascii_digit()).then_some(selector)
    }) {
        let k: usize = rest
            .parse()
            .map_err(|_| bad_psi(format!("cannot parse orbit index {rest:?}")))?;
        let class = classify_fpf_with_budget(group, budget)?;
        let orbit = class
            .brace_orbits
            .get(k)
            .ok_or_else(|| bad_psi(format!("orbit {k} out of range (found {})", class.brace_orbits.len())))?;
        class.all_maps[orbit[0]].images()
    } else if let Some(rest) = selector.strip_prefix("tau:") {
        let n = name_parameter(group, 'S')?;
        let tau = parse_cycles(rest, n)?;
        families::symmetric_fpf(n, &tau)?.images()
    } else if let Some(rest) = selector.strip_prefix("m:") {
        let (p, q) = metacyclic_parameters(group)?;
        let (i, j) = rest
            .split_once(',')
            .and_then(|(i, j)| Some((i.trim().parse().ok()?, j.trim().parse().ok()?)))
            .ok_or_else(|| bad_psi(format!("selector m:{rest} wants m:i,j")))?;
        families::metacyclic_fpf(p, q, i, j)?.images()
    } else if let Some((stem, ctor)) = [
        ("alpha", FamilySpec::DihedralAlpha { n: 0, i: 0 }),
        ("beta", FamilySpec::DihedralBeta { n: 0, i: 0 }),
        ("gamma", FamilySpec::DihedralGamma { n: 0, i: 0 }),
        ("delta", FamilySpec::DihedralDelta { n: 0, i: 0 }),
    ]
    .into_iter()
    .find(|(stem, _)| family_index(selector, stem).is_some())
    {
        let n = name_parameter(group, 'D')?;
        let i = family_index(selector, stem).unwrap();
        let spec = match ctor {
            FamilySpec::DihedralAlpha { .. } => FamilySpec::DihedralAlpha { n, i },
            FamilySpec::DihedralBeta { .. } => FamilySpec::DihedralBeta { n, i },
            FamilySpec::DihedralGamma { .. } => FamilySpec::DihedralGamma { n, i },
            _ => FamilySpec::DihedralDelta { n, i },
        };
        families::family_map(&spec)?.images()
    } else {
        return Err(bad_psi(format!("unrecognized selector {selector:?}")));
    };
    certify(GroupMap::endomorphism(group, images)?)
}

/// Reject maps that are not fixed-point-free abelian, naming the witness.
fn certify(psi: GroupMap) -> Result<GroupMap, CliError> {
    let cert = is_fpf_abelian(&psi);
    if let Some(g) = cert.fixed_point_witness {
        return Err(bad_psi(format!(
            "psi fixes {} (not fixed-point-free)",
            psi.source().label(g)
        )));
    }
    if let Some((g, h)) = cert.abelian_witness {
        let s = psi.source();
        return Err(bad_psi(format!(
            "image elements {} and {} do not commute (image not abelian)",
            s.label(g),
            s.label(h)
        )));
    }
    Ok(psi)
}

fn generator_images(psi: &GroupMap) -> String {
    let g = psi.source();
    g.generators()
        .iter()
        .map(|&x| format!("{}->{}", g.label(x), g.label(psi.apply(x))))
        .collect::<Vec<_>>()
        .join(" ")
}

fn render_solution(
    solution: &YbeMap,
    psi: Option<&GroupMap>,
    format: Format,
) -> Result<String, CliError> {
    let text = match format {
        Format::Table => export::render_table(solution),
        Format::Csv => export::render_csv(solution),
        Format::Json => {
            let json = export::solution_to_json(solution, psi);
            serde_json::to_string_pretty(&json)
                .map_err(|e| CliError::new(1, e.to_string()))?
                + "\n"
        }
        Format::Matrix => {
            let json = export::export_rmatrix(solution);
            serde_json::to_string_pretty(&json)
                .map_err(|e| CliError::new(1, e.to_string()))?
                + "\n"
        }
    };
    Ok(text)
}

fn cmd_groups(action: &GroupsAction) -> Result<String, CliError> {
    match action {
        GroupsAction::List => Ok(catalog::catalog_lines().join("\n") + "\n"),
        GroupsAction::Show { name } => {
            let group = catalog::group_by_name(name)?;
            let json = export::group_to_json(&group);
            Ok(serde_json::to_string_pretty(&json)
                .map_err(|e| CliError::new(1, e.to_string()))?
                + "\n")
        }
    }
}

fn cmd_fpf(name: &str, classify: bool, json: bool) -> Result<String, CliError> {
    let group = catalog::group_by_name(name)?;
    let budget = budget()?;
    if classify {
        let class = classify_fpf_with_budget(&group, budget)?;
        if json {
            let payload = export::classification_to_json(&group, &class);
            return Ok(serde_json::to_string_pretty(&payload)
                .map_err(|e| CliError::new(1, e.to_string()))?
                + "\n");
        }
        let mut out = format!(
            "{}: {} fixed-point-free abelian endomorphisms, {} brace orbits, {} subgroup classes\n",
            group.name(),
            class.all_maps.len(),
            class.brace_orbits.len(),
            class.subgroup_classes.len()
        );
        for (k, orbit) in class.brace_orbits.iter().enumerate() {
            let rep = &class.all_maps[orbit[0]];
            let _ = writeln!(
                out,
                "orbit {k}: size {} representative {} members {:?}",
                orbit.len(),
                generator_images(rep),
                orbit
            );
        }
        for (k, members) in class.subgroup_classes.iter().enumerate() {
            let _ = writeln!(out, "subgroup class {k}: members {:?}", members);
        }
        return Ok(out);
    }
    let maps = enumerate_fpf_with_budget(&group, budget)?;
    if json {
        let payload: Vec<export::MapJson> = maps.iter().map(export::map_to_json).collect();
        return Ok(serde_json::to_string_pretty(&payload)
            .map_err(|e| CliError::new(1, e.to_string()))?
            + "\n");
    }
    let mut out = format!(
        "{}: {} fixed-point-free abelian endomorphisms\n",
        group.name(),
        maps.len()
    );
    for (k, psi) in maps.iter().enumerate() {
        let _ = writeln!(out, "{k}: images {:?}  {}", psi.images(), generator_images(psi));
    }
    Ok(out)
}

fn cmd_solve(name: &str, selector: &str, prime: bool, format: Format) -> Result<String, CliError> {
    let group = catalog::group_by_name(name)?;
    let psi = parse_psi(&group, selector, budget()?)?;
    let solution = if prime {
        closed_form_r_prime(&psi)
    } else {
        closed_form_r(&psi)
    }
    .map_err(|e| CliError::new(1, e.to_string()))?;
    render_solution(&solution, Some(&psi), format)
}

/// One named check line; returns whether the check passed.
fn check_line(out: &mut String, name: &str, failure: Option<String>) -> bool {
    match failure {
        None => {
            let _ = writeln!(out, "  {name:<18} ok");
            true
        }
        Some(why) => {
            let _ = writeln!(out, "  {name:<18} FAIL {why}");
            false
        }
    }
}

fn label_pair(g: &FiniteGroup, (a, b): (usize, usize)) -> String {
    format!("({},{})", g.label(a), g.label(b))
}

fn verify_one_map(group: &Arc<FiniteGroup>, psi: &GroupMap, out: &mut String) -> bool {
    let g = group.as_ref();
    let r = closed_form_r(psi).expect("certified map");
    let rp = closed_form_r_prime(psi).expect("certified map");
    let braid = |target: &YbeMap| {
        target.braid_counterexample().map(|(x, y, z)| {
            format!(
                "at ({},{},{})",
                g.label(x),
                g.label(y),
                g.label(z)
            )
        })
    };
    let nondeg = |target: &YbeMap| {
        target.nondegeneracy_counterexample().map(|(side, x)| {
            format!("component {side} not bijective at {}", g.label(x))
        })
    };
    let mut ok = true;
    ok &= check_line(out, "braid R", braid(&r));
    ok &= check_line(out, "braid R'", braid(&rp));
    ok &= check_line(out, "non-degeneracy R", nondeg(&r));
    ok &= check_line(out, "non-degeneracy R'", nondeg(&rp));

    let mut inverse_failure = None;
    'scan: for a in 0..g.order() {
        for b in 0..g.order() {
            let (x, y) = r.apply(a, b);
            let (p, q) = rp.apply(a, b);
            if rp.apply(x, y) != (a, b) || r.apply(p, q) != (a, b) {
                inverse_failure = Some(format!("at {}", label_pair(g, (a, b))));
                break 'scan;
            }
        }
    }
    ok &= check_line(out, "inverse pair", inverse_failure);

    let brace = build_brace(group, psi);
    ok &= check_line(
        out,
        "brace axioms",
        brace.as_ref().err().map(|e| e.to_string()),
    );
    let phi_failure = match &brace {
        Ok(b) => b.phi_isomorphism().err().map(|e| e.to_string()),
        Err(_) => Some("skipped (no brace)".to_string()),
    };
    ok &= check_line(out, "phi isomorphism", phi_failure);

    match regular_subgroup(group, psi) {
        Ok(sub) => {
            ok &= check_line(
                out,
                "regularity",
                (!sub.is_regular()).then(|| "subgroup is not regular".to_string()),
            );
            ok &= check_line(
                out,
                "G-stability",
                (!sub.is_g_stable()).then(|| "subgroup is not closed under conjugation".to_string()),
            );
        }
        Err(e) => {
            ok &= check_line(out, "regularity", Some(e.to_string()));
            ok &= check_line(out, "G-stability", Some("skipped (no subgroup)".to_string()));
        }
    }
    ok
}

fn cmd_verify(
    name: &str,
    selector: Option<&str>,
    all: bool,
    solution: Option<&PathBuf>,
) -> Result<String, CliError> {
    let group = catalog::group_by_name(name)?;
    let mut out = String::new();

    if let Some(path) = solution {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::new(1, format!("cannot read {}: {e}", path.display())))?;
        let json: export::SolutionJson = serde_json::from_str(&text)
            .map_err(|e| CliError::new(1, format!("cannot parse {}: {e}", path.display())))?;
        let imported = export::solution_from_json(&json, &group)
            .map_err(|e| CliError::new(1, format!("cannot import {}: {e}", path.display())))?;
        let _ = writeln!(out, "solution file {} over {}", path.display(), group.name());
        let mut ok = true;
        ok &= check_line(
            &mut out,
            "braid",
            imported.braid_counterexample().map(|(x, y, z)| {
                format!("at ({},{},{})", group.label(x), group.label(y), group.label(z))
            }),
        );
        ok &= check_line(
            &mut out,
            "non-degeneracy",
            imported.nondegeneracy_counterexample().map(|(side, x)| {
                format!("component {side} not bijective at {}", group.label(x))
            }),
        );
        let _ = writeln!(out, "  involutive          {}", imported.is_involutive());
        if !ok {
            return Err(CliError::new(4, out));
        }
        let _ = writeln!(out, "all checks passed");
        return Ok(out);
    }

    let maps = match (selector, all) {
        (Some(sel), false) => vec![parse_psi(&group, sel, budget()?)?],
        _ => enumerate_fpf_with_budget(&group, budget()?)?,
    };
    let mut ok = true;
    for psi in &maps {
        let _ = writeln!(out, "psi {} images {:?}", generator_images(psi), psi.images());
        ok &= verify_one_map(&group, psi, &mut out);
    }
    if !ok {
        return Err(CliError::new(4, out));
    }
    let _ = writeln!(
        out,
        "all checks passed for {} map{}",
        maps.len(),
        if maps.len() == 1 { "" } else { "s" }
    );
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn cmd_families(
    family: &str,
    n: Option<usize>,
    i: Option<usize>,
    p: Option<usize>,
    q: Option<usize>,
    j: Option<usize>,
    tau: Option<&str>,
    group: Option<&str>,
    prime: bool,
    format: Format,
) -> Result<String, CliError> {
    let need = |value: Option<usize>, flag: &str| {
        value.ok_or_else(|| CliError::new(3, format!("family {family} requires {flag}")))
    };
    let spec = match family {
        "dihedral-alpha" => FamilySpec::DihedralAlpha { n: need(n, "--n")?, i: i.unwrap_or(0) },
        "dihedral-beta" => FamilySpec::DihedralBeta { n: need(n, "--n")?, i: i.unwrap_or(0) },
        "dihedral-gamma" => FamilySpec::DihedralGamma { n: need(n, "--n")?, i: i.unwrap_or(0) },
        "dihedral-delta" => FamilySpec::DihedralDelta { n: need(n, "--n")?, i: i.unwrap_or(0) },
        "symmetric-tau" => {
            let n = need(n, "--n")?;
            let text = tau.ok_or_else(|| CliError::new(3, "family symmetric-tau requires --tau"))?;
            FamilySpec::SymmetricTau { n, tau: parse_cycles(text, n)? }
        }
        "metacyclic-ij" => FamilySpec::MetacyclicIj {
            p: need(p, "--p")?,
            q: need(q, "--q")?,
            i: i.unwrap_or(0),
            j: need(j, "--j")?,
        },
        "alternating-square" => FamilySpec::AlternatingSquare,
        "trivial" => FamilySpec::Trivial {
            group: group
                .ok_or_else(|| CliError::new(3, "family trivial requires --group"))?
                .to_string(),
        },
        other => return Err(CliError::new(3, format!("unknown family {other:?}"))),
    };
    let map = families::family_map(&spec)?;
    let mut out = format!(
        "{} on {}: {}  images {:?}\n",
        family,
        map.source().name(),
        generator_images(&map),
        map.images()
    );
    let solution = if prime {
        families::family_solution_prime(&spec)
    } else {
        families::family_solution(&spec)
    };
    match solution {
        Ok(r) => out.push_str(&render_solution(&r, Some(&map), format)?),
        Err(FamilyError::UnsupportedFamily) => {
            let _ = writeln!(
                out,
                "no closed-form table for this member; use `solve {} images:...`",
                map.source().name()
            );
        }
        Err(e) => return Err(e.into()),
    }
    Ok(out)
}

fn cmd_counts(name: &str) -> Result<String, CliError> {
    let group = catalog::group_by_name(name)?;
    let budget = budget()?;
    let class = classify_fpf_with_budget(&group, budget)?;
    let subgroups = count_fpf_subgroups_with_budget(&group, budget)?;
    let mut out = format!("{}: order {}\n", group.name(), group.order());
    let _ = writeln!(out, "fpf maps                  {}", class.all_maps.len());
    let _ = writeln!(out, "brace orbits              {}", class.brace_orbits.len());
    let _ = writeln!(out, "subgroup classes          {}", class.subgroup_classes.len());
    let _ = writeln!(out, "regular subgroups (N, N') {subgroups}");
    if let Some(n) = group
        .name()
        .strip_prefix('D')
        .and_then(|rest| rest.parse::<usize>().ok())
    {
        let _ = writeln!(out, "subgroup count formula    {}", families::s_formula(n));
        let _ = writeln!(out, "solution count formula    {}", families::r_formula(n));
    }
    match families::coverage_report(&group) {
        Ok(report) => {
            let _ = writeln!(
                out,
                "family coverage           {}",
                if report.complete { "complete" } else { "incomplete" }
            );
        }
        Err(FamilyError::UnsupportedFamily) => {
            let _ = writeln!(out, "family coverage           not characterized");
        }
        Err(e) => return Err(e.into()),
    }
    Ok(out)
}

pub fn run(cli: &Cli) -> Result<String, CliError> {
    match &cli.command {
        Command::Groups { action } => cmd_groups(action),
        Command::Fpf { group, classify, json } => cmd_fpf(group, *classify, *json),
        Command::Solve { group, psi, prime, format } => cmd_solve(group, psi, *prime, *format),
        Command::Verify { group, psi, all, solution } => {
            cmd_verify(group, psi.as_deref(), *all, solution.as_ref())
        }
        Command::Families {
            family,
            n,
            i,
            p,
            q,
            j,
            tau,
            group,
            prime,
            format,
        } => cmd_families(
            family,
            *n,
            *i,
            *p,
            *q,
            *j,
            tau.as_deref(),
            group.as_deref(),
            *prime,
            *format,
        ),
        Command::Counts { group } => cmd_counts(group),
    }
}

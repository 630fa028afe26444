//! One handler per subcommand. Each returns the process exit code:
//! 0 for success, 1 when a verification found violations or mismatches.
//! Usage problems and cap overruns surface as errors and are mapped to
//! exit codes by `main`.

use crate::input;
use bipoly::BiFactorization;
use bruhat_core::coxgroup::{CoxGroup, Diagram, ReflectionOrdering};
use bruhat_core::paths::{
    enumerate_flipclasses, rtilde_dyer, rtilde_recurrence, Flipclass, RtildeTable,
};
use bruhat_core::tsp::TimeSupport;
use bruhat_core::verifier::{
    compare_to_paper, congruence_check, default_roster, extended_roster, five_crown_search,
    flipclass_digest, parse_roster, run_gamma, sweep_cached, verify_refinement, write_congruence_json,
    write_gamma_json, write_table_csv, write_violations_json, Reductions, ReportMeta, RosterRow,
    RunConfig, StatsRow,
};
use bruhat_core::{Caps, Result};
use serde::Serialize;
use std::collections::BTreeSet;
use std::path::{Path, PathBuf};

/// Output format for stdout.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// R-tilde evaluation strategy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Method {
    /// Length-descent recurrence (fast, ordering-free).
    Recurrence,
    /// Sum over increasing paths in a reflection ordering.
    Dyer,
}

/// Options shared by every subcommand.
pub struct Ctx {
    pub caps: Caps,
    pub format: Format,
    pub ordering_spec: String,
    pub cache: Option<PathBuf>,
    pub meta: ReportMeta,
}

impl Ctx {
    fn group(&self, name: &str) -> Result<CoxGroup> {
        CoxGroup::from_name(name, &self.caps)
    }

    fn ordering(&self, g: &CoxGroup) -> Result<ReflectionOrdering> {
        input::resolve_ordering(g, &self.ordering_spec)
    }

    fn print_json(&self, value: &impl Serialize) -> Result<()> {
        println!("{}", serde_json::to_string_pretty(value)?);
        Ok(())
    }
}

pub fn group_info(ctx: &Ctx, group: &str) -> Result<i32> {
    let g = ctx.group(group)?;
    #[derive(Serialize)]
    struct Info<'a> {
        #[serde(flatten)]
        meta: &'a ReportMeta,
        diagram: String,
        rank: usize,
        crystallographic: bool,
        elements: usize,
        reflections: usize,
        w0_length: u32,
        w0: String,
        w0_word: String,
    }
    let info = Info {
        meta: &ctx.meta,
        diagram: g.diagram().to_string(),
        rank: g.rank(),
        crystallographic: g.diagram().is_crystallographic(),
        elements: g.size(),
        reflections: g.reflection_count(),
        w0_length: g.length(g.w0()),
        w0: input::fmt_elem(&g, g.w0()),
        w0_word: g.display_word(g.w0()),
    };
    match ctx.format {
        Format::Json => ctx.print_json(&info)?,
        _ => {
            println!("diagram          {}", info.diagram);
            println!("rank             {}", info.rank);
            println!("crystallographic {}", info.crystallographic);
            println!("elements         {}", info.elements);
            println!("reflections      {}", info.reflections);
            println!("w0 length        {}", info.w0_length);
            println!("w0               {}", info.w0);
            println!("w0 word          {}", info.w0_word);
        }
    }
    Ok(0)
}

pub fn rtilde(ctx: &Ctx, group: &str, u: &str, v: &str, method: Method) -> Result<i32> {
    let g = ctx.group(group)?;
    let u = input::parse_element(&g, u)?;
    let v = input::parse_element(&g, v)?;
    let poly = match method {
        Method::Recurrence => rtilde_recurrence(&g, u, v, &mut RtildeTable::new()),
        Method::Dyer => rtilde_dyer(&g, &ctx.ordering(&g)?, u, v, &ctx.caps)?,
    };
    match ctx.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Out<'a> {
                #[serde(flatten)]
                meta: &'a ReportMeta,
                group: String,
                u: String,
                v: String,
                method: &'static str,
                rtilde: String,
            }
            ctx.print_json(&Out {
                meta: &ctx.meta,
                group: g.diagram().to_string(),
                u: input::fmt_elem(&g, u),
                v: input::fmt_elem(&g, v),
                method: match method {
                    Method::Recurrence => "recurrence",
                    Method::Dyer => "dyer",
                },
                rtilde: poly.to_string(),
            })?;
        }
        _ => println!("{poly}"),
    }
    Ok(0)
}

/// One enumerated flipclass, as printed.
#[derive(Serialize)]
struct ClassRow {
    end: String,
    paths: usize,
    c: u64,
    span: usize,
    dihedral: bool,
    digest: String,
    dpoly: String,
}

fn class_row(g: &CoxGroup, ordering: &ReflectionOrdering, f: &Flipclass) -> ClassRow {
    ClassRow {
        end: input::fmt_elem(g, f.v()),
        paths: f.len(),
        c: f.count_increasing(|t| ordering.position(t)),
        span: f.span_dim(g),
        dihedral: f.is_dihedral(g),
        digest: flipclass_digest(g, f),
        dpoly: TimeSupport::from_flipclass(g, f)
            .valence_polynomial()
            .to_string(),
    }
}

pub fn flipclasses(
    ctx: &Ctx,
    group: &str,
    u: &str,
    h: usize,
    end: Option<&str>,
) -> Result<i32> {
    let g = ctx.group(group)?;
    let ordering = ctx.ordering(&g)?;
    let u = input::parse_element(&g, u)?;
    let end = end.map(|t| input::parse_element(&g, t)).transpose()?;
    let classes = enumerate_flipclasses(&g, &ordering, u, h, &ctx.caps, |v| {
        end.is_none_or(|t| v == t)
    })?;
    let rows: Vec<ClassRow> = classes.iter().map(|f| class_row(&g, &ordering, f)).collect();
    match ctx.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Out<'a> {
                #[serde(flatten)]
                meta: &'a ReportMeta,
                group: String,
                u: String,
                h: usize,
                flipclasses: &'a [ClassRow],
            }
            ctx.print_json(&Out {
                meta: &ctx.meta,
                group: g.diagram().to_string(),
                u: input::fmt_elem(&g, u),
                h,
                flipclasses: &rows,
            })?;
        }
        Format::Csv => print_csv(&rows)?,
        Format::Text => {
            println!(
                "{} flipclasses with {} steps from {} in {}",
                rows.len(),
                h,
                input::fmt_elem(&g, u),
                g.diagram()
            );
            let w = rows.iter().map(|r| r.end.len()).max().unwrap_or(3).max(3);
            println!(
                "{:<w$}  {:>6}  {:>6}  {:>4}  {:<8}  {:<20}  dpoly",
                "end", "paths", "c", "span", "dihedral", "digest"
            );
            for r in &rows {
                println!(
                    "{:<w$}  {:>6}  {:>6}  {:>4}  {:<8}  {:<20}  {}",
                    r.end, r.paths, r.c, r.span, r.dihedral, r.digest, r.dpoly
                );
            }
        }
    }
    Ok(0)
}

fn fmt_factorization(f: &BiFactorization) -> String {
    let mut parts = Vec::new();
    let content = f.content.to_string();
    if content != "1" {
        parts.push(content);
    }
    for (p, e) in &f.factors {
        parts.push(if *e == 1 {
            format!("({p})")
        } else {
            format!("({p})^{e}")
        });
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" * ")
    }
}

pub fn valence(ctx: &Ctx, group: &str, u: &str, v: &str, h: usize) -> Result<i32> {
    let g = ctx.group(group)?;
    let ordering = ctx.ordering(&g)?;
    let u = input::parse_element(&g, u)?;
    let v = input::parse_element(&g, v)?;
    let classes = enumerate_flipclasses(&g, &ordering, u, h, &ctx.caps, |t| t == v)?;
    #[derive(Serialize)]
    struct Row {
        digest: String,
        paths: usize,
        c: u64,
        dpoly: String,
        factored: String,
        irreducible: bool,
    }
    let mut rows = Vec::new();
    for f in &classes {
        let dpoly = TimeSupport::from_flipclass(&g, f).valence_polynomial();
        let factorization = dpoly.factor_with_caps(&ctx.caps.factor)?;
        let irreducible = factorization.content.to_string() == "1"
            && factorization.factors.len() == 1
            && factorization.factors[0].1 == 1;
        rows.push(Row {
            digest: flipclass_digest(&g, f),
            paths: f.len(),
            c: f.count_increasing(|t| ordering.position(t)),
            dpoly: dpoly.to_string(),
            factored: fmt_factorization(&factorization),
            irreducible,
        });
    }
    match ctx.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Out<'a> {
                #[serde(flatten)]
                meta: &'a ReportMeta,
                group: String,
                u: String,
                v: String,
                h: usize,
                flipclasses: &'a [Row],
            }
            ctx.print_json(&Out {
                meta: &ctx.meta,
                group: g.diagram().to_string(),
                u: input::fmt_elem(&g, u),
                v: input::fmt_elem(&g, v),
                h,
                flipclasses: &rows,
            })?;
        }
        _ => {
            for r in &rows {
                println!(
                    "{}  paths {}  c {}  {}  =  {}{}",
                    r.digest,
                    r.paths,
                    r.c,
                    r.dpoly,
                    r.factored,
                    if r.irreducible { "  (irreducible)" } else { "" }
                );
            }
            if rows.is_empty() {
                println!("no flipclasses");
            }
        }
    }
    Ok(0)
}

pub fn sweep(ctx: &Ctx, group: &str, h: usize, no_reductions: bool) -> Result<i32> {
    let g = ctx.group(group)?;
    let ordering = ctx.ordering(&g)?;
    let gen_order: Vec<usize> = (0..g.rank()).collect();
    let reductions = if no_reductions {
        Reductions::none()
    } else {
        Reductions::all()
    };
    let out = sweep_cached(
        &g,
        &ordering,
        &gen_order,
        h,
        &ctx.caps,
        reductions,
        ctx.cache.as_deref(),
    )?;
    let distinct: BTreeSet<&str> = out.items.iter().map(|i| i.dpoly.as_str()).collect();
    #[derive(Serialize)]
    struct SweepRow<'a> {
        u: String,
        v: String,
        paths: u64,
        c: u64,
        digest: &'a str,
        dpoly: &'a str,
    }
    let rows: Vec<SweepRow> = out
        .items
        .iter()
        .map(|i| SweepRow {
            u: input::fmt_elem(&g, i.u),
            v: input::fmt_elem(&g, i.v),
            paths: i.paths,
            c: i.c,
            digest: &i.digest,
            dpoly: &i.dpoly,
        })
        .collect();
    match ctx.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Out<'a> {
                #[serde(flatten)]
                meta: &'a ReportMeta,
                group: String,
                h: usize,
                reduced: bool,
                starts: usize,
                flipclasses: usize,
                distinct_valence_polynomials: usize,
                items: &'a [SweepRow<'a>],
            }
            ctx.print_json(&Out {
                meta: &ctx.meta,
                group: g.diagram().to_string(),
                h,
                reduced: !no_reductions,
                starts: out.starts,
                flipclasses: out.items.len(),
                distinct_valence_polynomials: distinct.len(),
                items: &rows,
            })?;
        }
        Format::Csv => print_csv(&rows)?,
        Format::Text => {
            println!("group {}  h {}", g.diagram(), h);
            println!("starts {}", out.starts);
            println!("flipclasses {}", out.items.len());
            println!("distinct valence polynomials {}", distinct.len());
        }
    }
    Ok(0)
}

fn resolve_roster(rows: Option<&str>, extended: bool) -> Result<Vec<RosterRow>> {
    match rows {
        Some(spec) => parse_roster(spec),
        None if extended => Ok(extended_roster()),
        None => Ok(default_roster()),
    }
}

/// Large rows get an up-front warning so a long silence is expected.
fn warn_heavy_rows(roster: &[RosterRow]) {
    for row in roster {
        let Ok(d) = Diagram::parse(&row.diagram) else {
            continue;
        };
        let name = d.to_string();
        let heavy =
            d.rank() >= 5 || name.starts_with('F') || name.starts_with('E') || name == "H4";
        if heavy {
            eprintln!(
                "note: {}:{} is a large sweep and may take minutes to hours; \
                 --cache makes reruns resumable",
                row.diagram, row.h
            );
        }
    }
}

fn stats_line(row: &StatsRow) -> String {
    format!(
        "{} h={}: elements {}, flipclasses {}, dpolys {}, irreducible {}, new {}",
        row.group,
        row.h,
        row.elements_to_check,
        row.flipclasses,
        row.valence_polynomials,
        row.irreducible_valence_polynomials,
        row.new_irreducible_valence_polynomials
    )
}

fn run_pipeline(ctx: &Ctx, rows: Option<&str>, extended: bool) -> Result<bruhat_core::verifier::RunOutcome> {
    let roster = resolve_roster(rows, extended)?;
    warn_heavy_rows(&roster);
    let mut config = RunConfig::new(roster);
    config.caps = ctx.caps.clone();
    config.cache_dir = ctx.cache.clone();
    run_gamma(&config)
}

pub fn verify(ctx: &Ctx, rows: Option<&str>, extended: bool, out_dir: &Path) -> Result<i32> {
    let outcome = run_pipeline(ctx, rows, extended)?;
    let mut violations = outcome.violations.clone();
    violations.extend(verify_refinement(&outcome.pool));

    write_table_csv(&out_dir.join("table1.csv"), &outcome.stats)?;
    write_gamma_json(&out_dir.join("gamma.json"), &ctx.meta, &outcome.gamma)?;
    write_violations_json(&out_dir.join("violations.json"), &ctx.meta, &violations)?;

    match ctx.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Out<'a> {
                #[serde(flatten)]
                meta: &'a ReportMeta,
                stats: &'a [StatsRow],
                dictionary_keys: usize,
                violations: usize,
                warnings: &'a [String],
                out_dir: String,
            }
            ctx.print_json(&Out {
                meta: &ctx.meta,
                stats: &outcome.stats,
                dictionary_keys: outcome.gamma.len(),
                violations: violations.len(),
                warnings: &outcome.warnings,
                out_dir: out_dir.display().to_string(),
            })?;
        }
        _ => {
            for row in &outcome.stats {
                println!("{}", stats_line(row));
            }
            println!("dictionary keys {}", outcome.gamma.len());
            for w in &outcome.warnings {
                println!("warning: {w}");
            }
            println!("violations {}", violations.len());
            println!(
                "reports written to {} (table1.csv, gamma.json, violations.json)",
                out_dir.display()
            );
        }
    }
    Ok(if violations.is_empty() { 0 } else { 1 })
}

pub fn table1(ctx: &Ctx, rows: Option<&str>, extended: bool, out: &Path) -> Result<i32> {
    let outcome = run_pipeline(ctx, rows, extended)?;
    let mut violations = outcome.violations.clone();
    violations.extend(verify_refinement(&outcome.pool));
    write_table_csv(out, &outcome.stats)?;
    let (mismatches, notes) = compare_to_paper(&outcome.stats);
    match ctx.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Out<'a> {
                #[serde(flatten)]
                meta: &'a ReportMeta,
                stats: &'a [StatsRow],
                mismatches: &'a [String],
                notes: &'a [String],
                violations: usize,
                out: String,
            }
            ctx.print_json(&Out {
                meta: &ctx.meta,
                stats: &outcome.stats,
                mismatches: &mismatches,
                notes: &notes,
                violations: violations.len(),
                out: out.display().to_string(),
            })?;
        }
        _ => {
            for row in &outcome.stats {
                println!("{}", stats_line(row));
            }
            for n in &notes {
                println!("note: {n}");
            }
            for m in &mismatches {
                println!("MISMATCH: {m}");
            }
            for v in &violations {
                println!("VIOLATION: {}", v.note);
            }
            if mismatches.is_empty() && violations.is_empty() {
                println!("all rows match the reference table");
            }
            println!("table written to {}", out.display());
        }
    }
    Ok(if mismatches.is_empty() && violations.is_empty() {
        0
    } else {
        1
    })
}

pub fn congruence(ctx: &Ctx, groups: &str, max_length: u32, out: &Path) -> Result<i32> {
    let mut built = Vec::new();
    for name in groups.split(',') {
        let name = name.trim();
        if !name.is_empty() {
            built.push(ctx.group(name)?);
        }
    }
    let refs: Vec<&CoxGroup> = built.iter().collect();
    let report = congruence_check(&refs, max_length, &ctx.caps)?;
    write_congruence_json(out, &ctx.meta, &report)?;
    match ctx.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Out<'a> {
                #[serde(flatten)]
                meta: &'a ReportMeta,
                #[serde(flatten)]
                report: &'a bruhat_core::verifier::CongruenceReport,
            }
            ctx.print_json(&Out {
                meta: &ctx.meta,
                report: &report,
            })?;
        }
        _ => {
            println!(
                "pool {}  max length {}",
                report.pool.join(", "),
                report.max_length
            );
            println!(
                "congruence modulus q^{}  exact up to length {}",
                report.modulus, report.exact_length_bound
            );
            println!("intervals checked {}", report.intervals_checked);
            println!(
                "buckets {} (nontrivial {})  comparisons {}",
                report.buckets, report.nontrivial_buckets, report.comparisons
            );
            println!("discrepancies {}", report.discrepancies.len());
            println!("report written to {}", out.display());
        }
    }
    Ok(if report.discrepancies.is_empty() { 0 } else { 1 })
}

pub fn crowns(ctx: &Ctx, group: &str) -> Result<i32> {
    let g = ctx.group(group)?;
    let pairs = five_crown_search(&g, &ctx.caps)?;
    match ctx.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Pair {
                u: String,
                v: String,
            }
            #[derive(Serialize)]
            struct Out<'a> {
                #[serde(flatten)]
                meta: &'a ReportMeta,
                group: String,
                count: usize,
                intervals: Vec<Pair>,
            }
            ctx.print_json(&Out {
                meta: &ctx.meta,
                group: g.diagram().to_string(),
                count: pairs.len(),
                intervals: pairs
                    .iter()
                    .map(|&(u, v)| Pair {
                        u: input::fmt_elem(&g, u),
                        v: input::fmt_elem(&g, v),
                    })
                    .collect(),
            })?;
        }
        _ => {
            for &(u, v) in &pairs {
                println!("[{}, {}]", input::fmt_elem(&g, u), input::fmt_elem(&g, v));
            }
            println!("{} 5-crown interval(s) in {}", pairs.len(), g.diagram());
        }
    }
    Ok(0)
}

fn print_csv(rows: &[impl Serialize]) -> Result<()> {
    let mut w = csv::Writer::from_writer(std::io::stdout());
    for row in rows {
        w.serialize(row)
            .map_err(|e| bruhat_core::Error::Io(std::io::Error::other(e)))?;
    }
    w.flush()?;
    Ok(())
}

//! The end-to-end verification pipeline: sweep a roster of (group, gap)
//! rows in order, grow the factor dictionary, accumulate the summary
//! statistics, record violations, and persist state between rows so
//! interrupted runs can resume.

use crate::coxgroup::{CoxGroup, Diagram, ReflectionOrdering};
use crate::verifier::gamma::{GammaTable, GammaValue, Provenance};
use crate::verifier::sweep::{fnv64, sweep_cached, Reductions};
use crate::{Caps, Error, Result};
use bipoly::BiPoly;
use num_traits::One;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::path::PathBuf;

/// One roster row: a group and the path length to sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RosterRow {
    pub diagram: String,
    pub h: usize,
}

impl RosterRow {
    pub fn new(diagram: &str, h: usize) -> Self {
        RosterRow { diagram: diagram.into(), h }
    }
}

/// The desk-scale roster: the summary table's Weyl rows with h ≤ 4, in
/// table order. Row order matters — the table's "new irreducible"
/// column for D4 reads 0 only because B4 precedes it.
pub fn default_roster() -> Vec<RosterRow> {
    [
        ("A1", 1),
        ("A2", 2),
        ("B2", 2),
        ("G2", 2),
        ("A3", 3),
        ("B3", 3),
        ("A4", 4),
        ("B4", 4),
        ("D4", 4),
    ]
    .into_iter()
    .map(|(d, h)| RosterRow::new(d, h))
    .collect()
}

/// The extended roster: adds the F4 row in its table position (after
/// D4). Substantially slower than the default.
pub fn extended_roster() -> Vec<RosterRow> {
    let mut roster = default_roster();
    roster.push(RosterRow::new("F4", 4));
    roster
}

/// Parses a roster spec like `"A1,A2,B2,F4:5"`. Each entry is a diagram
/// name with an optional `:h` suffix; when omitted, `h` defaults to the
/// group's rank (the summary table's convention for its single-row
/// groups).
pub fn parse_roster(spec: &str) -> Result<Vec<RosterRow>> {
    let mut roster = Vec::new();
    for entry in spec.split(',') {
        let entry = entry.trim();
        if entry.is_empty() {
            continue;
        }
        let (name, h) = match entry.split_once(':') {
            Some((name, h)) => {
                let h: usize = h.parse().map_err(|_| {
                    Error::Diagram(format!("bad gap in roster entry '{entry}'"))
                })?;
                (name, h)
            }
            None => {
                let rank = Diagram::parse(entry)?.rank();
                (entry, rank)
            }
        };
        Diagram::parse(name)?;
        if h == 0 {
            return Err(Error::Diagram(format!(
                "roster entry '{entry}' has gap 0"
            )));
        }
        roster.push(RosterRow::new(name, h));
    }
    if roster.is_empty() {
        return Err(Error::Diagram("empty roster".into()));
    }
    Ok(roster)
}

/// Configuration for [`run_gamma`].
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub roster: Vec<RosterRow>,
    pub caps: Caps,
    /// Directory for sweep caches and resumable pipeline state.
    pub cache_dir: Option<PathBuf>,
    pub reductions: Reductions,
    /// Generator order defining the Coxeter element used by the
    /// reductions; `None` means the natural order `0..rank` per group.
    /// When given, it must match the rank of every roster group.
    pub gen_order: Option<Vec<usize>>,
}

impl RunConfig {
    pub fn new(roster: Vec<RosterRow>) -> Self {
        RunConfig {
            roster,
            caps: Caps::default(),
            cache_dir: None,
            reductions: Reductions::all(),
            gen_order: None,
        }
    }
}

/// One row of the summary-statistics table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatsRow {
    #[serde(rename = "type")]
    pub group: String,
    pub h: usize,
    pub elements_to_check: u64,
    pub flipclasses: u64,
    pub valence_polynomials: u64,
    pub irreducible_valence_polynomials: u64,
    pub new_irreducible_valence_polynomials: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    /// A fully-defined valence polynomial evaluated to something other
    /// than the flipclass's increasing-path count.
    GammaMismatch,
    /// Two flipclasses share a valence polynomial but disagree on the
    /// increasing-path count.
    RefinementFailure,
    /// An excluded flipclass has no admitted symmetry image with equal
    /// invariants.
    AntiIsoMismatch,
}

/// A reported counterexample candidate. Never suppressed: at this scale
/// a genuine entry would contradict the refinement theorem.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ViolationRecord {
    pub kind: ViolationKind,
    /// The flipclasses involved (the current one first).
    pub provenance: Vec<Provenance>,
    pub expected: String,
    pub found: String,
    pub note: String,
}

/// A pooled sweep result kept for cross-row refinement checking.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PoolItem {
    pub dpoly: String,
    pub c: u64,
    pub provenance: Provenance,
}

/// Everything a pipeline run produces.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunOutcome {
    pub gamma: GammaTable,
    pub stats: Vec<StatsRow>,
    pub violations: Vec<ViolationRecord>,
    /// Prominent anomalies that are not violations (roots with index
    /// above one, non-integer dictionary values).
    pub warnings: Vec<String>,
    /// All swept flipclasses, for refinement checking across the run.
    pub pool: Vec<PoolItem>,
}

/// Resumable on-disk state: outcome so far plus a config fingerprint
/// and the number of completed roster rows.
#[derive(Serialize, Deserialize)]
struct RunState {
    config_key: String,
    rows_done: usize,
    seen_irreducible: BTreeSet<String>,
    outcome: RunOutcome,
}

fn config_key(config: &RunConfig) -> String {
    let mut desc = String::new();
    for row in &config.roster {
        desc.push_str(&row.diagram);
        desc.push(':');
        desc.push_str(&row.h.to_string());
        desc.push(',');
    }
    desc.push_str(&format!(
        "|r{}{}|g{:?}",
        u8::from(config.reductions.starts),
        u8::from(config.reductions.endpoints),
        config.gen_order
    ));
    format!("{:016x}", fnv64(desc.as_bytes()))
}

/// Canonical factor strings of a valence polynomial, with
/// multiplicities, in canonical factor order. Cached per polynomial:
/// rows repeat the same few polynomials thousands of times.
fn factors_of(
    dpoly: &str,
    caps: &Caps,
    cache: &mut HashMap<String, Vec<(String, u32)>>,
) -> Result<Vec<(String, u32)>> {
    if let Some(hit) = cache.get(dpoly) {
        return Ok(hit.clone());
    }
    let poly: BiPoly = dpoly.parse().map_err(Error::Poly)?;
    let fz = poly.factor_with_caps(&caps.factor)?;
    if !fz.content.is_one() {
        return Err(Error::Element(format!(
            "valence polynomial with non-unit content {}: {dpoly}",
            fz.content
        )));
    }
    let factors: Vec<(String, u32)> = fz
        .factors
        .iter()
        .map(|(f, m)| (f.to_string(), *m))
        .collect();
    cache.insert(dpoly.to_string(), factors.clone());
    Ok(factors)
}

/// Runs the pipeline: for each roster row in order, sweep its
/// flipclasses, then walk them in canonical order updating the
/// dictionary — find the largest divisor `g` of the valence polynomial
/// supported by defined keys (the product of its already-defined
/// irreducible factors, by unique factorization); if everything is
/// defined, check the product equals the increasing-path count, else
/// assign each undefined factor the k-th root of the quotient. Keys are
/// never overwritten. Statistics accumulate per row; "new" counts the
/// row's irreducible valence polynomials not seen in any earlier row.
pub fn run_gamma(config: &RunConfig) -> Result<RunOutcome> {
    let key = config_key(config);
    let state_path = config
        .cache_dir
        .as_ref()
        .map(|d| d.join("gamma_state.json"));

    let mut state = match &state_path {
        Some(p) if p.is_file() => {
            let text = std::fs::read_to_string(p)?;
            match serde_json::from_str::<RunState>(&text) {
                Ok(s) if s.config_key == key && s.rows_done <= config.roster.len() => s,
                _ => fresh_state(&key),
            }
        }
        _ => fresh_state(&key),
    };

    let mut factor_cache: HashMap<String, Vec<(String, u32)>> = HashMap::new();

    for row_idx in state.rows_done..config.roster.len() {
        let row = &config.roster[row_idx];
        let g = CoxGroup::from_name(&row.diagram, &config.caps)?;
        let ordering = ReflectionOrdering::default_for(&g);
        let gen_order: Vec<usize> = match &config.gen_order {
            Some(ord) => {
                if ord.len() != g.rank() {
                    return Err(Error::Ordering(format!(
                        "generator order of length {} for rank-{} group {}",
                        ord.len(),
                        g.rank(),
                        row.diagram
                    )));
                }
                ord.clone()
            }
            None => (0..g.rank()).collect(),
        };

        let swept = sweep_cached(
            &g,
            &ordering,
            &gen_order,
            row.h,
            &config.caps,
            config.reductions,
            config.cache_dir.as_deref(),
        )?;

        let mut row_dpolys: BTreeSet<&str> = BTreeSet::new();
        for item in &swept.items {
            row_dpolys.insert(&item.dpoly);

            let provenance = Provenance {
                group: row.diagram.clone(),
                u: item.u,
                v: item.v,
                h: row.h,
                flipclass: item.digest.clone(),
            };
            let factors = factors_of(&item.dpoly, &config.caps, &mut factor_cache)?;
            let defined: Vec<(&str, u32)> = factors
                .iter()
                .filter(|(f, _)| state.outcome.gamma.is_defined(f))
                .map(|(f, m)| (f.as_str(), *m))
                .collect();
            let undefined: Vec<(&str, u32)> = factors
                .iter()
                .filter(|(f, _)| !state.outcome.gamma.is_defined(f))
                .map(|(f, m)| (f.as_str(), *m))
                .collect();
            let g_value = state
                .outcome
                .gamma
                .eval_product(defined.iter().copied())
                .expect("defined factors must evaluate");

            if undefined.is_empty() {
                if !g_value.eq_integer(item.c) {
                    let mut involved = vec![provenance.clone()];
                    for (f, _) in &factors {
                        if let Some(entry) = state.outcome.gamma.get(f) {
                            involved.push(entry.provenance.clone());
                        }
                    }
                    state.outcome.violations.push(ViolationRecord {
                        kind: ViolationKind::GammaMismatch,
                        provenance: involved,
                        expected: format!("{}", item.c),
                        found: g_value.to_string(),
                        note: format!(
                            "dictionary value of {} disagrees with increasing-path count",
                            item.dpoly
                        ),
                    });
                }
            } else {
                let k: u32 = undefined.iter().map(|(_, m)| m).sum();
                let ratio = GammaValue::from_integer(item.c).div(&g_value)?;
                let value = ratio.root(k)?;
                if k > 1 {
                    state.outcome.warnings.push(format!(
                        "root of index {k} taken while defining {} (from {} {} -> {}, h={})",
                        undefined
                            .iter()
                            .map(|(f, _)| *f)
                            .collect::<Vec<_>>()
                            .join(" ; "),
                        row.diagram,
                        item.u,
                        item.v,
                        row.h
                    ));
                }
                if !value.is_integer() {
                    state.outcome.warnings.push(format!(
                        "non-integer dictionary value {value} assigned (from {} {} -> {}, h={})",
                        row.diagram, item.u, item.v, row.h
                    ));
                }
                for (f, _) in &undefined {
                    let fresh = state.outcome.gamma.define(
                        (*f).to_string(),
                        value.clone(),
                        provenance.clone(),
                    );
                    debug_assert!(fresh, "undefined key was already present");
                }
            }

            state.outcome.pool.push(PoolItem {
                dpoly: item.dpoly.clone(),
                c: item.c,
                provenance,
            });
        }

        let mut irreducible = 0u64;
        let mut new_irreducible = 0u64;
        let mut row_irreducibles: Vec<String> = Vec::new();
        for dpoly in &row_dpolys {
            let factors = factors_of(dpoly, &config.caps, &mut factor_cache)?;
            if factors.len() == 1 && factors[0].1 == 1 {
                irreducible += 1;
                if !state.seen_irreducible.contains(*dpoly) {
                    new_irreducible += 1;
                }
                row_irreducibles.push((*dpoly).to_string());
            }
        }
        state.seen_irreducible.extend(row_irreducibles);

        state.outcome.stats.push(StatsRow {
            group: row.diagram.clone(),
            h: row.h,
            elements_to_check: swept.starts as u64,
            flipclasses: swept.items.len() as u64,
            valence_polynomials: row_dpolys.len() as u64,
            irreducible_valence_polynomials: irreducible,
            new_irreducible_valence_polynomials: new_irreducible,
        });
        state.rows_done = row_idx + 1;

        if let Some(p) = &state_path {
            if let Some(dir) = p.parent() {
                std::fs::create_dir_all(dir)?;
            }
            let text =
                serde_json::to_string(&state)?;
            std::fs::write(p, text)?;
        }
    }

    Ok(state.outcome)
}

fn fresh_state(key: &str) -> RunState {
    RunState {
        config_key: key.to_string(),
        rows_done: 0,
        seen_irreducible: BTreeSet::new(),
        outcome: RunOutcome {
            gamma: GammaTable::new(),
            stats: Vec::new(),
            violations: Vec::new(),
            warnings: Vec::new(),
            pool: Vec::new(),
        },
    }
}

/// Direct check that the valence polynomial refines the
/// increasing-path count: every group of pooled flipclasses sharing a
/// valence polynomial must carry a single count. Independent of the
/// dictionary machinery.
pub fn verify_refinement(pool: &[PoolItem]) -> Vec<ViolationRecord> {
    let mut by_dpoly: BTreeMap<&str, BTreeMap<u64, &Provenance>> = BTreeMap::new();
    for item in pool {
        by_dpoly
            .entry(&item.dpoly)
            .or_default()
            .entry(item.c)
            .or_insert(&item.provenance);
    }
    let mut violations = Vec::new();
    for (dpoly, counts) in by_dpoly {
        if counts.len() > 1 {
            let cs: Vec<String> = counts.keys().map(|c| c.to_string()).collect();
            violations.push(ViolationRecord {
                kind: ViolationKind::RefinementFailure,
                provenance: counts.values().map(|&p| p.clone()).collect(),
                expected: "a single increasing-path count per valence polynomial".into(),
                found: format!("counts {{{}}}", cs.join(", ")),
                note: format!("valence polynomial {dpoly} does not refine the count"),
            });
        }
    }
    violations
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(outcome: &RunOutcome) -> Vec<(String, u64, u64, u64, u64, u64)> {
        outcome
            .stats
            .iter()
            .map(|r| {
                (
                    r.group.clone(),
                    r.elements_to_check,
                    r.flipclasses,
                    r.valence_polynomials,
                    r.irreducible_valence_polynomials,
                    r.new_irreducible_valence_polynomials,
                )
            })
            .collect()
    }

    #[test]
    fn rank_two_rows_match_summary_table() {
        let roster = parse_roster("A1,A2,B2,G2").unwrap();
        let outcome = run_gamma(&RunConfig::new(roster)).unwrap();
        assert_eq!(
            rows(&outcome),
            vec![
                ("A1".to_string(), 1, 1, 1, 1, 1),
                ("A2".to_string(), 1, 1, 1, 0, 0),
                ("B2".to_string(), 3, 8, 1, 0, 0),
                ("G2".to_string(), 5, 25, 1, 0, 0),
            ]
        );
        assert!(outcome.violations.is_empty(), "{:?}", outcome.violations);
        assert!(outcome.warnings.is_empty(), "{:?}", outcome.warnings);
        // The one edge flipclass pins down the first dictionary entry.
        let entry = outcome.gamma.get("x^2 + 2*y").expect("edge key defined");
        assert!(entry.value.eq_integer(1));
        assert_eq!(entry.provenance.group, "A1");
        assert!(verify_refinement(&outcome.pool).is_empty());
    }

    #[test]
    fn rank_three_rows_match_summary_table() {
        let roster = parse_roster("A1,A2,B2,G2,A3,B3").unwrap();
        let outcome = run_gamma(&RunConfig::new(roster)).unwrap();
        let tail = &rows(&outcome)[4..];
        assert_eq!(
            tail,
            &[
                ("A3".to_string(), 3, 15, 4, 3, 3),
                ("B3".to_string(), 16, 216, 8, 7, 4),
            ]
        );
        assert!(outcome.violations.is_empty(), "{:?}", outcome.violations);
        assert!(outcome.warnings.is_empty(), "{:?}", outcome.warnings);
        assert!(verify_refinement(&outcome.pool).is_empty());
        // Every dictionary value is a nonnegative integer here.
        for (key, entry) in outcome.gamma.iter() {
            assert!(entry.value.is_integer(), "{key} -> {}", entry.value);
        }
    }

    #[test]
    fn runs_are_deterministic_across_worker_counts() {
        let roster = parse_roster("A1,A2,B2").unwrap();
        let config = RunConfig::new(roster);
        let a = run_gamma(&config).unwrap();
        let b = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap()
            .install(|| run_gamma(&config))
            .unwrap();
        let ser = |o: &RunOutcome| serde_json::to_string(o).unwrap();
        assert_eq!(ser(&a), ser(&b));
    }

    #[test]
    fn permuting_rows_within_a_gap_preserves_values() {
        let a = run_gamma(&RunConfig::new(parse_roster("A1,A2,B2,G2").unwrap())).unwrap();
        let b = run_gamma(&RunConfig::new(parse_roster("A1,G2,B2,A2").unwrap())).unwrap();
        assert!(a.violations.is_empty() && b.violations.is_empty());
        let entries = |o: &RunOutcome| -> Vec<(String, String)> {
            o.gamma
                .iter()
                .map(|(k, e)| (k.clone(), e.value.to_string()))
                .collect()
        };
        assert_eq!(entries(&a), entries(&b));
        let new_total = |o: &RunOutcome| -> u64 {
            o.stats
                .iter()
                .map(|r| r.new_irreducible_valence_polynomials)
                .sum()
        };
        assert_eq!(new_total(&a), new_total(&b));
    }

    #[test]
    fn state_persists_and_resumes() {
        let dir = tempfile::tempdir().unwrap();
        let roster = parse_roster("A1,A2,B2").unwrap();
        let mut config = RunConfig::new(roster);
        config.cache_dir = Some(dir.path().to_path_buf());
        let cold = run_gamma(&config).unwrap();
        assert!(dir.path().join("gamma_state.json").is_file());
        let warm = run_gamma(&config).unwrap();
        let ser = |o: &RunOutcome| serde_json::to_string(o).unwrap();
        assert_eq!(ser(&cold), ser(&warm));
        // A fresh run without the cache agrees too.
        let nocache = run_gamma(&RunConfig::new(config.roster.clone())).unwrap();
        assert_eq!(ser(&cold), ser(&nocache));
    }

    #[test]
    fn refinement_flags_synthetic_conflicts() {
        let prov = |v: u32| Provenance {
            group: "A1".into(),
            u: 0,
            v,
            h: 1,
            flipclass: format!("n1:{v:016x}"),
        };
        let pool = vec![
            PoolItem { dpoly: "x^2 + 2*y".into(), c: 1, provenance: prov(1) },
            PoolItem { dpoly: "x^2 + 2*y".into(), c: 2, provenance: prov(2) },
            PoolItem { dpoly: "x^2 + 3*y".into(), c: 5, provenance: prov(3) },
        ];
        let violations = verify_refinement(&pool);
        assert_eq!(violations.len(), 1);
        assert_eq!(violations[0].kind, ViolationKind::RefinementFailure);
        assert_eq!(violations[0].provenance.len(), 2);
    }

    #[test]
    fn roster_parsing_handles_defaults_and_errors() {
        let roster = parse_roster("A3,F4:5").unwrap();
        assert_eq!(roster[0], RosterRow::new("A3", 3));
        assert_eq!(roster[1], RosterRow::new("F4", 5));
        assert!(parse_roster("").is_err());
        assert!(parse_roster("Q9").is_err());
        assert!(parse_roster("A3:0").is_err());
        let def = default_roster();
        let b4 = def.iter().position(|r| r.diagram == "B4").unwrap();
        let d4 = def.iter().position(|r| r.diagram == "D4").unwrap();
        assert!(b4 < d4, "table order: B4 precedes D4");
        let ext = extended_roster();
        assert_eq!(ext.len(), def.len() + 1);
        assert_eq!(ext.last().unwrap(), &RosterRow::new("F4", 4));
    }
}

//! Exhaustive, deterministic flipclass sweeps for one (group, gap)
//! pair, parallelized over start elements, with optional disk caching.

use crate::coxgroup::{CoxGroup, ElemId, ReflectionOrdering};
use crate::paths::{enumerate_flipclasses, Flipclass};
use crate::tsp::TimeSupport;
use crate::verifier::reduce::{flipclass_admissible, reduced_start_elements};
use crate::{Caps, Result};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::path::Path as FsPath;

/// FNV-1a 64-bit hash of a byte string; used for compact digests and
/// cache keys.
pub fn fnv64(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

fn canonical_key_string(g: &CoxGroup, f: &Flipclass) -> String {
    let rows: Vec<String> = f
        .canonical_key(g)
        .iter()
        .map(|row| {
            row.iter()
                .map(|id| id.to_string())
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect();
    rows.join(";")
}

/// Compact digest identifying a flipclass: path count plus a hash of
/// its canonical key (the sorted list of vertex sequences).
pub fn flipclass_digest(g: &CoxGroup, f: &Flipclass) -> String {
    format!(
        "n{}:{:016x}",
        f.len(),
        fnv64(canonical_key_string(g, f).as_bytes())
    )
}

/// Which of the two longest-element reductions a sweep applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Reductions {
    /// Restrict start elements to orbit representatives in the lower
    /// half of the length range.
    pub starts: bool,
    /// Drop flipclasses failing the endpoint-side length and
    /// sorting-word filters.
    pub endpoints: bool,
}

impl Reductions {
    pub fn all() -> Self {
        Reductions { starts: true, endpoints: true }
    }

    pub fn none() -> Self {
        Reductions { starts: false, endpoints: false }
    }
}

/// One swept flipclass, reduced to the data the pipeline consumes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepItem {
    pub u: ElemId,
    pub v: ElemId,
    /// Number of paths in the class.
    pub paths: u64,
    /// Content digest (see [`flipclass_digest`]).
    pub digest: String,
    /// Valence polynomial, canonical string form.
    pub dpoly: String,
    /// Number of increasing paths.
    pub c: u64,
}

/// Result of a sweep: how many start elements were examined and the
/// flipclasses found, in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepOutput {
    pub starts: usize,
    pub items: Vec<SweepItem>,
}

/// Enumerates the h-flipclasses of `g`, applying the selected
/// longest-element reductions (both, in the production mode) or
/// sweeping everything when they are off (used by soundness checks).
/// Output order is by canonical key, independent of the worker count.
pub fn sweep(
    g: &CoxGroup,
    ordering: &ReflectionOrdering,
    gen_order: &[usize],
    h: usize,
    caps: &Caps,
    reductions: Reductions,
) -> Result<SweepOutput> {
    let starts: Vec<ElemId> = if reductions.starts {
        reduced_start_elements(g, h, gen_order)
    } else {
        (0..g.size() as ElemId).collect()
    };

    let per_start: Vec<Vec<(String, SweepItem)>> = starts
        .par_iter()
        .map(|&u| -> Result<Vec<(String, SweepItem)>> {
            let classes = enumerate_flipclasses(g, ordering, u, h, caps, |v| {
                !reductions.endpoints || flipclass_admissible(g, gen_order, u, v)
            })?;
            let mut items = Vec::with_capacity(classes.len());
            for f in classes {
                let key = canonical_key_string(g, &f);
                let dpoly = TimeSupport::from_flipclass(g, &f)
                    .valence_polynomial()
                    .to_string();
                let item = SweepItem {
                    u: f.u(),
                    v: f.v(),
                    paths: f.len() as u64,
                    digest: format!("n{}:{:016x}", f.len(), fnv64(key.as_bytes())),
                    dpoly,
                    c: f.count_increasing(|t| ordering.position(t)),
                };
                items.push((key, item));
            }
            Ok(items)
        })
        .collect::<Result<_>>()?;

    let mut keyed: Vec<(String, SweepItem)> = per_start.into_iter().flatten().collect();
    keyed.sort_unstable_by(|a, b| a.0.cmp(&b.0));
    debug_assert!(
        keyed.windows(2).all(|w| w[0].0 < w[1].0),
        "flipclass canonical keys must be distinct"
    );
    Ok(SweepOutput {
        starts: starts.len(),
        items: keyed.into_iter().map(|(_, item)| item).collect(),
    })
}

/// On-disk form of a cached sweep; the key fields guard against stale
/// or foreign files.
#[derive(Serialize, Deserialize)]
struct SweepFile {
    diagram: String,
    h: usize,
    key: String,
    #[serde(flatten)]
    output: SweepOutput,
}

/// Cache fingerprint over everything the sweep result depends on.
fn sweep_fingerprint(
    g: &CoxGroup,
    ordering: &ReflectionOrdering,
    gen_order: &[usize],
    h: usize,
    reductions: Reductions,
) -> String {
    let mut desc = format!(
        "{}|h{}|r{}{}|o",
        g.diagram(),
        h,
        u8::from(reductions.starts),
        u8::from(reductions.endpoints)
    );
    for t in 0..g.reflection_count() {
        desc.push_str(&ordering.position(t as crate::coxgroup::ReflId).to_string());
        desc.push(',');
    }
    desc.push('|');
    for &s in gen_order {
        desc.push_str(&s.to_string());
        desc.push(',');
    }
    format!("{:016x}", fnv64(desc.as_bytes()))
}

/// As [`sweep`], consulting and populating a disk cache directory when
/// one is given. Cache hits are verified against the full key.
pub fn sweep_cached(
    g: &CoxGroup,
    ordering: &ReflectionOrdering,
    gen_order: &[usize],
    h: usize,
    caps: &Caps,
    reductions: Reductions,
    cache_dir: Option<&FsPath>,
) -> Result<SweepOutput> {
    let Some(dir) = cache_dir else {
        return sweep(g, ordering, gen_order, h, caps, reductions);
    };
    let key = sweep_fingerprint(g, ordering, gen_order, h, reductions);
    let path = dir.join(format!("sweep-{}-h{}-{}.json", g.diagram(), h, key));
    if path.is_file() {
        let text = std::fs::read_to_string(&path)?;
        let file: SweepFile =
            serde_json::from_str(&text)?;
        if file.diagram == g.diagram().to_string() && file.h == h && file.key == key {
            return Ok(file.output);
        }
    }
    let output = sweep(g, ordering, gen_order, h, caps, reductions)?;
    std::fs::create_dir_all(dir)?;
    let file = SweepFile {
        diagram: g.diagram().to_string(),
        h,
        key,
        output: output.clone(),
    };
    let text = serde_json::to_string(&file)?;
    std::fs::write(&path, text)?;
    Ok(output)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup(name: &str) -> (CoxGroup, ReflectionOrdering, Vec<usize>) {
        let g = CoxGroup::from_name(name, &Caps::default()).unwrap();
        let ordering = ReflectionOrdering::default_for(&g);
        let order = (0..g.rank()).collect();
        (g, ordering, order)
    }

    fn distinct_dpolys(items: &[SweepItem]) -> usize {
        let set: std::collections::HashSet<&str> =
            items.iter().map(|i| i.dpoly.as_str()).collect();
        set.len()
    }

    #[test]
    fn rank_two_sweeps_match_known_counts() {
        let caps = Caps::default();
        for (name, expect_starts, expect_classes) in
            [("A2", 1usize, 1usize), ("B2", 3, 8), ("G2", 5, 25)]
        {
            let (g, ordering, order) = setup(name);
            let h = 2;
            let out = sweep(&g, &ordering, &order, h, &caps, Reductions::all()).unwrap();
            assert_eq!(out.starts, expect_starts, "{name} starts");
            assert_eq!(out.items.len(), expect_classes, "{name} classes");
            assert_eq!(distinct_dpolys(&out.items), 1, "{name} valence polynomials");
            assert!(out.items.iter().all(|i| i.c >= 1));
        }
    }

    #[test]
    fn b3_sweep_matches_table_row() {
        let caps = Caps::default();
        let (g, ordering, order) = setup("B3");
        let out = sweep(&g, &ordering, &order, 3, &caps, Reductions::all()).unwrap();
        assert_eq!(out.starts, 16);
        assert_eq!(out.items.len(), 216);
        assert_eq!(distinct_dpolys(&out.items), 8);
        assert!(out.items.iter().all(|i| i.c >= 1));
    }

    #[test]
    fn sweep_is_worker_count_independent() {
        let caps = Caps::default();
        let (g, ordering, order) = setup("B2");
        let baseline = sweep(&g, &ordering, &order, 2, &caps, Reductions::all()).unwrap();
        let single = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap()
            .install(|| sweep(&g, &ordering, &order, 2, &caps, Reductions::all()))
            .unwrap();
        assert_eq!(baseline, single);
    }

    #[test]
    fn unreduced_sweep_covers_the_same_invariant_pairs() {
        let caps = Caps::default();
        let (g, ordering, order) = setup("B2");
        let reduced = sweep(&g, &ordering, &order, 2, &caps, Reductions::all()).unwrap();
        let full = sweep(&g, &ordering, &order, 2, &caps, Reductions::none()).unwrap();
        assert!(full.items.len() > reduced.items.len());
        let pairs = |items: &[SweepItem]| -> std::collections::HashSet<(String, u64)> {
            items.iter().map(|i| (i.dpoly.clone(), i.c)).collect()
        };
        assert_eq!(pairs(&full.items), pairs(&reduced.items));
    }

    #[test]
    fn cold_and_warm_cache_agree() {
        let caps = Caps::default();
        let (g, ordering, order) = setup("B2");
        let dir = tempfile::tempdir().unwrap();
        let cold =
            sweep_cached(&g, &ordering, &order, 2, &caps, Reductions::all(), Some(dir.path())).unwrap();
        let warm =
            sweep_cached(&g, &ordering, &order, 2, &caps, Reductions::all(), Some(dir.path())).unwrap();
        assert_eq!(cold, warm);
        let files: Vec<_> = std::fs::read_dir(dir.path()).unwrap().collect();
        assert_eq!(files.len(), 1, "exactly one cache file written");
    }
}

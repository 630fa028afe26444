//! Parsing of command-line inputs: group elements, reflection orderings,
//! resource caps, and the provenance header stamped into reports.

use bruhat_core::coxgroup::{CoxGroup, ElemId, ReflectionOrdering};
use bruhat_core::verifier::{fnv64, ReportMeta};
use bruhat_core::{Caps, Error, Result};

/// Parses a word in generators, `"s1 s2 s1"` (the `s` prefix is
/// optional), into 0-based generator indices. `"e"` is the empty word.
pub fn parse_word(text: &str, rank: usize) -> Result<Vec<usize>> {
    let text = text.trim();
    if text == "e" {
        return Ok(Vec::new());
    }
    let mut word = Vec::new();
    for tok in text.split_whitespace() {
        let digits = tok.strip_prefix('s').unwrap_or(tok);
        let i: usize = digits
            .parse()
            .map_err(|_| Error::Element(format!("bad generator token '{tok}'")))?;
        if i < 1 || i > rank {
            return Err(Error::Element(format!(
                "generator s{i} out of range 1..={rank}"
            )));
        }
        word.push(i - 1);
    }
    Ok(word)
}

/// Parses an element: `e` for the identity, `w0` for the longest
/// element, a one-line permutation like `4231` for a single type A
/// factor, or a word in generators like `s1 s2 s1` otherwise.
pub fn parse_element(g: &CoxGroup, text: &str) -> Result<ElemId> {
    let text = text.trim();
    match text {
        "e" => return Ok(g.identity()),
        "w0" => return Ok(g.w0()),
        _ => {}
    }
    let single_type_a = g.diagram().is_type_a() && g.diagram().factors().len() == 1;
    if single_type_a && !text.is_empty() && text.chars().all(|c| c.is_ascii_digit()) {
        let perm: Vec<usize> = text
            .chars()
            .map(|c| c.to_digit(10).unwrap() as usize)
            .collect();
        return g.elem_from_one_line(&perm);
    }
    let word = parse_word(text, g.rank())?;
    g.elem_from_word(&word)
}

/// Renders an element the same way the parser reads it: one-line
/// notation for a single type A factor, a generator word otherwise.
pub fn fmt_elem(g: &CoxGroup, e: ElemId) -> String {
    match g.one_line(e) {
        Some(perm) => perm.iter().map(usize::to_string).collect(),
        None => g.display_word(e),
    }
}

/// Resolves the `--ordering` flag: `"default"` gives the reflection
/// ordering of the ShortLex-least reduced word of the longest element;
/// anything else is read as a reduced word of the longest element.
pub fn resolve_ordering(g: &CoxGroup, spec: &str) -> Result<ReflectionOrdering> {
    if spec.trim() == "default" {
        return Ok(ReflectionOrdering::default_for(g));
    }
    let word = parse_word(spec, g.rank())?;
    ReflectionOrdering::from_reduced_word(g, &word)
}

/// Default caps with the two externally tunable limits applied.
pub fn caps(cap_group: Option<u64>, cap_paths: Option<u64>) -> Caps {
    let mut caps = Caps::default();
    if let Some(n) = cap_group {
        caps.max_group_size = n;
    }
    if let Some(n) = cap_paths {
        caps.max_paths = n;
    }
    caps
}

/// Provenance header for reports: tool version, a hash of the full
/// invocation, and the invocation line itself. The program path is
/// normalised to its bare name so the hash does not depend on where
/// the binary happens to live.
pub fn report_meta(argv: &[String]) -> ReportMeta {
    let name = argv
        .first()
        .and_then(|p| std::path::Path::new(p).file_name())
        .and_then(|n| n.to_str())
        .unwrap_or("bruhat-flip");
    let invocation = std::iter::once(name)
        .chain(argv.iter().skip(1).map(String::as_str))
        .collect::<Vec<_>>()
        .join(" ");
    ReportMeta {
        version: env!("CARGO_PKG_VERSION").to_string(),
        config_hash: format!("{:016x}", fnv64(invocation.as_bytes())),
        invocation,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a3() -> CoxGroup {
        CoxGroup::from_name("A3", &Caps::default()).unwrap()
    }

    #[test]
    fn words_parse_with_and_without_the_s_prefix() {
        assert_eq!(parse_word("s1 s2 s1", 3).unwrap(), vec![0, 1, 0]);
        assert_eq!(parse_word("1 2 1", 3).unwrap(), vec![0, 1, 0]);
        assert_eq!(parse_word("e", 3).unwrap(), Vec::<usize>::new());
        assert!(parse_word("s4", 3).is_err());
        assert!(parse_word("sx", 3).is_err());
        assert!(parse_word("s0", 3).is_err());
    }

    #[test]
    fn type_a_elements_parse_as_one_line_permutations() {
        let g = a3();
        let e = parse_element(&g, "4231").unwrap();
        assert_eq!(g.length(e), 5);
        assert_eq!(fmt_elem(&g, e), "4231");
        assert_eq!(parse_element(&g, "1234").unwrap(), g.identity());
        assert_eq!(parse_element(&g, "e").unwrap(), g.identity());
        assert_eq!(parse_element(&g, "w0").unwrap(), g.w0());
        assert!(parse_element(&g, "4211").is_err());
    }

    #[test]
    fn non_type_a_elements_parse_as_words() {
        let g = CoxGroup::from_name("B3", &Caps::default()).unwrap();
        let e = parse_element(&g, "s1 s2 s1").unwrap();
        assert_eq!(g.length(e), 3);
        assert_eq!(fmt_elem(&g, g.identity()), "e");
        // One-line digits are not accepted outside single type A factors.
        assert!(parse_element(&g, "123").is_err());
    }

    #[test]
    fn ordering_resolves_default_and_explicit_words() {
        let g = a3();
        let d = resolve_ordering(&g, "default").unwrap();
        assert_eq!(d.len(), g.reflection_count());
        let w: Vec<usize> = g.normal_form(g.w0()).iter().map(|&s| s as usize).collect();
        let spec: Vec<String> = w.iter().map(|s| format!("s{}", s + 1)).collect();
        let o = resolve_ordering(&g, &spec.join(" ")).unwrap();
        assert_eq!(o.len(), g.reflection_count());
        // A non-reduced word is rejected.
        assert!(resolve_ordering(&g, "s1 s1").is_err());
    }

    #[test]
    fn meta_hash_tracks_the_invocation() {
        let a = report_meta(&["bruhat-flip".into(), "sweep".into()]);
        let b = report_meta(&["bruhat-flip".into(), "sweep".into()]);
        let c = report_meta(&["bruhat-flip".into(), "verify".into()]);
        assert_eq!(a.config_hash, b.config_hash);
        assert_ne!(a.config_hash, c.config_hash);
        assert_eq!(a.invocation, "bruhat-flip sweep");
    }
}

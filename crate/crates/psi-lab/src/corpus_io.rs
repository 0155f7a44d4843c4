//! Reading and writing the plain-text corpus format.
//!
//! One record per line: `name ; degree ; gen1 | gen2 | ...`. Generators are
//! permutations of `{0, .., degree-1}` in cycle notation or as a
//! bracketed image list. `#` starts a comment, blank lines are skipped.

use crate::families::{CorpusEntry, CorpusSource};
use crate::grpcore::{ElementSet, Group, Perm};

#[derive(Debug, Clone)]
pub struct CorpusRecord {
    pub name: String,
    pub degree: usize,
    pub gens: Vec<Perm>,
}

/// Parses the whole file, collecting a diagnostic per bad line instead of
/// stopping at the first. Good lines survive bad neighbors.
pub fn parse_corpus(text: &str) -> (Vec<CorpusRecord>, Vec<String>) {
    let mut records = Vec::new();
    let mut diags = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        match parse_record(line) {
            Ok(r) => records.push(r),
            Err(msg) => diags.push(format!("line {lineno}: {msg}")),
        }
    }
    (records, diags)
}

fn parse_record(line: &str) -> Result<CorpusRecord, String> {
    let mut parts = line.splitn(3, ';');
    let name = parts.next().unwrap().trim();
    let degree = parts.next().ok_or("missing degree field")?.trim();
    let gens = parts.next().ok_or("missing generators field")?.trim();
    if name.is_empty() {
        return Err("empty name".into());
    }
    let degree: usize = degree
        .parse()
        .map_err(|_| format!("bad degree {degree:?}"))?;
    if degree == 0 || degree > 4096 {
        return Err(format!("degree {degree} out of range 1..=4096"));
    }
    let mut parsed = Vec::new();
    for g in gens.split('|') {
        let g = g.trim();
        if g.is_empty() {
            return Err("empty generator".into());
        }
        parsed.push(Perm::parse(g, degree).map_err(|e| e.to_string())?);
    }
    if parsed.is_empty() {
        return Err("no generators".into());
    }
    Ok(CorpusRecord { name: name.to_string(), degree, gens: parsed })
}

/// Parses and builds every record into a multiplication-table group.
/// Invalid records are skipped and reported as diagnostics; the caller
/// decides whether diagnostics are fatal.
pub fn ingest(text: &str, cap: usize) -> (Vec<CorpusEntry>, Vec<String>) {
    let (records, mut diags) = parse_corpus(text);
    let mut entries = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for r in &records {
        if !seen.insert(r.name.clone()) {
            diags.push(format!("duplicate record name {:?}", r.name));
            continue;
        }
        match Group::build_from_perms(&r.gens, cap) {
            Ok(g) => entries.push(CorpusEntry {
                name: r.name.clone(),
                group: g.with_label(&r.name),
                source: CorpusSource::Ingested,
            }),
            Err(e) => diags.push(format!("record {:?}: {e}", r.name)),
        }
    }
    (entries, diags)
}

/// The permutation `x -> x*g` of the element indices. Right translations
/// compose in the same order as the group, matching apply-then-apply
/// composition of [`Perm`].
fn right_translation(g: &Group, elem: usize) -> Perm {
    let images = (0..g.order()).map(|x| g.mul(x, elem)).collect();
    Perm::new(images).expect("translation is a bijection")
}

/// A small generating set chosen greedily: repeatedly add the first
/// element outside the closure so far. Deterministic for a fixed table.
pub fn greedy_generators(g: &Group) -> Vec<usize> {
    let n = g.order();
    let mut gens: Vec<usize> = Vec::new();
    let mut closed = ElementSet::singleton(n, 0);
    for i in 1..n {
        if closed.contains(i) {
            continue;
        }
        gens.push(i);
        let seed = ElementSet::from_indices(n, &gens);
        closed = g.subgroup_closure(&seed);
        if closed.len() == n {
            break;
        }
    }
    if gens.is_empty() {
        gens.push(0); // trivial group still needs one generator line
    }
    gens
}

/// Serializes each group through its right-regular permutation
/// representation; `ingest` on the result rebuilds isomorphic tables.
pub fn export_corpus(entries: &[CorpusEntry]) -> String {
    let mut out = String::new();
    for e in entries {
        let gens: Vec<String> = greedy_generators(&e.group)
            .iter()
            .map(|&i| right_translation(&e.group, i).to_cycles())
            .collect();
        out.push_str(&format!(
            "{} ; {} ; {}\n",
            e.name,
            e.group.order(),
            gens.join(" | ")
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{builtin_corpus, make, parse_spec};
    use crate::grpcore::DEFAULT_CAP;
    use crate::psi::psi_sum;

    #[test]
    fn parse_basic() {
        let text = "\
# symmetric group on three points
S3 ; 3 ; (0 1) | (0 1 2)

K4 ; 4 ; [1, 0, 3, 2] | (0 2)(1 3)  # image list and cycles mix
";
        let (recs, diags) = parse_corpus(text);
        assert!(diags.is_empty());
        assert_eq!(recs.len(), 2);
        assert_eq!(recs[0].name, "S3");
        assert_eq!(recs[0].gens.len(), 2);
        assert_eq!(recs[1].degree, 4);
    }

    #[test]
    fn parse_diagnostics_cover_all_lines() {
        let text = "ok ; 3 ; (0 1 2)\nbad1 ; x ; (0 1)\nbad2 ; 3\n; 3 ; (0 1)\nbad4 ; 2 ; (0 5)\n";
        let (recs, diags) = parse_corpus(text);
        assert_eq!(recs.len(), 1);
        assert_eq!(diags.len(), 4);
        assert!(diags[0].starts_with("line 2:"));
        assert!(diags[3].contains("out of range") || diags[3].contains("5"));
    }

    #[test]
    fn ingest_builds_groups() {
        let text = "S3 ; 3 ; (0 1) | (0 1 2)\nC5 ; 5 ; (0 1 2 3 4)\n";
        let (entries, diags) = ingest(text, DEFAULT_CAP);
        assert!(diags.is_empty());
        assert_eq!(entries[0].group.order(), 6);
        assert_eq!(entries[1].group.order(), 5);
        assert_eq!(psi_sum(&entries[0].group), 13u32.into());
    }

    #[test]
    fn ingest_rejects_duplicates() {
        let text = "A ; 2 ; (0 1)\nA ; 2 ; (0 1)\n";
        let (entries, diags) = ingest(text, DEFAULT_CAP);
        assert_eq!(entries.len(), 1);
        assert!(diags[0].contains("duplicate"));
    }

    #[test]
    fn right_translations_are_a_homomorphism() {
        let g = make(&parse_spec("Q(8)").unwrap(), DEFAULT_CAP).unwrap();
        for a in 0..g.order() {
            for b in 0..g.order() {
                let lhs = right_translation(&g, a).compose(&right_translation(&g, b));
                let rhs = right_translation(&g, g.mul(a, b));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn export_round_trip_preserves_psi_and_orders() {
        let corpus = builtin_corpus(24);
        let text = export_corpus(&corpus);
        let (back, diags) = ingest(&text, DEFAULT_CAP);
        assert!(diags.is_empty());
        assert_eq!(back.len(), corpus.len());
        for (orig, re) in corpus.iter().zip(&back) {
            assert_eq!(orig.name, re.name);
            assert_eq!(orig.group.order(), re.group.order());
            assert_eq!(orig.group.order_multiset(), re.group.order_multiset());
            assert_eq!(psi_sum(&orig.group), psi_sum(&re.group));
        }
    }

    #[test]
    fn greedy_generators_small() {
        let g = make(&parse_spec("C(12)").unwrap(), DEFAULT_CAP).unwrap();
        let gens = greedy_generators(&g);
        assert!(gens.len() <= 2);
        let g = make(&parse_spec("ElemAb(2)").unwrap(), DEFAULT_CAP).unwrap();
        assert_eq!(greedy_generators(&g).len(), 2);
    }
}

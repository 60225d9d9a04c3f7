//! Text exchange formats: apx (`arg(x).` / `att(x,y).` facts) and tgf
//! (vertex lines, `#`, edge lines). Both round-trip through their
//! printers.

use std::collections::HashMap;

use crate::af::ArgumentationFramework;
use crate::error::{Error, Result};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Parses apx text: any number of `arg(NAME).` and `att(A,B).` facts,
/// whitespace-separated, possibly several per line. Attacks must
/// reference declared arguments; duplicates are dropped.
pub fn parse_apx(text: &str) -> Result<ArgumentationFramework> {
    let mut labels: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut arcs: Vec<(usize, usize)> = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        let mut rest = line.trim();
        while !rest.is_empty() {
            let (kind, args) = if let Some(r) = rest.strip_prefix("arg(") {
                ("arg", r)
            } else if let Some(r) = rest.strip_prefix("att(") {
                ("att", r)
            } else {
                return Err(parse_err(lineno, format!("expected arg(...) or att(...), found `{rest}`")));
            };
            let close = args
                .find(')')
                .ok_or_else(|| parse_err(lineno, "missing `)`"))?;
            let inner = &args[..close];
            let tail = args[close + 1..].trim_start();
            let tail = tail
                .strip_prefix('.')
                .ok_or_else(|| parse_err(lineno, "missing `.` after fact"))?;
            match kind {
                "arg" => {
                    let name = inner.trim();
                    if name.is_empty() || name.contains(',') {
                        return Err(parse_err(lineno, format!("bad argument name `{inner}`")));
                    }
                    if !index.contains_key(name) {
                        index.insert(name.to_string(), labels.len());
                        labels.push(name.to_string());
                    }
                }
                _ => {
                    let (a, b) = inner
                        .split_once(',')
                        .ok_or_else(|| parse_err(lineno, "att needs two arguments"))?;
                    let resolve = |name: &str| {
                        index.get(name.trim()).copied().ok_or_else(|| {
                            parse_err(lineno, format!("attack references undeclared argument `{}`", name.trim()))
                        })
                    };
                    arcs.push((resolve(a)?, resolve(b)?));
                }
            }
            rest = tail.trim_start();
        }
    }
    ArgumentationFramework::new(labels, &arcs)
}

pub fn print_apx(af: &ArgumentationFramework) -> String {
    let mut out = String::new();
    for label in af.labels() {
        out.push_str(&format!("arg({label}).\n"));
    }
    for &(u, v) in af.arcs() {
        out.push_str(&format!("att({},{}).\n", af.label(u), af.label(v)));
    }
    out
}

/// Parses tgf text: `ID [LABEL]` vertex lines, a lone `#`, then `A B`
/// edge lines referencing the IDs. A vertex without a label uses its ID.
pub fn parse_tgf(text: &str) -> Result<ArgumentationFramework> {
    let mut labels: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut arcs: Vec<(usize, usize)> = Vec::new();
    let mut in_edges = false;
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if line == "#" {
            if in_edges {
                return Err(parse_err(lineno, "duplicate `#` separator"));
            }
            in_edges = true;
            continue;
        }
        if !in_edges {
            let (id, label) = match line.split_once(char::is_whitespace) {
                Some((id, label)) => (id, label.trim()),
                None => (line, line),
            };
            if index.contains_key(id) {
                return Err(parse_err(lineno, format!("duplicate vertex id `{id}`")));
            }
            index.insert(id.to_string(), labels.len());
            labels.push(label.to_string());
        } else {
            let mut fields = line.split_whitespace();
            let (a, b) = match (fields.next(), fields.next(), fields.next()) {
                (Some(a), Some(b), None) => (a, b),
                _ => return Err(parse_err(lineno, "edge line needs exactly two ids")),
            };
            let resolve = |id: &str| {
                index
                    .get(id)
                    .copied()
                    .ok_or_else(|| parse_err(lineno, format!("edge references unknown id `{id}`")))
            };
            arcs.push((resolve(a)?, resolve(b)?));
        }
    }
    ArgumentationFramework::new(labels, &arcs)
}

pub fn print_tgf(af: &ArgumentationFramework) -> String {
    let mut out = String::new();
    for v in 0..af.n() {
        out.push_str(&format!("{} {}\n", v + 1, af.label(v)));
    }
    out.push_str("#\n");
    for &(u, v) in af.arcs() {
        out.push_str(&format!("{} {}\n", u + 1, v + 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn apx_basic() {
        let af = parse_apx("arg(a). arg(b). att(a,b).").unwrap();
        assert_eq!(af.n(), 2);
        assert_eq!(af.arcs(), &[(0, 1)]);
        assert_eq!(af.labels(), &["a".to_string(), "b".to_string()]);
    }

    #[test]
    fn apx_errors() {
        assert!(matches!(parse_apx("att(a,b)."), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(
            parse_apx("arg(a).\nfoo(b)."),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(parse_apx("arg(a)").is_err());
    }

    #[test]
    fn tgf_basic() {
        let af = parse_tgf("1\n2\n#\n1 2").unwrap();
        assert_eq!(af.n(), 2);
        assert_eq!(af.arcs(), &[(0, 1)]);
        let labeled = parse_tgf("1 alpha\n2 beta\n#\n2 1").unwrap();
        assert_eq!(labeled.labels(), &["alpha".to_string(), "beta".to_string()]);
        assert_eq!(labeled.arcs(), &[(1, 0)]);
    }

    #[test]
    fn tgf_errors() {
        assert!(matches!(
            parse_tgf("1\n#\n1 3"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(parse_tgf("1\n#\n#\n").is_err());
        assert!(parse_tgf("1\n#\n1 2 3").is_err());
    }

    #[test]
    fn round_trips() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..30 {
            let n = rng.gen_range(0..=9);
            let af =
                generate::random_digraph(n, rng.gen_range(0.0..0.7), 0.4, rng.gen()).unwrap();
            let from_apx = parse_apx(&print_apx(&af)).unwrap();
            assert_eq!(from_apx.labels(), af.labels());
            assert_eq!(from_apx.arcs(), af.arcs());
            let from_tgf = parse_tgf(&print_tgf(&af)).unwrap();
            assert_eq!(from_tgf.labels(), af.labels());
            assert_eq!(from_tgf.arcs(), af.arcs());
        }
    }
}

//! Text formats: `.top` space files, `.map` map files and `{a,b}` set
//! literals.
//!
//! ```text
//! # three points, two isolated opens
//! points: a,b,c
//! open: {}
//! open: {a}
//! open: {b}
//! open: {a,b}
//! open: {*}
//! ```

use std::fs;
use std::path::{Path, PathBuf};

use crate::error::ParseError;
use crate::space::{validate_topology, Topology};
use crate::subset::{Subset, SubsetFamily, MAX_POINTS};

fn strip_comment(line: &str) -> &str {
    line.split_once('#').map_or(line, |(head, _)| head).trim()
}

/// Parse a set literal such as `{a,c}`, `{}` or `{*}` against point labels.
pub fn parse_set(labels: &[String], text: &str) -> Result<Subset, String> {
    let text = text.trim();
    let inner = text
        .strip_prefix('{')
        .and_then(|t| t.strip_suffix('}'))
        .ok_or_else(|| format!("expected a set literal like {{a,b}}, got `{text}`"))?
        .trim();
    if inner.is_empty() {
        return Ok(Subset::EMPTY);
    }
    if inner == "*" {
        return Ok(Subset::full(labels.len()));
    }
    let mut s = Subset::EMPTY;
    for name in inner.split(',') {
        let name = name.trim();
        let i = labels
            .iter()
            .position(|l| l == name)
            .ok_or_else(|| format!("unknown point `{name}`"))?;
        s = s.union(Subset::singleton(i));
    }
    Ok(s)
}

/// Parse a whitespace-separated list of set literals.
pub fn parse_set_list(labels: &[String], text: &str) -> Result<Vec<Subset>, String> {
    let mut out = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let end = rest
            .find('}')
            .ok_or_else(|| format!("unterminated set literal in `{text}`"))?;
        out.push(parse_set(labels, &rest[..=end])?);
        rest = rest[end + 1..].trim_start();
    }
    Ok(out)
}

fn parse_labels(line: usize, text: &str) -> Result<Vec<String>, ParseError> {
    let labels: Vec<String> = text.split(',').map(|s| s.trim().to_string()).collect();
    if labels.iter().any(|l| l.is_empty()) {
        return Err(ParseError::at(line, "empty point label"));
    }
    if labels
        .iter()
        .any(|l| l.contains(|c: char| "{}*#,".contains(c) || c.is_whitespace()))
    {
        return Err(ParseError::at(
            line,
            "point labels may not contain braces, commas, `*`, `#` or spaces",
        ));
    }
    for (i, l) in labels.iter().enumerate() {
        if labels[..i].contains(l) {
            return Err(ParseError::at(line, format!("duplicate point `{l}`")));
        }
    }
    if labels.len() > MAX_POINTS {
        return Err(ParseError::at(
            line,
            format!(
                "{} points exceeds the maximum of {MAX_POINTS}",
                labels.len()
            ),
        ));
    }
    Ok(labels)
}

/// Parse `.top` text into labels and the raw (unvalidated) open family.
pub fn parse_space_family(text: &str) -> Result<(Vec<String>, SubsetFamily), ParseError> {
    let mut labels: Option<Vec<String>> = None;
    let mut opens = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = strip_comment(raw);
        if body.is_empty() {
            continue;
        }
        let (key, value) = body
            .split_once(':')
            .ok_or_else(|| ParseError::at(line, format!("expected `key: value`, got `{body}`")))?;
        match key.trim() {
            "points" => {
                if labels.is_some() {
                    return Err(ParseError::at(line, "duplicate `points:` line"));
                }
                labels = Some(parse_labels(line, value)?);
            }
            "open" => {
                let labels = labels
                    .as_ref()
                    .ok_or_else(|| ParseError::at(line, "`open:` before `points:`"))?;
                let s = parse_set(labels, value).map_err(|m| ParseError::at(line, m))?;
                opens.push(s);
            }
            other => return Err(ParseError::at(line, format!("unknown key `{other}`"))),
        }
    }
    let labels = labels.ok_or_else(|| ParseError::at(1, "missing `points:` line"))?;
    Ok((labels, opens.into_iter().collect()))
}

/// Parse and validate a `.top` document.
pub fn parse_space(text: &str) -> Result<Topology, ParseError> {
    let (labels, family) = parse_space_family(text)?;
    validate_topology(labels.len(), &family)
        .map(|t| t.with_labels(labels.clone()))
        .map_err(|e| ParseError::Invalid(e.describe(&labels)))
}

pub fn read_space(path: &Path) -> Result<Topology, ParseError> {
    let text = fs::read_to_string(path).map_err(|source| ParseError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_space(&text)
}

/// Render a space as `.top` text; `parse_space` reads it back unchanged.
pub fn write_space(t: &Topology) -> String {
    let mut out = format!("points: {}\n", t.labels().join(","));
    for u in t.opens().iter() {
        out.push_str(&format!("open: {}\n", t.show(u)));
    }
    out
}

/// Contents of a `.map` file before the referenced spaces are loaded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapSpec {
    pub from: PathBuf,
    pub to: PathBuf,
    pub assign: Vec<(String, String)>,
}

/// Parse `.map` text. Relative paths are resolved against `base`.
pub fn parse_map_spec(text: &str, base: &Path) -> Result<MapSpec, ParseError> {
    let (mut from, mut to, mut assign) = (None, None, None);
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = strip_comment(raw);
        if body.is_empty() {
            continue;
        }
        let (key, value) = body
            .split_once(':')
            .ok_or_else(|| ParseError::at(line, format!("expected `key: value`, got `{body}`")))?;
        let value = value.trim();
        match key.trim() {
            "from" => from = Some(base.join(value)),
            "to" => to = Some(base.join(value)),
            "assign" => {
                let mut pairs = Vec::new();
                for item in value.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                    let (x, y) = item.split_once("->").ok_or_else(|| {
                        ParseError::at(line, format!("expected `x->y`, got `{item}`"))
                    })?;
                    pairs.push((x.trim().to_string(), y.trim().to_string()));
                }
                assign = Some(pairs);
            }
            other => return Err(ParseError::at(line, format!("unknown key `{other}`"))),
        }
    }
    let missing =
        |k: &str| ParseError::at(text.lines().count().max(1), format!("missing `{k}:` line"));
    Ok(MapSpec {
        from: from.ok_or_else(|| missing("from"))?,
        to: to.ok_or_else(|| missing("to"))?,
        assign: assign.ok_or_else(|| missing("assign"))?,
    })
}

/// Resolve the point assignment of a map spec against loaded spaces.
pub fn resolve_assignment(
    spec: &MapSpec,
    dom: &Topology,
    cod: &Topology,
) -> Result<Vec<usize>, ParseError> {
    let mut image = vec![None; dom.n()];
    for (x, y) in &spec.assign {
        let i = dom
            .labels()
            .iter()
            .position(|l| l == x)
            .ok_or_else(|| ParseError::Invalid(format!("unknown domain point `{x}`")))?;
        let j = cod
            .labels()
            .iter()
            .position(|l| l == y)
            .ok_or_else(|| ParseError::Invalid(format!("unknown codomain point `{y}`")))?;
        if image[i].replace(j).is_some() {
            return Err(ParseError::Invalid(format!("point `{x}` assigned twice")));
        }
    }
    image
        .into_iter()
        .enumerate()
        .map(|(i, j)| {
            j.ok_or_else(|| {
                ParseError::Invalid(format!("point `{}` is unassigned", dom.labels()[i]))
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const EX: &str = "# sample\npoints: a,b,c\nopen: {}\nopen: {a}\nopen: {b}  # comment\nopen: {a,b}\nopen: {*}\n";

    #[test]
    fn parses_space_with_comments_and_shorthand() {
        let t = parse_space(EX).unwrap();
        assert_eq!(t.n(), 3);
        assert_eq!(t.opens().len(), 5);
        assert_eq!(parse_space(&write_space(&t)).unwrap(), t);
    }

    #[test]
    fn errors_cite_lines() {
        let err = parse_space("points: a,b\nopen: {a,z}\n").unwrap_err();
        assert_eq!(err.to_string(), "line 2: unknown point `z`");
        let err = parse_space("open: {}\n").unwrap_err();
        assert!(err.to_string().starts_with("line 1:"));
        let err = parse_space("points: a,b\nbogus\n").unwrap_err();
        assert!(err.to_string().starts_with("line 2:"));
    }

    #[test]
    fn invalid_family_mentions_missing_union() {
        let text = "points: a,b,c,d\nopen: {}\nopen: {a}\nopen: {b}\nopen: {d}\nopen: {a,b}\nopen: {b,d}\nopen: {a,b,c}\nopen: {a,b,d}\nopen: {*}\n";
        let err = parse_space(text).unwrap_err();
        assert!(
            err.to_string().contains("{a} ∪ {d} = {a,d} is missing"),
            "{err}"
        );
    }

    #[test]
    fn set_lists() {
        let labels: Vec<String> = ["a", "b", "c"].iter().map(|s| s.to_string()).collect();
        let sets = parse_set_list(&labels, "{} {a,c}  {*}").unwrap();
        assert_eq!(
            sets,
            vec![Subset::EMPTY, Subset::from_indices([0, 2]), Subset::full(3)]
        );
        assert!(parse_set_list(&labels, "{a,d}").is_err());
    }

    #[test]
    fn map_spec() {
        let spec = parse_map_spec(
            "from: x.top\nto: y.top\nassign: a->b, b->a\n",
            Path::new("/c"),
        )
        .unwrap();
        assert_eq!(spec.from, Path::new("/c/x.top"));
        assert_eq!(spec.assign.len(), 2);
        assert!(parse_map_spec("from: x.top\n", Path::new(".")).is_err());
    }
}

//! Runs the example corpus: `.top` / `.map` files plus `claims.tsv` with
//! columns fixture-id, predicate-token, expected, locator.
//!
//! Predicate tokens:
//!
//! | token | expected |
//! |---|---|
//! | `valid` | `true` / `false` |
//! | `family:<prop>` | space-separated set list |
//! | `member:<prop>:<set>` | `true` / `false` |
//! | `closure:<kind>:<set>` | a set |
//! | `space:<normality or axiom>` | `true` / `false` |
//! | `separates:<open\|pigdhat>:<A>:<B>:<U>:<V>` | `true` / `false` |
//! | `map:<map predicate>` | `true` / `false` |
//!
//! In a map fixture, `dom:` or `cod:` before a space-level token selects the
//! end it is evaluated on.

use std::fmt;
use std::fs;
use std::path::Path;

use crate::error::ParseError;
use crate::format::{parse_map_spec, parse_set, parse_set_list, read_space, resolve_assignment};
use crate::genclass::{ClassTable, SetProperty};
use crate::maps::{MapPredicate, MapRef};
use crate::normality::{
    is_normal_kind, separates, separation_axiom, NormalityKind, SeparationAxiom,
};
use crate::report::{Record, Report};
use crate::space::Topology;
use crate::subset::SubsetFamily;
use crate::weakopen::ClosureKind;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FixtureStatus {
    Confirmed,
    Discrepant,
    InvalidInput,
}

impl fmt::Display for FixtureStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FixtureStatus::Confirmed => "confirmed",
            FixtureStatus::Discrepant => "discrepant",
            FixtureStatus::InvalidInput => "invalid-input",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Claim {
    pub fixture: String,
    pub predicate: String,
    pub expected: String,
    pub locator: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimOutcome {
    pub claim: Claim,
    pub actual: String,
    pub matches: bool,
    /// Human-readable difference for mismatches.
    pub diff: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixtureResult {
    pub id: String,
    pub status: FixtureStatus,
    pub outcomes: Vec<ClaimOutcome>,
    /// Why the fixture's input was rejected.
    pub error: Option<String>,
}

impl FixtureResult {
    /// Outcome for the claim at `locator`, if any.
    pub fn outcome(&self, locator: &str) -> Option<&ClaimOutcome> {
        self.outcomes.iter().find(|o| o.claim.locator == locator)
    }

    pub fn report(&self) -> Report {
        let mut r = Report::new();
        r.push(Record::new(
            &self.id,
            "status",
            self.status.to_string(),
            self.error.clone().unwrap_or_default(),
        ));
        for o in &self.outcomes {
            let verdict = if o.matches { "match" } else { "MISMATCH" };
            let witness = if o.matches {
                format!("{} = {}", o.claim.locator, o.actual)
            } else {
                format!("{}: {}", o.claim.locator, o.diff)
            };
            r.push(Record::new(&self.id, &o.claim.predicate, verdict, witness));
        }
        r
    }
}

pub fn parse_claims(text: &str) -> Result<Vec<Claim>, ParseError> {
    let mut out = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let cols: Vec<&str> = line.split('\t').collect();
        if cols.len() != 4 {
            return Err(ParseError::Syntax {
                line: idx + 1,
                message: format!("expected 4 tab-separated columns, got {}", cols.len()),
            });
        }
        if idx == 0 && cols[0] == "fixture-id" {
            continue;
        }
        out.push(Claim {
            fixture: cols[0].trim().to_string(),
            predicate: cols[1].trim().to_string(),
            expected: cols[2].trim().to_string(),
            locator: cols[3].trim().to_string(),
        });
    }
    Ok(out)
}

#[allow(clippy::large_enum_variant)]
enum Subject {
    Space(ClassTable),
    Map {
        dom: ClassTable,
        cod: ClassTable,
        image: Vec<usize>,
    },
}

fn load(dir: &Path, id: &str) -> Result<Subject, String> {
    let top = dir.join(format!("{id}.top"));
    let map = dir.join(format!("{id}.map"));
    if top.exists() {
        let t = read_space(&top).map_err(|e| e.to_string())?;
        return Ok(Subject::Space(ClassTable::build(&t)));
    }
    if map.exists() {
        let text = fs::read_to_string(&map).map_err(|e| format!("{}: {e}", map.display()))?;
        let spec = parse_map_spec(&text, dir).map_err(|e| e.to_string())?;
        let dom = read_space(&spec.from).map_err(|e| e.to_string())?;
        let cod = read_space(&spec.to).map_err(|e| e.to_string())?;
        let image = resolve_assignment(&spec, &dom, &cod).map_err(|e| e.to_string())?;
        return Ok(Subject::Map {
            dom: ClassTable::build(&dom),
            cod: ClassTable::build(&cod),
            image,
        });
    }
    Err(format!("no {id}.top or {id}.map in {}", dir.display()))
}

fn show_family(t: &Topology, f: &SubsetFamily) -> String {
    f.iter().map(|s| t.show(s)).collect::<Vec<_>>().join(" ")
}

fn boolean(expected: &str) -> Result<bool, String> {
    match expected {
        "true" => Ok(true),
        "false" => Ok(false),
        other => Err(format!("expected `true` or `false`, got `{other}`")),
    }
}

struct Evaluated {
    actual: String,
    matches: bool,
    diff: String,
}

fn compare_bool(expected: &str, actual: bool) -> Result<Evaluated, String> {
    let want = boolean(expected)?;
    Ok(Evaluated {
        actual: actual.to_string(),
        matches: want == actual,
        diff: format!("expected {want}, engine says {actual}"),
    })
}

fn space_claim(table: &ClassTable, token: &str, expected: &str) -> Result<Evaluated, String> {
    let t = table.space();
    let set = |s: &str| parse_set(t.labels(), s);
    let (head, rest) = token.split_once(':').unwrap_or((token, ""));
    match head {
        "valid" => compare_bool(expected, true),
        "family" => {
            let prop: SetProperty = rest.parse().map_err(|e| format!("{e}"))?;
            let actual = table.family(prop);
            let shown = show_family(t, actual);
            match parse_set_list(t.labels(), expected) {
                Err(e) => Ok(Evaluated {
                    actual: shown.clone(),
                    matches: false,
                    diff: format!("expected list is not over this space ({e}); engine has {shown}"),
                }),
                Ok(list) => {
                    let want: SubsetFamily = list.into_iter().collect();
                    let missing: SubsetFamily =
                        want.iter().filter(|s| !actual.contains(*s)).collect();
                    let extra: SubsetFamily =
                        actual.iter().filter(|s| !want.contains(*s)).collect();
                    Ok(Evaluated {
                        actual: shown,
                        matches: missing.is_empty() && extra.is_empty(),
                        diff: format!(
                            "claimed but absent: [{}]; present but unclaimed: [{}]",
                            show_family(t, &missing),
                            show_family(t, &extra)
                        ),
                    })
                }
            }
        }
        "member" => {
            let (prop, s) = rest.split_once(':').ok_or("expected member:<prop>:<set>")?;
            let prop: SetProperty = prop.parse().map_err(|e| format!("{e}"))?;
            compare_bool(expected, table.has(prop, set(s)?))
        }
        "closure" => {
            let (kind, s) = rest
                .split_once(':')
                .ok_or("expected closure:<kind>:<set>")?;
            let kind = ClosureKind::ALL
                .into_iter()
                .find(|k| k.token() == kind)
                .ok_or_else(|| format!("unknown closure `{kind}`"))?;
            let actual = table.kind_closure(kind, set(s)?);
            let want = set(expected)?;
            Ok(Evaluated {
                actual: t.show(actual),
                matches: actual == want,
                diff: format!("expected {}, engine says {}", t.show(want), t.show(actual)),
            })
        }
        "space" => {
            let holds = if let Ok(k) = rest.parse::<NormalityKind>() {
                is_normal_kind(table, k).holds
            } else {
                let axiom = SeparationAxiom::ALL
                    .into_iter()
                    .find(|a| a.token() == rest)
                    .ok_or_else(|| format!("unknown space predicate `{rest}`"))?;
                separation_axiom(table, axiom).holds
            };
            compare_bool(expected, holds)
        }
        "separates" => {
            let parts: Vec<&str> = rest.split(':').collect();
            if parts.len() != 5 {
                return Err("expected separates:<open|pigdhat>:<A>:<B>:<U>:<V>".into());
            }
            let family = match parts[0] {
                "open" => t.opens(),
                "pigdhat" => table.pigdhat_open(),
                other => return Err(format!("unknown separator `{other}`")),
            };
            let [a, b, u, v] = [
                set(parts[1])?,
                set(parts[2])?,
                set(parts[3])?,
                set(parts[4])?,
            ];
            compare_bool(expected, separates(family, a, b, u, v))
        }
        _ => Err(format!("unknown claim token `{token}`")),
    }
}

fn evaluate(subject: &Subject, claim: &Claim) -> Result<Evaluated, String> {
    match subject {
        Subject::Space(table) => space_claim(table, &claim.predicate, &claim.expected),
        Subject::Map { dom, cod, image } => {
            let (end, rest) = claim
                .predicate
                .split_once(':')
                .ok_or_else(|| format!("unknown claim token `{}`", claim.predicate))?;
            match end {
                "map" => {
                    let p: MapPredicate = rest.parse().map_err(|e| format!("{e}"))?;
                    compare_bool(&claim.expected, MapRef::new(dom, cod, image).satisfies(p))
                }
                "dom" => space_claim(dom, rest, &claim.expected),
                "cod" => space_claim(cod, rest, &claim.expected),
                _ => Err(format!("unknown claim token `{}`", claim.predicate)),
            }
        }
    }
}

/// Evaluate one fixture's claims against the files in `dir`.
pub fn run_fixture(dir: &Path, id: &str, claims: &[Claim]) -> FixtureResult {
    let subject = load(dir, id);
    let mut outcomes = Vec::new();
    let error = subject.as_ref().err().cloned();
    for claim in claims {
        let outcome = match &subject {
            Err(e) => {
                let actual = if claim.predicate == "valid" {
                    "false"
                } else {
                    "unevaluated"
                };
                ClaimOutcome {
                    claim: claim.clone(),
                    actual: actual.into(),
                    matches: claim.predicate == "valid" && claim.expected == "false",
                    diff: format!("input rejected: {e}"),
                }
            }
            Ok(s) => match evaluate(s, claim) {
                Ok(ev) => ClaimOutcome {
                    claim: claim.clone(),
                    actual: ev.actual,
                    matches: ev.matches,
                    diff: ev.diff,
                },
                Err(e) => ClaimOutcome {
                    claim: claim.clone(),
                    actual: "error".into(),
                    matches: false,
                    diff: e,
                },
            },
        };
        outcomes.push(outcome);
    }
    let status = if error.is_some() {
        FixtureStatus::InvalidInput
    } else if outcomes.iter().all(|o| o.matches) {
        FixtureStatus::Confirmed
    } else {
        FixtureStatus::Discrepant
    };
    FixtureResult {
        id: id.to_string(),
        status,
        outcomes,
        error,
    }
}

/// Run every fixture named in `dir/claims.tsv`, in first-appearance order.
pub fn run_corpus(dir: &Path) -> Result<Vec<FixtureResult>, ParseError> {
    let path = dir.join("claims.tsv");
    let text = fs::read_to_string(&path).map_err(|source| ParseError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let claims = parse_claims(&text)?;
    let mut ids: Vec<&str> = Vec::new();
    for c in &claims {
        if !ids.contains(&c.fixture.as_str()) {
            ids.push(&c.fixture);
        }
    }
    Ok(ids
        .into_iter()
        .map(|id| {
            let mine: Vec<Claim> = claims.iter().filter(|c| c.fixture == id).cloned().collect();
            run_fixture(dir, id, &mine)
        })
        .collect())
}

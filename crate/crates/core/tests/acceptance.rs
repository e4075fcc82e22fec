//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Run with `cargo test --release -p finitop --test acceptance -- --nocapture`
//! to see the lines.

use std::fs;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use finitop::atlas::fixture::{parse_claims, run_fixture, Claim};
use finitop::atlas::miner::replay;
use finitop::atlas::{
    canonical_spaces, enumerate_topologies, find_strictness_witness, FixtureStatus,
};
use finitop::genclass::{check_implication_diagram, implication_arrows};
use finitop::harness::{ledger_report, run, Coverage, HarnessConfig, TheoremId};
use finitop::normality::{
    check_normality_diagram, separation_axiom, NormalityProfile, SeparationAxiom,
};
use finitop::report::Format;
use finitop::{ClassTable, ClosedClass, ClosureKind, OpenKind, Subset, Topology};

const FIXTURE_LIMIT: Duration = Duration::from_secs(1);
const DIAGRAM_LIMIT: Duration = Duration::from_secs(60);
const HARNESS_LIMIT: Duration = Duration::from_secs(120);
const MIN_STRICT_ARROWS: usize = 6;
/// Σ over 1..=3-point domain/codomain pairs of |maps|; includes 29·29·27.
const SCOPE3_MAPS: u64 = 24_872;
const SPACES_UP_TO_4: u64 = 1 + 4 + 29 + 355;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn corpus() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

fn claims(id: &str) -> Vec<Claim> {
    let text = fs::read_to_string(corpus().join("claims.tsv")).unwrap();
    parse_claims(&text)
        .unwrap()
        .into_iter()
        .filter(|c| c.fixture == id)
        .collect()
}

fn all_spaces() -> Vec<Topology> {
    (1..=4)
        .flat_map(|n| enumerate_topologies(n).unwrap())
        .collect()
}

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn fixture_reproduction() -> Check {
    let start = Instant::now();
    let result = run_fixture(&corpus(), "ex-2.14", &claims("ex-2.14"));
    let elapsed = start.elapsed();
    for item in ["(1)", "(3)", "(4)", "(5)"] {
        let loc = format!("ex-2.14{item}");
        let o = result.outcome(&loc).ok_or(format!("no claim {loc}"))?;
        ensure(o.matches, format!("{loc}: {}", o.diff))?;
    }
    ensure(elapsed < FIXTURE_LIMIT, format!("took {elapsed:?}"))?;
    Ok(format!("items 1,3,4,5 match in {elapsed:?}"))
}

fn fixture_discrepancies() -> Check {
    let mut parts = Vec::new();
    for (id, want) in [
        ("ex-2.14", FixtureStatus::Discrepant),
        ("ex-2.8", FixtureStatus::Discrepant),
        ("ex-3.9", FixtureStatus::Discrepant),
        ("ex-3.11", FixtureStatus::InvalidInput),
    ] {
        let r = run_fixture(&corpus(), id, &claims(id));
        ensure(r.status == want, format!("{id} is {}", r.status))?;
        let diff = r
            .outcomes
            .iter()
            .find(|o| !o.matches)
            .map(|o| o.diff.clone())
            .or(r.error.clone())
            .unwrap_or_default();
        ensure(!diff.is_empty(), format!("{id} has no diff"))?;
        ensure(
            !r.report().render(Format::Tsv).is_empty(),
            format!("{id} empty report"),
        )?;
        parts.push(format!("{id}={}", r.status));
    }
    let phantom = run_fixture(&corpus(), "ex-2.14", &claims("ex-2.14"));
    ensure(
        phantom.outcome("ex-2.14(2)").is_some_and(|o| !o.matches),
        "ex-2.14(2) not flagged",
    )?;
    Ok(parts.join(" "))
}

fn positive_claims() -> Check {
    for id in ["ex-2.11", "ex-2.13", "ex-3.7", "ex-3.8"] {
        let r = run_fixture(&corpus(), id, &claims(id));
        ensure(
            r.status == FixtureStatus::Confirmed,
            format!("{id} is {}", r.status),
        )?;
    }
    Ok("ex-2.11 ex-2.13 ex-3.7 ex-3.8 confirmed".into())
}

fn diagram_soundness() -> Check {
    let start = Instant::now();
    let spaces = enumerate_topologies(4).map_err(|e| e.to_string())?;
    ensure(spaces.len() == 355, "expected 355 spaces")?;
    for t in &spaces {
        let table = ClassTable::build(t);
        if let Some((arrow, a)) = check_implication_diagram(&table).violation {
            return Err(format!("{} violates {arrow} at {}", t.compact(), t.show(a)));
        }
        if let Some((from, to)) = check_normality_diagram(&NormalityProfile::of(&table)).violation {
            return Err(format!("{} violates {from} => {to}", t.compact()));
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < DIAGRAM_LIMIT, format!("took {elapsed:?}"))?;
    Ok(format!("0 violations over 355 spaces in {elapsed:?}"))
}

fn diagram_strictness() -> Check {
    let mut strict = Vec::new();
    for arrow in implication_arrows() {
        let outcome = find_strictness_witness(arrow, 4).map_err(|e| e.to_string())?;
        if outcome.is_found() {
            let goal = finitop::atlas::miner::strictness_goal(arrow);
            ensure(
                replay(&goal, &outcome),
                format!("witness for {arrow} does not replay"),
            )?;
            strict.push(arrow);
        }
    }
    ensure(
        strict.len() >= MIN_STRICT_ARROWS,
        format!("only {} strict arrows", strict.len()),
    )?;
    Ok(format!(
        "{} of {} arrows strict, all replay",
        strict.len(),
        implication_arrows().len()
    ))
}

fn equivalence_ledger() -> Check {
    let mut config = HarnessConfig::new(4);
    config.jobs = 1;
    let ledgers = run(
        &config,
        &[TheoremId::SoftlyInterpolation, TheoremId::SoftlyCover],
    )
    .map_err(|e| e.to_string())?;
    let mut parts = Vec::new();
    for l in &ledgers {
        ensure(
            l.instances == SPACES_UP_TO_4,
            format!("{} saw {} spaces", l.check_id(), l.instances),
        )?;
        ensure(
            l.examples.iter().all(|f| !f.witness.is_empty()),
            format!("{} disagreement without witness", l.check_id()),
        )?;
        parts.push(format!("{}:{}", l.check_id(), l.verdict()));
    }
    ensure(!ledger_report(&ledgers).records.is_empty(), "empty ledger")?;
    Ok(parts.join(" "))
}

fn harness_scope3() -> Check {
    let required =
        TheoremId::parse_list("3.15,4.4,4.5,5.1,5.5-5.8,3.17,5.2,5.4,3.18,3.19").unwrap();
    let start = Instant::now();
    let ledgers = run(&HarnessConfig::new(3), &required).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    for t in &required {
        ensure(
            ledgers.iter().any(|l| l.theorem == *t),
            format!("{} missing", t.token()),
        )?;
    }
    for l in &ledgers {
        ensure(
            l.coverage == Coverage::Labeled,
            format!("{} not labeled", l.check_id()),
        )?;
        ensure(
            l.passed + l.counterexamples == l.hypothesis_held,
            format!("{} counts", l.check_id()),
        )?;
        if l.theorem.scope() == finitop::harness::Scope::Map {
            ensure(
                l.instances == SCOPE3_MAPS,
                format!("{} saw {} maps", l.check_id(), l.instances),
            )?;
        }
    }
    ensure(elapsed < HARNESS_LIMIT, format!("took {elapsed:?}"))?;
    Ok(format!(
        "{} ledgers, {SCOPE3_MAPS} maps each, {elapsed:?}",
        ledgers.len()
    ))
}

fn enumeration_counts() -> Check {
    let labeled: Vec<usize> = (2..=4)
        .map(|n| enumerate_topologies(n).unwrap().len())
        .collect();
    let canonical: Vec<usize> = (2..=4)
        .map(|n| canonical_spaces(n).unwrap().len())
        .collect();
    ensure(labeled == [4, 29, 355], format!("labeled {labeled:?}"))?;
    ensure(canonical == [3, 9, 33], format!("canonical {canonical:?}"))?;
    Ok("labeled 4 29 355, canonical 3 9 33".into())
}

fn determinism() -> Check {
    let render = |jobs| {
        let mut config = HarnessConfig::new(4);
        config.jobs = jobs;
        run(&config, &TheoremId::ALL).map(|l| ledger_report(&l).render(Format::Tsv))
    };
    let one = render(1).map_err(|e| e.to_string())?;
    let eight = render(8).map_err(|e| e.to_string())?;
    ensure(one == eight, "jobs 1 and jobs 8 ledgers differ")?;
    Ok(format!("{} identical lines", one.lines().count()))
}

fn closure_laws(t: &Topology, table: &ClassTable) -> Result<(), String> {
    let subsets: Vec<Subset> = t.subsets().collect();
    for &a in &subsets {
        for k in ClosureKind::ALL {
            let dual = t.complement(table.kind_closure(k, t.complement(a)));
            ensure(
                table.kind_interior(k, a) == dual,
                format!("{k} duality at {}", t.show(a)),
            )?;
        }
        let cl = t.closure(a);
        ensure(
            a.is_subset_of(cl) && t.closure(cl) == cl,
            format!("cl at {}", t.show(a)),
        )?;
        for &b in &subsets {
            if a.is_subset_of(b) {
                ensure(
                    cl.is_subset_of(t.closure(b)),
                    format!("cl monotone at {}", t.show(a)),
                )?;
            }
        }
    }
    Ok(())
}

fn equivariance(t: &Topology, table: &ClassTable) -> Result<(), String> {
    let profile = NormalityProfile::of(table);
    for perm in finitop::atlas::canonical::permutations(t.n()) {
        let p = ClassTable::build(&t.permute(&perm));
        for c in ClosedClass::ALL {
            ensure(
                table.class(c).permute(&perm) == *p.class(c),
                format!("{c} under {perm:?}"),
            )?;
        }
        for k in OpenKind::ALL {
            ensure(
                table.kind(k).permute(&perm) == *p.kind(k),
                format!("{k} under {perm:?}"),
            )?;
        }
        let q = NormalityProfile::of(&p);
        ensure(
            profile.0.iter().zip(&q.0).all(|(a, b)| a.holds == b.holds),
            format!("normality under {perm:?}"),
        )?;
        for ax in SeparationAxiom::ALL {
            ensure(
                separation_axiom(table, ax).holds == separation_axiom(&p, ax).holds,
                format!("{ax:?} under {perm:?}"),
            )?;
        }
    }
    Ok(())
}

fn property_suites() -> Check {
    let spaces = all_spaces();
    for t in &spaces {
        let table = ClassTable::build(t);
        let at = |e: String| format!("{}: {e}", t.compact());
        closure_laws(t, &table).map_err(at)?;
        ensure(
            check_implication_diagram(&table).holds(),
            at("family inclusion".into()),
        )?;
        equivariance(t, &table).map_err(at)?;
        let t3 = separation_axiom(&table, SeparationAxiom::T3).holds;
        ensure(
            !t3 || separation_axiom(&table, SeparationAxiom::T2).holds,
            at("T3 without T2".into()),
        )?;
    }
    Ok(format!("{} spaces, 0 failures", spaces.len()))
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 10] = [
        ("fixture reproduction", fixture_reproduction),
        ("fixture discrepancies", fixture_discrepancies),
        ("positive claims", positive_claims),
        ("diagram soundness", diagram_soundness),
        ("diagram strictness", diagram_strictness),
        ("3.12/3.13 agreement ledger", equivalence_ledger),
        ("harness at scope 3", harness_scope3),
        ("enumeration counts", enumeration_counts),
        ("determinism", determinism),
        ("property suites", property_suites),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(why) => {
                println!("FAIL {:>2} {name}: {why}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

//! Acceptance criteria, one pass/fail line each. Run with
//! `cargo test -p passivize-cli --test acceptance -- --nocapture` to see the report.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::collections::BTreeSet;
use std::io::Write;
use std::process::Command;
use std::time::{Duration, Instant};

use passivize_core::lexicon::PRONOUN_TABLE;
use passivize_core::{
    invert_pronoun, tokenize, AgreementTable, Error, Passivizer, SubjectClass, TransformError,
    VerbForm,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_passivize"))
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn golden_worked_example() -> Outcome {
    let input = "They are looking the movie.";
    let want = "The movie is being looked by them.";
    let start = Instant::now();
    let engine = Passivizer::new();
    let got = engine
        .passivize(input)
        .map_err(|e| e.to_string())?
        .to_string();
    let elapsed = start.elapsed();
    ensure(got == want, format!("library gave {got:?}"))?;
    ensure(
        elapsed < Duration::from_millis(10),
        format!("took {elapsed:?}, budget 10ms"),
    )?;
    let out = bin().args(["transform", input]).output().unwrap();
    let stdout = String::from_utf8(out.stdout).unwrap();
    ensure(
        stdout == format!("{want}\n"),
        format!("cli printed {stdout:?}"),
    )?;
    ensure(
        out.status.code() == Some(0),
        format!("cli exit {:?}", out.status.code()),
    )?;
    Ok(format!("byte-exact, {elapsed:?}"))
}

fn introduction_example() -> Outcome {
    let engine = Passivizer::new();
    let got = engine
        .passivize("John ate the bagel.")
        .map_err(|e| e.to_string())?
        .to_string();
    ensure(
        got == "The bagel was eaten by John.",
        format!("got {got:?}"),
    )?;
    Ok("byte-exact".into())
}

fn kernel_suite() -> Outcome {
    let sentences = [
        ("He has been writing a letter.", (1, 4)),
        ("They had been writing a letter.", (2, 4)),
        ("She will be writing a letter.", (3, 2)),
        ("We will have been writing a letter.", (3, 4)),
    ];
    let engine = Passivizer::new();
    let mut seen = BTreeSet::new();
    for (s, cell) in sentences {
        match engine.passivize(s) {
            Err(Error::Transform(TransformError::KernelForm(form))) => {
                ensure((form.i(), form.j()) == cell, format!("{s}: got {form}"))?;
                seen.insert(form);
            }
            other => return Err(format!("{s}: expected KernelForm, got {other:?}")),
        }
    }
    let kernel: BTreeSet<VerbForm> = VerbForm::ALL
        .into_iter()
        .filter(|f| passivize_core::transformer::in_kernel(*f))
        .collect();
    ensure(seen == kernel, "kernel is not exactly {v14, v24, v32, v34}")?;

    let mut file = tempfile::NamedTempFile::new().unwrap();
    for (s, _) in sentences {
        writeln!(file, "{s}").unwrap();
    }
    let out = bin().arg("batch").arg(file.path()).output().unwrap();
    let stderr = String::from_utf8(out.stderr).unwrap();
    ensure(
        out.status.code() == Some(0),
        format!("batch exit {:?}", out.status.code()),
    )?;
    ensure(
        stderr.contains("ok/kernel/error: 0/4/0"),
        format!("summary {stderr:?}"),
    )?;
    Ok("4/4 rejected, batch exit 0, kernel=4".into())
}

fn pronoun_group_properties() -> Outcome {
    let mut checks = 0;
    for p in PRONOUN_TABLE {
        let inv = invert_pronoun(p);
        ensure(invert_pronoun(inv) == p, format!("involution fails at {p}"))?;
        ensure(
            inv.exponent == -p.exponent,
            format!("negation fails at {p}"),
        )?;
        checks += 2;
    }
    let identities: Vec<_> = PRONOUN_TABLE.iter().filter(|p| p.exponent == 0).collect();
    ensure(identities.len() == 1, "identity is not unique")?;
    ensure(
        invert_pronoun(*identities[0]) == *identities[0],
        "identity is not self-inverse",
    )?;
    Ok(format!("{} checks over 13 elements", checks + 2))
}

fn agreement_totality() -> Outcome {
    let table = AgreementTable::standard();
    let forms = table.forms();
    ensure(forms.len() == 8, format!("{} rows", forms.len()))?;
    for form in &forms {
        for class in SubjectClass::ALL {
            let cell = table.cell(*form, class).unwrap_or(&[]);
            ensure(!cell.is_empty(), format!("empty cell {form} {class}"))?;
        }
    }
    let engine = Passivizer::new();
    let mut used = BTreeSet::new();
    for case in common::corpus().iter().filter(|c| !c.is_kernel()) {
        let passive = engine
            .passivize(&case.sentence)
            .map_err(|e| format!("{}: {e}", case.sentence))?;
        let form = engine.parse(&case.sentence).unwrap().verb.form;
        used.insert((form, SubjectClass::of(&passive.promoted_subject)));
    }
    ensure(
        used.len() == 64,
        format!("{} of 64 cells exercised", used.len()),
    )?;
    Ok("64/64 cells defined and exercised".into())
}

fn oracle_equivalence() -> Outcome {
    let corpus = common::corpus();
    ensure(
        corpus.len() == 1440,
        format!("corpus size {}", corpus.len()),
    )?;
    let start = Instant::now();
    let engine = Passivizer::new();
    let mut agree = 0;
    let mut first_mismatch = None;
    for case in &corpus {
        let got = engine.passivize(&case.sentence);
        let ok = match (&got, &case.expected) {
            (Ok(p), Some(want)) => &p.to_string() == want,
            (Err(Error::Transform(TransformError::KernelForm(_))), None) => true,
            _ => false,
        };
        if ok {
            agree += 1;
        } else if first_mismatch.is_none() {
            first_mismatch = Some(format!(
                "{} => {got:?}, oracle {:?}",
                case.sentence, case.expected
            ));
        }
    }
    let elapsed = start.elapsed();
    ensure(
        agree == corpus.len(),
        format!(
            "{agree}/{} agree; first mismatch: {}",
            corpus.len(),
            first_mismatch.unwrap_or_default()
        ),
    )?;
    ensure(
        elapsed < Duration::from_secs(5),
        format!("took {elapsed:?}"),
    )?;
    Ok(format!("{agree}/{} byte-exact, {elapsed:?}", corpus.len()))
}

fn determinism_and_rerender() -> Outcome {
    let engine = Passivizer::new();
    let corpus = common::corpus();
    for case in &corpus {
        let a = engine
            .parse(&case.sentence)
            .map_err(|e| format!("{}: {e}", case.sentence))?;
        let b = engine.parse(&case.sentence).unwrap();
        ensure(a == b, format!("nondeterministic: {}", case.sentence))?;
        let normalized: Vec<String> = tokenize(&case.sentence)
            .unwrap()
            .into_iter()
            .map(|t| t.lowered)
            .collect();
        let rerendered: Vec<String> = a.tokens().iter().map(|t| t.to_lowercase()).collect();
        ensure(
            rerendered == normalized,
            format!("re-render mismatch: {}", case.sentence),
        )?;
    }
    Ok(format!("{} sentences", corpus.len()))
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 7] = [
        ("1 golden worked example", golden_worked_example),
        ("2 introduction example", introduction_example),
        ("3 kernel suite", kernel_suite),
        ("4 pronoun group properties", pronoun_group_properties),
        ("5 agreement-table totality", agreement_totality),
        ("6 oracle equivalence", oracle_equivalence),
        (
            "7 parser determinism and re-render",
            determinism_and_rerender,
        ),
    ];
    let mut failed = Vec::new();
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(why) => {
                println!("FAIL  {name}: {why}");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

use std::fs;
use std::io::Write;
use std::path::Path;

use serde::Serialize;
use serde_json::{json, Value};

use finsemi::corpus::{constructed_items, enumerate_semirings, export, CorpusItem};
use finsemi::report::{
    analysis_report, blattice_doc, rectangular_doc, sha256_hex, Section, Tables,
};
use finsemi::theorems::{check_equivalence, sweep, SweepRow};
use finsemi::{
    build_rees, coordinatize, parse_rees, parse_semiring, serialize_rees, serialize_semiring,
    ReesError, Semiring, TheoremId,
};

use crate::text;
use crate::{
    Cli, Command, CorpusCommand, DecomposeArgs, Failure, Input, Outcome, ReesCommand, SweepArgs,
    EXIT_COUNTEREXAMPLE, EXIT_INPUT, EXIT_OK, EXIT_SEVERE,
};

type Result<T> = std::result::Result<T, Failure>;

pub fn dispatch(cli: &Cli, inputs: &mut Vec<Input>, progress: &mut dyn Write) -> Result<Outcome> {
    match &cli.command {
        Command::Validate { file } => validate(&load_semiring(file, inputs)?),
        Command::Analyze { file } => analyze(&load_semiring(file, inputs)?),
        Command::Decompose(args) => decompose(&load_semiring(&args.file, inputs)?, args),
        Command::Rees(ReesCommand::Build { spec }) => rees_build(&read(spec, inputs)?),
        Command::Rees(ReesCommand::Coordinatize { file }) => {
            rees_coordinatize(&load_semiring(file, inputs)?)
        }
        Command::Theorems { file, only } => theorems(&load_semiring(file, inputs)?, only),
        Command::Sweep(args) => run_sweep(args, cli.seed, progress),
        Command::Corpus(CorpusCommand::Export { dir }) => corpus_export(dir, cli.seed),
    }
}

fn read(path: &Path, inputs: &mut Vec<Input>) -> Result<String> {
    let bytes = fs::read(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    inputs.push(Input {
        path: path.display().to_string(),
        sha256: sha256_hex(&bytes),
    });
    String::from_utf8(bytes)
        .map_err(|_| Failure::input(format!("{}: not UTF-8 text", path.display())))
}

fn load_semiring(path: &Path, inputs: &mut Vec<Input>) -> Result<Semiring> {
    let text = read(path, inputs)?;
    parse_semiring(&text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("results serialize")
}

fn validate(s: &Semiring) -> Result<Outcome> {
    Ok(Outcome {
        code: EXIT_OK,
        result: json!({
            "valid": true,
            "name": s.name(),
            "order": s.order(),
        }),
        text: format!("valid semiring of order {}\n", s.order()),
    })
}

fn analyze(s: &Semiring) -> Result<Outcome> {
    let report = analysis_report(s);
    let code = if report.has_severe() {
        EXIT_SEVERE
    } else {
        EXIT_OK
    };
    Ok(Outcome {
        code,
        text: text::analysis(s, &report),
        result: to_value(&report),
    })
}

fn decompose(s: &Semiring, args: &DecomposeArgs) -> Result<Outcome> {
    let both = !args.blattice && !args.rectangular;
    let mut result = serde_json::Map::new();
    let mut out = String::new();
    let mut code = EXIT_OK;
    // a missing section only fails the run when it was asked for by name
    let mut note = |c: u8| {
        if !(both && c == EXIT_INPUT) {
            code = code.max(c);
        }
    };
    if both || args.blattice {
        let doc = blattice_doc(s);
        note(section_code(&doc));
        out.push_str(&text::blattice(&doc));
        result.insert("blattice".into(), to_value(&doc));
    }
    if both || args.rectangular {
        let doc = rectangular_doc(s);
        note(section_code(&doc));
        out.push_str(&text::rectangular(&doc));
        result.insert("rectangular".into(), to_value(&doc));
    }
    Ok(Outcome {
        code,
        result: Value::Object(result),
        text: out,
    })
}

fn section_code<T>(section: &Section<T>) -> u8 {
    match section {
        Section::Ok { .. } => EXIT_OK,
        Section::NotApplicable { .. } => EXIT_INPUT,
        Section::Severe { .. } => EXIT_SEVERE,
    }
}

fn rees_failure(e: ReesError) -> Failure {
    if e.is_severe() {
        Failure::severe(e.to_string())
    } else {
        Failure::input(e.to_string())
    }
}

fn rees_build(spec_text: &str) -> Result<Outcome> {
    let spec = parse_rees(spec_text).map_err(rees_failure)?;
    let built = build_rees(&spec).map_err(rees_failure)?;
    let smr = serialize_semiring(&built.semiring);
    Ok(Outcome {
        code: EXIT_OK,
        result: json!({
            "tables": to_value(&Tables::of(&built.semiring)),
            "coords": built.coords,
            "smr": smr,
        }),
        text: smr,
    })
}

fn rees_coordinatize(s: &Semiring) -> Result<Outcome> {
    let c = coordinatize(s).map_err(rees_failure)?;
    if !c.iso.verified {
        return Err(Failure::severe(
            "coordinatization map is not an isomorphism",
        ));
    }
    let rees = serialize_rees(&c.spec);
    Ok(Outcome {
        code: EXIT_OK,
        text: format!("# iso {}\n{rees}", text::mapping(&c.iso.mapping)),
        result: json!({ "rees": rees, "iso": to_value(&c.iso) }),
    })
}

fn theorems(s: &Semiring, only: &[TheoremId]) -> Result<Outcome> {
    let ids: Vec<TheoremId> = if only.is_empty() {
        TheoremId::ALL.to_vec()
    } else {
        let mut ids = only.to_vec();
        ids.sort();
        ids.dedup();
        ids
    };
    let verdicts: Vec<_> = ids.iter().map(|&t| check_equivalence(s, t)).collect();
    let refuted = verdicts.iter().filter(|v| !v.equivalent).count();
    Ok(Outcome {
        code: if refuted > 0 {
            EXIT_COUNTEREXAMPLE
        } else {
            EXIT_OK
        },
        text: text::verdicts(&verdicts),
        result: json!({ "verdicts": to_value(&verdicts), "counterexamples": refuted }),
    })
}

#[derive(Serialize)]
struct Block {
    name: String,
    items: usize,
    checks: usize,
    counterexamples: usize,
}

#[derive(Serialize)]
struct TheoremTally {
    theorem: TheoremId,
    checks: usize,
    counterexamples: usize,
}

/// Sweeps census orders one at a time, then the constructed corpus,
/// reporting each block as it completes.
fn run_sweep(args: &SweepArgs, seed: u64, progress: &mut dyn Write) -> Result<Outcome> {
    let mut blocks: Vec<(String, Vec<CorpusItem>)> = Vec::new();
    for n in 1..=args.max_order {
        let census = enumerate_semirings(n, false).map_err(|e| Failure::input(e.to_string()))?;
        blocks.push((format!("census order {n}"), census.items()));
    }
    if !args.census_only {
        let items = constructed_items(seed).map_err(|e| Failure::severe(e.to_string()))?;
        blocks.push(("constructed".into(), items));
    }
    let ids = &args.theorems.0;
    let mut done = Vec::new();
    let mut failures: Vec<SweepRow> = Vec::new();
    let mut tally: Vec<TheoremTally> = ids
        .iter()
        .map(|&theorem| TheoremTally {
            theorem,
            checks: 0,
            counterexamples: 0,
        })
        .collect();
    for (name, items) in &blocks {
        let summary = sweep(items, ids);
        for row in &summary.rows {
            let t = tally
                .iter_mut()
                .find(|t| t.theorem == row.theorem)
                .expect("tallied");
            t.checks += 1;
            t.counterexamples += usize::from(!row.equivalent);
        }
        let bad: Vec<SweepRow> = summary.rows.into_iter().filter(|r| !r.equivalent).collect();
        let _ = writeln!(
            progress,
            "{name}: {} items, {} checks, {} counterexamples",
            summary.items, summary.checks, summary.counterexamples
        );
        for row in &bad {
            let _ = writeln!(progress, "  {}", text::sweep_row(row));
        }
        failures.extend(bad);
        done.push(Block {
            name: name.clone(),
            items: summary.items,
            checks: summary.checks,
            counterexamples: summary.counterexamples,
        });
    }
    let items: usize = done.iter().map(|b| b.items).sum();
    let checks: usize = done.iter().map(|b| b.checks).sum();
    let total = failures.len();
    Ok(Outcome {
        code: if total > 0 {
            EXIT_COUNTEREXAMPLE
        } else {
            EXIT_OK
        },
        text: format!("total: {items} items, {checks} checks, {total} counterexamples\n"),
        result: json!({
            "max_order": args.max_order,
            "seed": seed,
            "theorems": to_value(ids),
            "blocks": to_value(&done),
            "per_theorem": to_value(&tally),
            "items": items,
            "checks": checks,
            "counterexamples": total,
            "failures": to_value(&failures),
        }),
    })
}

fn corpus_export(dir: &Path, seed: u64) -> Result<Outcome> {
    let manifest = export(dir, seed).map_err(|e| match e {
        finsemi::corpus::CorpusError::Io { .. } => Failure::input(e.to_string()),
        other => Failure::severe(other.to_string()),
    })?;
    Ok(Outcome {
        code: EXIT_OK,
        text: text::manifest(dir, &manifest),
        result: to_value(&manifest),
    })
}

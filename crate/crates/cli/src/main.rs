use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use passivize_cli::explain::render_explanation;
use passivize_cli::{
    corpus_sentences, format_record, run_batch, OutputFormat, Summary, TransformRecord,
};
use passivize_core::lexicon::dump_pronouns;
use passivize_core::{Lexicon, NounNumber, ParseOptions, Passivizer};

const EXIT_IO: u8 = 3;

#[derive(Debug, Clone, Copy, ValueEnum)]
enum NumberArg {
    Auto,
    Singular,
    Plural,
}

#[derive(Debug, Parser)]
#[command(
    name = "passivize",
    version,
    about = "Turn simple active English clauses into the passive voice"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Text, global = true)]
    format: OutputFormat,

    /// Verb lexicon (TSV) replacing the built-in table.
    #[arg(long, global = true)]
    lexicon: Option<PathBuf>,

    /// Grammatical number of noun phrases.
    #[arg(long, value_enum, default_value_t = NumberArg::Auto, global = true)]
    number: NumberArg,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Transform one sentence.
    Transform {
        sentence: String,
        /// Print the step-by-step analysis.
        #[arg(long)]
        explain: bool,
    },
    /// Transform a corpus file, one sentence per line.
    Batch {
        path: PathBuf,
        /// Worker threads; 0 picks a default, 1 runs sequentially.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Print the step-by-step analysis of one sentence.
    Explain { sentence: String },
    /// Print the pronoun group table.
    Pronouns,
}

fn build_engine(cli: &Cli) -> Result<Passivizer, String> {
    let lexicon = match &cli.lexicon {
        Some(path) => {
            let file = File::open(path).map_err(|e| format!("{}: {e}", path.display()))?;
            Lexicon::load(BufReader::new(file)).map_err(|e| format!("{}: {e}", path.display()))?
        }
        None => Lexicon::builtin(),
    };
    let noun_number = match cli.number {
        NumberArg::Auto => NounNumber::Auto,
        NumberArg::Singular => NounNumber::Singular,
        NumberArg::Plural => NounNumber::Plural,
    };
    Ok(Passivizer::with_lexicon(lexicon).with_options(ParseOptions { noun_number }))
}

fn single(
    engine: &Passivizer,
    sentence: &str,
    format: OutputFormat,
    explain: bool,
    out: &mut impl Write,
) -> io::Result<u8> {
    let record = TransformRecord::run(engine, sentence);
    if explain && format == OutputFormat::Text {
        match engine.explain(sentence) {
            Ok(e) => write!(out, "{}", render_explanation(sentence, &e))?,
            Err(_) => writeln!(out, "{}", record.to_text())?,
        }
    } else {
        writeln!(out, "{}", format_record(&record, format))?;
    }
    Ok(record.status.exit_code() as u8)
}

fn run(cli: Cli) -> io::Result<u8> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    if let Command::Pronouns = cli.command {
        dump_pronouns(&mut out)?;
        out.flush()?;
        return Ok(0);
    }
    let engine = match build_engine(&cli) {
        Ok(engine) => engine,
        Err(msg) => {
            eprintln!("passivize: {msg}");
            return Ok(EXIT_IO);
        }
    };
    let code = match &cli.command {
        Command::Transform { sentence, explain } => {
            single(&engine, sentence, cli.format, *explain, &mut out)?
        }
        Command::Explain { sentence } => single(&engine, sentence, cli.format, true, &mut out)?,
        Command::Batch { path, jobs } => {
            let text = match std::fs::read_to_string(path) {
                Ok(text) => text,
                Err(e) => {
                    eprintln!("passivize: {}: {e}", path.display());
                    return Ok(EXIT_IO);
                }
            };
            let (sentences, skipped) = corpus_sentences(&text);
            let records = run_batch(&engine, &sentences, *jobs);
            for record in &records {
                writeln!(out, "{}", format_record(record, cli.format))?;
            }
            let summary = Summary::of(&records, skipped);
            eprintln!("{summary}");
            summary.exit_code() as u8
        }
        Command::Pronouns => unreachable!(),
    };
    out.flush()?;
    Ok(code)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("passivize: {e}");
            ExitCode::from(EXIT_IO)
        }
    }
}

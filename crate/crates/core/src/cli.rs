//! The `frieze-bracket` command line.

use std::io::Write;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::frieze::{complete_invariant, Frieze};
use crate::lrword::{fraction_of, word_of, LRWord};
use crate::rational::{continued_fraction_even, Fraction};
use crate::recipe::{
    bracket_num, bracket_via_paths, denominator_link_bracket, extract_diamond, fold_triangle,
    reduce_chain, PathEnd,
};
use crate::verify::{run as run_verify, VerifyConfig};
use crate::yamada::{build_triangle, DEFAULT_PATH_CAP};

pub const PATH_CAP_VAR: &str = "FRIEZE_PATH_CAP";

#[derive(Debug, Parser)]
#[command(
    name = "frieze-bracket",
    version,
    about = "Kauffman brackets of zigzag-type friezes and rational tangles"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// <Γ>, its numerator part, the denominator link and C_w
    Bracket {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        json: bool,
        /// Print only the bracket of the denominator closure D(p/q)
        #[arg(long)]
        denominator_link: bool,
    },
    /// The frieze of a word, a fraction or a quiddity cycle
    Frieze {
        #[command(flatten)]
        input: FriezeInput,
        #[arg(long)]
        json: bool,
    },
    /// The ancestor triangle of a fraction
    Triangle {
        #[command(flatten)]
        input: Input,
    },
    /// Repeatedly delete the first letter of the word
    Reduce {
        #[command(flatten)]
        input: Input,
    },
    /// Fold the frieze at its maximum and sum the signed paths
    Fold {
        #[command(flatten)]
        input: Input,
    },
    /// Run the exhaustive property sweeps
    Verify {
        #[arg(long, default_value_t = 100)]
        max_q: u64,
        #[arg(long, default_value_t = 12)]
        max_len: usize,
        #[arg(long, hide = true)]
        inject_sign_flip: bool,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Input {
    /// A fraction p/q
    #[arg(long)]
    pub fraction: Option<Fraction>,
    /// An LR word such as RL^2RL; "-" is the empty word
    #[arg(long, allow_hyphen_values = true)]
    pub word: Option<LRWord>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct FriezeInput {
    #[arg(long)]
    pub fraction: Option<Fraction>,
    #[arg(long, allow_hyphen_values = true)]
    pub word: Option<LRWord>,
    /// A quiddity cycle, comma or space separated
    #[arg(long)]
    pub quiddity: Option<String>,
}

impl Input {
    fn raw(&self) -> String {
        match (&self.fraction, &self.word) {
            (Some(x), _) => x.to_string(),
            (_, Some(w)) => w.power_notation(),
            _ => unreachable!("clap enforces one input"),
        }
    }

    fn fraction(&self) -> Fraction {
        match (&self.fraction, &self.word) {
            (Some(x), _) => *x,
            (_, Some(w)) => fraction_of(w),
            _ => unreachable!("clap enforces one input"),
        }
    }

    fn word(&self) -> Result<LRWord> {
        match (&self.fraction, &self.word) {
            (Some(x), _) => word_of(*x).with_context(|| format!("no LR word for {x}")),
            (_, Some(w)) => Ok(w.clone()),
            _ => unreachable!("clap enforces one input"),
        }
    }
}

/// The path cap, overridden by `FRIEZE_PATH_CAP`.
pub fn path_cap() -> Result<u64> {
    match std::env::var(PATH_CAP_VAR) {
        Ok(s) => s
            .trim()
            .parse()
            .with_context(|| format!("{PATH_CAP_VAR}={s:?} is not a count")),
        Err(_) => Ok(DEFAULT_PATH_CAP),
    }
}

#[derive(Serialize)]
struct BracketReport {
    input: String,
    fraction: String,
    word: String,
    continued_fraction: Vec<u64>,
    bracket: String,
    bracket_num: String,
    invariant: Vec<String>,
    period: usize,
    max_entry: u64,
    denominator_link: String,
}

#[derive(Serialize)]
struct FriezeReport {
    period: usize,
    rows: Vec<Vec<u64>>,
    word: String,
    bracket: String,
    invariant: Vec<String>,
}

fn json_line(out: &mut dyn Write, v: &impl Serialize) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, v)?;
    writeln!(out)?;
    Ok(())
}

fn cmd_bracket(
    out: &mut dyn Write,
    input: &Input,
    json: bool,
    denominator_link: bool,
) -> Result<()> {
    let cap = path_cap()?;
    let w = input.word()?;
    let x = fraction_of(&w);
    let d = denominator_link_bracket(x, cap)?;
    if denominator_link && !json {
        writeln!(out, "{d}")?;
        return Ok(());
    }
    let f = Frieze::from_word(&w)?;
    let report = BracketReport {
        input: input.raw(),
        fraction: x.to_string(),
        word: w.to_string(),
        continued_fraction: continued_fraction_even(x)?.terms().to_vec(),
        bracket: bracket_via_paths(&f, cap)?.to_string(),
        bracket_num: bracket_num(&f, cap)?.to_string(),
        invariant: complete_invariant(&w)?
            .fractions()
            .map(|x| x.to_string())
            .collect(),
        period: f.period(),
        max_entry: f.max_entry(),
        denominator_link: d.to_string(),
    };
    if json {
        return json_line(out, &report);
    }
    writeln!(out, "input:              {}", report.input)?;
    writeln!(out, "fraction:           {x}")?;
    writeln!(out, "word:               {}", w.power_notation())?;
    writeln!(out, "continued fraction: {}", continued_fraction_even(x)?)?;
    writeln!(out, "bracket:            {}", report.bracket)?;
    writeln!(out, "bracket_num:        {}", report.bracket_num)?;
    writeln!(out, "denominator link:   {}", report.denominator_link)?;
    writeln!(out, "invariant:          {}", complete_invariant(&w)?)?;
    writeln!(out, "period:             {}", report.period)?;
    writeln!(out, "max entry:          {}", report.max_entry)?;
    Ok(())
}

fn parse_quiddity(s: &str) -> Result<Vec<u64>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<u64>()
                .with_context(|| format!("bad quiddity entry {t:?}"))
        })
        .collect()
}

fn cmd_frieze(out: &mut dyn Write, input: &FriezeInput, json: bool) -> Result<()> {
    let f = match (&input.fraction, &input.word, &input.quiddity) {
        (Some(x), _, _) => Frieze::from_word(&word_of(*x)?)?,
        (_, Some(w), _) => Frieze::from_word(w)?,
        (_, _, Some(q)) => Frieze::from_quiddity(&parse_quiddity(q)?)?,
        _ => unreachable!("clap enforces one input"),
    };
    let w = f.reconstruct_word().map_err(|e| anyhow!("{e}"))?;
    let bracket = f.bracket()?;
    let inv = complete_invariant(&w)?;
    if json {
        return json_line(
            out,
            &FriezeReport {
                period: f.period(),
                rows: f.rows().to_vec(),
                word: w.to_string(),
                bracket: bracket.to_string(),
                invariant: inv.fractions().map(|x| x.to_string()).collect(),
            },
        );
    }
    write!(out, "{}", f.render_ascii())?;
    // read the cycle from the zigzag's top cell
    let start = f
        .anchor()
        .or_else(|| f.locate_zigzags().first().map(|z| z.start))
        .unwrap_or(0);
    let q = f.quiddity();
    let quiddity: Vec<String> = (0..q.len())
        .map(|k| q[(start + k) % q.len()].to_string())
        .collect();
    writeln!(out, "quiddity: {}", quiddity.join(" "))?;
    writeln!(out, "word: {}", w.power_notation())?;
    writeln!(out, "bracket: {bracket}")?;
    writeln!(out, "invariant: {inv}")?;
    Ok(())
}

fn cmd_triangle(out: &mut dyn Write, input: &Input) -> Result<()> {
    let tri = build_triangle(input.fraction())?;
    write!(out, "{}", tri.render_ascii())?;
    Ok(())
}

fn cmd_reduce(out: &mut dyn Write, input: &Input) -> Result<()> {
    let w = input.word()?;
    writeln!(out, "{}  {}", w.power_notation(), fraction_of(&w))?;
    for s in reduce_chain(&w)? {
        let (a, b) = s.parents_of_previous;
        writeln!(
            out,
            "{}  {}  (parents {a}, {b})",
            s.word.power_notation(),
            s.fraction
        )?;
    }
    Ok(())
}

fn cmd_fold(out: &mut dyn Write, input: &Input) -> Result<()> {
    let cap = path_cap()?;
    let w = input.word()?;
    let f = Frieze::from_word(&w)?;
    let d = extract_diamond(&f)?;
    let cell = [d.a, d.s, d.v, d.b, d.m, d.d, d.t, d.u, d.c]
        .iter()
        .map(|x| x.to_string().len())
        .max()
        .unwrap_or(1);
    writeln!(
        out,
        "diamond around M = {} (row {}, column {})",
        d.m, d.row, d.col
    )?;
    for slots in [
        [None, None, Some(d.a), None, None],
        [None, Some(d.s), None, Some(d.v), None],
        [Some(d.b), None, Some(d.m), None, Some(d.d)],
        [None, Some(d.t), None, Some(d.u), None],
        [None, None, Some(d.c), None, None],
    ] {
        let line: String = slots
            .iter()
            .map(|x| match x {
                Some(x) => format!("{x:>cell$} "),
                None => " ".repeat(cell + 1),
            })
            .collect();
        writeln!(out, "{}", line.trim_end())?;
    }
    let t = fold_triangle(&f)?;
    write!(out, "{}", t.render_ascii())?;
    let paths = t.paths(cap)?;
    let floor = paths.iter().filter(|p| p.end == PathEnd::Floor).count();
    writeln!(
        out,
        "paths: {} ({floor} to the floor, {} to the ceiling)",
        paths.len(),
        paths.len() - floor
    )?;
    writeln!(out, "bracket: {}", bracket_via_paths(&f, cap)?)?;
    writeln!(out, "bracket_num: {}", bracket_num(&f, cap)?)?;
    Ok(())
}

fn cmd_verify(out: &mut dyn Write, max_q: u64, max_len: usize, inject: bool) -> Result<bool> {
    if max_q < 1 || max_len < 1 {
        bail!("bounds must be at least 1");
    }
    let cfg = VerifyConfig {
        path_cap: path_cap()?,
        mutate_phi: inject,
        ..VerifyConfig::from_bounds(max_q, max_len)
    };
    let report = run_verify(&cfg);
    writeln!(out, "{report}")?;
    Ok(report.passed())
}

/// Runs a parsed command. `Ok(false)` means the command ran but reported a
/// failure (only `verify` does this).
pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<bool> {
    match &cli.command {
        Command::Bracket {
            input,
            json,
            denominator_link,
        } => cmd_bracket(out, input, *json, *denominator_link)?,
        Command::Frieze { input, json } => cmd_frieze(out, input, *json)?,
        Command::Triangle { input } => cmd_triangle(out, input)?,
        Command::Reduce { input } => cmd_reduce(out, input)?,
        Command::Fold { input } => cmd_fold(out, input)?,
        Command::Verify {
            max_q,
            max_len,
            inject_sign_flip,
        } => return cmd_verify(out, *max_q, *max_len, *inject_sign_flip),
    }
    Ok(true)
}

/// Entry point of the binary; returns the process exit code.
pub fn main() -> i32 {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match execute(&cli, &mut out) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e)
            if e.downcast_ref::<std::io::Error>()
                .is_some_and(|io| io.kind() == std::io::ErrorKind::BrokenPipe) =>
        {
            0
        }
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e:#}");
            1
        }
    }
}

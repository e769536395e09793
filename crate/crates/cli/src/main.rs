//! `fgz`: a calculator for free-group words, one-variable equations and
//! algebraic sets.
//!
//! Exit status is 0 on success, 1 when the input is well-formed but the
//! operation fails (diagnostic on stderr), 2 on usage errors.

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use fgz_core::algset::chain_check;
use fgz_core::embed::check_mono_on_ball;
use fgz_core::json::{SetJson, SolveJson};
use fgz_core::onevar::{brute_solutions, DEFAULT_VARIABLE};
use fgz_core::residual::{apply_perm_rep, separate};
use fgz_core::{
    solve, AlgebraicSet, Alphabet, ClosedSet, Error, Exec, OneVarWord, Result, SolveConfig, Word,
};
use serde::Serialize;
use serde_json::{json, Value};

const DEFAULT_ORACLE_RADIUS: usize = 4;
const DEFAULT_SOLVE_RADIUS: usize = 6;
const DEFAULT_EMBED_RADIUS: usize = 3;

#[derive(Parser, Debug)]
#[command(
    name = "fgz",
    version,
    about = "Free-group words, equations and algebraic sets"
)]
struct Cli {
    /// Comma-separated generator names, e.g. `a,b`.
    #[arg(long, env = "FGZ_ALPHABET", global = true)]
    alphabet: Option<String>,
    /// Name of the unknown in equations.
    #[arg(long = "var", default_value = DEFAULT_VARIABLE, global = true)]
    var: String,
    /// Ball radius: enumeration for `oracle` (default 4), discovery for
    /// `solve` (default 6), checked ball for `embed-check` (default 3).
    #[arg(long, global = true)]
    radius: Option<usize>,
    /// Verification radius for `solve` (default radius + 2).
    #[arg(long = "verify-radius", global = true)]
    verify_radius: Option<usize>,
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    /// Disable the thread pool.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Free reduction of a word.
    Reduce { word: String },
    /// Product of one or more words.
    Mul {
        #[arg(required = true)]
        words: Vec<String>,
    },
    /// Inverse of a word.
    Inv { word: String },
    /// Primitive root and exponent.
    Root { word: String },
    /// Generator of the (maximal cyclic) centralizer.
    Centralizer { word: String },
    /// Letters occurring in the reduced word.
    Support { word: String },
    /// Substitute a group element for the variable.
    Eval { equation: String, value: String },
    /// Solutions of `equation = 1` in a ball, by enumeration.
    Oracle { equation: String },
    /// Solution set of `equation = 1` as points and cosets.
    Solve { equation: String },
    /// Membership of a word in a set given as JSON.
    Member { set: String, word: String },
    /// Intersection of two sets.
    Intersect { left: String, right: String },
    /// Union of two sets.
    Union { left: String, right: String },
    /// Whether the first set is contained in the second.
    Subset { left: String, right: String },
    /// Checks that a sequence of sets descends and stabilizes.
    Chain {
        #[arg(required = true)]
        sets: Vec<String>,
    },
    /// Checks the diagonal letter-substitution map into powers of F(target).
    EmbedCheck {
        /// Comma-separated target alphabet.
        #[arg(long)]
        target: String,
    },
    /// Finite permutation representation in which the word is nontrivial.
    Separate { word: String },
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

struct Ctx {
    alphabet: Alphabet,
    var: String,
    radius: Option<usize>,
    verify_radius: Option<usize>,
    json: bool,
    exec: Exec,
}

impl Ctx {
    fn word(&self, text: &str) -> Result<Word> {
        self.alphabet.parse(text)
    }

    fn fmt(&self, w: &Word) -> String {
        self.alphabet.format(w)
    }

    fn equation(&self, text: &str) -> Result<OneVarWord> {
        OneVarWord::parse(&self.alphabet, &self.var, text)
    }

    fn closed(&self, text: &str) -> Result<ClosedSet> {
        let raw: SetJson = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        raw.to_closed(&self.alphabet)
    }

    fn proper(&self, text: &str) -> Result<AlgebraicSet> {
        let raw: SetJson = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        raw.to_set(&self.alphabet)
    }

    fn set_text(&self, s: &ClosedSet) -> String {
        let s = match s {
            ClosedSet::WholeGroup => return "F".into(),
            ClosedSet::Set(s) if s.is_empty() => return "∅".into(),
            ClosedSet::Set(s) => s,
        };
        let points = s.points().iter().map(|p| format!("{{{}}}", self.fmt(p)));
        let cosets = s
            .cosets()
            .iter()
            .map(|c| format!("({})⟨{}⟩", self.fmt(c.rep()), self.fmt(c.root())));
        points.chain(cosets).collect::<Vec<_>>().join(" ∪ ")
    }

    fn set_out(&self, s: &ClosedSet) -> String {
        if self.json {
            to_json(&SetJson::from_closed(s, &self.alphabet))
        } else {
            self.set_text(s)
        }
    }

    fn word_out(&self, w: &Word) -> String {
        if self.json {
            to_json(&json!({ "word": self.fmt(w) }))
        } else {
            self.fmt(w)
        }
    }

    fn bool_out(&self, b: bool) -> String {
        if self.json {
            to_json(&json!({ "result": b }))
        } else {
            b.to_string()
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serializable")
}

/// The whole group is contained in a proper set only over one letter, where
/// any coset of `⟨a⟩` is everything.
fn closed_subset(alphabet: &Alphabet, s: &ClosedSet, t: &ClosedSet) -> bool {
    match (s, t) {
        (_, ClosedSet::WholeGroup) => true,
        (ClosedSet::WholeGroup, ClosedSet::Set(t)) => {
            alphabet.rank() == 1 && !t.cosets().is_empty()
        }
        (ClosedSet::Set(s), ClosedSet::Set(t)) => s.is_subset(t),
    }
}

fn run(cli: Cli) -> std::result::Result<String, Failure> {
    let alphabet_text = cli.alphabet.ok_or_else(|| {
        Failure::Usage("no alphabet given (use --alphabet or FGZ_ALPHABET)".into())
    })?;
    let ctx = Ctx {
        alphabet: Alphabet::parse_list(&alphabet_text)?,
        var: cli.var,
        radius: cli.radius,
        verify_radius: cli.verify_radius,
        json: cli.json,
        exec: if cli.sequential {
            Exec::Sequential
        } else {
            Exec::default()
        },
    };

    Ok(match cli.command {
        Command::Reduce { word } => ctx.word_out(&ctx.word(&word)?),
        Command::Mul { words } => {
            let mut acc = Word::identity();
            for w in &words {
                acc = acc.multiply(&ctx.word(w)?);
            }
            ctx.word_out(&acc)
        }
        Command::Inv { word } => ctx.word_out(&ctx.word(&word)?.inverse()),
        Command::Root { word } => {
            let d = ctx.word(&word)?.primitive_root()?;
            if ctx.json {
                to_json(&json!({ "root": ctx.fmt(&d.root), "exponent": d.exponent }))
            } else {
                format!("({})^{}", ctx.fmt(&d.root), d.exponent)
            }
        }
        Command::Centralizer { word } => {
            let c = ctx.word(&word)?.centralizer()?;
            if ctx.json {
                to_json(&json!({ "generator": ctx.fmt(c.generator()) }))
            } else {
                format!("⟨{}⟩", ctx.fmt(c.generator()))
            }
        }
        Command::Support { word } => {
            let names: Vec<&str> = ctx
                .word(&word)?
                .support()
                .into_iter()
                .map(|l| ctx.alphabet.name(l))
                .collect();
            if ctx.json {
                to_json(&names)
            } else {
                names.join(" ")
            }
        }
        Command::Eval { equation, value } => {
            ctx.word_out(&ctx.equation(&equation)?.evaluate(&ctx.word(&value)?))
        }
        Command::Oracle { equation } => {
            let w = ctx.equation(&equation)?;
            let sols = brute_solutions(
                &w,
                &ctx.alphabet,
                ctx.radius.unwrap_or(DEFAULT_ORACLE_RADIUS),
            );
            let texts: Vec<String> = sols.iter().map(|g| ctx.fmt(g)).collect();
            if ctx.json {
                to_json(&texts)
            } else {
                texts.join("\n")
            }
        }
        Command::Solve { equation } => {
            let w = ctx.equation(&equation)?;
            let discovery = ctx.radius.unwrap_or(DEFAULT_SOLVE_RADIUS);
            let cfg = SolveConfig {
                verify_radius: ctx.verify_radius.unwrap_or(discovery + 2),
                exec: ctx.exec,
                ..SolveConfig::with_discovery(discovery)
            };
            let report = solve(&w, &ctx.alphabet, &cfg)?;
            // the report is always emitted in the JSON schema
            to_json(&SolveJson::from_report(&report, &ctx.alphabet))
        }
        Command::Member { set, word } => {
            ctx.bool_out(ctx.closed(&set)?.contains(&ctx.word(&word)?))
        }
        Command::Intersect { left, right } => {
            let result = match (ctx.closed(&left)?, ctx.closed(&right)?) {
                (ClosedSet::WholeGroup, t) => t,
                (s, ClosedSet::WholeGroup) => s,
                (ClosedSet::Set(s), ClosedSet::Set(t)) => ClosedSet::Set(s.intersect(&t)),
            };
            ctx.set_out(&result)
        }
        Command::Union { left, right } => {
            let result = match (ctx.closed(&left)?, ctx.closed(&right)?) {
                (ClosedSet::Set(s), ClosedSet::Set(t)) => ClosedSet::Set(s.union(&t)),
                _ => ClosedSet::WholeGroup,
            };
            ctx.set_out(&result)
        }
        Command::Subset { left, right } => {
            let (s, t) = (ctx.closed(&left)?, ctx.closed(&right)?);
            ctx.bool_out(closed_subset(&ctx.alphabet, &s, &t))
        }
        Command::Chain { sets } => {
            let chain = sets
                .iter()
                .map(|s| ctx.proper(s))
                .collect::<Result<Vec<_>>>()?;
            let r = chain_check(&chain);
            if ctx.json {
                to_json(&json!({
                    "descending": r.descending,
                    "strict_prefix_length": r.strict_prefix_length,
                    "stabilization_index": r.stabilization_index,
                    "measure_violations": r.measure_violations,
                }))
            } else {
                format!(
                    "descending: {}\nstrict prefix length: {}\nstabilizes at: {}\nmeasure violations: {}",
                    r.descending,
                    r.strict_prefix_length,
                    r.stabilization_index,
                    r.measure_violations.len()
                )
            }
        }
        Command::EmbedCheck { target } => {
            let target = Alphabet::parse_list(&target)?;
            let radius = ctx.radius.unwrap_or(DEFAULT_EMBED_RADIUS);
            let r = check_mono_on_ball(&ctx.alphabet, &target, radius, ctx.exec)?;
            if ctx.json {
                let indices: Vec<String> = r.indices.iter().map(|g| ctx.fmt(g)).collect();
                to_json(
                    &json!({ "indices": indices, "failures": r.failures, "checked": r.checked }),
                )
            } else {
                let mut lines = vec![
                    format!("injective: {}", r.injective),
                    format!("checked: {}", r.checked),
                    format!("indices: {}", r.indices.len()),
                    format!("failures: {}", r.failures.len()),
                ];
                lines.extend(r.failures.iter().map(|f| format!("  {f}")));
                lines.extend(r.notes.iter().map(|n| format!("note: {n}")));
                lines.join("\n")
            }
        }
        Command::Separate { word } => {
            let g = ctx.word(&word)?;
            let rep = separate(&g, &ctx.alphabet)?;
            let image = apply_perm_rep(&rep, &g)?;
            if ctx.json {
                let letter_map: serde_json::Map<String, Value> = rep
                    .letters()
                    .iter()
                    .enumerate()
                    .map(|(i, p)| {
                        (
                            ctx.alphabet.name(i as u32).to_string(),
                            Value::from(p.to_string()),
                        )
                    })
                    .collect();
                to_json(&json!({
                    "degree": rep.degree(),
                    "letter_map": letter_map,
                    "image_of_g": image.to_string(),
                    "separated": !image.is_identity(),
                }))
            } else {
                let mut lines = vec![format!("degree: {}", rep.degree())];
                for (i, p) in rep.letters().iter().enumerate() {
                    lines.push(format!("{} ↦ {p}", ctx.alphabet.name(i as u32)));
                }
                lines.push(format!("image of g: {image}"));
                lines.join("\n")
            }
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(out) => {
            if !out.is_empty() {
                println!("{out}");
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

//! Command-line front end. `execute_command` is pure apart from reading
//! input files and writing an optional report file, so it is tested directly.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::codes_r::{
    code_from_generators, dual_r_with, format_code_file, gray_image_code, parse_code_file, CombineMode, DualStrategy,
    LinearCodeR, RingVector,
};
use crate::cyclic_r::{cyclic_code_r, cyclic_dual_r, is_cyclic_r, self_dual_cyclic_search, CyclicSpecR};
use crate::error::{Error, Result};
use crate::fsd::{
    construction_a, construction_b, construction_c, is_formally_self_dual, isodual_witness_check, BorderedSpecR,
    CirculantSpecR, PermutationWitness, SymmetricMatrixR,
};
use crate::gf::{FieldParams, Polynomial};
use crate::linalg::DEFAULT_BUDGET;
use crate::ring::RingElem;
use crate::verify::{run_verification_suite, Scope};
use crate::wenum::{complete_enumerator, hamming_enumerator_r, lee_enumerator, symmetrized_enumerator};

#[derive(Parser, Debug)]
#[command(name = "ringcodes", version, about = "Linear codes over F_q + vF_q + v^2F_q with v^3 = v")]
struct Cli {
    /// Field size (a prime).
    #[arg(long, global = true)]
    q: Option<u32>,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Maximum number of vectors any enumeration may visit.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u128,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Gray image and Lee weight of one ring element.
    Gray {
        #[arg(long)]
        element: String,
    },
    /// Lee and Hamming weights of a vector over R.
    Weight {
        /// Whitespace-separated ring elements.
        #[arg(long)]
        vector: String,
    },
    /// Dual of a code over R.
    Dual {
        #[command(flatten)]
        code: CodeSource,
        #[arg(long, value_enum, default_value_t = DualArg::Auto)]
        strategy: DualArg,
    },
    /// Weight enumerator of a code over R.
    Enum {
        #[command(flatten)]
        code: CodeSource,
        #[arg(long, value_enum, default_value_t = EnumKind::Lee)]
        kind: EnumKind,
    },
    /// Cyclic code from three divisors of x^n - 1, or a self-dual search.
    Cyclic {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        f1: Option<String>,
        #[arg(long)]
        f2: Option<String>,
        #[arg(long)]
        f3: Option<String>,
        #[arg(long, value_enum, default_value_t = ModeArg::Idempotent)]
        mode: ModeArg,
        /// Output the dual code instead.
        #[arg(long)]
        dual: bool,
        /// Search all cyclic codes of length n for a self-dual one.
        #[arg(long, conflicts_with_all = ["f1", "f2", "f3", "dual"])]
        search: bool,
    },
    /// Formally self-dual constructions.
    Construct {
        #[command(subcommand)]
        which: Construct,
    },
    /// Run the claim-by-claim reproduction suite.
    VerifyPaper {
        #[arg(long, default_value = "all")]
        scope: String,
        /// Also write the report to this file.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum Construct {
    /// `[I | A]` with A symmetric, read from a matrix file.
    A {
        #[arg(long)]
        matrix_file: PathBuf,
    },
    /// `[I | M]` with M circulant.
    B {
        #[arg(long)]
        first_row: String,
    },
    /// Bordered double circulant.
    C {
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        omega: String,
        #[arg(long)]
        first_row: String,
    },
}

#[derive(Args, Debug)]
struct CodeSource {
    /// Code file: `q=<q> n=<n>` then one generator per line.
    #[arg(long, conflicts_with = "generator")]
    code_file: Option<PathBuf>,
    /// A generator row; repeat for several. Needs --q.
    #[arg(long = "gen")]
    generator: Vec<String>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum DualArg {
    Auto,
    Crt,
    Linear,
    BruteForce,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum EnumKind {
    Lee,
    Hamming,
    Swe,
    Cwe,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Idempotent,
    PaperLiteral,
}

struct Ctx {
    q: Option<u32>,
    seed: u64,
    budget: u128,
    json: bool,
}

impl Ctx {
    fn params(&self) -> Result<FieldParams> {
        let q = self.q.ok_or_else(|| Error::InvalidArgument("--q is required".into()))?;
        FieldParams::new(q)
    }

    fn check_q(&self, p: FieldParams) -> Result<()> {
        match self.q {
            Some(q) if q != p.q() => Err(Error::ParamMismatch { left: q, right: p.q() }),
            _ => Ok(()),
        }
    }
}

/// Runs one invocation. `argv[0]` is the program name. Returns the exit code
/// (0 success, 1 verification inconsistency, 2 usage or input error) and the
/// text to print.
pub fn execute_command<S: AsRef<str>>(argv: &[S]) -> (i32, String) {
    let cli = match Cli::try_parse_from(argv.iter().map(|s| s.as_ref())) {
        Ok(c) => c,
        Err(e) => return (e.exit_code(), e.render().to_string()),
    };
    let ctx = Ctx { q: cli.q, seed: cli.seed, budget: cli.budget, json: cli.format == Format::Json };
    match run(&ctx, cli.command) {
        Ok(r) => r,
        Err(e) => (2, format!("error: {e}\n")),
    }
}

fn out(ctx: &Ctx, text: String, value: serde_json::Value) -> (i32, String) {
    if ctx.json {
        (0, serde_json::to_string_pretty(&value).expect("json value") + "\n")
    } else {
        (0, text)
    }
}

fn load_code(ctx: &Ctx, src: &CodeSource) -> Result<LinearCodeR> {
    let c = if let Some(path) = &src.code_file {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))?;
        parse_code_file(&text)?
    } else if !src.generator.is_empty() {
        let p = ctx.params()?;
        let rows = src.generator.iter().map(|g| RingVector::parse(p, g)).collect::<Result<Vec<_>>>()?;
        let n = rows[0].len();
        code_from_generators(p, n, rows)?
    } else {
        return Err(Error::InvalidArgument("give --code-file or at least one --gen".into()));
    };
    ctx.check_q(c.params())?;
    Ok(c)
}

fn code_json(c: &LinearCodeR) -> serde_json::Value {
    json!({
        "q": c.params().q(),
        "n": c.n(),
        "size_exponent": c.dim_fq(),
        "generators": c.generators().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
    })
}

fn run(ctx: &Ctx, cmd: Command) -> Result<(i32, String)> {
    match cmd {
        Command::Gray { element } => {
            let p = ctx.params()?;
            let x = RingElem::parse(p, &element)?;
            let g = x.gray();
            Ok(out(
                ctx,
                format!("{g} weight {}\n", x.lee_weight()),
                json!({"element": x.to_string(), "gray": g.0, "lee_weight": x.lee_weight()}),
            ))
        }
        Command::Weight { vector } => {
            let p = ctx.params()?;
            let v = RingVector::parse(p, &vector)?;
            let (lee, ham) = (v.lee_weight(), v.hamming_weight());
            Ok(out(
                ctx,
                format!("lee {lee} hamming {ham}\n"),
                json!({"vector": v.to_string(), "gray": v.gray(), "lee_weight": lee, "hamming_weight": ham}),
            ))
        }
        Command::Dual { code, strategy } => {
            let c = load_code(ctx, &code)?;
            let s = match strategy {
                DualArg::Auto => DualStrategy::Auto,
                DualArg::Crt => DualStrategy::Crt,
                DualArg::Linear => DualStrategy::Linear,
                DualArg::BruteForce => DualStrategy::BruteForce,
            };
            let d = dual_r_with(&c, s, ctx.budget)?;
            Ok(out(ctx, format_code_file(&d), code_json(&d)))
        }
        Command::Enum { code, kind } => {
            let c = load_code(ctx, &code)?;
            let (text, value) = match kind {
                EnumKind::Lee | EnumKind::Hamming => {
                    let e = if matches!(kind, EnumKind::Lee) {
                        lee_enumerator(&c, ctx.budget)?
                    } else {
                        hamming_enumerator_r(&c, ctx.budget)?
                    };
                    let parts: Vec<String> = e.nonzero().map(|(w, n)| format!("{w}:{n}")).collect();
                    (format!("{{{}}}\n", parts.join(",")), serde_json::to_value(&e).expect("json"))
                }
                EnumKind::Swe => {
                    let e = symmetrized_enumerator(&c, ctx.budget)?;
                    let parts: Vec<String> =
                        e.counts().iter().map(|(k, n)| format!("({},{},{},{}):{n}", k[0], k[1], k[2], k[3])).collect();
                    (format!("{{{}}}\n", parts.join(",")), serde_json::to_value(&e).expect("json"))
                }
                EnumKind::Cwe => {
                    let e = complete_enumerator(&c, ctx.budget)?;
                    let parts: Vec<String> = e
                        .counts()
                        .iter()
                        .map(|(k, n)| {
                            let t: Vec<String> = k.iter().map(u32::to_string).collect();
                            format!("({}):{n}", t.join(","))
                        })
                        .collect();
                    (format!("{{{}}}\n", parts.join(",")), serde_json::to_value(&e).expect("json"))
                }
            };
            Ok(out(ctx, text, value))
        }
        Command::Cyclic { n, f1, f2, f3, mode, dual, search } => {
            let p = ctx.params()?;
            if search {
                let r = self_dual_cyclic_search(p, n, ctx.budget)?;
                let text = format!(
                    "witness: {}\nexhausted: {}\ntested: {}\n",
                    serde_json::to_string(&r.witness).expect("json"),
                    r.exhausted,
                    r.tested
                );
                return Ok(out(ctx, text, serde_json::to_value(&r).expect("json")));
            }
            let poly = |f: Option<String>, name: &str| -> Result<Polynomial> {
                let f = f.ok_or_else(|| Error::InvalidArgument(format!("--{name} is required")))?;
                Polynomial::parse(p, &f)
            };
            let spec = CyclicSpecR::new(p, n, poly(f1, "f1")?, poly(f2, "f2")?, poly(f3, "f3")?)?;
            let mode = match mode {
                ModeArg::Idempotent => CombineMode::Idempotent,
                ModeArg::PaperLiteral => CombineMode::PaperLiteral,
            };
            let c = if dual { cyclic_dual_r(&spec)? } else { cyclic_code_r(&spec, mode)? };
            let size = c.size().map(|s| s.to_string()).unwrap_or_else(|| format!("{}^{}", p.q(), c.dim_fq()));
            let predicted = if dual { 3 * n - spec.expected_dim() } else { spec.expected_dim() };
            let cyclic = is_cyclic_r(&c);
            let text = format!(
                "size {size} ({}^{})\npredicted {}^{predicted}\ncyclic {cyclic}\n{}",
                p.q(),
                c.dim_fq(),
                p.q(),
                format_code_file(&c)
            );
            let mut v = code_json(&c);
            v["size"] = json!(size);
            v["predicted_exponent"] = json!(predicted);
            v["cyclic"] = json!(cyclic);
            v["spec"] = serde_json::to_value(&spec).expect("json");
            Ok(out(ctx, text, v))
        }
        Command::Construct { which } => {
            let (c, w) = match which {
                Construct::A { matrix_file } => {
                    let text = std::fs::read_to_string(&matrix_file)
                        .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", matrix_file.display())))?;
                    let a = SymmetricMatrixR::parse_file(&text)?;
                    construction_a(&a)?
                }
                Construct::B { first_row } => {
                    let p = ctx.params()?;
                    construction_b(&CirculantSpecR::new(RingVector::parse(p, &first_row)?))?
                }
                Construct::C { alpha, omega, first_row } => {
                    let p = ctx.params()?;
                    construction_c(&BorderedSpecR {
                        alpha: RingElem::parse(p, &alpha)?,
                        omega: RingElem::parse(p, &omega)?,
                        core: CirculantSpecR::new(RingVector::parse(p, &first_row)?),
                    })?
                }
            };
            ctx.check_q(c.params())?;
            construct_report(ctx, &c, &w)
        }
        Command::VerifyPaper { scope, output } => {
            let scope = Scope::parse(&scope)?;
            let report = run_verification_suite(scope, ctx.seed, ctx.budget);
            let text = if ctx.json { report.to_json() } else { report.to_text() };
            if let Some(path) = output {
                std::fs::write(&path, &text)
                    .map_err(|e| Error::InvalidArgument(format!("cannot write {}: {e}", path.display())))?;
            }
            let code = if report.is_complete() && report.all_consistent() { 0 } else { 1 };
            Ok((code, text))
        }
    }
}

fn construct_report(ctx: &Ctx, c: &LinearCodeR, w: &PermutationWitness) -> Result<(i32, String)> {
    let witness_ok = isodual_witness_check(c, w)?;
    let within = |e: &Error| matches!(e, Error::SearchSpaceTooLarge { .. });
    let fsd = match is_formally_self_dual(c, ctx.budget) {
        Ok(b) => Some(b),
        Err(e) if within(&e) => None,
        Err(e) => return Err(e),
    };
    let g = gray_image_code(c);
    let d = match g.space().min_weight(ctx.budget) {
        Ok(d) => Some(d),
        Err(e) if within(&e) || e == Error::EmptyCode => None,
        Err(e) => return Err(e),
    };
    let show = |o: Option<String>| o.unwrap_or_else(|| "over budget".into());
    let text = format!(
        "{}witness perm {:?} negate {:?}\nwitness check {witness_ok}\nformally self-dual {}\ngray image [{},{},{}]_{}\n",
        format_code_file(c),
        w.perm,
        w.negate,
        show(fsd.map(|b| b.to_string())),
        g.n(),
        g.k(),
        show(d.map(|d| d.to_string())),
        c.params().q()
    );
    let mut v = code_json(c);
    v["witness"] = serde_json::to_value(w).expect("json");
    v["witness_check"] = json!(witness_ok);
    v["formally_self_dual"] = json!(fsd);
    v["gray"] = json!({"length": g.n(), "dimension": g.k(), "min_distance": d});
    Ok(out(ctx, text, v))
}

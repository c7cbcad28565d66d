use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use skewcodes::bracket::{BchBound, BracketContext};
use skewcodes::linear_code::MIN_WEIGHT_BUDGET;
use skewcodes::orbit_sqt::{companion, pcm, sqt_search};
use skewcodes::table::{self, RowOutcome, TABLE};
use skewcodes::{
    CodeExport, ConstacyclicSpec, Error, ErrorKind, FieldSpec, LinearCode, MatrixFq, SkewPoly, SkewRing, SqtExport,
    SqtSpec, WeightRoute,
};

#[derive(Parser, Debug)]
#[command(name = "skewcodes", version, about = "Skew constacyclic and skew quasi-twisted codes over finite fields")]
struct Cli {
    /// Characteristic.
    #[arg(long, default_value_t = 2, global = true)]
    p: u64,
    /// Extension degree, q = p^r.
    #[arg(long, default_value_t = 2, global = true)]
    r: u32,
    /// Frobenius exponent: theta(a) = a^(p^s).
    #[arg(long, default_value_t = 1, global = true)]
    s: u32,
    /// Ascending modulus coefficients, e.g. 1,1,0,1.
    #[arg(long, global = true)]
    modulus: Option<String>,
    #[arg(long, value_enum, default_value_t = Output::Text, global = true)]
    output: Output,
    /// Worker threads (0 = all cores).
    #[arg(long, default_value_t = 0, global = true)]
    threads: usize,
    /// Seed for the randomized orbit search.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Monic nontrivial right divisors of x^n - alpha.
    Sd {
        n: usize,
        alpha: u64,
        #[arg(long)]
        min_deg: Option<usize>,
        #[arg(long)]
        max_deg: Option<usize>,
    },
    /// A skew constacyclic code and its dual.
    Dual { n: usize, alpha: u64, g: String },
    /// Companion matrix and orbit parity-check matrix of g.
    Pcm { n: usize, g: String },
    /// An SQT code from a shorthand, or searched from `m N g`.
    Sqt {
        #[arg(num_args = 1..=3, required = true)]
        args: Vec<String>,
    },
    /// BCH-style bound from the bracket image of g.
    Bound {
        n: usize,
        alpha: u64,
        g: String,
        #[arg(long)]
        c: Option<u64>,
        #[arg(long)]
        l: Option<u64>,
    },
    /// Rebuild the reference table of SQT codes.
    Table,
    /// Exact minimum distance of a generator matrix.
    Minweight {
        /// Rows separated by `;`, digits by `,`.
        rows: Option<String>,
        /// JSON file with {n, k, rows}.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Route::Auto)]
        route: Route,
        #[arg(long, default_value_t = MIN_WEIGHT_BUDGET)]
        budget: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Route {
    Auto,
    Codewords,
    Columns,
}

enum Failure {
    Lib(Error),
    /// Output was printed but a check failed.
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Run = Result<(), Failure>;

fn digits(s: &str) -> Result<Vec<u64>, Error> {
    let s = s.trim();
    let bad = || Error::InvalidParameter(format!("`{s}` is not a digit list"));
    if s.contains(',') {
        s.split(',').map(|t| t.trim().parse().map_err(|_| bad())).collect()
    } else {
        s.chars().map(|c| c.to_digit(36).map(u64::from).ok_or_else(bad)).collect()
    }
}

fn join(d: &[u64]) -> String {
    d.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

fn print_json<T: Serialize>(v: &T) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

struct Ctx {
    ring: SkewRing,
    output: Output,
    seed: Option<u64>,
}

impl Ctx {
    fn field(&self) -> &FieldSpec {
        self.ring.field()
    }

    fn spec(&self, n: usize, alpha: u64) -> Result<ConstacyclicSpec, Error> {
        ConstacyclicSpec::new(self.ring.clone(), n, self.field().from_digit(alpha)?)
    }

    fn poly(&self, s: &str) -> Result<SkewPoly, Error> {
        self.ring.from_digits(&digits(s)?)
    }

    fn header(&self) -> String {
        let f = self.field();
        format!(
            "GF({}) modulus [{}], theta = a^{}",
            f.order(),
            join(f.modulus()),
            f.p().pow(self.ring.aut().s())
        )
    }
}

#[derive(Serialize, Deserialize)]
struct SdReport {
    n: usize,
    alpha: u64,
    divisors: Vec<Vec<u64>>,
    count: usize,
}

fn cmd_sd(ctx: &Ctx, n: usize, alpha: u64, min_deg: Option<usize>, max_deg: Option<usize>) -> Run {
    let c = ctx.spec(n, alpha)?;
    let divs = c.right_divisors(min_deg.unwrap_or(1), max_deg.unwrap_or(n - 1))?;
    let digits: Vec<Vec<u64>> = divs.iter().map(|g| ctx.ring.to_digits(g)).collect::<Result<_, _>>()?;
    match ctx.output {
        Output::Json => print_json(&SdReport {
            n,
            alpha,
            count: digits.len(),
            divisors: digits,
        }),
        Output::Text => {
            println!("right divisors of x^{n} - {} over {}", ctx.field().display(c.alpha()), ctx.header());
            for (g, d) in divs.iter().zip(&digits) {
                println!("{}  {}", join(d), ctx.ring.render(g));
            }
            println!("count: {}", digits.len());
        }
    }
    Ok(())
}

#[derive(Serialize, Deserialize)]
struct DualReport {
    g_digits: Vec<u64>,
    code: CodeExport,
    dual_alpha: u64,
    h_digits: Vec<u64>,
    dual: CodeExport,
    product_zero: bool,
}

fn cmd_dual(ctx: &Ctx, n: usize, alpha: u64, g: &str) -> Run {
    let c = ctx.spec(n, alpha)?;
    let g = ctx.poly(g)?;
    let code = c.code(&g)?;
    let gm = c.gen_matrix(&g)?;
    let dual = code.dual()?;
    let hm = dual.spec().gen_matrix(dual.generator_poly())?.normalize_rows();
    let zero = gm.mul(&hm.transpose())?.is_zero();
    let f = ctx.field();
    let d = code.code().min_weight()?;
    let dd = dual.code().min_weight()?;
    let export = |m: &MatrixFq, d: usize| -> Result<CodeExport, Error> {
        Ok(CodeExport {
            n,
            k: m.rows(),
            d: Some(d),
            rows: m.to_digit_rows()?,
        })
    };
    let report = DualReport {
        g_digits: ctx.ring.to_digits(&g)?,
        code: export(&gm, d)?,
        dual_alpha: f.to_digit(dual.spec().alpha())?,
        h_digits: ctx.ring.to_digits(dual.generator_poly())?,
        dual: export(&hm, dd)?,
        product_zero: zero,
    };
    match ctx.output {
        Output::Json => print_json(&report),
        Output::Text => {
            println!("Code skew {}-cyclic of type [{n}, {}, {d}]", f.display(c.alpha()), gm.rows());
            println!("Generator polynomial: {}", ctx.ring.render(&g));
            println!("Generator matrix:\n{}", gm.render());
            println!();
            println!(
                "Dual code skew {}-cyclic of type [{n}, {}, {dd}]",
                f.display(dual.spec().alpha()),
                hm.rows()
            );
            println!("Check polynomial: {}", ctx.ring.render(dual.generator_poly()));
            println!("Parity check matrix:\n{}", hm.render());
            println!();
            println!("G * H^t = 0: {zero}");
        }
    }
    if !zero {
        return Err(Failure::Check("G * H^t is not zero".into()));
    }
    Ok(())
}

#[derive(Serialize, Deserialize)]
struct PcmReport {
    n: usize,
    alpha: u64,
    g_digits: Vec<u64>,
    companion: Vec<Vec<u64>>,
    h: Vec<Vec<u64>>,
}

fn cmd_pcm(ctx: &Ctx, n: usize, g: &str) -> Run {
    let g = ctx.poly(g)?;
    if !g.is_monic() {
        return Err(Error::NotMonic.into());
    }
    let alpha = ctx
        .ring
        .binomial_constant(&g, n)
        .ok_or(Error::NotRightDivisor { n })?;
    let c = ConstacyclicSpec::new(ctx.ring.clone(), n, alpha)?;
    let t = companion(&ctx.ring, &g)?;
    let h = pcm(&c, &g)?;
    let f = ctx.field();
    match ctx.output {
        Output::Json => print_json(&PcmReport {
            n,
            alpha: f.to_digit(alpha)?,
            g_digits: ctx.ring.to_digits(&g)?,
            companion: t.to_digit_rows()?,
            h: h.to_digit_rows()?,
        }),
        Output::Text => {
            println!("g = {} divides x^{n} - {}", ctx.ring.render(&g), f.display(alpha));
            println!("Companion matrix:\n{}", t.render());
            println!("Parity check matrix:\n{}", h.render());
        }
    }
    Ok(())
}

#[derive(Serialize, Deserialize)]
struct SqtReport {
    shorthand: String,
    spec: SqtExport,
    code: CodeExport,
}

fn cmd_sqt(ctx: &Ctx, args: &[String]) -> Run {
    let spec = match args {
        [text] => SqtSpec::parse(ctx.ring.clone(), text)?,
        [m, n, g] => {
            let parse = |s: &str| {
                s.parse::<usize>()
                    .map_err(|_| Error::InvalidParameter(format!("`{s}` is not a count")))
            };
            sqt_search(&ctx.ring, &ctx.poly(g)?, parse(m)?, parse(n)?, ctx.seed)?
        }
        _ => {
            return Err(Error::InvalidParameter("sqt takes a shorthand or `m N g`".into()).into());
        }
    };
    let code = spec.code()?;
    let d = code.min_weight()?;
    let m = spec.matrix()?;
    let report = SqtReport {
        shorthand: spec.emit()?,
        spec: spec.export()?,
        code: CodeExport {
            n: code.len(),
            k: code.dim(),
            d: Some(d),
            rows: m.to_digit_rows()?,
        },
    };
    match ctx.output {
        Output::Json => print_json(&report),
        Output::Text => {
            println!(
                "Skew quasi-twisted code of type [{}, {}, {d}] over {}",
                code.len(),
                code.dim(),
                ctx.header()
            );
            println!("alpha = {}", ctx.field().display(spec.alpha()));
            println!("{}", report.shorthand);
            println!("{}", m.render());
        }
    }
    Ok(())
}

#[derive(Serialize, Deserialize)]
struct BoundReport {
    n: usize,
    alpha: u64,
    g_digits: Vec<u64>,
    bound: BchBound,
    d: Option<usize>,
    holds: Option<bool>,
}

fn cmd_bound(ctx: &Ctx, n: usize, alpha: u64, g: &str, c: Option<u64>, l: Option<u64>) -> Run {
    let cs = ctx.spec(n, alpha)?;
    let g = ctx.poly(g)?;
    let code = cs.code(&g)?;
    let bctx = BracketContext::new(&ctx.ring)?;
    let bound = match (c, l) {
        (None, None) => bctx.best_bch_bound(&cs, &g)?,
        (c, l) => bctx.bch_bound(&cs, &g, c.unwrap_or(1), l.unwrap_or(0))?,
    };
    let d = match code.code().min_weight() {
        Ok(d) => Some(d),
        Err(Error::BudgetExceeded(_)) => None,
        Err(e) => return Err(e.into()),
    };
    let holds = d.map(|d| bound.delta <= d);
    match ctx.output {
        Output::Json => print_json(&BoundReport {
            n,
            alpha,
            g_digits: ctx.ring.to_digits(&g)?,
            bound,
            d,
            holds,
        }),
        Output::Text => {
            println!("delta = {} (stride c = {}, offset l = {})", bound.delta, bound.c, bound.l);
            match d {
                Some(d) => println!("exact d = {d}; delta <= d: {}", bound.delta <= d),
                None => println!("exact d: beyond budget"),
            }
        }
    }
    if holds == Some(false) {
        return Err(Failure::Check("the bound exceeds the exact distance".into()));
    }
    Ok(())
}

#[derive(Serialize, Deserialize)]
struct TableLine {
    n: usize,
    k: usize,
    d: usize,
    q: u64,
    shorthand: String,
    matched: bool,
    attempts: Vec<RowOutcome>,
}

#[derive(Serialize, Deserialize)]
struct TableReport {
    rows: Vec<TableLine>,
    matched: usize,
    total: usize,
}

fn cmd_table(ctx: &Ctx) -> Run {
    let rows: Vec<TableLine> = TABLE
        .iter()
        .map(|row| {
            let attempts = table::reproduce(row);
            TableLine {
                n: row.n,
                k: row.k,
                d: row.d,
                q: row.q,
                shorthand: row.shorthand.to_string(),
                matched: attempts.last().is_some_and(|o| o.matches(row)),
                attempts,
            }
        })
        .collect();
    let matched = rows.iter().filter(|r| r.matched).count();
    let total = rows.len();
    match ctx.output {
        Output::Json => print_json(&TableReport { rows, matched, total }),
        Output::Text => {
            for r in &rows {
                let last = r.attempts.last().expect("one attempt");
                let p = |v: Option<usize>| v.map_or("?".to_string(), |x| x.to_string());
                println!(
                    "{:<4} expected [{},{},{}]_{} computed [{},{},{}] {:?}{}",
                    if r.matched { "ok" } else { "FAIL" },
                    r.n,
                    r.k,
                    r.d,
                    r.q,
                    p(last.n),
                    p(last.k),
                    p(last.d),
                    last.reading,
                    last.error.as_ref().map_or(String::new(), |e| format!(" ({e})"))
                );
            }
            println!("{matched}/{total} rows reproduced");
        }
    }
    if matched < total {
        return Err(Failure::Check(format!("{} rows differ", total - matched)));
    }
    Ok(())
}

fn cmd_minweight(ctx: &Ctx, rows: Option<&str>, input: Option<&PathBuf>, route: Route, budget: u64) -> Run {
    let f = ctx.field();
    let digit_rows: Vec<Vec<u64>> = match (rows, input) {
        (Some(r), None) => r.split(';').map(digits).collect::<Result<_, _>>()?,
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::InvalidParameter(format!("{}: {e}", path.display())))?;
            let e: CodeExport = serde_json::from_str(&text)
                .map_err(|e| Error::InvalidParameter(format!("{}: {e}", path.display())))?;
            e.rows
        }
        _ => return Err(Error::InvalidParameter("give rows or --input, not both".into()).into()),
    };
    let code = LinearCode::from_rows(&MatrixFq::from_digit_rows(f, &digit_rows)?)?;
    let route = match route {
        Route::Auto => None,
        Route::Codewords => Some(WeightRoute::Codewords),
        Route::Columns => Some(WeightRoute::CheckColumns),
    };
    let d = code.min_weight_with(route, budget)?;
    match ctx.output {
        Output::Json => print_json(&code.export(Some(d))?),
        Output::Text => println!("[{}, {}, {d}]", code.len(), code.dim()),
    }
    Ok(())
}

fn run(cli: &Cli) -> Run {
    if cli.threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global()
            .map_err(|e| Error::InvalidParameter(e.to_string()))?;
    }
    let modulus = cli.modulus.as_deref().map(digits).transpose()?;
    let f = FieldSpec::new(cli.p, cli.r, modulus.as_deref())?;
    let ctx = Ctx {
        ring: SkewRing::frobenius(&f, cli.s)?,
        output: cli.output,
        seed: cli.seed,
    };
    match &cli.command {
        Command::Sd {
            n,
            alpha,
            min_deg,
            max_deg,
        } => cmd_sd(&ctx, *n, *alpha, *min_deg, *max_deg),
        Command::Dual { n, alpha, g } => cmd_dual(&ctx, *n, *alpha, g),
        Command::Pcm { n, g } => cmd_pcm(&ctx, *n, g),
        Command::Sqt { args } => cmd_sqt(&ctx, args),
        Command::Bound { n, alpha, g, c, l } => cmd_bound(&ctx, *n, *alpha, g, *c, *l),
        Command::Table => cmd_table(&ctx),
        Command::Minweight {
            rows,
            input,
            route,
            budget,
        } => cmd_minweight(&ctx, rows.as_deref(), input.as_ref(), *route, *budget),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("check failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e.kind() {
                ErrorKind::Verification => 1,
                ErrorKind::BadInput => 2,
                ErrorKind::Budget => 3,
            })
        }
    }
}

//! Command-line interface. `run` returns the full stdout and an exit code
//! instead of printing, so commands are testable in-process.

use std::fmt::Write as _;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use kerov_core::cumulants::{anisotropic_mr, free_cumulants, moments};
use kerov_core::diagrams::{anisotropic, omega_curve, ContinuousDiagram};
use kerov_core::field::FieldElement;
use kerov_core::jack::{JackBook, DEFAULT_JACK_CAP};
use kerov_core::kerov::{verify_degree_bounds, KerovBasis, KerovSolver, DEFAULT_KEROV_CAP};
use kerov_core::partitions::Partition;
use kerov_core::plancherel::{
    grow_sample, plancherel_dist_f64, plancherel_dist_rational, plancherel_dist_symbolic, EnumerationCaps,
    DEFAULT_EXACT_CAP, DEFAULT_FLOAT_CAP,
};
use kerov_core::symfunc::{convert, Basis, SymFun, TransitionTables};
use kerov_core::Error;
use serde_json::{json, Value as Json};

use crate::alpha::{specialise, Alpha, Value};
use crate::cache::{fill_book, JackCache};
use crate::config::{default_threads, Config, OutputFormat, DEFAULT_GRID_STEP};
use crate::parallel::{self, mus_up_to, prepare_solver, sample_rng, verify_all};
use crate::render;

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_CAP: u8 = 2;
pub const EXIT_THEOREM: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "kerov", version, about = "Jack characters, anisotropic free cumulants and Kerov polynomials")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    /// Worker threads; defaults to the available cores.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// `t` (symbolic), `p/q` or an integer (exact), or a decimal (floating).
    #[arg(long, global = true, default_value = "t")]
    pub alpha: Alpha,
    #[arg(long, global = true, default_value_t = DEFAULT_JACK_CAP)]
    pub jack_cap: usize,
    #[arg(long, global = true, default_value_t = DEFAULT_KEROV_CAP)]
    pub kerov_cap: usize,
    #[arg(long, global = true, default_value_t = DEFAULT_EXACT_CAP)]
    pub exact_cap: usize,
    #[arg(long, global = true, default_value_t = DEFAULT_FLOAT_CAP)]
    pub float_cap: usize,
    #[arg(long, global = true, default_value_t = DEFAULT_GRID_STEP)]
    pub grid_step: f64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exact,
    Sample,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Expansion of J_λ in the p, m, h or e basis.
    Jack {
        lambda: Partition,
        #[arg(long, default_value = "p", value_parser = parse_basis)]
        basis: Basis,
    },
    /// θ_ρ(λ), the coefficient of p_ρ in J_λ.
    Theta { lambda: Partition, rho: Partition },
    /// The normalized character Ch_μ(λ).
    Ch { mu: Partition, lambda: Partition },
    /// Anisotropic moments and free cumulants of λ.
    Moments {
        lambda: Partition,
        #[arg(long, default_value_t = 6)]
        order: usize,
    },
    /// K_μ (basis R) or L_μ (basis M) with its degree report.
    Kerov {
        mu: Partition,
        #[arg(long, default_value = "R", value_parser = parse_kerov_basis)]
        basis: KerovBasis,
    },
    /// Checks every μ with |μ|+ℓ(μ) up to the given degree.
    Verify {
        #[arg(long)]
        max_degree: Option<usize>,
    },
    /// Jack–Plancherel measure: exact enumeration or growth samples.
    Plancherel {
        n: usize,
        #[arg(long, value_enum, default_value_t = Mode::Exact)]
        mode: Mode,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        /// Exact expectation of `Ch:μ`, `theta:μ` or `M:ρ`.
        #[arg(long)]
        expect: Option<Observable>,
    },
    /// Limit-shape statistics, or with `--grid` the profile against Ω.
    Limitshape {
        n: usize,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long)]
        grid: bool,
    },
}

fn parse_basis(s: &str) -> Result<Basis, String> {
    let mut chars = s.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) => Basis::from_letter(c.to_ascii_lowercase()).ok_or_else(|| format!("unknown basis {s:?}")),
        _ => Err(format!("unknown basis {s:?}")),
    }
}

fn parse_kerov_basis(s: &str) -> Result<KerovBasis, String> {
    match s {
        "R" | "r" => Ok(KerovBasis::R),
        "M" | "m" => Ok(KerovBasis::M),
        _ => Err(format!("unknown Kerov basis {s:?}; expected R or M")),
    }
}

/// A function of `λ` whose Plancherel expectation is requested.
#[derive(Debug, Clone, PartialEq)]
pub enum Observable {
    Ch(Partition),
    Theta(Partition),
    Moments(Partition),
}

impl FromStr for Observable {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (kind, arg) = s.split_once(':').ok_or_else(|| format!("expected KIND:PARTITION, got {s:?}"))?;
        let p: Partition = arg.parse().map_err(|e: Error| e.to_string())?;
        match kind.to_ascii_lowercase().as_str() {
            "ch" => Ok(Observable::Ch(p)),
            "theta" => Ok(Observable::Theta(p)),
            "m" => Ok(Observable::Moments(p)),
            _ => Err(format!("unknown observable {kind:?}; expected Ch, theta or M")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
    /// Output produced before the failure.
    partial: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
            partial: String::new(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::CapExceeded { .. } => EXIT_CAP,
            Error::TheoremViolation { .. } | Error::PolynomialityViolation { .. } => EXIT_THEOREM,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
            partial: String::new(),
        }
    }
}

type CmdResult = Result<String, Failure>;

impl Cli {
    pub fn config(&self) -> Config {
        Config {
            jack_cap: self.jack_cap,
            kerov_cap: self.kerov_cap,
            enumeration: EnumerationCaps {
                exact: self.exact_cap,
                float: self.float_cap,
            },
            grid_step: self.grid_step,
            format: self.format,
            seed: self.seed,
            alpha: self.alpha.clone(),
            threads: self.threads.unwrap_or_else(default_threads),
        }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let (stdout, stderr) = if code == EXIT_OK { (text, String::new()) } else { (String::new(), text) };
            Outcome { stdout, stderr, code }
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let cfg = cli.config();
    let result = cfg
        .validate()
        .map_err(Failure::usage)
        .and_then(|()| parallel::with_threads(cfg.threads, || dispatch(&cli.command, &cfg)));
    match result {
        Ok(stdout) => Outcome {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        },
        Err(f) => Outcome {
            stdout: f.partial,
            stderr: format!("error: {}\n", f.message),
            code: f.code,
        },
    }
}

fn book_up_to(cfg: &Config, degree: usize) -> Result<JackBook, Failure> {
    let mut book = JackBook::new(cfg.jack_cap);
    if degree > cfg.jack_cap {
        return Err(Error::CapExceeded {
            what: "jack degree",
            requested: degree,
            cap: cfg.jack_cap,
        }
        .into());
    }
    fill_book(&mut book, degree, JackCache::from_env().as_ref())?;
    Ok(book)
}

fn dispatch(cmd: &Command, cfg: &Config) -> CmdResult {
    match cmd {
        Command::Jack { lambda, basis } => cmd_jack(cfg, lambda, *basis),
        Command::Theta { lambda, rho } => {
            let book = book_up_to(cfg, lambda.size())?;
            let v = book.theta_built(lambda, rho)?;
            scalar_output(cfg, &v, json!({ "lambda": lambda.to_string(), "rho": rho.to_string() }))
        }
        Command::Ch { mu, lambda } => {
            let book = book_up_to(cfg, lambda.size())?;
            let v = book.ch_built(mu, lambda)?;
            scalar_output(cfg, &v, json!({ "mu": mu.to_string(), "lambda": lambda.to_string() }))
        }
        Command::Moments { lambda, order } => cmd_moments(cfg, lambda, *order),
        Command::Kerov { mu, basis } => cmd_kerov(cfg, mu, *basis),
        Command::Verify { max_degree } => cmd_verify(cfg, max_degree.unwrap_or(cfg.kerov_cap)),
        Command::Plancherel {
            n,
            mode,
            samples,
            expect,
        } => match (mode, expect) {
            (Mode::Exact, Some(obs)) => cmd_expect(cfg, *n, obs),
            (Mode::Exact, None) => cmd_distribution(cfg, *n),
            (Mode::Sample, None) => cmd_samples(cfg, *n, *samples, false),
            (Mode::Sample, Some(_)) => Err(Failure::usage("--expect needs --mode exact")),
        },
        Command::Limitshape { n, samples, grid } => {
            if *grid {
                cmd_grid(cfg, *n)
            } else {
                cmd_samples(cfg, *n, *samples, true)
            }
        }
    }
}

fn scalar_output(cfg: &Config, v: &FieldElement, mut fields: Json) -> CmdResult {
    let value = specialise(v, &cfg.alpha).map_err(Failure::usage)?;
    Ok(match cfg.format {
        OutputFormat::Json => {
            fields["alpha"] = json!(cfg.alpha.to_string());
            fields["value"] = render::value_json(&value);
            format!("{fields}\n")
        }
        _ => format!("{value}\n"),
    })
}

fn cmd_jack(cfg: &Config, lambda: &Partition, basis: Basis) -> CmdResult {
    let book = book_up_to(cfg, lambda.size())?;
    let table = book.get(lambda.size()).expect("filled");
    let exp = table.expansion(lambda).expect("λ has the table's degree");
    let f: SymFun = match basis {
        Basis::P => exp.in_p,
        Basis::M => exp.in_m,
        other => convert(&exp.in_p, other, &TransitionTables::new(lambda.size())),
    };
    let mut coeffs = Vec::new();
    for (rho, c) in f.terms() {
        coeffs.push((rho.clone(), specialise(c, &cfg.alpha).map_err(Failure::usage)?));
    }
    let letter = basis.letter();
    Ok(match cfg.format {
        OutputFormat::Json => {
            let cs: Vec<Json> = coeffs
                .iter()
                .map(|(rho, v)| json!({ "partition": rho.to_string(), "coeff": render::value_json(v) }))
                .collect();
            let j = json!({
                "lambda": lambda.to_string(),
                "basis": letter.to_string(),
                "alpha": cfg.alpha.to_string(),
                "coeffs": cs,
            });
            format!("{j}\n")
        }
        OutputFormat::Csv => {
            let mut out = String::from("partition,coeff\n");
            for (rho, v) in &coeffs {
                let _ = writeln!(out, "\"{rho}\",{v}");
            }
            out
        }
        OutputFormat::Text => match &cfg.alpha {
            Alpha::Float(_) => {
                let terms: Vec<String> = coeffs.iter().map(|(rho, v)| format!("{v}*{letter}[{rho}]")).collect();
                format!("{}\n", terms.join(" + "))
            }
            _ => {
                let exact = f.map_coeffs(|c| match specialise(c, &cfg.alpha) {
                    Ok(Value::Exact(v)) => v,
                    _ => c.clone(),
                });
                format!("{}\n", exact.render())
            }
        },
    })
}

fn cmd_moments(cfg: &Config, lambda: &Partition, order: usize) -> CmdResult {
    let (ms, rs): (Vec<Value>, Vec<Value>) = match &cfg.alpha {
        Alpha::Float(a) => {
            let d = anisotropic(lambda, &a.sqrt())?;
            let m = moments(&d, order);
            let r = free_cumulants(&m);
            (
                m.values.iter().map(|&x| Value::Float(x)).collect(),
                r.values.iter().map(|&x| Value::Float(x)).collect(),
            )
        }
        alpha => {
            let (m, r) = anisotropic_mr(lambda, order);
            let sp = |v: &FieldElement| specialise(v, alpha).map_err(Failure::usage);
            (
                m.values.iter().map(sp).collect::<Result<_, _>>()?,
                r.values.iter().map(sp).collect::<Result<_, _>>()?,
            )
        }
    };
    Ok(match cfg.format {
        OutputFormat::Json => {
            let j = json!({
                "lambda": lambda.to_string(),
                "alpha": cfg.alpha.to_string(),
                "moments": ms.iter().map(render::value_json).collect::<Vec<_>>(),
                "cumulants": rs.iter().map(render::value_json).collect::<Vec<_>>(),
            });
            format!("{j}\n")
        }
        OutputFormat::Csv => {
            let mut out = String::from("k,M,R\n");
            for (k, m) in ms.iter().enumerate() {
                let r = if k == 0 { String::new() } else { rs[k - 1].to_string() };
                let _ = writeln!(out, "{k},{m},{r}");
            }
            out
        }
        OutputFormat::Text => {
            let mut out = String::new();
            for (k, m) in ms.iter().enumerate() {
                let _ = writeln!(out, "M{k} = {m}");
            }
            for (k, r) in rs.iter().enumerate() {
                let _ = writeln!(out, "R{} = {r}", k + 1);
            }
            out
        }
    })
}

fn solver_for(cfg: &Config, size: usize) -> Result<KerovSolver, Failure> {
    let book = book_up_to(cfg, size.min(cfg.jack_cap))?;
    Ok(KerovSolver::new(cfg.kerov_cap, book))
}

fn cmd_kerov(cfg: &Config, mu: &Partition, basis: KerovBasis) -> CmdResult {
    let mut solver = solver_for(cfg, kerov_core::kerov::ch_degree(mu))?;
    solver.prepare_for(mu)?;
    let k = solver.compute(mu, basis)?;
    let report = verify_degree_bounds(&k)?;
    Ok(match cfg.format {
        OutputFormat::Json => format!("{}\n", render::kerov_json(&k, &report)),
        OutputFormat::Csv => {
            let mut out = String::from("rho,coeff,degree,bound,parity_ok\n");
            for r in &report.records {
                let _ = writeln!(out, "\"{}\",{},{},{},{}", r.rho, k.coeff(&r.rho).render(), r.degree, r.bound, r.parity_ok);
            }
            out
        }
        OutputFormat::Text => {
            let n = report.records.len();
            format!(
                "{}\n# degree bounds and parity hold ({n} term{})\n",
                k.render(),
                if n == 1 { "" } else { "s" }
            )
        }
    })
}

fn cmd_verify(cfg: &Config, d: usize) -> CmdResult {
    let mus = mus_up_to(d);
    let mut solver = solver_for(cfg, d + 1)?;
    prepare_solver(&mut solver, &mus)?;
    let verdicts = verify_all(&solver, &mus)?;
    let mut out = String::new();
    match cfg.format {
        OutputFormat::Json => {
            let rows: Vec<Json> = verdicts
                .iter()
                .map(|v| {
                    json!({
                        "mu": v.mu.to_string(),
                        "K": v.k.render(),
                        "L": v.l.render(),
                        "golden": v.golden,
                        "passed": v.passed(),
                        "failure": v.failure.as_ref().map(|e| e.to_string()),
                    })
                })
                .collect();
            let _ = writeln!(out, "{}", Json::Array(rows));
        }
        _ => {
            for v in &verdicts {
                let status = match &v.failure {
                    None => "ok".to_string(),
                    Some(e) => format!("FAILED: {e}"),
                };
                let _ = writeln!(out, "{:<10} terms K={:<3} L={:<3} golden={:<3} {status}", v.mu, v.k.len(), v.l.len(), v.golden);
            }
        }
    }
    if let Some(e) = verdicts.iter().find_map(|v| v.failure.clone()) {
        let mut f = Failure::from(e);
        f.partial = out;
        return Err(f);
    }
    Ok(out)
}

fn cmd_distribution(cfg: &Config, n: usize) -> CmdResult {
    let caps = &cfg.enumeration;
    let rows: Vec<(Partition, String)> = match &cfg.alpha {
        Alpha::Symbolic => plancherel_dist_symbolic(n, caps)?
            .probs
            .into_iter()
            .map(|(l, p)| (l, p.render("t")))
            .collect(),
        Alpha::Rational(a) => plancherel_dist_rational(n, a, caps)?
            .probs
            .into_iter()
            .map(|(l, p)| (l, p.to_string()))
            .collect(),
        Alpha::Float(a) => plancherel_dist_f64(n, *a, caps)?
            .probs
            .into_iter()
            .map(|(l, p)| (l, p.to_string()))
            .collect(),
    };
    Ok(match cfg.format {
        OutputFormat::Json => {
            let probs: Vec<Json> = rows.iter().map(|(l, p)| json!({ "lambda": l.to_string(), "p": p })).collect();
            format!("{}\n", json!({ "n": n, "alpha": cfg.alpha.to_string(), "probs": probs }))
        }
        OutputFormat::Csv => {
            let mut out = String::from("lambda,p\n");
            for (l, p) in &rows {
                let _ = writeln!(out, "\"{l}\",{p}");
            }
            out
        }
        OutputFormat::Text => rows.iter().map(|(l, p)| format!("({l}): {p}\n")).collect(),
    })
}

fn cmd_expect(cfg: &Config, n: usize, obs: &Observable) -> CmdResult {
    if matches!(cfg.alpha, Alpha::Float(_)) {
        return Err(Failure::usage("exact expectations need alpha = t or a rational alpha"));
    }
    let caps = &cfg.enumeration;
    let e = match obs {
        Observable::Ch(mu) => {
            let book = book_up_to(cfg, n)?;
            parallel::expectation(n, caps, |l| book.ch_built(mu, l))?
        }
        Observable::Theta(mu) => {
            let book = book_up_to(cfg, n)?;
            parallel::expectation(n, caps, |l| book.theta_built(l, mu))?
        }
        Observable::Moments(rho) => {
            let order = rho.part(0).max(1);
            parallel::expectation(n, caps, |l| {
                let (m, _) = anisotropic_mr(l, order);
                Ok(rho.parts().iter().fold(FieldElement::from_int(1), |acc, &k| &acc * m.get(k)))
            })?
        }
    };
    let label = match obs {
        Observable::Ch(p) => format!("Ch:{p}"),
        Observable::Theta(p) => format!("theta:{p}"),
        Observable::Moments(p) => format!("M:{p}"),
    };
    scalar_output(cfg, &e, json!({ "n": n, "observable": label }))
}

fn float_alpha(cfg: &Config) -> Result<f64, Failure> {
    cfg.alpha
        .as_f64()
        .ok_or_else(|| Failure::usage("sampling needs a numeric alpha (p/q or a decimal)"))
}

fn cmd_samples(cfg: &Config, n: usize, samples: usize, summary: bool) -> CmdResult {
    let alpha = float_alpha(cfg)?;
    if n == 0 {
        return Err(Failure::usage("n must be positive"));
    }
    let rows = parallel::run_samples(n, alpha, samples, cfg.seed, cfg.grid_step)?;
    Ok(match (cfg.format, summary) {
        (OutputFormat::Json, _) => format!(
            "{}\n",
            json!({ "n": n, "alpha": alpha, "seed": cfg.seed, "samples": samples, "summary": render::samples_summary(&rows) })
        ),
        (OutputFormat::Text, true) => render::samples_summary_text(&rows),
        _ => render::samples_csv(&rows).map_err(Failure::usage)?,
    })
}

/// Profile of one sample against Ω on the configured grid.
fn cmd_grid(cfg: &Config, n: usize) -> CmdResult {
    let alpha = float_alpha(cfg)?;
    if n == 0 {
        return Err(Failure::usage("n must be positive"));
    }
    let lambda = grow_sample(n, alpha, &mut sample_rng(cfg.seed, 0))?.last();
    let nf = n as f64;
    let d = kerov_core::diagrams::corners::<f64>(&lambda).stretch(&(alpha / nf).sqrt(), &(1.0 / (nf * alpha)).sqrt())?;
    let profile = d.profile();
    let (lo, hi) = profile.support();
    let (lo, hi) = (lo.min(-2.0) - 0.5, hi.max(2.0) + 0.5);
    let mut out = String::from("x,profile,omega\n");
    let steps = ((hi - lo) / cfg.grid_step).ceil() as usize;
    for i in 0..=steps {
        let x = lo + i as f64 * cfg.grid_step;
        let _ = writeln!(out, "{x},{},{}", profile.value(x), omega_curve(x));
    }
    Ok(out)
}

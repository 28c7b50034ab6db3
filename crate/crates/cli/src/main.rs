use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use symfn::audit;
use symfn::heisenberg::{
    jack_d_apply, newton_triangularity_check, t_apply, t_apply_iterative, two_row_action,
    NewtonData,
};
use symfn::oracle::ghl_p;
use symfn::partitions::{enumerate, Partition};
use symfn::symfunc::{inner, monomial, q_eps_lambda, EpsPreset};
use symfn::vertex::{
    eigenvalue, jj_closed_form, jj_recursion, self_adjoint_check, shifted_eigenvalue, solve_q,
    specialize_q, x0_apply_q, OperatorSpec, Specialization,
};
use symfn::{Basis, EpsSequence, Report, SymFunc};

#[derive(Parser)]
#[command(name = "symfn", version, about = "Exact computations in the ring of symmetric functions")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Emit JSON instead of aligned text.
    #[arg(long, global = true)]
    json: bool,
    /// Write the payload to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Print a timestamp and elapsed time to stderr.
    #[arg(long, global = true)]
    meta: bool,
    /// No-op: every computation is exact and deterministic.
    #[arg(long, global = true)]
    seedless: bool,
}

#[derive(Copy, Clone, ValueEnum)]
enum BasisArg {
    P,
    Q,
    M,
}

impl From<BasisArg> for Basis {
    fn from(b: BasisArg) -> Basis {
        match b {
            BasisArg::P => Basis::P,
            BasisArg::Q => Basis::Q,
            BasisArg::M => Basis::M,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// List the partitions of n, or compare two partitions in dominance order.
    Partitions {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        lambda: Option<Partition>,
        #[arg(long)]
        mu: Option<Partition>,
    },
    /// Power-sum expansion of q^eps_lambda.
    Qexpand {
        #[arg(long)]
        lambda: Partition,
        #[arg(long, default_value = "abc")]
        eps: EpsPreset,
    },
    /// Power-sum expansion of m_lambda.
    Mexpand {
        #[arg(long)]
        lambda: Partition,
    },
    /// Scalar product of two basis elements.
    Inner {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
        #[arg(long, default_value = "abc")]
        eps: EpsPreset,
        #[arg(long, value_enum, default_value = "p")]
        basis: BasisArg,
    },
    /// Triangularity and leading coefficients of T on q_lambda.
    NewtonCheck {
        #[arg(long, default_value_t = 8)]
        max_weight: usize,
        #[arg(long, default_value = "abc")]
        eps: EpsPreset,
    },
    /// Direct and iterative evaluations of T agree.
    IterateCheck {
        #[arg(long, default_value_t = 8)]
        max_weight: usize,
        #[arg(long, default_value = "abc")]
        eps: EpsPreset,
    },
    /// T q_(m,n) from the two-row formula.
    TwoRow {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "abc")]
        eps: EpsPreset,
    },
    /// D(alpha) applied to a basis element (eps = jack).
    JackD {
        #[arg(long)]
        lambda: Partition,
        #[arg(long, value_enum, default_value = "p")]
        basis: BasisArg,
    },
    /// X0 q_lambda in the q basis, with its diagonal eigenvalue.
    X0 {
        #[arg(long)]
        lambda: Partition,
    },
    /// Self-adjointness of X0 with the perturbed negative control.
    SelfadjointCheck {
        #[arg(long, default_value_t = 6)]
        max_weight: usize,
    },
    /// Eigenvector Q_lambda of X0, optionally specialized.
    Macdonald {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        spec: Option<Specialization>,
    },
    /// Gram-Schmidt P_lambda and Q_lambda.
    Ghl {
        #[arg(long)]
        lambda: Partition,
        #[arg(long, default_value = "abc")]
        eps: EpsPreset,
    },
    /// Two-row coefficients g_0 .. g_n of Q_(m,n).
    Jj {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// Run the acceptance suite.
    Audit {
        /// Comma-separated criterion ids; all by default.
        #[arg(long, value_delimiter = ',')]
        only: Vec<u8>,
    },
}

struct Output {
    text: String,
    json: Value,
    ok: bool,
}

impl Output {
    fn data(text: String, json: Value) -> Self {
        Output { text, json, ok: true }
    }

    fn check(report: Report) -> Self {
        Output {
            text: format!("{report}\n"),
            ok: report.passed(),
            json: serde_json::to_value(&report).expect("report serializes"),
        }
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn usage(msg: impl Into<String>) -> symfn::Error {
    symfn::Error::InvalidArgument(msg.into())
}

fn run(cmd: &Cmd, stream: bool) -> symfn::Result<Output> {
    Ok(match cmd {
        Cmd::Partitions { n, lambda, mu } => match (n, lambda, mu) {
            (_, Some(l), Some(m)) => {
                let geq = l.dominates(m)?;
                let leq = m.dominates(l)?;
                let rel = match (geq, leq) {
                    (true, true) => "equal",
                    (true, false) => "dominates",
                    (false, true) => "dominated",
                    (false, false) => "incomparable",
                };
                Output::data(
                    format!("{l:?} {rel} {m:?}\n"),
                    json!({ "lambda": l, "mu": m, "relation": rel }),
                )
            }
            (Some(n), None, None) => {
                let parts = enumerate(*n);
                let text: String = parts.iter().map(|p| format!("{p:?}\n")).collect();
                Output::data(text, to_json(&parts))
            }
            _ => return Err(usage("partitions needs --n, or both --lambda and --mu")),
        },
        Cmd::Qexpand { lambda, eps } => {
            let f = q_eps_lambda(lambda, &EpsSequence::preset(*eps));
            Output::data(f.to_text(), to_json(&*f))
        }
        Cmd::Mexpand { lambda } => {
            let f = monomial(lambda);
            Output::data(f.to_text(), to_json(&f))
        }
        Cmd::Inner { lambda, mu, eps, basis } => {
            let eps = EpsSequence::preset(*eps);
            let basis = Basis::from(*basis);
            let v = inner(
                &SymFunc::basis_element(basis, lambda.clone()),
                &SymFunc::basis_element(basis, mu.clone()),
                &eps,
            );
            Output::data(
                format!("{v}\n"),
                json!({ "lambda": lambda, "mu": mu, "basis": basis, "eps": eps.name(), "value": v }),
            )
        }
        Cmd::NewtonCheck { max_weight, eps } => {
            let eps = EpsSequence::preset(*eps);
            let data = NewtonData::exponential(&eps);
            let mut parts = Vec::new();
            for n in 1..=*max_weight {
                for lambda in enumerate(n) {
                    parts.push(newton_triangularity_check(&lambda, &data.r, &data.c, &eps)?);
                }
            }
            Output::check(Report::all(
                "T q_lambda triangular with leading (-1)^{l-1}(b^{lambda_s}-1)",
                json!({ "max_weight": max_weight, "eps": eps.name() }),
                parts,
            ))
        }
        Cmd::IterateCheck { max_weight, eps } => {
            let eps = EpsSequence::preset(*eps);
            let data = NewtonData::exponential(&eps);
            let range = json!({ "max_weight": max_weight, "eps": eps.name() });
            let claim = "T_apply = T_apply_iterative = two_row_action";
            let mut report = Report::pass(claim, range.clone());
            'outer: for n in 1..=*max_weight {
                for lambda in enumerate(n) {
                    let direct = t_apply(&lambda, &data.r, &eps)?;
                    let mut same = direct == t_apply_iterative(&lambda, &data.r, &eps)?;
                    if lambda.len() == 2 {
                        let (m, k) = (lambda.parts()[0], lambda.parts()[1]);
                        same &= direct == two_row_action(m, k, &data.c)?;
                    }
                    if !same {
                        report = Report::fail(claim, range, json!({ "lambda": lambda }));
                        break 'outer;
                    }
                }
            }
            Output::check(report)
        }
        Cmd::TwoRow { m, n, eps } => {
            let data = NewtonData::exponential(&EpsSequence::preset(*eps));
            let f = two_row_action(*m, *n, &data.c)?;
            Output::data(f.to_text(), to_json(&f))
        }
        Cmd::JackD { lambda, basis } => {
            let eps = EpsSequence::jack();
            let basis = Basis::from(*basis);
            let f = jack_d_apply(&SymFunc::basis_element(basis, lambda.clone())).to_basis(basis, &eps);
            Output::data(f.to_text(), to_json(&f))
        }
        Cmd::X0 { lambda } => {
            let spec = OperatorSpec::generic();
            let image = x0_apply_q(lambda, &spec);
            let c = eigenvalue(lambda, &spec);
            let shifted = shifted_eigenvalue(&c, spec.a());
            let mut text = format!("eigenvalue {c}\n");
            if let Some(s) = &shifted {
                text.push_str(&format!("eigenvalue of X0' {s}\n"));
            }
            text.push_str(&image.to_text());
            Output::data(
                text,
                json!({ "lambda": lambda, "eigenvalue": c, "eigenvalue_prime": shifted, "image": image }),
            )
        }
        Cmd::SelfadjointCheck { max_weight } => {
            Output::check(self_adjoint_check(*max_weight, &OperatorSpec::generic()))
        }
        Cmd::Macdonald { lambda, spec } => {
            let mut r = solve_q(lambda, &OperatorSpec::generic())?;
            if let Some(which) = spec {
                r = specialize_q(&r, *which)?;
            }
            Output::data(r.to_text(), to_json(&r))
        }
        Cmd::Ghl { lambda, eps } => {
            let r = ghl_p(lambda, &EpsSequence::preset(*eps))?;
            Output::data(r.to_text(), to_json(&r))
        }
        Cmd::Jj { m, n } => {
            let rec = jj_recursion(*m, *n)?;
            let mut text = String::new();
            let mut terms = Vec::new();
            let mut ok = true;
            for (i, g) in rec.iter().enumerate() {
                ok &= jj_closed_form(*m, *n, i)? == *g;
                let mu = Partition::new(vec![m + i, n - i])?;
                text.push_str(&format!("  g_{i}  {mu:?}  {g}\n"));
                terms.push(json!({ "i": i, "partition": mu, "coeff": g }));
            }
            if !ok {
                text.push_str("closed form and recursion disagree\n");
            }
            Output {
                text,
                json: json!({ "m": m, "n": n, "agree": ok, "terms": terms }),
                ok,
            }
        }
        Cmd::Audit { only } => {
            let mut outcomes = Vec::new();
            let mut text = String::new();
            let start = Instant::now();
            let ids: Vec<u8> = if only.is_empty() {
                audit::CRITERIA.iter().map(|c| c.id).collect()
            } else {
                only.clone()
            };
            let emit = |line: String, text: &mut String| {
                if stream {
                    println!("{line}");
                } else {
                    text.push_str(&line);
                    text.push('\n');
                }
            };
            for id in ids.iter().copied().filter(|&id| id != 10) {
                let o = audit::run(id).ok_or_else(|| usage(format!("no criterion {id}")))?;
                emit(o.line(), &mut text);
                outcomes.push(o);
            }
            if only.is_empty() || ids.contains(&10) {
                let o = audit::overall(&outcomes, start.elapsed());
                emit(o.line(), &mut text);
                outcomes.push(o);
            }
            let ok = outcomes.iter().all(|o| o.passed());
            let json = Value::Array(
                outcomes
                    .iter()
                    .map(|o| json!({ "id": o.id, "title": o.title, "report": o.report }))
                    .collect(),
            );
            Output { text, json, ok }
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let msg = e.to_string();
            eprintln!("{}", msg.lines().next().unwrap_or("usage error"));
            return ExitCode::from(2);
        }
    };
    let start = Instant::now();
    let stream = !cli.json && cli.out.is_none();
    let out = match run(&cli.cmd, stream) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let payload = if cli.json {
        let mut s = serde_json::to_string_pretty(&out.json).expect("json");
        s.push('\n');
        s
    } else {
        out.text
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = fs::write(path, &payload) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(payload.as_bytes());
        }
    }
    if cli.meta {
        let now = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
        eprintln!("# unix_time={now} elapsed_ms={}", start.elapsed().as_millis());
    }
    if out.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

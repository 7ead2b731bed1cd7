//! periods-lab: compute the example de Rham reductions and period matrices,
//! and run the identity verification suite.
//!
//! Exit codes: 0 success, 1 check failure, 2 usage/parse error,
//! 3 unsupported domain, 4 internal numeric error.

mod forms;
mod report;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use periods_core::derham::{
    reduce_elliptic, reduce_gm, reduce_relative_log, reduce_twisted, EllipticClass, EllipticCurveQ,
    RelativeLogClass, Twist, TwistedClass,
};
use periods_core::matrices::elliptic_period_matrix;
use periods_core::num::real_to_decimal;
use periods_core::verify;
use periods_core::Error as CoreError;

#[derive(Parser)]
#[command(name = "periods-lab", version, about = "period identities laboratory")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the registered identity checks.
    Verify(VerifyArgs),
    /// Print the period matrix of y² = 4x³ − g₂x − g₃ (needs Δ > 0).
    Elliptic(EllipticArgs),
    /// Reduce a differential form to the canonical basis of its space.
    Reduce(ReduceArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Working precision in decimal digits (10–100); per-check defaults
    /// when omitted. Checks with hard caps clamp to them.
    #[arg(long)]
    prec: Option<u32>,
    /// Only run checks whose name matches this glob (`*` wildcard).
    #[arg(long)]
    filter: Option<String>,
    /// Write the JSON report here.
    #[arg(long)]
    json: Option<std::path::PathBuf>,
    /// List registered check names without running anything.
    #[arg(long)]
    list: bool,
}

#[derive(Args)]
struct EllipticArgs {
    /// g₂ as an exact rational, e.g. `4` or `8/3`.
    #[arg(long)]
    g2: String,
    /// g₃ as an exact rational.
    #[arg(long)]
    g3: String,
    #[arg(long, default_value_t = 30)]
    prec: u32,
    /// Write the period matrix as JSON.
    #[arg(long)]
    json: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct ReduceArgs {
    /// One of: elliptic, gm, relative-log, twisted-power, twisted-bessel.
    #[arg(long)]
    space: String,
    /// Laurent/polynomial form, e.g. "2*x^-1 + 5*x" (gm, relative-log,
    /// twisted spaces).
    #[arg(long)]
    form: Option<String>,
    /// R polynomial of (R + S·y)ω (elliptic space).
    #[arg(long = "R")]
    r_poly: Option<String>,
    /// S polynomial of (R + S·y)ω (elliptic space).
    #[arg(long = "S")]
    s_poly: Option<String>,
    #[arg(long)]
    g2: Option<String>,
    #[arg(long)]
    g3: Option<String>,
    /// Marked point q > 1 (relative-log space).
    #[arg(long)]
    q: Option<String>,
    /// Prescribed value at x = 1 (relative-log space).
    #[arg(long, default_value = "0")]
    at_one: String,
    /// Prescribed value at x = q (relative-log space).
    #[arg(long, default_value = "0")]
    at_q: String,
    /// Twist exponent n ≥ 2 (twisted-power space).
    #[arg(long)]
    n: Option<u32>,
    /// Write the reduction (coordinates and certificate) as JSON.
    #[arg(long)]
    json: Option<std::path::PathBuf>,
}

fn main() -> ExitCode {
    // die quietly on a closed pipe (e.g. `periods-lab verify | head`)
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Verify(args) => cmd_verify(args),
        Command::Elliptic(args) => cmd_elliptic(args),
        Command::Reduce(args) => cmd_reduce(args),
    };
    ExitCode::from(code)
}

fn core_error_code(err: &CoreError) -> u8 {
    match err {
        CoreError::Domain(_) | CoreError::Unsupported(_) => 3,
        _ => 4,
    }
}

fn cmd_verify(args: VerifyArgs) -> u8 {
    if args.list {
        for spec in verify::registry() {
            println!("{:32} {}", spec.name, spec.description);
        }
        return 0;
    }
    if let Some(p) = args.prec {
        if !(10..=100).contains(&p) {
            eprintln!("error: --prec must lie in [10, 100]");
            eprintln!(
                "usage: periods-lab verify [--prec N] [--filter GLOB] [--json PATH] [--list]"
            );
            return 2;
        }
    }
    let results = verify::run_all(args.prec, args.filter.as_deref());
    println!(
        "{:<6} {:<32} {:>12} {:>10} {:>9}",
        "status", "check", "defect", "tolerance", "time"
    );
    for r in &results {
        println!(
            "{:<6} {:<32} {:>12} {:>10} {:>8.2}s{}",
            report::status_str(r.status),
            r.name,
            r.defect_str(),
            r.tolerance_str(),
            r.elapsed_s,
            r.note
                .as_deref()
                .map(|n| format!("  ({n})"))
                .unwrap_or_default()
        );
    }
    let rep = report::build_report(args.prec.unwrap_or(0), &results);
    println!(
        "passed {} / failed {} / skipped {}",
        rep.summary.passed, rep.summary.failed, rep.summary.skipped
    );
    if let Some(path) = args.json {
        let body = serde_json::to_string_pretty(&rep).expect("report serializes");
        if let Err(e) = std::fs::write(&path, body) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return 4;
        }
    }
    if rep.summary.failed == 0 {
        0
    } else {
        1
    }
}

fn cmd_elliptic(args: EllipticArgs) -> u8 {
    if !(10..=100).contains(&args.prec) {
        eprintln!("error: --prec must lie in [10, 100]");
        return 2;
    }
    let (g2, g3) = match (
        forms::parse_rational(&args.g2),
        forms::parse_rational(&args.g3),
    ) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let curve = match EllipticCurveQ::new(g2, g3) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return 3;
        }
    };
    match elliptic_period_matrix(&curve, args.prec) {
        Ok((m, defect)) => {
            let digits = args.prec as usize;
            println!("{}", m.name);
            println!(
                "{:>8} | {:<width$} {:<width$}",
                "",
                m.col_labels[0],
                m.col_labels[1],
                width = digits + 10
            );
            for (label, row) in m.row_labels.iter().zip(&m.entries) {
                println!(
                    "{label:>8} | {:<width$} {:<width$}",
                    row[0].to_decimal(digits),
                    row[1].to_decimal(digits),
                    width = digits + 10
                );
            }
            println!(
                "legendre defect |w1*e2 - w2*e1 - 2*pi*i| = {}",
                real_to_decimal(&defect, 3)
            );
            if let Some(path) = &args.json {
                let body = serde_json::json!({
                    "name": m.name,
                    "row_labels": m.row_labels,
                    "col_labels": m.col_labels,
                    "entries": m.entries.iter().map(|row| {
                        row.iter().map(|e| e.to_decimal(digits)).collect::<Vec<_>>()
                    }).collect::<Vec<_>>(),
                    "prec": m.digits,
                    "legendre_defect": real_to_decimal(&defect, 3),
                });
                let text = serde_json::to_string_pretty(&body).expect("serializes");
                if let Err(e) = std::fs::write(path, text) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return 4;
                }
            }
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            core_error_code(&e)
        }
    }
}

fn write_reduction_json(
    path: &std::path::Path,
    space: &str,
    basis: &[(&str, String)],
    certificate: &[(&str, String)],
) -> u8 {
    let body = serde_json::json!({
        "space": space,
        "basis": basis
            .iter()
            .map(|(k, v)| serde_json::json!({"class": k, "coefficient": v}))
            .collect::<Vec<_>>(),
        "certificate": certificate
            .iter()
            .map(|(k, v)| serde_json::json!({"name": k, "value": v}))
            .collect::<Vec<_>>(),
    });
    match std::fs::write(
        path,
        serde_json::to_string_pretty(&body).expect("serializes"),
    ) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: cannot write {}: {e}", path.display());
            4
        }
    }
}

fn cmd_reduce(args: ReduceArgs) -> u8 {
    match args.space.as_str() {
        "elliptic" => {
            let (Some(g2), Some(g3), Some(r), Some(s)) =
                (&args.g2, &args.g3, &args.r_poly, &args.s_poly)
            else {
                eprintln!("error: elliptic space needs --g2 --g3 --R --S");
                return 2;
            };
            let parsed = (|| -> Result<_, forms::ParseError> {
                Ok((
                    forms::parse_rational(g2)?,
                    forms::parse_rational(g3)?,
                    forms::parse_poly(r)?,
                    forms::parse_poly(s)?,
                ))
            })();
            let (g2, g3, r, s) = match parsed {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("error: {e}");
                    return 2;
                }
            };
            let curve = match EllipticCurveQ::new(g2, g3) {
                Ok(c) => c,
                Err(e) => {
                    eprintln!("error: {e}");
                    return 3;
                }
            };
            let red = reduce_elliptic(&curve, &EllipticClass::new(r, s));
            println!("class    = {} * [dx/y] + {} * [x dx/y]", red.c0, red.c1);
            println!("cert T   = {}", red.cert_t);
            println!("cert U   = {}", red.cert_u);
            println!("identity : input - class = d(T + U*y)");
            if let Some(path) = &args.json {
                return write_reduction_json(
                    path,
                    "elliptic",
                    &[("dx/y", red.c0.to_string()), ("x dx/y", red.c1.to_string())],
                    &[("T", red.cert_t.to_string()), ("U", red.cert_u.to_string())],
                );
            }
            0
        }
        "gm" => {
            let Some(form) = &args.form else {
                eprintln!("error: gm space needs --form");
                return 2;
            };
            match forms::parse_laurent(form) {
                Ok(l) => {
                    let (c, cert) = reduce_gm(&l);
                    println!("class    = {c} * [dx/x]");
                    println!("cert h   = {cert}");
                    println!("identity : input - class = dh");
                    if let Some(path) = &args.json {
                        return write_reduction_json(
                            path,
                            "gm",
                            &[("dx/x", c.to_string())],
                            &[("h", cert.to_string())],
                        );
                    }
                    0
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    2
                }
            }
        }
        "relative-log" => {
            let (Some(form), Some(q)) = (&args.form, &args.q) else {
                eprintln!("error: relative-log space needs --form and --q");
                return 2;
            };
            let parsed = (|| -> Result<_, forms::ParseError> {
                Ok((
                    forms::parse_laurent(form)?,
                    forms::parse_rational(q)?,
                    forms::parse_rational(&args.at_one)?,
                    forms::parse_rational(&args.at_q)?,
                ))
            })();
            let (l, q, u, v) = match parsed {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("error: {e}");
                    return 2;
                }
            };
            match reduce_relative_log(&q, &RelativeLogClass::new(l, u, v)) {
                Ok(red) => {
                    println!(
                        "class    = {} * [dx/(q-1)] + {} * [dx/x]",
                        red.alpha, red.beta
                    );
                    println!("cert h   = {}", red.cert);
                    println!("identity : input - class = (dh, (h(1), h(q)))");
                    if let Some(path) = &args.json {
                        return write_reduction_json(
                            path,
                            "relative-log",
                            &[
                                ("dx/(q-1)", red.alpha.to_string()),
                                ("dx/x", red.beta.to_string()),
                            ],
                            &[("h", red.cert.to_string())],
                        );
                    }
                    0
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    core_error_code(&e)
                }
            }
        }
        "twisted-power" | "twisted-bessel" => {
            let Some(form) = &args.form else {
                eprintln!("error: twisted spaces need --form");
                return 2;
            };
            let l = match forms::parse_laurent(form) {
                Ok(l) => l,
                Err(e) => {
                    eprintln!("error: {e}");
                    return 2;
                }
            };
            let twist = if args.space == "twisted-power" {
                let Some(n) = args.n else {
                    eprintln!("error: twisted-power needs --n");
                    return 2;
                };
                Twist::Power(n)
            } else {
                Twist::Bessel
            };
            let cls = match TwistedClass::new(l, twist.clone()) {
                Ok(c) => c,
                Err(e) => {
                    eprintln!("error: {e}");
                    return 3;
                }
            };
            let red = reduce_twisted(&cls);
            match twist {
                Twist::Power(_) => {
                    let pretty: Vec<String> = red
                        .coords
                        .iter()
                        .enumerate()
                        .map(|(k, c)| match k {
                            0 => format!("{c} * [dx]"),
                            1 => format!("{c} * [x dx]"),
                            _ => format!("{c} * [x^{k} dx]"),
                        })
                        .collect();
                    println!("class    = {}", pretty.join(" + "));
                }
                Twist::Bessel => {
                    println!(
                        "class    = {} * [dx/x] + {} * [dx]",
                        red.coords[0], red.coords[1]
                    );
                }
            }
            println!("cert P   = {}", red.cert);
            println!("identity : input - class = d_f(P)");
            if let Some(path) = &args.json {
                let labels: Vec<String> = match twist {
                    Twist::Power(_) => (0..red.coords.len())
                        .map(|k| {
                            if k == 0 {
                                "dx".to_string()
                            } else {
                                format!("x^{k} dx")
                            }
                        })
                        .collect(),
                    Twist::Bessel => vec!["dx/x".to_string(), "dx".to_string()],
                };
                let basis: Vec<(&str, String)> = labels
                    .iter()
                    .map(|s| s.as_str())
                    .zip(red.coords.iter().map(|c| c.to_string()))
                    .collect();
                return write_reduction_json(
                    path,
                    &args.space,
                    &basis,
                    &[("P", red.cert.to_string())],
                );
            }
            0
        }
        other => {
            eprintln!(
                "error: unknown space '{other}' (elliptic, gm, relative-log, twisted-power, twisted-bessel)"
            );
            2
        }
    }
}

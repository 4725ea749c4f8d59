use std::fs;
use std::io::{self, BufRead, IsTerminal, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rayon::prelude::*;

use transfinita::json::{error_tree, record, value_to_json};
use transfinita::surinteger::validate_lambda;
use transfinita::{print_canonical, Error, Evaluator, Limits, Ordinal, Value};

/// Exact arithmetic on ordinals below epsilon-zero, surintegers and surrationals.
#[derive(Parser)]
#[command(name = "transfinita", version)]
struct Cli {
    /// Emit JSON instead of canonical text.
    #[arg(long, global = true)]
    json: bool,
    /// Maximum bit length of any natural coefficient produced.
    #[arg(long, global = true, value_name = "BITS")]
    max_magnitude: Option<u64>,
    /// Cross-check recursive operations against the definitional oracle.
    #[arg(long, global = true)]
    oracle: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one expression.
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Evaluate one expression per line of FILE ("-" for stdin), emitting JSON records.
    Batch { file: String },
    /// Interactive session.
    Repl,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut ev = Evaluator::new();
    ev.oracle = cli.oracle;
    if let Some(bits) = cli.max_magnitude {
        ev.limits = Limits {
            max_bits: bits,
            ..Limits::default()
        };
    }
    match cli.command {
        Command::Eval { expr } => eval_one(&ev, &expr, cli.json),
        Command::Batch { file } => batch(&ev, &file),
        Command::Repl => repl(ev, cli.json),
    }
}

fn report(src: &str, e: &Error, json: bool) {
    if json {
        println!(
            "{}",
            serde_json::json!({"schema": "1", "input": src, "error": error_tree(src, e)})
        );
    } else {
        let (line, column) = e.position(src);
        eprintln!("error[{}] at {line}:{column}: {}", e.code(), detail(e));
    }
}

fn detail(e: &Error) -> String {
    match e {
        Error::Parse(d) => d.message(),
        Error::Eval(ev) => ev.message(),
    }
}

fn show(v: &Value, json: bool) {
    if json {
        println!("{}", value_to_json(v));
    } else {
        println!("{}", print_canonical(v));
    }
}

fn eval_one(ev: &Evaluator, src: &str, json: bool) -> ExitCode {
    match ev.eval_str(src) {
        Ok(v) => {
            show(&v, json);
            ExitCode::SUCCESS
        }
        Err(e) => {
            report(src, &e, json);
            ExitCode::FAILURE
        }
    }
}

fn batch(ev: &Evaluator, file: &str) -> ExitCode {
    let text = if file == "-" {
        io::read_to_string(io::stdin())
    } else {
        fs::read_to_string(file)
    };
    let text = match text {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {file}: {e}");
            return ExitCode::from(2);
        }
    };
    let lines: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .stack_size(64 << 20)
        .build()
        .expect("thread pool");
    let results: Vec<(String, bool)> = pool.install(|| {
        lines
            .par_iter()
            .map(|line| {
                let r = ev.eval_str(line);
                (record(line, &r).to_string(), r.is_ok())
            })
            .collect()
    });
    let mut out = io::stdout().lock();
    let mut ok = true;
    for (line, good) in results {
        ok &= good;
        let _ = writeln!(out, "{line}");
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

const HELP: &str = "\
expressions: 0 1 2 ... w  + - * / (natural)  +. -. *. ^ ^^ (recursive)  H[n](a,b)  (re, im)  i
functions:   classify succ pred base div mod cyclic member cut sqrt[n](q) next_gamma next_delta
             next_epsilon is_hyper next_hyper reduce inv num den re im midpoint witness cmp lt eq
             in_ring in_field neg_part pos_part is_gamma is_delta is_epsilon
commands:    :let NAME = EXPR   :type EXPR   :lambda ORD   :oracle on|off   :help   :quit";

fn repl(mut ev: Evaluator, json: bool) -> ExitCode {
    let stdin = io::stdin();
    let mut out = io::stdout();
    let interactive = stdin.is_terminal();
    loop {
        if interactive {
            let _ = write!(out, "> ");
            let _ = out.flush();
        }
        let mut line = String::new();
        match stdin.lock().read_line(&mut line) {
            Ok(0) => break,
            Ok(_) => {}
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::FAILURE;
            }
        }
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix(':') {
            let (cmd, arg) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
            let arg = arg.trim();
            match cmd {
                "quit" | "q" => break,
                "help" => println!("{HELP}"),
                "let" => match arg.split_once('=') {
                    Some((name, expr)) if is_name(name.trim()) => match ev.eval_str(expr.trim()) {
                        Ok(v) => {
                            show(&v, json);
                            ev.bindings.insert(name.trim().to_string(), v);
                        }
                        Err(e) => report(expr.trim(), &e, json),
                    },
                    _ => eprintln!("usage: :let NAME = EXPR"),
                },
                "type" => match ev.eval_str(arg) {
                    Ok(v) => println!("{}", v.type_name()),
                    Err(e) => report(arg, &e, json),
                },
                "lambda" => match ev.eval_str(arg) {
                    Ok(v) => match v.as_ordinal() {
                        Some(l) => set_lambda(&mut ev, l),
                        None => eprintln!("error: lambda must be an ordinal"),
                    },
                    Err(e) => report(arg, &e, json),
                },
                "oracle" => match arg {
                    "on" => ev.oracle = true,
                    "off" => ev.oracle = false,
                    _ => eprintln!("usage: :oracle on|off"),
                },
                _ => eprintln!("unknown command ':{cmd}', try :help"),
            }
            continue;
        }
        match ev.eval_str(line) {
            Ok(v) => show(&v, json),
            Err(e) => report(line, &e, json),
        }
    }
    ExitCode::SUCCESS
}

fn set_lambda(ev: &mut Evaluator, l: Ordinal) {
    match validate_lambda(&l) {
        Ok(()) => {
            println!("lambda = {}", transfinita::print::ordinal_to_string(&l));
            ev.lambda = l;
        }
        Err(e) => eprintln!("error[{}]: {e}", e.code()),
    }
}

fn is_name(s: &str) -> bool {
    let mut chars = s.chars();
    chars.next().is_some_and(|c| c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
        && !matches!(s, "w" | "e0" | "i" | "true" | "false" | "H" | "sqrt")
}

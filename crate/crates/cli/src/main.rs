mod args;
mod commands;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::Context as _;
use berge_core::report::ConfigEcho;
use berge_core::Error;
use clap::Parser;

use args::{Cli, Command};
use commands::{Context, Outcome};

const EXIT_VIOLATION: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn thread_count(flag: Option<usize>) -> anyhow::Result<Option<usize>> {
    if flag.is_some() {
        return Ok(flag);
    }
    match std::env::var("BERGE_THREADS") {
        Ok(v) => Ok(Some(v.trim().parse().map_err(|_| {
            Error::InvalidParameter(format!("BERGE_THREADS must be a positive integer, got '{v}'"))
        })?)),
        Err(_) => Ok(None),
    }
}

/// Subcommand arguments as flat key/value pairs for the config echo.
fn echo_parameters<T: serde::Serialize>(echo: ConfigEcho, args: &T) -> ConfigEcho {
    let Ok(serde_json::Value::Object(map)) = serde_json::to_value(args) else {
        return echo;
    };
    map.into_iter().fold(echo, |echo, (k, v)| match v {
        serde_json::Value::Null => echo,
        serde_json::Value::String(s) => echo.with(&k, s),
        other => echo.with(&k, other),
    })
}

fn dispatch(cli: &Cli) -> anyhow::Result<Outcome> {
    let g = &cli.global;
    let echo = ConfigEcho::new(cli.command.name(), g.seed).with("format", g.format);
    let echo = match &cli.command {
        Command::Detect(a) => echo_parameters(echo, a),
        Command::Reduce(a) => echo_parameters(echo, a),
        Command::Partition(a) => echo_parameters(echo, a),
        Command::Search(a) => echo_parameters(echo, a),
        Command::Bounds(a) => echo_parameters(echo, a),
        Command::Symmetrize(a) => echo_parameters(echo, a),
        Command::Retention(a) => echo_parameters(echo, a),
        Command::Verify(a) => echo_parameters(echo, a),
    };
    let ctx = Context { global: g, echo };
    match &cli.command {
        Command::Detect(a) => commands::detect(&ctx, a),
        Command::Reduce(a) => commands::reduce(&ctx, a),
        Command::Partition(a) => commands::partition(&ctx, a),
        Command::Search(a) => commands::search(&ctx, a),
        Command::Bounds(a) => commands::bounds(&ctx, a),
        Command::Symmetrize(a) => commands::symmetrize(&ctx, a),
        Command::Retention(a) => commands::retention(&ctx, a),
        Command::Verify(a) => commands::verify(&ctx, a),
    }
}

fn run(cli: &Cli) -> anyhow::Result<u8> {
    let started = Instant::now();
    let outcome = match thread_count(cli.global.threads)? {
        Some(threads) => rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .context("cannot start the worker pool")?
            .install(|| dispatch(cli))?,
        None => dispatch(cli)?,
    };
    match &cli.global.out {
        Some(path) => std::fs::write(path, &outcome.report).with_context(|| format!("cannot write {}", path.display()))?,
        None => std::io::stdout().write_all(outcome.report.as_bytes()).context("cannot write the report")?,
    }
    if cli.global.timing {
        eprintln!(
            "timing: wall_ms={:.3} nodes={}",
            started.elapsed().as_secs_f64() * 1e3,
            outcome.nodes
        );
    }
    Ok(if outcome.violated { EXIT_VIOLATION } else { 0 })
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(
            Error::InvalidParameter(_)
            | Error::Parse { .. }
            | Error::SizeLimit { .. }
            | Error::OutOfDomain(_)
            | Error::IncompleteInput(_)
            | Error::Precondition(_)
            | Error::PipelineOrder(_),
        ) => EXIT_USAGE,
        _ => EXIT_VIOLATION,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}

use std::process::ExitCode;

use clap::Parser;

use mixshuf::shell::{eval_str, parse_lambda, render_value, run_verification_suite, AlphabetSource, OutputFormat, RunConfig};

/// Exact shuffle, quasi-shuffle and mixable shuffle algebra calculator.
#[derive(Parser, Debug)]
#[command(name = "mixshuf", version)]
struct Cli {
    /// Pairing file, `builtin:stuffle` or `builtin:zero`.
    #[arg(long, default_value = "builtin:stuffle")]
    alphabet: String,
    /// Weight λ as an exact rational (`p` or `p/q`).
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    lambda: String,
    #[arg(long, default_value_t = 5)]
    max_degree: u32,
    #[arg(long, default_value_t = 4)]
    max_length: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// canonical, tabular or quiet.
    #[arg(long, default_value = "canonical")]
    format: String,
    /// Evaluate an expression and print the result.
    #[arg(long, conflicts_with = "verify")]
    eval: Option<String>,
    /// Run the verification suite.
    #[arg(long)]
    verify: bool,
    /// With --verify, add a row checking a weight-0 operator against --lambda.
    #[arg(long, requires = "verify")]
    negative_control: bool,
}

fn config(cli: &Cli) -> mixshuf::Result<RunConfig> {
    Ok(RunConfig {
        alphabet: cli.alphabet.parse::<AlphabetSource>().unwrap(),
        lambda: parse_lambda(&cli.lambda)?,
        max_degree: cli.max_degree,
        max_length: cli.max_length,
        seed: cli.seed,
        format: cli.format.parse::<OutputFormat>()?,
        negative_control: cli.negative_control,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = match config(&cli).and_then(|c| c.validate().map(|_| c)) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    if cli.verify {
        return match run_verification_suite(&cfg) {
            Ok(report) => {
                print!("{}", report.render(cfg.format));
                ExitCode::from(report.exit_code() as u8)
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        };
    }
    let Some(text) = &cli.eval else {
        eprintln!("error: nothing to do; pass --eval <expr> or --verify");
        return ExitCode::from(2);
    };
    let result = cfg.alphabet.load().and_then(|a| eval_str(text, &a, &cfg.lambda));
    match result {
        Ok(v) => {
            print!("{}", render_value(&v, cfg.format));
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use gkz_cli::job::{Format, J0Choice};
use gkz_cli::{run, Flags, EXIT_INVALID};

/// Characteristic polynomials of monodromies at infinity for
/// non-resonant GKZ systems.
#[derive(Parser, Debug)]
#[command(name = "gkz-monodromy", version)]
struct Args {
    /// Job file (JSON); reads stdin when omitted.
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,
    /// 1-based index of the chosen point, or "all". Overrides the file.
    #[arg(long, value_name = "K|all", value_parser = J0Choice::parse)]
    j0: Option<J0Choice>,
    /// Include dense coefficients.
    #[arg(long)]
    expand: bool,
    /// Significant digits for expanded coefficients.
    #[arg(long, value_name = "N")]
    digits: Option<u32>,
    /// Include the zeta-function form.
    #[arg(long)]
    zeta: bool,
    /// Evaluate the formula even for resonant parameters (uncertified).
    #[arg(long)]
    force: bool,
    #[arg(long, value_parser = Format::parse)]
    format: Option<Format>,
    /// Re-verify hull certificates, the degree identity and the lifted facets.
    #[arg(long)]
    check: bool,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let text = match &args.input {
        Some(path) => std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map(|_| s)
                .map_err(|e| format!("stdin: {e}"))
        }
    };
    let text = match text {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: [io] {e}");
            return ExitCode::from(EXIT_INVALID as u8);
        }
    };
    let flags = Flags {
        j0: args.j0,
        expand: args.expand,
        digits: args.digits,
        zeta: args.zeta,
        force: args.force,
        format: args.format,
        check: args.check,
    };
    let out = run(&text, &flags);
    let _ = io::stdout().write_all(out.stdout.as_bytes());
    let _ = io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code as u8)
}

use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use xmod_hopf_cli::{run, Command, InputError, Outcome};

/// Validate and compute with crossed-module-graded Hopf structures.
#[derive(Parser)]
#[command(name = "xmhopf", version)]
struct Cli {
    /// Structure document; standard input when absent or `-`.
    #[arg(long, global = true)]
    doc: Option<PathBuf>,
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the validators for one entry, or for every entry.
    Verify { name: Option<String> },
    /// Integral spaces of a coalgebra.
    Integrals {
        name: String,
        #[arg(long, value_enum)]
        side: Option<SideArg>,
    },
    /// Grouplikes, the pairing with E and the distinguished grouplike.
    Grouplikes { name: String },
    /// Dualize a coalgebra or algebra and check the result.
    Dual { name: String },
    /// Coinvariants and the isomorphism A ⊗ M^coA ≅ M.
    StructureTheorem { name: String, module: String },
    /// Hom spaces between two modules, per degree in E.
    Hom {
        algebra: String,
        source: String,
        target: String,
        #[arg(long)]
        degree: Option<String>,
    },
    /// Every check that applies to one entry.
    Report { name: String },
    /// Print an entry and its dependencies as an explicit document.
    Export { name: String },
}

fn read_input(doc: Option<&PathBuf>) -> Result<Vec<u8>, InputError> {
    let mut bytes = Vec::new();
    match doc {
        Some(p) if p.as_os_str() != "-" => return std::fs::read(p).map_err(|e| InputError::Io(format!("{}: {e}", p.display()))),
        _ => std::io::stdin().read_to_end(&mut bytes).map_err(|e| InputError::Io(e.to_string()))?,
    };
    Ok(bytes)
}

fn command(cmd: Cmd) -> Command {
    use xmod_hopf_cli::xmod_hopf::Side;
    match cmd {
        Cmd::Verify { name } => Command::Verify { name },
        Cmd::Integrals { name, side } => Command::Integrals {
            name,
            side: side.map(|s| match s {
                SideArg::Left => Side::Left,
                SideArg::Right => Side::Right,
            }),
        },
        Cmd::Grouplikes { name } => Command::Grouplikes { name },
        Cmd::Dual { name } => Command::Dual { name },
        Cmd::StructureTheorem { name, module } => Command::StructureTheorem { name, module },
        Cmd::Hom {
            algebra,
            source,
            target,
            degree,
        } => Command::Hom {
            algebra,
            source,
            target,
            degree,
        },
        Cmd::Report { name } => Command::Report { name },
        Cmd::Export { name } => Command::Export { name },
    }
}

fn fail(err: &InputError, json: bool) -> ExitCode {
    if json {
        let body = serde_json::json!({ "error": err.kind(), "message": err.to_string() });
        println!("{}", serde_json::to_string_pretty(&body).unwrap_or_default());
    } else {
        eprintln!("error: {err}");
    }
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let json = cli.json;
    let input = match read_input(cli.doc.as_ref()) {
        Ok(b) => b,
        Err(e) => return fail(&e, json),
    };
    let cmd = command(cli.command);
    // a panic is a bug, but it must still surface as an input error
    std::panic::set_hook(Box::new(|_| {}));
    let outcome = match std::panic::catch_unwind(|| run(&cmd, &input)) {
        Ok(Ok(o)) => o,
        Ok(Err(e)) => return fail(&e, json),
        Err(_) => return fail(&InputError::invalid("document", "internal error while processing the document"), json),
    };
    let text = match &outcome {
        Outcome::Report(r) if json => r.to_json().into_bytes(),
        Outcome::Report(r) => r.to_text().into_bytes(),
        Outcome::Document(d) => d.clone(),
    };
    let mut out = std::io::stdout().lock();
    if out.write_all(&text).and_then(|_| out.flush()).is_err() {
        return ExitCode::from(2);
    }
    ExitCode::from(outcome.exit_code() as u8)
}

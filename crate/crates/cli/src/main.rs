use std::process::ExitCode;

use poisson_forge::{emit_report, run_command, CliError};

fn main() -> ExitCode {
    let code = match run_command(std::env::args_os()) {
        Ok((cli, doc)) => match emit_report(&doc, cli.format, cli.output.as_deref()) {
            Ok(()) => doc.exit_code(),
            Err(e) => {
                eprintln!("poisson-forge: {}", CliError::from(e));
                1
            }
        },
        Err(e) => {
            match &e {
                CliError::Usage(inner) => {
                    let _ = inner.print();
                }
                other => eprintln!("poisson-forge: {other}"),
            }
            e.exit_code()
        }
    };
    ExitCode::from(code as u8)
}

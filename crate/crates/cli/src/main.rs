use clap::Parser;

use qwduet::{build_config, export_records, run_experiment, Cli};

fn main() {
    let cli = Cli::parse();
    let (kind, args) = cli.command.split();
    let result = build_config(kind, args)
        .and_then(run_experiment)
        .and_then(|outcome| {
            let paths = export_records(&outcome, outcome.config.format, &outcome.config.out)?;
            for warning in &outcome.warnings {
                eprintln!("warning: {warning}");
            }
            Ok(paths)
        });
    match result {
        Ok(paths) => {
            for path in paths {
                println!("wrote {}", path.display());
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(1);
        }
    }
}

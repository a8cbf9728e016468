mod args;
mod commands;
mod fixtures;
mod report;

use std::io::Write;

fn main() {
    let inv = report::invoke(std::env::args_os());
    let is_error = match &inv.report {
        Some(r) => r.error.is_some(),
        None => inv.exit_code != 0,
    };
    // a closed pipe (for example `| head`) is not worth a panic
    let text = inv.render();
    let _ = if is_error && !inv.structured {
        writeln!(std::io::stderr(), "{text}")
    } else {
        writeln!(std::io::stdout(), "{text}")
    };
    std::process::exit(inv.exit_code);
}

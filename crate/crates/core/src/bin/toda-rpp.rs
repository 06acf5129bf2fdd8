use std::io;
use std::process::ExitCode;

use toda_rpp::cli::{main_with, MAX_RESAMPLE_VAR};

fn main() -> ExitCode {
    let max_resample = std::env::var(MAX_RESAMPLE_VAR).ok();
    let code = main_with(
        std::env::args_os(),
        max_resample.as_deref(),
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
    );
    ExitCode::from(code as u8)
}

//! Run a selection of the registered checks from library code.

use spgroups::verify;

fn main() {
    let filter = std::env::args().nth(1).unwrap_or_else(|| "lemma-4.1-*".to_string());
    match verify::run(&filter, 0, false) {
        Ok(report) => print!("{}", verify::to_markdown(&report)),
        Err(e) => eprintln!("{e}"),
    }
}

use std::process;

fn main() {
    process::exit(spinor_roots::cli::run());
}

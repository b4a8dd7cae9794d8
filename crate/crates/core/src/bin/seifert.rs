use std::io::Write;

fn main() {
    let out = seifert::cli::run(std::env::args_os(), std::env::var(seifert::cli::CATALOGUE_ENV).ok());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    std::io::stdout().flush().ok();
    std::process::exit(out.code);
}

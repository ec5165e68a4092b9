fn main() {
    let mut out = std::io::stdout().lock();
    let mut err = std::io::stderr().lock();
    std::process::exit(gparking::cli::run(std::env::args(), &mut out, &mut err));
}

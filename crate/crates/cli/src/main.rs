fn main() {
    let (out, code) = tvk_cli::main_with(std::env::args().skip(1));
    if code == 2 {
        eprint!("{out}");
    } else {
        print!("{out}");
    }
    std::process::exit(code);
}

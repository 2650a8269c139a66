use std::io::Write;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let (code, text) = ringcodes::cli::execute_command(&args);
    if code == 2 {
        eprint!("{text}");
    } else {
        let mut stdout = std::io::stdout().lock();
        let _ = stdout.write_all(text.as_bytes());
    }
    std::process::exit(code);
}

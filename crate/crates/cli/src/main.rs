use std::io::Write;

fn main() {
    let out = reis_cli::run(std::env::args_os());
    // written in one piece once the command has finished
    std::io::stdout().write_all(out.stdout.as_bytes()).ok();
    std::io::stderr().write_all(out.stderr.as_bytes()).ok();
    std::process::exit(out.code);
}

use std::io::Write;

fn main() {
    env_logger::init();
    let out = gridlink::run(std::env::args_os());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    let _ = std::io::stdout().flush();
    std::process::exit(out.code);
}

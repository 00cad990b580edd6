//! Drives the command line in-process, as a script would.

fn main() {
    let doc = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/paper-example.json");
    let runs: [&[&str]; 4] = [
        &["verify", doc],
        &["classify", doc, "--ideal", "0,2", "--s", "2", "--mode", "lenient"],
        &["theorems", doc, "--only", "T5", "--format", "json"],
        &["quotient", "fixture:z6", "--ideal", "0,3"],
    ];
    for args in runs {
        println!("$ hyperideal {}", args.join(" "));
        let code = hyperideal::cli::run(std::iter::once("hyperideal").chain(args.iter().copied()));
        println!("[exit {code}]\n");
    }
}

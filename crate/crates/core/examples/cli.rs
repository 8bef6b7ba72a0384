use orthoinv::cli::run;

fn main() {
    for args in [
        vec!["inv", "gen", "Q:1", "--n", "2"],
        vec!["inv", "check", "F:1,2|3,4"],
        vec!["inv", "relations", "--n", "3"],
        vec!["inv", "jacobian", "--n", "4", "--m", "4", "--json"],
    ] {
        println!("$ {}", args.join(" "));
        let code = run(args, &mut std::io::empty(), &mut std::io::stdout(), &mut std::io::stderr());
        println!("exit {code}\n");
    }
}

use freerack::{files::parse_elements, run, CliError, Output};
use freerack_core::{Alphabet, WordMode};

fn call(args: &[&str]) -> Output {
    run(std::iter::once("freerack").chain(args.iter().copied()))
}

fn stdout(args: &[&str]) -> String {
    let out = call(args);
    assert_eq!(out.code, 0, "{out:?}");
    out.stdout
}

#[test]
fn documented_examples() {
    assert_eq!(stdout(&["eval", "a |> b"]), "(a; b)\n");
    assert_eq!(stdout(&["eval", "a^2 |> b"]), "(a; a^2 b)\n");
    assert_eq!(stdout(&["eval", "a |>- a"]), "(a; a^-1)\n");
    assert_eq!(stdout(&["eq", "(a |> b)^3", "a^3 |> b"]), "equal\n");
    assert_eq!(stdout(&["eq", "a |> a", "a"]), "distinct\n");
    assert_eq!(stdout(&["eq", "a |> b |>- b", "a"]), "equal\n");
    assert_eq!(
        stdout(&["member", "(a; a^5)", "--gens", "(a; e)"]),
        "member: a^5\n"
    );
    assert_eq!(
        stdout(&["closure", "--gens", "(a; e)", "--bound", "3"]),
        "(a; a^-3)\n(a; a^-2)\n(a; a^-1)\n(a; e)\n(a; a)\n(a; a^2)\n(a; a^3)\n"
    );
    assert_eq!(
        stdout(&["express", "(a; a^2 b)", "--basis", "(a; e),(b; e)"]),
        "a^2 |> b\n"
    );
    assert_eq!(stdout(&["canon", "(a; a^3 b)"]), "n=3, class=(a; b)\n");
}

#[test]
fn exit_codes() {
    assert_eq!(call(&["eval", "a |>"]).code, 2);
    assert_eq!(call(&["eval", "a |> q"]).code, 3);
    assert_eq!(
        call(&[
            "member",
            "(a; c)",
            "--gens",
            "(a; e),(b; e)",
            "--bound",
            "3"
        ])
        .code,
        4
    );
    assert_eq!(call(&["--mode", "involutory", "eval", "(a; b)"]).code, 0);
    assert_eq!(call(&["nonsense"]).code, 2);
    assert_eq!(call(&["--help"]).code, 0);
}

#[test]
fn element_files() {
    let x = Alphabet::new(["a", "b"]).unwrap();
    let text = "# basis\n\n(a; e)\n  (b; a^-1)  \n";
    let parsed = parse_elements(&x, WordMode::Free, text).unwrap();
    assert_eq!(parsed.len(), 2);
    assert_eq!(parsed[1].display(&x).to_string(), "(b; a^-1)");
    match parse_elements(&x, WordMode::Free, "(a; e)\n(c; e)\n") {
        Err(CliError::Line { line: 2, .. }) => {}
        other => panic!("{other:?}"),
    }
}

// Driving the `lhcone` command line in-process.

use std::error::Error;

use lecture_hall::cli::run;

fn call(args: &[&str]) -> Result<(i32, String), Box<dyn Error>> {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("lhcone").chain(args.iter().copied()), &mut out, &mut err);
    Ok((code, String::from_utf8(out)?))
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let (code, json) = call(&["basis", "--family", "modk", "--k", "2", "--n", "3", "--format", "json"])?;
    println!("exit {code}: {json}");

    let (code, text) = call(&["verify", "--seq", "2,3,4,5", "--bound", "10"])?;
    println!("exit {code}:\n{text}");
    assert_eq!(code, 0);

    let (code, text) = call(&["ehrhart", "--polytope", "P", "--seq", "1,2,3", "--t", "2"])?;
    assert_eq!((code, text.as_str()), (0, "27\n"));

    let (_, csv) = call(&["sweep", "--family", "dim3", "--s", "1..2", "--k", "2", "--l", "2..3", "--format", "csv"])?;
    print!("{csv}");
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}

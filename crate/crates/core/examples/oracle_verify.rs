// Brute-force basis, generation and minimality checks for any sequence.

use std::error::Error;

use lecture_hall::oracle::{fundamental_box_points, generates_up_to, hilbert_basis_oracle, Budget};
use lecture_hall::Sequence;
use num_bigint::BigInt;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let s: Sequence = "3,5".parse()?;
    let boxed = fundamental_box_points(&s);
    println!("closed box of {s}: {} points", boxed.len());

    let basis = hilbert_basis_oracle(&s, &Budget::default())?;
    for p in basis.elements() {
        println!("  {p}");
    }

    let s: Sequence = "2,5,7".parse()?;
    let basis = hilbert_basis_oracle(&s, &Budget::default())?;
    let bound = s.last() * BigInt::from(2);
    let report = generates_up_to(&s, basis.elements(), &bound);
    println!("{report}");
    assert!(report.passed);

    for p in basis.elements() {
        let rest: Vec<_> = basis.elements().iter().filter(|q| *q != p).cloned().collect();
        let check = generates_up_to(&s, &rest, p.last());
        assert_eq!(check.witnesses.first(), Some(p));
    }
    println!("every element of {s} is needed");

    let tight = Budget::new(10);
    match hilbert_basis_oracle(&"9,8,7".parse()?, &tight) {
        Err(e) => println!("refused: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}

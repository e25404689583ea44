// Hilbert bases of 1 mod k cones and the cardinality formula.

use std::error::Error;

use lecture_hall::closed_form::{basis_modk, Family};
use lecture_hall::ehrhart::cardinality_formula;
use num_bigint::BigInt;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let basis = basis_modk(&BigInt::from(2), 4)?;
    println!("sequence {}", basis.sequence());
    for p in basis.elements() {
        println!("  {p}");
    }

    for k in 1..=3 {
        for n in 2..=5 {
            let family = Family::ModK { k: k.into(), n };
            let (formula, _) = cardinality_formula(&family)?;
            let size = family.basis()?.len();
            println!("{family}: {size} elements, formula {formula}");
            assert_eq!(formula, BigInt::from(size));
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}

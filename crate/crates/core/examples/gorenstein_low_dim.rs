// u-generated sequences in dimensions 2, 3 and 4.

use std::error::Error;

use lecture_hall::closed_form::{literal_list, reducible_in_literal_list, Family};
use lecture_hall::ehrhart::cardinality_formula;
use lecture_hall::{hilbert_basis_oracle, Budget};

fn show(family: &Family) -> Result<(), Box<dyn Error>> {
    let basis = family.basis()?;
    let oracle = hilbert_basis_oracle(basis.sequence(), &Budget::default())?;
    let (formula, flag) = cardinality_formula(family)?;
    println!(
        "{family} -> {}: {} elements (listed {}, formula {formula} {flag}), oracle agrees: {}",
        basis.sequence(),
        basis.len(),
        literal_list(family)?.len(),
        basis.same_elements(&oracle)
    );
    for p in reducible_in_literal_list(family)? {
        println!("  pruned reducible {p}");
    }
    assert!(basis.same_elements(&oracle));
    Ok(())
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    show(&Family::Dim2 { s: 3.into(), k: 2.into() })?;
    show(&Family::Dim2 { s: 1.into(), k: 3.into() })?;
    show(&Family::Dim3 { s: 2.into(), k: 2.into(), ell: 2.into() })?;
    show(&Family::Dim3 { s: 3.into(), k: 1.into(), ell: 2.into() })?;
    show(&Family::dim4(1, [2, 3, 2])?)?;
    show(&Family::dim4(1, [4, 2, 2])?)?;
    show(&Family::dim4(2, [1, 3, 2])?)?;
    show(&Family::dim4(3, [1, 3, 2])?)?;
    show(&Family::dim4(2, [2, 2, 2])?)?;
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}

// l-sequence cones: the basis is a union of strata over consecutive terms.

use std::error::Error;

use lecture_hall::closed_form::basis_lseq;
use lecture_hall::{hilbert_basis_oracle, Budget, Sequence};
use num_bigint::BigInt;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let basis = basis_lseq(&BigInt::from(3), 4)?;
    println!("sequence {} has {} basis elements", basis.sequence(), basis.len());
    for p in basis.elements() {
        println!("  {p}");
    }

    let oracle = hilbert_basis_oracle(basis.sequence(), &Budget::default())?;
    assert!(basis.same_elements(&oracle));
    println!("oracle agrees");

    // terms grow exponentially; the closed form needs no enumeration budget
    let long = basis_lseq(&BigInt::from(4), 6)?;
    println!("l = 4, n = 6: box volume {}, {} elements", long.sequence().box_volume(), long.len());
    let huge = Sequence::l_sequence(5, 30)?;
    println!("l = 5, n = 30: last entry {}", huge.last());
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}

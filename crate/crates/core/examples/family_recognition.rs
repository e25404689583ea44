// Which closed forms apply to a sequence, and the basis of arbitrary input.

use std::error::Error;

use lecture_hall::closed_form::recognize;
use lecture_hall::{hilbert_basis, Budget, Sequence};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for text in ["1,2,3,4", "1,3,5,7", "1,3,8", "2,3,4,5", "6,9,12", "4,7,9"] {
        let s: Sequence = text.parse()?;
        let names: Vec<String> = recognize(&s.normalize()).iter().map(ToString::to_string).collect();
        let (family, basis) = hilbert_basis(&s, &Budget::default())?;
        println!(
            "{s}: families [{}], basis by {} via {}, {} elements",
            names.join(", "),
            basis.method(),
            family.map_or("none".to_string(), |f| f.name().to_string()),
            basis.len()
        );
    }

    // every family that matches gives the same basis
    let s: Sequence = "1,2,3,4".parse()?;
    let bases: Vec<_> = recognize(&s).iter().map(|f| f.basis()).collect::<Result<_, _>>()?;
    assert!(bases.windows(2).all(|w| w[0].same_elements(&w[1])));
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}

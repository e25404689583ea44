// Lattice points in dilates of P and R, and the closed formula for 1 mod k.

use std::error::Error;

use lecture_hall::ehrhart::{count_p, count_r, ehrhart_modk, pick_counts};
use lecture_hall::Sequence;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let s = Sequence::modk(2, 3)?;
    for t in 0..=4 {
        let counted = count_p(&s, t);
        let formula = ehrhart_modk(2, 3, t)?;
        println!("t = {t}: |tP| = {counted}, formula {formula}, |tR| = {}", count_r(&s, t));
        assert_eq!(counted, formula);
    }

    let tri: Sequence = "3,5".parse()?;
    let (interior, boundary) = pick_counts(&tri)?;
    println!("P for {tri}: {interior} interior, {boundary} boundary points");

    let doubled = tri.scale(&2.into())?;
    assert_eq!(count_p(&doubled, 1), count_p(&tri, 2));
    println!("P for {doubled} has as many points as 2P for {tri}");
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}

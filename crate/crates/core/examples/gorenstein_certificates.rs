// Gorenstein points from the u-recurrence, the gcd recurrence and geometry.

use std::error::Error;

use lecture_hall::gorenstein::{certificate, detect_u_generated, geometric_certificate, verify_certificate};
use lecture_hall::Sequence;
use num_bigint::BigInt;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for text in ["1,2,3,4", "2,3,4,5", "3,5", "1,2,4", "2,4,6", "3,4", "1,3,4"] {
        let s: Sequence = text.parse()?;
        let bound = s.last() * BigInt::from(3);
        let u = detect_u_generated(&s).map_or("none".to_string(), |u| u.to_string());
        let (geometric, _) = geometric_certificate(&s, &bound)?;
        match certificate(&s) {
            Some(cert) => {
                let (cert, report) = verify_certificate(&s, cert, &bound)?;
                println!("{s}: u {u}, c = {} by {}, shift check {}", cert.c, cert.method, report.passed);
                assert_eq!(geometric.map(|g| g.c), Some(cert.c));
            }
            None => {
                println!("{s}: u {u}, not Gorenstein");
                assert!(geometric.is_none());
            }
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}

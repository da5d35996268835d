//! Weighted right and left core-EP inverses.

use qginv::oracle::{compose_wcep_left, compose_wcep_right};
use qginv::{wcep_left, wcep_right, QMatrix, Settings, WeightedPair};

pub fn run_example() -> qginv::Result<()> {
    let cfg = Settings::default();
    let a = QMatrix::parse_rows(&[vec!["1", "k", "0"], vec!["0", "0", "j"]])?;
    let w = QMatrix::parse_rows(&[vec!["0", "1"], vec!["i", "0"], vec!["0", "1"]])?;
    let pair = WeightedPair::new(a, w)?;

    let right = wcep_right(&pair, &cfg)?;
    let left = wcep_left(&pair, &cfg)?;
    println!("weighted right core-EP:\n{right}");
    println!("weighted left core-EP:\n{left}");
    assert_eq!(right, compose_wcep_right(&pair)?);
    assert_eq!(left, compose_wcep_left(&pair)?);
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}

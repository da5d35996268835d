//! Weighted Drazin inverse of a rectangular pair, by every available route.

use qginv::oracle::wdrazin_oracle;
use qginv::{wdrazin, wdrazin_u, wdrazin_v, QMatrix, Settings, WeightedPair};

pub fn run_example() -> qginv::Result<()> {
    let cfg = Settings::default();
    let a = QMatrix::parse_rows(&[vec!["1", "0"], vec!["0", "i"], vec!["0", "0"]])?;
    let w = QMatrix::parse_rows(&[vec!["1", "0", "0"], vec!["0", "j", "1"]])?;
    let pair = WeightedPair::new(a, w)?;
    println!(
        "Ind(WA) = {}, Ind(AW) = {}, k = {}",
        pair.index_u(),
        pair.index_v(),
        pair.k()
    );

    let x = wdrazin(&pair, &cfg)?;
    println!("A_dW:\n{x}");
    assert_eq!(x, wdrazin_u(&pair, &cfg)?);
    assert_eq!(x, wdrazin_v(&pair, &cfg)?);
    assert_eq!(x, wdrazin_oracle(&pair)?);
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}

//! WDMP, WMPD and WCMP inverses computed through each determinantal variant.

use qginv::oracle::{compose_wcmp, compose_wdmp, compose_wmpd};
use qginv::{wcmp, wdmp, wmpd, Error, QMatrix, Settings, Variant, WeightedPair};

pub fn run_example() -> qginv::Result<()> {
    let cfg = Settings::default();
    // AW and WA are both Hermitian here
    let a = QMatrix::parse_rows(&[vec!["1", "i"], vec!["-i", "1"], vec!["0", "0"]])?;
    let w = QMatrix::parse_rows(&[vec!["1", "0", "0"], vec!["0", "1", "0"]])?;
    let pair = WeightedPair::new(a, w)?;

    let expected = compose_wdmp(&pair)?;
    for v in [Variant::GeneralU, Variant::HermitianWa] {
        assert_eq!(wdmp(&pair, v, &cfg)?, expected);
    }
    println!("WDMP:\n{expected}");

    let expected = compose_wmpd(&pair)?;
    for v in [Variant::GeneralV, Variant::HermitianAw] {
        assert_eq!(wmpd(&pair, v, &cfg)?, expected);
    }
    println!("WMPD:\n{expected}");

    let expected = compose_wcmp(&pair)?;
    for v in [
        Variant::GeneralU,
        Variant::GeneralV,
        Variant::HermitianWa,
        Variant::HermitianAw,
    ] {
        assert_eq!(wcmp(&pair, v, &cfg)?, expected);
    }
    println!("WCMP:\n{expected}");

    if let Err(e @ Error::UnsupportedVariant { .. }) = wdmp(&pair, Variant::HermitianAw, &cfg) {
        println!("{e}");
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}

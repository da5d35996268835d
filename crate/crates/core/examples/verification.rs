//! Checking candidate inverses against their defining equations.

use qginv::oracle::{verify_system, System};
use qginv::{mp_inverse, wdrazin, QMatrix, Settings, WeightedPair};

pub fn run_example() -> qginv::Result<()> {
    let cfg = Settings::default();
    let a = QMatrix::parse_rows(&[vec!["1", "j"], vec!["i", "k"], vec!["0", "1"]])?;

    let x = mp_inverse(&a, &cfg)?;
    let verdict = verify_system(System::Penrose, &a, None, &x)?;
    print!("{verdict}");
    assert!(verdict.all_hold());

    // A* is not an inverse of A
    let bad = verify_system(System::Penrose, &a, None, &a.conj_transpose())?;
    print!("{bad}");
    assert!(!bad.all_hold());

    let w = QMatrix::parse_rows(&[vec!["1", "0", "i"], vec!["0", "j", "0"]])?;
    let pair = WeightedPair::new(a.clone(), w.clone())?;
    let x = wdrazin(&pair, &cfg)?;
    let verdict = verify_system("wdrazin".parse()?, &a, Some(&w), &x)?;
    print!("{verdict}");
    assert!(verdict.all_hold());
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}

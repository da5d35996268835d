//! Complex inputs stay complex, and the embedding halves ranks back.

use qginv::oracle::{mp_oracle, to_complex};
use qginv::{mp_inverse, QMatrix, Settings};

pub fn run_example() -> qginv::Result<()> {
    let a = QMatrix::parse_rows(&[vec!["1+i", "2"], vec!["i", "1/2-i"], vec!["1", "0"]])?;
    assert!(a.is_complex());

    let x = mp_inverse(&a, &Settings::default())?;
    println!("A+:\n{x}");
    assert!(x.is_complex());
    assert_eq!(x, mp_oracle(&a)?);

    let chi = a.complex_embedding();
    println!("rank A = {}, rank of embedding = {}", a.rank(), chi.rank());
    assert_eq!(chi.rank(), 2 * a.rank());
    assert!(to_complex(&a).is_some());
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}

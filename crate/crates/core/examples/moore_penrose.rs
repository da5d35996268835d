//! Moore-Penrose inverse of a rank-deficient quaternion matrix, along both routes.

use qginv::inverses::{mp_inverse_via, preferred_route};
use qginv::{mp_inverse, projector_p, projector_q, MpRoute, QMatrix, Settings};

pub fn run_example() -> qginv::Result<()> {
    let cfg = Settings::default();
    let a = QMatrix::parse_rows(&[
        vec!["1", "i", "0"],
        vec!["j", "k", "0"],
        vec!["1+j", "i+k", "0"],
    ])?;
    println!("A (rank {}):\n{a}", a.rank());

    let x = mp_inverse(&a, &cfg)?;
    println!("A+ via {:?}:\n{x}", preferred_route(&a));

    // both routes agree
    let col = mp_inverse_via(&a, MpRoute::Column, &cfg)?;
    let row = mp_inverse_via(&a, MpRoute::Row, &cfg)?;
    assert_eq!(col, row);

    assert_eq!(a.mul(&x)?.mul(&a)?, a);
    assert_eq!(x.mul(&a)?.mul(&x)?, x);
    assert_eq!(projector_q(&a, &cfg)?, x.mul(&a)?);
    assert_eq!(projector_p(&a, &cfg)?, a.mul(&x)?);
    println!("Q = A+A:\n{}", x.mul(&a)?);
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}

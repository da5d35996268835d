//! Right and left core-EP inverses, and the core inverse of an index-one matrix.

use qginv::oracle::{core_ep_left_oracle, core_ep_right_oracle};
use qginv::{core_ep_left, core_ep_right, core_right, Error, QMatrix, Settings};

pub fn run_example() -> qginv::Result<()> {
    let cfg = Settings::default();
    let a = QMatrix::parse_rows(&[
        vec!["1", "j", "0"],
        vec!["0", "0", "1"],
        vec!["0", "0", "0"],
    ])?;
    println!("Ind(A) = {}", a.index_of()?);

    let right = core_ep_right(&a, &cfg)?;
    let left = core_ep_left(&a, &cfg)?;
    println!("right core-EP:\n{right}");
    println!("left core-EP:\n{left}");
    assert_eq!(right, core_ep_right_oracle(&a)?);
    assert_eq!(left, core_ep_left_oracle(&a)?);

    // the core inverse needs index at most one
    match core_right(&a, &cfg) {
        Err(Error::IndexMismatch { expected, found }) => {
            println!("core inverse refused: index {found} > {expected}")
        }
        other => panic!("unexpected {other:?}"),
    }
    let g = QMatrix::parse_rows(&[vec!["i", "1"], vec!["0", "0"]])?;
    println!(
        "core inverse of an index-one matrix:\n{}",
        core_right(&g, &cfg)?
    );
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}

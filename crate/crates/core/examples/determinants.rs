//! Row and column determinants of a quaternion matrix, and the exact
//! determinant of a Hermitian one.

use qginv::{cdet, hdet, minor_sum, rdet, CycleDecomposition, QMatrix, Settings};

pub fn run_example() -> qginv::Result<()> {
    let cfg = Settings::default();
    let a = QMatrix::parse_rows(&[vec!["i", "j"], vec!["k", "j"]])?;

    // noncommutative: the orderings differ
    for i in 1..=2 {
        println!("rdet_{i} = {}", rdet(i, &a, &cfg)?);
    }
    for j in 1..=2 {
        println!("cdet_{j} = {}", cdet(j, &a, &cfg)?);
    }

    // 0-based images: 1 -> 2 -> 3 -> 1, 4 <-> 5
    let perm = [1, 2, 0, 4, 3];
    let left = CycleDecomposition::left_ordered(&perm, 4);
    let right = CycleDecomposition::right_ordered(&perm, 4);
    println!(
        "cycles for rdet_4: {:?}, sign {}",
        left.cycles(),
        left.sign()
    );
    println!("cycles for cdet_4: {:?}", right.cycles());

    let h = QMatrix::parse_rows(&[
        vec!["2", "i+j", "k"],
        vec!["-i-j", "3", "1"],
        vec!["-k", "1", "4"],
    ])?;
    let d = hdet(&h, &cfg)?;
    println!("det H = {d}");
    for i in 1..=3 {
        assert_eq!(rdet(i, &h, &cfg)?, d.clone().into());
        assert_eq!(cdet(i, &h, &cfg)?, d.clone().into());
    }
    for r in 1..=3 {
        println!(
            "sum of principal {r}x{r} minors = {}",
            minor_sum(&h, r, &cfg)?
        );
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}

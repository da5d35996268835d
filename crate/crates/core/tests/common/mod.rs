#![allow(dead_code)]

use std::path::PathBuf;

use num::{BigInt, Zero};
use qginv::format::parse_text;
use qginv::oracle::mp_oracle;
use qginv::{QMatrix, Quaternion, Rational, WeightedPair};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Numerator in [-lim, lim], denominator in [1, lim].
pub fn rand_rat(rng: &mut impl Rng, lim: i64) -> Rational {
    Rational::new(
        BigInt::from(rng.gen_range(-lim..=lim)),
        BigInt::from(rng.gen_range(1..=lim)),
    )
}

pub fn rand_q(rng: &mut impl Rng) -> Quaternion {
    Quaternion::new(
        rand_rat(rng, 3),
        rand_rat(rng, 3),
        rand_rat(rng, 3),
        rand_rat(rng, 3),
    )
}

/// Small integer entries with frequent zeros, to keep exact arithmetic cheap.
pub fn rand_small_q(rng: &mut impl Rng) -> Quaternion {
    let mut c = || {
        if rng.gen_bool(0.45) {
            0
        } else {
            rng.gen_range(-2..=2)
        }
    };
    Quaternion::from_ints(c(), c(), c(), c())
}

pub fn rand_complex_q(rng: &mut impl Rng) -> Quaternion {
    Quaternion::new(
        rand_rat(rng, 3),
        rand_rat(rng, 3),
        Rational::zero(),
        Rational::zero(),
    )
}

pub fn fill(m: usize, n: usize, mut f: impl FnMut() -> Quaternion) -> QMatrix {
    QMatrix::from_vec(m, n, (0..m * n).map(|_| f()).collect()).unwrap()
}

pub fn rand_matrix(rng: &mut impl Rng, m: usize, n: usize) -> QMatrix {
    fill(m, n, || rand_q(rng))
}

pub fn rand_small_matrix(rng: &mut impl Rng, m: usize, n: usize) -> QMatrix {
    fill(m, n, || rand_small_q(rng))
}

/// Product of an m×r and an r×n random factor (rank at most r).
pub fn rand_rank_matrix(rng: &mut impl Rng, m: usize, n: usize, r: usize) -> QMatrix {
    let f = rand_small_matrix(rng, m, r);
    let g = rand_small_matrix(rng, r, n);
    f.mul(&g).unwrap()
}

/// Dense, rank-deficient or sparse, chosen at random.
pub fn rand_mixed(rng: &mut impl Rng, m: usize, n: usize) -> QMatrix {
    match rng.gen_range(0..4) {
        0 => rand_matrix(rng, m, n),
        1 => {
            let r = rng.gen_range(0..=m.min(n));
            rand_rank_matrix(rng, m, n, r)
        }
        _ => rand_small_matrix(rng, m, n),
    }
}

pub fn rand_hermitian(rng: &mut impl Rng, n: usize) -> QMatrix {
    let b = rand_small_matrix(rng, n, n);
    b.add(&b.conj_transpose()).unwrap()
}

pub fn rand_invertible(rng: &mut impl Rng, n: usize) -> QMatrix {
    loop {
        let m = rand_small_matrix(rng, n, n);
        if m.rank() == n {
            return m;
        }
    }
}

pub fn inverse(m: &QMatrix) -> QMatrix {
    mp_oracle(m).unwrap()
}

/// Pair whose products `WA` and `AW` are similar to a matrix with a nilpotent Jordan block of size `nil`.
pub fn index_pair(rng: &mut impl Rng, n: usize, nil: usize) -> WeightedPair {
    assert!(n >= nil && nil >= 1);
    let mut core = QMatrix::zeros(n, n);
    for i in n - nil..n - 1 {
        core[(i, i + 1)] = Quaternion::one();
    }
    for i in 0..n - nil {
        core[(i, i)] = rand_small_q(rng);
    }
    let s = rand_invertible(rng, n);
    let w = rand_invertible(rng, n);
    let a = QMatrix::chain(&[&s, &core, &inverse(&s), &inverse(&w)]).unwrap();
    WeightedPair::new(a, w).unwrap()
}

/// Random pair with m, n ≤ `max`, mixing dense, low-rank and higher-index cases.
pub fn rand_pair(rng: &mut impl Rng, max: usize) -> WeightedPair {
    let m = rng.gen_range(1..=max);
    let n = rng.gen_range(1..=max);
    match rng.gen_range(0..5) {
        0 if m == n && n >= 2 => {
            let nil = rng.gen_range(2..=n);
            index_pair(rng, n, nil)
        }
        1 => {
            let r = rng.gen_range(1..=m.min(n));
            WeightedPair::new(rand_rank_matrix(rng, m, n, r), rand_small_matrix(rng, n, m)).unwrap()
        }
        2 => {
            let r = rng.gen_range(1..=m.min(n));
            WeightedPair::new(rand_small_matrix(rng, m, n), rand_rank_matrix(rng, n, m, r)).unwrap()
        }
        _ => WeightedPair::new(rand_small_matrix(rng, m, n), rand_small_matrix(rng, n, m)).unwrap(),
    }
}

/// `W = A*`: both products Hermitian.
pub fn both_hermitian_pair(rng: &mut impl Rng, m: usize, n: usize) -> WeightedPair {
    let a = rand_mixed(rng, m, n);
    WeightedPair::new(a.clone(), a.conj_transpose()).unwrap()
}

/// `A` of full row rank and `W = A† H`, so `AW = H` is Hermitian.
pub fn aw_hermitian_pair(rng: &mut impl Rng, m: usize, n: usize) -> WeightedPair {
    assert!(m <= n);
    let a = loop {
        let a = rand_small_matrix(rng, m, n);
        if a.rank() == m {
            break a;
        }
    };
    let h = rand_hermitian(rng, m);
    let w = inverse(&a).mul(&h).unwrap();
    WeightedPair::new(a, w).unwrap()
}

/// `A` of full column rank and `W = H A†`, so `WA = H` is Hermitian.
pub fn wa_hermitian_pair(rng: &mut impl Rng, m: usize, n: usize) -> WeightedPair {
    assert!(m >= n);
    let a = loop {
        let a = rand_small_matrix(rng, m, n);
        if a.rank() == n {
            break a;
        }
    };
    let h = rand_hermitian(rng, n);
    let w = h.mul(&inverse(&a)).unwrap();
    WeightedPair::new(a, w).unwrap()
}

pub fn fixture(name: &str) -> QMatrix {
    let path: PathBuf = [
        env!("CARGO_MANIFEST_DIR"),
        "fixtures",
        "worked_example",
        name,
    ]
    .iter()
    .collect();
    parse_text(&std::fs::read_to_string(path).unwrap()).unwrap()
}

pub fn worked_pair() -> WeightedPair {
    WeightedPair::new(fixture("A.txt"), fixture("W.txt")).unwrap()
}

pub fn m(rows: &[&[&str]]) -> QMatrix {
    let v: Vec<Vec<&str>> = rows.iter().map(|r| r.to_vec()).collect();
    QMatrix::parse_rows(&v).unwrap()
}

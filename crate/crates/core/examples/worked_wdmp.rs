//! Step-by-step weighted DMP inverse of the 3x4 worked example, printing
//! every intermediate the trace records.

use qginv::format::parse_text;
use qginv::trace::TraceValue;
use qginv::weighted::wdmp_traced;
use qginv::{Settings, Trace, Variant, WeightedPair};

const A: &str = include_str!("../fixtures/worked_example/A.txt");
const W: &str = include_str!("../fixtures/worked_example/W.txt");
const EXPECTED: &str = include_str!("../fixtures/worked_example/wdmp.txt");

pub fn run_example() -> qginv::Result<()> {
    let pair = WeightedPair::new(parse_text(A)?, parse_text(W)?)?;
    let mut t = Trace::new();
    let x = wdmp_traced(&pair, Variant::GeneralU, &Settings::default(), &mut t)?;

    for step in t.steps() {
        match &step.value {
            TraceValue::Matrix(m) => println!("{} = {}\n{m}", step.name, step.formula),
            TraceValue::Scalar(s) => println!("{} = {} = {s}", step.name, step.formula),
            TraceValue::Count(c) => println!("{} = {c}", step.name),
            TraceValue::Text(s) => println!("{}: {s}", step.name),
        }
    }
    println!("A_d,W,dagger:\n{x}");
    assert_eq!(x, parse_text(EXPECTED)?);
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}

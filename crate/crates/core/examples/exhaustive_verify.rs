//! Exhaustive decoder check against the attribution oracle, printed as the
//! JSON report. Pass a family and parameters, or run the default set.
//!
//!     cargo run --release --example exhaustive_verify -- ins2 0 9 18

use blockedit::decode::decode;
use blockedit::verify::{check_decoder_exhaustive_jobs, default_jobs};
use blockedit::{CodeParams, Family};

fn main() -> blockedit::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let params = if args.len() == 4 {
        let num = |i: usize| args[i].parse::<usize>().expect("numeric argument");
        vec![CodeParams::new(args[0].parse::<Family>()?, num(1), num(2), num(3))?]
    } else {
        vec![
            CodeParams::deletion(1, 3, 6)?,
            CodeParams::deletion(2, 5, 10)?,
            CodeParams::insertion1(3, 9)?,
            CodeParams::mixed1(7, 14)?,
        ]
    };
    for p in params {
        let report = check_decoder_exhaustive_jobs(&p, |y| decode(&p, y), default_jobs())?;
        println!("{}", report.to_json());
    }
    Ok(())
}

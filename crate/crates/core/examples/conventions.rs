//! Attribution conventions for received strings that several edit
//! combinations explain: duplicated boundary bits go to the leftmost
//! blocks, and a swap across a boundary reads as an insertion in the
//! earlier block plus a deletion in the later one.

use blockedit::channel::{apply_pattern, Attribution, ErrorPattern};
use blockedit::{BitString, CodeParams};

fn show(p: &CodeParams, x: &str, patterns: &[&str]) -> blockedit::Result<()> {
    let x: BitString = x.parse()?;
    let attr = Attribution::new(p, &x)?;
    for text in patterns {
        let y = apply_pattern(p, &x, &ErrorPattern::parse(p, text)?)?;
        println!("{p} x={x} [{text}] -> y={y}");
        for v in attr.consistent_vectors(&y)? {
            println!("    consistent: {v}");
        }
        println!("    canonical:  {}", attr.canonical_vector(&y)?);
    }
    Ok(())
}

fn main() -> blockedit::Result<()> {
    show(
        &CodeParams::insertion1(3, 9)?,
        "011 001 011",
        &["1=ins@2:1,2=ins@2:1", "2=ins@0:1,3=ins@0:1"],
    )?;
    show(&CodeParams::mixed1(7, 14)?, "1010011 0001010", &["1=del@7,2=ins@1:1", ""])?;
    Ok(())
}

//! Code-level checks under the deletion channel: validity (every received
//! string determines the per-block counts), block-by-block decodability,
//! and the structural audit that explains a failure.

use blockedit::code::enumerate_codewords;
use blockedit::verify::{audit_necessary_conditions, check_block_decodable, check_code_validity};
use blockedit::{BitString, CodeParams};

fn show(name: &str, code: &[BitString], ell: usize, delta: usize) -> blockedit::Result<()> {
    println!("== {name} ({} words)", code.len());
    let valid = check_code_validity(code, ell, delta)?;
    let bd = check_block_decodable(code, ell, delta)?;
    let audit = audit_necessary_conditions(code, ell, delta, true)?;
    println!("valid: {}, block-decodable: {}", valid.passed, bd.passed);
    if let Some(c) = &valid.counterexample {
        println!(
            "  {} [{}] and {} [{}] both give y = {}",
            c.x,
            c.pattern,
            c.other_x.as_ref().unwrap_or(&c.x),
            c.other_pattern.as_deref().unwrap_or(""),
            c.y
        );
    }
    for f in bd.findings.iter().chain(&audit.findings) {
        println!("  {f}");
    }
    Ok(())
}

fn main() -> blockedit::Result<()> {
    let d136: Vec<BitString> = enumerate_codewords(&CodeParams::deletion(1, 3, 6)?)?.collect();
    show("D_1(3,6)", &d136, 3, 1)?;
    show("boundary run 1|1", &["101101".parse()?], 3, 1)?;
    show("next block repeats the run", &["001011".parse()?], 3, 1)?;
    Ok(())
}

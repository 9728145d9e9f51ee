//! Exact maximum code sizes for tiny parameters, with witness codes and
//! the necessary-condition audit of each witness.

use blockedit::verify::{audit_necessary_conditions, max_code_search};

fn main() -> blockedit::Result<()> {
    for (ell, n, delta, bd) in [(3, 6, 1, true), (3, 6, 1, false), (3, 9, 1, true), (3, 9, 1, false)] {
        let report = max_code_search(ell, n, delta, bd)?;
        print!("{report}");
        let witness = report.witness.as_deref().unwrap_or_default();
        let audit = audit_necessary_conditions(witness, ell, delta, bd)?;
        println!("  audit: {}", if audit.passed { "clean" } else { "violations" });
        for f in &audit.findings {
            println!("    {f}");
        }
        println!();
    }
    Ok(())
}

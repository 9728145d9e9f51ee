//! Seeded stress trials at a length far beyond exhaustive reach, and the
//! decode time as the length doubles.

use blockedit::verify::{scaling_table, stress};
use blockedit::{CodeParams, Family};

fn main() -> blockedit::Result<()> {
    let p = CodeParams::deletion(3, 64, 1 << 16)?;
    let r = stress(&p, 1, 1000)?;
    println!(
        "{p}: {} trials, {} mismatches, {:.3e} bits/s",
        r.trials, r.mismatches, r.throughput
    );
    for q in [
        CodeParams::insertion2(16, 4096)?,
        CodeParams::mixed1(16, 4096)?,
    ] {
        let r = stress(&q, 1, 200)?;
        println!("{q}: {} trials, {} inconsistent", r.trials, r.mismatches);
    }
    let rows = scaling_table(Family::DeletionDetect, 3, 64, &[1 << 16, 1 << 17, 1 << 18], 7, 30)?;
    for row in rows {
        let ratio = row.ratio.map_or("-".to_string(), |r| format!("{r:.2}"));
        println!("n = {:>7}: {:>9.1} us  ratio {ratio}", row.n, row.seconds * 1e6);
    }
    Ok(())
}

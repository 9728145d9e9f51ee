//! Redundancy lower bounds next to the deletion construction's redundancy.

use blockedit::verify::bounds;

fn main() -> blockedit::Result<()> {
    println!(
        "{:>3} {:>4} {:>6} {:>8} {:>9} {:>9} {:>6} {:>8}",
        "d", "ell", "n", "bound1", "thm2", "thm3", "constr", "epsilon"
    );
    for (d, ell, n) in [(1, 3, 6), (1, 3, 9), (1, 8, 64), (2, 5, 20), (2, 16, 256), (3, 64, 4096)] {
        let b = bounds(d, ell, n)?;
        let thm2 = if b.thm2_applies {
            format!("{:.3}", b.bound_thm2)
        } else {
            "-".to_string()
        };
        println!(
            "{d:>3} {ell:>4} {n:>6} {:>8.3} {thm2:>9} {:>9.3} {:>6} {:>8.5}",
            b.bound1, b.bound_thm3, b.construction_redundancy, b.epsilon
        );
    }
    Ok(())
}

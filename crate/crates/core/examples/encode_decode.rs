//! Round trip for each family: encode a message, push it through one
//! pattern, decode the per-block counts. Insertion families report the
//! canonical (leftmost) attribution, which can differ from the pattern
//! that was actually applied.

use blockedit::channel::{apply_pattern, canonical_vector, ErrorPattern};
use blockedit::code::{encode, fixed_positions, message_len};
use blockedit::decode::decode;
use blockedit::verify::random_message;
use blockedit::CodeParams;

fn main() -> blockedit::Result<()> {
    let cases = [
        (CodeParams::deletion(2, 8, 32)?, "1=del@2,1=del@5,3=del@8"),
        (CodeParams::insertion1(6, 24)?, "2=ins@0:1,4=ins@6:0"),
        (CodeParams::insertion2(10, 30)?, "1=ins@9:0,1=ins@9:1,2=ins@4:0"),
        (CodeParams::mixed1(8, 32)?, "1=del@1,2=ins@1:1,4=del@8"),
    ];
    for (p, text) in cases {
        let fixed = fixed_positions(&p);
        let x = encode(&p, &random_message(&p, 42))?;
        let pattern = ErrorPattern::parse(&p, text)?;
        let y = apply_pattern(&p, &x, &pattern)?;
        println!("{p}: k = {}, {} fixed bits", message_len(&p), fixed.len());
        println!("  x = {x}");
        println!("  y = {y}   ({pattern})");
        println!("  pattern counts {}", pattern.true_count_vector());
        println!("  canonical      {}", canonical_vector(&p, &x, &y)?);
        println!("  decoded        {}", decode(&p, &y)?);
    }
    Ok(())
}
